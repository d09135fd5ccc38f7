#pragma once

#include <map>

#include "kerov/cumulant_poly.hpp"

namespace kerov {

// Kerov character polynomial K_k: Sigma_k = K_k(R_2, R_3, ...).
struct KerovPolynomial {
    int k = 0;
    CumulantPoly poly{Family::Free};

    // Checks the structural facts: nonnegative integer coefficients,
    // homogeneous parts only at degrees k+1-2g, and top part R_{k+1}.
    void validate() const;
};

// R-expressions of the Boolean cumulants B_2..B_max: solve the descending
// moment series G(z) against K(w) = 1/w + sum_{j>=2} R_j w^{j-1} order by
// order, invert H = 1/G, and read B_{j+1} = -[z^{-j}] H.
std::map<int, CumulantPoly> free_to_boolean(int max_index);

// Inverse expressions R_2..R_max in Boolean cumulants; composing the two
// tables is the identity on indeterminates.
std::map<int, CumulantPoly> boolean_to_free(int max_index);

// [z^{-1}] of H(z) H(z-1) ... H(z-k+1) over formal Boolean cumulants,
// each factor expanded to the given depth (k+2 suffices).
CumulantPoly shifted_h_residue(int k, int depth);

// [z^{-1}] of H(z)^k, same conventions.
CumulantPoly h_power_residue(int k, int depth);

// K_k, computed as the shifted product residue divided by -k and converted
// from Boolean to free cumulants.
KerovPolynomial sigma(int k);

// True iff [z^{-1}] H(z)^k / (-k) converted to free cumulants is R_{k+1}.
bool free_cumulant_check(int k);

// Homogeneous part of K_k with weighted degree k+1-2g.
CumulantPoly genus_part(const KerovPolynomial& kp, int g);

}  // namespace kerov
