#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kerov/cumulants.hpp"
#include "kerov/errors.hpp"
#include "kerov/symmetric_fn.hpp"

namespace kerov {

struct Inconsistent : Error {
    using Error::Error;
};

struct Underdetermined : Error {
    Underdetermined(const std::string& what, std::vector<Partition> directions)
        : Error(what), unconstrained(std::move(directions)) {}
    std::vector<Partition> unconstrained;
};

enum class FitBasis { R, Q };

// script-R_mu = prod_{i>=2} ((i-1) R_i)^{m_i} / m_i!  (parts of mu >= 2).
CumulantPoly script_r_mu(const Partition& mu);

// Q_i = sum over partitions mu of i with parts >= 2 of (l(mu)-1)! script-R_mu.
CumulantPoly q_poly(int i);

// script-Q_mu = prod_{i>=2} Q_i^{m_i} / m_i!, expanded in the R-monomial basis.
CumulantPoly script_q_mu(const Partition& mu);

// Coordinates c_mu with p = sum c_mu script-Q_mu, for p homogeneous of the
// given weight. The basis change is triangular in the length of mu.
std::map<Partition, Rational, MonomialOrder> expand_in_q_basis(const CumulantPoly& p, int weight);

// f_g(mu) and h_g(mu) read off a genus part K_{k,k+1-2g}, for every
// partition mu of k+1-2g with parts >= 2 (zero values included).
std::map<Partition, Rational, MonomialOrder> extract_f_values(int k, int g,
                                                              const CumulantPoly& genus_part);
std::map<Partition, Rational, MonomialOrder> extract_h_values(int k, int g,
                                                              const CumulantPoly& genus_part);

// The unique symmetric function of degree <= degree_bound (in the monomial
// basis) matching all values; throws Inconsistent / Underdetermined.
SymmetricFn fit_symmetric(const std::vector<std::pair<Partition, Rational>>& values,
                          int degree_bound);

struct FitReport {
    int g = 0;
    FitBasis basis = FitBasis::R;
    int degree_bound = 0;
    SymmetricFn fitted;
    int equations_used = 0;
    int residual_equations_checked = 0;
    bool consistent = false;
    // The k-rescaled companion functions are k*binom(k+1,3) times the fitted
    // one at k = |mu| + 2g - 1; recorded as a note, not materialized.
    std::string tilde_note;
};

using SigmaProvider = std::function<KerovPolynomial(int)>;

// Extracts values from K_{k,k+1-2g} across k_range, fits with degree bound
// 4(g-1), and re-checks every extracted value against the fit.
FitReport lassalle_report(int g, const std::vector<int>& k_range, FitBasis basis,
                          const SigmaProvider& provider = {});

// binom(k+1,3) * sum_mu (l+2g-2)! f(mu) script-R_mu   (basis R), or
// binom(k+1,3) * sum_mu (2g-1)^l    h(mu) script-Q_mu (basis Q),
// over partitions mu of k+1-2g with parts >= 2.
CumulantPoly reassemble_genus_part(int k, int g, const SymmetricFn& fn, FitBasis basis);

struct DivisibilityResult {
    int p = 0;
    // (Sigma_p - R_{p+1} + 2 R_2)/p, (Sigma_{p-1} - R_p)/p,
    // (Sigma_{p+1} - R_{p+2} + R_3)/p — all verified to have nonnegative
    // integer coefficients.
    CumulantPoly q1{Family::Free}, q2{Family::Free}, q3{Family::Free};
};

DivisibilityResult divisibility_check(int p, const SigmaProvider& provider = {});

}  // namespace kerov
