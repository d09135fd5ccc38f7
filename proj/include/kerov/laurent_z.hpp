#pragma once

#include <map>
#include <vector>

#include "kerov/cumulant_poly.hpp"

namespace kerov {

// Truncated series in descending powers of z. Coefficients are exact for
// every exponent in [-depth, top]; anything below -depth has been cut.
class LaurentZ {
public:
    LaurentZ(Family f, int top, int depth);

    Family family() const { return family_; }
    int top() const { return top_; }
    int depth() const { return depth_; }

    // Exact coefficient of z^e; exponents below -depth are not available.
    CumulantPoly coefficient(int e) const;
    void set(int e, CumulantPoly c);

    // Forget coefficients below z^{-new_depth}.
    void truncate_depth(int new_depth);

    // Drop monomials of weighted degree > max_weight from every coefficient.
    // Only sound when the caller can bound the weight of everything it will
    // ever read off this series.
    void prune_weight_above(int max_weight);

    const std::map<int, CumulantPoly>& coefficients() const { return coeffs_; }

private:
    Family family_;
    int top_;
    int depth_;
    std::map<int, CumulantPoly> coeffs_;  // nonzero coefficients only
};

// Product with honest exactness bookkeeping: the result is exact down to
// z^{-min(depth_a - top_b, depth_b - top_a)}.
LaurentZ operator*(const LaurentZ& a, const LaurentZ& b);

// Expansion of H(z-a) = (z-a) - sum_{j>=1} B_{j+1} (z-a)^{-j} in powers of z,
// using (z-a)^{-j} = sum_{n>=0} binom(j+n-1, n) a^n z^{-j-n}, truncated at
// z^{-depth}. b_coeffs[j] supplies B_j and must reach index depth+1.
LaurentZ z_shift_expand(const std::vector<CumulantPoly>& b_coeffs, long a, int depth);

}  // namespace kerov
