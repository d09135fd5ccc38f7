#include "kerov/cumulants.hpp"

#include <vector>

#include "kerov/errors.hpp"
#include "kerov/laurent_z.hpp"
#include "kerov/tseries.hpp"

namespace kerov {

namespace {

// Moments of the free-cumulant stream: G(z) = sum m_n z^{-n-1} with
// m_0 = 1, m_1 = 0 and m_n = sum_{j=2}^{n} R_j [u^{n-j}] Ghat(u)^j where
// Ghat(u) = sum m_n u^n. Solves K(G(z)) = z order by order.
std::vector<CumulantPoly> moment_series(int max_order) {
    std::vector<CumulantPoly> m(static_cast<std::size_t>(max_order) + 1,
                                CumulantPoly::zero(Family::Free));
    m[0] = CumulantPoly::one(Family::Free);
    for (int n = 2; n <= max_order; ++n) {
        // Ghat truncated at order n-2 is already final.
        TSeries ghat(Family::Free,
                     std::vector<CumulantPoly>(m.begin(), m.begin() + (n - 1)));
        TSeries power = ghat;
        CumulantPoly acc(Family::Free);
        for (int j = 2; j <= n; ++j) {
            power = power * ghat;  // Ghat^j
            acc += CumulantPoly::indeterminate(Family::Free, j) * power[n - j];
        }
        m[static_cast<std::size_t>(n)] = acc;
    }
    return m;
}

std::vector<CumulantPoly> boolean_vars(int max_index) {
    std::vector<CumulantPoly> b(static_cast<std::size_t>(max_index) + 1,
                                CumulantPoly::zero(Family::Boolean));
    for (int j = 2; j <= max_index; ++j)
        b[static_cast<std::size_t>(j)] = CumulantPoly::indeterminate(Family::Boolean, j);
    return b;
}

// [z^{-1}] of prod_i H(z - shifts[i]). Exponents that can no longer reach
// z^{-1} and monomials heavier than k+1 are trimmed after every factor;
// both windows widen with any extra depth beyond k+2.
CumulantPoly h_product_residue(const std::vector<long>& shifts, int depth) {
    int k = static_cast<int>(shifts.size());
    if (k < 1) throw PreconditionViolated("need at least one factor");
    if (depth < k + 2) throw PreconditionViolated("depth below k+2 loses the z^{-1} coefficient");
    int slack = depth - (k + 2);
    auto b = boolean_vars(depth + 1);

    LaurentZ acc = z_shift_expand(b, shifts[0], depth);
    acc.truncate_depth(k + slack);
    acc.prune_weight_above(k + 1);
    for (int m = 2; m <= k; ++m) {
        LaurentZ factor = z_shift_expand(b, shifts[static_cast<std::size_t>(m - 1)], depth);
        acc = acc * factor;
        acc.truncate_depth(k + 1 - m + slack);
        acc.prune_weight_above(k + 1);
    }
    return acc.coefficient(-1);
}

}  // namespace

std::map<int, CumulantPoly> free_to_boolean(int max_index) {
    if (max_index < 2) throw PreconditionViolated("max_index >= 2");
    auto moments = moment_series(max_index);
    TSeries ghat(Family::Free, std::move(moments));
    TSeries inv = ghat.reciprocal();  // H(z) = z * inv(1/z)
    std::map<int, CumulantPoly> out;
    for (int j = 2; j <= max_index; ++j) out.emplace(j, -inv[j]);
    return out;
}

std::map<int, CumulantPoly> boolean_to_free(int max_index) {
    if (max_index < 2) throw PreconditionViolated("max_index >= 2");
    auto b_in_r = free_to_boolean(max_index);
    std::map<int, CumulantPoly> out;
    for (int j = 2; j <= max_index; ++j) {
        // B_j = R_j + (terms in R_2..R_{j-2}); solve for R_j and push the
        // remainder through the expressions already found.
        CumulantPoly rest = b_in_r.at(j) - CumulantPoly::indeterminate(Family::Free, j);
        CumulantPoly converted = rest.substitute(out, Family::Boolean);
        out.emplace(j, CumulantPoly::indeterminate(Family::Boolean, j) - converted);
    }
    return out;
}

CumulantPoly shifted_h_residue(int k, int depth) {
    std::vector<long> shifts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) shifts[static_cast<std::size_t>(i)] = i;
    return h_product_residue(shifts, depth);
}

CumulantPoly h_power_residue(int k, int depth) {
    std::vector<long> shifts(static_cast<std::size_t>(k), 0);
    return h_product_residue(shifts, depth);
}

KerovPolynomial sigma(int k) {
    if (k < 1) throw PreconditionViolated("sigma: k >= 1");
    CumulantPoly residue = shifted_h_residue(k, k + 2);
    CumulantPoly in_boolean = residue * Rational(-1, static_cast<unsigned long>(k));
    CumulantPoly in_free = in_boolean.substitute(free_to_boolean(k + 1), Family::Free);
    return KerovPolynomial{k, std::move(in_free)};
}

bool free_cumulant_check(int k) {
    if (k < 1) throw PreconditionViolated("free_cumulant_check: k >= 1");
    CumulantPoly residue = h_power_residue(k, k + 2);
    CumulantPoly in_boolean = residue * Rational(-1, static_cast<unsigned long>(k));
    CumulantPoly in_free = in_boolean.substitute(free_to_boolean(k + 1), Family::Free);
    return in_free == CumulantPoly::indeterminate(Family::Free, k + 1);
}

CumulantPoly genus_part(const KerovPolynomial& kp, int g) {
    if (g < 0 || kp.k + 1 - 2 * g < 0)
        throw PreconditionViolated("genus_part: need k+1-2g >= 0");
    return kp.poly.homogeneous_part(kp.k + 1 - 2 * g);
}

void KerovPolynomial::validate() const {
    if (poly.family() != Family::Free) throw Error("Kerov polynomial must be in free cumulants");
    for (const auto& [key, c] : poly.terms()) {
        if (!is_integer(c) || c < 0)
            throw Error("Kerov coefficient " + kerov::to_string(c) + " is not a nonnegative integer");
        int d = key.weight();
        if (d > k + 1 || (k + 1 - d) % 2 != 0)
            throw Error("monomial of weight " + std::to_string(d) +
                        " violates the genus grading of K_" + std::to_string(k));
    }
    CumulantPoly top = poly.homogeneous_part(k + 1);
    if (!(top == CumulantPoly::indeterminate(Family::Free, k + 1)))
        throw Error("top homogeneous part of K_" + std::to_string(k) + " is not R_" +
                    std::to_string(k + 1));
}

}  // namespace kerov
