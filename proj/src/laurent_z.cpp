#include "kerov/laurent_z.hpp"

#include <algorithm>

#include "kerov/errors.hpp"

namespace kerov {

LaurentZ::LaurentZ(Family f, int top, int depth) : family_(f), top_(top), depth_(depth) {}

CumulantPoly LaurentZ::coefficient(int e) const {
    if (e < -depth_)
        throw InsufficientDepthData("coefficient of z^" + std::to_string(e) +
                                    " lies below the tracked depth " + std::to_string(depth_));
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? CumulantPoly::zero(family_) : it->second;
}

void LaurentZ::set(int e, CumulantPoly c) {
    if (e > top_ || e < -depth_) throw PreconditionViolated("exponent outside [-depth, top]");
    if (c.family() != family_) throw FamilyMismatch("coefficient from the wrong family");
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = std::move(c);
}

void LaurentZ::truncate_depth(int new_depth) {
    if (new_depth >= depth_) return;
    depth_ = new_depth;
    coeffs_.erase(coeffs_.begin(), coeffs_.lower_bound(-new_depth));
}

void LaurentZ::prune_weight_above(int max_weight) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        it->second.keep_terms_with_weight_at_most(max_weight);
        if (it->second.is_zero())
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
    if (a.family() != b.family()) throw FamilyMismatch("multiplying series of different families");
    int top = a.top() + b.top();
    int depth = std::min(a.depth() - b.top(), b.depth() - a.top());
    LaurentZ out(a.family(), top, depth);
    std::map<int, CumulantPoly> acc;
    for (const auto& [ea, ca] : a.coefficients()) {
        for (const auto& [eb, cb] : b.coefficients()) {
            int e = ea + eb;
            if (e < -depth) continue;
            auto [it, inserted] = acc.emplace(e, CumulantPoly::zero(a.family()));
            it->second += ca * cb;
        }
    }
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.set(e, std::move(c));
    return out;
}

LaurentZ z_shift_expand(const std::vector<CumulantPoly>& b_coeffs, long a, int depth) {
    if (depth < 0) throw PreconditionViolated("depth must be >= 0");
    if (static_cast<int>(b_coeffs.size()) < depth + 2)
        throw InsufficientDepthData("need Boolean cumulants up to index " +
                                    std::to_string(depth + 1));
    Family f = b_coeffs.size() > 2 ? b_coeffs[2].family() : Family::Boolean;
    LaurentZ out(f, 1, depth);
    out.set(1, CumulantPoly::one(f));
    if (a != 0) out.set(0, CumulantPoly::constant(f, Rational(-a)));
    for (int e = 1; e <= depth; ++e) {
        CumulantPoly c(f);
        for (int j = 1; j <= e; ++j) {
            int n = e - j;  // (z-a)^{-j} feeds z^{-j-n}
            if (n > 0 && a == 0) continue;
            Rational w(binomial(j + n - 1, n) * pow_int(a, n));
            c -= b_coeffs[static_cast<std::size_t>(j + 1)] * w;
        }
        if (!c.is_zero()) out.set(-e, std::move(c));
    }
    return out;
}

}  // namespace kerov
