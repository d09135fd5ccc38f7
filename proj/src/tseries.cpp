#include "kerov/tseries.hpp"

#include <algorithm>

#include "kerov/errors.hpp"

namespace kerov {

TSeries::TSeries(Family f, int order) : family_(f) {
    if (order < 0) throw PreconditionViolated("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, CumulantPoly::zero(f));
}

TSeries::TSeries(Family f, std::vector<CumulantPoly> coeffs) : family_(f), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionViolated("series needs at least the t^0 coefficient");
    for (const auto& c : coeffs_)
        if (c.family() != f) throw FamilyMismatch("series coefficient from the wrong family");
}

TSeries TSeries::constant_one(Family f, int order) {
    TSeries s(f, order);
    s.at(0) = CumulantPoly::one(f);
    return s;
}

TSeries TSeries::scaled(const Rational& c) const {
    TSeries out = *this;
    for (auto& p : out.coeffs_) p *= c;
    return out;
}

TSeries operator+(const TSeries& a, const TSeries& b) {
    if (a.family() != b.family()) throw FamilyMismatch("adding series of different families");
    int n = std::min(a.order(), b.order());
    TSeries out(a.family(), n);
    for (int i = 0; i <= n; ++i) out.at(i) = a[i] + b[i];
    return out;
}

TSeries operator-(const TSeries& a, const TSeries& b) {
    if (a.family() != b.family()) throw FamilyMismatch("subtracting series of different families");
    int n = std::min(a.order(), b.order());
    TSeries out(a.family(), n);
    for (int i = 0; i <= n; ++i) out.at(i) = a[i] - b[i];
    return out;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    if (a.family() != b.family()) throw FamilyMismatch("multiplying series of different families");
    int n = std::min(a.order(), b.order());
    TSeries out(a.family(), n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            out.at(i + j) += a[i] * b[j];
        }
    }
    return out;
}

TSeries TSeries::reciprocal() const {
    if (!coeffs_[0].is_one())
        throw NonUnitConstantTerm("series reciprocal needs constant coefficient 1");
    TSeries out(family_, order());
    out.at(0) = CumulantPoly::one(family_);
    for (int n = 1; n <= order(); ++n) {
        CumulantPoly acc(family_);
        for (int j = 1; j <= n; ++j) acc += coeffs_[static_cast<std::size_t>(j)] * out[n - j];
        out.at(n) = -acc;
    }
    return out;
}

TSeries TSeries::euler_d() const {
    TSeries out = *this;
    for (int n = 0; n <= order(); ++n) out.at(n) *= Rational(n);
    return out;
}

}  // namespace kerov
