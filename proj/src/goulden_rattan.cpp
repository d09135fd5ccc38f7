#include "kerov/goulden_rattan.hpp"

#include <map>

#include "kerov/errors.hpp"
#include "kerov/symmetric_fn.hpp"

namespace kerov {

CumulantPoly script_r(int i) {
    if (i < 2) throw PreconditionViolated("script_r indices start at 2");
    return CumulantPoly::indeterminate(Family::Free, i, Rational(i - 1));
}

TSeries c_series(int order) {
    TSeries denom = TSeries::constant_one(Family::Free, order);
    for (int i = 2; i <= order; ++i) denom.at(i) -= script_r(i);
    return denom.reciprocal();
}

TSeries p_series(int m, int order) {
    if (m < 1) throw PreconditionViolated("p_series: m >= 1");
    TSeries c = c_series(order);
    TSeries s = c;
    for (int j = 0; j <= m - 2; ++j) s = c * (s.euler_d() + s.scaled(Rational(j)));
    return s.scaled(Rational(-1) / Rational(factorial(m)));
}

TSeries p_lambda(const Partition& lambda, int order) {
    if (lambda.empty()) throw PreconditionViolated("p_lambda: lambda must be nonempty");
    std::map<int, TSeries> factors;
    for (int part : lambda.parts())
        if (!factors.count(part)) factors.emplace(part, p_series(part, order));
    TSeries out = TSeries::constant_one(Family::Free, order);
    for (int part : lambda.parts()) out = out * factors.at(part);
    return out;
}

CumulantPoly gr_genus_part(int k, int g) {
    if (g < 1 || k < 2 * g - 1)
        throw PreconditionViolated("gr_genus_part needs g >= 1 and k >= 2g-1");
    const int n = k + 1 - 2 * g;
    TSeries c = c_series(n);
    TSeries c_inv = c.reciprocal();
    std::map<int, TSeries> p_cache;
    CumulantPoly total(Family::Free);
    for (const Partition& lambda : partitions_of(2 * g, 1)) {
        Rational weight = mhat(lambda, k);
        if (weight == 0) continue;
        TSeries prod = c_inv;
        for (int part : lambda.parts()) {
            auto it = p_cache.find(part);
            if (it == p_cache.end()) it = p_cache.emplace(part, p_series(part, n)).first;
            prod = prod * it->second;
        }
        total += prod[n] * weight;
    }
    return total * Rational(-1, static_cast<unsigned long>(k));
}

}  // namespace kerov
