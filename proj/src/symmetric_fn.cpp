#include "kerov/symmetric_fn.hpp"

#include <algorithm>

#include "kerov/errors.hpp"

namespace kerov {

namespace {

// Distinct exponent values with multiplicities, descending.
std::vector<std::pair<int, int>> exponent_groups(const Partition& nu) {
    std::vector<std::pair<int, int>> groups;
    for (int p : nu.parts()) {
        if (!groups.empty() && groups.back().first == p) {
            ++groups.back().second;
        } else {
            groups.emplace_back(p, 1);
        }
    }
    return groups;
}

struct MonomialEvaluator {
    const std::vector<std::pair<int, int>>& groups;
    const std::vector<int>& x;
    std::vector<char> used;
    Rational total = 0;

    void run(std::size_t g, const Rational& acc) {
        if (g == groups.size()) {
            total += acc;
            return;
        }
        choose(g, groups[g].second, 0, acc);
    }

    // Pick `left` more indices (ascending, unused) for exponent group g.
    void choose(std::size_t g, int left, std::size_t from, const Rational& acc) {
        if (left == 0) {
            run(g + 1, acc);
            return;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(left) <= x.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            Rational next = acc * Rational(pow_int(x[i], groups[g].first));
            choose(g, left - 1, i + 1, next);
            used[i] = 0;
        }
    }
};

}  // namespace

Rational eval_monomial(const Partition& nu, const std::vector<int>& x) {
    if (nu.empty()) return 1;
    if (static_cast<std::size_t>(nu.length()) > x.size()) return 0;
    auto groups = exponent_groups(nu);
    MonomialEvaluator ev{groups, x, std::vector<char>(x.size(), 0)};
    ev.run(0, Rational(1));
    return ev.total;
}

Rational mhat(const Partition& lambda, int k) {
    if (k < 1) throw PreconditionViolated("mhat: k >= 1");
    std::vector<int> x(static_cast<std::size_t>(k - 1));
    for (int i = 1; i < k; ++i) x[static_cast<std::size_t>(i - 1)] = i;
    return eval_monomial(lambda, x);
}

SymmetricFn SymmetricFn::constant(const Rational& c) {
    SymmetricFn f;
    f.set_term(Partition(), c);
    return f;
}

void SymmetricFn::set_term(const Partition& nu, const Rational& coeff) {
    if (coeff == 0) {
        terms_.erase(nu);
    } else {
        terms_[nu] = coeff;
    }
}

int SymmetricFn::degree() const {
    int d = -1;
    for (const auto& [nu, c] : terms_) d = std::max(d, nu.weight());
    return d;
}

Rational SymmetricFn::evaluate(const Partition& mu) const { return evaluate(mu.parts()); }

Rational SymmetricFn::evaluate(const std::vector<int>& x) const {
    Rational v = 0;
    for (const auto& [nu, c] : terms_) v += c * eval_monomial(nu, x);
    return v;
}

}  // namespace kerov
