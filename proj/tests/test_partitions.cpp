#include <doctest.h>

#include <algorithm>
#include <random>

#include "kerov/errors.hpp"
#include "kerov/partition.hpp"
#include "kerov/symmetric_fn.hpp"
#include "support.hpp"

using namespace kerov;
using testutil::part;

namespace {

// Independent counter: partitions of n with parts in [min_part, max_part].
long count_partitions(int n, int max_part, int min_part) {
    if (n == 0) return 1;
    long total = 0;
    for (int p = min_part; p <= std::min(n, max_part); ++p)
        total += count_partitions(n - p, p, min_part);
    return total;
}

std::vector<Rational> differences(const std::vector<Rational>& v) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i + 1] - v[i]);
    return out;
}

}  // namespace

TEST_CASE("partitions_of enumerates in lexicographically decreasing order") {
    auto p42 = partitions_of(4, 2);
    REQUIRE(p42.size() == 2);
    CHECK(p42[0] == part({4}));
    CHECK(p42[1] == part({2, 2}));

    auto p52 = partitions_of(5, 2);
    REQUIRE(p52.size() == 2);
    CHECK(p52[0] == part({5}));
    CHECK(p52[1] == part({3, 2}));

    auto p02 = partitions_of(0, 2);
    REQUIRE(p02.size() == 1);
    CHECK(p02[0].empty());

    auto p61 = partitions_of(6, 1);
    CHECK(std::is_sorted(p61.begin(), p61.end(), [](const Partition& a, const Partition& b) {
        return a.lex_greater(b);
    }));
}

TEST_CASE("partition counts match the independent recursion") {
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int n = 0; n <= 7; ++n) {
        CHECK(static_cast<long>(partitions_of(n, 1).size()) == expected[n]);
        CHECK(count_partitions(n, n, 1) == expected[n]);
    }
    for (int n = 0; n <= 9; ++n)
        for (int m = 1; m <= 3; ++m)
            CHECK(static_cast<long>(partitions_of(n, m).size()) == count_partitions(n, n, m));
}

TEST_CASE("partition invariants are enforced") {
    CHECK_THROWS_AS(Partition({2, 3}), InvalidPartition);
    CHECK_THROWS_AS(Partition({1, 0}), InvalidPartition);
    Partition mu({4, 2, 2, 1});
    CHECK(mu.weight() == 9);
    CHECK(mu.length() == 4);
    CHECK(mu.multiplicity(2) == 2);
    CHECK(mu.multiplicity(3) == 0);
}

TEST_CASE("eval_monomial on small examples") {
    CHECK(eval_monomial(part({2}), {1, 2, 3}) == 14);
    CHECK(eval_monomial(part({1, 1}), {1, 2, 3}) == 11);
    CHECK(eval_monomial(Partition(), {5, 7}) == 1);
    CHECK(eval_monomial(part({2, 1}), {2, 3}) == rat(2 * 2 * 3 + 3 * 3 * 2));
}

TEST_CASE("eval_monomial is symmetric and ignores trailing zeros") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> val(-4, 6);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<int> x(5);
        for (auto& v : x) v = val(rng);
        std::vector<int> shuffled = x;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<int> padded = x;
        padded.push_back(0);
        padded.push_back(0);
        for (auto nu : {part({2}), part({2, 1}), part({3, 1, 1}), part({1, 1})}) {
            Rational base = eval_monomial(nu, x);
            CHECK(eval_monomial(nu, shuffled) == base);
            CHECK(eval_monomial(nu, padded) == base);
        }
    }
}

TEST_CASE("mhat special evaluation") {
    CHECK(mhat(part({1}), 4) == 6);
    CHECK(mhat(part({2}), 5) == 30);
    CHECK(mhat(part({1, 1}), 4) == 11);
    CHECK(mhat(part({1}), 1) == 0);
    CHECK(mhat(Partition(), 1) == 1);
}

TEST_CASE("mhat is a polynomial in k of degree exactly |lambda| + l(lambda)") {
    for (auto lambda : {part({1}), part({2}), part({1, 1}), part({2, 1}), part({3}), part({2, 2})}) {
        int d = lambda.weight() + lambda.length();
        std::vector<Rational> samples;
        for (int k = 1; k <= d + 3; ++k) samples.push_back(mhat(lambda, k));
        std::vector<Rational> diff = samples;
        for (int step = 0; step < d; ++step) diff = differences(diff);
        REQUIRE(diff.size() >= 2);
        for (const auto& v : diff) CHECK(v == diff[0]);
        CHECK(diff[0] != 0);  // degree is exactly d
        CHECK(differences(diff)[0] == 0);
    }
}

TEST_CASE("SymmetricFn evaluation") {
    SymmetricFn one = SymmetricFn::constant(1);
    CHECK(one.evaluate(part({3, 2})) == 1);

    SymmetricFn p1;
    p1.set_term(part({1}), 1);
    CHECK(p1.evaluate(part({3, 2})) == 5);

    SymmetricFn f;
    f.set_term(part({2}), 1);
    f.set_term(part({1, 1}), 2);
    // direct enumeration: (9 + 4) + 2 * (3*2)
    CHECK(f.evaluate(part({3, 2})) == 25);

    CHECK(SymmetricFn().degree() == -1);
    CHECK(f.degree() == 2);
    f.set_term(part({2}), 0);
    CHECK(f.terms().size() == 1);
}
