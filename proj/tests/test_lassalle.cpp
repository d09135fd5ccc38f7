#include <doctest.h>

#include <random>

#include "kerov/errors.hpp"
#include "kerov/lassalle.hpp"
#include "support.hpp"

using namespace kerov;
using testutil::part;
using testutil::random_homogeneous;
using testutil::rterm;
using testutil::rvar;

TEST_CASE("script_r_mu") {
    CHECK(script_r_mu(part({3, 2})) == rterm(2, {3, 2}));
    CHECK(script_r_mu(part({2, 2})) == rterm(1, 2, {2, 2}));
    CHECK(script_r_mu(Partition()) == CumulantPoly::one(Family::Free));
    CHECK(script_r_mu(part({5})) == rterm(4, {5}));
    CHECK_THROWS_AS(script_r_mu(part({2, 1})), PartTooSmall);
}

TEST_CASE("q_poly") {
    CHECK(q_poly(2) == rvar(2));
    CHECK(q_poly(3) == rterm(2, {3}));
    CHECK(q_poly(4) == rterm(3, {4}) + rterm(1, 2, {2, 2}));
    CHECK(q_poly(5) == rterm(4, {5}) + rterm(2, {3, 2}));
    for (int i = 2; i <= 8; ++i) CHECK(q_poly(i).coefficient(part({i})) == i - 1);
}

TEST_CASE("script_q_mu") {
    CHECK(script_q_mu(part({3})) == rterm(2, {3}));
    CHECK(script_q_mu(part({3, 2})) == rterm(2, {3, 2}));
    CHECK(script_q_mu(part({5})) == rterm(4, {5}) + rterm(2, {3, 2}));
    CHECK(script_q_mu(part({2, 2})) == rterm(1, 2, {2, 2}));
    CHECK_THROWS_AS(script_q_mu(part({1, 1})), PartTooSmall);
}

TEST_CASE("expand_in_q_basis on worked examples") {
    auto e1 = expand_in_q_basis(rvar(2), 2);
    CHECK(e1.at(part({2})) == 1);

    auto e2 = expand_in_q_basis(rterm(35, {5}) + rterm(35, {3, 2}), 5);
    CHECK(e2.at(part({5})) == rat(35, 4));
    CHECK(e2.at(part({3, 2})) == rat(35, 4));

    auto e3 = expand_in_q_basis(rterm(1, {2, 2}), 4);
    CHECK(e3.at(part({4})) == 0);
    CHECK(e3.at(part({2, 2})) == 2);

    CHECK_THROWS_AS(expand_in_q_basis(rvar(2) + rvar(3), 2), NotHomogeneous);
}

TEST_CASE("q-basis expansion round-trips on random homogeneous inputs") {
    std::mt19937 rng(13121);
    for (int w = 2; w <= 12; ++w) {
        CumulantPoly p = random_homogeneous(rng, Family::Free, w);
        auto coords = expand_in_q_basis(p, w);
        CumulantPoly rebuilt(Family::Free);
        for (const auto& [mu, c] : coords) rebuilt += script_q_mu(mu) * c;
        CHECK(rebuilt == p);
    }
}

TEST_CASE("extract_f_values") {
    auto f1 = extract_f_values(4, 1, rterm(5, {3}));
    CHECK(f1.at(part({3})) == rat(1, 4));

    auto f2 = extract_f_values(6, 1, rterm(35, {5}) + rterm(35, {3, 2}));
    CHECK(f2.at(part({5})) == rat(1, 4));
    CHECK(f2.at(part({3, 2})) == rat(1, 4));

    auto f3 = extract_f_values(5, 2, rterm(8, {2}));
    CHECK(f3.at(part({2})) == rat(1, 15));

    CHECK_THROWS_AS(extract_f_values(1, 1, CumulantPoly::zero(Family::Free)), DegenerateK);
}

TEST_CASE("extract_h_values") {
    auto h1 = extract_h_values(4, 1, rterm(5, {3}));
    CHECK(h1.at(part({3})) == rat(1, 4));

    auto h2 = extract_h_values(6, 1, rterm(35, {5}) + rterm(35, {3, 2}));
    CHECK(h2.at(part({5})) == rat(1, 4));
    CHECK(h2.at(part({3, 2})) == rat(1, 4));

    auto h3 = extract_h_values(5, 2, rterm(8, {2}));
    CHECK(h3.at(part({2})) == rat(2, 15));
}

TEST_CASE("fit_symmetric") {
    std::vector<std::pair<Partition, Rational>> data{
        {part({3}), rat(1, 4)}, {part({5}), rat(1, 4)}, {part({3, 2}), rat(1, 4)}};
    CHECK(fit_symmetric(data, 0) == SymmetricFn::constant(rat(1, 4)));

    CHECK(fit_symmetric({{part({2}), 7}}, 0) == SymmetricFn::constant(7));

    CHECK_THROWS_AS(fit_symmetric({{part({2}), 1}, {part({3}), 2}}, 0), Inconsistent);

    try {
        fit_symmetric({{part({2}), 1}}, 1);
        FAIL("expected Underdetermined");
    } catch (const Underdetermined& e) {
        CHECK(!e.unconstrained.empty());
    }
}

TEST_CASE("lassalle_report at genus 1 gives the constant 1/4") {
    std::vector<int> ks{4, 5, 6, 7, 8, 9, 10};
    for (FitBasis basis : {FitBasis::R, FitBasis::Q}) {
        FitReport report = lassalle_report(1, ks, basis);
        CHECK(report.consistent);
        CHECK(report.fitted == SymmetricFn::constant(rat(1, 4)));
        CHECK(report.degree_bound == 0);
        CHECK(report.equations_used == 1);
        CHECK(report.residual_equations_checked ==
              static_cast<int>([&] {
                  std::size_t total = 0;
                  for (int k : ks) total += partitions_of(k - 1, 2).size();
                  return total - 1;
              }()));
    }
    CHECK_THROWS_AS(lassalle_report(1, std::vector<int>{2}, FitBasis::R), PreconditionViolated);
}

TEST_CASE("re-expansion reproduces the genus part") {
    for (int k = 4; k <= 9; ++k) {
        KerovPolynomial kp = sigma(k);
        for (int g = 1; g <= 2 && 2 * g + 1 <= k; ++g) {
            CumulantPoly target = genus_part(kp, g);
            auto fv = extract_f_values(k, g, target);
            auto hv = extract_h_values(k, g, target);
            CumulantPoly f_side(Family::Free), h_side(Family::Free);
            for (const auto& [mu, v] : fv)
                f_side += script_r_mu(mu) *
                          (Rational(binomial(k + 1, 3)) *
                           Rational(factorial(mu.length() + 2 * g - 2)) * v);
            for (const auto& [mu, v] : hv)
                h_side += script_q_mu(mu) * (Rational(binomial(k + 1, 3)) *
                                             pow_rational(Rational(2 * g - 1), mu.length()) * v);
            CHECK(f_side == target);
            CHECK(h_side == target);
        }
    }
    // and through the fitted constant at genus 1
    FitReport report = lassalle_report(1, {4, 5, 6, 7, 8}, FitBasis::R);
    for (int k = 4; k <= 8; ++k)
        CHECK(reassemble_genus_part(k, 1, report.fitted, FitBasis::R) ==
              genus_part(sigma(k), 1));
}

TEST_CASE("divisibility quotients for small odd primes") {
    DivisibilityResult r3 = divisibility_check(3);
    CHECK(r3.q1 == rvar(2));
    CHECK(r3.q2.is_zero());
    CHECK(r3.q3 == rterm(2, {3}));

    DivisibilityResult r5 = divisibility_check(5);
    CHECK(r5.q1 == rterm(3, {4}) + rterm(1, {2, 2}) + rterm(2, {2}));
    CHECK(r5.q2 == rvar(3));
    CHECK(r5.q3 == rterm(7, {5}) + rterm(7, {3, 2}) + rterm(17, {3}));

    DivisibilityResult r7 = divisibility_check(7);
    for (const CumulantPoly* q : {&r7.q1, &r7.q2, &r7.q3}) {
        CHECK(q->all_coefficients_integer());
        CHECK_FALSE(q->has_negative_coefficient());
    }

    CHECK_THROWS_AS(divisibility_check(4), PreconditionViolated);
    CHECK_THROWS_AS(divisibility_check(9), PreconditionViolated);
}
