#include <doctest.h>

#include <random>

#include "kerov/cumulants.hpp"
#include "kerov/errors.hpp"
#include "kerov/goulden_rattan.hpp"
#include "kerov/laurent_z.hpp"
#include "kerov/tseries.hpp"
#include "support.hpp"

using namespace kerov;
using testutil::bvar;
using testutil::part;
using testutil::random_poly;
using testutil::rterm;
using testutil::rvar;

namespace {

TSeries random_series(std::mt19937& rng, int order) {
    TSeries s(Family::Free, order);
    for (int n = 0; n <= order; ++n) s.at(n) = random_poly(rng, Family::Free, 4, 2);
    return s;
}

// Direct convolution, written independently of TSeries::operator*.
TSeries convolve_oracle(const TSeries& a, const TSeries& b) {
    int n = std::min(a.order(), b.order());
    TSeries out(a.family(), n);
    for (int t = 0; t <= n; ++t) {
        CumulantPoly acc(a.family());
        for (int i = 0; i <= t; ++i) acc += a[i] * b[t - i];
        out.at(t) = acc;
    }
    return out;
}

std::vector<CumulantPoly> boolean_stream(int max_index) {
    std::vector<CumulantPoly> b(static_cast<std::size_t>(max_index) + 1,
                                CumulantPoly::zero(Family::Boolean));
    for (int j = 2; j <= max_index; ++j) b[static_cast<std::size_t>(j)] = bvar(j);
    return b;
}

}  // namespace

TEST_CASE("t_mul against examples and the convolution oracle") {
    TSeries a(Family::Free, 4);
    a.at(0) = CumulantPoly::one(Family::Free);
    a.at(2) = rvar(2);
    TSeries sq = a * a;
    CHECK(sq[0] == CumulantPoly::one(Family::Free));
    CHECK(sq[2] == rterm(2, {2}));
    CHECK(sq[4] == rterm(1, {2, 2}));

    TSeries one = TSeries::constant_one(Family::Free, 4);
    CHECK(a * one == a);

    std::mt19937 rng(777);
    for (int iter = 0; iter < 10; ++iter) {
        TSeries x = random_series(rng, 3);
        TSeries y = random_series(rng, 3);
        CHECK(x * y == convolve_oracle(x, y));
    }
}

TEST_CASE("reciprocal") {
    TSeries a(Family::Free, 4);
    a.at(0) = CumulantPoly::one(Family::Free);
    a.at(2) = -rvar(2);
    TSeries inv = a.reciprocal();
    CHECK(inv[0] == CumulantPoly::one(Family::Free));
    CHECK(inv[2] == rvar(2));
    CHECK(inv[4] == rterm(1, {2, 2}));

    // 1 - (script-R_2 t^2 + script-R_3 t^3), inverted to order 3
    TSeries b(Family::Free, 3);
    b.at(0) = CumulantPoly::one(Family::Free);
    b.at(2) = -script_r(2);
    b.at(3) = -script_r(3);
    TSeries binv = b.reciprocal();
    CHECK(binv[2] == rvar(2));
    CHECK(binv[3] == rterm(2, {3}));

    TSeries c = c_series(6);
    TSeries prod = c * c.reciprocal();
    CHECK(prod[0] == CumulantPoly::one(Family::Free));
    for (int n = 1; n <= 6; ++n) CHECK(prod[n].is_zero());

    TSeries bad(Family::Free, 2);
    bad.at(0) = rterm(2, {});
    CHECK_THROWS_AS(bad.reciprocal(), NonUnitConstantTerm);

    std::mt19937 rng(4242);
    for (int iter = 0; iter < 8; ++iter) {
        TSeries s = random_series(rng, 4);
        s.at(0) = CumulantPoly::one(Family::Free);
        CHECK(s.reciprocal().reciprocal() == s);
    }
}

TEST_CASE("euler operator") {
    TSeries one = TSeries::constant_one(Family::Free, 3);
    for (int n = 0; n <= 3; ++n) CHECK(one.euler_d()[n].is_zero());

    TSeries a(Family::Free, 3);
    a.at(2) = rvar(2);
    CHECK(a.euler_d()[2] == rterm(2, {2}));

    CHECK(c_series(4).euler_d()[4] == rterm(12, {4}) + rterm(4, {2, 2}));

    std::mt19937 rng(9001);
    for (int iter = 0; iter < 8; ++iter) {
        TSeries x = random_series(rng, 3);
        TSeries y = random_series(rng, 3);
        CHECK((x * y).euler_d() == x.euler_d() * y + x * y.euler_d());
    }
}

TEST_CASE("series built from C(t) have homogeneous coefficients") {
    TSeries c = c_series(6);
    for (const TSeries& s : {c, c * c, c.euler_d(), c.reciprocal(), c * c.euler_d()}) {
        for (int n = 0; n <= s.order(); ++n) CHECK(s[n].is_homogeneous(n));
    }
}

TEST_CASE("z_shift_expand") {
    auto b = boolean_stream(8);

    LaurentZ h0 = z_shift_expand(b, 0, 6);
    CHECK(h0.coefficient(1) == CumulantPoly::one(Family::Boolean));
    CHECK(h0.coefficient(0).is_zero());
    CHECK(h0.coefficient(-1) == -bvar(2));
    CHECK(h0.coefficient(-2) == -bvar(3));
    CHECK(h0.coefficient(-6) == -bvar(7));

    LaurentZ h1 = z_shift_expand(b, 1, 6);
    CHECK(h1.coefficient(0) == CumulantPoly::constant(Family::Boolean, -1));
    CHECK(h1.coefficient(-1) == -bvar(2));
    // (z-1)^{-1} reaches z^{-2}: -B_2 - B_3 there
    CHECK(h1.coefficient(-2) == -bvar(2) - bvar(3));

    CHECK_THROWS_AS(z_shift_expand(boolean_stream(4), 0, 6), InsufficientDepthData);
}

TEST_CASE("z_mul and residues") {
    auto b = boolean_stream(8);
    LaurentZ h0 = z_shift_expand(b, 0, 6);
    LaurentZ h1 = z_shift_expand(b, 1, 6);

    CHECK(h0.coefficient(-1) == -bvar(2));
    CHECK((h0 * h1).coefficient(-1) == bvar(3) * Rational(-2));

    LaurentZ sq = h0 * h0;
    CHECK(sq.coefficient(-1) == bvar(3) * Rational(-2));
    CHECK(sq.top() == 2);
    CHECK(sq.depth() == 5);
    CHECK_THROWS_AS(sq.coefficient(-6), InsufficientDepthData);
}

TEST_CASE("residue of the shifted product is stable in the depth") {
    for (int k : {2, 3, 5}) {
        CumulantPoly base = shifted_h_residue(k, k + 2);
        CHECK(shifted_h_residue(k, k + 3) == base);
        CHECK(shifted_h_residue(k, k + 4) == base);
        CHECK(h_power_residue(k, k + 2) == h_power_residue(k, k + 4));
    }
}
