#include <doctest.h>

#include "kerov/cumulants.hpp"
#include "kerov/errors.hpp"
#include "support.hpp"

using namespace kerov;
using testutil::bvar;
using testutil::part;
using testutil::rterm;
using testutil::rvar;

namespace {

CumulantPoly bterm(long num, std::initializer_list<int> key) {
    return CumulantPoly::monomial(Family::Boolean, testutil::part(key), rat(num));
}

CumulantPoly golden_sigma(int k) {
    switch (k) {
        case 1: return rvar(2);
        case 2: return rvar(3);
        case 3: return rvar(4) + rvar(2);
        case 4: return rvar(5) + rterm(5, {3});
        case 5: return rvar(6) + rterm(15, {4}) + rterm(5, {2, 2}) + rterm(8, {2});
        case 6: return rvar(7) + rterm(35, {5}) + rterm(35, {3, 2}) + rterm(84, {3});
        default: throw std::out_of_range("no golden value");
    }
}

}  // namespace

TEST_CASE("Boolean cumulants in terms of free cumulants") {
    auto table = free_to_boolean(6);
    CHECK(table.at(2) == rvar(2));
    CHECK(table.at(3) == rvar(3));
    CHECK(table.at(4) == rvar(4) + rterm(1, {2, 2}));
    // next order, derived by hand from the moment recursion
    CHECK(table.at(5) == rvar(5) + rterm(3, {3, 2}));
    for (const auto& [j, p] : table) CHECK(p.is_homogeneous(j));
}

TEST_CASE("free cumulants in terms of Boolean cumulants") {
    auto table = boolean_to_free(6);
    CHECK(table.at(2) == bvar(2));
    CHECK(table.at(3) == bvar(3));
    CHECK(table.at(4) == bvar(4) - bterm(1, {2, 2}));
    CHECK(table.at(5) == bvar(5) - bterm(3, {3, 2}));
}

TEST_CASE("the two conversion tables are mutually inverse up to index 13") {
    auto b_in_r = free_to_boolean(13);
    auto r_in_b = boolean_to_free(13);
    for (int j = 2; j <= 13; ++j) {
        CHECK(b_in_r.at(j).substitute(r_in_b) == bvar(j));
        CHECK(r_in_b.at(j).substitute(b_in_r) == rvar(j));
    }
}

TEST_CASE("sigma reproduces the golden table") {
    for (int k = 1; k <= 6; ++k) {
        KerovPolynomial kp = sigma(k);
        CHECK(kp.k == k);
        CHECK(kp.poly == golden_sigma(k));
    }
}

TEST_CASE("Kerov polynomial structural invariants for k <= 8") {
    for (int k = 1; k <= 8; ++k) {
        KerovPolynomial kp = sigma(k);
        CHECK_NOTHROW(kp.validate());
        for (int d = 0; d <= k + 1; ++d) {
            CumulantPoly h = kp.poly.homogeneous_part(d);
            if (!h.is_zero()) CHECK((k + 1 - d) % 2 == 0);
        }
        CHECK(kp.poly.homogeneous_part(k + 1) == rvar(k + 1));
        CHECK(free_cumulant_check(k));
    }
}

TEST_CASE("genus_part") {
    KerovPolynomial k5 = sigma(5);
    CHECK(genus_part(k5, 1) == rterm(15, {4}) + rterm(5, {2, 2}));
    CHECK(genus_part(k5, 2) == rterm(8, {2}));
    KerovPolynomial k4 = sigma(4);
    CHECK(genus_part(k4, 0) == rvar(5));
    CHECK_THROWS_AS(genus_part(k4, 3), PreconditionViolated);
}

TEST_CASE("validate rejects corrupted polynomials") {
    KerovPolynomial bad{3, rvar(4) + rterm(-1, {2})};
    CHECK_THROWS_AS(bad.validate(), Error);
    KerovPolynomial wrong_top{3, rvar(4) * Rational(2) + rvar(2)};
    CHECK_THROWS_AS(wrong_top.validate(), Error);
    KerovPolynomial bad_parity{3, rvar(4) + rvar(3)};
    CHECK_THROWS_AS(bad_parity.validate(), Error);
}
