#include <doctest.h>

#include <vector>

#include "z2ss/ground.hpp"

using namespace z2ss;

namespace {

// All basis elements with bidegree inside [lo,hi]^2.
std::vector<GroundElement> window_basis(int lo, int hi) {
    std::vector<GroundElement> out;
    for (int p = lo; p <= hi; ++p)
        for (int w = lo; w <= hi; ++w) {
            const GroundElement e = element_at({p, w});
            if (!e.is_zero()) out.push_back(e);
        }
    return out;
}

}  // namespace

TEST_SUITE("ground") {

TEST_CASE("cone dimensions at the named lattice points") {
    CHECK(point_dim({0, 0}) == 1);
    CHECK(point_dim({1, 1}) == 1);   // rho
    CHECK(point_dim({0, -2}) == 1);  // theta
    CHECK(point_dim({-1, -3}) == 1); // theta/rho
    CHECK(point_dim({1, 0}) == 0);
    CHECK(point_dim({1, -1}) == 0);
    CHECK(point_dim({-1, -1}) == 0);
}

TEST_CASE("element degrees") {
    CHECK(GroundElement::rho().degree() == Bidegree{1, 1});
    CHECK(GroundElement::tau().degree() == Bidegree{0, 1});
    CHECK(GroundElement::theta().degree() == Bidegree{0, -2});
    CHECK(GroundElement::bottom(1, 0).degree() == Bidegree{-1, -3});
    CHECK(GroundElement::bottom(0, 1).degree() == Bidegree{0, -3});
    CHECK(element_at({-1, -3}) == GroundElement::bottom(1, 0));
}

TEST_CASE("products: polynomial cone and divisibility into the bottom cone") {
    CHECK(point_mul(GroundElement::rho(), GroundElement::tau()) == GroundElement::top(1, 1));
    CHECK(point_mul(GroundElement::rho(), GroundElement::bottom(1, 0)) == GroundElement::theta());
    CHECK(point_mul(GroundElement::tau(), GroundElement::bottom(0, 1)) == GroundElement::theta());
    CHECK(point_mul(GroundElement::top(2, 0), GroundElement::bottom(1, 0)).is_zero());
    CHECK(point_mul(GroundElement::theta(), GroundElement::theta()).is_zero());
}

TEST_CASE("divisibility identities for all small exponents") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            CHECK(point_mul(GroundElement::rho(), GroundElement::bottom(a + 1, b)) == GroundElement::bottom(a, b));
            CHECK(point_mul(GroundElement::tau(), GroundElement::bottom(a, b + 1)) == GroundElement::bottom(a, b));
        }
}

TEST_CASE("units act as identities") {
    CHECK(Bidegree{2, -3} + Bidegree{0, 0} == Bidegree{2, -3});
    CHECK(Bidegree{1, 2} + Bidegree{3, 4} == Bidegree{3, 4} + Bidegree{1, 2});
    for (const GroundElement& x : window_basis(-6, 6)) CHECK(point_mul(GroundElement::one(), x) == x);
    for (int k = -4; k <= 4; ++k)
        CHECK(orbit_mul(OrbitElement::one(), OrbitElement::t_power(k)) == OrbitElement::t_power(k));
}

TEST_CASE("multiplication is associative, commutative and degree-additive on the window") {
    const std::vector<GroundElement> basis = window_basis(-6, 6);
    for (const GroundElement& x : basis)
        for (const GroundElement& y : basis) {
            const GroundElement xy = point_mul(x, y);
            CHECK(xy == point_mul(y, x));
            if (!xy.is_zero()) {
                CHECK(xy.degree() == x.degree() + y.degree());
                // cone soundness: a nonzero product lands where the ring lives
                CHECK(point_dim(xy.degree()) == 1);
            }
        }
    for (const GroundElement& x : basis)
        for (const GroundElement& y : basis)
            for (const GroundElement& z : basis)
                CHECK(point_mul(point_mul(x, y), z) == point_mul(x, point_mul(y, z)));
}

TEST_CASE("orbit ring: Laurent line and products") {
    for (int w = -5; w <= 5; ++w) {
        CHECK(orbit_dim({0, w}) == 1);
        CHECK(orbit_dim({1, w}) == 0);
        CHECK(orbit_dim({-2, w}) == 0);
    }
    CHECK(orbit_mul(OrbitElement::t_power(2), OrbitElement::t_power(-2)) == OrbitElement::one());
    CHECK(orbit_mul(OrbitElement::t_power(3), OrbitElement::zero()).is_zero());
}

TEST_CASE("restriction to the free orbit") {
    CHECK(restrict_to_orbit(GroundElement::tau()) == OrbitElement::t_power(1));
    CHECK(restrict_to_orbit(GroundElement::rho()).is_zero());
    CHECK(restrict_to_orbit(GroundElement::one()) == OrbitElement::one());
    CHECK(restrict_to_orbit(GroundElement::theta()).is_zero());
}

TEST_CASE("restriction is a ring map on the window") {
    const std::vector<GroundElement> basis = window_basis(-6, 6);
    for (const GroundElement& x : basis)
        for (const GroundElement& y : basis)
            CHECK(restrict_to_orbit(point_mul(x, y)) ==
                  orbit_mul(restrict_to_orbit(x), restrict_to_orbit(y)));
}

TEST_CASE("canonical text and parsing round-trip") {
    CHECK(GroundElement::one().text() == "1");
    CHECK(GroundElement::rho().text() == "rho");
    CHECK(GroundElement::top(2, 3).text() == "rho^2 tau^3");
    CHECK(GroundElement::theta().text() == "theta");
    CHECK(GroundElement::bottom(1, 0).text() == "theta/(rho)");
    CHECK(GroundElement::bottom(0, 2).text() == "theta/(tau^2)");
    CHECK(OrbitElement::t_power(-3).text() == "t^-3");
    for (const GroundElement& e : window_basis(-6, 6)) {
        auto parsed = GroundElement::parse(e.text());
        REQUIRE(parsed.has_value());
        CHECK(*parsed == e);
    }
    for (int k = -4; k <= 4; ++k) {
        auto parsed = OrbitElement::parse(OrbitElement::t_power(k).text());
        REQUIRE(parsed.has_value());
        CHECK(*parsed == OrbitElement::t_power(k));
    }
    CHECK(!GroundElement::parse("junk").has_value());
    CHECK(!GroundElement::parse("theta/()").has_value());
}

}  // TEST_SUITE
