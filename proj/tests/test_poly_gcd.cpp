#include "argshift/errors.hpp"
#include "argshift/poly_gcd.hpp"

#include <doctest.h>

#include <random>

using namespace argshift;

namespace {

MPoly x(std::size_t i, std::size_t n) { return MPoly::variable(n, i); }

// Product of k random linear forms a0 + Σ a_i x_i with pairwise non-proportional coefficient vectors (likely).
MPoly random_linear_product(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<long> c(-9, 9);
    MPoly p = MPoly::constant(n, Rat(1));
    for (std::size_t t = 0; t < k; ++t) {
        MPoly l = MPoly::constant(n, Rat(c(rng)));
        for (std::size_t i = 0; i < n; ++i) l += Rat(c(rng)) * x(i, n);
        if (l.degree() < 1) l += x(0, n);
        p = p * l;
    }
    return p;
}

} // namespace

TEST_CASE("gcd examples") {
    const MPoly a = x(0, 2);
    const MPoly b = x(1, 2);
    const std::vector<MPoly> coprime{Rat(4) * a * a, Rat(4) * b * b};
    CHECK(poly_gcd(coprime) == MPoly::constant(2, Rat(1)));
    const MPoly v = x(0, 1);
    const std::vector<MPoly> powers{v * v, v * v * v};
    CHECK(poly_gcd(powers) == v * v);
    const MPoly f = Rat(3) * x(0, 2) * x(1, 2) - Rat(6) * x(1, 2);
    const std::vector<MPoly> with_zero{f, MPoly(2)};
    CHECK(poly_gcd(with_zero) == x(0, 2) * x(1, 2) - Rat(2) * x(1, 2));
    const std::vector<MPoly> zeros{MPoly(2), MPoly(2)};
    CHECK_THROWS_AS(poly_gcd(zeros), PreconditionFailed);
    CHECK_THROWS_AS(poly_gcd(std::vector<MPoly>{}), PreconditionFailed);
}

TEST_CASE("gcd recovers a planted common factor") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng() % 3;
        const MPoly h = random_linear_product(rng, n, 1 + rng() % 2);
        const MPoly a = random_linear_product(rng, n, 1 + rng() % 2);
        const MPoly b = random_linear_product(rng, n, 1 + rng() % 2);
        const MPoly g = gcd2(h * a, h * b);
        // g is monic; when a and b are coprime it is h scaled by 1/lc(h)
        CHECK(g.leading_coeff().is_one());
        CHECK(try_divide(h * a, g).has_value());
        CHECK(try_divide(h * b, g).has_value());
        CHECK(try_divide(g, monic(h)).has_value());
        if (gcd2(a, b).is_constant()) CHECK(g * h.leading_coeff() == h);
    }
}

TEST_CASE("constancy certificate never claims a false constant") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng() % 3;
        const MPoly h = random_linear_product(rng, n, 1);
        const MPoly a = random_linear_product(rng, n, 2);
        const MPoly b = random_linear_product(rng, n, 2);
        CHECK_FALSE(gcd_certainly_constant(h * a, h * b, t));
    }
    CHECK(gcd_certainly_constant(x(0, 2) * x(0, 2), x(1, 2) * x(1, 2)));
}

TEST_CASE("accumulator stops as soon as the gcd is constant") {
    GcdAccumulator acc(2);
    CHECK_FALSE(acc.add(MPoly(2)));
    CHECK_FALSE(acc.seen_nonzero());
    CHECK_FALSE(acc.add(Rat(4) * x(0, 2) * x(0, 2)));
    CHECK(acc.value() == x(0, 2) * x(0, 2));
    CHECK(acc.add(Rat(4) * x(1, 2) * x(1, 2)));
    CHECK(acc.is_constant());
    CHECK(acc.consumed() == 3);
}

TEST_CASE("univariate gcd over Q") {
    // (t-1)(t+2) and (t-1)(t-3)
    const auto g = univariate_gcd({Rat(-2), Rat(1), Rat(1)}, {Rat(3), Rat(-4), Rat(1)});
    CHECK(g == std::vector<Rat>{Rat(-1), Rat(1)});
}
