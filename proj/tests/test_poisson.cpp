#include "argshift/errors.hpp"
#include "argshift/kernels.hpp"
#include "argshift/poisson.hpp"
#include "argshift/sampling.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace argshift;
using fixtures::var;

namespace {

MPoly random_poly(std::mt19937_64& rng, std::size_t n, unsigned max_deg) {
    std::uniform_int_distribution<long> c(-4, 4);
    MPoly f(n);
    for (int t = 0; t < 4; ++t) {
        Exponents e(n, 0);
        const unsigned d = static_cast<unsigned>(rng() % (max_deg + 1));
        for (unsigned k = 0; k < d; ++k) ++e[rng() % n];
        f.add_term(e, Rat(c(rng)));
    }
    return f;
}

PointQ point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> c(-6, 6);
    PointQ p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rat(c(rng));
    return p;
}

std::vector<LieAlgebraData> test_algebras() {
    return {fixtures::sl2(), fixtures::sl3(), fixtures::sl2_so2(), make_vinberg({Rat(1), Rat(2)}),
            make_takiff(fixtures::sl2(), 1), make_centralizer_sl(3, {2, 1})};
}

} // namespace

TEST_CASE("bracket examples") {
    const auto L = fixtures::sl2();
    CHECK(bracket(L, var(3, 0), var(3, 2)) == var(3, 1));
    const MPoly f = var(3, 0) * var(3, 1) + var(3, 2);
    CHECK(bracket(L, f, f).is_zero());
    CHECK(bracket(L, fixtures::sl2_casimir(), var(3, 0)).is_zero());
    CHECK_THROWS_AS(bracket(L, var(2, 0), var(3, 0)), DimensionMismatch);
}

TEST_CASE("frozen bracket examples") {
    const auto L = fixtures::sl2();
    CHECK(frozen_bracket(L, var(3, 0), var(3, 2), PointQ{1, 0, 0}).is_zero());
    CHECK(frozen_bracket(L, var(3, 0), var(3, 2), PointQ{0, 1, 0}) == MPoly::constant(3, Rat(1)));
    std::mt19937_64 rng(40);
    for (int t = 0; t < 10; ++t)
        CHECK(frozen_bracket(L, random_poly(rng, 3, 3), random_poly(rng, 3, 3), PointQ(3)).is_zero());
}

TEST_CASE("kirillov examples") {
    const auto L = fixtures::sl2();
    CHECK(kirillov_matrix(L, PointQ{1, 0, 0}) == MatQ::from_rows({{0, -2, 0}, {2, 0, 0}, {0, 0, 0}}));
    CHECK(kirillov_matrix(L, PointQ{0, 0, 1}) == MatQ::from_rows({{0, 0, 0}, {0, 0, -2}, {0, 2, 0}}));
    CHECK(kirillov_matrix(fixtures::sl3(), PointQ(8)).is_zero());
    CHECK(kirillov(L, PointQ{1, 0, 0}).rank() == 2);
    CHECK_THROWS_AS(kirillov(L, PointQ{1, 0}), DimensionMismatch);
}

TEST_CASE("Kirillov matrices are linear in the point, skew, of even rank, and match the oracle") {
    std::mt19937_64 rng(41);
    for (const auto& L : test_algebras()) {
        for (int t = 0; t < 10; ++t) {
            const PointQ xi = point(rng, L.dim());
            const PointQ eta = point(rng, L.dim());
            const Rat a(static_cast<long>(rng() % 7) - 3), b(static_cast<long>(rng() % 7) - 3);
            const MatQ K = kirillov_matrix(L, xi);
            CHECK(K.is_skew());
            CHECK(rank(K) % 2 == 0);
            CHECK(oracle::dense(K) == oracle::kirillov(L, xi));
            CHECK(kirillov_matrix(L, combine(a, xi, b, eta)) == combine(a, K, b, kirillov_matrix(L, eta)));
        }
    }
}

TEST_CASE("Jacobi identity of the Lie-Poisson bracket on random triples") {
    std::mt19937_64 rng(42);
    for (const auto& L : {fixtures::sl2(), fixtures::sl2_so2(), make_vinberg({Rat(1), Rat(2)})}) {
        for (int t = 0; t < 50; ++t) {
            const MPoly f = random_poly(rng, L.dim(), 2);
            const MPoly g = random_poly(rng, L.dim(), 2);
            const MPoly h = random_poly(rng, L.dim(), 2);
            const MPoly jac = bracket(L, f, bracket(L, g, h)) + bracket(L, g, bracket(L, h, f)) + bracket(L, h, bracket(L, f, g));
            CHECK(jac.is_zero());
        }
    }
}

TEST_CASE("combinations of the bracket and a frozen bracket satisfy Jacobi") {
    std::mt19937_64 rng(43);
    const auto L = fixtures::sl2();
    const PointQ xi{2, -1, 3};
    auto br = [&](const MPoly& f, const MPoly& g) { return bracket(L, f, g) + Rat(5) * frozen_bracket(L, f, g, xi); };
    for (int t = 0; t < 20; ++t) {
        const MPoly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2), h = random_poly(rng, 3, 2);
        CHECK((br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))).is_zero());
    }
}

TEST_CASE("bracket values agree with the pairing gradT K grad at random points") {
    std::mt19937_64 rng(44);
    for (const auto& L : test_algebras()) {
        for (int t = 0; t < 20; ++t) {
            const MPoly f = random_poly(rng, L.dim(), 3);
            const MPoly g = random_poly(rng, L.dim(), 3);
            const PointQ eta = point(rng, L.dim());
            const PointQ xi = point(rng, L.dim());
            CHECK(evaluate(bracket(L, f, g), eta).raw() == oracle::bracket_at(L, f, g, eta));
            const auto frozen = oracle::pairing(oracle::gradient(f, eta), oracle::kirillov(L, xi), oracle::gradient(g, eta));
            CHECK(evaluate(frozen_bracket(L, f, g, xi), eta).raw() == frozen);
            CHECK(bracket(L, f, g) == -bracket(L, g, f));
        }
    }
}

TEST_CASE("estimate_index examples") {
    const auto p = estimate_index(fixtures::sl2(), 10, 0);
    CHECK(p.ind == 1);
    CHECK(p.b() == std::optional<std::size_t>(2));
    CHECK(p.source == IndexSource::Estimated);
    REQUIRE(p.witness.has_value());
    CHECK(rank(kirillov_matrix(fixtures::sl2(), *p.witness)) == 2);
    CHECK(estimate_index(LieAlgebraData::abelian(4), 3, 0).ind == 4);
    CHECK(estimate_index(make_vinberg({Rat(1), Rat(2)}), 10, 0).ind == 1);
    CHECK_THROWS_AS(estimate_index(fixtures::sl2(), 0, 0), PreconditionFailed);
}

TEST_CASE("estimate_index is deterministic in the seed") {
    const auto L = fixtures::sl3();
    const auto a = estimate_index(L, 5, 17);
    const auto b = estimate_index(L, 5, 17);
    CHECK(a.witness == b.witness);
    CHECK(a.ind == b.ind);
}

TEST_CASE("is_casimir examples") {
    const auto L = fixtures::sl2();
    CHECK(is_casimir(L, fixtures::sl2_casimir()).is_casimir);
    CHECK(is_casimir(L, MPoly::constant(3, Rat(5))).is_casimir);
    const auto chk = is_casimir(L, var(3, 1));
    CHECK_FALSE(chk.is_casimir);
    REQUIRE(chk.witness_index == std::optional<std::size_t>(0));
    CHECK(chk.witness_bracket == Rat(-2) * var(3, 0));
}

TEST_CASE("classical Casimirs") {
    const auto s2 = classical_casimirs(ClassicalFamily::sl, 2);
    REQUIRE(s2.size() == 1);
    CHECK(s2.generators()[0] == fixtures::sl2_casimir());
    CHECK(s2.sum_degrees() == 2);

    const auto s3 = classical_casimirs(ClassicalFamily::sl, 3);
    CHECK(s3.degrees() == std::vector<int>{2, 3});
    CHECK(s3.sum_degrees() == 5);
    CHECK(s3.homogeneous());

    const auto g2 = classical_casimirs(ClassicalFamily::gl, 2);
    CHECK(g2.degrees() == std::vector<int>{1, 2});
    CHECK(g2.sum_degrees() == 3);

    const auto s4 = classical_casimirs(ClassicalFamily::sl, 4);
    CHECK(s4.sum_degrees() == (16 + 4 - 2) / 2);
    CHECK_THROWS_AS(classical_casimirs(ClassicalFamily::so, 3), PreconditionFailed);

    for (const auto* C : {&s2, &s3, &g2}) {
        const std::size_t d = C->nvars();
        const auto L = d == 3 ? fixtures::sl2() : d == 8 ? fixtures::sl3() : make_classical(ClassicalFamily::gl, 2);
        for (const auto& f : C->generators()) CHECK(is_casimir(L, f).is_casimir);
        CHECK(oracle::rank(kernels::gradient_matrix(C->generators(), C->independence_witness())) == C->size());
    }
}

TEST_CASE("verify_casimirs rejects non-central, constant and dependent sets") {
    const auto L = fixtures::sl2();
    CHECK_THROWS_AS(verify_casimirs(L, {var(3, 1)}), PreconditionFailed);
    CHECK_THROWS_AS(verify_casimirs(L, {MPoly::constant(3, Rat(1))}), PreconditionFailed);
    const MPoly C = fixtures::sl2_casimir();
    CHECK_THROWS_AS(verify_casimirs(L, {C, C * C}), PreconditionFailed);
    CHECK(verify_casimirs(L, {}).size() == 0);
}

TEST_CASE("Takiff lifts") {
    const auto sl2 = fixtures::sl2();
    const auto lifts = takiff_lift(sl2, fixtures::sl2_casimir(), 1);
    REQUIRE(lifts.size() == 2);
    const auto t1 = make_takiff(sl2, 1);
    for (const auto& f : lifts) {
        CHECK(f.degree() == 2);
        CHECK(is_casimir(t1, f).is_casimir);
    }
    // coefficient of t^0 is C in the level-1 variables (indices 3..5)
    const MPoly c1 = var(6, 4) * var(6, 4) + Rat(4) * var(6, 3) * var(6, 5);
    CHECK(lifts[0] == c1);
    const auto set = verify_casimirs(t1, lifts);
    CHECK(set.sum_degrees() == 4);

    CHECK(takiff_lift(sl2, fixtures::sl2_casimir(), 0) == std::vector<MPoly>{fixtures::sl2_casimir()});
    const auto ab = LieAlgebraData::abelian(2);
    for (const auto& f : takiff_lift(ab, var(2, 0), 2)) CHECK(is_casimir(make_takiff(ab, 2), f).is_casimir);
    CHECK_THROWS_AS(takiff_lift(sl2, var(3, 1), 1), PreconditionFailed);
}

TEST_CASE("module orbit dimension for sl2 on four copies of k2") {
    CHECK(max_module_orbit_dim(fixtures::sl2_four_copies(), 10, 0) == 3);
    CHECK(max_module_orbit_dim(fixtures::sl2_standard_rep(), 10, 0) == 2);
}
