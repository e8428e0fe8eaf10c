#include "argshift/errors.hpp"
#include "argshift/poisson.hpp"
#include "argshift/sampling.hpp"
#include "argshift/shift.hpp"
#include "argshift/subspace.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace argshift;
using fixtures::var;

TEST_CASE("build_family examples") {
    const auto L = fixtures::sl2();
    const auto C = verify_casimirs(L, {fixtures::sl2_casimir()});
    const auto F = build_family(L, C, PointQ{1, 0, 0});
    // C(mu + a xi) = C(mu) + 4 a mu_f
    CHECK(F.polys() == std::vector<MPoly>{fixtures::sl2_casimir(), Rat(4) * var(3, 2)});
    CHECK(F.members[1].source == 0);
    CHECK(F.members[1].order == 1);
    CHECK(F.labels() == std::vector<std::string>{"f_{1,xi}^0", "f_{1,xi}^1"});

    const auto F0 = build_family(L, C, PointQ(3));
    CHECK(F0.polys() == C.generators());

    const auto L3 = fixtures::sl3();
    const auto C3 = classical_casimirs(ClassicalFamily::sl, 3);
    const auto F3 = build_family(L3, C3, random_point(8, 9, 5, 0));
    CHECK(F3.size() == 5);
    CHECK_THROWS_AS(build_family(L3, C, PointQ(8)), DimensionMismatch);
    CHECK_THROWS_AS(build_family(L, C, PointQ(8)), DimensionMismatch);
}

TEST_CASE("the last nonconstant shift is the differential at xi") {
    const auto L3 = fixtures::sl3();
    const auto C3 = classical_casimirs(ClassicalFamily::sl, 3);
    for (std::uint64_t t = 0; t < 5; ++t) {
        const PointQ xi = random_point(8, 9, 6, t);
        const auto F = build_family(L3, C3, xi);
        for (std::size_t i = 0; i < C3.size(); ++i) {
            const MPoly& f = C3.generators()[i];
            for (const auto& m : F.members)
                if (m.source == i && m.order == static_cast<std::size_t>(f.degree()) - 1) {
                    const auto g = oracle::gradient(f, xi);
                    for (std::size_t k = 0; k < 8; ++k) {
                        Exponents e(8, 0);
                        e[k] = 1;
                        CHECK(m.poly.coeff(e).raw() == g[k]);
                    }
                    CHECK(m.poly.degree() <= 1);
                }
        }
    }
}

TEST_CASE("certify_commutative examples") {
    const auto L = fixtures::sl2();
    const auto C = verify_casimirs(L, {fixtures::sl2_casimir()});
    const auto r = certify_commutative(L, build_family(L, C, PointQ{1, 0, 0}));
    CHECK(r.pairs_checked == 1);
    CHECK(r.passed());

    const auto single = certify_commutative(L, build_family(L, C, PointQ(3)));
    CHECK(single.pairs_checked == 0);
    CHECK(single.passed());

    const auto L3 = fixtures::sl3();
    const auto C3 = classical_casimirs(ClassicalFamily::sl, 3);
    const auto r3 = certify_commutative(L3, build_family(L3, C3, random_point(8, 9, 1, 0)));
    CHECK(r3.pairs_checked == 10);
    CHECK(r3.passed());
}

TEST_CASE("a non-commuting pair is reported") {
    const auto L = fixtures::sl2();
    const auto C = verify_casimirs(L, {fixtures::sl2_casimir()});
    ShiftFamily F = build_family(L, C, PointQ{1, 0, 0});
    F.members.push_back({0, 9, var(3, 0)});
    const auto r = certify_commutative(L, F);
    CHECK_FALSE(r.passed());
    REQUIRE(r.nonzero.size() == 1);
    CHECK(r.nonzero[0].a == 1);
    CHECK(r.nonzero[0].b == 2);
    // {4 x_f, x_e} = -4 x_h
    CHECK(r.nonzero[0].bracket == Rat(-4) * var(3, 1));
}

TEST_CASE("degree_profile examples") {
    const auto C3 = classical_casimirs(ClassicalFamily::sl, 3);
    const auto d3 = degree_profile(C3, declared_profile(8, 2));
    CHECK(d3.verdict == DegreeVerdict::Exact);
    CHECK(d3.arithmetic == "2 + 3 = 5 = b(q) = 5");

    const auto sl2 = fixtures::sl2();
    const auto t1 = make_takiff(sl2, 1);
    const auto lifts = verify_casimirs(t1, takiff_lift(sl2, fixtures::sl2_casimir(), 1));
    CHECK(degree_profile(lifts, declared_profile(6, 2)).verdict == DegreeVerdict::Exact);

    const auto g2 = classical_casimirs(ClassicalFamily::gl, 2);
    CHECK(degree_profile(g2, declared_profile(4, 2)).verdict == DegreeVerdict::Exact);

    const MPoly C = fixtures::sl2_casimir();
    CHECK(degree_profile(verify_casimirs(sl2, {C * C}), declared_profile(3, 1)).verdict == DegreeVerdict::Excess);
    CHECK(verdict_name(DegreeVerdict::Deficit) == "DEFICIT");
    CHECK_THROWS_AS(degree_profile(C3, declared_profile(8, 3)), PreconditionFailed);
}

TEST_CASE("nonmembership_linear on the (sl2, so2) contraction") {
    const auto q = fixtures::sl2_so2();
    const auto C = verify_casimirs(q, {fixtures::sl2_so2_casimir()});
    const auto F = build_family(q, C, PointQ{0, 1, 0});
    CHECK(F.polys() == std::vector<MPoly>{fixtures::sl2_so2_casimir(), Rat(2) * var(3, 1)});
    const MPoly xr = var(3, 2);
    CHECK(nonmembership_linear(F, xr));
    for (const auto& f : F.polys()) CHECK(bracket(q, xr, f).is_zero());
    CHECK_FALSE(nonmembership_linear(F, Rat(2) * var(3, 1)));
    CHECK_FALSE(nonmembership_linear(F, var(3, 1) + Rat(0) * xr));
    CHECK_THROWS_AS(nonmembership_linear(F, xr * xr), PreconditionFailed);
}

TEST_CASE("shifting C or {C, C^2} gives the same degree-1 and degree-2 spans") {
    const auto L = fixtures::sl2();
    const MPoly C = fixtures::sl2_casimir();
    const PointQ xi{2, -1, 3};
    // F_xi(C^2) contributes shifts of C^2, each a polynomial in C-shifts
    const auto single = build_family(L, verify_casimirs(L, {C}), xi);
    const auto shifts_sq = param_expand(C * C, xi);
    const auto shifts = param_expand(C, xi);
    // (C^2)_xi^j = Σ_{a+b=j} C_xi^a C_xi^b
    for (std::size_t j = 0; j < shifts_sq.size(); ++j) {
        MPoly s(3);
        for (std::size_t a = 0; a <= j; ++a)
            if (a < shifts.size() && j - a < shifts.size()) s += shifts[a] * shifts[j - a];
        CHECK(s == shifts_sq[j]);
    }
    // hence linear members coincide
    std::vector<VecQ> lin_single, lin_pair;
    auto linear_part = [](const MPoly& f) {
        VecQ v(3);
        for (std::size_t k = 0; k < 3; ++k) {
            Exponents e(3, 0);
            e[k] = 1;
            v[k] = f.coeff(e);
        }
        return v;
    };
    for (const auto& m : single.members)
        if (m.poly.degree() == 1) lin_single.push_back(linear_part(m.poly));
    for (const auto& s : shifts_sq)
        if (s.degree() == 1) lin_pair.push_back(linear_part(s));
    for (const auto& v : lin_pair) CHECK(SubspaceQ::span(3, lin_single).contains(v));
}

TEST_CASE("linear centralizer of a shift family") {
    // (sl2, so2): x_p and x_r commute with x_p^2 + x_r^2 and 2x_p; x_t does not
    const auto q = fixtures::sl2_so2();
    const auto F = build_family(q, verify_casimirs(q, {fixtures::sl2_so2_casimir()}), PointQ{0, 1, 0});
    const auto cent = linear_centralizer(q, F);
    CHECK(cent == SubspaceQ::span(3, {VecQ{0, 1, 0}, VecQ{0, 0, 1}}));
    CHECK(nonmembership_linear(F, fixtures::var(3, 2)));
    CHECK_FALSE(nonmembership_linear(F, fixtures::var(3, 1)));

    // sl2 at (1,0,0): only x_f, which is already a member up to scale
    const auto L = fixtures::sl2();
    const auto G = build_family(L, classical_casimirs(ClassicalFamily::sl, 2), PointQ{1, 0, 0});
    CHECK(linear_centralizer(L, G) == SubspaceQ::span(3, {VecQ{0, 0, 1}}));
    CHECK_FALSE(nonmembership_linear(G, fixtures::var(3, 2)));

    // every basis vector returned commutes with every member, checked pointwise by the oracle
    const auto L3 = fixtures::sl3();
    const auto F3 = build_family(L3, classical_casimirs(ClassicalFamily::sl, 3), random_point(8, 9, 0, 1));
    const auto c3 = linear_centralizer(L3, F3);
    CHECK(c3.dim() == 2);
    for (const auto& v : c3.basis()) {
        MPoly ell(8);
        for (std::size_t i = 0; i < 8; ++i) ell += v[i] * fixtures::var(8, i);
        for (const auto& f : F3.polys())
            for (std::uint64_t t = 0; t < 3; ++t) CHECK(oracle::bracket_at(L3, ell, f, random_point(8, 9, 4, t)) == 0);
    }
}
