// One PASS/FAIL line per acceptance criterion, all checks exact. Exit status
// is the number of failing criteria.

#include "argshift/errors.hpp"
#include "argshift/pencil.hpp"
#include "argshift/pipeline.hpp"
#include "argshift/poisson.hpp"
#include "argshift/regcert.hpp"
#include "argshift/sampling.hpp"
#include "argshift/shift.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace argshift;
using fixtures::var;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    // verdict-level values only: equal across sample heights when arithmetic is exact
    std::string signature;
};

class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) {
            out_.pass = false;
            if (!failures_.empty()) failures_ += "; ";
            failures_ += what;
        }
    }
    void note(const std::string& s) {
        if (!out_.detail.empty()) out_.detail += "; ";
        out_.detail += s;
    }
    void sign(const std::string& s) { out_.signature += s + "|"; }
    Outcome finish() {
        if (!out_.pass) out_.detail = "FAILED: " + failures_ + (out_.detail.empty() ? "" : " / " + out_.detail);
        return out_;
    }

private:
    Outcome out_;
    std::string failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string str(std::size_t n) { return std::to_string(n); }

std::string secs_str(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

// Brackets of every member pair are zero as polynomials, and the oracle agrees pointwise.
std::size_t zero_pairs(const LieAlgebraData& L, const ShiftFamily& F, long bound, Check& c) {
    const auto rep = certify_commutative(L, F);
    const auto polys = F.polys();
    for (std::uint64_t t = 0; t < 3; ++t) {
        const PointQ at = random_point(L.dim(), bound, 17, t);
        for (std::size_t a = 0; a < polys.size(); ++a)
            for (std::size_t b = a + 1; b < polys.size(); ++b)
                c.require(oracle::bracket_at(L, polys[a], polys[b], at) == 0, "oracle bracket nonzero");
    }
    return rep.nonzero.empty() ? rep.pairs_checked : 0;
}

// 1: shift families commute.
Outcome criterion1(long bound) {
    Check c;
    const auto sl2 = fixtures::sl2();
    const auto F2 = build_family(sl2, classical_casimirs(ClassicalFamily::sl, 2), PointQ{1, 0, 0});
    const std::size_t z2 = zero_pairs(sl2, F2, bound, c);
    c.require(z2 == 1, "sl2: expected 1 zero pair, got " + str(z2));

    const auto t0 = std::chrono::steady_clock::now();
    const auto sl3 = fixtures::sl3();
    const auto p3 = estimate_index(sl3, 20, 0, bound);
    const PointQ xi = sample_regular_point(sl3, p3, 0, bound);
    const auto F3 = build_family(sl3, classical_casimirs(ClassicalFamily::sl, 3), xi);
    const std::size_t z3 = zero_pairs(sl3, F3, bound, c);
    const double secs = seconds_since(t0);
    c.require(z3 == 10, "sl3: expected 10 zero pairs, got " + str(z3));
    c.require(secs < 10, "sl3 run took " + secs_str(secs));
    c.note("sl2 " + str(z2) + "/1 zero, sl3 " + str(z3) + "/10 zero, sl3 " + secs_str(secs));
    c.sign("z2=" + str(z2) + " z3=" + str(z3));
    return c.finish();
}

// 2: sl3 plane, compl ranks and degree arithmetic.
Outcome criterion2(long bound) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto L = fixtures::sl3();
    const auto C = classical_casimirs(ClassicalFamily::sl, 3);
    const auto p = estimate_index(L, 20, 0, bound);
    const auto deg = degree_profile(C, p);
    c.require(C.degrees() == std::vector<int>{2, 3}, "Casimir degrees are not {2, 3}");
    c.require(deg.verdict == DegreeVerdict::Exact && deg.sum == 5 && deg.b == 5, "degree profile is not 5 = b = 5");
    const auto codim2 = certify_codim2(L, p, 0);
    c.require(codim2.certified(), "codim-2 not certified");
    const PointQ xi = sample_regular_point(L, p, 0, bound);
    const auto s = find_regular_plane(L, p, xi, 5, 0, bound);
    c.require(s.plane.has_value() && s.attempts <= 5, "no certified plane in 5 attempts");
    std::size_t rank5 = 0;
    if (s.plane) {
        const auto r = verify_compl(L, C, p, codim2, *s.plane, 20, 0, bound);
        for (const auto& pr : r.pairs) {
            const auto F = build_family(L, C, pr.xi);
            std::vector<std::vector<mpq_class>> grads;
            for (const auto& f : F.polys()) grads.push_back(oracle::gradient(f, pr.eta));
            const bool ok = pr.rank == 5 && oracle::rank(grads) == 5;
            rank5 += ok ? 1 : 0;
        }
    }
    const double secs = seconds_since(t0);
    c.require(rank5 >= 20, "only " + str(rank5) + " pairs of rank 5");
    c.require(secs < 30, "took " + secs_str(secs));
    c.note(deg.arithmetic + ", plane in " + str(s.attempts) + " attempt(s), " + str(rank5) + " pairs rank 5, " +
           secs_str(secs));
    c.sign(deg.arithmetic + " plane=" + std::to_string(s.plane.has_value()) + " rank5=" + str(rank5));
    return c.finish();
}

// 3: rank-regularity and differential independence agree.
Outcome criterion3(long bound) {
    Check c;
    std::size_t checked = 0, disagree = 0, singular = 0;
    for (int which = 0; which < 2; ++which) {
        const auto L = which == 0 ? fixtures::sl2() : fixtures::sl3();
        const auto C = classical_casimirs(ClassicalFamily::sl, which == 0 ? 2 : 3);
        const auto p = estimate_index(L, 20, 0, bound);
        std::vector<PointQ> pts{PointQ(L.dim())};
        // diag(1,1,-2) under the trace pairing
        if (which == 1) pts.push_back(PointQ{0, 0, 0, 0, 3, 0, 0, 0});
        for (std::uint64_t t = 0; t < 100; ++t) pts.push_back(random_point(L.dim(), bound, 3, t));
        for (const auto& xi : pts) {
            const auto k = kostant_criterion(L, C, p, xi);
            ++checked;
            disagree += k.agree() ? 0 : 1;
            singular += k.regular_by_rank ? 0 : 1;
        }
    }
    c.require(disagree == 0, str(disagree) + " disagreements");
    c.require(checked == 2 * 101 + 1, "wrong number of points");
    c.note(str(checked) + " points, " + str(disagree) + " disagreements, " + str(singular) + " singular");
    c.sign("checked=" + str(checked) + " disagree=" + str(disagree));
    return c.finish();
}

// 4: hand-derived sl2 values.
//
// C = x_h^2 + 4 x_e x_f, xi = (1,0,0):
//   C(mu + a xi) = mu_h^2 + 4 (mu_e + a) mu_f = C(mu) + a * 4 mu_f
//   so F_xi = {x_h^2 + 4 x_e x_f, 4 x_f}.
// K_xi[i][j] = sum_k c_ij^k xi_k with [e,h] = -2e, [e,f] = h, [h,f] = -2f:
//   K[e][h] = -2 xi_e = -2, K[e][f] = xi_h = 0, K[h][f] = -2 xi_f = 0, rank 2.
// At eta = (0,1,0): grad C = (4 eta_f, 2 eta_h, 4 eta_e) = (0,2,0), grad 4x_f = (0,0,4), rank 2.
Outcome criterion4(long) {
    Check c;
    const auto L = fixtures::sl2();
    const auto F = build_family(L, classical_casimirs(ClassicalFamily::sl, 2), PointQ{1, 0, 0});
    const MPoly hand_C = var(3, 1) * var(3, 1) + Rat(4) * var(3, 0) * var(3, 2);
    const MPoly hand_shift = Rat(4) * var(3, 2);
    c.require(F.polys() == std::vector<MPoly>{hand_C, hand_shift}, "family differs from {x_h^2 + 4x_e x_f, 4x_f}");
    const MatQ hand_K = MatQ::from_rows({{0, -2, 0}, {2, 0, 0}, {0, 0, 0}});
    c.require(kirillov_matrix(L, PointQ{1, 0, 0}) == hand_K, "K_xi differs from the hand matrix");
    c.require(rank(hand_K) == 2 && oracle::rank(hand_K) == 2, "rank K_xi is not 2");
    const MatQ hand_grad = MatQ::from_rows({{0, 2, 0}, {0, 0, 4}});
    c.require(kernels::gradient_matrix(F.polys(), PointQ{0, 1, 0}) == hand_grad, "gradients at eta differ");
    const std::size_t jr = jacobian_rank(F, PointQ{0, 1, 0});
    c.require(jr == 2, "jacobian rank " + str(jr));
    c.note("F = {" + to_string(F.polys()[0], L.coordinate_names()) + ", " + to_string(F.polys()[1], L.coordinate_names()) +
           "}, rank K = 2, jacobian rank " + str(jr));
    c.sign("jr=" + str(jr));
    return c.finish();
}

// 5: codim certificates.
Outcome criterion5(long bound) {
    Check c;
    const std::vector<std::pair<std::string, LieAlgebraData>> good{
        {"sl2", fixtures::sl2()}, {"sl3", fixtures::sl3()}, {"sl2<1>", make_takiff(fixtures::sl2(), 1)}, {"(sl2,so2)", fixtures::sl2_so2()}};
    for (const auto& [name, L] : good) {
        const auto r = certify_codim2(L, estimate_index(L, 20, 0, bound), 0);
        c.require(r.certified(), name + " not certified");
        c.sign(name + "=" + std::to_string(r.certified()));
    }
    const auto v1 = make_vinberg({Rat(1)});
    const auto r1 = certify_codim2(v1, estimate_index(v1, 20, 0, bound), 0);
    const bool divisible = !r1.minors.gcd.is_zero() && try_divide(r1.minors.gcd, var(2, 1)).has_value();
    c.require(!r1.certified() && divisible, "Vinberg (1) not refused with a gcd divisible by x_v");
    const auto v12 = make_vinberg({Rat(1), Rat(2)});
    const std::size_t ind12 = estimate_index(v12, 20, 0, bound).ind;
    c.require(ind12 == v12.dim() - 2 && ind12 == 1, "Vinberg (1,2) index " + str(ind12));
    c.note("4 certified; Vinberg (1) gcd " + to_string(r1.minors.gcd, v1.coordinate_names()) + "; Vinberg (1,2) ind " + str(ind12));
    c.sign("v1=" + std::to_string(r1.certified()) + to_string(r1.minors.gcd, v1.coordinate_names()) + " ind12=" + str(ind12));
    return c.finish();
}

// 6: Takiff sl2<1>.
Outcome criterion6(long bound) {
    Check c;
    const auto sl2 = fixtures::sl2();
    const auto T = make_takiff(sl2, 1);
    const auto p = estimate_index(T, 20, 0, bound);
    c.require(T.dim() == 6 && p.ind == 2 && p.b() == std::optional<std::size_t>(4), "dim/ind/b not 6/2/4");
    const auto lifts = takiff_lift(sl2, fixtures::sl2_casimir(), 1);
    std::size_t central = 0;
    for (const auto& f : lifts) central += is_casimir(T, f).is_casimir ? 1 : 0;
    c.require(lifts.size() == 2 && central == 2, "lifts are not two Casimirs");
    const auto C = verify_casimirs(T, lifts, 0, bound);
    const auto deg = degree_profile(C, p);
    c.require(deg.verdict == DegreeVerdict::Exact, "degree profile " + verdict_name(deg.verdict));
    const auto codim2 = certify_codim2(T, p, 0);
    const PointQ xi = sample_regular_point(T, p, 0, bound);
    const auto b = verify_bols(T, C, p, codim2, xi, 20, 0, bound);
    c.require(b.max_rank == 4, "bols rank " + str(b.max_rank));
    c.note("dim 6, ind " + str(p.ind) + ", b 4, " + str(central) + " central lifts, " + deg.arithmetic + ", bols rank " +
           str(b.max_rank));
    c.sign("ind=" + str(p.ind) + " central=" + str(central) + " " + deg.arithmetic + " bols=" + str(b.max_rank));
    return c.finish();
}

// 7: maximal dimension without maximality on the (sl2, so2) contraction.
Outcome criterion7(long bound) {
    Check c;
    const auto q = fixtures::sl2_so2();
    const PointQ xi{0, 1, 0};
    const auto C = verify_casimirs(q, {fixtures::sl2_so2_casimir()}, 0, bound);
    const auto F = build_family(q, C, xi);
    const MPoly xp = var(3, 1), xr = var(3, 2);
    c.require(F.polys() == std::vector<MPoly>{xp * xp + xr * xr, Rat(2) * xp}, "family differs from <x_p^2 + x_r^2, 2x_p>");
    const auto p = estimate_index(q, 20, 0, bound);
    const auto b = verify_bols(q, C, p, certify_codim2(q, p, 0), xi, 20, 0, bound);
    c.require(b.max_rank == 2 && b.b == 2, "rank " + str(b.max_rank) + " vs b " + str(b.b));
    std::size_t zeros = 0;
    for (const auto& f : F.polys()) zeros += bracket(q, xr, f).is_zero() ? 1 : 0;
    c.require(zeros == F.size(), "x_r fails to commute with some member");
    c.require(nonmembership_linear(F, xr), "x_r lies in the degree-1 span");
    PipelineOptions opts;
    opts.bound = bound;
    const auto run = run_pipeline(q, {fixtures::sl2_so2_casimir()}, xi, opts);
    const bool witnessed = run.verdict == Verdict::Pass && run.witnesses.contains("non_maximality") &&
                           run.witnesses["non_maximality"]["linear_form"] == "x_r";
    c.require(witnessed, "pipeline did not emit the x_r witness");
    c.note("rank " + str(b.max_rank) + " = b, {x_r, f} = 0 for " + str(zeros) + "/" + str(F.size()) + " members, witness x_r");
    c.sign("rank=" + str(b.max_rank) + " zeros=" + str(zeros) + " witness=" + std::to_string(witnessed));
    return c.finish();
}

// 8: pencil suite.
Outcome criterion8(long bound) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    auto P = SkewPencil::from_kirillov(fixtures::sl2(), PointQ{0, 0, 1}, PointQ{1, 0, 0});
    const auto rep = analyze(P);
    const SubspaceQ ef = SubspaceQ::span(3, {VecQ{1, 0, 0}, VecQ{0, 0, 1}});
    c.require(rep.L == ef && rep.Ltilde == ef, "sl2 pencil: L or L~ is not span{e_e, e_f}");
    bool isotropic = true;
    for (const MatQ* M : {&P.A(), &P.B()})
        for (const auto& u : ef.basis())
            for (const auto& w : ef.basis()) isotropic = isotropic && dot(w, M->apply(u)).is_zero();
    c.require(isotropic && rep.com1.dim_l == rep.com1.maximal_isotropic_dim, "sl2 pencil: L not maximal isotropic");

    const auto [A, B] = fixtures::block_pencil();
    SkewPencil Q(A, B);
    const auto brep = analyze(Q);
    std::vector<Rat> distinct;
    c.require(brep.phi.has_value(), "block pencil: no Phi");
    if (brep.phi) {
        for (const auto& l : brep.phi->rational_eigenvalues)
            if (distinct.empty() || distinct.back() != l) distinct.push_back(l);
        // Phi is taken against the regular member A_choice; B_choice − λ·A_choice must drop rank
        const MatQ Ac = Q.member(brep.phi->a_choice);
        const MatQ Bc = Q.member(brep.phi->b_choice);
        for (const auto& l : distinct)
            c.require(oracle::rank(combine(Rat(1), Bc, -l, Ac)) < 4, "B - " + l.str() + "A is regular");
    }
    c.require(distinct == std::vector<Rat>{Rat(0), Rat(1)}, "block pencil: eigenvalues not {0, 1}");

    CounterRng rng(8, 0);
    std::size_t held = 0, applicable = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = t % 2 == 0 ? 5 : 7;
        MatQ X(n, n), Y(n, n);
        for (MatQ* M : {&X, &Y})
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    (*M)(i, j) = Rat(rng.uniform(-bound, bound));
                    (*M)(j, i) = -(*M)(i, j);
                }
        SkewPencil R(X, Y, static_cast<std::uint64_t>(t));
        const auto com1 = R.verify_com1();
        if (!com1.precondition) continue;
        ++applicable;
        held += !com1.falsified && com1.l_equals_ltilde && com1.isotropic && com1.dim_l == com1.maximal_isotropic_dim ? 1 : 0;
    }
    c.require(held == applicable, str(applicable - held) + " random pencils violate the all-regular consequences");
    const double secs = seconds_since(t0);
    c.require(secs < 60, "took " + secs_str(secs));
    c.note("sl2 L = L~ = span{e_e, e_f}; block eigenvalues {0, 1} singular; " + str(held) + "/" + str(applicable) +
           " applicable random pencils hold; " + secs_str(secs));
    c.sign("held=" + std::to_string(held == applicable) + " eig=" + str(distinct.size()));
    return c.finish();
}

// 9: index of sl2 ⋉ (k²)^4 against dim V − dim g.
Outcome criterion9(long bound) {
    Check c;
    const auto rho = fixtures::sl2_four_copies();
    const auto q = make_semidirect(fixtures::sl2(), rho);
    const std::size_t orbit = max_module_orbit_dim(rho, 20, 0, bound);
    const std::size_t ind = estimate_index(q, 20, 0, bound).ind;
    if (orbit == 3) {
        c.require(ind == 8 - 3, "estimated index " + str(ind) + " differs from 8 - 3");
        c.note("generic orbit dim 3 = dim g, estimated ind " + str(ind) + " = 8 - 3");
    } else {
        c.note("generic orbit dim " + str(orbit) + " < dim g: formula not asserted, estimated ind " + str(ind));
    }
    // a representation where the assumption fails must be reported, not asserted
    const auto trivial = std::vector<MatQ>(3, MatQ(2, 2));
    const std::size_t torbit = max_module_orbit_dim(trivial, 20, 0, bound);
    c.require(torbit == 0, "trivial representation has nonzero orbits");
    c.note("trivial k^2: orbit dim " + str(torbit) + " < 3, formula reported as not applicable");
    c.sign("orbit=" + str(orbit) + " ind=" + str(ind) + " torbit=" + str(torbit));
    return c.finish();
}

using Criterion = std::function<Outcome(long)>;

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{criterion1, criterion2, criterion3, criterion4, criterion5,
                                            criterion6, criterion7, criterion8, criterion9};
    return all;
}

Outcome guarded(const Criterion& f, long bound) {
    try {
        return f(bound);
    } catch (const FalsificationEvent& e) {
        return {false, std::string("FALSIFIED: ") + e.what(), "falsified"};
    } catch (const std::exception& e) {
        return {false, std::string("ERROR: ") + e.what(), "error"};
    }
}

void print(std::size_t k, const Outcome& o, double secs) {
    std::printf("criterion %2zu: %s  (%.2f s)  %s\n", k, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
}

} // namespace

int main() {
    int failures = 0;
    std::vector<Outcome> base;
    for (std::size_t k = 0; k < criteria().size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        base.push_back(guarded(criteria()[k], 9));
        print(k + 1, base.back(), seconds_since(t0));
        failures += base.back().pass ? 0 : 1;
    }

    // 10: same verdicts with sample height 99
    const auto t0 = std::chrono::steady_clock::now();
    Outcome ten;
    std::size_t same = 0;
    std::string diffs;
    for (std::size_t k = 0; k < criteria().size(); ++k) {
        const Outcome o = guarded(criteria()[k], 99);
        if (o.pass == base[k].pass && o.signature == base[k].signature) {
            ++same;
        } else {
            diffs += " " + std::to_string(k + 1) + " [" + base[k].signature + " vs " + o.signature + "]";
        }
    }
    ten.pass = same == criteria().size();
    ten.detail = std::to_string(same) + "/9 criteria give identical verdicts at B = 99" + (diffs.empty() ? "" : "; differ:" + diffs);
    print(10, ten, seconds_since(t0));
    failures += ten.pass ? 0 : 1;
    return failures;
}
