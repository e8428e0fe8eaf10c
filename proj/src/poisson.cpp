#include "argshift/poisson.hpp"

#include "argshift/errors.hpp"
#include "argshift/kernels.hpp"
#include "argshift/poly_matrix.hpp"
#include "argshift/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace argshift {

namespace {

void check_nvars(const LieAlgebraData& L, const MPoly& f, const char* op) {
    if (f.nvars() != L.dim()) {
        throw DimensionMismatch(std::string(op) + ": polynomial has " + std::to_string(f.nvars()) +
                                " variables, algebra has dimension " + std::to_string(L.dim()));
    }
}

std::vector<MPoly> partials_of(const MPoly& f) {
    std::vector<MPoly> d;
    d.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) d.push_back(partial(f, i));
    return d;
}

// Σ_{i<j} w_ij (∂ᵢf ∂ⱼg − ∂ⱼf ∂ᵢg) where w_ij is produced from [b_i, b_j].
template <typename Weight>
MPoly bracket_impl(const LieAlgebraData& L, const MPoly& f, const MPoly& g, Weight&& weight) {
    MPoly out(L.dim());
    if (f.is_constant() || g.is_constant()) return out;
    const auto df = partials_of(f);
    const auto dg = partials_of(g);
    for (const auto& [key, coeffs] : L.upper_table()) {
        const auto [i, j] = key;
        if ((df[i].is_zero() || dg[j].is_zero()) && (df[j].is_zero() || dg[i].is_zero())) continue;
        const MPoly cross = df[i] * dg[j] - df[j] * dg[i];
        if (cross.is_zero()) continue;
        out += weight(coeffs) * cross;
    }
    return out;
}

} // namespace

MPoly bracket(const LieAlgebraData& L, const MPoly& f, const MPoly& g) {
    check_nvars(L, f, "bracket");
    check_nvars(L, g, "bracket");
    const std::size_t n = L.dim();
    return bracket_impl(L, f, g, [n](const BasisCombination& c) {
        MPoly w(n);
        for (const auto& [k, ck] : c) w += MPoly::variable(n, k) * ck;
        return w;
    });
}

MPoly frozen_bracket(const LieAlgebraData& L, const MPoly& f, const MPoly& g, const PointQ& xi) {
    check_nvars(L, f, "frozen_bracket");
    check_nvars(L, g, "frozen_bracket");
    if (xi.size() != L.dim()) throw DimensionMismatch("frozen_bracket: point length differs from dim");
    const std::size_t n = L.dim();
    return bracket_impl(L, f, g, [&](const BasisCombination& c) {
        Rat w;
        for (const auto& [k, ck] : c) w += ck * xi[k];
        return MPoly::constant(n, w);
    });
}

MPoly bracket_with_coordinate(const LieAlgebraData& L, std::size_t i, const MPoly& f) {
    check_nvars(L, f, "bracket_with_coordinate");
    const std::size_t n = L.dim();
    MPoly out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const auto c = L.bracket(i, j);
        if (c.empty()) continue;
        const MPoly dj = partial(f, j);
        if (dj.is_zero()) continue;
        MPoly w(n);
        for (const auto& [k, ck] : c) w += MPoly::variable(n, k) * ck;
        out += w * dj;
    }
    return out;
}

MatQ kirillov_matrix(const LieAlgebraData& L, const PointQ& xi) {
    if (xi.size() != L.dim()) throw DimensionMismatch("kirillov: point length differs from dim");
    MatQ K(L.dim(), L.dim());
    for (const auto& [key, coeffs] : L.upper_table()) {
        Rat v;
        for (const auto& [k, c] : coeffs) v += c * xi[k];
        K(key.first, key.second) = v;
        K(key.second, key.first) = -v;
    }
    return K;
}

KirillovForm kirillov(const LieAlgebraData& L, const PointQ& xi) { return {xi, kirillov_matrix(L, xi)}; }

AlgebraProfile estimate_index(const LieAlgebraData& L, std::size_t trials, std::uint64_t seed, long bound) {
    if (trials == 0) throw PreconditionFailed("estimate_index: at least one trial required");
    std::vector<PointQ> points;
    points.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) points.push_back(random_point(L.dim(), bound, seed, t));
    const auto ranks = kernels::kirillov_ranks(L, points);
    const auto best = std::max_element(ranks.begin(), ranks.end());
    AlgebraProfile p;
    p.dim = L.dim();
    p.max_rank = *best;
    p.ind = L.dim() - *best;
    p.source = IndexSource::Estimated;
    p.witness = points[static_cast<std::size_t>(best - ranks.begin())];
    p.seed = seed;
    p.trials = trials;
    p.bound = bound;
    return p;
}

CasimirCheck is_casimir(const LieAlgebraData& L, const MPoly& f) {
    check_nvars(L, f, "is_casimir");
    CasimirCheck out;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        MPoly b = bracket_with_coordinate(L, i, f);
        if (!b.is_zero()) {
            out.is_casimir = false;
            out.witness_index = i;
            out.witness_bracket = std::move(b);
            return out;
        }
    }
    return out;
}

std::size_t CasimirSet::sum_degrees() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0},
                           [](std::size_t acc, int d) { return acc + static_cast<std::size_t>(d); });
}

CasimirSet verify_casimirs(const LieAlgebraData& L, std::vector<MPoly> generators, std::uint64_t seed, long bound) {
    CasimirSet set;
    set.nvars_ = L.dim();
    const auto names = L.coordinate_names();
    for (std::size_t a = 0; a < generators.size(); ++a) {
        const MPoly& f = generators[a];
        check_nvars(L, f, "verify_casimirs");
        if (f.degree() < 1) throw PreconditionFailed("generator " + std::to_string(a) + " is constant");
        const auto chk = is_casimir(L, f);
        if (!chk.is_casimir) {
            throw PreconditionFailed("generator " + std::to_string(a) + " is not central: {" +
                                     names[*chk.witness_index] + ", f} = " + to_string(chk.witness_bracket, names));
        }
        set.degrees_.push_back(f.degree());
        set.homogeneous_ = set.homogeneous_ && f.is_homogeneous();
    }
    set.witness_ = PointQ(L.dim());
    if (!generators.empty()) {
        bool found = false;
        for (std::uint64_t t = 0; t < 64 && !found; ++t) {
            PointQ p = random_point(L.dim(), bound, seed, t);
            if (rank(kernels::gradient_matrix(generators, p)) == generators.size()) {
                set.witness_ = std::move(p);
                found = true;
            }
        }
        if (!found) throw PreconditionFailed("generators look algebraically dependent: no point with full gradient rank");
    }
    set.gens_ = std::move(generators);
    return set;
}

namespace {

PolyMatrix multiply(const PolyMatrix& A, const PolyMatrix& B) {
    PolyMatrix C(A.rows(), B.cols(), A.nvars());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (A(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                if (!B(k, j).is_zero()) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

} // namespace

CasimirSet classical_casimirs(ClassicalFamily family, std::size_t n) {
    if (family == ClassicalFamily::so) throw PreconditionFailed("classical_casimirs: only gl and sl are supported");
    const LieAlgebraData L = make_classical(family, n);
    const auto& basis = *L.realization();
    const std::size_t d = basis.size();
    MatQ gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram(i, j) = trace(basis[i] * basis[j]);
    const auto gram_inv = inverse(gram);
    if (!gram_inv) throw Error("trace form is degenerate on the chosen basis");

    // generic matrix Σ xᵢ bᵢ*, bᵢ* = Σⱼ (G⁻¹)ᵢⱼ bⱼ
    PolyMatrix M(n, n, d);
    for (std::size_t i = 0; i < d; ++i) {
        MatQ dual(n, n);
        for (std::size_t j = 0; j < d; ++j)
            if (!(*gram_inv)(i, j).is_zero()) dual += basis[j] * (*gram_inv)(i, j);
        const MPoly xi = MPoly::variable(d, i);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!dual(r, c).is_zero()) M(r, c) += xi * dual(r, c);
    }

    // Faddeev–LeVerrier: det(tI − M) = Σ c_k t^k, c_{n−k} homogeneous of degree k
    std::vector<MPoly> generators;
    PolyMatrix Mk(n, n, d);
    MPoly c_prev = MPoly::constant(d, Rat(1));
    for (std::size_t k = 1; k <= n; ++k) {
        Mk = multiply(M, Mk);
        for (std::size_t r = 0; r < n; ++r) Mk(r, r) += c_prev;
        const PolyMatrix AM = multiply(M, Mk);
        MPoly tr(d);
        for (std::size_t r = 0; r < n; ++r) tr += AM(r, r);
        MPoly ck = tr * Rat(-1, static_cast<long>(k));
        if (!ck.is_zero()) generators.push_back(primitive(ck));
        c_prev = std::move(ck);
    }
    return verify_casimirs(L, std::move(generators));
}

std::vector<MPoly> takiff_lift(const LieAlgebraData& base, const MPoly& f, std::size_t n) {
    check_nvars(base, f, "takiff_lift");
    const auto in = is_casimir(base, f);
    if (!in.is_casimir) throw PreconditionFailed("takiff_lift: input is not a Casimir of the base algebra");
    const std::size_t d = base.dim();
    const std::size_t lifted = (n + 1) * d;
    const std::size_t t_var = lifted; // formal parameter t is the last variable
    const std::size_t nv = lifted + 1;

    // x_i ↦ Σ_l t^{n−l} x_{l·d+i}
    std::vector<MPoly> subs;
    for (std::size_t i = 0; i < d; ++i) {
        MPoly s(nv);
        for (std::size_t l = 0; l <= n; ++l) {
            Exponents e(nv, 0);
            e[l * d + i] = 1;
            e[t_var] = static_cast<std::uint32_t>(n - l);
            s.add_term(e, Rat(1));
        }
        subs.push_back(std::move(s));
    }
    MPoly composed(nv);
    for (const auto& [e, c] : f.terms()) {
        MPoly term = MPoly::constant(nv, c);
        for (std::size_t i = 0; i < d; ++i)
            if (e[i] != 0) term = term * pow(subs[i], e[i]);
        composed += term;
    }
    const auto by_t = coefficients_in(composed, t_var);
    const LieAlgebraData target = make_takiff(base, n);
    std::vector<MPoly> out;
    for (std::size_t k = 0; k <= n; ++k) {
        MPoly g(lifted);
        if (k < by_t.size()) {
            for (const auto& [e, c] : by_t[k].terms()) g.add_term(Exponents(e.begin(), e.end() - 1), c);
        }
        const auto chk = is_casimir(target, g);
        if (!chk.is_casimir) {
            throw PreconditionFailed("takiff_lift: coefficient of t^" + std::to_string(k) +
                                     " is not central in the Takiff algebra");
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::size_t max_module_orbit_dim(const std::vector<MatQ>& rho, std::size_t trials, std::uint64_t seed, long bound) {
    if (rho.empty()) return 0;
    const std::size_t dv = rho.front().rows();
    std::size_t best = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const PointQ zeta = random_point(dv, bound, seed, t);
        MatQ orbit(rho.size(), dv);
        for (std::size_t i = 0; i < rho.size(); ++i)
            for (std::size_t v = 0; v < dv; ++v) {
                Rat s;
                for (std::size_t c = 0; c < dv; ++c) s += zeta[c] * rho[i](c, v);
                orbit(i, v) = -s;
            }
        best = std::max(best, rank(orbit));
    }
    return best;
}

} // namespace argshift
