#include "argshift/poly_gcd.hpp"

#include "argshift/errors.hpp"
#include "argshift/sampling.hpp"

#include <utility>

namespace argshift {

namespace {

void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// remainder of a by b over Q (b nonzero, trimmed)
std::vector<Rat> urem(std::vector<Rat> a, const std::vector<Rat>& b) {
    trim(a);
    const std::size_t nb = b.size();
    const Rat& lb = b.back();
    while (a.size() >= nb) {
        const Rat q = a.back() / lb;
        const std::size_t shift = a.size() - nb;
        for (std::size_t i = 0; i < nb; ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

MPoly constant_one(std::size_t nvars) { return MPoly::constant(nvars, Rat(1)); }

MPoly leading_coeff_in(const MPoly& f, std::size_t var) { return coefficients_in(f, var).back(); }

MPoly times_var_power(const MPoly& f, std::size_t var, std::uint32_t k) {
    if (k == 0) return f;
    Exponents e(f.nvars(), 0);
    e[var] = k;
    return f * MPoly::monomial(f.nvars(), std::move(e), Rat(1));
}

// lc(B)^(deg A − deg B + 1) · A  mod  B, all in Q[others][x_var]
MPoly pseudo_remainder(const MPoly& A, const MPoly& B, std::size_t var) {
    const int n = degree_in(B, var);
    const int m = degree_in(A, var);
    const MPoly lcb = leading_coeff_in(B, var);
    int steps = m - n + 1;
    MPoly R = A;
    while (!R.is_zero() && degree_in(R, var) >= n) {
        const int dr = degree_in(R, var);
        const MPoly lcr = leading_coeff_in(R, var);
        R = lcb * R - times_var_power(lcr * B, var, static_cast<std::uint32_t>(dr - n));
        --steps;
    }
    for (; steps > 0; --steps) R = lcb * R;
    return R;
}

MPoly gcd_rec(const MPoly& f, const MPoly& g);

// gcd of the coefficients of f viewed as a polynomial in x_var
MPoly content_in(const MPoly& f, std::size_t var) {
    MPoly c(f.nvars());
    for (const auto& coef : coefficients_in(f, var)) {
        if (coef.is_zero()) continue;
        c = c.is_zero() ? coef : gcd_rec(c, coef);
        if (c.is_constant()) return constant_one(f.nvars());
    }
    return c;
}

// gcd of f, g that are primitive w.r.t. x_var and both involve x_var
MPoly subresultant_gcd(MPoly A, MPoly B, std::size_t var) {
    const std::size_t nv = A.nvars();
    if (degree_in(A, var) < degree_in(B, var)) std::swap(A, B);
    MPoly g = constant_one(nv);
    MPoly h = constant_one(nv);
    for (;;) {
        const int delta = degree_in(A, var) - degree_in(B, var);
        MPoly R = pseudo_remainder(A, B, var);
        if (R.is_zero()) break;
        if (degree_in(R, var) <= 0) return constant_one(nv);
        A = std::move(B);
        B = divide_exact(R, g * pow(h, static_cast<unsigned>(delta)));
        g = leading_coeff_in(A, var);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = divide_exact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
        }
    }
    return divide_exact(B, content_in(B, var));
}

MPoly gcd_rec(const MPoly& f, const MPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const std::size_t nv = f.nvars();
    if (f.is_constant() || g.is_constant()) return constant_one(nv);
    const auto sf = support(f);
    const auto sg = support(g);
    std::size_t var = nv;
    for (std::size_t v = 0; v < nv; ++v) {
        if (sf[v] && sg[v]) {
            var = v;
            break;
        }
    }
    // a common factor only involves shared variables
    if (var == nv) return constant_one(nv);
    const MPoly cf = content_in(f, var);
    const MPoly cg = content_in(g, var);
    const MPoly c = gcd_rec(cf, cg);
    const MPoly pf = divide_exact(f, cf);
    const MPoly pg = divide_exact(g, cg);
    return c * subresultant_gcd(pf, pg, var);
}

} // namespace

std::vector<Rat> univariate_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        std::vector<Rat> r = urem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const Rat lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

bool gcd_certainly_constant(const MPoly& f, const MPoly& g, std::uint64_t seed, int tries_per_var) {
    if (f.is_zero() || g.is_zero()) return false;
    if (f.is_constant() || g.is_constant()) return true;
    const std::size_t nv = f.nvars();
    const auto sf = support(f);
    const auto sg = support(g);
    for (std::size_t v = 0; v < nv; ++v) {
        if (!sf[v] || !sg[v]) continue;
        const auto cf = coefficients_in(f, v);
        const auto cg = coefficients_in(g, v);
        bool settled = false;
        for (int t = 0; t < tries_per_var && !settled; ++t) {
            const PointQ p = random_point(nv, 1000, seed, (static_cast<std::uint64_t>(v) << 8U) + static_cast<std::uint64_t>(t));
            if (evaluate(cf.back(), p).is_zero()) continue;
            std::vector<Rat> uf(cf.size()), ug(cg.size());
            for (std::size_t k = 0; k < cf.size(); ++k) uf[k] = evaluate(cf[k], p);
            for (std::size_t k = 0; k < cg.size(); ++k) ug[k] = evaluate(cg[k], p);
            if (univariate_gcd(std::move(uf), std::move(ug)).size() == 1) settled = true;
        }
        if (!settled) return false;
    }
    return true;
}

MPoly gcd2(const MPoly& f, const MPoly& g) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch("gcd: variable counts differ");
    if (f.is_zero() && g.is_zero()) return f;
    if (gcd_certainly_constant(f, g)) return MPoly::constant(f.nvars(), Rat(1));
    return monic(gcd_rec(f, g));
}

MPoly poly_gcd(std::span<const MPoly> polys) {
    if (polys.empty()) throw PreconditionFailed("poly_gcd: empty input");
    GcdAccumulator acc(polys.front().nvars());
    for (const auto& p : polys) {
        if (acc.add(p)) break;
    }
    if (!acc.seen_nonzero()) throw PreconditionFailed("poly_gcd: all inputs are zero");
    return acc.value();
}

bool GcdAccumulator::add(const MPoly& p) {
    if (p.nvars() != acc_.nvars()) throw DimensionMismatch("gcd accumulator: variable counts differ");
    ++consumed_;
    if (p.is_zero()) return is_constant();
    acc_ = acc_.is_zero() ? monic(p) : gcd2(acc_, p);
    return is_constant();
}

} // namespace argshift
