#include "argshift/mpoly.hpp"

#include "argshift/errors.hpp"

#include <algorithm>
#include <sstream>

namespace argshift {

std::uint32_t total_degree(const Exponents& e) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

PointQ combine(const Rat& a, const PointQ& p, const Rat& b, const PointQ& q) {
    if (p.size() != q.size()) throw DimensionMismatch("point combination: length mismatch");
    PointQ out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = a * p[i] + b * q[i];
    return out;
}

// --- MPoly ------------------------------------------------------------------

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionMismatch("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), Rat(1));
}

MPoly MPoly::monomial(std::size_t nvars, Exponents exps, const Rat& c) {
    if (exps.size() != nvars) throw DimensionMismatch("exponent vector length differs from nvars");
    MPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

MPoly MPoly::linear_form(std::span<const Rat> coeffs) {
    MPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), coeffs[i]);
    }
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
}

Rat MPoly::constant_term() const { return coeff(Exponents(nvars_, 0)); }

Rat MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat() : it->second;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != nvars_) throw DimensionMismatch("exponent vector length differs from nvars");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::check_same(const MPoly& o, const char* op) const {
    if (nvars_ != o.nvars_) {
        throw DimensionMismatch(std::string("polynomial ") + op + ": variable counts differ (" +
                                std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + ")");
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same(o, "sum");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same(o, "difference");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same(b, "product");
    MPoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly pow(const MPoly& f, unsigned exponent) {
    MPoly result = MPoly::constant(f.nvars(), Rat(1));
    MPoly base = f;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

MPoly partial(const MPoly& f, std::size_t i) {
    if (i >= f.nvars()) throw DimensionMismatch("partial: variable index out of range");
    MPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponents d = e;
        --d[i];
        r.add_term(d, c * Rat(static_cast<long>(e[i])));
    }
    return r;
}

Rat evaluate(const MPoly& f, const PointQ& p) {
    if (p.size() != f.nvars()) throw DimensionMismatch("evaluate: point length differs from nvars");
    Rat acc;
    for (const auto& [e, c] : f.terms()) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i) {
            if (e[i] != 0) t *= pow(p[i], e[i]);
        }
        acc += t;
    }
    return acc;
}

VecQ gradient_at(const MPoly& f, const PointQ& p) {
    if (p.size() != f.nvars()) throw DimensionMismatch("gradient: point length differs from nvars");
    VecQ g(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) g[i] = evaluate(partial(f, i), p);
    return g;
}

MPoly differential_at(const MPoly& f, const PointQ& p) {
    const VecQ g = gradient_at(f, p);
    return MPoly::linear_form(g);
}

std::vector<MPoly> param_expand(const MPoly& f, const PointQ& xi) {
    if (f.is_zero()) throw PreconditionFailed("param_expand: zero polynomial has no degree");
    if (xi.size() != f.nvars()) throw DimensionMismatch("param_expand: point length differs from nvars");
    const int d = f.degree();
    std::vector<MPoly> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    out.push_back(f);
    MPoly current = f;
    for (int j = 1; j <= d; ++j) {
        MPoly next(f.nvars());
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            if (xi[i].is_zero()) continue;
            next += partial(current, i) * xi[i];
        }
        // (ξ·∇)ʲ f / j! built incrementally: divide by j at every step
        next *= Rat(1, j);
        current = std::move(next);
        out.push_back(current);
    }
    return out;
}

std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw Error("polynomial division by zero");
    if (f.nvars() != g.nvars()) throw DimensionMismatch("division: variable counts differ");
    MPoly q(f.nvars());
    MPoly r = f;
    const Exponents& lg = g.leading_exponents();
    const Rat& lc = g.leading_coeff();
    Exponents e(f.nvars());
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (lr[i] < lg[i]) return std::nullopt;
            e[i] = lr[i] - lg[i];
        }
        const MPoly t = MPoly::monomial(f.nvars(), e, r.leading_coeff() / lc);
        q += t;
        r -= t * g;
    }
    return q;
}

MPoly divide_exact(const MPoly& f, const MPoly& g) {
    auto q = try_divide(f, g);
    if (!q) throw Error("polynomial division is not exact");
    return std::move(*q);
}

MPoly monic(const MPoly& f) {
    if (f.is_zero()) return f;
    return f * (Rat(1) / f.leading_coeff());
}

MPoly primitive(const MPoly& f) {
    if (f.is_zero()) return f;
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& [e, c] : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    }
    Rat scale(mpq_class(den_lcm, num_gcd));
    if (f.leading_coeff().sign() < 0) scale = -scale;
    return f * scale;
}

std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var) {
    if (var >= f.nvars()) throw DimensionMismatch("coefficients_in: variable index out of range");
    std::vector<MPoly> out;
    for (const auto& [e, c] : f.terms()) {
        const std::size_t k = e[var];
        if (out.size() <= k) out.resize(k + 1, MPoly(f.nvars()));
        Exponents rest = e;
        rest[var] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

MPoly from_coefficients(const std::vector<MPoly>& coeffs, std::size_t var, std::size_t nvars) {
    MPoly f(nvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exponents x = e;
            x[var] += static_cast<std::uint32_t>(k);
            f.add_term(x, c);
        }
    }
    return f;
}

int degree_in(const MPoly& f, std::size_t var) {
    int d = -1;
    for (const auto& [e, c] : f.terms()) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

std::vector<bool> support(const MPoly& f) {
    std::vector<bool> s(f.nvars(), false);
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) s[i] = true;
    return s;
}

MPoly specialize(const MPoly& f, std::size_t var, const Rat& c) {
    MPoly r(f.nvars());
    for (const auto& [e, coef] : f.terms()) {
        Exponents x = e;
        x[var] = 0;
        r.add_term(x, coef * pow(c, e[var]));
    }
    return r;
}

std::string to_string(const MPoly& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    auto name = [&](std::size_t i) {
        return i < names.size() ? names[i] : "x" + std::to_string(i);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const bool constant = total_degree(e) == 0;
        Rat mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (constant || !mag.is_one()) {
            os << mag.str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << name(i);
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

} // namespace argshift
