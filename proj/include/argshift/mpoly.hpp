#ifndef ARGSHIFT_MPOLY_HPP
#define ARGSHIFT_MPOLY_HPP

#include "argshift/matrix.hpp"
#include "argshift/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace argshift {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order with x₀ > x₁ > …; "greater" sorts leading terms first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A point of q* (or of any coordinate space): exact rational coordinates.
struct PointQ {
    VecQ coords;

    PointQ() = default;
    explicit PointQ(std::size_t n) : coords(n) {}
    explicit PointQ(VecQ c) : coords(std::move(c)) {}
    PointQ(std::initializer_list<Rat> c) : coords(c) {}

    std::size_t size() const { return coords.size(); }
    const Rat& operator[](std::size_t i) const { return coords[i]; }
    Rat& operator[](std::size_t i) { return coords[i]; }
    bool is_zero() const { return argshift::is_zero(coords); }

    friend bool operator==(const PointQ&, const PointQ&) = default;
};

/// a·p + b·q coordinatewise.
PointQ combine(const Rat& a, const PointQ& p, const Rat& b, const PointQ& q);

/*
 * Sparse multivariate polynomial over Q in a fixed number of variables.
 * Terms are kept in a map ordered by GrlexGreater; zero coefficients are
 * never stored, so the zero polynomial has no terms.
 */
class MPoly {
public:
    using TermMap = std::map<Exponents, Rat, GrlexGreater>;

    MPoly() = default;
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rat& c);
    static MPoly variable(std::size_t nvars, std::size_t i);
    static MPoly monomial(std::size_t nvars, Exponents exps, const Rat& c);
    /// Σ coeffs[i]·xᵢ.
    static MPoly linear_form(std::span<const Rat> coeffs);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Maximal total degree; −1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Rat constant_term() const;
    Rat coeff(const Exponents& e) const;

    /// Leading term under grlex; precondition: nonzero.
    const Exponents& leading_exponents() const { return terms_.begin()->first; }
    const Rat& leading_coeff() const { return terms_.begin()->second; }

    void add_term(const Exponents& e, const Rat& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rat& s);
    MPoly operator-() const;

    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator*(MPoly a, const Rat& s) { a *= s; return a; }
    friend MPoly operator*(const Rat& s, MPoly a) { a *= s; return a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_same(const MPoly& o, const char* op) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

MPoly pow(const MPoly& f, unsigned exponent);

/// Formal partial derivative ∂f/∂xᵢ.
MPoly partial(const MPoly& f, std::size_t i);

/// Exact evaluation at a point.
Rat evaluate(const MPoly& f, const PointQ& p);

/// (∂f/∂x₀(p), …, ∂f/∂x_{n−1}(p)).
VecQ gradient_at(const MPoly& f, const PointQ& p);

/// The gradient at p as the linear form Σ (∂f/∂x_k)(p)·x_k.
MPoly differential_at(const MPoly& f, const PointQ& p);

/*
 * Coefficients of aʲ in f(μ + a·ξ), j = 0..deg f, as polynomials in μ.
 * Computed as (ξ·∇)ʲ f / j!. The first entry is f itself, the last is the
 * constant f(ξ). Throws PreconditionFailed for the zero polynomial.
 */
std::vector<MPoly> param_expand(const MPoly& f, const PointQ& xi);

/// Quotient f / g when g divides f exactly; nullopt otherwise. g must be nonzero.
std::optional<MPoly> try_divide(const MPoly& f, const MPoly& g);
/// As try_divide, but throws if the division is not exact.
MPoly divide_exact(const MPoly& f, const MPoly& g);

/// Scaled so that the grlex-leading coefficient is 1 (zero stays zero).
MPoly monic(const MPoly& f);

/// Scaled to integer coefficients with content 1 and positive leading coefficient.
MPoly primitive(const MPoly& f);

/// f regarded as a univariate polynomial in x_var: coefficient of x_var^k at index k.
std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var);
MPoly from_coefficients(const std::vector<MPoly>& coeffs, std::size_t var, std::size_t nvars);
int degree_in(const MPoly& f, std::size_t var);

/// Variables that occur in f.
std::vector<bool> support(const MPoly& f);

/// Replace x_var by the constant c.
MPoly specialize(const MPoly& f, std::size_t var, const Rat& c);

/// Human-readable form, e.g. "x_h^2 + 4*x_e*x_f". Default names are x0, x1, ...
std::string to_string(const MPoly& f, const std::vector<std::string>& names = {});

} // namespace argshift

#endif // ARGSHIFT_MPOLY_HPP
