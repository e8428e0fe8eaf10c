#ifndef ARGSHIFT_POISSON_HPP
#define ARGSHIFT_POISSON_HPP

#include "argshift/lie_algebra.hpp"
#include "argshift/matrix.hpp"
#include "argshift/mpoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace argshift {

/// Lie–Poisson bracket {f,g} = Σ_{i<j,k} c_ij^k x_k (∂ᵢf ∂ⱼg − ∂ⱼf ∂ᵢg).
MPoly bracket(const LieAlgebraData& L, const MPoly& f, const MPoly& g);

/// The bracket with x_k frozen to the constant ξ_k.
MPoly frozen_bracket(const LieAlgebraData& L, const MPoly& f, const MPoly& g, const PointQ& xi);

/// {x_i, f} = Σ_j ⟨x, [b_i, b_j]⟩ ∂ⱼf.
MPoly bracket_with_coordinate(const LieAlgebraData& L, std::size_t i, const MPoly& f);

/// K_ξ(b_i, b_j) = ⟨ξ, [b_i, b_j]⟩ = Σ_k c_ij^k ξ_k.
struct KirillovForm {
    PointQ at;
    MatQ matrix;

    std::size_t rank() const { return argshift::rank(matrix); }
};

KirillovForm kirillov(const LieAlgebraData& L, const PointQ& xi);
MatQ kirillov_matrix(const LieAlgebraData& L, const PointQ& xi);

/*
 * ind q ≤ dim − max rank K_ξ over `trials` random integer points in
 * [−bound, bound]^dim drawn from `seed`. The result is an estimate: it equals
 * ind q unless every sample landed in the singular set.
 */
AlgebraProfile estimate_index(const LieAlgebraData& L, std::size_t trials, std::uint64_t seed, long bound = 9);

struct CasimirCheck {
    bool is_casimir = true;
    std::optional<std::size_t> witness_index; // i with {x_i, f} ≠ 0
    MPoly witness_bracket;
};

/// Symbolic test {x_i, f} = 0 for every coordinate function.
CasimirCheck is_casimir(const LieAlgebraData& L, const MPoly& f);

/*
 * Verified set of central polynomials f₁..f_l: each passes is_casimir and the
 * set is algebraically independent, witnessed by a point where the l×dim
 * gradient matrix has rank l. Only verify_casimirs() creates one.
 */
class CasimirSet {
public:
    const std::vector<MPoly>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t sum_degrees() const;
    bool homogeneous() const { return homogeneous_; }
    const PointQ& independence_witness() const { return witness_; }
    std::size_t nvars() const { return nvars_; }

private:
    friend CasimirSet verify_casimirs(const LieAlgebraData&, std::vector<MPoly>, std::uint64_t, long);

    std::size_t nvars_ = 0;
    std::vector<MPoly> gens_;
    std::vector<int> degrees_;
    bool homogeneous_ = true;
    PointQ witness_;
};

/// Throws PreconditionFailed if a generator is not central, is constant, or the set is dependent.
CasimirSet verify_casimirs(const LieAlgebraData& L, std::vector<MPoly> generators, std::uint64_t seed = 0,
                           long bound = 9);

/*
 * Coefficients of the characteristic polynomial of the generic matrix
 * M(x) = Σᵢ xᵢ bᵢ*, where bᵢ* is the dual basis of make_classical(family, n)
 * under the trace form tr(XY). Each coefficient is scaled to a primitive
 * integer polynomial with positive leading coefficient. gl_n gives degrees
 * 1..n, sl_n gives 2..n.
 */
CasimirSet classical_casimirs(ClassicalFamily family, std::size_t n);

/*
 * Invariants of the Takiff algebra q⟨n⟩ from a Casimir f of q: the
 * coefficients of t⁰..tⁿ in f(ξₙ + t·ξₙ₋₁ + … + tⁿ·ξ₀), where ξ_l are the
 * level-l coordinates. Every output is checked with is_casimir on
 * make_takiff(base, n).
 */
std::vector<MPoly> takiff_lift(const LieAlgebraData& base, const MPoly& f, std::size_t n);

/*
 * For a representation ρ of g on V: max over sampled ζ ∈ V* of dim g·ζ,
 * with (x·ζ)(v) = −ζ(ρ(x)v). Used to test "generic orbits of g in V* have
 * dimension dim g" before applying the index formula dim V − dim g.
 */
std::size_t max_module_orbit_dim(const std::vector<MatQ>& rho, std::size_t trials, std::uint64_t seed, long bound = 9);

} // namespace argshift

#endif // ARGSHIFT_POISSON_HPP
