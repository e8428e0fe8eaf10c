#ifndef ARGSHIFT_REGCERT_HPP
#define ARGSHIFT_REGCERT_HPP

#include "argshift/kernels.hpp"
#include "argshift/lie_algebra.hpp"
#include "argshift/poisson.hpp"
#include "argshift/poly_matrix.hpp"
#include "argshift/shift.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace argshift {

/*
 * gcd of the m×m minors of M, consumed in a seeded random order and stopped
 * as soon as the running gcd is a nonzero constant. `effective` lists the
 * minors that changed the running gcd, in consumption order; together with
 * their values they reproduce `gcd`. A zero gcd means every minor vanished.
 */
struct MinorGcd {
    std::size_t order = 0;
    MPoly gcd;
    std::vector<kernels::MinorIndex> effective;
    std::vector<MPoly> effective_values;
    std::size_t consumed = 0;
    std::uint64_t total = 0;
    std::uint64_t seed = 0;

    bool constant() const { return !gcd.is_zero() && gcd.is_constant(); }
};

/// Throws PreconditionFailed when the number of minors does not fit in 64 bits.
MinorGcd minor_gcd(const PolyMatrix& M, std::size_t m, std::uint64_t seed);

/// K with entries Σ_k c_ij^k x_k over k[q*].
struct GenericKirillov {
    PolyMatrix matrix;

    MatQ at(const PointQ& xi) const { return matrix.at(xi); }
};

GenericKirillov generic_kirillov(const LieAlgebraData& L);

/// rank K_ξ = dim − ind.
bool is_regular(const LieAlgebraData& L, const AlgebraProfile& profile, const PointQ& xi);

/// First regular point among `tries` random points in [−bound, bound]^dim; throws PreconditionFailed if none.
PointQ sample_regular_point(const LieAlgebraData& L, const AlgebraProfile& profile, std::uint64_t seed, long bound = 9,
                            std::size_t tries = 64);

struct KostantCheck {
    bool regular_by_rank = false;
    bool independent_differentials = false;

    bool agree() const { return regular_by_rank == independent_differentials; }
};

/*
 * Both sides of the criterion "ξ regular ⇔ (df₁)_ξ..(df_l)_ξ independent",
 * computed independently. Throws PreconditionFailed unless degree_profile is
 * EXACT. Disagreement is returned, not thrown; callers treat it as a
 * falsification event.
 */
KostantCheck kostant_criterion(const LieAlgebraData& L, const CasimirSet& C, const AlgebraProfile& profile,
                               const PointQ& xi);

struct PlaneSpec {
    PointQ xi;
    PointQ eta;
    std::optional<MinorGcd> certificate;

    /// Constant minor gcd: every nonzero aξ + bη is regular.
    bool certified() const { return certificate && certificate->constant(); }
};

/*
 * Minors of a·K_ξ + b·K_η are binary forms of degree m = dim − ind; their
 * common projective zeros are the roots of their gcd. The returned spec
 * carries the gcd in either case; certified() tells which.
 */
PlaneSpec certify_regular_plane(const LieAlgebraData& L, const AlgebraProfile& profile, const PointQ& xi,
                                const PointQ& eta, std::uint64_t seed = 0);

struct Codim2Result {
    MinorGcd minors;
    /// Squarefree part of a nonconstant gcd: the singular hypersurface.
    std::optional<MPoly> hypersurface;

    bool certified() const { return minors.constant(); }
};

/// Constant gcd of all m×m minors of the generic Kirillov matrix ⇔ codim(q*∖q*_reg) ≥ 2.
Codim2Result certify_codim2(const LieAlgebraData& L, const AlgebraProfile& profile, std::uint64_t seed = 0);

struct PlaneSearch {
    std::optional<PlaneSpec> plane;
    std::size_t attempts = 0;
    /// gcd from the last refused plane, if any.
    std::optional<MPoly> last_witness;
};

/// Random η until span{ξ, η} is certified. Throws PreconditionFailed if ξ is singular.
PlaneSearch find_regular_plane(const LieAlgebraData& L, const AlgebraProfile& profile, const PointQ& xi,
                               std::size_t attempts, std::uint64_t seed, long bound = 9);

/// Exact rank of the member gradients at η.
std::size_t jacobian_rank(const ShiftFamily& F, const PointQ& eta);

struct ComplPair {
    Rat a1, b1, a2, b2; // ξ' = a1ξ + b1η, η' = a2ξ + b2η
    PointQ xi;
    PointQ eta;
    std::size_t rank = 0;
};

struct ComplReport {
    std::size_t b = 0;
    std::size_t skipped_dependent = 0;
    std::vector<ComplPair> pairs;
};

/*
 * For `samples` independent pairs on the plane, rank of F_ξ' gradients at η'
 * must equal b(q). Requires a certified plane, certified codim-2, EXACT
 * degree profile and condition (∗) at P.xi. A rank other than b(q) throws
 * FalsificationEvent.
 */
ComplReport verify_compl(const LieAlgebraData& L, const CasimirSet& C, const AlgebraProfile& profile,
                         const Codim2Result& codim2, const PlaneSpec& P, std::size_t samples,
                         std::uint64_t seed, long bound = 9);

struct BolsReport {
    std::size_t b = 0;
    std::size_t max_rank = 0;
    std::size_t trials = 0;
    PointQ best_eta;
};

/*
 * max over `trials` random η of jacobian_rank(F_ξ, η), expected to be b(q).
 * Requires ξ regular, certified codim-2 and an independent C with l = ind.
 * A maximum below b(q) throws FalsificationEvent.
 */
BolsReport verify_bols(const LieAlgebraData& L, const CasimirSet& C, const AlgebraProfile& profile,
                       const Codim2Result& codim2, const PointQ& xi, std::size_t trials, std::uint64_t seed,
                       long bound = 9);

} // namespace argshift

#endif // ARGSHIFT_REGCERT_HPP
