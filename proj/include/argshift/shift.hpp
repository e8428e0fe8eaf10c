#ifndef ARGSHIFT_SHIFT_HPP
#define ARGSHIFT_SHIFT_HPP

#include "argshift/lie_algebra.hpp"
#include "argshift/mpoly.hpp"
#include "argshift/poisson.hpp"
#include "argshift/subspace.hpp"

#include <string>
#include <vector>

namespace argshift {

/// f_{i,ξ}^j: coefficient of aʲ in f_i(μ + aξ).
struct ShiftMember {
    std::size_t source = 0;
    std::size_t order = 0;
    MPoly poly;
};

/*
 * Generators of F_ξ. Orders run over 0..deg f_i − 1; the constant shift
 * j = deg f_i is never stored, and neither is any shift that vanishes at this
 * particular ξ (every j ≥ 1 when ξ = 0). So size() ≤ sources.sum_degrees(),
 * with equality whenever no shift vanishes.
 */
struct ShiftFamily {
    PointQ xi;
    CasimirSet sources;
    std::vector<ShiftMember> members;

    std::size_t size() const { return members.size(); }
    std::vector<MPoly> polys() const;
    /// "f_{i,xi}^j" for each member.
    std::vector<std::string> labels() const;
};

ShiftFamily build_family(const LieAlgebraData& L, const CasimirSet& C, const PointQ& xi);

struct NonzeroPair {
    std::size_t a = 0;
    std::size_t b = 0;
    MPoly bracket;
};

struct CommutativityReport {
    std::size_t pairs_checked = 0;
    std::vector<NonzeroPair> nonzero; // sorted by (a, b)

    bool passed() const { return nonzero.empty(); }
};

/// {f, g} for every unordered pair of members, exactly.
CommutativityReport certify_commutative(const LieAlgebraData& L, const ShiftFamily& F);

enum class DegreeVerdict { Deficit, Exact, Excess };

std::string verdict_name(DegreeVerdict v);

struct DegreeProfile {
    DegreeVerdict verdict = DegreeVerdict::Exact;
    std::vector<int> degrees;
    std::size_t sum = 0;
    std::size_t b = 0;
    /// e.g. "2 + 3 = 5 = b(q)".
    std::string arithmetic;
};

/// Compares Σ deg f_i with b(q). Throws PreconditionFailed if l ≠ ind or dim + ind is odd.
DegreeProfile degree_profile(const CasimirSet& C, const AlgebraProfile& profile);

/// True iff the linear form ell lies outside the span of the degree-1 members of F.
bool nonmembership_linear(const ShiftFamily& F, const MPoly& ell);

/// Coefficient vectors of the linear forms ℓ with {ℓ, f} = 0 for every member f.
SubspaceQ linear_centralizer(const LieAlgebraData& L, const ShiftFamily& F);

} // namespace argshift

#endif // ARGSHIFT_SHIFT_HPP
