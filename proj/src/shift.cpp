#include "argshift/shift.hpp"

#include "argshift/errors.hpp"
#include "argshift/kernels.hpp"
#include "argshift/subspace.hpp"

#include <map>

namespace argshift {

std::vector<MPoly> ShiftFamily::polys() const {
    std::vector<MPoly> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.poly);
    return out;
}

std::vector<std::string> ShiftFamily::labels() const {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (const auto& m : members)
        out.push_back("f_{" + std::to_string(m.source + 1) + ",xi}^" + std::to_string(m.order));
    return out;
}

ShiftFamily build_family(const LieAlgebraData& L, const CasimirSet& C, const PointQ& xi) {
    if (C.nvars() != L.dim()) throw DimensionMismatch("build_family: Casimir set is not over this algebra");
    if (xi.size() != L.dim()) throw DimensionMismatch("build_family: point length differs from dim");
    ShiftFamily F{xi, C, {}};
    for (std::size_t i = 0; i < C.size(); ++i) {
        auto shifts = param_expand(C.generators()[i], xi);
        shifts.pop_back(); // j = deg f_i is the constant f_i(ξ)
        for (std::size_t j = 0; j < shifts.size(); ++j) {
            if (shifts[j].is_zero()) continue;
            F.members.push_back({i, j, std::move(shifts[j])});
        }
    }
    return F;
}

CommutativityReport certify_commutative(const LieAlgebraData& L, const ShiftFamily& F) {
    const auto polys = F.polys();
    const auto brackets = kernels::pairwise_brackets(L, polys);
    CommutativityReport r;
    r.pairs_checked = brackets.size();
    std::size_t idx = 0;
    for (std::size_t a = 0; a < polys.size(); ++a)
        for (std::size_t b = a + 1; b < polys.size(); ++b, ++idx)
            if (!brackets[idx].is_zero()) r.nonzero.push_back({a, b, brackets[idx]});
    return r;
}

std::string verdict_name(DegreeVerdict v) {
    switch (v) {
    case DegreeVerdict::Deficit: return "DEFICIT";
    case DegreeVerdict::Exact: return "EXACT";
    case DegreeVerdict::Excess: return "EXCESS";
    }
    return "?";
}

DegreeProfile degree_profile(const CasimirSet& C, const AlgebraProfile& profile) {
    if (C.size() != profile.ind) {
        throw PreconditionFailed("degree_profile: " + std::to_string(C.size()) + " generators but ind = " +
                                 std::to_string(profile.ind));
    }
    const auto b = profile.b();
    if (!b) throw PreconditionFailed("degree_profile: dim + ind is odd");
    DegreeProfile d;
    d.degrees = C.degrees();
    d.sum = C.sum_degrees();
    d.b = *b;
    std::string lhs;
    for (std::size_t i = 0; i < d.degrees.size(); ++i) lhs += (i ? " + " : "") + std::to_string(d.degrees[i]);
    if (lhs.empty()) lhs = "0";
    const std::string rel = d.sum < d.b ? " < " : d.sum == d.b ? " = " : " > ";
    d.verdict = d.sum < d.b ? DegreeVerdict::Deficit : d.sum == d.b ? DegreeVerdict::Exact : DegreeVerdict::Excess;
    d.arithmetic = lhs + " = " + std::to_string(d.sum) + rel + "b(q) = " + std::to_string(d.b);
    return d;
}

namespace {

VecQ linear_part(const MPoly& f) {
    VecQ v(f.nvars());
    for (std::size_t k = 0; k < f.nvars(); ++k) {
        Exponents e(f.nvars(), 0);
        e[k] = 1;
        v[k] = f.coeff(e);
    }
    return v;
}

} // namespace

bool nonmembership_linear(const ShiftFamily& F, const MPoly& ell) {
    if (ell.degree() != 1 || !ell.is_homogeneous()) throw PreconditionFailed("nonmembership_linear: ell must be a linear form");
    if (ell.nvars() != F.xi.size()) throw DimensionMismatch("nonmembership_linear: variable count differs");
    std::vector<VecQ> lin;
    for (const auto& m : F.members)
        if (m.poly.degree() == 1) lin.push_back(linear_part(m.poly));
    return !SubspaceQ::span(ell.nvars(), lin).contains(linear_part(ell));
}

SubspaceQ linear_centralizer(const LieAlgebraData& L, const ShiftFamily& F) {
    const std::size_t n = L.dim();
    // one equation per (member, monomial): Σ_i λ_i · coeff of the monomial in {x_i, f}
    std::vector<VecQ> rows;
    for (const auto& m : F.members) {
        std::map<Exponents, VecQ> eqs;
        for (std::size_t i = 0; i < n; ++i) {
            const MPoly b = bracket_with_coordinate(L, i, m.poly);
            for (const auto& [e, c] : b.terms()) eqs.try_emplace(e, VecQ(n)).first->second[i] = c;
        }
        for (auto& [e, row] : eqs) rows.push_back(std::move(row));
    }
    if (rows.empty()) return SubspaceQ::whole(n);
    return rank_kernel(MatQ::from_rows(rows)).kernel;
}

} // namespace argshift
