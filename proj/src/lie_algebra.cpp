#include "argshift/lie_algebra.hpp"

#include "argshift/errors.hpp"

#include <sstream>

namespace argshift {

LieAlgebraData::LieAlgebraData(std::vector<std::string> basis_names) : names_(std::move(basis_names)) {}

LieAlgebraData LieAlgebraData::abelian(std::size_t dim) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i + 1));
    return LieAlgebraData(std::move(names));
}

std::vector<std::string> LieAlgebraData::coordinate_names() const {
    std::vector<std::string> out;
    out.reserve(names_.size());
    for (const auto& n : names_) out.push_back("x_" + n);
    return out;
}

void LieAlgebraData::set_bracket(std::size_t i, std::size_t j, const BasisCombination& value) {
    if (i >= dim() || j >= dim()) throw DimensionMismatch("bracket index out of range");
    BasisCombination clean;
    for (const auto& [k, c] : value) {
        if (k >= dim()) throw DimensionMismatch("bracket coefficient index out of range");
        if (!c.is_zero()) clean.emplace(k, c);
    }
    if (i == j) {
        if (!clean.empty()) throw PreconditionFailed("[b_i, b_i] must vanish");
        return;
    }
    if (i > j) {
        std::swap(i, j);
        for (auto& [k, c] : clean) c = -c;
    }
    if (clean.empty()) {
        table_.erase({i, j});
    } else {
        table_[{i, j}] = std::move(clean);
    }
}

BasisCombination LieAlgebraData::bracket(std::size_t i, std::size_t j) const {
    if (i == j) return {};
    const bool flip = i > j;
    auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table_.end()) return {};
    if (!flip) return it->second;
    BasisCombination r = it->second;
    for (auto& [k, c] : r) c = -c;
    return r;
}

Rat LieAlgebraData::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    const auto b = bracket(i, j);
    auto it = b.find(k);
    return it == b.end() ? Rat() : it->second;
}

namespace {

// [u, b_k] for a combination u
BasisCombination bracket_with(const LieAlgebraData& L, const BasisCombination& u, std::size_t k) {
    BasisCombination out;
    for (const auto& [m, cm] : u) {
        for (const auto& [l, c] : L.bracket(m, k)) {
            out[l] += cm * c;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

void accumulate(BasisCombination& acc, const BasisCombination& x) {
    for (const auto& [k, c] : x) acc[k] += c;
}

} // namespace

ValidationReport validate(const LieAlgebraData& L) {
    ValidationReport rep;
    for (const auto& [key, coeffs] : L.upper_table()) {
        if (key.first >= key.second) {
            rep.ok = false;
            rep.violation = "antisymmetry: stored bracket with i >= j";
            rep.witness = {key.first, key.second};
            return rep;
        }
    }
    const std::size_t n = L.dim();
    // Jacobi is alternating in (i,j,k), so i<j<k covers every triple.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                BasisCombination sum;
                accumulate(sum, bracket_with(L, L.bracket(i, j), k));
                accumulate(sum, bracket_with(L, L.bracket(j, k), i));
                accumulate(sum, bracket_with(L, L.bracket(k, i), j));
                for (const auto& [l, c] : sum) {
                    if (c.is_zero()) continue;
                    std::ostringstream os;
                    os << "Jacobi identity fails for (" << L.basis_names()[i] << ", " << L.basis_names()[j]
                       << ", " << L.basis_names()[k] << "): component " << L.basis_names()[l] << " = " << c;
                    rep.ok = false;
                    rep.violation = os.str();
                    rep.witness = {i, j, k, l};
                    return rep;
                }
            }
    return rep;
}

namespace {

std::optional<ValidationReport> raw_antisymmetry(std::size_t dim, const std::vector<BracketEntry>& entries) {
    std::map<std::pair<std::size_t, std::size_t>, BasisCombination> seen;
    for (const auto& e : entries) {
        ValidationReport bad;
        bad.ok = false;
        bad.witness = {e.i, e.j};
        if (e.i >= dim || e.j >= dim) {
            bad.violation = "bracket index out of range";
            return bad;
        }
        BasisCombination clean;
        for (const auto& [k, c] : e.coeffs) {
            if (k >= dim) {
                bad.violation = "bracket coefficient index out of range";
                return bad;
            }
            if (!c.is_zero()) clean[k] = c;
        }
        if (e.i == e.j) {
            if (!clean.empty()) {
                bad.violation = "antisymmetry: [b_i, b_i] is nonzero";
                return bad;
            }
            continue;
        }
        BasisCombination oriented = clean;
        if (e.i > e.j)
            for (auto& [k, c] : oriented) c = -c;
        const auto key = std::minmax(e.i, e.j);
        auto [it, inserted] = seen.try_emplace(key, oriented);
        if (!inserted && it->second != oriented) {
            bad.violation = "antisymmetry: [b_i, b_j] != -[b_j, b_i]";
            return bad;
        }
    }
    return std::nullopt;
}

} // namespace

ValidationReport validate_entries(const std::vector<std::string>& names, const std::vector<BracketEntry>& entries) {
    if (auto bad = raw_antisymmetry(names.size(), entries)) return *bad;
    return validate(from_entries(names, entries));
}

LieAlgebraData from_entries(std::vector<std::string> names, const std::vector<BracketEntry>& entries) {
    if (auto bad = raw_antisymmetry(names.size(), entries)) throw PreconditionFailed(bad->violation);
    LieAlgebraData L(std::move(names));
    for (const auto& e : entries) L.set_bracket(e.i, e.j, e.coeffs);
    return L;
}

AlgebraProfile declared_profile(std::size_t dim, std::size_t ind) {
    if (ind > dim) throw PreconditionFailed("declared index exceeds dimension");
    AlgebraProfile p;
    p.dim = dim;
    p.ind = ind;
    p.source = IndexSource::Declared;
    p.max_rank = dim - ind;
    return p;
}

} // namespace argshift
