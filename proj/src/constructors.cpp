#include "argshift/errors.hpp"
#include "argshift/lie_algebra.hpp"
#include "argshift/subspace.hpp"

#include <algorithm>
#include <numeric>

namespace argshift {

ClassicalFamily parse_family(const std::string& name) {
    if (name == "gl") return ClassicalFamily::gl;
    if (name == "sl") return ClassicalFamily::sl;
    if (name == "so") return ClassicalFamily::so;
    throw PreconditionFailed("unsupported classical family '" + name + "'");
}

std::string family_name(ClassicalFamily f) {
    switch (f) {
    case ClassicalFamily::gl: return "gl";
    case ClassicalFamily::sl: return "sl";
    case ClassicalFamily::so: return "so";
    }
    return "?";
}

namespace {

MatQ unit(std::size_t n, std::size_t i, std::size_t j) {
    MatQ m(n, n);
    m(i, j) = Rat(1);
    return m;
}

std::string idx(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

VecQ flatten(const MatQ& m) {
    VecQ v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

std::vector<std::string> classical_names(ClassicalFamily family, std::size_t n) {
    std::vector<std::string> names;
    switch (family) {
    case ClassicalFamily::gl:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) names.push_back("E" + idx(i, j));
        break;
    case ClassicalFamily::sl:
        if (n == 2) return {"e", "h", "f"};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) names.push_back("E" + idx(i, j));
        for (std::size_t k = 0; k + 1 < n; ++k) names.push_back("H" + std::to_string(k + 1));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) names.push_back("E" + idx(i, j));
        break;
    case ClassicalFamily::so:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) names.push_back("F" + idx(i, j));
        break;
    }
    return names;
}

} // namespace

std::vector<MatQ> classical_basis(ClassicalFamily family, std::size_t n) {
    const std::size_t min_n = family == ClassicalFamily::so ? 3 : 2;
    if (n < min_n) {
        throw PreconditionFailed(family_name(family) + "(" + std::to_string(n) + ") is not supported; need n >= " +
                                 std::to_string(min_n));
    }
    std::vector<MatQ> mats;
    switch (family) {
    case ClassicalFamily::gl:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mats.push_back(unit(n, i, j));
        break;
    case ClassicalFamily::sl:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) mats.push_back(unit(n, i, j));
        for (std::size_t k = 0; k + 1 < n; ++k) mats.push_back(unit(n, k, k) - unit(n, k + 1, k + 1));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) mats.push_back(unit(n, i, j));
        break;
    case ClassicalFamily::so:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) mats.push_back(unit(n, i, j) - unit(n, j, i));
        break;
    }
    return mats;
}

LieAlgebraData make_classical(ClassicalFamily family, std::size_t n) {
    auto mats = classical_basis(family, n);
    return structure_from_matrices(classical_names(family, n), mats);
}

LieAlgebraData structure_from_matrices(std::vector<std::string> names, const std::vector<MatQ>& mats) {
    if (names.size() != mats.size()) throw DimensionMismatch("one name per basis matrix required");
    const std::size_t d = mats.size();
    LieAlgebraData L(std::move(names));
    if (d == 0) return L;
    const std::size_t n = mats.front().rows();
    // columns are the flattened basis matrices
    MatQ cols(n * n, d);
    for (std::size_t k = 0; k < d; ++k) {
        if (mats[k].rows() != n || mats[k].cols() != n) throw DimensionMismatch("basis matrices must share one square shape");
        const VecQ v = flatten(mats[k]);
        for (std::size_t r = 0; r < v.size(); ++r) cols(r, k) = v[r];
    }
    if (rank(cols) != d) throw PreconditionFailed("basis matrices are linearly dependent");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const MatQ c = commutator(mats[i], mats[j]);
            if (c.is_zero()) continue;
            const auto coords = solve(cols, flatten(c));
            if (!coords) throw PreconditionFailed("span of the basis matrices is not closed under commutators");
            BasisCombination value;
            for (std::size_t k = 0; k < d; ++k)
                if (!(*coords)[k].is_zero()) value[k] = (*coords)[k];
            L.set_bracket(i, j, value);
        }
    L.set_realization(mats);
    return L;
}

std::optional<std::pair<std::size_t, std::size_t>> representation_defect(const LieAlgebraData& g,
                                                                          const std::vector<MatQ>& rho) {
    if (rho.size() != g.dim()) throw DimensionMismatch("representation needs one matrix per basis vector");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            MatQ expected(rho[i].rows(), rho[i].cols());
            for (const auto& [k, c] : g.bracket(i, j)) expected += rho[k] * c;
            if (commutator(rho[i], rho[j]) != expected) return std::make_pair(i, j);
        }
    return std::nullopt;
}

LieAlgebraData make_semidirect(const LieAlgebraData& g, const std::vector<MatQ>& rho, std::vector<std::string> v_names) {
    if (rho.size() != g.dim()) throw DimensionMismatch("representation needs one matrix per basis vector");
    const std::size_t dv = rho.empty() ? v_names.size() : rho.front().rows();
    for (const auto& r : rho)
        if (r.rows() != dv || r.cols() != dv) throw DimensionMismatch("representation matrices must be square of equal size");
    if (auto bad = representation_defect(g, rho)) {
        throw PreconditionFailed("not a representation: bracket relation fails for (" + g.basis_names()[bad->first] +
                                 ", " + g.basis_names()[bad->second] + ")");
    }
    if (v_names.empty())
        for (std::size_t a = 0; a < dv; ++a) v_names.push_back("v" + std::to_string(a + 1));
    if (v_names.size() != dv) throw DimensionMismatch("one name per module basis vector required");

    std::vector<std::string> names = g.basis_names();
    names.insert(names.end(), v_names.begin(), v_names.end());
    LieAlgebraData L(std::move(names));
    const std::size_t dg = g.dim();
    for (const auto& [key, value] : g.upper_table()) L.set_bracket(key.first, key.second, value);
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t a = 0; a < dv; ++a) {
            BasisCombination value;
            for (std::size_t c = 0; c < dv; ++c)
                if (!rho[i](c, a).is_zero()) value[dg + c] = rho[i](c, a);
            L.set_bracket(i, dg + a, value);
        }
    return L;
}

LieAlgebraData make_vinberg(const std::vector<Rat>& eigenvalues) {
    if (eigenvalues.empty()) throw PreconditionFailed("Vinberg algebra needs at least one eigenvalue");
    MatQ s(eigenvalues.size(), eigenvalues.size());
    for (std::size_t a = 0; a < eigenvalues.size(); ++a) {
        if (eigenvalues[a].is_zero()) throw PreconditionFailed("Vinberg algebra needs nonzero eigenvalues");
        s(a, a) = eigenvalues[a];
    }
    std::vector<std::string> v_names;
    if (eigenvalues.size() == 1) {
        v_names = {"v"};
    } else {
        for (std::size_t a = 0; a < eigenvalues.size(); ++a) v_names.push_back("v" + std::to_string(a + 1));
    }
    return make_semidirect(LieAlgebraData(std::vector<std::string>{"s"}), {s}, std::move(v_names));
}

LieAlgebraData make_takiff(const LieAlgebraData& q, std::size_t n) {
    const std::size_t d = q.dim();
    std::vector<std::string> names;
    for (std::size_t l = 0; l <= n; ++l)
        for (const auto& name : q.basis_names()) names.push_back(n == 0 ? name : name + "_T" + std::to_string(l));
    LieAlgebraData L(std::move(names));
    for (std::size_t l = 0; l <= n; ++l)
        for (std::size_t k = 0; k + l <= n; ++k)
            for (const auto& [key, value] : q.upper_table()) {
                BasisCombination shifted;
                for (const auto& [m, c] : value) shifted[(l + k) * d + m] = c;
                // (l, k) runs over both orders, so this covers [b_j T^l, b_i T^k] too
                L.set_bracket(l * d + key.first, k * d + key.second, shifted);
            }
    return L;
}

LieAlgebraData make_z2_contraction(const LieAlgebraData& g, const std::vector<int>& parity) {
    if (parity.size() != g.dim()) throw DimensionMismatch("one parity per basis vector required");
    for (int p : parity)
        if (p != 0 && p != 1) throw PreconditionFailed("parity entries must be 0 or 1");
    LieAlgebraData L(g.basis_names());
    for (const auto& [key, value] : g.upper_table()) {
        const int target = parity[key.first] ^ parity[key.second];
        for (const auto& [k, c] : value) {
            if (parity[k] != target) {
                throw PreconditionFailed("not a Z2-grading: [" + g.basis_names()[key.first] + ", " +
                                         g.basis_names()[key.second] + "] has a component along " + g.basis_names()[k]);
            }
        }
        if (parity[key.first] == 1 && parity[key.second] == 1) continue;
        L.set_bracket(key.first, key.second, value);
    }
    return L;
}

LieAlgebraData make_centralizer_sl(std::size_t n, const std::vector<std::size_t>& partition) {
    const std::size_t total = std::accumulate(partition.begin(), partition.end(), std::size_t{0});
    if (total != n || n == 0 || std::find(partition.begin(), partition.end(), 0) != partition.end()) {
        throw PreconditionFailed("not a partition of " + std::to_string(n));
    }
    MatQ e(n, n);
    std::size_t start = 0;
    for (std::size_t part : partition) {
        for (std::size_t t = 0; t + 1 < part; ++t) e(start + t, start + t + 1) = Rat(1);
        start += part;
    }
    // X ↦ [e, X] on gl_n (row-major coordinates), plus the trace row
    const std::size_t N = n * n;
    MatQ system(N + 1, N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const VecQ image = flatten(commutator(e, unit(n, i, j)));
            for (std::size_t r = 0; r < N; ++r) system(r, i * n + j) = image[r];
            if (i == j) system(N, i * n + j) = Rat(1);
        }
    const SubspaceQ kernel = rank_kernel(system).kernel;
    std::vector<MatQ> mats;
    std::vector<std::string> names;
    for (const auto& v : kernel.basis()) {
        MatQ z(n, n);
        for (std::size_t r = 0; r < N; ++r) z(r / n, r % n) = v[r];
        mats.push_back(std::move(z));
        names.push_back("z" + std::to_string(mats.size()));
    }
    return structure_from_matrices(std::move(names), mats);
}

LieAlgebraData rebase(const LieAlgebraData& L, const MatQ& new_basis, std::vector<std::string> names) {
    const std::size_t d = L.dim();
    if (new_basis.rows() != d || new_basis.cols() != d || names.size() != d) {
        throw DimensionMismatch("rebase needs a dim x dim matrix and dim names");
    }
    if (rank(new_basis) != d) throw PreconditionFailed("rebase: new basis is not invertible");
    const MatQ Pt = new_basis.transpose();
    LieAlgebraData out(std::move(names));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            VecQ w(d);
            for (std::size_t i = 0; i < d; ++i) {
                if (new_basis(a, i).is_zero()) continue;
                for (std::size_t j = 0; j < d; ++j) {
                    if (new_basis(b, j).is_zero()) continue;
                    const Rat s = new_basis(a, i) * new_basis(b, j);
                    for (const auto& [k, c] : L.bracket(i, j)) w[k] += s * c;
                }
            }
            const auto coords = solve(Pt, w);
            BasisCombination value;
            for (std::size_t k = 0; k < d; ++k)
                if (!(*coords)[k].is_zero()) value[k] = (*coords)[k];
            out.set_bracket(a, b, value);
        }
    return out;
}

} // namespace argshift
