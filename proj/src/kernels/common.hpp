#ifndef ARGSHIFT_KERNELS_COMMON_HPP
#define ARGSHIFT_KERNELS_COMMON_HPP

#include "argshift/mpoly.hpp"

#include <utility>
#include <vector>

namespace argshift::kernels::detail {

/// Partial derivatives ∂ⱼ p for every p, computed once per kernel call.
inline std::vector<std::vector<MPoly>> all_partials(const std::vector<MPoly>& polys) {
    std::vector<std::vector<MPoly>> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<MPoly> row;
        row.reserve(p.nvars());
        for (std::size_t j = 0; j < p.nvars(); ++j) row.push_back(partial(p, j));
        out.push_back(std::move(row));
    }
    return out;
}

inline MatQ evaluate_partials(const std::vector<std::vector<MPoly>>& partials, std::size_t nvars, const PointQ& p) {
    MatQ m(partials.size(), nvars);
    for (std::size_t i = 0; i < partials.size(); ++i)
        for (std::size_t j = 0; j < nvars; ++j) m(i, j) = evaluate(partials[i][j], p);
    return m;
}

inline std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return pairs;
}

} // namespace argshift::kernels::detail

#endif // ARGSHIFT_KERNELS_COMMON_HPP
