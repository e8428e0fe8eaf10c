// Serial reference versions of the kernels in kernels.hpp.

#include "argshift/kernels.hpp"
#include "argshift/poisson.hpp"

#include "common.hpp"

namespace argshift::kernels {

MatQ gradient_matrix(const std::vector<MPoly>& polys, const PointQ& p) {
    return detail::evaluate_partials(detail::all_partials(polys), p.size(), p);
}

std::vector<std::size_t> kirillov_ranks_serial(const LieAlgebraData& L, const std::vector<PointQ>& points) {
    std::vector<std::size_t> ranks;
    ranks.reserve(points.size());
    for (const auto& p : points) ranks.push_back(rank(kirillov_matrix(L, p)));
    return ranks;
}

std::vector<MPoly> pairwise_brackets_serial(const LieAlgebraData& L, const std::vector<MPoly>& polys) {
    std::vector<MPoly> out;
    for (const auto& [a, b] : detail::upper_pairs(polys.size())) out.push_back(bracket(L, polys[a], polys[b]));
    return out;
}

std::vector<MPoly> minors_serial(const PolyMatrix& M, const std::vector<MinorIndex>& which) {
    std::vector<MPoly> out;
    out.reserve(which.size());
    for (const auto& w : which) out.push_back(determinant(M.submatrix(w.rows, w.cols)));
    return out;
}

std::vector<std::size_t> jacobian_ranks_serial(const std::vector<MPoly>& polys, const std::vector<PointQ>& points) {
    std::vector<std::size_t> ranks;
    ranks.reserve(points.size());
    for (const auto& p : points) ranks.push_back(rank(gradient_matrix(polys, p)));
    return ranks;
}

} // namespace argshift::kernels
