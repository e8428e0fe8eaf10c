// OpenMP versions of the kernels in kernels.hpp. Each loop iteration writes
// only its own output slot, so results match the serial order exactly.

#include "argshift/errors.hpp"
#include "argshift/kernels.hpp"
#include "argshift/poisson.hpp"

#include "common.hpp"

#include <omp.h>

#include <exception>

namespace argshift::kernels {

namespace {

// Runs body(i) for i in [0, n) in parallel; the first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    std::exception_ptr failure;
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(argshift_kernel_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

} // namespace

std::vector<std::size_t> kirillov_ranks(const LieAlgebraData& L, const std::vector<PointQ>& points) {
    for (const auto& p : points)
        if (p.size() != L.dim()) throw DimensionMismatch("kirillov_ranks: point length differs from dim");
    std::vector<std::size_t> ranks(points.size());
    parallel_for(points.size(), [&](std::size_t i) { ranks[i] = rank(kirillov_matrix(L, points[i])); });
    return ranks;
}

std::vector<MPoly> pairwise_brackets(const LieAlgebraData& L, const std::vector<MPoly>& polys) {
    const auto pairs = detail::upper_pairs(polys.size());
    std::vector<MPoly> out(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
        out[k] = bracket(L, polys[pairs[k].first], polys[pairs[k].second]);
    });
    return out;
}

std::vector<MPoly> minors(const PolyMatrix& M, const std::vector<MinorIndex>& which) {
    std::vector<MPoly> out(which.size());
    parallel_for(which.size(), [&](std::size_t k) { out[k] = determinant(M.submatrix(which[k].rows, which[k].cols)); });
    return out;
}

std::vector<std::size_t> jacobian_ranks(const std::vector<MPoly>& polys, const std::vector<PointQ>& points) {
    const auto partials = detail::all_partials(polys);
    const std::size_t nvars = polys.empty() ? (points.empty() ? 0 : points.front().size()) : polys.front().nvars();
    for (const auto& p : points)
        if (p.size() != nvars) throw DimensionMismatch("jacobian_ranks: point length differs from nvars");
    std::vector<std::size_t> ranks(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        ranks[i] = rank(detail::evaluate_partials(partials, nvars, points[i]));
    });
    return ranks;
}

} // namespace argshift::kernels
