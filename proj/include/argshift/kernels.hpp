#ifndef ARGSHIFT_KERNELS_HPP
#define ARGSHIFT_KERNELS_HPP

#include "argshift/lie_algebra.hpp"
#include "argshift/mpoly.hpp"
#include "argshift/poly_matrix.hpp"

#include <vector>

/*
 * Data-parallel inner loops of the library. Every kernel exists twice: an
 * OpenMP version used by the library, and a plain serial reference with the
 * same signature and output order. Tests compare the two; the benchmark in
 * bench/ times them against each other.
 */
namespace argshift::kernels {

struct MinorIndex {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

/// rank K_ξ for every point, in input order.
std::vector<std::size_t> kirillov_ranks(const LieAlgebraData& L, const std::vector<PointQ>& points);
std::vector<std::size_t> kirillov_ranks_serial(const LieAlgebraData& L, const std::vector<PointQ>& points);

/// {p_a, p_b} for all a < b, ordered (0,1), (0,2), …, (1,2), …
std::vector<MPoly> pairwise_brackets(const LieAlgebraData& L, const std::vector<MPoly>& polys);
std::vector<MPoly> pairwise_brackets_serial(const LieAlgebraData& L, const std::vector<MPoly>& polys);

/// Determinants of the listed square submatrices, in input order.
std::vector<MPoly> minors(const PolyMatrix& M, const std::vector<MinorIndex>& which);
std::vector<MPoly> minors_serial(const PolyMatrix& M, const std::vector<MinorIndex>& which);

/// Rank of the gradient matrix of `polys` at each point, in input order.
std::vector<std::size_t> jacobian_ranks(const std::vector<MPoly>& polys, const std::vector<PointQ>& points);
std::vector<std::size_t> jacobian_ranks_serial(const std::vector<MPoly>& polys, const std::vector<PointQ>& points);

/// Gradient rows of `polys` at p, as a (#polys × nvars) matrix.
MatQ gradient_matrix(const std::vector<MPoly>& polys, const PointQ& p);

} // namespace argshift::kernels

#endif // ARGSHIFT_KERNELS_HPP
