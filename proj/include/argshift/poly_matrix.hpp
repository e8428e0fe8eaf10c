#ifndef ARGSHIFT_POLY_MATRIX_HPP
#define ARGSHIFT_POLY_MATRIX_HPP

#include "argshift/matrix.hpp"
#include "argshift/mpoly.hpp"

#include <vector>

namespace argshift {

/// Dense matrix with polynomial entries over a common variable set.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, MPoly(nvars)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    MPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const MPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    /// Entrywise evaluation.
    MatQ at(const PointQ& p) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nvars_ = 0;
    std::vector<MPoly> data_;
};

/// Determinant by fraction-free (Bareiss) elimination with exact polynomial division.
MPoly determinant(PolyMatrix M);

/// a·A + b·B as a matrix of linear forms in the two variables (a, b).
PolyMatrix linear_pencil(const MatQ& A, const MatQ& B);

} // namespace argshift

#endif // ARGSHIFT_POLY_MATRIX_HPP
