#include "argshift/poly_matrix.hpp"

#include "argshift/errors.hpp"

#include <utility>

namespace argshift {

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    PolyMatrix s(rows.size(), cols.size(), nvars_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
}

MatQ PolyMatrix::at(const PointQ& p) const {
    MatQ m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = evaluate((*this)(i, j), p);
    return m;
}

MPoly determinant(PolyMatrix M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return MPoly::constant(M.nvars(), Rat(1));
    bool negate = false;
    MPoly prev = MPoly::constant(M.nvars(), Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && M(p, k).is_zero()) ++p;
        if (p == n) return MPoly(M.nvars());
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly t = M(k, k) * M(i, j) - M(i, k) * M(k, j);
                M(i, j) = prev.is_constant() ? t * (Rat(1) / prev.leading_coeff()) : divide_exact(t, prev);
            }
            M(i, k) = MPoly(M.nvars());
        }
        prev = M(k, k);
    }
    MPoly det = M(n - 1, n - 1);
    return negate ? -det : det;
}

PolyMatrix linear_pencil(const MatQ& A, const MatQ& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionMismatch("pencil: shape mismatch");
    PolyMatrix P(A.rows(), A.cols(), 2);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const Rat coeffs[2] = {A(i, j), B(i, j)};
            P(i, j) = MPoly::linear_form(coeffs);
        }
    return P;
}

} // namespace argshift
