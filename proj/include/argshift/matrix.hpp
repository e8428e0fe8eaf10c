#ifndef ARGSHIFT_MATRIX_HPP
#define ARGSHIFT_MATRIX_HPP

#include "argshift/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace argshift {

using VecQ = std::vector<Rat>;

/// Dense row-major matrix of rationals.
class MatQ {
public:
    MatQ() = default;
    MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static MatQ identity(std::size_t n);
    static MatQ from_rows(const std::vector<VecQ>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    VecQ row(std::size_t i) const;
    VecQ col(std::size_t j) const;

    MatQ transpose() const;
    bool is_zero() const;
    /// Mᵀ = −M with zero diagonal.
    bool is_skew() const;

    VecQ apply(std::span<const Rat> v) const;

    MatQ& operator+=(const MatQ& o);
    MatQ& operator-=(const MatQ& o);
    MatQ& operator*=(const Rat& s);

    friend MatQ operator+(MatQ a, const MatQ& b) { a += b; return a; }
    friend MatQ operator-(MatQ a, const MatQ& b) { a -= b; return a; }
    friend MatQ operator*(MatQ a, const Rat& s) { a *= s; return a; }
    friend MatQ operator*(const Rat& s, MatQ a) { a *= s; return a; }
    friend MatQ operator*(const MatQ& a, const MatQ& b);
    friend bool operator==(const MatQ& a, const MatQ& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// a·A + b·B, shapes must agree.
MatQ combine(const Rat& a, const MatQ& A, const Rat& b, const MatQ& B);

/// Commutator AB − BA.
MatQ commutator(const MatQ& A, const MatQ& B);

Rat trace(const MatQ& M);
Rat dot(std::span<const Rat> u, std::span<const Rat> v);
bool is_zero(std::span<const Rat> v);

/// Reduced row-echelon form: pivot entries 1, zero above and below each pivot.
struct Echelon {
    MatQ reduced;                      // only the nonzero rows are kept
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Rank by fraction-free (Bareiss) elimination on the integer-scaled rows.
std::size_t rank(const MatQ& M);

/// Fraction-free forward elimination followed by rational back-substitution.
Echelon rref(const MatQ& M);

/// Particular solution (free variables set to zero) of A x = b, if consistent.
std::optional<VecQ> solve(const MatQ& A, std::span<const Rat> b);

/// Inverse of a square matrix; nullopt when singular.
std::optional<MatQ> inverse(const MatQ& A);

} // namespace argshift

#endif // ARGSHIFT_MATRIX_HPP
