#include "argshift/errors.hpp"
#include "argshift/matrix.hpp"
#include "argshift/subspace.hpp"

#include <string>
#include <utility>

namespace argshift {

MatQ MatQ::identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

MatQ MatQ::from_rows(const std::vector<VecQ>& rows) {
    if (rows.empty()) return {};
    MatQ m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

VecQ MatQ::row(std::size_t i) const {
    return VecQ(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

VecQ MatQ::col(std::size_t j) const {
    VecQ c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

MatQ MatQ::transpose() const {
    MatQ t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool MatQ::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool MatQ::is_skew() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!(*this)(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
    return true;
}

VecQ MatQ::apply(std::span<const Rat> v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: length mismatch");
    VecQ out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& a = (*this)(i, j);
            if (!a.is_zero() && !v[j].is_zero()) acc += a * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

MatQ& MatQ::operator+=(const MatQ& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

MatQ& MatQ::operator-=(const MatQ& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

MatQ& MatQ::operator*=(const Rat& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimension mismatch");
    MatQ c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rat& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

MatQ combine(const Rat& a, const MatQ& A, const Rat& b, const MatQ& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionMismatch("combine: shape mismatch");
    MatQ out(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = a * A(i, j) + b * B(i, j);
    return out;
}

MatQ commutator(const MatQ& A, const MatQ& B) { return A * B - B * A; }

Rat trace(const MatQ& M) {
    Rat t;
    for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i) t += M(i, i);
    return t;
}

Rat dot(std::span<const Rat> u, std::span<const Rat> v) {
    if (u.size() != v.size()) throw DimensionMismatch("dot: length mismatch");
    Rat acc;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !v[i].is_zero()) acc += u[i] * v[i];
    return acc;
}

bool is_zero(std::span<const Rat> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Each row scaled by the lcm of its denominators; row scaling preserves
// rank, kernel and row space.
IntMatrix integer_rows(const MatQ& M) {
    IntMatrix out(M.rows(), std::vector<mpz_class>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < M.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < M.cols(); ++j) out[i][j] = M(i, j).num() * (l / M(i, j).den());
    }
    return out;
}

// Bareiss elimination to row-echelon form in place; returns pivot columns.
// Every intermediate division is exact.
std::vector<std::size_t> bareiss_echelon(IntMatrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(a[p], a[r]);
        const mpz_class& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = piv * a[i][j] - lead * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const MatQ& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    IntMatrix a = integer_rows(M);
    return bareiss_echelon(a, M.cols()).size();
}

Echelon rref(const MatQ& M) {
    Echelon e;
    if (M.rows() == 0 || M.cols() == 0) {
        e.reduced = MatQ(0, M.cols());
        return e;
    }
    IntMatrix a = integer_rows(M);
    e.pivots = bareiss_echelon(a, M.cols());
    const std::size_t r = e.pivots.size();
    MatQ R(r, M.cols());
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& piv = a[i][e.pivots[i]];
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (a[i][j] != 0) R(i, j) = Rat(mpq_class(a[i][j], piv));
        }
    }
    // back-substitution: clear entries above each pivot
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t pc = e.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rat f = R(k, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < M.cols(); ++j) {
                if (!R(i, j).is_zero()) R(k, j) -= f * R(i, j);
            }
        }
    }
    e.reduced = std::move(R);
    return e;
}

std::optional<VecQ> solve(const MatQ& A, std::span<const Rat> b) {
    if (b.size() != A.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
    MatQ aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    const Echelon e = rref(aug);
    VecQ x(A.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == A.cols()) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, A.cols());
    }
    return x;
}

std::optional<MatQ> inverse(const MatQ& A) {
    if (A.rows() != A.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = A.rows();
    MatQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = Rat(1);
    }
    const Echelon e = rref(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    MatQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// --- subspaces --------------------------------------------------------------

SubspaceQ SubspaceQ::span(std::size_t ambient, const std::vector<VecQ>& vectors) {
    SubspaceQ s(ambient);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
        if (v.size() != ambient) throw DimensionMismatch("span: vector length differs from ambient dimension");
    const Echelon e = rref(MatQ::from_rows(vectors));
    s.pivots_ = e.pivots;
    for (std::size_t i = 0; i < e.reduced.rows(); ++i) s.basis_.push_back(e.reduced.row(i));
    return s;
}

SubspaceQ SubspaceQ::whole(std::size_t ambient) {
    SubspaceQ s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        VecQ v(ambient);
        v[i] = Rat(1);
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

std::optional<VecQ> SubspaceQ::coordinates(std::span<const Rat> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("coordinates: vector length differs from ambient dimension");
    // In RREF the coordinate along basis row i is the entry at its pivot column.
    VecQ coords(basis_.size());
    VecQ residual(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        coords[i] = residual[pivots_[i]];
        if (coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_[i][j].is_zero()) residual[j] -= coords[i] * basis_[i][j];
    }
    if (!argshift::is_zero(residual)) return std::nullopt;
    return coords;
}

bool SubspaceQ::contains(std::span<const Rat> v) const { return coordinates(v).has_value(); }

bool SubspaceQ::contains(const SubspaceQ& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient dimension mismatch");
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

MatQ SubspaceQ::as_rows() const {
    if (basis_.empty()) return MatQ(0, ambient_);
    return MatQ::from_rows(basis_);
}

RankKernel rank_kernel(const MatQ& M) {
    RankKernel out;
    out.kernel = SubspaceQ(M.cols());
    const Echelon e = rref(M);
    out.rank = e.pivots.size();
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<VecQ> generators;
    for (std::size_t f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        VecQ v(M.cols());
        v[f] = Rat(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        generators.push_back(std::move(v));
    }
    out.kernel = SubspaceQ::span(M.cols(), generators);
    return out;
}

SubspaceQ subspace_sum(const SubspaceQ& U, const SubspaceQ& W) {
    if (U.ambient_dim() != W.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimension mismatch");
    std::vector<VecQ> all = U.basis();
    all.insert(all.end(), W.basis().begin(), W.basis().end());
    return SubspaceQ::span(U.ambient_dim(), all);
}

SubspaceQ annihilator(const SubspaceQ& U) {
    if (U.dim() == 0) return SubspaceQ::whole(U.ambient_dim());
    return rank_kernel(U.as_rows()).kernel;
}

SubspaceQ intersect(const SubspaceQ& U, const SubspaceQ& W) {
    if (U.ambient_dim() != W.ambient_dim()) throw DimensionMismatch("intersect: ambient dimension mismatch");
    return annihilator(subspace_sum(annihilator(U), annihilator(W)));
}

SubspaceQ image(const MatQ& M, const SubspaceQ& U) {
    if (M.cols() != U.ambient_dim()) throw DimensionMismatch("image: matrix columns differ from ambient dimension");
    std::vector<VecQ> imgs;
    imgs.reserve(U.dim());
    for (const auto& u : U.basis()) imgs.push_back(M.apply(u));
    return SubspaceQ::span(M.rows(), imgs);
}

} // namespace argshift
