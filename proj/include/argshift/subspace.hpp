#ifndef ARGSHIFT_SUBSPACE_HPP
#define ARGSHIFT_SUBSPACE_HPP

#include "argshift/matrix.hpp"

#include <vector>

namespace argshift {

/*
 * Linear subspace of Q^n stored by its canonical basis: the nonzero rows of
 * the reduced row-echelon form of any spanning set. Two subspaces are equal
 * iff their bases compare equal.
 */
class SubspaceQ {
public:
    explicit SubspaceQ(std::size_t ambient = 0) : ambient_(ambient) {}

    static SubspaceQ span(std::size_t ambient, const std::vector<VecQ>& vectors);
    static SubspaceQ whole(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<VecQ>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Rat> v) const;
    bool contains(const SubspaceQ& other) const;

    /// Coordinates of v in the canonical basis; nullopt if v is outside.
    std::optional<VecQ> coordinates(std::span<const Rat> v) const;

    /// Basis as the rows of a dim × ambient matrix.
    MatQ as_rows() const;

    friend bool operator==(const SubspaceQ& a, const SubspaceQ& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<VecQ> basis_;
    std::vector<std::size_t> pivots_;
};

struct RankKernel {
    std::size_t rank = 0;
    SubspaceQ kernel;
};

/// rank(M) and ker(M) ⊂ Q^cols, with rank + dim ker = cols.
RankKernel rank_kernel(const MatQ& M);

SubspaceQ subspace_sum(const SubspaceQ& U, const SubspaceQ& W);
SubspaceQ intersect(const SubspaceQ& U, const SubspaceQ& W);

/// {v : ⟨v,u⟩ = 0 for all u ∈ U} under the standard pairing.
SubspaceQ annihilator(const SubspaceQ& U);

/// M(U) = span{M u : u ∈ basis(U)}.
SubspaceQ image(const MatQ& M, const SubspaceQ& U);

} // namespace argshift

#endif // ARGSHIFT_SUBSPACE_HPP
