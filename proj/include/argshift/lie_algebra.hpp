#ifndef ARGSHIFT_LIE_ALGEBRA_HPP
#define ARGSHIFT_LIE_ALGEBRA_HPP

#include "argshift/matrix.hpp"
#include "argshift/mpoly.hpp"
#include "argshift/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace argshift {

/// Sparse combination Σ_k c_k b_k of basis vectors, keyed by k.
using BasisCombination = std::map<std::size_t, Rat>;

/// One row of a bracket table as read from input: [b_i, b_j] = Σ coeffs[k] b_k.
struct BracketEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    BasisCombination coeffs;
};

/*
 * Finite-dimensional Lie algebra given by structure constants c_ij^k over Q.
 * Only brackets with i < j are stored; the rest follow by antisymmetry, so
 * every instance is antisymmetric by construction. The Jacobi identity is
 * not enforced here; see validate().
 */
class LieAlgebraData {
public:
    LieAlgebraData() = default;
    /// Abelian algebra with the given basis names.
    explicit LieAlgebraData(std::vector<std::string> basis_names);

    static LieAlgebraData abelian(std::size_t dim);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    /// "x_<name>" for each basis vector: the coordinate functions on q*.
    std::vector<std::string> coordinate_names() const;

    /// Sets [b_i, b_j]; i > j is stored negated at (j, i). i == j must be zero.
    void set_bracket(std::size_t i, std::size_t j, const BasisCombination& value);
    BasisCombination bracket(std::size_t i, std::size_t j) const;
    Rat structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

    /// Nonzero brackets with i < j.
    const std::map<std::pair<std::size_t, std::size_t>, BasisCombination>& upper_table() const { return table_; }

    bool is_abelian() const { return table_.empty(); }

    /// Matrix realization of the basis, when the algebra was built from matrices.
    const std::optional<std::vector<MatQ>>& realization() const { return realization_; }
    void set_realization(std::vector<MatQ> mats) { realization_ = std::move(mats); }

    /// Same dimension and structure constants (names ignored).
    bool same_structure(const LieAlgebraData& o) const { return dim() == o.dim() && table_ == o.table_; }

    friend bool operator==(const LieAlgebraData& a, const LieAlgebraData& b) {
        return a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::pair<std::size_t, std::size_t>, BasisCombination> table_;
    std::optional<std::vector<MatQ>> realization_;
};

struct ValidationReport {
    bool ok = true;
    std::string violation;            // empty when ok
    std::vector<std::size_t> witness; // indices involved in the first violation
};

/// Antisymmetry of the stored table and the Jacobi identity, both exact.
ValidationReport validate(const LieAlgebraData& L);

/// As validate(), but also checks antisymmetry across raw input rows (both (i,j) and (j,i) may be given).
ValidationReport validate_entries(const std::vector<std::string>& names, const std::vector<BracketEntry>& entries);

/// Builds an algebra from raw rows; throws PreconditionFailed when the rows contradict antisymmetry.
LieAlgebraData from_entries(std::vector<std::string> names, const std::vector<BracketEntry>& entries);

/// Index, b(q) and how the index was obtained.
enum class IndexSource { Estimated, Declared };

struct AlgebraProfile {
    std::size_t dim = 0;
    std::size_t ind = 0;
    IndexSource source = IndexSource::Declared;
    // estimation details
    std::size_t max_rank = 0;
    std::optional<PointQ> witness;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    long bound = 0;

    /// Rank of K_ξ at regular points: dim − ind.
    std::size_t regular_rank() const { return dim - ind; }
    /// b(q) = (dim + ind)/2, only when dim + ind is even.
    std::optional<std::size_t> b() const {
        if ((dim + ind) % 2 != 0) return std::nullopt;
        return (dim + ind) / 2;
    }
};

AlgebraProfile declared_profile(std::size_t dim, std::size_t ind);

// --- constructors -------------------------------------------------------------

enum class ClassicalFamily { gl, sl, so };

ClassicalFamily parse_family(const std::string& name);
std::string family_name(ClassicalFamily f);

/// Basis matrices used by make_classical, in basis order.
std::vector<MatQ> classical_basis(ClassicalFamily family, std::size_t n);

/*
 * gl_n: E_ij row-major. sl_n: E_ij (i<j), then H_k = E_kk − E_{k+1,k+1}, then
 * E_ij (i>j); for n = 2 the names are e, h, f. so_n: F_ij = E_ij − E_ji, i<j.
 */
LieAlgebraData make_classical(ClassicalFamily family, std::size_t n);

/// Structure constants of the span of the given matrices; throws if not closed under commutators.
LieAlgebraData structure_from_matrices(std::vector<std::string> names, const std::vector<MatQ>& mats);

/// (i, j) with [ρ_i, ρ_j] ≠ Σ c_ij^k ρ_k, if any.
std::optional<std::pair<std::size_t, std::size_t>> representation_defect(const LieAlgebraData& g,
                                                                          const std::vector<MatQ>& rho);

/// g ⋉ V with [(x,v),(y,w)] = ([x,y], ρ(x)w − ρ(y)v); V-basis names default to v1..vd.
LieAlgebraData make_semidirect(const LieAlgebraData& g, const std::vector<MatQ>& rho,
                               std::vector<std::string> v_names = {});

/// k·s ⋉ V with s = diag(eigenvalues); all eigenvalues nonzero.
LieAlgebraData make_vinberg(const std::vector<Rat>& eigenvalues);

/// q ⊗ k[T]/(T^{n+1}); basis b_i ⊗ T^l at index l·dim + i.
LieAlgebraData make_takiff(const LieAlgebraData& q, std::size_t n);

/// Sets [g₁, g₁] to zero after checking that parity is a Z₂-grading.
LieAlgebraData make_z2_contraction(const LieAlgebraData& g, const std::vector<int>& parity);

/// Centralizer of the Jordan nilpotent of the given partition in sl_n.
LieAlgebraData make_centralizer_sl(std::size_t n, const std::vector<std::size_t>& partition);

/// Change of basis: row a of new_basis expresses u_a in the old basis. Must be invertible.
LieAlgebraData rebase(const LieAlgebraData& L, const MatQ& new_basis, std::vector<std::string> names);

} // namespace argshift

#endif // ARGSHIFT_LIE_ALGEBRA_HPP
