#ifndef ARGSHIFT_PENCIL_HPP
#define ARGSHIFT_PENCIL_HPP

#include "argshift/lie_algebra.hpp"
#include "argshift/matrix.hpp"
#include "argshift/regcert.hpp"
#include "argshift/subspace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace argshift {

/// The member a·A + b·B of a pencil.
struct Ratio {
    Rat a;
    Rat b;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct RankProfile {
    std::size_t m = 0;
    std::vector<Ratio> regular;
    std::vector<Ratio> singular;
    /// Singular ratios not sampled: at most m minus those found, since a nonzero m-minor along the line has degree m.
    std::size_t unsampled_singular_bound = 0;
};

struct PhiOperator {
    Ratio a_choice;
    Ratio b_choice;
    /// Basis of L̃ modulo L: vectors of L̃ completing the basis of L.
    std::vector<VecQ> complement;
    MatQ matrix; // column c = class of Φ(complement[c])
    /// det(t·I − Φ), coefficients by ascending power.
    std::vector<Rat> char_poly;
    /// Rational eigenvalues with multiplicity, ascending.
    std::vector<Rat> rational_eigenvalues;
    /// char_poly with every rational root divided out.
    std::vector<Rat> residual_factor;
};

struct EigenCheck {
    Rat lambda;
    std::size_t rank = 0; // of B_choice − λ·A_choice
    bool singular = false;
};

struct Com1Report {
    bool all_sampled_regular = false;
    MinorGcd line_certificate; // m-minors of aA + bB in (a, b)
    bool precondition = false; // constant line certificate: every nonzero member regular
    bool l_equals_ltilde = false;
    std::size_t dim_l = 0;
    std::size_t maximal_isotropic_dim = 0; // (dim V + dim V − m)/2
    bool isotropic = false;                // over 5 random members
    std::vector<EigenCheck> eigen_checks;
    /// A consequence of a proven statement failed; see `detail`.
    bool falsified = false;
    std::string detail;
};

/*
 * Two-dimensional space of skew forms on V = Q^n spanned by A and B, with
 * the subspaces of the sum-of-kernels construction cached as they are
 * computed. Members are sampled at the ratios (1,0), (0,1), (1,1), (1,2), ...
 */
class SkewPencil {
public:
    SkewPencil(MatQ A, MatQ B, std::uint64_t seed = 0);

    /// A = K_{p1}, B = K_{p2}.
    static SkewPencil from_kirillov(const LieAlgebraData& L, const PointQ& p1, const PointQ& p2, std::uint64_t seed = 0);

    const MatQ& A() const { return A_; }
    const MatQ& B() const { return B_; }
    std::size_t dim() const { return A_.rows(); }
    MatQ member(const Ratio& r) const { return combine(r.a, A_, r.b, B_); }

    /// nsamples = 0 means dim V + 1; fewer than dim V + 1 throws.
    const RankProfile& rank_profile(std::size_t nsamples = 0);
    /// Sum of kernels of regular members until dim V consecutive samples add nothing.
    const SubspaceQ& compute_L();
    /// Â(L) = B̂(L), and equal to the image under 5 random nonzero members. Throws if L is missing.
    bool check_image_equality();
    /// Annihilator of Â(L) for a regular member; throws FalsificationEvent if another member disagrees or L ⊄ L̃.
    const SubspaceQ& compute_Ltilde();
    /// Φ for a regular A_choice and any member B_choice. Throws PreconditionFailed if A_choice is singular.
    PhiOperator phi_operator(const Ratio& a_choice, const Ratio& b_choice);
    Com1Report verify_com1();

    const std::optional<SubspaceQ>& L() const { return L_; }
    const std::optional<SubspaceQ>& Ltilde() const { return Ltilde_; }

    /// Sampled ratio number k: (1,0), (0,1), (1,1), (1,2), ...
    static Ratio sample_ratio(std::size_t k);

private:
    Ratio random_member(std::uint64_t index) const;

    MatQ A_;
    MatQ B_;
    std::uint64_t seed_;
    std::optional<RankProfile> profile_;
    std::optional<SubspaceQ> L_;
    std::optional<SubspaceQ> Ltilde_;
};

/// Characteristic polynomial det(t·I − M), ascending coefficients (Faddeev–LeVerrier).
std::vector<Rat> characteristic_polynomial(const MatQ& M);

/// Rational roots with multiplicity (ascending) and the cofactor left after dividing them out.
std::pair<std::vector<Rat>, std::vector<Rat>> rational_roots(std::vector<Rat> poly);

struct PencilReport {
    RankProfile profile;
    SubspaceQ L;
    bool image_equality = false;
    SubspaceQ Ltilde;
    std::optional<PhiOperator> phi; // absent when L̃ = L
    Com1Report com1;
};

PencilReport analyze(SkewPencil& P);

} // namespace argshift

#endif // ARGSHIFT_PENCIL_HPP
