#include "argshift/pencil.hpp"

#include "argshift/errors.hpp"
#include "argshift/io.hpp"
#include "argshift/poisson.hpp"
#include "argshift/poly_matrix.hpp"
#include "argshift/sampling.hpp"

#include <algorithm>

namespace argshift {

namespace {

constexpr std::size_t kRandomMembers = 5;

io::Json ratio_json(const Ratio& r) { return io::Json::array({io::to_json(r.a), io::to_json(r.b)}); }

std::string pencil_bundle(const SkewPencil& P, io::Json extra) {
    extra["A"] = io::to_json(P.A());
    extra["B"] = io::to_json(P.B());
    return extra.dump();
}

MatQ columns(const std::vector<VecQ>& vs, std::size_t n) {
    MatQ M(n, vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) M(r, c) = vs[c][r];
    return M;
}

} // namespace

SkewPencil::SkewPencil(MatQ A, MatQ B, std::uint64_t seed) : A_(std::move(A)), B_(std::move(B)), seed_(seed) {
    if (A_.rows() != A_.cols() || B_.rows() != B_.cols() || A_.rows() != B_.rows()) {
        throw DimensionMismatch("pencil forms must be square of the same size");
    }
    if (!A_.is_skew() || !B_.is_skew()) throw PreconditionFailed("pencil forms must be skew-symmetric");
}

SkewPencil SkewPencil::from_kirillov(const LieAlgebraData& L, const PointQ& p1, const PointQ& p2, std::uint64_t seed) {
    return SkewPencil(kirillov_matrix(L, p1), kirillov_matrix(L, p2), seed);
}

Ratio SkewPencil::sample_ratio(std::size_t k) {
    if (k == 0) return {Rat(1), Rat(0)};
    if (k == 1) return {Rat(0), Rat(1)};
    return {Rat(1), Rat(static_cast<long>(k - 1))};
}

Ratio SkewPencil::random_member(std::uint64_t index) const {
    CounterRng rng(seed_, 0x70656e63ULL + index);
    Ratio r;
    do {
        r = {Rat(rng.uniform(-9, 9)), Rat(rng.uniform(-9, 9))};
    } while (r.a.is_zero() && r.b.is_zero());
    return r;
}

const RankProfile& SkewPencil::rank_profile(std::size_t nsamples) {
    if (nsamples == 0) nsamples = dim() + 1;
    if (nsamples < dim() + 1) throw PreconditionFailed("rank_profile needs at least dim V + 1 samples");
    if (profile_ && profile_->regular.size() + profile_->singular.size() == nsamples) return *profile_;
    std::vector<std::pair<Ratio, std::size_t>> ranks;
    for (std::size_t k = 0; k < nsamples; ++k) ranks.emplace_back(sample_ratio(k), rank(member(sample_ratio(k))));
    RankProfile p;
    for (const auto& [r, rk] : ranks) p.m = std::max(p.m, rk);
    for (const auto& [r, rk] : ranks) (rk == p.m ? p.regular : p.singular).push_back(r);
    p.unsampled_singular_bound = p.m > p.singular.size() ? p.m - p.singular.size() : 0;
    profile_ = std::move(p);
    return *profile_;
}

const SubspaceQ& SkewPencil::compute_L() {
    if (L_) return *L_;
    const std::size_t m = rank_profile().m;
    const std::size_t n = dim();
    const std::size_t cap = (n + 1) * (n + 1) + m + 2;
    SubspaceQ sum(n);
    bool any_regular = false;
    std::size_t quiet = 0;
    for (std::size_t k = 0; k < cap && (quiet < n || !any_regular); ++k) {
        const auto rk = rank_kernel(member(sample_ratio(k)));
        if (rk.rank != m) continue;
        any_regular = true;
        SubspaceQ grown = subspace_sum(sum, rk.kernel);
        quiet = grown.dim() == sum.dim() ? quiet + 1 : 0;
        sum = std::move(grown);
    }
    if (!any_regular) throw PreconditionFailed("compute_L: no regular member among the samples");
    L_ = std::move(sum);
    return *L_;
}

bool SkewPencil::check_image_equality() {
    if (!L_) throw PreconditionFailed("check_image_equality: L has not been computed");
    const SubspaceQ ia = image(A_, *L_);
    if (!(image(B_, *L_) == ia)) return false;
    for (std::uint64_t t = 0; t < kRandomMembers; ++t)
        if (!(image(member(random_member(t)), *L_) == ia)) return false;
    return true;
}

const SubspaceQ& SkewPencil::compute_Ltilde() {
    if (Ltilde_) return *Ltilde_;
    const auto& L = compute_L();
    const Ratio reg = rank_profile().regular.front();
    SubspaceQ lt = annihilator(image(member(reg), L));
    // Â(L) is the same for every nonzero member; check with the base forms.
    for (const MatQ* other : {&A_, &B_}) {
        if (other->is_zero()) continue;
        if (!(annihilator(image(*other, L)) == lt)) {
            throw FalsificationEvent("L~ depends on the chosen member", pencil_bundle(*this, {{"regular", ratio_json(reg)}}));
        }
    }
    if (!lt.contains(L)) throw FalsificationEvent("L is not contained in L~", pencil_bundle(*this, {}));
    Ltilde_ = std::move(lt);
    return *Ltilde_;
}

PhiOperator SkewPencil::phi_operator(const Ratio& a_choice, const Ratio& b_choice) {
    const std::size_t n = dim();
    const MatQ Ac = member(a_choice);
    const MatQ Bc = member(b_choice);
    if (rank(Ac) != rank_profile().m) throw PreconditionFailed("phi_operator: A_choice is not a regular member");
    const SubspaceQ& L = compute_L();
    const SubspaceQ& Lt = compute_Ltilde();

    PhiOperator phi{a_choice, b_choice, {}, {}, {}, {}, {}};
    SubspaceQ spanned = L;
    for (const auto& v : Lt.basis()) {
        if (spanned.contains(v)) continue;
        phi.complement.push_back(v);
        auto gens = spanned.basis();
        gens.push_back(v);
        spanned = SubspaceQ::span(n, gens);
    }
    std::vector<VecQ> adapted = L.basis();
    adapted.insert(adapted.end(), phi.complement.begin(), phi.complement.end());
    const MatQ Q = columns(adapted, n);
    const MatQ T = columns(Lt.basis(), n);
    const MatQ AT = Ac * T;
    const std::size_t c = phi.complement.size();
    const std::size_t dl = L.dim();

    // class of w with A_choice·w = B_choice·v, w ∈ L̃, in complement coordinates
    auto solve_class = [&](const VecQ& v, const VecQ& shift) {
        const auto y = solve(AT, Bc.apply(v));
        if (!y) {
            throw FalsificationEvent("B(L~) is not contained in A(L~)",
                                     pencil_bundle(*this, {{"a_choice", ratio_json(a_choice)}, {"b_choice", ratio_json(b_choice)}}));
        }
        VecQ yy = *y;
        for (std::size_t i = 0; i < yy.size() && i < shift.size(); ++i) yy[i] += shift[i];
        const auto coords = solve(Q, T.apply(yy));
        VecQ cls(coords->begin() + static_cast<std::ptrdiff_t>(dl), coords->end());
        return cls;
    };

    const auto ker = rank_kernel(AT).kernel;
    const VecQ ker_shift = ker.dim() ? ker.basis().front() : VecQ{};
    VecQ l_shift(n);
    for (const auto& u : L.basis())
        for (std::size_t i = 0; i < n; ++i) l_shift[i] += u[i];

    phi.matrix = MatQ(c, c);
    for (std::size_t col = 0; col < c; ++col) {
        const VecQ& v = phi.complement[col];
        const VecQ cls = solve_class(v, {});
        VecQ v_shifted = v;
        for (std::size_t i = 0; i < n; ++i) v_shifted[i] += l_shift[i];
        if (solve_class(v, ker_shift) != cls || solve_class(v_shifted, {}) != cls) {
            throw FalsificationEvent("Phi depends on the choice of solution",
                                     pencil_bundle(*this, {{"a_choice", ratio_json(a_choice)}, {"b_choice", ratio_json(b_choice)}}));
        }
        for (std::size_t r = 0; r < c; ++r) phi.matrix(r, col) = cls[r];
    }
    phi.char_poly = characteristic_polynomial(phi.matrix);
    std::tie(phi.rational_eigenvalues, phi.residual_factor) = rational_roots(phi.char_poly);
    return phi;
}

namespace {

// A regular member first in sampling order, and a member independent of it.
std::pair<Ratio, Ratio> default_phi_choice(const RankProfile& p) {
    const Ratio a = p.regular.front();
    const Ratio b = a.a.is_zero() ? Ratio{Rat(1), Rat(0)} : Ratio{Rat(0), Rat(1)};
    return {a, b};
}

} // namespace

Com1Report SkewPencil::verify_com1() {
    Com1Report r;
    const auto& p = rank_profile();
    const auto& L = compute_L();
    const auto& Lt = compute_Ltilde();
    const std::size_t n = dim();
    r.all_sampled_regular = p.singular.empty();
    r.line_certificate = minor_gcd(linear_pencil(A_, B_), p.m, seed_);
    r.precondition = r.line_certificate.constant();
    r.l_equals_ltilde = L == Lt;
    r.dim_l = L.dim();
    r.maximal_isotropic_dim = (2 * n - p.m) / 2;
    r.isotropic = true;
    for (std::uint64_t t = 0; t < kRandomMembers && r.isotropic; ++t) {
        const MatQ M = member(random_member(t));
        for (const auto& u : L.basis()) {
            const VecQ Mu = M.apply(u);
            for (const auto& v : L.basis())
                if (!dot(v, Mu).is_zero()) r.isotropic = false;
        }
    }
    if (r.precondition) {
        if (!r.l_equals_ltilde) r.detail = "all members regular but L != L~";
        else if (r.dim_l != r.maximal_isotropic_dim) r.detail = "L is not of maximal isotropic dimension";
        else if (!r.isotropic) r.detail = "L is not isotropic";
        r.falsified = !r.detail.empty();
    }
    if (!r.l_equals_ltilde) {
        const auto [ac, bc] = default_phi_choice(p);
        const PhiOperator phi = phi_operator(ac, bc);
        const MatQ Ac = member(ac);
        const MatQ Bc = member(bc);
        for (const Rat& lambda : phi.rational_eigenvalues) {
            if (!r.eigen_checks.empty() && r.eigen_checks.back().lambda == lambda) continue;
            EigenCheck e{lambda, rank(Bc - Ac * lambda), false};
            e.singular = e.rank < p.m;
            if (!e.singular && !r.falsified) {
                r.falsified = true;
                r.detail = "eigenvalue " + lambda.str() + " of Phi gives a regular member";
            }
            r.eigen_checks.push_back(e);
        }
    }
    return r;
}

std::vector<Rat> characteristic_polynomial(const MatQ& M) {
    const std::size_t n = M.rows();
    if (M.cols() != n) throw DimensionMismatch("characteristic_polynomial: matrix is not square");
    std::vector<Rat> c(n + 1);
    c[n] = Rat(1);
    MatQ Mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Mk = M * Mk + MatQ::identity(n) * c[n - k + 1];
        c[n - k] = -trace(M * Mk) / Rat(static_cast<long>(k));
    }
    return c;
}

namespace {

std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    if (v > mpz_class("1000000000000")) throw PreconditionFailed("rational root search: coefficient too large");
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        small.push_back(d);
        if (d * d != v) large.push_back(v / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Rat eval(const std::vector<Rat>& p, const Rat& x) {
    Rat acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// p / (t − x) for a root x.
std::vector<Rat> deflate(const std::vector<Rat>& p, const Rat& x) {
    std::vector<Rat> q(p.size() - 1);
    Rat carry;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        carry = carry * x + p[i + 1];
        q[i] = carry;
    }
    return q;
}

} // namespace

std::pair<std::vector<Rat>, std::vector<Rat>> rational_roots(std::vector<Rat> poly) {
    while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
    if (poly.empty()) throw PreconditionFailed("rational_roots: zero polynomial");
    std::vector<Rat> roots;
    while (poly.size() > 1 && poly.front().is_zero()) {
        roots.push_back(Rat(0));
        poly.erase(poly.begin());
    }
    if (poly.size() > 1) {
        mpz_class scale = 1;
        for (const auto& c : poly) scale = lcm(scale, c.den());
        const mpz_class a0 = (poly.front() * Rat(scale)).num();
        const mpz_class an = (poly.back() * Rat(scale)).num();
        std::vector<Rat> candidates;
        for (const auto& p : divisors(a0))
            for (const auto& q : divisors(an)) {
                const Rat x(mpq_class(p, q));
                candidates.push_back(x);
                candidates.push_back(-x);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& x : candidates)
            while (poly.size() > 1 && eval(poly, x).is_zero()) {
                roots.push_back(x);
                poly = deflate(poly, x);
            }
    }
    std::sort(roots.begin(), roots.end());
    return {roots, poly};
}

PencilReport analyze(SkewPencil& P) {
    PencilReport r;
    r.profile = P.rank_profile();
    r.L = P.compute_L();
    r.image_equality = P.check_image_equality();
    r.Ltilde = P.compute_Ltilde();
    if (!(r.L == r.Ltilde)) {
        const auto [a, b] = default_phi_choice(r.profile);
        r.phi = P.phi_operator(a, b);
    }
    r.com1 = P.verify_com1();
    return r;
}

} // namespace argshift
