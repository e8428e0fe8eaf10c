#include "argshift/regcert.hpp"

#include "argshift/errors.hpp"
#include "argshift/io.hpp"
#include "argshift/poly_gcd.hpp"
#include "argshift/sampling.hpp"

#include <algorithm>
#include <unordered_map>

namespace argshift {

namespace {

constexpr std::size_t kMinorBatch = 32;

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) throw PreconditionFailed("minor count exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

// The rank-th k-subset of {0..n−1} in lexicographic order.
std::vector<std::size_t> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (;; ++next) {
            const std::uint64_t with = binomial(n - next - 1, k - slot - 1);
            if (rank < with) break;
            rank -= with;
        }
        out.push_back(next++);
    }
    return out;
}

// Lazy Fisher–Yates over [0, total): each draw is a fresh element of a seeded permutation.
class LazyPermutation {
public:
    LazyPermutation(std::uint64_t total, std::uint64_t seed) : total_(total), rng_(seed, 0x6d696e6f72ULL) {}

    bool done() const { return i_ == total_; }

    std::uint64_t next() {
        const std::uint64_t span = total_ - i_;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r = rng_.next();
        while (r >= limit) r = rng_.next();
        const std::uint64_t j = i_ + r % span;
        const std::uint64_t vj = value(j);
        swapped_[j] = value(i_);
        swapped_.erase(i_);
        ++i_;
        return vj;
    }

private:
    std::uint64_t value(std::uint64_t k) const {
        const auto it = swapped_.find(k);
        return it == swapped_.end() ? k : it->second;
    }

    std::uint64_t total_;
    std::uint64_t i_ = 0;
    CounterRng rng_;
    std::unordered_map<std::uint64_t, std::uint64_t> swapped_;
};

MPoly squarefree_part(const MPoly& h) {
    if (h.is_constant()) return h;
    std::vector<MPoly> parts{h};
    for (std::size_t k = 0; k < h.nvars(); ++k) parts.push_back(partial(h, k));
    return monic(divide_exact(h, poly_gcd(parts)));
}

bool independent_pair(const PointQ& xi, const PointQ& eta) { return rank(MatQ::from_rows({xi.coords, eta.coords})) == 2; }

void check_point(const LieAlgebraData& L, const PointQ& p, const char* op) {
    if (p.size() != L.dim()) throw DimensionMismatch(std::string(op) + ": point length differs from dim");
}

std::string bundle(const LieAlgebraData& L, const CasimirSet& C, io::Json extra) {
    io::Json gens = io::Json::array();
    for (const auto& g : C.generators()) gens.push_back(io::to_json(g));
    extra["algebra"] = io::to_json(L);
    extra["casimirs"] = gens;
    return extra.dump();
}

} // namespace

MinorGcd minor_gcd(const PolyMatrix& M, std::size_t m, std::uint64_t seed) {
    MinorGcd r;
    r.order = m;
    r.seed = seed;
    r.gcd = MPoly(M.nvars());
    const std::uint64_t nr = binomial(M.rows(), m);
    const std::uint64_t nc = binomial(M.cols(), m);
    if (nr != 0 && nc > UINT64_MAX / nr) throw PreconditionFailed("minor count exceeds 64 bits");
    r.total = nr * nc;

    LazyPermutation order(r.total, seed);
    GcdAccumulator acc(M.nvars());
    while (!order.done() && !acc.is_constant()) {
        std::vector<kernels::MinorIndex> batch;
        while (batch.size() < kMinorBatch && !order.done()) {
            const std::uint64_t k = order.next();
            batch.push_back({unrank_subset(M.rows(), m, k / nc), unrank_subset(M.cols(), m, k % nc)});
        }
        const auto values = kernels::minors(M, batch);
        for (std::size_t b = 0; b < batch.size(); ++b) {
            const MPoly before = acc.value();
            const bool constant = acc.add(values[b]);
            if (!(acc.value() == before)) {
                r.effective.push_back(batch[b]);
                r.effective_values.push_back(values[b]);
            }
            if (constant) break;
        }
    }
    r.consumed = acc.consumed();
    r.gcd = acc.value();
    return r;
}

GenericKirillov generic_kirillov(const LieAlgebraData& L) {
    const std::size_t n = L.dim();
    PolyMatrix M(n, n, n);
    for (const auto& [key, coeffs] : L.upper_table()) {
        MPoly w(n);
        for (const auto& [k, c] : coeffs) w += MPoly::variable(n, k) * c;
        M(key.second, key.first) = -w;
        M(key.first, key.second) = std::move(w);
    }
    return {std::move(M)};
}

bool is_regular(const LieAlgebraData& L, const AlgebraProfile& profile, const PointQ& xi) {
    check_point(L, xi, "is_regular");
    if (profile.dim != L.dim()) throw DimensionMismatch("is_regular: profile is for another dimension");
    return rank(kirillov_matrix(L, xi)) == profile.regular_rank();
}

PointQ sample_regular_point(const LieAlgebraData& L, const AlgebraProfile& profile, std::uint64_t seed, long bound,
                            std::size_t tries) {
    constexpr std::uint64_t kStream = 0x78690000ULL;
    for (std::uint64_t k = 0; k < tries; ++k) {
        PointQ p = random_point(L.dim(), bound, seed, kStream + k);
        if (is_regular(L, profile, p)) return p;
    }
    throw PreconditionFailed("no regular point among " + std::to_string(tries) + " samples");
}

KostantCheck kostant_criterion(const LieAlgebraData& L, const CasimirSet& C, const AlgebraProfile& profile,
                               const PointQ& xi) {
    const auto dp = degree_profile(C, profile);
    if (dp.verdict != DegreeVerdict::Exact) {
        throw PreconditionFailed("kostant_criterion needs sum of degrees = b(q); have " + dp.arithmetic);
    }
    check_point(L, xi, "kostant_criterion");
    KostantCheck k;
    k.regular_by_rank = is_regular(L, profile, xi);
    k.independent_differentials = rank(kernels::gradient_matrix(C.generators(), xi)) == C.size();
    return k;
}

PlaneSpec certify_regular_plane(const LieAlgebraData& L, const AlgebraProfile& profile, const PointQ& xi,
                                const PointQ& eta, std::uint64_t seed) {
    check_point(L, xi, "certify_regular_plane");
    check_point(L, eta, "certify_regular_plane");
    if (!independent_pair(xi, eta)) throw PreconditionFailed("certify_regular_plane: xi and eta are dependent");
    PlaneSpec P{xi, eta, std::nullopt};
    P.certificate = minor_gcd(linear_pencil(kirillov_matrix(L, xi), kirillov_matrix(L, eta)), profile.regular_rank(), seed);
    return P;
}

Codim2Result certify_codim2(const LieAlgebraData& L, const AlgebraProfile& profile, std::uint64_t seed) {
    if (profile.dim != L.dim()) throw DimensionMismatch("certify_codim2: profile is for another dimension");
    Codim2Result r{minor_gcd(generic_kirillov(L).matrix, profile.regular_rank(), seed), std::nullopt};
    if (r.minors.gcd.is_zero()) {
        throw PreconditionFailed("every " + std::to_string(profile.regular_rank()) +
                                 "-minor of the generic Kirillov matrix vanishes: ind is underestimated");
    }
    if (!r.certified()) r.hypersurface = squarefree_part(r.minors.gcd);
    return r;
}

PlaneSearch find_regular_plane(const LieAlgebraData& L, const AlgebraProfile& profile, const PointQ& xi,
                               std::size_t attempts, std::uint64_t seed, long bound) {
    if (!is_regular(L, profile, xi)) throw PreconditionFailed("find_regular_plane: xi is not regular");
    PlaneSearch s;
    for (std::size_t t = 0; t < attempts; ++t) {
        ++s.attempts;
        const PointQ eta = random_point(L.dim(), bound, seed, t);
        if (!independent_pair(xi, eta)) continue;
        PlaneSpec P = certify_regular_plane(L, profile, xi, eta, seed);
        if (P.certified()) {
            s.plane = std::move(P);
            return s;
        }
        s.last_witness = P.certificate->gcd;
    }
    return s;
}

std::size_t jacobian_rank(const ShiftFamily& F, const PointQ& eta) {
    if (eta.size() != F.xi.size()) throw DimensionMismatch("jacobian_rank: point length differs from dim");
    if (F.members.empty()) return 0;
    return rank(kernels::gradient_matrix(F.polys(), eta));
}

namespace {

std::size_t require_hypotheses(const CasimirSet& C, const AlgebraProfile& profile, const Codim2Result& codim2,
                                       const char* op) {
    if (!codim2.certified()) throw PreconditionFailed(std::string(op) + ": codim-2 is not certified");
    if (C.size() != profile.ind) {
        throw PreconditionFailed(std::string(op) + ": " + std::to_string(C.size()) + " Casimirs but ind = " +
                                 std::to_string(profile.ind));
    }
    const auto b = profile.b();
    if (!b) throw PreconditionFailed(std::string(op) + ": dim + ind is odd");
    return *b;
}

} // namespace

ComplReport verify_compl(const LieAlgebraData& L, const CasimirSet& C, const AlgebraProfile& profile,
                         const Codim2Result& codim2, const PlaneSpec& P, std::size_t samples, std::uint64_t seed,
                         long bound) {
    ComplReport r;
    r.b = require_hypotheses(C, profile, codim2, "verify_compl");
    if (!P.certified()) throw PreconditionFailed("verify_compl: plane is not certified regular");
    if (rank(kernels::gradient_matrix(C.generators(), P.xi)) != profile.ind) {
        throw PreconditionFailed("verify_compl: Casimir differentials at xi span less than ind");
    }
    for (std::uint64_t t = 0; r.pairs.size() < samples; ++t) {
        if (t >= 64 * (samples + 1)) throw PreconditionFailed("verify_compl: could not draw independent pairs");
        CounterRng rng(seed, t);
        ComplPair pr;
        pr.a1 = Rat(rng.uniform(-bound, bound));
        pr.b1 = Rat(rng.uniform(-bound, bound));
        pr.a2 = Rat(rng.uniform(-bound, bound));
        pr.b2 = Rat(rng.uniform(-bound, bound));
        if ((pr.a1 * pr.b2 - pr.a2 * pr.b1).is_zero()) {
            ++r.skipped_dependent;
            continue;
        }
        pr.xi = combine(pr.a1, P.xi, pr.b1, P.eta);
        pr.eta = combine(pr.a2, P.xi, pr.b2, P.eta);
        pr.rank = jacobian_rank(build_family(L, C, pr.xi), pr.eta);
        if (pr.rank != r.b) {
            throw FalsificationEvent("verify_compl: rank " + std::to_string(pr.rank) + " != b(q) = " + std::to_string(r.b),
                                     bundle(L, C, {{"xi", io::to_json(pr.xi)}, {"eta", io::to_json(pr.eta)},
                                                   {"seed", seed}, {"rank", pr.rank}, {"b", r.b}}));
        }
        r.pairs.push_back(std::move(pr));
    }
    return r;
}

BolsReport verify_bols(const LieAlgebraData& L, const CasimirSet& C, const AlgebraProfile& profile,
                       const Codim2Result& codim2, const PointQ& xi, std::size_t trials, std::uint64_t seed,
                       long bound) {
    BolsReport r;
    r.b = require_hypotheses(C, profile, codim2, "verify_bols");
    if (!is_regular(L, profile, xi)) throw PreconditionFailed("verify_bols: xi is not regular");
    if (trials == 0) throw PreconditionFailed("verify_bols: at least one trial required");
    r.trials = trials;
    const ShiftFamily F = build_family(L, C, xi);
    std::vector<PointQ> etas;
    for (std::size_t t = 0; t < trials; ++t) etas.push_back(random_point(L.dim(), bound, seed, t));
    const auto ranks = kernels::jacobian_ranks(F.polys(), etas);
    const auto best = std::max_element(ranks.begin(), ranks.end());
    r.max_rank = *best;
    r.best_eta = etas[static_cast<std::size_t>(best - ranks.begin())];
    if (r.max_rank != r.b) {
        throw FalsificationEvent("verify_bols: max rank " + std::to_string(r.max_rank) + " != b(q) = " + std::to_string(r.b),
                                 bundle(L, C, {{"xi", io::to_json(xi)}, {"seed", seed}, {"trials", trials},
                                               {"bound", bound}, {"max_rank", r.max_rank}}));
    }
    return r;
}

} // namespace argshift
