#ifndef ARGSHIFT_SAMPLING_HPP
#define ARGSHIFT_SAMPLING_HPP

#include "argshift/mpoly.hpp"

#include <cstdint>

namespace argshift {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

/*
 * Counter-based generator: the stream for (seed, stream id) is a pure function
 * of both, so trial i draws the same numbers whether trials run serially or
 * in parallel.
 */
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

    std::uint64_t next() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform integer in [lo, hi], rejection-sampled (no modulo bias).
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return lo + static_cast<long>(r % span);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Point with integer coordinates drawn uniformly from [−bound, bound].
inline PointQ random_point(std::size_t dim, long bound, std::uint64_t seed, std::uint64_t index) {
    CounterRng rng(seed, index);
    PointQ p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = Rat(rng.uniform(-bound, bound));
    return p;
}

/// As random_point, but redrawn (same stream) until nonzero.
inline PointQ random_nonzero_point(std::size_t dim, long bound, std::uint64_t seed, std::uint64_t index) {
    CounterRng rng(seed, index);
    PointQ p(dim);
    do {
        for (std::size_t i = 0; i < dim; ++i) p[i] = Rat(rng.uniform(-bound, bound));
    } while (dim != 0 && p.is_zero());
    return p;
}

} // namespace argshift

#endif // ARGSHIFT_SAMPLING_HPP
