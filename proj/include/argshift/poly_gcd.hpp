#ifndef ARGSHIFT_POLY_GCD_HPP
#define ARGSHIFT_POLY_GCD_HPP

#include "argshift/mpoly.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace argshift {

/*
 * Exact proof that gcd(f, g) is constant, or "unknown".
 *
 * For every variable v occurring in both inputs, the other variables are
 * specialized at a random integer point p with lc_v(f)(p) ≠ 0 and the
 * univariate gcd over Q is taken. Any common factor h of f and g specializes
 * to a divisor of that gcd of the same v-degree (lc_v(h) divides lc_v(f)),
 * so a constant univariate gcd proves deg_v h = 0. Unlucky points only make
 * the answer "unknown", never wrong.
 */
bool gcd_certainly_constant(const MPoly& f, const MPoly& g, std::uint64_t seed = 0, int tries_per_var = 3);

/// gcd of two polynomials by recursive subresultant PRS; monic under grlex.
MPoly gcd2(const MPoly& f, const MPoly& g);

/*
 * gcd of a list, normalized to leading coefficient 1 under grlex. Zero inputs
 * are ignored; an all-zero list throws PreconditionFailed. Stops as soon as
 * the accumulated gcd is constant.
 */
MPoly poly_gcd(std::span<const MPoly> polys);

/// Univariate gcd over Q of dense coefficient vectors (index = power), monic.
std::vector<Rat> univariate_gcd(std::vector<Rat> a, std::vector<Rat> b);

/// Streaming gcd with early exit once the accumulated value is a nonzero constant.
class GcdAccumulator {
public:
    explicit GcdAccumulator(std::size_t nvars) : acc_(nvars) {}

    /// Folds p into the running gcd; returns true once the gcd is constant.
    bool add(const MPoly& p);

    bool seen_nonzero() const { return !acc_.is_zero(); }
    bool is_constant() const { return !acc_.is_zero() && acc_.is_constant(); }
    /// Current gcd (zero until a nonzero input arrives).
    const MPoly& value() const { return acc_; }
    std::size_t consumed() const { return consumed_; }

private:
    MPoly acc_;
    std::size_t consumed_ = 0;
};

} // namespace argshift

#endif // ARGSHIFT_POLY_GCD_HPP
