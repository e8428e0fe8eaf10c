#ifndef ARGSHIFT_TESTS_FIXTURES_HPP
#define ARGSHIFT_TESTS_FIXTURES_HPP

#include "argshift/lie_algebra.hpp"
#include "argshift/mpoly.hpp"

#include <vector>

namespace fixtures {

using namespace argshift;

/// sl2 with basis (e, h, f).
inline LieAlgebraData sl2() { return make_classical(ClassicalFamily::sl, 2); }

inline LieAlgebraData sl3() { return make_classical(ClassicalFamily::sl, 3); }

/// Defining representation of sl2 in the basis (e, h, f).
inline std::vector<MatQ> sl2_standard_rep() { return classical_basis(ClassicalFamily::sl, 2); }

/// sl2 in the basis t = e − f, p = h, r = e + f, with [p, r] removed (parity 0, 1, 1).
inline LieAlgebraData sl2_so2() {
    const MatQ basis = MatQ::from_rows({{1, 0, -1}, {0, 1, 0}, {1, 0, 1}});
    return make_z2_contraction(rebase(sl2(), basis, {"t", "p", "r"}), {0, 1, 1});
}

inline MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }

/// x_h² + 4 x_e x_f on sl2.
inline MPoly sl2_casimir() { return var(3, 1) * var(3, 1) + Rat(4) * var(3, 0) * var(3, 2); }

/// x_p² + x_r² on the (sl2, so2) contraction.
inline MPoly sl2_so2_casimir() { return var(3, 1) * var(3, 1) + var(3, 2) * var(3, 2); }

/// e1∧e2 and e3∧e4 on Q^4.
inline std::pair<MatQ, MatQ> block_pencil() {
    MatQ A(4, 4), B(4, 4);
    A(0, 1) = Rat(1);
    A(1, 0) = Rat(-1);
    B(2, 3) = Rat(1);
    B(3, 2) = Rat(-1);
    return {A, B};
}

/// sl2 acting on k² ⊕ k² ⊕ k² ⊕ k² by the standard representation on each copy.
inline std::vector<MatQ> sl2_four_copies() {
    std::vector<MatQ> rho;
    for (const auto& m : sl2_standard_rep()) {
        MatQ big(8, 8);
        for (std::size_t c = 0; c < 4; ++c)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) big(2 * c + i, 2 * c + j) = m(i, j);
        rho.push_back(big);
    }
    return rho;
}

} // namespace fixtures

#endif // ARGSHIFT_TESTS_FIXTURES_HPP
