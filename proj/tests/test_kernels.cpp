#include "argshift/kernels.hpp"
#include "argshift/regcert.hpp"
#include "argshift/sampling.hpp"
#include "argshift/poisson.hpp"
#include "argshift/shift.hpp"
#include "fixtures.hpp"

#include <doctest.h>
#include <omp.h>

using namespace argshift;

namespace {

std::vector<PointQ> points(std::size_t dim, std::size_t count, std::uint64_t seed) {
    std::vector<PointQ> out;
    for (std::size_t t = 0; t < count; ++t) out.push_back(random_point(dim, 9, seed, t));
    return out;
}

} // namespace

TEST_CASE("OpenMP kernels reproduce the serial reference in order") {
    for (int threads : {1, 2, 4}) {
        omp_set_num_threads(threads);
        const auto L = fixtures::sl3();
        const auto pts = points(8, 40, 1);
        CHECK(kernels::kirillov_ranks(L, pts) == kernels::kirillov_ranks_serial(L, pts));

        const auto F = build_family(L, classical_casimirs(ClassicalFamily::sl, 3), pts.front()).polys();
        const auto br = kernels::pairwise_brackets(L, F);
        CHECK(br == kernels::pairwise_brackets_serial(L, F));
        CHECK(br.size() == F.size() * (F.size() - 1) / 2);
        CHECK(kernels::jacobian_ranks(F, pts) == kernels::jacobian_ranks_serial(F, pts));

        const auto M = generic_kirillov(make_takiff(fixtures::sl2(), 1)).matrix;
        std::vector<kernels::MinorIndex> which;
        for (std::size_t skip_r = 0; skip_r < 6; ++skip_r)
            for (std::size_t skip_c = 0; skip_c < 6; skip_c += 2) {
                kernels::MinorIndex idx;
                for (std::size_t i = 0; i < 6; ++i) {
                    if (i != skip_r) idx.rows.push_back(i);
                    if (i != skip_c) idx.cols.push_back(i);
                }
                idx.rows.pop_back();
                idx.cols.pop_back();
                which.push_back(idx);
            }
        CHECK(kernels::minors(M, which) == kernels::minors_serial(M, which));
    }
}

TEST_CASE("kernels accept empty input") {
    const auto L = fixtures::sl2();
    CHECK(kernels::kirillov_ranks(L, {}).empty());
    CHECK(kernels::pairwise_brackets(L, {fixtures::sl2_casimir()}).empty());
    CHECK(kernels::minors(PolyMatrix(2, 2, 1), {}).empty());
}

TEST_CASE("gradient matrix rows are polynomial gradients") {
    const auto G = kernels::gradient_matrix({fixtures::sl2_casimir()}, PointQ{1, 2, 3});
    CHECK(G.rows() == 1);
    CHECK(G.row(0) == VecQ{12, 4, 4});
}
