#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chrom/constructors.hpp"
#include "chrom/tensor.hpp"
#include "fixtures.hpp"

using namespace chrom;

namespace {

// Independent oracle: determinant by plain cofactor expansion along the
// first row, no memo table.
MultiPoly det_row_expansion(const std::vector<std::vector<MultiPoly>>& m, const PolyOps& ops) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiPoly acc(m[0][0].nvars());
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<MultiPoly>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        MultiPoly term = ops.mul(m[0][c], det_row_expansion(sub, ops));
        acc = (c % 2 == 0) ? ops.add(acc, term) : ops.sub(acc, term);
    }
    return acc;
}

Tensor diagonal_units(int n) {
    std::vector<IntMat> slices;
    for (int i = 0; i < n; ++i) {
        IntMat m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        slices.push_back(std::move(m));
    }
    return model_from_matrix_space(std::move(slices));
}

PrimeField test_field() {
    SplitMix64 rng(404);
    return random_prime(31, rng);
}

} // namespace

TEST_CASE("contract computes the projective dimension") {
    PrimeField F = test_field();

    ContractionSpace id3 = contract(fixtures::identity_tensor(3), F);
    CHECK(id3.d() == 0);
    CHECK(id3.basis_mod(F).size() == 1);

    ContractionSpace mle = contract(fixtures::concentration_model_3x3(), F);
    CHECK(mle.d() == 4);
    CHECK(mle.n() == 3);

    Tensor prop;
    prop.a = 2;
    prop.n = 2;
    prop.slices = {{{1, 2}, {3, 4}}, {{2, 4}, {6, 8}}};
    CHECK(contract(prop, F).d() == 0);

    Tensor zero;
    zero.a = 1;
    zero.n = 2;
    zero.slices = {{{0, 0}, {0, 0}}};
    CHECK_THROWS_AS(contract(zero, F), PreconditionError);
}

TEST_CASE("rank precondition check") {
    PrimeField F = test_field();
    SplitMix64 rng(1);

    CHECK(check_rank_precondition(contract(fixtures::identity_tensor(4), F), 4, F, rng));

    // single rank-1 matrix in Mat_4: every member has rank <= 1 < 2
    IntMat rank1(4, std::vector<std::int64_t>(4, 0));
    rank1[0][0] = 1;
    ContractionSpace S = contract(model_from_matrix_space({rank1}), F);
    CHECK_FALSE(check_rank_precondition(S, 8, F, rng));

    // traceless diagonal 6x6 space from the 6-cycle
    ContractionSpace c6 = contract(graph_to_tensor(fixtures::cycle_graph(6)), F);
    CHECK(c6.d() == 4);
    CHECK(check_rank_precondition(c6, 4, F, rng));
}

TEST_CASE("minor tables") {
    PrimeField F = test_field();
    PolyOps ops(F);

    SUBCASE("diagonal pencil: only diagonal subsets survive") {
        ContractionSpace S = contract(diagonal_units(6), F);
        Pencil P = Pencil::from_basis(S.basis_mod(F), F);
        MinorTable table(P, ops);
        std::vector<MultiPoly> m5 = table.minors(5);
        CHECK(m5.size() == 36);
        int nonzero = 0;
        for (const MultiPoly& f : m5)
            if (!f.is_zero()) {
                ++nonzero;
                CHECK(f.term_count() == 1);
                CHECK(f.degree() == 5);
            }
        CHECK(nonzero == 6); // off-diagonal row/column subsets vanish
        for (int i = 1; i <= 6; ++i)
            for (const MultiPoly& f : table.minors(i))
                if (!f.is_zero()) CHECK(f.degree() == static_cast<std::uint32_t>(i));
    }

    SUBCASE("identity pencil in Mat_2") {
        ContractionSpace S = contract(fixtures::identity_tensor(2), F);
        Pencil P = Pencil::from_basis(S.basis_mod(F), F);
        MinorTable table(P, ops);
        std::vector<MultiPoly> dets = table.minors(2);
        REQUIRE(dets.size() == 1);
        CHECK(dets[0].str() == "x0^2");
    }

    SUBCASE("block symmetric space: det factors as (x0 x2 - x1^2) x3") {
        ContractionSpace S = contract(fixtures::block_symmetric_3x3(), F);
        Pencil P = Pencil::from_basis(S.basis_mod(F), F);
        MinorTable table(P, ops);
        MultiPoly x0 = MultiPoly::variable(4, 0), x1 = MultiPoly::variable(4, 1);
        MultiPoly x2 = MultiPoly::variable(4, 2), x3 = MultiPoly::variable(4, 3);
        MultiPoly expect = ops.mul(ops.sub(ops.mul(x0, x2), ops.mul(x1, x1)), x3);
        CHECK(table.det().str() == expect.str());
    }
}

TEST_CASE("n-minor equals the determinant from independent row expansion") {
    PrimeField F = test_field();
    PolyOps ops(F);
    SplitMix64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(3));
        const int a = 2 + static_cast<int>(rng.next_below(3));
        Tensor T = generic_rank_r_tensor(a, n, a + n, rng.next());
        ContractionSpace S = contract(T, F);
        Pencil P = Pencil::from_basis(S.basis_mod(F), F);
        MinorTable table(P, ops);
        std::vector<MultiPoly> full = table.minors(n);
        REQUIRE(full.size() == 1);
        CHECK(full[0].str() == det_row_expansion(P.entries, ops).str());
    }
}

TEST_CASE("gradient components") {
    PrimeField F = test_field();
    PolyOps ops(F);

    SUBCASE("identity in Mat_2: d/dx0 of x0^2") {
        ContractionSpace S = contract(fixtures::identity_tensor(2), F);
        auto basis = S.basis_mod(F);
        Pencil P = Pencil::from_basis(basis, F);
        MinorTable table(P, ops);
        std::vector<MultiPoly> g = gradient_components(table, basis, ops);
        REQUIRE(g.size() == 1);
        CHECK(g[0].str() == "2*x0");
    }

    SUBCASE("gradients equal formal partials and satisfy the Euler identity") {
        SplitMix64 rng(99);
        std::vector<Tensor> inputs = {fixtures::block_symmetric_3x3(), fixtures::concentration_model_3x3(),
                                      graph_to_tensor(fixtures::cycle_graph(4))};
        for (int trial = 0; trial < 3; ++trial)
            inputs.push_back(generic_rank_r_tensor(3, 3, 6, rng.next()));
        for (const Tensor& T : inputs) {
            ContractionSpace S = contract(T, F);
            auto basis = S.basis_mod(F);
            Pencil P = Pencil::from_basis(basis, F);
            MinorTable table(P, ops);
            std::vector<MultiPoly> g = gradient_components(table, basis, ops);
            const MultiPoly& det = table.det();
            REQUIRE(g.size() == static_cast<std::size_t>(S.dim()));
            MultiPoly euler(P.nvars);
            for (int j = 0; j < S.dim(); ++j) {
                CHECK(g[static_cast<std::size_t>(j)].str() == ops.partial_derivative(det, j).str());
                euler = ops.add(euler, ops.mul(MultiPoly::variable(P.nvars, j), g[static_cast<std::size_t>(j)]));
            }
            CHECK(euler.str() == ops.scale(det, F.from_int(S.n())).str());
        }
    }
}
