#include <gtest/gtest.h>

#include "prymtyurin/prymtyurin.hpp"

using namespace prymtyurin;

namespace
{

struct Fixture
{
    std::shared_ptr<GroupContext const> ctx;
    std::optional<Subgroup> h;
    std::size_t rep = 0;
};

Fixture alt5_pair()
{
    Fixture f{make_context("alt(5)"), std::nullopt, 0};
    f.h = set_stabilizer(f.ctx->G(), 2);
    f.rep = irrep_with_trace(*f.ctx, standard_trace(f.ctx->G())).value();
    return f;
}

}  // namespace

TEST(IntMatrix, Arithmetic)
{
    IntMatrix a(2, 0);
    a(0, 1) = 2;
    a(1, 0) = 3;
    IntMatrix const b = a * a;
    EXPECT_EQ(b(0, 0), 6);
    EXPECT_EQ(b(1, 1), 6);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a.transpose()(0, 1), 3);
    EXPECT_EQ(IntMatrix::identity(2) * a, a);
}

TEST(Hecke, Sym3Transposition)
{
    auto ctx = make_context("sym(3)");
    auto const h = parse_subgroup_spec(ctx->G(), "gens:(1,2)");
    auto const dc = double_coset_decomposition(h);
    EXPECT_EQ(dc.d, 2u);
    EXPECT_EQ(dc.sizes, (std::vector<std::size_t>{1, 2}));
    auto const v = irrep_with_trace(*ctx, standard_trace(ctx->G())).value();
    auto const a = coefficients_a(dc, *ctx->table, ctx->irreps[v]);
    EXPECT_EQ(a, (std::vector<std::int64_t>{2, -1}));
    auto const ring = hecke_ring(dc);
    EXPECT_TRUE(idempotent_check(ring, a, 2, 6));
    auto const id = tuple_data(dc, *ctx->table, {ctx->irreps[v]});
    EXPECT_EQ(id.b, 3);
    EXPECT_EQ(id.q, 1);
    EXPECT_EQ(id.deg_K, 0);
    EXPECT_TRUE(matrix_K(dc, id).is_zero());
}

TEST(Hecke, Alt5PairStabilizer)
{
    auto f = alt5_pair();
    auto const dc = double_coset_decomposition(*f.h);
    EXPECT_EQ(dc.d, 3u);
    auto const id = tuple_data(dc, *f.ctx->table, {f.ctx->irreps[f.rep]});
    EXPECT_EQ(id.a.at(0), (std::vector<std::int64_t>{6, 1, -4}));
    EXPECT_EQ(id.b1, 6);
    EXPECT_EQ(id.b, 5);
    EXPECT_EQ(id.q, 3);
    EXPECT_EQ(id.deg_K, 3);
    EXPECT_EQ(id.c, -1);
    IntMatrix const K = matrix_K(dc, id);
    for (std::size_t s = 0; s < K.size(); ++s) {
        EXPECT_EQ(K(s, s), 0);
        for (std::size_t t = 0; t < K.size(); ++t)
            EXPECT_GE(K(s, t), 0);
    }
    EXPECT_EQ(K, K.transpose());
    std::vector<IntMatrix> const blocks{matrix_Dbar(dc, id.a[0])};
    auto const report = verify_matrix_identities(dc, id, blocks, K);
    EXPECT_EQ(report.checks.size(), 6u);
    EXPECT_TRUE(report.all_pass()) << ::testing::PrintToString(report.failures());
}

TEST(Hecke, IdempotentCheckDetectsWrongCoefficients)
{
    auto f = alt5_pair();
    auto const dc = double_coset_decomposition(*f.h);
    auto const ring = hecke_ring(dc);
    EXPECT_TRUE(idempotent_check(ring, {6, 1, -4}, 4, 60));
    auto const bad = idempotent_check(ring, {6, 1, -3}, 4, 60);
    EXPECT_FALSE(bad);
    EXPECT_TRUE(bad.failing_k.has_value());
}

TEST(Hecke, StructureConstantsCountCosets)
{
    auto f = alt5_pair();
    auto const dc = double_coset_decomposition(*f.h);
    auto const ring = hecke_ring(dc);
    // The identity double coset is the unit: c_{0,j,k} = delta_jk.
    for (std::size_t j = 0; j < ring.d; ++j) {
        for (std::size_t k = 0; k < ring.d; ++k)
            EXPECT_EQ(ring.c(0, j, k), j == k ? 1 : 0);
    }
}

TEST(Hecke, KanevFormValues)
{
    auto f = alt5_pair();
    auto const dc = double_coset_decomposition(*f.h);
    auto const id = tuple_data(dc, *f.ctx->table, {f.ctx->irreps[f.rep]});
    auto const vals = kanev_form_values(id, 0);
    ASSERT_EQ(vals.size(), 3u);
    EXPECT_EQ(vals[0], make_rational(6, 5));
    EXPECT_EQ(vals[2], make_rational(-4, 5));
}

TEST(GroupAlgebra, ConvolutionMatchesHeckeElement)
{
    auto f = alt5_pair();
    auto const dc = double_coset_decomposition(*f.h);
    auto const& w = f.ctx->irreps[f.rep];
    auto const a = coefficients_a(dc, *f.ctx->table, w);
    auto const ok = convolution_oracle(dc, w, a);
    EXPECT_TRUE(ok.left_product);
    EXPECT_TRUE(ok.right_product);
    auto wrong = a;
    wrong[1] += 1;
    EXPECT_FALSE(convolution_oracle(dc, w, wrong).right_product);
}
