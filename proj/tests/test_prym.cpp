#include <gtest/gtest.h>

#include "prymtyurin/prymtyurin.hpp"

using namespace prymtyurin;

namespace
{

struct Alt5
{
    std::shared_ptr<GroupContext const> ctx = make_context("alt(5)");
    Subgroup h = set_stabilizer(ctx->G(), 2);
    std::size_t v = irrep_with_trace(*ctx, standard_trace(ctx->G())).value();
    std::size_t c3 = cyclic_class_index(*ctx, ctx->G().index_of(Permutation::from_cycles(5, {{2, 3, 4}})));
};

GeometricSignature single(std::size_t c, std::int64_t m) { return GeometricSignature{{{c, m}}}; }

}  // namespace

TEST(Hypothesis, Alt5PairStabilizerPasses)
{
    Alt5 a;
    auto const r = check_hypothesis(*a.ctx, a.h, {a.v});
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.failures.empty());
}

TEST(Hypothesis, Sym3AlternatingFailsItemC)
{
    auto ctx = make_context("sym(3)");
    auto const h = parse_subgroup_spec(ctx->G(), "gens:(1,2,3)");
    auto const v = irrep_with_trace(*ctx, standard_trace(ctx->G())).value();
    auto const r = check_hypothesis(*ctx, h, {v});
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.fixed_dims_one);
    ASSERT_FALSE(r.failures.empty());
    EXPECT_EQ(r.failures[0].substr(0, 2), "c:");
}

TEST(Hypothesis, TrivialRepresentationRejected)
{
    Alt5 a;
    EXPECT_THROW(check_hypothesis(*a.ctx, a.h, {0}), InvalidArgument);
    EXPECT_THROW(check_hypothesis(*a.ctx, a.h, {}), InvalidArgument);
    EXPECT_THROW(check_hypothesis(*a.ctx, a.h, {a.v, a.v}), InvalidArgument);
}

TEST(Hypothesis, MaximalityFailureNamesAnOvergroup)
{
    // <(1 2 3)> in sym(4) has a one-dimensional fixed space in the standard
    // representation, but so does the point stabilizer S_3 containing it.
    auto ctx = make_context("sym(4)");
    auto const h = parse_subgroup_spec(ctx->G(), "gens:(1,2,3)");
    auto const v = irrep_with_trace(*ctx, standard_trace(ctx->G())).value();
    auto const r = check_hypothesis(*ctx, h, {v});
    EXPECT_TRUE(r.fixed_dims_one);
    EXPECT_FALSE(r.maximal);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.violating_overgroup_order, 6u);
}

TEST(Hypothesis, ItemDMonotonicity)
{
    // Whenever d) fails via N, the triple (G, N, reps) still has every dim V^N = 1,
    // and some strictly larger group breaks c).
    for (auto spec : {"sym(4)", "alt(5)", "dihedral(6)", "sym(5)"}) {
        auto ctx = make_context(spec);
        for (auto const& h : subgroups_up_to_conjugacy(ctx->G()).representatives) {
            for (std::size_t k = 1; k < ctx->irreps.size(); ++k) {
                auto const r = check_hypothesis(*ctx, h, {k});
                if (!r.fixed_dims_one || r.maximal)
                    continue;
                ASSERT_TRUE(r.violating_overgroup.has_value());
                auto const& n = *r.violating_overgroup;
                EXPECT_EQ(fixed_space_dim(*ctx->table, ctx->irreps[k], n), 1) << spec;
                auto const up = check_hypothesis(*ctx, n, {k});
                EXPECT_TRUE(up.fixed_dims_one);
            }
        }
    }
}

TEST(Admissibility, Alt5ThreeCycles)
{
    Alt5 a;
    auto const t = analyze_triple(*a.ctx, a.h, {a.v});
    auto const& row = t.rows.at(a.c3);
    EXPECT_EQ(row.fixed_dims, (std::vector<std::int64_t>{2}));
    EXPECT_EQ(row.mixed_cosets, 4);
    EXPECT_EQ(row.A, 0);
    EXPECT_TRUE(row.admissible());
    EXPECT_EQ(admissibility_value(t.id, row.fixed_dims, row.mixed_cosets), 0);
    // Recompute A from the stored fields.
    for (auto const& r : t.rows) {
        std::int64_t s = 0;
        for (auto d : r.fixed_dims)
            s += t.id.n - d;
        EXPECT_EQ(r.A, t.id.q * t.id.L_degree * s - (t.id.index - r.mixed_cosets));
    }
}

TEST(Admissibility, TrivialActingClassHasZero)
{
    Alt5 a;
    auto const t = analyze_triple(*a.ctx, a.h, {a.v});
    EXPECT_EQ(admissibility_value(t.id, {t.id.n}, t.id.index), 0);
    // Rows cover the nontrivial cyclic classes only: orders 2, 3, 5.
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.rows[0].class_order, 2u);
    EXPECT_EQ(t.rows[2].class_order, 5u);
}

TEST(Formulas, Alt5GenusAndDimension)
{
    Alt5 a;
    auto const t = analyze_triple(*a.ctx, a.h, {a.v});
    for (std::int64_t m = 0; m <= 10; ++m) {
        auto const sig = single(a.c3, m);
        EXPECT_EQ(genus_quotient(sig, t.rows, t.id.index), 3 * m - 9);
        EXPECT_EQ(dim_prym(sig, t.rows, t.id), m - 4);
        EXPECT_TRUE(crosscheck_dim(sig, t.rows, t.id));
        EXPECT_EQ(fixed_points(sig, t.rows), 0);
    }
    EXPECT_EQ(genus_quotient(GeometricSignature{}, t.rows, t.id.index), 1 - 10);
}

TEST(Formulas, CrosscheckHoldsForEverySignature)
{
    // The identity is unconditional, including signatures on non-admissible classes.
    Alt5 a;
    auto const t = analyze_triple(*a.ctx, a.h, {a.v});
    for (std::size_t c = 0; c < t.rows.size(); ++c) {
        for (std::int64_t m = 1; m <= 3; ++m)
            EXPECT_TRUE(crosscheck_dim(single(c, m), t.rows, t.id));
    }
}

TEST(Formulas, FixedPointsTwoWays)
{
    // A_j from the table equals the value forced by the cross-check identity.
    for (auto spec : {"alt(5)", "sym(4)", "rot(weylD(4))", "dihedral(7)"}) {
        auto ctx = make_context(spec);
        auto const result = scan(*ctx, ScanBounds{});
        for (auto const& t : result.triples) {
            for (std::size_t c = 0; c < t.rows.size(); ++c) {
                auto const sig = single(c, 2);
                BigRational const rest = dim_prym(sig, t.rows, t.id) * t.id.q -
                                         genus_quotient(sig, t.rows, t.id.index) - t.id.index + 1 +
                                         make_rational(static_cast<std::int64_t>(t.id.r) * t.id.group_order *
                                                           t.id.L_degree,
                                                       t.id.b);
                EXPECT_EQ(rest * 2, fixed_points(sig, t.rows)) << spec;
                EXPECT_EQ(fixed_points(sig, t.rows), 2 * t.rows[c].A);
            }
        }
    }
}

TEST(Realizability, ThreeCyclesInAlt5)
{
    Alt5 a;
    auto const none = find_generating_tuple(*a.ctx, single(a.c3, 3), 1'000'000);
    EXPECT_EQ(none.status, Realizable::no);
    auto const yes = find_generating_tuple(*a.ctx, single(a.c3, 5), 1'000'000);
    ASSERT_EQ(yes.status, Realizable::yes);
    Elem prod = PermGroup::identity();
    for (Elem g : yes.witness)
        prod = a.ctx->G().mul(prod, g);
    EXPECT_EQ(prod, PermGroup::identity());
    EXPECT_EQ(closure_set(a.ctx->G(), yes.witness).size(), 60u);
}

TEST(Realizability, ProperNormalClosureIsRejected)
{
    auto ctx = make_context("sym(4)");
    Elem const dbl = ctx->G().index_of(Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
    auto const r = find_generating_tuple(*ctx, single(cyclic_class_index(*ctx, dbl), 4), 1'000'000);
    EXPECT_EQ(r.status, Realizable::no);
    EXPECT_EQ(r.nodes, 0u);
}

TEST(Realizability, BudgetGivesUnknown)
{
    Alt5 a;
    auto const r = find_generating_tuple(*a.ctx, single(a.c3, 6), 3);
    EXPECT_EQ(r.status, Realizable::unknown);
}

TEST(Search, Alt5Certificates)
{
    Alt5 a;
    auto const t = analyze_triple(*a.ctx, a.h, {a.v});
    SearchBounds sb;
    sb.max_branch_points = 7;
    auto const found = search_signatures(*a.ctx, t, sb);
    ASSERT_FALSE(found.empty());
    EXPECT_EQ(found.front().q, 3);
    for (auto const& r : found) {
        EXPECT_TRUE(r.crosscheck);
        EXPECT_GE(r.dim_P, 1);
        EXPECT_NE(r.realizable, Realizable::no);
        if (r.signature.entries.size() == 1 && r.signature.entries[0].first == a.c3) {
            EXPECT_EQ(r.dim_P, r.signature.entries[0].second - 4);
        }
    }
    // Sorted by dimension first.
    for (std::size_t i = 1; i < found.size(); ++i)
        EXPECT_LE(found[i - 1].dim_P, found[i].dim_P);
}

TEST(Search, TooFewBranchPointsGivesNothing)
{
    Alt5 a;
    auto const t = analyze_triple(*a.ctx, a.h, {a.v});
    SearchBounds sb;
    sb.max_branch_points = 4;
    EXPECT_TRUE(search_signatures(*a.ctx, t, sb).empty());
}

TEST(Search, ThreadCountDoesNotChangeResults)
{
    Alt5 a;
    auto const t = analyze_triple(*a.ctx, a.h, {a.v});
    SearchBounds one, four;
    one.max_branch_points = four.max_branch_points = 7;
    four.threads = 4;
    auto const x = search_signatures(*a.ctx, t, one);
    auto const y = search_signatures(*a.ctx, t, four);
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_EQ(x[i].signature, y[i].signature);
        EXPECT_EQ(x[i].witness, y[i].witness);
    }
}

TEST(Scan, Sym3AllExponentOne)
{
    auto ctx = make_context("sym(3)");
    auto const r = scan(*ctx, ScanBounds{});
    EXPECT_EQ(r.subgroup_classes, 4u);
    ASSERT_FALSE(r.triples.empty());
    for (auto const& t : r.triples)
        EXPECT_EQ(t.id.q, 1);
}

TEST(Scan, Alt5IncludesExponentThree)
{
    auto ctx = make_context("alt(5)");
    auto const r = scan(*ctx, ScanBounds{});
    bool found = false;
    for (auto const& t : r.triples)
        found = found || (t.subgroup.order() == 6 && t.id.n == 4 && t.id.q == 3);
    EXPECT_TRUE(found);
}

TEST(Scan, RotationWeylD4HasExponentTwo)
{
    auto ctx = make_context("rot(weylD(4))");
    auto const r = scan(*ctx, ScanBounds{});
    bool found = false;
    for (auto const& t : r.triples)
        found = found || t.id.q == 2;
    EXPECT_TRUE(found);
}

TEST(Scan, TrivialExponentConsistency)
{
    for (auto spec : {"sym(4)", "alt(5)", "dihedral(8)"}) {
        auto ctx = make_context(spec);
        for (auto const& t : scan(*ctx, ScanBounds{}).triples)
            EXPECT_TRUE(t.trivial_exponent_consistent) << spec << " |H|=" << t.subgroup.order();
    }
}
