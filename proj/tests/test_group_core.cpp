#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "prymtyurin/double_coset.hpp"
#include "prymtyurin/group_spec.hpp"
#include "prymtyurin/perm_group.hpp"
#include "prymtyurin/subgroups.hpp"

using namespace prymtyurin;

namespace
{

// Every subgroup generated by at most two elements, as element lists.
std::set<std::vector<Elem>> two_generated_subgroups(PermGroup const& G)
{
    std::set<std::vector<Elem>> out;
    for (Elem a = 0; a < G.order(); ++a) {
        for (Elem b = a; b < G.order(); ++b) {
            Elem const gens[] = {a, b};
            out.insert(closure_set(G, gens).to_vector());
        }
    }
    return out;
}

// Conjugacy classes of subgroups, counted by brute-force conjugation.
std::size_t classes_of(PermGroup const& G, std::set<std::vector<Elem>> const& subs)
{
    std::set<std::vector<Elem>> seen;
    std::size_t classes = 0;
    for (auto const& s : subs) {
        if (seen.count(s))
            continue;
        ++classes;
        for (Elem g = 0; g < G.order(); ++g) {
            std::vector<Elem> c;
            for (Elem x : s)
                c.push_back(G.conjugate(g, x));
            std::sort(c.begin(), c.end());
            seen.insert(c);
        }
    }
    return classes;
}

}  // namespace

TEST(GroupSpec, Orders)
{
    EXPECT_EQ(realize_group("sym(4)")->order(), 24u);
    EXPECT_EQ(realize_group("alt(5)")->order(), 60u);
    EXPECT_EQ(realize_group("dihedral(5)")->order(), 10u);
    EXPECT_EQ(realize_group("weylA(3)")->order(), 24u);
    EXPECT_EQ(realize_group("weylD(4)")->order(), 192u);
    EXPECT_EQ(realize_group("rot(weylD(4))")->order(), 96u);
    EXPECT_EQ(realize_group("rot(weylD(5))")->order(), 960u);
    EXPECT_EQ(realize_group("product(dihedral(3),sym(2))")->order(), 12u);
    EXPECT_EQ(realize_group("perm(3;(1,2);(1,2,3))")->order(), 6u);
    EXPECT_EQ(realize_group(" sym( 3 ) ")->order(), 6u);
}

TEST(GroupSpec, ParseErrorsCarryPosition)
{
    try {
        realize_group("sym(3");
        FAIL() << "expected a parse error";
    } catch (ParseError const& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_THROW(realize_group("foo(3)"), ParseError);
    EXPECT_THROW(realize_group("sym(3) extra"), ParseError);
    EXPECT_THROW(realize_group("perm(3;(1,4))"), ParseError);
}

TEST(GroupSpec, CapExceeded)
{
    EXPECT_THROW(realize_group("sym(9)"), CapExceeded);
    EXPECT_THROW(realize_group("alt(5)", 50), CapExceeded);
    EXPECT_NO_THROW(realize_group("alt(5)", 60));
}

TEST(GroupSpec, SubgroupSpec)
{
    auto G = realize_group("sym(4)");
    auto const h = parse_subgroup_spec(*G, "gens:(1,2);(1,2,3)");
    EXPECT_EQ(h.order(), 6u);
    EXPECT_THROW(parse_subgroup_spec(*G, "(1,2)"), ParseError);
    auto A = realize_group("alt(4)");
    EXPECT_THROW(parse_subgroup_spec(*A, "gens:(1,2)"), InvalidArgument);
}

TEST(PermGroup, IdentityFirstAndComposition)
{
    auto G = realize_group("sym(3)");
    EXPECT_TRUE(G->element(PermGroup::identity()).is_identity());
    // (a*b)(x) = a(b(x))
    Elem const a = G->index_of(Permutation::from_cycles(3, {{0, 1}}));
    Elem const b = G->index_of(Permutation::from_cycles(3, {{1, 2}}));
    Permutation const ab = G->element(G->mul(a, b));
    EXPECT_EQ(ab(2), 0u);
    EXPECT_EQ(G->mul(a, G->inv(a)), PermGroup::identity());
}

TEST(PermGroup, ClassesMatchBruteForce)
{
    for (auto spec : {"sym(4)", "alt(5)", "dihedral(6)", "weylD(4)"}) {
        auto G = realize_group(spec);
        std::size_t total = 0;
        for (std::size_t c = 0; c < G->class_count(); ++c) {
            Elem const r = G->class_rep(c);
            std::set<Elem> cls;
            for (Elem g = 0; g < G->order(); ++g)
                cls.insert(G->conjugate(g, r));
            EXPECT_EQ(cls.size(), G->class_size(c)) << spec;
            for (Elem x : cls)
                EXPECT_EQ(G->class_of(x), c);
            total += cls.size();
        }
        EXPECT_EQ(total, G->order());
        EXPECT_EQ(G->class_of(PermGroup::identity()), 0u);
    }
    EXPECT_EQ(realize_group("sym(5)")->class_count(), 7u);
    EXPECT_EQ(realize_group("alt(5)")->class_count(), 5u);
    EXPECT_EQ(realize_group("weylD(4)")->class_count(), 13u);
}

TEST(Subgroups, CountsMatchTwoGeneratorOracle)
{
    // Every subgroup of these groups is generated by two elements.
    for (auto spec : {"sym(3)", "sym(4)", "alt(4)", "dihedral(6)", "product(dihedral(3),sym(2))"}) {
        auto G = realize_group(spec);
        auto const subs = two_generated_subgroups(*G);
        auto const classes = subgroups_up_to_conjugacy(*G);
        EXPECT_FALSE(classes.partial);
        EXPECT_EQ(classes.representatives.size(), classes_of(*G, subs)) << spec;
        std::size_t total = 0;
        for (auto s : classes.class_sizes)
            total += s;
        EXPECT_EQ(total, subs.size()) << spec;
    }
    EXPECT_EQ(subgroups_up_to_conjugacy(*realize_group("sym(4)")).representatives.size(), 11u);
    EXPECT_EQ(subgroups_up_to_conjugacy(*realize_group("alt(5)")).representatives.size(), 9u);
}

TEST(Subgroups, CyclicClassesOfAlt5)
{
    auto G = realize_group("alt(5)");
    auto const cc = cyclic_subgroup_classes(*G);
    std::vector<std::size_t> orders;
    for (auto const& c : cc)
        orders.push_back(c.order());
    ASSERT_EQ(orders, (std::vector<std::size_t>{2, 3, 5}));
    // 15 involutions, 10 subgroups of order 3, 6 Sylow 5-subgroups.
    EXPECT_EQ(cc[0].member_count, 15u);
    EXPECT_EQ(cc[1].member_count, 10u);
    EXPECT_EQ(cc[2].member_count, 6u);
}

TEST(Subgroups, MinimalOvergroups)
{
    auto G = realize_group("sym(4)");
    auto const h = parse_subgroup_spec(*G, "gens:(1,2,3)");
    std::set<std::size_t> orders;
    for (auto const& n : minimal_overgroups(h)) {
        EXPECT_TRUE(h.is_subgroup_of(n));
        orders.insert(n.order());
    }
    // S_3 and A_4 are the only minimal overgroups of a 3-cycle subgroup.
    EXPECT_EQ(orders, (std::set<std::size_t>{6, 12}));
}

TEST(Subgroups, MixedDoubleCosets)
{
    auto G = realize_group("alt(5)");
    auto const h = subgroup_from_predicate(*G, [](Permutation const& p) { return p(0) < 2 && p(1) < 2; });
    ASSERT_EQ(h.order(), 6u);
    auto const k = parse_subgroup_spec(*G, "gens:(3,4,5)");
    EXPECT_EQ(mixed_double_coset_count(h, k), 4u);
    EXPECT_EQ(mixed_double_coset_count(h, trivial_subgroup(*G)), 10u);
    EXPECT_EQ(mixed_double_coset_count(h, whole_group(*G)), 1u);
}

TEST(DoubleCosets, SimultaneousRepresentatives)
{
    for (auto spec : {"sym(4)", "alt(5)", "weylD(4)"}) {
        auto G = realize_group(spec);
        for (auto const& h : subgroups_up_to_conjugacy(*G).representatives) {
            for (auto opts : {DoubleCosetOptions{}, DoubleCosetOptions{7}}) {
                auto const dc = double_coset_decomposition(h, opts);
                EXPECT_EQ(dc.reps[0][0], PermGroup::identity());
                std::set<std::size_t> left, right;
                std::size_t count = 0;
                for (std::size_t i = 0; i < dc.d; ++i) {
                    for (Elem g : dc.reps[i]) {
                        EXPECT_EQ(dc.index_of[g], i);
                        left.insert(dc.left_coset_index[g]);
                        right.insert(dc.right_coset_index[g]);
                        ++count;
                    }
                }
                EXPECT_EQ(count, h.index());
                EXPECT_EQ(left.size(), h.index());
                EXPECT_EQ(right.size(), h.index());
            }
        }
    }
}
