#include <gtest/gtest.h>

#include <algorithm>

#include "prymtyurin/character_table.hpp"
#include "prymtyurin/group_spec.hpp"

using namespace prymtyurin;

namespace
{

std::vector<std::int64_t> degrees(CharacterTable const& t)
{
    std::vector<std::int64_t> d;
    for (auto const& c : t.characters())
        d.push_back(c.degree);
    return d;
}

// Fixed points of the natural action, per class.
std::vector<std::int64_t> fixed_point_counts(PermGroup const& G)
{
    std::vector<std::int64_t> out;
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        auto const& p = G.element(G.class_rep(c));
        std::int64_t f = 0;
        for (Point i = 0; i < p.degree(); ++i)
            f += p(i) == i;
        out.push_back(f);
    }
    return out;
}

}  // namespace

TEST(CharacterTable, Degrees)
{
    auto s3 = realize_group("sym(3)");
    EXPECT_EQ(degrees(CharacterTable(*s3)), (std::vector<std::int64_t>{1, 1, 2}));
    auto s4 = realize_group("sym(4)");
    EXPECT_EQ(degrees(CharacterTable(*s4)), (std::vector<std::int64_t>{1, 1, 2, 3, 3}));
    auto a5 = realize_group("alt(5)");
    EXPECT_EQ(degrees(CharacterTable(*a5)), (std::vector<std::int64_t>{1, 3, 3, 4, 5}));
    auto d5 = realize_group("dihedral(5)");
    EXPECT_EQ(degrees(CharacterTable(*d5)), (std::vector<std::int64_t>{1, 1, 2, 2}));
    auto wd5 = realize_group("weylD(5)");
    auto d = degrees(CharacterTable(*wd5));
    EXPECT_EQ(std::count(d.begin(), d.end(), 6), 1);
    std::int64_t sq = 0;
    for (auto x : d)
        sq += x * x;
    EXPECT_EQ(sq, 1920);
}

TEST(CharacterTable, Alt5HasGoldenRatioValues)
{
    auto G = realize_group("alt(5)");
    CharacterTable t(*G);
    auto const& chi = t.character(1);
    // On 5-cycles a degree-3 character takes (1 +- sqrt 5)/2, which is irrational.
    bool irrational = false;
    for (std::size_t c = 0; c < G->class_count(); ++c) {
        if (G->element_order(G->class_rep(c)) == 5)
            irrational = irrational || !chi.values[c].as_rational().has_value();
    }
    EXPECT_TRUE(irrational);
    // 7 is a unit mod 30 acting as squaring on fifth roots of unity.
    EXPECT_EQ(t.galois_image(1, 7), 2u);
    EXPECT_EQ(t.galois_image(1, 1), 1u);
    EXPECT_THROW(t.galois_image(1, 2), InvalidArgument);
}

TEST(CharacterTable, Dihedral5DegreeTwoUsesZeta5)
{
    auto G = realize_group("dihedral(5)");
    CharacterTable t(*G);
    EXPECT_EQ(t.exponent(), 10u);
    std::size_t c5 = 0;
    while (G->element_order(G->class_rep(c5)) != 5)
        ++c5;
    std::string const v = t.character(2).values[c5].to_string();
    EXPECT_FALSE(t.character(2).values[c5].as_rational().has_value()) << v;
    EXPECT_NE(v.find("z10"), std::string::npos) << v;
}

TEST(CharacterTable, PrimeChoice)
{
    auto G = realize_group("alt(5)");
    CharacterTable t(*G);
    // least p = 1 mod 30 above 2 sqrt(60)
    EXPECT_EQ(t.prime(), 31u);
}

TEST(RationalIrreps, OrbitsAndTraces)
{
    auto G = realize_group("alt(5)");
    CharacterTable t(*G);
    auto const orbits = galois_orbits(t);
    ASSERT_EQ(orbits.size(), 4u);
    EXPECT_TRUE(orbits[0].trivial);
    auto it = std::find_if(orbits.begin(), orbits.end(), [](RationalIrrep const& w) { return w.n == 3; });
    ASSERT_NE(it, orbits.end());
    EXPECT_EQ(it->field_degree, 2u);
    EXPECT_EQ(it->trace_values[0], 6);
    for (auto const& w : orbits)
        EXPECT_EQ(w.orbit.size(), w.field_degree);
}

TEST(FixedSpaces, Examples)
{
    auto G = realize_group("sym(3)");
    CharacterTable t(*G);
    auto const a3 = parse_subgroup_spec(*G, "gens:(1,2,3)");
    auto const s2 = parse_subgroup_spec(*G, "gens:(1,2)");
    EXPECT_EQ(fixed_space_dim(t, 2, a3), 0);
    EXPECT_EQ(fixed_space_dim(t, 2, s2), 1);
    EXPECT_EQ(fixed_space_dim(t, 0, a3), 1);

    auto A = realize_group("alt(5)");
    CharacterTable ta(*A);
    auto const c3 = parse_subgroup_spec(*A, "gens:(3,4,5)");
    EXPECT_EQ(fixed_space_dim(ta, 3, c3), 2);
}

TEST(PermutationCharacter, Sym4PointStabilizer)
{
    auto G = realize_group("sym(4)");
    auto const h = subgroup_from_predicate(*G, [](Permutation const& p) { return p(3) == 3; });
    ASSERT_EQ(h.order(), 6u);
    auto const pi = permutation_character(h);
    EXPECT_EQ(pi, fixed_point_counts(*G));
    auto sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<std::int64_t>{0, 0, 1, 2, 4}));
}

TEST(InnerProducts, PermutationCharacterDecomposes)
{
    auto G = realize_group("sym(4)");
    CharacterTable t(*G);
    auto const h = subgroup_from_predicate(*G, [](Permutation const& p) { return p(3) == 3; });
    auto const pi = permutation_character(h);
    auto const pc = as_class_function(t, pi);
    BigRational total = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        BigRational const m = inner_product(t, pc, t.character(i).values);
        EXPECT_TRUE(is_integer(m));
        total += m;
    }
    EXPECT_EQ(total, 2);  // trivial + standard
}
