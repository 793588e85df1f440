// Row and column orthogonality of computed character tables on named and
// randomly generated permutation groups.

#include <gtest/gtest.h>

#include <random>

#include "prymtyurin/character_table.hpp"
#include "prymtyurin/group_spec.hpp"

using namespace prymtyurin;

namespace
{

void check_table(PermGroup const& G, std::string const& label)
{
    CharacterTable t(G);
    ASSERT_EQ(t.size(), G.class_count()) << label;
    std::int64_t squares = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto const d = t.character(i).degree;
        squares += d * d;
        EXPECT_EQ(static_cast<std::int64_t>(G.order()) % d, 0) << label;
        for (std::size_t j = 0; j < t.size(); ++j)
            EXPECT_EQ(t.character_inner_product(i, j), i == j ? 1 : 0) << label << " " << i << "," << j;
    }
    EXPECT_EQ(squares, static_cast<std::int64_t>(G.order())) << label;

    // Columns: sum_i chi_i(x) conj(chi_i(y)) = |C_G(x)| delta_xy.
    std::size_t const e = t.exponent();
    for (std::size_t x = 0; x < G.class_count(); ++x) {
        for (std::size_t y = 0; y < G.class_count(); ++y) {
            Cyclotomic s(e);
            for (auto const& chi : t.characters())
                s += chi.values[x] * chi.values[y].conj();
            auto const expected = x == y ? static_cast<std::int64_t>(G.order() / G.class_size(x)) : 0;
            EXPECT_EQ(s, Cyclotomic::from_integer(e, expected)) << label << " classes " << x << "," << y;
        }
    }

    // The Galois action permutes the table.
    for (auto k : t.units()) {
        std::vector<bool> hit(t.size(), false);
        for (std::size_t i = 0; i < t.size(); ++i)
            hit[t.galois_image(i, k)] = true;
        EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) << label;
    }
}

}  // namespace

TEST(Orthogonality, NamedGroups)
{
    for (auto spec : {"sym(3)", "sym(4)", "sym(5)", "alt(4)", "alt(5)", "dihedral(5)", "dihedral(8)",
                      "weylD(4)", "rot(weylD(4))", "product(dihedral(3),dihedral(5))"})
        check_table(*realize_group(spec), spec);
}

TEST(Orthogonality, RandomGroups)
{
    std::mt19937_64 rng(31337);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 25; ++trial) {
        std::size_t const degree = 3 + rng() % 5;
        std::size_t const count = 1 + rng() % 2;
        std::vector<Permutation> gens;
        for (std::size_t g = 0; g < count; ++g) {
            std::vector<Point> img(degree);
            std::iota(img.begin(), img.end(), Point{0});
            std::shuffle(img.begin(), img.end(), rng);
            gens.emplace_back(std::move(img));
        }
        std::string label = "perm(" + std::to_string(degree);
        for (auto const& g : gens)
            label += ";" + g.to_cycle_string();
        label += ")";
        std::unique_ptr<PermGroup> G;
        try {
            G = std::make_unique<PermGroup>(degree, gens, 720);
        } catch (CapExceeded const&) {
            continue;
        }
        ++tested;
        check_table(*G, label);
    }
    EXPECT_GE(tested, 10);
}
