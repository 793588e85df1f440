#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "perm_group.hpp"
#include "subgroups.hpp"

namespace prymtyurin
{

//---------------------------------------------------------------------------//
/*!
 * Double coset decomposition H\G/H with simultaneous representatives.
 *
 * reps[i][j] (0-based) runs over the n_i left cosets g H and, at the same
 * time, over the n_i right cosets H g contained in the i-th double coset.
 * Double coset 0 is H itself and reps[0][0] is the identity.
 */
struct DoubleCosetData
{
    explicit DoubleCosetData(Subgroup h) : group(&h.group()), subgroup(std::move(h)) {}

    PermGroup const* group;
    Subgroup subgroup;
    std::size_t d = 0;
    std::vector<std::vector<Elem>> reps;
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> index_of;           //!< element -> double coset
    std::vector<std::size_t> right_coset_index;  //!< element -> label of Hg
    std::vector<std::size_t> left_coset_index;   //!< element -> label of gH
    std::vector<Elem> right_coset_reps;          //!< least element of each Hg

    std::size_t coset_count() const { return right_coset_reps.size(); }
};

struct DoubleCosetOptions
{
    //! When set, edge order and intersection choices are shuffled; the
    //! result is still a valid simultaneous system but not the canonical one.
    std::optional<std::uint64_t> shuffle_seed;
};

namespace detail
{

// Kuhn's augmenting-path matching; adj[u] lists right vertices of left u.
inline std::vector<std::size_t> perfect_matching(std::vector<std::vector<std::size_t>> const& adj,
                                                 std::size_t right_count)
{
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_right(right_count, none);
    std::vector<std::size_t> visited(right_count, 0);
    std::size_t stamp = 0;

    // Iterative DFS to stay off the call stack for large double cosets.
    auto augment = [&](std::size_t root) {
        ++stamp;
        struct Frame
        {
            std::size_t u;
            std::size_t next;
        };
        std::vector<Frame> stack{{root, 0}};
        std::vector<std::size_t> path_right;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next == adj[f.u].size()) {
                stack.pop_back();
                if (!path_right.empty())
                    path_right.pop_back();
                continue;
            }
            std::size_t const v = adj[f.u][f.next++];
            if (visited[v] == stamp)
                continue;
            visited[v] = stamp;
            path_right.push_back(v);
            if (match_right[v] == none) {
                // Flip the alternating path.
                for (std::size_t k = 0; k < path_right.size(); ++k)
                    match_right[path_right[k]] = stack[k].u;
                return true;
            }
            stack.push_back({match_right[v], 0});
        }
        return false;
    };

    for (std::size_t u = 0; u < adj.size(); ++u) {
        if (!augment(u))
            throw InternalFault("no perfect matching between left and right cosets");
    }
    std::vector<std::size_t> match_left(adj.size(), none);
    for (std::size_t v = 0; v < right_count; ++v) {
        if (match_right[v] != none)
            match_left[match_right[v]] = v;
    }
    return match_left;
}

}  // namespace detail

inline DoubleCosetData double_coset_decomposition(Subgroup const& h, DoubleCosetOptions const& opts = {})
{
    PermGroup const& G = h.group();
    std::size_t const n = G.order();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);

    DoubleCosetData dc(h);
    dc.right_coset_index = right_coset_labels(h);
    dc.left_coset_index.assign(n, unset);
    std::size_t left_labels = 0;
    for (Elem g = 0; g < n; ++g) {
        if (dc.left_coset_index[g] != unset)
            continue;
        for (Elem x : h.elements())
            dc.left_coset_index[G.mul(g, x)] = left_labels;
        ++left_labels;
    }
    dc.right_coset_reps.assign(left_labels, 0);
    std::vector<bool> have(left_labels, false);
    for (Elem g = 0; g < n; ++g) {
        std::size_t const r = dc.right_coset_index[g];
        if (!have[r]) {
            have[r] = true;
            dc.right_coset_reps[r] = g;
        }
    }

    std::optional<std::mt19937_64> rng;
    if (opts.shuffle_seed)
        rng.emplace(*opts.shuffle_seed);

    dc.index_of.assign(n, unset);
    for (Elem g = 0; g < n; ++g) {
        if (dc.index_of[g] != unset)
            continue;
        std::size_t const i = dc.d++;
        std::vector<Elem> members;
        for (Elem a : h.elements()) {
            Elem const ag = G.mul(a, g);
            for (Elem b : h.elements()) {
                Elem const x = G.mul(ag, b);
                if (dc.index_of[x] == unset) {
                    dc.index_of[x] = i;
                    members.push_back(x);
                }
            }
        }
        std::sort(members.begin(), members.end());

        // Bipartite graph: left cosets vs right cosets, one edge per nonempty
        // intersection, recording its elements in canonical order.
        std::map<std::size_t, std::size_t> left_id, right_id;
        for (Elem x : members) {
            left_id.emplace(dc.left_coset_index[x], left_id.size());
            right_id.emplace(dc.right_coset_index[x], right_id.size());
        }
        if (left_id.size() != right_id.size())
            throw InternalFault("double coset has unequal left and right coset counts");
        std::size_t const ni = left_id.size();
        std::vector<std::map<std::size_t, std::vector<Elem>>> meet(ni);
        for (Elem x : members)
            meet[left_id[dc.left_coset_index[x]]][right_id[dc.right_coset_index[x]]].push_back(x);
        std::vector<std::vector<std::size_t>> adj(ni);
        for (std::size_t u = 0; u < ni; ++u) {
            for (auto const& [v, _] : meet[u])
                adj[u].push_back(v);
            if (rng)
                std::shuffle(adj[u].begin(), adj[u].end(), *rng);
        }
        auto const match = detail::perfect_matching(adj, ni);

        std::vector<Elem> chosen;
        for (std::size_t u = 0; u < ni; ++u) {
            auto const& cell = meet[u].at(match[u]);
            Elem pick = cell.front();
            if (rng && i != 0)
                pick = cell[std::uniform_int_distribution<std::size_t>(0, cell.size() - 1)(*rng)];
            chosen.push_back(pick);
        }
        std::sort(chosen.begin(), chosen.end());
        if (rng && i != 0)
            std::shuffle(chosen.begin(), chosen.end(), *rng);
        dc.reps.push_back(std::move(chosen));
        dc.sizes.push_back(ni);
    }
    if (dc.reps[0][0] != PermGroup::identity())
        throw InternalFault("first double coset representative is not the identity");
    return dc;
}

}  // namespace prymtyurin
