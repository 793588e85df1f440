#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "perm_group.hpp"

namespace prymtyurin
{

//! All conjugates gHg^{-1} of H, as membership sets, in discovery order.
inline std::vector<ElementSet> conjugates_of(Subgroup const& h)
{
    PermGroup const& G = h.group();
    std::vector<ElementSet> orbit{h.members()};
    std::unordered_set<ElementSet, ElementSetHash> seen{h.members()};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        auto const elems = orbit[i].to_vector();
        for (Elem s : G.generator_elements()) {
            ElementSet c(G.order());
            for (Elem x : elems)
                c.insert(G.conjugate(s, x));
            if (seen.insert(c).second)
                orbit.push_back(std::move(c));
        }
    }
    return orbit;
}

//! The conjugate whose sorted element list is lexicographically least.
inline Subgroup canonical_conjugate(Subgroup const& h)
{
    auto orbit = conjugates_of(h);
    std::size_t best = 0;
    std::vector<Elem> best_list = orbit[0].to_vector();
    for (std::size_t i = 1; i < orbit.size(); ++i) {
        auto list = orbit[i].to_vector();
        if (list < best_list) {
            best = i;
            best_list = std::move(list);
        }
    }
    if (best == 0)
        return h;
    return Subgroup(h.group(), orbit[best]);
}

//---------------------------------------------------------------------------//
/*!
 * Conjugacy class of a nontrivial cyclic subgroup.
 */
struct CyclicClass
{
    Subgroup representative;
    Elem generator;            //!< least generator of the representative
    std::size_t member_count;  //!< number of conjugate subgroups

    std::size_t order() const { return representative.order(); }
};

inline std::vector<CyclicClass> cyclic_subgroup_classes(PermGroup const& G)
{
    std::vector<CyclicClass> out;
    std::unordered_set<ElementSet, ElementSetHash> assigned;
    for (Elem g = 1; g < G.order(); ++g) {
        Elem const gen[] = {g};
        ElementSet cyc = closure_set(G, gen);
        if (assigned.contains(cyc))
            continue;
        Subgroup sub(G, cyc, {g});
        auto orbit = conjugates_of(sub);
        for (auto const& c : orbit)
            assigned.insert(c);
        Subgroup rep = canonical_conjugate(sub);
        Elem least_gen = 0;
        for (Elem x : rep.elements()) {
            if (G.element_order(x) == rep.order()) {
                least_gen = x;
                break;
            }
        }
        out.push_back({Subgroup(G, rep.members(), {least_gen}), least_gen, orbit.size()});
    }
    std::sort(out.begin(), out.end(), [](CyclicClass const& a, CyclicClass const& b) {
        if (a.order() != b.order())
            return a.order() < b.order();
        if (a.member_count != b.member_count)
            return a.member_count < b.member_count;
        return a.representative.elements() < b.representative.elements();
    });
    return out;
}

//! One generator for every cyclic subgroup of prime-power order > 1.
inline std::vector<Elem> prime_power_cyclic_generators(PermGroup const& G)
{
    auto is_prime_power = [](std::size_t n) {
        if (n < 2)
            return false;
        for (std::size_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                while (n % p == 0)
                    n /= p;
                return n == 1;
            }
        }
        return true;
    };
    std::vector<Elem> gens;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Elem g = 1; g < G.order(); ++g) {
        if (!is_prime_power(G.element_order(g)))
            continue;
        Elem const gen[] = {g};
        if (seen.insert(closure_set(G, gen)).second)
            gens.push_back(g);
    }
    return gens;
}

struct SubgroupClasses
{
    std::vector<Subgroup> representatives;  //!< sorted by order, then element list
    std::vector<std::size_t> class_sizes;   //!< conjugates per representative
    bool partial = false;                   //!< work cap hit; list may be incomplete
};

//---------------------------------------------------------------------------//
/*!
 * Representatives of the conjugacy classes of subgroups with index at most
 * `index_cap`.
 *
 * Starts from the trivial subgroup and repeatedly adjoins one element of
 * prime-power order to a class representative. Every subgroup is generated
 * by its prime-power elements, so the closure is complete unless more than
 * `work_cap` closures are needed, in which case `partial` is set.
 */
inline SubgroupClasses subgroups_up_to_conjugacy(PermGroup const& G, std::size_t index_cap = static_cast<std::size_t>(-1),
                                                 std::size_t work_cap = 2'000'000)
{
    SubgroupClasses result;
    auto const candidates = prime_power_cyclic_generators(G);
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Subgroup> reps;
    std::vector<std::size_t> sizes;

    auto add_class = [&](Subgroup const& h) {
        auto orbit = conjugates_of(h);
        for (auto const& c : orbit)
            seen.insert(c);
        sizes.push_back(orbit.size());
        reps.push_back(canonical_conjugate(h));
    };

    add_class(trivial_subgroup(G));
    std::size_t work = 0;
    for (std::size_t i = 0; i < reps.size() && !result.partial; ++i) {
        Subgroup const h = reps[i];
        for (Elem g : candidates) {
            if (h.contains(g))
                continue;
            if (++work > work_cap) {
                result.partial = true;
                break;
            }
            Subgroup k = extend_subgroup(h, g);
            if (!seen.contains(k.members()))
                add_class(k);
        }
    }

    std::vector<std::size_t> perm(reps.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (reps[a].order() != reps[b].order())
            return reps[a].order() < reps[b].order();
        return reps[a].elements() < reps[b].elements();
    });
    for (std::size_t i : perm) {
        if (reps[i].index() <= index_cap) {
            result.representatives.push_back(reps[i]);
            result.class_sizes.push_back(sizes[i]);
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Inclusion-minimal subgroups among <H, g> for g outside H.
 *
 * `candidates` must contain a generator of every cyclic subgroup of
 * prime-power order (see prime_power_cyclic_generators). Only such g are
 * tried: any overgroup N contains such an
 * element outside H (some prime-power part of any g in N \ H), so the
 * minimal members are the same.
 */
inline std::vector<Subgroup> minimal_overgroups(Subgroup const& h, std::span<Elem const> candidates)
{
    PermGroup const& G = h.group();
    if (h.order() == G.order())
        throw InvalidArgument("minimal_overgroups needs a proper subgroup");
    auto is_prime = [](std::size_t n) {
        if (n < 2)
            return false;
        for (std::size_t p = 2; p * p <= n; ++p) {
            if (n % p == 0)
                return false;
        }
        return true;
    };
    std::vector<Subgroup> found;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Elem g : candidates) {
        if (h.contains(g))
            continue;
        bool covered = false;
        for (auto const& n : found) {
            // H has prime index in n, so <H,g> = n.
            if (n.contains(g) && is_prime(n.order() / h.order())) {
                covered = true;
                break;
            }
        }
        if (covered)
            continue;
        Subgroup k = extend_subgroup(h, g);
        if (seen.insert(k.members()).second)
            found.push_back(std::move(k));
    }
    std::vector<Subgroup> minimal;
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool is_minimal = true;
        for (std::size_t j = 0; j < found.size() && is_minimal; ++j) {
            if (i != j && found[j].order() < found[i].order() && found[j].is_subgroup_of(found[i]))
                is_minimal = false;
        }
        if (is_minimal)
            minimal.push_back(found[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](Subgroup const& a, Subgroup const& b) {
        if (a.order() != b.order())
            return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return minimal;
}

inline std::vector<Subgroup> minimal_overgroups(Subgroup const& h)
{
    auto const candidates = prime_power_cyclic_generators(h.group());
    return minimal_overgroups(h, candidates);
}

//! Label of the right coset Hg for every g; labels follow first appearance.
inline std::vector<std::size_t> right_coset_labels(Subgroup const& h)
{
    PermGroup const& G = h.group();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(G.order(), unset);
    std::size_t next = 0;
    for (Elem g = 0; g < G.order(); ++g) {
        if (label[g] != unset)
            continue;
        for (Elem x : h.elements())
            label[G.mul(x, g)] = next;
        ++next;
    }
    return label;
}

//! Number of (H, K)-double cosets: orbits of K on the right cosets of H.
inline std::size_t mixed_double_coset_count(Subgroup const& h, Subgroup const& k)
{
    PermGroup const& G = h.group();
    auto const label = right_coset_labels(h);
    std::size_t const cosets = G.order() / h.order();
    std::vector<Elem> rep(cosets);
    std::vector<bool> rep_set(cosets, false);
    for (Elem g = 0; g < G.order(); ++g) {
        if (!rep_set[label[g]]) {
            rep[label[g]] = g;
            rep_set[label[g]] = true;
        }
    }
    std::vector<bool> visited(cosets, false);
    std::size_t orbits = 0;
    for (std::size_t c = 0; c < cosets; ++c) {
        if (visited[c])
            continue;
        ++orbits;
        std::vector<std::size_t> stack{c};
        visited[c] = true;
        while (!stack.empty()) {
            std::size_t const cur = stack.back();
            stack.pop_back();
            for (Elem s : k.generators()) {
                std::size_t const nxt = label[G.mul(rep[cur], s)];
                if (!visited[nxt]) {
                    visited[nxt] = true;
                    stack.push_back(nxt);
                }
            }
        }
    }
    return orbits;
}

}  // namespace prymtyurin
