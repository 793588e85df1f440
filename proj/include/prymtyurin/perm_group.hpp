#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace prymtyurin
{

//! Index of a group element in the canonical (lexicographic) element list.
using Elem = std::uint32_t;

//---------------------------------------------------------------------------//
/*!
 * Fixed-universe bitset of group elements.
 */
class ElementSet
{
  public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }

    //! Returns true if x was not already present.
    bool insert(Elem x)
    {
        std::uint64_t& w = words_[x >> 6];
        std::uint64_t const bit = std::uint64_t{1} << (x & 63);
        if (w & bit)
            return false;
        w |= bit;
        ++count_;
        return true;
    }

    std::vector<Elem> to_vector() const
    {
        std::vector<Elem> out;
        out.reserve(count_);
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int const b = std::countr_zero(w);
                out.push_back(static_cast<Elem>(wi * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    bool is_subset_of(ElementSet const& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i])
                return false;
        }
        return true;
    }

    std::size_t hash() const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ count_;
        for (std::uint64_t w : words_)
            h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

    friend bool operator==(ElementSet const& a, ElementSet const& b)
    {
        return a.count_ == b.count_ && a.words_ == b.words_;
    }

  private:
    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash
{
    std::size_t operator()(ElementSet const& s) const noexcept { return s.hash(); }
};

//---------------------------------------------------------------------------//
/*!
 * Fully enumerated finite permutation group.
 *
 * Elements are numbered in lexicographic order of their image arrays, so
 * element 0 is always the identity. Conjugacy classes and power maps are
 * computed at construction; the object is immutable afterwards.
 */
class PermGroup
{
  public:
    static constexpr std::size_t kDefaultOrderCap = 10'000;
    static constexpr std::size_t kMaxOrderCap = 100'000;
    // Multiplication is tabulated below this order and computed on demand above.
    static constexpr std::size_t kTableLimit = 2048;

    PermGroup(std::size_t degree, std::vector<Permutation> generators,
              std::size_t order_cap = kDefaultOrderCap)
        : degree_(degree), generators_(std::move(generators))
    {
        if (degree == 0)
            throw InvalidArgument("permutation groups need at least one point");
        for (auto const& g : generators_) {
            if (g.degree() != degree)
                throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                                      " differs from group degree " + std::to_string(degree));
        }
        enumerate(order_cap);
        build_tables();
        build_classes();
    }

    std::size_t degree() const noexcept { return degree_; }
    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t exponent() const noexcept { return exponent_; }

    std::vector<Permutation> const& generators() const noexcept { return generators_; }
    std::vector<Elem> const& generator_elements() const noexcept { return generator_elems_; }

    std::vector<Permutation> const& elements() const noexcept { return elements_; }
    Permutation const& element(Elem x) const { return elements_[x]; }

    static constexpr Elem identity() noexcept { return 0; }

    Elem mul(Elem a, Elem b) const
    {
        if (!table_.empty())
            return table_[static_cast<std::size_t>(a) * order() + b];
        return index_.at(elements_[a] * elements_[b]);
    }

    Elem inv(Elem a) const { return inverse_[a]; }

    //! g x g^{-1}
    Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inverse_[g]); }

    Elem pow(Elem a, std::int64_t k) const
    {
        auto const ord = static_cast<std::int64_t>(orders_[a]);
        k %= ord;
        if (k < 0)
            k += ord;
        Elem result = identity();
        Elem base = a;
        while (k) {
            if (k & 1)
                result = mul(result, base);
            base = mul(base, base);
            k >>= 1;
        }
        return result;
    }

    std::size_t element_order(Elem a) const { return orders_[a]; }

    std::optional<Elem> find(Permutation const& p) const
    {
        auto it = index_.find(p);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    Elem index_of(Permutation const& p) const
    {
        if (auto e = find(p))
            return *e;
        throw InvalidArgument("permutation " + p.to_cycle_string() + " is not in the group");
    }

    //// CONJUGACY CLASSES ////

    std::size_t class_count() const noexcept { return class_reps_.size(); }
    std::size_t class_of(Elem x) const { return class_of_[x]; }
    Elem class_rep(std::size_t c) const { return class_reps_[c]; }
    std::size_t class_size(std::size_t c) const { return class_sizes_[c]; }
    std::vector<std::size_t> const& class_sizes() const noexcept { return class_sizes_; }

    //! Class of rep^k, k taken modulo the exponent.
    std::size_t class_power(std::size_t c, std::int64_t k) const
    {
        auto const e = static_cast<std::int64_t>(exponent_);
        k %= e;
        if (k < 0)
            k += e;
        return power_map_[c * exponent_ + static_cast<std::size_t>(k)];
    }

    //! Number of elements of `members` in each conjugacy class.
    std::vector<std::int64_t> class_distribution(std::span<Elem const> members) const
    {
        std::vector<std::int64_t> counts(class_count(), 0);
        for (Elem x : members)
            ++counts[class_of_[x]];
        return counts;
    }

  private:
    void enumerate(std::size_t order_cap)
    {
        std::unordered_set<Permutation, PermutationHash> seen;
        std::deque<Permutation> queue;
        Permutation const id = Permutation::identity(degree_);
        seen.insert(id);
        queue.push_back(id);
        while (!queue.empty()) {
            Permutation x = std::move(queue.front());
            queue.pop_front();
            for (auto const& s : generators_) {
                Permutation y = s * x;
                if (seen.insert(y).second) {
                    if (seen.size() > order_cap)
                        throw CapExceeded("group order exceeds the cap of " + std::to_string(order_cap));
                    queue.push_back(std::move(y));
                }
            }
        }
        elements_.assign(seen.begin(), seen.end());
        std::sort(elements_.begin(), elements_.end());
        index_.reserve(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i)
            index_.emplace(elements_[i], static_cast<Elem>(i));
    }

    void build_tables()
    {
        std::size_t const n = order();
        if (n <= kTableLimit) {
            table_.resize(n * n);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b)
                    table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
            }
        }
        inverse_.resize(n);
        orders_.resize(n);
        exponent_ = 1;
        for (std::size_t a = 0; a < n; ++a) {
            inverse_[a] = index_.at(elements_[a].inverse());
            orders_[a] = elements_[a].order();
            exponent_ = std::lcm(exponent_, orders_[a]);
        }
        for (auto const& g : generators_)
            generator_elems_.push_back(index_.at(g));
    }

    void build_classes()
    {
        std::size_t const n = order();
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        class_of_.assign(n, unset);
        for (Elem g = 0; g < n; ++g) {
            if (class_of_[g] != unset)
                continue;
            std::size_t const c = class_reps_.size();
            class_reps_.push_back(g);
            std::vector<Elem> orbit{g};
            class_of_[g] = c;
            for (std::size_t i = 0; i < orbit.size(); ++i) {
                for (Elem s : generator_elems_) {
                    Elem const y = conjugate(s, orbit[i]);
                    if (class_of_[y] == unset) {
                        class_of_[y] = c;
                        orbit.push_back(y);
                    }
                }
            }
            class_sizes_.push_back(orbit.size());
        }
        power_map_.resize(class_reps_.size() * exponent_);
        for (std::size_t c = 0; c < class_reps_.size(); ++c) {
            Elem x = identity();
            for (std::size_t k = 0; k < exponent_; ++k) {
                power_map_[c * exponent_ + k] = class_of_[x];
                x = mul(x, class_reps_[c]);
            }
        }
    }

    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Elem> generator_elems_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, Elem, PermutationHash> index_;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::vector<std::size_t> orders_;
    std::size_t exponent_ = 1;

    std::vector<std::size_t> class_of_;
    std::vector<Elem> class_reps_;
    std::vector<std::size_t> class_sizes_;
    std::vector<std::size_t> power_map_;
};

//! Subgroup generated by `gens`, as a membership set.
inline ElementSet closure_set(PermGroup const& group, std::span<Elem const> gens)
{
    ElementSet set(group.order());
    std::vector<Elem> queue{PermGroup::identity()};
    set.insert(PermGroup::identity());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Elem s : gens) {
            Elem const y = group.mul(queue[i], s);
            if (set.insert(y))
                queue.push_back(y);
        }
    }
    return set;
}

//---------------------------------------------------------------------------//
/*!
 * Subgroup of a PermGroup, held as a membership set plus a small generating
 * set. The parent group must outlive the subgroup.
 */
class Subgroup
{
  public:
    //! `members` must already be closed; generators are derived if not given.
    Subgroup(PermGroup const& group, ElementSet members, std::vector<Elem> generators = {})
        : group_(&group), members_(std::move(members)), elements_(members_.to_vector()),
          generators_(std::move(generators))
    {
        if (generators_.empty() && elements_.size() > 1)
            generators_ = greedy_generators();
    }

    PermGroup const& group() const noexcept { return *group_; }
    std::size_t order() const noexcept { return elements_.size(); }
    std::size_t index() const noexcept { return group_->order() / elements_.size(); }

    //! Sorted in canonical order.
    std::vector<Elem> const& elements() const noexcept { return elements_; }
    ElementSet const& members() const noexcept { return members_; }
    bool contains(Elem x) const { return members_.contains(x); }
    std::vector<Elem> const& generators() const noexcept { return generators_; }

    bool is_subgroup_of(Subgroup const& o) const { return members_.is_subset_of(o.members_); }

    friend bool operator==(Subgroup const& a, Subgroup const& b)
    {
        return a.group_ == b.group_ && a.members_ == b.members_;
    }

  private:
    std::vector<Elem> greedy_generators() const
    {
        std::vector<Elem> gens;
        ElementSet span(group_->order());
        span.insert(PermGroup::identity());
        for (Elem x : elements_) {
            if (span.contains(x))
                continue;
            gens.push_back(x);
            span = closure_set(*group_, gens);
            if (span.size() == elements_.size())
                break;
        }
        return gens;
    }

    PermGroup const* group_;
    ElementSet members_;
    std::vector<Elem> elements_;
    std::vector<Elem> generators_;
};

inline Subgroup subgroup_closure(PermGroup const& group, std::span<Elem const> gens)
{
    for (Elem g : gens) {
        if (g >= group.order())
            throw InvalidArgument("generator index outside the group");
    }
    std::vector<Elem> kept;
    for (Elem g : gens) {
        if (g != PermGroup::identity() && std::find(kept.begin(), kept.end(), g) == kept.end())
            kept.push_back(g);
    }
    return Subgroup(group, closure_set(group, kept), kept);
}

//! Closure of permutation generators; each must lie in `group`.
inline Subgroup subgroup_closure(PermGroup const& group, std::vector<Permutation> const& gens)
{
    std::vector<Elem> idx;
    for (auto const& g : gens) {
        if (g.degree() != group.degree())
            throw InvalidArgument("generator " + g.to_cycle_string() + " has the wrong degree");
        idx.push_back(group.index_of(g));
    }
    return subgroup_closure(group, idx);
}

inline Subgroup trivial_subgroup(PermGroup const& group)
{
    ElementSet s(group.order());
    s.insert(PermGroup::identity());
    return Subgroup(group, std::move(s));
}

inline Subgroup whole_group(PermGroup const& group)
{
    return subgroup_closure(group, group.generator_elements());
}

//! Subgroup generated by H together with one more element.
inline Subgroup extend_subgroup(Subgroup const& h, Elem g)
{
    std::vector<Elem> gens = h.generators();
    gens.push_back(g);
    return subgroup_closure(h.group(), gens);
}

//! g H g^{-1}
inline Subgroup conjugate_subgroup(Subgroup const& h, Elem g)
{
    PermGroup const& G = h.group();
    ElementSet s(G.order());
    for (Elem x : h.elements())
        s.insert(G.conjugate(g, x));
    std::vector<Elem> gens;
    for (Elem x : h.generators())
        gens.push_back(G.conjugate(g, x));
    return Subgroup(G, std::move(s), std::move(gens));
}

//! Checks closure under products; throws InvalidArgument otherwise.
inline Subgroup subgroup_from_predicate(PermGroup const& group, std::function<bool(Permutation const&)> const& pred)
{
    ElementSet s(group.order());
    for (Elem x = 0; x < group.order(); ++x) {
        if (pred(group.element(x)))
            s.insert(x);
    }
    if (!s.contains(PermGroup::identity()))
        throw InvalidArgument("predicate excludes the identity");
    auto const elems = s.to_vector();
    for (Elem a : elems) {
        for (Elem b : elems) {
            if (!s.contains(group.mul(a, b)))
                throw InvalidArgument("predicate does not define a subgroup");
        }
    }
    return Subgroup(group, std::move(s));
}

//! Smallest normal subgroup containing `gens`.
inline Subgroup normal_closure(PermGroup const& group, std::span<Elem const> gens)
{
    std::vector<Elem> all;
    ElementSet seen(group.order());
    for (Elem g : gens) {
        for (Elem x = 0; x < group.order(); ++x) {
            Elem const c = group.conjugate(x, g);
            if (seen.insert(c))
                all.push_back(c);
        }
    }
    return subgroup_closure(group, all);
}

}  // namespace prymtyurin
