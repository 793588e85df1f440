#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "character_table.hpp"
#include "double_coset.hpp"
#include "errors.hpp"
#include "group_spec.hpp"
#include "hecke.hpp"
#include "perm_group.hpp"
#include "rational.hpp"
#include "subgroups.hpp"

namespace prymtyurin
{

//---------------------------------------------------------------------------//
/*!
 * Everything computed once per group: the table, its Galois orbits, the
 * cyclic-subgroup classes and the prime-power generators used for overgroup
 * searches.
 */
struct GroupContext
{
    std::string spec;
    std::shared_ptr<PermGroup const> group;
    std::unique_ptr<CharacterTable> table;
    std::vector<RationalIrrep> irreps;
    std::vector<CyclicClass> cyclic_classes;
    std::vector<Elem> prime_power_gens;

    PermGroup const& G() const { return *group; }

    //! Names such as C_2, C_6, C_6' in cyclic-class order.
    std::vector<std::string> class_labels() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < cyclic_classes.size(); ++i) {
            std::size_t primes = 0;
            for (std::size_t j = 0; j < i; ++j) {
                if (cyclic_classes[j].order() == cyclic_classes[i].order())
                    ++primes;
            }
            out.push_back("C_" + std::to_string(cyclic_classes[i].order()) + std::string(primes, '\''));
        }
        return out;
    }
};

inline std::shared_ptr<GroupContext const> make_context(std::shared_ptr<PermGroup const> group, std::string spec = {})
{
    auto ctx = std::make_shared<GroupContext>();
    ctx->spec = std::move(spec);
    ctx->group = std::move(group);
    ctx->table = std::make_unique<CharacterTable>(*ctx->group);
    ctx->irreps = galois_orbits(*ctx->table);
    ctx->cyclic_classes = cyclic_subgroup_classes(*ctx->group);
    ctx->prime_power_gens = prime_power_cyclic_generators(*ctx->group);
    return ctx;
}

inline std::shared_ptr<GroupContext const> make_context(std::string const& spec,
                                                        std::size_t order_cap = PermGroup::kDefaultOrderCap)
{
    return make_context(realize_group(spec, order_cap), spec);
}

//// HYPOTHESIS ////

struct HypothesisReport
{
    bool pass = false;
    bool equal_degrees = false;       //!< item a)
    bool equal_fields = false;        //!< item b)
    bool fixed_dims_one = false;      //!< item c)
    bool maximal = false;             //!< item d)
    std::vector<std::string> failures;
    std::optional<std::size_t> violating_overgroup_order;
    std::optional<Subgroup> violating_overgroup;
};

inline HypothesisReport check_hypothesis(GroupContext const& ctx, Subgroup const& h, std::vector<std::size_t> const& reps)
{
    if (reps.empty())
        throw InvalidArgument("the Hypothesis needs at least one representation");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i] >= ctx.irreps.size())
            throw InvalidArgument("representation index out of range");
        if (ctx.irreps[reps[i]].trivial)
            throw InvalidArgument("the trivial representation is not allowed in a Hypothesis tuple");
        for (std::size_t j = 0; j < i; ++j) {
            if (reps[j] == reps[i])
                throw InvalidArgument("representations must be pairwise distinct");
        }
    }
    HypothesisReport rep;
    auto const& W0 = ctx.irreps[reps[0]];
    rep.equal_degrees = true;
    rep.equal_fields = true;
    for (auto k : reps) {
        auto const& w = ctx.irreps[k];
        if (w.n != W0.n)
            rep.equal_degrees = false;
        if (w.field_stabilizer != W0.field_stabilizer)
            rep.equal_fields = false;
    }
    if (!rep.equal_degrees)
        rep.failures.push_back("a: representations have different degrees");
    if (!rep.equal_fields)
        rep.failures.push_back("b: representations have different character fields");

    rep.fixed_dims_one = true;
    for (auto k : reps) {
        auto const dim = fixed_space_dim(*ctx.table, ctx.irreps[k], h);
        if (dim != 1) {
            rep.fixed_dims_one = false;
            rep.failures.push_back("c: representation " + std::to_string(k) + " has dim V^H = " + std::to_string(dim));
        }
    }

    rep.maximal = true;
    if (rep.fixed_dims_one && h.order() < ctx.G().order()) {
        for (auto const& n : minimal_overgroups(h, ctx.prime_power_gens)) {
            bool some_zero = false;
            for (auto k : reps) {
                if (fixed_space_dim(*ctx.table, ctx.irreps[k], n) == 0) {
                    some_zero = true;
                    break;
                }
            }
            if (!some_zero) {
                rep.maximal = false;
                rep.violating_overgroup_order = n.order();
                rep.violating_overgroup = n;
                rep.failures.push_back("d: overgroup of order " + std::to_string(n.order()) +
                                       " keeps every dim V^N = 1");
                break;
            }
        }
    } else if (!rep.fixed_dims_one) {
        rep.maximal = false;
    }
    rep.pass = rep.equal_degrees && rep.equal_fields && rep.fixed_dims_one && rep.maximal;
    return rep;
}

//// ADMISSIBILITY ////

struct AdmissibilityRow
{
    std::size_t cyclic_class = 0;
    std::size_t class_order = 0;
    std::size_t class_size = 0;
    std::int64_t A = 0;
    std::int64_t mixed_cosets = 0;
    std::vector<std::int64_t> fixed_dims;
    bool generates = false;

    bool admissible() const noexcept { return A == 0; }
};

//! A = q [L:Q] sum_i (n - dim V_i^{G_j}) - ([G:H] - |H\G/G_j|)
inline std::int64_t admissibility_value(IdempotentData const& id, std::vector<std::int64_t> const& fixed_dims,
                                        std::int64_t mixed_cosets)
{
    std::int64_t s = 0;
    for (auto d : fixed_dims)
        s += id.n - d;
    return id.q * id.L_degree * s - (id.index - mixed_cosets);
}

inline std::vector<AdmissibilityRow> admissibility_table(GroupContext const& ctx, Subgroup const& h,
                                                         std::vector<std::size_t> const& reps, IdempotentData const& id)
{
    std::vector<AdmissibilityRow> rows;
    for (std::size_t j = 0; j < ctx.cyclic_classes.size(); ++j) {
        auto const& cc = ctx.cyclic_classes[j];
        AdmissibilityRow row;
        row.cyclic_class = j;
        row.class_order = cc.order();
        row.class_size = cc.member_count;
        row.mixed_cosets = static_cast<std::int64_t>(mixed_double_coset_count(h, cc.representative));
        for (auto k : reps)
            row.fixed_dims.push_back(fixed_space_dim(*ctx.table, ctx.irreps[k], cc.representative));
        row.A = admissibility_value(id, row.fixed_dims, row.mixed_cosets);
        Elem const gen[] = {cc.generator};
        row.generates = normal_closure(ctx.G(), gen).order() == ctx.G().order();
        rows.push_back(std::move(row));
    }
    return rows;
}

//// SIGNATURES ////

//! [0; (C_1, m_1), ..., (C_t, m_t)] with classes indexed into the context.
struct GeometricSignature
{
    std::vector<std::pair<std::size_t, std::int64_t>> entries;

    std::int64_t branch_points() const
    {
        std::int64_t s = 0;
        for (auto const& [c, m] : entries)
            s += m;
        return s;
    }

    friend bool operator==(GeometricSignature const&, GeometricSignature const&) = default;
};

//! g(X) = 1 - [G:H] + (1/2) sum m_j ([G:H] - |H\G/G_j|)
inline BigRational genus_quotient(GeometricSignature const& sig, std::vector<AdmissibilityRow> const& rows,
                                  std::int64_t index)
{
    BigRational g = 1 - index;
    for (auto const& [c, m] : sig.entries)
        g += make_rational(m * (index - rows.at(c).mixed_cosets), 2);
    return g;
}

//! dim P = [L:Q] sum_i ((1/2) sum_j m_j (n - dim V_i^{G_j}) - n)
inline BigRational dim_prym(GeometricSignature const& sig, std::vector<AdmissibilityRow> const& rows,
                            IdempotentData const& id)
{
    BigRational total = 0;
    for (std::size_t i = 0; i < id.r; ++i) {
        BigRational part = -id.n;
        for (auto const& [c, m] : sig.entries)
            part += make_rational(m * (id.n - rows.at(c).fixed_dims[i]), 2);
        total += part;
    }
    return total * id.L_degree;
}

inline std::int64_t fixed_points(GeometricSignature const& sig, std::vector<AdmissibilityRow> const& rows)
{
    std::int64_t s = 0;
    for (auto const& [c, m] : sig.entries)
        s += m * rows.at(c).A;
    return s;
}

//! q dim P = g(X) + [G:H] - 1 - (r|G|/b)[L:Q] + (1/2) fixed points
inline bool crosscheck_dim(GeometricSignature const& sig, std::vector<AdmissibilityRow> const& rows,
                           IdempotentData const& id)
{
    BigRational const lhs = dim_prym(sig, rows, id) * id.q;
    BigRational rhs = genus_quotient(sig, rows, id.index) + id.index - 1;
    rhs -= make_rational(static_cast<std::int64_t>(id.r) * id.group_order * id.L_degree, id.b);
    rhs += make_rational(fixed_points(sig, rows), 2);
    return lhs == rhs;
}

//// REALIZABILITY ////

enum class Realizable
{
    yes,
    no,
    unknown,
};

inline char const* to_string(Realizable r)
{
    switch (r) {
        case Realizable::yes:
            return "yes";
        case Realizable::no:
            return "no";
        case Realizable::unknown:
            return "unknown";
    }
    return "unknown";
}

struct RealizabilityResult
{
    Realizable status = Realizable::unknown;
    std::vector<Elem> witness;  //!< g_1 ... g_s with product 1, when status is yes
    std::size_t nodes = 0;
};

//! Elements generating a subgroup conjugate to the class representative.
inline std::vector<Elem> cyclic_class_elements(PermGroup const& G, CyclicClass const& cc)
{
    ElementSet set(G.order());
    auto const ord = static_cast<std::int64_t>(cc.order());
    for (std::int64_t k = 1; k <= ord; ++k) {
        if (std::gcd(k, ord) != 1)
            continue;
        Elem const x = G.pow(cc.generator, k);
        std::size_t const c = G.class_of(x);
        for (Elem y = 0; y < G.order(); ++y) {
            if (G.class_of(y) == c)
                set.insert(y);
        }
    }
    return set.to_vector();
}

//---------------------------------------------------------------------------//
/*!
 * Search for (g_1, ..., g_s) with g_1 ... g_s = 1 generating G, where each g
 * generates a subgroup in the class prescribed for its slot.
 *
 * Slots are filled in signature order. The first element is taken up to
 * conjugacy and the last is forced by the product. Exceeding `node_budget`
 * returns unknown.
 */
inline RealizabilityResult find_generating_tuple(GroupContext const& ctx, GeometricSignature const& sig,
                                                 std::size_t node_budget)
{
    PermGroup const& G = ctx.G();
    RealizabilityResult result;
    std::vector<std::size_t> slots;
    for (auto const& [c, m] : sig.entries) {
        for (std::int64_t t = 0; t < m; ++t)
            slots.push_back(c);
    }
    std::size_t const s = slots.size();
    if (s == 0) {
        result.status = G.order() == 1 ? Realizable::yes : Realizable::no;
        return result;
    }

    // The normal closure of everything used must already be G.
    std::vector<Elem> class_gens;
    for (auto const& [c, m] : sig.entries)
        class_gens.push_back(ctx.cyclic_classes.at(c).generator);
    if (normal_closure(G, class_gens).order() != G.order()) {
        result.status = Realizable::no;
        return result;
    }

    std::vector<std::vector<Elem>> candidates;
    std::vector<ElementSet> allowed;
    for (auto c : slots) {
        candidates.push_back(cyclic_class_elements(G, ctx.cyclic_classes.at(c)));
        ElementSet set(G.order());
        for (Elem x : candidates.back())
            set.insert(x);
        allowed.push_back(std::move(set));
    }
    // First slot: one element per conjugacy class.
    {
        std::vector<Elem> reps;
        std::vector<bool> seen(G.class_count(), false);
        for (Elem x : candidates[0]) {
            if (!seen[G.class_of(x)]) {
                seen[G.class_of(x)] = true;
                reps.push_back(x);
            }
        }
        candidates[0] = std::move(reps);
    }

    std::vector<Elem> tuple(s);
    std::vector<std::size_t> cursor(s, 0);
    std::vector<Elem> prefix(s + 1, PermGroup::identity());  // prefix[k] = g_1 ... g_k
    bool exhausted_budget = false;

    auto generates = [&] { return closure_set(G, tuple).size() == G.order(); };

    if (s == 1) {
        Elem const last = PermGroup::identity();
        if (allowed[0].contains(last)) {
            tuple[0] = last;
            if (generates()) {
                result.status = Realizable::yes;
                result.witness = tuple;
                return result;
            }
        }
        result.status = Realizable::no;
        return result;
    }

    std::size_t depth = 0;
    while (true) {
        if (cursor[depth] == candidates[depth].size()) {
            cursor[depth] = 0;
            if (depth == 0)
                break;
            --depth;
            continue;
        }
        if (++result.nodes > node_budget) {
            exhausted_budget = true;
            break;
        }
        Elem const g = candidates[depth][cursor[depth]++];
        tuple[depth] = g;
        prefix[depth + 1] = G.mul(prefix[depth], g);
        if (depth + 2 == s) {
            Elem const last = G.inv(prefix[depth + 1]);
            if (allowed[s - 1].contains(last)) {
                tuple[s - 1] = last;
                if (generates()) {
                    result.status = Realizable::yes;
                    result.witness = tuple;
                    return result;
                }
            }
            continue;
        }
        ++depth;
    }
    result.status = exhausted_budget ? Realizable::unknown : Realizable::no;
    return result;
}

//// CERTIFICATES ////

struct PrymReport
{
    GeometricSignature signature;
    std::int64_t q = 0;
    std::int64_t deg_K = 0;
    BigRational genus_X;
    BigRational dim_P;
    std::int64_t fixed_points = 0;
    Realizable realizable = Realizable::unknown;
    std::vector<Elem> witness;
    bool identities_pass = false;
    bool crosscheck = false;
    bool mixed = false;  //!< uses classes with A != 0; never certified

    bool certified() const
    {
        return !mixed && fixed_points == 0 && identities_pass && crosscheck && realizable != Realizable::no &&
               is_integer(dim_P) && dim_P >= 1;
    }
};

struct SearchBounds
{
    std::size_t max_branch_points = 6;
    std::size_t node_budget = 200'000;
    std::size_t threads = 1;
    bool allow_mixed = false;
    bool check_realizability = true;
    //! When nonempty, only these cyclic classes may carry branch points.
    std::vector<std::size_t> only_classes;
    //! Extra filter on the full multiplicity vector (indexed by cyclic class).
    std::function<bool(std::vector<std::int64_t> const&)> constraint;
};

//---------------------------------------------------------------------------//
/*!
 * Verified data for one Hypothesis triple: Hecke integers, matrices checks
 * and the admissibility table.
 */
struct TripleAnalysis
{
    Subgroup subgroup;
    std::vector<std::size_t> reps;
    HypothesisReport hypothesis;
    std::unique_ptr<DoubleCosetData> dc;
    IdempotentData id;
    VerificationReport identities;
    bool trivial_exponent_consistent = false;
    bool k_nonnegative = false;
    std::vector<AdmissibilityRow> rows;
};

//! Agreement of q = 1, K = 0 and rho_H = trivial + sum of the tuple.
inline bool trivial_exponent_consistent(GroupContext const& ctx, Subgroup const& h, std::vector<std::size_t> const& reps,
                                 IdempotentData const& id, IntMatrix const& K)
{
    auto const perm = permutation_character(h);
    std::vector<std::int64_t> sum(perm.size(), 1);
    for (auto k : reps) {
        for (std::size_t c = 0; c < sum.size(); ++c)
            sum[c] += ctx.irreps[k].trace_values[c];
    }
    bool const decomposes = sum == perm;
    bool const q_one = id.q == 1;
    bool const k_zero = K.is_zero();
    return q_one == k_zero && k_zero == decomposes;
}

inline TripleAnalysis analyze_triple(GroupContext const& ctx, Subgroup const& h, std::vector<std::size_t> const& reps,
                                     bool verify_identities = true, DoubleCosetOptions const& dc_opts = {})
{
    TripleAnalysis t{h, reps, check_hypothesis(ctx, h, reps), nullptr, {}, {}, false, false, {}};
    if (!t.hypothesis.pass)
        return t;
    t.dc = std::make_unique<DoubleCosetData>(double_coset_decomposition(h, dc_opts));
    std::vector<RationalIrrep> ws;
    for (auto k : reps)
        ws.push_back(ctx.irreps[k]);
    t.id = tuple_data(*t.dc, *ctx.table, ws);
    IntMatrix K;
    try {
        K = matrix_K(*t.dc, t.id);
        t.k_nonnegative = true;
    } catch (HypothesisViolation const&) {
        t.k_nonnegative = false;
    }
    if (verify_identities && t.k_nonnegative) {
        std::vector<IntMatrix> blocks;
        for (auto const& a : t.id.a)
            blocks.push_back(matrix_Dbar(*t.dc, a));
        t.identities = verify_matrix_identities(*t.dc, t.id, blocks, K);
        t.trivial_exponent_consistent = trivial_exponent_consistent(ctx, h, reps, t.id, K);
    }
    t.rows = admissibility_table(ctx, h, reps, t.id);
    return t;
}

namespace detail
{

// Runs body(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, std::size_t threads, std::function<void(std::size_t)> const& body)
{
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

// All multiplicity vectors over `classes` with 1 <= sum <= max_total.
inline void enumerate_multiplicities(std::vector<std::size_t> const& classes, std::size_t max_total,
                                     std::vector<std::vector<std::int64_t>>& out)
{
    std::vector<std::int64_t> m(classes.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t left) {
        if (pos == classes.size()) {
            if (static_cast<std::int64_t>(max_total) - left >= 1)
                out.push_back(m);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            m[pos] = v;
            rec(pos + 1, left - v);
        }
        m[pos] = 0;
    };
    rec(0, static_cast<std::int64_t>(max_total));
}

}  // namespace detail

inline PrymReport make_report(GroupContext const& ctx, TripleAnalysis const& t, GeometricSignature sig,
                              SearchBounds const& bounds)
{
    PrymReport rep;
    rep.signature = std::move(sig);
    rep.q = t.id.q;
    rep.deg_K = t.id.deg_K;
    rep.genus_X = genus_quotient(rep.signature, t.rows, t.id.index);
    rep.dim_P = dim_prym(rep.signature, t.rows, t.id);
    rep.fixed_points = fixed_points(rep.signature, t.rows);
    rep.identities_pass = t.identities.all_pass() && !t.identities.checks.empty();
    rep.crosscheck = crosscheck_dim(rep.signature, t.rows, t.id);
    for (auto const& [c, m] : rep.signature.entries)
        rep.mixed = rep.mixed || t.rows.at(c).A != 0;
    if (!is_integer(rep.genus_X) || !is_integer(rep.dim_P)) {
        // Riemann-Hurwitz parity fails, so no covering has this signature.
        rep.realizable = Realizable::no;
    } else if (bounds.check_realizability) {
        auto r = find_generating_tuple(ctx, rep.signature, bounds.node_budget);
        rep.realizable = r.status;
        rep.witness = std::move(r.witness);
    }
    return rep;
}

//---------------------------------------------------------------------------//
/*!
 * Certified signatures supported on admissible classes, sorted by
 * (dim P, number of branch points, entries).
 */
inline std::vector<PrymReport> search_signatures(GroupContext const& ctx, TripleAnalysis const& t,
                                                 SearchBounds const& bounds)
{
    if (!t.hypothesis.pass)
        throw InvalidArgument("signature search needs a triple satisfying the Hypothesis");
    std::vector<std::size_t> classes;
    for (auto const& row : t.rows) {
        bool const listed = bounds.only_classes.empty() ||
                            std::find(bounds.only_classes.begin(), bounds.only_classes.end(), row.cyclic_class) !=
                                bounds.only_classes.end();
        if (listed && (row.admissible() || bounds.allow_mixed))
            classes.push_back(row.cyclic_class);
    }
    std::vector<std::vector<std::int64_t>> vectors;
    detail::enumerate_multiplicities(classes, bounds.max_branch_points, vectors);

    std::vector<GeometricSignature> sigs;
    for (auto const& m : vectors) {
        std::vector<std::int64_t> full(ctx.cyclic_classes.size(), 0);
        GeometricSignature sig;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            full[classes[i]] = m[i];
            if (m[i] > 0)
                sig.entries.emplace_back(classes[i], m[i]);
        }
        if (bounds.constraint && !bounds.constraint(full))
            continue;
        if (fixed_points(sig, t.rows) != 0)
            continue;
        BigRational const dim = dim_prym(sig, t.rows, t.id);
        if (dim < 1)
            continue;
        sigs.push_back(std::move(sig));
    }

    std::vector<std::optional<PrymReport>> slots(sigs.size());
    detail::parallel_for(sigs.size(), bounds.threads, [&](std::size_t i) {
        PrymReport rep = make_report(ctx, t, sigs[i], bounds);
        if (rep.realizable != Realizable::no && is_integer(rep.dim_P))
            slots[i] = std::move(rep);
    });
    std::vector<PrymReport> out;
    for (auto& s : slots) {
        if (s)
            out.push_back(std::move(*s));
    }
    std::stable_sort(out.begin(), out.end(), [](PrymReport const& a, PrymReport const& b) {
        if (a.dim_P != b.dim_P)
            return a.dim_P < b.dim_P;
        if (a.signature.branch_points() != b.signature.branch_points())
            return a.signature.branch_points() < b.signature.branch_points();
        return a.signature.entries < b.signature.entries;
    });
    return out;
}

//// SCAN ////

struct ScanBounds
{
    std::size_t index_cap = std::numeric_limits<std::size_t>::max();
    std::size_t max_r = 2;
    std::size_t threads = 1;
    std::size_t work_cap = 2'000'000;
    bool verify_identities = true;
};

struct ScanResult
{
    std::vector<TripleAnalysis> triples;
    std::size_t subgroup_classes = 0;
    bool partial = false;
};

//! Every Hypothesis triple over the given subgroups, in deterministic order.
inline std::vector<TripleAnalysis> scan_subgroups(GroupContext const& ctx, std::vector<Subgroup> const& subgroups,
                                                  ScanBounds const& bounds)
{
    std::vector<std::vector<TripleAnalysis>> per(subgroups.size());
    detail::parallel_for(subgroups.size(), bounds.threads, [&](std::size_t s) {
        Subgroup const& h = subgroups[s];
        if (h.order() == ctx.G().order())
            return;
        // Candidates satisfy c) on their own; group them by (degree, field).
        std::vector<std::size_t> cand;
        for (std::size_t k = 0; k < ctx.irreps.size(); ++k) {
            if (!ctx.irreps[k].trivial && fixed_space_dim(*ctx.table, ctx.irreps[k], h) == 1)
                cand.push_back(k);
        }
        std::vector<std::vector<std::size_t>> groups;
        for (auto k : cand) {
            bool placed = false;
            for (auto& g : groups) {
                auto const& w = ctx.irreps[g[0]];
                if (w.n == ctx.irreps[k].n && w.field_stabilizer == ctx.irreps[k].field_stabilizer) {
                    g.push_back(k);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                groups.push_back({k});
        }
        std::vector<std::vector<std::size_t>> subsets;
        for (auto const& g : groups) {
            std::size_t const m = g.size();
            for (std::size_t size = 1; size <= std::min(bounds.max_r, m); ++size) {
                std::vector<bool> pick(m, false);
                std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
                do {
                    std::vector<std::size_t> sub;
                    for (std::size_t i = 0; i < m; ++i) {
                        if (pick[i])
                            sub.push_back(g[i]);
                    }
                    subsets.push_back(std::move(sub));
                } while (std::prev_permutation(pick.begin(), pick.end()));
            }
        }
        std::sort(subsets.begin(), subsets.end());
        for (auto const& sub : subsets) {
            auto t = analyze_triple(ctx, h, sub, bounds.verify_identities);
            if (t.hypothesis.pass)
                per[s].push_back(std::move(t));
        }
    });
    std::vector<TripleAnalysis> out;
    for (auto& v : per) {
        for (auto& t : v)
            out.push_back(std::move(t));
    }
    return out;
}

inline ScanResult scan(GroupContext const& ctx, ScanBounds const& bounds)
{
    auto classes = subgroups_up_to_conjugacy(ctx.G(), bounds.index_cap, bounds.work_cap);
    ScanResult result;
    result.partial = classes.partial;
    result.subgroup_classes = classes.representatives.size();
    result.triples = scan_subgroups(ctx, classes.representatives, bounds);
    return result;
}

}  // namespace prymtyurin
