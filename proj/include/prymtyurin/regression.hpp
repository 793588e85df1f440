#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "character_table.hpp"
#include "double_coset.hpp"
#include "errors.hpp"
#include "group_algebra.hpp"
#include "group_spec.hpp"
#include "hecke.hpp"
#include "perm_group.hpp"
#include "prym.hpp"
#include "subgroups.hpp"

namespace prymtyurin
{

//---------------------------------------------------------------------------//
// Regression cases run by `verify-paper` and the acceptance binary. Each case
// returns named checks with a short diagnostic so failures are readable.
//---------------------------------------------------------------------------//

struct CheckResult
{
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CaseResult
{
    std::string name;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool pass() const
    {
        return !checks.empty() &&
               std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.pass; });
    }

    void add(std::string check, bool ok, std::string detail = {})
    {
        checks.push_back({std::move(check), ok, std::move(detail)});
    }
};

//// HELPERS ////

//! Index of the rational irreducible whose trace matches `trace` class by class.
inline std::optional<std::size_t> irrep_with_trace(GroupContext const& ctx, std::vector<std::int64_t> const& trace)
{
    for (std::size_t k = 0; k < ctx.irreps.size(); ++k) {
        if (ctx.irreps[k].trace_values == trace)
            return k;
    }
    return std::nullopt;
}

//! Character of the natural permutation representation minus the trivial one.
inline std::vector<std::int64_t> standard_trace(PermGroup const& G)
{
    std::vector<std::int64_t> out;
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        auto const& p = G.element(G.class_rep(c));
        std::int64_t fixed = 0;
        for (Point i = 0; i < p.degree(); ++i)
            fixed += p(i) == i;
        out.push_back(fixed - 1);
    }
    return out;
}

//! Trace of the reflection representation for signed permutations on 2n points.
inline std::vector<std::int64_t> signed_permutation_trace(PermGroup const& G)
{
    std::size_t const n = G.degree() / 2;
    std::vector<std::int64_t> out;
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        auto const& p = G.element(G.class_rep(c));
        std::int64_t t = 0;
        for (Point i = 0; i < n; ++i) {
            if (p(i) == i)
                ++t;
            else if (p(i) == n + i)
                --t;
        }
        out.push_back(t);
    }
    return out;
}

//! Cyclic-class index of <g>.
inline std::size_t cyclic_class_index(GroupContext const& ctx, Elem g)
{
    for (std::size_t j = 0; j < ctx.cyclic_classes.size(); ++j) {
        auto const members = cyclic_class_elements(ctx.G(), ctx.cyclic_classes[j]);
        if (std::binary_search(members.begin(), members.end(), g))
            return j;
    }
    throw InternalFault("element generates no listed cyclic subgroup");
}

//! Set-stabilizer of {1, ..., k} in a permutation group.
inline Subgroup set_stabilizer(PermGroup const& G, std::size_t k)
{
    return subgroup_from_predicate(G, [k](Permutation const& p) {
        for (Point i = 0; i < k; ++i) {
            if (p(i) >= k)
                return false;
        }
        return true;
    });
}

namespace detail
{

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string join_ints(std::vector<std::int64_t> const& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Every subgroup of a small group, one per element set.
inline std::vector<Subgroup> all_subgroups(PermGroup const& G)
{
    auto const classes = subgroups_up_to_conjugacy(G);
    if (classes.partial)
        throw CapExceeded("subgroup enumeration was truncated");
    std::vector<Subgroup> out;
    std::set<std::vector<Elem>> seen;
    for (auto const& h : classes.representatives) {
        for (Elem g = 0; g < G.order(); ++g) {
            Subgroup c = conjugate_subgroup(h, g);
            if (seen.insert(c.elements()).second)
                out.push_back(std::move(c));
        }
    }
    return out;
}

// Every multiplicity vector on `len` classes with entries in [0, max_each].
inline void for_each_vector(std::size_t len, std::int64_t max_each,
                            std::function<void(std::vector<std::int64_t> const&)> const& body)
{
    std::vector<std::int64_t> m(len, 0);
    while (true) {
        body(m);
        std::size_t i = 0;
        while (i < len && m[i] == max_each)
            m[i++] = 0;
        if (i == len)
            return;
        ++m[i];
    }
}

inline GeometricSignature signature_from(std::vector<std::size_t> const& classes, std::vector<std::int64_t> const& m)
{
    std::map<std::size_t, std::int64_t> merged;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (m[i] > 0)
            merged[classes[i]] += m[i];
    }
    GeometricSignature sig;
    for (auto const& [c, k] : merged)
        sig.entries.emplace_back(c, k);
    return sig;
}

}  // namespace detail

//// CASES ////

//! Literal convolution in Q[G] against the Hecke element built from a_i.
inline CaseResult case_convolution_oracle(std::vector<std::string> const& groups)
{
    auto const t0 = std::chrono::steady_clock::now();
    CaseResult res{"convolution-oracle", {}, 0};
    for (auto const& spec : groups) {
        auto ctx = make_context(spec);
        std::size_t triples = 0, bad = 0;
        for (auto const& h : detail::all_subgroups(ctx->G())) {
            auto const dc = double_coset_decomposition(h);
            for (auto const& w : ctx->irreps) {
                auto const a = coefficients_a(dc, *ctx->table, w);
                auto const check = convolution_oracle(dc, w, a);
                ++triples;
                bad += !(check.right_product && check.left_product);
            }
        }
        res.add(spec, bad == 0, std::to_string(triples) + " (H, W) pairs, " + std::to_string(bad) + " mismatches");
    }
    res.seconds = detail::seconds_since(t0);
    return res;
}

inline CaseResult case_s3_oracle()
{
    auto r = case_convolution_oracle({"sym(3)"});
    r.name = "s3-oracle";
    return r;
}

//! Matrix identities, integrality of q and c, and the shape of M_K for every scanned triple.
inline CaseResult case_identity_suite(std::vector<std::string> const& groups, std::size_t threads = 1)
{
    auto const t0 = std::chrono::steady_clock::now();
    CaseResult res{"identities", {}, 0};
    for (auto const& spec : groups) {
        auto ctx = make_context(spec);
        ScanBounds bounds;
        bounds.threads = threads;
        auto const scanned = scan(*ctx, bounds);
        std::size_t bad = 0;
        std::string first_failure;
        for (auto const& t : scanned.triples) {
            bool ok = t.k_nonnegative && t.identities.all_pass() && !t.identities.checks.empty() &&
                      t.id.c_integral() && t.id.q >= 1 && t.id.b > 0 &&
                      t.id.group_order % (t.id.b * t.id.n) == 0 && t.trivial_exponent_consistent;
            if (ok) {
                IntMatrix const K = matrix_K(*t.dc, t.id);
                for (std::size_t s = 0; s < K.size(); ++s)
                    ok = ok && K(s, s) == 0;
            }
            if (!ok && first_failure.empty())
                first_failure = " first failure at |H|=" + std::to_string(t.subgroup.order());
            bad += !ok;
        }
        res.add(spec, bad == 0 && !scanned.partial,
                std::to_string(scanned.triples.size()) + " triples, " + std::to_string(bad) + " failing" +
                    (scanned.partial ? ", partial enumeration" : "") + first_failure);
    }
    res.seconds = detail::seconds_since(t0);
    return res;
}

//! Alternating and rotation-subgroup rows of the exponent table.
inline CaseResult case_small_exponent_rows()
{
    auto const t0 = std::chrono::steady_clock::now();
    CaseResult res{"prop5.1-small", {}, 0};

    auto alt_row = [&](std::size_t m, std::size_t k, std::int64_t expected) {
        auto ctx = make_context("alt(" + std::to_string(m) + ")");
        auto const h = set_stabilizer(ctx->G(), k);
        auto const v = irrep_with_trace(*ctx, standard_trace(ctx->G()));
        std::string const name = "alt(" + std::to_string(m) + ") k=" + std::to_string(k);
        if (!v) {
            res.add(name, false, "standard representation not found");
            return;
        }
        auto const t = analyze_triple(*ctx, h, {*v});
        bool const ok = t.hypothesis.pass && t.id.q == expected && t.identities.all_pass();
        res.add(name, ok,
                "q=" + std::to_string(t.id.q) + " expected " + std::to_string(expected) +
                    (t.hypothesis.pass ? "" : " (Hypothesis failed)"));
    };
    alt_row(5, 1, 1);
    alt_row(5, 2, 3);
    alt_row(5, 3, 3);
    alt_row(5, 4, 1);
    alt_row(6, 2, 4);

    auto weyl_row = [&](std::size_t n, char const* label, std::function<bool(Permutation const&)> const& pred,
                        std::int64_t expected) {
        auto ctx = make_context("rot(weylD(" + std::to_string(n) + "))");
        auto const h = subgroup_from_predicate(ctx->G(), pred);
        auto const v = irrep_with_trace(*ctx, signed_permutation_trace(ctx->G()));
        std::string const name = std::string("rot(weylD(") + std::to_string(n) + ")) " + label;
        if (!v) {
            res.add(name, false, "reflection representation not found");
            return;
        }
        auto const t = analyze_triple(*ctx, h, {*v});
        bool const ok = t.hypothesis.pass && t.id.q == expected && t.identities.all_pass();
        res.add(name, ok,
                "|H|=" + std::to_string(h.order()) + " q=" + std::to_string(t.id.q) + " expected " +
                    std::to_string(expected) + (t.hypothesis.pass ? "" : " (Hypothesis failed)"));
    };
    weyl_row(4, "stabilizer of e_1", [](Permutation const& p) { return p(0) == 0; }, 2);
    weyl_row(5, "pure permutations", [](Permutation const& p) {
        std::size_t const n = p.degree() / 2;
        for (Point i = 0; i < n; ++i) {
            if (p(i) >= n)
                return false;
        }
        return true;
    }, 4);
    res.seconds = detail::seconds_since(t0);
    return res;
}

//! The two triples of the order-960 rotation group.
inline CaseResult case_rotation_weyl_d5(std::size_t threads = 1)
{
    auto const t0 = std::chrono::steady_clock::now();
    CaseResult res{"prop5.2", {}, 0};
    auto ctx = make_context("rot(weylD(5))");
    res.add("group order 960", ctx->G().order() == 960, std::to_string(ctx->G().order()));
    ScanBounds bounds;
    bounds.threads = threads;
    auto const scanned = scan(*ctx, bounds);
    auto const labels = ctx->class_labels();

    std::vector<TripleAnalysis const*> t80, t96;
    for (auto const& t : scanned.triples) {
        if (t.reps.size() != 1)
            continue;
        auto const& w = ctx->irreps[t.reps[0]];
        if (t.subgroup.order() == 80 && w.n == 3 && w.field_degree == 2)
            t80.push_back(&t);
        if (t.subgroup.order() == 96 && w.n == 4 && w.field_degree == 1)
            t96.push_back(&t);
    }
    res.add("unique order-80 class with the degree-3 orbit", t80.size() == 1,
            std::to_string(t80.size()) + " passing classes");
    if (t80.empty())
        return res;
    auto const& a = *t80.front();
    res.add("order-80 exponent", a.id.q == 2, "q=" + std::to_string(a.id.q));
    res.add("order-80 identities", a.identities.all_pass() && a.k_nonnegative);

    std::vector<std::size_t> adm, adm3, adm6;
    std::string adm_text;
    bool all_generate = true;
    for (auto const& row : a.rows) {
        if (!row.admissible())
            continue;
        adm.push_back(row.cyclic_class);
        adm_text += " " + labels[row.cyclic_class] + (row.generates ? "" : "(non-generating)");
        all_generate = all_generate && row.generates;
        if (row.class_order == 3)
            adm3.push_back(row.cyclic_class);
        if (row.class_order == 6)
            adm6.push_back(row.cyclic_class);
    }
    bool const exact = adm.size() == 3 && adm3.size() == 1 && adm6.size() == 2;
    res.add("order-80 admissible classes are one of order 3 and two of order 6", exact,
            "admissible:" + adm_text);
    res.add("order-80 admissible classes generate the group", all_generate, "admissible:" + adm_text);

    auto dim_formula = [&](TripleAnalysis const& t, std::vector<std::size_t> const& cls, std::int64_t coef,
                           std::int64_t shift) {
        bool ok = !cls.empty();
        detail::for_each_vector(cls.size(), 5, [&](std::vector<std::int64_t> const& m) {
            auto const sig = detail::signature_from(cls, m);
            std::int64_t total = 0;
            for (auto x : m)
                total += x;
            ok = ok && dim_prym(sig, t.rows, t.id) == BigRational(static_cast<long>(coef * total - shift)) &&
                 fixed_points(sig, t.rows) == 0 && crosscheck_dim(sig, t.rows, t.id);
        });
        return ok;
    };
    if (adm3.size() == 1 && adm6.size() == 2) {
        std::vector<std::size_t> const three_six{adm3[0], adm6[0], adm6[1]};
        res.add("order-80 dim P = 2(m_3+m_6+m_6')-6", dim_formula(a, three_six, 2, 6));
    } else {
        res.add("order-80 dim P = 2(m_3+m_6+m_6')-6", false, "order-3/order-6 admissible classes not as expected");
    }

    res.add("order-96 triple with the degree-4 rational representation", !t96.empty(),
            std::to_string(t96.size()) + " passing classes");
    if (!t96.empty()) {
        auto const& b = *t96.front();
        res.add("order-96 exponent", b.id.q == 3, "q=" + std::to_string(b.id.q));
        res.add("order-96 identities", b.identities.all_pass() && b.k_nonnegative);
        std::vector<std::size_t> b3, b6;
        for (auto const& row : b.rows) {
            if (row.admissible() && row.generates && row.class_order == 3)
                b3.push_back(row.cyclic_class);
            if (row.admissible() && row.generates && row.class_order == 6)
                b6.push_back(row.cyclic_class);
        }
        bool const same = b3 == adm3 && b6 == adm6;
        res.add("order-96 shares the order-3 and order-6 admissible classes", same);
        if (b3.size() == 1 && b6.size() == 2)
            res.add("order-96 dim P = m_3+m_6+m_6'-4", dim_formula(b, {b3[0], b6[0], b6[1]}, 1, 4));
        else
            res.add("order-96 dim P = m_3+m_6+m_6'-4", false, "order-3/order-6 admissible classes not as expected");
    }
    res.seconds = detail::seconds_since(t0);
    return res;
}

//! D_p x D_p x Z/2 with H = <y1, y2, z> and the two degree-2 orbits.
inline CaseResult case_dihedral_wreath(std::size_t p, std::size_t threads = 1)
{
    auto const t0 = std::chrono::steady_clock::now();
    CaseResult res{"prop5.3 p=" + std::to_string(p), {}, 0};
    std::string const d = "dihedral(" + std::to_string(p) + ")";
    auto ctx = make_context("product(product(" + d + "," + d + "),sym(2))");
    PermGroup const& G = ctx->G();
    auto const& gens = G.generator_elements();
    if (gens.size() != 5)
        throw InternalFault("expected five generators x1, y1, x2, y2, z");
    Elem const x1 = gens[0], y1 = gens[1], x2 = gens[2], y2 = gens[3], z = gens[4];
    Elem const hg[] = {y1, y2, z};
    Subgroup const h = subgroup_closure(G, hg);
    res.add("|H| = 8", h.order() == 8, std::to_string(h.order()));

    // W_1 is trivial on x2, y2, z and W_2 on x1, y1, z.
    auto trivial_on = [&](RationalIrrep const& w, std::initializer_list<Elem> els) {
        for (Elem e : els) {
            if (w.trace_values[G.class_of(e)] != w.trace_values[0])
                return false;
        }
        return true;
    };
    std::optional<std::size_t> w1, w2;
    for (std::size_t k = 0; k < ctx->irreps.size(); ++k) {
        auto const& w = ctx->irreps[k];
        if (w.n != 2)
            continue;
        if (trivial_on(w, {x2, y2, z}))
            w1 = k;
        if (trivial_on(w, {x1, y1, z}))
            w2 = k;
    }
    if (!w1 || !w2) {
        res.add("representations W_1, W_2 located", false);
        return res;
    }
    auto const t = analyze_triple(*ctx, h, {*w1, *w2});
    res.add("Hypothesis", t.hypothesis.pass);
    if (!t.hypothesis.pass)
        return res;
    res.add("exponent q = p", t.id.q == static_cast<std::int64_t>(p), "q=" + std::to_string(t.id.q));
    res.add("identities", t.identities.all_pass() && t.k_nonnegative);

    std::vector<std::size_t> const cls{
        cyclic_class_index(*ctx, y1),          cyclic_class_index(*ctx, y2),
        cyclic_class_index(*ctx, G.mul(y1, z)), cyclic_class_index(*ctx, G.mul(y2, z)),
        cyclic_class_index(*ctx, x1),          cyclic_class_index(*ctx, x2),
        cyclic_class_index(*ctx, G.mul(x1, z)), cyclic_class_index(*ctx, G.mul(x2, z)),
        cyclic_class_index(*ctx, z)};
    bool distinct = std::set<std::size_t>(cls.begin(), cls.end()).size() == 9;
    res.add("G_1..G_9 lie in distinct classes", distinct);
    std::string As;
    bool all_zero = true;
    for (auto c : cls) {
        As += " " + std::to_string(t.rows[c].A);
        all_zero = all_zero && t.rows[c].A == 0;
    }
    res.add("G_1..G_9 admissible", all_zero, "A =" + As);

    // Even m_1..m_8 up to 4 each, m_9 up to 3, l_1 and l_2 at least 6.
    std::int64_t const coef = static_cast<std::int64_t>(p - 1);
    bool dims_ok = true;
    std::size_t tested = 0;
    detail::for_each_vector(8, 2, [&](std::vector<std::int64_t> const& half) {
        std::vector<std::int64_t> m(9);
        for (std::size_t i = 0; i < 8; ++i)
            m[i] = 2 * half[i];
        for (std::int64_t m9 = 0; m9 <= 3; ++m9) {
            m[8] = m9;
            std::int64_t const l1 = m[0] + m[2] + 2 * (m[4] + m[6]);
            std::int64_t const l2 = m[1] + m[3] + 2 * (m[5] + m[7]);
            if (l1 < 6 || l2 < 6)
                continue;
            auto const sig = detail::signature_from(cls, m);
            BigRational const expected = make_rational(coef * (l1 + l2 - 8), 4);
            ++tested;
            dims_ok = dims_ok && dim_prym(sig, t.rows, t.id) == expected && fixed_points(sig, t.rows) == 0 &&
                      crosscheck_dim(sig, t.rows, t.id);
        }
    });
    res.add("dim P = (p-1)/4 (l_1+l_2-8)", dims_ok && tested > 0, std::to_string(tested) + " signatures");

    // The least even signature found by the search has the same invariants.
    SearchBounds sb;
    sb.max_branch_points = 8;
    sb.threads = threads;
    sb.node_budget = 20'000;
    sb.check_realizability = false;
    sb.only_classes = cls;
    sb.constraint = [&](std::vector<std::int64_t> const& full) {
        for (std::size_t i = 0; i < 8; ++i) {
            if (full[cls[i]] % 2 != 0)
                return false;
        }
        std::int64_t const l1 = full[cls[0]] + full[cls[2]] + 2 * (full[cls[4]] + full[cls[6]]);
        std::int64_t const l2 = full[cls[1]] + full[cls[3]] + 2 * (full[cls[5]] + full[cls[7]]);
        return l1 >= 6 && l2 >= 6;
    };
    auto const found = search_signatures(*ctx, t, sb);
    bool search_ok = !found.empty();
    for (auto const& r : found)
        search_ok = search_ok && r.q == static_cast<std::int64_t>(p) && r.crosscheck;
    res.add("signature search respects the exponent", search_ok, std::to_string(found.size()) + " signatures");
    res.seconds = detail::seconds_since(t0);
    return res;
}

//! Small hand-checkable triples.
inline CaseResult case_micro_oracles()
{
    auto const t0 = std::chrono::steady_clock::now();
    CaseResult res{"micro-oracles", {}, 0};
    {
        auto ctx = make_context("sym(3)");
        auto const h = parse_subgroup_spec(ctx->G(), "gens:(1,2)");
        auto const v = irrep_with_trace(*ctx, standard_trace(ctx->G()));
        auto const t = analyze_triple(*ctx, h, {v.value()});
        std::vector<std::int64_t> const a_expected{2, -1};
        bool const ok = t.hypothesis.pass && t.id.a.at(0) == a_expected && t.id.b == 3 && t.id.q == 1 &&
                        matrix_K(*t.dc, t.id).is_zero();
        res.add("sym(3)/<(1 2)>/standard", ok,
                "a=(" + detail::join_ints(t.id.a.at(0)) + ") b=" + std::to_string(t.id.b) +
                    " q=" + std::to_string(t.id.q));
    }
    {
        auto ctx = make_context("sym(4)");
        auto const h = set_stabilizer(ctx->G(), 3);
        auto const v = irrep_with_trace(*ctx, standard_trace(ctx->G()));
        auto const t = analyze_triple(*ctx, h, {v.value()});
        res.add("sym(4)/S_3/standard", t.hypothesis.pass && t.id.q == 1, "q=" + std::to_string(t.id.q));
    }
    {
        auto ctx = make_context("alt(5)");
        auto const h = set_stabilizer(ctx->G(), 2);
        auto const v = irrep_with_trace(*ctx, standard_trace(ctx->G()));
        auto const t = analyze_triple(*ctx, h, {v.value()});
        Elem const c345 = ctx->G().index_of(Permutation::from_cycles(5, {{2, 3, 4}}));
        std::size_t const j = cyclic_class_index(*ctx, c345);
        res.add("alt(5) pair stabilizer: A(<(3 4 5)>) = 0", t.rows.at(j).A == 0,
                "A=" + std::to_string(t.rows.at(j).A));
        res.add("alt(5) pair stabilizer: b = 5, deg K = 3", t.id.b == 5 && t.id.deg_K == 3,
                "b=" + std::to_string(t.id.b) + " degK=" + std::to_string(t.id.deg_K));
        bool cross = true;
        for (std::int64_t m = 1; m <= 12; ++m) {
            GeometricSignature const sig{{{j, m}}};
            BigRational const lhs = dim_prym(sig, t.rows, t.id) * t.id.q;
            cross = cross && lhs == BigRational(static_cast<long>(3 * m - 12)) && crosscheck_dim(sig, t.rows, t.id);
        }
        res.add("alt(5) cross-check 3(m-4) = 3m-12", cross);
    }
    res.seconds = detail::seconds_since(t0);
    return res;
}

//! Generating product-one tuples of 3-cycles in Alt(5).
inline CaseResult case_realizability()
{
    auto const t0 = std::chrono::steady_clock::now();
    CaseResult res{"realizability", {}, 0};
    auto ctx = make_context("alt(5)");
    PermGroup const& G = ctx->G();
    Elem const c = G.index_of(Permutation::from_cycles(5, {{0, 1, 2}}));
    std::size_t const j = cyclic_class_index(*ctx, c);

    auto const three = find_generating_tuple(*ctx, GeometricSignature{{{j, 3}}}, std::size_t(-1));
    res.add("[0; (C_3, 3)] has no generating tuple", three.status == Realizable::no,
            std::string(to_string(three.status)) + " after " + std::to_string(three.nodes) + " nodes");

    auto const h = set_stabilizer(G, 2);
    auto const v = irrep_with_trace(*ctx, standard_trace(G));
    auto const t = analyze_triple(*ctx, h, {v.value()});
    SearchBounds sb;
    sb.max_branch_points = 8;
    auto const found = search_signatures(*ctx, t, sb);
    std::optional<PrymReport> first;
    for (auto const& r : found) {
        if (r.certified() && r.realizable == Realizable::yes && r.signature.entries.size() == 1 &&
            r.signature.entries[0].first == j) {
            first = r;
            break;
        }
    }
    if (!first) {
        res.add("least certified m has a witness", false, "no certified signature on C_3");
        return res;
    }
    std::int64_t const m = first->signature.entries[0].second;
    Elem prod = PermGroup::identity();
    for (Elem g : first->witness)
        prod = G.mul(prod, g);
    bool const generates = closure_set(G, first->witness).size() == G.order();
    bool const classes_ok = std::all_of(first->witness.begin(), first->witness.end(),
                                        [&](Elem g) { return cyclic_class_index(*ctx, g) == j; });
    res.add("least certified m has a witness",
            first->witness.size() == static_cast<std::size_t>(m) && prod == PermGroup::identity() && generates &&
                classes_ok,
            "m=" + std::to_string(m) + " dim P=" + to_string(first->dim_P));
    res.add("least certified m has dim P = m - 4", first->dim_P == BigRational(static_cast<long>(m - 4)));
    res.seconds = detail::seconds_since(t0);
    return res;
}

//! Group lists used by the oracle and identity suites.
inline std::vector<std::string> oracle_catalog()
{
    return {"sym(3)",       "sym(4)",       "alt(4)",       "dihedral(3)",           "dihedral(4)",
            "dihedral(5)",  "dihedral(6)",  "dihedral(7)",  "product(dihedral(3),sym(2))"};
}

inline std::vector<std::string> identity_catalog()
{
    std::vector<std::string> out{"sym(3)", "sym(4)", "sym(5)", "alt(4)", "alt(5)", "alt(6)"};
    for (int p = 3; p <= 9; ++p)
        out.push_back("dihedral(" + std::to_string(p) + ")");
    out.insert(out.end(), {"weylD(4)", "rot(weylD(4))", "rot(weylD(5))",
                           "product(product(dihedral(3),dihedral(3)),sym(2))"});
    return out;
}

//! Case names accepted by `run_regression_case`.
inline std::vector<std::string> regression_case_names()
{
    return {"prop5.1-small", "prop5.2", "prop5.3", "s3-oracle", "oracle", "identities", "micro-oracles",
            "realizability"};
}

//! Runs one named case; `p` only matters for prop5.3 (0 means both 3 and 5).
inline std::vector<CaseResult> run_regression_case(std::string const& name, std::size_t p = 0,
                                                   std::size_t threads = 1)
{
    if (name == "prop5.1-small")
        return {case_small_exponent_rows()};
    if (name == "prop5.2")
        return {case_rotation_weyl_d5(threads)};
    if (name == "prop5.3") {
        if (p != 0)
            return {case_dihedral_wreath(p, threads)};
        return {case_dihedral_wreath(3, threads), case_dihedral_wreath(5, threads)};
    }
    if (name == "s3-oracle")
        return {case_s3_oracle()};
    if (name == "oracle")
        return {case_convolution_oracle(oracle_catalog())};
    if (name == "identities")
        return {case_identity_suite(identity_catalog(), threads)};
    if (name == "micro-oracles")
        return {case_micro_oracles()};
    if (name == "realizability")
        return {case_realizability()};
    if (name == "all") {
        std::vector<CaseResult> out;
        for (auto const& n : regression_case_names()) {
            auto part = run_regression_case(n, n == "prop5.3" ? p : 0, threads);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw InvalidArgument("unknown case '" + name + "'");
}

}  // namespace prymtyurin
