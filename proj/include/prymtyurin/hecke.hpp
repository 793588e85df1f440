#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "character_table.hpp"
#include "double_coset.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace prymtyurin
{

//---------------------------------------------------------------------------//
/*!
 * Dense square integer matrix with overflow-checked products.
 */
class IntMatrix
{
  public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n, std::int64_t fill = 0) : n_(n), data_(n * n, fill) {}

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
    }

    IntMatrix transpose() const
    {
        IntMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j)
                t(j, i) = (*this)(i, j);
        }
        return t;
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b)
    {
        if (a.n_ != b.n_)
            throw InvalidArgument("matrix sizes differ");
        std::size_t const n = a.n_;
        IntMatrix c(n);
        std::vector<__int128> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t k = 0; k < n; ++k) {
                std::int64_t const x = a(i, k);
                if (x == 0)
                    continue;
                std::int64_t const* brow = &b.data_[k * n];
                for (std::size_t j = 0; j < n; ++j)
                    row[j] += static_cast<__int128>(x) * brow[j];
            }
            for (std::size_t j = 0; j < n; ++j)
                c(i, j) = narrow(row[j]);
        }
        return c;
    }

    friend IntMatrix operator+(IntMatrix a, IntMatrix const& b)
    {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] = narrow(static_cast<__int128>(a.data_[i]) + b.data_[i]);
        return a;
    }

    friend IntMatrix operator-(IntMatrix a, IntMatrix const& b)
    {
        a.check_same(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] = narrow(static_cast<__int128>(a.data_[i]) - b.data_[i]);
        return a;
    }

    friend IntMatrix operator*(std::int64_t s, IntMatrix a)
    {
        for (auto& x : a.data_)
            x = narrow(static_cast<__int128>(s) * x);
        return a;
    }

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

  private:
    static std::int64_t narrow(__int128 v)
    {
        if (v > INT64_MAX || v < INT64_MIN)
            throw InternalFault("integer matrix entry overflows 64 bits");
        return static_cast<std::int64_t>(v);
    }

    void check_same(IntMatrix const& b) const
    {
        if (n_ != b.n_)
            throw InvalidArgument("matrix sizes differ");
    }

    std::size_t n_ = 0;
    std::vector<std::int64_t> data_;
};

//---------------------------------------------------------------------------//
/*!
 * Structure constants of the Hecke ring in the basis F_i = (1/|H|) sum H_i.
 */
struct HeckeRing
{
    std::size_t d = 0;
    std::vector<std::int64_t> constants;  //!< flattened c[i][j][k]

    std::int64_t c(std::size_t i, std::size_t j, std::size_t k) const { return constants[(i * d + j) * d + k]; }
};

inline HeckeRing hecke_ring(DoubleCosetData const& dc)
{
    PermGroup const& G = *dc.group;
    std::size_t const d = dc.d;
    std::size_t const h = dc.subgroup.order();
    // count[i][j][k] = #{x in H_i : x^{-1} g_k in H_j} = |H_i cap g_k H_j^{-1}|
    std::vector<std::int64_t> count(d * d * d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        Elem const gk = dc.reps[k][0];
        for (Elem x = 0; x < G.order(); ++x) {
            std::size_t const i = dc.index_of[x];
            std::size_t const j = dc.index_of[G.mul(G.inv(x), gk)];
            ++count[(i * d + j) * d + k];
        }
    }
    HeckeRing ring;
    ring.d = d;
    ring.constants.resize(count.size());
    for (std::size_t t = 0; t < count.size(); ++t) {
        if (count[t] % static_cast<std::int64_t>(h) != 0)
            throw InternalFault("Hecke structure constant is not an integer");
        ring.constants[t] = count[t] / static_cast<std::int64_t>(h);
    }
    return ring;
}

//---------------------------------------------------------------------------//
/*!
 * a_i = sum_{h in H} tr(chi(h g_{i1}^{-1})) for each double coset.
 *
 * Every representative g_ij is evaluated and compared against g_i1 when the
 * double coset is small, and a spread of up to eight otherwise.
 */
inline std::vector<std::int64_t> coefficients_a(DoubleCosetData const& dc, CharacterTable const& tbl,
                                                RationalIrrep const& w)
{
    PermGroup const& G = *dc.group;
    auto const& hs = dc.subgroup.elements();
    auto value = [&](Elem g) {
        Elem const gi = G.inv(g);
        std::int64_t s = 0;
        for (Elem h : hs)
            s += w.trace_values[G.class_of(G.mul(h, gi))];
        return s;
    };
    std::vector<std::int64_t> a(dc.d);
    for (std::size_t i = 0; i < dc.d; ++i) {
        auto const& row = dc.reps[i];
        a[i] = value(row[0]);
        std::size_t const step = std::max<std::size_t>(1, row.size() / 8);
        for (std::size_t j = step; j < row.size(); j += step) {
            if (value(row[j]) != a[i])
                throw InternalFault("coefficient a_i depends on the coset representative");
        }
    }
    if (fixed_space_dim(tbl, w, dc.subgroup) == 1) {
        auto const a1 = static_cast<std::int64_t>(w.field_degree * dc.subgroup.order());
        if (a[0] != a1)
            throw InternalFault("a_1 differs from [K_V:Q] |H|");
        for (auto x : a) {
            if (x > a1)
                throw InternalFault("coefficient a_i exceeds a_1");
        }
    }
    return a;
}

struct IdempotentCheck
{
    bool ok = true;
    std::optional<std::size_t> failing_k;

    explicit operator bool() const noexcept { return ok; }
};

//! (n/|G|) sum a_i F_i is idempotent: n sum_{i,j} a_i a_j c_ijk = |G| a_k.
inline IdempotentCheck idempotent_check(HeckeRing const& ring, std::vector<std::int64_t> const& a, std::int64_t n,
                                        std::size_t group_order)
{
    for (std::size_t k = 0; k < ring.d; ++k) {
        BigInt lhs = 0;
        for (std::size_t i = 0; i < ring.d; ++i) {
            for (std::size_t j = 0; j < ring.d; ++j) {
                if (auto const c = ring.c(i, j, k))
                    lhs += BigInt(static_cast<long>(a[i])) * a[j] * c;
            }
        }
        lhs *= n;
        BigInt const rhs = BigInt(static_cast<long>(group_order)) * a[k];
        if (lhs != rhs)
            return {false, k};
    }
    return {};
}

//---------------------------------------------------------------------------//
/*!
 * Idempotent coefficients and the derived integers for a tuple of
 * representations sharing degree n and character field L.
 */
struct IdempotentData
{
    std::vector<std::vector<std::int64_t>> a;  //!< a[k][i]
    std::vector<std::int64_t> b_i;
    std::int64_t b = 0;
    std::int64_t b1 = 0;
    std::int64_t n = 0;
    std::int64_t L_degree = 0;
    std::int64_t q = 0;
    std::size_t r = 0;
    std::int64_t group_order = 0;
    std::int64_t subgroup_order = 0;
    std::int64_t index = 0;
    std::int64_t deg_K = 0;
    BigRational c;  //!< constant of the quadratic relation

    bool c_integral() const { return is_integer(c); }
};

inline IdempotentData tuple_data(DoubleCosetData const& dc, CharacterTable const& tbl,
                                 std::vector<RationalIrrep> const& ws)
{
    if (ws.empty())
        throw InvalidArgument("tuple_data needs at least one representation");
    if (dc.d < 2)
        throw InvalidArgument("tuple_data needs H to be a proper subgroup");
    IdempotentData id;
    id.r = ws.size();
    id.n = ws[0].n;
    id.L_degree = static_cast<std::int64_t>(ws[0].field_degree);
    id.group_order = static_cast<std::int64_t>(dc.group->order());
    id.subgroup_order = static_cast<std::int64_t>(dc.subgroup.order());
    id.index = id.group_order / id.subgroup_order;
    id.b_i.assign(dc.d, 0);
    for (auto const& w : ws) {
        if (w.trivial)
            throw InvalidArgument("tuple_data excludes the trivial representation");
        id.a.push_back(coefficients_a(dc, tbl, w));
        for (std::size_t i = 0; i < dc.d; ++i)
            id.b_i[i] += id.a.back()[i];
    }
    id.b1 = id.b_i[0];
    std::int64_t g = 0;
    for (std::size_t i = 1; i < dc.d; ++i)
        g = std::gcd(g, id.b1 - id.b_i[i]);
    id.b = g;
    if (id.b <= 0)
        throw HypothesisViolation("b = gcd(b_1 - b_i) is not positive");
    if (id.group_order % (id.b * id.n) != 0)
        throw InternalFault("q = |G|/(b n) is not an integer");
    id.q = id.group_order / (id.b * id.n);
    if (id.b1 * id.index % id.b != 0)
        throw InternalFault("degree of the Kanev correspondence is not an integer");
    id.deg_K = 1 + id.b1 * id.index / id.b - id.index;
    BigRational const ratio = make_rational(id.b1, id.b);
    id.c = (1 - ratio) * ((ratio - 1) * id.index + id.q);
    id.c.canonicalize();
    return id;
}

//// CORRESPONDENCE MATRICES ON THE GENERIC FIBER ////

//! M[s][t] = coef[index_of(tau_s sigma_t^{-1})] over the right cosets.
inline IntMatrix matrix_from_coefficients(DoubleCosetData const& dc, std::vector<std::int64_t> const& coef)
{
    PermGroup const& G = *dc.group;
    std::size_t const m = dc.coset_count();
    IntMatrix M(m);
    for (std::size_t s = 0; s < m; ++s) {
        Elem const tau = dc.right_coset_reps[s];
        for (std::size_t t = 0; t < m; ++t)
            M(s, t) = coef[dc.index_of[G.mul(tau, G.inv(dc.right_coset_reps[t]))]];
    }
    return M;
}

inline IntMatrix matrix_Dbar(DoubleCosetData const& dc, std::vector<std::int64_t> const& a)
{
    return matrix_from_coefficients(dc, a);
}

inline IntMatrix matrix_T(DoubleCosetData const& dc) { return IntMatrix(dc.coset_count(), 1); }

inline IntMatrix matrix_K(DoubleCosetData const& dc, IdempotentData const& id)
{
    std::vector<std::int64_t> coef(dc.d, 0);
    for (std::size_t i = 1; i < dc.d; ++i) {
        coef[i] = (id.b1 - id.b_i[i]) / id.b - 1;
        if (coef[i] < 0)
            throw HypothesisViolation("Kanev correspondence has a negative coefficient");
    }
    return matrix_from_coefficients(dc, coef);
}

struct IdentityCheck
{
    std::string name;
    bool pass = false;
};

struct VerificationReport
{
    std::vector<IdentityCheck> checks;

    bool all_pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](IdentityCheck const& c) { return c.pass; });
    }

    std::vector<std::string> failures() const
    {
        std::vector<std::string> out;
        for (auto const& c : checks) {
            if (!c.pass)
                out.push_back(c.name);
        }
        return out;
    }
};

//---------------------------------------------------------------------------//
/*!
 * The six matrix relations of a Hypothesis triple.
 *
 * `blocks` holds the D-bar matrix of each representation in the tuple.
 */
inline VerificationReport verify_matrix_identities(DoubleCosetData const& dc, IdempotentData const& id,
                                                   std::vector<IntMatrix> const& blocks, IntMatrix const& K)
{
    VerificationReport report;
    std::size_t const m = dc.coset_count();
    IntMatrix const T = matrix_T(dc);
    IntMatrix const E = IntMatrix::identity(m);
    auto const index = static_cast<std::int64_t>(m);

    report.checks.push_back({"trace_square", T * T == index * T});

    bool annihilates = true;
    for (auto const& D : blocks)
        annihilates = annihilates && (D * T).is_zero() && (T * D).is_zero();
    report.checks.push_back({"block_times_trace", annihilates});

    bool orthogonal = true;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        for (std::size_t l = 0; l < blocks.size(); ++l) {
            if (k != l)
                orthogonal = orthogonal && (blocks[k] * blocks[l]).is_zero();
        }
    }
    report.checks.push_back({"blocks_orthogonal", orthogonal});

    IntMatrix const N = K - E;
    IntMatrix const cubic = N * (K + (id.q - 1) * E) * (K - id.deg_K * E);
    report.checks.push_back({"cubic", cubic.is_zero()});

    bool quadratic = id.c_integral();
    if (quadratic) {
        std::int64_t const c = to_int64(id.c);
        quadratic = (N * N + id.q * N + c * T).is_zero();
    }
    report.checks.push_back({"quadratic", quadratic});

    report.checks.push_back({"kanev_times_trace", K * T == id.deg_K * T});
    return report;
}

//! Form values (a_k1/b, ..., a_kd/b) of representation k of the tuple.
inline std::vector<BigRational> kanev_form_values(IdempotentData const& id, std::size_t k)
{
    if (k >= id.a.size())
        throw InvalidArgument("representation index out of range");
    std::vector<BigRational> out;
    for (auto x : id.a[k])
        out.push_back(make_rational(x, id.b));
    return out;
}

}  // namespace prymtyurin
