#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "perm_group.hpp"
#include "rational.hpp"

namespace prymtyurin
{

namespace detail
{

//// ARITHMETIC MODULO A WORD-SIZED PRIME ////

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t k, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (k) {
        if (k & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        k >>= 1;
    }
    return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    if (a % p == 0)
        throw InternalFault("inverse of zero modulo p");
    return pow_mod(a, p - 2, p);
}

inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0)
            return false;
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

inline std::uint64_t least_primitive_root(std::uint64_t p)
{
    auto const factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : factors) {
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
    return 1;  // p == 2
}

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

// Basis of the kernel of a square matrix over F_p.
inline std::vector<std::vector<std::uint64_t>> kernel_mod(ModMatrix a, std::uint64_t p)
{
    std::size_t const rows = a.size();
    std::size_t const cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[sel], a[r]);
        std::uint64_t const inv = inv_mod(a[r][c], p);
        for (auto& x : a[r])
            x = mul_mod(x, inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            std::uint64_t const f = a[i][c];
            for (std::size_t t = c; t < cols; ++t)
                a[i][t] = (a[i][t] + p - mul_mod(f, a[r][t], p)) % p;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = (p - a[i][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Row-reduce a list of vectors in place; returns the pivot column of each row.
inline std::vector<std::size_t> rref_rows(std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t const cols = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[sel], rows[r]);
        std::uint64_t const inv = inv_mod(rows[r][c], p);
        for (auto& x : rows[r])
            x = mul_mod(x, inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            std::uint64_t const f = rows[i][c];
            for (std::size_t t = 0; t < cols; ++t)
                rows[i][t] = (rows[i][t] + p - mul_mod(f, rows[r][t], p)) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    if (r != rows.size())
        throw InternalFault("eigenspace basis is linearly dependent");
    return pivots;
}

// Sum over a class function of integer multiplicity vectors, mod x^e - 1.
inline void add_conj_product(std::vector<std::int64_t>& acc, std::vector<std::int64_t> const& a,
                             std::vector<std::int64_t> const& b, std::int64_t weight)
{
    std::size_t const e = acc.size();
    for (std::size_t j = 0; j < e; ++j) {
        if (a[j] == 0)
            continue;
        for (std::size_t k = 0; k < e; ++k) {
            if (b[k] == 0)
                continue;
            acc[(j + e - k) % e] += weight * a[j] * b[k];
        }
    }
}

}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * Complex irreducible character.
 *
 * `counts[c][j]` is the multiplicity of zeta_e^j as an eigenvalue of the
 * representative of class c, so the value there is sum_j counts[c][j] zeta^j.
 */
struct ComplexCharacter
{
    std::int64_t degree = 0;
    std::vector<Cyclotomic> values;
    std::vector<std::vector<std::int64_t>> counts;
};

//---------------------------------------------------------------------------//
/*!
 * Complete character table over Q(zeta_e), e the group exponent.
 *
 * Classes follow the group's class numbering (class 0 is the identity).
 * Characters are ordered with the trivial character first, then by degree,
 * then lexicographically by eigenvalue multiplicities.
 */
class CharacterTable
{
  public:
    explicit CharacterTable(PermGroup const& group) : group_(&group), e_(group.exponent())
    {
        compute();
    }

    PermGroup const& group() const noexcept { return *group_; }
    std::size_t exponent() const noexcept { return e_; }
    std::uint64_t prime() const noexcept { return p_; }
    std::size_t size() const noexcept { return chars_.size(); }
    std::vector<ComplexCharacter> const& characters() const noexcept { return chars_; }
    ComplexCharacter const& character(std::size_t i) const { return chars_[i]; }

    //! Units k mod e (k = 1 when e = 1).
    std::vector<std::int64_t> units() const
    {
        std::vector<std::int64_t> out;
        for (std::size_t k = 1; k <= e_; ++k) {
            if (std::gcd(k, e_) == 1)
                out.push_back(static_cast<std::int64_t>(k % e_ == 0 ? 1 : k));
        }
        return out;
    }

    //! Index of the character chi^sigma_k : g -> chi(g^k).
    std::size_t galois_image(std::size_t i, std::int64_t k) const
    {
        if (std::gcd(k, static_cast<std::int64_t>(e_)) != 1)
            throw InvalidArgument("Galois exponent " + std::to_string(k) + " is not a unit mod " + std::to_string(e_));
        std::vector<std::vector<std::int64_t> const*> target;
        for (std::size_t c = 0; c < group_->class_count(); ++c)
            target.push_back(&chars_[i].counts[group_->class_power(c, k)]);
        for (std::size_t j = 0; j < chars_.size(); ++j) {
            bool same = true;
            for (std::size_t c = 0; c < target.size() && same; ++c)
                same = chars_[j].counts[c] == *target[c];
            if (same)
                return j;
        }
        throw InternalFault("Galois conjugate of a character is missing from the table");
    }

    //! Exact <chi_i, chi_j> via integer multiplicities.
    BigRational character_inner_product(std::size_t i, std::size_t j) const
    {
        std::vector<std::int64_t> acc(e_, 0);
        for (std::size_t c = 0; c < group_->class_count(); ++c)
            detail::add_conj_product(acc, chars_[i].counts[c], chars_[j].counts[c],
                                     static_cast<std::int64_t>(group_->class_size(c)));
        auto const sum = Cyclotomic::from_exponent_counts(e_, acc).as_rational();
        if (!sum)
            throw InternalFault("character inner product is irrational");
        return *sum / BigRational(static_cast<long>(group_->order()));
    }

  private:
    void compute();
    std::vector<std::vector<std::uint64_t>> common_eigenvectors(
        std::vector<std::vector<std::vector<std::uint64_t>>> const& a) const;

    PermGroup const* group_;
    std::size_t e_;
    std::uint64_t p_ = 0;
    std::vector<ComplexCharacter> chars_;
};

//---------------------------------------------------------------------------//
// Simultaneous eigenvectors of the class matrices M_j[k][l] = a[j][k][l].
inline std::vector<std::vector<std::uint64_t>> CharacterTable::common_eigenvectors(
    std::vector<std::vector<std::vector<std::uint64_t>>> const& a) const
{
    std::size_t const r = a.size();
    std::uint64_t const p = p_;
    using Basis = std::vector<std::vector<std::uint64_t>>;

    Basis full(r, std::vector<std::uint64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        full[i][i] = 1;
    std::vector<Basis> spaces{full};

    for (std::size_t j = 1; j < r; ++j) {
        bool all_lines = true;
        for (auto const& s : spaces)
            all_lines = all_lines && s.size() == 1;
        if (all_lines)
            break;
        std::vector<Basis> next;
        for (auto& space : spaces) {
            std::size_t const m = space.size();
            if (m == 1) {
                next.push_back(std::move(space));
                continue;
            }
            auto const piv = detail::rref_rows(space, p);
            // Restriction of M_j in the basis `space`.
            detail::ModMatrix A(m, std::vector<std::uint64_t>(m, 0));
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t t = 0; t < m; ++t) {
                    std::size_t const k = piv[t];
                    std::uint64_t s = 0;
                    for (std::size_t l = 0; l < r; ++l) {
                        if (a[j][k][l] && space[b][l])
                            s = (s + detail::mul_mod(a[j][k][l], space[b][l], p)) % p;
                    }
                    A[t][b] = s;
                }
            }
            std::size_t found = 0;
            for (std::uint64_t lambda = 0; lambda < p && found < m; ++lambda) {
                auto shifted = A;
                for (std::size_t t = 0; t < m; ++t)
                    shifted[t][t] = (shifted[t][t] + p - lambda) % p;
                auto ker = detail::kernel_mod(std::move(shifted), p);
                if (ker.empty())
                    continue;
                found += ker.size();
                Basis sub;
                for (auto const& v : ker) {
                    std::vector<std::uint64_t> w(r, 0);
                    for (std::size_t b = 0; b < m; ++b) {
                        if (v[b] == 0)
                            continue;
                        for (std::size_t l = 0; l < r; ++l)
                            w[l] = (w[l] + detail::mul_mod(v[b], space[b][l], p)) % p;
                    }
                    sub.push_back(std::move(w));
                }
                next.push_back(std::move(sub));
            }
            if (found != m)
                throw InternalFault("class matrix is not diagonalizable over the chosen prime");
        }
        spaces = std::move(next);
    }

    std::vector<std::vector<std::uint64_t>> lines;
    for (auto& s : spaces) {
        if (s.size() != 1)
            throw InternalFault("class matrices do not separate the characters");
        lines.push_back(std::move(s[0]));
    }
    return lines;
}

inline void CharacterTable::compute()
{
    PermGroup const& G = *group_;
    std::size_t const n = G.order();
    std::size_t const r = G.class_count();
    std::size_t const e = e_;

    // Least prime p = 1 mod e with p > 2 sqrt|G|.
    std::uint64_t const bound = static_cast<std::uint64_t>(2.0 * std::sqrt(static_cast<double>(n))) + 1;
    for (std::uint64_t p = e + 1;; p += e) {
        if (p > bound && detail::is_prime_u64(p)) {
            p_ = p;
            break;
        }
    }
    std::uint64_t const p = p_;

    // Class multiplication coefficients a[j][k][l] mod p.
    std::vector<std::vector<std::vector<std::uint64_t>>> a(
        r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
    for (std::size_t l = 0; l < r; ++l) {
        Elem const z = G.class_rep(l);
        for (Elem x = 0; x < n; ++x) {
            auto& cell = a[G.class_of(x)][G.class_of(G.mul(G.inv(x), z))][l];
            cell = (cell + 1) % p;
        }
    }

    auto lines = common_eigenvectors(a);
    if (lines.size() != r)
        throw InternalFault("wrong number of characters");

    std::uint64_t const eta = detail::pow_mod(detail::least_primitive_root(p), (p - 1) / e, p);
    std::uint64_t const eta_inv = detail::inv_mod(eta, p);
    std::uint64_t const e_inv = detail::inv_mod(e % p, p);
    std::vector<std::size_t> inverse_class(r);
    for (std::size_t l = 0; l < r; ++l)
        inverse_class[l] = G.class_power(l, -1);

    for (auto& w : lines) {
        std::uint64_t const norm = detail::inv_mod(w[0], p);
        for (auto& x : w)
            x = detail::mul_mod(x, norm, p);

        // d^2 = |G| / sum_l w_l w_{l*} / |C_l|.
        std::uint64_t s = 0;
        for (std::size_t l = 0; l < r; ++l) {
            std::uint64_t const t = detail::mul_mod(w[l], w[inverse_class[l]], p);
            s = (s + detail::mul_mod(t, detail::inv_mod(G.class_size(l) % p, p), p)) % p;
        }
        std::uint64_t const d2 = detail::mul_mod(n % p, detail::inv_mod(s, p), p);
        std::int64_t degree = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (d * d % p == d2) {
                degree = static_cast<std::int64_t>(d);
                break;
            }
        }
        if (degree == 0)
            throw InternalFault("no character degree matches the central character");

        std::vector<std::uint64_t> chi_mod(r);
        for (std::size_t l = 0; l < r; ++l)
            chi_mod[l] = detail::mul_mod(detail::mul_mod(w[l], static_cast<std::uint64_t>(degree), p),
                                         detail::inv_mod(G.class_size(l) % p, p), p);

        ComplexCharacter chi;
        chi.degree = degree;
        for (std::size_t l = 0; l < r; ++l) {
            std::vector<std::uint64_t> powers(e);
            for (std::size_t k = 0; k < e; ++k)
                powers[k] = chi_mod[G.class_power(l, static_cast<std::int64_t>(k))];
            std::vector<std::int64_t> m(e, 0);
            for (std::size_t j = 0; j < e; ++j) {
                std::uint64_t acc = 0;
                std::uint64_t const step = detail::pow_mod(eta_inv, j, p);
                std::uint64_t root = 1;
                for (std::size_t k = 0; k < e; ++k) {
                    acc = (acc + detail::mul_mod(powers[k], root, p)) % p;
                    root = detail::mul_mod(root, step, p);
                }
                acc = detail::mul_mod(acc, e_inv, p);
                if (acc > static_cast<std::uint64_t>(degree))
                    throw InternalFault("eigenvalue multiplicity out of range while lifting a character");
                m[j] = static_cast<std::int64_t>(acc);
            }
            chi.values.push_back(Cyclotomic::from_exponent_counts(e, m));
            chi.counts.push_back(std::move(m));
        }
        chars_.push_back(std::move(chi));
    }

    std::sort(chars_.begin(), chars_.end(), [](ComplexCharacter const& x, ComplexCharacter const& y) {
        auto trivial = [](ComplexCharacter const& c) {
            return c.degree == 1 && std::all_of(c.counts.begin(), c.counts.end(),
                                                [](auto const& m) { return m[0] == 1; });
        };
        bool const tx = trivial(x), ty = trivial(y);
        if (tx != ty)
            return tx;
        if (x.degree != y.degree)
            return x.degree < y.degree;
        return x.counts < y.counts;
    });

    std::int64_t degree_squares = 0;
    for (auto const& c : chars_)
        degree_squares += c.degree * c.degree;
    if (degree_squares != static_cast<std::int64_t>(n))
        throw InternalFault("sum of squared degrees differs from the group order");
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            if (character_inner_product(i, j) != (i == j ? 1 : 0))
                throw InternalFault("lifted characters fail orthogonality");
        }
    }
}

//---------------------------------------------------------------------------//
/*!
 * Galois orbit of complex irreducible characters.
 *
 * `field_stabilizer` lists the units k mod e with chi^sigma_k = chi for the
 * first member; two orbits share a character field iff these lists agree.
 */
struct RationalIrrep
{
    std::vector<std::size_t> orbit;  //!< indices into the character table
    std::int64_t n = 0;
    std::size_t field_degree = 0;
    std::vector<std::int64_t> field_stabilizer;
    std::vector<std::int64_t> trace_values;  //!< per class
    bool trivial = false;
};

inline std::vector<RationalIrrep> galois_orbits(CharacterTable const& tbl)
{
    PermGroup const& G = tbl.group();
    std::size_t const e = tbl.exponent();
    auto const units = tbl.units();
    std::vector<bool> assigned(tbl.size(), false);
    std::vector<RationalIrrep> out;
    for (std::size_t i = 0; i < tbl.size(); ++i) {
        if (assigned[i])
            continue;
        RationalIrrep w;
        for (auto k : units) {
            std::size_t const j = tbl.galois_image(i, k);
            if (j == i)
                w.field_stabilizer.push_back(k);
            if (!assigned[j]) {
                assigned[j] = true;
                w.orbit.push_back(j);
            }
        }
        std::sort(w.orbit.begin(), w.orbit.end());
        w.n = tbl.character(i).degree;
        w.field_degree = w.orbit.size();
        if (units.size() != w.field_degree * w.field_stabilizer.size())
            throw InternalFault("orbit-stabilizer count mismatch for a Galois orbit");
        for (std::size_t c = 0; c < G.class_count(); ++c) {
            std::vector<std::int64_t> sum(e, 0);
            for (auto j : w.orbit) {
                auto const& m = tbl.character(j).counts[c];
                for (std::size_t t = 0; t < e; ++t)
                    sum[t] += m[t];
            }
            auto const check = as_rational_integer(Cyclotomic::from_exponent_counts(e, sum));
            if (!check)
                throw InternalFault("orbit trace value is not a rational integer");
            w.trace_values.push_back(check.value.get_si());
        }
        w.trivial = (i == 0);
        out.push_back(std::move(w));
    }
    return out;
}

//! Rational value (1/|G|) sum_c |c| a(c) conj(b(c)); throws if irrational.
inline BigRational inner_product(CharacterTable const& tbl, std::vector<Cyclotomic> const& a,
                                 std::vector<Cyclotomic> const& b)
{
    PermGroup const& G = tbl.group();
    if (a.size() != G.class_count() || b.size() != G.class_count())
        throw InvalidArgument("class function length differs from the class count");
    Cyclotomic sum(tbl.exponent());
    for (std::size_t c = 0; c < G.class_count(); ++c) {
        Cyclotomic term = a[c].embed(tbl.exponent()) * b[c].embed(tbl.exponent()).conj();
        term *= BigRational(static_cast<long>(G.class_size(c)));
        sum += term;
    }
    auto r = sum.as_rational();
    if (!r)
        throw InvalidArgument("inner product of these class functions is irrational");
    return *r / BigRational(static_cast<long>(G.order()));
}

//! Integer class function promoted to cyclotomic values.
inline std::vector<Cyclotomic> as_class_function(CharacterTable const& tbl, std::span<std::int64_t const> values)
{
    std::vector<Cyclotomic> out;
    for (auto v : values)
        out.push_back(Cyclotomic::from_integer(tbl.exponent(), v));
    return out;
}

//! dim V^H = (1/|H|) sum_{h in H} chi(h), certified integral.
inline std::int64_t fixed_space_dim(CharacterTable const& tbl, std::size_t chi, Subgroup const& h)
{
    std::size_t const e = tbl.exponent();
    auto const dist = tbl.group().class_distribution(h.elements());
    std::vector<std::int64_t> sum(e, 0);
    for (std::size_t c = 0; c < dist.size(); ++c) {
        if (dist[c] == 0)
            continue;
        auto const& m = tbl.character(chi).counts[c];
        for (std::size_t t = 0; t < e; ++t)
            sum[t] += dist[c] * m[t];
    }
    auto const total = Cyclotomic::from_exponent_counts(e, sum).as_rational();
    if (!total)
        throw InternalFault("character sum over a subgroup is irrational");
    BigRational const dim = *total / BigRational(static_cast<long>(h.order()));
    if (!is_integer(dim) || dim < 0)
        throw InternalFault("fixed-space dimension is not a nonnegative integer");
    return to_int64(dim);
}

inline std::int64_t fixed_space_dim(CharacterTable const& tbl, RationalIrrep const& w, Subgroup const& h)
{
    return fixed_space_dim(tbl, w.orbit.front(), h);
}

//! Number of right cosets Hg fixed by each class representative.
inline std::vector<std::int64_t> permutation_character(Subgroup const& h)
{
    PermGroup const& G = h.group();
    auto const dist = G.class_distribution(h.elements());
    std::vector<std::int64_t> out(G.class_count());
    for (std::size_t c = 0; c < out.size(); ++c) {
        // |C_G(x)| |x^G cap H| / |H|
        std::size_t const centralizer = G.order() / G.class_size(c);
        std::size_t const num = centralizer * static_cast<std::size_t>(dist[c]);
        if (num % h.order() != 0)
            throw InternalFault("permutation character value is not integral");
        out[c] = static_cast<std::int64_t>(num / h.order());
    }
    return out;
}

}  // namespace prymtyurin
