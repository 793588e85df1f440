#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace prymtyurin
{

namespace detail
{

inline std::int64_t positive_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Exact quotient of `num` by the monic polynomial `den` (coefficients low to high).
inline std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                              std::vector<std::int64_t> const& den)
{
    std::size_t const dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t pos = num.size(); pos-- > dn;) {
        std::int64_t const c = num[pos];
        if (c == 0)
            continue;
        quot[pos - dn] = c;
        for (std::size_t t = 0; t <= dn; ++t)
            num[pos - dn + t] -= c * den[t];
    }
    for (std::size_t t = 0; t < dn; ++t) {
        if (num[t] != 0)
            throw InternalFault("cyclotomic polynomial division left a remainder");
    }
    return quot;
}

}  // namespace detail

//---------------------------------------------------------------------------//
/*!
 * The n-th cyclotomic polynomial, low-order coefficient first.
 *
 * Built as (x^n - 1) divided by every Phi_d with d a proper divisor of n.
 * Results are memoized; the cache is shared between threads.
 */
inline std::shared_ptr<std::vector<std::int64_t> const> cyclotomic_polynomial(std::size_t n)
{
    if (n == 0)
        throw InvalidArgument("cyclotomic polynomial of order 0");

    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<std::vector<std::int64_t> const>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }

    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0)
            poly = detail::divide_monic(std::move(poly), *cyclotomic_polynomial(d));
    }

    auto result = std::make_shared<std::vector<std::int64_t> const>(std::move(poly));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(result)).first->second;
}

inline std::size_t euler_phi(std::size_t n) { return cyclotomic_polynomial(n)->size() - 1; }

//---------------------------------------------------------------------------//
/*!
 * Exact element of Q(zeta_e), stored as sum_k c_k zeta_e^k over k < e.
 *
 * Every value is kept reduced modulo Phi_e, so coefficients at positions
 * >= phi(e) are zero and equality is coefficient-wise. Values of different
 * orders never mix implicitly; use embed() to move to a common order.
 */
class Cyclotomic
{
  public:
    Cyclotomic() : Cyclotomic(1) {}

    explicit Cyclotomic(std::size_t order) : order_(order), coeffs_(order)
    {
        if (order == 0)
            throw InvalidArgument("cyclotomic order must be positive");
    }

    static Cyclotomic from_rational(std::size_t order, BigRational const& value)
    {
        Cyclotomic x(order);
        x.coeffs_[0] = value;
        return x;
    }

    static Cyclotomic from_integer(std::size_t order, std::int64_t value)
    {
        return from_rational(order, make_rational(value));
    }

    //! zeta_order^power, for any integer power.
    static Cyclotomic root_of_unity(std::size_t order, std::int64_t power)
    {
        Cyclotomic x(order);
        x.coeffs_[detail::positive_mod(power, static_cast<std::int64_t>(order))] = 1;
        x.reduce();
        return x;
    }

    //! sum_k coeffs[k] zeta^k; `coeffs` may be any length, indices wrap mod order.
    static Cyclotomic from_coefficients(std::size_t order, std::vector<BigRational> const& coeffs)
    {
        Cyclotomic x(order);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            x.coeffs_[k % order] += coeffs[k];
        x.reduce();
        return x;
    }

    //! sum_k counts[k] zeta^k with integer multiplicities.
    static Cyclotomic from_exponent_counts(std::size_t order, std::vector<std::int64_t> const& counts)
    {
        Cyclotomic x(order);
        for (std::size_t k = 0; k < counts.size(); ++k) {
            if (counts[k] != 0)
                x.coeffs_[k % order] += make_rational(counts[k]);
        }
        x.reduce();
        return x;
    }

    std::size_t order() const noexcept { return order_; }
    std::vector<BigRational> const& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        for (auto const& c : coeffs_) {
            if (c != 0)
                return false;
        }
        return true;
    }

    std::optional<BigRational> as_rational() const
    {
        for (std::size_t k = 1; k < order_; ++k) {
            if (coeffs_[k] != 0)
                return std::nullopt;
        }
        return coeffs_[0];
    }

    //! Image under the field automorphism zeta -> zeta^k.
    Cyclotomic galois(std::int64_t k) const
    {
        auto const e = static_cast<std::int64_t>(order_);
        std::int64_t const kk = detail::positive_mod(k, e);
        if (std::gcd(kk, e) != 1)
            throw InvalidArgument("galois exponent " + std::to_string(k) + " is not a unit mod " +
                                  std::to_string(order_));
        Cyclotomic x(order_);
        for (std::size_t i = 0; i < order_; ++i) {
            if (coeffs_[i] != 0)
                x.coeffs_[static_cast<std::size_t>((static_cast<std::int64_t>(i) * kk) % e)] = coeffs_[i];
        }
        x.reduce();
        return x;
    }

    //! Complex conjugate.
    Cyclotomic conj() const { return galois(-1); }

    //! Same value viewed inside Q(zeta_{new_order}); new_order must be a multiple.
    Cyclotomic embed(std::size_t new_order) const
    {
        if (new_order % order_ != 0)
            throw InvalidArgument("cannot embed order " + std::to_string(order_) + " into " +
                                  std::to_string(new_order));
        std::size_t const step = new_order / order_;
        Cyclotomic x(new_order);
        for (std::size_t i = 0; i < order_; ++i)
            x.coeffs_[i * step] = coeffs_[i];
        x.reduce();
        return x;
    }

    Cyclotomic& operator+=(Cyclotomic const& o)
    {
        check_same_order(o);
        for (std::size_t i = 0; i < order_; ++i) {
            if (o.coeffs_[i] != 0)
                coeffs_[i] += o.coeffs_[i];
        }
        return *this;
    }

    Cyclotomic& operator-=(Cyclotomic const& o)
    {
        check_same_order(o);
        for (std::size_t i = 0; i < order_; ++i) {
            if (o.coeffs_[i] != 0)
                coeffs_[i] -= o.coeffs_[i];
        }
        return *this;
    }

    Cyclotomic& operator*=(BigRational const& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, Cyclotomic const& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, Cyclotomic const& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, BigRational const& s) { return a *= s; }
    friend Cyclotomic operator*(BigRational const& s, Cyclotomic a) { return a *= s; }

    friend Cyclotomic operator-(Cyclotomic a)
    {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    friend Cyclotomic operator*(Cyclotomic const& a, Cyclotomic const& b)
    {
        a.check_same_order(b);
        std::size_t const e = a.order_;
        std::vector<std::size_t> nz_a, nz_b;
        for (std::size_t i = 0; i < e; ++i) {
            if (a.coeffs_[i] != 0)
                nz_a.push_back(i);
            if (b.coeffs_[i] != 0)
                nz_b.push_back(i);
        }
        Cyclotomic x(e);
        BigRational tmp;
        for (auto i : nz_a) {
            for (auto j : nz_b) {
                tmp = a.coeffs_[i] * b.coeffs_[j];
                x.coeffs_[(i + j) % e] += tmp;
            }
        }
        x.reduce();
        return x;
    }

    Cyclotomic& operator*=(Cyclotomic const& o) { return *this = *this * o; }

    friend bool operator==(Cyclotomic const& a, Cyclotomic const& b)
    {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(Cyclotomic const& a, Cyclotomic const& b) { return !(a == b); }

    //! Polynomial in zeta, e.g. "-1 - z5^2 - z5^3" or "1/2*z8".
    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < order_; ++k) {
            BigRational const& c = coeffs_[k];
            if (c == 0)
                continue;
            BigRational mag = abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (k == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1)
                os << mag.get_str() << "*";
            os << "z" << order_;
            if (k != 1)
                os << "^" << k;
        }
        return first ? "0" : os.str();
    }

  private:
    void check_same_order(Cyclotomic const& o) const
    {
        if (o.order_ != order_)
            throw InvalidArgument("cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                                  std::to_string(o.order_));
    }

    // Remainder modulo Phi_e; skips zero high coefficients.
    void reduce()
    {
        auto const phi = cyclotomic_polynomial(order_);
        std::size_t const deg = phi->size() - 1;
        std::vector<std::pair<std::size_t, std::int64_t>> terms;
        for (std::size_t t = 0; t < deg; ++t) {
            if ((*phi)[t] != 0)
                terms.emplace_back(t, (*phi)[t]);
        }
        BigRational tmp;
        for (std::size_t pos = order_; pos-- > deg;) {
            if (coeffs_[pos] == 0)
                continue;
            BigRational const c = coeffs_[pos];
            coeffs_[pos] = 0;
            for (auto [t, v] : terms) {
                tmp = c * v;
                coeffs_[pos - deg + t] -= tmp;
            }
        }
    }

    std::size_t order_;
    std::vector<BigRational> coeffs_;
};

enum class Integrality
{
    integer,
    non_integral_rational,
    irrational,
};

struct RationalIntegerCheck
{
    Integrality kind = Integrality::irrational;
    BigInt value;  //!< meaningful only when kind == integer

    explicit operator bool() const noexcept { return kind == Integrality::integer; }
};

//! Classify x as a rational integer, a non-integral rational, or irrational.
inline RationalIntegerCheck as_rational_integer(Cyclotomic const& x)
{
    auto r = x.as_rational();
    if (!r)
        return {Integrality::irrational, 0};
    if (!is_integer(*r))
        return {Integrality::non_integral_rational, 0};
    return {Integrality::integer, r->get_num()};
}

}  // namespace prymtyurin
