#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace prymtyurin
{

using BigInt = mpz_class;
//! Always kept canonical: positive denominator, coprime numerator.
using BigRational = mpq_class;

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1)
{
    if (den == 0)
        throw InvalidArgument("rational with zero denominator");
    BigRational r{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
    r.canonicalize();
    return r;
}

inline BigRational make_rational(BigInt const& num, BigInt const& den = 1)
{
    if (den == 0)
        throw InvalidArgument("rational with zero denominator");
    BigRational r{num, den};
    r.canonicalize();
    return r;
}

inline bool is_integer(BigRational const& r) { return r.get_den() == 1; }

//! Narrow an integral rational to int64; throws if it is not one.
inline std::int64_t to_int64(BigRational const& r)
{
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw InternalFault("expected a machine-size integer, got " + r.get_str());
    return r.get_num().get_si();
}

inline std::string to_string(BigRational const& r) { return r.get_str(); }

}  // namespace prymtyurin
