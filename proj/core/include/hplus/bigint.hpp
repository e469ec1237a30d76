#pragma once

#include <gmpxx.h>

#include <string>

namespace hplus {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }
inline std::string to_string(const Rational& v) { return v.get_str(10); }

}  // namespace hplus
