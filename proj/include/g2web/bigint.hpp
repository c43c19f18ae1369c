#pragma once

#include <gmpxx.h>

#include <string>

namespace g2web {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

} // namespace g2web
