#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace excludant {

using bigint = boost::multiprecision::mpz_int;

inline std::string to_decimal(const bigint& x) { return x.str(); }
inline bigint from_decimal(const std::string& s) { return bigint(s); }

}  // namespace excludant
