#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace linset {

// All closed-form counts are exact big integers; desk-scale values happen to
// fit in 64 bits but the formulas are also checked at larger parameters.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace linset
