#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace altperm {

// Exact arbitrary-precision integer; counts here outgrow 64 bits quickly
// (level counts and hook quotients are needed up to n = 200).
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace altperm
