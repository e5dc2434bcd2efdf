#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "covercycle/errors.hpp"

namespace covercycle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Exact conversion; the caller asserts integrality first.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) throw ConsistencyError("expected integral rational, got " + r.str());
    return numerator(r);
}

// C(n, k) for unbounded n and small k.
inline Int binomial(const Int& n, unsigned k) {
    Int result = 1;
    for (unsigned j = 0; j < k; ++j) {
        result *= n - j;
        result /= Int(j) + 1;  // exact: product of j+1 consecutive integers
    }
    return result;
}

inline Int factorial(unsigned n) {
    Int result = 1;
    for (unsigned j = 2; j <= n; ++j) result *= j;
    return result;
}

}  // namespace covercycle
