#pragma once

#include <utility>
#include <vector>

#include "curvezeta/numeric.hpp"

namespace curvezeta {

// Canonical short continued fraction a/b = q0 + 1/(q1 + ... + 1/qw) with
// q0 >= 1 (a > b), qj >= 1, and qw >= 2 when w >= 1.  Requires gcd(a,b) = 1
// and a > b >= 1; throws NonCoprime otherwise.
std::vector<long> continued_fraction(long a, long b);

// Even-length normal form: when w (the last index) is odd and qw >= 2,
// rewrite [..., qw] as [..., qw - 1, 1] so that w becomes even.  The value is
// unchanged.
std::vector<long> even_normalize(std::vector<long> cf);

// Value of a continued fraction as a reduced fraction (a, b).
std::pair<Int, Int> cf_value(const std::vector<long>& cf);

} // namespace curvezeta
