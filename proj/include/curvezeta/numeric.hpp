#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace curvezeta {

// Exact arithmetic everywhere: arbitrary-precision integers and canonical
// (reduced, positive-denominator) rationals from GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }
inline bool rat_is_int(const Rat& q) { return q.get_den() == 1; }

Rat rat_parse(const std::string& text);
std::string rat_str(const Rat& q);
std::string int_str(const Int& n);

// Checked narrowing; throws Error when out of range.
long to_long(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);
bool rat_is_square(const Rat& q, Rat* root = nullptr);

// Prime factorisation (trial division + Pollard-Brent rho); n >= 1.
std::vector<Int> prime_factors(Int n);
std::vector<Int> divisors(const Int& n);
std::vector<long> divisors_long(long n);
long euler_phi(long n);

// k-th prime, k >= 0: 2, 3, 5, ...
long nth_prime(int k);

} // namespace curvezeta
