#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <span>
#include <string>

#include "parkfn/prefseq.hpp"

namespace parkfn {

// Counts overflow 64 bits near n = 16, so everything is exact big-integer
// or big-rational arithmetic. Formulas whose intermediate exponents can go
// to -1 are evaluated in rationals and integrality is checked at the end.
using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^exp with exp possibly negative (base must be nonzero then).
// 0^0 = 1 and x^0 = 1 for every integer x.
Rational rational_pow(const Count& base, long long exp);
Count integer_pow(const Count& base, long long exp);  // exp >= 0

// Throws std::logic_error when the value is not a non-negative integer;
// every closed form here is one, so a failure is a defect, not bad input.
Count to_integer_checked(const Rational& value, const char* context);

// binomial(a, b) is 0 for b < 0 or b > a; a < 0 is a domain error.
Count binomial(long long a, long long b);
Count factorial(long long a);
// total! / (parts[0]! * ... * parts[last]!); parts must be non-negative
// and sum to total.
Count multinomial(long long total, std::span<const long long> parts);
inline Count multinomial(long long total, std::initializer_list<long long> parts) {
  return multinomial(total, std::span<const long long>(parts.begin(), parts.size()));
}

// Totals. (n+1)^(n-1); (n-1)^(n-1) with n=1 giving 1; offset*(modulus)^(n-1).
Count count_parking_functions(int n);
Count count_prime_parking_functions(int n);
Count count_rk_parking_functions(int n, const RkParams& params);

// Number of parking functions of length n with exactly k fixed points:
//   binomial(n+1, k) * (n^(n-k+1) + (-1)^(n+k)) / (n+1)^2
Count count_fixed_classical(int n, int k);

// Number of parking functions of length n with exactly k m-cycles:
//   sum over l with (k+l)m <= n of
//     (-1)^l ((m-1)!)^(k+l) / (k! l!)
//     * multinomial(n+1; m,...,m (k+l times), n-(k+l)m+1)
//     * (n+1)^(n-(k+l)m-1)
Count count_cycles_classical(int n, int m, int k);

// Expected number of m-cycles under the uniform measure:
//   (m-1)! * binomial(n+1, m) / (n+1)^m
Rational expected_cycles_classical(int n, int m);

// Number of parking functions whose first s coordinates strictly increase:
//   binomial(n+1, s) * (n+1)^(n-s-1)
Count count_sorted_prefix_classical(int n, int s);

// Prime analogues on a circle of n-1 spots.
//   binomial(n-1, k) * (n-2)^(n-k-1)            (0 <= k <= n-1)
Count count_fixed_prime(int n, int k);
//   sum over l with (k+l)m <= n-1 of
//     (-1)^l ((m-1)!)^(k+l) / (k! l!)
//     * multinomial(n-1; m,...,m (k+l times), n-(k+l)m-1)
//     * (n-1)^(n-(k+l)m-1)
Count count_cycles_prime(int n, int m, int k);
//   (m-1)! * binomial(n-1, m) / (n-1)^m         (1 <= m <= n-1)
Rational expected_cycles_prime(int n, int m);

// offset * binomial(modulus, s) * modulus^(n-s-1), modulus = offset + n*step.
Count count_sorted_prefix_rk(int n, const RkParams& params, int s);

// "p/q" with the denominator always written out.
std::string to_fraction_string(const Rational& value);
// Decimal approximation with the given number of significant digits.
std::string to_decimal_string(const Rational& value, int significant_digits = 15);

}  // namespace parkfn
