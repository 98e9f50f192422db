#include "parkfn/counting.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace parkfn {

namespace {

Rational make_rational(Count numerator, Count denominator) {
  return Rational(std::move(numerator)) / Rational(std::move(denominator));
}

int sign_pow(long long exp) { return exp % 2 == 0 ? 1 : -1; }

}  // namespace

Count integer_pow(const Count& base, long long exp) {
  if (exp < 0) throw std::domain_error("integer_pow: negative exponent");
  if (exp == 0) return 1;  // includes 0^0 = 1
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

Rational rational_pow(const Count& base, long long exp) {
  if (exp >= 0) return Rational(integer_pow(base, exp));
  if (base == 0) throw std::domain_error("rational_pow: 0 with negative exponent");
  return Rational(1) / Rational(integer_pow(base, -exp));
}

Count to_integer_checked(const Rational& value, const char* context) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::logic_error(std::string(context) + ": expected an integer, got " +
                           value.str());
  }
  Count result = boost::multiprecision::numerator(value);
  if (result < 0) {
    throw std::logic_error(std::string(context) + ": expected a non-negative value, got " +
                           result.str());
  }
  return result;
}

Count binomial(long long a, long long b) {
  if (a < 0) throw std::domain_error("binomial: negative upper argument");
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= (a - b + i);
    result /= i;  // exact at every step
  }
  return result;
}

Count factorial(long long a) {
  if (a < 0) throw std::domain_error("factorial: negative argument");
  Count result = 1;
  for (long long i = 2; i <= a; ++i) result *= i;
  return result;
}

Count multinomial(long long total, std::span<const long long> parts) {
  if (total < 0) throw std::domain_error("multinomial: negative total");
  long long sum = 0;
  for (long long part : parts) {
    if (part < 0) throw std::domain_error("multinomial: negative part");
    sum += part;
  }
  if (sum != total) throw std::domain_error("multinomial: parts must sum to the total");
  Count result = 1;
  long long remaining = total;
  for (long long part : parts) {
    result *= binomial(remaining, part);
    remaining -= part;
  }
  return result;
}

Count count_parking_functions(int n) {
  if (n < 0) throw std::domain_error("count_parking_functions: n must be >= 0");
  if (n == 0) return 1;
  return integer_pow(n + 1, n - 1);
}

Count count_prime_parking_functions(int n) {
  if (n < 1) throw std::domain_error("count_prime_parking_functions: n must be >= 1");
  if (n == 1) return 1;
  return integer_pow(n - 1, n - 1);
}

Count count_rk_parking_functions(int n, const RkParams& params) {
  return count_sorted_prefix_rk(n, params, 0);
}

Count count_fixed_classical(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error("count_fixed_classical: need 0 <= k <= n");
  }
  const Rational value = Rational(binomial(n + 1, k)) *
                         (Rational(integer_pow(n, n - k + 1)) + sign_pow(n + k)) /
                         Rational(integer_pow(n + 1, 2));
  return to_integer_checked(value, "count_fixed_classical");
}

namespace {

// Shared inclusion-exclusion sum for the cycle counts. The classical case
// runs on a circle of n+1 spots (slots = n+1, extra = +1, terms while
// (k+l)m <= n); the prime case on n-1 spots (slots = n-1, extra = -1,
// terms while (k+l)m <= n-1). The trailing power's exponent can reach -1,
// hence rationals.
Count cycle_count_sum(int n, int m, int k, int slots, int sum_bound, int extra,
                      const char* context) {
  Rational total = 0;
  const Count cycle_arrangements = factorial(m - 1);
  for (long long l = 0; (k + l) * m <= sum_bound; ++l) {
    std::vector<long long> parts(static_cast<std::size_t>(k + l), m);
    parts.push_back(n - (k + l) * m + extra);
    Rational term = Rational(integer_pow(cycle_arrangements, k + l)) /
                    Rational(factorial(k) * factorial(l));
    term *= Rational(multinomial(slots, parts));
    term *= rational_pow(slots, n - (k + l) * m - 1);
    total += (l % 2 == 0) ? term : -term;
  }
  return to_integer_checked(total, context);
}

}  // namespace

Count count_cycles_classical(int n, int m, int k) {
  if (n < 0 || m < 1 || k < 0 || static_cast<long long>(k) * m > n) {
    throw std::domain_error("count_cycles_classical: need m >= 1, k >= 0, km <= n");
  }
  return cycle_count_sum(n, m, k, n + 1, n, +1, "count_cycles_classical");
}

Rational expected_cycles_classical(int n, int m) {
  if (m < 1 || m > n) throw std::domain_error("expected_cycles_classical: need 1 <= m <= n");
  return make_rational(factorial(m - 1) * binomial(n + 1, m), integer_pow(n + 1, m));
}

Count count_sorted_prefix_classical(int n, int s) {
  if (n < 0 || s < 0 || s > n) {
    throw std::domain_error("count_sorted_prefix_classical: need 0 <= s <= n");
  }
  const Rational value = Rational(binomial(n + 1, s)) * rational_pow(n + 1, n - s - 1);
  return to_integer_checked(value, "count_sorted_prefix_classical");
}

Count count_fixed_prime(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw std::domain_error("count_fixed_prime: need n >= 1 and 0 <= k <= n-1");
  }
  // Integer base, non-negative exponent; the base may be -1 (n=1) or 0
  // (n=2) and the conventions x^0 = 1, 0^0 = 1 apply.
  const Count value = binomial(n - 1, k) * integer_pow(n - 2, n - k - 1);
  if (value < 0) throw std::logic_error("count_fixed_prime: negative count");
  return value;
}

Count count_cycles_prime(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 0 || static_cast<long long>(k) * m > n - 1) {
    throw std::domain_error("count_cycles_prime: need m >= 1, k >= 0, km <= n-1");
  }
  return cycle_count_sum(n, m, k, n - 1, n - 1, -1, "count_cycles_prime");
}

Rational expected_cycles_prime(int n, int m) {
  if (m < 1 || m > n - 1) {
    throw std::domain_error("expected_cycles_prime: need 1 <= m <= n-1");
  }
  return make_rational(factorial(m - 1) * binomial(n - 1, m), integer_pow(n - 1, m));
}

Count count_sorted_prefix_rk(int n, const RkParams& params, int s) {
  if (n < 0 || s < 0 || s > n) {
    throw std::domain_error("count_sorted_prefix_rk: need 0 <= s <= n");
  }
  const int modulus = params.modulus(n);
  const Rational value =
      Rational(params.offset) * Rational(binomial(modulus, s)) * rational_pow(modulus, n - s - 1);
  return to_integer_checked(value, "count_sorted_prefix_rk");
}

std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float approx = Float(boost::multiprecision::numerator(value)) /
                       Float(boost::multiprecision::denominator(value));
  return approx.str(significant_digits);
}

}  // namespace parkfn
