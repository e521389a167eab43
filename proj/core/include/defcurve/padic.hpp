#pragma once
// Exact p-adic digit expansions of rationals and the generalized Lucas
// criterion for binomial coefficients modulo p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace defcurve {

using Int = boost::multiprecision::cpp_int;

// Floor division rounding toward -infinity; requires b > 0.
Int floor_div(const Int& a, const Int& b);
long long floor_div(long long a, long long b);

// Ceiling division rounding toward +infinity; requires b > 0.
// Satisfies ceil_div(a, b) == -floor_div(-a, b).
Int ceil_div(const Int& a, const Int& b);
long long ceil_div(long long a, long long b);

// Returns true when n >= 2 has no nontrivial divisor (trial division).
bool is_prime(long long n);

// A rational number num/den regarded as a p-adic integer: requires a prime
// p >= 5 not dividing the denominator, stored in lowest terms.
class PAdicRational {
 public:
  PAdicRational(Int numerator, Int denominator, long long p);

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }
  long long prime() const { return p_; }

 private:
  Int num_;
  Int den_;
  long long p_;
};

// First k digits d_0..d_{k-1} of the p-adic expansion of a, each in [0, p-1],
// satisfying a == sum d_nu p^nu (mod p^k).  Requires k >= 1.
std::vector<long long> padic_digits(const PAdicRational& a, std::size_t k);

// Binomial coefficient C(a, i) mod p for a p-adic integer a and i >= 0,
// computed digit-by-digit: C(a, i) == prod_nu C(digit_nu(a), digit_nu(i))
// (mod p).  Zero exactly when some digit of i exceeds the matching digit
// of a.
long long binom_mod_p(const PAdicRational& a, const Int& i);

}  // namespace defcurve
