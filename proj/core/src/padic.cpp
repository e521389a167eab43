#include "defcurve/padic.hpp"

#include <boost/integer/mod_inverse.hpp>

#include <stdexcept>
#include <utility>

namespace defcurve {

Int floor_div(const Int& a, const Int& b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  Int q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) --q;
  return q;
}

long long floor_div(long long a, long long b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(Int(-a), b); }

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PAdicRational::PAdicRational(Int numerator, Int denominator, long long p)
    : num_(std::move(numerator)), den_(std::move(denominator)), p_(p) {
  if (den_ == 0) throw std::invalid_argument("PAdicRational: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  Int g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (p_ < 5 || !is_prime(p_))
    throw std::invalid_argument("PAdicRational: p must be a prime >= 5");
  if (den_ % p_ == 0)
    throw std::invalid_argument(
        "PAdicRational: p divides the denominator, not a p-adic integer");
}

std::vector<long long> padic_digits(const PAdicRational& a, std::size_t k) {
  if (k == 0) throw std::invalid_argument("padic_digits: k must be >= 1");
  const Int p(a.prime());
  // Exact digit extraction: with r/den the current tail, the next digit is
  // r * den^{-1} mod p, and the new tail is (r - d*den)/p (exactly divisible).
  Int den_inv = boost::integer::mod_inverse(Int(a.denominator() % p), p);
  std::vector<long long> digits;
  digits.reserve(k);
  Int r = a.numerator();
  for (std::size_t step = 0; step < k; ++step) {
    Int d = (r % p) * den_inv % p;
    if (d < 0) d += p;
    digits.push_back(d.convert_to<long long>());
    r = (r - d * a.denominator()) / p;
  }
  return digits;
}

namespace {

// C(n, k) mod p for digit-sized arguments 0 <= n, k <= p-1.
long long small_binom_mod_p(long long n, long long k, long long p) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative formula with modular inverses; all factors < p, and the
  // intermediate binomials C(n, j) for j <= k < p are units mod p.
  long long result = 1;
  for (long long j = 1; j <= k; ++j) {
    result = result % p * ((n - k + j) % p) % p;
    long long inv = boost::integer::mod_inverse(j, p);
    result = result * inv % p;
  }
  return result;
}

}  // namespace

long long binom_mod_p(const PAdicRational& a, const Int& i) {
  if (i < 0) throw std::invalid_argument("binom_mod_p: i must be >= 0");
  const long long p = a.prime();
  // Digits of i (finitely many since i is a nonnegative integer).
  std::vector<long long> i_digits;
  for (Int r = i; r > 0; r /= p) i_digits.push_back((r % p).convert_to<long long>());
  if (i_digits.empty()) return 1;  // C(a, 0) = 1
  std::vector<long long> a_digits = padic_digits(a, i_digits.size());
  long long result = 1;
  for (std::size_t nu = 0; nu < i_digits.size(); ++nu) {
    result = result * small_binom_mod_p(a_digits[nu], i_digits[nu], p) % p;
    if (result == 0) return 0;
  }
  return result;
}

}  // namespace defcurve
