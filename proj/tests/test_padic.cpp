#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defcurve/padic.hpp"

#include <random>
#include <stdexcept>

using defcurve::binom_mod_p;
using defcurve::ceil_div;
using defcurve::floor_div;
using defcurve::Int;
using defcurve::PAdicRational;
using defcurve::padic_digits;

TEST_CASE("floor_div and ceil_div sign conventions") {
  CHECK(floor_div(-20LL, 13LL) == -2);
  CHECK(ceil_div(-20LL, 13LL) == -1);
  CHECK(floor_div(220LL, 13LL) == 16);
  CHECK(ceil_div(0LL, 7LL) == 0);
  CHECK(floor_div(Int(-20), Int(13)) == Int(-2));
  CHECK(ceil_div(Int(220), Int(13)) == Int(17));
  CHECK_THROWS_AS(floor_div(1LL, 0LL), std::invalid_argument);
  CHECK_THROWS_AS(floor_div(Int(1), Int(-3)), std::invalid_argument);

  std::mt19937 rng(314159);
  std::uniform_int_distribution<long long> da(-100000, 100000);
  std::uniform_int_distribution<long long> db(1, 500);
  for (int trial = 0; trial < 2000; ++trial) {
    long long a = da(rng), b = db(rng);
    long long f = floor_div(a, b), c = ceil_div(a, b);
    CHECK(f * b <= a);
    CHECK((f + 1) * b > a);
    CHECK(c == -floor_div(-a, b));
    CHECK(c * b >= a);
  }
}

TEST_CASE("nested floor identity floor(floor(a/p^l)/p) == floor(a/p^(l+1))") {
  std::mt19937 rng(271828);
  std::uniform_int_distribution<long long> da(-2000000, 2000000);
  std::uniform_int_distribution<int> dl(0, 4);
  const long long primes[] = {5, 7, 11, 13};
  std::uniform_int_distribution<int> dp(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    long long a = da(rng);
    long long p = primes[dp(rng)];
    int l = dl(rng);
    long long pl = 1;
    for (int i = 0; i < l; ++i) pl *= p;
    CHECK(floor_div(floor_div(a, pl), p) == floor_div(a, pl * p));
  }
}

TEST_CASE("PAdicRational preconditions") {
  CHECK_THROWS_AS(PAdicRational(1, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(PAdicRational(1, 5, 5), std::invalid_argument);   // p | den
  CHECK_THROWS_AS(PAdicRational(1, 10, 5), std::invalid_argument);  // p | den
  CHECK_THROWS_AS(PAdicRational(1, 2, 4), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(PAdicRational(1, 2, 3), std::invalid_argument);   // p < 5
  // Reduction makes 5/10 = 1/2 admissible at p = 5.
  CHECK_NOTHROW(PAdicRational(5, 10, 5));
  PAdicRational half(-1, -2, 5);  // sign normalization
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);
}

TEST_CASE("padic_digits worked expansions") {
  // 1/6 in Z_5: 1 + 4*5 + 0*25 + 4*125 + ... (period 4,0 after the lead).
  CHECK(padic_digits(PAdicRational(1, 6, 5), 6) ==
        std::vector<long long>{1, 4, 0, 4, 0, 4});
  CHECK(padic_digits(PAdicRational(0, 1, 7), 4) ==
        std::vector<long long>{0, 0, 0, 0});
  CHECK(padic_digits(PAdicRational(7, 1, 5), 3) ==
        std::vector<long long>{2, 1, 0});
  CHECK_THROWS_AS(padic_digits(PAdicRational(1, 6, 5), 0), std::invalid_argument);
}

TEST_CASE("padic_digits reconstructs the value mod p^k") {
  std::mt19937 rng(99991);
  std::uniform_int_distribution<long long> dnum(-500, 500);
  std::uniform_int_distribution<long long> dden(1, 60);
  const long long primes[] = {5, 7, 13};
  std::uniform_int_distribution<int> dp(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    long long p = primes[dp(rng)];
    long long den = dden(rng);
    if (den % p == 0) continue;
    long long num = dnum(rng);
    PAdicRational a(num, den, p);
    auto digits = padic_digits(a, 5);
    // den * (sum digits) == num (mod p^5)
    Int pk = 1, acc = 0, pw = 1;
    for (long long d : digits) {
      acc += pw * d;
      pw *= p;
      pk *= p;
    }
    Int lhs = (acc * a.denominator() - a.numerator()) % pk;
    CHECK(lhs == 0);
  }
}

TEST_CASE("padic_digits truncation consistency") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long long> dnum(-300, 300);
  std::uniform_int_distribution<long long> dden(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    long long den = dden(rng);
    if (den % 5 == 0) continue;
    PAdicRational a(dnum(rng), den, 5);
    auto d4 = padic_digits(a, 4);
    auto d9 = padic_digits(a, 9);
    for (int i = 0; i < 4; ++i) CHECK(d4[i] == d9[i]);
  }
}

TEST_CASE("binom_mod_p worked values") {
  // C(a, 0) = 1 for arbitrary a.
  CHECK(binom_mod_p(PAdicRational(-7, 3, 5), 0) == 1);
  // digit_0 of 2/3 mod 5 is 4, so C(2/3, 4) is nonzero mod 5.
  CHECK(binom_mod_p(PAdicRational(2, 3, 5), 4) != 0);
  // digit_0 of 1/3 mod 5 is 2 < 4, so C(1/3, 4) == 0 mod 5.
  CHECK(binom_mod_p(PAdicRational(1, 3, 5), 4) == 0);
  CHECK_THROWS_AS(binom_mod_p(PAdicRational(1, 3, 5), -1), std::invalid_argument);
}

namespace {
Int exact_binomial(long long n, long long k) {
  Int result = 1;
  for (long long j = 1; j <= k; ++j) {
    result *= (n - k + j);
    result /= j;  // exact at every step
  }
  return result;
}
}  // namespace

TEST_CASE("binom_mod_p matches exact integer binomials") {
  const long long primes[] = {5, 7, 11, 13};
  for (long long p : primes) {
    for (long long n = 0; n <= 40; ++n) {
      for (long long k = 0; k <= n; ++k) {
        Int expected = exact_binomial(n, k) % p;
        CHECK(binom_mod_p(PAdicRational(n, 1, p), k) ==
              expected.convert_to<long long>());
      }
    }
  }
}

TEST_CASE("binom_mod_p vanishing iff some digit of i exceeds digit of a") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long long> dnum(-400, 400);
  std::uniform_int_distribution<long long> dden(1, 30);
  std::uniform_int_distribution<long long> di(0, 600);  // i < 5^4
  for (int trial = 0; trial < 500; ++trial) {
    long long den = dden(rng);
    if (den % 5 == 0) continue;
    PAdicRational a(dnum(rng), den, 5);
    long long i = di(rng);
    auto a_digits = padic_digits(a, 4);
    bool exceeds = false;
    long long r = i;
    for (int nu = 0; nu < 4; ++nu) {
      if (r % 5 > a_digits[nu]) exceeds = true;
      r /= 5;
    }
    CHECK((binom_mod_p(a, i) == 0) == exceeds);
  }
}
