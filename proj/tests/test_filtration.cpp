#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defcurve/filtration.hpp"

#include <random>
#include <stdexcept>

using defcurve::congruence_warning;
using defcurve::filtration_from_json;
using defcurve::filtration_to_json;
using defcurve::herbrand_phi;
using defcurve::herbrand_psi;
using defcurve::invariant_ideal_exponent;
using defcurve::mu_sequence;
using defcurve::MuSequence;
using defcurve::RamificationFiltration;
using defcurve::RamificationJump;
using defcurve::Rational;

TEST_CASE("filtration validation") {
  CHECK_NOTHROW(RamificationFiltration(5, 4, {{1, 25}, {6, 5}}));
  CHECK_NOTHROW(RamificationFiltration(7, 1, {}));
  CHECK_THROWS_AS(RamificationFiltration(4, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(RamificationFiltration(3, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS(RamificationFiltration(5, 10, {}), std::invalid_argument);
  CHECK_THROWS_AS(RamificationFiltration(5, 0, {}), std::invalid_argument);
  // Positions must strictly increase, orders strictly divide downward.
  CHECK_THROWS_AS(RamificationFiltration(5, 1, {{6, 25}, {6, 5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RamificationFiltration(5, 1, {{1, 5}, {6, 25}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RamificationFiltration(5, 1, {{1, 25}, {6, 25}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RamificationFiltration(5, 1, {{1, 10}}), std::invalid_argument);
  CHECK_THROWS_AS(RamificationFiltration(5, 1, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(RamificationFiltration(5, 1, {{0, 5}}), std::invalid_argument);

  RamificationFiltration f(5, 4, {{1, 25}, {6, 5}});
  CHECK(f.wild_order() == 25);
  CHECK(RamificationFiltration(5, 4, {}).wild_order() == 1);
}

TEST_CASE("jump congruence warning") {
  CHECK(!congruence_warning(RamificationFiltration(5, 1, {{1, 25}, {6, 5}})));
  CHECK(!congruence_warning(RamificationFiltration(5, 1, {{3, 5}})));
  CHECK(!congruence_warning(RamificationFiltration(5, 1, {})));
  auto w = congruence_warning(RamificationFiltration(5, 1, {{1, 25}, {3, 5}}));
  REQUIRE(w.has_value());
  CHECK(w->find("not congruent") != std::string::npos);
  CHECK(w->find("1") != std::string::npos);
  CHECK(w->find("3") != std::string::npos);
}

TEST_CASE("filtration JSON round trip") {
  RamificationFiltration f(5, 4, {{1, 25}, {6, 5}});
  nlohmann::json j = filtration_to_json(f);
  RamificationFiltration g = filtration_from_json(j);
  CHECK(g.p() == 5);
  CHECK(g.tame_order() == 4);
  REQUIRE(g.jumps().size() == 2);
  CHECK(g.jumps()[0].t == 1);
  CHECK(g.jumps()[0].order == 25);
  CHECK(g.jumps()[1].t == 6);
  CHECK(g.jumps()[1].order == 5);
  // Serialization is canonical: parse-then-dump is the identity on dumps.
  std::string dumped = j.dump();
  CHECK(filtration_to_json(filtration_from_json(nlohmann::json::parse(dumped)))
            .dump() == dumped);
  CHECK_THROWS(filtration_from_json(nlohmann::json::parse(R"({"p": 5})")));
}

TEST_CASE("herbrand phi and psi on a single-jump filtration") {
  RamificationFiltration f(5, 1, {{2, 25}});
  // Below and at the jump both maps are the identity.
  CHECK(herbrand_phi(f, Rational(0)) == Rational(0));
  CHECK(herbrand_phi(f, Rational(3, 2)) == Rational(3, 2));
  CHECK(herbrand_phi(f, Rational(2)) == Rational(2));
  CHECK(herbrand_psi(f, Rational(2)) == Rational(2));
  // Above the jump: psi(3) = 2 + (3-2)*25 = 27, so phi(27) = 3.
  CHECK(herbrand_psi(f, Rational(3)) == Rational(27));
  CHECK(herbrand_phi(f, Rational(27)) == Rational(3));
  // The off-by-one variant n + (u-n-1)/H evaluates to 2 + 24/25 at u = 27 and
  // is discontinuous at the jump; the continuous normalization used here is
  // the one for which phi and psi are exactly mutually inverse.
  CHECK(Rational(2) + Rational(27 - 2 - 1, 25) != herbrand_phi(f, Rational(27)));

  CHECK_THROWS_AS(herbrand_phi(f, Rational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(herbrand_psi(f, Rational(-1, 7)), std::invalid_argument);
  RamificationFiltration two(5, 1, {{1, 25}, {6, 5}});
  CHECK_THROWS_AS(herbrand_phi(two, Rational(1)), std::invalid_argument);

  // Mutual inverse, monotone, and fixing [0, n] on random rationals.
  std::mt19937 rng(46327);
  std::uniform_int_distribution<long long> dnum(0, 4000);
  std::uniform_int_distribution<long long> dden(1, 40);
  Rational prev_u(-1), prev_phi(-1);
  for (int trial = 0; trial < 400; ++trial) {
    Rational u(dnum(rng), dden(rng));
    CHECK(herbrand_phi(f, herbrand_psi(f, u)) == u);
    CHECK(herbrand_psi(f, herbrand_phi(f, u)) == u);
    if (u <= Rational(2)) CHECK(herbrand_phi(f, u) == u);
    Rational fu = herbrand_phi(f, u);
    if (prev_u >= Rational(0)) {
      CHECK(((u > prev_u) == (fu > prev_phi) || u == prev_u));
    }
    prev_u = u;
    prev_phi = fu;
  }
}

TEST_CASE("mu recursion") {
  // Two-layer tower p = 5, jumps at 1 (order 25) and 6 (order 5):
  // deepest layer gives mu_1 = 7 - floor(7/5) = 6, then
  // mu_2 = 2 - floor((-6 + 2)/5) = 3.
  MuSequence fermat = mu_sequence(RamificationFiltration(5, 4, {{1, 25}, {6, 5}}));
  CHECK(fermat.values == std::vector<long long>{0, 6, 3});
  CHECK(fermat.quotient_orders == std::vector<long long>{5, 5});

  // Single jump at p+1 of order p: mu_1 = p+1.
  for (long long p : {5LL, 7LL, 11LL, 13LL}) {
    MuSequence m = mu_sequence(RamificationFiltration(p, 1, {{p + 1, p}}));
    CHECK(m.values == std::vector<long long>{0, p + 1});
    CHECK(m.quotient_orders == std::vector<long long>{p});
  }

  // Single jump at p^m + 1 of order p, p = 5, m = 2: mu_1 = p^m + 2 - p^(m-1).
  MuSequence lm = mu_sequence(RamificationFiltration(5, 1, {{26, 5}}));
  CHECK(lm.values == std::vector<long long>{0, 22});

  // Empty wild part.
  MuSequence trivial = mu_sequence(RamificationFiltration(5, 3, {}));
  CHECK(trivial.values == std::vector<long long>{0});
  CHECK(trivial.quotient_orders.empty());
}

TEST_CASE("invariant ideal exponent") {
  CHECK(invariant_ideal_exponent(5, 6, 1, 0) == 6);
  CHECK(invariant_ideal_exponent(5, 7, 2, 0) == 8);
  // s = 0 leaves the module untouched: exponent a.
  for (long long a = -6; a <= 6; ++a) CHECK(invariant_ideal_exponent(5, 3, 0, a) == a);
  // Single order-p layer matches the mu recursion's first value.
  std::mt19937 rng(7177);
  std::uniform_int_distribution<long long> dn(1, 60);
  for (long long p : {5LL, 7LL}) {
    for (int trial = 0; trial < 40; ++trial) {
      long long n = dn(rng);
      if (n % p == 0) continue;
      MuSequence m = mu_sequence(RamificationFiltration(p, 1, {{n, p}}));
      CHECK(m.values[1] == invariant_ideal_exponent(p, n, 1, 0));
    }
  }
  CHECK_THROWS_AS(invariant_ideal_exponent(5, 10, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(invariant_ideal_exponent(5, 3, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(invariant_ideal_exponent(6, 5, 1, 0), std::invalid_argument);
}
