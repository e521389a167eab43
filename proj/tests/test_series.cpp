#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "defcurve/series.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

using defcurve::agree_to_precision;
using defcurve::apply_aut;
using defcurve::ArtinSchreierAut;
using defcurve::adjoint_on_derivation;
using defcurve::binomial_power;
using defcurve::DerivationElement;
using defcurve::FFElem;
using defcurve::FiniteField;
using defcurve::PAdicRational;
using defcurve::substitute_scaled;
using defcurve::tame_scale;
using defcurve::TruncatedLaurent;

namespace {

TruncatedLaurent t_power(const FiniteField& F, long long e, long long prec) {
  return TruncatedLaurent::monomial(F, F.one(), e, prec);
}

TruncatedLaurent one_series(const FiniteField& F, long long prec) {
  return TruncatedLaurent::monomial(F, F.one(), 0, prec);
}

}  // namespace

TEST_CASE("window arithmetic and normalization") {
  FiniteField F(5, 1);
  TruncatedLaurent f(F, -2, 4, {F.from_int(3), F.zero(), F.from_int(1), F.from_int(4)});
  CHECK(f.valuation() == -2);
  CHECK(f.precision() == 4);
  CHECK(f.coeff(-2) == F.from_int(3));
  CHECK(f.coeff(-1) == F.zero());
  CHECK(f.coeff(0) == F.one());
  CHECK(f.coeff(1) == F.from_int(4));
  CHECK(f.coeff(2) == F.zero());
  CHECK(f.coeff(-100) == F.zero());
  CHECK_THROWS_AS(f.coeff(4), std::out_of_range);

  // Leading zeros raise the valuation; an all-zero window is the zero series.
  TruncatedLaurent g(F, -2, 4, {F.zero(), F.zero(), F.from_int(2)});
  CHECK(g.valuation() == 0);
  CHECK(!g.is_zero());
  TruncatedLaurent z(F, -2, 4, {F.zero(), F.zero()});
  CHECK(z.is_zero());
  CHECK(z.valuation() == 4);

  CHECK_THROWS_AS(TruncatedLaurent(F, 0, 2, {F.one(), F.one(), F.one()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TruncatedLaurent::monomial(F, F.one(), 5, 5), std::invalid_argument);

  // add/sub/scale/shift
  TruncatedLaurent s = f.add(f.neg());
  CHECK(s.is_zero());
  CHECK(f.sub(f).is_zero());
  CHECK(f.scale(F.from_int(2)).coeff(-2) == F.from_int(6 % 5));
  CHECK(f.shift(3).valuation() == 1);
  CHECK(f.shift(3).precision() == 7);
  CHECK(f.shift(3).coeff(1) == F.from_int(3));

  // Product window: unknown tail of one factor meets valuation of the other.
  TruncatedLaurent a(F, 1, 5, {F.one()});            // t + O(t^5)
  TruncatedLaurent b(F, -3, 2, {F.from_int(2)});     // 2 t^-3 + O(t^2)
  TruncatedLaurent ab = a.mul(b);
  CHECK(ab.precision() == std::min(5 + (-3), 2 + 1));
  CHECK(ab.coeff(-2) == F.from_int(2));

  CHECK(f.truncate(1).precision() == 1);
  CHECK(f.truncate(1).coeff(0) == F.one());
  CHECK_THROWS_AS(f.truncate(10), std::invalid_argument);
  CHECK(f.to_string().find("O(t^4)") != std::string::npos);
}

TEST_CASE("inverse multiplies back to one") {
  FiniteField F(5, 1);
  TruncatedLaurent f(F, 2, 12, {F.one(), F.one()});  // t^2 (1 + t)
  TruncatedLaurent g = f.inverse();
  CHECK(g.valuation() == -2);
  TruncatedLaurent prod = f.mul(g);
  CHECK(agree_to_precision(prod, one_series(F, prod.precision()), prod.precision()));

  // Alternating geometric coefficients of 1/(1+t).
  CHECK(g.coeff(-2) == F.one());
  CHECK(g.coeff(-1) == F.from_int(-1));
  CHECK(g.coeff(0) == F.one());

  TruncatedLaurent m = TruncatedLaurent::monomial(F, F.from_int(3), -4, 6);
  TruncatedLaurent mi = m.inverse();
  CHECK(mi.valuation() == 4);
  CHECK(mi.coeff(4) == F.from_int(2));  // 3 * 2 = 6 = 1 mod 5

  CHECK_THROWS_AS(TruncatedLaurent::zero(F, 5).inverse(), std::invalid_argument);

  std::mt19937 rng(99173);
  std::uniform_int_distribution<int> dc(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FFElem> cs{F.from_int(1 + dc(rng) % 4)};
    for (int i = 0; i < 9; ++i) cs.push_back(F.from_int(dc(rng)));
    TruncatedLaurent h(F, -3 + trial % 7, 7 + trial % 7, cs);
    TruncatedLaurent p = h.mul(h.inverse());
    CHECK(agree_to_precision(p, one_series(F, p.precision()), p.precision()));
  }
}

TEST_CASE("derivative in characteristic p") {
  FiniteField F(5, 1);
  // d/dt (t^3 + 2t) = 3 t^2 + 2
  TruncatedLaurent f(F, 1, 6, {F.from_int(2), F.zero(), F.one()});
  TruncatedLaurent df = f.derivative();
  CHECK(df.coeff(0) == F.from_int(2));
  CHECK(df.coeff(2) == F.from_int(3));
  // t^5 differentiates to zero in characteristic 5.
  CHECK(t_power(F, 5, 9).derivative().is_zero());
  // t^-5 likewise.
  CHECK(t_power(F, -5, 3).derivative().is_zero());
}

TEST_CASE("binomial powers with integer and fractional exponents") {
  FiniteField F(5, 1);
  // (1 + t)^2 = 1 + 2t + t^2
  TruncatedLaurent u(F, 0, 8, {F.one(), F.one()});
  TruncatedLaurent sq = binomial_power(u, PAdicRational(2, 1, 5));
  CHECK(sq.coeff(0) == F.one());
  CHECK(sq.coeff(1) == F.from_int(2));
  CHECK(sq.coeff(2) == F.one());
  CHECK(sq.coeff(3) == F.zero());

  // Cube root: ((1 + t^3)^(1/3))^3 == 1 + t^3.
  TruncatedLaurent v(F, 0, 30, {F.one(), F.zero(), F.zero(), F.one()});
  TruncatedLaurent r = binomial_power(v, PAdicRational(1, 3, 5));
  TruncatedLaurent r3 = r.mul(r).mul(r);
  CHECK(agree_to_precision(r3, v, 30));

  // (1 + t^2)^(3/2): first binomial coefficient C(3/2, 1) = 3/2 = 3*3 = 4 mod 5.
  TruncatedLaurent w(F, 0, 24, {F.one(), F.zero(), F.one()});
  TruncatedLaurent h = binomial_power(w, PAdicRational(3, 2, 5));
  CHECK(h.coeff(0) == F.one());
  CHECK(h.coeff(2) == F.from_int(4));
  // Its square is (1 + t^2)^3.
  TruncatedLaurent h2 = h.mul(h);
  TruncatedLaurent w3 = w.mul(w).mul(w);
  CHECK(agree_to_precision(h2, w3, 24));

  // Negative exponent matches the inverse.
  TruncatedLaurent inv = binomial_power(u, PAdicRational(-1, 1, 5));
  CHECK(agree_to_precision(inv, u.inverse(), 8));

  // Exponent additivity on a random unit series.
  std::mt19937 rng(5417);
  std::uniform_int_distribution<int> dc(0, 4);
  std::vector<FFElem> cs{F.one()};
  for (int i = 0; i < 11; ++i) cs.push_back(F.from_int(dc(rng)));
  TruncatedLaurent g(F, 0, 12, cs);
  TruncatedLaurent ga = binomial_power(g, PAdicRational(1, 2, 5));
  TruncatedLaurent gb = binomial_power(g, PAdicRational(-3, 2, 5));
  TruncatedLaurent gsum = binomial_power(g, PAdicRational(-1, 1, 5));
  CHECK(agree_to_precision(ga.mul(gb), gsum, 12));

  CHECK_THROWS_AS(binomial_power(t_power(F, 1, 5), PAdicRational(1, 2, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(binomial_power(u, PAdicRational(1, 2, 7)), std::invalid_argument);
}

TEST_CASE("substitution t -> t W(t) is a ring homomorphism preserving valuation") {
  FiniteField F(5, 2);
  std::mt19937 rng(80831);
  std::uniform_int_distribution<int> dc(0, 4);
  auto random_series = [&](long long val, long long prec) {
    std::vector<FFElem> cs{F.from_int(1 + dc(rng) % 4)};
    for (long long i = val + 1; i < prec; ++i) cs.push_back(F.from_int(dc(rng)));
    return TruncatedLaurent(F, val, prec, cs);
  };
  for (int trial = 0; trial < 25; ++trial) {
    TruncatedLaurent W = random_series(0, 20);
    TruncatedLaurent f = random_series(-4 + trial % 9, 14);
    TruncatedLaurent g = random_series(-2 + trial % 5, 14);
    TruncatedLaurent sf = substitute_scaled(f, W);
    TruncatedLaurent sg = substitute_scaled(g, W);
    CHECK(sf.valuation() == f.valuation());
    TruncatedLaurent lhs = substitute_scaled(f.mul(g), W);
    TruncatedLaurent rhs = sf.mul(sg);
    long long upto = std::min(lhs.precision(), rhs.precision());
    CHECK(agree_to_precision(lhs, rhs, upto));
    TruncatedLaurent lhs2 = substitute_scaled(f.add(g), W);
    TruncatedLaurent rhs2 = sf.add(sg);
    long long upto2 = std::min(lhs2.precision(), rhs2.precision());
    CHECK(agree_to_precision(lhs2, rhs2, upto2));
  }

  CHECK_THROWS_AS(substitute_scaled(t_power(F, 1, 5), t_power(F, 1, 5)),
                  std::invalid_argument);
}

TEST_CASE("automorphism sigma_v: fixed points, expansion, group law, order p") {
  FiniteField F(5, 1);
  const long long n = 2;
  const long long prec = 60;

  // sigma_0 is the identity.
  ArtinSchreierAut id(F, n, F.zero());
  TruncatedLaurent f(F, -3, 20, {F.from_int(2), F.one(), F.zero(), F.from_int(4)});
  CHECK(agree_to_precision(apply_aut(id, f), f, 20));

  // sigma_v(t^n) = t^n / (1 + v t^n) = t^n - v t^2n + v^2 t^3n - ...
  FFElem vv = F.from_int(3);
  ArtinSchreierAut sv(F, n, vv);
  TruncatedLaurent tn = apply_aut(sv, t_power(F, n, prec));
  FFElem expect = F.one();
  for (long long k = 1; n * k < prec; ++k) {
    CHECK(tn.coeff(n * k) == expect);
    expect = F.mul(expect, F.neg(vv));
  }

  // Group law sigma_v sigma_w = sigma_{v+w} on the uniformizer.
  FFElem ww = F.from_int(4);
  ArtinSchreierAut sw(F, n, ww);
  ArtinSchreierAut svw(F, n, F.add(vv, ww));
  TruncatedLaurent t0 = t_power(F, 1, prec);
  TruncatedLaurent composed = apply_aut(sw, apply_aut(sv, t0));
  TruncatedLaurent direct = apply_aut(svw, t0);
  CHECK(agree_to_precision(composed, direct, prec - 1));

  // Order p: five applications return the uniformizer.
  TruncatedLaurent iter = t0;
  for (int k = 0; k < 5; ++k) iter = apply_aut(sv, iter);
  CHECK(agree_to_precision(iter, t0, prec - 1));

  CHECK_THROWS_AS(ArtinSchreierAut(F, 0, vv), std::invalid_argument);
  CHECK_THROWS_AS(ArtinSchreierAut(F, 5, vv), std::invalid_argument);
}

TEST_CASE("invariant function of the order-p subgroup") {
  // x = t^(np) (1 - v^(p-1) t^(n(p-1)))^(-1) is fixed by sigma_v: in the
  // coordinate u = t^-n the map is u -> u + v, and u^p - v^(p-1) u = 1/x.
  FiniteField F(5, 1);
  const long long n = 2, p = 5, prec = 70;
  for (int vi = 1; vi < 5; ++vi) {
    FFElem v = F.from_int(vi);
    ArtinSchreierAut sv(F, n, v);
    FFElem vp1 = F.pow(v, p - 1);
    std::vector<FFElem> cs{F.one()};
    cs.resize(static_cast<std::size_t>(n * (p - 1)), F.zero());
    cs.push_back(F.neg(vp1));
    TruncatedLaurent body(F, 0, prec, cs);  // 1 - v^(p-1) t^(n(p-1))
    TruncatedLaurent x = body.inverse().shift(n * p);
    TruncatedLaurent xs = apply_aut(sv, x);
    CHECK(agree_to_precision(xs, x, std::min(xs.precision(), x.precision())));
  }
}

TEST_CASE("adjoint action on derivations: fixed vector and order p") {
  FiniteField F(5, 1);
  const long long n = 2;
  FFElem v = F.from_int(2);
  ArtinSchreierAut sv(F, n, v);

  // t^(n+1) d/dt is fixed: the jacobian factor cancels the substitution.
  DerivationElement D{t_power(F, n + 1, 80)};
  DerivationElement DS = adjoint_on_derivation(sv, D);
  CHECK(agree_to_precision(DS.series, D.series,
                           std::min(DS.series.precision(), D.series.precision())));

  // Order p on a pole: five applications act as the identity.
  DerivationElement E{t_power(F, -3, 80)};
  DerivationElement it = E;
  for (int k = 0; k < 5; ++k) it = adjoint_on_derivation(sv, it);
  long long upto = std::min(it.series.precision(), E.series.precision());
  CHECK(agree_to_precision(it.series, E.series, upto));
  CHECK(it.series.valuation() == E.series.valuation());
}

TEST_CASE("tame scaling of derivations by zeta^(r-1)") {
  FiniteField F(13, 1);
  DerivationElement D{TruncatedLaurent(
      F, 1, 4, {F.one(), F.from_int(5), F.from_int(7)})};
  // zeta = 1 acts trivially.
  DerivationElement D1 = tame_scale(F.one(), D);
  CHECK(agree_to_precision(D1.series, D.series, 4));
  // t d/dt is fixed by every zeta.
  FFElem zeta = F.from_int(4);  // order 6 in F_13
  DerivationElement L{t_power(F, 1, 5)};
  CHECK(agree_to_precision(tame_scale(zeta, L).series, L.series, 5));
  // t^2 d/dt picks up one factor of zeta, t^3 d/dt two.
  DerivationElement Dz = tame_scale(zeta, D);
  CHECK(Dz.series.coeff(1) == D.series.coeff(1));
  CHECK(Dz.series.coeff(2) == F.mul(D.series.coeff(2), zeta));
  CHECK(Dz.series.coeff(3) == F.mul(D.series.coeff(3), F.mul(zeta, zeta)));
  // Negative exponents use inverse powers: t^-1 d/dt scales by zeta^-2.
  DerivationElement P{t_power(F, -1, 2)};
  CHECK(tame_scale(zeta, P).series.coeff(-1) ==
        F.pow(zeta, -2));
  CHECK_THROWS_AS(tame_scale(F.zero(), D), std::invalid_argument);
}
