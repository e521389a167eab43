#include "defcurve/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace defcurve {

TruncatedLaurent::TruncatedLaurent(FiniteField field, long long valuation,
                                   long long precision, std::vector<FFElem> coeffs)
    : field_(std::move(field)), val_(valuation), prec_(precision),
      coeffs_(std::move(coeffs)) {
  if (static_cast<long long>(coeffs_.size()) > prec_ - val_)
    throw std::invalid_argument("TruncatedLaurent: more coefficients than window");
  coeffs_.resize(static_cast<std::size_t>(prec_ - val_), field_.zero());
  normalize();
}

void TruncatedLaurent::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && field_.is_zero(coeffs_[lead])) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    val_ += static_cast<long long>(lead);
  }
  while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  if (coeffs_.empty()) val_ = prec_;
  // Known coefficients between the last nonzero one and the precision are
  // implicit zeros; re-extend so coeff() stays O(1).
  if (!coeffs_.empty())
    coeffs_.resize(static_cast<std::size_t>(prec_ - val_), field_.zero());
}

TruncatedLaurent TruncatedLaurent::zero(const FiniteField& field, long long precision) {
  return TruncatedLaurent(field, precision, precision, {});
}

TruncatedLaurent TruncatedLaurent::monomial(const FiniteField& field, const FFElem& c,
                                            long long exponent, long long precision) {
  if (exponent >= precision)
    throw std::invalid_argument("monomial: exponent at or beyond precision");
  return TruncatedLaurent(field, exponent, precision, {c});
}

FFElem TruncatedLaurent::coeff(long long e) const {
  if (e >= prec_)
    throw std::out_of_range("TruncatedLaurent::coeff: exponent beyond precision");
  if (e < val_) return field_.zero();
  return coeffs_[static_cast<std::size_t>(e - val_)];
}

TruncatedLaurent TruncatedLaurent::add(const TruncatedLaurent& other) const {
  if (!field_.same_field(other.field_))
    throw std::invalid_argument("TruncatedLaurent::add: field mismatch");
  const long long prec = std::min(prec_, other.prec_);
  const long long val = std::min(val_, other.val_);
  if (val >= prec) return zero(field_, prec);
  std::vector<FFElem> c(static_cast<std::size_t>(prec - val), field_.zero());
  for (long long e = val; e < prec; ++e) {
    FFElem x = (e >= val_ && e < prec_) ? coeff(e) : field_.zero();
    FFElem y = (e >= other.val_ && e < other.prec_) ? other.coeff(e) : field_.zero();
    c[static_cast<std::size_t>(e - val)] = field_.add(x, y);
  }
  return TruncatedLaurent(field_, val, prec, std::move(c));
}

TruncatedLaurent TruncatedLaurent::neg() const {
  std::vector<FFElem> c;
  c.reserve(coeffs_.size());
  for (const FFElem& x : coeffs_) c.push_back(field_.neg(x));
  return TruncatedLaurent(field_, val_, prec_, std::move(c));
}

TruncatedLaurent TruncatedLaurent::sub(const TruncatedLaurent& other) const {
  return add(other.neg());
}

TruncatedLaurent TruncatedLaurent::mul(const TruncatedLaurent& other) const {
  if (!field_.same_field(other.field_))
    throw std::invalid_argument("TruncatedLaurent::mul: field mismatch");
  // Pessimistic precision: the unknown tail of one factor meets the lowest
  // known term of the other.
  const long long prec = std::min(prec_ + other.val_, other.prec_ + val_);
  if (is_zero() || other.is_zero()) return zero(field_, prec);
  const long long val = val_ + other.val_;
  if (val >= prec) return zero(field_, prec);
  std::vector<FFElem> c(static_cast<std::size_t>(prec - val), field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    const long long ei = val_ + static_cast<long long>(i);
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      const long long e = ei + other.val_ + static_cast<long long>(j);
      if (e >= prec) break;
      std::size_t idx = static_cast<std::size_t>(e - val);
      c[idx] = field_.add(c[idx], field_.mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  return TruncatedLaurent(field_, val, prec, std::move(c));
}

TruncatedLaurent TruncatedLaurent::scale(const FFElem& c) const {
  if (field_.is_zero(c)) return zero(field_, prec_);
  std::vector<FFElem> out;
  out.reserve(coeffs_.size());
  for (const FFElem& x : coeffs_) out.push_back(field_.mul(x, c));
  return TruncatedLaurent(field_, val_, prec_, std::move(out));
}

TruncatedLaurent TruncatedLaurent::shift(long long k) const {
  return TruncatedLaurent(field_, val_ + k, prec_ + k, coeffs_);
}

TruncatedLaurent TruncatedLaurent::truncate(long long new_precision) const {
  if (new_precision > prec_)
    throw std::invalid_argument("truncate: cannot raise precision");
  if (new_precision <= val_) return zero(field_, new_precision);
  std::vector<FFElem> c(coeffs_.begin(),
                        coeffs_.begin() + static_cast<long>(new_precision - val_));
  return TruncatedLaurent(field_, val_, new_precision, std::move(c));
}

TruncatedLaurent TruncatedLaurent::inverse() const {
  if (is_zero())
    throw std::invalid_argument("TruncatedLaurent::inverse: zero series");
  // f = c t^v (1 + y) with val(y) >= 1; 1/f = c^{-1} t^{-v} sum (-y)^k.
  const FFElem lead = coeffs_[0];
  const FFElem lead_inv = field_.inv(lead);
  const long long rel = prec_ - val_;  // relative precision of the unit part
  TruncatedLaurent u = shift(-val_).scale(lead_inv);  // 1 + y, window [0, rel)
  TruncatedLaurent result = TruncatedLaurent::monomial(field_, field_.one(), 0, rel);
  TruncatedLaurent y = u.sub(result);
  TruncatedLaurent power = result;
  if (!y.is_zero()) {
    const long long step = y.valuation();
    for (long long total = step; total < rel; total += step) {
      power = power.mul(y.neg());
      result = result.add(power);
    }
  }
  return result.scale(lead_inv).shift(-val_);
}

TruncatedLaurent TruncatedLaurent::derivative() const {
  std::vector<FFElem> c(coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const long long e = val_ + static_cast<long long>(i);
    c[i] = field_.mul(coeffs_[i], field_.from_int(e));
  }
  return TruncatedLaurent(field_, val_ - 1, prec_ - 1, std::move(c));
}

std::string TruncatedLaurent::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    const long long e = val_ + static_cast<long long>(i);
    if (!first) out << " + ";
    const std::string c = field_.to_string(coeffs_[i]);
    if (e == 0) {
      out << c;
    } else {
      if (c != "1") out << "(" << c << ")*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  if (!first) out << " + ";
  out << "O(t^" << prec_ << ")";
  return out.str();
}

bool agree_to_precision(const TruncatedLaurent& a, const TruncatedLaurent& b,
                        long long upto) {
  if (a.precision() < upto || b.precision() < upto)
    throw std::invalid_argument("agree_to_precision: series not known that far");
  const long long lo = std::min(a.valuation(), b.valuation());
  for (long long e = lo; e < upto; ++e)
    if (!(a.coeff(e) == b.coeff(e))) return false;
  return true;
}

TruncatedLaurent binomial_power(const TruncatedLaurent& u, const PAdicRational& e) {
  const FiniteField& F = u.field();
  if (e.prime() != F.p())
    throw std::invalid_argument("binomial_power: exponent prime differs from field");
  if (u.valuation() != 0 || !(u.coeff(0) == F.one()))
    throw std::invalid_argument("binomial_power: constant term must be 1");
  const long long prec = u.precision();
  TruncatedLaurent one = TruncatedLaurent::monomial(F, F.one(), 0, prec);
  TruncatedLaurent y = u.sub(one);
  TruncatedLaurent result = one.scale(F.from_int(binom_mod_p(e, 0)));
  if (y.is_zero()) return result;
  TruncatedLaurent power = one;
  const long long step = y.valuation();
  Int nu = 1;
  for (long long total = step; total < prec; total += step, ++nu) {
    power = power.mul(y);
    result = result.add(power.scale(F.from_int(binom_mod_p(e, nu))));
  }
  return result;
}

TruncatedLaurent substitute_scaled(const TruncatedLaurent& f,
                                   const TruncatedLaurent& W) {
  const FiniteField& F = f.field();
  if (!F.same_field(W.field()))
    throw std::invalid_argument("substitute_scaled: field mismatch");
  if (W.valuation() != 0 || W.is_zero())
    throw std::invalid_argument("substitute_scaled: W must be a unit of valuation 0");
  const long long out_prec = std::min(f.precision(), f.valuation() + W.precision());
  if (f.is_zero()) return TruncatedLaurent::zero(F, out_prec);
  if (out_prec <= f.valuation())
    throw std::runtime_error(
        "substitute_scaled: precision exhausted (no representable terms)");
  // f(tW) = sum_e c_e t^e W^e, walking e upward with an incremental power.
  const long long lo = f.valuation();
  TruncatedLaurent we = TruncatedLaurent::monomial(F, F.one(), 0, W.precision());
  {
    // W^lo by square-and-multiply on |lo|, inverted for negative lo.
    TruncatedLaurent base = W;
    long long k = lo < 0 ? -lo : lo;
    while (k > 0) {
      if (k & 1) we = we.mul(base);
      base = base.mul(base);
      k >>= 1;
    }
    if (lo < 0) we = we.inverse();
  }
  TruncatedLaurent acc = TruncatedLaurent::zero(F, out_prec);
  for (long long e = lo; e < f.precision(); ++e) {
    if (e > lo) we = we.mul(W);
    if (e >= out_prec) break;
    const FFElem c = f.coeff(e);
    if (!F.is_zero(c)) {
      // t^e W^e is known on [e, e + relW) which covers [e, out_prec), so the
      // truncation below loses nothing inside the output window.
      acc = acc.add(we.scale(c).shift(e).truncate(out_prec));
    }
  }
  return acc;
}

ArtinSchreierAut::ArtinSchreierAut(FiniteField field, long long n, FFElem v)
    : field_(std::move(field)), n_(n), v_(v) {
  if (n_ <= 0) throw std::invalid_argument("ArtinSchreierAut: conductor must be >= 1");
  if (n_ % field_.p() == 0)
    throw std::invalid_argument("ArtinSchreierAut: p must not divide the conductor");
}

TruncatedLaurent ArtinSchreierAut::scale_series(long long precision) const {
  std::vector<FFElem> c{field_.one()};
  TruncatedLaurent base(field_, 0, precision, std::move(c));
  if (field_.is_zero(v_)) return base;
  TruncatedLaurent vtn = TruncatedLaurent::monomial(field_, v_, n_, precision);
  return binomial_power(base.add(vtn), PAdicRational(-1, n_, field_.p()));
}

TruncatedLaurent apply_aut(const ArtinSchreierAut& sigma, const TruncatedLaurent& f) {
  if (f.is_zero()) return f;
  const long long rel = f.precision() - f.valuation();
  return substitute_scaled(f, sigma.scale_series(rel));
}

DerivationElement adjoint_on_derivation(const ArtinSchreierAut& sigma,
                                        const DerivationElement& D) {
  const FiniteField& F = sigma.field();
  const TruncatedLaurent& f = D.series;
  if (f.is_zero()) return D;
  TruncatedLaurent moved = apply_aut(sigma, f);
  const long long rel = moved.precision() - moved.valuation();
  TruncatedLaurent one = TruncatedLaurent::monomial(F, F.one(), 0, rel);
  TruncatedLaurent vtn = TruncatedLaurent::monomial(F, sigma.label(), sigma.conductor(), rel);
  TruncatedLaurent jac = binomial_power(
      one.add(vtn), PAdicRational(sigma.conductor() + 1, sigma.conductor(), F.p()));
  return DerivationElement{moved.mul(jac)};
}

DerivationElement tame_scale(const FFElem& zeta, const DerivationElement& D) {
  const FiniteField& F = D.series.field();
  if (F.is_zero(zeta)) throw std::invalid_argument("tame_scale: zeta must be nonzero");
  const TruncatedLaurent& f = D.series;
  if (f.is_zero()) return D;
  // t^r d/dt -> zeta^{r-1} t^r d/dt, walking r upward with an incremental power.
  std::vector<FFElem> c;
  c.reserve(f.coeffs().size());
  FFElem z = F.pow(zeta, Int(f.valuation()) - 1);
  for (long long r = f.valuation(); r < f.precision(); ++r) {
    c.push_back(F.mul(f.coeff(r), z));
    z = F.mul(z, zeta);
  }
  return DerivationElement{TruncatedLaurent(F, f.valuation(), f.precision(), std::move(c))};
}

}  // namespace defcurve
