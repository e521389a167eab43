#pragma once
// Truncated Laurent series over finite fields with per-series precision,
// binomial powers with p-adic-integer exponents, and Artin-Schreier
// automorphism actions on series and on derivations.

#include "defcurve/algebra.hpp"
#include "defcurve/padic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace defcurve {

// A Laurent series known on the exponent window [valuation, precision):
// coefficient i of coeffs() is the coefficient of t^(valuation+i).  Terms at
// exponents >= precision are unknown.  A series that is zero to its precision
// is stored with an empty coefficient list and valuation == precision.
class TruncatedLaurent {
 public:
  TruncatedLaurent(FiniteField field, long long valuation, long long precision,
                   std::vector<FFElem> coeffs);

  static TruncatedLaurent zero(const FiniteField& field, long long precision);
  static TruncatedLaurent monomial(const FiniteField& field, const FFElem& c,
                                   long long exponent, long long precision);

  const FiniteField& field() const { return field_; }
  long long valuation() const { return val_; }
  long long precision() const { return prec_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<FFElem>& coeffs() const { return coeffs_; }
  // Coefficient of t^e; known-zero below the valuation, error at e >= precision.
  FFElem coeff(long long e) const;

  TruncatedLaurent add(const TruncatedLaurent& other) const;
  TruncatedLaurent sub(const TruncatedLaurent& other) const;
  TruncatedLaurent neg() const;
  TruncatedLaurent mul(const TruncatedLaurent& other) const;
  TruncatedLaurent scale(const FFElem& c) const;
  TruncatedLaurent shift(long long k) const;  // multiply by t^k
  TruncatedLaurent truncate(long long new_precision) const;
  // Inverse of a nonzero series c t^v (1 + y).
  TruncatedLaurent inverse() const;
  // Formal derivative d/dt.
  TruncatedLaurent derivative() const;

  std::string to_string() const;

 private:
  FiniteField field_;
  long long val_;
  long long prec_;
  std::vector<FFElem> coeffs_;

  void normalize();
};

// True when the two series have equal coefficients at every exponent < upto;
// both must be known at least to that precision.
bool agree_to_precision(const TruncatedLaurent& a, const TruncatedLaurent& b,
                        long long upto);

// (1 + y)^e for a p-adic-integer exponent e, by the binomial expansion
// sum_nu C(e, nu) y^nu.  Requires constant term exactly 1 (valuation 0) and
// e over the same prime as the field characteristic.
TruncatedLaurent binomial_power(const TruncatedLaurent& u, const PAdicRational& e);

// f(s(t)) for the substitution s(t) = t * W(t) with W a unit series of
// valuation 0.  Exact on the window: substitution never lowers exponents.
TruncatedLaurent substitute_scaled(const TruncatedLaurent& f,
                                   const TruncatedLaurent& W);

// An element f(t) d/dt of the derivation module.
struct DerivationElement {
  TruncatedLaurent series;
};

// The Artin-Schreier automorphism sigma_v with sigma_v(t) = t/(1+v t^n)^{1/n}
// on the conductor-n extension; sigma_v . sigma_w = sigma_{v+w} exactly.
class ArtinSchreierAut {
 public:
  ArtinSchreierAut(FiniteField field, long long n, FFElem v);

  const FiniteField& field() const { return field_; }
  long long conductor() const { return n_; }
  const FFElem& label() const { return v_; }

  // W(t) = (1 + v t^n)^{-1/n} with sigma(t) = t W(t), to the given precision.
  TruncatedLaurent scale_series(long long precision) const;

 private:
  FiniteField field_;
  long long n_;
  FFElem v_;
};

// Substitution of sigma(t) into f.
TruncatedLaurent apply_aut(const ArtinSchreierAut& sigma, const TruncatedLaurent& f);

// Adjoint action on derivations: (f d/dt)^sigma = f^sigma (1+v t^n)^{(n+1)/n} d/dt.
DerivationElement adjoint_on_derivation(const ArtinSchreierAut& sigma,
                                        const DerivationElement& D);

// Tame action t -> zeta t in the adjoint representation: the monomial
// t^r d/dt acquires the factor zeta^{r-1}.
DerivationElement tame_scale(const FFElem& zeta, const DerivationElement& D);

}  // namespace defcurve
