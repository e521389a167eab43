#pragma once
// Finite prime fields F_p and small extensions F_{p^d} with elements stored
// as coefficient vectors, dense matrices over them (kernel, rank, eigenspace,
// characteristic polynomial), and univariate polynomial utilities.

#include "defcurve/padic.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace defcurve {

inline constexpr int kMaxFieldDegree = 6;

// Element of F_{p^d}: coefficients c[0] + c[1]*g + ... + c[d-1]*g^{d-1} of a
// residue modulo the field's irreducible modulus, each reduced into [0, p).
// Entries at indices >= d are always zero, so operator== is exact equality.
using FFElem = std::array<int32_t, kMaxFieldDegree>;

class FiniteField {
 public:
  // Constructs F_{p^d}; the modulus is the lexicographically least monic
  // irreducible polynomial of degree d (ordered by its base-p encoding with
  // the constant coefficient least significant).  Requires prime p >= 2 and
  // 1 <= d <= kMaxFieldDegree.
  FiniteField(long long p, int d);

  long long p() const { return p_; }
  int d() const { return d_; }
  const Int& order() const { return order_; }  // p^d
  // Non-leading coefficients m_0..m_{d-1} of the monic modulus x^d + sum m_j x^j.
  const std::vector<int32_t>& modulus() const { return modulus_; }
  bool same_field(const FiniteField& other) const {
    return p_ == other.p_ && d_ == other.d_;
  }

  FFElem zero() const { return FFElem{}; }
  FFElem one() const { return from_int(1); }
  FFElem from_int(const Int& v) const;
  FFElem from_int(long long v) const { return from_int(Int(v)); }
  // Coefficients (constant first) of length <= d, reduced mod p.
  FFElem from_coeffs(const std::vector<long long>& c) const;

  bool is_zero(const FFElem& a) const { return a == FFElem{}; }
  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem inv(const FFElem& a) const;
  FFElem div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }
  // a^e; negative e allowed for nonzero a (reduced modulo p^d - 1).
  FFElem pow(const FFElem& a, Int e) const;

  // Lexicographically least generator of the multiplicative group, ordering
  // elements by their base-p coefficient encoding.
  FFElem generator() const;

  std::string to_string(const FFElem& a) const;

 private:
  long long p_;
  int d_;
  Int order_;
  std::vector<int32_t> modulus_;
  mutable FFElem generator_{};
  mutable bool generator_known_ = false;
};

// Deterministic primitive n-th root of unity: generator()^((p^d-1)/n).
// Throws when n does not divide p^d - 1, naming the minimal degree that works.
FFElem primitive_root_of_unity(const FiniteField& field, long long n);

class FieldMatrix {
 public:
  FieldMatrix(FiniteField field, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(const FiniteField& field, std::size_t n);

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FFElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FFElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FieldMatrix mul(const FieldMatrix& other) const;
  FieldMatrix add(const FieldMatrix& other) const;
  FieldMatrix sub(const FieldMatrix& other) const;
  FieldMatrix pow(Int e) const;  // square matrix, e >= 0

 private:
  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FFElem> data_;
};

// In-place reduction to row echelon form; returns the pivot column indices.
std::vector<std::size_t> row_echelon(FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);
std::size_t kernel_dimension(const FieldMatrix& m);
// Basis of {x : m x = 0}, one vector (length cols) per free column.
std::vector<std::vector<FFElem>> kernel_basis(const FieldMatrix& m);
// dim ker(m - I) for square m.
std::size_t eigenspace_one_dimension(const FieldMatrix& m);

class FieldPolynomial {
 public:
  // Coefficients constant-first; trailing zeros are trimmed.
  FieldPolynomial(FiniteField field, std::vector<FFElem> coeffs);

  const FiniteField& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  FFElem coeff(std::size_t i) const;
  const std::vector<FFElem>& coeffs() const { return coeffs_; }

  FieldPolynomial add(const FieldPolynomial& other) const;
  FieldPolynomial mul(const FieldPolynomial& other) const;
  FFElem eval(const FFElem& x) const;

 private:
  FiniteField field_;
  std::vector<FFElem> coeffs_;
};

// Largest k with (x-1)^k dividing f, by repeated exact synthetic division.
long long root_one_multiplicity(const FieldPolynomial& f);

// Companion matrix of a monic polynomial of degree >= 1.
FieldMatrix companion_matrix(const FieldPolynomial& f);

// det(xI - m) for square m, by cofactor expansion (supported up to 8x8).
FieldPolynomial char_poly(const FieldMatrix& m);

// Minimal polynomial over F_p of an element of F_{p^d}: the squarefree
// product of (x - a^{p^k}) over the distinct Frobenius conjugates.  All
// coefficients are constants; they are returned reduced into [0, p).
std::vector<long long> frobenius_minimal_polynomial(const FiniteField& field,
                                                    const FFElem& a);

// Incremental Gaussian elimination keeping rows normalized by their leading
// (lowest-index) coordinate.  insert() returns the pivot index where the
// reduced vector is new, or -1 when it lies in the span of earlier inserts.
class EchelonAccumulator {
 public:
  EchelonAccumulator(FiniteField field, std::size_t dim);
  long long insert(std::vector<FFElem> v);
  // Reduces v against the stored rows without inserting it.
  std::vector<FFElem> reduce(std::vector<FFElem> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  FiniteField field_;
  std::size_t dim_;
  std::map<std::size_t, std::vector<FFElem>> rows_;  // pivot index -> row
};

}  // namespace defcurve
