#include "defcurve/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace defcurve {

namespace {

// Dense polynomial arithmetic over F_p on int32 coefficient vectors
// (constant-first, not necessarily trimmed), used for modulus selection.
using Poly = std::vector<int32_t>;

int poly_degree(const Poly& f) {
  int deg = static_cast<int>(f.size()) - 1;
  while (deg >= 0 && f[deg] == 0) --deg;
  return deg;
}

// Remainder of f modulo monic g (g trimmed, degree >= 1).
Poly poly_mod(Poly f, const Poly& g, long long p) {
  int dg = poly_degree(g);
  for (int i = poly_degree(f); i >= dg; --i) {
    int64_t c = f[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      int64_t v = (f[i - dg + j] - c * g[j]) % p;
      if (v < 0) v += p;
      f[i - dg + j] = static_cast<int32_t>(v);
    }
  }
  f.resize(dg);
  return f;
}

bool poly_is_zero(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](int32_t c) { return c == 0; });
}

// Irreducibility by trial division against every monic polynomial of degree
// 1..deg/2, as the degrees here are tiny.
bool is_irreducible(const Poly& f, int deg, long long p) {
  for (int ddeg = 1; 2 * ddeg <= deg; ++ddeg) {
    // Enumerate monic divisor candidates x^ddeg + sum c_j x^j by counting.
    Poly g(ddeg + 1, 0);
    g[ddeg] = 1;
    Int count = 1;
    for (int i = 0; i < ddeg; ++i) count *= p;
    for (Int idx = 0; idx < count; ++idx) {
      Int v = idx;
      for (int j = 0; j < ddeg; ++j) {
        g[j] = static_cast<int32_t>((v % p).convert_to<long long>());
        v /= p;
      }
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(Int n) {
  std::vector<long long> factors;
  for (long long q = 2; Int(q) * q <= n; ++q) {
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) factors.push_back(n.convert_to<long long>());
  return factors;
}

}  // namespace

FiniteField::FiniteField(long long p, int d) : p_(p), d_(d) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: p must be prime");
  if (d < 1 || d > kMaxFieldDegree)
    throw std::invalid_argument("FiniteField: extension degree out of range");
  order_ = 1;
  for (int i = 0; i < d; ++i) order_ *= p;
  // Lexicographically least monic irreducible of degree d, ordering the
  // non-leading coefficients by base-p encoding (constant least significant).
  Poly f(d + 1, 0);
  f[d] = 1;
  Int count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (Int idx = 0; idx < count; ++idx) {
    Int v = idx;
    for (int j = 0; j < d; ++j) {
      f[j] = static_cast<int32_t>((v % p).convert_to<long long>());
      v /= p;
    }
    if (is_irreducible(f, d, p)) {
      modulus_.assign(f.begin(), f.begin() + d);
      return;
    }
  }
  throw std::logic_error("FiniteField: no irreducible modulus found");
}

FFElem FiniteField::from_int(const Int& v) const {
  Int r = v % p_;
  if (r < 0) r += p_;
  FFElem e{};
  e[0] = static_cast<int32_t>(r.convert_to<long long>());
  return e;
}

FFElem FiniteField::from_coeffs(const std::vector<long long>& c) const {
  if (c.size() > static_cast<std::size_t>(d_))
    throw std::invalid_argument("from_coeffs: more coefficients than the degree");
  FFElem e{};
  for (std::size_t i = 0; i < c.size(); ++i) {
    long long r = c[i] % p_;
    if (r < 0) r += p_;
    e[i] = static_cast<int32_t>(r);
  }
  return e;
}

FFElem FiniteField::add(const FFElem& a, const FFElem& b) const {
  FFElem r{};
  for (int i = 0; i < d_; ++i) {
    int32_t v = a[i] + b[i];
    if (v >= p_) v -= static_cast<int32_t>(p_);
    r[i] = v;
  }
  return r;
}

FFElem FiniteField::sub(const FFElem& a, const FFElem& b) const {
  FFElem r{};
  for (int i = 0; i < d_; ++i) {
    int32_t v = a[i] - b[i];
    if (v < 0) v += static_cast<int32_t>(p_);
    r[i] = v;
  }
  return r;
}

FFElem FiniteField::neg(const FFElem& a) const { return sub(FFElem{}, a); }

FFElem FiniteField::mul(const FFElem& a, const FFElem& b) const {
  if (d_ == 1) {
    FFElem r{};
    r[0] = static_cast<int32_t>(static_cast<int64_t>(a[0]) * b[0] % p_);
    return r;
  }
  std::array<int64_t, 2 * kMaxFieldDegree> buf{};
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_; ++j) buf[i + j] += static_cast<int64_t>(a[i]) * b[j];
  }
  // Reduce x^k for k >= d via x^d = -sum modulus_[j] x^j.
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    int64_t c = buf[k] % p_;
    if (c == 0) continue;
    for (int j = 0; j < d_; ++j) buf[k - d_ + j] -= c * modulus_[j];
    buf[k] = 0;
  }
  FFElem r{};
  for (int i = 0; i < d_; ++i) {
    int64_t v = buf[i] % p_;
    if (v < 0) v += p_;
    r[i] = static_cast<int32_t>(v);
  }
  return r;
}

FFElem FiniteField::pow(const FFElem& a, Int e) const {
  if (e < 0) {
    if (is_zero(a)) throw std::invalid_argument("pow: negative power of zero");
    Int m = order_ - 1;
    e = ((e % m) + m) % m;
  }
  FFElem result = one();
  FFElem base = a;
  while (e > 0) {
    if ((e & 1) != 0) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FFElem FiniteField::inv(const FFElem& a) const {
  if (is_zero(a)) throw std::invalid_argument("inv: zero is not invertible");
  return pow(a, order_ - 2);
}

FFElem FiniteField::generator() const {
  if (generator_known_) return generator_;
  const Int group_order = order_ - 1;
  const auto factors = prime_factors(group_order);
  // Elements in base-p encoding order; skip 0.
  for (Int idx = 1; idx < order_; ++idx) {
    FFElem g{};
    Int v = idx;
    for (int j = 0; j < d_; ++j) {
      g[j] = static_cast<int32_t>((v % p_).convert_to<long long>());
      v /= p_;
    }
    bool generates = true;
    for (long long q : factors) {
      if (pow(g, group_order / q) == one()) {
        generates = false;
        break;
      }
    }
    if (generates) {
      generator_ = g;
      generator_known_ = true;
      return g;
    }
  }
  throw std::logic_error("generator: multiplicative group has no generator");
}

std::string FiniteField::to_string(const FFElem& a) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    if (!first) out << "+";
    if (i == 0) {
      out << a[i];
    } else {
      if (a[i] != 1) out << a[i] << "*";
      out << "g";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

FFElem primitive_root_of_unity(const FiniteField& field, long long n) {
  if (n <= 0) throw std::invalid_argument("primitive_root_of_unity: n must be >= 1");
  const Int group_order = field.order() - 1;
  if (group_order % n != 0) {
    // Find the minimal degree d with n | p^d - 1 to make the error actionable.
    long long pd = field.p() % n;
    int dmin = 0;
    for (int d = 1; d <= 64; ++d) {
      if (pd == 1 % n) {
        dmin = d;
        break;
      }
      pd = pd * (field.p() % n) % n;
    }
    std::ostringstream msg;
    msg << "primitive_root_of_unity: " << n << " does not divide p^d-1 for p="
        << field.p() << ", d=" << field.d();
    if (dmin > 0)
      msg << "; the minimal degree is d=" << dmin;
    else
      msg << "; no extension of F_" << field.p() << " contains such a root";
    throw std::invalid_argument(msg.str());
  }
  return field.pow(field.generator(), group_order / n);
}

FieldMatrix::FieldMatrix(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

FieldMatrix FieldMatrix::identity(const FiniteField& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& other) const {
  if (cols_ != other.rows_ || !field_.same_field(other.field_))
    throw std::invalid_argument("FieldMatrix::mul: shape or field mismatch");
  FieldMatrix r(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FFElem& a = at(i, k);
      if (field_.is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, other.at(k, j)));
      }
    }
  }
  return r;
}

FieldMatrix FieldMatrix::add(const FieldMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("FieldMatrix::add: shape mismatch");
  FieldMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = field_.add(data_[i], other.data_[i]);
  return r;
}

FieldMatrix FieldMatrix::sub(const FieldMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("FieldMatrix::sub: shape mismatch");
  FieldMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = field_.sub(data_[i], other.data_[i]);
  return r;
}

FieldMatrix FieldMatrix::pow(Int e) const {
  if (rows_ != cols_) throw std::invalid_argument("FieldMatrix::pow: not square");
  if (e < 0) throw std::invalid_argument("FieldMatrix::pow: negative exponent");
  FieldMatrix result = identity(field_, rows_);
  FieldMatrix base = *this;
  while (e > 0) {
    if ((e & 1) != 0) result = result.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return result;
}

std::vector<std::size_t> row_echelon(FieldMatrix& m) {
  const FiniteField& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && F.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    const FFElem inv = F.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || F.is_zero(m.at(i, col))) continue;
      const FFElem factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const FieldMatrix& m) {
  FieldMatrix copy = m;
  return row_echelon(copy).size();
}

std::size_t kernel_dimension(const FieldMatrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<FFElem>> kernel_basis(const FieldMatrix& m) {
  FieldMatrix r = m;
  const std::vector<std::size_t> pivots = row_echelon(r);
  const FiniteField& F = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FFElem>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FFElem> v(m.cols(), F.zero());
    v[free_col] = F.one();
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = F.neg(r.at(i, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t eigenspace_one_dimension(const FieldMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigenspace_one_dimension: matrix not square");
  return kernel_dimension(m.sub(FieldMatrix::identity(m.field(), m.rows())));
}

FieldPolynomial::FieldPolynomial(FiniteField field, std::vector<FFElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

FFElem FieldPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

FieldPolynomial FieldPolynomial::add(const FieldPolynomial& other) const {
  std::vector<FFElem> c(std::max(coeffs_.size(), other.coeffs_.size()), field_.zero());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = field_.add(coeff(i), other.coeff(i));
  return FieldPolynomial(field_, std::move(c));
}

FieldPolynomial FieldPolynomial::mul(const FieldPolynomial& other) const {
  if (is_zero() || other.is_zero()) return FieldPolynomial(field_, {});
  std::vector<FFElem> c(coeffs_.size() + other.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (field_.is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      c[i + j] = field_.add(c[i + j], field_.mul(coeffs_[i], other.coeffs_[j]));
  }
  return FieldPolynomial(field_, std::move(c));
}

FFElem FieldPolynomial::eval(const FFElem& x) const {
  FFElem acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

long long root_one_multiplicity(const FieldPolynomial& f) {
  if (f.is_zero())
    throw std::invalid_argument("root_one_multiplicity: zero polynomial");
  const FiniteField& F = f.field();
  std::vector<FFElem> c = f.coeffs();
  long long mult = 0;
  while (true) {
    // Synthetic division of c by (x - 1): remainder is the value at 1.
    FFElem acc = F.zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, F.one()), c[i]);
    if (!F.is_zero(acc)) return mult;
    std::vector<FFElem> q(c.size() - 1, F.zero());
    FFElem carry = F.zero();
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = F.add(c[i], carry);
      q[i - 1] = carry;
    }
    c = std::move(q);
    ++mult;
    if (c.empty()) return mult;  // f was exactly (x-1)^mult up to a constant
  }
}

FieldMatrix companion_matrix(const FieldPolynomial& f) {
  const FiniteField& F = f.field();
  const long long n = f.degree();
  if (n < 1) throw std::invalid_argument("companion_matrix: degree must be >= 1");
  if (!(f.coeff(n) == F.one()))
    throw std::invalid_argument("companion_matrix: polynomial must be monic");
  FieldMatrix m(F, n, n);
  for (long long i = 1; i < n; ++i) m.at(i, i - 1) = F.one();
  for (long long i = 0; i < n; ++i) m.at(i, n - 1) = F.neg(f.coeff(i));
  return m;
}

namespace {

FieldPolynomial poly_det(const std::vector<FieldPolynomial>& entries, std::size_t n,
                         const FiniteField& F) {
  if (n == 1) return entries[0];
  FieldPolynomial det(F, {});
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i * n].is_zero()) continue;
    std::vector<FieldPolynomial> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < n; ++c) minor.push_back(entries[r * n + c]);
    }
    FieldPolynomial term = entries[i * n].mul(poly_det(minor, n - 1, F));
    if (i % 2 == 1) {
      std::vector<FFElem> neg_coeffs;
      for (const FFElem& e : term.coeffs()) neg_coeffs.push_back(F.neg(e));
      term = FieldPolynomial(F, std::move(neg_coeffs));
    }
    det = det.add(term);
  }
  return det;
}

}  // namespace

FieldPolynomial char_poly(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: not square");
  const std::size_t n = m.rows();
  if (n > 8) throw std::invalid_argument("char_poly: supported only up to 8x8");
  const FiniteField& F = m.field();
  // Entries of xI - m as degree <= 1 polynomials; determinant by cofactors.
  std::vector<FieldPolynomial> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<FFElem> c{F.neg(m.at(i, j)), i == j ? F.one() : F.zero()};
      entries.emplace_back(F, std::move(c));
    }
  }
  return poly_det(entries, n, F);
}

std::vector<long long> frobenius_minimal_polynomial(const FiniteField& field,
                                                    const FFElem& a) {
  // Distinct Frobenius conjugates a, a^p, a^{p^2}, ...
  std::vector<FFElem> conjugates;
  FFElem c = a;
  do {
    conjugates.push_back(c);
    c = field.pow(c, field.p());
  } while (!(c == a));
  FieldPolynomial f(field, {field.one()});
  for (const FFElem& conj : conjugates)
    f = f.mul(FieldPolynomial(field, {field.neg(conj), field.one()}));
  std::vector<long long> result;
  for (const FFElem& coefficient : f.coeffs()) {
    for (int i = 1; i < field.d(); ++i) {
      if (coefficient[i] != 0)
        throw std::logic_error(
            "frobenius_minimal_polynomial: coefficient not in the prime field");
    }
    result.push_back(coefficient[0]);
  }
  return result;
}

EchelonAccumulator::EchelonAccumulator(FiniteField field, std::size_t dim)
    : field_(std::move(field)), dim_(dim) {}

std::vector<FFElem> EchelonAccumulator::reduce(std::vector<FFElem> v) const {
  for (const auto& [pivot, row] : rows_) {
    if (field_.is_zero(v[pivot])) continue;
    const FFElem factor = v[pivot];
    for (std::size_t j = pivot; j < dim_; ++j)
      v[j] = field_.sub(v[j], field_.mul(factor, row[j]));
  }
  return v;
}

long long EchelonAccumulator::insert(std::vector<FFElem> v) {
  if (v.size() != dim_)
    throw std::invalid_argument("EchelonAccumulator: dimension mismatch");
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < dim_ && field_.is_zero(v[pivot])) ++pivot;
  if (pivot == dim_) return -1;
  const FFElem inv = field_.inv(v[pivot]);
  for (std::size_t j = pivot; j < dim_; ++j) v[j] = field_.mul(v[j], inv);
  rows_.emplace(pivot, std::move(v));
  return static_cast<long long>(pivot);
}

}  // namespace defcurve
