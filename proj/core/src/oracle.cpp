#include "defcurve/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace defcurve {

namespace {

TruncatedLaurent series_one(const FiniteField& field, long long precision) {
  return TruncatedLaurent::monomial(field, field.one(), 0, precision);
}

// Integer power by square-and-multiply; negative exponents via the inverse.
TruncatedLaurent series_pow(TruncatedLaurent base, long long e) {
  if (e == 0) return series_one(base.field(), base.precision() - base.valuation());
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  int hi = 62;
  while (((e >> hi) & 1) == 0) --hi;
  TruncatedLaurent r = base;
  for (int i = hi - 1; i >= 0; --i) {
    r = r.mul(r);
    if ((e >> i) & 1) r = r.mul(base);
  }
  return r;
}

// p-th power in characteristic p: coefficients to the p, exponents times p.
TruncatedLaurent frobenius_power(const TruncatedLaurent& f) {
  const FiniteField& field = f.field();
  const long long p = field.p();
  if (f.is_zero()) return TruncatedLaurent::zero(field, f.precision() * p);
  const auto& in = f.coeffs();
  std::vector<FFElem> out(static_cast<std::size_t>((in.size() - 1) * p + 1), field.zero());
  for (std::size_t i = 0; i < in.size(); ++i)
    out[i * static_cast<std::size_t>(p)] = field.pow(in[i], p);
  return TruncatedLaurent(field, f.valuation() * p, f.precision() * p, std::move(out));
}

// h(S) = sum_e h_e S^e for a substituted series S of positive valuation.
TruncatedLaurent evaluate_series(const TruncatedLaurent& h, const TruncatedLaurent& S) {
  const FiniteField& field = h.field();
  const long long vs = S.valuation();
  if (vs < 1) throw std::invalid_argument("evaluate_series: substituted series needs positive valuation");
  const long long rel_s = S.precision() - vs;
  const long long out_prec = std::min(h.precision() * vs, h.valuation() * vs + rel_s);
  TruncatedLaurent acc = TruncatedLaurent::zero(field, out_prec);
  if (h.is_zero()) return acc;
  TruncatedLaurent power = series_pow(S, h.valuation());
  for (long long e = h.valuation(); e < h.precision() && e * vs < out_prec; ++e) {
    const FFElem c = h.coeff(e);
    if (!field.is_zero(c)) acc = acc.add(power.scale(c).truncate(out_prec));
    if (e + 1 < h.precision()) power = power.mul(S);
  }
  return acc;
}

}  // namespace

ModuleAut function_action(const TruncatedLaurent& W) {
  return ModuleAut{W, series_one(W.field(), W.precision() - W.valuation())};
}

ModuleAut derivation_action(const TruncatedLaurent& W) {
  return ModuleAut{W, W.shift(1).derivative().inverse()};
}

ModuleAut shifted_derivation_action(const TruncatedLaurent& W, long long shift) {
  return ModuleAut{W, series_pow(W, shift).mul(W.shift(1).derivative().inverse())};
}

BlockMatrix::BlockMatrix(FiniteField field, long long size, long long stride)
    : field_(std::move(field)), size_(size), stride_(stride) {
  if (size_ < 0 || stride_ < 1)
    throw std::invalid_argument("BlockMatrix: size must be nonnegative and stride positive");
  blocks_.reserve(static_cast<std::size_t>(stride_));
  for (long long b = 0; b < stride_; ++b) {
    const std::size_t nb = static_cast<std::size_t>(block_rows(b));
    blocks_.emplace_back(field_, nb, nb);
  }
}

BlockMatrix BlockMatrix::identity(const FiniteField& field, long long size, long long stride) {
  BlockMatrix m(field, size, stride);
  for (long long b = 0; b < stride; ++b) {
    FieldMatrix& blk = m.block(b);
    for (std::size_t i = 0; i < blk.rows(); ++i) blk.at(i, i) = field.one();
  }
  return m;
}

long long BlockMatrix::block_rows(long long b) const {
  if (b < 0 || b >= stride_) throw std::invalid_argument("BlockMatrix: block index out of range");
  if (size_ <= b) return 0;
  return (size_ - b + stride_ - 1) / stride_;
}

namespace {
void require_same_shape(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.size() != b.size() || a.stride() != b.stride() || !a.field().same_field(b.field()))
    throw std::invalid_argument("BlockMatrix: shape or field mismatch");
}
}  // namespace

BlockMatrix BlockMatrix::mul(const BlockMatrix& other) const {
  require_same_shape(*this, other);
  BlockMatrix out(field_, size_, stride_);
  for (long long b = 0; b < stride_; ++b) out.block(b) = block(b).mul(other.block(b));
  return out;
}

BlockMatrix BlockMatrix::add(const BlockMatrix& other) const {
  require_same_shape(*this, other);
  BlockMatrix out(field_, size_, stride_);
  for (long long b = 0; b < stride_; ++b) out.block(b) = block(b).add(other.block(b));
  return out;
}

BlockMatrix BlockMatrix::sub(const BlockMatrix& other) const {
  require_same_shape(*this, other);
  BlockMatrix out(field_, size_, stride_);
  for (long long b = 0; b < stride_; ++b) out.block(b) = block(b).sub(other.block(b));
  return out;
}

BlockMatrix BlockMatrix::pow(long long e) const {
  if (e < 0) throw std::invalid_argument("BlockMatrix: negative power");
  BlockMatrix out(field_, size_, stride_);
  for (long long b = 0; b < stride_; ++b) out.block(b) = block(b).pow(Int(e));
  return out;
}

bool BlockMatrix::equals(const BlockMatrix& other) const {
  require_same_shape(*this, other);
  for (long long b = 0; b < stride_; ++b) {
    const FieldMatrix& x = block(b);
    const FieldMatrix& y = other.block(b);
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c)
        if (!(x.at(r, c) == y.at(r, c))) return false;
  }
  return true;
}

bool BlockMatrix::is_identity() const {
  for (long long b = 0; b < stride_; ++b) {
    const FieldMatrix& x = block(b);
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) {
        const FFElem want = r == c ? field_.one() : field_.zero();
        if (!(x.at(r, c) == want)) return false;
      }
  }
  return true;
}

BlockMatrix module_matrix(const TruncatedModule& m, const ModuleAut& aut) {
  const FiniteField& field = m.field;
  if (m.length < 0 || m.stride < 1)
    throw std::invalid_argument("module_matrix: window length must be nonnegative and stride positive");
  if (!aut.scale.field().same_field(field) || !aut.twist.field().same_field(field))
    throw std::invalid_argument("module_matrix: field mismatch between module and action");
  BlockMatrix out(field, m.length, m.stride);
  if (m.length == 0) return out;
  if (aut.scale.valuation() != 0 || field.is_zero(aut.scale.coeff(0)))
    throw std::invalid_argument("module_matrix: scale series must be a unit of valuation 0");
  if (aut.twist.valuation() != 0 || field.is_zero(aut.twist.coeff(0)))
    throw std::invalid_argument("module_matrix: twist series must be a unit of valuation 0");
  if (aut.scale.precision() < m.length || aut.twist.precision() < m.length)
    throw std::invalid_argument("module_matrix: series precision below the window length");

  const TruncatedLaurent W = aut.scale.truncate(m.length);
  // cur = twist * W^(start + i), advanced by one factor of W per column.
  TruncatedLaurent cur = aut.twist.truncate(m.length).mul(series_pow(W, m.start));
  for (long long i = 0; i < m.length; ++i) {
    if (cur.valuation() < 0)
      throw std::invalid_argument("module_matrix: action does not preserve the window");
    FieldMatrix& blk = out.block(i % m.stride);
    const std::size_t col = static_cast<std::size_t>(i / m.stride);
    const auto& coeffs = cur.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (field.is_zero(coeffs[k])) continue;
      const long long r = cur.valuation() + static_cast<long long>(k);
      if (i + r >= m.length) break;
      if (r % m.stride != 0)
        throw std::invalid_argument("module_matrix: action violates the declared stride");
      blk.at(static_cast<std::size_t>((i + r) / m.stride), col) = coeffs[k];
    }
    if (i + 1 < m.length) cur = cur.mul(W).truncate(m.length);
  }
  return out;
}

BlockMatrix norm_matrix(const BlockMatrix& m, long long order) {
  if (order < 1) throw std::invalid_argument("norm_matrix: order must be positive");
  BlockMatrix sum = BlockMatrix::identity(m.field(), m.size(), m.stride());
  BlockMatrix power = sum;
  for (long long k = 1; k < order; ++k) {
    power = power.mul(m);
    sum = sum.add(power);
  }
  if (!power.mul(m).is_identity())
    throw std::invalid_argument("norm_matrix: generator does not have order " +
                                std::to_string(order) + " on the window");
  return sum;
}

WindowClasses h1_cyclic_window(const TruncatedModule& m, const BlockMatrix& sigma,
                               long long order) {
  const BlockMatrix norm = norm_matrix(sigma, order);
  const BlockMatrix cob = sigma.sub(BlockMatrix::identity(sigma.field(), sigma.size(), sigma.stride()));
  WindowClasses out;
  for (long long b = 0; b < sigma.stride(); ++b) {
    const FieldMatrix& db = cob.block(b);
    const std::size_t nb = db.rows();
    if (nb == 0) continue;
    // Echelon span of the coboundaries first; kernel vectors of the norm that
    // add a pivot are independent classes, and the pivot offset names the
    // representative's leading pole.
    EchelonAccumulator acc(m.field, nb);
    for (std::size_t c = 0; c < nb; ++c) {
      std::vector<FFElem> col(nb);
      for (std::size_t r = 0; r < nb; ++r) col[r] = db.at(r, c);
      acc.insert(std::move(col));
    }
    for (auto& v : kernel_basis(norm.block(b))) {
      const long long pivot = acc.insert(std::move(v));
      if (pivot >= 0) {
        out.dimension += 1;
        out.poles.push_back(-(m.start + b + m.stride * pivot));
      }
    }
  }
  std::sort(out.poles.begin(), out.poles.end());
  return out;
}

long long tate_h0_window(const TruncatedModule& m, const BlockMatrix& sigma,
                         long long order) {
  (void)m;
  const BlockMatrix norm = norm_matrix(sigma, order);
  const BlockMatrix fix = sigma.sub(BlockMatrix::identity(sigma.field(), sigma.size(), sigma.stride()));
  long long dim = 0;
  for (long long b = 0; b < sigma.stride(); ++b) {
    const std::size_t nb = fix.block(b).rows();
    if (nb == 0) continue;
    dim += static_cast<long long>(nb - rank(fix.block(b))) -
           static_cast<long long>(rank(norm.block(b)));
  }
  return dim;
}

long long h1_commuting_window(const TruncatedModule& m,
                              const std::vector<BlockMatrix>& gens, long long p,
                              long long power_k) {
  const std::size_t s = gens.size();
  if (s == 0) throw std::invalid_argument("h1_commuting_window: no generators");
  if (power_k < 0 || power_k >= p)
    throw std::invalid_argument("h1_commuting_window: power exponent out of range");
  if (power_k != 0 && s != 2)
    throw std::invalid_argument("h1_commuting_window: power relation requires exactly two generators");
  for (std::size_t j = 1; j < s; ++j) require_same_shape(gens[0], gens[j]);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (!gens[i].mul(gens[j]).equals(gens[j].mul(gens[i])))
        throw std::invalid_argument("h1_commuting_window: generators do not commute on the window");

  const BlockMatrix id = BlockMatrix::identity(gens[0].field(), gens[0].size(), gens[0].stride());
  // Norm-style sums; the first generator (and every generator when power_k
  // is 0) must have exact order p on the window.
  std::vector<BlockMatrix> norms;
  norms.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    if (j == 1 && power_k != 0) {
      BlockMatrix sum = id;
      BlockMatrix power = id;
      for (long long k = 1; k < p; ++k) {
        power = power.mul(gens[j]);
        sum = sum.add(power);
      }
      if (!power.mul(gens[j]).equals(gens[0].pow(power_k)))
        throw std::invalid_argument(
            "h1_commuting_window: declared power relation fails on the window");
      norms.push_back(std::move(sum));
    } else {
      norms.push_back(norm_matrix(gens[j], p));
    }
  }
  // Partial sum I + g_0 + ... + g_0^{power_k-1} for the mixed relation row.
  BlockMatrix tpart(gens[0].field(), gens[0].size(), gens[0].stride());
  if (power_k != 0) {
    tpart = id;
    BlockMatrix power = id;
    for (long long k = 1; k < power_k; ++k) {
      power = power.mul(gens[0]);
      tpart = tpart.add(power);
    }
  }
  std::vector<BlockMatrix> cobs;
  cobs.reserve(s);
  for (std::size_t j = 0; j < s; ++j) cobs.push_back(gens[j].sub(id));

  long long dim = 0;
  for (long long b = 0; b < gens[0].stride(); ++b) {
    const std::size_t nb = static_cast<std::size_t>(gens[0].block_rows(b));
    if (nb == 0) continue;
    const std::size_t pairs = s * (s - 1) / 2;
    FieldMatrix cons(m.field, (s + pairs) * nb, s * nb);
    // Relator rows: g_j^p = 1 gives Norm_j x_j = 0; the mixed relation
    // g_1^p = g_0^k gives Sum_j g_1^j x_1 - (I + ... + g_0^{k-1}) x_0 = 0.
    for (std::size_t j = 0; j < s; ++j) {
      const FieldMatrix& nm = norms[j].block(b);
      for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < nb; ++c) cons.at(j * nb + r, j * nb + c) = nm.at(r, c);
      if (j == 1 && power_k != 0) {
        const FieldMatrix& tp = tpart.block(b);
        for (std::size_t r = 0; r < nb; ++r)
          for (std::size_t c = 0; c < nb; ++c)
            cons.at(j * nb + r, c) = m.field.neg(tp.at(r, c));
      }
    }
    // Compatibility rows: (g_j - 1) x_i = (g_i - 1) x_j for i < j.
    std::size_t row0 = s * nb;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) {
        const FieldMatrix& ci = cobs[j].block(b);
        const FieldMatrix& cj = cobs[i].block(b);
        for (std::size_t r = 0; r < nb; ++r)
          for (std::size_t c = 0; c < nb; ++c) {
            cons.at(row0 + r, i * nb + c) = ci.at(r, c);
            cons.at(row0 + r, j * nb + c) = m.field.neg(cj.at(r, c));
          }
        row0 += nb;
      }
    const long long cocycles = static_cast<long long>(s * nb - rank(cons));
    FieldMatrix cob(m.field, s * nb, nb);
    for (std::size_t j = 0; j < s; ++j) {
      const FieldMatrix& cj = cobs[j].block(b);
      for (std::size_t r = 0; r < nb; ++r)
        for (std::size_t c = 0; c < nb; ++c) cob.at(j * nb + r, c) = cj.at(r, c);
    }
    dim += cocycles - static_cast<long long>(rank(cob));
  }
  return dim;
}

WindowClasses invariants_window(const TruncatedModule& m, const BlockMatrix& sigma,
                                long long order, const BlockMatrix& outer,
                                long long conj_power) {
  require_same_shape(sigma, outer);
  if (conj_power < 1 || conj_power >= order)
    throw std::invalid_argument("invariants_window: conjugation power out of range");
  if (!outer.mul(sigma).equals(sigma.pow(conj_power).mul(outer)))
    throw std::invalid_argument(
        "invariants_window: outer action does not conjugate the generator to the declared power");
  const BlockMatrix id = BlockMatrix::identity(sigma.field(), sigma.size(), sigma.stride());
  const BlockMatrix norm = norm_matrix(sigma, order);
  const BlockMatrix cob = sigma.sub(id);
  // Action on classes: x -> theta (1 + sigma + ... + sigma^{conj_power-1}) x.
  BlockMatrix partial = id;
  BlockMatrix power = id;
  for (long long k = 1; k < conj_power; ++k) {
    power = power.mul(sigma);
    partial = partial.add(power);
  }
  const BlockMatrix moved = outer.mul(partial).sub(id);

  WindowClasses out;
  for (long long b = 0; b < sigma.stride(); ++b) {
    const std::size_t nb = static_cast<std::size_t>(sigma.block_rows(b));
    if (nb == 0) continue;
    const auto cocycles = kernel_basis(norm.block(b));
    const std::size_t z = cocycles.size();
    const FieldMatrix& lb = moved.block(b);
    const FieldMatrix& db = cob.block(b);
    // Fixed classes solve (moved x) in the coboundary space with x a cocycle:
    // kernel of [moved * Z | coboundaries].
    FieldMatrix sys(m.field, nb, z + nb);
    for (std::size_t j = 0; j < z; ++j)
      for (std::size_t r = 0; r < nb; ++r) {
        FFElem acc = m.field.zero();
        for (std::size_t k = 0; k < nb; ++k)
          acc = m.field.add(acc, m.field.mul(lb.at(r, k), cocycles[j][k]));
        sys.at(r, j) = acc;
      }
    for (std::size_t c = 0; c < nb; ++c)
      for (std::size_t r = 0; r < nb; ++r) sys.at(r, z + c) = db.at(r, c);

    EchelonAccumulator acc(m.field, nb);
    for (std::size_t c = 0; c < nb; ++c) {
      std::vector<FFElem> col(nb);
      for (std::size_t r = 0; r < nb; ++r) col[r] = db.at(r, c);
      acc.insert(std::move(col));
    }
    for (const auto& sol : kernel_basis(sys)) {
      std::vector<FFElem> x(nb, m.field.zero());
      for (std::size_t j = 0; j < z; ++j) {
        if (m.field.is_zero(sol[j])) continue;
        for (std::size_t r = 0; r < nb; ++r)
          x[r] = m.field.add(x[r], m.field.mul(sol[j], cocycles[j][r]));
      }
      const long long pivot = acc.insert(std::move(x));
      if (pivot >= 0) {
        out.dimension += 1;
        out.poles.push_back(-(m.start + b + m.stride * pivot));
      }
    }
  }
  std::sort(out.poles.begin(), out.poles.end());
  return out;
}

long long default_base_window(long long p, long long n) { return 4 * (n + 1) * p; }

namespace {

// The cohomology of the finite quotient window differs from the module's by
// boundary classes fed in from the cut-off tail.  Those live near the top of
// the window, so the persistent computations work on a doubled window and
// keep only the classes that survive truncation back to the reporting
// window: cocycles are solved at length 2N, truncated to length N, and
// counted modulo the window-N coboundaries.

std::vector<FFElem> block_prefix(const std::vector<FFElem>& v, std::size_t n) {
  return std::vector<FFElem>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
}

WindowClasses persistent_cyclic(const TruncatedModule& small, const BlockMatrix& mat_small,
                                const BlockMatrix& mat_big, long long order) {
  const BlockMatrix norm_big = norm_matrix(mat_big, order);
  const BlockMatrix cob_small = mat_small.sub(
      BlockMatrix::identity(mat_small.field(), mat_small.size(), mat_small.stride()));
  WindowClasses out;
  for (long long b = 0; b < mat_small.stride(); ++b) {
    const FieldMatrix& db = cob_small.block(b);
    const std::size_t nb = db.rows();
    if (nb == 0) continue;
    EchelonAccumulator acc(small.field, nb);
    for (std::size_t c = 0; c < nb; ++c) {
      std::vector<FFElem> col(nb);
      for (std::size_t r = 0; r < nb; ++r) col[r] = db.at(r, c);
      acc.insert(std::move(col));
    }
    for (const auto& v : kernel_basis(norm_big.block(b))) {
      const long long pivot = acc.insert(block_prefix(v, nb));
      if (pivot >= 0) {
        out.dimension += 1;
        out.poles.push_back(-(small.start + b + small.stride * pivot));
      }
    }
  }
  std::sort(out.poles.begin(), out.poles.end());
  return out;
}

long long persistent_tate_h0(const TruncatedModule& small, const BlockMatrix& mat_small,
                             const BlockMatrix& mat_big, long long order) {
  const BlockMatrix fix_big = mat_big.sub(
      BlockMatrix::identity(mat_big.field(), mat_big.size(), mat_big.stride()));
  const BlockMatrix norm_small = norm_matrix(mat_small, order);
  long long dim = 0;
  for (long long b = 0; b < mat_small.stride(); ++b) {
    const FieldMatrix& nb_mat = norm_small.block(b);
    const std::size_t nb = nb_mat.rows();
    if (nb == 0) continue;
    EchelonAccumulator acc(small.field, nb);
    for (std::size_t c = 0; c < nb; ++c) {
      std::vector<FFElem> col(nb);
      for (std::size_t r = 0; r < nb; ++r) col[r] = nb_mat.at(r, c);
      acc.insert(std::move(col));
    }
    for (const auto& v : kernel_basis(fix_big.block(b)))
      if (acc.insert(block_prefix(v, nb)) >= 0) dim += 1;
  }
  return dim;
}

long long persistent_commuting(const TruncatedModule& small,
                               const std::vector<BlockMatrix>& gens_small,
                               const std::vector<BlockMatrix>& gens_big, long long p,
                               long long power_k) {
  const std::size_t s = gens_big.size();
  if (s == 0) throw std::invalid_argument("h1_commuting: no generators");
  if (power_k < 0 || power_k >= p)
    throw std::invalid_argument("h1_commuting: power exponent out of range");
  if (power_k != 0 && s != 2)
    throw std::invalid_argument("h1_commuting: power relation requires exactly two generators");
  for (std::size_t j = 1; j < s; ++j) require_same_shape(gens_big[0], gens_big[j]);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (!gens_big[i].mul(gens_big[j]).equals(gens_big[j].mul(gens_big[i])))
        throw std::invalid_argument("h1_commuting: generators do not commute on the window");
  const BlockMatrix id_big =
      BlockMatrix::identity(gens_big[0].field(), gens_big[0].size(), gens_big[0].stride());
  std::vector<BlockMatrix> norms_big;
  norms_big.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    if (j == 1 && power_k != 0) {
      BlockMatrix sum = id_big;
      BlockMatrix power = id_big;
      for (long long k = 1; k < p; ++k) {
        power = power.mul(gens_big[j]);
        sum = sum.add(power);
      }
      if (!power.mul(gens_big[j]).equals(gens_big[0].pow(power_k)))
        throw std::invalid_argument("h1_commuting: declared power relation fails on the window");
      norms_big.push_back(std::move(sum));
    } else {
      norms_big.push_back(norm_matrix(gens_big[j], p));
    }
  }
  BlockMatrix tpart_big(gens_big[0].field(), gens_big[0].size(), gens_big[0].stride());
  if (power_k != 0) {
    tpart_big = id_big;
    BlockMatrix power = id_big;
    for (long long k = 1; k < power_k; ++k) {
      power = power.mul(gens_big[0]);
      tpart_big = tpart_big.add(power);
    }
  }
  const BlockMatrix id_small =
      BlockMatrix::identity(gens_small[0].field(), gens_small[0].size(), gens_small[0].stride());
  std::vector<BlockMatrix> cobs_small;
  cobs_small.reserve(s);
  for (std::size_t j = 0; j < s; ++j) cobs_small.push_back(gens_small[j].sub(id_small));

  long long dim = 0;
  for (long long b = 0; b < gens_big[0].stride(); ++b) {
    const std::size_t nm = static_cast<std::size_t>(gens_big[0].block_rows(b));
    const std::size_t nb = static_cast<std::size_t>(gens_small[0].block_rows(b));
    if (nb == 0) continue;
    // Relator rows at the doubled window: norms (with the mixed power
    // relation when declared) and pairwise compatibility
    // (g_j - 1) x_i = (g_i - 1) x_j.
    const std::size_t pairs = s * (s - 1) / 2;
    FieldMatrix cons(small.field, (s + pairs) * nm, s * nm);
    for (std::size_t j = 0; j < s; ++j) {
      const FieldMatrix& nrm = norms_big[j].block(b);
      for (std::size_t r = 0; r < nm; ++r)
        for (std::size_t c = 0; c < nm; ++c) cons.at(j * nm + r, j * nm + c) = nrm.at(r, c);
      if (j == 1 && power_k != 0) {
        const FieldMatrix& tp = tpart_big.block(b);
        for (std::size_t r = 0; r < nm; ++r)
          for (std::size_t c = 0; c < nm; ++c)
            cons.at(j * nm + r, c) = small.field.neg(tp.at(r, c));
      }
    }
    std::size_t row0 = s * nm;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) {
        const FieldMatrix& ci = gens_big[j].block(b);
        const FieldMatrix& cj = gens_big[i].block(b);
        for (std::size_t r = 0; r < nm; ++r)
          for (std::size_t c = 0; c < nm; ++c) {
            FFElem vi = ci.at(r, c);
            FFElem vj = small.field.neg(cj.at(r, c));
            if (r == c) {
              vi = small.field.sub(vi, small.field.one());
              vj = small.field.add(vj, small.field.one());
            }
            cons.at(row0 + r, i * nm + c) = vi;
            cons.at(row0 + r, j * nm + c) = vj;
          }
        row0 += nm;
      }
    EchelonAccumulator acc(small.field, s * nb);
    for (std::size_t c = 0; c < nb; ++c) {
      std::vector<FFElem> col(s * nb);
      for (std::size_t j = 0; j < s; ++j) {
        const FieldMatrix& cj = cobs_small[j].block(b);
        for (std::size_t r = 0; r < nb; ++r) col[j * nb + r] = cj.at(r, c);
      }
      acc.insert(std::move(col));
    }
    for (const auto& sol : kernel_basis(cons)) {
      std::vector<FFElem> cut(s * nb);
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t r = 0; r < nb; ++r) cut[j * nb + r] = sol[j * nm + r];
      if (acc.insert(std::move(cut)) >= 0) dim += 1;
    }
  }
  return dim;
}

WindowClasses persistent_invariants(const TruncatedModule& small,
                                    const BlockMatrix& sigma_small,
                                    const BlockMatrix& sigma_big, long long order,
                                    const BlockMatrix& outer_big, long long conj_power) {
  require_same_shape(sigma_big, outer_big);
  if (conj_power < 1 || conj_power >= order)
    throw std::invalid_argument("invariants: conjugation power out of range");
  if (!outer_big.mul(sigma_big).equals(sigma_big.pow(conj_power).mul(outer_big)))
    throw std::invalid_argument(
        "invariants: outer action does not conjugate the generator to the declared power");
  const BlockMatrix id_big =
      BlockMatrix::identity(sigma_big.field(), sigma_big.size(), sigma_big.stride());
  const BlockMatrix norm_big = norm_matrix(sigma_big, order);
  const BlockMatrix cob_big = sigma_big.sub(id_big);
  BlockMatrix partial = id_big;
  BlockMatrix power = id_big;
  for (long long k = 1; k < conj_power; ++k) {
    power = power.mul(sigma_big);
    partial = partial.add(power);
  }
  const BlockMatrix moved = outer_big.mul(partial).sub(id_big);
  const BlockMatrix cob_small = sigma_small.sub(
      BlockMatrix::identity(sigma_small.field(), sigma_small.size(), sigma_small.stride()));

  WindowClasses out;
  for (long long b = 0; b < sigma_big.stride(); ++b) {
    const std::size_t nm = static_cast<std::size_t>(sigma_big.block_rows(b));
    const std::size_t nb = static_cast<std::size_t>(sigma_small.block_rows(b));
    if (nb == 0) continue;
    const auto cocycles = kernel_basis(norm_big.block(b));
    const std::size_t z = cocycles.size();
    const FieldMatrix& lb = moved.block(b);
    const FieldMatrix& db = cob_big.block(b);
    // Fixed classes solve (moved x) in the coboundary space with x a cocycle
    // at the doubled window: kernel of [moved * Z | coboundaries].
    FieldMatrix sys(small.field, nm, z + nm);
    for (std::size_t j = 0; j < z; ++j)
      for (std::size_t r = 0; r < nm; ++r) {
        FFElem acc = small.field.zero();
        for (std::size_t k = 0; k < nm; ++k)
          acc = small.field.add(acc, small.field.mul(lb.at(r, k), cocycles[j][k]));
        sys.at(r, j) = acc;
      }
    for (std::size_t c = 0; c < nm; ++c)
      for (std::size_t r = 0; r < nm; ++r) sys.at(r, z + c) = db.at(r, c);

    const FieldMatrix& ds = cob_small.block(b);
    EchelonAccumulator acc(small.field, nb);
    for (std::size_t c = 0; c < nb; ++c) {
      std::vector<FFElem> col(nb);
      for (std::size_t r = 0; r < nb; ++r) col[r] = ds.at(r, c);
      acc.insert(std::move(col));
    }
    for (const auto& sol : kernel_basis(sys)) {
      std::vector<FFElem> x(nb, small.field.zero());
      for (std::size_t j = 0; j < z; ++j) {
        if (small.field.is_zero(sol[j])) continue;
        for (std::size_t r = 0; r < nb; ++r)
          x[r] = small.field.add(x[r], small.field.mul(sol[j], cocycles[j][r]));
      }
      const long long pivot = acc.insert(std::move(x));
      if (pivot >= 0) {
        out.dimension += 1;
        out.poles.push_back(-(small.start + b + small.stride * pivot));
      }
    }
  }
  std::sort(out.poles.begin(), out.poles.end());
  return out;
}

}  // namespace

H1Result h1_cyclic_bruteforce(const ModuleFamily& family, long long order,
                              long long base_window) {
  auto compute = [&](long long len) {
    TruncatedModule small{family.field, family.start, len, family.stride};
    TruncatedModule big{family.field, family.start, 2 * len, family.stride};
    const ModuleAut aut = family.action(2 * len);
    return persistent_cyclic(small, module_matrix(small, aut), module_matrix(big, aut),
                             order);
  };
  auto [classes, window] = stabilize_windows<WindowClasses>(base_window, compute);
  return H1Result{classes.dimension, classes.poles, window, family.field.d()};
}

H1Result h1_cyclic_bruteforce(const FiniteField& field, long long n, const FFElem& v,
                              long long a, long long base_window) {
  const ArtinSchreierAut sigma(field, n, v);
  ModuleFamily family{field, a, n,
                      [sigma](long long prec) { return function_action(sigma.scale_series(prec)); }};
  if (base_window == 0) base_window = default_base_window(field.p(), n);
  return h1_cyclic_bruteforce(family, field.p(), base_window);
}

long long tate_h0_bruteforce(const FiniteField& field, long long n, const FFElem& v,
                             long long a, long long base_window) {
  const ArtinSchreierAut sigma(field, n, v);
  if (base_window == 0) base_window = default_base_window(field.p(), n);
  auto compute = [&](long long len) -> long long {
    TruncatedModule small{field, a, len, n};
    TruncatedModule big{field, a, 2 * len, n};
    const ModuleAut aut = function_action(sigma.scale_series(2 * len));
    return persistent_tate_h0(small, module_matrix(small, aut), module_matrix(big, aut),
                              field.p());
  };
  return stabilize_windows<long long>(base_window, compute).first;
}

H1Result h1_elem_abelian_bruteforce(const FiniteField& field, long long n,
                                    const std::vector<FFElem>& labels, long long a,
                                    long long base_window) {
  if (labels.empty())
    throw std::invalid_argument("h1_elem_abelian_bruteforce: at least one label required");
  const long long p = field.p();
  std::vector<ArtinSchreierAut> auts;
  auts.reserve(labels.size());
  for (const auto& v : labels) auts.emplace_back(field, n, v);
  if (base_window == 0) base_window = default_base_window(p, n);
  auto compute = [&](long long len) -> long long {
    TruncatedModule small{field, a, len, n};
    TruncatedModule big{field, a, 2 * len, n};
    std::vector<BlockMatrix> gens_small;
    std::vector<BlockMatrix> gens_big;
    gens_small.reserve(auts.size());
    gens_big.reserve(auts.size());
    for (const auto& s : auts) {
      const ModuleAut aut = function_action(s.scale_series(2 * len));
      gens_small.push_back(module_matrix(small, aut));
      gens_big.push_back(module_matrix(big, aut));
    }
    return persistent_commuting(small, gens_small, gens_big, p, 0);
  };
  auto [dim, window] = stabilize_windows<long long>(base_window, compute);
  return H1Result{dim, {}, window, field.d()};
}

H1Result invariants_in_h1(const ModuleFamily& inner, long long order,
                          const std::function<ModuleAut(long long)>& outer,
                          long long conj_power, long long base_window) {
  auto compute = [&](long long len) {
    TruncatedModule small{inner.field, inner.start, len, inner.stride};
    TruncatedModule big{inner.field, inner.start, 2 * len, inner.stride};
    const ModuleAut aut = inner.action(2 * len);
    return persistent_invariants(small, module_matrix(small, aut),
                                 module_matrix(big, aut), order,
                                 module_matrix(big, outer(2 * len)), conj_power);
  };
  auto [classes, window] = stabilize_windows<WindowClasses>(base_window, compute);
  return H1Result{classes.dimension, classes.poles, window, inner.field.d()};
}

TruncatedLaurent artin_schreier_solve(const TruncatedLaurent& rhs) {
  const FiniteField& field = rhs.field();
  const long long p = field.p();
  const long long prec = rhs.precision();
  std::map<long long, FFElem> rem;
  for (std::size_t i = 0; i < rhs.coeffs().size(); ++i)
    if (!field.is_zero(rhs.coeffs()[i]))
      rem[rhs.valuation() + static_cast<long long>(i)] = rhs.coeffs()[i];
  std::map<long long, FFElem> sol;
  auto bump = [&](std::map<long long, FFElem>& m, long long e, const FFElem& c) {
    auto it = m.find(e);
    FFElem next = it == m.end() ? c : field.add(it->second, c);
    if (field.is_zero(next)) {
      if (it != m.end()) m.erase(it);
    } else {
      m[e] = next;
    }
  };
  // Pole part: the lowest exponent must come from the Frobenius half of
  // h -> h^p - h, so it must be divisible by p; clearing it feeds the linear
  // half back at e/p.
  while (!rem.empty() && rem.begin()->first < 0) {
    const long long e = rem.begin()->first;
    const FFElem c = rem.begin()->second;
    if (e % p != 0)
      throw std::invalid_argument("artin_schreier_solve: pole order " + std::to_string(-e) +
                                  " is not divisible by the characteristic; no solution");
    const FFElem root = field.pow(c, field.order() / p);
    bump(sol, e / p, root);
    rem.erase(rem.begin());
    bump(rem, e / p, root);
  }
  // Constant term by field search.
  if (!rem.empty() && rem.begin()->first == 0) {
    const FFElem c0 = rem.begin()->second;
    bool found = false;
    std::vector<long long> digits(static_cast<std::size_t>(field.d()), 0);
    for (Int i = 0; i < field.order() && !found; ++i) {
      const FFElem w = field.from_coeffs(digits);
      if (field.sub(field.pow(w, p), w) == c0) {
        bump(sol, 0, w);
        found = true;
      }
      for (auto& dig : digits) {
        if (++dig < p) break;
        dig = 0;
      }
    }
    if (!found)
      throw std::invalid_argument(
          "artin_schreier_solve: constant term is not in the image over this field; "
          "extend the coefficient field");
    rem.erase(rem.begin());
  }
  // Positive exponents: the linear half dominates; the Frobenius feedback
  // lands at p*e, strictly above, so one ascending pass settles the window.
  while (!rem.empty()) {
    const auto it = rem.begin();
    const long long e = it->first;
    if (e >= prec) break;
    const FFElem he = field.neg(it->second);
    bump(sol, e, he);
    rem.erase(it);
    // The feedback may cancel a pending coefficient, so re-fetch the lowest
    // remaining exponent instead of holding an iterator across the bump.
    if (e * p < prec) bump(rem, e * p, field.neg(field.pow(he, p)));
  }
  TruncatedLaurent h = TruncatedLaurent::zero(field, prec);
  if (!sol.empty()) {
    const long long lo = sol.begin()->first;
    const long long hi = sol.rbegin()->first;
    std::vector<FFElem> coeffs(static_cast<std::size_t>(hi - lo + 1), field.zero());
    for (const auto& [e, c] : sol) coeffs[static_cast<std::size_t>(e - lo)] = c;
    h = TruncatedLaurent(field, lo, prec, std::move(coeffs));
  }
  const TruncatedLaurent check = frobenius_power(h).sub(h).sub(rhs);
  if (!check.is_zero() && check.valuation() < prec)
    throw std::logic_error("artin_schreier_solve: verification failed");
  return h;
}

namespace {

// Data for a reference two-generator tower: t0 = y^a x1^b normalizes the top
// uniformizer (a t_outer + b p = 1), and the ladder equation is
// z^p - z = f(x1) with f = sum c_j x1^{-m_j}, written through y = 1/z as
// y = y^p + y^{p+1} f(x1(y)).
struct TowerData {
  long long t_inner = 0;
  long long t_outer = 0;
  long long a = 0;
  long long b = 0;
  std::vector<std::pair<long long, long long>> f_terms;  // (pole m_j, integer c_j)
};

TowerData reference_tower_data(long long p, long long t_inner, long long t_outer) {
  if (p == 5 && t_inner == 1 && t_outer == 6) return {1, 6, 1, -1, {{6, 1}, {2, -1}}};
  if (p == 5 && t_inner == 3 && t_outer == 8) return {3, 8, 2, -3, {{8, 1}, {4, 3}}};
  throw std::invalid_argument("build_two_jump_tower: no reference tower data for jumps (" +
                              std::to_string(t_inner) + ", " + std::to_string(t_outer) + ")");
}

struct LadderSeries {
  TruncatedLaurent y;   // valuation t_outer
  TruncatedLaurent x1;  // valuation p
};

TruncatedLaurent ladder_x1(const FiniteField& field, const TowerData& td,
                           const TruncatedLaurent& y) {
  const long long p = field.p();
  // x1 = (t0 y^{-a})^{1/b}; the argument has valuation b p and leading 1.
  const TruncatedLaurent u = series_pow(y, -td.a).shift(1);
  if (u.valuation() != td.b * p || !(u.coeff(u.valuation()) == field.one()))
    throw std::logic_error("ladder_x1: unexpected normalization");
  const TruncatedLaurent strip = u.shift(-td.b * p);
  return binomial_power(strip, PAdicRational(1, td.b, p)).shift(p);
}

LadderSeries solve_ladder(const FiniteField& field, const TowerData& td,
                          long long rel_precision) {
  const long long p = field.p();
  const long long binv = [&] {
    const long long br = ((td.b % p) + p) % p;
    if (br == 0) throw std::logic_error("solve_ladder: b divisible by p");
    long long inv = 1;
    for (long long k = 1; k < p; ++k)
      if ((br * k) % p == 1) { inv = k; break; }
    return inv;
  }();
  TruncatedLaurent y = TruncatedLaurent::monomial(field, field.one(), td.t_outer,
                                                  td.t_outer + rel_precision);
  bool converged = false;
  for (int round = 0; round < 64 && !converged; ++round) {
    const TruncatedLaurent x1 = ladder_x1(field, td, y);
    const TruncatedLaurent ypow = series_pow(y, p + 1);
    TruncatedLaurent g = TruncatedLaurent::zero(field, y.precision());
    TruncatedLaurent gprime = g;
    for (const auto& [mj, cj] : td.f_terms) {
      const TruncatedLaurent piece = ypow.mul(series_pow(x1, -mj));
      const FFElem cf = field.from_int(cj);
      g = g.add(piece.scale(cf));
      // d/dy of y^{p+1} x1^{-m} is (p+1 + a m / b) times piece / y.
      const long long rbar = (((p + 1 + td.a * mj * binv) % p) + p) % p;
      gprime = gprime.add(piece.scale(field.mul(cf, field.from_int(rbar))));
    }
    const TruncatedLaurent err = frobenius_power(y).add(g).sub(y);
    if (err.is_zero()) {
      converged = true;
      break;
    }
    TruncatedLaurent deriv = gprime.mul(y.inverse());
    deriv = deriv.sub(series_one(field, deriv.precision()));
    if (deriv.valuation() != 0 || field.is_zero(deriv.coeff(0)))
      throw std::logic_error("solve_ladder: degenerate correction direction");
    y = y.sub(err.mul(deriv.inverse())).truncate(td.t_outer + rel_precision);
    if (y.valuation() != td.t_outer)
      throw std::logic_error("solve_ladder: iteration left the expected valuation");
  }
  if (!converged) throw std::runtime_error("solve_ladder: iteration did not converge");
  return {y, ladder_x1(field, td, y)};
}

// h with h^p - h = f(sigma_1 x) - f(x) in the middle variable, to absolute
// precision x_prec.
TruncatedLaurent ladder_correction(const FiniteField& field, const TowerData& td,
                                   long long x_prec) {
  const long long p = field.p();
  TruncatedLaurent rhs = TruncatedLaurent::zero(field, x_prec);
  for (const auto& [mj, cj] : td.f_terms) {
    const TruncatedLaurent base =
        series_one(field, x_prec + mj)
            .add(TruncatedLaurent::monomial(field, field.one(), td.t_inner, x_prec + mj));
    const TruncatedLaurent grown =
        binomial_power(base, PAdicRational(mj, td.t_inner, p)).sub(series_one(field, x_prec + mj));
    rhs = rhs.add(grown.shift(-mj).scale(field.from_int(cj)));
  }
  return artin_schreier_solve(rhs);
}

long long tower_power_exponent(const FiniteField& field, const TowerData& td) {
  const long long p = field.p();
  const long long x_prec = 4 * p + 2 * td.t_outer;
  const TruncatedLaurent h = ladder_correction(field, td, x_prec);
  TruncatedLaurent trace = TruncatedLaurent::zero(field, x_prec);
  for (long long i = 0; i < p; ++i) {
    const TruncatedLaurent w =
        series_one(field, x_prec)
            .add(TruncatedLaurent::monomial(field, field.from_int(i), td.t_inner, x_prec));
    const TruncatedLaurent image =
        binomial_power(w, PAdicRational(-1, td.t_inner, p)).shift(1);
    trace = trace.add(evaluate_series(h, image));
  }
  // The lift of the quotient generator has g^p = tau^k exactly when the
  // orbit sum of the correction is the constant k.
  FFElem constant = field.zero();
  if (!trace.is_zero()) {
    if (trace.valuation() > 0)
      throw std::logic_error("tower_power_exponent: orbit sum is not constant");
    constant = trace.coeff(0);
    const TruncatedLaurent rest =
        trace.sub(TruncatedLaurent::monomial(field, constant, 0, trace.precision()));
    if (!rest.is_zero()) throw std::logic_error("tower_power_exponent: orbit sum is not constant");
  }
  for (long long k = 0; k < p; ++k)
    if (field.from_int(k) == constant) return k;
  throw std::logic_error("tower_power_exponent: constant lies outside the prime field");
}

}  // namespace

TwoJumpTower build_two_jump_tower(const FiniteField& field, long long t_inner,
                                  long long t_outer) {
  const long long p = field.p();
  if (t_inner < 1 || t_outer <= t_inner || t_inner % p == 0 || t_outer % p == 0)
    throw std::invalid_argument("build_two_jump_tower: jumps must be increasing and prime to p");
  const RamificationFiltration filt(p, 1, {{t_inner, p * p}, {t_outer, p}});
  if (const auto warning = congruence_warning(filt)) throw std::invalid_argument(*warning);
  const TowerData td = reference_tower_data(p, t_inner, t_outer);

  auto tau = [field, td, p](long long prec) {
    const LadderSeries ladder = solve_ladder(field, td, prec + 16);
    const TruncatedLaurent arg = series_one(field, ladder.y.precision()).add(ladder.y);
    return derivation_action(binomial_power(arg, PAdicRational(-td.a, 1, p)));
  };
  auto g = [field, td, p](long long prec) {
    const LadderSeries ladder = solve_ladder(field, td, prec + 16);
    const long long x_prec = prec / p + 2 * td.t_outer + 16;
    const TruncatedLaurent h = ladder_correction(field, td, x_prec);
    const TruncatedLaurent harg =
        series_one(field, prec + 8).add(evaluate_series(h, ladder.x1).mul(ladder.y).truncate(prec + 8));
    const TruncatedLaurent first = binomial_power(harg, PAdicRational(-td.a, 1, p));
    const TruncatedLaurent xarg =
        series_one(field, prec + 8).add(series_pow(ladder.x1, td.t_inner).truncate(prec + 8));
    const TruncatedLaurent second = binomial_power(xarg, PAdicRational(-td.b, td.t_inner, p));
    return derivation_action(first.mul(second));
  };
  TwoJumpTower tower{field, t_inner, t_outer, tower_power_exponent(field, td),
                     std::move(tau), std::move(g)};

  // Self-check the lower breaks on a fixed window: v(W - 1) must equal the
  // claimed jump for each generator.
  const long long probe = 2 * (t_outer + p) + 8;
  const TruncatedLaurent wtau = tower.tau(probe).scale;
  const TruncatedLaurent wg = tower.g(probe).scale;
  if (wtau.sub(series_one(field, wtau.precision())).valuation() != t_outer)
    throw std::logic_error("build_two_jump_tower: deep generator break mismatch");
  if (wg.sub(series_one(field, wg.precision())).valuation() != t_inner)
    throw std::logic_error("build_two_jump_tower: quotient lift break mismatch");
  return tower;
}

H1Result h1_two_generator_bruteforce(const TwoJumpTower& tower, long long base_window) {
  const long long p = tower.field.p();
  if (base_window == 0) base_window = default_base_window(p, tower.t_outer);
  auto compute = [&](long long len) -> long long {
    TruncatedModule small{tower.field, 0, len, 1};
    TruncatedModule big{tower.field, 0, 2 * len, 1};
    const ModuleAut tau = tower.tau(2 * len);
    const ModuleAut g = tower.g(2 * len);
    std::vector<BlockMatrix> gens_small{module_matrix(small, tau), module_matrix(small, g)};
    std::vector<BlockMatrix> gens_big{module_matrix(big, tau), module_matrix(big, g)};
    return persistent_commuting(small, gens_small, gens_big, p, tower.power_k);
  };
  auto [dim, window] = stabilize_windows<long long>(base_window, compute);
  return H1Result{dim, {}, window, tower.field.d()};
}

BigActionLocalModel big_action_local_model(const FiniteField& field, const FFElem& alpha) {
  const long long p = field.p();
  if (field.d() != 2)
    throw std::invalid_argument("big_action_local_model: coefficient field must have degree 2");
  if (field.is_zero(alpha))
    throw std::invalid_argument("big_action_local_model: alpha must be nonzero");

  auto scan = [&](auto&& pred, const char* what) {
    for (long long hi = 0; hi < p; ++hi)
      for (long long lo = 0; lo < p; ++lo) {
        const FFElem c = field.from_coeffs({lo, hi});
        if (pred(c)) return c;
      }
    throw std::invalid_argument(std::string("big_action_local_model: no ") + what +
                                " in the field");
  };
  const FFElem target = field.neg(field.pow(alpha, p + 1));
  const FFElem gamma =
      scan([&](const FFElem& c) { return field.add(c, field.pow(c, p)) == target; },
           "solution of gamma + gamma^p = -alpha^(p+1)");
  const FFElem inner_label = scan(
      [&](const FFElem& c) {
        return !field.is_zero(c) && field.is_zero(field.add(c, field.pow(c, p)));
      },
      "nonzero trace-zero label");
  const FFElem u0 = scan(
      [&](const FFElem& c) { return field.pow(c, p + 1) == field.neg(field.one()); },
      "(p+1)-th root of -1");

  ModuleFamily inner{field, -(p + 2), 1, [field, inner_label, p](long long prec) {
                       const ArtinSchreierAut sigma(field, p + 1, inner_label);
                       return shifted_derivation_action(sigma.scale_series(prec + 4), p + 2);
                     }};
  auto outer = [field, alpha, gamma, u0, p](long long prec) {
    const long long wide = prec + p * p + p + 8;
    const TruncatedLaurent unit =
        series_one(field, wide)
            .add(TruncatedLaurent::monomial(field, field.one(), p * p - 1, wide))
            .add(TruncatedLaurent::monomial(field, field.one(), p * p + p, wide));
    const TruncatedLaurent u = binomial_power(unit, PAdicRational(1, p + 1, p)).scale(u0);
    const TruncatedLaurent arg =
        series_one(field, wide)
            .add(TruncatedLaurent::monomial(field, gamma, p + 1, wide))
            .sub(u.shift(1).scale(field.pow(alpha, p)));
    const TruncatedLaurent w = binomial_power(arg, PAdicRational(-1, p + 1, p));
    return shifted_derivation_action(w, p + 2);
  };
  return BigActionLocalModel{field, alpha, gamma, inner_label, std::move(inner),
                             std::move(outer)};
}

}  // namespace defcurve
