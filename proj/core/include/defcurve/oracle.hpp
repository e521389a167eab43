#pragma once
// Brute-force group cohomology on truncated Laurent windows: H1 of cyclic
// and commuting-generator actions (and cyclic Tate H^0) as explicit cocycles
// modulo coboundaries over finite fields, invariants under an outer
// automorphism, window-doubling stabilization, and builders for the
// two-generator ramification towers used as independent checks.

#include "defcurve/algebra.hpp"
#include "defcurve/filtration.hpp"
#include "defcurve/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace defcurve {

// The module t^start k[[t]] / t^(start+length) over `field`: elements are
// coefficient vectors indexed by exponent offset from `start`.  `stride`
// declares that every automorphism used with the module maps t^e into
// t^e k[[t^stride]], so the window splits into stride independent blocks
// (use 1 when no such structure holds); module_matrix enforces the claim.
struct TruncatedModule {
  FiniteField field;
  long long start = 0;
  long long length = 0;
  long long stride = 1;
};

// A module automorphism acting by t^e -> twist * t^e * scale^e, truncated
// back to the window: scale is W with sigma(t) = t W(t), twist an extra
// unit factor.  Both series must be units of valuation 0 with relative
// precision at least the window length.
struct ModuleAut {
  TruncatedLaurent scale;
  TruncatedLaurent twist;
};

// Plain substitution action on functions: twist = 1.
ModuleAut function_action(const TruncatedLaurent& W);
// Adjoint action on derivations f d/dt: twist = 1 / d(tW)/dt.
ModuleAut derivation_action(const TruncatedLaurent& W);
// Adjoint action transported to a function window through f d/dt -> f/t^shift:
// twist = W^shift / d(tW)/dt.  With shift = n+1 the conductor-n
// Artin-Schreier action becomes plain substitution.
ModuleAut shifted_derivation_action(const TruncatedLaurent& W, long long shift);

// Square matrix on the window stored as one dense block per exponent residue
// class mod stride; block b holds the offsets congruent to b.
class BlockMatrix {
 public:
  BlockMatrix(FiniteField field, long long size, long long stride);
  static BlockMatrix identity(const FiniteField& field, long long size, long long stride);

  const FiniteField& field() const { return field_; }
  long long size() const { return size_; }
  long long stride() const { return stride_; }
  long long block_rows(long long b) const;
  FieldMatrix& block(long long b) { return blocks_[static_cast<std::size_t>(b)]; }
  const FieldMatrix& block(long long b) const { return blocks_[static_cast<std::size_t>(b)]; }

  BlockMatrix mul(const BlockMatrix& other) const;
  BlockMatrix add(const BlockMatrix& other) const;
  BlockMatrix sub(const BlockMatrix& other) const;
  BlockMatrix pow(long long e) const;  // e >= 0
  bool equals(const BlockMatrix& other) const;
  bool is_identity() const;

 private:
  FiniteField field_;
  long long size_;
  long long stride_;
  std::vector<FieldMatrix> blocks_;
};

// Matrix of the automorphism on the window.  Throws std::invalid_argument
// when the action lowers exponents (leaves the window), violates the
// declared stride, or the series carry less precision than the window.
BlockMatrix module_matrix(const TruncatedModule& m, const ModuleAut& aut);

// I + M + ... + M^(order-1); verifies M^order == I and throws
// std::invalid_argument naming the order when it fails.
BlockMatrix norm_matrix(const BlockMatrix& m, long long order);

// Dimension plus representative data of a quotient space computed on one
// window: poles lists -(exponent) of each representative's leading term,
// ascending.
struct WindowClasses {
  long long dimension = 0;
  std::vector<long long> poles;

  friend bool operator==(const WindowClasses& a, const WindowClasses& b) {
    return a.dimension == b.dimension && a.poles == b.poles;
  }
};

// H1(<sigma>, window) = ker(Norm) / im(sigma - 1) for sigma of the given
// order, with representatives reduced against the coboundary space.
WindowClasses h1_cyclic_window(const TruncatedModule& m, const BlockMatrix& sigma,
                               long long order);

// Tate H^0(<sigma>, window) = ker(sigma - 1) / im(Norm).
long long tate_h0_window(const TruncatedModule& m, const BlockMatrix& sigma,
                         long long order);

// H1 of commuting generators g_0..g_{s-1}, each of order p, solving the
// cocycle system over the generator values (per-generator norm conditions
// and pairwise compatibility) modulo coboundaries.  When s == 2 and
// power_k != 0 the second generator instead satisfies g_1^p = g_0^power_k.
// Throws std::invalid_argument when a declared relation fails on the window.
long long h1_commuting_window(const TruncatedModule& m,
                              const std::vector<BlockMatrix>& gens, long long p,
                              long long power_k = 0);

// Fixed classes of H1(<sigma>, window) under the outer automorphism theta
// with theta^{-1} sigma theta = sigma^conj_power: classes [x] with
// theta-image congruent to x modulo coboundaries, with representatives.
WindowClasses invariants_window(const TruncatedModule& m, const BlockMatrix& sigma,
                                long long order, const BlockMatrix& outer,
                                long long conj_power);

inline long long stabilized_dimension(long long v) { return v; }
inline long long stabilized_dimension(const WindowClasses& w) { return w.dimension; }

// Window-doubling driver: evaluates compute at base_window and 2x; returns
// when two consecutive windows agree, doubling up to 8x, and throws
// std::runtime_error naming the last two dimensions otherwise.  The second
// member of the result is the confirming window length.
template <typename R, typename Fn>
std::pair<R, long long> stabilize_windows(long long base_window, Fn compute) {
  if (base_window < 1) throw std::invalid_argument("stabilize: base window must be positive");
  R prev = compute(base_window);
  long long window = base_window;
  for (int round = 0; round < 3; ++round) {
    R cur = compute(window * 2);
    window *= 2;
    if (cur == prev) return {cur, window};
    prev = std::move(cur);
  }
  long long before = stabilized_dimension(compute(window / 2));
  throw std::runtime_error(
      "did not stabilize after window doubling: dimension " + std::to_string(before) +
      " at window " + std::to_string(window / 2) + " vs " +
      std::to_string(stabilized_dimension(prev)) + " at window " + std::to_string(window));
}

// A window-length-parameterized module automorphism: `action` must return
// series with relative precision at least its argument.
struct ModuleFamily {
  FiniteField field;
  long long start = 0;
  long long stride = 1;
  std::function<ModuleAut(long long precision)> action;
};

// Stabilized brute-force result; poles are the representative leading-pole
// orders (empty for dimension-only computations), window the confirming
// window length, field_degree the coefficient field degree used.
struct H1Result {
  long long dimension = 0;
  std::vector<long long> poles;
  long long window = 0;
  int field_degree = 1;
};

// Default stabilization base window 4(n+1)p for conductor n.
long long default_base_window(long long p, long long n);

// H1 of the cyclic group generated by the family's automorphism.
H1Result h1_cyclic_bruteforce(const ModuleFamily& family, long long order,
                              long long base_window);

// sigma_v acting on the function window t^a k[[t]]: dimension and
// representative poles.  base_window 0 selects 4(n+1)p.
H1Result h1_cyclic_bruteforce(const FiniteField& field, long long n, const FFElem& v,
                              long long a, long long base_window = 0);

// Zeroth Tate cohomology (fixed vectors modulo norms) of sigma_v on
// t^a k[[t]], stabilized the same way as the H1 drivers.  Periodicity of
// cyclic Tate cohomology makes this equal dim H1 for these modules.
long long tate_h0_bruteforce(const FiniteField& field, long long n, const FFElem& v,
                             long long a, long long base_window = 0);

// Elementary abelian group generated by sigma_{v} for each label (labels
// must be F_p-independent), acting on the function window t^a k[[t]].
// Dimension only.  base_window 0 selects 4(n+1)p.
H1Result h1_elem_abelian_bruteforce(const FiniteField& field, long long n,
                                    const std::vector<FFElem>& labels, long long a,
                                    long long base_window = 0);

// Fixed classes of H1(<inner>) under the outer action (same module
// geometry), with theta^{-1} sigma theta = sigma^conj_power.
H1Result invariants_in_h1(const ModuleFamily& inner, long long order,
                          const std::function<ModuleAut(long long)>& outer,
                          long long conj_power, long long base_window);

// Solves h^p - h = rhs in truncated Laurent series over the series' field:
// pole exponents are cleared through p-th roots (each must be divisible by
// p), the constant through a field search, positive exponents linearly.
// Throws std::invalid_argument when no solution exists over the field.
TruncatedLaurent artin_schreier_solve(const TruncatedLaurent& rhs);

// An order-p^2 two-generator ramification tower on k[[t]]: tau generates the
// deeper subgroup (lower jump t_outer), g lifts the quotient generator
// (lower jump t_inner), they commute, and g^p = tau^power_k.  The action
// closures produce the adjoint (derivation) actions at a requested relative
// precision.
struct TwoJumpTower {
  FiniteField field;
  long long t_inner = 0;  // jump of the full group (smaller)
  long long t_outer = 0;  // jump of the deeper subgroup (larger)
  long long power_k = 0;
  std::function<ModuleAut(long long)> tau;
  std::function<ModuleAut(long long)> g;
};

// Builds the reference tower for jumps (t_inner, t_outer) in {(1,6), (3,8)}
// at p = 5 from an explicit Artin-Schreier ladder, self-checking the break
// valuations and the power relation.  Throws std::invalid_argument with the
// congruence warning when t_inner and t_outer differ mod p (no such tower
// exists), or when no reference data is available for the pair.
TwoJumpTower build_two_jump_tower(const FiniteField& field, long long t_inner,
                                  long long t_outer);

// H1 of the tower group acting on the derivation module k[[t]] d/dt,
// stabilized.  Dimension only.  base_window 0 selects 4(t_outer+1)p.
H1Result h1_two_generator_bruteforce(const TwoJumpTower& tower,
                                     long long base_window = 0);

// Local model at the wildly ramified point of the big-action curve over
// F_{p^2}: inner = the deepest cyclic subgroup's generator sigma_{gamma2}
// (conductor p+1, trace-zero label), outer = the next-layer generator built
// from (alpha, gamma) with gamma + gamma^p = -alpha^(p+1); conjugation on
// the inner subgroup is trivial.  Module: tangent module transported to the
// function window starting at -(p+2).
struct BigActionLocalModel {
  FiniteField field;
  FFElem alpha;
  FFElem gamma;
  FFElem inner_label;
  ModuleFamily inner;
  std::function<ModuleAut(long long)> outer;
};

BigActionLocalModel big_action_local_model(const FiniteField& field, const FFElem& alpha);

}  // namespace defcurve
