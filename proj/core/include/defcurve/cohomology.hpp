#pragma once
// Closed-form dimensions and explicit bases for H^1 of cyclic and
// elementary-abelian layers acting on fractional ideals of derivations,
// quotient-step dimensions along a ramification filtration, local
// lower/upper bounds, tame reduction of basis classes, and invariant
// counting for semidirect products.

#include "defcurve/filtration.hpp"
#include "defcurve/padic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace defcurve {

// dim H^1(Z/p, t^a k[[t]]) for a conductor-n action:
// floor(((n+1)(p-1)+a)/p) - ceil(a/p).
long long dim_h1_cyclic(long long p, long long n, long long a);

// Smallest admissible basis exponent: b = -a-n when p | a, else -a-n+1.
long long basis_lower_bound(long long p, long long n, long long a);

// Exponents i in [b, -a] with binom(i/n, p-1) = 0 mod p; each i labels the
// class of the cocycle sigma_w -> w / t^i.  Size equals dim_h1_cyclic.
std::vector<long long> basis_h1_cyclic(long long p, long long n, long long a);

// One level of a basis for an elementary-abelian group: the classes are
// 1/pi^i for i in `exponents`, where pi is the uniformizer one floor deeper
// per level (levels are listed deepest-first, level 1 at the bottom).
struct BasisLevel {
  int level = 0;
  std::string uniformizer;       // "pi_<level>"
  long long module_exponent = 0; // a_level of the coefficient ideal
  long long lower_bound = 0;     // smallest admissible exponent b_level
  std::vector<long long> exponents;
};

struct CohomologyBasis {
  long long p = 0;
  long long conductor = 0;
  std::vector<BasisLevel> levels;

  long long dimension() const;
};

// Exponent recursion a_1 = a, a_{i+1} = ceil(a_i / p) shared by the
// elementary-abelian formulas.
std::vector<long long> elem_abelian_twists(long long p, long long s, long long a);

// Per-level summands of dim H^1((Z/p)^s, t^a k[[t]]).
std::vector<long long> elem_abelian_level_dims(long long p, long long n,
                                               long long s, long long a);
long long dim_h1_elem_abelian(long long p, long long n, long long s, long long a);
CohomologyBasis basis_h1_elem_abelian(long long p, long long n, long long s,
                                      long long a);

// --- Quotient steps along a filtration -----------------------------------
// Steps are indexed lambda = 1..#jumps with lambda = 1 the deepest layer
// (largest jump).  Step lambda is the elementary-abelian quotient
// G_{t_lambda} / G_{t_{lambda-1}} acting with conductor t_lambda on the
// invariants of everything deeper, a module of exponent
// a_1 = -t_lambda - 1 + mu_{lambda-1}.

int quotient_step_count(const RamificationFiltration& filt);
long long quotient_step_conductor(const RamificationFiltration& filt, int lambda);
// log_p of the step's order.
long long quotient_step_rank(const RamificationFiltration& filt, int lambda);
// The module exponent a_1 the step acts on.
long long quotient_step_twist(const RamificationFiltration& filt, int lambda);
std::vector<long long> quotient_step_level_dims(const RamificationFiltration& filt,
                                                int lambda);
long long dim_h1_quotient_step(const RamificationFiltration& filt, int lambda);
CohomologyBasis quotient_step_basis(const RamificationFiltration& filt, int lambda);

// Basis classes of an inner step surviving conjugation by the next-outer
// layer: class i survives when binom(i/n, nu) = 0 mod p for every nu >= 1
// with i - nu*D >= b, D the next-outer jump.  The outermost step has no
// outer layer and is returned unreduced.
CohomologyBasis conjugation_invariant_step_basis(const RamificationFiltration& filt,
                                                 int lambda);
// Weaker first-order variant checking only nu = 1 (the leading coefficient
// of the conjugated class); an upper estimate for the full condition.
CohomologyBasis first_order_invariant_step_basis(const RamificationFiltration& filt,
                                                 int lambda);

// --- Local bounds ----------------------------------------------------------

struct DimBound {
  long long lower = 0;
  long long upper_invariant = 0;
  long long upper_raw = 0;
  std::optional<long long> exact;
  std::string exact_source;  // "closed-form" or "oracle" when exact is set
};

// lower = outermost-step dimension; upper_raw = sum of all step dimensions;
// upper_invariant replaces each inner summand by its conjugation-invariant
// count; exact = upper_invariant when every step is cyclic of order p.
DimBound local_bounds(const RamificationFiltration& filt);

// --- Tame reduction --------------------------------------------------------

// Weight rule assigning a zeta-exponent to the class 1/pi_lambda^mu of a
// conductor-j step under the tame generator t -> zeta t, zeta of order n0:
//   lemma:   exponent (-p^(lambda-1) * mu + j) mod n0
//   derived: exponent mu mod n0
// The class survives when its exponent is 0 mod n0.
enum class TameConvention { lemma, derived };

TameConvention tame_convention_from_string(const std::string& name);
std::string to_string(TameConvention convention);

struct TameReduction {
  long long count = 0;
  CohomologyBasis surviving;
};

TameReduction tame_reduce(const CohomologyBasis& basis, long long n0, long long j,
                          TameConvention convention);

// --- Semidirect products ---------------------------------------------------

// Invariant count for a tame-wild semidirect product acting on an
// s-dimensional space V over F_p split into s/d simple blocks, d the degree
// of the subfield generated by the j-th power of the weight character zeta
// (zeta of order n0).  Block i carries weight exponents weights[i-1] =
// (c(1,i)..c(d,i)); the block matrix is the companion matrix of
// x^d + a_{d-1} x^{d-1} + ... + a_0 twisted by diag(zeta^-c); the result is
// the total multiplicity of eigenvalue 1 across blocks.
long long semidirect_delta(long long p, long long n0, long long j, long long s,
                           const std::vector<std::vector<long long>>& weights,
                           const std::vector<long long>& a_coeffs);

// --- Single-jump comparison counts ----------------------------------------

// #{ i : b <= i <= j+1, binom(i/j, p-1) = 0, i = 0 mod m } with b = 1 when
// p | j+1 and 2 otherwise.
long long pries_dimension(long long p, long long j, long long m);

// #{ e in E0 : p^nu e not in E0 for all nu >= 1 } with
// E0 = { e : 1 <= e <= j, e = j mod m }.
long long pries_r(long long p, long long j, long long m);

}  // namespace defcurve
