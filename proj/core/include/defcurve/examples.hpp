#pragma once
// Self-contained reference pipelines for four curve families whose
// ramification data is known in closed form: Fermat curves, Artin-Schreier
// p-covers of the line, the Lehr-Matignon curves, and the single-jump cases
// tabulated by Pries.  Each pipeline builds its filtration and cover data in
// code, runs the local and global dimension computations, and reports every
// intermediate quantity, so the command-line tool and the test suite share
// one source of truth.

#include "defcurve/cohomology.hpp"
#include "defcurve/filtration.hpp"
#include "defcurve/global.hpp"

#include <vector>

namespace defcurve {

// --- Fermat curves ----------------------------------------------------------

// Wild branch point of x^{p+1} + y^{p+1} + z^{p+1} = 0 under its full
// automorphism group: tame quotient of order p^2 - 1 over jumps at 1
// (order p^3) and p + 1 (order p).  Requires a prime p >= 5.
RamificationFiltration fermat_filtration(long long p);

// Quotient line carrying the wild point above plus one tame point of order
// p^2 - p + 1.
CoverData fermat_cover(long long p);

struct FermatReport {
  long long p = 0;
  // Deepest layer: cyclic of order p with conductor p + 1.
  long long inner_dim = 0;                           // equals p
  std::vector<long long> inner_basis;                // 2..p+2 without p-1
  // Level split of the rank-two quotient step above it.
  std::vector<long long> outer_level_dims;           // (1, 0)
  // Classes of the deepest layer fixed by the quotient step's conjugation.
  long long inner_invariant_dim = 0;                 // 2
  std::vector<long long> inner_invariant_exponents;  // {2, p}
  DimBound bounds;                                   // (1, 3)
  // Classes still fixed under the tame quotient, per layer.
  long long tame_survivors_inner = 0;                // 0
  long long tame_survivors_outer = 0;                // 0
  long long global = 0;                              // 0
  DimensionReport report;                            // exact total 0
};

FermatReport fermat_example(long long p,
                            TameConvention convention = TameConvention::lemma);

// --- p-covers of the line ---------------------------------------------------

// Artin-Schreier curves w^p - w = f(x) with deg f = m prime to p: a single
// wild point where G_0 = ... = G_m is cyclic of order p.
RamificationFiltration pcover_filtration(long long p, long long m);
CoverData pcover_cover(long long p, long long m);

struct PCoverReport {
  long long p = 0;
  long long m = 0;
  long long dim = 0;             // dim H^1 of the local action
  long long master_formula = 0;  // m+1 - ceil((2m+2)/p) + floor((m+1)/p)
  long long case_split = 0;      // the same count via the p-adic digit split
  std::vector<long long> basis;
  long long global = 0;          // m - 2 - floor((m+1)/p)
  DimensionReport report;        // exact total global + dim
};

PCoverReport pcover_example(long long p, long long m);

// --- Lehr-Matignon curves ---------------------------------------------------

// Curves with monodromy filtration jumping at 1 (order p^{2m+1}) and at
// p^m + 1 (order p), with trivial tame quotient.
RamificationFiltration lehr_matignon_filtration(long long p, long long m);
CoverData lehr_matignon_cover(long long p, long long m);

// Computed quantities side by side with the published closed-form values
// they are compared against; the renderer annotates disagreements.
struct LehrMatignonReport {
  long long p = 0;
  long long m = 0;
  long long first_order_invariants = 0;  // computed: 1 + p^{m-1}
  long long invariant_formula = 0;       // published: 1 + p^{m-1}
  long long layer_dim = 0;               // computed elementary-abelian step
  long long layer_formula = 0;           // published: m + 1
  DimBound bounds;                       // computed lower/upper
  long long lower_formula = 0;           // published: m + 1
  long long upper_formula = 0;           // published: 2 + m + p^{m-1}
  long long global = 0;                  // 0
  long long global_formula = 0;          // -1 + ceil(m/p - (2+m)/p^{m+1})
  DimensionReport report;
};

LehrMatignonReport lehr_matignon_example(long long p, long long m);

// --- Single-jump cases of Pries ----------------------------------------------

// Z/p semidirect Z/m with one wild jump at j: r counts the isolated
// elements of E_0 = { e in [1, j] : e = j mod m } (no p-th multiple inside
// E_0), dim is the tame-reduced H^1 dimension, and the global part comes
// from one branch point with orders (m*p, then j copies of p).
RamificationFiltration pries_filtration(long long p, long long j, long long m);
CoverData pries_cover(long long p, long long j, long long m);

struct PriesCase {
  long long p = 0;
  long long j = 0;
  long long m = 0;
  long long r = 0;
  long long dim = 0;
  long long global = 0;
  long long total = 0;
};

PriesCase pries_case(long long p, long long j, long long m);

// One row of the comparison table: our computation next to the published
// values it is checked against.
struct PriesRow {
  PriesCase computed;
  long long published_r = 0;
  long long published_dim = 0;
  long long published_global = 0;
  long long published_total = 0;
};

// The six comparison rows, in publication order.
const std::vector<PriesRow>& pries_table();

}  // namespace defcurve
