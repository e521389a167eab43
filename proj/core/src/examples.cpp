#include "defcurve/examples.hpp"

#include "defcurve/padic.hpp"

#include <stdexcept>
#include <string>

namespace defcurve {

namespace {

long long pow_ll(long long base, long long exp) {
  long long out = 1;
  for (long long i = 0; i < exp; ++i) out *= base;
  return out;
}

void check_example_prime(long long p, const char* who) {
  if (!is_prime(p) || p < 5)
    throw std::invalid_argument(std::string(who) + ": p must be a prime >= 5");
}

// Bounds for the full local action including the tame quotient: the
// tame-surviving classes of the outermost step always lift, and every class
// of the full group restricts into some step's tame-surviving span, so the
// per-step survivor counts bound the dimension from above.
DimBound tame_reduced_bounds(const RamificationFiltration& filt,
                             TameConvention convention) {
  const int steps = quotient_step_count(filt);
  DimBound out;
  for (int lambda = 1; lambda <= steps; ++lambda) {
    const long long conductor = quotient_step_conductor(filt, lambda);
    const long long invariant =
        tame_reduce(conjugation_invariant_step_basis(filt, lambda),
                    filt.tame_order(), conductor, convention)
            .count;
    const long long raw = tame_reduce(quotient_step_basis(filt, lambda),
                                      filt.tame_order(), conductor, convention)
                              .count;
    out.upper_invariant += invariant;
    out.upper_raw += raw;
    if (lambda == steps) out.lower = invariant;
  }
  if (out.lower == out.upper_invariant) {
    out.exact = out.lower;
    out.exact_source = "closed-form";
  }
  return out;
}

}  // namespace

// --- Fermat curves ----------------------------------------------------------

RamificationFiltration fermat_filtration(long long p) {
  check_example_prime(p, "fermat_filtration");
  return RamificationFiltration(p, p * p - 1, {{1, p * p * p}, {p + 1, p}});
}

CoverData fermat_cover(long long p) {
  CoverData cover;
  cover.quotient_genus = 0;
  cover.branch_points.push_back(
      BranchPoint{cover_orders_from_filtration(fermat_filtration(p))});
  cover.branch_points.push_back(BranchPoint{{p * p - p + 1}});
  return cover;
}

FermatReport fermat_example(long long p, TameConvention convention) {
  const RamificationFiltration filt = fermat_filtration(p);
  FermatReport out;
  out.p = p;
  const CohomologyBasis inner = quotient_step_basis(filt, 1);
  out.inner_dim = inner.dimension();
  out.inner_basis = inner.levels.front().exponents;
  out.outer_level_dims = quotient_step_level_dims(filt, 2);
  const CohomologyBasis invariant = conjugation_invariant_step_basis(filt, 1);
  out.inner_invariant_dim = invariant.dimension();
  out.inner_invariant_exponents = invariant.levels.front().exponents;
  out.bounds = local_bounds(filt);
  out.tame_survivors_inner =
      tame_reduce(invariant, filt.tame_order(), quotient_step_conductor(filt, 1),
                  convention)
          .count;
  out.tame_survivors_outer =
      tame_reduce(conjugation_invariant_step_basis(filt, 2), filt.tame_order(),
                  quotient_step_conductor(filt, 2), convention)
          .count;
  out.global = global_contribution(fermat_cover(p));
  out.report =
      total_dimension(out.global, {tame_reduced_bounds(filt, convention)});
  return out;
}

// --- p-covers of the line ---------------------------------------------------

RamificationFiltration pcover_filtration(long long p, long long m) {
  check_example_prime(p, "pcover_filtration");
  if (m < 1 || m % p == 0)
    throw std::invalid_argument(
        "pcover_filtration: m must be positive and prime to p");
  return RamificationFiltration(p, 1, {{m, p}});
}

CoverData pcover_cover(long long p, long long m) {
  CoverData cover;
  cover.quotient_genus = 0;
  cover.branch_points.push_back(
      BranchPoint{cover_orders_from_filtration(pcover_filtration(p, m))});
  return cover;
}

// Digit split of the master count: writing m+1 = a_0 + p*(m+1 div p), the
// difference ceil((2m+2)/p) - floor((m+1)/p) collapses to floor((m+1)/p) +
// delta with delta = 2 when the doubled leading digit passes p and 1
// otherwise; when p divides m+1 only the floor remains.
static long long pcover_case_split(long long p, long long m) {
  const long long mp1 = m + 1;
  if (mp1 % p == 0) return mp1 - mp1 / p;
  const long long delta = 2 * (mp1 % p) > p ? 2 : 1;
  return mp1 - mp1 / p - delta;
}

PCoverReport pcover_example(long long p, long long m) {
  const RamificationFiltration filt = pcover_filtration(p, m);
  PCoverReport out;
  out.p = p;
  out.m = m;
  out.dim = dim_h1_cyclic(p, m, -(m + 1));
  out.master_formula = m + 1 - ceil_div(2 * m + 2, p) + (m + 1) / p;
  out.case_split = pcover_case_split(p, m);
  out.basis = basis_h1_cyclic(p, m, -(m + 1));
  out.global = global_contribution(pcover_cover(p, m));
  out.report = total_dimension(
      out.global, {tame_reduced_bounds(filt, TameConvention::lemma)});
  return out;
}

// --- Lehr-Matignon curves ---------------------------------------------------

RamificationFiltration lehr_matignon_filtration(long long p, long long m) {
  check_example_prime(p, "lehr_matignon_filtration");
  if (m < 1)
    throw std::invalid_argument("lehr_matignon_filtration: m must be >= 1");
  return RamificationFiltration(
      p, 1, {{1, pow_ll(p, 2 * m + 1)}, {pow_ll(p, m) + 1, p}});
}

CoverData lehr_matignon_cover(long long p, long long m) {
  CoverData cover;
  cover.quotient_genus = 0;
  cover.branch_points.push_back(BranchPoint{
      cover_orders_from_filtration(lehr_matignon_filtration(p, m))});
  return cover;
}

LehrMatignonReport lehr_matignon_example(long long p, long long m) {
  const RamificationFiltration filt = lehr_matignon_filtration(p, m);
  LehrMatignonReport out;
  out.p = p;
  out.m = m;
  out.first_order_invariants =
      first_order_invariant_step_basis(filt, 1).dimension();
  out.invariant_formula = 1 + pow_ll(p, m - 1);
  out.layer_dim = dim_h1_quotient_step(filt, 2);
  out.layer_formula = m + 1;
  out.bounds = local_bounds(filt);
  out.lower_formula = m + 1;
  out.upper_formula = 2 + m + pow_ll(p, m - 1);
  out.global = global_contribution(lehr_matignon_cover(p, m));
  // ceil(m/p - (2+m)/p^{m+1}) evaluated over the common denominator p^{m+1}.
  out.global_formula =
      -1 + ceil_div(m * pow_ll(p, m) - (2 + m), pow_ll(p, m + 1));
  out.report = total_dimension(out.global, {out.bounds});
  return out;
}

// --- Single-jump cases of Pries ----------------------------------------------

RamificationFiltration pries_filtration(long long p, long long j, long long m) {
  check_example_prime(p, "pries_filtration");
  if (m < 1 || m % p == 0)
    throw std::invalid_argument(
        "pries_filtration: m must be positive and prime to p");
  return RamificationFiltration(p, m, {{j, p}});
}

CoverData pries_cover(long long p, long long j, long long m) {
  CoverData cover;
  cover.quotient_genus = 0;
  cover.branch_points.push_back(
      BranchPoint{cover_orders_from_filtration(pries_filtration(p, j, m))});
  return cover;
}

PriesCase pries_case(long long p, long long j, long long m) {
  PriesCase out;
  out.p = p;
  out.j = j;
  out.m = m;
  out.r = pries_r(p, j, m);
  out.dim = pries_dimension(p, j, m);
  out.global = global_contribution(pries_cover(p, j, m));
  out.total = out.global + out.dim;
  return out;
}

const std::vector<PriesRow>& pries_table() {
  static const std::vector<PriesRow> rows = [] {
    struct Published {
      long long p, j, m, r, dim, global, total;
    };
    constexpr Published published[] = {
        {13, 19, 6, 3, 3, 1, 4},    {13, 35, 6, 5, 4, 9, 13},
        {13, 51, 6, 8, 8, 6, 14},   {13, 36, 3, 12, 11, 10, 21},
        {7, 81, 3, 24, 23, 22, 45}, {7, 90, 3, 26, 26, 24, 50},
    };
    std::vector<PriesRow> out;
    for (const auto& row : published)
      out.push_back({pries_case(row.p, row.j, row.m), row.r, row.dim,
                     row.global, row.total});
    return out;
  }();
  return rows;
}

}  // namespace defcurve
