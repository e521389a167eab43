#include "defcurve/cohomology.hpp"

#include "defcurve/algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace defcurve {

namespace {

void check_cyclic_args(long long p, long long n, const char* who) {
  if (!is_prime(p) || p < 5)
    throw std::invalid_argument(std::string(who) + ": p must be a prime >= 5");
  if (n <= 0 || n % p == 0)
    throw std::invalid_argument(std::string(who) +
                                ": conductor must be positive and prime to p");
}

long long positive_mod(long long x, long long m) { return ((x % m) + m) % m; }

}  // namespace

long long dim_h1_cyclic(long long p, long long n, long long a) {
  check_cyclic_args(p, n, "dim_h1_cyclic");
  return floor_div((n + 1) * (p - 1) + a, p) - ceil_div(a, p);
}

long long basis_lower_bound(long long p, long long n, long long a) {
  check_cyclic_args(p, n, "basis_lower_bound");
  return a % p == 0 ? -a - n : -a - n + 1;
}

std::vector<long long> basis_h1_cyclic(long long p, long long n, long long a) {
  check_cyclic_args(p, n, "basis_h1_cyclic");
  std::vector<long long> out;
  const long long b = basis_lower_bound(p, n, a);
  for (long long i = b; i <= -a; ++i) {
    if (binom_mod_p(PAdicRational(i, n, p), p - 1) == 0) out.push_back(i);
  }
  return out;
}

long long CohomologyBasis::dimension() const {
  long long total = 0;
  for (const BasisLevel& level : levels)
    total += static_cast<long long>(level.exponents.size());
  return total;
}

std::vector<long long> elem_abelian_twists(long long p, long long s, long long a) {
  if (s < 1) throw std::invalid_argument("elem_abelian_twists: s must be >= 1");
  std::vector<long long> twists{a};
  for (long long i = 1; i < s; ++i) twists.push_back(ceil_div(twists.back(), p));
  return twists;
}

std::vector<long long> elem_abelian_level_dims(long long p, long long n,
                                               long long s, long long a) {
  check_cyclic_args(p, n, "elem_abelian_level_dims");
  std::vector<long long> dims;
  for (long long twist : elem_abelian_twists(p, s, a))
    dims.push_back(dim_h1_cyclic(p, n, twist));
  return dims;
}

long long dim_h1_elem_abelian(long long p, long long n, long long s, long long a) {
  const std::vector<long long> dims = elem_abelian_level_dims(p, n, s, a);
  return std::accumulate(dims.begin(), dims.end(), 0LL);
}

CohomologyBasis basis_h1_elem_abelian(long long p, long long n, long long s,
                                      long long a) {
  check_cyclic_args(p, n, "basis_h1_elem_abelian");
  CohomologyBasis basis;
  basis.p = p;
  basis.conductor = n;
  const std::vector<long long> twists = elem_abelian_twists(p, s, a);
  for (std::size_t i = 0; i < twists.size(); ++i) {
    BasisLevel level;
    level.level = static_cast<int>(i + 1);
    level.uniformizer = "pi_" + std::to_string(i + 1);
    level.module_exponent = twists[i];
    level.lower_bound = basis_lower_bound(p, n, twists[i]);
    level.exponents = basis_h1_cyclic(p, n, twists[i]);
    basis.levels.push_back(std::move(level));
  }
  return basis;
}

// --- Quotient steps ---------------------------------------------------------

namespace {

// Jump at descending position lambda (lambda = 1 the largest t).
const RamificationJump& jump_at_step(const RamificationFiltration& filt,
                                     int lambda) {
  const auto& jumps = filt.jumps();
  if (lambda < 1 || static_cast<std::size_t>(lambda) > jumps.size())
    throw std::invalid_argument("quotient step index out of range");
  return jumps[jumps.size() - static_cast<std::size_t>(lambda)];
}

long long log_p(long long value, long long p) {
  long long s = 0;
  while (value > 1) {
    value /= p;
    ++s;
  }
  return s;
}

}  // namespace

int quotient_step_count(const RamificationFiltration& filt) {
  return static_cast<int>(filt.jumps().size());
}

long long quotient_step_conductor(const RamificationFiltration& filt, int lambda) {
  return jump_at_step(filt, lambda).t;
}

long long quotient_step_rank(const RamificationFiltration& filt, int lambda) {
  const long long order = jump_at_step(filt, lambda).order;
  const long long inner = lambda == 1 ? 1 : jump_at_step(filt, lambda - 1).order;
  return log_p(order / inner, filt.p());
}

long long quotient_step_twist(const RamificationFiltration& filt, int lambda) {
  const long long t = quotient_step_conductor(filt, lambda);
  const MuSequence mu = mu_sequence(filt);
  return -t - 1 + mu.values[static_cast<std::size_t>(lambda - 1)];
}

std::vector<long long> quotient_step_level_dims(const RamificationFiltration& filt,
                                                int lambda) {
  return elem_abelian_level_dims(filt.p(), quotient_step_conductor(filt, lambda),
                                 quotient_step_rank(filt, lambda),
                                 quotient_step_twist(filt, lambda));
}

long long dim_h1_quotient_step(const RamificationFiltration& filt, int lambda) {
  const std::vector<long long> dims = quotient_step_level_dims(filt, lambda);
  return std::accumulate(dims.begin(), dims.end(), 0LL);
}

CohomologyBasis quotient_step_basis(const RamificationFiltration& filt, int lambda) {
  return basis_h1_elem_abelian(filt.p(), quotient_step_conductor(filt, lambda),
                               quotient_step_rank(filt, lambda),
                               quotient_step_twist(filt, lambda));
}

namespace {

// Shared survivor filter: keep class i of a conductor-n level when
// binom(i/n, nu) = 0 mod p for all nu in [1, max_nu] with i - nu*D >= b.
CohomologyBasis reduced_step_basis(const RamificationFiltration& filt, int lambda,
                                   bool first_order_only) {
  CohomologyBasis basis = quotient_step_basis(filt, lambda);
  if (lambda == quotient_step_count(filt)) return basis;  // outermost: no outer layer
  const long long D = quotient_step_conductor(filt, lambda + 1);
  const long long p = filt.p();
  const long long n = basis.conductor;
  for (BasisLevel& level : basis.levels) {
    std::vector<long long> kept;
    for (long long i : level.exponents) {
      bool survives = true;
      const long long max_nu = floor_div(i - level.lower_bound, D);
      for (long long nu = 1; nu <= max_nu; ++nu) {
        if (binom_mod_p(PAdicRational(i, n, p), nu) != 0) {
          survives = false;
          break;
        }
        if (first_order_only) break;
      }
      if (survives) kept.push_back(i);
    }
    level.exponents = std::move(kept);
  }
  return basis;
}

}  // namespace

CohomologyBasis conjugation_invariant_step_basis(const RamificationFiltration& filt,
                                                 int lambda) {
  return reduced_step_basis(filt, lambda, false);
}

CohomologyBasis first_order_invariant_step_basis(const RamificationFiltration& filt,
                                                 int lambda) {
  return reduced_step_basis(filt, lambda, true);
}

DimBound local_bounds(const RamificationFiltration& filt) {
  DimBound bound;
  const int steps = quotient_step_count(filt);
  if (steps == 0) {
    bound.exact = 0;
    bound.exact_source = "closed-form";
    return bound;
  }
  bool all_order_p = true;
  for (int lambda = 1; lambda <= steps; ++lambda) {
    const long long dim = dim_h1_quotient_step(filt, lambda);
    bound.upper_raw += dim;
    if (lambda == steps) {
      bound.lower = dim;
      bound.upper_invariant += dim;
    } else {
      bound.upper_invariant +=
          conjugation_invariant_step_basis(filt, lambda).dimension();
    }
    if (quotient_step_rank(filt, lambda) != 1) all_order_p = false;
  }
  if (all_order_p) {
    bound.exact = bound.upper_invariant;
    bound.exact_source = "closed-form";
  }
  return bound;
}

// --- Tame reduction ----------------------------------------------------------

TameConvention tame_convention_from_string(const std::string& name) {
  if (name == "lemma") return TameConvention::lemma;
  if (name == "derived") return TameConvention::derived;
  throw std::invalid_argument("unknown tame weight convention: " + name);
}

std::string to_string(TameConvention convention) {
  return convention == TameConvention::lemma ? "lemma" : "derived";
}

TameReduction tame_reduce(const CohomologyBasis& basis, long long n0, long long j,
                          TameConvention convention) {
  if (n0 < 1) throw std::invalid_argument("tame_reduce: tame order must be >= 1");
  TameReduction result;
  result.surviving = basis;
  long long p_power = 1;  // p^(lambda-1) mod n0
  for (BasisLevel& level : result.surviving.levels) {
    std::vector<long long> kept;
    for (long long mu : level.exponents) {
      const long long weight = convention == TameConvention::lemma
                                   ? positive_mod(-p_power * mu + j, n0)
                                   : positive_mod(mu, n0);
      if (weight == 0) kept.push_back(mu);
    }
    level.exponents = std::move(kept);
    result.count += static_cast<long long>(level.exponents.size());
    p_power = positive_mod(p_power * basis.p, n0);
  }
  return result;
}

// --- Semidirect products ------------------------------------------------------

namespace {

long long multiplicative_order(long long base, long long mod) {
  long long value = positive_mod(base, mod);
  long long order = 1;
  while (value != 1 % mod) {
    value = (value * base) % mod;
    ++order;
  }
  return order;
}

}  // namespace

long long semidirect_delta(long long p, long long n0, long long j, long long s,
                           const std::vector<std::vector<long long>>& weights,
                           const std::vector<long long>& a_coeffs) {
  if (!is_prime(p) || p < 5)
    throw std::invalid_argument("semidirect_delta: p must be a prime >= 5");
  if (n0 < 1 || std::gcd(n0, p) != 1)
    throw std::invalid_argument("semidirect_delta: tame order must be prime to p");
  // Degree of the subfield generated by zeta^j, where zeta has order n0.
  const long long m = n0 / std::gcd(n0, positive_mod(j, n0) == 0 ? n0 : j);
  const long long d = m == 1 ? 1 : multiplicative_order(p, m);
  if (s % d != 0)
    throw std::invalid_argument(
        "semidirect_delta: block degree does not divide the space dimension");
  const long long blocks = s / d;
  if (static_cast<long long>(weights.size()) != blocks)
    throw std::invalid_argument("semidirect_delta: one weight row per block required");
  for (const auto& row : weights)
    if (static_cast<long long>(row.size()) != d)
      throw std::invalid_argument("semidirect_delta: each weight row needs d entries");
  if (static_cast<long long>(a_coeffs.size()) != d)
    throw std::invalid_argument("semidirect_delta: d companion coefficients required");

  // Work in a field containing zeta itself.
  const long long field_degree = n0 == 1 ? 1 : multiplicative_order(p, n0);
  FiniteField F(p, field_degree);
  const FFElem zeta = primitive_root_of_unity(F, n0);

  std::vector<FFElem> poly_coeffs;
  for (long long c : a_coeffs) poly_coeffs.push_back(F.from_int(c));
  poly_coeffs.push_back(F.one());
  const FieldMatrix A = companion_matrix(FieldPolynomial(F, poly_coeffs));

  long long total = 0;
  for (const auto& row : weights) {
    // M = A * diag(zeta^{-c(nu)}); delta = multiplicity of eigenvalue 1.
    FieldMatrix M = A;
    for (std::size_t col = 0; col < M.cols(); ++col) {
      const FFElem scale = F.pow(zeta, -row[col]);
      for (std::size_t r = 0; r < M.rows(); ++r)
        M.at(r, col) = F.mul(M.at(r, col), scale);
    }
    total += root_one_multiplicity(char_poly(M));
  }
  return total;
}

// --- Single-jump comparison counts ---------------------------------------------

long long pries_dimension(long long p, long long j, long long m) {
  check_cyclic_args(p, j, "pries_dimension");
  if (m <= 0 || m % p == 0)
    throw std::invalid_argument("pries_dimension: m must be positive and prime to p");
  const long long b = (j + 1) % p == 0 ? 1 : 2;
  long long count = 0;
  for (long long i = b; i <= j + 1; ++i) {
    if (i % m != 0) continue;
    if (binom_mod_p(PAdicRational(i, j, p), p - 1) == 0) ++count;
  }
  return count;
}

long long pries_r(long long p, long long j, long long m) {
  check_cyclic_args(p, j, "pries_r");
  if (m <= 0 || m % p == 0)
    throw std::invalid_argument("pries_r: m must be positive and prime to p");
  auto in_e0 = [&](long long e) {
    return e >= 1 && e <= j && positive_mod(e - j, m) == 0;
  };
  long long count = 0;
  for (long long e = 1; e <= j; ++e) {
    if (!in_e0(e)) continue;
    bool isolated = true;
    for (long long pe = p * e; pe <= j; pe *= p) {
      if (in_e0(pe)) {
        isolated = false;
        break;
      }
    }
    if (isolated) ++count;
  }
  return count;
}

}  // namespace defcurve
