#pragma once
// Ramification filtration data in lower numbering, Herbrand phi/psi for
// single-jump filtrations, the mu-recursion for invariant tangent modules,
// and invariant-ideal generator exponents.

#include "defcurve/padic.hpp"

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace defcurve {

using Rational = boost::rational<long long>;

// One break of the filtration: G_t has the given order (a power of p) and
// G_{t+1} is strictly smaller.
struct RamificationJump {
  long long t;
  long long order;
};

// The wild part of a ramification filtration in lower numbering together
// with the tame quotient order.  Jumps are stored with strictly increasing
// positions and strictly decreasing orders, each dividing the previous.
class RamificationFiltration {
 public:
  RamificationFiltration(long long p, long long tame_order,
                         std::vector<RamificationJump> jumps);

  long long p() const { return p_; }
  long long tame_order() const { return tame_order_; }
  const std::vector<RamificationJump>& jumps() const { return jumps_; }
  // |G_1|, the order of the full wild part (1 for an unramified-wild group).
  long long wild_order() const {
    return jumps_.empty() ? 1 : jumps_.front().order;
  }

 private:
  long long p_;
  long long tame_order_;
  std::vector<RamificationJump> jumps_;
};

// For genuine Galois filtrations all jump positions are congruent mod p.
// Returns a human-readable warning when the given data violates that, so
// callers can probe hypothetical data while being told it is not realizable.
std::optional<std::string> congruence_warning(const RamificationFiltration& filt);

RamificationFiltration filtration_from_json(const nlohmann::json& j);
nlohmann::json filtration_to_json(const RamificationFiltration& filt);

// Herbrand transition functions for a filtration with a single wild jump at
// n of order H: phi(u) = u below n and n + (u-n)/H above; psi is the inverse.
// Both fix [0, n], are increasing, continuous, and mutually inverse.
Rational herbrand_phi(const RamificationFiltration& filt, const Rational& u);
Rational herbrand_psi(const RamificationFiltration& filt, const Rational& u);

// Output of the mu-recursion, deepest layer first: values[0] = 0 and
// values[i] = t_i + 1 - floor((-values[i-1] + t_i + 1) / q_i) where t_i runs
// over the jumps from the largest down and q_i = |G_{t_i}| / |G_{t_{i-1}}|
// (with |G_{t_0}| := 1) is the order of the i-th quotient step.
struct MuSequence {
  std::vector<long long> values;           // mu_0 .. mu_f
  std::vector<long long> quotient_orders;  // q_1 .. q_f
};

MuSequence mu_sequence(const RamificationFiltration& filt);

// Generator exponent n+1-floor((n+1-a)/p^s) of the fixed submodule of
// t^a k[[t]] d/dt under a group of order p^s acting with conductor n.
long long invariant_ideal_exponent(long long p, long long n, long long s,
                                   long long a);

}  // namespace defcurve
