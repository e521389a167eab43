#include "defcurve/filtration.hpp"

#include <sstream>
#include <stdexcept>

namespace defcurve {

namespace {

bool is_power_of(long long value, long long base) {
  if (value < base) return false;
  while (value % base == 0) value /= base;
  return value == 1;
}

}  // namespace

RamificationFiltration::RamificationFiltration(long long p, long long tame_order,
                                               std::vector<RamificationJump> jumps)
    : p_(p), tame_order_(tame_order), jumps_(std::move(jumps)) {
  if (!is_prime(p_) || p_ < 5)
    throw std::invalid_argument("RamificationFiltration: p must be a prime >= 5");
  if (tame_order_ <= 0 || tame_order_ % p_ == 0)
    throw std::invalid_argument(
        "RamificationFiltration: tame order must be positive and prime to p");
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (jumps_[i].t <= 0)
      throw std::invalid_argument("RamificationFiltration: jump positions must be >= 1");
    if (!is_power_of(jumps_[i].order, p_))
      throw std::invalid_argument(
          "RamificationFiltration: jump orders must be positive powers of p");
    if (i > 0) {
      if (jumps_[i].t <= jumps_[i - 1].t)
        throw std::invalid_argument(
            "RamificationFiltration: jump positions must be strictly increasing");
      if (jumps_[i].order >= jumps_[i - 1].order ||
          jumps_[i - 1].order % jumps_[i].order != 0)
        throw std::invalid_argument(
            "RamificationFiltration: jump orders must strictly divide downward");
    }
  }
}

std::optional<std::string> congruence_warning(const RamificationFiltration& filt) {
  const auto& jumps = filt.jumps();
  for (std::size_t i = 1; i < jumps.size(); ++i) {
    if ((jumps[i].t - jumps[0].t) % filt.p() != 0) {
      std::ostringstream out;
      out << "warning: jump positions " << jumps[0].t << " and " << jumps[i].t
          << " are not congruent mod " << filt.p()
          << "; no Galois extension realizes this filtration";
      return out.str();
    }
  }
  return std::nullopt;
}

RamificationFiltration filtration_from_json(const nlohmann::json& j) {
  std::vector<RamificationJump> jumps;
  for (const auto& entry : j.at("jumps")) {
    jumps.push_back({entry.at("t").get<long long>(),
                     entry.at("order").get<long long>()});
  }
  return RamificationFiltration(j.at("p").get<long long>(),
                                j.at("tame_order").get<long long>(),
                                std::move(jumps));
}

nlohmann::json filtration_to_json(const RamificationFiltration& filt) {
  nlohmann::json out;
  out["p"] = filt.p();
  out["tame_order"] = filt.tame_order();
  out["jumps"] = nlohmann::json::array();
  for (const auto& jump : filt.jumps()) {
    out["jumps"].push_back({{"t", jump.t}, {"order", jump.order}});
  }
  return out;
}

namespace {

std::pair<long long, long long> single_jump(const RamificationFiltration& filt,
                                            const char* who) {
  if (filt.jumps().size() != 1)
    throw std::invalid_argument(std::string(who) +
                                ": filtration must have exactly one wild jump");
  return {filt.jumps()[0].t, filt.jumps()[0].order};
}

}  // namespace

Rational herbrand_phi(const RamificationFiltration& filt, const Rational& u) {
  auto [n, H] = single_jump(filt, "herbrand_phi");
  if (u < Rational(0)) throw std::invalid_argument("herbrand_phi: u must be >= 0");
  if (u <= Rational(n)) return u;
  return Rational(n) + (u - Rational(n)) / Rational(H);
}

Rational herbrand_psi(const RamificationFiltration& filt, const Rational& u) {
  auto [n, H] = single_jump(filt, "herbrand_psi");
  if (u < Rational(0)) throw std::invalid_argument("herbrand_psi: u must be >= 0");
  if (u <= Rational(n)) return u;
  return Rational(n) + (u - Rational(n)) * Rational(H);
}

MuSequence mu_sequence(const RamificationFiltration& filt) {
  MuSequence out;
  out.values.push_back(0);
  const auto& jumps = filt.jumps();
  // Walk the jumps from the deepest layer (largest t, smallest order) outward.
  long long inner_order = 1;
  for (std::size_t k = jumps.size(); k-- > 0;) {
    const long long t = jumps[k].t;
    const long long q = jumps[k].order / inner_order;
    const long long prev = out.values.back();
    out.values.push_back(t + 1 - floor_div(-prev + t + 1, q));
    out.quotient_orders.push_back(q);
    inner_order = jumps[k].order;
  }
  return out;
}

long long invariant_ideal_exponent(long long p, long long n, long long s,
                                   long long a) {
  if (!is_prime(p) || p < 5)
    throw std::invalid_argument("invariant_ideal_exponent: p must be a prime >= 5");
  if (n <= 0 || n % p == 0)
    throw std::invalid_argument(
        "invariant_ideal_exponent: conductor must be positive and prime to p");
  if (s < 0) throw std::invalid_argument("invariant_ideal_exponent: s must be >= 0");
  long long ps = 1;
  for (long long i = 0; i < s; ++i) ps *= p;
  return n + 1 - floor_div(n + 1 - a, ps);
}

}  // namespace defcurve
