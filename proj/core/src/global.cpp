#include "defcurve/global.hpp"

#include "defcurve/padic.hpp"

#include <sstream>
#include <stdexcept>

namespace defcurve {

void validate_cover(const CoverData& cover) {
  if (cover.quotient_genus < 0) {
    throw std::invalid_argument("quotient genus must be nonnegative");
  }
  for (std::size_t k = 0; k < cover.branch_points.size(); ++k) {
    const std::vector<long long>& orders = cover.branch_points[k].orders;
    if (orders.empty()) {
      std::ostringstream msg;
      msg << "branch point " << k + 1 << ": order sequence is empty";
      throw std::invalid_argument(msg.str());
    }
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (orders[i] < 2) {
        std::ostringstream msg;
        msg << "branch point " << k + 1 << ": order " << orders[i]
            << " is below 2; drop trivial groups from the sequence";
        throw std::invalid_argument(msg.str());
      }
      if (i > 0 && orders[i] > orders[i - 1]) {
        std::ostringstream msg;
        msg << "branch point " << k + 1 << ": orders " << orders[i - 1]
            << " and " << orders[i] << " increase; higher ramification groups shrink";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

std::vector<std::string> cover_warnings(const CoverData& cover) {
  validate_cover(cover);
  std::vector<std::string> warnings;
  for (std::size_t k = 0; k < cover.branch_points.size(); ++k) {
    const std::vector<long long>& orders = cover.branch_points[k].orders;
    for (std::size_t i = 1; i < orders.size(); ++i) {
      if (orders[i - 1] % orders[i] != 0) {
        std::ostringstream msg;
        msg << "warning: branch point " << k + 1 << ": order " << orders[i]
            << " does not divide " << orders[i - 1]
            << "; higher ramification groups are nested subgroups";
        warnings.push_back(msg.str());
      }
    }
  }
  const long long value = global_contribution(cover);
  if (value < 0) {
    std::ostringstream msg;
    msg << "warning: global contribution " << value
        << " is negative: not a dimension - check cover data";
    warnings.push_back(msg.str());
  }
  return warnings;
}

long long global_contribution(const CoverData& cover) {
  validate_cover(cover);
  long long total = 3 * cover.quotient_genus - 3;
  for (const BranchPoint& point : cover.branch_points) {
    long long ramification = 0;
    for (long long e : point.orders) ramification += e - 1;
    total += ceil_div(ramification, point.orders.front());
  }
  return total;
}

CoverData cover_from_json(const nlohmann::json& j) {
  CoverData cover;
  cover.quotient_genus = j.at("genus_quotient").get<long long>();
  for (const nlohmann::json& point : j.at("branch_points")) {
    BranchPoint branch;
    for (const nlohmann::json& e : point.at("orders")) {
      branch.orders.push_back(e.get<long long>());
    }
    cover.branch_points.push_back(std::move(branch));
  }
  validate_cover(cover);
  return cover;
}

nlohmann::json cover_to_json(const CoverData& cover) {
  nlohmann::json points = nlohmann::json::array();
  for (const BranchPoint& point : cover.branch_points) {
    points.push_back({{"orders", point.orders}});
  }
  return {{"genus_quotient", cover.quotient_genus}, {"branch_points", points}};
}

std::vector<long long> cover_orders_from_filtration(const RamificationFiltration& filt) {
  std::vector<long long> orders;
  orders.push_back(filt.tame_order() * filt.wild_order());
  const std::vector<RamificationJump>& jumps = filt.jumps();
  if (jumps.empty()) return orders;
  const long long last = jumps.back().t;
  for (long long i = 1; i <= last; ++i) {
    for (const RamificationJump& jump : jumps) {
      if (jump.t >= i) {
        orders.push_back(jump.order);
        break;
      }
    }
  }
  return orders;
}

DimensionReport total_dimension(long long global, const std::vector<DimBound>& locals) {
  DimensionReport report;
  report.global = global;
  report.locals = locals;
  report.total_lower = global;
  report.total_upper = global;
  for (std::size_t i = 0; i < locals.size(); ++i) {
    const DimBound& bound = locals[i];
    report.total_lower += bound.exact.value_or(bound.lower);
    report.total_upper += bound.exact.value_or(bound.upper_invariant);
    std::ostringstream note;
    note << "point " << i + 1 << ": ";
    if (bound.exact) {
      note << "exact " << *bound.exact;
      if (!bound.exact_source.empty()) note << " (" << bound.exact_source << ")";
    } else {
      note << "bounds [" << bound.lower << ", " << bound.upper_invariant << "]";
    }
    report.notes.push_back(note.str());
  }
  return report;
}

}  // namespace defcurve
