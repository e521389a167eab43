// Command-line surface for the library: closed-form dimensions, local
// bounds and global contributions from JSON inputs, brute-force
// verification sweeps, and the built-in reference pipelines, rendered as
// aligned text, JSON, or CSV.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

#include "CLI11.hpp"

#include "defcurve/algebra.hpp"
#include "defcurve/cohomology.hpp"
#include "defcurve/examples.hpp"
#include "defcurve/filtration.hpp"
#include "defcurve/global.hpp"
#include "defcurve/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace defcurve;
using OJson = nlohmann::ordered_json;

namespace {

enum class Format { table, json, csv };

Format format_from_string(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  return Format::csv;
}

// Shared flags living on the root app; subcommands fall through to them.
struct CommonOpts {
  std::string format = "table";
  long long precision = 0;
  std::string convention = "lemma";
  std::optional<long long> seed;

  Format fmt() const { return format_from_string(format); }
};

void emit_json(const OJson& report) { std::cout << report.dump(2) << "\n"; }

std::string join(const std::vector<long long>& values, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << sep;
    out << values[i];
  }
  return out.str();
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& warning : warnings)
    std::cerr << "warning: " << warning << "\n";
}

OJson bound_to_json(const DimBound& bound) {
  OJson out;
  out["lower"] = bound.lower;
  out["upper_invariant"] = bound.upper_invariant;
  out["upper_raw"] = bound.upper_raw;
  if (bound.exact) {
    out["exact"] = *bound.exact;
    out["exact_source"] = bound.exact_source;
  } else {
    out["exact"] = nullptr;
  }
  return out;
}

OJson report_to_json(const DimensionReport& report) {
  OJson out;
  out["global"] = report.global;
  out["locals"] = OJson::array();
  for (const DimBound& bound : report.locals)
    out["locals"].push_back(bound_to_json(bound));
  out["total_lower"] = report.total_lower;
  out["total_upper"] = report.total_upper;
  out["exact"] = report.is_exact();
  out["notes"] = report.notes;
  return out;
}

std::string interval_text(const DimensionReport& report) {
  if (report.is_exact()) return std::to_string(report.total_lower);
  return "[" + std::to_string(report.total_lower) + ", " +
         std::to_string(report.total_upper) + "]";
}

// --- cyclic ------------------------------------------------------------------

struct CyclicOpts {
  long long p = 0;
  long long n = 0;
  long long a = 0;
  bool basis = false;
};

int run_cyclic(const CyclicOpts& opts, const CommonOpts& common) {
  const long long dim = dim_h1_cyclic(opts.p, opts.n, opts.a);
  const std::vector<long long> basis =
      opts.basis ? basis_h1_cyclic(opts.p, opts.n, opts.a)
                 : std::vector<long long>{};
  switch (common.fmt()) {
    case Format::json: {
      OJson report;
      report["command"] = "cyclic";
      report["p"] = opts.p;
      report["n"] = opts.n;
      report["a"] = opts.a;
      report["dim"] = dim;
      if (opts.basis) report["basis"] = basis;
      emit_json(report);
      break;
    }
    case Format::csv:
      std::cout << "p,n,a,dim" << (opts.basis ? ",basis" : "") << "\n"
                << opts.p << "," << opts.n << "," << opts.a << "," << dim;
      if (opts.basis) std::cout << "," << join(basis, ";");
      std::cout << "\n";
      break;
    case Format::table:
      std::cout << "p: " << opts.p << "\nn: " << opts.n << "\na: " << opts.a
                << "\ndim: " << dim << "\n";
      if (opts.basis) std::cout << "basis: " << join(basis, " ") << "\n";
      break;
  }
  return 0;
}

// --- local-bounds ------------------------------------------------------------

int run_local_bounds(const std::string& file, const CommonOpts& common) {
  const RamificationFiltration filt = filtration_from_json(load_json_file(file));
  if (const auto warning = congruence_warning(filt))
    std::cerr << "warning: " << *warning << "\n";
  const DimBound bound = local_bounds(filt);
  switch (common.fmt()) {
    case Format::json: {
      OJson report;
      report["command"] = "local-bounds";
      report["filtration"] = OJson::parse(filtration_to_json(filt).dump());
      report["bounds"] = bound_to_json(bound);
      emit_json(report);
      break;
    }
    case Format::csv:
      std::cout << "lower,upper_invariant,upper_raw,exact\n"
                << bound.lower << "," << bound.upper_invariant << ","
                << bound.upper_raw << ","
                << (bound.exact ? std::to_string(*bound.exact) : "") << "\n";
      break;
    case Format::table:
      std::cout << "bounds: (" << bound.lower << ", " << bound.upper_invariant
                << ")\n"
                << "lower: " << bound.lower << "\n"
                << "upper (invariant): " << bound.upper_invariant << "\n"
                << "upper (raw): " << bound.upper_raw << "\n";
      if (bound.exact)
        std::cout << "exact: " << *bound.exact << " [" << bound.exact_source
                  << "]\n";
      break;
  }
  return 0;
}

// --- global ------------------------------------------------------------------

int run_global(const std::string& file, const CommonOpts& common) {
  const CoverData cover = cover_from_json(load_json_file(file));
  validate_cover(cover);
  const std::vector<std::string> warnings = cover_warnings(cover);
  print_warnings(warnings);
  const long long value = global_contribution(cover);
  switch (common.fmt()) {
    case Format::json: {
      OJson report;
      report["command"] = "global";
      report["cover"] = OJson::parse(cover_to_json(cover).dump());
      report["global"] = value;
      report["warnings"] = warnings;
      emit_json(report);
      break;
    }
    case Format::csv:
      std::cout << "global\n" << value << "\n";
      break;
    case Format::table:
      std::cout << "global: " << value << "\n";
      break;
  }
  return 0;
}

// --- total -------------------------------------------------------------------

int run_total(const std::vector<std::string>& filtration_files,
              const std::string& cover_file, const CommonOpts& common) {
  const CoverData cover = cover_from_json(load_json_file(cover_file));
  validate_cover(cover);
  print_warnings(cover_warnings(cover));
  std::vector<DimBound> locals;
  for (const std::string& file : filtration_files) {
    const RamificationFiltration filt =
        filtration_from_json(load_json_file(file));
    if (const auto warning = congruence_warning(filt))
      std::cerr << "warning: " << file << ": " << *warning << "\n";
    locals.push_back(local_bounds(filt));
  }
  const DimensionReport report =
      total_dimension(global_contribution(cover), locals);
  switch (common.fmt()) {
    case Format::json: {
      OJson out;
      out["command"] = "total";
      out["report"] = report_to_json(report);
      emit_json(out);
      break;
    }
    case Format::csv:
      std::cout << "global,total_lower,total_upper,exact\n"
                << report.global << "," << report.total_lower << ","
                << report.total_upper << "," << (report.is_exact() ? 1 : 0)
                << "\n";
      break;
    case Format::table:
      std::cout << "global: " << report.global << "\n";
      for (std::size_t i = 0; i < report.locals.size(); ++i) {
        const DimBound& bound = report.locals[i];
        std::cout << "local " << i + 1 << ": (" << bound.lower << ", "
                  << bound.upper_invariant << ")";
        if (bound.exact)
          std::cout << " exact " << *bound.exact << " [" << bound.exact_source
                    << "]";
        std::cout << "\n";
      }
      std::cout << "total: " << interval_text(report) << "\n";
      for (const std::string& note : report.notes)
        std::cout << "note: " << note << "\n";
      break;
  }
  return 0;
}

// --- example -----------------------------------------------------------------

struct ExampleOpts {
  std::string name;
  long long p = 0;
  long long j = 0;
  long long m = 0;
  bool has_p = false;
  bool has_j = false;
  bool has_m = false;
};

void require_param(bool present, const std::string& name, const char* flag) {
  if (!present)
    throw std::invalid_argument("example " + name + ": " + flag +
                                " is required");
}

int run_example_fermat(const ExampleOpts& opts, const CommonOpts& common) {
  const FermatReport report =
      fermat_example(opts.p, tame_convention_from_string(common.convention));
  switch (common.fmt()) {
    case Format::json: {
      OJson out;
      out["command"] = "example";
      out["name"] = "fermat";
      out["p"] = report.p;
      out["inner_dim"] = report.inner_dim;
      out["inner_basis"] = report.inner_basis;
      out["outer_level_dims"] = report.outer_level_dims;
      out["inner_invariant_dim"] = report.inner_invariant_dim;
      out["inner_invariant_exponents"] = report.inner_invariant_exponents;
      out["bounds"] = bound_to_json(report.bounds);
      out["tame_survivors_inner"] = report.tame_survivors_inner;
      out["tame_survivors_outer"] = report.tame_survivors_outer;
      out["global"] = report.global;
      out["report"] = report_to_json(report.report);
      emit_json(out);
      break;
    }
    case Format::csv:
      std::cout << "p,inner_dim,inner_invariant_dim,lower,upper_invariant,"
                   "tame_inner,tame_outer,global,total_lower,total_upper\n"
                << report.p << "," << report.inner_dim << ","
                << report.inner_invariant_dim << "," << report.bounds.lower
                << "," << report.bounds.upper_invariant << ","
                << report.tame_survivors_inner << ","
                << report.tame_survivors_outer << "," << report.global << ","
                << report.report.total_lower << "," << report.report.total_upper
                << "\n";
      break;
    case Format::table:
      std::cout << "example: fermat\np: " << report.p << "\n"
                << "deepest layer dim: " << report.inner_dim << "\n"
                << "deepest layer basis: " << join(report.inner_basis, " ")
                << "\n"
                << "outer step level dims: "
                << join(report.outer_level_dims, " ") << "\n"
                << "invariants under outer step: " << report.inner_invariant_dim
                << " (exponents: " << join(report.inner_invariant_exponents, " ")
                << ")\n"
                << "wild bounds: (" << report.bounds.lower << ", "
                << report.bounds.upper_invariant << ")\n"
                << "tame survivors (inner, outer): "
                << report.tame_survivors_inner << " "
                << report.tame_survivors_outer << "\n"
                << "global: " << report.global << "\n"
                << "total: " << interval_text(report.report) << "\n";
      break;
  }
  return 0;
}

int run_example_pcover(const ExampleOpts& opts, const CommonOpts& common) {
  const PCoverReport report = pcover_example(opts.p, opts.m);
  switch (common.fmt()) {
    case Format::json: {
      OJson out;
      out["command"] = "example";
      out["name"] = "pcover";
      out["p"] = report.p;
      out["m"] = report.m;
      out["dim"] = report.dim;
      out["master_formula"] = report.master_formula;
      out["case_split"] = report.case_split;
      out["basis"] = report.basis;
      out["global"] = report.global;
      out["report"] = report_to_json(report.report);
      emit_json(out);
      break;
    }
    case Format::csv:
      std::cout << "p,m,dim,master_formula,case_split,global,total\n"
                << report.p << "," << report.m << "," << report.dim << ","
                << report.master_formula << "," << report.case_split << ","
                << report.global << "," << report.report.total_lower << "\n";
      break;
    case Format::table:
      std::cout << "example: pcover\np: " << report.p << "\nm: " << report.m
                << "\n"
                << "dim: " << report.dim << "\n"
                << "master formula: " << report.master_formula << "\n"
                << "case split: " << report.case_split << "\n"
                << "basis: " << join(report.basis, " ") << "\n"
                << "global: " << report.global << "\n"
                << "total: " << interval_text(report.report) << "\n";
      break;
  }
  return 0;
}

// Published closed-form values are shown next to the computed quantities; a
// trailing marker flags cells where the two disagree.
int run_example_lehr_matignon(const ExampleOpts& opts, const CommonOpts& common) {
  const LehrMatignonReport report = lehr_matignon_example(opts.p, opts.m);
  const auto mark = [](long long computed, long long published) {
    return computed == published ? "" : " *";
  };
  switch (common.fmt()) {
    case Format::json: {
      OJson out;
      out["command"] = "example";
      out["name"] = "lehr-matignon";
      out["p"] = report.p;
      out["m"] = report.m;
      out["first_order_invariants"] = report.first_order_invariants;
      out["invariant_formula"] = report.invariant_formula;
      out["layer_dim"] = report.layer_dim;
      out["layer_formula"] = report.layer_formula;
      out["bounds"] = bound_to_json(report.bounds);
      out["lower_formula"] = report.lower_formula;
      out["upper_formula"] = report.upper_formula;
      out["global"] = report.global;
      out["global_formula"] = report.global_formula;
      out["report"] = report_to_json(report.report);
      emit_json(out);
      break;
    }
    case Format::csv:
      std::cout << "p,m,first_order_invariants,invariant_formula,layer_dim,"
                   "layer_formula,lower,upper_invariant,lower_formula,"
                   "upper_formula,global,global_formula\n"
                << report.p << "," << report.m << ","
                << report.first_order_invariants << ","
                << report.invariant_formula << "," << report.layer_dim << ","
                << report.layer_formula << "," << report.bounds.lower << ","
                << report.bounds.upper_invariant << "," << report.lower_formula
                << "," << report.upper_formula << "," << report.global << ","
                << report.global_formula << "\n";
      break;
    case Format::table:
      std::cout << "example: lehr-matignon\np: " << report.p
                << "\nm: " << report.m << "\n"
                << "first-order invariants: " << report.first_order_invariants
                << " (published " << report.invariant_formula << ")"
                << mark(report.first_order_invariants, report.invariant_formula)
                << "\n"
                << "layer dim: " << report.layer_dim << " (published "
                << report.layer_formula << ")"
                << mark(report.layer_dim, report.layer_formula) << "\n"
                << "bounds: (" << report.bounds.lower << ", "
                << report.bounds.upper_invariant << ") (published ("
                << report.lower_formula << ", " << report.upper_formula << "))"
                << mark(report.bounds.lower, report.lower_formula) << "\n"
                << "global: " << report.global << " (published "
                << report.global_formula << ")"
                << mark(report.global, report.global_formula) << "\n"
                << "total: " << interval_text(report.report) << "\n";
      break;
  }
  return 0;
}

int run_example_pries(const ExampleOpts& opts, const CommonOpts& common) {
  const PriesCase row = pries_case(opts.p, opts.j, opts.m);
  switch (common.fmt()) {
    case Format::json: {
      OJson out;
      out["command"] = "example";
      out["name"] = "pries";
      out["p"] = row.p;
      out["j"] = row.j;
      out["m"] = row.m;
      out["r"] = row.r;
      out["dim"] = row.dim;
      out["global"] = row.global;
      out["total"] = row.total;
      emit_json(out);
      break;
    }
    case Format::csv:
      std::cout << "p,j,m,r,dim,global,total\n"
                << row.p << "," << row.j << "," << row.m << "," << row.r << ","
                << row.dim << "," << row.global << "," << row.total << "\n";
      break;
    case Format::table:
      std::cout << "example: pries\np: " << row.p << "\nj: " << row.j
                << "\nm: " << row.m << "\n"
                << "r: " << row.r << "\n"
                << "dim: " << row.dim << "\n"
                << "global: " << row.global << "\n"
                << "total: " << row.total << "\n";
      break;
  }
  return 0;
}

int run_example(const ExampleOpts& opts, const CommonOpts& common) {
  require_param(opts.has_p, opts.name, "--p");
  if (opts.name == "fermat") return run_example_fermat(opts, common);
  if (opts.name == "pcover") {
    require_param(opts.has_m, opts.name, "--m");
    return run_example_pcover(opts, common);
  }
  if (opts.name == "lehr-matignon") {
    require_param(opts.has_m, opts.name, "--m");
    return run_example_lehr_matignon(opts, common);
  }
  require_param(opts.has_j, opts.name, "--j");
  require_param(opts.has_m, opts.name, "--m");
  return run_example_pries(opts, common);
}

// --- table-pries ---------------------------------------------------------------

// Cells where the computation disagrees with the published table show both
// numbers, ours first.
std::string annotated_cell(long long computed, long long published) {
  if (computed == published) return std::to_string(computed);
  return std::to_string(computed) + " (pub " + std::to_string(published) + ")";
}

int run_table_pries(const CommonOpts& common) {
  const std::vector<PriesRow>& rows = pries_table();
  switch (common.fmt()) {
    case Format::json: {
      OJson out;
      out["command"] = "table-pries";
      out["rows"] = OJson::array();
      for (const PriesRow& row : rows) {
        OJson entry;
        entry["p"] = row.computed.p;
        entry["j"] = row.computed.j;
        entry["m"] = row.computed.m;
        entry["r"] = row.computed.r;
        entry["dim"] = row.computed.dim;
        entry["global"] = row.computed.global;
        entry["total"] = row.computed.total;
        entry["published"] = {{"r", row.published_r},
                              {"dim", row.published_dim},
                              {"global", row.published_global},
                              {"total", row.published_total}};
        entry["agrees"] = row.computed.r == row.published_r &&
                          row.computed.dim == row.published_dim &&
                          row.computed.global == row.published_global &&
                          row.computed.total == row.published_total;
        out["rows"].push_back(entry);
      }
      emit_json(out);
      break;
    }
    case Format::csv:
      std::cout << "p,j,m,r,dim,global,total,published_r,published_dim,"
                   "published_global,published_total\n";
      for (const PriesRow& row : rows)
        std::cout << row.computed.p << "," << row.computed.j << ","
                  << row.computed.m << "," << row.computed.r << ","
                  << row.computed.dim << "," << row.computed.global << ","
                  << row.computed.total << "," << row.published_r << ","
                  << row.published_dim << "," << row.published_global << ","
                  << row.published_total << "\n";
      break;
    case Format::table: {
      std::vector<std::vector<std::string>> cells;
      cells.push_back({"p", "j", "m", "r", "dim H1(G,T_O)", "dim H1(Y,pi*T_X)",
                       "dim D(k[eps])"});
      for (const PriesRow& row : rows)
        cells.push_back({std::to_string(row.computed.p),
                         std::to_string(row.computed.j),
                         std::to_string(row.computed.m),
                         annotated_cell(row.computed.r, row.published_r),
                         annotated_cell(row.computed.dim, row.published_dim),
                         annotated_cell(row.computed.global, row.published_global),
                         annotated_cell(row.computed.total, row.published_total)});
      std::vector<std::size_t> widths(cells.front().size(), 0);
      for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
          widths[c] = std::max(widths[c], row[c].size());
      for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          std::cout << (c ? "  " : "") << row[c]
                    << std::string(widths[c] - row[c].size(), ' ');
        }
        std::cout << "\n";
      }
      break;
    }
  }
  return 0;
}

// --- oracle --------------------------------------------------------------------

struct OracleOpts {
  long long p = 0;
  long long n = 0;
  long long a = 0;
  long long s = 1;
  bool has_p = false;
  bool has_n = false;
  bool has_a = false;
};

struct OracleOutcome {
  long long p, n, a, s;
  long long expected_dim = 0;
  long long oracle_dim = 0;
  std::vector<long long> expected_basis;
  std::vector<long long> oracle_poles;
  long long window = 0;
  std::string failure;  // "", "mismatch", or "non-stabilization"
  std::string detail;
};

// Independent Artin-Schreier labels 1, g, ..., g^{s-1} in F_{p^s}.
std::vector<FFElem> independent_labels(const FiniteField& field, long long s) {
  std::vector<FFElem> labels;
  FFElem power = field.one();
  for (long long i = 0; i < s; ++i) {
    labels.push_back(power);
    power = field.mul(power, field.generator());
  }
  return labels;
}

OracleOutcome run_one_check(long long p, long long n, long long a, long long s,
                            long long precision) {
  OracleOutcome out{p, n, a, s, 0, 0, {}, {}, 0, "", ""};
  try {
    if (s <= 1) {
      out.expected_dim = dim_h1_cyclic(p, n, a);
      out.expected_basis = basis_h1_cyclic(p, n, a);
      std::sort(out.expected_basis.begin(), out.expected_basis.end());
      const FiniteField field(p, 1);
      const H1Result result =
          h1_cyclic_bruteforce(field, n, field.one(), a, precision);
      out.oracle_dim = result.dimension;
      out.oracle_poles = result.poles;
      out.window = result.window;
      if (out.oracle_dim != out.expected_dim ||
          out.oracle_poles != out.expected_basis)
        out.failure = "mismatch";
    } else {
      out.expected_dim = dim_h1_elem_abelian(p, n, s, a);
      const FiniteField field(p, static_cast<int>(s));
      const H1Result result = h1_elem_abelian_bruteforce(
          field, n, independent_labels(field, s), a, precision);
      out.oracle_dim = result.dimension;
      out.window = result.window;
      if (out.oracle_dim != out.expected_dim) out.failure = "mismatch";
    }
  } catch (const std::runtime_error& e) {
    out.failure = "non-stabilization";
    out.detail = e.what();
  }
  return out;
}

OJson outcome_to_json(const OracleOutcome& outcome) {
  OJson out;
  out["p"] = outcome.p;
  out["n"] = outcome.n;
  out["a"] = outcome.a;
  out["s"] = outcome.s;
  out["expected_dim"] = outcome.expected_dim;
  out["oracle_dim"] = outcome.oracle_dim;
  if (outcome.s <= 1) {
    out["expected_basis"] = outcome.expected_basis;
    out["oracle_poles"] = outcome.oracle_poles;
  }
  out["window"] = outcome.window;
  out["failure"] = outcome.failure;
  if (!outcome.detail.empty()) out["detail"] = outcome.detail;
  return out;
}

void print_outcome_line(const OracleOutcome& outcome) {
  std::cout << "p=" << outcome.p << " n=" << outcome.n << " a=" << outcome.a;
  if (outcome.s > 1) std::cout << " s=" << outcome.s;
  if (outcome.failure == "non-stabilization") {
    std::cout << "  non-stabilization: " << outcome.detail << "\n";
    return;
  }
  std::cout << "  closed form " << outcome.expected_dim << ", oracle "
            << outcome.oracle_dim << " (window " << outcome.window << ")";
  if (outcome.failure == "mismatch") {
    std::cout << "  MISMATCH";
    if (outcome.s <= 1)
      std::cout << " basis " << join(outcome.expected_basis, " ") << " vs poles "
                << join(outcome.oracle_poles, " ");
  }
  std::cout << "\n";
}

int run_oracle(const OracleOpts& opts, const CommonOpts& common) {
  if (opts.has_n != opts.has_a)
    throw std::invalid_argument("oracle: --n and --a must be given together");

  std::vector<OracleOutcome> outcomes;
  if (opts.has_n) {
    if (!opts.has_p)
      throw std::invalid_argument("oracle: --p is required for a single check");
    outcomes.push_back(
        run_one_check(opts.p, opts.n, opts.a, opts.s, common.precision));
  } else {
    std::vector<long long> primes =
        opts.has_p ? std::vector<long long>{opts.p}
                   : std::vector<long long>{5, 7};
    std::vector<std::array<long long, 3>> grid;
    for (long long p : primes)
      for (long long n = 1; n <= 3; ++n) {
        if (n % p == 0) continue;
        for (long long a = -3; a <= 3; ++a) grid.push_back({p, n, a});
      }
    if (common.seed) {
      // Deterministic Fisher-Yates sample of 10 grid points.
      std::mt19937_64 rng(static_cast<std::uint64_t>(*common.seed));
      for (std::size_t i = grid.size(); i > 1; --i)
        std::swap(grid[i - 1], grid[rng() % i]);
      grid.resize(std::min<std::size_t>(grid.size(), 10));
    }
    for (const auto& [p, n, a] : grid)
      outcomes.push_back(run_one_check(p, n, a, opts.s, common.precision));
  }

  long long failures = 0;
  for (const OracleOutcome& outcome : outcomes)
    if (!outcome.failure.empty()) ++failures;

  switch (common.fmt()) {
    case Format::json: {
      OJson out;
      out["command"] = "oracle";
      out["mode"] = opts.has_n ? "check" : "sweep";
      out["runs"] = outcomes.size();
      out["failures"] = OJson::array();
      for (const OracleOutcome& outcome : outcomes)
        if (!outcome.failure.empty())
          out["failures"].push_back(outcome_to_json(outcome));
      out["ok"] = failures == 0;
      emit_json(out);
      break;
    }
    case Format::csv:
      std::cout << "p,n,a,s,expected_dim,oracle_dim,window,failure\n";
      for (const OracleOutcome& outcome : outcomes)
        std::cout << outcome.p << "," << outcome.n << "," << outcome.a << ","
                  << outcome.s << "," << outcome.expected_dim << ","
                  << outcome.oracle_dim << "," << outcome.window << ","
                  << outcome.failure << "\n";
      break;
    case Format::table:
      for (const OracleOutcome& outcome : outcomes) print_outcome_line(outcome);
      std::cout << "oracle: " << outcomes.size() << " run"
                << (outcomes.size() == 1 ? "" : "s") << ", "
                << outcomes.size() - failures << " match"
                << (failures ? ", " + std::to_string(failures) + " failed" : "")
                << "\n";
      break;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Tangent-space dimensions of deformation functors of curves with "
      "automorphisms in positive characteristic"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--precision", common.precision,
                 "Starting window for oracle stabilization (0 = automatic)");
  app.add_option("--convention", common.convention,
                 "Tame weight convention for reductions")
      ->check(CLI::IsMember({"lemma", "derived"}))
      ->capture_default_str();
  long long seed_value = 0;
  CLI::Option* seed_opt =
      app.add_option("--seed", seed_value, "Sample the oracle sweep grid");

  CyclicOpts cyclic_opts;
  CLI::App* cmd_cyclic = app.add_subcommand(
      "cyclic", "Dimension and basis of one cyclic layer");
  cmd_cyclic->fallthrough();
  cmd_cyclic->add_option("--p", cyclic_opts.p, "Characteristic")->required();
  cmd_cyclic->add_option("--n", cyclic_opts.n, "Conductor")->required();
  cmd_cyclic->add_option("--a", cyclic_opts.a, "Module exponent")->required();
  cmd_cyclic->add_flag("--basis", cyclic_opts.basis, "Print basis exponents");

  std::string bounds_file;
  CLI::App* cmd_bounds = app.add_subcommand(
      "local-bounds", "Lower/upper local dimension bounds from a filtration");
  cmd_bounds->fallthrough();
  cmd_bounds->add_option("--filtration", bounds_file, "Filtration JSON file")
      ->required();

  std::string cover_file;
  CLI::App* cmd_global = app.add_subcommand(
      "global", "Global contribution from cover data");
  cmd_global->fallthrough();
  cmd_global->add_option("--cover", cover_file, "Cover JSON file")->required();

  std::vector<std::string> total_filtrations;
  std::string total_cover;
  CLI::App* cmd_total = app.add_subcommand(
      "total", "Assemble global and local parts into a total dimension");
  cmd_total->fallthrough();
  cmd_total
      ->add_option("--filtration", total_filtrations,
                   "Filtration JSON file (repeatable, one per wild point)")
      ->required();
  cmd_total->add_option("--cover", total_cover, "Cover JSON file")->required();

  ExampleOpts example_opts;
  CLI::App* cmd_example = app.add_subcommand(
      "example", "Run a built-in reference pipeline");
  cmd_example->fallthrough();
  cmd_example
      ->add_option("name", example_opts.name, "Reference family")
      ->required()
      ->check(CLI::IsMember({"fermat", "pcover", "lehr-matignon", "pries"}));
  CLI::Option* example_p = cmd_example->add_option("--p", example_opts.p,
                                                   "Characteristic");
  CLI::Option* example_j = cmd_example->add_option("--j", example_opts.j,
                                                   "Jump position");
  CLI::Option* example_m = cmd_example->add_option("--m", example_opts.m,
                                                   "Family parameter");

  CLI::App* cmd_table = app.add_subcommand(
      "table-pries", "Six comparison rows with published values");
  cmd_table->fallthrough();

  OracleOpts oracle_opts;
  CLI::App* cmd_oracle = app.add_subcommand(
      "oracle", "Brute-force verification against the closed forms");
  cmd_oracle->fallthrough();
  CLI::Option* oracle_p =
      cmd_oracle->add_option("--p", oracle_opts.p, "Characteristic");
  CLI::Option* oracle_n =
      cmd_oracle->add_option("--n", oracle_opts.n, "Conductor");
  CLI::Option* oracle_a =
      cmd_oracle->add_option("--a", oracle_opts.a, "Module exponent");
  cmd_oracle->add_option("--s", oracle_opts.s,
                         "Elementary-abelian rank (1 = cyclic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (seed_opt->count() > 0) common.seed = seed_value;
  example_opts.has_p = example_p->count() > 0;
  example_opts.has_j = example_j->count() > 0;
  example_opts.has_m = example_m->count() > 0;
  oracle_opts.has_p = oracle_p->count() > 0;
  oracle_opts.has_n = oracle_n->count() > 0;
  oracle_opts.has_a = oracle_a->count() > 0;

  try {
    if (*cmd_cyclic) return run_cyclic(cyclic_opts, common);
    if (*cmd_bounds) return run_local_bounds(bounds_file, common);
    if (*cmd_global) return run_global(cover_file, common);
    if (*cmd_total) return run_total(total_filtrations, total_cover, common);
    if (*cmd_example) return run_example(example_opts, common);
    if (*cmd_table) return run_table_pries(common);
    if (*cmd_oracle) return run_oracle(oracle_opts, common);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
