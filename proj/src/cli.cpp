#include "zksym/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "zksym/algebra_io.hpp"
#include "zksym/analysis.hpp"
#include "zksym/errors.hpp"
#include "zksym/report.hpp"
#include "zksym/so5.hpp"

namespace zksym::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct RunConfig {
  ParamSource params;
  double tol = kDefaultTolerance;
  Format format = Format::Text;
  std::string algebra_file;
  std::string branch;
  std::optional<double> S, S_min, S_max;
  int S_steps = 50;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("parameter " + key + " is not a number: '" + text + "'");
  }
}

void assign_key(ParamSource& out, const std::string& key, double value) {
  if (key == "t") out.t = value;
  else if (key == "u") out.u = value;
  else if (key == "v") out.v = value;
  else if (key == "w") out.w = value;
  else throw InvalidInput("unknown parameter key '" + key + "'");
}

MetricParams resolve_params(const RunConfig& cfg) {
  ParamSource merged;
  if (cfg.params.file) merged = read_param_file(*cfg.params.file);
  if (cfg.params.t) merged.t = cfg.params.t;
  if (cfg.params.u) merged.u = cfg.params.u;
  if (cfg.params.v) merged.v = cfg.params.v;
  if (cfg.params.w) merged.w = cfg.params.w;
  if (!merged.t || !merged.u || !merged.v || !merged.w) {
    throw InvalidInput("metric parameters t, u, v, w are required (--t --u --v --w or --params)");
  }
  return MetricParams::make(*merged.t, *merged.u, *merged.v, *merged.w);
}

Branch parse_branch(const std::string& s) {
  if (s == "u0" || s == "u-zero") return Branch::UZero;
  if (s == "u1" || s == "u-nonzero") return Branch::UNonzero;
  throw InvalidInput("unknown branch '" + s + "' (expected u0 or u1)");
}

std::vector<double> s_grid(const RunConfig& cfg, Branch b) {
  if (cfg.S) return {*cfg.S};
  if (cfg.S_steps < 1) throw InvalidInput("--S-steps must be at least 1");
  const auto [lo, hi] = admissible_interval(b);
  std::vector<double> grid;
  if (!cfg.S_min && !cfg.S_max) {
    // Interior points of the open interval.
    for (int i = 1; i <= cfg.S_steps; ++i) grid.push_back(lo + (hi - lo) * i / (cfg.S_steps + 1));
    return grid;
  }
  const double a = cfg.S_min.value_or(lo);
  const double z = cfg.S_max.value_or(hi);
  if (cfg.S_steps == 1) return {a};
  for (int i = 0; i < cfg.S_steps; ++i) grid.push_back(a + (z - a) * i / (cfg.S_steps - 1));
  return grid;
}

std::vector<LedgerSolution> solve_at(Branch b, double S, double tol) {
  if (b == Branch::UZero) {
    auto pair = solve_ledger_u0(S, 1.0, tol);
    return {pair.begin(), pair.end()};
  }
  return solve_ledger_unonzero(S, 1.0, tol);
}

void print_solution_header(std::ostream& out) {
  out << std::left << std::setw(11) << "branch" << std::right << std::setw(11) << "S"
      << std::setw(11) << "V" << std::setw(11) << "W" << std::setw(11) << "Usq" << std::setw(11)
      << "u" << std::setw(13) << "ledger" << std::setw(6) << "NR" << "  verified\n";
}

void print_solution_row(std::ostream& out, const LedgerSolution& s, const VerificationReport& r) {
  out << std::left << std::setw(11) << to_string(s.branch) << std::right << std::setprecision(6)
      << std::setw(11) << s.S << std::setw(11) << s.V << std::setw(11) << s.W << std::setw(11)
      << s.Usq << std::setw(11) << s.params.u() << std::setw(13) << std::setprecision(3)
      << s.residuals.ledger << std::setw(6) << (s.naturally_reductive ? "yes" : "no") << "  "
      << r.message << '\n';
}

constexpr const char* kCsvHeader = "branch,S,V,W,Usq,t,u,v,w,ledger,star,gram,naturally_reductive,verified";

void print_solution_csv(std::ostream& out, const LedgerSolution& s, const VerificationReport& r) {
  out << to_string(s.branch) << ',' << s.S << ',' << s.V << ',' << s.W << ',' << s.Usq << ','
      << s.params.t() << ',' << s.params.u() << ',' << s.params.v() << ',' << s.params.w() << ','
      << s.residuals.ledger << ',' << s.residuals.star << ',' << s.residuals.gram << ','
      << (s.naturally_reductive ? 1 : 0) << ',' << (r.pass ? 1 : 0) << '\n';
}

int cmd_inspect(const RunConfig& cfg, std::ostream& out) {
  const GradedLieAlgebra alg =
      cfg.algebra_file.empty() ? so5::build_so5() : load_algebra(cfg.algebra_file);
  const ValidationReport rep = validate(alg, cfg.tol);

  std::map<std::string, std::size_t> blocks;
  for (const auto& g : alg.grading()) ++blocks[g.to_string()];

  if (cfg.format == Format::Json) {
    json doc;
    doc["algebra"] = algebra_to_json(alg);
    doc["blocks"] = blocks;
    doc["validation"] = report::validation_json(alg, rep);
    doc["tolerance"] = cfg.tol;
    out << doc.dump(2) << '\n';
  } else {
    out << "dimension: " << alg.dim() << '\n';
    out << "grading blocks:";
    for (const auto& [label, n] : blocks) out << ' ' << label << ':' << n;
    out << '\n';
    out << "isotropy (g_e):";
    for (auto i : alg.isotropy_indices()) out << ' ' << alg.names()[i];
    out << '\n';
    out << "nonzero structure constants: " << alg.nonzeros().size() << '\n';
    if (rep.ok()) {
      out << "valid\n";
    } else {
      out << "invalid: " << rep.violations.size() << " violation(s)\n";
      for (const auto& v : rep.violations) {
        out << "  " << to_string(v.kind) << " (" << alg.names()[v.i] << ", " << alg.names()[v.j]
            << ", " << alg.names()[v.k] << ") magnitude " << v.magnitude << '\n';
      }
    }
  }
  return rep.ok() ? kOk : kNumericalFailure;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  const MetricParams p = resolve_params(cfg);
  const InvariantGeometry geo = flag_geometry(p);
  const auto& names = frame_names();
  if (cfg.format == Format::Json) {
    json doc;
    doc["params"] = report::params_json(p);
    doc["tolerance"] = cfg.tol;
    doc["bracket"] = report::table_json(geo.bracket_table(), names, cfg.tol);
    doc["U"] = report::table_json(geo.u_table(), names, cfg.tol);
    doc["nabla"] = report::table_json(geo.nabla_table(), names, cfg.tol);
    out << doc.dump(2) << '\n';
  } else {
    out << "params " << p.to_string() << "  K = " << p.K() << "\n\n";
    out << "[X, Y]_m\n" << report::table_text(geo.bracket_table(), names, cfg.tol) << '\n';
    out << "U(X, Y)\n" << report::table_text(geo.u_table(), names, cfg.tol);
  }
  return kOk;
}

int cmd_ricci(const RunConfig& cfg, std::ostream& out) {
  const MetricParams p = resolve_params(cfg);
  const Eigen::MatrixXd rho = ricci(p);
  if (cfg.format == Format::Json) {
    json doc;
    doc["params"] = report::params_json(p);
    doc["tolerance"] = cfg.tol;
    doc["frame"] = frame_names();
    doc["ricci"] = report::matrix_json(rho);
    doc["entries"] = {{"rho11", rho(0, 0)}, {"rho14", rho(0, 3)}, {"rho33", rho(2, 2)},
                      {"rho55", rho(4, 4)}, {"rho77", rho(6, 6)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "Ricci tensor at " << p.to_string() << '\n' << report::matrix_text(rho, frame_names());
  }
  return kOk;
}

int cmd_isometries(const RunConfig& cfg, std::ostream& out) {
  const MetricParams p = resolve_params(cfg);
  const IsometrySpace iso = infinitesimal_isometries(p, cfg.tol);
  if (cfg.format == Format::Json) {
    json doc;
    doc["params"] = report::params_json(p);
    doc["tolerance"] = cfg.tol;
    doc["frame"] = frame_names();
    doc["dimension"] = iso.dimension();
    doc["basis"] = report::matrix_json(iso.basis.transpose());
    doc["singular_values"] =
        std::vector<double>(iso.singular_values.data(), iso.singular_values.data() + iso.singular_values.size());
    out << doc.dump(2) << '\n';
  } else {
    out << "infinitesimal isometries at " << p.to_string() << ": dimension " << iso.dimension() << '\n';
    for (Eigen::Index c = 0; c < iso.dimension(); ++c) {
      out << "  " << report::combination(iso.basis.col(c), frame_names(), cfg.tol) << '\n';
    }
  }
  return kOk;
}

int cmd_check_nr(const RunConfig& cfg, std::ostream& out) {
  const MetricParams p = resolve_params(cfg);
  const NaturalReductivity nr = is_naturally_reductive(p, cfg.tol);
  const bool closed = naturally_reductive_closed_form(p, cfg.tol);
  const auto& names = frame_names();
  if (cfg.format == Format::Json) {
    json doc;
    doc["params"] = report::params_json(p);
    doc["tolerance"] = cfg.tol;
    doc["naturally_reductive"] = nr.value;
    doc["closed_form"] = closed;
    doc["max_u"] = nr.max_u;
    if (!nr.value) {
      doc["witness"] = {names[static_cast<std::size_t>(nr.witness[0])],
                        names[static_cast<std::size_t>(nr.witness[1])],
                        names[static_cast<std::size_t>(nr.witness[2])]};
    }
    out << doc.dump(2) << '\n';
  } else {
    out << (nr.value ? "true" : "false") << '\n';
    if (!nr.value) {
      out << "witness: <U(" << names[static_cast<std::size_t>(nr.witness[0])] << ", "
          << names[static_cast<std::size_t>(nr.witness[1])] << "), "
          << names[static_cast<std::size_t>(nr.witness[2])] << "> = " << nr.max_u << '\n';
    }
  }
  return nr.value == closed ? kOk : kNumericalFailure;
}

int cmd_ledger(const RunConfig& cfg, std::ostream& out) {
  const MetricParams p = resolve_params(cfg);
  const InvariantGeometry geo = flag_geometry(p);
  const auto star = eval_star_system(p, geo.ricci());
  const auto& names = frame_names();
  json triples = json::array();
  std::ostringstream text;
  for (Eigen::Index i = 0; i < geo.dim(); ++i)
    for (Eigen::Index j = i; j < geo.dim(); ++j)
      for (Eigen::Index k = j; k < geo.dim(); ++k) {
        const double L = geo.ledger(geo.basis(i), geo.basis(j), geo.basis(k));
        if (std::abs(L) <= cfg.tol) continue;
        const auto a = names[static_cast<std::size_t>(i)], b = names[static_cast<std::size_t>(j)],
                   c = names[static_cast<std::size_t>(k)];
        triples.push_back({{"triple", {a, b, c}}, {"L", L}});
        text << "  L(" << a << ", " << b << ", " << c << ") = " << L << '\n';
      }
  const double worst = geo.max_ledger();
  if (cfg.format == Format::Json) {
    json doc;
    doc["params"] = report::params_json(p);
    doc["tolerance"] = cfg.tol;
    doc["max_ledger"] = worst;
    doc["star"] = star;
    doc["nonzero"] = std::move(triples);
    doc["first_ledger_condition"] = worst <= cfg.tol;
    out << doc.dump(2) << '\n';
  } else {
    out << "first Ledger tensor at " << p.to_string() << "\n";
    out << text.str();
    out << "max |L| = " << worst << "\n(*) residuals:";
    for (double r : star) out << ' ' << r;
    out << "\nfirst Ledger condition: " << (worst <= cfg.tol ? "holds" : "fails") << '\n';
  }
  return kOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, bool streaming) {
  if (cfg.branch.empty()) throw InvalidInput("--branch is required (u0 or u1)");
  const Branch b = parse_branch(cfg.branch);
  const std::vector<double> grid = s_grid(cfg, b);
  for (double S : grid) {
    const auto [lo, hi] = admissible_interval(b);
    if (!(S > lo && S < hi)) solve_at(b, S, cfg.tol);  // throws the interval error
  }

  using Batch = std::vector<std::pair<LedgerSolution, VerificationReport>>;
  auto work = [&cfg, b](double S) {
    Batch batch;
    for (auto& s : solve_at(b, S, cfg.tol)) {
      VerificationReport r = verify_solution(s, cfg.tol);
      batch.emplace_back(std::move(s), std::move(r));
    }
    return batch;
  };

  bool all_pass = true;
  if (cfg.format == Format::Text) print_solution_header(out);
  if (cfg.format == Format::Csv) out << kCsvHeader << '\n';
  auto emit = [&](const Batch& batch) {
    for (const auto& [s, r] : batch) {
      all_pass = all_pass && r.pass;
      if (cfg.format == Format::Json) {
        out << report::solution_json(s, r).dump() << '\n';
      } else if (cfg.format == Format::Csv) {
        print_solution_csv(out, s, r);
      } else {
        print_solution_row(out, s, r);
      }
    }
    if (streaming) out.flush();
  };

  // Evaluate in windows of hardware_concurrency; emit in input order.
  const std::size_t window = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < grid.size(); start += window) {
    std::vector<std::future<Batch>> pending;
    for (std::size_t i = start; i < std::min(grid.size(), start + window); ++i) {
      pending.push_back(std::async(std::launch::async, work, grid[i]));
    }
    for (auto& f : pending) emit(f.get());
  }
  return all_pass ? kOk : kNumericalFailure;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_params) {
  sub->add_option("--tol", cfg.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "text, json, or csv (solve and sweep only)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}}));
  if (with_params) {
    sub->add_option("--t", cfg.params.t, "Metric parameter t");
    sub->add_option("--u", cfg.params.u, "Metric parameter u");
    sub->add_option("--v", cfg.params.v, "Metric parameter v");
    sub->add_option("--w", cfg.params.w, "Metric parameter w");
    sub->add_option("--params", cfg.params.file, "JSON or TOML file with t, u, v, w");
  }
}

void add_solver(CLI::App* sub, RunConfig& cfg, bool single) {
  sub->add_option("--branch", cfg.branch, "u0 (u = 0) or u1 (u != 0)")->required();
  if (single) sub->add_option("--S", cfg.S, "S = V + W");
  sub->add_option("--S-min", cfg.S_min, "Grid start (default: interval interior)");
  sub->add_option("--S-max", cfg.S_max, "Grid end");
  sub->add_option("--S-steps", cfg.S_steps, "Number of grid points");
}

}  // namespace

ParamSource read_param_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open parameter file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  ParamSource out;
  out.file = path;
  const std::string head = trim(text);
  if (!head.empty() && head.front() == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw InvalidInput("parameter file is not valid JSON: " + std::string(e.what()));
    }
    for (const auto& [key, value] : doc.items()) {
      if (!value.is_number()) throw InvalidInput("parameter " + key + " must be a number");
      assign_key(out, key, value.get<double>());
    }
    return out;
  }

  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    assign_key(out, key, parse_number(key, trim(line.substr(eq + 1))));
  }
  return out;
}

double default_tolerance() {
  if (const char* env = std::getenv("ZKSYM_TOL"); env != nullptr && *env != '\0') {
    const double v = parse_number("ZKSYM_TOL", trim(env));
    if (!(v > 0.0)) throw InvalidInput("ZKSYM_TOL must be positive");
    return v;
  }
  return kDefaultTolerance;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.tol = default_tolerance();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  CLI::App app{"Riemannian geometry of the Z2^2-symmetric flag manifold SO(5)/SO(2)xSO(2)xSO(1)",
               "zksym"};
  app.require_subcommand(1);

  auto* inspect = app.add_subcommand("inspect", "Build so(5), show grading and validate");
  add_common(inspect, cfg, false);
  inspect->add_option("--algebra", cfg.algebra_file, "Algebra JSON file instead of built-in so(5)");

  auto* tables = app.add_subcommand("tables", "Bracket and U tables in the orthonormal frame");
  auto* ricci_cmd = app.add_subcommand("ricci", "Ricci tensor in the orthonormal frame");
  auto* iso = app.add_subcommand("isometries", "Infinitesimal isometries in m");
  auto* nr = app.add_subcommand("check-nr", "Naturally reductive test");
  auto* ledger = app.add_subcommand("ledger", "First Ledger tensor and (*) residuals");
  for (auto* sub : {tables, ricci_cmd, iso, nr, ledger}) add_common(sub, cfg, true);

  auto* solve = app.add_subcommand("solve", "Solve the first Ledger condition for S");
  add_common(solve, cfg, false);
  add_solver(solve, cfg, true);
  auto* sweep = app.add_subcommand("sweep", "Solve over an S grid, one record per line");
  add_common(sweep, cfg, false);
  add_solver(sweep, cfg, false);

  std::vector<std::string> argv_storage{"zksym"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  out << std::setprecision(cfg.format == Format::Text ? 6 : 17);
  try {
    if (cfg.format == Format::Csv && !*solve && !*sweep) {
      throw InvalidInput("--format csv is only available for solve and sweep");
    }
    if (*inspect) return cmd_inspect(cfg, out);
    if (*tables) return cmd_tables(cfg, out);
    if (*ricci_cmd) return cmd_ricci(cfg, out);
    if (*iso) return cmd_isometries(cfg, out);
    if (*nr) return cmd_check_nr(cfg, out);
    if (*ledger) return cmd_ledger(cfg, out);
    if (*solve) {
      if (!cfg.S && !cfg.S_min && !cfg.S_max) throw InvalidInput("solve needs --S or an S range");
      return cmd_solve(cfg, out, false);
    }
    if (*sweep) return cmd_solve(cfg, out, true);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInvalidInput;
}

}  // namespace zksym::cli
