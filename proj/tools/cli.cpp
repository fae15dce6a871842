#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "emit.hpp"
#include "sweep.hpp"
#include "xxchain/caps.hpp"
#include "xxchain/combinatorics.hpp"
#include "xxchain/entanglement.hpp"
#include "xxchain/error.hpp"
#include "xxchain/limits.hpp"
#include "xxchain/spectrum.hpp"
#include "xxchain/states.hpp"
#include "xxchain/thermal.hpp"
#include "xxchain/validation.hpp"

namespace xxchain::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  int n = 2;
  double j = 1.0;
  std::optional<double> b;
  std::optional<std::string> b_range;
  std::optional<double> t;
  std::optional<std::string> t_range;
  std::string format = "csv";
  std::string output = "-";
  std::optional<int> dense_cap;
  std::optional<int> k;
  double step = 1e-4;
  std::string split;
  std::vector<int> sizes;
  bool no_dense = false;

  int cap() const { return dense_cap ? checked_dense_cap(*dense_cap) : xxchain::dense_cap(); }
};

json grid_json(const Grid& g) { return json{{"min", g.min}, {"max", g.max}, {"steps", g.steps}}; }

Grid axis(const std::optional<double>& scalar, const std::optional<std::string>& range, const char* name,
          const Grid& fallback) {
  if (scalar && range) throw UsageError(std::string("give either --") + name + " or --" + name + "-range, not both");
  if (range) return Grid::parse(*range);
  if (scalar) return Grid::point(*scalar);
  return fallback;
}

double beta_of(double t) {
  if (!(t >= 0.0)) throw UsageError("temperature must be >= 0");
  return t == 0.0 ? INFINITY : 1.0 / t;
}

std::string occupation_string(std::uint64_t mask, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k)
    if ((mask >> k) & 1U) s[k] = '1';
  return s;
}

std::string spins_string(std::uint64_t mask, int n) {
  std::string s(static_cast<std::size_t>(n), 'u');
  for (int l = 0; l < n; ++l)
    if ((mask >> l) & 1U) s[l] = 'd';
  return s;
}

std::string positions_string(const std::vector<int>& pos) {
  std::string s;
  for (std::size_t i = 0; i < pos.size(); ++i) s += (i ? " " : "") + std::to_string(pos[i]);
  return s;
}

template <class Row>
std::vector<std::vector<Value>> flatten(std::vector<std::vector<Row>> chunks) {
  std::vector<std::vector<Value>> rows;
  for (auto& chunk : chunks)
    for (auto& r : chunk) rows.push_back(std::move(r));
  return rows;
}

struct GridPoint {
  double b;
  double t;
};

std::vector<GridPoint> product(const Grid& bs, const Grid& ts) {
  std::vector<GridPoint> pts;
  for (double b : bs.values())
    for (double t : ts.values()) pts.push_back({b, t});
  return pts;
}

const Grid kDefaultField = Grid::point(0.0);
const Grid kDefaultTemperature = Grid::point(1.0);
const Grid kFigureField{-1.5, 1.5, 121};

Table run_spectrum(const RunConfig& cfg, json& meta) {
  const Grid bs = axis(cfg.b, cfg.b_range, "b", kDefaultField);
  meta["b_grid"] = grid_json(bs);
  const auto masks = label_ordered_masks(ChainParams(cfg.n, cfg.j, 0.0).n);
  const auto fields = bs.values();
  Table t{{"n", "b", "l", "r", "m", "occupation", "energy"}, {}};
  t.rows = flatten(parallel_map(fields.size(), [&](std::size_t i) {
    const ChainParams params(cfg.n, cfg.j, fields[i]);
    const auto energies = level_energies(params);
    std::vector<std::vector<Value>> rows;
    for (std::size_t idx = 0; idx < masks.size(); ++idx) {
      const auto sec = label_to_sector_index(idx + 1, cfg.n);
      rows.push_back({std::int64_t{cfg.n}, fields[i], static_cast<std::int64_t>(sec.l),
                      static_cast<std::int64_t>(sec.r), std::int64_t{sec.m}, occupation_string(masks[idx], cfg.n),
                      energies[masks[idx]]});
    }
    return rows;
  }));
  return t;
}

Table run_ground_state(const RunConfig& cfg, json& meta, std::ostream& err) {
  int k = 0;
  if (cfg.k) {
    if (cfg.b || cfg.b_range) throw UsageError("give either --k or --b, not both");
    k = *cfg.k;
  } else if (cfg.b) {
    const auto g = ground_sector(ChainParams(cfg.n, cfg.j, *cfg.b));
    if (g.degenerate) {
      err << "note: B sits on a crossing; sectors " << g.k << " and " << g.upper()
          << " are degenerate, reporting sector " << g.k << "\n";
    }
    k = g.k;
  } else {
    throw UsageError("ground-state needs --k or --b");
  }
  meta["k"] = k;
  const auto psi = ground_state(cfg.n, k);
  Table t{{"n", "k", "index", "positions", "spins", "amplitude"}, {}};
  for (std::size_t i = 0; i < psi.size(); ++i) {
    t.rows.push_back({std::int64_t{cfg.n}, std::int64_t{k}, static_cast<std::int64_t>(i + 1),
                      positions_string(psi.positions(i)), spins_string(psi.basis_index(i), cfg.n),
                      psi.amplitudes()[i]});
  }
  return t;
}

Table run_crossings(const RunConfig& cfg) {
  const auto set = crossing_fields(ChainParams(cfg.n, cfg.j, 0.0).n, cfg.j);
  Table t{{"k", "b_k"}, {}};
  for (std::size_t i = 0; i < set.fields_b.size(); ++i)
    t.rows.push_back({static_cast<std::int64_t>(i + 1), set.fields_b[i]});
  return t;
}

Table run_thermal(const RunConfig& cfg, json& meta) {
  const Grid bs = axis(cfg.b, cfg.b_range, "b", kDefaultField);
  const Grid ts = axis(cfg.t, cfg.t_range, "t", kDefaultTemperature);
  meta["b_grid"] = grid_json(bs);
  meta["t_grid"] = grid_json(ts);
  const auto pts = product(bs, ts);
  const auto masks = label_ordered_masks(ChainParams(cfg.n, cfg.j, 0.0).n);
  Table t{{"n", "b", "t", "beta", "l", "r", "m", "occupation", "energy", "probability"}, {}};
  t.rows = flatten(parallel_map(pts.size(), [&](std::size_t i) {
    const ChainParams params(cfg.n, cfg.j, pts[i].b);
    const double beta = beta_of(pts[i].t);
    const auto energies = level_energies(params);
    const auto ens = boltzmann_weights(params, beta);
    std::vector<std::vector<Value>> rows;
    for (std::size_t idx = 0; idx < masks.size(); ++idx) {
      const auto sec = label_to_sector_index(idx + 1, cfg.n);
      rows.push_back({std::int64_t{cfg.n}, pts[i].b, pts[i].t, beta, static_cast<std::int64_t>(sec.l),
                      static_cast<std::int64_t>(sec.r), std::int64_t{sec.m}, occupation_string(masks[idx], cfg.n),
                      energies[masks[idx]], ens.probabilities[idx]});
    }
    return rows;
  }));
  return t;
}

Table run_purity(const RunConfig& cfg, json& meta) {
  const Grid bs = axis(cfg.b, cfg.b_range, "b", kDefaultField);
  const Grid ts = axis(cfg.t, cfg.t_range, "t", kDefaultTemperature);
  meta["b_grid"] = grid_json(bs);
  meta["t_grid"] = grid_json(ts);
  const bool dense = !cfg.no_dense && cfg.n <= cfg.cap();
  meta["dense"] = dense;
  std::optional<EigenBasis> basis;
  if (dense) basis.emplace(cfg.n, cfg.cap());
  const auto pts = product(bs, ts);
  Table t{{"n", "b", "t", "beta", "purity_analytic", "purity_dense"}, {}};
  t.rows = parallel_map(pts.size(), [&](std::size_t i) {
    const ChainParams params(cfg.n, cfg.j, pts[i].b);
    const double beta = beta_of(pts[i].t);
    Value dense_value = std::monostate{};
    if (basis) dense_value = purity_dense(thermal_density_matrix(params, beta, *basis));
    return std::vector<Value>{std::int64_t{cfg.n}, pts[i].b, pts[i].t, beta, purity_analytic(params, beta),
                              dense_value};
  });
  return t;
}

Table run_purity_derivative(const RunConfig& cfg, json& meta) {
  if (!(cfg.step > 0.0)) throw UsageError("--step must be > 0");
  const Grid bs = axis(cfg.b, cfg.b_range, "b", kFigureField);
  const Grid ts = axis(cfg.t, cfg.t_range, "t", kDefaultTemperature);
  meta["b_grid"] = grid_json(bs);
  meta["t_grid"] = grid_json(ts);
  meta["step"] = cfg.step;
  const auto pts = product(bs, ts);
  Table t{{"n", "b", "t", "beta", "purity", "dpurity_db"}, {}};
  t.rows = parallel_map(pts.size(), [&](std::size_t i) {
    const double beta = beta_of(pts[i].t);
    const double b = pts[i].b;
    const double p = purity_analytic(ChainParams(cfg.n, cfg.j, b), beta);
    const double up = purity_analytic(ChainParams(cfg.n, cfg.j, b + cfg.step), beta);
    const double down = purity_analytic(ChainParams(cfg.n, cfg.j, b - cfg.step), beta);
    return std::vector<Value>{std::int64_t{cfg.n}, b, pts[i].t, beta, p, (up - down) / (2.0 * cfg.step)};
  });
  return t;
}

Table run_negativity(const RunConfig& cfg, json& meta, std::ostream& err) {
  const ChainParams base(cfg.n, cfg.j, 0.0);
  const BipartiteSplit split = cfg.split.empty() ? BipartiteSplit::halves(cfg.n) : BipartiteSplit::parse(cfg.n, cfg.split);
  const Grid bs = axis(cfg.b, cfg.b_range, "b", kDefaultField);
  const Grid ts = axis(cfg.t, cfg.t_range, "t", kDefaultTemperature);
  meta["b_grid"] = grid_json(bs);
  meta["t_grid"] = grid_json(ts);
  meta["split"] = split.to_string();
  const int cap = cfg.cap();
  require_within_cap(cfg.n, cap, "negativity");
  if (cfg.n == 2) {
    const double kt_c = critical_temperature_two_qubit(base);
    meta["kt_c"] = kt_c;
    err << "kT_c = " << format_double(kt_c) << "\n";
  }
  const EigenBasis basis(cfg.n, cap);
  const auto pts = product(bs, ts);
  Table t{{"n", "b", "t", "split", "negativity", "separable"}, {}};
  t.rows = parallel_map(pts.size(), [&](std::size_t i) {
    const ChainParams params(cfg.n, cfg.j, pts[i].b);
    const double beta = beta_of(pts[i].t);
    const double neg = negativity(thermal_density_matrix(params, beta, basis), split, cap);
    Value separable = std::monostate{};
    if (cfg.n == 2) {
      const auto p = two_qubit_populations(params, beta);
      separable = two_qubit_separable(p.up_up, p.singlet, p.triplet, p.down_down);
    }
    return std::vector<Value>{std::int64_t{cfg.n}, pts[i].b, pts[i].t, split.to_string(), neg, separable};
  });
  return t;
}

Table run_thermo_limit(const RunConfig& cfg, json& meta) {
  const Grid bs = axis(cfg.b, cfg.b_range, "b", kFigureField);
  const std::vector<int>& sizes = cfg.sizes;
  for (int n : sizes)
    if (n < 1) throw UsageError("sizes must be >= 1");
  meta["b_grid"] = grid_json(bs);
  meta["sizes"] = sizes;
  const auto fields = bs.values();
  Table t{{"n", "b", "energy_density", "limit", "deviation"}, {}};
  auto chunks = parallel_map(fields.size(), [&](std::size_t i) {
    return convergence_report(fields[i], sizes, cfg.j);
  });
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    for (const auto& chunk : chunks) {
      const auto& r = chunk[s];
      t.rows.push_back({std::int64_t{r.n}, r.b, r.energy_density, r.limit_value, r.deviation});
    }
  }
  return t;
}

Table run_validate(const RunConfig& cfg, bool& all_passed, std::ostream& err) {
  require_within_cap(ChainParams(cfg.n, cfg.j, 0.0).n, kOracleCap, "validate");
  const auto results = validate_chain(cfg.n, cfg.j);
  Table t{{"check", "passed", "max_error", "tolerance"}, {}};
  int failures = 0;
  for (const auto& r : results) {
    t.rows.push_back({r.name, r.passed, r.max_error, r.tolerance});
    if (!r.passed) ++failures;
  }
  all_passed = failures == 0;
  err << "validate: N=" << cfg.n << ", " << results.size() << " checks, " << failures << " failures\n";
  return t;
}

// Values such as "-1.5:1.5:121" would otherwise be read as short flags.
std::vector<std::string> attach_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].rfind("--", 0) == 0 && args[i].find('=') == std::string::npos && i + 1 < args.size() &&
        args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

json meta_of(const RunConfig& cfg) {
  json meta;
  meta["subcommand"] = cfg.subcommand;
  if (cfg.subcommand != "thermo-limit") meta["n"] = cfg.n;
  meta["j"] = cfg.j;
  if (cfg.b) meta["b"] = *cfg.b;
  if (cfg.b_range) meta["b_range"] = *cfg.b_range;
  if (cfg.t) meta["t"] = *cfg.t;
  if (cfg.t_range) meta["t_range"] = *cfg.t_range;
  meta["format"] = cfg.format;
  meta["output"] = cfg.output;
  meta["dense_cap"] = cfg.cap();
  return meta;
}

} // namespace

Grid Grid::parse(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
    throw UsageError("range must look like min:max:steps, got '" + text + "'");
  Grid g{};
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, c1), b = text.substr(c1 + 1, c2 - c1 - 1), s = text.substr(c2 + 1);
    g.min = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    g.max = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    g.steps = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (const std::logic_error&) {
    throw UsageError("range must look like min:max:steps, got '" + text + "'");
  }
  if (g.steps < 1) throw UsageError("range needs steps >= 1");
  if (!(g.min <= g.max)) throw UsageError("range needs min <= max");
  return g;
}

double Grid::at(int i) const {
  if (steps == 1) return min;
  if (i == steps - 1) return max;
  return min + (max - min) * i / (steps - 1);
}

std::vector<double> Grid::values() const {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) v[static_cast<std::size_t>(i)] = at(i);
  return v;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact solutions of the open XX spin chain in a transverse field", "xxchain"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub, bool n_required = true) {
    auto* n_opt = sub->add_option("--n", cfg.n, "number of spins");
    if (n_required) n_opt->required();
    sub->add_option("--j", cfg.j, "coupling J (default 1)");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", cfg.output, "output path ('-' for stdout)");
    sub->add_option("--dense-cap", cfg.dense_cap, "dense-matrix size cap override (<= 12)");
  };
  auto b_axis = [&](CLI::App* sub) {
    sub->add_option("--b", cfg.b, "transverse field");
    sub->add_option("--b-range", cfg.b_range, "field grid min:max:steps");
  };
  auto t_axis = [&](CLI::App* sub) {
    sub->add_option("--t", cfg.t, "temperature, k_B = 1 (0 means the ground-state limit)");
    sub->add_option("--t-range", cfg.t_range, "temperature grid min:max:steps");
  };

  auto* spectrum = app.add_subcommand("spectrum", "all 2^N energies over a field grid");
  common(spectrum);
  b_axis(spectrum);
  auto* ground = app.add_subcommand("ground-state", "spin-basis amplitudes of a sector ground state");
  common(ground);
  ground->add_option("--k", cfg.k, "sector (number of flipped spins)");
  ground->add_option("--b", cfg.b, "pick the ground sector at this field");
  auto* crossings = app.add_subcommand("crossings", "ground-state level-crossing fields B_k");
  common(crossings);
  auto* thermal = app.add_subcommand("thermal", "Boltzmann populations over (B, T)");
  common(thermal);
  b_axis(thermal);
  t_axis(thermal);
  auto* purity = app.add_subcommand("purity", "thermal-state purity over (B, T)");
  common(purity);
  b_axis(purity);
  t_axis(purity);
  purity->add_flag("--no-dense", cfg.no_dense, "skip the dense cross-check column");
  auto* deriv = app.add_subcommand("purity-derivative", "centered difference dPurity/dB");
  common(deriv);
  b_axis(deriv);
  t_axis(deriv);
  deriv->add_option("--step", cfg.step, "finite-difference step in B (default 1e-4)");
  auto* neg = app.add_subcommand("negativity", "negativity of the thermal state; kT_c for N=2");
  common(neg);
  b_axis(neg);
  t_axis(neg);
  neg->add_option("--split", cfg.split, "bipartition such as '1,2|3,4' (default: halves)");
  auto* limit = app.add_subcommand("thermo-limit", "infinite-chain energy density and finite-size deviations");
  common(limit, false);
  b_axis(limit);
  limit->add_option("--sizes", cfg.sizes, "chain sizes for the convergence report (default 50)")->delimiter(',');
  auto* validate = app.add_subcommand("validate", "cross-check closed forms against the dense oracle");
  common(validate);

  auto args = attach_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "thermo-limit" && cfg.sizes.empty())
    cfg.sizes = {limit->count("--n") > 0 ? cfg.n : 50};

  try {
    json meta = meta_of(cfg);
    bool ok = true;
    Table table;
    if (cfg.subcommand == "spectrum") table = run_spectrum(cfg, meta);
    else if (cfg.subcommand == "ground-state") table = run_ground_state(cfg, meta, err);
    else if (cfg.subcommand == "crossings") table = run_crossings(cfg);
    else if (cfg.subcommand == "thermal") table = run_thermal(cfg, meta);
    else if (cfg.subcommand == "purity") table = run_purity(cfg, meta);
    else if (cfg.subcommand == "purity-derivative") table = run_purity_derivative(cfg, meta);
    else if (cfg.subcommand == "negativity") table = run_negativity(cfg, meta, err);
    else if (cfg.subcommand == "thermo-limit") table = run_thermo_limit(cfg, meta);
    else table = run_validate(cfg, ok, err);
    emit(table, cfg.format == "json" ? Format::json : Format::csv, cfg.output, meta, out);
    return ok ? kExitOk : kExitFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

} // namespace xxchain::cli
