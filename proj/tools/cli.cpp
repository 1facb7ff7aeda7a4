#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>

#include "modknot/enumeration.hpp"
#include "modknot/error.hpp"
#include "modknot/statistics.hpp"
#include "modknot/symbols.hpp"
#include "modknot/winding.hpp"

namespace modknot::cli {

using json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::Enumerate: return "enumerate";
    case Command::Symbols: return "symbols";
    case Command::Density: return "density";
    case Command::Cauchy: return "cauchy";
    case Command::Winding: return "winding";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::vector<double> default_bin_edges() {
  return {-2.0, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0, 2.0};
}

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv); env != nullptr && *env != '\0') {
    int n = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, n);
    if (ec != std::errc() || ptr != end || n < 1) {
      throw ConfigError(std::string(kWorkersEnv) + " must be a positive integer");
    }
    return n;
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

json int_json(const Integer& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

json double_json(double x) {
  if (std::isinf(x)) return json(nullptr);
  return json(x);
}

void validate(const RunConfig& cfg) {
  const bool wants_length = cfg.command == Command::Cauchy;
  if (wants_length) {
    if (!cfg.length_bound) throw ConfigError("cauchy requires --length-bound");
    if (cfg.trace_bound) throw ConfigError("cauchy takes --length-bound, not --trace-bound");
    if (!(*cfg.length_bound > 0.0) || !std::isfinite(*cfg.length_bound)) {
      throw ConfigError("--length-bound must be positive");
    }
  } else {
    if (!cfg.trace_bound) {
      throw ConfigError(std::string(command_name(cfg.command)) + " requires --trace-bound");
    }
    if (cfg.length_bound) {
      throw ConfigError(std::string(command_name(cfg.command)) +
                        " takes --trace-bound, not --length-bound");
    }
    if (*cfg.trace_bound < 3) throw ConfigError("--trace-bound must be >= 3");
  }
  if (cfg.command == Command::Density && cfg.modulus < 2) throw ConfigError("--mod must be >= 2");
  if (cfg.worker_count < 1) throw ConfigError("--workers must be positive");
  if (cfg.n_samples < 8) throw ConfigError("--samples must be >= 8");
  for (std::size_t i = 1; i < cfg.bin_edges.size(); ++i) {
    if (!(cfg.bin_edges[i - 1] < cfg.bin_edges[i])) {
      throw ConfigError("--bins must be strictly increasing");
    }
  }
}

std::vector<ClassRecord> enumerate_for(const RunConfig& cfg) {
  EnumerationParams p;
  p.trace_bound = *cfg.trace_bound;
  p.worker_count = cfg.worker_count;
  return enumerate_classes(p);
}

void emit_classes(const RunConfig& cfg, std::ostream& out, bool with_symbols) {
  const auto records = enumerate_for(cfg);
  if (cfg.format == Format::Csv) {
    out << "necklace,a,b,c,d,trace,length";
    if (with_symbols) out << ",phi,psi,psi_word";
    out << '\n';
    for (const ClassRecord& r : records) {
      out << r.necklace.str() << ',' << r.rep.a().get_str() << ',' << r.rep.b().get_str() << ','
          << r.rep.c().get_str() << ',' << r.rep.d().get_str() << ','
          << r.spectral.trace.get_str() << ',' << format_double(r.spectral.length);
      if (with_symbols) {
        const SymbolRecord s = symbols_of(r.rep, r.necklace);
        out << ',' << s.phi << ',' << s.psi << ',' << s.psi_word;
      }
      out << '\n';
    }
    return;
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command_name(cfg.command);
  doc["trace_bound"] = *cfg.trace_bound;
  json rows = json::array();
  for (const ClassRecord& r : records) {
    json row;
    row["necklace"] = r.necklace.str();
    row["a"] = int_json(r.rep.a());
    row["b"] = int_json(r.rep.b());
    row["c"] = int_json(r.rep.c());
    row["d"] = int_json(r.rep.d());
    row["trace"] = int_json(r.spectral.trace);
    row["length"] = r.spectral.length;
    if (with_symbols) {
      const SymbolRecord s = symbols_of(r.rep, r.necklace);
      row["phi"] = s.phi;
      row["psi"] = s.psi;
      row["psi_word"] = s.psi_word;
    }
    rows.push_back(std::move(row));
  }
  doc["records"] = std::move(rows);
  out << doc.dump() << '\n';
}

void emit_density(const RunConfig& cfg, std::ostream& out) {
  const DensityReport rep = density_mod_m(*cfg.trace_bound, cfg.modulus, cfg.worker_count);
  if (cfg.format == Format::Csv) {
    const double target = 1.0 / static_cast<double>(rep.modulus);
    out << "residue,count,density,deviation\n";
    for (std::size_t k = 0; k < rep.counts.size(); ++k) {
      out << k << ',' << rep.counts[k] << ',' << format_double(rep.densities[k]) << ','
          << format_double(std::fabs(rep.densities[k] - target)) << '\n';
    }
    return;
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "density";
  doc["trace_bound"] = rep.nu;
  doc["modulus"] = rep.modulus;
  doc["total"] = rep.total();
  doc["counts"] = rep.counts;
  doc["densities"] = rep.densities;
  doc["max_deviation"] = rep.max_deviation;
  out << doc.dump() << '\n';
}

void emit_cauchy(const RunConfig& cfg, std::ostream& out) {
  const std::vector<double> edges = cfg.bin_edges.empty() ? default_bin_edges() : cfg.bin_edges;
  const CauchyReport rep = cauchy_cdf_compare(*cfg.length_bound, edges, cfg.worker_count);
  if (cfg.format == Format::Csv) {
    out << "lo,hi,empirical,theoretical\n";
    for (const CauchyBin& b : rep.bins) {
      out << format_double(b.lo) << ',' << format_double(b.hi) << ','
          << format_double(b.empirical) << ',' << format_double(b.theoretical) << '\n';
    }
    return;
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "cauchy";
  doc["length_bound"] = rep.length_bound;
  doc["sample_count"] = rep.sample_count;
  doc["ks_distance"] = rep.ks_distance;
  json bins = json::array();
  for (const CauchyBin& b : rep.bins) {
    bins.push_back({{"lo", double_json(b.lo)},
                    {"hi", double_json(b.hi)},
                    {"empirical", b.empirical},
                    {"theoretical", b.theoretical}});
  }
  doc["bins"] = std::move(bins);
  out << doc.dump() << '\n';
}

// Returns false if any class disagrees.
bool emit_winding(const RunConfig& cfg, std::ostream& out) {
  const auto records = enumerate_for(cfg);
  bool all_match = true;
  json rows = json::array();
  if (cfg.format == Format::Csv) out << "necklace,trace,psi,winding,residual,samples,match\n";
  for (const ClassRecord& r : records) {
    const std::int64_t ps = psi(r.rep);
    const WindingResult w = winding_details(orbit_samples(r.rep, cfg.n_samples, cfg.n_terms));
    const bool match = w.winding == ps;
    all_match = all_match && match;
    if (cfg.format == Format::Csv) {
      out << r.necklace.str() << ',' << r.spectral.trace.get_str() << ',' << ps << ','
          << w.winding << ',' << format_double(w.residual) << ',' << w.samples << ','
          << (match ? "true" : "false") << '\n';
    } else {
      rows.push_back({{"necklace", r.necklace.str()},
                      {"trace", int_json(r.spectral.trace)},
                      {"psi", ps},
                      {"winding", w.winding},
                      {"residual", w.residual},
                      {"samples", w.samples},
                      {"match", match}});
    }
  }
  if (cfg.format == Format::Json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "winding";
    doc["trace_bound"] = *cfg.trace_bound;
    doc["records"] = std::move(rows);
    out << doc.dump() << '\n';
  }
  return all_match;
}

bool emit_verify(const RunConfig& cfg, std::ostream& out) {
  const auto checks = run_verification(cfg);
  bool ok = true;
  json rows = json::array();
  for (const CheckResult& c : checks) {
    ok = ok && c.passed;
    if (cfg.format == Format::Csv) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      out << '\n';
    } else {
      rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
  }
  if (cfg.format == Format::Json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["trace_bound"] = *cfg.trace_bound;
    doc["passed"] = ok;
    doc["checks"] = std::move(rows);
    out << doc.dump() << '\n';
  }
  return ok;
}

}  // namespace

std::string format_double(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Modular knot enumeration and Rademacher symbol statistics", "modknot"};
  app.require_subcommand(1);

  std::int64_t trace_bound = 0;
  double length_bound = 0.0;
  std::string format = "csv";
  std::optional<int> workers;

  auto add_common = [&](CLI::App* sub, bool with_trace, bool with_length) {
    if (with_trace) sub->add_option("--trace-bound", trace_bound, "strict upper bound on the trace");
    if (with_length) sub->add_option("--length-bound", length_bound, "strict upper bound on the length");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", workers, "enumeration worker threads (default: $MODKNOT_WORKERS or all cores)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list classes with trace below the bound");
  add_common(enumerate, true, false);
  auto* symbols = app.add_subcommand("symbols", "list classes with Phi, Psi and the word count");
  add_common(symbols, true, false);
  auto* density = app.add_subcommand("density", "distribution of Psi mod m");
  add_common(density, true, false);
  density->add_option("--mod", cfg.modulus, "modulus m >= 2")->required();
  auto* cauchy = app.add_subcommand("cauchy", "Psi / length against the Cauchy law");
  add_common(cauchy, false, true);
  cauchy->add_option("--bins", cfg.bin_edges, "strictly increasing bin edges")->delimiter(',');
  auto* winding = app.add_subcommand("winding", "winding number of Delta v^6 vs Psi");
  add_common(winding, true, false);
  winding->add_option("--samples", cfg.n_samples, "initial samples per orbit");
  winding->add_option("--terms", cfg.n_terms, "q-product terms (0: automatic)");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(verify, true, false);
  verify->add_option("--oracle-guard", cfg.oracle_guard, "largest bound for the brute-force oracle");
  verify->add_option("--samples", cfg.n_samples, "initial samples per orbit");
  verify->add_option("--terms", cfg.n_terms, "q-product terms (0: automatic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, 0};
  } catch (const CLI::ParseError& e) {
    err << "modknot: " << e.what() << '\n';
    return {std::nullopt, 2};
  }

  const std::pair<CLI::App*, Command> table[] = {
      {enumerate, Command::Enumerate}, {symbols, Command::Symbols}, {density, Command::Density},
      {cauchy, Command::Cauchy},       {winding, Command::Winding}, {verify, Command::Verify}};
  for (const auto& [sub, command] : table) {
    if (!sub->parsed()) continue;
    cfg.command = command;
    if (sub->get_option_no_throw("--trace-bound") != nullptr &&
        sub->count("--trace-bound") > 0) {
      cfg.trace_bound = trace_bound;
    }
    if (sub->get_option_no_throw("--length-bound") != nullptr &&
        sub->count("--length-bound") > 0) {
      cfg.length_bound = length_bound;
    }
  }
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  try {
    cfg.worker_count = workers ? *workers : default_workers();
  } catch (const ConfigError& e) {
    err << "modknot: " << e.what() << '\n';
    return {std::nullopt, 2};
  }
  return {cfg, 0};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "modknot: " << e.what() << '\n';
    return 2;
  }
  try {
    switch (cfg.command) {
      case Command::Enumerate: emit_classes(cfg, out, false); return 0;
      case Command::Symbols: emit_classes(cfg, out, true); return 0;
      case Command::Density: emit_density(cfg, out); return 0;
      case Command::Cauchy: emit_cauchy(cfg, out); return 0;
      case Command::Winding:
        if (!emit_winding(cfg, out)) {
          err << "modknot: winding disagrees with Psi\n";
          return 1;
        }
        return 0;
      case Command::Verify:
        if (!emit_verify(cfg, out)) {
          err << "modknot: verification failed\n";
          return 1;
        }
        return 0;
    }
  } catch (const Error& e) {
    err << "modknot: " << e.what() << '\n';
    return e.code() == Errc::InvalidArgument ? 2 : 1;
  }
  return 1;
}

}  // namespace modknot::cli
