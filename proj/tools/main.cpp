// secure-ia: command-line front end for the interference-alignment
// transceiver designs (feasibility checks, convergence traces, SNR and
// eavesdropper-antenna sweeps).

#include "CLI11.hpp"
#include "secia/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace secia;

// Usage/config mistakes exit 2; algorithm and I/O failures exit 1.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int log_level() {
  const char* v = std::getenv("SECURE_IA_LOG");
  if (!v || !*v) return 0;
  const std::string s(v);
  if (s == "debug" || s == "2") return 2;
  if (s == "info" || s == "1") return 1;
  return 0;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::fprintf(stderr, "[secure-ia] %s\n", msg.c_str());
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::fprintf(stderr, "[secure-ia:debug] %s\n", msg.c_str());
}

struct Preset {
  int K, M, N, Ne, d;
};

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = {
      {"9963", {3, 9, 9, 6, 3}},      {"9x9-6-3", {3, 9, 9, 6, 3}},
      {"9993", {3, 9, 9, 9, 3}},      {"9x9-9-3", {3, 9, 9, 9, 3}},
      {"151593", {3, 15, 15, 9, 3}},  {"15x15-9-3", {3, 15, 15, 9, 3}},
      {"1515183", {3, 15, 15, 18, 3}},{"15x15-18-3", {3, 15, 15, 18, 3}},
      {"6642", {3, 6, 6, 4, 2}},      {"6x6-4-2", {3, 6, 6, 4, 2}},
      {"9933", {3, 9, 9, 3, 3}},      {"9x9-3-3", {3, 9, 9, 3, 3}},
  };
  return table;
}

// Everything the three subcommands can consume. Precedence when a value is
// given several ways: explicit flag > config file > preset > default.
struct Options {
  int K = 3, M = 9, N = 9, Ne = 6, d = 3;
  bool dim_set[5] = {false, false, false, false, false};  // K M N Ne d
  std::string preset;
  std::vector<std::string> schemes;
  std::string mode;
  double snr_min = 0.0, snr_max = 50.0, snr_step = 5.0, snr = 30.0;
  std::vector<int> ne_points;
  int trials = 200;
  std::uint64_t seed = 1;
  int kappa_max = 500;
  double eps_leakage = 1e-10, eps_delta = 1e-14;
  std::string out;
  int jobs = 0;
  bool validate_scaling = false;
  std::string config_file;
  std::string dump_channels_path;
  std::string channels_path;
};

long long parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw CliError("config: value of '" + key + "' is not an integer: " + v);
  }
}

double parse_real(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw CliError("config: value of '" + key + "' is not a number: " + v);
  }
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw CliError("config: value of '" + key + "' is not a boolean: " + v);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= v.size()) {
    const std::size_t comma = v.find(',', start);
    const std::string item = v.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
    if (!item.empty()) parts.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const std::size_t a = s.find_first_not_of(ws);
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(ws);
  return s.substr(a, b - a + 1);
}

struct ConfigEntry {
  std::string section;  // "" for the global section
  std::string key;
  std::string value;
};

std::vector<ConfigEntry> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("config: cannot open " + path);
  std::vector<ConfigEntry> entries;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw CliError("config: " + path + ":" + std::to_string(lineno) + ": bad section");
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw CliError("config: " + path + ":" + std::to_string(lineno) +
                     ": expected key = value");
    entries.push_back({section, trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
  }
  return entries;
}

// Applies file entries to `o` for every key that was not set by an explicit
// flag. Unknown keys and unknown sections are rejected.
void apply_config_file(Options& o, const std::map<std::string, bool>& flag_given) {
  const std::vector<ConfigEntry> entries = read_config_file(o.config_file);
  for (const ConfigEntry& e : entries)
    if (!e.section.empty() && e.section != "snr" && e.section != "ne")
      throw CliError("config: unknown section [" + e.section + "]");

  std::map<std::string, std::function<void(const std::string&)>> setters = {
      {"K", [&](const std::string& v) { o.K = static_cast<int>(parse_int(v, "K")); o.dim_set[0] = true; }},
      {"M", [&](const std::string& v) { o.M = static_cast<int>(parse_int(v, "M")); o.dim_set[1] = true; }},
      {"N", [&](const std::string& v) { o.N = static_cast<int>(parse_int(v, "N")); o.dim_set[2] = true; }},
      {"Ne", [&](const std::string& v) { o.Ne = static_cast<int>(parse_int(v, "Ne")); o.dim_set[3] = true; }},
      {"d", [&](const std::string& v) { o.d = static_cast<int>(parse_int(v, "d")); o.dim_set[4] = true; }},
      {"preset", [&](const std::string& v) { o.preset = v; }},
      {"scheme", [&](const std::string& v) { o.schemes = split_list(v); }},
      {"snr-min", [&](const std::string& v) { o.snr_min = parse_real(v, "snr-min"); }},
      {"snr-max", [&](const std::string& v) { o.snr_max = parse_real(v, "snr-max"); }},
      {"snr-step", [&](const std::string& v) { o.snr_step = parse_real(v, "snr-step"); }},
      {"snr", [&](const std::string& v) { o.snr = parse_real(v, "snr"); }},
      {"ne", [&](const std::string& v) {
         o.ne_points.clear();
         for (const std::string& item : split_list(v))
           o.ne_points.push_back(static_cast<int>(parse_int(item, "ne")));
       }},
      {"trials", [&](const std::string& v) { o.trials = static_cast<int>(parse_int(v, "trials")); }},
      {"seed", [&](const std::string& v) { o.seed = static_cast<std::uint64_t>(parse_int(v, "seed")); }},
      {"kappa-max", [&](const std::string& v) { o.kappa_max = static_cast<int>(parse_int(v, "kappa-max")); }},
      {"eps-leakage", [&](const std::string& v) { o.eps_leakage = parse_real(v, "eps-leakage"); }},
      {"eps-delta", [&](const std::string& v) { o.eps_delta = parse_real(v, "eps-delta"); }},
      {"out", [&](const std::string& v) { o.out = v; }},
      {"jobs", [&](const std::string& v) { o.jobs = static_cast<int>(parse_int(v, "jobs")); }},
      {"validate-scaling", [&](const std::string& v) { o.validate_scaling = parse_bool(v, "validate-scaling"); }},
      {"mode", [&](const std::string& v) { o.mode = v; }},
  };

  auto apply = [&](const ConfigEntry& e) {
    const auto setter = setters.find(e.key);
    if (setter == setters.end()) throw CliError("config: unknown key '" + e.key + "'");
    const auto given = flag_given.find(e.key);
    if (given != flag_given.end() && given->second) return;  // flag wins
    setter->second(e.value);
  };

  // Global entries first (they may select the mode), then the section
  // matching the selected experiment.
  for (const ConfigEntry& e : entries) {
    if (!e.section.empty()) continue;
    apply(e);
  }
  for (const ConfigEntry& e : entries) {
    if (e.section.empty()) continue;
    if (e.key == "mode") throw CliError("config: 'mode' must be global, not per-section");
    if (e.section == o.mode) apply(e);
  }
}

void apply_preset(Options& o) {
  if (o.preset.empty()) return;
  const auto it = presets().find(o.preset);
  if (it == presets().end()) {
    std::string known;
    for (const auto& [name, p] : presets()) known += name + " ";
    throw CliError("unknown preset '" + o.preset + "' (known: " + known + ")");
  }
  const Preset& p = it->second;
  if (!o.dim_set[0]) o.K = p.K;
  if (!o.dim_set[1]) o.M = p.M;
  if (!o.dim_set[2]) o.N = p.N;
  if (!o.dim_set[3]) o.Ne = p.Ne;
  if (!o.dim_set[4]) o.d = p.d;
}

SystemConfig make_config(const Options& o, double pt) {
  SystemConfig cfg;
  cfg.K = o.K;
  cfg.M = o.M;
  cfg.N = o.N;
  cfg.Ne = o.Ne;
  cfg.d = o.d;
  cfg.Pt = pt;
  cfg.sigma2 = 1.0;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw CliError(e.what());
  }
  return cfg;
}

IAOptions make_ia_options(const Options& o) {
  IAOptions opts;
  opts.kappa_max = o.kappa_max;
  opts.eps_leakage = o.eps_leakage;
  opts.eps_delta = o.eps_delta;
  opts.init_seed = o.seed;
  try {
    opts.validate();
  } catch (const std::invalid_argument& e) {
    throw CliError(e.what());
  }
  return opts;
}

std::vector<Scheme> make_schemes(const Options& o) {
  std::vector<std::string> names = o.schemes;
  if (names.empty()) names = {"conventional", "wslm", "zfws"};
  std::vector<Scheme> out;
  for (const std::string& n : names) {
    for (const std::string& item : split_list(n)) {
      try {
        out.push_back(scheme_from_name(item));
      } catch (const std::invalid_argument& e) {
        throw CliError(e.what());
      }
    }
  }
  return out;
}

std::string system_label(const Options& o) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%dx%d,%d,%d)^%d", o.M, o.N, o.Ne, o.d, o.K);
  return buf;
}

std::filesystem::path sibling_csv(const std::filesystem::path& out, const char* suffix) {
  std::filesystem::path p = out;
  const std::string stem = p.stem().string();
  p.replace_filename(stem + suffix + ".csv");
  return p;
}

int cmd_feasible(const Options& o) {
  const SystemConfig cfg = make_config(o, 1.0);
  const WslmFeasibility wf = wslm_feasible(cfg);
  const ZfwsFeasibility zf = zfws_feasible(cfg);
  const long long lhs = 1LL * cfg.K * (cfg.M + cfg.N) - (1LL * cfg.K * cfg.K + 1) * cfg.d;
  const long long rhs = 1LL * cfg.Ne * (cfg.K - 1);
  std::printf("system %s: wslm=%s zfws=%s\n", system_label(o).c_str(),
              wf.feasible ? "true" : "false", zf.feasible ? "true" : "false");
  std::printf("wslm: Nv = %lld, Neq = %lld; proper-system check K(M+N) - (K^2+1)d = %lld >= "
              "(K-1)Ne = %lld -> %s; Ne >= d -> %s\n",
              wf.Nv, wf.Neq, lhs, rhs, lhs >= rhs ? "true" : "false",
              cfg.Ne >= cfg.d ? "true" : "false");
  std::printf("zfws: antenna check M - d = %d >= Ne = %d -> %s; subspace check N = %d >= "
              "K*d = %d -> %s\n",
              cfg.M - cfg.d, cfg.Ne, zf.antenna_ok ? "true" : "false", cfg.N,
              cfg.K * cfg.d, zf.subspace_ok ? "true" : "false");
  return 0;
}

int cmd_converge(Options o) {
  if (o.schemes.size() != 1)
    throw CliError("converge: exactly one --scheme is required");
  Scheme scheme;
  try {
    scheme = scheme_from_name(o.schemes[0]);
  } catch (const std::invalid_argument& e) {
    throw CliError(e.what());
  }
  const SystemConfig cfg = make_config(o, snr_to_power(o.snr, 1.0));
  const IAOptions opts = make_ia_options(o);
  if (o.out.empty()) o.out = "trace.csv";

  log_info("converge: scheme=" + std::string(scheme_name(scheme)) + " system=" +
           system_label(o) + " seed=" + std::to_string(o.seed));

  IATrace trace;
  if (!o.channels_path.empty()) {
    const ChannelSet ch = read_channel_dump(o.channels_path);
    const ChannelDims& dims = ch.dims();
    if (dims.K != cfg.K || dims.M != cfg.M || dims.N != cfg.N || dims.Ne != cfg.Ne ||
        dims.d != cfg.d)
      throw CliError("converge: channel dump dimensions do not match the requested system");
    if (!o.dump_channels_path.empty()) write_channel_dump(ch, o.dump_channels_path);
    switch (scheme) {
      case Scheme::conventional: trace = conventional_ia(ch, cfg, opts).second; break;
      case Scheme::wslm: trace = wslm_ia(ch, cfg, opts).second; break;
      case Scheme::zfws: trace = zfws_ia(ch, cfg, opts).second; break;
    }
  } else {
    if (!o.dump_channels_path.empty())
      write_channel_dump(draw_channels(cfg, o.seed), o.dump_channels_path);
    trace = run_convergence(cfg, scheme, opts, o.seed);
  }

  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw std::runtime_error("converge: cannot open " + o.out);
  out << "iteration,leakage\n";
  char line[64];
  for (std::size_t i = 0; i < trace.leakage.size(); ++i) {
    std::snprintf(line, sizeof line, "%zu,%.17g\n", i, trace.leakage[i]);
    out << line;
  }
  if (!out) throw std::runtime_error("converge: write failed for " + o.out);

  std::printf("scheme=%s system=%s termination=%s iterations=%d final_leakage=%.6g "
              "trace=%s\n",
              scheme_name(scheme), system_label(o).c_str(),
              termination_name(trace.termination), trace.iterations(),
              trace.leakage.back(), o.out.c_str());
  return 0;
}

int cmd_sweep(Options o) {
  if (o.mode != "snr" && o.mode != "ne")
    throw CliError("sweep: --mode must be 'snr' or 'ne'");
  if (o.out.empty()) o.out = "results.csv";

  ExperimentSpec spec;
  spec.config = make_config(o, 1.0);
  spec.schemes = make_schemes(o);
  spec.trials = o.trials;
  spec.master_seed = o.seed;
  spec.opts = make_ia_options(o);
  spec.jobs = o.jobs;

  double pt_low = 1.0, pt_high = 1.0;
  if (o.mode == "snr") {
    if (o.snr_min > o.snr_max) throw CliError("sweep: snr-min exceeds snr-max");
    if (o.snr_min < o.snr_max && !(o.snr_step > 0.0))
      throw CliError("sweep: snr-step must be positive");
    for (double x = o.snr_min; x <= o.snr_max + 1e-9;
         x += (o.snr_step > 0.0 ? o.snr_step : 1.0))
      spec.snr_points.push_back(x);
    pt_low = snr_to_power(o.snr_min, 1.0);
    pt_high = snr_to_power(o.snr_max, 1.0);
  } else {
    if (o.ne_points.empty()) throw CliError("sweep: --mode ne requires --ne (e.g. --ne 3,6,9)");
    spec.snr_points = {o.snr};
    spec.ne_points = o.ne_points;
    pt_high = snr_to_power(o.snr, 1.0);
  }

  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw CliError(e.what());
  }

  log_info("sweep: mode=" + o.mode + " system=" + system_label(o) + " trials=" +
           std::to_string(spec.trials) + " seed=" + std::to_string(spec.master_seed));
  log_debug("sweep: snr points=" + std::to_string(spec.snr_points.size()) + " ne points=" +
            std::to_string(spec.ne_points.size()) + " jobs=" + std::to_string(spec.jobs));

  SweepResult result;
  std::vector<ImprovementRow> improvements;
  if (o.mode == "snr") {
    result = run_snr_sweep(spec);
  } else {
    NeSweepOutcome outcome = run_ne_sweep(spec);
    result = std::move(outcome.result);
    improvements = std::move(outcome.improvements);
  }

  write_csv(result, o.out);
  const std::filesystem::path agg_path = sibling_csv(o.out, "-agg");
  write_aggregate_csv(result, agg_path);

  std::printf("%-14s %8s %4s %12s %12s %6s\n", "scheme", "snr_db", "ne", "mean_ssr",
              "std_ssr", "n");
  for (const SsrAggregate& a : result.aggregates)
    std::printf("%-14s %8g %4d %12.4f %12.4f %6d\n", scheme_name(a.scheme), a.snr_db, a.ne,
                a.mean_ssr, a.std_ssr, a.n);

  if (!improvements.empty()) {
    const std::filesystem::path imp_path = sibling_csv(o.out, "-improvement");
    std::ofstream imp(imp_path, std::ios::binary);
    if (!imp) throw std::runtime_error("sweep: cannot open " + imp_path.string());
    imp << "scheme,ne,improvement,wslm_feasible,zfws_feasible\n";
    std::printf("\nmean ssr improvement over conventional:\n");
    std::printf("%-14s %4s %14s %14s %14s\n", "scheme", "ne", "improvement",
                "wslm_feasible", "zfws_feasible");
    char line[160];
    for (const ImprovementRow& r : improvements) {
      std::printf("%-14s %4d %14.6f %14s %14s\n", scheme_name(r.scheme), r.ne,
                  r.improvement, r.wslm_ok ? "true" : "false", r.zfws_ok ? "true" : "false");
      std::snprintf(line, sizeof line, "%s,%d,%.17g,%d,%d\n", scheme_name(r.scheme), r.ne,
                    r.improvement, r.wslm_ok ? 1 : 0, r.zfws_ok ? 1 : 0);
      imp << line;
    }
    if (!imp) throw std::runtime_error("sweep: write failed for " + imp_path.string());
    std::printf("improvement table: %s\n", imp_path.string().c_str());
  }
  std::printf("rows: %s\naggregates: %s\n", o.out.c_str(), agg_path.string().c_str());

  if (o.validate_scaling) {
    if (pt_low == pt_high) pt_high = pt_low * 1000.0;
    const int seeds = std::min(spec.trials, 5);
    double worst = 0.0;
    for (Scheme s : spec.schemes)
      for (int t = 0; t < seeds; ++t) {
        IAOptions topts = spec.opts;
        topts.init_seed = trial_seed(spec.opts.init_seed, t);
        const double angle = scaling_alignment_angle(
            spec.config, s, topts, trial_seed(spec.master_seed, t), pt_low, pt_high);
        worst = std::max(worst, angle);
        log_debug("scaling check: scheme=" + std::string(scheme_name(s)) + " trial=" +
                  std::to_string(t) + " angle=" + std::to_string(angle));
      }
    std::printf("scaling validation: max principal angle %.3e rad between Pt=%.6g and "
                "Pt=%.6g\n",
                worst, pt_low, pt_high);
    if (worst > 1e-8) {
      std::fprintf(stderr, "error: precoder subspaces drift with power (angle %.3e > 1e-8)\n",
                   worst);
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interference-alignment transceiver designs for the multiuser MIMO wiretap "
               "network: feasibility, convergence traces, secrecy-rate sweeps"};
  app.set_version_flag("--version", "secure-ia 0.1.0");
  app.require_subcommand(1);

  Options o;
  std::map<std::string, bool> flag_given;

  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--K", o.K, "transmit/receive pairs");
    sub->add_option("--M", o.M, "transmit antennas per node");
    sub->add_option("--N", o.N, "receive antennas per node");
    sub->add_option("--Ne", o.Ne, "eavesdropper antennas");
    sub->add_option("--d", o.d, "data streams per pair");
    sub->add_option("--preset", o.preset,
                    "named system, e.g. 9963, 9993, 151593, 1515183, 6642, 9933");
  };
  auto add_termination = [&](CLI::App* sub) {
    sub->add_option("--kappa-max", o.kappa_max, "iteration cap");
    sub->add_option("--eps-leakage", o.eps_leakage, "leakage convergence threshold");
    sub->add_option("--eps-delta", o.eps_delta, "stagnation threshold");
  };

  CLI::App* feasible = app.add_subcommand("feasible", "classify a system's feasibility");
  add_dims(feasible);

  CLI::App* converge = app.add_subcommand("converge", "single-run leakage trace");
  add_dims(converge);
  add_termination(converge);
  converge->add_option("--scheme", o.schemes, "conventional | wslm | zfws");
  converge->add_option("--snr", o.snr, "operating SNR in dB (sigma2 = 1)");
  converge->add_option("--seed", o.seed, "channel and precoder-init seed");
  converge->add_option("--out", o.out, "trace CSV path (default trace.csv)");
  converge->add_option("--dump-channels", o.dump_channels_path,
                       "also write the channel realization to this path");
  converge->add_option("--channels", o.channels_path,
                       "run on a previously dumped channel realization");

  CLI::App* sweep = app.add_subcommand("sweep", "Monte-Carlo secrecy-rate experiments");
  add_dims(sweep);
  add_termination(sweep);
  sweep->add_option("--mode", o.mode, "snr | ne");
  sweep->add_option("--scheme", o.schemes, "schemes to run (repeat or comma-separate)")
      ->delimiter(',');
  sweep->add_option("--snr-min", o.snr_min, "sweep start, dB");
  sweep->add_option("--snr-max", o.snr_max, "sweep end, dB");
  sweep->add_option("--snr-step", o.snr_step, "sweep step, dB");
  sweep->add_option("--snr", o.snr, "fixed SNR for --mode ne, dB");
  sweep->add_option("--ne", o.ne_points, "eavesdropper antenna counts, e.g. 3,6,9")
      ->delimiter(',');
  sweep->add_option("--trials", o.trials, "channel realizations per cell");
  sweep->add_option("--seed", o.seed, "master seed");
  sweep->add_option("--out", o.out, "raw rows CSV path (default results.csv)");
  sweep->add_option("--jobs", o.jobs, "worker threads (0 = all logical processors)");
  sweep->add_flag("--validate-scaling", o.validate_scaling,
                  "re-run alignment across the power range and check precoder invariance");
  sweep->add_option("--config", o.config_file, "key = value experiment file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CLI::App* active = feasible->parsed() ? feasible : converge->parsed() ? converge : sweep;
    for (const CLI::Option* opt : active->get_options()) {
      const std::string name = opt->get_name();
      if (name.rfind("--", 0) == 0) flag_given[name.substr(2)] = opt->count() > 0;
    }
    o.dim_set[0] = flag_given["K"];
    o.dim_set[1] = flag_given["M"];
    o.dim_set[2] = flag_given["N"];
    o.dim_set[3] = flag_given["Ne"];
    o.dim_set[4] = flag_given["d"];

    if (!o.config_file.empty()) apply_config_file(o, flag_given);
    apply_preset(o);

    if (feasible->parsed()) return cmd_feasible(o);
    if (converge->parsed()) return cmd_converge(o);
    return cmd_sweep(o);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
