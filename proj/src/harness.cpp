#include "secia/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

namespace secia {

void ExperimentSpec::validate() const {
  config.validate();
  opts.validate();
  if (trials < 1) throw std::invalid_argument("ExperimentSpec: trials must be >= 1");
  if (snr_points.empty()) throw std::invalid_argument("ExperimentSpec: snr_points is empty");
  if (schemes.empty()) throw std::invalid_argument("ExperimentSpec: schemes is empty");
  std::set<Scheme> uniq(schemes.begin(), schemes.end());
  if (uniq.size() != schemes.size())
    throw std::invalid_argument("ExperimentSpec: duplicate scheme");
  for (double s : snr_points)
    if (!std::isfinite(s)) throw std::invalid_argument("ExperimentSpec: non-finite SNR point");
  if (jobs < 0) throw std::invalid_argument("ExperimentSpec: jobs must be >= 0");
}

namespace {

std::pair<IASolution, IATrace> run_scheme(const ChannelSet& ch, const SystemConfig& cfg,
                                          Scheme s, const IAOptions& opts) {
  switch (s) {
    case Scheme::conventional: return conventional_ia(ch, cfg, opts);
    case Scheme::wslm: return wslm_ia(ch, cfg, opts);
    case Scheme::zfws: return zfws_ia(ch, cfg, opts);
  }
  throw std::invalid_argument("run_scheme: unknown scheme");
}

IASolution rescale_solution(IASolution sol, double factor) {
  for (CMatrix& f : sol.F) f *= factor;
  for (CMatrix& p : sol.P) p *= factor;
  return sol;
}

// Runs fn(0..trials-1) on up to `jobs` threads. The first exception wins
// and is rethrown after all workers drain.
void for_each_trial(int trials, int jobs, const std::function<void(int)>& fn) {
  int n = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  n = std::clamp(n, 1, std::max(trials, 1));
  if (n == 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::exception_ptr first;
  auto work = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const int t = next.fetch_add(1);
      if (t >= trials) break;
      try {
        fn(t);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first) first = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(work);
  for (std::thread& th : pool) th.join();
  if (first) std::rethrow_exception(first);
}

void sort_and_aggregate(SweepResult& res) {
  auto key = [](const SweepRow& r) {
    return std::make_tuple(static_cast<int>(r.scheme), r.Ne, r.snr_db, r.trial);
  };
  std::sort(res.rows.begin(), res.rows.end(),
            [&](const SweepRow& a, const SweepRow& b) { return key(a) < key(b); });

  res.aggregates.clear();
  std::size_t i = 0;
  while (i < res.rows.size()) {
    std::size_t j = i;
    while (j < res.rows.size() && res.rows[j].scheme == res.rows[i].scheme &&
           res.rows[j].Ne == res.rows[i].Ne && res.rows[j].snr_db == res.rows[i].snr_db)
      ++j;
    SsrAggregate agg;
    agg.scheme = res.rows[i].scheme;
    agg.snr_db = res.rows[i].snr_db;
    agg.ne = res.rows[i].Ne;
    agg.n = static_cast<int>(j - i);
    double sum = 0.0;
    for (std::size_t r = i; r < j; ++r) sum += res.rows[r].ssr;
    agg.mean_ssr = sum / agg.n;
    if (agg.n > 1) {
      double sq = 0.0;
      for (std::size_t r = i; r < j; ++r) {
        const double dev = res.rows[r].ssr - agg.mean_ssr;
        sq += dev * dev;
      }
      agg.std_ssr = std::sqrt(sq / (agg.n - 1));
    }
    res.aggregates.push_back(agg);
    i = j;
  }
}

SweepRow make_row(const SystemConfig& cfg, Scheme s, double snr_db, int trial,
                  std::uint64_t seed, double ssr, const IATrace& trace, double pt,
                  bool wslm_ok, bool zfws_ok) {
  SweepRow row;
  row.scheme = s;
  row.K = cfg.K;
  row.M = cfg.M;
  row.N = cfg.N;
  row.Ne = cfg.Ne;
  row.d = cfg.d;
  row.snr_db = snr_db;
  row.trial = trial;
  row.seed = seed;
  row.ssr = ssr;
  row.iterations = trace.iterations();
  // Alignment ran at Pt = 1; the objective is quadratic in the precoders,
  // so the leakage at power pt is exactly pt times the reference value.
  row.final_leakage = trace.leakage.back() * pt;
  row.wslm_ok = wslm_ok;
  row.zfws_ok = zfws_ok;
  return row;
}

void format_double(char* buf, std::size_t len, double v) {
  std::snprintf(buf, len, "%.17g", v);
}

}  // namespace

IATrace run_convergence(const SystemConfig& config, Scheme scheme, const IAOptions& opts,
                        std::uint64_t seed) {
  const ChannelSet ch = draw_channels(config, seed);
  return run_scheme(ch, config, scheme, opts).second;
}

SweepResult run_snr_sweep(const ExperimentSpec& spec) {
  spec.validate();
  if (!spec.ne_points.empty())
    throw std::invalid_argument("run_snr_sweep: spec has ne_points; use run_ne_sweep");

  const SystemConfig ref = spec.config.with_power(1.0);
  const bool wslm_ok = wslm_feasible(ref).feasible;
  const bool zfws_ok = zfws_feasible(ref).feasible;

  std::vector<std::vector<SweepRow>> per_trial(spec.trials);
  for_each_trial(spec.trials, spec.jobs, [&](int t) {
    const std::uint64_t seed = trial_seed(spec.master_seed, t);
    const ChannelSet ch = draw_channels(ref, seed);
    IAOptions topts = spec.opts;
    topts.init_seed = trial_seed(spec.opts.init_seed, t);
    for (Scheme s : spec.schemes) {
      const auto [sol, trace] = run_scheme(ch, ref, s, topts);
      for (double snr : spec.snr_points) {
        const double pt = snr_to_power(snr, ref.sigma2);
        const RateReport rep =
            secrecy_report(ch, rescale_solution(sol, std::sqrt(pt)), ref.with_power(pt));
        per_trial[t].push_back(
            make_row(ref, s, snr, t, seed, rep.ssr, trace, pt, wslm_ok, zfws_ok));
      }
    }
  });

  SweepResult res;
  for (std::vector<SweepRow>& rows : per_trial)
    res.rows.insert(res.rows.end(), rows.begin(), rows.end());
  sort_and_aggregate(res);
  return res;
}

NeSweepOutcome run_ne_sweep(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.ne_points.empty())
    throw std::invalid_argument("run_ne_sweep: spec.ne_points is empty");
  if (spec.snr_points.size() != 1)
    throw std::invalid_argument("run_ne_sweep: exactly one SNR point expected");
  const double snr = spec.snr_points[0];
  const double pt = snr_to_power(snr, spec.config.sigma2);

  // The improvement table needs the conventional baseline on identical
  // channels even when the caller did not ask for its rows.
  std::vector<Scheme> to_run = spec.schemes;
  if (std::find(to_run.begin(), to_run.end(), Scheme::conventional) == to_run.end())
    to_run.push_back(Scheme::conventional);

  const int n_ne = static_cast<int>(spec.ne_points.size());
  const int n_run = static_cast<int>(to_run.size());
  std::vector<std::vector<SweepRow>> per_trial(spec.trials);
  // ssr[ne][scheme][trial] for the improvement table
  std::vector<std::vector<std::vector<double>>> ssr(
      n_ne, std::vector<std::vector<double>>(n_run, std::vector<double>(spec.trials)));

  for_each_trial(spec.trials, spec.jobs, [&](int t) {
    const std::uint64_t seed = trial_seed(spec.master_seed, t);
    IAOptions topts = spec.opts;
    topts.init_seed = trial_seed(spec.opts.init_seed, t);
    for (int ni = 0; ni < n_ne; ++ni) {
      const SystemConfig ref = spec.config.with_ne(spec.ne_points[ni]).with_power(1.0);
      const bool wslm_ok = wslm_feasible(ref).feasible;
      const bool zfws_ok = zfws_feasible(ref).feasible;
      const ChannelSet ch = draw_channels(ref, seed);
      for (int si = 0; si < n_run; ++si) {
        const Scheme s = to_run[si];
        const auto [sol, trace] = run_scheme(ch, ref, s, topts);
        const RateReport rep =
            secrecy_report(ch, rescale_solution(sol, std::sqrt(pt)), ref.with_power(pt));
        ssr[ni][si][t] = rep.ssr;
        if (si < static_cast<int>(spec.schemes.size()))
          per_trial[t].push_back(
              make_row(ref, s, snr, t, seed, rep.ssr, trace, pt, wslm_ok, zfws_ok));
      }
    }
  });

  NeSweepOutcome out;
  for (std::vector<SweepRow>& rows : per_trial)
    out.result.rows.insert(out.result.rows.end(), rows.begin(), rows.end());
  sort_and_aggregate(out.result);

  const int base =
      static_cast<int>(std::find(to_run.begin(), to_run.end(), Scheme::conventional) -
                       to_run.begin());
  for (int si = 0; si < static_cast<int>(spec.schemes.size()); ++si)
    for (int ni = 0; ni < n_ne; ++ni) {
      const SystemConfig cfg = spec.config.with_ne(spec.ne_points[ni]);
      ImprovementRow row;
      row.scheme = to_run[si];
      row.ne = spec.ne_points[ni];
      row.improvement = ssr_improvement(ssr[ni][si], ssr[ni][base]);
      row.wslm_ok = wslm_feasible(cfg).feasible;
      row.zfws_ok = zfws_feasible(cfg).feasible;
      out.improvements.push_back(row);
    }
  std::sort(out.improvements.begin(), out.improvements.end(),
            [](const ImprovementRow& a, const ImprovementRow& b) {
              return std::make_tuple(static_cast<int>(a.scheme), a.ne) <
                     std::make_tuple(static_cast<int>(b.scheme), b.ne);
            });
  return out;
}

double scaling_alignment_angle(const SystemConfig& config, Scheme scheme,
                               const IAOptions& opts, std::uint64_t seed, double pt_a,
                               double pt_b) {
  if (!(pt_a > 0.0) || !(pt_b > 0.0))
    throw std::invalid_argument("scaling_alignment_angle: powers must be positive");
  const ChannelSet ch = draw_channels(config.with_power(pt_a), seed);
  IAOptions fixed = opts;
  fixed.eps_leakage = std::numeric_limits<double>::denorm_min();
  fixed.eps_delta = 0.0;
  const IASolution a = run_scheme(ch, config.with_power(pt_a), scheme, fixed).first;
  const IASolution b = run_scheme(ch, config.with_power(pt_b), scheme, fixed).first;

  double worst = 0.0;
  for (int l = 0; l < config.K; ++l) {
    const CMatrix Qa = a.F[l] / std::sqrt(pt_a / config.d);
    const CMatrix Qb = b.F[l] / std::sqrt(pt_b / config.d);
    const CMatrix resid = Qb - Qa * (Qa.adjoint() * Qb);
    const double s = svd(resid).singular_values(0);
    worst = std::max(worst, std::asin(std::clamp(s, 0.0, 1.0)));
  }
  return worst;
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
  out << "scheme,K,M,N,Ne,d,snr_db,trial,seed,ssr,iterations,final_leakage,"
         "wslm_feasible,zfws_feasible\n";
  char snr[32], ssr[32], leak[32], line[320];
  for (const SweepRow& r : result.rows) {
    format_double(snr, sizeof snr, r.snr_db);
    format_double(ssr, sizeof ssr, r.ssr);
    format_double(leak, sizeof leak, r.final_leakage);
    std::snprintf(line, sizeof line, "%s,%d,%d,%d,%d,%d,%s,%d,%" PRIu64 ",%s,%d,%s,%d,%d\n",
                  scheme_name(r.scheme), r.K, r.M, r.N, r.Ne, r.d, snr, r.trial, r.seed, ssr,
                  r.iterations, leak, r.wslm_ok ? 1 : 0, r.zfws_ok ? 1 : 0);
    out << line;
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path.string());
}

void write_aggregate_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_aggregate_csv: cannot open " + path.string());
  out << "scheme,snr_db,ne,mean_ssr,std_ssr,n\n";
  char snr[32], mean[32], sd[32], line[192];
  for (const SsrAggregate& a : result.aggregates) {
    format_double(snr, sizeof snr, a.snr_db);
    format_double(mean, sizeof mean, a.mean_ssr);
    format_double(sd, sizeof sd, a.std_ssr);
    std::snprintf(line, sizeof line, "%s,%s,%d,%s,%s,%d\n", scheme_name(a.scheme), snr, a.ne,
                  mean, sd, a.n);
    out << line;
  }
  if (!out) throw std::runtime_error("write_aggregate_csv: write failed for " + path.string());
}

}  // namespace secia
