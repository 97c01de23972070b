#pragma once

#include "secia/ia.hpp"
#include "secia/metrics.hpp"

#include <filesystem>
#include <vector>

namespace secia {

/// Description of one Monte-Carlo experiment. `config` is a template: its
/// Pt is overridden per SNR point via snr_to_power, and for an Ne sweep its
/// Ne is overridden per point of `ne_points`.
struct ExperimentSpec {
  SystemConfig config;
  std::vector<Scheme> schemes{Scheme::conventional, Scheme::wslm, Scheme::zfws};
  std::vector<double> snr_points;
  std::vector<int> ne_points;  // empty for SNR sweeps
  int trials = 200;
  std::uint64_t master_seed = 1;
  IAOptions opts;
  int jobs = 0;  // worker threads; 0 means all logical processors

  /// Throws std::invalid_argument unless trials >= 1, snr_points and
  /// schemes are non-empty and the config template is valid.
  void validate() const;
};

struct SweepRow {
  Scheme scheme = Scheme::conventional;
  int K = 0, M = 0, N = 0, Ne = 0, d = 0;
  double snr_db = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;  // channel seed of this trial
  double ssr = 0.0;
  int iterations = 0;
  double final_leakage = 0.0;
  bool wslm_ok = false;
  bool zfws_ok = false;
};

struct SsrAggregate {
  Scheme scheme = Scheme::conventional;
  double snr_db = 0.0;
  int ne = 0;
  double mean_ssr = 0.0;
  double std_ssr = 0.0;  // sample standard deviation, (n-1) divisor
  int n = 0;
};

/// Raw per-cell rows plus per-(scheme, snr, ne) aggregates. Rows are sorted
/// by (scheme, ne, snr, trial) and aggregates are recomputable from them.
struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SsrAggregate> aggregates;
};

/// Mean paired SSR gain over the conventional baseline, per scheme and Ne.
struct ImprovementRow {
  Scheme scheme = Scheme::conventional;
  int ne = 0;
  double improvement = 0.0;
  bool wslm_ok = false;
  bool zfws_ok = false;
};

struct NeSweepOutcome {
  SweepResult result;
  std::vector<ImprovementRow> improvements;
};

/// One channel realization from `seed`, one scheme run; returns the full
/// leakage trace (J per iteration, index 0 = initial point).
IATrace run_convergence(const SystemConfig& config, Scheme scheme, const IAOptions& opts,
                        std::uint64_t seed);

/// SSR versus SNR. Per trial t one ChannelSet is drawn from
/// trial_seed(master_seed, t) and every scheme runs on that same set
/// (paired design). Alignment is computed once per trial at reference
/// power Pt = 1 and the precoders are rescaled by sqrt(Pt) per SNR point;
/// all three updates are argmin-invariant under that uniform scaling, and
/// `scaling_alignment_angle` lets callers verify it numerically.
/// final_leakage is reported at each point's power. Trials may execute on
/// `jobs` threads; output is deterministic regardless.
SweepResult run_snr_sweep(const ExperimentSpec& spec);

/// SSR improvement versus eavesdropper antenna count at one fixed SNR
/// (spec.snr_points must hold exactly one value). The conventional
/// baseline runs on every trial even when not among spec.schemes, so the
/// improvement table is always paired per realization.
NeSweepOutcome run_ne_sweep(const ExperimentSpec& spec);

/// Largest principal angle (radians) between the precoder subspaces the
/// scheme reaches at powers pt_a and pt_b on the same channels and start.
/// Both runs use a fixed iteration budget (opts.kappa_max, threshold
/// effectively disabled) so the comparison sees the same number of
/// updates; with the user's absolute eps_leakage the two powers would stop
/// at different iterations and the angle would measure termination
/// mismatch instead of scale covariance. Angles come from the sine route
/// (largest singular value of (I - Qa Qa^H) Qb), which resolves angles far
/// below the ~1e-8 floor of acos near 1.
double scaling_alignment_angle(const SystemConfig& config, Scheme scheme,
                               const IAOptions& opts, std::uint64_t seed, double pt_a,
                               double pt_b);

/// Raw rows: header `scheme,K,M,N,Ne,d,snr_db,trial,seed,ssr,iterations,`
/// `final_leakage,wslm_feasible,zfws_feasible`, one line per row, doubles
/// printed round-trip exact. Deterministic byte output for a given result.
void write_csv(const SweepResult& result, const std::filesystem::path& path);

/// Aggregates: header `scheme,snr_db,ne,mean_ssr,std_ssr,n`.
void write_aggregate_csv(const SweepResult& result, const std::filesystem::path& path);

}  // namespace secia
