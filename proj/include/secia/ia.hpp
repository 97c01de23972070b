#pragma once

#include "secia/channel.hpp"
#include "secia/numerics.hpp"

#include <string>
#include <utility>
#include <vector>

namespace secia {

enum class Scheme { conventional, wslm, zfws };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Termination controls for the alternating-minimization loops.
struct IAOptions {
  int kappa_max = 500;          // iteration cap
  double eps_leakage = 1e-10;   // stop when the objective falls to/below this
  double eps_delta = 1e-14;     // stagnation threshold on per-iteration decrease
  std::uint64_t init_seed = 1;  // seed for random precoder starts

  void validate() const;  // throws std::invalid_argument
};

enum class Termination { converged, stagnated, max_iterations };

const char* termination_name(Termination t);

/// Objective value per iteration. leakage[0] is the value at the initial
/// point, before the first update, so a run of kappa iterations stores
/// kappa + 1 entries.
struct IATrace {
  std::vector<double> leakage;
  Termination termination = Termination::max_iterations;

  int iterations() const { return static_cast<int>(leakage.size()) - 1; }
};

/// Transceiver design produced by one scheme.
///
/// Every scheme fills F (one M x d precoder per pair, scaled so
/// ||F_l||_F^2 = Pt) and U (one N x (N-d) interference-subspace basis per
/// legitimate receiver). wslm additionally fills U_e (Ne x d, the
/// eavesdropper subspace the design herds its signals into); zfws fills
/// Delta (M x d wiretap null-space bases) and P (d x d inner precoders
/// with F_l = Delta_l P_l).
struct IASolution {
  Scheme scheme = Scheme::conventional;
  std::vector<CMatrix> F;
  std::vector<Orthonormal> U;
  Orthonormal U_e;
  std::vector<Orthonormal> Delta;
  std::vector<CMatrix> P;
};

/// Leakage decomposition of a design against a channel realization.
/// J1 is the interference-misalignment power at the legitimate receivers:
///   sum_k sum_{l != k} ||(I - U_k U_k^H) H(k,l) F_l||_F^2.
/// J2 is the scheme's eavesdropper term: for wslm the misalignment of all
/// links outside span(U_e) at the eavesdropper; 0 for conventional; for
/// zfws the raw wiretap power sum_l ||H(K,l) F_l||_F^2, reported as a
/// diagnostic. J is what the scheme's loop actually minimizes: J1 + J2
/// for wslm, J1 alone otherwise.
struct LeakageReport {
  double J = 0.0;
  double J1 = 0.0;
  double J2 = 0.0;
};

LeakageReport evaluate_leakage(Scheme scheme, const ChannelSet& channels,
                               const IASolution& sol);

/// Conventional interference alignment: alternates precoder updates
/// (smallest-eigenvector of the interference-coupling Gram at each
/// transmitter) with receive-subspace updates (dominant eigenvectors of
/// the received-interference covariance). Ignores the eavesdropper.
/// Random start from opts.init_seed. Objective: j1.
std::pair<IASolution, IATrace> conventional_ia(const ChannelSet& channels,
                                               const SystemConfig& config,
                                               const IAOptions& opts);

/// Wiretapped-signal-leakage minimization: conventional alignment plus an
/// eavesdropper term that squeezes all K links into a common d-dimensional
/// subspace U_e at the eavesdropper. Objective: j1 + j2. Requires Ne >= d.
std::pair<IASolution, IATrace> wslm_ia(const ChannelSet& channels,
                                       const SystemConfig& config,
                                       const IAOptions& opts);

/// Zero-forcing wiretapped signals: each precoder is confined to a basis
/// that suppresses its eavesdropper channel (F_l = Delta_l P_l), and
/// alignment runs over the d x d inner precoders P_l. When M - Ne >= d the
/// basis is an exact null space, H(K,l) Delta_l = 0, so the eavesdropper
/// receives nothing regardless of iteration count; otherwise the basis is
/// the best-effort least-excited one and some wiretap power remains.
/// Deterministic start (U_k = leading identity columns). Objective: j1.
std::pair<IASolution, IATrace> zfws_ia(const ChannelSet& channels,
                                       const SystemConfig& config,
                                       const IAOptions& opts);

/// Orthonormal M x d basis towards the null space of a wiretap channel He
/// (Ne x M): the d right singular vectors of He with the smallest singular
/// values. Exact null space (He * Delta = 0) when M - Ne >= d; otherwise
/// the best-effort minimizer of ||He * Delta||_F^2 over orthonormal bases.
Orthonormal null_space_precoder_basis(const CMatrix& He, int d);

/// Counting-based feasibility of wslm alignment (proper-system test):
/// K(M + N) - (K^2 + 1) d >= Ne (K - 1), plus the subspace requirement
/// Ne >= d. Also reports the underlying equation/variable counts.
struct WslmFeasibility {
  bool feasible = false;
  long long Neq = 0;  // alignment equations
  long long Nv = 0;   // free variables
};
WslmFeasibility wslm_feasible(const SystemConfig& config);

/// Feasibility of the zero-forcing design: antenna_ok is M - d >= Ne (a
/// d-dimensional exact null space exists), subspace_ok is N >= K d (the
/// receivers can separate the aligned interference from the signal).
struct ZfwsFeasibility {
  bool feasible = false;
  bool antenna_ok = false;
  bool subspace_ok = false;
};
ZfwsFeasibility zfws_feasible(const SystemConfig& config);

}  // namespace secia
