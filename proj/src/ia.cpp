#include "secia/ia.hpp"

#include <cmath>
#include <functional>

namespace secia {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::conventional: return "conventional";
    case Scheme::wslm: return "wslm";
    case Scheme::zfws: return "zfws";
  }
  throw std::invalid_argument("scheme_name: unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "conventional") return Scheme::conventional;
  if (name == "wslm") return Scheme::wslm;
  if (name == "zfws") return Scheme::zfws;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected conventional, wslm or zfws)");
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::stagnated: return "stagnated";
    case Termination::max_iterations: return "max_iterations";
  }
  throw std::invalid_argument("termination_name: unknown value");
}

void IAOptions::validate() const {
  if (kappa_max < 1) throw std::invalid_argument("IAOptions: kappa_max must be >= 1");
  if (!(eps_leakage > 0.0) || !std::isfinite(eps_leakage))
    throw std::invalid_argument("IAOptions: eps_leakage must be finite and > 0");
  if (!(eps_delta >= 0.0) || !std::isfinite(eps_delta))
    throw std::invalid_argument("IAOptions: eps_delta must be finite and >= 0");
}

namespace {

// Salt separating the precoder-init RNG stream from the channel stream;
// without it a shared seed would feed the same gaussians into H and F^(0).
constexpr std::uint64_t kPrecoderStreamSalt = 0x505243;

void check_setup(const ChannelSet& ch, const SystemConfig& config, const IAOptions& opts) {
  config.validate();
  opts.validate();
  const ChannelDims& d = ch.dims();
  if (d.K != config.K || d.M != config.M || d.N != config.N || d.Ne != config.Ne ||
      d.d != config.d)
    throw std::invalid_argument("ia: channel set dimensions do not match the config");
  if (config.N <= config.d)
    throw std::invalid_argument("ia: need N > d so receivers keep an interference subspace");
}

// Random power-normalized precoders: F_l = sqrt(Pt/d) Q_l with Q_l the
// orthonormal factor of an M x d complex gaussian matrix.
std::vector<CMatrix> random_precoders(const SystemConfig& cfg, std::uint64_t init_seed) {
  SplitMix64 rng(trial_seed(init_seed, kPrecoderStreamSalt));
  const double scale = std::sqrt(cfg.Pt / cfg.d);
  std::vector<CMatrix> F;
  F.reserve(cfg.K);
  for (int l = 0; l < cfg.K; ++l) {
    CMatrix G(cfg.M, cfg.d);
    for (int r = 0; r < cfg.M; ++r)
      for (int c = 0; c < cfg.d; ++c) G(r, c) = rng.gaussian();
    Eigen::HouseholderQR<CMatrix> qr(G);
    CMatrix Q = qr.householderQ() * CMatrix::Identity(cfg.M, cfg.d);
    F.push_back(scale * Q);
  }
  return F;
}

std::vector<CMatrix> perp_projectors(const std::vector<Orthonormal>& U) {
  std::vector<CMatrix> P;
  P.reserve(U.size());
  for (const Orthonormal& u : U)
    P.push_back(CMatrix::Identity(u.rows(), u.rows()) - u.projector());
  return P;
}

// Interference covariance seen at legitimate receiver k.
CMatrix receive_gram(const ChannelSet& ch, const std::vector<CMatrix>& F, int k) {
  const ChannelDims& d = ch.dims();
  CMatrix G = CMatrix::Zero(d.N, d.N);
  for (int l = 0; l < d.K; ++l) {
    if (l == k) continue;
    const CMatrix HF = ch.H(k, l) * F[l];
    G.noalias() += HF * HF.adjoint();
  }
  return G;
}

// Signal covariance at the eavesdropper, summed over every link.
CMatrix eaves_gram(const ChannelSet& ch, const std::vector<CMatrix>& F) {
  const ChannelDims& d = ch.dims();
  CMatrix G = CMatrix::Zero(d.Ne, d.Ne);
  for (int l = 0; l < d.K; ++l) {
    const CMatrix EF = ch.eaves(l) * F[l];
    G.noalias() += EF * EF.adjoint();
  }
  return G;
}

std::vector<Orthonormal> update_receive_subspaces(const ChannelSet& ch,
                                                  const std::vector<CMatrix>& F) {
  const ChannelDims& d = ch.dims();
  std::vector<Orthonormal> U;
  U.reserve(d.K);
  for (int k = 0; k < d.K; ++k)
    U.push_back(eig_largest(receive_gram(ch, F, k), d.N - d.d).vectors);
  return U;
}

LeakageReport leakage_of(const ChannelSet& ch, Scheme scheme, const std::vector<CMatrix>& F,
                         const std::vector<Orthonormal>& U, const Orthonormal* U_e) {
  const ChannelDims& d = ch.dims();
  LeakageReport rep;
  for (int k = 0; k < d.K; ++k)
    for (int l = 0; l < d.K; ++l) {
      if (l == k) continue;
      rep.J1 += projection_residual(ch.H(k, l) * F[l], U[k]);
    }
  if (scheme == Scheme::wslm) {
    for (int l = 0; l < d.K; ++l) rep.J2 += projection_residual(ch.eaves(l) * F[l], *U_e);
  } else if (scheme == Scheme::zfws) {
    for (int l = 0; l < d.K; ++l) rep.J2 += (ch.eaves(l) * F[l]).squaredNorm();
  }
  rep.J = scheme == Scheme::wslm ? rep.J1 + rep.J2 : rep.J1;
  return rep;
}

// Shared termination logic. `step` performs one full alternating iteration
// and returns the new objective value.
IATrace run_descent(double j0, const IAOptions& opts, const std::function<double()>& step) {
  IATrace trace;
  trace.leakage.reserve(static_cast<std::size_t>(opts.kappa_max) + 1);
  trace.leakage.push_back(j0);
  if (j0 <= opts.eps_leakage) {
    trace.termination = Termination::converged;
    return trace;
  }
  int stagnant = 0;
  for (int it = 0; it < opts.kappa_max; ++it) {
    const double prev = trace.leakage.back();
    const double next = step();
    trace.leakage.push_back(next);
    if (next <= opts.eps_leakage) {
      trace.termination = Termination::converged;
      return trace;
    }
    if (prev - next <= opts.eps_delta) {
      if (++stagnant >= 3) {
        trace.termination = Termination::stagnated;
        return trace;
      }
    } else {
      stagnant = 0;
    }
  }
  trace.termination = Termination::max_iterations;
  return trace;
}

}  // namespace

LeakageReport evaluate_leakage(Scheme scheme, const ChannelSet& channels,
                               const IASolution& sol) {
  const ChannelDims& d = channels.dims();
  if (static_cast<int>(sol.F.size()) != d.K || static_cast<int>(sol.U.size()) != d.K)
    throw std::invalid_argument("evaluate_leakage: solution does not match channel set");
  for (const CMatrix& f : sol.F)
    if (f.rows() != d.M || f.cols() != d.d)
      throw std::invalid_argument("evaluate_leakage: precoder has wrong shape");
  for (const Orthonormal& u : sol.U)
    if (u.rows() != d.N || u.cols() != d.N - d.d)
      throw std::invalid_argument("evaluate_leakage: receive subspace has wrong shape");
  if (scheme == Scheme::wslm && (sol.U_e.rows() != d.Ne || sol.U_e.cols() != d.d))
    throw std::invalid_argument("evaluate_leakage: wslm solution is missing U_e");
  return leakage_of(channels, scheme, sol.F, sol.U,
                    scheme == Scheme::wslm ? &sol.U_e : nullptr);
}

std::pair<IASolution, IATrace> conventional_ia(const ChannelSet& channels,
                                               const SystemConfig& config,
                                               const IAOptions& opts) {
  check_setup(channels, config, opts);
  const double scale = std::sqrt(config.Pt / config.d);

  IASolution sol;
  sol.scheme = Scheme::conventional;
  sol.F = random_precoders(config, opts.init_seed);
  sol.U = update_receive_subspaces(channels, sol.F);

  auto step = [&]() {
    const std::vector<CMatrix> Pperp = perp_projectors(sol.U);
    for (int l = 0; l < config.K; ++l) {
      CMatrix G = CMatrix::Zero(config.M, config.M);
      for (int k = 0; k < config.K; ++k) {
        if (k == l) continue;
        const CMatrix& Hkl = channels.H(k, l);
        G.noalias() += Hkl.adjoint() * Pperp[k] * Hkl;
      }
      sol.F[l] = scale * eig_smallest(G, config.d).vectors.matrix();
    }
    sol.U = update_receive_subspaces(channels, sol.F);
    return leakage_of(channels, sol.scheme, sol.F, sol.U, nullptr).J;
  };

  const double j0 = leakage_of(channels, sol.scheme, sol.F, sol.U, nullptr).J;
  IATrace trace = run_descent(j0, opts, step);
  return {std::move(sol), std::move(trace)};
}

std::pair<IASolution, IATrace> wslm_ia(const ChannelSet& channels, const SystemConfig& config,
                                       const IAOptions& opts) {
  check_setup(channels, config, opts);
  if (config.Ne < config.d)
    throw std::invalid_argument("wslm_ia: need Ne >= d for the eavesdropper subspace");
  const double scale = std::sqrt(config.Pt / config.d);

  IASolution sol;
  sol.scheme = Scheme::wslm;
  sol.F = random_precoders(config, opts.init_seed);
  sol.U = update_receive_subspaces(channels, sol.F);
  sol.U_e = eig_largest(eaves_gram(channels, sol.F), config.d).vectors;

  auto step = [&]() {
    const std::vector<CMatrix> Pperp = perp_projectors(sol.U);
    const CMatrix PperpE =
        CMatrix::Identity(config.Ne, config.Ne) - sol.U_e.projector();
    for (int l = 0; l < config.K; ++l) {
      CMatrix G = CMatrix::Zero(config.M, config.M);
      for (int k = 0; k < config.K; ++k) {
        if (k == l) continue;
        const CMatrix& Hkl = channels.H(k, l);
        G.noalias() += Hkl.adjoint() * Pperp[k] * Hkl;
      }
      const CMatrix& El = channels.eaves(l);
      G.noalias() += El.adjoint() * PperpE * El;
      sol.F[l] = scale * eig_smallest(G, config.d).vectors.matrix();
    }
    sol.U = update_receive_subspaces(channels, sol.F);
    sol.U_e = eig_largest(eaves_gram(channels, sol.F), config.d).vectors;
    return leakage_of(channels, sol.scheme, sol.F, sol.U, &sol.U_e).J;
  };

  const double j0 = leakage_of(channels, sol.scheme, sol.F, sol.U, &sol.U_e).J;
  IATrace trace = run_descent(j0, opts, step);
  return {std::move(sol), std::move(trace)};
}

std::pair<IASolution, IATrace> zfws_ia(const ChannelSet& channels, const SystemConfig& config,
                                       const IAOptions& opts) {
  check_setup(channels, config, opts);
  const double scale = std::sqrt(config.Pt / config.d);

  IASolution sol;
  sol.scheme = Scheme::zfws;
  sol.Delta.reserve(config.K);
  for (int l = 0; l < config.K; ++l)
    sol.Delta.push_back(null_space_precoder_basis(channels.eaves(l), config.d));

  // Deterministic start: each receive subspace begins as the leading
  // identity columns; the first U-step replaces them.
  sol.U.assign(config.K,
               Orthonormal(CMatrix::Identity(config.N, config.N).leftCols(config.N - config.d)));

  auto p_step = [&]() {
    const std::vector<CMatrix> Pperp = perp_projectors(sol.U);
    for (int l = 0; l < config.K; ++l) {
      CMatrix G = CMatrix::Zero(config.d, config.d);
      for (int k = 0; k < config.K; ++k) {
        if (k == l) continue;
        const CMatrix HD = channels.H(k, l) * sol.Delta[l].matrix();
        G.noalias() += HD.adjoint() * Pperp[k] * HD;
      }
      sol.P[l] = scale * eig_smallest(G, config.d).vectors.matrix();
      sol.F[l] = sol.Delta[l].matrix() * sol.P[l];
    }
  };

  sol.P.assign(config.K, CMatrix());
  sol.F.assign(config.K, CMatrix());
  p_step();

  auto step = [&]() {
    sol.U = update_receive_subspaces(channels, sol.F);
    p_step();
    return leakage_of(channels, sol.scheme, sol.F, sol.U, nullptr).J;
  };

  const double j0 = leakage_of(channels, sol.scheme, sol.F, sol.U, nullptr).J;
  IATrace trace = run_descent(j0, opts, step);
  return {std::move(sol), std::move(trace)};
}

Orthonormal null_space_precoder_basis(const CMatrix& He, int d) {
  if (d < 1 || d > He.cols())
    throw std::invalid_argument("null_space_precoder_basis: d out of range");
  // Right singular vectors of the wiretap channel, least-excited d last.
  const SvdFactors f = svd(He);
  return Orthonormal(f.right.matrix().rightCols(d));
}

WslmFeasibility wslm_feasible(const SystemConfig& config) {
  config.validate();
  const long long K = config.K, M = config.M, N = config.N, Ne = config.Ne, d = config.d;
  WslmFeasibility r;
  r.Neq = K * (K - 1) * d * d + K * d * (Ne - d);
  r.Nv = K * d * (M + N - 2 * d) + d * (Ne - d);
  r.feasible = (K * (M + N) - (K * K + 1) * d >= Ne * (K - 1)) && Ne >= d;
  return r;
}

ZfwsFeasibility zfws_feasible(const SystemConfig& config) {
  config.validate();
  ZfwsFeasibility r;
  r.antenna_ok = config.M - config.d >= config.Ne;
  r.subspace_ok = config.N >= config.K * config.d;
  r.feasible = r.antenna_ok && r.subspace_ok;
  return r;
}

}  // namespace secia
