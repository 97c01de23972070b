#include "secia/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace secia {

namespace {

void check_rate_inputs(const ChannelSet& ch, const std::vector<CMatrix>& F, double sigma2,
                       int k) {
  const ChannelDims& d = ch.dims();
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw std::invalid_argument("rate: sigma2 must be positive and finite");
  if (k < 0 || k >= d.K) throw std::invalid_argument("rate: pair index out of range");
  if (static_cast<int>(F.size()) != d.K)
    throw std::invalid_argument("rate: expected one precoder per pair");
  for (const CMatrix& f : F) {
    if (f.rows() != d.M || f.cols() < 1)
      throw std::invalid_argument("rate: precoder has wrong shape");
    if (!f.allFinite()) throw std::invalid_argument("rate: precoder has non-finite entries");
  }
}

// log2 det(I + S R^-1) = logdet2(R + S) - logdet2(R) for the receiver whose
// channel rows are selected by `rx` (a legitimate index or K for the
// eavesdropper). Negative rounding residue is clamped away.
double rate_at_receiver(const ChannelSet& ch, const std::vector<CMatrix>& F, double sigma2,
                        int k, int rx) {
  const int rows = static_cast<int>(ch.H(rx, 0).rows());
  CMatrix Rz = sigma2 * CMatrix::Identity(rows, rows);
  for (int l = 0; l < ch.dims().K; ++l) {
    if (l == k) continue;
    const CMatrix HF = ch.H(rx, l) * F[l];
    Rz.noalias() += HF * HF.adjoint();
  }
  const CMatrix HFk = ch.H(rx, k) * F[k];
  const CMatrix S = HFk * HFk.adjoint();
  const double rate = logdet2(Rz + S) - logdet2(Rz);
  return std::max(rate, 0.0);
}

}  // namespace

double legit_rate(const ChannelSet& channels, const std::vector<CMatrix>& F, double sigma2,
                  int k) {
  check_rate_inputs(channels, F, sigma2, k);
  return rate_at_receiver(channels, F, sigma2, k, k);
}

double eave_rate(const ChannelSet& channels, const std::vector<CMatrix>& F, double sigma2,
                 int k) {
  check_rate_inputs(channels, F, sigma2, k);
  return rate_at_receiver(channels, F, sigma2, k, channels.dims().K);
}

RateReport secrecy_report(const ChannelSet& channels, const IASolution& sol,
                          const SystemConfig& config) {
  config.validate();
  const int K = channels.dims().K;
  if (config.K != K)
    throw std::invalid_argument("secrecy_report: config does not match channel set");
  RateReport rep;
  rep.R.reserve(K);
  rep.Re.reserve(K);
  rep.Rs.reserve(K);
  for (int k = 0; k < K; ++k) {
    rep.R.push_back(legit_rate(channels, sol.F, config.sigma2, k));
    rep.Re.push_back(eave_rate(channels, sol.F, config.sigma2, k));
    rep.Rs.push_back(std::max(rep.R[k] - rep.Re[k], 0.0));
    rep.ssr += rep.Rs[k];
  }
  return rep;
}

DiagnosticsReport ia_diagnostics(const ChannelSet& channels, const IASolution& sol,
                                 const SystemConfig& config) {
  config.validate();
  const ChannelDims& dims = channels.dims();
  const int K = dims.K;
  if (config.K != K || config.N != dims.N || config.d != dims.d)
    throw std::invalid_argument("ia_diagnostics: config does not match channel set");
  if (static_cast<int>(sol.F.size()) != K || static_cast<int>(sol.U.size()) != K)
    throw std::invalid_argument("ia_diagnostics: solution does not match channel set");
  if (sol.scheme == Scheme::wslm && sol.U_e.empty())
    throw std::invalid_argument("ia_diagnostics: wslm solution is missing U_e");

  DiagnosticsReport rep;
  rep.imli_residual.resize(K);
  rep.rank_margin.resize(K);
  rep.wiretap_leakage.resize(K);

  for (int k = 0; k < K; ++k) {
    const Orthonormal Wk = orthonormal_complement(sol.U[k]);
    double acc = 0.0;
    for (int l = 0; l < K; ++l) {
      if (l == k) continue;
      acc += (Wk.matrix().adjoint() * channels.H(k, l) * sol.F[l]).squaredNorm();
    }
    rep.imli_residual[k] = std::sqrt(acc);

    const CMatrix eff = Wk.matrix().adjoint() * channels.H(k, k) * sol.F[k];
    const RVector s = svd(eff).singular_values;
    rep.rank_margin[k] = s(0) > 0.0 ? s(s.size() - 1) / s(0) : 0.0;
  }

  if (sol.scheme == Scheme::wslm) {
    // Leakage counted only outside the subspace the design aligns into;
    // with Ne == d that complement is empty and the leakage is 0.
    if (dims.Ne > dims.d) {
      const Orthonormal E = orthonormal_complement(sol.U_e);
      for (int l = 0; l < K; ++l)
        rep.wiretap_leakage[l] = (E.matrix().adjoint() * channels.eaves(l) * sol.F[l]).norm();
    }
  } else {
    for (int l = 0; l < K; ++l)
      rep.wiretap_leakage[l] = (channels.eaves(l) * sol.F[l]).norm();
  }
  return rep;
}

double ssr_improvement(const std::vector<double>& proposed_ssr,
                       const std::vector<double>& conventional_ssr) {
  if (proposed_ssr.size() != conventional_ssr.size())
    throw std::invalid_argument("ssr_improvement: lists must have equal length");
  if (proposed_ssr.empty())
    throw std::invalid_argument("ssr_improvement: lists must be non-empty");
  double acc = 0.0;
  for (std::size_t i = 0; i < proposed_ssr.size(); ++i)
    acc += proposed_ssr[i] - conventional_ssr[i];
  return acc / static_cast<double>(proposed_ssr.size());
}

}  // namespace secia
