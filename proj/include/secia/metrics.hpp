#pragma once

#include "secia/ia.hpp"

#include <vector>

namespace secia {

/// Per-pair rates (bits/s/Hz) of a transceiver design on one channel
/// realization. Rs[k] = max(R[k] - Re[k], 0) and ssr = sum_k Rs[k]; every
/// entry is non-negative and finite.
struct RateReport {
  std::vector<double> R;   // legitimate rates
  std::vector<double> Re;  // eavesdropper (wiretap) rates
  std::vector<double> Rs;  // secrecy rates, clamped at 0
  double ssr = 0.0;        // secrecy sum rate
};

/// Post-hoc alignment-quality diagnostics, one entry per pair k.
/// imli_residual[k]: interference power reaching the signal subspace,
///   sqrt(sum_{l != k} ||W_k^H H(k,l) F_l||_F^2) with W_k the orthogonal
///   complement of the interference subspace U_k.
/// rank_margin[k]: smallest/largest singular value of the effective signal
///   matrix W_k^H H(k,k) F_k; bounded away from 0 when the desired signal
///   keeps full rank d after interference suppression.
/// wiretap_leakage[l]: signal observable at the eavesdropper from
///   transmitter l. Raw ||H(K,l) F_l||_F for conventional and zfws; for
///   wslm the part outside the aligned subspace, ||E^H H(K,l) F_l||_F with
///   E = orthonormal_complement(U_e) (0 by convention when Ne == d and the
///   complement is empty).
struct DiagnosticsReport {
  std::vector<double> imli_residual;
  std::vector<double> rank_margin;
  std::vector<double> wiretap_leakage;
};

/// Achievable rate of pair k treating all other pairs as noise:
/// log2 det(I + H(k,k) F_k F_k^H H(k,k)^H Rz^-1) with
/// Rz = sum_{l != k} H(k,l) F_l F_l^H H(k,l)^H + sigma2 I. Evaluated as
/// logdet2(Rz + S) - logdet2(Rz), never by explicit inversion, so it stays
/// stable at high power. k is 0-based.
double legit_rate(const ChannelSet& channels, const std::vector<CMatrix>& F, double sigma2,
                  int k);

/// Rate of the wiretap channel on pair k's signal: same structure with the
/// eavesdropper channels, interference from the other K-1 pairs plus noise.
double eave_rate(const ChannelSet& channels, const std::vector<CMatrix>& F, double sigma2,
                 int k);

RateReport secrecy_report(const ChannelSet& channels, const IASolution& sol,
                          const SystemConfig& config);

DiagnosticsReport ia_diagnostics(const ChannelSet& channels, const IASolution& sol,
                                 const SystemConfig& config);

/// Mean paired SSR gain of a proposed scheme over the conventional
/// baseline: (1/n) sum_t (proposed[t] - conventional[t]). Lists must be
/// the same non-zero length and paired per channel realization.
double ssr_improvement(const std::vector<double>& proposed_ssr,
                       const std::vector<double>& conventional_ssr);

}  // namespace secia
