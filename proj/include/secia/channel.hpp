#pragma once

#include "secia/numerics.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace secia {

/// Static parameters of one K-pair interference network with a single
/// multi-antenna eavesdropper. Power is the per-transmitter budget Pt;
/// noise is the per-antenna variance sigma2 (identical at every receiver,
/// eavesdropper included).
struct SystemConfig {
  int K = 3;           // transmit/receive pairs
  int M = 9;           // transmit antennas per node
  int N = 9;           // receive antennas per legitimate node
  int Ne = 6;          // eavesdropper antennas
  int d = 3;           // data streams per pair
  double Pt = 1.0;     // transmit power budget per node
  double sigma2 = 1.0; // noise variance per receive antenna

  /// Throws std::invalid_argument unless K >= 1, 1 <= d <= min(M, N),
  /// Ne >= 1, Pt > 0 and sigma2 > 0.
  void validate() const;

  SystemConfig with_power(double pt) const;
  SystemConfig with_ne(int ne) const;
};

/// SNR in dB -> transmit power, with SNR defined as Pt / sigma2.
double snr_to_power(double snr_db, double sigma2);

/// Deterministic 64-bit stream (SplitMix64; constants 0x9E3779B97F4A7C15,
/// 0xBF58476D1CE4E5B9, 0x94D049BB133111EB). Chosen over <random> engines
/// because its output is specified bit-exactly, so channel draws reproduce
/// across standard libraries and even across language ports.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform double in (0, 1], with 53-bit resolution; never 0, so it is
  /// safe as the log() argument of a Box-Muller transform.
  double uniform01();

  /// One CN(0,1) sample via Box-Muller: sqrt(-ln u1) * exp(i 2*pi*u2).
  /// Real and imaginary parts each have variance 1/2.
  Complex gaussian();

 private:
  std::uint64_t state_;
};

/// Decorrelated per-trial seed: trial t of a run with master seed s uses
/// trial_seed(s, t). Implemented as the SplitMix64 mix of s advanced t
/// steps, so consecutive trials get unrelated streams.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

struct ChannelDims {
  int K = 0;
  int M = 0;
  int N = 0;
  int Ne = 0;
  int d = 0;
};

/// One realization of every channel matrix in the network.
///
/// Receivers are indexed k = 0..K, where k < K are the legitimate receivers
/// and k == K is the eavesdropper; transmitters are l = 0..K-1. H(k, l) is
/// N x M for legitimate k and Ne x M for the eavesdropper, entries i.i.d.
/// CN(0, 1).
class ChannelSet {
 public:
  ChannelSet(ChannelDims dims, std::uint64_t seed, std::vector<CMatrix> matrices);

  const CMatrix& H(int k, int l) const;
  /// Eavesdropper channel from transmitter l, Ne x M.
  const CMatrix& eaves(int l) const { return H(dims_.K, l); }

  const ChannelDims& dims() const noexcept { return dims_; }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  ChannelDims dims_;
  std::uint64_t seed_;
  std::vector<CMatrix> matrices_;  // row-major over (k, l)
};

/// Draws every H(k, l) from SplitMix64(seed). Generation order is fixed:
/// receivers k = 0..K (eavesdropper last), transmitters l = 0..K-1 within
/// a receiver, entries row-major within a matrix. The result is fully
/// determined by (config dims, seed).
ChannelSet draw_channels(const SystemConfig& config, std::uint64_t seed);

/// Writes a channel set as text: a header line with the dimensions and the
/// seed, then one "k l" block per matrix with rows of "re,im" pairs.
void write_channel_dump(const ChannelSet& channels, const std::filesystem::path& path);

/// Parses the write_channel_dump format; round-trips bit-exactly (values
/// are printed with enough digits to reconstruct the double).
ChannelSet read_channel_dump(const std::filesystem::path& path);

}  // namespace secia
