#include "secia/channel.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

namespace secia {

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("SystemConfig: " + msg);
  };
  if (K < 1) fail("K must be >= 1");
  if (M < 1 || N < 1 || Ne < 1) fail("antenna counts must be >= 1");
  if (d < 1) fail("d must be >= 1");
  if (d > M || d > N) fail("d must not exceed min(M, N)");
  if (!(Pt > 0.0) || !std::isfinite(Pt)) fail("Pt must be positive and finite");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) fail("sigma2 must be positive and finite");
}

SystemConfig SystemConfig::with_power(double pt) const {
  SystemConfig c = *this;
  c.Pt = pt;
  return c;
}

SystemConfig SystemConfig::with_ne(int ne) const {
  SystemConfig c = *this;
  c.Ne = ne;
  return c;
}

double snr_to_power(double snr_db, double sigma2) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw std::invalid_argument("snr_to_power: sigma2 must be positive and finite");
  return sigma2 * std::pow(10.0, snr_db / 10.0);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
  // Top 53 bits, shifted into (0, 1]: ((x >> 11) + 1) * 2^-53.
  return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
}

Complex SplitMix64::gaussian() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return Complex(r * std::cos(t), r * std::sin(t));
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return SplitMix64(master_seed + 0x9E3779B97F4A7C15ULL * trial_index).next();
}

namespace {

void check_dims(const ChannelDims& d) {
  if (d.K < 1 || d.M < 1 || d.N < 1 || d.Ne < 1 || d.d < 1 || d.d > d.M || d.d > d.N)
    throw std::invalid_argument("ChannelSet: invalid dimensions");
}

}  // namespace

ChannelSet::ChannelSet(ChannelDims dims, std::uint64_t seed, std::vector<CMatrix> matrices)
    : dims_(dims), seed_(seed), matrices_(std::move(matrices)) {
  check_dims(dims_);
  const std::size_t expected = static_cast<std::size_t>(dims_.K + 1) * dims_.K;
  if (matrices_.size() != expected)
    throw std::invalid_argument("ChannelSet: wrong number of matrices");
  for (int k = 0; k <= dims_.K; ++k) {
    const int rows = (k == dims_.K) ? dims_.Ne : dims_.N;
    for (int l = 0; l < dims_.K; ++l) {
      const CMatrix& m = matrices_[static_cast<std::size_t>(k) * dims_.K + l];
      if (m.rows() != rows || m.cols() != dims_.M)
        throw std::invalid_argument("ChannelSet: matrix (" + std::to_string(k) + "," +
                                    std::to_string(l) + ") has wrong shape");
      if (!m.allFinite())
        throw std::invalid_argument("ChannelSet: matrix has non-finite entries");
    }
  }
}

const CMatrix& ChannelSet::H(int k, int l) const {
  if (k < 0 || k > dims_.K || l < 0 || l >= dims_.K)
    throw std::out_of_range("ChannelSet::H: index out of range");
  return matrices_[static_cast<std::size_t>(k) * dims_.K + l];
}

ChannelSet draw_channels(const SystemConfig& config, std::uint64_t seed) {
  config.validate();
  SplitMix64 rng(seed);
  std::vector<CMatrix> mats;
  mats.reserve(static_cast<std::size_t>(config.K + 1) * config.K);
  for (int k = 0; k <= config.K; ++k) {
    const int rows = (k == config.K) ? config.Ne : config.N;
    for (int l = 0; l < config.K; ++l) {
      CMatrix m(rows, config.M);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < config.M; ++c) m(r, c) = rng.gaussian();
      mats.push_back(std::move(m));
    }
  }
  return ChannelSet({config.K, config.M, config.N, config.Ne, config.d}, seed,
                    std::move(mats));
}

void write_channel_dump(const ChannelSet& channels, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_channel_dump: cannot open " + path.string());
  const ChannelDims& d = channels.dims();
  char buf[128];
  std::snprintf(buf, sizeof buf, "channels K=%d M=%d N=%d Ne=%d d=%d seed=%" PRIu64 "\n",
                d.K, d.M, d.N, d.Ne, d.d, channels.seed());
  out << buf;
  for (int k = 0; k <= d.K; ++k) {
    for (int l = 0; l < d.K; ++l) {
      out << "# H " << k << ' ' << l << '\n';
      const CMatrix& m = channels.H(k, l);
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          // %.17g round-trips any double exactly.
          std::snprintf(buf, sizeof buf, "%.17g,%.17g", m(r, c).real(), m(r, c).imag());
          out << buf << (c + 1 < m.cols() ? " " : "");
        }
        out << '\n';
      }
    }
  }
  if (!out) throw std::runtime_error("write_channel_dump: write failed for " + path.string());
}

ChannelSet read_channel_dump(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_channel_dump: cannot open " + path.string());
  auto fail = [&path](const std::string& msg) {
    throw std::runtime_error("read_channel_dump: " + path.string() + ": " + msg);
  };

  std::string header;
  if (!std::getline(in, header)) fail("missing header");
  ChannelDims d;
  std::uint64_t seed = 0;
  if (std::sscanf(header.c_str(), "channels K=%d M=%d N=%d Ne=%d d=%d seed=%" SCNu64,
                  &d.K, &d.M, &d.N, &d.Ne, &d.d, &seed) != 6)
    fail("malformed header: " + header);

  std::vector<CMatrix> mats;
  std::string line;
  for (int k = 0; k <= d.K; ++k) {
    const int rows = (k == d.K) ? d.Ne : d.N;
    for (int l = 0; l < d.K; ++l) {
      if (!std::getline(in, line) || line.rfind("# H", 0) != 0)
        fail("expected matrix marker for (" + std::to_string(k) + "," + std::to_string(l) + ")");
      CMatrix m(rows, d.M);
      for (int r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) fail("truncated matrix block");
        std::istringstream row(line);
        std::string cell;
        for (int c = 0; c < d.M; ++c) {
          if (!(row >> cell)) fail("short row in matrix block");
          double re = 0.0, im = 0.0;
          if (std::sscanf(cell.c_str(), "%lf,%lf", &re, &im) != 2)
            fail("malformed entry: " + cell);
          m(r, c) = Complex(re, im);
        }
      }
      mats.push_back(std::move(m));
    }
  }
  return ChannelSet(d, seed, std::move(mats));
}

}  // namespace secia
