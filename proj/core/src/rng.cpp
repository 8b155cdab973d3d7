#include "ym2d/rng.hpp"

#include <cmath>

#include "ym2d/errors.hpp"

namespace ym2d {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SubstreamRng::SubstreamRng(uint64_t seed, uint64_t stream) {
  uint64_t s = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
  uint64_t a = splitmix64(s), b = splitmix64(s);
  std::seed_seq seq{static_cast<uint32_t>(a), static_cast<uint32_t>(a >> 32), static_cast<uint32_t>(b),
                    static_cast<uint32_t>(b >> 32)};
  gen_ = std::mt19937_64(seq);
}

double SubstreamRng::uniform() {
  // 53-bit mantissa; implementation-independent mapping.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double SubstreamRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Eigen::MatrixXcd SubstreamRng::haar_unitary(int n) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = std::complex<double>(gaussian(), gaussian());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    std::complex<double> d = r(j, j);
    double m = std::abs(d);
    require_internal(m > 0, "degenerate Ginibre sample");
    q.col(j) *= d / m;
  }
  return q;
}

void Welford::add(double x) {
  ++count;
  double delta = x - mean;
  mean += delta / static_cast<double>(count);
  m2 += delta * (x - mean);
}

void Welford::merge(const Welford& o) {
  if (o.count == 0) return;
  if (count == 0) {
    *this = o;
    return;
  }
  double delta = o.mean - mean;
  long long total = count + o.count;
  double nm = mean + delta * static_cast<double>(o.count) / static_cast<double>(total);
  m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) /
                   static_cast<double>(total);
  mean = nm;
  count = total;
}

double Welford::stderr_of_mean() const {
  if (count < 2) return 0.0;
  double var = m2 / static_cast<double>(count - 1);
  return std::sqrt(var / static_cast<double>(count));
}

}  // namespace ym2d
