#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace ym2d {

/// Deterministic substream generator: stream (seed, index) always yields
/// the same values, independent of which thread consumes it.
class SubstreamRng {
public:
  SubstreamRng(uint64_t seed, uint64_t stream);

  double uniform();        // [0, 1)
  double gaussian();       // standard normal, Box-Muller
  /// Haar-distributed N x N unitary via QR of a complex Ginibre matrix,
  /// with the R-diagonal phase fix.
  Eigen::MatrixXcd haar_unitary(int n);

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Streaming mean/variance accumulator with associative merge.
struct Welford {
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  void merge(const Welford& other);
  double stderr_of_mean() const;
};

}  // namespace ym2d
