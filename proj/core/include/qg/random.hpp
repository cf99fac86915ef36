#pragma once

#include <cstdint>
#include <random>

#include "qg/tensor.hpp"

namespace qg {

/// Deterministic source of random test matrices.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Complex Gaussian d×d matrix scaled to unit Frobenius norm.
  CMatrix matrix(int d);
  /// Unit-norm matrix with zero trace.
  CMatrix trace_zero(int d);
  /// Unit-norm matrix whose trace is real and at least 1/3.
  CMatrix trace_one_ish(int d);
  CVector vector(int n);
  double real();
  /// Haar-ish random unitary from QR of a Gaussian matrix.
  CMatrix unitary(int n);

  /// Child sampler whose seed is derived from this one and `salt`.
  Sampler fork(std::uint64_t salt) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t salt);

}  // namespace qg
