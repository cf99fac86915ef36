#include "qg/random.hpp"

#include <Eigen/QR>

namespace qg {

CMatrix Sampler::matrix(int d) {
  CMatrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) {
      const double re = normal_(engine_);
      m(i, j) = Complex(re, normal_(engine_));
    }
  const double n = m.norm();
  return n > 0.0 ? CMatrix(m / n) : m;
}

CMatrix Sampler::trace_zero(int d) {
  CMatrix m = matrix(d);
  m.diagonal().array() -= m.trace() / static_cast<double>(d);
  const double n = m.norm();
  if (n < 1e-300) return CMatrix::Zero(d, d);
  return m / n;
}

CMatrix Sampler::trace_one_ish(int d) {
  CMatrix m = matrix(d);
  m.diagonal().array() += (Complex(1.0) - m.trace()) / static_cast<double>(d);
  return m / m.norm();
}

CVector Sampler::vector(int n) {
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal_(engine_);
    v(i) = Complex(re, normal_(engine_));
  }
  return v;
}

double Sampler::real() { return normal_(engine_); }

CMatrix Sampler::unitary(int n) {
  CMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal_(engine_);
      g(i, j) = Complex(re, normal_(engine_));
    }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0.0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

Sampler Sampler::fork(std::uint64_t salt) const { return Sampler(derive_seed(seed_, salt)); }

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t salt) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qg
