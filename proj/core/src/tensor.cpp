#include "qg/tensor.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qg/error.hpp"

namespace qg {

namespace {

void require_dense_size(Eigen::Index n, const char* what) {
  if (n > kMaxDenseDim)
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(n) +
                         " exceeds the dense cap " + std::to_string(kMaxDenseDim));
}

SparseCMatrix sparse_of(const CMatrix& m) {
  std::vector<Eigen::Triplet<Complex>> t;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Complex(0.0)) t.emplace_back(i, j, m(i, j));
  SparseCMatrix s(m.rows(), m.cols());
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

SparseCMatrix sparse_identity(Eigen::Index n) {
  SparseCMatrix s(n, n);
  s.setIdentity();
  return s;
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index r = a.rows() * b.rows(), c = a.cols() * b.cols();
  require_dense_size(std::max(r, c), "kron");
  CMatrix out(r, c);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

SparseCMatrix kron(const SparseCMatrix& a, const SparseCMatrix& b) {
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SparseCMatrix::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SparseCMatrix::InnerIterator ib(b, kb); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
  SparseCMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

CMatrix leg_embed(const CMatrix& x, Legs legs, int d) {
  require_square(x, static_cast<Eigen::Index>(d) * d, "leg_embed");
  if (d > kMaxDenseLegDim)
    throw DimensionError("leg_embed: dense three-leg operators are limited to d <= " +
                         std::to_string(kMaxDenseLegDim) + "; use the sparse overload");
  return CMatrix(leg_embed(sparse_of(x), legs, d));
}

SparseCMatrix leg_embed(const SparseCMatrix& x, Legs legs, int d) {
  const Eigen::Index dd = static_cast<Eigen::Index>(d) * d;
  if (x.rows() != dd || x.cols() != dd)
    throw DimensionError("leg_embed: expected a " + std::to_string(dd) + "x" +
                         std::to_string(dd) + " operator");
  const SparseCMatrix id = sparse_identity(d);
  switch (legs) {
    case Legs::l12: return kron(x, id);
    case Legs::l23: return kron(id, x);
    case Legs::l13: {
      // X13 = σ12 X23 σ12: relabel (a, b, c) -> (b, a, c).
      const SparseCMatrix x23 = kron(id, x);
      std::vector<Eigen::Triplet<Complex>> t;
      t.reserve(static_cast<std::size_t>(x23.nonZeros()));
      auto swap12 = [d](Eigen::Index i) {
        const Eigen::Index a = i / (static_cast<Eigen::Index>(d) * d), b = (i / d) % d, c = i % d;
        return (b * d + a) * d + c;
      };
      for (int k = 0; k < x23.outerSize(); ++k)
        for (SparseCMatrix::InnerIterator it(x23, k); it; ++it)
          t.emplace_back(swap12(it.row()), swap12(it.col()), it.value());
      SparseCMatrix out(x23.rows(), x23.cols());
      out.setFromTriplets(t.begin(), t.end());
      return out;
    }
  }
  throw DimensionError("leg_embed: unknown legs");
}

CMatrix partial_trace(const CMatrix& a, int leg, int d) {
  require_square(a, static_cast<Eigen::Index>(d) * d, "partial_trace");
  CMatrix out = CMatrix::Zero(d, d);
  if (leg == 2) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Complex s = 0.0;
        for (int k = 0; k < d; ++k) s += a(i * d + k, j * d + k);
        out(i, j) = s;
      }
  } else if (leg == 1) {
    for (int k = 0; k < d; ++k) out += a.block(k * d, k * d, d, d);
  } else {
    throw DimensionError("partial_trace: leg must be 1 or 2");
  }
  return out;
}

CMatrix flip_operator(int d) { return CMatrix(flip_sparse(d)); }

SparseCMatrix flip_sparse(int d) {
  if (d < 1) throw DimensionError("flip_operator: d must be >= 1");
  std::vector<Eigen::Triplet<Complex>> t;
  for (int s = 0; s < d; ++s)
    for (int u = 0; u < d; ++u) t.emplace_back(u * d + s, s * d + u, 1.0);
  SparseCMatrix out(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

CMatrix matrix_unit(int d, int i, int j) {
  CMatrix m = CMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

Residual approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("approx_eq: shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  Residual r;
  r.residual = (a - b).norm();
  r.threshold = tol.absolute + tol.relative * std::max(a.norm(), b.norm());
  r.pass = r.residual <= r.threshold;
  return r;
}

double frobenius(const SparseCMatrix& a) { return a.norm(); }

double frobenius_diff(const SparseCMatrix& a, const SparseCMatrix& b) {
  return SparseCMatrix(a - b).norm();
}

CMatrix conj(const CMatrix& a) { return a.conjugate(); }

bool all_finite(const CMatrix& a) { return a.allFinite(); }

void require_square(const CMatrix& a, Eigen::Index n, const char* what) {
  if (a.rows() != n || a.cols() != n)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(n) + "x" +
                         std::to_string(n) + ", got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
}

double unitarity_residual(const CMatrix& a) {
  return (a.adjoint() * a - CMatrix::Identity(a.cols(), a.cols())).norm();
}

Operator::Operator(CMatrix m, bool with_inverse) : dense_(std::move(m)) {
  if (dense_.rows() != dense_.cols()) throw DimensionError("Operator: matrix must be square");
  if (!dense_.allFinite()) throw DimensionError("Operator: non-finite entries");
  sparse_ = sparse_of(dense_);
  const double n = static_cast<double>(dense_.rows());
  prefer_sparse_ = static_cast<double>(sparse_.nonZeros()) <= n * n / 8.0;
  if (sparse_.nonZeros() == dense_.rows()) {
    std::vector<Eigen::Index> perm(dense_.cols(), -1);
    std::vector<Complex> phase(dense_.cols());
    std::vector<bool> hit(dense_.rows(), false);
    bool ok = true;
    for (Eigen::Index j = 0; j < sparse_.outerSize() && ok; ++j)
      for (SparseCMatrix::InnerIterator it(sparse_, j); it; ++it) {
        if (perm[j] >= 0 || hit[it.row()]) ok = false;
        perm[j] = it.row();
        phase[j] = it.value();
        hit[it.row()] = true;
      }
    for (Eigen::Index j = 0; ok && j < dense_.cols(); ++j) ok = perm[j] >= 0;
    if (ok) {
      perm_ = std::move(perm);
      phase_ = std::move(phase);
    }
  }
  if (with_inverse) {
    Eigen::PartialPivLU<CMatrix> lu(dense_);
    inverse_ = lu.inverse();
    if (!inverse_.allFinite() || (dense_ * inverse_ - identity(dense_.rows())).norm() > 1e-8 * n)
      throw DimensionError("Operator: matrix is not invertible");
    // Permutation inputs give exact inverses; strip rounding noise so sparsity survives.
    for (Eigen::Index j = 0; j < inverse_.cols(); ++j)
      for (Eigen::Index i = 0; i < inverse_.rows(); ++i)
        if (std::abs(inverse_(i, j)) < 1e-15) inverse_(i, j) = 0.0;
    inverse_sparse_ = sparse_of(inverse_);
  }
}

CMatrix Operator::adjoint_sandwich(const CMatrix& x) const {
  if (is_monomial()) {
    const Eigen::Index n = rows();
    require_square(x, n, "adjoint_sandwich");
    CMatrix y(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        y(i, j) = std::conj(phase_[i]) * x(perm_[i], perm_[j]) * phase_[j];
    return y;
  }
  if (prefer_sparse_) {
    CMatrix t = sparse_.adjoint() * x;
    return t * sparse_;
  }
  return dense_.adjoint() * x * dense_;
}

CMatrix Operator::sandwich(const CMatrix& x) const {
  if (is_monomial()) {
    const Eigen::Index n = rows();
    require_square(x, n, "sandwich");
    CMatrix y(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        y(perm_[i], perm_[j]) = phase_[i] * x(i, j) * std::conj(phase_[j]);
    return y;
  }
  if (prefer_sparse_) {
    CMatrix t = sparse_ * x;
    return t * SparseCMatrix(sparse_.adjoint());
  }
  return dense_ * x * dense_.adjoint();
}

CMatrix Operator::inverse_sandwich(const CMatrix& x) const {
  if (inverse_.size() == 0) throw Error("Operator: inverse was not computed");
  if (is_monomial()) {
    const Eigen::Index n = rows();
    require_square(x, n, "inverse_sandwich");
    CMatrix y(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        y(i, j) = x(perm_[i], perm_[j]) * phase_[j] / phase_[i];
    return y;
  }
  if (prefer_sparse_) {
    CMatrix t = inverse_sparse_ * x;
    return t * sparse_;
  }
  return inverse_ * x * dense_;
}

CMatrix Operator::monomial_trace2(const CMatrix& a, const CMatrix& b, bool inverse) const {
  const Eigen::Index d = a.rows();
  require_square(a, d, "sandwich_trace2");
  require_square(b, d, "sandwich_trace2");
  if (d * d != rows()) throw DimensionError("sandwich_trace2: operator is not on C^d x C^d");
  CMatrix out = CMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) {
      Complex s = 0.0;
      for (Eigen::Index k = 0; k < d; ++k) {
        const Eigen::Index p = perm_[i * d + k], q = perm_[j * d + k];
        const Complex left = inverse ? 1.0 / phase_[i * d + k] : std::conj(phase_[i * d + k]);
        s += left * a(p / d, q / d) * b(p % d, q % d) * phase_[j * d + k];
      }
      out(i, j) = s;
    }
  return out;
}

CMatrix Operator::adjoint_sandwich_trace2(const CMatrix& a, const CMatrix& b) const {
  if (is_monomial()) return monomial_trace2(a, b, false);
  return partial_trace(adjoint_sandwich(kron(a, b)), 2, static_cast<int>(a.rows()));
}

CMatrix Operator::inverse_sandwich_trace2(const CMatrix& a, const CMatrix& b) const {
  if (inverse_.size() == 0) throw Error("Operator: inverse was not computed");
  if (is_monomial()) return monomial_trace2(a, b, true);
  return partial_trace(inverse_sandwich(kron(a, b)), 2, static_cast<int>(a.rows()));
}

const CMatrix& Operator::inverse() const {
  if (inverse_.size() == 0) throw Error("Operator: inverse was not computed");
  return inverse_;
}


int numerical_rank(const CMatrix& a, double relative_cutoff) {
  if (a.size() == 0) return 0;
  if (std::min(a.rows(), a.cols()) <= 256) {
    const Eigen::JacobiSVD<CMatrix> svd(a);
    const auto& s = svd.singularValues();
    if (s(0) == 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (s(i) > relative_cutoff * s(0)) ++r;
    return r;
  }
  Eigen::ColPivHouseholderQR<CMatrix> qr(a);
  const double top = qr.maxPivot();
  if (top == 0.0) return 0;
  qr.setThreshold(relative_cutoff);
  return static_cast<int>(qr.rank());
}

}  // namespace qg
