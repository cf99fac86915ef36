#include "qg/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "qg/error.hpp"

namespace qg {

CVector vec(const CMatrix& x) {
  CVector v(x.size());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  return v;
}

CMatrix unvec(const CVector& v, int d) {
  if (v.size() != static_cast<Eigen::Index>(d) * d) throw DimensionError("unvec: length must be d^2");
  CMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = v(i * d + j);
  return m;
}

CMatrix SuperOperator::operator()(const CMatrix& x) const {
  require_square(x, d, "SuperOperator");
  return unvec(mat * vec(x), d);
}

SuperOperator SuperOperator::then(const SuperOperator& next) const {
  if (next.d != d) throw DimensionError("SuperOperator::then: dimension mismatch");
  return {d, next.mat * mat};
}

SuperOperator superoperator_of(int d, const std::function<CMatrix(const CMatrix&)>& f) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  SuperOperator s{d, CMatrix(n, n)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s.mat.col(i * d + j) = vec(f(matrix_unit(d, i, j)));
  return s;
}

namespace {

const FiniteGroup& commutative_group(const QGBundle& b, const char* what) {
  if (b.kind != BundleKind::commutative)
    throw Error(std::string(what) + " requires a commutative group bundle");
  return b.require_group(what);
}

}  // namespace

SuperOperator theta(const QGBundle& b, const L1Function& f) {
  const FiniteGroup& g = commutative_group(b, "theta");
  if (f.size() != g.order()) throw DimensionError("theta: length must equal |G|");
  const CMatrix diag = f.asDiagonal();
  return superoperator_of(b.d, [&](const CMatrix& rho) { return star(b, rho, diag); });
}

SuperOperator theta_hat(const QGBundle& b, const L1Function& fh) {
  const FiniteGroup& g = commutative_group(b, "theta_hat");
  if (fh.size() != g.order()) throw DimensionError("theta_hat: length must equal |G|");
  const CMatrix tau = fourier_lift(g, fh);
  return superoperator_of(b.d, [&](const CMatrix& rho) { return bullet(b, rho, tau); });
}

SuperOperator haar_trace_map(const QGBundle& b) {
  const CMatrix p = b.haar_vector * b.haar_vector.adjoint();
  return superoperator_of(b.d, [&](const CMatrix& rho) { return CMatrix(rho.trace() * p); });
}

SuperOperator dual_haar_trace_map(const QGBundle& b) {
  const CMatrix p = b.counit_vector * b.counit_vector.adjoint();
  return superoperator_of(b.d, [&](const CMatrix& rho) { return CMatrix(rho.trace() * p); });
}

// tr(H(T)ρ) = tr(T·(ρ★ξξ*)) = tr((T⊗1)V*(ρ⊗ξξ*)V), so H(T) = (id⊗tr)(V(T⊗1)V*·(1⊗ξξ*)).
CMatrix apply_haar_expectation(const QGBundle& b, const CMatrix& t) {
  require_operand(b, t, "haar_expectation");
  const CMatrix m = b.haar_vector * b.haar_vector.adjoint();
  const CMatrix x = b.v.sandwich(kron(t, identity(b.d)));
  const int d = b.d;
  CMatrix out = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out(i, j) += x(i * d + k, j * d + l) * m(l, k);
  return out;
}

SuperOperator haar_expectation(const QGBundle& b) {
  return superoperator_of(b.d, [&](const CMatrix& t) { return apply_haar_expectation(b, t); });
}

CMatrix right_action(const QGBundle& b, const CMatrix& t, const CMatrix& rho) {
  require_operand(b, t, "right_action");
  require_operand(b, rho, "right_action");
  const CMatrix gamma = b.v.sandwich(kron(t, identity(b.d)));
  return partial_trace(kron(rho, identity(b.d)) * gamma, 1, b.d);
}

namespace {

std::vector<CMatrix> multiplication_operators(const QGBundle& b, Side side) {
  std::vector<CMatrix> ms;
  for (const CMatrix& r0 : trace_zero_basis(b.d)) {
    const SuperOperator s = side == Side::left
        ? superoperator_of(b.d, [&](const CMatrix& x) { return ostar(b, r0, x); })
        : superoperator_of(b.d, [&](const CMatrix& x) { return ostar(b, x, r0); });
    ms.push_back(s.mat);
  }
  return ms;
}

double commutator_norm2(const CMatrix& q, const std::vector<CMatrix>& ms) {
  double acc = 0.0;
  for (const CMatrix& m : ms) acc += (q * m - m * q).squaredNorm();
  return acc;
}

}  // namespace

double module_residual(const QGBundle& b, const SuperOperator& th, Side side) {
  double worst = 0.0;
  for (const CMatrix& m : multiplication_operators(b, side))
    worst = std::max(worst, (th.mat * m - m * th.mat).norm());
  return worst;
}

int span_rank(const std::vector<SuperOperator>& ops, double relative_cutoff) {
  if (ops.empty()) return 0;
  CMatrix a(ops.front().mat.size(), static_cast<Eigen::Index>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = vec(ops[k].mat);
  return numerical_rank(a, relative_cutoff);
}

ModuleMapSpace module_map_space_dim(const QGBundle& b, Side side, const ModuleMapOptions& opt) {
  const int d = b.d;
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  if (d > 6) throw DimensionError("module_map_space_dim: exact solve is limited to d <= 6");
  ModuleMapSpace out;
  out.side = side;
  const std::vector<CMatrix> ms = multiplication_operators(b, side);

  // Gram matrix Σ A_k*A_k of the constraints A_k = I⊗M_kᵀ − M_k⊗I acting on row-major vec(θ).
  const CMatrix id = identity(n);
  CMatrix gram = CMatrix::Zero(n * n, n * n);
  for (const CMatrix& m : ms) {
    const CMatrix bt = m.transpose();
    const CMatrix bs = m.conjugate();
    gram += kron(id, bs * bt) + kron(m.adjoint() * m, id) - kron(m, bs) - kron(m.adjoint(), bt);
  }
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
  const auto& lam = es.eigenvalues();
  const double lmax = lam.size() ? std::max(lam(lam.size() - 1), 0.0) : 0.0;
  std::vector<std::pair<double, Eigen::Index>> sv;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    double s = std::sqrt(std::max(lam(i), 0.0));
    if (lam(i) <= 1e-6 * lmax) s = std::sqrt(commutator_norm2(unvec(es.eigenvectors().col(i), static_cast<int>(n)), ms));
    sv.emplace_back(s, i);
  }
  std::sort(sv.begin(), sv.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  const double smax = sv.empty() ? 0.0 : sv.front().first;
  out.cutoff = opt.relative_cutoff * smax;
  out.smallest_kept = std::numeric_limits<double>::infinity();
  out.largest_discarded = 0.0;
  for (const auto& [s, i] : sv) {
    out.singular_values.push_back(s);
    if (smax > 0.0 && s > out.cutoff) {
      out.smallest_kept = std::min(out.smallest_kept, s);
    } else {
      ++out.dimension;
      out.largest_discarded = std::max(out.largest_discarded, s);
      if (opt.keep_basis)
        out.basis.push_back({static_cast<int>(d), unvec(es.eigenvectors().col(i), static_cast<int>(n))});
      if (s >= out.cutoff / 10.0 && smax > 0.0) out.ambiguous = true;
    }
    if (smax > 0.0 && s > out.cutoff && s <= 10.0 * out.cutoff) out.ambiguous = true;
  }
  if (!std::isfinite(out.smallest_kept) || out.largest_discarded == 0.0)
    out.gap_orders = std::numeric_limits<double>::infinity();
  else
    out.gap_orders = std::log10(out.smallest_kept / out.largest_discarded);

  if (b.kind == BundleKind::commutative && b.group) {
    const int order = b.group->order();
    std::vector<SuperOperator> gens;
    for (int s = 0; s < order; ++s) {
      L1Function e = L1Function::Zero(order);
      e(s) = 1.0;
      gens.push_back(side == Side::left ? theta(b, e) : theta_hat(b, e));
    }
    out.generators_rank = span_rank(gens);
    gens.push_back(side == Side::left ? haar_trace_map(b) : dual_haar_trace_map(b));
    out.predicted = span_rank(gens);
    out.direct_sum = out.predicted == out.generators_rank + 1;
    for (const SuperOperator& g : gens)
      out.containment_residual = std::max(out.containment_residual, module_residual(b, g, side));
  }
  return out;
}

}  // namespace qg
