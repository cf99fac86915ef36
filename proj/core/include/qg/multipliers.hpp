#pragma once

#include <functional>
#include <vector>

#include "qg/lie.hpp"

namespace qg {

/// A linear map on d×d matrices acting on row-major vectorizations.
struct SuperOperator {
  int d = 0;
  CMatrix mat;  // d²×d²

  CMatrix operator()(const CMatrix& x) const;
  SuperOperator then(const SuperOperator& next) const;  // next ∘ this
};

CVector vec(const CMatrix& x);
CMatrix unvec(const CVector& v, int d);
SuperOperator superoperator_of(int d, const std::function<CMatrix(const CMatrix&)>& f);

/// Predual of T ↦ (id⊗f)Γʳ(T): ρ ↦ ρ★diag(f). Requires a commutative bundle.
SuperOperator theta(const QGBundle& b, const L1Function& f);
/// Predual of the dual convolution action: ρ ↦ ρ•τ with π̂(τ) = fh.
SuperOperator theta_hat(const QGBundle& b, const L1Function& fh);
/// ρ ↦ tr(ρ)·ξξ*  (λ(φ)tr(·) with ξ the Haar vector).
SuperOperator haar_trace_map(const QGBundle& b);
/// ρ ↦ tr(ρ)·ηη*  (the dual counterpart, η the co-unit vector).
SuperOperator dual_haar_trace_map(const QGBundle& b);

/// T ↦ Θʳ(m)(T), defined by ⟨Θʳ(m)(T), ρ⟩ = ⟨m, T★ρ⟩ with m the Haar mean.
/// Acts on B(H) = M_d.
SuperOperator haar_expectation(const QGBundle& b);
/// Θʳ(m)(T) = (id⊗ω_ξ)Γʳ(T) evaluated directly.
CMatrix apply_haar_expectation(const QGBundle& b, const CMatrix& t);
/// The right action T ↦ T★ρ = (ρ⊗id)Γʳ(T) on B(H).
CMatrix right_action(const QGBundle& b, const CMatrix& t, const CMatrix& rho);

enum class Side { left, right };

struct ModuleMapSpace {
  Side side = Side::left;
  int dimension = 0;
  /// dim span(Θ(L¹) ∪ {λ(φ)tr}) (left) or span(Θ̂(A) ∪ {λ̂(φ̂)tr}) (right);
  /// −1 when the bundle carries no group.
  int predicted = -1;
  /// Rank of Θ (resp. Θ̂) alone; predicted == generators_rank + 1 means the sum is direct.
  int generators_rank = -1;
  bool direct_sum = false;
  /// Largest module-property residual among the predicted generators.
  double containment_residual = 0.0;
  /// Singular values of the constraint system, descending.
  std::vector<double> singular_values;
  double cutoff = 0.0;
  double smallest_kept = 0.0;
  double largest_discarded = 0.0;
  double gap_orders = 0.0;
  bool ambiguous = false;
  std::vector<SuperOperator> basis;
};

struct ModuleMapOptions {
  double relative_cutoff = 1e-8;
  bool keep_basis = true;
};

/// Dimension of {θ : θ(ρ0⊛τ) = ρ0⊛θ(τ)} (left) or {θ : θ(τ⊛ρ0) = θ(τ)⊛ρ0}
/// (right) over trace-zero ρ0 and all τ, by exact nullspace computation.
ModuleMapSpace module_map_space_dim(const QGBundle& b, Side side,
                                    const ModuleMapOptions& opt = {});

/// Left (resp. right) ⊛-module residual of θ over the full basis pairs.
double module_residual(const QGBundle& b, const SuperOperator& theta, Side side);

/// Numerical rank of a set of superoperators (relative cutoff on singular values).
int span_rank(const std::vector<SuperOperator>& ops, double relative_cutoff = 1e-8);

}  // namespace qg
