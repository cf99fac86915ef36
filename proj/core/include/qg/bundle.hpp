#pragma once

#include <optional>
#include <string>

#include "qg/group.hpp"
#include "qg/report.hpp"
#include "qg/tensor.hpp"

namespace qg {

/// An antiunitary ξ ↦ M·conj(ξ), stored through its linear part M.
struct Conjugation {
  CMatrix m;

  CVector apply(const CVector& xi) const { return m * xi.conjugate(); }
  /// (J⊗J) X (J⊗J) as a linear map: (M⊗M)·conj(X)·conj(M⊗M).
  CMatrix conjugate_pair(const CMatrix& x) const;
};

enum class BundleKind { commutative, dual, user };

/// A finite quantum group realized on H = C^d: the fundamental unitaries of G
/// and of its dual, the modular conjugations, and the vectors implementing
/// the co-unit and the Haar state.
///
/// Built only through build_commutative / build_dual / build_from_unitary,
/// which validate every structural identity before returning.
struct QGBundle {
  int d = 0;
  Operator w;
  Operator v;
  Operator w_hat;
  Operator v_hat;
  Conjugation j;
  Conjugation j_hat;
  CMatrix u;              // Ĵ J
  CVector counit_vector;  // η: ω_η is the co-unit
  CVector haar_vector;    // ξ: ω_ξ is the Haar state
  BundleKind kind = BundleKind::user;
  std::string id;
  /// Underlying group for commutative bundles and their duals.
  std::optional<FiniteGroup> group;

  const FiniteGroup& require_group(const char* what) const;
  bool is_group_bundle() const { return group.has_value(); }
};

struct BundleOptions {
  Tolerance tol{1e-10, 1e-10};
  /// Skip the O(d^5) three-leg checks (used when re-reading trusted files).
  bool validate = true;
};

QGBundle build_commutative(const FiniteGroup& g, const BundleOptions& opt = {});
QGBundle build_dual(const QGBundle& b, const BundleOptions& opt = {});

/// Admits a user multiplicative unitary. Throws IdentityError when w is not
/// unitary, fails the pentagon, or a derived identity fails.
QGBundle build_from_unitary(const CMatrix& w, const Conjugation& j, const Conjugation& j_hat,
                            const BundleOptions& opt = {});

/// Residuals of the fundamental-unitary identities. Informational entries
/// (printed commutation forms, Prop.-style u = ĴJ for user bundles) are
/// non-gating.
VerifyReport validate_qg(const QGBundle& b, const Tolerance& tol = {1e-10, 1e-10});

/// dim(span{(id⊗ω)(W)} ∩ span{(ω⊗id)(W)}) over matrix-unit slices ω.
int intersection_dimension(const QGBundle& b);

/// Left slices (ω⊗id)(W) and right slices (id⊗ω)(W) for ω = E_ij.
CMatrix left_slice(const CMatrix& w, int d, int i, int j);
CMatrix right_slice(const CMatrix& w, int d, int i, int j);

/// Operators of the commutative bundle: W δ_a⊗δ_b = δ_a⊗δ_ab,
/// V δ_a⊗δ_b = δ_{ab⁻¹}⊗δ_b · Δ(b)^{1/2} with Δ ≡ 1.
CMatrix commutative_w(const FiniteGroup& g);
CMatrix commutative_v(const FiniteGroup& g);
/// Permutation δ_s ↦ δ_{s⁻¹}.
CMatrix inversion_matrix(const FiniteGroup& g);

/// Modular function of a finite group (unimodular).
inline double modular_function(const FiniteGroup&, int) { return 1.0; }

}  // namespace qg
