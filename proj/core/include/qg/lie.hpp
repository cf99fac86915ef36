#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "qg/error.hpp"
#include "qg/products.hpp"
#include "qg/random.hpp"
#include "qg/report.hpp"

namespace qg {

/// An element of the trace-zero subspace T(H)_0.
class TraceZero {
 public:
  /// Rejects |tr(m)| > tol.
  static TraceZero strict(CMatrix m, double tol = 1e-12);
  /// Subtracts tr(m)·ξξ* using the bundle's Haar vector as the trace-one pivot.
  static TraceZero project(CMatrix m, const QGBundle& b);

  const CMatrix& mat() const noexcept { return mat_; }
  operator const CMatrix&() const noexcept { return mat_; }

 private:
  explicit TraceZero(CMatrix m) : mat_(std::move(m)) {}
  CMatrix mat_;
};

/// ρ⊛τ = ½(ρ★τ − τ•ρ)
CMatrix ostar(const QGBundle& b, const CMatrix& rho, const CMatrix& tau);
/// ρ⊛⁺τ = ½(ρ★τ + τ•ρ)
CMatrix ostar_plus(const QGBundle& b, const CMatrix& rho, const CMatrix& tau);
/// ⊛ built from the dual bundle's products (★ and • swapped).
CMatrix ostar_dual(const QGBundle& b, const CMatrix& rho, const CMatrix& tau);
CMatrix ostar_plus_dual(const QGBundle& b, const CMatrix& rho, const CMatrix& tau);

/// (ω⊛τ)_{s,t} = ½ Σ_r (τ_{r,r} ω_{sr⁻¹,tr⁻¹} − τ_{s,t} ω_{x,y}) with (x,y) the
/// right translates (sr, tr) or the left translates (rs, rt).
CMatrix entrywise_ostar_commutative(const FiniteGroup& g, const CMatrix& omega,
                                    const CMatrix& tau, Translate t = Translate::right);

using BilinearProduct = std::function<CMatrix(const CMatrix&, const CMatrix&)>;

/// Two bilinear products on a common space of d×d matrices.
struct ProductPair {
  BilinearProduct star;
  BilinearProduct bullet;
  int d = 0;
};

enum class MixedSign { lie, jordan };

/// Worst residuals of the two commuting-product conditions
///   (1) a★(b•c) = b•(a★c)    (2) (a★b)•c = (a•c)★b
/// and of associativity of each product, over sampled triples.
struct ConditionResiduals {
  double condition1 = 0.0;
  double condition2 = 0.0;
  double star_assoc = 0.0;
  double bullet_assoc = 0.0;
};

/// Generates test elements for the condition checks.
using ElementSampler = std::function<CMatrix(Sampler&)>;

ConditionResiduals check_conditions(const ProductPair& p, const ElementSampler& gen,
                                    int samples, std::uint64_t seed);

class ConditionViolation : public Error {
 public:
  ConditionViolation(const std::string& what, ConditionResiduals r)
      : Error(what), residuals_(r) {}
  const ConditionResiduals& residuals() const noexcept { return residuals_; }

 private:
  ConditionResiduals residuals_;
};

/// a⊛b = ½(a★b ∓ b•a) for a pair that passes the conditions on sampled triples.
class MixedProduct {
 public:
  MixedProduct(ProductPair p, MixedSign sign, ConditionResiduals r)
      : pair_(std::move(p)), sign_(sign), residuals_(r) {}

  CMatrix operator()(const CMatrix& a, const CMatrix& b) const;
  const ConditionResiduals& residuals() const noexcept { return residuals_; }
  MixedSign sign() const noexcept { return sign_; }

 private:
  ProductPair pair_;
  MixedSign sign_;
  ConditionResiduals residuals_;
};

struct MixedProductOptions {
  int samples = 50;
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
};

/// Throws ConditionViolation if either condition fails on a sampled triple
/// (residual measured relative to unit-norm inputs).
MixedProduct mixed_product_general(const ProductPair& p, MixedSign sign,
                                   const ElementSampler& gen,
                                   const MixedProductOptions& opt = {});

ProductPair bundle_products(const QGBundle& b);

struct AssociativityOptions {
  int samples = 200;
  std::uint64_t seed = 7;
  double tolerance = 1e-9;
};

/// Associativity of ⊛ and ⊛⁺ on trace-zero triples, the middle-element-only
/// variant, and a search for a violation when the middle element has trace.
VerifyReport verify_associativity(const QGBundle& b, const AssociativityOptions& opt = {});

/// ρ ⊛̂ τ = −(τ⊛ρ) and ρ ⊛̂⁺ τ = τ⊛⁺ρ.
VerifyReport dual_product_relation(const QGBundle& b, const CMatrix& rho, const CMatrix& tau,
                                   double tolerance = 1e-10);

struct Witness {
  CMatrix rho;
  CMatrix tau;
  double residual = 0.0;  // ‖ρ⊛τ − τ⊛ρ‖_F
  double scale = 0.0;     // ‖ρ‖_F‖τ‖_F
};

/// Maximizes ‖ρ⊛τ − τ⊛ρ‖ over a deterministic search. Throws Error for d = 1
/// and IdentityError if no witness above 0.01‖ρ‖‖τ‖ is found.
Witness nonabelian_witness(const QGBundle& b, std::uint64_t seed = 7);

/// E = 2(ηη* − ξξ*), checked as a two-sided ⊛-identity on trace-zero samples.
CMatrix identity_element(const QGBundle& b, double tolerance = 1e-10);
CMatrix identity_element_unchecked(const QGBundle& b);

/// Matrix-unit basis of the trace-zero space: E_ij (i≠j), then E_00 − E_ii.
std::vector<CMatrix> trace_zero_basis(int d);
/// Coordinates of a trace-zero matrix in trace_zero_basis.
CVector trace_zero_coordinates(const CMatrix& m);

}  // namespace qg
