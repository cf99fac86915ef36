#pragma once

#include "qg/group.hpp"
#include "qg/lie.hpp"
#include "qg/tensor.hpp"

namespace qg {

/// Fundamental isometries of l^p(G×G):
///   V_p ξ(s,t) = Δ(t)^{1/p} ξ(st,t),   V̂_p ξ(s,t) = ξ(s,s⁻¹t).
struct FundamentalPair {
  int d = 0;
  double p = 2.0;
  Operator v_p;
  Operator v_hat_p;
};

/// Throws GroupError for p outside (1,∞) and IdentityError if the
/// commutation relation V12 V̂13 = V̂13 V12 V̂23 fails.
FundamentalPair build_lp_pair(const FiniteGroup& g, double p, double tol = 1e-12);

double lp_commutation_residual(const FundamentalPair& pair);

/// ω★τ = (id⊗tr)(V_p⁻¹(ω⊗τ)V_p)
CMatrix star_p(const FundamentalPair& pair, const CMatrix& omega, const CMatrix& tau);
/// ω•τ = (id⊗tr)(V̂_p⁻¹(ω⊗τ)V̂_p)
CMatrix bullet_p(const FundamentalPair& pair, const CMatrix& omega, const CMatrix& tau);

ProductPair lp_products(const FundamentalPair& pair);

/// ⊛_p (or ⊛⁺_p) through mixed_product_general over trace-zero samples.
MixedProduct ostar_p(const FundamentalPair& pair, MixedSign sign = MixedSign::lie,
                     const MixedProductOptions& opt = {});

}  // namespace qg
