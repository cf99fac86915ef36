#include "qg/lp.hpp"

#include <cmath>
#include <memory>

#include "qg/error.hpp"

namespace qg {

FundamentalPair build_lp_pair(const FiniteGroup& g, double p, double tol) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw GroupError("p must lie in (1, inf), got " + std::to_string(p));
  const int d = g.order();
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  CMatrix vp = CMatrix::Zero(n, n), vhp = CMatrix::Zero(n, n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      vp(g.mul(a, g.inv(b)) * d + b, a * d + b) = std::pow(modular_function(g, b), 1.0 / p);
      vhp(a * d + g.mul(a, b), a * d + b) = 1.0;
    }
  FundamentalPair pair{d, p, Operator(std::move(vp), true), Operator(std::move(vhp), true)};
  if (const double r = lp_commutation_residual(pair); r > tol)
    throw IdentityError("V12 V^13 = V^13 V12 V^23 violated", r);
  return pair;
}

double lp_commutation_residual(const FundamentalPair& pair) {
  const int d = pair.d;
  const SparseCMatrix v12 = leg_embed(pair.v_p.sparse(), Legs::l12, d);
  const SparseCMatrix h13 = leg_embed(pair.v_hat_p.sparse(), Legs::l13, d);
  const SparseCMatrix h23 = leg_embed(pair.v_hat_p.sparse(), Legs::l23, d);
  return frobenius_diff(SparseCMatrix(v12 * h13), SparseCMatrix(h13 * v12 * h23));
}

CMatrix star_p(const FundamentalPair& pair, const CMatrix& omega, const CMatrix& tau) {
  require_square(omega, pair.d, "star_p");
  require_square(tau, pair.d, "star_p");
  return pair.v_p.inverse_sandwich_trace2(omega, tau);
}

CMatrix bullet_p(const FundamentalPair& pair, const CMatrix& omega, const CMatrix& tau) {
  require_square(omega, pair.d, "bullet_p");
  require_square(tau, pair.d, "bullet_p");
  return pair.v_hat_p.inverse_sandwich_trace2(omega, tau);
}

ProductPair lp_products(const FundamentalPair& pair) {
  auto shared = std::make_shared<const FundamentalPair>(pair);
  ProductPair p;
  p.d = pair.d;
  p.star = [shared](const CMatrix& x, const CMatrix& y) { return star_p(*shared, x, y); };
  p.bullet = [shared](const CMatrix& x, const CMatrix& y) { return bullet_p(*shared, x, y); };
  return p;
}

MixedProduct ostar_p(const FundamentalPair& pair, MixedSign sign, const MixedProductOptions& opt) {
  const int d = pair.d;
  return mixed_product_general(lp_products(pair), sign,
                               [d](Sampler& s) { return s.trace_zero(d); }, opt);
}

}  // namespace qg
