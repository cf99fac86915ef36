#include "qg/products.hpp"

#include <string>

#include "qg/error.hpp"

namespace qg {

void require_operand(const QGBundle& b, const CMatrix& m, const char* what) {
  require_square(m, b.d, what);
  if (!m.allFinite()) throw DimensionError(std::string(what) + ": non-finite entries");
}

// ⟨ω★τ, T⟩ = ⟨ω⊗τ, V(T⊗1)V*⟩ = tr((T⊗1)·V*(ω⊗τ)V) = tr(T·(id⊗tr)(V*(ω⊗τ)V)).
CMatrix star(const QGBundle& b, const CMatrix& omega, const CMatrix& tau) {
  require_operand(b, omega, "star");
  require_operand(b, tau, "star");
  return b.v.adjoint_sandwich_trace2(omega, tau);
}

CMatrix bullet(const QGBundle& b, const CMatrix& omega, const CMatrix& tau) {
  require_operand(b, omega, "bullet");
  require_operand(b, tau, "bullet");
  return b.v_hat.adjoint_sandwich_trace2(omega, tau);
}

CMatrix star_multiply(const QGBundle& b, const CMatrix& x) {
  require_square(x, static_cast<Eigen::Index>(b.d) * b.d, "star_multiply");
  return partial_trace(b.v.adjoint_sandwich(x), 2, b.d);
}

CMatrix bullet_via_star(const QGBundle& b, const CMatrix& omega, const CMatrix& tau) {
  require_operand(b, omega, "bullet_via_star");
  require_operand(b, tau, "bullet_via_star");
  return star_multiply(b, b.w.adjoint_sandwich(kron(tau, omega)));
}

CMatrix right_regular(const FiniteGroup& g, int s) {
  const int d = g.order();
  CMatrix m = CMatrix::Zero(d, d);
  for (int t = 0; t < d; ++t) m(g.mul(t, g.inv(s)), t) = 1.0;
  return m;
}

CMatrix left_regular(const FiniteGroup& g, int s) {
  const int d = g.order();
  CMatrix m = CMatrix::Zero(d, d);
  for (int t = 0; t < d; ++t) m(g.mul(s, t), t) = 1.0;
  return m;
}

CMatrix star_oracle_commutative(const FiniteGroup& g, const CMatrix& omega, const CMatrix& tau) {
  const int d = g.order();
  require_square(omega, d, "star_oracle_commutative");
  require_square(tau, d, "star_oracle_commutative");
  CMatrix out = CMatrix::Zero(d, d);
  for (int s = 0; s < d; ++s) {
    const CMatrix r = right_regular(g, s);
    out += r.adjoint() * omega * r * tau(s, s);
  }
  return out;
}

CMatrix bullet_oracle_cocommutative(const FiniteGroup& g, const CMatrix& omega,
                                    const CMatrix& tau, Translate t) {
  const int d = g.order();
  require_square(omega, d, "bullet_oracle_cocommutative");
  require_square(tau, d, "bullet_oracle_cocommutative");
  CMatrix out(d, d);
  for (int s = 0; s < d; ++s)
    for (int u = 0; u < d; ++u) {
      Complex c = 0.0;
      for (int r = 0; r < d; ++r)
        c += t == Translate::right ? tau(g.mul(s, r), g.mul(u, r)) : tau(g.mul(r, s), g.mul(r, u));
      out(s, u) = c * omega(s, u);
    }
  return out;
}

L1Function pi(const QGBundle& b, const CMatrix& omega) {
  require_operand(b, omega, "pi");
  return omega.diagonal();
}

L1Function pi_hat(const QGBundle& b, const CMatrix& omega) {
  require_operand(b, omega, "pi_hat");
  return pi_hat(b.require_group("pi_hat"), omega);
}

L1Function pi_hat(const FiniteGroup& g, const CMatrix& omega) {
  const int d = g.order();
  require_square(omega, d, "pi_hat");
  L1Function f(d);
  for (int s = 0; s < d; ++s) {
    Complex acc = 0.0;
    for (int t = 0; t < d; ++t) acc += omega(t, g.mul(s, t));
    f(s) = acc;
  }
  return f;
}

L1Function convolve(const FiniteGroup& g, const L1Function& f, const L1Function& h) {
  const int d = g.order();
  if (f.size() != d || h.size() != d) throw DimensionError("convolve: length must equal |G|");
  L1Function out = L1Function::Zero(d);
  for (int s = 0; s < d; ++s)
    for (int r = 0; r < d; ++r) out(s) += f(g.mul(s, g.inv(r))) * h(r);
  return out;
}

CMatrix fourier_lift(const FiniteGroup& g, const L1Function& fh) {
  const int d = g.order();
  if (fh.size() != d) throw DimensionError("fourier_lift: length must equal |G|");
  CMatrix tau = CMatrix::Zero(d, d);
  for (int x = 0; x < d; ++x) tau += fh(x) * left_regular(g, g.inv(x));
  return tau / static_cast<double>(d);
}

}  // namespace qg
