#pragma once

#include "qg/bundle.hpp"

namespace qg {

using L1Function = CVector;

/// ω★τ = (id⊗tr)(V*(ω⊗τ)V): the pre-adjoint of Γʳ(T) = V(T⊗1)V* under
/// ⟨ω, T⟩ = tr(Tω).
CMatrix star(const QGBundle& b, const CMatrix& omega, const CMatrix& tau);
/// ω•τ = (id⊗tr)(V̂*(ω⊗τ)V̂).
CMatrix bullet(const QGBundle& b, const CMatrix& omega, const CMatrix& tau);

/// m_★ applied to an element of T(H⊗H): (id⊗tr)(V* X V).
CMatrix star_multiply(const QGBundle& b, const CMatrix& x);
/// ω•τ through m_★ ∘ Ad(W*) ∘ Σ, an independent route to bullet.
CMatrix bullet_via_star(const QGBundle& b, const CMatrix& omega, const CMatrix& tau);

/// Right and left regular representations: ρ(s)δ_t = δ_{ts⁻¹}, λ(s)δ_t = δ_{st}.
CMatrix right_regular(const FiniteGroup& g, int s);
CMatrix left_regular(const FiniteGroup& g, int s);

/// Σ_s ρ(s)*·ω·ρ(s)·τ_{ss}.
CMatrix star_oracle_commutative(const FiniteGroup& g, const CMatrix& omega, const CMatrix& tau);

/// Which translates of τ are summed in the Schur-multiplier form of bullet.
enum class Translate {
  right,  // c_{s,t} = Σ_r τ_{sr,tr} = tr(τλ(ts⁻¹))
  left,   // c_{s,t} = Σ_r τ_{rs,rt}
};

/// [c_{s,t}] ∘ ω (entrywise).
CMatrix bullet_oracle_cocommutative(const FiniteGroup& g, const CMatrix& omega,
                                    const CMatrix& tau, Translate t = Translate::right);

/// Diagonal restriction ω ↦ (ω_{s,s})_s, the quotient onto L¹(G).
L1Function pi(const QGBundle& b, const CMatrix& omega);
/// ω ↦ (tr(ωλ(s)))_s, the quotient onto A(G).
L1Function pi_hat(const QGBundle& b, const CMatrix& omega);
L1Function pi_hat(const FiniteGroup& g, const CMatrix& omega);

/// (f★h)(s) = Σ_r f(sr⁻¹)h(r) (counting measure).
L1Function convolve(const FiniteGroup& g, const L1Function& f, const L1Function& h);

/// Trace-class element with π̂(τ) = fh: τ = d⁻¹ Σ_g fh(g) λ(g⁻¹).
CMatrix fourier_lift(const FiniteGroup& g, const L1Function& fh);

void require_operand(const QGBundle& b, const CMatrix& m, const char* what);

}  // namespace qg
