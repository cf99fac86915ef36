#pragma once

#include <complex>

#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using SparseCMatrix = Eigen::SparseMatrix<Complex>;

/// Largest row/column count a dense result may have.
inline constexpr Eigen::Index kMaxDenseDim = 4096;
/// Dense three-leg operators are only materialized up to this local dimension.
inline constexpr int kMaxDenseLegDim = 12;

struct Tolerance {
  double absolute = 1e-10;
  double relative = 1e-10;
};

struct Residual {
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = true;
};

/// Which two factors of H⊗H⊗H an operator on H⊗H acts on.
enum class Legs { l12, l13, l23 };

/// Kronecker product; δ_s⊗δ_t sits at index s·d + t.
CMatrix kron(const CMatrix& a, const CMatrix& b);
SparseCMatrix kron(const SparseCMatrix& a, const SparseCMatrix& b);

/// Leg embedding of a d²×d² operator into H⊗H⊗H. Dense form is gated to
/// d ≤ kMaxDenseLegDim; the sparse form has no gate.
CMatrix leg_embed(const CMatrix& x, Legs legs, int d);
SparseCMatrix leg_embed(const SparseCMatrix& x, Legs legs, int d);

/// (id⊗tr) for leg = 2, (tr⊗id) for leg = 1.
CMatrix partial_trace(const CMatrix& a, int leg, int d);

/// σ(δ_s⊗δ_t) = δ_t⊗δ_s.
CMatrix flip_operator(int d);
SparseCMatrix flip_sparse(int d);

CMatrix identity(Eigen::Index n);
CMatrix matrix_unit(int d, int i, int j);

/// Frobenius residual ‖a − b‖ against absolute + relative·max(‖a‖, ‖b‖).
Residual approx_eq(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});
double frobenius(const SparseCMatrix& a);
double frobenius_diff(const SparseCMatrix& a, const SparseCMatrix& b);

/// Entrywise complex conjugate.
CMatrix conj(const CMatrix& a);

bool all_finite(const CMatrix& a);
void require_square(const CMatrix& a, Eigen::Index n, const char* what);

/// Number of singular values above relative_cutoff·σ_max (0 for a zero matrix).
int numerical_rank(const CMatrix& a, double relative_cutoff = 1e-10);

/// Unitarity residual ‖A*A − I‖_F.
double unitarity_residual(const CMatrix& a);

/// An operator kept in dense and sparse form; products pick the cheaper one.
class Operator {
 public:
  Operator() = default;
  /// `with_inverse` also factors the matrix so inverse_sandwich is available.
  explicit Operator(CMatrix m, bool with_inverse = false);

  const CMatrix& dense() const noexcept { return dense_; }
  const SparseCMatrix& sparse() const noexcept { return sparse_; }
  bool prefers_sparse() const noexcept { return prefer_sparse_; }
  /// One nonzero per row and per column (phased permutation).
  bool is_monomial() const noexcept { return !perm_.empty(); }
  Eigen::Index rows() const noexcept { return dense_.rows(); }

  /// A* X A
  CMatrix adjoint_sandwich(const CMatrix& x) const;
  /// A X A*
  CMatrix sandwich(const CMatrix& x) const;
  /// A⁻¹ X A; requires construction with_inverse.
  CMatrix inverse_sandwich(const CMatrix& x) const;
  const CMatrix& inverse() const;
  /// (id⊗tr)(A*(a⊗b)A) and (id⊗tr)(A⁻¹(a⊗b)A) for A on C^d⊗C^d.
  CMatrix adjoint_sandwich_trace2(const CMatrix& a, const CMatrix& b) const;
  CMatrix inverse_sandwich_trace2(const CMatrix& a, const CMatrix& b) const;

 private:
  CMatrix dense_;
  SparseCMatrix sparse_;
  CMatrix inverse_;
  SparseCMatrix inverse_sparse_;
  bool prefer_sparse_ = false;
  // Monomial form: column j holds phase_[j] in row perm_[j].
  std::vector<Eigen::Index> perm_;
  std::vector<Complex> phase_;

  CMatrix monomial_trace2(const CMatrix& a, const CMatrix& b, bool inverse) const;
};

}  // namespace qg
