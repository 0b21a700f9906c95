#ifndef STEERCERT_HERMITIAN_HPP
#define STEERCERT_HERMITIAN_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace steercert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// A square complex Hermitian matrix. Construction symmetrizes the input,
/// M <- (M + M^dagger)/2, after checking that the asymmetry and any
/// non-finite entries stay below tolerance.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m, double tol = 1e-12);

  static HermitianOperator Zero(int dim);
  static HermitianOperator Identity(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }

  double trace() const { return mat_.trace().real(); }
  double frobenius_norm() const { return mat_.norm(); }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator-(const HermitianOperator& other) const;
  HermitianOperator operator*(double scale) const;

 private:
  Matrix mat_;
};

inline HermitianOperator operator*(double scale, const HermitianOperator& op) {
  return op * scale;
}

/// Operator on a tensor-product space, composite index i = iA*dimB + iB.
struct BipartiteOperator {
  BipartiteOperator(int dim_a_in, int dim_b_in, HermitianOperator op_in);

  int dim_a;
  int dim_b;
  HermitianOperator op;
};

enum class Pauli { I, X, Y, Z };

HermitianOperator pauli(Pauli which);

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

// Raw matrix variants used where intermediate products are not Hermitian.
Matrix tensor(const Matrix& a, const Matrix& b);
Matrix partial_trace_a(const Matrix& m, int dim_a, int dim_b);
Matrix partial_transpose_b(const Matrix& m, int dim_a, int dim_b);

HermitianOperator partial_trace_a(const BipartiteOperator& m);
BipartiteOperator partial_transpose_b(const BipartiteOperator& m);

struct EigResult {
  RealVector values;  // ascending
  Matrix vectors;     // columns, orthonormal
};

/// Dense Hermitian eigendecomposition. Throws std::runtime_error if the
/// underlying iteration fails to converge.
EigResult eig_hermitian(const HermitianOperator& m);
EigResult eig_hermitian(const Matrix& m);

bool is_psd(const HermitianOperator& m, double tol);
bool is_psd(const Matrix& m, double tol);

/// Sum of magnitudes of the negative eigenvalues of the partial transpose.
/// Warns on stderr when tr(M) deviates from 1 by more than 1e-9.
double negativity(const BipartiteOperator& m);

}  // namespace steercert

#endif  // STEERCERT_HERMITIAN_HPP
