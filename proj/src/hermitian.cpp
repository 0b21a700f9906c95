#include "steercert/hermitian.hpp"

#include <cmath>
#include <iostream>

namespace steercert {

namespace {

void check_finite(const Matrix& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("operator contains NaN or infinite entries");
  }
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("Hermitian operator must be square and nonempty");
  }
  check_finite(m);
  const double asym = (m - m.adjoint()).norm();
  if (asym > tol * (1.0 + m.norm())) {
    throw std::invalid_argument("matrix is not Hermitian: asymmetry " +
                                std::to_string(asym));
  }
  mat_ = 0.5 * (m + m.adjoint().eval());
}

HermitianOperator HermitianOperator::Zero(int dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::Identity(int dim) {
  return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  return HermitianOperator(mat_ + other.mat_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
  return HermitianOperator(mat_ - other.mat_);
}

HermitianOperator HermitianOperator::operator*(double scale) const {
  return HermitianOperator(mat_ * scale);
}

BipartiteOperator::BipartiteOperator(int dim_a_in, int dim_b_in, HermitianOperator op_in)
    : dim_a(dim_a_in), dim_b(dim_b_in), op(std::move(op_in)) {
  if (dim_a < 1 || dim_b < 1) {
    throw std::invalid_argument("bipartite dimensions must be positive");
  }
  if (op.dim() != dim_a * dim_b) {
    throw std::invalid_argument("operator dimension does not equal dimA*dimB");
  }
}

HermitianOperator pauli(Pauli which) {
  Matrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (which) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -i, i, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return HermitianOperator(m);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(tensor(a.matrix(), b.matrix()));
}

Matrix partial_trace_a(const Matrix& m, int dim_a, int dim_b) {
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (int j = 0; j < dim_b; ++j) {
    for (int jp = 0; jp < dim_b; ++jp) {
      Complex sum = 0.0;
      for (int i = 0; i < dim_a; ++i) {
        sum += m(i * dim_b + j, i * dim_b + jp);
      }
      out(j, jp) = sum;
    }
  }
  return out;
}

HermitianOperator partial_trace_a(const BipartiteOperator& m) {
  return HermitianOperator(partial_trace_a(m.op.matrix(), m.dim_a, m.dim_b));
}

Matrix partial_transpose_b(const Matrix& m, int dim_a, int dim_b) {
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < dim_a; ++i) {
    for (int ip = 0; ip < dim_a; ++ip) {
      out.block(i * dim_b, ip * dim_b, dim_b, dim_b) =
          m.block(i * dim_b, ip * dim_b, dim_b, dim_b).transpose();
    }
  }
  return out;
}

BipartiteOperator partial_transpose_b(const BipartiteOperator& m) {
  return BipartiteOperator(
      m.dim_a, m.dim_b,
      HermitianOperator(partial_transpose_b(m.op.matrix(), m.dim_a, m.dim_b)));
}

EigResult eig_hermitian(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition did not converge");
  }
  return EigResult{solver.eigenvalues(), solver.eigenvectors()};
}

EigResult eig_hermitian(const HermitianOperator& m) {
  return eig_hermitian(m.matrix());
}

bool is_psd(const Matrix& m, double tol) {
  if (tol < 0.0) {
    throw std::invalid_argument("is_psd tolerance must be nonnegative");
  }
  const EigResult eig = eig_hermitian(m);
  return eig.values.minCoeff() >= -tol;
}

bool is_psd(const HermitianOperator& m, double tol) {
  return is_psd(m.matrix(), tol);
}

double negativity(const BipartiteOperator& m) {
  const double tr = m.op.trace();
  if (std::abs(tr - 1.0) > 1e-9) {
    std::cerr << "warning: negativity input has trace " << tr << " != 1\n";
  }
  const EigResult eig = eig_hermitian(partial_transpose_b(m).op);
  double neg = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    neg += std::max(0.0, -eig.values[i]);
  }
  return neg;
}

}  // namespace steercert
