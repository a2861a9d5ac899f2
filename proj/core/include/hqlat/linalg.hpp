#pragma once

#include <Eigen/Dense>

namespace hqlat {

// Kronecker product with the left factor on the slow (most significant)
// index: (A ⊗ B)[(ia,ib),(ja,jb)] = A(ia,ja) B(ib,jb).
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace hqlat
