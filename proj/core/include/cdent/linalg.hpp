#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cdent {

using Complex = std::complex<double>;

// Small dense row-major complex matrix. Sized for the n x n discrete
// density matrices handled here, not for large-scale linear algebra.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Largest |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |a_ij - conj(a_ji)|.
double hermiticity_defect(const ComplexMatrix& a);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column i belongs to values[i]
};

// Cyclic Jacobi diagonalization of a Hermitian matrix with complex
// rotations. Iterates until the off-diagonal Frobenius norm drops below
// `tolerance`. Eigenvectors are phase-fixed so that their first entry with
// modulus above 1e-12 is real and positive.
HermitianEigen hermitian_eigen(const ComplexMatrix& a, double tolerance = 1e-14);

}  // namespace cdent
