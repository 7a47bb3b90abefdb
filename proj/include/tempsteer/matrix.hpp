#pragma once

#include <complex>
#include <vector>

#include "tempsteer/errors.hpp"
#include "tempsteer/tolerances.hpp"

namespace tempsteer {

using Complex = std::complex<double>;

// Dense complex square matrix, row-major storage. Sized for small operator
// algebra (qubits and a handful of hidden-variable blocks), not for anything
// sparse or large.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix zero(int dim);

  int dim() const { return dim_; }
  Complex& at(int r, int c) { return entries_[static_cast<size_t>(r) * dim_ + c]; }
  const Complex& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * dim_ + c];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  // (M + M^dag) / 2
  ComplexMatrix hermitian_part() const;
  bool is_hermitian(double tolerance = tol::kHermiticity) const;

  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  int dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(double scalar, ComplexMatrix m);

// Largest entry modulus.
double max_abs(const ComplexMatrix& m);
// Largest entry modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr[a b] without forming the product. The imaginary part is numerical dust
// whenever both factors are Hermitian; probability-like callers drop it.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Hermitian view of a matrix; construction enforces the symmetry invariant.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m, double tolerance = tol::kHermiticity);

  static HermitianMatrix identity(int dim);

  int dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

// Qubit operator basis.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace tempsteer
