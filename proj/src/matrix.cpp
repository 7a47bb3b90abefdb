#include "tempsteer/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace tempsteer {

namespace {
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimMismatch("matrix dimensions differ: " + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()));
  }
}
}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim <= 0) throw DimMismatch("matrix dimension must be positive");
  entries_.assign(static_cast<size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(dim) {
  if (dim <= 0) throw DimMismatch("matrix dimension must be positive");
  if (entries.size() != static_cast<size_t>(dim) * dim) {
    throw DimMismatch("entry count " + std::to_string(entries.size()) +
                      " does not match dim " + std::to_string(dim));
  }
  entries_ = std::move(entries);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(int dim) { return ComplexMatrix(dim); }

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      out.at(r, c) = 0.5 * (at(r, c) + std::conj(at(c, r)));
  return out;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tolerance) return false;
  return true;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex ark = a.at(r, k);
      if (ark == Complex{0.0, 0.0}) continue;
      for (int c = 0; c < n; ++c) out.at(r, c) += ark * b.at(k, c);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(double scalar, ComplexMatrix m) {
  return m *= Complex{scalar, 0.0};
}

double max_abs(const ComplexMatrix& m) {
  double v = 0.0;
  for (const auto& e : m.entries()) v = std::max(v, std::abs(e));
  return v;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double v = 0.0;
  for (size_t i = 0; i < a.entries().size(); ++i)
    v = std::max(v, std::abs(a.entries()[i] - b.entries()[i]));
  return v;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  Complex t{0.0, 0.0};
  const int n = a.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) t += a.at(r, c) * b.at(c, r);
  return t;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tolerance)
    : matrix_(std::move(m)) {
  if (!matrix_.is_hermitian(tolerance)) {
    throw NonHermitian("matrix is not Hermitian within " + std::to_string(tolerance));
  }
  // Symmetrize so downstream algebra never sees the sub-tolerance skew.
  matrix_ = matrix_.hermitian_part();
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  return HermitianMatrix(ComplexMatrix::identity(dim));
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2);
  m.at(0, 1) = Complex{0.0, -1.0};
  m.at(1, 0) = Complex{0.0, 1.0};
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

}  // namespace tempsteer
