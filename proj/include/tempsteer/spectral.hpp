#pragma once

#include <vector>

#include "tempsteer/matrix.hpp"
#include "tempsteer/tolerances.hpp"

namespace tempsteer {

// Eigendecomposition of a Hermitian matrix: M = V diag(eigenvalues) V^dag.
// Eigenvalues are sorted descending; eigenvector columns are orthonormal and
// phase-canonicalized (leading nonzero component made real positive) so the
// output is reproducible for identical input.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices. Simple and
// deterministic; plenty for the dimensions this library handles. Throws
// NoConvergence after 100 sweeps (never observed below d ~ 50).
Spectrum eig_hermitian(const HermitianMatrix& op);

double min_eigenvalue(const HermitianMatrix& op);

// true iff the smallest eigenvalue is >= -tolerance.
bool psd_check(const HermitianMatrix& op, double tolerance = tol::kPsd);

// Principal square root of a PSD matrix. Eigenvalues in [-kPsd, 0] are
// numerical dust and get clamped to zero before the root; anything more
// negative raises NotPsd.
HermitianMatrix matrix_sqrt_psd(const HermitianMatrix& op);

// Projection onto the PSD cone: negative eigenvalues clamped to zero.
HermitianMatrix psd_project(const HermitianMatrix& op);

}  // namespace tempsteer
