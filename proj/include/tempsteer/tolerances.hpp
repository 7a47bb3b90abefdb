#pragma once

// Numerical tolerances used across the library. The underlying algebra is
// exact; every constant here absorbs double-precision noise only, so they
// are kept in one place instead of scattered per call site.
namespace tempsteer::tol {

inline constexpr double kHermiticity = 1e-10;   // max |M[i][j] - conj(M[j][i])|
inline constexpr double kPsd = 1e-9;            // allowed negative eigenvalue dust
inline constexpr double kSpectral = 1e-9;       // eigendecomposition reconstruction
inline constexpr double kSqrt = 1e-8;           // ||sqrt(E)^2 - E||_max
inline constexpr double kProb = 1e-9;           // probability normalization slack
inline constexpr double kTrace = 1e-9;          // |Tr(rho) - 1|
inline constexpr double kCompleteness = 1e-9;   // ||sum of effects - identity||_max
inline constexpr double kUnitarity = 1e-9;      // ||U^dag U - identity||_max
inline constexpr double kFeasibility = 1e-7;    // default solver residual target

}  // namespace tempsteer::tol
