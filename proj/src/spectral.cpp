#include "tempsteer/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tempsteer {

namespace {

constexpr int kMaxSweeps = 100;

struct JacobiOut {
  std::vector<double> diag;
  ComplexMatrix vectors;
};

double off_diagonal_max(const ComplexMatrix& a) {
  double v = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = r + 1; c < a.dim(); ++c) v = std::max(v, std::abs(a.at(r, c)));
  return v;
}

// One full cyclic sweep rotates every (p, q) pair once. For the pivot we use
// the unitary W = diag(u, 1) * R(theta), u = a_pq/|a_pq|, which reduces the
// 2x2 block to the real symmetric case and zeroes the off-diagonal entry.
JacobiOut jacobi_diagonalize(ComplexMatrix a) {
  const int n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = 1e-14 * std::max(1.0, max_abs(a));

  bool converged = off_diagonal_max(a) <= stop;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex u = apq / mag;

        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const Complex wpp = u * c, wpq = u * s;
        const Complex wqp = Complex{-s, 0.0}, wqq = Complex{c, 0.0};

        // A <- A W (columns p, q)
        for (int i = 0; i < n; ++i) {
          const Complex aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = aip * wpp + aiq * wqp;
          a.at(i, q) = aip * wpq + aiq * wqq;
        }
        // A <- W^dag A (rows p, q)
        for (int j = 0; j < n; ++j) {
          const Complex apj = a.at(p, j), aqj = a.at(q, j);
          a.at(p, j) = std::conj(wpp) * apj + std::conj(wqp) * aqj;
          a.at(q, j) = std::conj(wpq) * apj + std::conj(wqq) * aqj;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = Complex{a.at(p, p).real(), 0.0};
        a.at(q, q) = Complex{a.at(q, q).real(), 0.0};

        // V <- V W
        for (int i = 0; i < n; ++i) {
          const Complex vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = vip * wpp + viq * wqp;
          v.at(i, q) = vip * wpq + viq * wqq;
        }
      }
    }
    converged = off_diagonal_max(a) <= stop;
  }
  if (!converged) {
    throw NoConvergence("Jacobi diagonalization did not converge in " +
                        std::to_string(kMaxSweeps) + " sweeps");
  }

  JacobiOut out{std::vector<double>(n), std::move(v)};
  for (int i = 0; i < n; ++i) out.diag[i] = a.at(i, i).real();
  return out;
}

}  // namespace

ComplexMatrix Spectrum::reconstruct() const {
  const int n = eigenvectors.dim();
  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double lam = eigenvalues[static_cast<size_t>(k)];
    if (lam == 0.0) continue;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out.at(r, c) += lam * eigenvectors.at(r, k) * std::conj(eigenvectors.at(c, k));
  }
  return out;
}

Spectrum eig_hermitian(const HermitianMatrix& op) {
  JacobiOut raw = jacobi_diagonalize(op.matrix());
  const int n = op.dim();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return raw.diag[i] > raw.diag[j]; });

  Spectrum spec{std::vector<double>(n), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<size_t>(k)];
    spec.eigenvalues[static_cast<size_t>(k)] = raw.diag[src];
    // Phase convention: leading nonzero component real positive.
    Complex phase{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
      const Complex vi = raw.vectors.at(i, src);
      if (std::abs(vi) > 1e-12) {
        phase = std::conj(vi / std::abs(vi));
        break;
      }
    }
    for (int i = 0; i < n; ++i) spec.eigenvectors.at(i, k) = raw.vectors.at(i, src) * phase;
  }
  return spec;
}

double min_eigenvalue(const HermitianMatrix& op) {
  const Spectrum spec = eig_hermitian(op);
  return spec.eigenvalues.back();
}

bool psd_check(const HermitianMatrix& op, double tolerance) {
  return min_eigenvalue(op) >= -tolerance;
}

HermitianMatrix matrix_sqrt_psd(const HermitianMatrix& op) {
  Spectrum spec = eig_hermitian(op);
  for (double& lam : spec.eigenvalues) {
    if (lam < -tol::kPsd) {
      throw NotPsd("matrix has eigenvalue " + std::to_string(lam) +
                   " below -" + std::to_string(tol::kPsd));
    }
    lam = lam <= 0.0 ? 0.0 : std::sqrt(lam);
  }
  return HermitianMatrix(spec.reconstruct().hermitian_part());
}

HermitianMatrix psd_project(const HermitianMatrix& op) {
  Spectrum spec = eig_hermitian(op);
  bool clean = true;
  for (double& lam : spec.eigenvalues) {
    if (lam < 0.0) {
      lam = 0.0;
      clean = false;
    }
  }
  if (clean) return op;
  return HermitianMatrix(spec.reconstruct().hermitian_part());
}

}  // namespace tempsteer
