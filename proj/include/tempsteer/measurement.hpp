#pragma once

#include <utility>
#include <vector>

#include "tempsteer/matrix.hpp"
#include "tempsteer/spectral.hpp"

namespace tempsteer {

// Unsharpness parameter of a smeared measurement: 1 = projective, 0 = noise.
class Sharpness {
 public:
  explicit Sharpness(double eta);
  double value() const { return eta_; }

 private:
  double eta_;
};

// Unit-trace PSD operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianMatrix op);

  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return op_.dim(); }
  const HermitianMatrix& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

 private:
  HermitianMatrix op_;
};

// PSD operator with trace in [0, 1]; a post-measurement branch before
// normalization. weight() is its trace.
class SubnormalizedState {
 public:
  explicit SubnormalizedState(HermitianMatrix op);

  int dim() const { return op_.dim(); }
  double weight() const { return weight_; }
  const HermitianMatrix& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

  // Normalizes to a DensityMatrix; ZeroProbability if the weight vanishes.
  DensityMatrix normalized() const;

 private:
  HermitianMatrix op_;
  double weight_;
};

// One POVM element with its outcome label: 0 <= op <= identity.
class Effect {
 public:
  Effect(HermitianMatrix op, int outcome);

  int dim() const { return op_.dim(); }
  int outcome() const { return outcome_; }
  const HermitianMatrix& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }

 private:
  HermitianMatrix op_;
  int outcome_;
};

// Complete outcome-labelled measurement: effects sum to the identity.
class Povm {
 public:
  explicit Povm(std::vector<Effect> effects);

  int dim() const { return effects_.front().dim(); }
  const std::vector<Effect>& effects() const { return effects_; }
  const Effect& effect_for(int outcome) const;

 private:
  std::vector<Effect> effects_;
};

// Binary unsharp measurement of a +-1-valued qubit observable:
//   E(x) = (identity + eta * x * axis) / 2,  x = +-1.
// Raises InvalidAxis unless the axis has eigenvalues exactly +-1 (within
// spectral tolerance), InvalidEta outside [0, 1].
Povm unsharp_qubit_povm(const HermitianMatrix& axis, Sharpness eta);

// p(x) = Tr[rho E(x)] per outcome, clamped to [0, 1]; sub-tolerance negative
// values are numerical dust and report as 0.
std::vector<std::pair<int, double>> outcome_probabilities(const DensityMatrix& state,
                                                          const Povm& povm);

// Square-root (Luders) state update: sqrt(E) rho sqrt(E), unnormalized.
SubnormalizedState luders_update(const DensityMatrix& state, const Effect& effect);

}  // namespace tempsteer
