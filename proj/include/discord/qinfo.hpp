#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "discord/spin_model.hpp"

namespace discord {

// Unit vector on the Bloch sphere selecting the projective measurement basis
// on the impurity qubit.
struct BlochVector {
  double z1 = 0.0;
  double z2 = 0.0;
  double z3 = 1.0;

  double norm_sq() const { return z1 * z1 + z2 * z2 + z3 * z3; }
  BlochVector operator-() const { return {-z1, -z2, -z3}; }
};

inline constexpr double kBlochNormTol = 1e-12;
void require_unit(const BlochVector& z);  // throws NotNormalized

// Probability below which a measurement branch is treated as absent.
inline constexpr double kNegligibleProbability = 1e-12;

struct MeasurementEnsemble {
  std::array<double, 2> p{};
  // Post-measurement states of the chain; empty when p_k is negligible.
  std::array<std::optional<DensityMatrix>, 2> post_states;
};

struct DiscordResult {
  double discord = 0.0;                  // bits
  double mutual_information = 0.0;       // bits
  double min_conditional_entropy = 0.0;  // bits
  BlochVector argmin;
  double p0_at_argmin = 0.0;
};

// Shannon entropy in bits of a clamped eigenvalue list. Values in
// [-1e-10, 0) clamp to 0; anything more negative is an invariant violation.
double entropy_from_eigenvalues(const RealVector& lam);

double von_neumann_entropy(const DensityMatrix& rho);  // bits

// S(rho_A) + S(rho_B) - S(rho), with B the last tensor factor.
double mutual_information(const DensityMatrix& rho);

// B_k = (I + (-1)^k (z1 sx + z2 sy + z3 sz)) / 2, k = 0, 1.
std::pair<ComplexMatrix, ComplexMatrix> measurement_projectors(const BlochVector& z);

// Two-outcome projective measurement on the impurity qubit.
MeasurementEnsemble measure_b(const DensityMatrix& rho, const BlochVector& z);

// S(rho | {B_k}) = p0 S(rho_0) + p1 S(rho_1), in bits.
double conditional_entropy(const DensityMatrix& rho, const BlochVector& z);

// Precomputed conditional-entropy objective for minimisation over the Bloch
// sphere. Mathematically identical to conditional_entropy but amortises the
// measurement algebra: only two Hermitian eigenvalue problems remain per call.
// For numerically low-rank states the spectra are taken from Gram matrices in
// the column space of a square-root factor, which keeps 8- and 9-qubit
// optimisation runs tractable.
class ConditionalEntropyObjective {
 public:
  enum class Path { Auto, Dense, LowRank };

  explicit ConditionalEntropyObjective(const DensityMatrix& rho, Path path = Path::Auto);

  double operator()(const BlochVector& z) const;

  bool low_rank() const { return low_rank_; }
  Eigen::Index rank() const { return low_rank_ ? rank_ : dense_rho_a_.rows(); }

 private:
  bool low_rank_ = false;
  // dense path: chain block of rho and the three impurity-contracted blocks
  ComplexMatrix dense_rho_a_, gx_, gy_, gz_;
  // low-rank path: r x r Gram blocks of the square-root factor, split by the
  // impurity bit (e = bit 0 rows, o = bit 1 rows)
  Eigen::Index rank_ = 0;
  ComplexMatrix gram_ee_, gram_eo_, gram_oo_;
};

struct Minimum {
  BlochVector z;
  double value = 0.0;
};

using Objective = std::function<double(const BlochVector&)>;
using Minimizer = std::function<Minimum(const Objective&)>;

// Quantum discord of the bipartition (chain | impurity):
// D = S(rho_B) - S(rho) + min_z S(rho | {B_k}).
// Deterministic for a deterministic minimizer.
DiscordResult compute_discord(const DensityMatrix& rho, const Minimizer& minimize);

}  // namespace discord
