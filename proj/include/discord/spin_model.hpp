#pragma once

#include <cmath>
#include <vector>

#include "discord/linalg.hpp"

namespace discord {

enum class Axis { X, Y, Z };

// Physical description of the model: a homogeneous spin-1/2 chain (subsystem A)
// with an off-chain impurity spin (subsystem B). Distances are in arbitrary
// units, couplings in s^-1 (angular frequencies).
struct SystemSpec {
  int n_chain = 2;        // chain spins; the impurity adds one more qubit
  double a = 1.0;         // nearest-neighbour chain spacing
  double b = 0.0;         // impurity offset from the chain line
  double beta_omega_a = 0.0;
  double beta_omega_b = 0.0;
  double g_ref = 3120.79;           // chain-impurity coupling at distance a
  double d_ref = 2000.0 * M_PI;     // nearest-neighbour dipolar constant

  int n_total() const { return n_chain + 1; }
  void validate() const;  // throws ConfigError
};

struct Couplings {
  Eigen::MatrixXd d;  // n_chain x n_chain, symmetric, zero diagonal
  Eigen::VectorXd g;  // n_chain entries
};

// Dense density matrix together with its tensor-factor dimensions.
// The impurity (subsystem B) is always the last factor.
struct DensityMatrix {
  std::vector<int> dims;
  ComplexMatrix mat;

  Eigen::Index dim() const { return mat.rows(); }
  // Checks Hermiticity and unit trace; with check_spectrum also positivity.
  void validate(bool check_spectrum = true) const;  // throws InvariantViolation
};

inline constexpr double kDensityTol = 1e-10;

// I_{site,axis}: identity everywhere except sigma_axis/2 on `site`.
ComplexMatrix spin_operator(int n_total, int site, Axis axis);

// Chain spins sit at x_i = (i - (n_chain-1)/2) * a on a line; the impurity sits
// at (0, b) on the perpendicular bisector. Couplings follow the 1/r^3 law:
// d_ij = d_ref / |i-j|^3 and g_i = g_ref * (a / r_i)^3.
Couplings couplings_from_geometry(const SystemSpec& spec);

// Secular dipolar Hamiltonian of the chain, identity on the impurity factor:
// sum_{i<j} d_ij (3 I_iz I_jz - I_i . I_j).
ComplexMatrix hamiltonian_dz(const Couplings& c, int n_total);

// Chain-impurity Ising coupling: sum_i g_i I_iz S_z. Diagonal.
ComplexMatrix hamiltonian_zz(const Couplings& c, int n_total);

// Thermal state after the initiating 90-degree pulses:
// rho(0) = exp(beta_omega_a * I_x + beta_omega_b * S_x) / Z,
// a product of single-spin factors (I + tanh(u/2) sigma_x)/2.
DensityMatrix initial_state(const SystemSpec& spec);

// rho(t) = exp(-i h t) rho0 exp(+i h t).
DensityMatrix evolve(const DensityMatrix& rho0, const ComplexMatrix& h, double t);
DensityMatrix evolve(const DensityMatrix& rho0, const EigenDecomposition& h_eig, double t);

}  // namespace discord
