#pragma once

namespace discord {

// Closed forms for the three-qubit system (two chain spins + impurity) with
// equal chain-impurity couplings g. Entropies in bits, t in seconds.
struct Analytic3qInputs {
  double beta_omega_a = 0.0;
  double beta_omega_b = 0.0;
  double g = 3120.79;  // s^-1
  double t = 0.0;      // seconds
};

// Entropy of the full three-qubit pulsed thermal state (time independent).
double analytic_entropy_total(const Analytic3qInputs& in);

// Entropy of the two-spin chain at t = 0.
double analytic_entropy_a0(double beta_omega_a);

// Entropy of the impurity at time t.
double analytic_entropy_b(double beta_omega_b, double g, double t);

// Quantum discord of the three-qubit system; independent of beta_omega_a
// and of the chain dipolar constants.
double analytic_discord(double beta_omega_b, double g, double t);

}  // namespace discord
