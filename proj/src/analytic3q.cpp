#include "discord/analytic3q.hpp"

#include <cmath>

#include "discord/errors.hpp"

namespace discord {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// Overflow-safe ln(cosh(u)); plain cosh blows up for |u| beyond ~710.
double ln_cosh(double u) {
  const double a = std::abs(u);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_g_t(double g, double t) {
  if (!(g > 0.0)) throw ConfigError("analytic3q: g must be > 0");
  if (!(t >= 0.0)) throw ConfigError("analytic3q: t must be >= 0");
}

// x = tanh(bw_b/2) cos^2(gt/2), the impurity coherence amplitude.
double coherence(double beta_omega_b, double g, double t) {
  const double c = std::cos(0.5 * g * t);
  return std::tanh(0.5 * beta_omega_b) * c * c;
}

// Binary-mixing term [(1+x)ln(1+x) + (1-x)ln(1-x)] / (2 ln 2) in bits.
double mixing(double x) { return (xlogx(1.0 + x) + xlogx(1.0 - x)) / (2.0 * kLn2); }

}  // namespace

double analytic_entropy_total(const Analytic3qInputs& in) {
  const double ua = 0.5 * in.beta_omega_a;
  const double ub = 0.5 * in.beta_omega_b;
  return 3.0 + (2.0 * ln_cosh(ua) + ln_cosh(ub)) / kLn2 -
         (in.beta_omega_a * std::tanh(ua) + 0.5 * in.beta_omega_b * std::tanh(ub)) / kLn2;
}

double analytic_entropy_a0(double beta_omega_a) {
  const double u = 0.5 * beta_omega_a;
  return 2.0 + (2.0 * ln_cosh(u) - beta_omega_a * std::tanh(u)) / kLn2;
}

double analytic_entropy_b(double beta_omega_b, double g, double t) {
  require_g_t(g, t);
  return 1.0 - mixing(coherence(beta_omega_b, g, t));
}

double analytic_discord(double beta_omega_b, double g, double t) {
  require_g_t(g, t);
  const double u = 0.5 * beta_omega_b;
  return -mixing(coherence(beta_omega_b, g, t)) - ln_cosh(u) / kLn2 +
         u * std::tanh(u) / kLn2;
}

}  // namespace discord
