#include "cpkit/asymptotics.hpp"

#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <array>
#include <cmath>

namespace cpkit {

namespace {

using constants::pi;

void check_tau(double tau) {
  if (!(tau >= 0.0) || std::isnan(tau)) {
    throw DomainError("tau must be >= 0");
  }
}

// e^τ(e^{2τ}+4e^τ+1)/(e^τ−1)⁴ written with q = e^{−τ} so large τ cannot overflow.
double quartic_bose(double q, double one_minus_q) {
  const double om2 = one_minus_q * one_minus_q;
  return q * (1.0 + 4.0 * q + q * q) / (om2 * om2);
}

double eta_closed(double tau) {
  const double q = std::exp(-tau);
  const double om = -std::expm1(-tau);
  const double bracket = 1.0 + 2.0 * q / om + 2.0 * tau * q / (om * om) +
                         tau * tau * q * (1.0 + q) / (om * om * om);
  return tau / 6.0 * bracket;
}

// η(τ) = 1 + Σ_{k≥2} c_k τ^{2k} with c_k = B_{2k}(2k−2)(2k−3)/(6·(2k)!), convergent for
// τ < 2π. κ = η − τσ/4 and σ = η′ follow termwise.
constexpr int kTaylorTerms = 20;

const std::array<double, kTaylorTerms + 1>& taylor_coefficients() {
  static const auto c = [] {
    std::array<double, kTaylorTerms + 1> out{};
    for (int k = 2; k <= kTaylorTerms; ++k) {
      const double twok = 2.0 * k;
      out[k] = boost::math::bernoulli_b2n<double>(k) * (twok - 2.0) * (twok - 3.0) /
               (6.0 * boost::math::factorial<double>(2 * k));
    }
    return out;
  }();
  return c;
}

enum class Factor { Eta, Kappa, Sigma };

double taylor(Factor f, double tau) {
  const auto& c = taylor_coefficients();
  const double t2 = tau * tau;
  double sum = 0.0;
  for (int k = kTaylorTerms; k >= 2; --k) {
    const double weight = f == Factor::Eta ? 1.0 : f == Factor::Kappa ? 1.0 - 0.5 * k : 2.0 * k;
    sum = sum * t2 + c[k] * weight;
  }
  // sum = Σ c_k w_k τ^{2k−4}
  return f == Factor::Sigma ? sum * t2 * tau : 1.0 + sum * t2 * t2;
}

struct Bracket {
  double beta_sq;
  double delta;
};

Bracket plasma_oscillator_bracket(double a, const AtomModel& atom, const WallModel& wall) {
  if (wall.kind() != WallKind::Plasma && wall.kind() != WallKind::IdealMetal) {
    throw UnsupportedModelError("perturbative expansions need a plasma (or ideal metal) wall");
  }
  if (atom.kind() == AtomKind::Tabulated) {
    throw UnsupportedModelError("perturbative expansions need a static or oscillator atom");
  }
  const auto g = geometry_params(atom, wall, a);
  return {g.beta_a * g.beta_a, g.skin_depth_ratio};
}

bool in_window(double a, const AtomModel& atom, const WallModel& wall) {
  const auto g = geometry_params(atom, wall, a);
  return g.beta_a < kPerturbativeWindow && g.skin_depth_ratio < kPerturbativeWindow;
}

void check_scene(double a, double temperature) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("separation must be positive and finite");
  }
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be finite and >= 0");
  }
}

} // namespace

double tau_of(double a, double temperature) {
  return 4.0 * pi * constants::k_B * a * temperature / (constants::hbar * constants::c);
}

double eta_series(double tau) {
  const double t2 = tau * tau;
  const double t4 = t2 * t2;
  return 1.0 - t4 / 2160.0 + t4 * t2 / 15120.0 - t4 * t4 / 241920.0;
}

double kappa_series(double tau) {
  const double t2 = tau * tau;
  const double t6 = t2 * t2 * t2;
  return 1.0 - t6 / 30240.0 + t6 * t2 / 241920.0;
}

double sigma_series(double tau) {
  const double t3 = tau * tau * tau;
  return -t3 / 540.0 + t3 * tau * tau / 2520.0;
}

double eta(double tau) {
  check_tau(tau);
  if (tau < kTaylorBelow) {
    return taylor(Factor::Eta, tau);
  }
  return eta_closed(tau);
}

double kappa(double tau) {
  check_tau(tau);
  if (tau < kTaylorBelow) {
    return taylor(Factor::Kappa, tau);
  }
  const double q = std::exp(-tau);
  const double om = -std::expm1(-tau);
  const double t4 = tau * tau * tau * tau;
  return 0.75 * eta_closed(tau) + t4 * quartic_bose(q, om) / 24.0;
}

double sigma(double tau) {
  check_tau(tau);
  if (tau < kTaylorBelow) {
    return taylor(Factor::Sigma, tau);
  }
  const double q = std::exp(-tau);
  const double om = -std::expm1(-tau);
  const double t3 = tau * tau * tau;
  return eta_closed(tau) / tau - t3 * quartic_bose(q, om) / 6.0;
}

CorrectionFactors correction_factors(double tau) {
  return {eta(tau), kappa(tau), sigma(tau), tau};
}

double casimir_polder_energy(double a, double alpha0) {
  return -3.0 * constants::hbar * constants::c * alpha0 / (8.0 * pi * std::pow(a, 4));
}

double casimir_polder_force(double a, double alpha0) {
  return -3.0 * constants::hbar * constants::c * alpha0 / (2.0 * pi * std::pow(a, 5));
}

double riemann_zeta(int s) {
  if (s < 2) {
    throw DomainError("riemann_zeta: s must be >= 2");
  }
  return boost::math::zeta(static_cast<double>(s));
}

PerturbativeBreakdown perturbative_breakdown(double a, const AtomModel& atom, const WallModel& wall) {
  check_scene(a, 0.0);
  const auto [beta_sq, delta] = plasma_oscillator_bracket(a, atom, wall);
  PerturbativeBreakdown b;
  b.geometry = geometry_params(atom, wall, a);
  b.dynamic_polarizability = -20.0 / 3.0 * beta_sq;
  b.skin_depth = -8.0 / 5.0 * delta;
  b.skin_depth_second = 62.0 / 21.0 * delta * delta;
  b.bracket = 1.0 + b.dynamic_polarizability + b.skin_depth + b.skin_depth_second;
  return b;
}

Asymptotic perturbative_energy(double a, const AtomModel& atom, const WallModel& wall) {
  const auto b = perturbative_breakdown(a, atom, wall);
  return {casimir_polder_energy(a, atom.static_polarizability()) * b.bracket,
          in_window(a, atom, wall)};
}

Asymptotic perturbative_force(double a, const AtomModel& atom, const WallModel& wall) {
  check_scene(a, 0.0);
  const auto [beta_sq, delta] = plasma_oscillator_bracket(a, atom, wall);
  const double bracket = 1.0 - 10.0 * beta_sq - 2.0 * delta + 31.0 / 7.0 * delta * delta;
  return {casimir_polder_force(a, atom.static_polarizability()) * bracket, in_window(a, atom, wall)};
}

Asymptotic low_t_free_energy_correction(double a, double temperature, const AtomModel& atom,
                                        const WallModel& wall) {
  check_scene(a, temperature);
  const auto [b2, d] = plasma_oscillator_bracket(a, atom, wall);
  const double t = tau_of(a, temperature);
  const double z5 = riemann_zeta(5);
  const double z7 = riemann_zeta(7);
  const double pi4 = pi * pi * pi * pi;
  const double pi6 = pi4 * pi * pi;
  const double t2 = t * t;

  const double oscillator = 1.0 / 45.0 - t2 / 315.0 * (1.0 - 10.0 / 3.0 * b2) +
                            t2 * t2 / 5040.0 * (1.0 - 84.0 / 5.0 * b2 + 56.0 * b2 * b2);
  const double skin1 =
      t * d * (3.0 * z5 / pi4 + b2 * t2 * 45.0 * z7 / (2.0 * pi6) - t2 * t / 1350.0);
  const double skin2 =
      t2 * d * d * (5.0 / 189.0 - 45.0 * z7 / (4.0 * pi6) * t + (1.0 + 50.0 * b2) * t2 / 1800.0);

  const double prefactor =
      constants::hbar * constants::c * atom.static_polarizability() / (128.0 * pi * std::pow(a, 4));
  return {prefactor * t2 * t2 * (oscillator - skin1 - skin2), t < 1.0 && in_window(a, atom, wall)};
}

Asymptotic low_t_force_correction(double a, double temperature, const AtomModel& atom,
                                  const WallModel& wall) {
  check_scene(a, temperature);
  const auto [b2, d] = plasma_oscillator_bracket(a, atom, wall);
  const double t = tau_of(a, temperature);
  const double z7 = riemann_zeta(7);
  const double pi6 = std::pow(pi, 6);
  const double t2 = t * t;

  // Term-by-term −∂/∂a of the free-energy correction. A term τ^m β^{2j} (δ₀/a)^k / a⁴
  // scales as a^{m−2j−k−4}; only the non-zero powers survive.
  const double bracket = 2.0 / 315.0 - t2 / 1260.0 + t2 * b2 / 150.0 - t2 * d / 450.0 -
                         t * d * d * 45.0 * z7 / (4.0 * pi6) + t2 * d * d / 900.0;

  const double prefactor =
      constants::hbar * constants::c * atom.static_polarizability() / (128.0 * pi * std::pow(a, 5));
  return {prefactor * t2 * t2 * t2 * bracket, t < 1.0 && in_window(a, atom, wall)};
}

Asymptotic low_t_entropy(double a, double temperature, const AtomModel& atom, const WallModel& wall) {
  check_scene(a, temperature);
  const auto [b2, d] = plasma_oscillator_bracket(a, atom, wall);
  const double t = tau_of(a, temperature);
  const double z5 = riemann_zeta(5);
  const double pi4 = std::pow(pi, 4);
  const double t2 = t * t;
  const double bracket = 4.0 / 45.0 - 2.0 * t2 / 105.0 * (1.0 - 10.0 / 3.0 * b2) -
                         t * d * 15.0 * z5 / pi4 - 10.0 / 63.0 * t2 * d * d;
  const double prefactor = constants::k_B * atom.static_polarizability() / (32.0 * std::pow(a, 3));
  return {-prefactor * t2 * t * bracket, t < 1.0 && in_window(a, atom, wall)};
}

ClassicalLimit classical_limits(double a, double temperature, const AtomModel& atom) {
  check_scene(a, temperature);
  const double alpha0 = atom.static_polarizability();
  const double kT = constants::k_B * temperature;
  ClassicalLimit c;
  c.free_energy = -kT * alpha0 / (4.0 * std::pow(a, 3));
  c.force = -3.0 * kT * alpha0 / (4.0 * std::pow(a, 4));
  c.entropy = -constants::k_B * alpha0 / (4.0 * std::pow(a, 3));
  c.within_validity = tau_of(a, temperature) >= 10.0;
  return c;
}

} // namespace cpkit
