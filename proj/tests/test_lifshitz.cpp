#include "cpkit/asymptotics.hpp"
#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"
#include "cpkit/lifshitz.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace cpkit;
using constants::pi;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

double temperature_for_tau(double a, double tau) {
  return tau * constants::hbar * constants::c / (4.0 * pi * constants::k_B * a);
}

AtomModel bare_helium() {
  const auto he = metastable_helium();
  return AtomModel::static_polarizability(he.static_polarizability(), he.mass());
}

WallModel gold() { return WallModel::plasma(units::ev_to_rad_per_s(9.0)); }
WallModel gold_drude() {
  return WallModel::drude(units::ev_to_rad_per_s(9.0), units::ev_to_rad_per_s(0.035));
}
WallModel silicon() { return WallModel::dielectric_oscillator(11.66, units::ev_to_rad_per_s(4.34)); }

LifshitzOptions numeric() {
  LifshitzOptions o;
  o.use_closed_forms = false;
  return o;
}

} // namespace

TEST(Scene, DerivedQuantities) {
  const Scene s(1e-6, 300.0);
  EXPECT_DOUBLE_EQ(s.characteristic_frequency(), constants::c / 2e-6);
  EXPECT_NEAR(s.tau(), tau_of(1e-6, 300.0), 1e-15);
  EXPECT_NEAR(s.effective_temperature(),
              constants::hbar * s.characteristic_frequency() / constants::k_B, 1e-9);
  EXPECT_DOUBLE_EQ(s.matsubara_frequency(3), 3.0 * s.tau() * s.characteristic_frequency());
  EXPECT_THROW(Scene(0.0, 300.0), DomainError);
  EXPECT_THROW(Scene(1e-6, -1.0), DomainError);
}

TEST(FreeEnergy, IdealStaticMatchesClosedForms) {
  const auto atom = bare_helium();
  const auto ideal = WallModel::ideal_metal();
  const double alpha = atom.static_polarizability();
  for (double a : {0.5e-6, 3e-6}) {
    for (double tau : {0.05, 0.8, 7.0, 40.0}) {
      const Scene s(a, temperature_for_tau(a, tau));
      const auto f = free_energy(s, ideal, atom, numeric());
      EXPECT_FALSE(f.diagnostics.closed_form);
      EXPECT_GT(f.diagnostics.terms, 0u);
      EXPECT_LT(rel(f.value, casimir_polder_energy(a, alpha) * eta(tau)), 1e-9);
      EXPECT_LT(rel(force(s, ideal, atom, numeric()).value, casimir_polder_force(a, alpha) * kappa(tau)),
                1e-9);
      const auto closed = free_energy(s, ideal, atom);
      EXPECT_TRUE(closed.diagnostics.closed_form);
      EXPECT_LT(rel(closed.value, f.value), 1e-9);
    }
  }
}

TEST(FreeEnergy, ReportsErrorBudget) {
  const Scene s(1e-6, 300.0);
  const auto f = free_energy(s, gold(), metastable_helium());
  EXPECT_GT(f.diagnostics.terms, 1u);
  EXPECT_LT(f.diagnostics.quadrature_error, 1e-9 * std::fabs(f.value));
  EXPECT_LT(f.diagnostics.truncation_error, 1e-10 * std::fabs(f.value));
}

TEST(FreeEnergy, ClassicalLimitAtHighTau) {
  const auto he = metastable_helium();
  const double a = 5e-6;
  const double T = temperature_for_tau(a, 30.0);
  const auto c = classical_limits(a, T, he);
  for (const auto& wall : {WallModel::ideal_metal(), gold()}) {
    EXPECT_LT(rel(free_energy(Scene(a, T), wall, he).value, c.free_energy), 1e-3);
    EXPECT_LT(rel(force(Scene(a, T), wall, he).value, c.force), 1e-3);
  }
}

TEST(MatsubaraTerm, ZeroTermAndSum) {
  const auto atom = bare_helium();
  const Scene s(1e-6, 300.0);
  const double a3 = std::pow(1e-6, 3);
  const double kT = constants::k_B * 300.0;
  // Terms are in J with the −k_BT/(8a³) prefactor and the primed-sum ½ included.
  const double unit = -kT / (8.0 * a3) * atom.static_polarizability();
  // l = 0, ideal metal, static atom: ½ ∫ 2y² e^{−y} dy = 2.
  EXPECT_NEAR(matsubara_term(s, WallModel::ideal_metal(), atom, 0) / unit, 2.0, 1e-12);
  // For a dielectric only r_TM(0) = (ε₀−1)/(ε₀+1) survives at l = 0.
  EXPECT_NEAR(matsubara_term(s, silicon(), atom, 0) / unit, 2.0 * 10.66 / 12.66, 1e-12);

  double sum = 0.0;
  for (long long l = 0; l < 400; ++l) {
    sum += matsubara_term(s, gold(), metastable_helium(), l);
  }
  EXPECT_LT(rel(sum, free_energy(s, gold(), metastable_helium()).value), 1e-9);
  EXPECT_THROW(matsubara_term(s, gold(), atom, -1), DomainError);
  EXPECT_THROW(matsubara_term(Scene(1e-6, 0.0), gold(), atom, 1), DomainError);
}

TEST(ZeroTemperature, IdealStaticIsCasimirPolder) {
  const auto atom = bare_helium();
  for (double a : {0.1e-6, 1e-6, 10e-6}) {
    const auto e = zero_temperature_energy(a, WallModel::ideal_metal(), atom, numeric());
    EXPECT_LT(rel(e.value, casimir_polder_energy(a, atom.static_polarizability())), 1e-9);
    const auto f = zero_temperature_force(a, WallModel::ideal_metal(), atom, numeric());
    EXPECT_LT(rel(f.value, casimir_polder_force(a, atom.static_polarizability())), 1e-9);
  }
}

TEST(ZeroTemperature, IdealOscillatorMatchesArctanIntegral) {
  // E = −(ħcα₀/16πa⁴β) ∫₀^∞ y² e^{−y} arctan(βy) dy, β = ω_c/ω₀.
  const auto he = metastable_helium();
  for (double a : {30e-9, 300e-9, 3e-6}) {
    const double beta = he.absorption_wavelength() / (4.0 * pi * a);
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [beta](double y) { return y * y * std::exp(-y) * std::atan(beta * y); }, 0.0,
        std::numeric_limits<double>::infinity(), 15, 1e-14);
    const double want = -constants::hbar * constants::c * he.static_polarizability() /
                        (16.0 * pi * std::pow(a, 4) * beta) * integral;
    EXPECT_LT(rel(zero_temperature_energy(a, WallModel::ideal_metal(), he).value, want), 1e-8) << a;
  }
}

TEST(ZeroTemperature, VanDerWaalsLimit) {
  // β ≫ 1: E → −πħcα₀/(4λ₀a³) = −ħα₀ω₀/(8a³) up to O(1/β).
  const auto he = metastable_helium();
  const double a = 2e-9;
  const double want = -pi * constants::hbar * constants::c * he.static_polarizability() /
                      (4.0 * he.absorption_wavelength() * std::pow(a, 3));
  EXPECT_LT(rel(zero_temperature_energy(a, WallModel::ideal_metal(), he).value, want), 0.02);
}

TEST(ZeroTemperature, ForceIsDerivativeOfEnergy) {
  const auto he = metastable_helium();
  for (const auto& wall : {gold(), silicon()}) {
    for (double a : {200e-9, 2e-6}) {
      const double h = 1e-4 * a;
      const double fd = -(zero_temperature_energy(a + h, wall, he).value -
                          zero_temperature_energy(a - h, wall, he).value) /
                        (2 * h);
      EXPECT_LT(rel(zero_temperature_force(a, wall, he).value, fd), 1e-6) << a;
    }
  }
}

TEST(ZeroTemperature, SceneAtZeroKelvinDelegates) {
  const auto he = metastable_helium();
  const double a = 1e-6;
  EXPECT_EQ(free_energy(Scene(a, 0.0), gold(), he).value,
            zero_temperature_energy(a, gold(), he).value);
  EXPECT_EQ(force(Scene(a, 0.0), gold(), he).value, zero_temperature_force(a, gold(), he).value);
  EXPECT_THROW(entropy(Scene(a, 0.0), gold(), he), DomainError);
}

TEST(Force, IsMinusDerivativeOfFreeEnergy) {
  const auto he = metastable_helium();
  for (const auto& wall : {gold(), gold_drude(), silicon()}) {
    for (double a : {300e-9, 1e-6, 5e-6}) {
      const double h = 1e-4 * a;
      const double fd = -(free_energy(Scene(a + h, 300.0), wall, he).value -
                          free_energy(Scene(a - h, 300.0), wall, he).value) /
                        (2 * h);
      EXPECT_LT(rel(force(Scene(a, 300.0), wall, he).value, fd), 1e-6)
          << to_string(wall.kind()) << " a=" << a;
    }
  }
}

TEST(Entropy, IdealStaticMatchesSigma) {
  const auto atom = bare_helium();
  const double a = 2e-6;
  const double scale = 1.5 * constants::k_B * atom.static_polarizability() / std::pow(a, 3);
  for (double tau : {1.0, 3.0, 6.0, 30.0}) {
    const Scene s(a, temperature_for_tau(a, tau));
    const auto e = entropy(s, WallModel::ideal_metal(), atom, numeric());
    EXPECT_LT(std::fabs(e.value - scale * sigma(tau)), 1e-5 * scale) << tau;
  }
}

TEST(Entropy, NernstTheoremForGold) {
  const auto he = metastable_helium();
  const double a = 2e-6;
  double previous = 0.0;
  for (double tau : {0.05, 0.1, 0.2, 0.5}) {
    const double s = entropy(Scene(a, temperature_for_tau(a, tau)), gold(), he).value;
    EXPECT_LT(s, 0.0) << tau;
    EXPECT_GT(std::fabs(s), std::fabs(previous)) << tau;
    previous = s;
  }
}

TEST(Options, ZeroFrequencyTeIsInert) {
  const auto he = metastable_helium();
  for (const auto& wall : {gold(), gold_drude(), silicon()}) {
    const Scene s(3e-6, 300.0);
    LifshitzOptions o;
    o.zero_frequency_te_override = -0.9;
    EXPECT_EQ(free_energy(s, wall, he, o).value, free_energy(s, wall, he).value);
    EXPECT_EQ(force(s, wall, he, o).value, force(s, wall, he).value);
  }
}

TEST(Options, ThreadCountDoesNotChangeResults) {
  const auto he = metastable_helium();
  const Scene s(200e-9, 300.0);
  LifshitzOptions one;
  LifshitzOptions many;
  many.threads = 4;
  EXPECT_EQ(free_energy(s, gold(), he, one).value, free_energy(s, gold(), he, many).value);
  EXPECT_EQ(force(s, silicon(), he, one).value, force(s, silicon(), he, many).value);
}

TEST(Options, Validation) {
  const auto he = metastable_helium();
  LifshitzOptions bad;
  bad.inner_rel_tol = 0.0;
  EXPECT_THROW(free_energy(Scene(1e-6, 300.0), gold(), he, bad), DomainError);
  LifshitzOptions run;
  run.truncation_run = 0;
  EXPECT_THROW(free_energy(Scene(1e-6, 300.0), gold(), he, run), DomainError);
}

TEST(Options, UnreachableToleranceIsReported) {
  LifshitzOptions o;
  o.inner_rel_tol = 1e-300;
  try {
    free_energy(Scene(1e-6, 300.0), silicon(), metastable_helium(), o);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_TRUE(std::isfinite(e.last_error_estimate()));
  }
}

TEST(Models, PlasmaAndDrudeAgreeForAtoms) {
  const auto he = metastable_helium();
  for (double a : {0.5e-6, 1e-6, 2e-6, 5e-6}) {
    const Scene s(a, 300.0);
    EXPECT_LT(rel(free_energy(s, gold_drude(), he).value, free_energy(s, gold(), he).value), 5e-3);
  }
}

TEST(Models, ThermalEnergyExceedsZeroTemperatureForSilicon) {
  const auto he = metastable_helium();
  for (double a : {100e-9, 1e-6, 10e-6}) {
    EXPECT_GE(std::fabs(free_energy(Scene(a, 300.0), silicon(), he).value),
              std::fabs(zero_temperature_energy(a, silicon(), he).value));
  }
}

TEST(Evaluate, BundlesAllThree) {
  const auto he = metastable_helium();
  const Scene s(1e-6, 300.0);
  const auto r = evaluate(s, gold(), he);
  EXPECT_EQ(r.free_energy, free_energy(s, gold(), he).value);
  EXPECT_EQ(r.force, force(s, gold(), he).value);
  EXPECT_EQ(r.entropy, entropy(s, gold(), he).value);
}
