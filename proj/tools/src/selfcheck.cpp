#include "cpkit/app/selfcheck.hpp"

#include "cpkit/asymptotics.hpp"
#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"
#include "cpkit/lifshitz.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

namespace cpkit::app {

namespace {

using constants::pi;

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

double temperature_for_tau(double a, double tau) {
  return tau * constants::hbar * constants::c / (4.0 * pi * constants::k_B * a);
}

CheckResult run(const std::string& name, double tolerance, const std::function<double()>& residual) {
  CheckResult r{name, 0.0, tolerance, false, {}};
  try {
    r.residual = residual();
    r.passed = r.residual <= tolerance;
  } catch (const std::exception& e) {
    r.residual = std::nan("");
    r.detail = e.what();
  }
  return r;
}

} // namespace

std::vector<CheckResult> self_check() {
  const auto he = metastable_helium();
  const auto bare = AtomModel::static_polarizability(he.static_polarizability(), he.mass());
  const auto ideal = WallModel::ideal_metal();
  const auto gold = WallModel::plasma(units::ev_to_rad_per_s(9.0));
  LifshitzOptions numeric;
  numeric.use_closed_forms = false;

  std::vector<CheckResult> out;

  out.push_back(run("eta oracle: Matsubara sum vs E_CP*eta", 1e-8, [&] {
    double worst = 0.0;
    for (double tau : {0.1, 1.0, 6.0}) {
      const double a = 1e-6;
      const Scene s(a, temperature_for_tau(a, tau));
      const double want = casimir_polder_energy(a, bare.static_polarizability()) * eta(tau);
      worst = std::max(worst, rel(free_energy(s, ideal, bare, numeric).value, want));
    }
    return worst;
  }));

  out.push_back(run("kappa oracle: Matsubara sum vs F_CP*kappa", 1e-7, [&] {
    double worst = 0.0;
    for (double tau : {0.1, 1.0, 6.0}) {
      const double a = 1e-6;
      const Scene s(a, temperature_for_tau(a, tau));
      const double want = casimir_polder_force(a, bare.static_polarizability()) * kappa(tau);
      worst = std::max(worst, rel(force(s, ideal, bare, numeric).value, want));
    }
    return worst;
  }));

  out.push_back(run("classical limit at tau = 30 (plasma Au + He*)", 1e-3, [&] {
    const double a = 5e-6;
    const double T = temperature_for_tau(a, 30.0);
    const auto c = classical_limits(a, T, he);
    return rel(free_energy(Scene(a, T), gold, he).value, c.free_energy);
  }));

  out.push_back(run("zero-T ideal metal + oscillator vs arctan integral", 1e-8, [&] {
    const double a = 300e-9;
    const double beta = he.absorption_wavelength() / (4.0 * pi * a);
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [beta](double y) { return y * y * std::exp(-y) * std::atan(beta * y); }, 0.0,
        std::numeric_limits<double>::infinity(), 15, 1e-13);
    const double want =
        -constants::hbar * constants::c * he.static_polarizability() /
        (16.0 * pi * std::pow(a, 4)) / beta * integral;
    return rel(zero_temperature_energy(a, ideal, he).value, want);
  }));

  out.push_back(run("sigma = d(eta)/d(tau)", 1e-7, [&] {
    double worst = 0.0;
    for (double tau : {0.5, 2.0, 3.0, 10.0}) {
      const double h = 1e-3 * tau;
      const double d =
          (eta(tau - 2.0 * h) - 8.0 * eta(tau - h) + 8.0 * eta(tau + h) - eta(tau + 2.0 * h)) /
          (12.0 * h);
      worst = std::max(worst, std::fabs(d - sigma(tau)) / std::max(std::fabs(sigma(tau)), 1e-3));
    }
    return worst;
  }));

  out.push_back(run("Riemann zeta(5), zeta(7)", 1e-9, [] {
    return std::max(std::fabs(riemann_zeta(5) - 1.0369277551433699),
                    std::fabs(riemann_zeta(7) - 1.0083492773819228));
  }));

  out.push_back(run("low-T free-energy correction vs Lifshitz (Au + He*, 2 um, tau = 0.5)", 0.05,
                    [&] {
                      const double a = 2e-6;
                      const double T = temperature_for_tau(a, 0.5);
                      const double exact = free_energy(Scene(a, T), gold, he).value -
                                           zero_temperature_energy(a, gold, he).value;
                      return rel(low_t_free_energy_correction(a, T, he, gold).value, exact);
                    }));

  out.push_back(run("zero-frequency r_TE has no effect", 0.0, [&] {
    const Scene s(1e-6, 300.0);
    LifshitzOptions perturbed;
    perturbed.zero_frequency_te_override = 0.731;
    return std::fabs(free_energy(s, gold, he, perturbed).value - free_energy(s, gold, he).value);
  }));

  out.push_back(run("force = -dF/da (plasma Au + He*, 1 um, 300 K)", 1e-5, [&] {
    const double a = 1e-6;
    const double h = 1e-4 * a;
    const double fd = -(free_energy(Scene(a + h, 300.0), gold, he).value -
                        free_energy(Scene(a - h, 300.0), gold, he).value) /
                      (2.0 * h);
    return rel(force(Scene(a, 300.0), gold, he).value, fd);
  }));

  return out;
}

bool print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  bool all = true;
  for (const auto& c : checks) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "residual %.3e  tolerance %.1e", c.residual, c.tolerance);
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  " << buf;
    if (!c.detail.empty()) {
      out << "  (" << c.detail << ")";
    }
    out << '\n';
    all = all && c.passed;
  }
  return all;
}

} // namespace cpkit::app
