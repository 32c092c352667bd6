#include "cpkit/phenomenology.hpp"

#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"

#include "quadrature.hpp"

#include <cmath>

namespace cpkit {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

Provenance weaker(Provenance a, Provenance b) {
  return a == Provenance::Configured || b == Provenance::Configured ? Provenance::Configured
                                                                    : Provenance::Computed;
}

// A frequency that sets the scale of the C₃ integrand, used for the
// substitution ξ = ω·u/(1 − u).
double c3_frequency_scale(const WallModel& wall, const AtomModel& atom) {
  switch (atom.kind()) {
  case AtomKind::SingleOscillator:
    return atom.absorption_frequency();
  case AtomKind::Tabulated:
    return atom.samples().back().xi > 0.0 ? atom.samples().back().xi : 1e16;
  case AtomKind::Static:
    break;
  }
  switch (wall.kind()) {
  case WallKind::Plasma:
  case WallKind::Drude:
    return wall.plasma_frequency();
  case WallKind::DielectricOscillator:
    return wall.oscillator_frequency();
  case WallKind::Tabulated:
    return wall.table().max_frequency();
  case WallKind::IdealMetal:
    break;
  }
  throw DomainError("C3 diverges for a static atom against an ideal metal");
}

} // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::Computed ? "computed" : "configured";
}

DispersionCoefficients DispersionCoefficients::from_c3_c4(double c3, Provenance c3_from,
                                                          double c4, Provenance c4_from) {
  require_positive(c3, "C3");
  require_positive(c4, "C4");
  return DispersionCoefficients(c3, c4, c4 / c3, c3_from, c4_from, weaker(c3_from, c4_from));
}

DispersionCoefficients DispersionCoefficients::from_c4_l(double c4, Provenance c4_from, double l,
                                                         Provenance l_from) {
  require_positive(c4, "C4");
  require_positive(l, "l");
  return DispersionCoefficients(c4 / l, c4, l, weaker(c4_from, l_from), c4_from, l_from);
}

PhenomenologicalPotential::PhenomenologicalPotential(double c4, double l) : c4_(c4), l_(l) {
  require_positive(c4, "C4");
  require_positive(l, "l");
}

double c3(const WallModel& wall, const AtomModel& atom, bool ideal_metal_limit) {
  const bool ideal = ideal_metal_limit || wall.kind() == WallKind::IdealMetal;
  if (wall.kind() == WallKind::IdealMetal && !ideal_metal_limit) {
    throw UnsupportedModelError("C3 for an ideal metal needs the ideal-metal limit branch");
  }
  if (ideal && atom.kind() == AtomKind::Static) {
    throw DomainError("C3 diverges for a static atom in the ideal-metal limit");
  }
  const double w = ideal ? c3_frequency_scale(WallModel::ideal_metal(), atom)
                         : c3_frequency_scale(wall, atom);
  auto integrand = [&](double u) {
    const double xi = w * u / (1.0 - u);
    const double jac = w / ((1.0 - u) * (1.0 - u));
    const double alpha = polarizability_at(atom, xi);
    if (alpha == 0.0) {
      return 0.0;
    }
    double factor = 1.0;
    if (!ideal) {
      const double x = permittivity_excess(wall, xi);
      factor = x / (x + 2.0);
    }
    return alpha * factor * jac;
  };
  const auto q = detail::integrate(integrand, 0.0, 1.0, 1e-7, "C3 integral");
  return constants::hbar / (4.0 * constants::pi) * q.value;
}

double c4_ideal(const AtomModel& atom) {
  return 3.0 * constants::hbar * constants::c * atom.static_polarizability() /
         (8.0 * constants::pi);
}

C4Extraction c4_lifshitz(const WallModel& wall, const AtomModel& atom,
                         const LifshitzOptions& options) {
  constexpr double a_near = 50e-6;
  const auto scaled = [&](double a) {
    return std::pow(a, 4) * std::fabs(zero_temperature_energy(a, wall, atom, options).value);
  };
  const double c1 = scaled(a_near);
  const double c2 = scaled(2.0 * a_near);
  const double c4 = scaled(4.0 * a_near);
  // C(a) = C₄ + k₁/a + k₂/a² + …; two Richardson steps in h = 1/a remove k₁ and k₂.
  const double first_near = 2.0 * c2 - c1;
  const double first_far = 2.0 * c4 - c2;
  C4Extraction r;
  r.c4 = (4.0 * first_far - first_near) / 3.0;
  r.residual = std::fabs(r.c4 - first_far);
  return r;
}

double phenomenological_energy(const PhenomenologicalPotential& p, double a) {
  require_positive(a, "separation");
  return -p.c4() / (a * a * a * (a + p.l()));
}

double relative_difference(double e_acc, double e_ph) {
  if (e_acc == 0.0 || !std::isfinite(e_acc)) {
    throw DomainError("relative difference needs a finite, non-zero reference energy");
  }
  return (e_acc - e_ph) / e_acc;
}

double rho_parameter(const AtomModel& atom, const DispersionCoefficients& coeffs) {
  return std::sqrt(2.0 * atom.mass()) / constants::hbar * coeffs.c3() / std::sqrt(coeffs.c4());
}

} // namespace cpkit
