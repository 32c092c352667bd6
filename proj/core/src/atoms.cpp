#include "cpkit/atoms.hpp"

#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cpkit {

namespace {

void check_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("atom mass must be positive and finite");
  }
}

} // namespace

std::string_view to_string(AtomKind kind) {
  switch (kind) {
  case AtomKind::Static:
    return "static";
  case AtomKind::SingleOscillator:
    return "oscillator";
  case AtomKind::Tabulated:
    return "tabulated";
  }
  return "unknown";
}

AtomModel AtomModel::static_polarizability(double alpha0, double mass) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0)) {
    throw DomainError("static polarizability must be positive and finite");
  }
  check_mass(mass);
  return AtomModel(AtomKind::Static, alpha0, 0.0, mass, nullptr);
}

AtomModel AtomModel::single_oscillator(double alpha0, double omega0, double mass) {
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0)) {
    throw DomainError("static polarizability must be positive and finite");
  }
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw DomainError("absorption frequency must be positive and finite");
  }
  check_mass(mass);
  return AtomModel(AtomKind::SingleOscillator, alpha0, omega0, mass, nullptr);
}

AtomModel AtomModel::tabulated(std::vector<PolarizabilitySample> samples, double mass) {
  check_mass(mass);
  if (samples.empty()) {
    throw ValidationError("polarizability table is empty");
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!(s.xi >= 0.0) || !(s.alpha > 0.0) || !std::isfinite(s.xi) || !std::isfinite(s.alpha)) {
      throw ValidationError("polarizability row " + std::to_string(i) +
                            ": need xi >= 0 and alpha > 0");
    }
    if (i > 0 && !(s.xi > samples[i - 1].xi)) {
      throw ValidationError("polarizability frequencies must be strictly increasing");
    }
    if (i > 0 && s.alpha > samples[i - 1].alpha) {
      throw ValidationError("polarizability must be non-increasing in xi");
    }
  }
  const double alpha0 = samples.front().alpha;
  return AtomModel(AtomKind::Tabulated, alpha0, 0.0, mass,
                   std::make_shared<const std::vector<PolarizabilitySample>>(std::move(samples)));
}

double AtomModel::absorption_frequency() const {
  if (kind_ != AtomKind::SingleOscillator) {
    throw UnsupportedModelError("absorption frequency is defined only for oscillator atoms");
  }
  return omega0_;
}

double AtomModel::absorption_wavelength() const {
  return 2.0 * constants::pi * constants::c / absorption_frequency();
}

const std::vector<PolarizabilitySample>& AtomModel::samples() const {
  if (!samples_) {
    throw UnsupportedModelError("atom is not tabulated");
  }
  return *samples_;
}

double polarizability_at(const AtomModel& atom, double xi) {
  if (!(xi >= 0.0) || std::isnan(xi)) {
    throw DomainError("polarizability: xi must be >= 0");
  }
  switch (atom.kind()) {
  case AtomKind::Static:
    return atom.static_polarizability();
  case AtomKind::SingleOscillator: {
    const double r = xi / atom.absorption_frequency();
    return atom.static_polarizability() / (1.0 + r * r);
  }
  case AtomKind::Tabulated: {
    const auto& s = atom.samples();
    if (xi <= s.front().xi) {
      return s.front().alpha;
    }
    if (xi >= s.back().xi) {
      const double r = s.back().xi / xi;
      return s.back().alpha * r * r;
    }
    auto it = std::upper_bound(s.begin(), s.end(), xi,
                               [](double x, const PolarizabilitySample& p) { return x < p.xi; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (xi - lo.xi) / (hi.xi - lo.xi);
    return lo.alpha * std::exp(t * std::log(hi.alpha / lo.alpha));
  }
  }
  throw UnsupportedModelError("unknown atom kind");
}

OscillatorGeometry geometry_params(const AtomModel& atom, const WallModel& wall, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("geometry_params: separation must be positive");
  }
  OscillatorGeometry g;
  switch (atom.kind()) {
  case AtomKind::Static:
    g.beta_a = 0.0;
    break;
  case AtomKind::SingleOscillator:
    g.beta_a = atom.absorption_wavelength() / (4.0 * constants::pi * a);
    break;
  case AtomKind::Tabulated:
    throw UnsupportedModelError("geometry_params needs a static or single-oscillator atom");
  }
  switch (wall.kind()) {
  case WallKind::IdealMetal:
    g.skin_depth_ratio = 0.0;
    break;
  case WallKind::Plasma:
  case WallKind::Drude:
    // λp/(2πa) = c/(ωp a)
    g.skin_depth_ratio = constants::c / (wall.plasma_frequency() * a);
    break;
  default:
    throw UnsupportedModelError("geometry_params needs an ideal, plasma or Drude wall");
  }
  return g;
}

AtomModel metastable_helium() {
  return AtomModel::single_oscillator(units::au_to_m3(315.63), units::ev_to_rad_per_s(1.18),
                                      units::u_to_kg(4.0026));
}

} // namespace cpkit
