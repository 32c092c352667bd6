#pragma once

// Atomic dynamic polarizability α(iξ) in the SI volume convention (m³, i.e.
// α_SI / 4πε₀) plus the atom metadata the interaction needs.

#include "cpkit/materials.hpp"

#include <memory>
#include <string_view>
#include <vector>

namespace cpkit {

enum class AtomKind { Static, SingleOscillator, Tabulated };

std::string_view to_string(AtomKind kind);

struct PolarizabilitySample {
  double xi = 0.0;    ///< imaginary frequency, rad/s
  double alpha = 0.0; ///< α(iξ), m³
};

class AtomModel {
public:
  static AtomModel static_polarizability(double alpha0, double mass);
  /// α(iξ) = α(0) / (1 + ξ²/ω₀²)
  static AtomModel single_oscillator(double alpha0, double omega0, double mass);
  /// Samples must be strictly increasing in ξ with positive, non-increasing α.
  /// Between samples ln α is linear in ξ; beyond the last one α falls as 1/ξ².
  static AtomModel tabulated(std::vector<PolarizabilitySample> samples, double mass);

  AtomKind kind() const noexcept { return kind_; }
  double static_polarizability() const noexcept { return alpha0_; }
  /// ω₀ for SingleOscillator; throws UnsupportedModelError otherwise.
  double absorption_frequency() const;
  /// λ₀ = 2πc/ω₀.
  double absorption_wavelength() const;
  double mass() const noexcept { return mass_; }
  const std::vector<PolarizabilitySample>& samples() const;

private:
  AtomModel(AtomKind kind, double alpha0, double omega0, double mass,
            std::shared_ptr<const std::vector<PolarizabilitySample>> samples)
      : kind_(kind), alpha0_(alpha0), omega0_(omega0), mass_(mass), samples_(std::move(samples)) {}

  AtomKind kind_;
  double alpha0_;
  double omega0_;
  double mass_;
  std::shared_ptr<const std::vector<PolarizabilitySample>> samples_;
};

/// α(iξ) in m³; ξ < 0 throws DomainError.
double polarizability_at(const AtomModel& atom, double xi);

/// Dimensionless expansion parameters of the oscillator/plasma pair at separation a.
struct OscillatorGeometry {
  double beta_a = 0.0;            ///< ω_c/ω₀ = λ₀/(4πa); 0 for a static atom
  double skin_depth_ratio = 0.0;  ///< δ₀/a = λp/(2πa); 0 for an ideal metal
};

/// Requires a Static or SingleOscillator atom and an ideal, plasma or Drude wall.
OscillatorGeometry geometry_params(const AtomModel& atom, const WallModel& wall, double a);

/// Metastable helium: α(0) = 315.63 a.u., ω₀ = 1.18 eV, m = 4.0026 u.
AtomModel metastable_helium();

} // namespace cpkit
