#pragma once

/**
 * @file lifshitz.hpp
 * @brief Casimir-Polder free energy, force and entropy of an atom near a wall.
 *
 * Finite temperature is a primed Matsubara sum (l = 0 weighted ½) of
 * one-dimensional integrals over y ∈ [ζ_l, ∞); zero temperature is a separate
 * double integral over (ζ, y), never the τ → 0 limit of the sum.
 *
 * Every evaluation returns its value together with diagnostics describing how
 * it was obtained: the number of Matsubara terms, the accumulated quadrature
 * error estimate and an estimate of the truncation error of the sum.
 */

#include "cpkit/atoms.hpp"
#include "cpkit/materials.hpp"

#include <array>
#include <cstddef>
#include <optional>

namespace cpkit {

/// Atom-wall separation a (m) and temperature T (K) with the derived scales.
class Scene {
public:
  /// Throws DomainError unless a > 0 and T ≥ 0 (both finite).
  Scene(double a, double temperature);

  double separation() const noexcept { return a_; }
  double temperature() const noexcept { return temperature_; }
  /// ω_c = c/(2a), rad/s
  double characteristic_frequency() const noexcept { return omega_c_; }
  /// T_eff = ħω_c/k_B, K
  double effective_temperature() const noexcept;
  /// τ = 4πk_B aT/(ħc) = 2πT/T_eff
  double tau() const noexcept { return tau_; }
  /// ζ_l = τ l
  double zeta(std::size_t l) const noexcept { return tau_ * static_cast<double>(l); }
  /// ξ_l = 2πk_B T l/ħ, rad/s
  double matsubara_frequency(std::size_t l) const noexcept { return omega_c_ * zeta(l); }

private:
  double a_;
  double temperature_;
  double omega_c_;
  double tau_;
};

struct LifshitzOptions {
  /// Relative tolerance of each y-integral (measured against its L1 norm).
  double inner_rel_tol = 1e-12;
  /// Relative tolerance of the outer ζ-integral at T = 0.
  double outer_rel_tol = 1e-10;
  /// Stop once this many consecutive terms fall below truncation_rel_tol · |sum|.
  double truncation_rel_tol = 1e-12;
  int truncation_run = 3;
  /// Width of the y-window [ζ, ζ + y_window]; the e^{−y} tail beyond it is bounded analytically.
  double y_window = 60.0;
  /// Route IdealMetal + Static to the exact closed forms.
  bool use_closed_forms = true;
  /// Worker threads for Matsubara terms. Results do not depend on this value.
  unsigned threads = 1;
  /// Replace r_TE at zero frequency. It is multiplied by ζ₀² = 0, so any finite value
  /// must leave every result unchanged; exposed so that claim can be tested.
  std::optional<double> zero_frequency_te_override;
};

struct Diagnostics {
  std::size_t terms = 0;          ///< Matsubara terms summed (0 for integrals and closed forms)
  double quadrature_error = 0.0;  ///< absolute, in the units of the value
  double truncation_error = 0.0;  ///< absolute, in the units of the value
  bool closed_form = false;       ///< value came from an exact closed form
  /// Entropy only: the two central differences −Δ𝓕/ΔT at steps h and h/2.
  std::array<double, 2> entropy_stencil{0.0, 0.0};
};

struct Evaluation {
  double value = 0.0;
  Diagnostics diagnostics;
};

struct InteractionResult {
  double free_energy = 0.0; ///< J
  double force = 0.0;       ///< N (negative = attraction)
  double entropy = 0.0;     ///< J/K
  Diagnostics free_energy_diagnostics;
  Diagnostics force_diagnostics;
  Diagnostics entropy_diagnostics;
};

/// 𝓕(a, T) in J. T = 0 evaluates the zero-temperature energy.
Evaluation free_energy(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                       const LifshitzOptions& options = {});

/// F(a, T) in N. T = 0 evaluates the zero-temperature force.
Evaluation force(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                 const LifshitzOptions& options = {});

/// S(a, T) = −∂𝓕/∂T in J/K, by a Richardson-extrapolated central difference
/// with step h = max(10⁻³T, 10⁻³ K), capped at T/2. The stencil sums are truncated
/// at min(truncation_rel_tol, 10⁻¹⁵). Requires T > 0.
Evaluation entropy(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                   const LifshitzOptions& options = {});

/// Free energy, force and entropy at one scene.
InteractionResult evaluate(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                           const LifshitzOptions& options = {});

/// E(a) = (ħc/32πa⁴) ∫₀^∞ dζ ∫_ζ^∞ dy h(ζ, y), in J.
Evaluation zero_temperature_energy(double a, const WallModel& wall, const AtomModel& atom,
                                   const LifshitzOptions& options = {});

/// F₀(a) = −dE/da = (ħc/32πa⁵) ∫₀^∞ dζ ∫_ζ^∞ dy y h(ζ, y), in N.
Evaluation zero_temperature_force(double a, const WallModel& wall, const AtomModel& atom,
                                  const LifshitzOptions& options = {});

/// The l-th term of the free-energy sum in J, with the ½ weight applied at l = 0.
/// Summing these over l reproduces free_energy.
double matsubara_term(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                      long long l, const LifshitzOptions& options = {});

} // namespace cpkit
