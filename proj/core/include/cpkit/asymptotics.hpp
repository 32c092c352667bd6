#pragma once

/**
 * @file asymptotics.hpp
 * @brief Closed forms and expansions for the atom-wall interaction.
 *
 * Three families live here:
 *  - the exact ideal-metal / static-atom correction factors η, κ, σ as
 *    functions of τ = 4π k_B a T/(ħc), with their small-τ series;
 *  - perturbative corrections in the oscillator parameter β_A and the
 *    relative skin depth δ₀/a for a plasma wall and a single-oscillator atom;
 *  - low-temperature thermal corrections and the classical (τ ≫ 1) limit.
 *
 * Expansions are returned with a validity flag rather than refused outside
 * their window; callers decide what to do with a flagged number.
 */

#include "cpkit/atoms.hpp"
#include "cpkit/materials.hpp"

namespace cpkit {

struct CorrectionFactors {
  double eta = 1.0;
  double kappa = 1.0;
  double sigma = 0.0;
  double tau = 0.0;
};

/// Free-energy factor: 𝓕 = E_CP η for an ideal metal and a static atom.
double eta(double tau);
/// Force factor: F = F_CP κ.
double kappa(double tau);
/// Entropy factor: S = (3k_B/2a³) α(0) σ. Equals dη/dτ.
double sigma(double tau);
CorrectionFactors correction_factors(double tau);

// Truncated small-τ expansions, exposed for validation.
double eta_series(double tau);   ///< 1 − τ⁴/2160 + τ⁶/15120 − τ⁸/241920
double kappa_series(double tau); ///< 1 − τ⁶/30240 + τ⁸/241920
double sigma_series(double tau); ///< −τ³/540 + τ⁵/2520

/// Below this τ, eta/kappa/sigma sum their full Taylor series (Bernoulli
/// coefficients, radius 2π) instead of the Bose-factor closed forms, whose
/// terms cancel as τ → 0. Both agree to double precision at the switch.
inline constexpr double kTaylorBelow = 1.0;

/// E_CP(a) = −3ħcα(0)/(8πa⁴)
double casimir_polder_energy(double a, double alpha0);
/// F_CP(a) = −3ħcα(0)/(2πa⁵)
double casimir_polder_force(double a, double alpha0);

/// Riemann ζ(s), s ≥ 2, by direct summation with an Euler-Maclaurin tail.
double riemann_zeta(int s);

struct Asymptotic {
  double value = 0.0;
  bool within_validity = true;
};

/// The three first-order pieces of the zero-temperature bracket, reported
/// separately so they can be compared with tabulated corrections.
struct PerturbativeBreakdown {
  double dynamic_polarizability = 0.0; ///< −(20/3) β_A²
  double skin_depth = 0.0;             ///< −(8/5) δ₀/a
  double skin_depth_second = 0.0;      ///< (62/21) (δ₀/a)²
  double bracket = 1.0;                ///< 1 + sum of the above
  OscillatorGeometry geometry;
};

/// Perturbative parameters are trusted while β_A and δ₀/a stay below this.
inline constexpr double kPerturbativeWindow = 0.3;

PerturbativeBreakdown perturbative_breakdown(double a, const AtomModel& atom, const WallModel& wall);

/// E_CP(a) [1 − (20/3)β_A² − (8/5)δ₀/a + (62/21)(δ₀/a)²]
Asymptotic perturbative_energy(double a, const AtomModel& atom, const WallModel& wall);
/// F_CP(a) [1 − 10β_A² − 2δ₀/a + (31/7)(δ₀/a)²]
Asymptotic perturbative_force(double a, const AtomModel& atom, const WallModel& wall);

/// Low-temperature thermal correction Δ_T𝓕 = 𝓕(a,T) − E(a); valid for τ < 1.
Asymptotic low_t_free_energy_correction(double a, double temperature, const AtomModel& atom,
                                        const WallModel& wall);
/// Δ_T F, obtained as −∂/∂a of the free-energy correction (β_A, δ₀/a ∝ 1/a, τ ∝ a).
Asymptotic low_t_force_correction(double a, double temperature, const AtomModel& atom,
                                  const WallModel& wall);
/// Leading low-temperature entropy; negative and → 0 as T → 0.
Asymptotic low_t_entropy(double a, double temperature, const AtomModel& atom, const WallModel& wall);

struct ClassicalLimit {
  double free_energy = 0.0; ///< −k_B T α(0)/(4a³)
  double force = 0.0;       ///< −3k_B T α(0)/(4a⁴)
  double entropy = 0.0;     ///< −k_B α(0)/(4a³), independent of T
  bool within_validity = true; ///< τ ≥ 10
};

/// High-temperature limit. Holds for real metal walls too; it depends only on α(0).
ClassicalLimit classical_limits(double a, double temperature, const AtomModel& atom);

/// τ = 4π k_B a T/(ħc)
double tau_of(double a, double temperature);

} // namespace cpkit
