#pragma once

/**
 * @file phenomenology.hpp
 * @brief Dispersion coefficients and the phenomenological quantum-reflection potential.
 *
 * The phenomenological potential interpolates between the van der Waals
 * regime −C₃/a³ and the retarded Casimir-Polder regime −C₄/a⁴:
 *
 *     E_ph(a) = −C₄ / (a³ (a + l)),   l = C₄/C₃.
 *
 * Its accuracy is measured against an exact energy by the signed relative
 * difference δE = (E_acc − E_ph)/E_acc.
 */

#include "cpkit/atoms.hpp"
#include "cpkit/materials.hpp"
#include "cpkit/lifshitz.hpp"

#include <string_view>

namespace cpkit {

enum class Provenance { Computed, Configured };

std::string_view to_string(Provenance p);

/// C₃ (J·m³), C₄ (J·m⁴) and l = C₄/C₃ (m), each tagged with where it came from.
class DispersionCoefficients {
public:
  /// l is derived as C₄/C₃ and inherits the weaker provenance of the two.
  static DispersionCoefficients from_c3_c4(double c3, Provenance c3_from, double c4,
                                           Provenance c4_from);
  /// C₃ is derived as C₄/l.
  static DispersionCoefficients from_c4_l(double c4, Provenance c4_from, double l,
                                          Provenance l_from);

  double c3() const noexcept { return c3_; }
  double c4() const noexcept { return c4_; }
  double l() const noexcept { return l_; }
  Provenance c3_provenance() const noexcept { return c3_from_; }
  Provenance c4_provenance() const noexcept { return c4_from_; }
  Provenance l_provenance() const noexcept { return l_from_; }

private:
  DispersionCoefficients(double c3, double c4, double l, Provenance c3_from, Provenance c4_from,
                         Provenance l_from)
      : c3_(c3), c4_(c4), l_(l), c3_from_(c3_from), c4_from_(c4_from), l_from_(l_from) {}

  double c3_;
  double c4_;
  double l_;
  Provenance c3_from_;
  Provenance c4_from_;
  Provenance l_from_;
};

class PhenomenologicalPotential {
public:
  /// Both positive and finite, else DomainError.
  PhenomenologicalPotential(double c4, double l);
  explicit PhenomenologicalPotential(const DispersionCoefficients& coeffs)
      : PhenomenologicalPotential(coeffs.c4(), coeffs.l()) {}

  double c4() const noexcept { return c4_; }
  double l() const noexcept { return l_; }
  double c3() const noexcept { return c4_ / l_; }

private:
  double c4_;
  double l_;
};

/**
 * C₃ = (ħ/4π) ∫₀^∞ α(iξ) (ε(iξ) − 1)/(ε(iξ) + 1) dξ in J·m³.
 *
 * With `ideal_metal_limit` the reflection factor is replaced by its ε → ∞
 * value 1; that is the only way to use an IdealMetal wall. A static atom
 * against an ideal metal diverges and throws DomainError.
 */
double c3(const WallModel& wall, const AtomModel& atom, bool ideal_metal_limit = false);

/// C₄ = 3ħcα(0)/(8π), J·m⁴.
double c4_ideal(const AtomModel& atom);

struct C4Extraction {
  double c4 = 0.0;       ///< J·m⁴
  double residual = 0.0; ///< change made by the second Richardson step, J·m⁴
};

/// lim_{a→∞} a⁴|E(a)| from the zero-temperature energy at 50, 100 and 200 μm,
/// Richardson-extrapolated to second order in 1/a.
C4Extraction c4_lifshitz(const WallModel& wall, const AtomModel& atom,
                         const LifshitzOptions& options = {});

/// E_ph(a) = −C₄/(a³(a + l)), J.
double phenomenological_energy(const PhenomenologicalPotential& p, double a);

/// δE = (E_acc − E_ph)/E_acc; E_acc = 0 throws DomainError.
double relative_difference(double e_acc, double e_ph);

/// ρ = (√(2m)/ħ) C₃/√C₄. ρ > 1 means the retarded tail dominates reflection.
double rho_parameter(const AtomModel& atom, const DispersionCoefficients& coeffs);

} // namespace cpkit
