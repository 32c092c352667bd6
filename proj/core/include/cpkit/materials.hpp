#pragma once

/**
 * @file materials.hpp
 * @brief Dielectric response of the wall on the imaginary frequency axis.
 *
 * Every model is evaluated at ξ (rad/s) along the imaginary axis, where the
 * permittivity is real and ≥ 1. Reflection coefficients use the dimensionless
 * Lifshitz variables: ζ = ξ/ω_c and y = 2aq, with ω_c = c/(2a).
 *
 * Zero frequency is never reached as a numerical limit. `reflection` has a
 * dedicated analytic branch per model at ζ = 0, and `permittivity_at` refuses
 * to evaluate metals there.
 */

#include <filesystem>
#include <iosfwd>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cpkit {

struct OpticalSample {
  double omega = 0.0;  ///< angular frequency, rad/s
  double im_eps = 0.0; ///< imaginary part of ε(ω), dimensionless
};

/// Tabulated absorption Im ε(ω); frequencies strictly increasing, Im ε ≥ 0, ≥ 2 rows.
class OpticalTable {
public:
  explicit OpticalTable(std::vector<OpticalSample> rows);

  /// Parses `# omega_rad_s im_eps` style text: two whitespace-separated
  /// columns per line, `#` starts a comment.
  static OpticalTable parse(std::istream& in, std::string_view source = "<stream>");
  static OpticalTable load(const std::filesystem::path& path);

  std::span<const OpticalSample> rows() const noexcept { return rows_; }
  double min_frequency() const noexcept { return rows_.front().omega; }
  double max_frequency() const noexcept { return rows_.back().omega; }

  /// Piecewise-linear Im ε inside the table; 0 outside.
  double interpolate(double omega) const;

private:
  std::vector<OpticalSample> rows_;
};

/// How a table is continued below its lowest frequency.
enum class LowFrequencyTail {
  Dielectric, ///< Im ε → 0 below the table
  Metal,      ///< Drude tail fitted to the two lowest rows
};

/// Drude absorption Im ε = ωp² γ / (ω (ω² + γ²)) fitted through two rows.
struct DrudeTail {
  double omega_p_sq = 0.0;
  double gamma = 0.0;
};

DrudeTail fit_drude_tail(const OpticalSample& lowest, const OpticalSample& next);

/**
 * ε(iξ) = 1 + (2/π) ∫₀^∞ ω Im ε(ω) / (ω² + ξ²) dω.
 *
 * Inside the table Im ε is linear in ω between rows and each sub-interval is
 * integrated against the kernel analytically. Above the table Im ε falls off
 * as (ω_max/ω)³; below it the tail selected by `tail` applies.
 *
 * Throws DomainError for ξ < 0 and SingularityError for ξ = 0 with a metal tail.
 */
double kramers_kronig(const OpticalTable& table, double xi,
                      LowFrequencyTail tail = LowFrequencyTail::Dielectric);

enum class WallKind { IdealMetal, Plasma, Drude, DielectricOscillator, Tabulated };

std::string_view to_string(WallKind kind);

struct ReflectionPair {
  double tm = 0.0;
  double te = 0.0;
};

/// Immutable wall model. Cheap to copy; tabulated data is shared.
class WallModel {
public:
  static WallModel ideal_metal();
  static WallModel plasma(double omega_p);
  static WallModel drude(double omega_p, double gamma);
  /// ε(iξ) = 1 + (ε(0) − 1)/(1 + ξ²/ω_osc²); a single-resonance dielectric.
  static WallModel dielectric_oscillator(double eps0, double omega_osc);
  /// `xi_min`/`xi_max` bound the frequencies at which the table is trusted.
  static WallModel tabulated(OpticalTable table, LowFrequencyTail tail, double xi_min = 0.0,
                             double xi_max = std::numeric_limits<double>::infinity());

  WallKind kind() const noexcept;
  bool is_metal() const noexcept;

  /// Plasma frequency, rad/s (Plasma and Drude; throws otherwise).
  double plasma_frequency() const;
  /// Relaxation frequency γ, rad/s (Drude; throws otherwise).
  double relaxation() const;
  /// ε(0) for dielectric models (oscillator and dielectric tables).
  double static_permittivity() const;
  /// Resonance frequency of the dielectric oscillator.
  double oscillator_frequency() const;
  /// Underlying table (Tabulated; throws otherwise).
  const OpticalTable& table() const;

  struct IdealMetalParams {};
  struct PlasmaParams {
    double omega_p;
  };
  struct DrudeParams {
    double omega_p;
    double gamma;
  };
  struct OscillatorParams {
    double eps0;
    double omega;
  };
  struct TabulatedParams {
    std::shared_ptr<const OpticalTable> table;
    LowFrequencyTail tail;
    double xi_min;
    double xi_max;
    double eps0; // only meaningful for dielectric tails
  };
  using Params = std::variant<IdealMetalParams, PlasmaParams, DrudeParams, OscillatorParams,
                              TabulatedParams>;

  const Params& params() const noexcept { return params_; }

private:
  explicit WallModel(Params p) : params_(std::move(p)) {}
  Params params_;
};

/// ε(iξ) on the imaginary axis. IdealMetal throws UnsupportedModelError;
/// Plasma/Drude at ξ = 0 throw SingularityError.
double permittivity_at(const WallModel& model, double xi);

/// ε(iξ) − 1, evaluated without the cancellation of forming 1 + x − 1.
double permittivity_excess(const WallModel& model, double xi);

/**
 * Fresnel coefficients at imaginary frequency in the dimensionless variables
 * (ζ, y), y ≥ ζ ≥ 0, with ε evaluated at ξ = ω_c ζ.
 *
 * At ζ = 0 the analytic per-model limits are returned: metals give r_TM = 1,
 * dielectrics (ε(0)−1)/(ε(0)+1). r_TE at ζ = 0 is reported for completeness
 * but never contributes to the Lifshitz sums (its weight is ζ² = 0).
 */
ReflectionPair reflection(const WallModel& model, double zeta, double y, double omega_c);

/// Fresnel pair for ζ > 0 given ε(iω_c ζ) − 1. Lets callers hoist the
/// permittivity out of loops over y.
ReflectionPair fresnel(double eps_excess, double zeta, double y);

/// The analytic ζ = 0 branch of `reflection`.
ReflectionPair zero_frequency_reflection(const WallModel& model, double y, double omega_c);

} // namespace cpkit
