#pragma once

// Resolution of C₃, C₄ and l for a material/atom pair: configured values win,
// computed values fill the gaps, and the result says which is which.

#include "cpkit/app/registry.hpp"
#include "cpkit/phenomenology.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace cpkit::app {

struct CoefficientReport {
  std::string material;
  std::string atom;
  /// Values computed from the models alone.
  double computed_c3 = 0.0;
  double computed_c4 = 0.0;
  std::string c4_method; ///< "ideal-metal closed form" or "Lifshitz extrapolation"
  double c4_residual = 0.0;
  /// Raw configured values, if any.
  CoefficientOverrides configured;
  /// What downstream calculations use.
  DispersionCoefficients effective;
  double rho = 0.0;
  /// False when C₃ rests only on a model wall (no optical data, no configured value).
  bool quantitative = false;
};

/// C₄: configured, else the ideal-metal closed form for metal walls (the
/// large-separation limit of any metal), else the Lifshitz extrapolation.
/// C₃: configured, else C₄/l if l is configured, else the C₃ integral.
CoefficientReport resolve_coefficients(const Registry& registry, const std::string& material,
                                       const std::string& atom);

/// Human-readable side-by-side report.
void print_report(std::ostream& out, const CoefficientReport& report);

} // namespace cpkit::app
