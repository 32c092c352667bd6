#pragma once

// Parameter sweeps over separation (or τ for the entropy factor) emitting a
// tab-separated table behind a provenance header.

#include "cpkit/app/registry.hpp"
#include "cpkit/lifshitz.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpkit::app {

enum class Quantity { FreeEnergy, Force, Entropy, A4E, A4FScaled, Sigma, DeltaE };

std::string_view to_string(Quantity q);
/// Throws ConfigError listing the valid names.
Quantity parse_quantity(std::string_view name);

struct SweepSpec {
  Quantity quantity = Quantity::A4E;
  double start = 20e-9; ///< m, or τ for Sigma
  double stop = 10e-6;
  std::size_t count = 50;
  bool log_spacing = false;
  double temperature = 0.0; ///< K
  std::string material = "Au";
  std::string atom = "He*";
  unsigned threads = 1;     ///< workers over grid points; output does not depend on it
  LifshitzOptions options;
};

struct SweepRow {
  double x = 0.0;
  double value = 0.0;
  double aux = 0.0;
  std::size_t terms = 0;
  double quadrature_error = 0.0;
  double truncation_error = 0.0;
  std::string status = "ok"; ///< "ok" or "<error kind>: <message>"
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> header; ///< provenance lines, without the leading "# "
  std::size_t failures = 0;
};

/// Grid points; throws ConfigError unless count ≥ 2 and 0 < start < stop.
std::vector<double> make_grid(const SweepSpec& spec);

/**
 * Evaluates the sweep. Per-point numerical failures are recorded in the row
 * status and the run continues; unknown names throw ConfigError.
 *
 * Columns by quantity (x is the separation in m, except τ for sigma):
 *   free_energy  value 𝓕 [J]                 aux τ
 *   force        value F [N]                 aux τ
 *   entropy      value S [J/K]               aux τ
 *   a4E          value a⁴|𝓕| [eV nm⁴]        aux 𝓕 [J]
 *   a4F_scaled   value a⁵|F|/4 [eV nm⁴]      aux F [N]
 *   sigma        value σ(τ)                  aux η(τ)
 *   deltaE       value 100·δE [%]            aux E_ph [J]
 */
SweepResult run_sweep(const SweepSpec& spec, const Registry& registry);

/// Header block plus rows; numbers as %.11e so reruns are byte-identical.
void write_table(std::ostream& out, const SweepResult& result);

} // namespace cpkit::app
