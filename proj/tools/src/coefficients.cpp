#include "cpkit/app/coefficients.hpp"

#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace cpkit::app {

namespace {

std::string cell(std::optional<double> v, double scale) {
  char buf[32];
  if (!v || !std::isfinite(*v)) {
    std::snprintf(buf, sizeof buf, "%-16s", "-");
  } else {
    std::snprintf(buf, sizeof buf, "%-16.6e", *v / scale);
  }
  return buf;
}

} // namespace

CoefficientReport resolve_coefficients(const Registry& registry, const std::string& material,
                                       const std::string& atom) {
  const auto& wall = registry.material(material).wall;
  const auto& model = registry.atom(atom).atom;

  double computed_c4 = 0.0;
  double residual = 0.0;
  std::string method;
  if (wall.is_metal()) {
    // Every metal approaches the perfect reflector as a → ∞.
    computed_c4 = c4_ideal(model);
    method = "ideal-metal closed form";
  } else {
    const auto x = c4_lifshitz(wall, model);
    computed_c4 = x.c4;
    residual = x.residual;
    method = "Lifshitz extrapolation";
  }
  double computed_c3 = std::numeric_limits<double>::quiet_NaN();
  try {
    computed_c3 = c3(wall, model, wall.kind() == WallKind::IdealMetal);
  } catch (const DomainError&) {
    // divergent: static atom against an ideal wall
  }

  const auto o = registry.overrides(material);
  const double c4 = o.c4.value_or(computed_c4);
  const auto c4_from = o.c4 ? Provenance::Configured : Provenance::Computed;
  const auto effective = [&] {
    if (o.c3) {
      return DispersionCoefficients::from_c3_c4(*o.c3, Provenance::Configured, c4, c4_from);
    }
    if (o.l) {
      return DispersionCoefficients::from_c4_l(c4, c4_from, *o.l, Provenance::Configured);
    }
    if (!std::isfinite(computed_c3)) {
      throw DomainError("C3 diverges for atom '" + atom + "' against '" + material +
                        "'; configure C3_eV_nm3 or l_nm");
    }
    return DispersionCoefficients::from_c3_c4(computed_c3, Provenance::Computed, c4, c4_from);
  }();
  // Optical data make any wall quantitative. Model metals are close enough to
  // measured data for atoms once C₃ comes from measurement; model dielectrics
  // never are.
  const bool quantitative =
      wall.kind() == WallKind::Tabulated ||
      (wall.is_metal() && effective.c3_provenance() == Provenance::Configured);
  return CoefficientReport{material,  atom,      computed_c3,
                           computed_c4, method,  residual,
                           o,         effective, rho_parameter(model, effective),
                           quantitative};
}

void print_report(std::ostream& out, const CoefficientReport& r) {
  const auto& e = r.effective;
  const double ev_nm3 = units::ev_nm3_to_si(1.0);
  const double ev_nm4 = units::ev_nm4_to_si(1.0);
  const double nm = constants::nm;
  out << "material " << r.material << ", atom " << r.atom << "\n";
  out << "quantity      computed        configured      used            source\n";
  out << "C3 [eV nm^3]  " << cell(r.computed_c3, ev_nm3) << cell(r.configured.c3, ev_nm3)
      << cell(e.c3(), ev_nm3) << to_string(e.c3_provenance()) << "\n";
  out << "C4 [eV nm^4]  " << cell(r.computed_c4, ev_nm4) << cell(r.configured.c4, ev_nm4)
      << cell(e.c4(), ev_nm4) << to_string(e.c4_provenance()) << " (" << r.c4_method << ")\n";
  out << "l [nm]        " << cell(r.computed_c4 / r.computed_c3, nm) << cell(r.configured.l, nm)
      << cell(e.l(), nm) << to_string(e.l_provenance()) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.rho);
  out << "rho           " << buf
      << (r.rho > 1.0 ? "  (retarded tail dominates reflection)\n"
                      : "  (van der Waals region dominates reflection)\n");
  if (r.c4_residual > 0.0) {
    std::snprintf(buf, sizeof buf, "%.3e", r.c4_residual / ev_nm4);
    out << "C4 extrapolation residual " << buf << " eV nm^4\n";
  }
  out << (r.quantitative ? "quantitative: yes\n"
                         : "quantitative: no (model wall without optical data or configured C3)\n");
}

} // namespace cpkit::app
