#include "cpkit/materials.hpp"

#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace cpkit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive_finite(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite");
  }
}

// ∫_{ω1}^{ω2} ω²/(ω²+ξ²) dω, written as a sum of non-negative pieces so that
// the ξ ≫ ω regime does not cancel.
double kernel_quadratic_moment(double w1, double w2, double xi) {
  const double dw = w2 - w1;
  if (xi == 0.0) {
    return dw;
  }
  const double denom = xi * xi + w1 * w2;
  const double r = xi * dw / denom;
  double r_minus_atan;
  if (r < 1e-3) {
    const double r2 = r * r;
    r_minus_atan = r * r2 * (1.0 / 3.0 - r2 * (1.0 / 5.0 - r2 / 7.0));
  } else {
    r_minus_atan = r - std::atan(r);
  }
  return dw * w1 * w2 / denom + xi * r_minus_atan;
}

// ∫_{ω1}^{ω2} ω/(ω²+ξ²) dω
double kernel_linear_moment(double w1, double w2, double xi) {
  return 0.5 * std::log1p((w2 - w1) * (w2 + w1) / (w1 * w1 + xi * xi));
}

// (1 − atan(x)/x)/x², the (ω_max/ω)³ high-frequency tail in units of Im ε(ω_max).
double cubic_tail_factor(double x) {
  if (x < 1e-2) {
    const double x2 = x * x;
    return 1.0 / 3.0 - x2 * (1.0 / 5.0 - x2 * (1.0 / 7.0 - x2 / 9.0));
  }
  return (1.0 - std::atan(x) / x) / (x * x);
}

// ∫₀^{ω_lo} ωp² γ / ((ω²+γ²)(ω²+ξ²)) dω, the Drude continuation below a metal table.
double drude_tail_integral(const DrudeTail& tail, double w_lo, double xi) {
  const double g = tail.gamma;
  if (std::fabs(xi - g) > 1e-3 * (xi + g)) {
    const double a = std::atan(w_lo / g) / g;
    const double b = std::atan(w_lo / xi) / xi;
    return tail.omega_p_sq * g * (a - b) / (xi * xi - g * g);
  }
  auto f = [&](double w) { return tail.omega_p_sq * g / ((w * w + g * g) * (w * w + xi * xi)); };
  return detail::integrate(f, 0.0, w_lo, 1e-12, "drude tail").value;
}

} // namespace

OpticalTable::OpticalTable(std::vector<OpticalSample> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) {
    throw ValidationError("optical table needs at least 2 rows");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (!std::isfinite(r.omega) || !std::isfinite(r.im_eps)) {
      throw ValidationError("optical table row " + std::to_string(i) + " is not finite");
    }
    if (r.omega <= 0.0) {
      throw ValidationError("optical table row " + std::to_string(i) + ": frequency must be > 0");
    }
    if (r.im_eps < 0.0) {
      throw ValidationError("optical table row " + std::to_string(i) + ": Im eps must be >= 0");
    }
    if (i > 0 && !(r.omega > rows_[i - 1].omega)) {
      throw ValidationError("optical table frequencies must be strictly increasing (row " +
                            std::to_string(i) + ")");
    }
  }
}

OpticalTable OpticalTable::parse(std::istream& in, std::string_view source) {
  std::vector<OpticalSample> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ss(line);
    OpticalSample s;
    if (!(ss >> s.omega)) {
      continue; // blank or comment-only
    }
    std::string extra;
    if (!(ss >> s.im_eps) || (ss >> extra)) {
      throw ValidationError(std::string(source) + ":" + std::to_string(lineno) +
                            ": expected two columns 'omega_rad_s im_eps'");
    }
    rows.push_back(s);
  }
  try {
    return OpticalTable(std::move(rows));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
}

OpticalTable OpticalTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open optical table " + path.string());
  }
  return parse(in, path.string());
}

double OpticalTable::interpolate(double omega) const {
  if (omega < rows_.front().omega || omega > rows_.back().omega) {
    return 0.0;
  }
  auto it = std::upper_bound(rows_.begin(), rows_.end(), omega,
                             [](double w, const OpticalSample& s) { return w < s.omega; });
  if (it == rows_.end()) {
    return rows_.back().im_eps;
  }
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (omega - lo.omega) / (hi.omega - lo.omega);
  return lo.im_eps + t * (hi.im_eps - lo.im_eps);
}

DrudeTail fit_drude_tail(const OpticalSample& lowest, const OpticalSample& next) {
  if (!(lowest.im_eps > 0.0) || !(next.im_eps > 0.0)) {
    throw ValidationError("metal table needs positive Im eps in its two lowest rows");
  }
  const double wa = lowest.omega, ia = lowest.im_eps;
  const double wb = next.omega, ib = next.im_eps;
  // Im ε·ω·(ω² + γ²) = ωp² γ is the same at both rows.
  const double gamma_sq = (ib * wb * wb * wb - ia * wa * wa * wa) / (ia * wa - ib * wb);
  double gamma;
  if (gamma_sq > 0.0 && std::isfinite(gamma_sq)) {
    gamma = std::sqrt(gamma_sq);
  } else {
    // Rows fall at least as fast as 1/ω: the γ ≫ ω end of the Drude family.
    gamma = 1e3 * wb;
  }
  return {ia * wa * (wa * wa + gamma * gamma) / gamma, gamma};
}

double kramers_kronig(const OpticalTable& table, double xi, LowFrequencyTail tail) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw DomainError("kramers_kronig: xi must be finite and >= 0");
  }
  const auto rows = table.rows();
  if (tail == LowFrequencyTail::Metal && xi == 0.0) {
    throw SingularityError("kramers_kronig: a metal table diverges at xi = 0");
  }

  double sum = 0.0;
  if (tail == LowFrequencyTail::Metal) {
    sum += drude_tail_integral(fit_drude_tail(rows[0], rows[1]), rows[0].omega, xi);
  }

  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double w1 = rows[i].omega, w2 = rows[i + 1].omega;
    const double i1 = rows[i].im_eps, i2 = rows[i + 1].im_eps;
    if (i1 == 0.0 && i2 == 0.0) {
      continue;
    }
    const double dw = w2 - w1;
    const double lin = kernel_linear_moment(w1, w2, xi);
    const double quad = kernel_quadratic_moment(w1, w2, xi);
    // Im ε = i1 (w2 − ω)/Δ + i2 (ω − w1)/Δ
    const double weight1 = std::fmax(0.0, (w2 * lin - quad) / dw);
    const double weight2 = std::fmax(0.0, (quad - w1 * lin) / dw);
    sum += i1 * weight1 + i2 * weight2;
  }

  const auto& top = rows.back();
  if (top.im_eps > 0.0) {
    sum += top.im_eps * cubic_tail_factor(xi / top.omega);
  }
  return 1.0 + (2.0 / constants::pi) * sum;
}

std::string_view to_string(WallKind kind) {
  switch (kind) {
  case WallKind::IdealMetal:
    return "ideal-metal";
  case WallKind::Plasma:
    return "plasma";
  case WallKind::Drude:
    return "drude";
  case WallKind::DielectricOscillator:
    return "oscillator";
  case WallKind::Tabulated:
    return "tabulated";
  }
  return "unknown";
}

WallModel WallModel::ideal_metal() { return WallModel(IdealMetalParams{}); }

WallModel WallModel::plasma(double omega_p) {
  require_positive_finite(omega_p, "plasma frequency");
  return WallModel(PlasmaParams{omega_p});
}

WallModel WallModel::drude(double omega_p, double gamma) {
  require_positive_finite(omega_p, "plasma frequency");
  require_positive_finite(gamma, "relaxation frequency");
  return WallModel(DrudeParams{omega_p, gamma});
}

WallModel WallModel::dielectric_oscillator(double eps0, double omega_osc) {
  if (!(eps0 >= 1.0) || !std::isfinite(eps0)) {
    throw DomainError("static permittivity must be finite and >= 1");
  }
  require_positive_finite(omega_osc, "oscillator frequency");
  return WallModel(OscillatorParams{eps0, omega_osc});
}

WallModel WallModel::tabulated(OpticalTable table, LowFrequencyTail tail, double xi_min,
                               double xi_max) {
  if (!(xi_min >= 0.0) || !(xi_max > xi_min)) {
    throw DomainError("tabulated wall: need 0 <= xi_min < xi_max");
  }
  auto shared = std::make_shared<const OpticalTable>(std::move(table));
  double eps0 = std::numeric_limits<double>::infinity();
  if (tail == LowFrequencyTail::Dielectric) {
    eps0 = kramers_kronig(*shared, 0.0, tail);
  } else {
    (void)fit_drude_tail(shared->rows()[0], shared->rows()[1]); // validates early
  }
  return WallModel(TabulatedParams{std::move(shared), tail, xi_min, xi_max, eps0});
}

WallKind WallModel::kind() const noexcept {
  return std::visit(overloaded{
                        [](const IdealMetalParams&) { return WallKind::IdealMetal; },
                        [](const PlasmaParams&) { return WallKind::Plasma; },
                        [](const DrudeParams&) { return WallKind::Drude; },
                        [](const OscillatorParams&) { return WallKind::DielectricOscillator; },
                        [](const TabulatedParams&) { return WallKind::Tabulated; },
                    },
                    params_);
}

bool WallModel::is_metal() const noexcept {
  if (auto* t = std::get_if<TabulatedParams>(&params_)) {
    return t->tail == LowFrequencyTail::Metal;
  }
  return kind() != WallKind::DielectricOscillator;
}

double WallModel::plasma_frequency() const {
  if (auto* p = std::get_if<PlasmaParams>(&params_)) {
    return p->omega_p;
  }
  if (auto* d = std::get_if<DrudeParams>(&params_)) {
    return d->omega_p;
  }
  throw UnsupportedModelError("plasma frequency is defined only for plasma and Drude walls");
}

double WallModel::relaxation() const {
  if (auto* d = std::get_if<DrudeParams>(&params_)) {
    return d->gamma;
  }
  throw UnsupportedModelError("relaxation frequency is defined only for Drude walls");
}

double WallModel::static_permittivity() const {
  if (auto* o = std::get_if<OscillatorParams>(&params_)) {
    return o->eps0;
  }
  if (auto* t = std::get_if<TabulatedParams>(&params_); t && t->tail == LowFrequencyTail::Dielectric) {
    return t->eps0;
  }
  throw UnsupportedModelError("static permittivity is finite only for dielectric walls");
}

double WallModel::oscillator_frequency() const {
  if (auto* o = std::get_if<OscillatorParams>(&params_)) {
    return o->omega;
  }
  throw UnsupportedModelError("oscillator frequency is defined only for oscillator walls");
}

const OpticalTable& WallModel::table() const {
  if (auto* t = std::get_if<TabulatedParams>(&params_)) {
    return *t->table;
  }
  throw UnsupportedModelError("wall is not tabulated");
}

double permittivity_excess(const WallModel& model, double xi) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) {
    throw DomainError("permittivity: xi must be finite and >= 0");
  }
  return std::visit(
      overloaded{
          [](const WallModel::IdealMetalParams&) -> double {
            throw UnsupportedModelError(
                "ideal metal has no finite permittivity; only reflection coefficients are defined");
          },
          [xi](const WallModel::PlasmaParams& p) -> double {
            if (xi == 0.0) {
              throw SingularityError("plasma permittivity is singular at xi = 0; use the "
                                     "zero-frequency reflection path");
            }
            const double r = p.omega_p / xi;
            return r * r;
          },
          [xi](const WallModel::DrudeParams& d) -> double {
            if (xi == 0.0) {
              throw SingularityError("Drude permittivity is singular at xi = 0; use the "
                                     "zero-frequency reflection path");
            }
            return d.omega_p * d.omega_p / (xi * (xi + d.gamma));
          },
          [xi](const WallModel::OscillatorParams& o) -> double {
            const double r = xi / o.omega;
            return (o.eps0 - 1.0) / (1.0 + r * r);
          },
          [xi](const WallModel::TabulatedParams& t) -> double {
            if (xi < t.xi_min || xi > t.xi_max) {
              throw DomainError("tabulated permittivity requested outside its validity window");
            }
            if (xi == 0.0 && t.tail == LowFrequencyTail::Dielectric) {
              return t.eps0 - 1.0;
            }
            return kramers_kronig(*t.table, xi, t.tail) - 1.0;
          },
      },
      model.params());
}

double permittivity_at(const WallModel& model, double xi) { return 1.0 + permittivity_excess(model, xi); }

ReflectionPair fresnel(double eps_excess, double zeta, double y) {
  const double eps = 1.0 + eps_excess;
  const double p = zeta * zeta * eps_excess; // ζ²(ε − 1)
  const double s = std::sqrt(y * y + p);
  // (εy − s)(εy + s) = (ε − 1)((ε + 1)y² − ζ²) removes the cancellation in εy − s.
  const double ey_s = eps * y + s;
  const double tm = eps_excess * ((eps + 1.0) * y * y - zeta * zeta) / (ey_s * ey_s);
  const double y_s = y + s;
  const double te = -p / (y_s * y_s);
  return {tm, te};
}

ReflectionPair zero_frequency_reflection(const WallModel& model, double y, double omega_c) {
  return std::visit(
      overloaded{
          [](const WallModel::IdealMetalParams&) { return ReflectionPair{1.0, -1.0}; },
          [&](const WallModel::PlasmaParams& p) {
            // ζ²(ε − 1) → (ωp/ω_c)² stays finite, so TE keeps a y dependence.
            const double k2 = (p.omega_p / omega_c) * (p.omega_p / omega_c);
            const double s = std::sqrt(y * y + k2);
            return ReflectionPair{1.0, -k2 / ((y + s) * (y + s))};
          },
          [](const WallModel::DrudeParams&) { return ReflectionPair{1.0, 0.0}; },
          [](const WallModel::OscillatorParams& o) {
            return ReflectionPair{(o.eps0 - 1.0) / (o.eps0 + 1.0), 0.0};
          },
          [](const WallModel::TabulatedParams& t) {
            if (t.tail == LowFrequencyTail::Metal) {
              return ReflectionPair{1.0, 0.0};
            }
            return ReflectionPair{(t.eps0 - 1.0) / (t.eps0 + 1.0), 0.0};
          },
      },
      model.params());
}

ReflectionPair reflection(const WallModel& model, double zeta, double y, double omega_c) {
  if (!(zeta >= 0.0) || !(y >= zeta) || !std::isfinite(y)) {
    throw DomainError("reflection: requires y >= zeta >= 0");
  }
  if (!(omega_c > 0.0)) {
    throw DomainError("reflection: characteristic frequency must be > 0");
  }
  if (zeta == 0.0) {
    return zero_frequency_reflection(model, y, omega_c);
  }
  if (model.kind() == WallKind::IdealMetal) {
    return {1.0, -1.0};
  }
  return fresnel(permittivity_excess(model, omega_c * zeta), zeta, y);
}

} // namespace cpkit
