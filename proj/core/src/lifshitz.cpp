#include "cpkit/lifshitz.hpp"

#include "cpkit/asymptotics.hpp"
#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace cpkit {

namespace {

using constants::pi;

// Beyond this ζ the factor e^{−ζ} underflows and a term is exactly zero.
constexpr double kZetaUnderflow = 700.0;

constexpr double kEntropyTruncationRelTol = 1e-15;

bool closed_form_applies(const WallModel& wall, const AtomModel& atom, const LifshitzOptions& o) {
  return o.use_closed_forms && wall.kind() == WallKind::IdealMetal &&
         atom.kind() == AtomKind::Static;
}

void check_options(const LifshitzOptions& o) {
  if (!(o.inner_rel_tol > 0.0) || !(o.outer_rel_tol > 0.0) || !(o.truncation_rel_tol > 0.0)) {
    throw DomainError("tolerances must be positive");
  }
  if (o.truncation_run < 1) {
    throw DomainError("truncation_run must be >= 1");
  }
  if (!(o.y_window > 0.0)) {
    throw DomainError("y_window must be positive");
  }
}

// ∫_Y^∞ y^{2+p} e^{−y} dy · e^{ζ} for Y = ζ + L: bounds the part of the
// y-integral cut off by the finite window, given |r_TM|, |r_TE| ≤ 1.
double window_tail_bound(double zeta, double window, int power) {
  const double Y = zeta + window;
  const double poly = power == 0 ? Y * Y + 2.0 * Y + 2.0
                                 : Y * Y * Y + 3.0 * Y * Y + 6.0 * Y + 6.0;
  return 4.0 * std::exp(-window) * poly;
}

struct Term {
  double value = 0.0; // dimensionless, e^{−ζ} included
  double error = 0.0;
};

/**
 * α(iω_c ζ) ∫_ζ^∞ y^p e^{−y} {2y² r_TM − ζ²[r_TM + r_TE]} dy with α in m³.
 *
 * The integral is taken over t = y − ζ ∈ [0, L] with e^{−ζ} factored out, so
 * large ζ neither underflows inside the quadrature nor loses relative accuracy.
 */
Term kernel_integral(const WallModel& wall, const AtomModel& atom, double zeta, double omega_c,
                     int power, const LifshitzOptions& o) {
  if (zeta > kZetaUnderflow) {
    return {};
  }
  const double alpha = polarizability_at(atom, omega_c * zeta);
  const double z2 = zeta * zeta;
  const auto braces = [z2](const ReflectionPair& r, double y) {
    return 2.0 * y * y * r.tm - z2 * (r.tm + r.te);
  };

  detail::QuadResult q;
  if (zeta == 0.0) {
    auto integrand = [&](double t) {
      auto r = zero_frequency_reflection(wall, t, omega_c);
      if (o.zero_frequency_te_override) {
        r.te = *o.zero_frequency_te_override;
      }
      return std::exp(-t) * (power == 1 ? t : 1.0) * braces(r, t);
    };
    q = detail::integrate(integrand, 0.0, o.y_window, o.inner_rel_tol, "Matsubara term l = 0");
  } else if (wall.kind() == WallKind::IdealMetal) {
    auto integrand = [&](double t) {
      const double y = zeta + t;
      return std::exp(-t) * (power == 1 ? y : 1.0) * braces(ReflectionPair{1.0, -1.0}, y);
    };
    q = detail::integrate(integrand, 0.0, o.y_window, o.inner_rel_tol, "Matsubara term");
  } else {
    const double excess = permittivity_excess(wall, omega_c * zeta);
    auto integrand = [&](double t) {
      const double y = zeta + t;
      return std::exp(-t) * (power == 1 ? y : 1.0) * braces(fresnel(excess, zeta, y), y);
    };
    q = detail::integrate(integrand, 0.0, o.y_window, o.inner_rel_tol, "Matsubara term");
  }
  const double scale = alpha * std::exp(-zeta);
  const double error = q.error + window_tail_bound(zeta, o.y_window, power);
  return {scale * q.value, scale * error};
}

struct SumResult {
  double sum = 0.0;
  double quadrature_error = 0.0;
  double truncation_error = 0.0;
  std::size_t terms = 0;
};

Term weighted_term(const Scene& s, const WallModel& wall, const AtomModel& atom, std::size_t l,
                   int power, const LifshitzOptions& o) {
  Term t = kernel_integral(wall, atom, s.zeta(l), s.characteristic_frequency(), power, o);
  if (l == 0) {
    t.value *= 0.5;
    t.error *= 0.5;
  }
  return t;
}

// Evaluates terms [first, first + count) on up to `threads` workers. Each term
// is a pure function of l, so the values do not depend on the worker count.
std::vector<Term> evaluate_block(const Scene& s, const WallModel& wall, const AtomModel& atom,
                                 std::size_t first, std::size_t count, int power,
                                 const LifshitzOptions& o, unsigned threads) {
  std::vector<Term> out(count);
  if (threads <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = weighted_term(s, wall, atom, first + i, power, o);
    }
    return out;
  }
  std::vector<std::exception_ptr> failures(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += threads) {
          out[i] = weighted_term(s, wall, atom, first + i, power, o);
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) {
    t.join();
  }
  for (auto& f : failures) {
    if (f) {
      std::rethrow_exception(f);
    }
  }
  return out;
}

/// Σ′_l α_l ∫ y^p e^{−y}{…} dy, dimensionless apart from α (m³).
SumResult matsubara_sum(const Scene& s, const WallModel& wall, const AtomModel& atom, int power,
                        const LifshitzOptions& o) {
  check_options(o);
  const double tau = s.tau();
  const auto l_max = static_cast<std::size_t>(std::max(1e5, 200.0 / tau));
  const unsigned threads = std::max(1u, o.threads);
  const std::size_t block = threads == 1 ? 1 : 4 * static_cast<std::size_t>(threads);

  SumResult r;
  int quiet = 0;
  double last = 0.0;
  std::size_t l = 0;
  while (true) {
    if (l >= l_max) {
      throw NumericalError("Matsubara sum did not converge within " + std::to_string(l_max) +
                               " terms",
                           std::fabs(last));
    }
    const std::size_t count = std::min(block, l_max - l);
    const auto terms = evaluate_block(s, wall, atom, l, count, power, o, threads);
    for (const auto& t : terms) {
      // Fixed ascending-l reduction keeps the result bit-identical for any worker count.
      r.sum += t.value;
      r.quadrature_error += t.error;
      ++r.terms;
      ++l;
      last = t.value;
      quiet = std::fabs(t.value) < o.truncation_rel_tol * std::fabs(r.sum) ? quiet + 1 : 0;
      if (quiet >= o.truncation_run) {
        // Remaining terms decay at least like e^{−τ l}.
        const double q = std::exp(-tau);
        r.truncation_error = std::fabs(last) * q / -std::expm1(-tau);
        return r;
      }
    }
  }
}

/// ∫₀^∞ dζ ∫_ζ^∞ dy y^p h(ζ, y), with ζ = u/(1 − u).
detail::QuadResult zero_temperature_integral(double a, const WallModel& wall,
                                             const AtomModel& atom, int power,
                                             const LifshitzOptions& o) {
  check_options(o);
  const double omega_c = constants::c / (2.0 * a);
  double worst_inner = 0.0;
  auto outer = [&](double u) {
    const double zeta = u / (1.0 - u);
    const Term t = kernel_integral(wall, atom, zeta, omega_c, power, o);
    if (t.value != 0.0) {
      worst_inner = std::max(worst_inner, t.error / std::fabs(t.value));
    }
    const double jac = 1.0 / ((1.0 - u) * (1.0 - u));
    return -t.value * jac;
  };
  auto q = detail::integrate(outer, 0.0, 1.0, o.outer_rel_tol, "zero-temperature integral");
  q.error += std::min(worst_inner, 1.0) * std::fabs(q.value);
  return q;
}

void check_temperature_positive(const Scene& s, const char* what) {
  if (!(s.temperature() > 0.0)) {
    throw DomainError(std::string(what) + " requires T > 0");
  }
}

} // namespace

Scene::Scene(double a, double temperature) : a_(a), temperature_(temperature) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("separation must be positive and finite");
  }
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be finite and >= 0");
  }
  omega_c_ = constants::c / (2.0 * a);
  tau_ = tau_of(a, temperature);
}

double Scene::effective_temperature() const noexcept {
  return constants::hbar * omega_c_ / constants::k_B;
}

Evaluation zero_temperature_energy(double a, const WallModel& wall, const AtomModel& atom,
                                   const LifshitzOptions& options) {
  const Scene scene(a, 0.0);
  Evaluation e;
  if (closed_form_applies(wall, atom, options)) {
    e.value = casimir_polder_energy(a, atom.static_polarizability());
    e.diagnostics.closed_form = true;
    return e;
  }
  const auto q = zero_temperature_integral(a, wall, atom, 0, options);
  const double prefactor = constants::hbar * constants::c / (32.0 * pi * std::pow(a, 4));
  e.value = prefactor * q.value;
  e.diagnostics.quadrature_error = prefactor * q.error;
  return e;
}

Evaluation zero_temperature_force(double a, const WallModel& wall, const AtomModel& atom,
                                  const LifshitzOptions& options) {
  const Scene scene(a, 0.0);
  Evaluation e;
  if (closed_form_applies(wall, atom, options)) {
    e.value = casimir_polder_force(a, atom.static_polarizability());
    e.diagnostics.closed_form = true;
    return e;
  }
  const auto q = zero_temperature_integral(a, wall, atom, 1, options);
  const double prefactor = constants::hbar * constants::c / (32.0 * pi * std::pow(a, 5));
  e.value = prefactor * q.value;
  e.diagnostics.quadrature_error = prefactor * q.error;
  return e;
}

Evaluation free_energy(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                       const LifshitzOptions& options) {
  const double a = scene.separation();
  if (scene.temperature() == 0.0) {
    return zero_temperature_energy(a, wall, atom, options);
  }
  Evaluation e;
  if (closed_form_applies(wall, atom, options)) {
    e.value = casimir_polder_energy(a, atom.static_polarizability()) * eta(scene.tau());
    e.diagnostics.closed_form = true;
    return e;
  }
  const auto r = matsubara_sum(scene, wall, atom, 0, options);
  const double prefactor = -constants::k_B * scene.temperature() / (8.0 * std::pow(a, 3));
  e.value = prefactor * r.sum;
  e.diagnostics.terms = r.terms;
  e.diagnostics.quadrature_error = std::fabs(prefactor) * r.quadrature_error;
  e.diagnostics.truncation_error = std::fabs(prefactor) * r.truncation_error;
  return e;
}

Evaluation force(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                 const LifshitzOptions& options) {
  const double a = scene.separation();
  if (scene.temperature() == 0.0) {
    return zero_temperature_force(a, wall, atom, options);
  }
  Evaluation e;
  if (closed_form_applies(wall, atom, options)) {
    e.value = casimir_polder_force(a, atom.static_polarizability()) * kappa(scene.tau());
    e.diagnostics.closed_form = true;
    return e;
  }
  const auto r = matsubara_sum(scene, wall, atom, 1, options);
  const double prefactor = -constants::k_B * scene.temperature() / (8.0 * std::pow(a, 4));
  e.value = prefactor * r.sum;
  e.diagnostics.terms = r.terms;
  e.diagnostics.quadrature_error = std::fabs(prefactor) * r.quadrature_error;
  e.diagnostics.truncation_error = std::fabs(prefactor) * r.truncation_error;
  return e;
}

Evaluation entropy(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                   const LifshitzOptions& options) {
  check_temperature_positive(scene, "entropy");
  const double a = scene.separation();
  const double T = scene.temperature();
  Evaluation e;
  if (closed_form_applies(wall, atom, options)) {
    e.value = 1.5 * constants::k_B / std::pow(a, 3) * atom.static_polarizability() *
              sigma(scene.tau());
    e.diagnostics.closed_form = true;
    return e;
  }
  const double h = std::min(std::max(1e-3 * T, 1e-3), 0.5 * T);
  // The stencil differences are ~h/T times smaller than 𝓕 itself, and a sum
  // truncated at a T-dependent l jumps by the truncation tolerance. Summing
  // to near round-off keeps those jumps out of the difference.
  LifshitzOptions tight = options;
  tight.truncation_rel_tol = std::min(options.truncation_rel_tol, kEntropyTruncationRelTol);
  double quad = 0.0;
  double trunc = 0.0;
  std::size_t terms = 0;
  auto f_at = [&](double t) {
    const auto r = free_energy(Scene(a, t), wall, atom, tight);
    quad += r.diagnostics.quadrature_error;
    trunc += r.diagnostics.truncation_error;
    terms = std::max(terms, r.diagnostics.terms);
    return r.value;
  };
  const double s_h = -(f_at(T + h) - f_at(T - h)) / (2.0 * h);
  const double s_h2 = -(f_at(T + 0.5 * h) - f_at(T - 0.5 * h)) / h;
  e.value = (4.0 * s_h2 - s_h) / 3.0;
  e.diagnostics.entropy_stencil = {s_h, s_h2};
  e.diagnostics.terms = terms;
  // Errors of the four evaluations propagate through weights of order 1/h.
  e.diagnostics.quadrature_error = quad / h;
  e.diagnostics.truncation_error = trunc / h;
  return e;
}

InteractionResult evaluate(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                           const LifshitzOptions& options) {
  InteractionResult r;
  const auto f = free_energy(scene, wall, atom, options);
  const auto F = force(scene, wall, atom, options);
  r.free_energy = f.value;
  r.free_energy_diagnostics = f.diagnostics;
  r.force = F.value;
  r.force_diagnostics = F.diagnostics;
  if (scene.temperature() > 0.0) {
    const auto S = entropy(scene, wall, atom, options);
    r.entropy = S.value;
    r.entropy_diagnostics = S.diagnostics;
  }
  return r;
}

double matsubara_term(const Scene& scene, const WallModel& wall, const AtomModel& atom,
                      long long l, const LifshitzOptions& options) {
  if (l < 0) {
    throw DomainError("Matsubara index must be >= 0");
  }
  check_temperature_positive(scene, "matsubara_term");
  check_options(options);
  const Term t = weighted_term(scene, wall, atom, static_cast<std::size_t>(l), 0, options);
  const double prefactor =
      -constants::k_B * scene.temperature() / (8.0 * std::pow(scene.separation(), 3));
  return prefactor * t.value;
}

} // namespace cpkit
