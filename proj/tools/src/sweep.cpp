#include "cpkit/app/sweep.hpp"

#include "cpkit/app/coefficients.hpp"
#include "cpkit/asymptotics.hpp"
#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"
#include "cpkit/phenomenology.hpp"
#include "cpkit/version.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace cpkit::app {

namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 7> kQuantityNames{{
    {Quantity::FreeEnergy, "free_energy"},
    {Quantity::Force, "force"},
    {Quantity::Entropy, "entropy"},
    {Quantity::A4E, "a4E"},
    {Quantity::A4FScaled, "a4F_scaled"},
    {Quantity::Sigma, "sigma"},
    {Quantity::DeltaE, "deltaE"},
}};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string describe(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    out += (out.empty() ? "" : ", ") + k + "=" + v;
  }
  return out;
}

struct Context {
  const SweepSpec& spec;
  const WallModel* wall = nullptr;
  const AtomModel* atom = nullptr;
  std::optional<PhenomenologicalPotential> potential;
};

void fill(SweepRow& row, const Evaluation& e) {
  row.value = e.value;
  row.terms = e.diagnostics.terms;
  row.quadrature_error = e.diagnostics.quadrature_error;
  row.truncation_error = e.diagnostics.truncation_error;
}

SweepRow evaluate_point(const Context& ctx, double x) {
  SweepRow row;
  row.x = x;
  const auto& spec = ctx.spec;
  if (spec.quantity == Quantity::Sigma) {
    row.value = sigma(x);
    row.aux = eta(x);
    return row;
  }
  const Scene scene(x, spec.temperature);
  const double ev_nm4 = units::ev_nm4_to_si(1.0);
  switch (spec.quantity) {
  case Quantity::FreeEnergy:
    fill(row, free_energy(scene, *ctx.wall, *ctx.atom, spec.options));
    row.aux = scene.tau();
    break;
  case Quantity::Force:
    fill(row, force(scene, *ctx.wall, *ctx.atom, spec.options));
    row.aux = scene.tau();
    break;
  case Quantity::Entropy:
    fill(row, entropy(scene, *ctx.wall, *ctx.atom, spec.options));
    row.aux = scene.tau();
    break;
  case Quantity::A4E: {
    const auto e = free_energy(scene, *ctx.wall, *ctx.atom, spec.options);
    fill(row, e);
    const double a4 = std::pow(x, 4) / ev_nm4;
    row.value = a4 * std::fabs(e.value);
    row.aux = e.value;
    row.quadrature_error *= a4;
    row.truncation_error *= a4;
    break;
  }
  case Quantity::A4FScaled: {
    const auto f = force(scene, *ctx.wall, *ctx.atom, spec.options);
    fill(row, f);
    const double a5 = std::pow(x, 5) / (4.0 * ev_nm4);
    row.value = a5 * std::fabs(f.value);
    row.aux = f.value;
    row.quadrature_error *= a5;
    row.truncation_error *= a5;
    break;
  }
  case Quantity::DeltaE: {
    const auto e = free_energy(scene, *ctx.wall, *ctx.atom, spec.options);
    fill(row, e);
    const double e_ph = phenomenological_energy(*ctx.potential, x);
    row.value = 100.0 * relative_difference(e.value, e_ph);
    row.aux = e_ph;
    const double scale = 100.0 * std::fabs(e_ph / (e.value * e.value));
    row.quadrature_error *= scale;
    row.truncation_error *= scale;
    break;
  }
  case Quantity::Sigma:
    break;
  }
  return row;
}

SweepRow guarded(const Context& ctx, double x) {
  try {
    return evaluate_point(ctx, x);
  } catch (const NumericalError& e) {
    SweepRow r;
    r.x = x;
    r.value = std::nan("");
    r.quadrature_error = e.last_error_estimate();
    r.status = std::string("numerical: ") + e.what();
    return r;
  } catch (const Error& e) {
    SweepRow r;
    r.x = x;
    r.value = std::nan("");
    r.status = std::string("error: ") + e.what();
    return r;
  }
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

} // namespace

std::string_view to_string(Quantity q) {
  for (const auto& [k, v] : kQuantityNames) {
    if (k == q) {
      return v;
    }
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view name) {
  std::string known;
  for (const auto& [k, v] : kQuantityNames) {
    if (v == name) {
      return k;
    }
    known += (known.empty() ? "" : ", ") + std::string(v);
  }
  throw ConfigError("unknown quantity '" + std::string(name) + "'; known: " + known);
}

std::vector<double> make_grid(const SweepSpec& spec) {
  if (spec.count < 2) {
    throw ConfigError("a sweep needs at least 2 points");
  }
  if (!(spec.start > 0.0) || !(spec.stop > spec.start) || !std::isfinite(spec.stop)) {
    throw ConfigError("sweep range must satisfy 0 < start < stop");
  }
  std::vector<double> grid(spec.count);
  const double n = static_cast<double>(spec.count - 1);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double t = static_cast<double>(i) / n;
    grid[i] = spec.log_spacing ? spec.start * std::pow(spec.stop / spec.start, t)
                               : spec.start + (spec.stop - spec.start) * t;
  }
  grid.back() = spec.stop;
  return grid;
}

SweepResult run_sweep(const SweepSpec& spec, const Registry& registry) {
  const auto grid = make_grid(spec);
  if (!(spec.temperature >= 0.0) || !std::isfinite(spec.temperature)) {
    throw ConfigError("temperature must be finite and >= 0");
  }
  if (spec.quantity == Quantity::Entropy && spec.temperature == 0.0) {
    throw ConfigError("entropy sweeps need --temperature-K > 0");
  }

  SweepResult result;
  auto& h = result.header;
  h.push_back("cpkit " + std::string(kVersion));
  h.push_back("config_hash crc32:" + registry.hash());
  h.push_back("quantity " + std::string(to_string(spec.quantity)));

  Context ctx{spec, nullptr, nullptr, std::nullopt};
  if (spec.quantity != Quantity::Sigma) {
    const auto& m = registry.material(spec.material);
    const auto& a = registry.atom(spec.atom);
    ctx.wall = &m.wall;
    ctx.atom = &a.atom;
    h.push_back("material " + m.name + " (" + describe(m.parameters) + ")");
    h.push_back("atom " + a.name + " (" + describe(a.parameters) + ")");
    h.push_back("temperature_K " + num(spec.temperature));
    if (spec.quantity == Quantity::DeltaE) {
      const auto c = resolve_coefficients(registry, spec.material, spec.atom);
      const auto& e = c.effective;
      ctx.potential.emplace(e);
      h.push_back("C3_eV_nm3 " + num(units::si_to_ev_nm3(e.c3())) + " " +
                  std::string(to_string(e.c3_provenance())));
      h.push_back("C4_eV_nm4 " + num(units::si_to_ev_nm4(e.c4())) + " " +
                  std::string(to_string(e.c4_provenance())));
      h.push_back("l_nm " + num(e.l() / constants::nm) + " " +
                  std::string(to_string(e.l_provenance())));
      h.push_back(std::string("quantitative ") + (c.quantitative ? "yes" : "no"));
    }
  }
  h.push_back("grid " + std::string(spec.log_spacing ? "log" : "linear") + " " + num(spec.start) +
              " " + num(spec.stop) + " " + std::to_string(spec.count));
  const auto& o = spec.options;
  h.push_back("tolerances inner_rel " + num(o.inner_rel_tol) + " outer_rel " +
              num(o.outer_rel_tol) + " truncation_rel " + num(o.truncation_rel_tol) + " run " +
              std::to_string(o.truncation_run) + " y_window " + num(o.y_window) +
              " closed_forms " + (o.use_closed_forms ? "on" : "off"));
  switch (spec.quantity) {
  case Quantity::FreeEnergy:
    h.push_back("columns x=a[m] value=F[J] aux=tau");
    break;
  case Quantity::Force:
    h.push_back("columns x=a[m] value=force[N] aux=tau");
    break;
  case Quantity::Entropy:
    h.push_back("columns x=a[m] value=S[J/K] aux=tau");
    break;
  case Quantity::A4E:
    h.push_back("columns x=a[m] value=a^4|F|[eV nm^4] aux=F[J]");
    break;
  case Quantity::A4FScaled:
    h.push_back("columns x=a[m] value=a^5|force|/4[eV nm^4] aux=force[N]");
    break;
  case Quantity::Sigma:
    h.push_back("columns x=tau value=sigma aux=eta");
    break;
  case Quantity::DeltaE:
    h.push_back("columns x=a[m] value=deltaE[%] aux=E_ph[J]");
    break;
  }

  result.rows.resize(grid.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, grid.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      result.rows[i] = guarded(ctx, grid[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
          result.rows[i] = guarded(ctx, grid[i]);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  for (const auto& r : result.rows) {
    result.failures += r.status == "ok" ? 0 : 1;
  }
  return result;
}

void write_table(std::ostream& out, const SweepResult& result) {
  for (const auto& line : result.header) {
    out << "# " << line << '\n';
  }
  out << "x\tvalue\taux\tterms\tquad_err\ttrunc_err\tstatus\n";
  for (const auto& r : result.rows) {
    out << num(r.x) << '\t' << num(r.value) << '\t' << num(r.aux) << '\t' << r.terms << '\t'
        << num(r.quadrature_error) << '\t' << num(r.truncation_error) << '\t'
        << sanitize(r.status) << '\n';
  }
}

} // namespace cpkit::app
