// cpkit: command-line front end for the atom-wall interaction toolkit.
//
//   cpkit sweep --quantity a4E --material Au --atom He* --amin 20e-9 --amax 1e-5 --log
//   cpkit coeffs --material Si
//   cpkit selfcheck
//   cpkit materials
//
// Exit status: 0 success, 2 configuration error, 3 numerical failure.

#include "cpkit/app/coefficients.hpp"
#include "cpkit/app/registry.hpp"
#include "cpkit/app/selfcheck.hpp"
#include "cpkit/app/sweep.hpp"
#include "cpkit/errors.hpp"
#include "cpkit/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int list_materials(const cpkit::app::Registry& registry) {
  for (const auto& name : registry.material_names()) {
    const auto& m = registry.material(name);
    std::cout << "material " << name << "  kind=" << m.kind;
    for (const auto& [k, v] : m.parameters) {
      if (k != "kind") {
        std::cout << "  " << k << "=" << v;
      }
    }
    std::cout << '\n';
  }
  for (const auto& name : registry.atom_names()) {
    const auto& a = registry.atom(name);
    std::cout << "atom " << name << "  kind=" << a.kind;
    for (const auto& [k, v] : a.parameters) {
      if (k != "kind") {
        std::cout << "  " << k << "=" << v;
      }
    }
    std::cout << '\n';
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir-Polder atom-wall interaction toolkit"};
  app.set_version_flag("--version", std::string("cpkit ") + cpkit::kVersion);
  app.require_subcommand(1);

  std::string config;
  app.add_option("--config", config, "INI registry overlay (default: $CPKIT_CONFIG)");

  cpkit::app::SweepSpec spec;
  std::string quantity = "a4E";
  std::string out_path = "-";
  auto* sweep = app.add_subcommand("sweep", "Tabulate a quantity over a separation or tau grid");
  sweep->add_option("--quantity", quantity,
                    "free_energy | force | entropy | a4E | a4F_scaled | sigma | deltaE")
      ->capture_default_str();
  sweep->add_option("--material", spec.material, "Wall material name")->capture_default_str();
  sweep->add_option("--atom", spec.atom, "Atom name")->capture_default_str();
  sweep->add_option("--temperature-K", spec.temperature, "Temperature in K")->capture_default_str();
  sweep->add_option("--amin", spec.start, "Grid start: separation in m (tau for sigma)")
      ->capture_default_str();
  sweep->add_option("--amax", spec.stop, "Grid end: separation in m (tau for sigma)")
      ->capture_default_str();
  sweep->add_option("--points", spec.count, "Number of grid points")->capture_default_str();
  sweep->add_flag("--log", spec.log_spacing, "Logarithmic grid spacing");
  sweep->add_option("--out", out_path, "Output file ('-' for stdout)")->capture_default_str();
  sweep->add_option("--threads", spec.threads, "Worker threads over grid points")
      ->capture_default_str();
  sweep->add_option("--config", config, "INI registry overlay");

  std::string coeff_material = "Au";
  std::string coeff_atom = "He*";
  auto* coeffs = app.add_subcommand("coeffs", "Report C3, C4, l and rho with provenance");
  coeffs->add_option("--material", coeff_material, "Wall material name")->capture_default_str();
  coeffs->add_option("--atom", coeff_atom, "Atom name")->capture_default_str();
  coeffs->add_option("--config", config, "INI registry overlay");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the oracle suite");
  auto* materials = app.add_subcommand("materials", "List registered materials and atoms");
  materials->add_option("--config", config, "INI registry overlay");

  CLI11_PARSE(app, argc, argv);

  try {
    if (selfcheck->parsed()) {
      return cpkit::app::print_checks(std::cout, cpkit::app::self_check()) ? 0 : kExitNumerical;
    }
    const auto registry = cpkit::app::load_registry(cpkit::app::resolve_config_path(config));
    if (materials->parsed()) {
      return list_materials(registry);
    }
    if (coeffs->parsed()) {
      cpkit::app::print_report(std::cout,
                               cpkit::app::resolve_coefficients(registry, coeff_material, coeff_atom));
      return 0;
    }
    spec.quantity = cpkit::app::parse_quantity(quantity);
    const auto result = cpkit::app::run_sweep(spec, registry);
    if (out_path == "-") {
      cpkit::app::write_table(std::cout, result);
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        throw cpkit::ConfigError("cannot open output file " + out_path);
      }
      cpkit::app::write_table(out, result);
    }
    if (result.failures > 0) {
      std::cerr << "cpkit: " << result.failures << " grid point(s) failed; see the status column\n";
      return kExitNumerical;
    }
    return 0;
  } catch (const cpkit::ConfigError& e) {
    std::cerr << "cpkit: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const cpkit::Error& e) {
    std::cerr << "cpkit: " << e.what() << '\n';
    return kExitNumerical;
  }
}
