#pragma once

// Named materials, atoms and dispersion-coefficient overrides.
//
// The registry starts from built-in defaults and is overlaid by an optional
// INI file. Sections:
//
//   [material.<name>]   kind = ideal | plasma | drude | oscillator
//                              | tabulated_metal | tabulated_dielectric
//                       omega_p_eV, gamma_eV, eps0, omega_osc_eV,
//                       table_path (two columns: omega_rad_s im_eps),
//                       xi_min_eV, xi_max_eV (tabulated validity window)
//   [atom.<name>]       kind = static | oscillator | tabulated
//                       alpha0_au, omega0_eV, mass_u,
//                       table_path (two columns: xi_eV alpha_au)
//   [phenomenology.<material>]  C3_eV_nm3, C4_eV_nm4, l_nm
//
// Relative table paths are resolved against the directory of the INI file.

#include "cpkit/atoms.hpp"
#include "cpkit/materials.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cpkit::app {

struct MaterialEntry {
  std::string name;
  std::string kind; ///< the configuration keyword
  WallModel wall;
  std::map<std::string, std::string> parameters; ///< as written, for provenance headers
};

struct AtomEntry {
  std::string name;
  std::string kind;
  AtomModel atom;
  std::map<std::string, std::string> parameters;
};

/// Configured dispersion coefficients for one material, in SI units.
struct CoefficientOverrides {
  std::optional<double> c3; ///< J·m³
  std::optional<double> c4; ///< J·m⁴
  std::optional<double> l;  ///< m
};

class Registry {
public:
  /// Au (plasma, 9.0 eV), Au-Drude (γ = 0.035 eV), Si (oscillator, ε(0) = 11.66,
  /// 4.34 eV), ideal, He*; phenomenology overrides for Au and Si.
  static Registry defaults();

  /// Defaults overlaid with the INI file at `path`. Throws ConfigError.
  static Registry load(const std::filesystem::path& path);

  /// Overlays INI text onto this registry; `base_dir` resolves table paths.
  void merge(std::istream& ini, const std::filesystem::path& base_dir, std::string_view source);

  const MaterialEntry& material(const std::string& name) const;
  const AtomEntry& atom(const std::string& name) const;
  CoefficientOverrides overrides(const std::string& material) const;

  std::vector<std::string> material_names() const;
  std::vector<std::string> atom_names() const;

  /// Deterministic text rendering of every entry; the config hash is taken over it.
  std::string canonical() const;
  /// CRC-32 of canonical(), as 8 lowercase hex digits.
  std::string hash() const;

private:
  std::map<std::string, MaterialEntry> materials_;
  std::map<std::string, AtomEntry> atoms_;
  std::map<std::string, CoefficientOverrides> overrides_;
  std::map<std::string, std::map<std::string, std::string>> override_text_;
};

/// Path from --config, else $CPKIT_CONFIG, else none (defaults only).
std::optional<std::filesystem::path> resolve_config_path(const std::string& flag_value);

/// Registry::load(path) or Registry::defaults().
Registry load_registry(const std::optional<std::filesystem::path>& path);

} // namespace cpkit::app
