#include "cpkit/app/registry.hpp"

#include "cpkit/constants.hpp"
#include "cpkit/errors.hpp"

#include <boost/crc.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace cpkit::app {

namespace {

using Params = std::map<std::string, std::string>;

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    out += out.empty() ? n : ", " + n;
  }
  return out;
}

double number(const Params& p, const std::string& section, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) {
    throw ConfigError("[" + section + "] is missing required key '" + key + "'");
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return v;
  } catch (const std::exception&) {
    throw ConfigError("[" + section + "] " + key + " = '" + it->second + "' is not a number");
  }
}

std::optional<double> optional_number(const Params& p, const std::string& section,
                                      const std::string& key) {
  if (p.find(key) == p.end()) {
    return std::nullopt;
  }
  return number(p, section, key);
}

void check_keys(const Params& p, const std::string& section, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : p) {
    if (allowed.count(k) == 0) {
      throw ConfigError("[" + section + "] unknown key '" + k + "'");
    }
  }
}

std::filesystem::path table_path(const Params& p, const std::string& section,
                                 const std::filesystem::path& base_dir) {
  auto it = p.find("table_path");
  if (it == p.end()) {
    throw ConfigError("[" + section + "] needs table_path");
  }
  std::filesystem::path path(it->second);
  return path.is_absolute() ? path : base_dir / path;
}

// Runs a model factory and reports model validation failures as configuration errors.
template <class F>
auto build(const std::string& section, F&& make) {
  try {
    return make();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError("[" + section + "] " + e.what());
  }
}

WallModel make_wall(const std::string& kind, const Params& p, const std::string& section,
                    const std::filesystem::path& base_dir) {
  const auto ev = [&](const std::string& key) {
    return units::ev_to_rad_per_s(number(p, section, key));
  };
  return build(section, [&] {
    if (kind == "ideal") {
      check_keys(p, section, {"kind"});
      return WallModel::ideal_metal();
    }
    if (kind == "plasma") {
      check_keys(p, section, {"kind", "omega_p_eV"});
      return WallModel::plasma(ev("omega_p_eV"));
    }
    if (kind == "drude") {
      check_keys(p, section, {"kind", "omega_p_eV", "gamma_eV"});
      return WallModel::drude(ev("omega_p_eV"), ev("gamma_eV"));
    }
    if (kind == "oscillator") {
      check_keys(p, section, {"kind", "eps0", "omega_osc_eV"});
      return WallModel::dielectric_oscillator(number(p, section, "eps0"), ev("omega_osc_eV"));
    }
    if (kind == "tabulated_metal" || kind == "tabulated_dielectric") {
      check_keys(p, section, {"kind", "table_path", "xi_min_eV", "xi_max_eV"});
      const auto lo = optional_number(p, section, "xi_min_eV");
      const auto hi = optional_number(p, section, "xi_max_eV");
      return WallModel::tabulated(
          OpticalTable::load(table_path(p, section, base_dir)),
          kind == "tabulated_metal" ? LowFrequencyTail::Metal : LowFrequencyTail::Dielectric,
          lo ? units::ev_to_rad_per_s(*lo) : 0.0,
          hi ? units::ev_to_rad_per_s(*hi) : std::numeric_limits<double>::infinity());
    }
    throw ConfigError("[" + section + "] unknown material kind '" + kind +
                      "' (expected ideal, plasma, drude, oscillator, tabulated_metal, "
                      "tabulated_dielectric)");
  });
}

std::vector<PolarizabilitySample> load_polarizability(const std::filesystem::path& path,
                                                      const std::string& section) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("[" + section + "] cannot open polarizability table " + path.string());
  }
  std::vector<PolarizabilitySample> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ss(line);
    double xi_ev = 0.0;
    double alpha_au = 0.0;
    if (!(ss >> xi_ev)) {
      continue;
    }
    std::string extra;
    if (!(ss >> alpha_au) || (ss >> extra)) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": expected two columns 'xi_eV alpha_au'");
    }
    rows.push_back({units::ev_to_rad_per_s(xi_ev), units::au_to_m3(alpha_au)});
  }
  return rows;
}

AtomModel make_atom(const std::string& kind, const Params& p, const std::string& section,
                    const std::filesystem::path& base_dir) {
  return build(section, [&] {
    const double mass = units::u_to_kg(number(p, section, "mass_u"));
    if (kind == "static") {
      check_keys(p, section, {"kind", "alpha0_au", "mass_u"});
      return AtomModel::static_polarizability(units::au_to_m3(number(p, section, "alpha0_au")),
                                              mass);
    }
    if (kind == "oscillator") {
      check_keys(p, section, {"kind", "alpha0_au", "omega0_eV", "mass_u"});
      return AtomModel::single_oscillator(units::au_to_m3(number(p, section, "alpha0_au")),
                                          units::ev_to_rad_per_s(number(p, section, "omega0_eV")),
                                          mass);
    }
    if (kind == "tabulated") {
      check_keys(p, section, {"kind", "table_path", "mass_u"});
      return AtomModel::tabulated(load_polarizability(table_path(p, section, base_dir), section),
                                  mass);
    }
    throw ConfigError("[" + section + "] unknown atom kind '" + kind +
                      "' (expected static, oscillator, tabulated)");
  });
}

std::string kind_of(const Params& p, const std::string& section, const char* fallback) {
  auto it = p.find("kind");
  if (it != p.end()) {
    return it->second;
  }
  if (fallback != nullptr) {
    return fallback;
  }
  throw ConfigError("[" + section + "] needs a kind");
}

void render(std::ostringstream& out, const std::string& section, const Params& p) {
  out << '[' << section << "]\n";
  for (const auto& [k, v] : p) {
    out << k << " = " << v << '\n';
  }
}

} // namespace

Registry Registry::defaults() {
  Registry r;
  std::istringstream ini(R"([material.Au]
kind = plasma
omega_p_eV = 9.0

[material.Au-Drude]
kind = drude
omega_p_eV = 9.0
gamma_eV = 0.035

[material.Si]
kind = oscillator
eps0 = 11.66
omega_osc_eV = 4.34

[material.ideal]
kind = ideal

[atom.He*]
kind = oscillator
alpha0_au = 315.63
omega0_eV = 1.18
mass_u = 4.0026

[phenomenology.Au]
C3_eV_nm3 = 6.4e-3

[phenomenology.Au-Drude]
C3_eV_nm3 = 6.4e-3

[phenomenology.Si]
C4_eV_nm4 = 0.75
l_nm = 136
)");
  r.merge(ini, ".", "<defaults>");
  return r;
}

Registry Registry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path.string());
  }
  Registry r = defaults();
  r.merge(in, path.parent_path(), path.string());
  return r;
}

void Registry::merge(std::istream& ini, const std::filesystem::path& base_dir,
                     std::string_view source) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(ini, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string(source) + ": " + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) {
      throw ConfigError(std::string(source) + ": key '" + section + "' outside any section");
    }
    const auto dot = section.find('.');
    if (dot == std::string::npos || dot + 1 == section.size()) {
      throw ConfigError(std::string(source) + ": section [" + section +
                        "] must be material.<name>, atom.<name> or phenomenology.<name>");
    }
    const std::string family = section.substr(0, dot);
    const std::string name = section.substr(dot + 1);
    Params params;
    for (const auto& [key, value] : body) {
      params[key] = value.data();
    }
    if (family == "material") {
      const auto kind = kind_of(params, section, nullptr);
      materials_.insert_or_assign(
          name, MaterialEntry{name, kind, make_wall(kind, params, section, base_dir), params});
    } else if (family == "atom") {
      const auto kind = kind_of(params, section, "oscillator");
      atoms_.insert_or_assign(
          name, AtomEntry{name, kind, make_atom(kind, params, section, base_dir), params});
    } else if (family == "phenomenology") {
      check_keys(params, section, {"C3_eV_nm3", "C4_eV_nm4", "l_nm"});
      auto& o = overrides_[name];
      if (auto v = optional_number(params, section, "C3_eV_nm3")) {
        o.c3 = units::ev_nm3_to_si(*v);
      }
      if (auto v = optional_number(params, section, "C4_eV_nm4")) {
        o.c4 = units::ev_nm4_to_si(*v);
      }
      if (auto v = optional_number(params, section, "l_nm")) {
        o.l = *v * constants::nm;
      }
      for (const auto& [k, v] : params) {
        override_text_[name][k] = v;
      }
      for (const auto* v : {&o.c3, &o.c4, &o.l}) {
        if (*v && !(**v > 0.0)) {
          throw ConfigError("[" + section + "] coefficients must be positive");
        }
      }
    } else {
      throw ConfigError(std::string(source) + ": unknown section family '" + family + "'");
    }
  }
}

const MaterialEntry& Registry::material(const std::string& name) const {
  auto it = materials_.find(name);
  if (it == materials_.end()) {
    throw ConfigError("unknown material '" + name + "'; known: " + join(material_names()));
  }
  return it->second;
}

const AtomEntry& Registry::atom(const std::string& name) const {
  auto it = atoms_.find(name);
  if (it == atoms_.end()) {
    throw ConfigError("unknown atom '" + name + "'; known: " + join(atom_names()));
  }
  return it->second;
}

CoefficientOverrides Registry::overrides(const std::string& material) const {
  auto it = overrides_.find(material);
  return it == overrides_.end() ? CoefficientOverrides{} : it->second;
}

std::vector<std::string> Registry::material_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : materials_) {
    out.push_back(k);
  }
  return out;
}

std::vector<std::string> Registry::atom_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : atoms_) {
    out.push_back(k);
  }
  return out;
}

std::string Registry::canonical() const {
  std::ostringstream out;
  for (const auto& [name, m] : materials_) {
    render(out, "material." + name, m.parameters);
  }
  for (const auto& [name, a] : atoms_) {
    render(out, "atom." + name, a.parameters);
  }
  for (const auto& [name, p] : override_text_) {
    render(out, "phenomenology." + name, p);
  }
  return out.str();
}

std::string Registry::hash() const {
  const auto text = canonical();
  boost::crc_32_type crc;
  crc.process_bytes(text.data(), text.size());
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
  return buf;
}

std::optional<std::filesystem::path> resolve_config_path(const std::string& flag_value) {
  if (!flag_value.empty()) {
    return std::filesystem::path(flag_value);
  }
  if (const char* env = std::getenv("CPKIT_CONFIG"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

Registry load_registry(const std::optional<std::filesystem::path>& path) {
  return path ? Registry::load(*path) : Registry::defaults();
}

} // namespace cpkit::app
