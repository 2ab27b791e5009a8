#include "mcfet/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mcfet/constants.hpp"

namespace mcfet {

namespace {

struct UnitAlt {
    const char* suffix;
    double factor;  // multiply parsed value by this to get SI
};

constexpr UnitAlt kLengthAlts[] = {
    {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}, {nullptr, 0}};
constexpr UnitAlt kMobilityAlts[] = {{"m^2/(V*s)", 1.0}, {"cm2/Vs", 1e-4}, {nullptr, 0}};
constexpr UnitAlt kTrapAlts[] = {{"1/(J*m^3)", 1.0}, {"1/eVcm3", per_eV_cm3}, {nullptr, 0}};
constexpr UnitAlt kDensityAlts[] = {{"1/m^3", 1.0}, {"1/cm3", 1e6}, {nullptr, 0}};
constexpr UnitAlt kPermittivityAlts[] = {{"F/m", 1.0}, {"eps0", 8.8541878128e-12}, {nullptr, 0}};
constexpr UnitAlt kConcentrationAlts[] = {{"mol/m^3", 1.0}, {"mM", 1.0}, {nullptr, 0}};

struct KeyDef {
    const char* key;
    const char* unit;     // canonical SI unit, shown in the emitted template
    const char* comment;  // short description
    double (*get)(const SystemParams&);
    void (*set)(SystemParams&, double);
    const UnitAlt* alts;  // accepted suffixes; nullptr = bare canonical only
};

#define FIELD(path) \
    [](const SystemParams& p) { return p.path; }, [](SystemParams& p, double v) { p.path = v; }

const KeyDef kKeys[] = {
    {"channel.d", "m", "TX-RX distance", FIELD(channel.d), kLengthAlts},
    {"channel.D", "m^2/s", "diffusion coefficient", FIELD(channel.D), nullptr},
    {"channel.Ntx_min", "count", "minimum released molecules", FIELD(channel.Ntx_min), nullptr},
    {"channel.Ntx_max", "count", "maximum released molecules", FIELD(channel.Ntx_max), nullptr},
    {"receptor.k1", "m^3/s", "binding rate", FIELD(receptor.k1), nullptr},
    {"receptor.k_m1", "1/s", "unbinding rate", FIELD(receptor.k_m1), nullptr},
    {"receptor.rho_SR", "1/m^2", "receptor surface density", FIELD(receptor.rho_SR), nullptr},
    {"receptor.l_SR", "m", "receptor length", FIELD(receptor.l_SR), kLengthAlts},
    {"receptor.Ne", "count", "electrons per bound ligand", FIELD(receptor.Ne), nullptr},
    {"transducer.r_R", "m", "SiNW radius", FIELD(transducer.r_R), kLengthAlts},
    {"transducer.l_R", "m", "SiNW length", FIELD(transducer.l_R), kLengthAlts},
    {"transducer.t_ox", "m", "oxide thickness", FIELD(transducer.t_ox), kLengthAlts},
    {"transducer.eps_ox", "F/m", "oxide permittivity", FIELD(transducer.eps_ox), kPermittivityAlts},
    {"transducer.eps_Si", "F/m", "SiNW permittivity", FIELD(transducer.eps_Si), kPermittivityAlts},
    {"transducer.eps_M", "F/m", "electrolyte permittivity", FIELD(transducer.eps_M), kPermittivityAlts},
    {"transducer.c_ion", "mol/m^3", "ionic concentration", FIELD(transducer.c_ion), kConcentrationAlts},
    {"transducer.p", "1/m^3", "hole density", FIELD(transducer.p), kDensityAlts},
    {"transducer.mu_p", "m^2/(V*s)", "hole mobility", FIELD(transducer.mu_p), kMobilityAlts},
    {"transducer.V_SD", "V", "source-drain voltage", FIELD(transducer.V_SD), nullptr},
    {"transducer.V_SG", "V", "source-gate voltage", FIELD(transducer.V_SG), nullptr},
    {"transducer.V_TH", "V", "threshold voltage", FIELD(transducer.V_TH), nullptr},
    {"transducer.T", "K", "temperature", FIELD(transducer.T), nullptr},
    {"noise.lambda_tun", "m", "characteristic tunneling distance", FIELD(noise.lambda_tun), kLengthAlts},
    {"noise.N_ot", "1/(J*m^3)", "oxide trap density", FIELD(noise.N_ot), kTrapAlts},
    {"noise.alpha_s", "V*s/C", "Coulomb scattering coefficient", FIELD(noise.alpha_s), nullptr},
    {"noise.T_obs", "s", "observation time (sets f_L = 1/T_obs)", FIELD(noise.T_obs), nullptr},
    {"noise.f_H", "Hz", "upper integration cutoff", FIELD(noise.f_H), nullptr},
};

#undef FIELD

constexpr const char* kBoolKey = "noise.flatband_literal";

const KeyDef* find_key(const std::string& key) {
    for (const auto& k : kKeys)
        if (key == k.key) return &k;
    return nullptr;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double unit_factor(const KeyDef& def, const std::string& suffix, int line) {
    if (suffix.empty() || suffix == def.unit) return 1.0;
    if (def.alts)
        for (const UnitAlt* a = def.alts; a->suffix; ++a)
            if (suffix == a->suffix) return a->factor;
    throw ConfigError(ConfigError::Kind::bad_unit, line, def.key,
                      "line " + std::to_string(line) + ": unit '" + suffix +
                          "' not recognized for " + def.key + " (SI unit: " + def.unit + ")");
}

// "key = value [unit]"; reports errors with the given 1-based line number.
void apply_assignment(SystemParams& params, const std::string& key_raw,
                      const std::string& rhs_raw, int line) {
    const std::string key = trim(key_raw);
    std::istringstream rhs(trim(rhs_raw));
    std::string value_tok, unit_tok, extra;
    rhs >> value_tok >> unit_tok >> extra;
    if (key.empty() || value_tok.empty() || !extra.empty())
        throw ConfigError(ConfigError::Kind::parse, line, key,
                          "line " + std::to_string(line) + ": expected 'key = value [unit]'");

    if (key == kBoolKey) {
        if (!unit_tok.empty())
            throw ConfigError(ConfigError::Kind::bad_unit, line, key,
                              "line " + std::to_string(line) + ": " + key + " takes no unit");
        if (value_tok == "true" || value_tok == "1")
            params.noise.flatband_literal = true;
        else if (value_tok == "false" || value_tok == "0")
            params.noise.flatband_literal = false;
        else
            throw ConfigError(ConfigError::Kind::bad_value, line, key,
                              "line " + std::to_string(line) + ": " + key +
                                  " must be true/false, got '" + value_tok + "'");
        return;
    }

    const KeyDef* def = find_key(key);
    if (!def)
        throw ConfigError(ConfigError::Kind::unknown_key, line, key,
                          "line " + std::to_string(line) + ": unknown key '" + key + "'");

    char* end = nullptr;
    const double value = std::strtod(value_tok.c_str(), &end);
    if (end == value_tok.c_str() || *end != '\0')
        throw ConfigError(ConfigError::Kind::bad_value, line, key,
                          "line " + std::to_string(line) + ": cannot parse number '" +
                              value_tok + "' for " + key);

    def->set(params, value * unit_factor(*def, unit_tok, line));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ConfigLoad load_config_detailed(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError(ConfigError::Kind::io, 0, "",
                          "cannot open config file: " + path);

    ConfigLoad result{default_params(), {}};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const size_t hash = raw.find('#');
        std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) continue;
        const size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ConfigError::Kind::parse, line, "",
                              "line " + std::to_string(line) + ": missing '='");
        apply_assignment(result.params, body.substr(0, eq), body.substr(eq + 1), line);
        result.keys_set.push_back(trim(body.substr(0, eq)));
    }
    return result;
}

SystemParams load_config(const std::string& path) {
    return load_config_detailed(path).params;
}

std::string config_text(const SystemParams& p) {
    std::ostringstream out;
    out << "# mcfet link configuration\n"
           "# Values are SI unless a unit suffix follows the number, e.g.\n"
           "#   transducer.mu_p = 500 cm2/Vs\n"
           "# Lengths also accept nm/um/mm/cm; permittivities accept 'eps0' (relative);\n"
           "# transducer.p accepts 1/cm3; noise.N_ot accepts 1/eVcm3.\n";
    std::string section;
    for (const auto& k : kKeys) {
        const std::string key(k.key);
        const std::string sec = key.substr(0, key.find('.'));
        if (sec != section) {
            out << "\n# --- " << sec << " ---\n";
            section = sec;
        }
        out << k.key << " = " << format_double(k.get(p)) << "  # " << k.unit << "; "
            << k.comment << "\n";
    }
    out << kBoolKey << " = " << (p.noise.flatband_literal ? "true" : "false")
        << "  # bool; true = flatband PSD with the g_FET^4 reading, false = single g_FET^2\n";
    return out.str();
}

std::string config_template_text() { return config_text(default_params()); }

void save_config(const SystemParams& params, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError(ConfigError::Kind::io, 0, "",
                          "cannot write config file: " + path);
    out << config_text(params);
    if (!out)
        throw ConfigError(ConfigError::Kind::io, 0, "",
                          "write failed: " + path);
}

void apply_override(SystemParams& params, const std::string& assignment) {
    const size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError(ConfigError::Kind::parse, 0, "",
                          "override must look like key=value, got '" + assignment + "'");
    apply_assignment(params, assignment.substr(0, eq), assignment.substr(eq + 1), 0);
}

std::uint64_t param_hash(const SystemParams& p) {
    std::string canon;
    for (const auto& k : kKeys)
        canon += std::string(k.key) + "=" + format_double(k.get(p)) + "\n";
    canon += std::string(kBoolKey) + "=" + (p.noise.flatband_literal ? "1" : "0") + "\n";

    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string param_hash_hex(const SystemParams& p) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(param_hash(p)));
    return buf;
}

std::vector<std::string> known_keys() {
    std::vector<std::string> out;
    for (const auto& k : kKeys) out.emplace_back(k.key);
    out.emplace_back(kBoolKey);
    return out;
}

}  // namespace mcfet
