#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcfet/params.hpp"

namespace mcfet {

struct ConfigError : std::runtime_error {
    enum class Kind { io, parse, unknown_key, bad_unit, bad_value };

    ConfigError(Kind k, int ln, std::string key_, const std::string& msg)
        : std::runtime_error(msg), kind(k), line(ln), key(std::move(key_)) {}

    Kind kind;
    int line;  // 1-based; 0 when not tied to a file line
    std::string key;
};

struct ConfigLoad {
    SystemParams params;
    std::vector<std::string> keys_set;  // keys the file actually assigned
};

// Missing defaults are filled from default_params(); the file is a delta.
SystemParams load_config(const std::string& path);
ConfigLoad load_config_detailed(const std::string& path);

// Round trip: load_config(save_config(p)) reproduces p field-for-field.
void save_config(const SystemParams& params, const std::string& path);

// Fully commented config body for the given values ("params template" emits
// this for default_params()).
std::string config_text(const SystemParams& params);
std::string config_template_text();

// "key=value" or "key=value unit", same key/unit rules as the file format.
void apply_override(SystemParams& params, const std::string& assignment);

// FNV-1a over the canonical serialization; stable across platforms.
std::uint64_t param_hash(const SystemParams& params);
std::string param_hash_hex(const SystemParams& params);

std::vector<std::string> known_keys();

}  // namespace mcfet
