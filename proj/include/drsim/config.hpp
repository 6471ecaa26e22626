#pragma once

#include "drsim/sim.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace drsim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every key accepted in a config file or override.
std::span<const std::string_view> config_keys();

/// Applies one key/value pair. `where` prefixes error messages.
void apply_setting(SimConfig& config, std::string_view key, std::string_view value, const std::string& where);

/// Parses `key = value` lines (`#` starts a comment) over the defaults.
SimConfig parse_config_text(std::string_view text, const std::string& source = "<config>");

/// Reads `path`, then applies `overrides` ("key=value") in order. Unknown
/// keys, malformed lines and out-of-range values raise ConfigError.
SimConfig parse_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

SimConfig apply_overrides(SimConfig config, const std::vector<std::string>& overrides);

}  // namespace drsim
