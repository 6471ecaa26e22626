#include "drsim/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <fstream>
#include <map>
#include <sstream>

namespace drsim {

namespace {

constexpr std::array<std::string_view, 23> kKeys = {
    "field_length", "n_rings",        "node_count",  "bs_x",           "bs_y",
    "initial_energy", "packet_bits",  "protocol",    "ch_probability", "max_rounds",
    "seed",         "runs",           "e_elec",      "e_fs",           "e_mp",
    "e_da",         "deployment",     "lattice_per_d", "fixed_link_distance", "relay",
    "aggregation",  "threads",        "analytic_distance",
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad(const std::string& where, std::string_view key, const std::string& why)
{
    throw ConfigError(where + ": key '" + std::string(key) + "': " + why);
}

template <typename T>
T parse_number(std::string_view value, const std::string& where, std::string_view key)
{
    T out{};
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        bad(where, key, "cannot parse '" + std::string(value) + "' as a number");
    }
    return out;
}

double positive(std::string_view value, const std::string& where, std::string_view key)
{
    const double v = parse_number<double>(value, where, key);
    if (!(v > 0.0) || !std::isfinite(v)) bad(where, key, "must be positive");
    return v;
}

int positive_int(std::string_view value, const std::string& where, std::string_view key)
{
    const long long v = parse_number<long long>(value, where, key);
    if (v <= 0 || v > std::numeric_limits<int>::max()) bad(where, key, "must be a positive integer");
    return static_cast<int>(v);
}

bool parse_bool(std::string_view value, const std::string& where, std::string_view key)
{
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    bad(where, key, "expected true or false");
}

struct Entry {
    std::string value;
    std::string where;
};

SimConfig apply_entries(SimConfig config, const std::map<std::string, Entry, std::less<>>& entries)
{
    // Canonical key order so field_length is known before the BS position.
    for (std::string_view key : kKeys) {
        const auto it = entries.find(key);
        if (it != entries.end()) apply_setting(config, key, it->second.value, it->second.where);
    }
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    return config;
}

void collect_line(std::map<std::string, Entry, std::less<>>& entries, std::string_view line, const std::string& where)
{
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) return;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError(where + ": malformed line, expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": missing key");
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) bad(where, key, "unknown key");
    if (value.empty()) bad(where, key, "missing value");
    entries.insert_or_assign(std::string(key), Entry{std::string(value), where});
}

}  // namespace

std::span<const std::string_view> config_keys() { return kKeys; }

void apply_setting(SimConfig& c, std::string_view key, std::string_view value, const std::string& where)
{
    const Point center{c.field_length / 2.0, c.field_length / 2.0};
    const RadioParams& r = c.radio;
    auto radio = [&](double e_elec, double e_fs, double e_mp, double e_da) {
        c.radio = RadioParams(e_elec, e_fs, e_mp, e_da);
    };

    if (key == "field_length") c.field_length = positive(value, where, key);
    else if (key == "n_rings") {
        c.n_rings = positive_int(value, where, key);
        if (c.n_rings < 2) bad(where, key, "must be at least 2");
    }
    else if (key == "node_count") c.node_count = positive_int(value, where, key);
    else if (key == "bs_x") c.bs_pos = Point{parse_number<double>(value, where, key), c.bs_pos.value_or(center).y};
    else if (key == "bs_y") c.bs_pos = Point{c.bs_pos.value_or(center).x, parse_number<double>(value, where, key)};
    else if (key == "initial_energy") c.initial_energy = positive(value, where, key);
    else if (key == "packet_bits") c.packet_bits = positive_int(value, where, key);
    else if (key == "protocol") {
        const auto p = parse_protocol(value);
        if (!p) bad(where, key, "expected dr, leach or leach-c");
        c.protocol = *p;
    }
    else if (key == "ch_probability") {
        const double p = parse_number<double>(value, where, key);
        if (!(p > 0.0 && p < 1.0)) bad(where, key, "must lie strictly between 0 and 1");
        c.ch_probability = p;
    }
    else if (key == "max_rounds") c.max_rounds = positive_int(value, where, key);
    else if (key == "seed") c.seed = parse_number<std::uint64_t>(value, where, key);
    else if (key == "runs") c.runs = positive_int(value, where, key);
    else if (key == "e_elec") radio(positive(value, where, key), r.e_fs(), r.e_mp(), r.e_da());
    else if (key == "e_fs") radio(r.e_elec(), positive(value, where, key), r.e_mp(), r.e_da());
    else if (key == "e_mp") radio(r.e_elec(), r.e_fs(), positive(value, where, key), r.e_da());
    else if (key == "e_da") radio(r.e_elec(), r.e_fs(), r.e_mp(), positive(value, where, key));
    else if (key == "deployment") {
        if (value == "uniform") c.deployment = Deployment::Uniform;
        else if (value == "lattice") c.deployment = Deployment::Lattice;
        else bad(where, key, "expected uniform or lattice");
    }
    else if (key == "lattice_per_d") c.lattice_per_d = positive_int(value, where, key);
    else if (key == "fixed_link_distance") {
        if (value == "none") c.fixed_link_distance.reset();
        else {
            const double v = parse_number<double>(value, where, key);
            if (!(v >= 0.0) || !std::isfinite(v)) bad(where, key, "must be non-negative or 'none'");
            c.fixed_link_distance = v;
        }
    }
    else if (key == "relay") c.relay = parse_bool(value, where, key);
    else if (key == "aggregation") {
        if (value == "compress") c.aggregation = Aggregation::Compress;
        else if (value == "forward") c.aggregation = Aggregation::Forward;
        else bad(where, key, "expected compress or forward");
    }
    else if (key == "threads") {
        const long long v = parse_number<long long>(value, where, key);
        if (v < 0 || v > 1024) bad(where, key, "must be between 0 and 1024");
        c.threads = static_cast<int>(v);
    }
    else if (key == "analytic_distance") {
        const double v = parse_number<double>(value, where, key);
        if (!(v >= 0.0) || !std::isfinite(v)) bad(where, key, "must be non-negative");
        c.analytic_distance = v;
    }
    else bad(where, key, "unknown key");
}

SimConfig parse_config_text(std::string_view text, const std::string& source)
{
    std::map<std::string, Entry, std::less<>> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        collect_line(entries, line, source + ":" + std::to_string(number));
    }
    return apply_entries(SimConfig{}, entries);
}

SimConfig parse_config(const std::filesystem::path& path, const std::vector<std::string>& overrides)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::map<std::string, Entry, std::less<>> entries;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        collect_line(entries, line, path.string() + ":" + std::to_string(number));
    }
    for (const std::string& o : overrides) {
        collect_line(entries, o, "override '" + o + "'");
    }
    return apply_entries(SimConfig{}, entries);
}

SimConfig apply_overrides(SimConfig config, const std::vector<std::string>& overrides)
{
    std::map<std::string, Entry, std::less<>> entries;
    for (const std::string& o : overrides) {
        collect_line(entries, o, "override '" + o + "'");
    }
    return apply_entries(std::move(config), entries);
}

}  // namespace drsim
