#include "cogcell/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cogcell::config {

namespace {

using propagation::BandConfig;
using propagation::PropagationModel;
using simkit::AllocatorKind;
using simkit::SimConfig;

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Lowercase with '_' and '-' removed, for tolerant enum spellings.
std::string fold(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '-') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& want) {
    throw ConfigError("invalid value for '" + key + "': '" + value + "' (expected " +
                      want + ")");
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        bad_value(key, value, "a number");
    }
    if (used != value.size()) bad_value(key, value, "a number");
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        bad_value(key, value, "an integer");
    }
    if (used != value.size()) bad_value(key, value, "an integer");
    return v;
}

std::uint64_t parse_uint64(const std::string& key, const std::string& value) {
    if (!value.empty() && value[0] == '-') bad_value(key, value, "a non-negative integer");
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        bad_value(key, value, "a non-negative integer");
    }
    if (used != value.size()) bad_value(key, value, "a non-negative integer");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    const std::string f = fold(value);
    if (f == "true" || f == "1") return true;
    if (f == "false" || f == "0") return false;
    bad_value(key, value, "true or false");
}

bool apply_band_key(BandConfig& band, const std::string& key,
                    const std::string& field, const std::string& value) {
    if (field == "freq_mhz")
        band.freq_mhz = parse_double(key, value);
    else if (field == "bandwidth_hz")
        band.bandwidth_hz = parse_double(key, value);
    else if (field == "model")
        band.model = parse_model(value);
    else if (field == "base_power_dbm")
        band.base_power_dbm = parse_double(key, value);
    else if (field == "base_peak_gain_dbi")
        band.base_peak_gain_dbi = parse_double(key, value);
    else if (field == "mobile_power_dbm")
        band.mobile_power_dbm = parse_double(key, value);
    else if (field == "mobile_gain_dbi")
        band.mobile_gain_dbi = parse_double(key, value);
    else
        return false;
    return true;
}

bool apply_pattern_key(propagation::AntennaPattern& pattern, const std::string& key,
                       const std::string& field, const std::string& value) {
    if (field == "horiz_3db_deg")
        pattern.horiz_3db_deg = parse_double(key, value);
    else if (field == "front_to_back_db")
        pattern.front_to_back_db = parse_double(key, value);
    else if (field == "vert_3db_deg")
        pattern.vert_3db_deg = parse_double(key, value);
    else if (field == "downtilt_deg")
        pattern.downtilt_deg = parse_double(key, value);
    else if (field == "sla_v_db")
        pattern.sla_v_db = parse_double(key, value);
    else if (field == "enabled")
        pattern.enabled = parse_bool(key, value);
    else
        return false;
    return true;
}

bool apply_budget_key(rates::LinkBudget& budget, const std::string& key,
                      const std::string& field, const std::string& value) {
    if (field == "noise_psd_dbm_hz")
        budget.noise_psd_dbm_hz = parse_double(key, value);
    else if (field == "nf_base_db")
        budget.nf_base_db = parse_double(key, value);
    else if (field == "nf_mobile_db")
        budget.nf_mobile_db = parse_double(key, value);
    else
        return false;
    return true;
}

// Recorded verbatim; no effect on the model.
bool is_metadata_key(const std::string& key) {
    return key == "frequency_plan" || key == "subcarrier_count" ||
           key == "subcarrier_spacing_hz";
}

void apply_key(SimConfig& cfg, const std::string& key, const std::string& value,
               int line) {
    const auto unknown = [&]() {
        throw ConfigError("unknown config key '" + key + "' (line " +
                          std::to_string(line) + ")");
    };

    const std::size_t dot = key.find('.');
    if (dot != std::string::npos) {
        const std::string prefix = key.substr(0, dot);
        const std::string field = key.substr(dot + 1);
        bool ok = false;
        if (prefix == "cellular")
            ok = apply_band_key(cfg.bands.cellular, key, field, value);
        else if (prefix == "tv")
            ok = apply_band_key(cfg.bands.tv, key, field, value);
        else if (prefix == "pattern")
            ok = apply_pattern_key(cfg.pattern, key, field, value);
        else if (prefix == "budget")
            ok = apply_budget_key(cfg.budget, key, field, value);
        if (!ok) unknown();
        return;
    }

    if (key == "seed")
        cfg.seed = parse_uint64(key, value);
    else if (key == "drops")
        cfg.drops = static_cast<int>(parse_int(key, value));
    else if (key == "users_per_sector")
        cfg.users_per_sector = static_cast<int>(parse_int(key, value));
    else if (key == "cell_radius_m")
        cfg.cell_radius_m = parse_double(key, value);
    else if (key == "rings")
        cfg.rings = static_cast<int>(parse_int(key, value));
    else if (key == "base_height_m")
        cfg.base_height_m = parse_double(key, value);
    else if (key == "mobile_height_m")
        cfg.mobile_height_m = parse_double(key, value);
    else if (key == "allocator")
        cfg.allocator = parse_allocator(value);
    else if (is_metadata_key(key))
        cfg.metadata[key] = value;
    else
        unknown();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

SimConfig parse_config_text(const std::string& text) {
    SimConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string stripped = trim(raw);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("malformed line " + std::to_string(line) +
                              " (expected key = value): '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("missing key on line " + std::to_string(line));
        if (value.empty())
            throw ConfigError("missing value for '" + key + "' (line " +
                              std::to_string(line) + ")");
        apply_key(cfg, key, value, line);
    }
    return cfg;
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

AllocatorKind parse_allocator(const std::string& value) {
    const std::string f = fold(value);
    if (f == "prefixscan") return AllocatorKind::prefix_scan;
    if (f == "firstdecrease") return AllocatorKind::first_decrease;
    if (f == "exhaustive") return AllocatorKind::exhaustive;
    throw ConfigError("invalid value for 'allocator': '" + value +
                      "' (expected prefix_scan, first_decrease, or exhaustive)");
}

PropagationModel parse_model(const std::string& value) {
    const std::string f = fold(value);
    if (f == "hata" || f == "hataurban") return PropagationModel::hata_urban;
    if (f == "cost231" || f == "cost231urban")
        return PropagationModel::cost231_urban;
    throw ConfigError("invalid value for 'model': '" + value +
                      "' (expected hata or cost231)");
}

std::map<std::string, std::string> config_echo(const SimConfig& config) {
    std::map<std::string, std::string> out;
    out["seed"] = std::to_string(config.seed);
    out["drops"] = std::to_string(config.drops);
    out["users_per_sector"] = std::to_string(config.users_per_sector);
    out["cell_radius_m"] = format_double(config.cell_radius_m);
    out["rings"] = std::to_string(config.rings);
    out["base_height_m"] = format_double(config.base_height_m);
    out["mobile_height_m"] = format_double(config.mobile_height_m);
    out["allocator"] = simkit::allocator_name(config.allocator);
    const auto band_echo = [&](const std::string& prefix, const BandConfig& b) {
        out[prefix + ".freq_mhz"] = format_double(b.freq_mhz);
        out[prefix + ".bandwidth_hz"] = format_double(b.bandwidth_hz);
        out[prefix + ".model"] = b.model == PropagationModel::hata_urban
                                     ? "hata_urban"
                                     : "cost231_urban";
        out[prefix + ".base_power_dbm"] = format_double(b.base_power_dbm);
        out[prefix + ".base_peak_gain_dbi"] = format_double(b.base_peak_gain_dbi);
        out[prefix + ".mobile_power_dbm"] = format_double(b.mobile_power_dbm);
        out[prefix + ".mobile_gain_dbi"] = format_double(b.mobile_gain_dbi);
    };
    band_echo("cellular", config.bands.cellular);
    band_echo("tv", config.bands.tv);
    out["pattern.horiz_3db_deg"] = format_double(config.pattern.horiz_3db_deg);
    out["pattern.front_to_back_db"] = format_double(config.pattern.front_to_back_db);
    out["pattern.vert_3db_deg"] = format_double(config.pattern.vert_3db_deg);
    out["pattern.downtilt_deg"] = format_double(config.pattern.downtilt_deg);
    out["pattern.sla_v_db"] = format_double(config.pattern.sla_v_db);
    out["pattern.enabled"] = config.pattern.enabled ? "true" : "false";
    out["budget.noise_psd_dbm_hz"] = format_double(config.budget.noise_psd_dbm_hz);
    out["budget.nf_base_db"] = format_double(config.budget.nf_base_db);
    out["budget.nf_mobile_db"] = format_double(config.budget.nf_mobile_db);
    for (const auto& [k, v] : config.metadata) out[k] = v;
    return out;
}

}  // namespace cogcell::config
