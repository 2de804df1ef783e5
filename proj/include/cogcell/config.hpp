#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "cogcell/simkit.hpp"

namespace cogcell::config {

/// Unknown key, malformed line, bad value, or unreadable file; the message
/// names the offender.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses `key = value` lines into a SimConfig. '#' starts a comment, blank
/// lines are skipped, later keys win. Unknown keys raise ConfigError;
/// missing keys keep the reference defaults. Purely syntactic: call
/// SimConfig::validate() afterwards for semantic checks.
simkit::SimConfig parse_config_text(const std::string& text);

simkit::SimConfig load_config_file(const std::string& path);

/// Accepts "prefix_scan" / "PrefixScan" style spellings (case and
/// separators are ignored).
simkit::AllocatorKind parse_allocator(const std::string& value);

/// Accepts "hata", "hata_urban", "cost231", "cost231_urban" spellings.
propagation::PropagationModel parse_model(const std::string& value);

/// Flattened key -> value view of a SimConfig using the same keys the
/// parser accepts (metadata keys included); doubles use round-trip
/// precision. Useful for echoing the effective config.
std::map<std::string, std::string> config_echo(const simkit::SimConfig& config);

}  // namespace cogcell::config
