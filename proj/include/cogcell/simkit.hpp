#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cogcell/allocation.hpp"
#include "cogcell/netmodel.hpp"
#include "cogcell/propagation.hpp"
#include "cogcell/rates.hpp"

namespace cogcell::simkit {

using propagation::AntennaPattern;
using propagation::BandSet;
using propagation::Direction;
using rates::LinkBudget;

enum class AllocatorKind { prefix_scan, first_decrease, exhaustive };

enum class Scenario { traditional, cognitive };

/// Full campaign description. Defaults reproduce the reference deployment:
/// 2 GHz + 600 MHz bands, 866 m cells, 30 users per sector, 1000 drops.
struct SimConfig {
    std::uint64_t seed = 1;
    int drops = 1000;
    int users_per_sector = 30;
    double cell_radius_m = 866.0;
    int rings = 0;
    double base_height_m = 30.0;
    double mobile_height_m = 2.0;
    BandSet bands = propagation::default_bands();
    LinkBudget budget;
    AntennaPattern pattern;
    AllocatorKind allocator = AllocatorKind::prefix_scan;
    std::map<std::string, std::string> metadata;  // recorded, no model effect

    void validate() const;  // throws std::domain_error
};

struct UserThroughput {
    int user_id = 0;
    int sector = 0;
    double dl_baseline_bps = 0.0;
    double dl_allocated_bps = 0.0;
    double ul_baseline_bps = 0.0;
    double ul_allocated_bps = 0.0;
};

struct DropResult {
    int drop_index = 0;
    std::vector<UserThroughput> users;  // ascending user id, sector-major
};

/// Empirical CDF support: ascending values with fractions (i+1)/n.
struct CdfSeries {
    std::vector<double> values;
    std::vector<double> fractions;
};

/// Sorts the samples and attaches the (i+1)/n fractions.
CdfSeries make_cdf(std::vector<double> samples);

/// Lower-interpolation empirical quantile: value at index ceil(p*n) - 1.
/// Requires 0 < p < 1 and a non-empty series.
double percentile(const CdfSeries& series, double p);

struct SeriesSummary {
    double mean_bps = 0.0;
    double p5_bps = 0.0;
    double p50_bps = 0.0;
    double p95_bps = 0.0;
};

SeriesSummary summarize(const CdfSeries& series);

/// Traditional (cellular-only baseline) vs cognitive (allocated) pooled
/// distributions for one link direction.
struct LinkResult {
    CdfSeries traditional;
    CdfSeries cognitive;
    SeriesSummary traditional_summary;
    SeriesSummary cognitive_summary;
    double edge_gain = 0.0;  // cognitive p5 / traditional p5
};

struct CampaignResult {
    int drops = 0;
    int users_per_drop = 0;  // all three central-site sectors
    LinkResult downlink;
    LinkResult uplink;

    const LinkResult& operator[](Direction d) const {
        return d == Direction::downlink ? downlink : uplink;
    }
};

/// Per-drop RNG seed: a bijective mix of the campaign seed and the drop
/// index, so neighbouring drops are decorrelated and any drop is
/// reproducible in isolation.
std::uint64_t drop_seed(std::uint64_t campaign_seed, std::uint64_t drop_index);

/// One Monte-Carlo drop: users dropped into the three central-site sectors,
/// then per sector and per link direction the cellular-only baseline and the
/// allocator's band split. Deterministic in (config.seed, drop_index).
DropResult run_drop(const SimConfig& config, int drop_index);

/// Runs drops 0..drops-1 and pools every user throughput into per-link
/// traditional/cognitive CDFs. The result is independent of n_threads.
CampaignResult run_campaign(const SimConfig& config, int n_threads = 1);

const char* allocator_name(AllocatorKind k);
const char* scenario_name(Scenario s);
const char* direction_name(Direction d);  // "dl" / "ul"

}  // namespace cogcell::simkit
