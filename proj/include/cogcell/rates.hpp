#pragma once

#include <optional>
#include <vector>

#include "cogcell/netmodel.hpp"
#include "cogcell/propagation.hpp"

namespace cogcell::rates {

using netmodel::UserTerminal;
using propagation::Band;
using propagation::BandConfig;
using propagation::BandSet;
using propagation::Direction;

/// Receiver noise description: thermal floor plus the receiving side's noise
/// figure (base for uplink, mobile for downlink).
struct LinkBudget {
    double noise_psd_dbm_hz = -174.0;
    double nf_base_db = 6.0;
    double nf_mobile_db = 10.0;

    double receiver_nf_db(Direction d) const {
        return d == Direction::downlink ? nf_mobile_db : nf_base_db;
    }
    void validate() const;
};

struct RateEntry {
    int user_id = 0;
    Band band = Band::cellular;
    double baseline_bps = 0.0;
    std::optional<double> allocated_bps;
};

struct RateReport {
    Direction direction = Direction::downlink;
    std::vector<RateEntry> entries;
};

/// Receiver noise power over a bandwidth: psd + 10*log10(bw) + nf.
double noise_power_dbm(double bandwidth_hz, double receiver_nf_db,
                       const LinkBudget& budget = {});

/// 10^((p_eff + eta - noise)/10).
double snr_linear(double p_eff_dbm, double eta_db, double noise_dbm);

/// Full-band SNR of one link: effective power and noise wired from the band,
/// direction, and budget.
double link_snr_linear(Direction direction, const BandConfig& band, double eta_db,
                       const LinkBudget& budget);

/// Shannon rate for one user sharing a band with group_size users in total.
/// Downlink splits power and bandwidth together, so per-user SNR is
/// independent of the group:   (W/m) * log2(1 + snr).
/// Uplink keeps per-user power over a 1/m bandwidth share:
///   (W/m) * log2(1 + m * snr).
double user_rate_bps(Direction direction, const BandConfig& band, int group_size,
                     double eta_db, const LinkBudget& budget);

/// Every user's rate in the cellular band with group size |users|
/// (the no-TV reference); allocated_bps left unset.
RateReport baseline_rates(Direction direction, const std::vector<UserTerminal>& users,
                          const BandConfig& cellular_band, const LinkBudget& budget);

struct GroupSizes {
    int all = 0;
    int cellular = 0;
    int tv = 0;
};

/// Exact stay-vs-move uplink rate ratios for one user along with their
/// low-SNR approximations (1 and the linear TV/cellular gain ratio).
struct LowSnrRatios {
    double cc_ratio_exact = 0.0;
    double cc_ratio_approx = 1.0;
    double ct_ratio_exact = 0.0;
    double ct_ratio_approx = 0.0;
};

LowSnrRatios lowsnr_ratios(const UserTerminal& user, GroupSizes sizes,
                           const BandSet& bands, const LinkBudget& budget);

}  // namespace cogcell::rates
