#include "cogcell/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace cogcell::rates {

void LinkBudget::validate() const {
    if (nf_base_db < 0.0 || nf_mobile_db < 0.0)
        throw std::domain_error("noise figures must be >= 0");
    if (!std::isfinite(noise_psd_dbm_hz))
        throw std::domain_error("noise spectral density must be finite");
}

double noise_power_dbm(double bandwidth_hz, double receiver_nf_db,
                       const LinkBudget& budget) {
    if (!(bandwidth_hz > 0.0))
        throw std::domain_error("bandwidth must be positive");
    return budget.noise_psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) + receiver_nf_db;
}

double snr_linear(double p_eff_dbm, double eta_db, double noise_dbm) {
    return std::pow(10.0, (p_eff_dbm + eta_db - noise_dbm) / 10.0);
}

double link_snr_linear(Direction direction, const BandConfig& band, double eta_db,
                       const LinkBudget& budget) {
    const double noise = noise_power_dbm(band.bandwidth_hz,
                                         budget.receiver_nf_db(direction), budget);
    return snr_linear(band.effective_power_dbm(direction), eta_db, noise);
}

double user_rate_bps(Direction direction, const BandConfig& band, int group_size,
                     double eta_db, const LinkBudget& budget) {
    if (group_size < 1) throw std::domain_error("group size must be >= 1");
    const double snr = link_snr_linear(direction, band, eta_db, budget);
    const double share = band.bandwidth_hz / group_size;
    if (direction == Direction::downlink) return share * std::log2(1.0 + snr);
    return share * std::log2(1.0 + group_size * snr);
}

RateReport baseline_rates(Direction direction, const std::vector<UserTerminal>& users,
                          const BandConfig& cellular_band, const LinkBudget& budget) {
    if (users.empty()) throw std::domain_error("baseline_rates: no users");
    RateReport report;
    report.direction = direction;
    report.entries.reserve(users.size());
    const int n = static_cast<int>(users.size());
    for (const UserTerminal& u : users) {
        RateEntry e;
        e.user_id = u.id;
        e.band = Band::cellular;
        e.baseline_bps = user_rate_bps(direction, cellular_band, n,
                                       u.eta_db(Band::cellular, direction), budget);
        report.entries.push_back(e);
    }
    return report;
}

LowSnrRatios lowsnr_ratios(const UserTerminal& user, GroupSizes sizes,
                           const BandSet& bands, const LinkBudget& budget) {
    if (sizes.all < 1 || sizes.cellular < 1 || sizes.tv < 1)
        throw std::domain_error("lowsnr_ratios: group sizes must be >= 1");
    const Direction d = Direction::uplink;
    const double eta_c = user.eta_db(Band::cellular, d);
    const double eta_t = user.eta_db(Band::tv, d);
    const double c_all =
        user_rate_bps(d, bands.cellular, sizes.all, eta_c, budget);
    const double c_stay =
        user_rate_bps(d, bands.cellular, sizes.cellular, eta_c, budget);
    const double c_move = user_rate_bps(d, bands.tv, sizes.tv, eta_t, budget);
    LowSnrRatios r;
    r.cc_ratio_exact = c_stay / c_all;
    r.cc_ratio_approx = 1.0;
    r.ct_ratio_exact = c_move / c_all;
    r.ct_ratio_approx = std::pow(10.0, (eta_t - eta_c) / 10.0);
    return r;
}

}  // namespace cogcell::rates
