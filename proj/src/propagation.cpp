#include "cogcell/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cogcell::propagation {

namespace {

constexpr double kDegPerRad = 57.29577951308232;

void check_heights(double h_base_m, double h_mobile_m) {
    if (!(h_base_m >= 30.0 && h_base_m <= 200.0))
        throw std::domain_error("base height " + std::to_string(h_base_m) +
                                " m outside [30, 200]");
    if (!(h_mobile_m >= 1.0 && h_mobile_m <= 10.0))
        throw std::domain_error("mobile height " + std::to_string(h_mobile_m) +
                                " m outside [1, 10]");
}

void check_distance(double d_km) {
    if (!(d_km > 0.0))
        throw std::domain_error("distance " + std::to_string(d_km) +
                                " km must be positive");
}

double wrap_deg(double a) {
    a = std::fmod(a, 360.0);
    if (a > 180.0) a -= 360.0;
    if (a < -180.0) a += 360.0;
    return a;
}

}  // namespace

void AntennaPattern::validate() const {
    if (!(horiz_3db_deg > 0.0) || !(vert_3db_deg > 0.0))
        throw std::domain_error("antenna beamwidths must be positive");
    if (front_to_back_db < 0.0 || sla_v_db < 0.0)
        throw std::domain_error("antenna attenuation caps must be >= 0");
}

void BandConfig::validate() const {
    if (!(bandwidth_hz > 0.0))
        throw std::domain_error("band '" + name + "': bandwidth must be positive");
    if (!std::isfinite(base_power_dbm) || !std::isfinite(mobile_power_dbm) ||
        !std::isfinite(base_peak_gain_dbi) || !std::isfinite(mobile_gain_dbi))
        throw std::domain_error("band '" + name + "': powers/gains must be finite");
    // Probe the model's frequency range.
    path_loss_db(model, freq_mhz, 30.0, 2.0, 1.0);
}

BandConfig default_cellular_band() {
    BandConfig b;
    b.name = "cellular";
    b.freq_mhz = 2000.0;
    b.bandwidth_hz = 5e6;
    b.model = PropagationModel::cost231_urban;
    b.base_power_dbm = 42.0;
    b.base_peak_gain_dbi = 17.0;
    b.mobile_power_dbm = 20.0;
    b.mobile_gain_dbi = 0.0;
    return b;
}

BandConfig default_tv_band() {
    BandConfig b;
    b.name = "tv";
    b.freq_mhz = 600.0;
    b.bandwidth_hz = 5e6;
    b.model = PropagationModel::hata_urban;
    b.base_power_dbm = 30.0;
    b.base_peak_gain_dbi = 6.0;
    b.mobile_power_dbm = 23.0;
    b.mobile_gain_dbi = -3.0;
    return b;
}

BandSet default_bands() { return BandSet{default_cellular_band(), default_tv_band()}; }

double mobile_height_correction_db(double freq_mhz, double h_mobile_m) {
    const double lf = std::log10(freq_mhz);
    return (1.1 * lf - 0.7) * h_mobile_m - (1.56 * lf - 0.8);
}

double hata_path_loss_db(double freq_mhz, double h_base_m, double h_mobile_m,
                         double d_km) {
    if (!(freq_mhz >= 150.0 && freq_mhz <= 1500.0))
        throw std::domain_error("Hata model: frequency " + std::to_string(freq_mhz) +
                                " MHz outside [150, 1500]");
    check_heights(h_base_m, h_mobile_m);
    check_distance(d_km);
    const double lhb = std::log10(h_base_m);
    return 69.55 + 26.16 * std::log10(freq_mhz) - 13.82 * lhb -
           mobile_height_correction_db(freq_mhz, h_mobile_m) +
           (44.9 - 6.55 * lhb) * std::log10(d_km);
}

double cost231_path_loss_db(double freq_mhz, double h_base_m, double h_mobile_m,
                            double d_km) {
    if (!(freq_mhz >= 1500.0 && freq_mhz <= 2000.0))
        throw std::domain_error("COST-231 model: frequency " +
                                std::to_string(freq_mhz) + " MHz outside [1500, 2000]");
    check_heights(h_base_m, h_mobile_m);
    check_distance(d_km);
    const double c_m = 0.0;  // medium city
    const double lhb = std::log10(h_base_m);
    return 46.3 + 33.9 * std::log10(freq_mhz) - 13.82 * lhb -
           mobile_height_correction_db(freq_mhz, h_mobile_m) +
           (44.9 - 6.55 * lhb) * std::log10(d_km) + c_m;
}

double path_loss_db(PropagationModel model, double freq_mhz, double h_base_m,
                    double h_mobile_m, double d_km) {
    switch (model) {
        case PropagationModel::hata_urban:
            return hata_path_loss_db(freq_mhz, h_base_m, h_mobile_m, d_km);
        case PropagationModel::cost231_urban:
            return cost231_path_loss_db(freq_mhz, h_base_m, h_mobile_m, d_km);
    }
    throw std::domain_error("unknown propagation model");
}

double pattern_rolloff_db(const AntennaPattern& pattern, double azimuth_off_deg,
                          double elevation_deg) {
    if (!pattern.enabled) return 0.0;
    const double az = wrap_deg(azimuth_off_deg);
    const double el = std::clamp(elevation_deg, -90.0, 90.0);
    const double ah = std::min(
        12.0 * (az / pattern.horiz_3db_deg) * (az / pattern.horiz_3db_deg),
        pattern.front_to_back_db);
    const double dv = (el - pattern.downtilt_deg) / pattern.vert_3db_deg;
    const double av = std::min(12.0 * dv * dv, pattern.sla_v_db);
    return -std::min(ah + av, pattern.front_to_back_db);
}

double link_gain_db(const BandConfig& band, const AntennaPattern& pattern,
                    const SectorPose& sector, const MobilePos& user,
                    Direction direction) {
    const double dx = user.x_m - sector.x_m;
    const double dy = user.y_m - sector.y_m;
    const double horiz_m = std::hypot(dx, dy);
    const double pl = path_loss_db(band.model, band.freq_mhz, sector.height_m,
                                   user.height_m, horiz_m / 1000.0);
    const double az_off = wrap_deg(std::atan2(dy, dx) * kDegPerRad - sector.azimuth_deg);
    const double elev = std::atan2(sector.height_m - user.height_m, horiz_m) * kDegPerRad;
    const double rolloff = pattern_rolloff_db(pattern, az_off, elev);
    const double rx_gain = direction == Direction::downlink ? band.mobile_gain_dbi
                                                            : band.base_peak_gain_dbi;
    return -pl + rolloff + rx_gain;
}

}  // namespace cogcell::propagation
