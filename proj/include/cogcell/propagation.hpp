#pragma once

#include <string>

namespace cogcell::propagation {

enum class Direction { downlink, uplink };
enum class Band { cellular, tv };

/// Urban macro path-loss models. Each model is valid on its own carrier
/// frequency range; requesting a frequency outside it is a domain error.
enum class PropagationModel { cost231_urban, hata_urban };

/// Sector antenna with quadratic horizontal/vertical rolloff. With
/// enabled = false the rolloff is identically 0 dB (omnidirectional mode).
struct AntennaPattern {
    double horiz_3db_deg = 70.0;
    double front_to_back_db = 25.0;
    double vert_3db_deg = 10.0;
    double downtilt_deg = 6.0;
    double sla_v_db = 20.0;
    bool enabled = true;

    void validate() const;  // throws std::domain_error
};

/// One radio band: carrier, bandwidth, transmit powers and antenna gains on
/// both ends, and the path-loss model that applies at this carrier.
struct BandConfig {
    std::string name;
    double freq_mhz = 0.0;
    double bandwidth_hz = 0.0;
    PropagationModel model = PropagationModel::cost231_urban;
    double base_power_dbm = 0.0;
    double base_peak_gain_dbi = 0.0;
    double mobile_power_dbm = 0.0;
    double mobile_gain_dbi = 0.0;

    // Transmit-side peak gain is folded into the effective power; the
    // receive-side gain is folded into the link gain (see link_gain_db).
    double downlink_power_dbm() const { return base_power_dbm + base_peak_gain_dbi; }
    double uplink_power_dbm() const { return mobile_power_dbm + mobile_gain_dbi; }
    double effective_power_dbm(Direction d) const {
        return d == Direction::downlink ? downlink_power_dbm() : uplink_power_dbm();
    }

    void validate() const;
};

struct BandSet {
    BandConfig cellular;
    BandConfig tv;

    const BandConfig& operator[](Band b) const {
        return b == Band::cellular ? cellular : tv;
    }
    BandConfig& operator[](Band b) { return b == Band::cellular ? cellular : tv; }
};

/// 2 GHz / 5 MHz licensed band, 42 dBm + 17 dBi base, 20 dBm + 0 dBi mobile.
BandConfig default_cellular_band();
/// 600 MHz / 5 MHz TV band, 30 dBm + 6 dBi base (36 dBm EIRP cap),
/// 23 dBm - 3 dBi mobile.
BandConfig default_tv_band();
BandSet default_bands();

struct SectorPose {
    double x_m = 0.0;
    double y_m = 0.0;
    double azimuth_deg = 0.0;
    double height_m = 30.0;
};

struct MobilePos {
    double x_m = 0.0;
    double y_m = 0.0;
    double height_m = 2.0;
};

/// Small/medium-city mobile-antenna height correction a(h), shared by both
/// models.
double mobile_height_correction_db(double freq_mhz, double h_mobile_m);

/// Urban Hata path loss, valid for 150-1500 MHz.
double hata_path_loss_db(double freq_mhz, double h_base_m, double h_mobile_m,
                         double d_km);

/// Urban COST-231 path loss (medium-city C_M = 0), valid for 1500-2000 MHz.
double cost231_path_loss_db(double freq_mhz, double h_base_m, double h_mobile_m,
                            double d_km);

double path_loss_db(PropagationModel model, double freq_mhz, double h_base_m,
                    double h_mobile_m, double d_km);

/// Pattern rolloff in dB (always <= 0, >= -front_to_back). azimuth_off is the
/// bearing offset from boresight; elevation is measured from horizontal,
/// positive downward toward the user. Angles are clamped/wrapped, never an
/// error.
double pattern_rolloff_db(const AntennaPattern& pattern, double azimuth_off_deg,
                          double elevation_deg);

/// Direction-aware link power gain in dB:
///   downlink: -PL + rolloff + mobile_gain_dbi
///   uplink:   -PL + rolloff + base_peak_gain_dbi
/// Path loss and rolloff are reciprocal across directions.
double link_gain_db(const BandConfig& band, const AntennaPattern& pattern,
                    const SectorPose& sector, const MobilePos& user,
                    Direction direction);

}  // namespace cogcell::propagation
