#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cogcell/propagation.hpp"

using namespace cogcell::propagation;

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TEST_CASE("hata reference values") {
    CHECK(hata_path_loss_db(600, 30, 2, 1.0) ==
          doctest::Approx(120.634604169565).epsilon(1e-12));
    CHECK(hata_path_loss_db(600, 30, 2, 2.0) ==
          doctest::Approx(131.238342352760).epsilon(1e-12));
}

TEST_CASE("cost231 reference values") {
    CHECK(cost231_path_loss_db(2000, 30, 2, 1.0) ==
          doctest::Approx(136.278441915558).epsilon(1e-12));
    CHECK(cost231_path_loss_db(2000, 30, 2, 0.5) ==
          doctest::Approx(125.674703732363).epsilon(1e-12));
}

TEST_CASE("path loss increases with distance and frequency") {
    double prev = 0.0;
    for (double d : {0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        const double pl = hata_path_loss_db(600, 30, 2, d);
        CHECK(pl > prev);
        prev = pl;
    }
    CHECK(hata_path_loss_db(900, 30, 2, 1.0) > hata_path_loss_db(600, 30, 2, 1.0));
    CHECK(cost231_path_loss_db(2000, 30, 2, 1.0) >
          cost231_path_loss_db(1600, 30, 2, 1.0));
}

TEST_CASE("taller base station reduces path loss") {
    CHECK(hata_path_loss_db(600, 60, 2, 1.0) < hata_path_loss_db(600, 30, 2, 1.0));
    CHECK(cost231_path_loss_db(2000, 60, 2, 1.0) <
          cost231_path_loss_db(2000, 30, 2, 1.0));
}

TEST_CASE("band offset is distance independent") {
    // The two models share the distance slope at equal antenna heights, so
    // the 2 GHz - 600 MHz loss difference is a constant.
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const double d = 0.05 + uniform01(rng) * 19.95;
        const double diff =
            cost231_path_loss_db(2000, 30, 2, d) - hata_path_loss_db(600, 30, 2, d);
        CHECK(diff == doctest::Approx(15.643837745993).epsilon(1e-10));
    }
}

TEST_CASE("frequency validity ranges") {
    CHECK_THROWS_AS(hata_path_loss_db(2000, 30, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(hata_path_loss_db(100, 30, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(cost231_path_loss_db(600, 30, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(cost231_path_loss_db(2500, 30, 2, 1.0), std::domain_error);
    CHECK_NOTHROW(hata_path_loss_db(150, 30, 2, 1.0));
    CHECK_NOTHROW(hata_path_loss_db(1500, 30, 2, 1.0));
    CHECK_NOTHROW(cost231_path_loss_db(1500, 30, 2, 1.0));
}

TEST_CASE("height and distance guards") {
    CHECK_THROWS_AS(hata_path_loss_db(600, 20, 2, 1.0), std::domain_error);
    CHECK_THROWS_AS(hata_path_loss_db(600, 30, 12, 1.0), std::domain_error);
    CHECK_THROWS_AS(hata_path_loss_db(600, 30, 2, 0.0), std::domain_error);
    CHECK_THROWS_AS(cost231_path_loss_db(2000, 30, 2, -1.0), std::domain_error);
}

TEST_CASE("pattern rolloff at boresight and beyond") {
    const AntennaPattern p;
    // Boresight with the default 6-degree downtilt compensated away.
    CHECK(pattern_rolloff_db(p, 0.0, 6.0) == doctest::Approx(0.0).epsilon(1e-12));
    // Half-power style offset: 12*(35/70)^2 = 3 dB.
    CHECK(pattern_rolloff_db(p, 35.0, 6.0) == doctest::Approx(-3.0).epsilon(1e-12));
    // Behind the sector: clamped at the front-to-back ratio.
    CHECK(pattern_rolloff_db(p, 180.0, 6.0) == doctest::Approx(-25.0).epsilon(1e-12));
    for (double az : {-180.0, -90.0, 0.0, 45.0, 170.0})
        for (double el : {-20.0, 0.0, 6.0, 30.0}) {
            const double r = pattern_rolloff_db(p, az, el);
            CHECK(r <= 0.0);
            CHECK(r >= -p.front_to_back_db);
        }
}

TEST_CASE("disabled pattern is omnidirectional") {
    AntennaPattern p;
    p.enabled = false;
    CHECK(pattern_rolloff_db(p, 123.0, 40.0) == 0.0);
    CHECK(pattern_rolloff_db(p, -180.0, -10.0) == 0.0);
}

TEST_CASE("link gain folds receive antenna gain per direction") {
    const BandSet bands = default_bands();
    AntennaPattern omni;
    omni.enabled = false;
    const SectorPose pose{0.0, 0.0, 0.0, 30.0};
    const MobilePos user{1000.0, 0.0, 2.0};

    // Downlink cellular at 1 km: -PL + mobile gain (0 dBi).
    CHECK(link_gain_db(bands.cellular, omni, pose, user, Direction::downlink) ==
          doctest::Approx(-136.278441915558).epsilon(1e-12));
    // Downlink TV: -PL + (-3 dBi).
    CHECK(link_gain_db(bands.tv, omni, pose, user, Direction::downlink) ==
          doctest::Approx(-123.634604169565).epsilon(1e-12));
    // Uplink TV: -PL + base gain (6 dBi).
    CHECK(link_gain_db(bands.tv, omni, pose, user, Direction::uplink) ==
          doctest::Approx(-114.634604169565).epsilon(1e-12));
}

TEST_CASE("link gain band offsets are constant across distance") {
    const BandSet bands = default_bands();
    const AntennaPattern p;  // pattern enabled: rolloff cancels in the offset
    const SectorPose pose{0.0, 0.0, 0.0, 30.0};
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const double d = 50.0 + uniform01(rng) * 5000.0;
        const double az = (uniform01(rng) * 2.0 - 1.0) * 3.14159265358979;
        const MobilePos user{d * std::cos(az), d * std::sin(az), 2.0};
        const double dl_off =
            link_gain_db(bands.tv, p, pose, user, Direction::downlink) -
            link_gain_db(bands.cellular, p, pose, user, Direction::downlink);
        const double ul_off =
            link_gain_db(bands.tv, p, pose, user, Direction::uplink) -
            link_gain_db(bands.cellular, p, pose, user, Direction::uplink);
        CHECK(dl_off == doctest::Approx(12.643837745993).epsilon(1e-9));
        CHECK(ul_off == doctest::Approx(4.643837745993).epsilon(1e-9));
    }
}

TEST_CASE("path loss and rolloff are reciprocal across directions") {
    const BandSet bands = default_bands();
    const AntennaPattern p;
    const SectorPose pose{100.0, -50.0, 240.0, 30.0};
    const MobilePos user{-400.0, 300.0, 2.0};
    const double dl = link_gain_db(bands.tv, p, pose, user, Direction::downlink);
    const double ul = link_gain_db(bands.tv, p, pose, user, Direction::uplink);
    // Directions differ only by the receive-side antenna gain.
    CHECK(ul - dl == doctest::Approx(bands.tv.base_peak_gain_dbi -
                                     bands.tv.mobile_gain_dbi)
                         .epsilon(1e-12));
}

TEST_CASE("default bands carry the reference parameters") {
    const BandSet bands = default_bands();
    CHECK(bands.cellular.downlink_power_dbm() == doctest::Approx(59.0));
    CHECK(bands.tv.downlink_power_dbm() == doctest::Approx(36.0));
    CHECK(bands.cellular.uplink_power_dbm() == doctest::Approx(20.0));
    CHECK(bands.tv.uplink_power_dbm() == doctest::Approx(20.0));
    CHECK_NOTHROW(bands.cellular.validate());
    CHECK_NOTHROW(bands.tv.validate());
}

TEST_CASE("band validation rejects a model outside its frequency range") {
    BandConfig b = default_tv_band();
    b.model = PropagationModel::cost231_urban;  // 600 MHz is out of range
    CHECK_THROWS_AS(b.validate(), std::domain_error);
    b = default_cellular_band();
    b.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(b.validate(), std::domain_error);
}
