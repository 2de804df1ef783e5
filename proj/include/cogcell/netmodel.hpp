#pragma once

#include <cstdint>
#include <vector>

#include "cogcell/propagation.hpp"

namespace cogcell::netmodel {

using propagation::AntennaPattern;
using propagation::Band;
using propagation::BandConfig;
using propagation::BandSet;
using propagation::Direction;

struct Vec2 {
    double x_m = 0.0;
    double y_m = 0.0;
};

struct Sector {
    int id = 0;
    Vec2 site_pos;
    double azimuth_deg = 0.0;
    AntennaPattern pattern;
};

/// Hexagonal tessellation: sites on a triangular lattice with inter-site
/// distance sqrt(3) * cell_radius_m, three sectors per site at azimuths
/// {0, 120, 240}. Site 0 is the central site.
struct Layout {
    std::vector<Vec2> sites;
    std::vector<Sector> sectors;
    double cell_radius_m = 0.0;
    double base_height_m = 30.0;
    double mobile_height_m = 2.0;

    double inter_site_distance_m() const;
    propagation::SectorPose sector_pose(int sector_id) const;
};

/// Per-user link power gains, one per (band, direction).
struct LinkGainTable {
    double dl_cellular = 0.0;
    double dl_tv = 0.0;
    double ul_cellular = 0.0;
    double ul_tv = 0.0;

    double operator()(Band b, Direction d) const {
        if (d == Direction::downlink)
            return b == Band::cellular ? dl_cellular : dl_tv;
        return b == Band::cellular ? ul_cellular : ul_tv;
    }
};

struct UserTerminal {
    int id = 0;
    Vec2 pos;
    int serving_sector = 0;
    LinkGainTable eta_db;
};

Layout build_layout(double cell_radius_m, int rings,
                    const AntennaPattern& pattern = {});

/// Drops users_per_sector users uniformly into each central-site sector wedge
/// (minimum 35 m from the site), computes all four link gains against the
/// serving sector, and returns them ordered sector-major. Deterministic in
/// rng_seed.
std::vector<UserTerminal> drop_users(const Layout& layout, int users_per_sector,
                                     std::uint64_t rng_seed, const BandSet& bands);

/// Serving-sector choice: maximum downlink cellular received power
/// (effective power + link gain); ties broken by lowest sector id.
int associate_user(const Vec2& user_pos, const Layout& layout,
                   const BandConfig& cellular_band);

/// User ids sorted by serving-link cellular gain for the given direction,
/// descending (index 0 = highest geometry); ties by ascending id.
std::vector<int> geometry_order(const std::vector<UserTerminal>& users,
                                Direction direction);

}  // namespace cogcell::netmodel
