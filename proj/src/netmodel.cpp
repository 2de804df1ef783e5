#include "cogcell/netmodel.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cogcell::netmodel {

namespace {

constexpr double kMinDropDistanceM = 35.0;
constexpr double kPi = 3.141592653589793;

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa draw; avoids the implementation-defined distributions.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct AxialCoord {
    int q;
    int r;
    int dist() const {
        return (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2;
    }
};

}  // namespace

double Layout::inter_site_distance_m() const {
    return std::sqrt(3.0) * cell_radius_m;
}

propagation::SectorPose Layout::sector_pose(int sector_id) const {
    const Sector& s = sectors.at(static_cast<std::size_t>(sector_id));
    return propagation::SectorPose{s.site_pos.x_m, s.site_pos.y_m, s.azimuth_deg,
                                   base_height_m};
}

Layout build_layout(double cell_radius_m, int rings, const AntennaPattern& pattern) {
    if (!(cell_radius_m > 0.0))
        throw std::domain_error("cell radius must be positive");
    if (rings < 0) throw std::domain_error("rings must be >= 0");
    pattern.validate();

    Layout layout;
    layout.cell_radius_m = cell_radius_m;
    const double isd = layout.inter_site_distance_m();
    // Lattice basis chosen so hexagon corners sit at azimuths 0, 60, ... and
    // flat sides face the six neighbor sites.
    const double ax = isd * std::cos(kPi / 6.0), ay = isd * std::sin(kPi / 6.0);
    const double bx = 0.0, by = isd;

    std::vector<AxialCoord> coords;
    for (int q = -rings; q <= rings; ++q)
        for (int r = -rings; r <= rings; ++r)
            if (AxialCoord{q, r}.dist() <= rings) coords.push_back({q, r});
    std::sort(coords.begin(), coords.end(), [](const AxialCoord& a, const AxialCoord& b) {
        if (a.dist() != b.dist()) return a.dist() < b.dist();
        if (a.q != b.q) return a.q < b.q;
        return a.r < b.r;
    });

    for (const AxialCoord& c : coords)
        layout.sites.push_back({c.q * ax + c.r * bx, c.q * ay + c.r * by});
    for (std::size_t i = 0; i < layout.sites.size(); ++i)
        for (int s = 0; s < 3; ++s)
            layout.sectors.push_back(Sector{static_cast<int>(i) * 3 + s,
                                            layout.sites[i], 120.0 * s, pattern});
    return layout;
}

namespace {

// Uniform sample over the 120-degree hexagon wedge of circumradius r around
// boresight azimuth 0: two equilateral triangles (O, r*e(-60), r*e(0)) and
// (O, r*e(0), r*e(60)).
Vec2 sample_wedge(std::mt19937_64& rng, double radius_m) {
    const bool upper = uniform01(rng) < 0.5;
    double u = uniform01(rng);
    double v = uniform01(rng);
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    const double a0 = upper ? 0.0 : -kPi / 3.0;
    const double a1 = upper ? kPi / 3.0 : 0.0;
    const double x = u * radius_m * std::cos(a0) + v * radius_m * std::cos(a1);
    const double y = u * radius_m * std::sin(a0) + v * radius_m * std::sin(a1);
    return {x, y};
}

}  // namespace

std::vector<UserTerminal> drop_users(const Layout& layout, int users_per_sector,
                                     std::uint64_t rng_seed, const BandSet& bands) {
    if (users_per_sector < 1)
        throw std::domain_error("users_per_sector must be >= 1");
    if (layout.sectors.size() < 3) throw std::domain_error("layout has no sectors");

    std::mt19937_64 rng(rng_seed);
    std::vector<UserTerminal> users;
    users.reserve(static_cast<std::size_t>(users_per_sector) * 3);

    for (int s = 0; s < 3; ++s) {
        const Sector& sector = layout.sectors[static_cast<std::size_t>(s)];
        const double az = sector.azimuth_deg * kPi / 180.0;
        const double ca = std::cos(az), sa = std::sin(az);
        const propagation::SectorPose pose = layout.sector_pose(s);
        for (int i = 0; i < users_per_sector; ++i) {
            Vec2 p;
            do {
                p = sample_wedge(rng, layout.cell_radius_m);
            } while (std::hypot(p.x_m, p.y_m) < kMinDropDistanceM);
            UserTerminal u;
            u.id = s * users_per_sector + i;
            u.pos = {sector.site_pos.x_m + p.x_m * ca - p.y_m * sa,
                     sector.site_pos.y_m + p.x_m * sa + p.y_m * ca};
            u.serving_sector = sector.id;
            const propagation::MobilePos mp{u.pos.x_m, u.pos.y_m,
                                            layout.mobile_height_m};
            u.eta_db.dl_cellular = propagation::link_gain_db(
                bands.cellular, sector.pattern, pose, mp, Direction::downlink);
            u.eta_db.dl_tv = propagation::link_gain_db(bands.tv, sector.pattern, pose,
                                                       mp, Direction::downlink);
            u.eta_db.ul_cellular = propagation::link_gain_db(
                bands.cellular, sector.pattern, pose, mp, Direction::uplink);
            u.eta_db.ul_tv = propagation::link_gain_db(bands.tv, sector.pattern, pose,
                                                       mp, Direction::uplink);
            users.push_back(u);
        }
    }
    return users;
}

int associate_user(const Vec2& user_pos, const Layout& layout,
                   const BandConfig& cellular_band) {
    if (layout.sectors.empty()) throw std::domain_error("empty layout");
    const double p_dl = cellular_band.downlink_power_dbm();
    int best_id = -1;
    double best_rx = 0.0;
    for (const Sector& s : layout.sectors) {
        const propagation::MobilePos mp{user_pos.x_m, user_pos.y_m,
                                        layout.mobile_height_m};
        const double rx = p_dl + propagation::link_gain_db(cellular_band, s.pattern,
                                                           layout.sector_pose(s.id), mp,
                                                           Direction::downlink);
        if (best_id < 0 || rx > best_rx) {
            best_id = s.id;
            best_rx = rx;
        }
    }
    return best_id;
}

std::vector<int> geometry_order(const std::vector<UserTerminal>& users,
                                Direction direction) {
    std::vector<const UserTerminal*> ptrs;
    ptrs.reserve(users.size());
    for (const UserTerminal& u : users) ptrs.push_back(&u);
    std::sort(ptrs.begin(), ptrs.end(),
              [direction](const UserTerminal* a, const UserTerminal* b) {
                  const double ea = a->eta_db(Band::cellular, direction);
                  const double eb = b->eta_db(Band::cellular, direction);
                  if (ea != eb) return ea > eb;
                  return a->id < b->id;
              });
    std::vector<int> order;
    order.reserve(ptrs.size());
    for (const UserTerminal* p : ptrs) order.push_back(p->id);
    return order;
}

}  // namespace cogcell::netmodel
