#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cogcell/netmodel.hpp"

using namespace cogcell::netmodel;
using cogcell::propagation::AntennaPattern;
using cogcell::propagation::Band;
using cogcell::propagation::BandSet;
using cogcell::propagation::Direction;
using cogcell::propagation::default_bands;

TEST_CASE("layout site and sector counts per ring") {
    CHECK(build_layout(866.0, 0).sites.size() == 1);
    CHECK(build_layout(866.0, 0).sectors.size() == 3);
    CHECK(build_layout(866.0, 1).sites.size() == 7);
    CHECK(build_layout(866.0, 1).sectors.size() == 21);
    CHECK(build_layout(866.0, 2).sites.size() == 19);
    CHECK(build_layout(866.0, 2).sectors.size() == 57);
}

TEST_CASE("layout geometry: central site, ring distance, azimuths") {
    const Layout layout = build_layout(866.0, 1);
    CHECK(layout.inter_site_distance_m() ==
          doctest::Approx(866.0 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(layout.sites[0].x_m == doctest::Approx(0.0));
    CHECK(layout.sites[0].y_m == doctest::Approx(0.0));
    for (std::size_t i = 1; i < layout.sites.size(); ++i)
        CHECK(std::hypot(layout.sites[i].x_m, layout.sites[i].y_m) ==
              doctest::Approx(layout.inter_site_distance_m()).epsilon(1e-12));
    CHECK(layout.sectors[0].azimuth_deg == 0.0);
    CHECK(layout.sectors[1].azimuth_deg == 120.0);
    CHECK(layout.sectors[2].azimuth_deg == 240.0);
    CHECK(layout.sector_pose(4).azimuth_deg == 120.0);
    CHECK(layout.sector_pose(4).x_m == layout.sites[1].x_m);
}

TEST_CASE("layout rejects bad parameters") {
    CHECK_THROWS_AS(build_layout(0.0, 0), std::domain_error);
    CHECK_THROWS_AS(build_layout(866.0, -1), std::domain_error);
}

TEST_CASE("drop is deterministic in the seed") {
    const Layout layout = build_layout(866.0, 0);
    const BandSet bands = default_bands();
    const auto a = drop_users(layout, 10, 42, bands);
    const auto b = drop_users(layout, 10, 42, bands);
    const auto c = drop_users(layout, 10, 43, bands);
    REQUIRE(a.size() == 30);
    REQUIRE(b.size() == 30);
    bool identical = true, differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        identical = identical && a[i].pos.x_m == b[i].pos.x_m &&
                    a[i].pos.y_m == b[i].pos.y_m &&
                    a[i].eta_db.dl_cellular == b[i].eta_db.dl_cellular &&
                    a[i].eta_db.ul_tv == b[i].eta_db.ul_tv;
        differs = differs || a[i].pos.x_m != c[i].pos.x_m;
    }
    CHECK(identical);
    CHECK(differs);
}

TEST_CASE("dropped users stay inside their sector ring bounds") {
    const Layout layout = build_layout(866.0, 0);
    const auto users = drop_users(layout, 200, 1, default_bands());
    REQUIRE(users.size() == 600);
    for (const UserTerminal& u : users) {
        const double d = std::hypot(u.pos.x_m, u.pos.y_m);
        CHECK(d >= 35.0);
        CHECK(d <= 866.0 + 1e-9);
        CHECK(u.serving_sector == u.id / 200);
    }
}

TEST_CASE("mean squared drop distance matches the wedge moment") {
    // Uniform over the hexagon wedge of circumradius R: E[d^2] = 5 R^2 / 12
    // (the 35 m exclusion shifts it negligibly at R = 866).
    const Layout layout = build_layout(866.0, 0);
    const auto users = drop_users(layout, 10000, 1, default_bands());
    double sum = 0.0;
    for (const UserTerminal& u : users)
        sum += u.pos.x_m * u.pos.x_m + u.pos.y_m * u.pos.y_m;
    const double mean = sum / static_cast<double>(users.size());
    CHECK(mean == doctest::Approx(5.0 * 866.0 * 866.0 / 12.0).epsilon(0.02));
}

TEST_CASE("association picks the boresight sector") {
    const Layout layout = build_layout(866.0, 0);
    const auto& cellular = default_bands().cellular;
    CHECK(associate_user({500.0, 0.0}, layout, cellular) == 0);
    CHECK(associate_user({500.0 * std::cos(2.0943951023931953),
                          500.0 * std::sin(2.0943951023931953)},
                         layout, cellular) == 1);
    CHECK(associate_user({0.0, -500.0}, layout, cellular) == 2);
}

TEST_CASE("association tie breaks to the lowest sector id") {
    // Omnidirectional pattern on a single site: all three co-located sectors
    // receive identically, an exact tie.
    AntennaPattern omni;
    omni.enabled = false;
    const Layout layout = build_layout(866.0, 0, omni);
    const auto& cellular = default_bands().cellular;
    CHECK(associate_user({400.0, 250.0}, layout, cellular) == 0);
    CHECK(associate_user({-300.0, -100.0}, layout, cellular) == 0);
}

TEST_CASE("geometry order sorts by serving gain, ties by id") {
    std::vector<UserTerminal> users(4);
    users[0] = {0, {}, 0, {-120.0, -110.0, -100.0, -95.0}};
    users[1] = {1, {}, 0, {-110.0, -101.0, -105.0, -99.0}};
    users[2] = {2, {}, 0, {-130.0, -120.0, -101.0, -96.0}};
    users[3] = {3, {}, 0, {-110.0, -100.0, -102.0, -98.0}};
    // Downlink cellular: -110 (id 1), -110 (id 3), -120, -130.
    CHECK(geometry_order(users, Direction::downlink) ==
          std::vector<int>{1, 3, 0, 2});
    // Uplink cellular: -100, -101, -102, -105 -> ids 0, 2, 3, 1.
    CHECK(geometry_order(users, Direction::uplink) ==
          std::vector<int>{0, 2, 3, 1});
}

TEST_CASE("omnidirectional drop geometry order equals ascending distance") {
    AntennaPattern omni;
    omni.enabled = false;
    const Layout layout = build_layout(866.0, 0, omni);
    const auto users = drop_users(layout, 25, 5, default_bands());
    std::vector<UserTerminal> sector0(users.begin(), users.begin() + 25);
    const std::vector<int> order = geometry_order(sector0, Direction::downlink);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto& prev = sector0[static_cast<std::size_t>(order[i - 1])];
        const auto& cur = sector0[static_cast<std::size_t>(order[i])];
        CHECK(std::hypot(prev.pos.x_m, prev.pos.y_m) <=
              std::hypot(cur.pos.x_m, cur.pos.y_m) + 1e-9);
    }
}
