#include <doctest.h>

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cogcell/simkit.hpp"

using namespace cogcell::simkit;

TEST_CASE("config validation") {
    SimConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.drops = 0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = SimConfig{};
    cfg.users_per_sector = 0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = SimConfig{};
    cfg.allocator = AllocatorKind::exhaustive;
    cfg.users_per_sector = 21;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg.users_per_sector = 20;
    CHECK_NOTHROW(cfg.validate());
    cfg = SimConfig{};
    cfg.base_height_m = 10.0;  // outside both models' height range
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("drop seeds decorrelate indices") {
    CHECK(drop_seed(1, 0) == drop_seed(1, 0));
    CHECK(drop_seed(1, 0) != drop_seed(1, 1));
    CHECK(drop_seed(1, 0) != drop_seed(2, 0));
    // Neighbouring indices should differ in many bits, not one.
    const std::uint64_t x = drop_seed(7, 100) ^ drop_seed(7, 101);
    CHECK(std::popcount(x) > 8);
}

TEST_CASE("run_drop is deterministic in seed and index") {
    SimConfig cfg;
    cfg.users_per_sector = 8;
    const DropResult a = run_drop(cfg, 3);
    const DropResult b = run_drop(cfg, 3);
    const DropResult c = run_drop(cfg, 4);
    REQUIRE(a.users.size() == 24);
    bool identical = true, differs = false;
    for (std::size_t i = 0; i < a.users.size(); ++i) {
        identical = identical &&
                    a.users[i].dl_allocated_bps == b.users[i].dl_allocated_bps &&
                    a.users[i].ul_allocated_bps == b.users[i].ul_allocated_bps &&
                    a.users[i].dl_baseline_bps == b.users[i].dl_baseline_bps;
        differs = differs || a.users[i].dl_baseline_bps != c.users[i].dl_baseline_bps;
    }
    CHECK(identical);
    CHECK(differs);
    for (const UserThroughput& u : a.users) {
        CHECK(u.dl_baseline_bps > 0.0);
        CHECK(u.ul_baseline_bps > 0.0);
        CHECK(u.sector == u.user_id / 8);
    }
}

TEST_CASE("tv power floor makes allocation degenerate to the baseline") {
    SimConfig cfg;
    cfg.users_per_sector = 10;
    cfg.bands.tv.base_power_dbm = -300.0;
    cfg.bands.tv.mobile_power_dbm = -300.0;
    const DropResult d = run_drop(cfg, 0);
    for (const UserThroughput& u : d.users) {
        CHECK(u.dl_allocated_bps == u.dl_baseline_bps);
        CHECK(u.ul_allocated_bps == u.ul_baseline_bps);
    }
}

TEST_CASE("downlink allocation never hurts a user") {
    SimConfig cfg;
    cfg.users_per_sector = 10;
    for (int i = 0; i < 20; ++i) {
        const DropResult d = run_drop(cfg, i);
        for (const UserThroughput& u : d.users)
            CHECK(u.dl_allocated_bps >= u.dl_baseline_bps * (1.0 - 1e-12));
    }
}

TEST_CASE("metadata entries do not affect results") {
    SimConfig plain;
    plain.users_per_sector = 5;
    SimConfig tagged = plain;
    tagged.metadata["frequency_plan"] = "FFR";
    tagged.metadata["subcarrier_count"] = "512";
    const DropResult a = run_drop(plain, 1);
    const DropResult b = run_drop(tagged, 1);
    for (std::size_t i = 0; i < a.users.size(); ++i)
        CHECK(a.users[i].dl_allocated_bps == b.users[i].dl_allocated_bps);
}

TEST_CASE("percentile uses the lower-interpolation index") {
    CdfSeries s = make_cdf({4.0, 1.0, 3.0, 2.0});
    CHECK(percentile(s, 0.5) == 2.0);
    CHECK(percentile(s, 0.25) == 1.0);
    CHECK(percentile(s, 0.75) == 3.0);
    CHECK(percentile(s, 0.95) == 4.0);

    std::vector<double> v;
    for (int i = 1; i <= 100; ++i) v.push_back(i);
    const CdfSeries big = make_cdf(std::move(v));
    CHECK(percentile(big, 0.05) == 5.0);  // ceil(0.05*100) - 1 = index 4
    CHECK(percentile(big, 0.50) == 50.0);

    const CdfSeries flat = make_cdf({7.0, 7.0, 7.0});
    for (double p : {0.05, 0.5, 0.95}) CHECK(percentile(flat, p) == 7.0);

    CHECK_THROWS_AS(percentile(CdfSeries{}, 0.5), std::domain_error);
    CHECK_THROWS_AS(percentile(s, 0.0), std::domain_error);
    CHECK_THROWS_AS(percentile(s, 1.0), std::domain_error);
}

TEST_CASE("cdf series is sorted with fractions reaching one") {
    const CdfSeries s = make_cdf({5.0, 1.0, 9.0, 3.0});
    REQUIRE(s.values.size() == 4);
    REQUIRE(s.fractions.size() == 4);
    CHECK(s.values == std::vector<double>{1.0, 3.0, 5.0, 9.0});
    CHECK(s.fractions[0] == doctest::Approx(0.25));
    CHECK(s.fractions[3] == 1.0);
}

TEST_CASE("single-drop campaign has one point per user per series") {
    SimConfig cfg;
    cfg.drops = 1;
    cfg.users_per_sector = 7;
    const CampaignResult r = run_campaign(cfg);
    CHECK(r.drops == 1);
    CHECK(r.users_per_drop == 21);
    for (const LinkResult* link : {&r.downlink, &r.uplink}) {
        CHECK(link->traditional.values.size() == 21);
        CHECK(link->cognitive.values.size() == 21);
        CHECK(link->edge_gain > 0.0);
    }
}

TEST_CASE("campaign equals the ordered merge of its drops") {
    SimConfig cfg;
    cfg.drops = 6;
    cfg.users_per_sector = 6;
    const CampaignResult r = run_campaign(cfg);

    std::vector<double> dl_base;
    for (int i = 0; i < cfg.drops; ++i)
        for (const UserThroughput& u : run_drop(cfg, i).users)
            dl_base.push_back(u.dl_baseline_bps);
    const CdfSeries manual = make_cdf(std::move(dl_base));
    REQUIRE(manual.values.size() == r.downlink.traditional.values.size());
    for (std::size_t i = 0; i < manual.values.size(); ++i)
        CHECK(manual.values[i] == r.downlink.traditional.values[i]);
}

TEST_CASE("campaign output is invariant to thread count") {
    SimConfig cfg;
    cfg.drops = 9;
    cfg.users_per_sector = 6;
    const CampaignResult a = run_campaign(cfg, 1);
    const CampaignResult b = run_campaign(cfg, 4);
    for (int li = 0; li < 2; ++li) {
        const LinkResult& la = li == 0 ? a.downlink : a.uplink;
        const LinkResult& lb = li == 0 ? b.downlink : b.uplink;
        REQUIRE(la.cognitive.values.size() == lb.cognitive.values.size());
        for (std::size_t i = 0; i < la.cognitive.values.size(); ++i) {
            CHECK(la.cognitive.values[i] == lb.cognitive.values[i]);
            CHECK(la.traditional.values[i] == lb.traditional.values[i]);
        }
        CHECK(la.cognitive_summary.mean_bps == lb.cognitive_summary.mean_bps);
        CHECK(la.edge_gain == lb.edge_gain);
    }
}

TEST_CASE("large-cell uplink edge gain approaches the low-snr gain ratio") {
    // At 10 km radius the cell edge is deep in the power-limited regime, so
    // the 5th-percentile uplink gain converges to the linear tv/cellular
    // gain ratio (about 2.91 with the default folding).
    SimConfig cfg;
    cfg.cell_radius_m = 10000.0;
    cfg.drops = 120;
    const CampaignResult r = run_campaign(cfg, 2);
    CHECK(r.uplink.edge_gain ==
          doctest::Approx(2.913290378943).epsilon(0.02));
}
