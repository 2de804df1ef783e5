// cogcell: band-allocation simulator CLI.
//
// Subcommands: simulate (Monte-Carlo campaign -> CSV + JSON), allocate
// (single-drop allocation dump), pathloss (model evaluation), verify-lemma
// (exchange-inequality property suite), oracle (greedy-vs-exhaustive
// comparison). Exit codes: 0 success, 1 verification failure, 2 config or
// flag errors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cogcell/allocation.hpp"
#include "cogcell/config.hpp"
#include "cogcell/netmodel.hpp"
#include "cogcell/propagation.hpp"
#include "cogcell/rates.hpp"
#include "cogcell/simkit.hpp"

namespace {

namespace alloc = cogcell::allocation;
namespace cfg = cogcell::config;
namespace net = cogcell::netmodel;
namespace prop = cogcell::propagation;
namespace sim = cogcell::simkit;

using prop::Band;
using prop::Direction;

constexpr double kPi = 3.141592653589793;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Direction parse_link(const std::string& link) {
    return link == "dl" ? Direction::downlink : Direction::uplink;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

nlohmann::json summary_json(const sim::SeriesSummary& s) {
    return {{"mean_bps", s.mean_bps},
            {"p5_bps", s.p5_bps},
            {"p50_bps", s.p50_bps},
            {"p95_bps", s.p95_bps}};
}

int run_simulate(const std::string& config_path, std::optional<std::uint64_t> seed,
                 const std::string& out_dir, int threads) {
    sim::SimConfig config = cfg::load_config_file(config_path);
    if (seed) config.seed = *seed;
    config.validate();

    const sim::CampaignResult result = sim::run_campaign(config, threads);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path csv_path =
        std::filesystem::path(out_dir) / "throughput_cdf.csv";
    const std::filesystem::path json_path =
        std::filesystem::path(out_dir) / "summary.json";

    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) {
        std::cerr << "error: cannot write " << csv_path.string() << "\n";
        return 2;
    }
    csv << "link,scenario,throughput_bps,cdf\n";
    for (Direction dir : {Direction::downlink, Direction::uplink}) {
        const sim::LinkResult& link = result[dir];
        for (sim::Scenario sc : {sim::Scenario::traditional, sim::Scenario::cognitive}) {
            const sim::CdfSeries& series =
                sc == sim::Scenario::traditional ? link.traditional : link.cognitive;
            for (std::size_t i = 0; i < series.values.size(); ++i)
                csv << sim::direction_name(dir) << ',' << sim::scenario_name(sc) << ','
                    << fmt17(series.values[i]) << ',' << fmt17(series.fractions[i])
                    << '\n';
        }
    }
    csv.close();

    nlohmann::json j;
    j["config"] = cfg::config_echo(config);
    j["drops"] = result.drops;
    j["users_per_drop"] = result.users_per_drop;
    for (Direction dir : {Direction::downlink, Direction::uplink}) {
        const sim::LinkResult& link = result[dir];
        nlohmann::json& out = j["links"][sim::direction_name(dir)];
        out["traditional"] = summary_json(link.traditional_summary);
        out["cognitive"] = summary_json(link.cognitive_summary);
        out["edge_gain"] = link.edge_gain;
    }
    std::ofstream js(json_path, std::ios::binary);
    if (!js) {
        std::cerr << "error: cannot write " << json_path.string() << "\n";
        return 2;
    }
    js << j.dump(2) << '\n';
    js.close();

    std::cout << "wrote " << csv_path.string() << "\n";
    std::cout << "wrote " << json_path.string() << "\n";
    return 0;
}

int run_allocate(const std::string& config_path, std::uint64_t drop_seed,
                 const std::string& link) {
    sim::SimConfig config = cfg::load_config_file(config_path);
    config.validate();
    const Direction dir = parse_link(link);

    net::Layout layout =
        net::build_layout(config.cell_radius_m, config.rings, config.pattern);
    layout.base_height_m = config.base_height_m;
    layout.mobile_height_m = config.mobile_height_m;
    const std::vector<net::UserTerminal> users =
        net::drop_users(layout, config.users_per_sector, drop_seed, config.bands);

    nlohmann::json j;
    j["link"] = link;
    j["drop_seed"] = drop_seed;
    j["allocator"] = sim::allocator_name(config.allocator);
    j["sectors"] = nlohmann::json::array();
    for (int s = 0; s < 3; ++s) {
        std::vector<net::UserTerminal> sector_users;
        for (const net::UserTerminal& u : users)
            if (u.serving_sector == s) sector_users.push_back(u);
        if (sector_users.empty()) continue;

        const std::vector<int> ordering = net::geometry_order(sector_users, dir);
        const int n = static_cast<int>(ordering.size());
        std::vector<double> pf_by_k;
        for (int k = 0; k <= n; ++k) {
            const cogcell::rates::RateReport report = alloc::partition_rates(
                dir, sector_users, ordering, k, config.bands, config.budget);
            std::vector<double> allocated;
            for (const auto& e : report.entries) allocated.push_back(*e.allocated_bps);
            pf_by_k.push_back(alloc::pf_metric(allocated));
        }

        alloc::Allocation chosen;
        switch (config.allocator) {
            case sim::AllocatorKind::prefix_scan:
                chosen = alloc::allocate_prefix_scan(dir, sector_users, config.bands,
                                                     config.budget);
                break;
            case sim::AllocatorKind::first_decrease:
                chosen = alloc::allocate_first_decrease(dir, sector_users, config.bands,
                                                        config.budget);
                break;
            case sim::AllocatorKind::exhaustive:
                chosen = alloc::allocate_exhaustive(dir, sector_users, config.bands,
                                                    config.budget);
                break;
        }

        nlohmann::json sector_json;
        sector_json["sector"] = s;
        sector_json["ordering"] = ordering;
        sector_json["pf_by_k"] = pf_by_k;
        sector_json["chosen"] = {{"tv_count", chosen.tv_count},
                                 {"tv_set", chosen.tv_set},
                                 {"cellular_set", chosen.cellular_set},
                                 {"pf_value", chosen.pf_value}};
        j["sectors"].push_back(sector_json);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_pathloss(const std::string& model, double freq_mhz, double d_km,
                 double h_base, double h_mobile) {
    const double pl = prop::path_loss_db(cfg::parse_model(model), freq_mhz, h_base,
                                         h_mobile, d_km);
    std::printf("%.15g\n", pl);
    return 0;
}

// One randomly placed user around a sector at the origin, with gains for
// all four (band, direction) links.
net::UserTerminal random_user(std::mt19937_64& rng, int id, const prop::BandSet& bands,
                              const prop::AntennaPattern& pattern) {
    const double d_m = 35.0 + uniform01(rng) * (866.0 - 35.0);
    const double az = (uniform01(rng) * 2.0 - 1.0) * kPi;
    net::UserTerminal u;
    u.id = id;
    u.pos = {d_m * std::cos(az), d_m * std::sin(az)};
    const prop::SectorPose pose{0.0, 0.0, 0.0, 30.0};
    const prop::MobilePos mp{u.pos.x_m, u.pos.y_m, 2.0};
    u.eta_db.dl_cellular =
        prop::link_gain_db(bands.cellular, pattern, pose, mp, Direction::downlink);
    u.eta_db.dl_tv = prop::link_gain_db(bands.tv, pattern, pose, mp, Direction::downlink);
    u.eta_db.ul_cellular =
        prop::link_gain_db(bands.cellular, pattern, pose, mp, Direction::uplink);
    u.eta_db.ul_tv = prop::link_gain_db(bands.tv, pattern, pose, mp, Direction::uplink);
    return u;
}

int run_verify_lemma(const std::string& link, int trials, std::uint64_t seed) {
    const Direction dir = parse_link(link);
    const prop::BandSet bands = prop::default_bands();
    const cogcell::rates::LinkBudget budget;
    const prop::AntennaPattern pattern;
    std::mt19937_64 rng(seed);

    constexpr double kRelTol = 1e-12;
    int evaluated = 0, skipped = 0, violations = 0;

    for (int t = 0; t < trials; ++t) {
        net::UserTerminal a = random_user(rng, 0, bands, pattern);
        net::UserTerminal b = random_user(rng, 1, bands, pattern);
        if (a.eta_db(Band::cellular, dir) < b.eta_db(Band::cellular, dir))
            std::swap(a, b);
        alloc::PartitionSizes sizes;
        sizes.tv = static_cast<int>(uniform01(rng) * 20.0);
        sizes.cellular = 1 + static_cast<int>(uniform01(rng) * 20.0);

        bool precondition = true;
        if (dir == Direction::downlink) {
            // kappa < 0: TV effective receive level below cellular, per user.
            for (const net::UserTerminal* u : {&a, &b})
                precondition = precondition &&
                               bands.tv.downlink_power_dbm() + u->eta_db(Band::tv, dir) <
                                   bands.cellular.downlink_power_dbm() +
                                       u->eta_db(Band::cellular, dir);
        } else {
            // (|U_T|+1) P_T eta_T > (|U_c|-1) P_c eta_c for both users.
            for (const net::UserTerminal* u : {&a, &b}) {
                const double tv_side =
                    (sizes.tv + 1) *
                    std::pow(10.0, (bands.tv.uplink_power_dbm() +
                                    u->eta_db(Band::tv, dir)) /
                                       10.0);
                const double cell_side =
                    (sizes.cellular - 1) *
                    std::pow(10.0, (bands.cellular.uplink_power_dbm() +
                                    u->eta_db(Band::cellular, dir)) /
                                       10.0);
                precondition = precondition && tv_side > cell_side;
            }
        }
        if (!precondition) {
            ++skipped;
            continue;
        }
        ++evaluated;

        const alloc::ExchangeMetrics m =
            alloc::exchange_compare(a, b, sizes, dir, bands, budget);
        const bool ok = dir == Direction::downlink
                            ? m.scheme1 >= m.scheme2 - kRelTol * std::abs(m.scheme2)
                            : m.scheme2 >= m.scheme1 - kRelTol * std::abs(m.scheme1);
        if (!ok) {
            ++violations;
            if (violations <= 10)
                std::printf("violation: trial=%d eta_c1=%.12g eta_c2=%.12g "
                            "tv=%d cellular=%d scheme1=%.17g scheme2=%.17g\n",
                            t, a.eta_db(Band::cellular, dir),
                            b.eta_db(Band::cellular, dir), sizes.tv, sizes.cellular,
                            m.scheme1, m.scheme2);
        }
    }

    std::printf("link=%s trials=%d evaluated=%d skipped=%d violations=%d\n",
                link.c_str(), trials, evaluated, skipped, violations);
    return violations == 0 ? 0 : 1;
}

int run_oracle(int users, int trials, const std::string& link, std::uint64_t seed) {
    const Direction dir = parse_link(link);
    sim::SimConfig config;
    config.users_per_sector = users;
    config.allocator = sim::AllocatorKind::exhaustive;
    config.validate();  // enforces the N <= 20 guard

    net::Layout layout =
        net::build_layout(config.cell_radius_m, config.rings, config.pattern);

    constexpr double kRelTol = 1e-9;
    int matches = 0, losses = 0;
    double worst_gap = 0.0;  // max over trials of exhaustive_pf - greedy_pf

    for (int t = 0; t < trials; ++t) {
        const std::vector<net::UserTerminal> all = net::drop_users(
            layout, users, sim::drop_seed(seed, static_cast<std::uint64_t>(t)),
            config.bands);
        std::vector<net::UserTerminal> sector_users(all.begin(), all.begin() + users);

        const alloc::Allocation greedy =
            alloc::allocate_prefix_scan(dir, sector_users, config.bands, config.budget);
        const alloc::Allocation exact =
            alloc::allocate_exhaustive(dir, sector_users, config.bands, config.budget);

        std::vector<int> g = greedy.tv_set, e = exact.tv_set;
        std::sort(g.begin(), g.end());
        std::sort(e.begin(), e.end());
        if (g == e) ++matches;

        const double gap = exact.pf_value - greedy.pf_value;
        worst_gap = std::max(worst_gap, gap);
        if (gap < -kRelTol * std::abs(greedy.pf_value)) {
            ++losses;
            std::printf("invariant violation: trial=%d exhaustive_pf=%.17g < "
                        "greedy_pf=%.17g\n",
                        t, exact.pf_value, greedy.pf_value);
        }
    }

    std::printf("link=%s users=%d trials=%d match_rate=%.6f worst_pf_gap=%.12g\n",
                link.c_str(), users, trials,
                static_cast<double>(matches) / static_cast<double>(trials), worst_gap);
    return losses == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cogcell: cellular + TV-band allocation simulator"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run a Monte-Carlo campaign");
    std::string sim_config;
    std::uint64_t sim_seed = 0;
    std::string sim_out = ".";
    int sim_threads = 1;
    simulate->add_option("--config", sim_config, "config file")
        ->required()
        ->check(CLI::ExistingFile);
    auto* seed_opt = simulate->add_option("--seed", sim_seed, "override config seed");
    simulate->add_option("--out", sim_out, "output directory")->capture_default_str();
    simulate->add_option("--threads", sim_threads, "worker threads")->capture_default_str()
        ->check(CLI::PositiveNumber);

    // allocate
    auto* allocate = app.add_subcommand("allocate", "dump one drop's allocation");
    std::string alloc_config, alloc_link;
    std::uint64_t alloc_drop_seed = 0;
    allocate->add_option("--config", alloc_config, "config file")
        ->required()
        ->check(CLI::ExistingFile);
    allocate->add_option("--drop-seed", alloc_drop_seed, "drop RNG seed")->required();
    allocate->add_option("--link", alloc_link, "link direction")
        ->required()
        ->check(CLI::IsMember({"dl", "ul"}));

    // pathloss
    auto* pathloss = app.add_subcommand("pathloss", "evaluate a path-loss model");
    std::string pl_model;
    double pl_freq = 0.0, pl_d = 0.0, pl_h_base = 30.0, pl_h_mobile = 2.0;
    pathloss->add_option("--model", pl_model, "hata or cost231")->required();
    pathloss->add_option("--freq-mhz", pl_freq, "carrier frequency, MHz")->required();
    pathloss->add_option("--d-km", pl_d, "distance, km")->required();
    pathloss->add_option("--h-base", pl_h_base, "base antenna height, m")->capture_default_str();
    pathloss->add_option("--h-mobile", pl_h_mobile, "mobile antenna height, m")->capture_default_str();

    // verify-lemma
    auto* verify = app.add_subcommand("verify-lemma",
                                      "exchange-inequality property suite");
    std::string vl_link;
    int vl_trials = 10000;
    std::uint64_t vl_seed = 1;
    verify->add_option("--link", vl_link, "link direction")
        ->required()
        ->check(CLI::IsMember({"dl", "ul"}));
    verify->add_option("--trials", vl_trials, "random pairs")->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", vl_seed, "RNG seed")->capture_default_str();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "greedy vs exhaustive comparison");
    int or_users = 10, or_trials = 100;
    std::string or_link;
    std::uint64_t or_seed = 1;
    oracle->add_option("--users", or_users, "users per drop")
        ->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("--trials", or_trials, "random drops")->capture_default_str()
        ->check(CLI::PositiveNumber);
    oracle->add_option("--link", or_link, "link direction")
        ->required()
        ->check(CLI::IsMember({"dl", "ul"}));
    oracle->add_option("--seed", or_seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed())
            return run_simulate(sim_config,
                                seed_opt->count() ? std::optional(sim_seed)
                                                  : std::nullopt,
                                sim_out, sim_threads);
        if (allocate->parsed()) return run_allocate(alloc_config, alloc_drop_seed, alloc_link);
        if (pathloss->parsed())
            return run_pathloss(pl_model, pl_freq, pl_d, pl_h_base, pl_h_mobile);
        if (verify->parsed()) return run_verify_lemma(vl_link, vl_trials, vl_seed);
        if (oracle->parsed()) return run_oracle(or_users, or_trials, or_link, or_seed);
    } catch (const cfg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
