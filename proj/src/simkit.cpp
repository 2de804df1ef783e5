#include "cogcell/simkit.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace cogcell::simkit {

namespace {

using allocation::Allocation;
using netmodel::UserTerminal;
using propagation::Band;

Allocation run_allocator(AllocatorKind kind, Direction direction,
                         const std::vector<UserTerminal>& users, const BandSet& bands,
                         const LinkBudget& budget) {
    switch (kind) {
        case AllocatorKind::prefix_scan:
            return allocation::allocate_prefix_scan(direction, users, bands, budget);
        case AllocatorKind::first_decrease:
            return allocation::allocate_first_decrease(direction, users, bands,
                                                       budget);
        case AllocatorKind::exhaustive:
            return allocation::allocate_exhaustive(direction, users, bands, budget);
    }
    throw std::logic_error("unhandled allocator kind");
}

}  // namespace

void SimConfig::validate() const {
    if (drops < 1) throw std::domain_error("drops must be >= 1");
    if (users_per_sector < 1)
        throw std::domain_error("users_per_sector must be >= 1");
    if (allocator == AllocatorKind::exhaustive && users_per_sector > 20)
        throw std::domain_error(
            "exhaustive allocator requires users_per_sector <= 20");
    if (!(cell_radius_m > 0.0))
        throw std::domain_error("cell_radius_m must be positive");
    if (rings < 0) throw std::domain_error("rings must be >= 0");
    pattern.validate();
    budget.validate();
    bands.cellular.validate();
    bands.tv.validate();
    // Probe both models with the configured heights to fail fast on
    // out-of-range geometry.
    propagation::path_loss_db(bands.cellular.model, bands.cellular.freq_mhz,
                              base_height_m, mobile_height_m, 1.0);
    propagation::path_loss_db(bands.tv.model, bands.tv.freq_mhz, base_height_m,
                              mobile_height_m, 1.0);
}

std::uint64_t drop_seed(std::uint64_t campaign_seed, std::uint64_t drop_index) {
    // splitmix64 finalizer over a golden-ratio stride.
    std::uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ull * (drop_index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

CdfSeries make_cdf(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    CdfSeries series;
    series.values = std::move(samples);
    const std::size_t n = series.values.size();
    series.fractions.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        series.fractions[i] =
            static_cast<double>(i + 1) / static_cast<double>(n);
    return series;
}

double percentile(const CdfSeries& series, double p) {
    if (series.values.empty())
        throw std::domain_error("percentile of an empty series");
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("percentile fraction must be in (0, 1)");
    const auto n = static_cast<double>(series.values.size());
    // Epsilon guard: p*n can land a hair above an exact integer (e.g.
    // 0.05 * 100), which would otherwise push ceil one index too far.
    const double idx = std::ceil(p * n - 1e-9) - 1.0;
    const auto i = static_cast<std::size_t>(std::max(idx, 0.0));
    return series.values[std::min(i, series.values.size() - 1)];
}

SeriesSummary summarize(const CdfSeries& series) {
    if (series.values.empty())
        throw std::domain_error("summary of an empty series");
    SeriesSummary s;
    double sum = 0.0;
    for (double v : series.values) sum += v;  // sorted order: deterministic
    s.mean_bps = sum / static_cast<double>(series.values.size());
    s.p5_bps = percentile(series, 0.05);
    s.p50_bps = percentile(series, 0.50);
    s.p95_bps = percentile(series, 0.95);
    return s;
}

DropResult run_drop(const SimConfig& config, int drop_index) {
    config.validate();
    if (drop_index < 0) throw std::domain_error("drop_index must be >= 0");

    netmodel::Layout layout =
        netmodel::build_layout(config.cell_radius_m, config.rings, config.pattern);
    layout.base_height_m = config.base_height_m;
    layout.mobile_height_m = config.mobile_height_m;

    const std::vector<UserTerminal> users =
        netmodel::drop_users(layout, config.users_per_sector,
                             drop_seed(config.seed, drop_index), config.bands);

    DropResult result;
    result.drop_index = drop_index;
    result.users.resize(users.size());
    for (std::size_t i = 0; i < users.size(); ++i) {
        result.users[i].user_id = users[i].id;
        result.users[i].sector = users[i].serving_sector;
    }

    // Sectors are independent: allocate per sector, per direction.
    for (int s = 0; s < 3; ++s) {
        std::vector<UserTerminal> sector_users;
        std::vector<std::size_t> slots;
        for (std::size_t i = 0; i < users.size(); ++i) {
            if (users[i].serving_sector != s) continue;
            sector_users.push_back(users[i]);
            slots.push_back(i);
        }
        if (sector_users.empty()) continue;
        for (Direction dir : {Direction::downlink, Direction::uplink}) {
            const rates::RateReport base = rates::baseline_rates(
                dir, sector_users, config.bands.cellular, config.budget);
            const Allocation alloc = run_allocator(config.allocator, dir,
                                                   sector_users, config.bands,
                                                   config.budget);
            const std::unordered_set<int> tv_ids(alloc.tv_set.begin(),
                                                 alloc.tv_set.end());
            const int m_tv = static_cast<int>(alloc.tv_set.size());
            const int m_c = static_cast<int>(alloc.cellular_set.size());
            for (std::size_t j = 0; j < sector_users.size(); ++j) {
                const UserTerminal& u = sector_users[j];
                const bool in_tv = tv_ids.count(u.id) > 0;
                const Band band = in_tv ? Band::tv : Band::cellular;
                const int group = in_tv ? m_tv : m_c;
                const double allocated = rates::user_rate_bps(
                    dir, config.bands[band], group, u.eta_db(band, dir),
                    config.budget);
                UserThroughput& out = result.users[slots[j]];
                if (dir == Direction::downlink) {
                    out.dl_baseline_bps = base.entries[j].baseline_bps;
                    out.dl_allocated_bps = allocated;
                } else {
                    out.ul_baseline_bps = base.entries[j].baseline_bps;
                    out.ul_allocated_bps = allocated;
                }
            }
        }
    }
    return result;
}

namespace {

CampaignResult reduce_drops(const SimConfig& config,
                            const std::vector<DropResult>& drops) {
    std::vector<double> dl_base, dl_alloc, ul_base, ul_alloc;
    const std::size_t total =
        drops.size() * static_cast<std::size_t>(config.users_per_sector) * 3;
    dl_base.reserve(total);
    dl_alloc.reserve(total);
    ul_base.reserve(total);
    ul_alloc.reserve(total);
    for (const DropResult& d : drops) {
        for (const UserThroughput& u : d.users) {
            dl_base.push_back(u.dl_baseline_bps);
            dl_alloc.push_back(u.dl_allocated_bps);
            ul_base.push_back(u.ul_baseline_bps);
            ul_alloc.push_back(u.ul_allocated_bps);
        }
    }

    const auto make_link = [](std::vector<double> base, std::vector<double> alloc) {
        LinkResult link;
        link.traditional = make_cdf(std::move(base));
        link.cognitive = make_cdf(std::move(alloc));
        link.traditional_summary = summarize(link.traditional);
        link.cognitive_summary = summarize(link.cognitive);
        link.edge_gain =
            link.cognitive_summary.p5_bps / link.traditional_summary.p5_bps;
        return link;
    };

    CampaignResult result;
    result.drops = static_cast<int>(drops.size());
    result.users_per_drop = config.users_per_sector * 3;
    result.downlink = make_link(std::move(dl_base), std::move(dl_alloc));
    result.uplink = make_link(std::move(ul_base), std::move(ul_alloc));
    return result;
}

}  // namespace

CampaignResult run_campaign(const SimConfig& config, int n_threads) {
    config.validate();
    if (n_threads < 1) throw std::domain_error("n_threads must be >= 1");

    std::vector<DropResult> drops(static_cast<std::size_t>(config.drops));
    const int workers = std::min(n_threads, config.drops);
    if (workers <= 1) {
        for (int i = 0; i < config.drops; ++i)
            drops[static_cast<std::size_t>(i)] = run_drop(config, i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int i = w; i < config.drops; i += workers)
                        drops[static_cast<std::size_t>(i)] = run_drop(config, i);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return reduce_drops(config, drops);
}

const char* allocator_name(AllocatorKind k) {
    switch (k) {
        case AllocatorKind::prefix_scan: return "prefix_scan";
        case AllocatorKind::first_decrease: return "first_decrease";
        case AllocatorKind::exhaustive: return "exhaustive";
    }
    return "unknown";
}

const char* scenario_name(Scenario s) {
    return s == Scenario::traditional ? "traditional" : "cognitive";
}

const char* direction_name(Direction d) {
    return d == Direction::downlink ? "dl" : "ul";
}

}  // namespace cogcell::simkit
