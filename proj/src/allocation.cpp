#include "cogcell/allocation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace cogcell::allocation {

namespace {

// Per-instance rate table in geometry order: rate(pos, band, group size).
// Rates come from rates::user_rate_bps so the PF values the allocators
// compute are bitwise equal to pf_metric over partition_rates output.
struct ScanContext {
    Direction dir;
    int n = 0;
    std::vector<int> ordering;
    std::vector<const UserTerminal*> by_pos;
    std::vector<double> lnrate;  // [pos][band][m-1]

    double ln_at(int pos, Band b, int m) const {
        const int bi = b == Band::tv ? 1 : 0;
        return lnrate[(static_cast<std::size_t>(pos) * 2 + bi) * n + (m - 1)];
    }
};

ScanContext make_context(Direction dir, const std::vector<UserTerminal>& users,
                         const BandSet& bands, const LinkBudget& budget) {
    if (users.empty()) throw std::domain_error("allocation requires at least one user");
    ScanContext ctx;
    ctx.dir = dir;
    ctx.n = static_cast<int>(users.size());
    ctx.ordering = netmodel::geometry_order(users, dir);

    std::unordered_map<int, const UserTerminal*> by_id;
    for (const UserTerminal& u : users) by_id.emplace(u.id, &u);
    for (int id : ctx.ordering) ctx.by_pos.push_back(by_id.at(id));

    ctx.lnrate.resize(static_cast<std::size_t>(ctx.n) * 2 * ctx.n);
    for (int pos = 0; pos < ctx.n; ++pos) {
        const UserTerminal& u = *ctx.by_pos[static_cast<std::size_t>(pos)];
        for (int bi = 0; bi < 2; ++bi) {
            const Band b = bi == 0 ? Band::cellular : Band::tv;
            const double eta = u.eta_db(b, dir);
            for (int m = 1; m <= ctx.n; ++m)
                ctx.lnrate[(static_cast<std::size_t>(pos) * 2 + bi) * ctx.n + (m - 1)] =
                    std::log(rates::user_rate_bps(dir, bands[b], m, eta, budget));
        }
    }
    return ctx;
}

// TV membership at scan position k: top-k on the downlink, bottom-k on the
// uplink.
bool in_tv_at_k(Direction dir, int n, int pos, int k) {
    return dir == Direction::downlink ? pos < k : pos >= n - k;
}

double pf_for_k(const ScanContext& ctx, int k) {
    double pf = 0.0;
    for (int pos = 0; pos < ctx.n; ++pos)
        pf += in_tv_at_k(ctx.dir, ctx.n, pos, k) ? ctx.ln_at(pos, Band::tv, k)
                                                 : ctx.ln_at(pos, Band::cellular, ctx.n - k);
    return pf;
}

double pf_for_mask(const ScanContext& ctx, std::uint32_t tv_mask) {
    const int k = std::popcount(tv_mask);
    double pf = 0.0;
    for (int pos = 0; pos < ctx.n; ++pos)
        pf += (tv_mask >> pos & 1u) ? ctx.ln_at(pos, Band::tv, k)
                                    : ctx.ln_at(pos, Band::cellular, ctx.n - k);
    return pf;
}

Allocation from_scan_k(const ScanContext& ctx, int k, double pf) {
    Allocation a;
    a.direction = ctx.dir;
    a.ordering = ctx.ordering;
    a.tv_count = k;
    a.pf_value = pf;
    for (int pos = 0; pos < ctx.n; ++pos) {
        if (in_tv_at_k(ctx.dir, ctx.n, pos, k))
            a.tv_set.push_back(ctx.ordering[static_cast<std::size_t>(pos)]);
        else
            a.cellular_set.push_back(ctx.ordering[static_cast<std::size_t>(pos)]);
    }
    return a;
}

// Lexicographic order on subsets viewed as ascending position lists; a
// proper prefix sorts first.
bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
    while (true) {
        if (a == b) return false;
        if (a == 0) return true;
        if (b == 0) return false;
        const int la = std::countr_zero(a);
        const int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
}

}  // namespace

double pf_metric(std::span<const double> rates_bps) {
    double pf = 0.0;
    for (double r : rates_bps) {
        if (!(r > 0.0)) throw std::domain_error("pf_metric: rate must be positive");
        pf += std::log(r);
    }
    return pf;
}

RateReport partition_rates(Direction direction,
                           const std::vector<UserTerminal>& users,
                           const std::vector<int>& ordering, int k,
                           const BandSet& bands, const LinkBudget& budget) {
    const int n = static_cast<int>(ordering.size());
    if (k < 0 || k > n) throw std::domain_error("partition_rates: k outside [0, N]");

    std::unordered_map<int, const UserTerminal*> by_id;
    for (const UserTerminal& u : users) by_id.emplace(u.id, &u);

    RateReport report;
    report.direction = direction;
    report.entries.reserve(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        const UserTerminal& u = *by_id.at(ordering[static_cast<std::size_t>(pos)]);
        const bool tv = in_tv_at_k(direction, n, pos, k);
        const Band band = tv ? Band::tv : Band::cellular;
        const int group = tv ? k : n - k;
        rates::RateEntry e;
        e.user_id = u.id;
        e.band = band;
        e.baseline_bps = rates::user_rate_bps(
            direction, bands.cellular, n, u.eta_db(Band::cellular, direction), budget);
        e.allocated_bps = rates::user_rate_bps(direction, bands[band], group,
                                               u.eta_db(band, direction), budget);
        report.entries.push_back(e);
    }
    return report;
}

Allocation allocate_prefix_scan(Direction direction,
                                const std::vector<UserTerminal>& users,
                                const BandSet& bands, const LinkBudget& budget) {
    const ScanContext ctx = make_context(direction, users, bands, budget);
    int best_k = 0;
    double best_pf = pf_for_k(ctx, 0);
    for (int k = 1; k <= ctx.n; ++k) {
        const double pf = pf_for_k(ctx, k);
        if (pf > best_pf) {
            best_pf = pf;
            best_k = k;
        }
    }
    return from_scan_k(ctx, best_k, best_pf);
}

Allocation allocate_first_decrease(Direction direction,
                                   const std::vector<UserTerminal>& users,
                                   const BandSet& bands, const LinkBudget& budget) {
    const ScanContext ctx = make_context(direction, users, bands, budget);
    int k = 0;
    double pf = pf_for_k(ctx, 0);
    while (k < ctx.n) {
        const double next = pf_for_k(ctx, k + 1);
        if (!(next > pf)) break;
        pf = next;
        ++k;
    }
    return from_scan_k(ctx, k, pf);
}

Allocation allocate_exhaustive(Direction direction,
                               const std::vector<UserTerminal>& users,
                               const BandSet& bands, const LinkBudget& budget) {
    if (users.size() > 20)
        throw std::domain_error("allocate_exhaustive: N > 20 (2^N enumeration)");
    const ScanContext ctx = make_context(direction, users, bands, budget);

    std::uint32_t best_mask = 0;
    double best_pf = pf_for_mask(ctx, 0);
    const std::uint32_t end = static_cast<std::uint32_t>(1u << ctx.n);
    for (std::uint32_t mask = 1; mask < end; ++mask) {
        const double pf = pf_for_mask(ctx, mask);
        if (pf > best_pf || (pf == best_pf && subset_lex_less(mask, best_mask))) {
            best_pf = pf;
            best_mask = mask;
        }
    }

    Allocation a;
    a.direction = direction;
    a.ordering = ctx.ordering;
    a.tv_count = std::popcount(best_mask);
    a.pf_value = best_pf;
    for (int pos = 0; pos < ctx.n; ++pos) {
        if (best_mask >> pos & 1u)
            a.tv_set.push_back(ctx.ordering[static_cast<std::size_t>(pos)]);
        else
            a.cellular_set.push_back(ctx.ordering[static_cast<std::size_t>(pos)]);
    }
    return a;
}

bool tv_set_matches_scan(const Allocation& allocation) {
    const int n = static_cast<int>(allocation.ordering.size());
    const int k = allocation.tv_count;
    if (static_cast<int>(allocation.tv_set.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        const int pos = allocation.direction == Direction::downlink ? i : n - k + i;
        if (allocation.tv_set[static_cast<std::size_t>(i)] !=
            allocation.ordering[static_cast<std::size_t>(pos)])
            return false;
    }
    return true;
}

ExchangeMetrics exchange_compare(const UserTerminal& u1, const UserTerminal& u2,
                                 PartitionSizes sizes, Direction direction,
                                 const BandSet& bands, const LinkBudget& budget) {
    const double eta_c1 = u1.eta_db(Band::cellular, direction);
    const double eta_c2 = u2.eta_db(Band::cellular, direction);
    if (eta_c1 < eta_c2)
        throw std::invalid_argument("exchange_compare: u1 must be the higher-geometry user");

    const bool uplink = direction == Direction::uplink;
    if (uplink && sizes.cellular < 1)
        throw std::domain_error("exchange_compare: uplink requires |U_c| >= 1");

    // Uplink power concentrates into the bandwidth share, so the set sizes
    // scale the SNR; downlink SNR is size-independent.
    const double tv_scale = uplink ? sizes.tv + 1 : 1.0;
    const double cell_scale = uplink ? sizes.cellular - 1 : 1.0;

    const auto spectral_tv = [&](const UserTerminal& u) {
        const double snr = rates::link_snr_linear(direction, bands.tv,
                                                  u.eta_db(Band::tv, direction), budget);
        return std::log2(1.0 + tv_scale * snr);
    };
    const auto spectral_cell = [&](const UserTerminal& u) {
        const double snr = rates::link_snr_linear(
            direction, bands.cellular, u.eta_db(Band::cellular, direction), budget);
        return std::log2(1.0 + cell_scale * snr);
    };

    ExchangeMetrics m;
    m.scheme1 = spectral_tv(u1) * spectral_cell(u2);
    m.scheme2 = spectral_tv(u2) * spectral_cell(u1);
    return m;
}

}  // namespace cogcell::allocation
