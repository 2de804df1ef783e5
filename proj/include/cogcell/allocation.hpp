#pragma once

#include <span>
#include <vector>

#include "cogcell/netmodel.hpp"
#include "cogcell/rates.hpp"

namespace cogcell::allocation {

using netmodel::UserTerminal;
using propagation::Band;
using propagation::BandSet;
using propagation::Direction;
using rates::LinkBudget;
using rates::RateReport;

/// A band partition: the TV set, the cellular set, and the proportional-fair
/// value of the resulting rates. For the scan allocators the TV set is the
/// top tv_count users of the geometry ordering on the downlink and the
/// bottom tv_count on the uplink; the exhaustive allocator may return any
/// subset.
struct Allocation {
    Direction direction = Direction::downlink;
    std::vector<int> ordering;  // user ids, highest geometry first
    int tv_count = 0;
    std::vector<int> tv_set;
    std::vector<int> cellular_set;
    double pf_value = 0.0;
};

/// Sum of natural logs of the rates; empty input yields 0 (empty-product
/// convention). Throws std::domain_error on a non-positive rate.
double pf_metric(std::span<const double> rates_bps);

/// Rates for the split at position k of the geometry ordering: the top k
/// (downlink) or bottom k (uplink) users get TV rates with group size k, the
/// rest cellular rates with group size N-k. k = 0 and k = N are legal.
/// Entries are returned in ordering order with both baseline and allocated
/// rates filled.
RateReport partition_rates(Direction direction,
                           const std::vector<UserTerminal>& users,
                           const std::vector<int>& ordering, int k,
                           const BandSet& bands, const LinkBudget& budget);

/// Evaluates the PF metric for every k in {0..N} over the direction's scan
/// convention and returns the argmax; ties broken by smaller k.
Allocation allocate_prefix_scan(Direction direction,
                                const std::vector<UserTerminal>& users,
                                const BandSet& bands, const LinkBudget& budget);

/// Moves users one by one (top of the ordering on the downlink, bottom on
/// the uplink) while the PF metric strictly increases; stops at the first
/// non-increase.
Allocation allocate_first_decrease(Direction direction,
                                   const std::vector<UserTerminal>& users,
                                   const BandSet& bands, const LinkBudget& budget);

/// Enumerates all 2^N TV subsets and returns the PF-maximal partition; ties
/// broken by the lexicographically smallest subset in geometry order.
/// Guarded to N <= 20.
Allocation allocate_exhaustive(Direction direction,
                               const std::vector<UserTerminal>& users,
                               const BandSet& bands, const LinkBudget& budget);

/// True when tv_set is exactly the block a prefix scan would pick for the
/// same k: the top-k of the ordering on the downlink, the bottom-k on the
/// uplink.
bool tv_set_matches_scan(const Allocation& allocation);

struct PartitionSizes {
    int tv = 0;
    int cellular = 0;
};

/// The two products of spectral-efficiency terms that differ between moving
/// the higher-geometry user (scheme 1) or the lower-geometry user (scheme 2)
/// to the TV band, with the current partition sizes held fixed.
struct ExchangeMetrics {
    double scheme1 = 0.0;
    double scheme2 = 0.0;
};

ExchangeMetrics exchange_compare(const UserTerminal& u1, const UserTerminal& u2,
                                 PartitionSizes sizes, Direction direction,
                                 const BandSet& bands, const LinkBudget& budget);

}  // namespace cogcell::allocation
