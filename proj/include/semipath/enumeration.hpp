#pragma once

#include <cstdint>
#include <vector>

#include "semipath/semigroup.hpp"

namespace semipath {

/// Upper cap for the exhaustive subset oracle (cost 4^g).
inline constexpr int kMaxOracleGenus = 8;

/// Exact binomial coefficient in 64-bit integer arithmetic, with gcd
/// reduction at every step so intermediates never overflow for the ranges
/// used here (n <= 62).
std::uint64_t binomial(unsigned n, unsigned k);

/// Catalan number C_n = binom(2n, n) / (n + 1).
std::uint64_t catalan(unsigned n);

/// The bound binom(g-1, ceil((g-1)/2)) on the number of symmetric semigroups
/// of genus g. Defined as 1 for g = 0 (the empty-path case).
std::uint64_t symmetric_path_bound(int genus);

/// Per-genus counts against the two path-counting bounds.
struct BoundsRecord {
    int genus = 0;
    std::uint64_t total_count = 0;
    std::uint64_t symmetric_count = 0;
    std::uint64_t catalan_bound = 0;
    std::uint64_t central_binomial_bound = 0;

    bool total_within_bound() const { return total_count <= catalan_bound; }
    bool symmetric_within_bound() const { return symmetric_count <= central_binomial_bound; }
    bool bounds_hold() const { return total_within_bound() && symmetric_within_bound(); }
};

/// All numerical semigroups of genus exactly g, each exactly once, sorted
/// lexicographically by gap sequence. Explores independent subtrees of the
/// genus tree with OpenMP workers; the output order is schedule-independent.
/// Throws GenusOutOfRangeError outside [0, kMaxGenus].
std::vector<NumericalSemigroup> enumerate_genus(int g);

/// Serial reference implementation of enumerate_genus; same contract,
/// plain depth-first recursion.
std::vector<NumericalSemigroup> enumerate_genus_serial(int g);

/// Counts semigroups of genus g (total and symmetric) without materializing
/// them, and attaches the two bounds. OpenMP-parallel over subtrees.
BoundsRecord census(int g);

/// Serial reference implementation of census.
BoundsRecord census_serial(int g);

/// Independent verification path: counts subsets S of {1..2g} with |S| = g
/// whose complement in [0, 2g], extended past 2g, is closed under addition.
/// Shares no code with the tree search. Limited to g <= kMaxOracleGenus.
std::uint64_t brute_force_oracle(int g);

} // namespace semipath
