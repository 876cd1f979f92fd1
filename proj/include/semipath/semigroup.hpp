#pragma once

#include <cstdint>
#include <vector>

#include "semipath/errors.hpp"

namespace semipath {

/// Largest supported genus. All per-semigroup quantities (gap values,
/// conductor, weight, per-genus counts) stay comfortably inside 64 bits up
/// to this cap, and the membership window [0, 2g+1] fits in one machine word.
inline constexpr int kMaxGenus = 30;

/// The sequences derived from a semigroup: the enumeration lambda_0..lambda_2g
/// (the 2g+1 smallest elements), the partial genus g(i) = lambda_i - i, a copy
/// of the gap sequence l_1..l_g, and the weight sum(l_i - i).
struct DerivedProfile {
    std::vector<int> lambda;
    std::vector<int> partial_genus;
    std::vector<int> gaps;
    int weight = 0;
};

/// A numerical semigroup: a subset of the non-negative integers containing 0,
/// closed under addition, with finite complement. Stored canonically as the
/// sorted gap list plus a membership bit-vector over the window [0, 2g];
/// everything past the conductor is implicitly a member.
///
/// Immutable after construction; safe to share across threads.
class NumericalSemigroup {
public:
    /// Builds the semigroup whose gap set is exactly `candidate_gaps`
    /// (order and duplicates are irrelevant; values must be >= 1).
    /// Throws NotClosedError with the lexicographically smallest witness
    /// pair (a, b), a <= b, when the complement is not closed under
    /// addition, and GenusOutOfRangeError when there are more than
    /// kMaxGenus gaps.
    static NumericalSemigroup from_gaps(std::vector<int> candidate_gaps);

    /// Builds the smallest numerical semigroup containing 0 and all `gens`
    /// (values must be >= 1). Throws NotCofiniteError when gcd(gens) != 1
    /// and GenusOutOfRangeError when the result would have genus > kMaxGenus.
    static NumericalSemigroup from_generators(const std::vector<long long>& gens);

    /// The whole of N_0: genus 0, conductor 0.
    static NumericalSemigroup natural_numbers() { return from_gaps({}); }

    int genus() const { return static_cast<int>(gaps_.size()); }
    int conductor() const { return conductor_; }

    /// Largest gap, or -1 for genus 0.
    int frobenius() const { return conductor_ - 1; }

    /// Gap sequence l_1 < ... < l_g.
    const std::vector<int>& gaps() const { return gaps_; }

    /// Membership test; negative arguments return false by convention.
    bool contains(long long n) const {
        if (n < 0) return false;
        if (n >= conductor_) return true;
        return (members_ >> n) & 1u;
    }

    /// Smallest positive element.
    int multiplicity() const;

    /// True iff conductor == 2 * genus. Genus 0 counts as symmetric (0 == 0).
    bool is_symmetric() const { return conductor_ == 2 * genus(); }

    /// True iff for every gap i, conductor - 1 - i is a non-gap. Agrees with
    /// is_symmetric() on every semigroup.
    bool check_gap_pairing() const;

    DerivedProfile profile() const;

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

private:
    NumericalSemigroup(std::vector<int> gaps, int conductor, std::uint64_t members)
        : gaps_(std::move(gaps)), conductor_(conductor), members_(members) {}

    std::vector<int> gaps_;   // strictly increasing, all >= 1
    int conductor_ = 0;       // largest gap + 1, or 0 for genus 0
    std::uint64_t members_ = ~0ull; // bit i = (i in semigroup), exact on [0, 63]
};

} // namespace semipath
