#include "semipath/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace semipath {

namespace {

// Lexicographically smallest (a, b), a <= b, with a and b non-gaps and
// a + b a gap, or (0, 0) if the complement is closed. Works directly on
// the sorted gap list, so arbitrarily large gap values cost nothing.
//
// The scan over a terminates early: every witness pair satisfies
// 2a <= a + b = some gap, and when the largest gap L exceeds 4g + 2 a
// witness with a <= 2g + 1 always exists (at most 2g of the pairs
// (a, L - a) are blocked by a gap on either side).
std::pair<long long, long long> find_closure_witness(const std::vector<int>& gaps) {
    auto is_gap = [&](long long v) {
        return v <= gaps.back()
               && std::binary_search(gaps.begin(), gaps.end(), static_cast<int>(v));
    };
    const long long largest = gaps.back();
    for (long long a = 1; 2 * a <= largest; ++a) {
        if (is_gap(a)) continue;
        for (int s : gaps) {
            if (s < 2 * a) continue;
            if (!is_gap(s - a)) return {a, s - a};
        }
    }
    return {0, 0};
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> candidate_gaps) {
    for (int v : candidate_gaps)
        if (v < 1) throw std::invalid_argument("gap values must be >= 1");
    std::sort(candidate_gaps.begin(), candidate_gaps.end());
    candidate_gaps.erase(std::unique(candidate_gaps.begin(), candidate_gaps.end()),
                         candidate_gaps.end());

    if (candidate_gaps.empty()) return NumericalSemigroup({}, 0, ~0ull);

    const auto genus = static_cast<long>(candidate_gaps.size());
    if (genus > kMaxGenus) throw GenusOutOfRangeError(genus, kMaxGenus);

    auto [a, b] = find_closure_witness(candidate_gaps);
    if (a != 0) throw NotClosedError(a, b);

    // Closure implies the largest gap is at most 2g - 1, so the membership
    // window [0, 63] covers every gap.
    const int conductor = candidate_gaps.back() + 1;
    std::uint64_t members = ~0ull;
    for (int v : candidate_gaps) members &= ~(1ull << v);
    return NumericalSemigroup(std::move(candidate_gaps), conductor, members);
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<long long>& gens) {
    if (gens.empty()) throw std::invalid_argument("generator set must be non-empty");
    for (long long v : gens)
        if (v < 1) throw std::invalid_argument("generators must be >= 1");

    long long gcd = 0;
    for (long long v : gens) gcd = std::gcd(gcd, v);
    if (gcd != 1) throw NotCofiniteError(gcd);

    // Closure by dynamic programming. A window of [0, 62] is always enough
    // to decide the genus cap: a semigroup with more than 30 gaps has its
    // 31st gap at index <= 61, and one within the cap has conductor <= 60.
    constexpr int kWindow = 2 * kMaxGenus + 2;
    bool member[kWindow + 1] = {};
    member[0] = true;
    for (int i = 0; i <= kWindow; ++i) {
        if (!member[i]) continue;
        for (long long v : gens)
            if (i + v <= kWindow) member[i + v] = true;
    }

    std::vector<int> gaps;
    for (int i = 1; i <= kWindow; ++i)
        if (!member[i]) gaps.push_back(i);
    if (static_cast<long>(gaps.size()) > kMaxGenus)
        throw GenusOutOfRangeError(static_cast<long>(gaps.size()), kMaxGenus);

    const int conductor = gaps.empty() ? 0 : gaps.back() + 1;
    std::uint64_t members = ~0ull;
    for (int v : gaps) members &= ~(1ull << v);
    return NumericalSemigroup(std::move(gaps), conductor, members);
}

int NumericalSemigroup::multiplicity() const {
    for (int n = 1;; ++n)
        if (contains(n)) return n;
}

bool NumericalSemigroup::check_gap_pairing() const {
    for (int gap : gaps_)
        if (!contains(conductor_ - 1 - gap)) return false;
    return true;
}

DerivedProfile NumericalSemigroup::profile() const {
    const int g = genus();
    DerivedProfile p;
    p.lambda.reserve(2 * g + 1);
    for (int n = 0; static_cast<int>(p.lambda.size()) < 2 * g + 1; ++n)
        if (contains(n)) p.lambda.push_back(n);
    p.partial_genus.resize(p.lambda.size());
    for (std::size_t i = 0; i < p.lambda.size(); ++i)
        p.partial_genus[i] = p.lambda[i] - static_cast<int>(i);
    p.gaps = gaps_;
    for (std::size_t i = 0; i < p.gaps.size(); ++i)
        p.weight += p.gaps[i] - static_cast<int>(i + 1);
    return p;
}

} // namespace semipath
