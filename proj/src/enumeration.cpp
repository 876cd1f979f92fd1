// Exhaustive generation of numerical semigroups by genus.
//
// The generator walks the tree rooted at N_0 in which the children of a
// semigroup are obtained by removing one minimal generator greater than its
// Frobenius number. Every semigroup of genus g appears exactly once at depth
// g, and visiting children in increasing generator order makes the leaf
// stream lexicographic in the gap sequence.
//
// Two kernels share the node-expansion logic: a plain recursive serial walk
// (the reference) and an OpenMP kernel that fans independent subtrees of a
// fixed-depth frontier out to worker threads and merges per-subtree results
// back in frontier order, so the observable stream is schedule-independent.

#include "semipath/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace semipath {

namespace {

// A node of the genus tree. The membership word is exact on [0, 63], which
// covers every candidate generator up to 2 * kMaxGenus + 1.
struct TreeNode {
    std::uint64_t members;
    int frobenius;
};

constexpr TreeNode root_node() { return TreeNode{~0ull, -1}; }

// Depth at which the parallel kernel hands subtrees to workers.
constexpr int kSplitDepth = 8;

bool is_sum_of_two_members(std::uint64_t members, int y) {
    for (int a = 1; 2 * a <= y; ++a)
        if ((members >> a & 1) && (members >> (y - a) & 1)) return true;
    return false;
}

// Children in increasing order of the removed generator. Candidates above
// the Frobenius number are all members; a child created by removing y has
// conductor y + 1 <= 2 * (depth + 1), which bounds the scan.
template <typename Fn>
void for_each_child(const TreeNode& node, int depth, Fn&& fn) {
    const int hi = 2 * depth + 1;
    for (int y = std::max(node.frobenius + 1, 1); y <= hi; ++y)
        if (!is_sum_of_two_members(node.members, y))
            fn(TreeNode{node.members & ~(1ull << y), y});
}

template <typename Sink>
void walk(const TreeNode& node, int depth, int target, Sink&& sink) {
    if (depth == target) {
        sink(node);
        return;
    }
    for_each_child(node, depth, [&](const TreeNode& child) {
        walk(child, depth + 1, target, sink);
    });
}

void check_genus_range(int g) {
    if (g < 0 || g > kMaxGenus) throw GenusOutOfRangeError(g, kMaxGenus);
}

std::vector<int> gaps_of(const TreeNode& node) {
    std::vector<int> gaps;
    for (int i = 1; i <= node.frobenius; ++i)
        if (!(node.members >> i & 1)) gaps.push_back(i);
    return gaps;
}

NumericalSemigroup materialize(const TreeNode& node) {
    return NumericalSemigroup::from_gaps(gaps_of(node));
}

// Frontier of the tree at the given depth, in canonical (gap-lexicographic)
// order. Subtree leaf ranges under consecutive frontier nodes are contiguous
// in the canonical order, so concatenating per-subtree results in frontier
// order reproduces the serial stream.
std::vector<TreeNode> frontier_at_depth(int depth) {
    std::vector<TreeNode> current{root_node()};
    for (int d = 0; d < depth; ++d) {
        std::vector<TreeNode> next;
        for (const TreeNode& node : current)
            for_each_child(node, d, [&](const TreeNode& child) { next.push_back(child); });
        current = std::move(next);
    }
    return current;
}

BoundsRecord make_record(int g, std::uint64_t total, std::uint64_t symmetric) {
    return BoundsRecord{g, total, symmetric, catalan(static_cast<unsigned>(g)),
                        symmetric_path_bound(g)};
}

} // namespace

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        std::uint64_t den = i;
        std::uint64_t d = std::gcd(den, result);
        result /= d;
        den /= d;
        d = std::gcd(den, num);
        num /= d;
        // den is 1 here: each prefix product binom(n-k+i, i) is an integer.
        result *= num;
    }
    return result;
}

std::uint64_t catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

std::uint64_t symmetric_path_bound(int genus) {
    if (genus == 0) return 1;
    const unsigned m = static_cast<unsigned>(genus - 1);
    return binomial(m, (m + 1) / 2);
}

std::vector<NumericalSemigroup> enumerate_genus_serial(int g) {
    check_genus_range(g);
    std::vector<NumericalSemigroup> out;
    walk(root_node(), 0, g, [&](const TreeNode& leaf) { out.push_back(materialize(leaf)); });
    return out;
}

std::vector<NumericalSemigroup> enumerate_genus(int g) {
    check_genus_range(g);
    const int split = std::min(g, kSplitDepth);
    const std::vector<TreeNode> frontier = frontier_at_depth(split);

    std::vector<std::vector<NumericalSemigroup>> buckets(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < frontier.size(); ++i)
        walk(frontier[i], split, g,
             [&](const TreeNode& leaf) { buckets[i].push_back(materialize(leaf)); });

    std::vector<NumericalSemigroup> out;
    for (std::vector<NumericalSemigroup>& bucket : buckets) {
        out.insert(out.end(), std::make_move_iterator(bucket.begin()),
                   std::make_move_iterator(bucket.end()));
    }
    return out;
}

BoundsRecord census_serial(int g) {
    check_genus_range(g);
    std::uint64_t total = 0;
    std::uint64_t symmetric = 0;
    const int symmetric_frobenius = 2 * g - 1;
    walk(root_node(), 0, g, [&](const TreeNode& leaf) {
        ++total;
        if (leaf.frobenius == symmetric_frobenius) ++symmetric;
    });
    return make_record(g, total, symmetric);
}

BoundsRecord census(int g) {
    check_genus_range(g);
    const int split = std::min(g, kSplitDepth);
    const std::vector<TreeNode> frontier = frontier_at_depth(split);
    const int symmetric_frobenius = 2 * g - 1;

    std::uint64_t total = 0;
    std::uint64_t symmetric = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total, symmetric)
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        walk(frontier[i], split, g, [&](const TreeNode& leaf) {
            ++total;
            if (leaf.frobenius == symmetric_frobenius) ++symmetric;
        });
    }
    return make_record(g, total, symmetric);
}

std::uint64_t brute_force_oracle(int g) {
    if (g < 0 || g > kMaxOracleGenus) throw GenusOutOfRangeError(g, kMaxOracleGenus);
    const int width = 2 * g;
    std::uint64_t count = 0;
    for (std::uint32_t gap_bits = 0; gap_bits < (1u << width); ++gap_bits) {
        if (std::popcount(gap_bits) != g) continue;
        // bit i - 1 of gap_bits marks i as a gap, for i in [1, 2g]
        auto member = [&](int v) { return v == 0 || !(gap_bits >> (v - 1) & 1); };
        bool closed = true;
        for (int a = 1; closed && 2 * a <= width; ++a) {
            if (!member(a)) continue;
            for (int b = a; a + b <= width; ++b) {
                if (member(b) && !member(a + b)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) ++count;
    }
    return count;
}

} // namespace semipath
