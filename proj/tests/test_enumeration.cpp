#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "semipath/enumeration.hpp"
#include "semipath/errors.hpp"
#include "semipath/semigroup.hpp"

using semipath::NumericalSemigroup;

namespace {

// n_g for g = 0..14, cross-checked below against the subset oracle where feasible.
const std::uint64_t kCounts[] = {1,   1,   2,   4,   7,    12,   23,  39,
                                 67,  118, 204, 343, 592,  1001, 1693};
// Symmetric semigroups per genus, same range.
const std::uint64_t kSymmetricCounts[] = {1, 1, 1, 2, 3, 3, 6, 8, 7, 15, 20, 18, 36, 44, 45};

} // namespace

TEST_CASE("binomial coefficients against an additive Pascal table") {
    constexpr unsigned kN = 60;
    std::vector<std::vector<std::uint64_t>> pascal(kN + 1);
    for (unsigned n = 0; n <= kN; ++n) {
        pascal[n].resize(n + 1, 1);
        for (unsigned k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (unsigned n = 0; n <= kN; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(semipath::binomial(n, k) == pascal[n][k]);

    CHECK(semipath::binomial(5, 2) == 10);
    CHECK(semipath::binomial(28, 14) == 40116600ULL);
    CHECK(semipath::binomial(60, 30) == 118264581564861424ULL);
    CHECK(semipath::binomial(3, 7) == 0);
}

TEST_CASE("catalan numbers and the ballot identity") {
    const std::uint64_t expect[] = {1,    1,     2,     5,      14,     42,     132,   429,
                                    1430, 4862,  16796, 58786,  208012, 742900, 2674440};
    for (unsigned n = 0; n < 15; ++n) CHECK(semipath::catalan(n) == expect[n]);
    // C_n = binom(2n, n) - binom(2n, n+1)
    for (unsigned n = 0; n <= 30; ++n)
        CHECK(semipath::catalan(n)
              == semipath::binomial(2 * n, n) - semipath::binomial(2 * n, n + 1));
}

TEST_CASE("symmetric path bound values") {
    CHECK(semipath::symmetric_path_bound(0) == 1);
    CHECK(semipath::symmetric_path_bound(1) == 1);
    CHECK(semipath::symmetric_path_bound(2) == 1);
    CHECK(semipath::symmetric_path_bound(3) == 2);
    CHECK(semipath::symmetric_path_bound(4) == 3);
    CHECK(semipath::symmetric_path_bound(5) == 6);
    CHECK(semipath::symmetric_path_bound(6) == 10);
    CHECK(semipath::symmetric_path_bound(15) == 3432);
}

TEST_CASE("enumeration counts per genus") {
    for (int g = 0; g <= 11; ++g) {
        CHECK(semipath::enumerate_genus(g).size() == kCounts[g]);
    }
}

TEST_CASE("parallel and serial enumerations agree element-wise") {
    for (int g = 0; g <= 9; ++g) {
        const auto par = semipath::enumerate_genus(g);
        const auto ser = semipath::enumerate_genus_serial(g);
        REQUIRE(par.size() == ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
    }
}

TEST_CASE("enumeration is duplicate-free and gap-lexicographically sorted") {
    for (int g = 1; g <= 7; ++g) {
        const auto all = semipath::enumerate_genus(g);
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            CHECK(std::lexicographical_compare(all[i].gaps().begin(), all[i].gaps().end(),
                                               all[i + 1].gaps().begin(),
                                               all[i + 1].gaps().end()));
        }
    }
}

TEST_CASE("every enumerated semigroup is well-formed") {
    for (int g = 0; g <= 9; ++g) {
        for (const auto& s : semipath::enumerate_genus(g)) {
            CHECK(s.genus() == g);
            CHECK(s.conductor() <= 2 * g);
            CHECK(NumericalSemigroup::from_gaps(s.gaps()) == s);
            // the partial genus dominates the index up to the genus
            const auto prof = s.profile();
            for (int i = 0; i <= g; ++i) CHECK(prof.partial_genus[i] >= i);
        }
    }
}

TEST_CASE("removing the largest gap reaches the genus-(g-1) parent") {
    for (int g = 1; g <= 7; ++g) {
        const auto prev = semipath::enumerate_genus(g - 1);
        for (const auto& s : semipath::enumerate_genus(g)) {
            auto gaps = s.gaps();
            const int freed = gaps.back();
            gaps.pop_back();
            const auto parent = NumericalSemigroup::from_gaps(gaps);
            CHECK(parent.genus() == g - 1);
            CHECK(freed > parent.frobenius() - 1); // freed is past every other gap
            CHECK(std::find(prev.begin(), prev.end(), parent) != prev.end());
        }
    }
}

TEST_CASE("tree walk matches the subset-scan oracle") {
    for (int g = 0; g <= 7; ++g) {
        CHECK(semipath::brute_force_oracle(g) == semipath::census_serial(g).total_count);
    }
    CHECK_THROWS_AS(semipath::brute_force_oracle(9), semipath::GenusOutOfRangeError);
    CHECK_THROWS_AS(semipath::brute_force_oracle(-1), semipath::GenusOutOfRangeError);
}

TEST_CASE("census at genus 0 counts only the full set") {
    const auto rec = semipath::census(0);
    CHECK(rec.total_count == 1);
    CHECK(rec.symmetric_count == 1);
    CHECK(rec.catalan_bound == 1);
    CHECK(rec.central_binomial_bound == 1);
    CHECK(rec.bounds_hold());
}

TEST_CASE("enumeration rejects out-of-range genus") {
    CHECK_THROWS_AS(semipath::enumerate_genus(-1), semipath::GenusOutOfRangeError);
    CHECK_THROWS_AS(semipath::enumerate_genus(31), semipath::GenusOutOfRangeError);
    CHECK_THROWS_AS(semipath::census(31), semipath::GenusOutOfRangeError);
    CHECK_THROWS_AS(semipath::census_serial(-2), semipath::GenusOutOfRangeError);
}

TEST_CASE("census record at genus 12") {
    const auto rec = semipath::census(12);
    CHECK(rec.genus == 12);
    CHECK(rec.total_count == 592);
    CHECK(rec.symmetric_count == 36);
    CHECK(rec.catalan_bound == 208012);
    CHECK(rec.central_binomial_bound == 462);
    CHECK(rec.total_within_bound());
    CHECK(rec.symmetric_within_bound());
    CHECK(rec.bounds_hold());
}

TEST_CASE("census totals and symmetric counts, serial vs parallel") {
    for (int g = 1; g <= 13; ++g) {
        const auto par = semipath::census(g);
        const auto ser = semipath::census_serial(g);
        CHECK(par.total_count == kCounts[g]);
        CHECK(par.symmetric_count == kSymmetricCounts[g]);
        CHECK(ser.total_count == par.total_count);
        CHECK(ser.symmetric_count == par.symmetric_count);
        CHECK(par.bounds_hold());
    }
}

TEST_CASE("symmetric census agrees with per-semigroup classification") {
    for (int g = 1; g <= 9; ++g) {
        std::uint64_t direct = 0;
        for (const auto& s : semipath::enumerate_genus(g))
            if (s.is_symmetric()) ++direct;
        CHECK(direct == semipath::census(g).symmetric_count);
    }
}
