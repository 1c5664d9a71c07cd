#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "cantor/digitset.hpp"

using namespace cantor;

namespace {

// brute-force reference for the sumset equation base + S = target
bool brute_sumset_exists(const std::vector<int>& target, const std::vector<int>& base,
                         std::vector<int>* best) {
    int n = static_cast<int>(target.size());
    bool found = false;
    for (int size = 1; size <= n && !found; ++size) {
        std::vector<int> idx(size);
        std::function<bool(int, int)> rec = [&](int from, int pos) {
            if (pos == size) {
                std::vector<int> s;
                for (int i : idx) s.push_back(target[i]);
                if (s[0] != 0) return false;
                std::set<int> sum;
                for (int b : base)
                    for (int x : s) sum.insert(b + x);
                if (std::vector<int>(sum.begin(), sum.end()) == target) {
                    *best = s;
                    return true;
                }
                return false;
            }
            for (int i = from; i < n; ++i) {
                idx[pos] = i;
                if (rec(i + 1, pos + 1)) return true;
            }
            return false;
        };
        found = rec(0, 0);
    }
    return found;
}

DigitSet random_sparse(std::mt19937_64& rng) {
    while (true) {
        int n = 3 + static_cast<int>(rng() % 10); // 3..12
        std::vector<int> digits{0};
        std::vector<int> pool;
        for (int d = 1; d < n; ++d) pool.push_back(d);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int cand : pool) {
            std::vector<int> trial = digits;
            trial.push_back(cand);
            std::sort(trial.begin(), trial.end());
            std::set<int> deltas;
            for (int a : trial)
                for (int b : trial) deltas.insert(a - b);
            bool ok = true;
            int prev = 0;
            bool first = true;
            for (int d : deltas) {
                if (!first && d - prev < 2) ok = false;
                prev = d;
                first = false;
            }
            if (ok) digits = trial;
        }
        if (digits.size() >= 2) return DigitSet(n, digits);
    }
}

} // namespace

TEST_CASE("classification of the named digit sets") {
    Classification mtc = DigitSet(3, {0, 2}).classify();
    CHECK(mtc.uniform);
    CHECK(mtc.regular);
    CHECK(mtc.sparse);
    CHECK(*mtc.gap == 2);

    Classification s057 = DigitSet(8, {0, 5, 7}).classify();
    CHECK(s057.sparse);
    CHECK_FALSE(s057.regular);
    CHECK_FALSE(s057.uniform);

    Classification big = DigitSet(10, {0, 1, 2, 6, 8}).classify();
    CHECK_FALSE(big.sparse);
}

TEST_CASE("classification implications on random digit sets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 12);
        std::set<int> picked{0};
        int m = 2 + static_cast<int>(rng() % (n - 2));
        while (static_cast<int>(picked.size()) < m) picked.insert(1 + static_cast<int>(rng() % (n - 1)));
        DigitSet ds(n, std::vector<int>(picked.begin(), picked.end()));
        Classification c = ds.classify();
        if (c.uniform) CHECK(c.regular);
        if (c.regular) CHECK(c.sparse);
    }
}

TEST_CASE("slices") {
    DigitSet ds(8, {0, 5, 7});
    SliceSet s2 = ds.slice(2);
    CHECK(s2.members == std::vector<int>{0});
    CHECK(s2.min_raw == 7);

    SliceSet s0 = ds.slice(0);
    CHECK(s0.members == ds.digits());
    CHECK(s0.min_raw == 0);

    DigitSet mtc(3, {0, 2});
    CHECK(mtc.slice(2).members == std::vector<int>{0});
    CHECK(mtc.slice(2).min_raw == 2);
    CHECK(mtc.slice(1).empty());
    CHECK(mtc.slice(5).empty());
}

TEST_CASE("slice symmetry: D ∩ (D+δ) = (D ∩ (D-δ)) + δ") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        DigitSet ds = random_sparse(rng);
        for (int delta = -ds.base(); delta <= ds.base(); ++delta) {
            auto plus = ds.raw_slice(delta);
            auto minus = ds.raw_slice(-delta);
            for (int& x : minus) x += delta;
            CHECK(plus == minus);
        }
    }
}

TEST_CASE("uniform slices are gap ladders") {
    DigitSet ds(9, {0, 2, 4, 6});
    for (int delta : ds.differences().deltas_plus) {
        SliceSet s = ds.slice(delta);
        REQUIRE_FALSE(s.empty());
        std::vector<int> expect;
        for (int v = 0; v <= ds.max_digit() - delta; v += 2) expect.push_back(v);
        CHECK(s.members == expect);
    }
    CHECK(ds.slice(1).empty());
    CHECK(ds.slice(3).empty());
}

TEST_CASE("sumset decomposition examples") {
    SliceSet single{0, {0}, 0};
    SliceSet tgt{0, {0, 2, 4}, 0};
    auto s = sumset_decompose(tgt, single);
    REQUIRE(s.has_value());
    CHECK(*s == std::vector<int>{0, 2, 4});

    SliceSet two{0, {0, 2}, 0};
    auto id = sumset_decompose(two, two);
    REQUIRE(id.has_value());
    CHECK(*id == std::vector<int>{0});

    SliceSet four{0, {0, 2, 4, 6}, 0};
    auto sp = sumset_decompose(four, two);
    REQUIRE(sp.has_value());
    CHECK(*sp == std::vector<int>{0, 4});

    SliceSet odd{0, {0, 2, 4, 8}, 0};
    CHECK_FALSE(sumset_decompose(odd, two).has_value());
}

TEST_CASE("sumset decomposition round trip against brute force") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::set<int> t{0}, b{0};
        int tn = 1 + static_cast<int>(rng() % 4);
        int bn = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(t.size()) <= tn) t.insert(static_cast<int>(rng() % 12));
        while (static_cast<int>(b.size()) <= bn) b.insert(static_cast<int>(rng() % 6));
        std::vector<int> target(t.begin(), t.end()), base(b.begin(), b.end());
        auto got = sumset_decompose(target, base);
        std::vector<int> ref;
        bool exists = brute_sumset_exists(target, base, &ref);
        CHECK(got.has_value() == exists);
        if (got) {
            std::set<int> sum;
            for (int x : base)
                for (int y : *got) sum.insert(x + y);
            CHECK(std::vector<int>(sum.begin(), sum.end()) == target);
        }
    }
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(DigitSet(2, {0, 1}), error);
    CHECK_THROWS_AS(DigitSet(3, {0}), error);
    CHECK_THROWS_AS(DigitSet(3, {0, 1, 2}), error);
    CHECK_THROWS_AS(DigitSet(5, {1, 3}), error);
    CHECK_THROWS_AS(DigitSet(5, {0, 5}), error);
    CHECK_THROWS_AS(DigitSet(5, {0, 0}), error);
}
