#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "thetacount/characteristics.hpp"
#include "thetacount/hyperelliptic.hpp"
#include "thetacount/rng.hpp"

using namespace theta;

TEST_CASE("parity of basic characteristics") {
    Characteristic zero{0, 0, 2};
    CHECK(parity(zero) == Parity::even);
    Characteristic odd1{1, 1, 1};
    CHECK(parity(odd1) == Parity::odd);
}

TEST_CASE("genus 2 split into 10 even and 6 odd") {
    int even = 0, odd = 0;
    for (const auto& c : enumerate_characteristics(2)) {
        (parity(c) == Parity::even ? even : odd)++;
    }
    CHECK(even == 10);
    CHECK(odd == 6);
}

TEST_CASE("enumeration sizes and order") {
    CHECK(enumerate_characteristics(1).size() == 4);
    const auto g3 = enumerate_characteristics(3);
    CHECK(g3.size() == 64);
    int odd = 0;
    for (const auto& c : g3)
        if (parity(c) == Parity::odd) ++odd;
    CHECK(odd == 28);

    const auto g2 = enumerate_characteristics(2);
    CHECK(g2.front().a == 0);
    CHECK(g2.front().b == 0);
    // strictly increasing lexicographic order
    for (std::size_t i = 1; i < g2.size(); ++i) {
        const auto key = [](const Characteristic& c) { return (std::uint64_t{c.a} << 32) | c.b; };
        CHECK(key(g2[i - 1]) < key(g2[i]));
    }

    CHECK_THROWS_AS(enumerate_characteristics(0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_characteristics(13), std::out_of_range);
}

TEST_CASE("parity census matches the closed formulas up to genus 10") {
    for (int g = 1; g <= 10; ++g) {
        std::uint64_t odd = 0;
        const std::uint64_t total = count_characteristics(g);
        for (std::uint64_t i = 0; i < total; ++i)
            if (parity(characteristic_at(g, i)) == Parity::odd) ++odd;
        CHECK(odd == odd_characteristic_count(g));
        CHECK(total - odd == even_characteristic_count(g));
    }
}

TEST_CASE("product characteristics concatenate and add parity") {
    Characteristic o{1, 1, 1};  // odd
    Characteristic e{1, 0, 1};  // even
    CHECK(parity(product_characteristic(o, o)) == Parity::even);
    CHECK(parity(product_characteristic(e, e)) == Parity::even);
    CHECK(parity(product_characteristic(e, o)) == Parity::odd);
    CHECK(product_characteristic(o, e).g == 2);

    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const int g1 = 1 + static_cast<int>(rng.next_below(4));
        const int g2 = 1 + static_cast<int>(rng.next_below(4));
        const auto c1 = characteristic_at(g1, rng.next_below(count_characteristics(g1)));
        const auto c2 = characteristic_at(g2, rng.next_below(count_characteristics(g2)));
        const auto p = product_characteristic(c1, c2);
        const int expect = (static_cast<int>(parity(c1) == Parity::odd) +
                            static_cast<int>(parity(c2) == Parity::odd)) % 2;
        CHECK((parity(p) == Parity::odd) == (expect == 1));
        for (int i = 0; i < g1; ++i) CHECK(p.a_bit(i) == c1.a_bit(i));
        for (int i = 0; i < g2; ++i) CHECK(p.b_bit(g1 + i) == c2.b_bit(i));
    }
}

TEST_CASE("product characteristic associativity up to reassociation") {
    const auto x = characteristic_at(2, 7);
    const auto y = characteristic_at(1, 2);
    const auto z = characteristic_at(3, 41);
    CHECK(product_characteristic(product_characteristic(x, y), z) ==
          product_characteristic(x, product_characteristic(y, z)));
}

TEST_CASE("g-fold products with at least one odd factor number 4^g - 3^g") {
    // every genus-g characteristic is a g-fold product of elliptic ones; the
    // odd-free combinations are exactly the 3^g all-even products
    for (int g = 1; g <= 6; ++g) {
        std::uint64_t with_odd_factor = 0;
        std::set<std::pair<std::uint32_t, std::uint32_t>> images;
        const std::uint64_t combos = count_characteristics(g);  // 4 choices per factor
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            std::uint64_t rem = idx;
            Characteristic acc;
            bool any_odd = false, started = false;
            for (int f = 0; f < g; ++f) {
                const auto c = characteristic_at(1, rem % 4);
                rem /= 4;
                any_odd = any_odd || (parity(c) == Parity::odd);
                acc = started ? product_characteristic(acc, c) : c;
                started = true;
            }
            if (any_odd) ++with_odd_factor;
            images.insert({acc.a, acc.b});
        }
        std::uint64_t p3 = 1;
        for (int i = 0; i < g; ++i) p3 *= 3;
        CHECK(with_odd_factor == count_characteristics(g) - p3);
        CHECK(images.size() == count_characteristics(g));
    }
}

TEST_CASE("branch subset classes: canonical representatives and counts") {
    CHECK_THROWS_AS(make_branch_class(2, 0b1u), std::invalid_argument);  // odd cardinality
    for (int g = 1; g <= 6; ++g) {
        const auto classes = branch_subset_classes(g);
        CHECK(classes.size() == count_characteristics(g));
        const std::uint32_t full = (1u << (2 * g + 2)) - 1u;
        for (const auto& cls : classes) {
            CHECK(cls.size() % 2 == 0);
            CHECK(make_branch_class(g, full & ~cls.members) == cls);
        }
    }
}

TEST_CASE("hyperelliptic nonvanishing classes") {
    CHECK(hyperelliptic_nonvanishing_classes(1).size() == 3);
    CHECK(hyperelliptic_nonvanishing_classes(2).size() == 10);
    CHECK(hyperelliptic_nonvanishing_classes(3).size() == 35);
    for (int g = 1; g <= 10; ++g) {
        CHECK(hyperelliptic_nonvanishing_classes(g).size() == binomial(2 * g + 1, g));
        CHECK(hyperelliptic_theta2_count(g).theta_n + hyperelliptic_nonvanishing_classes(g).size() ==
              count_characteristics(g));
    }
}

TEST_CASE("hyperelliptic Theta(2) closed form") {
    CHECK(hyperelliptic_theta2_count(1).theta_n == 1);
    const auto g2 = hyperelliptic_theta2_count(2);
    CHECK(g2.theta_n == 6);
    CHECK(g2.even_vanishing == 0);
    CHECK(hyperelliptic_theta2_count(3).theta_n == 29);
    CHECK(hyperelliptic_theta2_count(4).theta_n == 130);
    CHECK_THROWS_AS(hyperelliptic_theta2_count(0), std::out_of_range);
    CHECK_THROWS_AS(hyperelliptic_theta2_count(21), std::out_of_range);
    // closed form vs enumeration is asserted internally for g <= 10
    for (int g = 5; g <= 10; ++g) CHECK_NOTHROW(hyperelliptic_theta2_count(g));
}

TEST_CASE("pinned eta assignment is a bijection consistent with parity") {
    for (int g = 1; g <= 5; ++g) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, int> seen;
        for (const auto& cls : branch_subset_classes(g)) {
            const Characteristic c = class_characteristic(cls);
            ++seen[{c.a, c.b}];
            // parity of the characteristic must match the vanishing-order parity
            const int m = vanishing_order(cls);
            CHECK((parity(c) == Parity::odd) == (m % 2 == 1));
        }
        CHECK(seen.size() == count_characteristics(g));
    }
}
