#include <doctest.h>

#include <numeric>

#include "ffperm/criteria.hpp"
#include "ffperm/sets.hpp"
#include "oracles.hpp"

using namespace ffperm;

namespace {

// Valuation by repeated halving.
unsigned slow_ord2(std::uint64_t n) {
    unsigned v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

}  // namespace

TEST_CASE("ord2") {
    CHECK(ord2(12) == ExtNat(2));
    CHECK(ord2(1) == ExtNat(0));
    CHECK(ord2(-8) == ExtNat(3));
    CHECK(ord2(0).is_infinite());
}

TEST_CASE("gcd helpers") {
    CHECK(gcd_u64(12, 18) == 6);
    CHECK(gcd_u64(0, 5) == 5);
    CHECK(gcd_with_product(7, 3, 5) == 1);
    CHECK(gcd_with_product(15, 3, 5) == 15);
    // product overflows 64 bits
    const std::uint64_t big = (std::uint64_t{1} << 62) + 1;
    CHECK(gcd_with_product(big, big, 2) == big);
    CHECK_THROWS(gcd_with_product(0, 3, 5));
}

TEST_CASE("gcd pattern examples") {
    // gcd(2^1+1, 2^1+1) = 3, gcd(2^1-1, .) = 1
    CHECK_FALSE(gcd_pattern(1, 1).coprime_plus);
    CHECK(gcd_pattern(1, 1).coprime_minus);
    // gcd(3, 2) = 1, gcd(1, 2) = 1
    CHECK(gcd_pattern(1, 0).coprime_plus);
    // gcd(2^2-1, 2^1+1) = 3
    CHECK_FALSE(gcd_pattern(2, 1).coprime_minus);
    CHECK(gcd_pattern(2, 2).coprime_minus);
    CHECK_THROWS(gcd_pattern(0, 1));
    CHECK_THROWS(gcd_pattern(61, 1));
    CHECK_THROWS(gcd_pattern(1, 61));
}

TEST_CASE("gcd pattern equals both valuation forms, exhaustively") {
    std::size_t mismatches = 0;
    for (unsigned k = 1; k <= 60; ++k) {
        for (unsigned l = 0; l <= 60; ++l) {
            const GcdPattern g = gcd_pattern(k, l);
            const GcdPattern v = gcd_pattern_by_valuation(k, l);
            // ord2(0) is infinite, so l = 0 sits above every k.
            const bool plus = l == 0 ? true : slow_ord2(k) != slow_ord2(l);
            const bool minus = l == 0 ? true : slow_ord2(k) <= slow_ord2(l);
            mismatches += (g.coprime_plus != v.coprime_plus) + (g.coprime_minus != v.coprime_minus) +
                          (v.coprime_plus != plus) + (v.coprime_minus != minus);
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("main1 criterion: gcd form equals valuation form") {
    std::size_t mismatches = 0;
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        for (unsigned k = 1; k <= 6; ++k) {
            for (unsigned l = 0; l <= 18; ++l) {
                for (unsigned m = 0; m <= 18; ++m) {
                    for (unsigned n = 0; n <= 18; ++n) {
                        mismatches += main1_by_gcd(p, k, l, m, n) != main1_by_valuation(p, k, l, m, n);
                    }
                }
            }
        }
    }
    CHECK(mismatches == 0);
    // odd p: q-1 and Q+1 are both even
    CHECK_FALSE(main1_by_gcd(3, 1, 0, 0, 1));
    CHECK(main1_by_gcd(2, 1, 0, 0, 0));
}

TEST_CASE("predictions") {
    const Field f8 = Field::build(2, 3);
    FamilySpec s;
    s.id = FamilyId::F1;
    s.p = 2;
    s.k = 1;
    s.l = 1;
    CHECK(predict(f8, s));  // gcd(1, 3) = 1

    const Field f64 = Field::build(2, 6);
    s.k = 2;
    s.l = 1;
    CHECK_FALSE(predict(f64, s));  // gcd(3, 3) = 3
    s.l = 2;
    CHECK(predict(f64, s));  // gcd(3, 5) = 1

    FamilySpec kd;
    kd.id = FamilyId::KeyDeg3;
    kd.p = 2;
    kd.k = 1;
    CHECK(predict(f8, kd));  // q = 2
    kd.k = 2;
    CHECK_FALSE(predict(f64, kd));  // q = 4

    FamilySpec m3;
    m3.id = FamilyId::Main3;
    m3.p = 2;
    m3.k = 1;
    m3.l = 0;
    m3.m = 0;
    m3.c = f8.one();  // trace 1
    CHECK(predict(f8, m3));
    for (Index i = 0; i < 8; ++i) {
        m3.c = Elem(i);
        CHECK(predict(f8, m3) == !f8.trace_rel(Elem(i), 1).is_zero());
    }
}

TEST_CASE("predictions are periodic in l with period 3k") {
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
        const Field f3 = Field::build(p, 3 * k);
        for (FamilyId id : {FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4, FamilyId::KeyMap,
                            FamilyId::FiberMap}) {
            for (unsigned l = 0; l < 3 * k; ++l) {
                FamilySpec a;
                a.id = id;
                a.p = p;
                a.k = k;
                a.l = l;
                FamilySpec b = a;
                b.l = l + 3 * k;
                CHECK(predict(f3, a) == predict(f3, b));
                const std::uint64_t q = oracle::ipow(p, k);
                CHECK(predict(f3, a) == (std::gcd(q - 1, oracle::ipow(p, l) + 1) == 1));
            }
        }
    }
}
