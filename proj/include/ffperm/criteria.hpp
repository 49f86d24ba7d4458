#pragma once

// Integer-arithmetic permutation criteria. predict() always evaluates the gcd
// form of a criterion; the 2-adic reformulations live beside it so they can be
// checked against the gcd form rather than trusted.

#include <cstdint>

#include "ffperm/field.hpp"
#include "ffperm/maps.hpp"

namespace ffperm {

/// 2-adic valuation of |n|; ord2(0) is infinite.
ExtNat ord2(std::int64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// gcd(a, b*c) computed without forming b*c.
std::uint64_t gcd_with_product(std::uint64_t a, std::uint64_t b, std::uint64_t c);

struct GcdPattern {
    bool coprime_plus;   // gcd(2^k + 1, 2^l + 1) == 1
    bool coprime_minus;  // gcd(2^k - 1, 2^l + 1) == 1
};

/// Direct integer gcds; requires 1 <= k <= 60 and 0 <= l <= 60.
GcdPattern gcd_pattern(unsigned k, unsigned l);

/// The valuation side of the same statements: ord2(k) != ord2(l) and
/// ord2(k) <= ord2(l).
GcdPattern gcd_pattern_by_valuation(unsigned k, unsigned l);

/// Main1 criterion in its valuation form: p == 2 and
/// ord2(k) <= min(ord2(l), ord2(m - n)).
bool main1_by_valuation(unsigned p, unsigned k, unsigned l, unsigned m, unsigned n);

/// Main1 criterion in its gcd form: gcd(q-1, (Q+1)(R+S)) == 1.
bool main1_by_gcd(unsigned p, unsigned k, unsigned l, unsigned m, unsigned n);

/// Predicted verdict for one family instance. Trace-dependent families
/// (Main3, MainDeg3) read trace_rel(c) from f3.
bool predict(const Field& f3, const FamilySpec& spec);

}  // namespace ffperm
