#include "ffperm/criteria.hpp"

#include <numeric>
#include <string>

namespace ffperm {

ExtNat ord2(std::int64_t n) {
    if (n == 0) return ExtNat::infinity();
    const auto mag = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    return static_cast<std::uint64_t>(__builtin_ctzll(mag));
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t gcd_with_product(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    if (a == 0) throw std::invalid_argument("gcd_with_product needs a > 0");
    const auto prod = static_cast<unsigned __int128>(b % a) * (c % a) % a;
    return std::gcd(a, static_cast<std::uint64_t>(prod));
}

GcdPattern gcd_pattern(unsigned k, unsigned l) {
    if (k < 1 || k > 60 || l > 60) {
        throw std::invalid_argument("gcd_pattern needs 1 <= k <= 60 and 0 <= l <= 60");
    }
    const std::uint64_t two_k = std::uint64_t{1} << k;
    const std::uint64_t two_l = std::uint64_t{1} << l;
    return {std::gcd(two_k + 1, two_l + 1) == 1, std::gcd(two_k - 1, two_l + 1) == 1};
}

GcdPattern gcd_pattern_by_valuation(unsigned k, unsigned l) {
    const ExtNat vk = ord2(k);
    const ExtNat vl = ord2(l);
    return {vk != vl, vk <= vl};
}

bool main1_by_valuation(unsigned p, unsigned k, unsigned l, unsigned m, unsigned n) {
    if (p != 2) return false;
    const auto diff = static_cast<std::int64_t>(m) - static_cast<std::int64_t>(n);
    return ord2(k) <= min(ord2(l), ord2(diff));
}

bool main1_by_gcd(unsigned p, unsigned k, unsigned l, unsigned m, unsigned n) {
    const std::uint64_t q = checked_pow(p, k);
    const std::uint64_t big_q = checked_pow(p, l);
    const std::uint64_t rs = checked_add(checked_pow(p, m), checked_pow(p, n));
    return gcd_with_product(q - 1, big_q + 1, rs) == 1;
}

bool predict(const Field& f3, const FamilySpec& spec) {
    validate(f3, spec);
    const std::uint64_t q = checked_pow(spec.p, spec.k);
    const auto gcd_q_minus = [&](std::uint64_t x) { return std::gcd(q - 1, x); };
    const auto key_gcd = [&] { return gcd_q_minus(checked_pow(spec.p, *spec.l) + 1) == 1; };
    const auto trace_nonzero = [&] { return !f3.trace_rel(*spec.c, spec.k).is_zero(); };
    const bool q_two_mod_three = q % 3 == 2;

    switch (spec.id) {
        case FamilyId::Main1: return main1_by_gcd(spec.p, spec.k, *spec.l, *spec.m, *spec.n);
        case FamilyId::F1:
        case FamilyId::F2:
        case FamilyId::F3:
        case FamilyId::F4:
        case FamilyId::F5:
        case FamilyId::KeyMap:
        case FamilyId::FiberMap: return key_gcd();
        case FamilyId::Main3: return key_gcd() && trace_nonzero();
        case FamilyId::MainDeg3: return q_two_mod_three && trace_nonzero();
        case FamilyId::F6:
        case FamilyId::KeyDeg3: return q_two_mod_three;
    }
    return false;
}

}  // namespace ffperm
