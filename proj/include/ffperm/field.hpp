#pragma once

// Finite fields GF(p^n) in the power basis, backed by discrete-log tables.
//
// An element is stored as its base-p index: coefficient i of the power-basis
// representation is digit i of the index (constant term least significant).
// Multiplication, powers and (for odd p) addition go through exp/log/Zech
// tables built once per field; a schoolbook polynomial multiply reduced by the
// modulus is kept alongside as the reference path.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffperm {

using Index = std::uint32_t;

/// One element of a field, identified by its base-p index.
struct Elem {
    Index v = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(Index value) : v(value) {}

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Power-basis coordinates, constant term first.
using Coeffs = std::vector<unsigned>;

/// Nonnegative integer or infinity; infinity compares above every finite value.
class ExtNat {
  public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t v) : value_(v) {}
    static constexpr ExtNat infinity() { return ExtNat(std::nullopt); }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr std::uint64_t value() const { return *value_; }

    friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) { return a.value_ == b.value_; }
    friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

  private:
    constexpr explicit ExtNat(std::nullopt_t) : value_(std::nullopt) {}
    std::optional<std::uint64_t> value_ = 0;
};

constexpr ExtNat min(const ExtNat& a, const ExtNat& b) { return b < a ? b : a; }

/// Raised for any violated precondition on field construction or use.
class FieldError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FieldLimits {
    std::uint64_t max_size = std::uint64_t{1} << 22;
};

bool is_prime(std::uint64_t n);

/// Checked p^e; throws FieldError when the result exceeds 2^63.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

/// Trial-division irreducibility test for a monic polynomial over F_p
/// (coefficients constant first, last entry must be 1).
bool is_irreducible(unsigned p, const Coeffs& monic);

/// Smallest monic irreducible of degree n over F_p under the base-p encoding
/// with the constant term as least significant digit.
Coeffs smallest_irreducible(unsigned p, unsigned n);

class Field {
  public:
    /// Builds GF(p^n). Throws FieldError if p is not prime, n < 1 or p^n is
    /// above limits.max_size.
    static Field build(unsigned p, unsigned n, FieldLimits limits = {});

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    Index size() const { return size_; }
    const Coeffs& modulus() const { return modulus_; }
    /// Smallest-index generator of the multiplicative group.
    Elem generator() const { return Elem(exp_.empty() ? 1 : exp_[1 % exp_.size()]); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    /// Image of the integer v under Z -> F_p -> GF(p^n).
    Elem from_int(std::int64_t v) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws FieldError for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// a^e with 0^0 = 1 and 0^e = 0 for e > 0.
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^(p^e).
    Elem frobenius(Elem a, std::uint64_t e) const;
    /// a + a^q + a^(q^2) with q = p^k; requires degree() == 3k.
    Elem trace_rel(Elem a, unsigned k) const;
    /// a^(p^m) == a; requires m | degree().
    bool is_in_subfield(Elem a, unsigned m) const;

    Index index(Elem a) const { return a.v; }
    /// Throws FieldError when i >= size().
    Elem from_index(std::uint64_t i) const;

    Coeffs coeffs(Elem a) const;
    /// Throws FieldError on wrong length or out-of-range digits.
    Elem from_coeffs(const Coeffs& c) const;

    /// Discrete log base generator(); a must be nonzero.
    Index log(Elem a) const { return log_[a.v]; }
    Elem exp(std::uint64_t e) const { return Elem(exp_[e % order_]); }
    /// Order of the multiplicative group, size() - 1.
    Index group_order() const { return order_; }

    /// Schoolbook polynomial product reduced by the modulus; independent of the
    /// log tables.
    Elem mul_reference(Elem a, Elem b) const;
    /// Square-and-multiply over mul_reference.
    Elem pow_reference(Elem a, std::uint64_t e) const;

    std::string modulus_string() const;
    std::string to_string(Elem a) const;

  private:
    Field() = default;
    Coeffs mul_coeffs(const Coeffs& a, const Coeffs& b) const;
    Index encode(const Coeffs& c) const;

    unsigned p_ = 0;
    unsigned n_ = 0;
    Index size_ = 0;
    Index order_ = 0;
    Coeffs modulus_;
    std::vector<Index> exp_;
    std::vector<Index> log_;
    // zech_[i] = log(1 + g^i), or kNoLog when 1 + g^i == 0. Odd p only.
    std::vector<Index> zech_;
};

}  // namespace ffperm
