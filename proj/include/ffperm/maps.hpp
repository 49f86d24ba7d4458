#pragma once

// Pointwise evaluators for the polynomial families over GF(q^3), sparse
// polynomials, degree-1 rational maps on the projective line, and the two
// rational functions h and h~ that govern the Lambda reduction.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ffperm/field.hpp"
#include "ffperm/sets.hpp"

namespace ffperm {

enum class FamilyId {
    Main1,     // X^{Q+1}o(X^q-X) + Tr o cX^{R+S},  c in F_q^*
    Main3,     // X^{Q+1}o(X^q-X) + Tr o cX^R,      c in GF(q^3)
    MainDeg3,  // X^3o(X^q-X) + Tr o cX^Q,           c in GF(q^3)
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,        // (X^q-X)^3 + c Tr(X^Q),  c in F_q^*
    KeyMap,    // (X^q-X) o X^{Q+1}, acts on Gamma
    KeyDeg3,   // (X^q-X) o X^3, acts on Gamma
    FiberMap,  // Tr o X^{Q+1}, injectivity on cosets u + F_q
};

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::Main1, FamilyId::Main3, FamilyId::MainDeg3, FamilyId::F1,     FamilyId::F2,      FamilyId::F3,
    FamilyId::F4,    FamilyId::F5,    FamilyId::F6,       FamilyId::KeyMap, FamilyId::KeyDeg3, FamilyId::FiberMap,
};

std::string_view family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// Where a family's defining property is tested.
enum class Domain {
    Field,   // permutation of GF(q^3)
    Gamma,   // permutation of Gamma
    Cosets,  // injective on every u + F_q
};

/// Where a family's coefficient c is drawn from.
enum class CoefDomain { None, SubfieldStar, Full };

struct FamilyTraits {
    bool uses_l = false;
    bool uses_m = false;
    bool uses_n = false;
    CoefDomain coef = CoefDomain::None;
    Domain domain = Domain::Field;
};

FamilyTraits family_traits(FamilyId id);

/// One instance of a family; Q = p^l, R = p^m, S = p^n, q = p^k.
struct FamilySpec {
    FamilyId id = FamilyId::F1;
    unsigned p = 2;
    unsigned k = 1;
    std::optional<unsigned> l;
    std::optional<unsigned> m;
    std::optional<unsigned> n;
    std::optional<Elem> c;
};

class SpecError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Throws SpecError when f3 is not GF(p^{3k}) or a required parameter is
/// missing or out of its domain.
void validate(const Field& f3, const FamilySpec& spec);

struct Term {
    std::uint64_t exp;
    Elem coef;
};

/// Polynomial with strictly increasing exponents and no zero coefficients.
class SparsePoly {
  public:
    SparsePoly() = default;
    /// Merges equal exponents and drops zero coefficients.
    static SparsePoly from_terms(const Field& f, std::vector<Term> terms);
    static SparsePoly monomial(const Field& f, std::uint64_t exp, Elem coef) {
        return from_terms(f, {{exp, coef}});
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Elem eval(const Field& f, Elem x) const;

  private:
    std::vector<Term> terms_;
};

/// g^{(q)}: every coefficient raised to the q-th power, q = p^k.
SparsePoly poly_frobenius_coeffs(const Field& f, const SparsePoly& g, unsigned k);

class FamilyEvaluator {
  public:
    /// Validates spec against f3; f3 must outlive the evaluator.
    FamilyEvaluator(const Field& f3, FamilySpec spec);

    Elem operator()(Elem x) const;
    const FamilySpec& spec() const { return spec_; }

  private:
    Elem literal(Elem x) const;
    Elem trace(Elem x) const { return field_->trace_rel(x, spec_.k); }

    const Field* field_;
    FamilySpec spec_;
    std::uint64_t q_ = 0;
    std::uint64_t inner_exp_ = 0;  // Q+1 or 3
    std::uint64_t trace_exp_ = 0;  // R+S, R or Q
    Elem c_;
    std::vector<Term> literal_;    // F1..F6, exponents as printed
};

Elem eval_family(const Field& f3, const FamilySpec& spec, Elem x);

/// x -> (a x + b) / (c x + d) with ad - bc != 0.
class Deg1Map {
  public:
    /// Throws FieldError when the determinant vanishes.
    Deg1Map(const Field& f, Elem a, Elem b, Elem c, Elem d);

    ProjPoint operator()(const Field& f, ProjPoint x) const;

    Elem a() const { return a_; }
    Elem b() const { return b_; }
    Elem c() const { return c_; }
    Elem d() const { return d_; }

  private:
    Elem a_, b_, c_, d_;
};

ProjPoint deg1_eval(const Field& f, const Deg1Map& rho, ProjPoint x);

/// Root of X^2+X+1 with the smaller index; needs |f| = 1 mod 3.
Elem find_omega(const Field& f);

/// (omega X + 1) / (X + omega).
Deg1Map omega_map(const Field& f);

/// x -> x^e on P^1 for a signed exponent; 0 and infinity swap when e < 0.
ProjPoint proj_pow(const Field& f, ProjPoint x, std::int64_t e);

/// Raised when a rational function meets 0/0.
class DegenerateEvaluation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// (x^Q + x + 1) / (x^{Q+1} - 1), Q = p^l.
ProjPoint eval_h(const Field& f, unsigned l, ProjPoint x);
/// (x^{Q+1} + x^Q + x) / (x^Q + x + 1), Q = p^l.
ProjPoint eval_h_tilde(const Field& f, unsigned l, ProjPoint x);

template <class F, class G, class Range>
bool maps_equal_pointwise(F&& f, G&& g, const Range& points) {
    for (const auto& s : points) {
        if (!(f(s) == g(s))) return false;
    }
    return true;
}

}  // namespace ffperm
