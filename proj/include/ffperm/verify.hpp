#pragma once

// Exhaustive oracles: permutation and coset-injectivity tests, instance
// checkers for the two reduction steps, the degree-1 map lemmas, the
// conjugation identities for h~, and the bivariate remark.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffperm/field.hpp"
#include "ffperm/maps.hpp"
#include "ffperm/rng.hpp"
#include "ffperm/sets.hpp"

namespace ffperm {

/// f restricted to s is injective with image inside s.
template <class Fn>
bool is_permutation_on(const Field& field, Fn&& f, const Subset& s) {
    std::vector<bool> seen(field.size(), false);
    for (Elem x : s) {
        const Elem y = f(x);
        if (!s.contains(y) || seen[y.v]) return false;
        seen[y.v] = true;
    }
    return true;
}

/// f permutes the whole field.
template <class Fn>
bool is_permutation(const Field& field, Fn&& f) {
    std::vector<bool> seen(field.size(), false);
    for (Index i = 0; i < field.size(); ++i) {
        const Elem y = f(Elem(i));
        if (seen[y.v]) return false;
        seen[y.v] = true;
    }
    return true;
}

/// g is injective on u + F_q for every u in GF(q^3), q = p^k.
template <class Fn>
bool injective_on_cosets(const Field& f3, Fn&& g, unsigned k) {
    const Subset base = subfield_set(f3, k);
    std::vector<bool> visited(f3.size(), false);
    std::vector<Index> stamp(f3.size(), 0);
    Index round = 0;
    for (Index i = 0; i < f3.size(); ++i) {
        if (visited[i]) continue;
        ++round;
        for (Elem z : base) {
            const Elem y = f3.add(Elem(i), z);
            visited[y.v] = true;
            const Elem v = g(y);
            if (stamp[v.v] == round) return false;
            stamp[v.v] = round;
        }
    }
    return true;
}

struct Step1Result {
    bool lhs;         // f permutes GF(q^3)
    bool rhs_gamma;   // L + (X^q - X) o B permutes Gamma
    bool rhs_cosets;  // L + Tr o C injective on every u + F_q
    bool rhs() const { return rhs_gamma && rhs_cosets; }
    bool match() const { return lhs == rhs(); }
};

/// f = L + B o (X^q - X) + Tr o C. Throws SpecError unless L has only p-power
/// exponents and F_q coefficients.
Step1Result check_step1_instance(const Field& f3, unsigned k, const SparsePoly& L, const SparsePoly& B,
                                 const SparsePoly& C);

struct Step2Result {
    bool e1;  // X^r B(X^{q-1}) permutes Gamma
    bool e2;  // gcd(r, q-1) = 1 and X^r B(X)^{q-1} permutes Lambda
    bool e3;  // gcd(r, q-1) = 1, B has no root in Lambda, X^r B^{(q)}(-1/X - 1)/B(X) permutes Lambda
    bool all_equal() const { return e1 == e2 && e2 == e3; }
};

Step2Result check_step2_instance(const Field& f3, unsigned k, std::uint64_t r, const SparsePoly& B);

struct Step1Instance {
    SparsePoly L, B, C;
};
struct Step2Instance {
    std::uint64_t r;
    SparsePoly B;
};

/// Reproducible instance streams; mixes uniformly random polynomials with the
/// structured shapes that make the lemmas' conditions true.
Step1Instance random_step1_instance(const Field& f3, unsigned k, SplitMix64& rng);
Step2Instance random_step2_instance(const Field& f3, unsigned k, SplitMix64& rng);

struct LemmaSweep {
    std::size_t instances = 0;
    std::size_t agreeing = 0;
    std::size_t true_cases = 0;  // instances whose left-hand side held
    bool passed() const { return agreeing == instances; }
};

LemmaSweep sweep_step1(const Field& f3, unsigned k, std::size_t count, std::uint64_t seed);
LemmaSweep sweep_step2(const Field& f3, unsigned k, std::size_t count, std::uint64_t seed);

struct Deg1Report {
    unsigned p = 0;
    unsigned k = 0;
    std::uint64_t q = 0;
    // Forward: every map of the stated form with the nondegeneracy condition
    // has the stated behavior.
    bool mu_forward = true;
    bool f_to_mu_forward = true;
    bool mu_to_f_forward = true;
    std::size_t forward_pairs = 0;
    // Converse: every degree-1 map over GF(q^2) with the behavior has the form.
    bool converse_checked = false;
    bool mu_converse = true;
    bool f_to_mu_converse = true;
    bool mu_to_f_converse = true;
    std::size_t maps_enumerated = 0;
    // (omega X + 1)/(X + omega) with gcd(3, q) = 1.
    bool omega_applicable = false;
    bool omega_behavior = true;  // permutes both (q = 1 mod 3) or swaps (q = 2 mod 3)
    bool involution_applicable = false;
    bool involution = true;

    bool passed() const {
        return mu_forward && f_to_mu_forward && mu_to_f_forward && mu_converse && f_to_mu_converse &&
               mu_to_f_converse && omega_behavior && involution;
    }
};

/// Works in GF(q^2), q = p^k. The converse enumeration runs when q <= converse_max_q.
Deg1Report check_deg1_lemmas(unsigned p, unsigned k, std::uint64_t converse_max_q = 8, FieldLimits limits = {});

/// Ambient GF(2^{6k}); compares rho o X^{-(Q+1)} o rho (l even) or
/// rho o X^{Q-1} o rho (l odd) with h~ on P^1(GF(2^{3k})). Throws FieldError
/// unless ord2(k) <= ord2(l).
bool check_htilde_identities(unsigned k, unsigned l, FieldLimits limits = {});
bool check_htilde_identities(const Field& f6, unsigned k, unsigned l);

/// X^{Q+1} - 1 has no root in Lambda.
bool lambda_avoids_unit_roots(const Field& f3, unsigned k, unsigned l);

struct RemarkReport {
    unsigned p = 2;
    unsigned k = 0;
    std::uint64_t q = 0;
    bool within_claim = false;        // k odd and p = 2 mod 3
    bool literal_permutes = false;    // (x^q - x)^3 + (x^{2q} + x^q + x)
    bool trace_form_permutes = false; // (x^q - x)^3 + Tr(x)
};

RemarkReport check_remark(unsigned k, unsigned p = 2, FieldLimits limits = {});

/// How a map x -> x^e or x -> x^q - x fibres a domain over a target.
struct FiberingReport {
    bool into_target = false;
    bool onto_target = false;
    std::optional<std::size_t> uniform_fiber;  // set when all nonempty fibers agree in size
};

enum class FiberMapKind { PowerQMinusOne, ArtinSchreier };

FiberingReport fibering(const Field& f3, unsigned k, FiberMapKind map, const Subset& domain, const Subset& target);

}  // namespace ffperm
