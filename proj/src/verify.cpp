#include "ffperm/verify.hpp"

#include <numeric>
#include <unordered_set>

#include "ffperm/criteria.hpp"

namespace ffperm {

namespace {

bool is_power_of(std::uint64_t v, std::uint64_t p) {
    if (v == 0) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

Elem random_elem(const Field& f, SplitMix64& rng) { return Elem(static_cast<Index>(rng.below(f.size()))); }

Elem random_nonzero(const Field& f, SplitMix64& rng) {
    return Elem(static_cast<Index>(1 + rng.below(f.size() - 1)));
}

Elem random_from(const Subset& s, SplitMix64& rng) { return s.elems()[rng.below(s.size())]; }

std::uint64_t random_p_power(unsigned p, unsigned k, SplitMix64& rng) {
    return checked_pow(p, rng.below(3 * k));
}

}  // namespace

Step1Result check_step1_instance(const Field& f3, unsigned k, const SparsePoly& L, const SparsePoly& B,
                                 const SparsePoly& C) {
    const unsigned p = f3.characteristic();
    for (const Term& t : L.terms()) {
        if (!is_power_of(t.exp, p) || !f3.is_in_subfield(t.coef, k)) {
            throw SpecError("L must be linearized with coefficients in F_q");
        }
    }
    const std::uint64_t q = checked_pow(p, k);
    const auto tr = [&](Elem x) { return f3.trace_rel(x, k); };

    const auto f = [&](Elem x) {
        const Elem shift = f3.sub(f3.pow(x, q), x);
        return f3.add(f3.add(L.eval(f3, x), B.eval(f3, shift)), tr(C.eval(f3, x)));
    };
    const auto g = [&](Elem x) {
        const Elem b = B.eval(f3, x);
        return f3.add(L.eval(f3, x), f3.sub(f3.pow(b, q), b));
    };
    const auto h = [&](Elem x) { return f3.add(L.eval(f3, x), tr(C.eval(f3, x))); };

    Step1Result res{};
    res.lhs = is_permutation(f3, f);
    res.rhs_gamma = is_permutation_on(f3, g, gamma_set(f3, k));
    res.rhs_cosets = injective_on_cosets(f3, h, k);
    return res;
}

Step2Result check_step2_instance(const Field& f3, unsigned k, std::uint64_t r, const SparsePoly& B) {
    if (r == 0) throw SpecError("step2 needs r >= 1");
    const std::uint64_t q = checked_pow(f3.characteristic(), k);
    const bool coprime = std::gcd(r, q - 1) == 1;
    const Subset lambda = lambda_set(f3, k);

    Step2Result res{};
    res.e1 = is_permutation_on(
        f3, [&](Elem x) { return f3.mul(f3.pow(x, r), B.eval(f3, f3.pow(x, q - 1))); }, gamma_set(f3, k));

    res.e2 = coprime && is_permutation_on(
                            f3, [&](Elem z) { return f3.mul(f3.pow(z, r), f3.pow(B.eval(f3, z), q - 1)); }, lambda);

    bool no_roots = true;
    for (Elem z : lambda) no_roots = no_roots && !B.eval(f3, z).is_zero();
    if (coprime && no_roots) {
        const SparsePoly Bq = poly_frobenius_coeffs(f3, B, k);
        const Elem minus_one = f3.neg(f3.one());
        res.e3 = is_permutation_on(
            f3,
            [&](Elem z) {
                // 0 is not in Lambda, so the inverse exists.
                const Elem w = f3.sub(minus_one, f3.inv(z));
                return f3.div(f3.mul(f3.pow(z, r), Bq.eval(f3, w)), B.eval(f3, z));
            },
            lambda);
    } else {
        res.e3 = false;
    }
    return res;
}

Step1Instance random_step1_instance(const Field& f3, unsigned k, SplitMix64& rng) {
    const unsigned p = f3.characteristic();
    const Subset sub = subfield_set(f3, k);
    Step1Instance inst;

    if (rng.below(3) == 0) {
        // Shape of the composite theorems: B = X^{Q+1}, C = c X^{e}.
        const std::uint64_t Q = random_p_power(p, k, rng);
        inst.B = SparsePoly::monomial(f3, Q + 1, f3.one());
        const std::uint64_t e = rng.below(2) == 0 ? random_p_power(p, k, rng)
                                                  : random_p_power(p, k, rng) + random_p_power(p, k, rng);
        inst.C = SparsePoly::monomial(f3, e, random_nonzero(f3, rng));
        return inst;
    }

    std::vector<Term> l_terms;
    for (std::uint64_t i = rng.below(3); i > 0; --i) {
        l_terms.push_back({random_p_power(p, k, rng), random_from(sub, rng)});
    }
    inst.L = SparsePoly::from_terms(f3, std::move(l_terms));

    const auto random_poly = [&] {
        std::vector<Term> terms;
        for (std::uint64_t i = rng.below(3); i > 0; --i) {
            const std::uint64_t e = rng.below(2) == 0 ? random_p_power(p, k, rng) + random_p_power(p, k, rng)
                                                      : rng.below(f3.size());
            const Elem c = rng.below(2) == 0 ? f3.one() : random_nonzero(f3, rng);
            terms.push_back({e, c});
        }
        return SparsePoly::from_terms(f3, std::move(terms));
    };
    inst.B = random_poly();
    inst.C = random_poly();
    return inst;
}

Step2Instance random_step2_instance(const Field& f3, unsigned k, SplitMix64& rng) {
    const unsigned p = f3.characteristic();
    const Elem one = f3.one();
    const Elem minus_one = f3.neg(one);
    switch (rng.below(5)) {
        case 4: {
            // c X^Q with c in F_q^*: a Frobenius power scaled inside F_q, always true.
            const Subset sub = subfield_set(f3, k);
            const Elem c = sub.elems()[1 + rng.below(sub.size() - 1)];
            return {random_p_power(p, k, rng), SparsePoly::monomial(f3, 0, c)};
        }
        case 0: {
            // (X^q - X) o X^{Q+1} = X^{Q+1} B(X^{q-1}) with B = X^{Q+1} - 1.
            const std::uint64_t Q = random_p_power(p, k, rng);
            return {Q + 1, SparsePoly::from_terms(f3, {{Q + 1, one}, {0, minus_one}})};
        }
        case 1:
            // Same shape for X^3.
            return {3, SparsePoly::from_terms(f3, {{3, one}, {0, minus_one}})};
        case 2:
            return {1 + rng.below(f3.size()), SparsePoly::monomial(f3, rng.below(f3.size()), random_nonzero(f3, rng))};
        default: {
            std::vector<Term> terms;
            for (std::uint64_t i = 1 + rng.below(3); i > 0; --i) {
                terms.push_back({rng.below(f3.size()), random_elem(f3, rng)});
            }
            return {1 + rng.below(f3.size()), SparsePoly::from_terms(f3, std::move(terms))};
        }
    }
}

LemmaSweep sweep_step1(const Field& f3, unsigned k, std::size_t count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    LemmaSweep sweep;
    for (std::size_t i = 0; i < count; ++i) {
        const Step1Instance inst = random_step1_instance(f3, k, rng);
        const Step1Result r = check_step1_instance(f3, k, inst.L, inst.B, inst.C);
        ++sweep.instances;
        sweep.agreeing += r.match() ? 1 : 0;
        sweep.true_cases += r.lhs ? 1 : 0;
    }
    return sweep;
}

LemmaSweep sweep_step2(const Field& f3, unsigned k, std::size_t count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    LemmaSweep sweep;
    for (std::size_t i = 0; i < count; ++i) {
        const Step2Instance inst = random_step2_instance(f3, k, rng);
        const Step2Result r = check_step2_instance(f3, k, inst.r, inst.B);
        ++sweep.instances;
        sweep.agreeing += r.all_equal() ? 1 : 0;
        sweep.true_cases += r.e1 ? 1 : 0;
    }
    return sweep;
}

namespace {

struct Quad {
    Elem a, b, c, d;
};

// Scales so the first nonzero entry is 1, then packs the four indices.
std::uint64_t map_key(const Field& f, Quad m) {
    Elem lead = !m.a.is_zero() ? m.a : !m.b.is_zero() ? m.b : !m.c.is_zero() ? m.c : m.d;
    const Elem s = f.inv(lead);
    const std::uint64_t n = f.size();
    return ((std::uint64_t{f.mul(m.a, s).v} * n + f.mul(m.b, s).v) * n + f.mul(m.c, s).v) * n + f.mul(m.d, s).v;
}

template <class Target>
bool maps_into(const Field& f, const Deg1Map& rho, const std::vector<ProjPoint>& from, Target&& in_target) {
    for (const ProjPoint& x : from) {
        if (!in_target(rho(f, x))) return false;
    }
    return true;
}

}  // namespace

Deg1Report check_deg1_lemmas(unsigned p, unsigned k, std::uint64_t converse_max_q, FieldLimits limits) {
    const Field f = Field::build(p, 2 * k, limits);
    Deg1Report rep;
    rep.p = p;
    rep.k = k;
    rep.q = checked_pow(p, k);
    const std::uint64_t q = rep.q;

    const Subset mu = mu_set(f, q + 1);
    const Subset sub = subfield_set(f, k);
    std::vector<ProjPoint> mu_pts(mu.begin(), mu.end());
    const std::vector<ProjPoint> p1_pts = p1_points(f, k);
    const auto in_mu = [&](ProjPoint x) { return !x.is_infinity() && mu.contains(x.finite()); };
    const auto in_p1 = [&](ProjPoint x) { return x.is_infinity() || sub.contains(x.finite()); };

    std::unordered_set<std::uint64_t> mu_forms, f_to_mu_forms, mu_to_f_forms;
    for (Index ia = 0; ia < f.size(); ++ia) {
        for (Index ib = 0; ib < f.size(); ++ib) {
            const Elem a(ia), b(ib);
            const Elem aq = f.pow(a, q), bq = f.pow(b, q);
            ++rep.forward_pairs;
            if (f.mul(aq, a) != f.mul(bq, b)) {
                const Quad m{bq, aq, a, b};
                mu_forms.insert(map_key(f, m));
                rep.mu_forward = rep.mu_forward && maps_into(f, Deg1Map(f, m.a, m.b, m.c, m.d), mu_pts, in_mu);
            }
            if (f.mul(aq, b) != f.mul(a, bq)) {
                const Quad m1{aq, bq, a, b};
                f_to_mu_forms.insert(map_key(f, m1));
                rep.f_to_mu_forward =
                    rep.f_to_mu_forward && maps_into(f, Deg1Map(f, m1.a, m1.b, m1.c, m1.d), p1_pts, in_mu);
                const Quad m2{b, bq, a, aq};
                mu_to_f_forms.insert(map_key(f, m2));
                rep.mu_to_f_forward =
                    rep.mu_to_f_forward && maps_into(f, Deg1Map(f, m2.a, m2.b, m2.c, m2.d), mu_pts, in_p1);
            }
        }
    }

    if (q <= converse_max_q) {
        rep.converse_checked = true;
        const auto visit = [&](Quad m) {
            if (f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c)).is_zero()) return;
            ++rep.maps_enumerated;
            const Deg1Map rho(f, m.a, m.b, m.c, m.d);
            const std::uint64_t key = map_key(f, m);
            if (maps_into(f, rho, mu_pts, in_mu) && !mu_forms.contains(key)) rep.mu_converse = false;
            if (maps_into(f, rho, p1_pts, in_mu) && !f_to_mu_forms.contains(key)) rep.f_to_mu_converse = false;
            if (maps_into(f, rho, mu_pts, in_p1) && !mu_to_f_forms.contains(key)) rep.mu_to_f_converse = false;
        };
        // Projective representatives: first nonzero coordinate equal to 1.
        for (Index b = 0; b < f.size(); ++b) {
            for (Index c = 0; c < f.size(); ++c) {
                for (Index d = 0; d < f.size(); ++d) visit({f.one(), Elem(b), Elem(c), Elem(d)});
            }
        }
        for (Index c = 0; c < f.size(); ++c) {
            for (Index d = 0; d < f.size(); ++d) visit({f.zero(), f.one(), Elem(c), Elem(d)});
        }
    }

    if (p != 3) {
        rep.omega_applicable = true;
        const Deg1Map rho = omega_map(f);
        if (q % 3 == 1) {
            rep.omega_behavior = maps_into(f, rho, p1_pts, in_p1) && maps_into(f, rho, mu_pts, in_mu);
        } else {
            rep.omega_behavior = maps_into(f, rho, p1_pts, in_mu) && maps_into(f, rho, mu_pts, in_p1);
        }
        if (p == 2) {
            rep.involution_applicable = true;
            for (const ProjPoint& x : p1_points(f, f.degree())) {
                if (!(rho(f, rho(f, x)) == x)) rep.involution = false;
            }
        }
    }
    return rep;
}

bool check_htilde_identities(const Field& f6, unsigned k, unsigned l) {
    if (f6.characteristic() != 2 || k == 0 || f6.degree() != 6 * k) {
        throw FieldError("h~ identities live in GF(2^{6k})");
    }
    if (!(ord2(k) <= ord2(l))) {
        throw FieldError("h~ identities need ord2(k) <= ord2(l)");
    }
    const Deg1Map rho = omega_map(f6);
    const std::uint64_t Q = checked_pow(2, l);
    const std::int64_t e = l % 2 == 0 ? -static_cast<std::int64_t>(Q + 1) : static_cast<std::int64_t>(Q - 1);
    const auto composite = [&](ProjPoint x) { return rho(f6, proj_pow(f6, rho(f6, x), e)); };
    const auto h_tilde = [&](ProjPoint x) { return eval_h_tilde(f6, l, x); };
    try {
        return maps_equal_pointwise(composite, h_tilde, p1_points(f6, 3 * k));
    } catch (const DegenerateEvaluation&) {
        return false;
    }
}

bool check_htilde_identities(unsigned k, unsigned l, FieldLimits limits) {
    return check_htilde_identities(Field::build(2, 6 * k, limits), k, l);
}

bool lambda_avoids_unit_roots(const Field& f3, unsigned k, unsigned l) {
    const std::uint64_t Q = checked_pow(f3.characteristic(), l);
    for (Elem z : lambda_set(f3, k)) {
        if (f3.pow(z, Q + 1) == f3.one()) return false;
    }
    return true;
}

RemarkReport check_remark(unsigned k, unsigned p, FieldLimits limits) {
    const Field f = Field::build(p, 3 * k, limits);
    RemarkReport rep;
    rep.p = p;
    rep.k = k;
    rep.q = checked_pow(p, k);
    rep.within_claim = k % 2 == 1 && p % 3 == 2;
    const std::uint64_t q = rep.q;
    const auto cube_part = [&](Elem x) { return f.pow(f.sub(f.pow(x, q), x), 3); };
    rep.literal_permutes = is_permutation(f, [&](Elem x) {
        const Elem y = f.pow(x, q);
        return f.add(cube_part(x), f.add(f.add(f.mul(y, y), y), x));
    });
    rep.trace_form_permutes =
        is_permutation(f, [&](Elem x) { return f.add(cube_part(x), f.trace_rel(x, k)); });
    return rep;
}

FiberingReport fibering(const Field& f3, unsigned k, FiberMapKind map, const Subset& domain, const Subset& target) {
    const std::uint64_t q = checked_pow(f3.characteristic(), k);
    std::vector<std::size_t> counts(f3.size(), 0);
    FiberingReport rep;
    rep.into_target = true;
    for (Elem x : domain) {
        const Elem y = map == FiberMapKind::PowerQMinusOne ? f3.pow(x, q - 1) : f3.sub(f3.pow(x, q), x);
        if (!target.contains(y)) rep.into_target = false;
        ++counts[y.v];
    }
    rep.onto_target = true;
    for (Elem t : target) rep.onto_target = rep.onto_target && counts[t.v] > 0;
    std::size_t fiber = 0;
    bool uniform = true;
    for (std::size_t c : counts) {
        if (c == 0) continue;
        if (fiber == 0) fiber = c;
        uniform = uniform && c == fiber;
    }
    if (uniform && fiber > 0) rep.uniform_fiber = fiber;
    return rep;
}

}  // namespace ffperm
