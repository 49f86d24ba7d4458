#include "ffperm/maps.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace ffperm {

namespace {

struct NamedFamily {
    FamilyId id;
    std::string_view name;
};

constexpr std::array<NamedFamily, 12> kNames = {{
    {FamilyId::Main1, "main1"},
    {FamilyId::Main3, "main3"},
    {FamilyId::MainDeg3, "main-deg3"},
    {FamilyId::F1, "f1"},
    {FamilyId::F2, "f2"},
    {FamilyId::F3, "f3"},
    {FamilyId::F4, "f4"},
    {FamilyId::F5, "f5"},
    {FamilyId::F6, "f6"},
    {FamilyId::KeyMap, "key"},
    {FamilyId::KeyDeg3, "key-deg3"},
    {FamilyId::FiberMap, "fiber"},
}};

}  // namespace

std::string_view family_name(FamilyId id) {
    for (const auto& nf : kNames) {
        if (nf.id == id) return nf.name;
    }
    return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
    for (const auto& nf : kNames) {
        if (nf.name == name) return nf.id;
    }
    return std::nullopt;
}

FamilyTraits family_traits(FamilyId id) {
    switch (id) {
        case FamilyId::Main1: return {true, true, true, CoefDomain::SubfieldStar, Domain::Field};
        case FamilyId::Main3: return {true, true, false, CoefDomain::Full, Domain::Field};
        case FamilyId::MainDeg3: return {true, false, false, CoefDomain::Full, Domain::Field};
        case FamilyId::F1:
        case FamilyId::F2:
        case FamilyId::F3:
        case FamilyId::F4: return {true, false, false, CoefDomain::None, Domain::Field};
        case FamilyId::F5: return {true, true, false, CoefDomain::None, Domain::Field};
        case FamilyId::F6: return {true, false, false, CoefDomain::SubfieldStar, Domain::Field};
        case FamilyId::KeyMap: return {true, false, false, CoefDomain::None, Domain::Gamma};
        case FamilyId::KeyDeg3: return {false, false, false, CoefDomain::None, Domain::Gamma};
        case FamilyId::FiberMap: return {true, false, false, CoefDomain::None, Domain::Cosets};
    }
    return {};
}

void validate(const Field& f3, const FamilySpec& spec) {
    const std::string name(family_name(spec.id));
    if (f3.characteristic() != spec.p || spec.k == 0 || f3.degree() != 3 * spec.k) {
        throw SpecError(name + ": field GF(" + std::to_string(f3.characteristic()) + "^" +
                        std::to_string(f3.degree()) + ") is not GF(p^{3k}) for p=" + std::to_string(spec.p) +
                        ", k=" + std::to_string(spec.k));
    }
    const FamilyTraits t = family_traits(spec.id);
    if (t.uses_l && !spec.l) throw SpecError(name + " needs l");
    if (t.uses_m && !spec.m) throw SpecError(name + " needs m");
    if (t.uses_n && !spec.n) throw SpecError(name + " needs n");
    if (t.coef == CoefDomain::None) return;
    if (!spec.c) throw SpecError(name + " needs a coefficient c");
    if (spec.c->v >= f3.size()) throw SpecError(name + ": c index out of range");
    if (t.coef == CoefDomain::SubfieldStar && (spec.c->is_zero() || !f3.is_in_subfield(*spec.c, spec.k))) {
        throw SpecError(name + ": c must be a nonzero element of F_q");
    }
}

SparsePoly SparsePoly::from_terms(const Field& f, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    SparsePoly out;
    for (const Term& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
            out.terms_.back().coef = f.add(out.terms_.back().coef, t.coef);
        } else {
            out.terms_.push_back(t);
        }
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.coef.is_zero(); });
    return out;
}

Elem SparsePoly::eval(const Field& f, Elem x) const {
    Elem acc = f.zero();
    for (const Term& t : terms_) acc = f.add(acc, f.mul(t.coef, f.pow(x, t.exp)));
    return acc;
}

SparsePoly poly_frobenius_coeffs(const Field& f, const SparsePoly& g, unsigned k) {
    std::vector<Term> terms = g.terms();
    for (Term& t : terms) t.coef = f.frobenius(t.coef, k);
    return SparsePoly::from_terms(f, std::move(terms));
}

FamilyEvaluator::FamilyEvaluator(const Field& f3, FamilySpec spec) : field_(&f3), spec_(std::move(spec)) {
    validate(f3, spec_);
    const std::uint64_t p = spec_.p;
    q_ = checked_pow(p, spec_.k);
    const std::uint64_t q = q_;
    const std::uint64_t q2 = checked_mul(q, q);
    const std::uint64_t Q = spec_.l ? checked_pow(p, *spec_.l) : 0;
    const std::uint64_t R = spec_.m ? checked_pow(p, *spec_.m) : 0;
    const std::uint64_t S = spec_.n ? checked_pow(p, *spec_.n) : 0;
    c_ = spec_.c.value_or(f3.one());

    const Elem one = f3.one();
    const Elem minus_one = f3.neg(one);
    auto add = checked_add;
    auto mul = checked_mul;

    switch (spec_.id) {
        case FamilyId::Main1:
            inner_exp_ = add(Q, 1);
            trace_exp_ = add(R, S);
            break;
        case FamilyId::Main3:
            inner_exp_ = add(Q, 1);
            trace_exp_ = R;
            break;
        case FamilyId::MainDeg3:
            inner_exp_ = 3;
            trace_exp_ = Q;
            break;
        case FamilyId::KeyMap:
        case FamilyId::FiberMap:
            inner_exp_ = add(Q, 1);
            break;
        case FamilyId::KeyDeg3:
            inner_exp_ = 3;
            break;
        case FamilyId::F1:
            literal_ = {{add(mul(q2, Q), q), one}, {add(mul(q, Q), q2), one}, {add(Q, 1), one}};
            break;
        case FamilyId::F2:
            literal_ = {{add(mul(q2, Q), 1), one},
                        {add(mul(q, Q), 1), one},
                        {add(Q, q2), one},
                        {add(Q, q), one},
                        {add(Q, 1), minus_one}};
            break;
        case FamilyId::F3:
            literal_ = {{add(mul(q2, Q), q), one},
                        {add(mul(q, Q), q), one},
                        {add(Q, q2), one},
                        {add(Q, q), minus_one},
                        {add(Q, 1), one}};
            break;
        case FamilyId::F4:
            literal_ = {{add(mul(q2, Q), q2), one},
                        {add(mul(q, Q), q2), one},
                        {add(Q, q2), minus_one},
                        {add(Q, q), one},
                        {add(Q, 1), one}};
            break;
        case FamilyId::F5:
            literal_ = {{add(mul(q, Q), q), one},        {add(mul(q, Q), 1), minus_one},
                        {add(Q, q), minus_one},          {add(Q, 1), one},
                        {mul(q2, R), one},               {mul(q, R), one},
                        {R, one}};
            break;
        case FamilyId::F6:
            literal_ = {{mul(3, q), one},
                        {add(mul(2, q), 1), f3.from_int(-3)},
                        {add(q, 2), f3.from_int(3)},
                        {3, minus_one},
                        {mul(q2, Q), c_},
                        {mul(q, Q), c_},
                        {Q, c_}};
            break;
    }
}

Elem FamilyEvaluator::literal(Elem x) const {
    const Field& f = *field_;
    Elem acc = f.zero();
    for (const Term& t : literal_) acc = f.add(acc, f.mul(t.coef, f.pow(x, t.exp)));
    return acc;
}

Elem FamilyEvaluator::operator()(Elem x) const {
    const Field& f = *field_;
    switch (spec_.id) {
        case FamilyId::Main1:
        case FamilyId::Main3:
        case FamilyId::MainDeg3: {
            const Elem shift = f.sub(f.pow(x, q_), x);
            return f.add(f.pow(shift, inner_exp_), trace(f.mul(c_, f.pow(x, trace_exp_))));
        }
        case FamilyId::KeyMap:
        case FamilyId::KeyDeg3: {
            const Elem y = f.pow(x, inner_exp_);
            return f.sub(f.pow(y, q_), y);
        }
        case FamilyId::FiberMap: return trace(f.pow(x, inner_exp_));
        default: return literal(x);
    }
}

Elem eval_family(const Field& f3, const FamilySpec& spec, Elem x) { return FamilyEvaluator(f3, spec)(x); }

Deg1Map::Deg1Map(const Field& f, Elem a, Elem b, Elem c, Elem d) : a_(a), b_(b), c_(c), d_(d) {
    if (f.sub(f.mul(a, d), f.mul(b, c)).is_zero()) throw FieldError("degree-1 map with zero determinant");
}

ProjPoint Deg1Map::operator()(const Field& f, ProjPoint x) const {
    if (x.is_infinity()) {
        if (c_.is_zero()) return ProjPoint::infinity();
        return f.div(a_, c_);
    }
    const Elem num = f.add(f.mul(a_, x.finite()), b_);
    const Elem den = f.add(f.mul(c_, x.finite()), d_);
    if (den.is_zero()) return ProjPoint::infinity();
    return f.div(num, den);
}

ProjPoint deg1_eval(const Field& f, const Deg1Map& rho, ProjPoint x) { return rho(f, x); }

Elem find_omega(const Field& f) {
    if (f.size() % 3 != 1) {
        throw FieldError("no root of X^2+X+1 in a field of order " + std::to_string(f.size()));
    }
    const Elem w1 = f.exp(f.group_order() / 3);
    const Elem w2 = f.exp(2 * (f.group_order() / 3));
    return std::min(w1, w2);
}

Deg1Map omega_map(const Field& f) {
    const Elem w = find_omega(f);
    return Deg1Map(f, w, f.one(), f.one(), w);
}

ProjPoint proj_pow(const Field& f, ProjPoint x, std::int64_t e) {
    if (e == 0) return f.one();
    const bool negative = e < 0;
    const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    if (x.is_infinity()) return negative ? ProjPoint(f.zero()) : ProjPoint::infinity();
    if (x.finite().is_zero()) return negative ? ProjPoint::infinity() : ProjPoint(f.zero());
    const Elem r = f.pow(x.finite(), mag);
    return negative ? f.inv(r) : r;
}

namespace {

ProjPoint ratio(const Field& f, Elem num, Elem den, const char* what) {
    if (den.is_zero()) {
        if (num.is_zero()) throw DegenerateEvaluation(std::string(what) + ": 0/0");
        return ProjPoint::infinity();
    }
    return f.div(num, den);
}

}  // namespace

ProjPoint eval_h(const Field& f, unsigned l, ProjPoint x) {
    // Denominator degree Q+1 exceeds numerator degree Q.
    if (x.is_infinity()) return f.zero();
    const std::uint64_t Q = checked_pow(f.characteristic(), l);
    const Elem v = x.finite();
    const Elem num = f.add(f.add(f.pow(v, Q), v), f.one());
    const Elem den = f.sub(f.pow(v, Q + 1), f.one());
    return ratio(f, num, den, "h");
}

ProjPoint eval_h_tilde(const Field& f, unsigned l, ProjPoint x) {
    if (x.is_infinity()) return ProjPoint::infinity();
    const std::uint64_t Q = checked_pow(f.characteristic(), l);
    const Elem v = x.finite();
    const Elem vq = f.pow(v, Q);
    const Elem num = f.add(f.add(f.mul(vq, v), vq), v);
    const Elem den = f.add(f.add(vq, v), f.one());
    return ratio(f, num, den, "h~");
}

}  // namespace ffperm
