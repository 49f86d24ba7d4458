#include "ffperm/sets.hpp"

namespace ffperm {

namespace {

void require_cubic(const Field& f3, unsigned k) {
    if (k == 0 || f3.degree() != 3 * k) {
        throw FieldError("expected GF(q^3) with q = p^" + std::to_string(k) + ", got degree " +
                         std::to_string(f3.degree()));
    }
}

template <class Pred>
Subset filter(const Field& f, Pred&& keep) {
    std::vector<Elem> out;
    for (Index i = 0; i < f.size(); ++i) {
        if (keep(Elem(i))) out.push_back(Elem(i));
    }
    return Subset(f, std::move(out));
}

}  // namespace

Subset::Subset(const Field& field, std::vector<Elem> sorted_elems)
    : elems_(std::move(sorted_elems)), mask_(field.size(), false) {
    for (Elem e : elems_) mask_[e.v] = true;
}

std::string kind_name(const SubsetKind& kind) {
    struct Visitor {
        std::string operator()(GammaKind) const { return "gamma"; }
        std::string operator()(GammaStarKind) const { return "gamma_star"; }
        std::string operator()(LambdaKind) const { return "lambda"; }
        std::string operator()(MuKind k) const { return "mu_" + std::to_string(k.m); }
        std::string operator()(P1Kind k) const { return "p1_" + std::to_string(k.k); }
    };
    return std::visit(Visitor{}, kind);
}

Subset gamma_set(const Field& f3, unsigned k) {
    require_cubic(f3, k);
    return filter(f3, [&](Elem a) { return f3.trace_rel(a, k).is_zero(); });
}

Subset gamma_star_set(const Field& f3, unsigned k) {
    require_cubic(f3, k);
    return filter(f3, [&](Elem a) { return !a.is_zero() && f3.trace_rel(a, k).is_zero(); });
}

Subset lambda_set(const Field& f3, unsigned k) {
    require_cubic(f3, k);
    const std::uint64_t q = checked_pow(f3.characteristic(), k);
    return filter(f3, [&](Elem a) {
        return f3.add(f3.add(f3.pow(a, q + 1), a), f3.one()).is_zero();
    });
}

Subset mu_set(const Field& f, std::uint64_t m) {
    if (m == 0) throw FieldError("mu_m needs m >= 1");
    return filter(f, [&](Elem a) { return !a.is_zero() && f.pow(a, m) == f.one(); });
}

Subset subfield_set(const Field& f, unsigned k) {
    if (k == 0 || f.degree() % k != 0) {
        throw FieldError(std::to_string(k) + " does not divide degree " + std::to_string(f.degree()));
    }
    return filter(f, [&](Elem a) { return f.is_in_subfield(a, k); });
}

std::vector<ProjPoint> p1_points(const Field& f, unsigned k) {
    std::vector<ProjPoint> out;
    for (Elem e : subfield_set(f, k)) out.emplace_back(e);
    out.push_back(ProjPoint::infinity());
    return out;
}

Subset materialize(const Field& f, unsigned k, const SubsetKind& kind) {
    struct Visitor {
        const Field& f;
        unsigned k;
        Subset operator()(GammaKind) const { return gamma_set(f, k); }
        Subset operator()(GammaStarKind) const { return gamma_star_set(f, k); }
        Subset operator()(LambdaKind) const { return lambda_set(f, k); }
        Subset operator()(MuKind m) const { return mu_set(f, m.m); }
        Subset operator()(P1Kind p) const { return subfield_set(f, p.k); }
    };
    return std::visit(Visitor{f, k}, kind);
}

}  // namespace ffperm
