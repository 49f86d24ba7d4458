#pragma once

// Distinguished subsets of GF(q^3) and GF(q^2) with q = p^k:
//   Gamma     roots of X^{q^2}+X^q+X (the relative-trace kernel), |Gamma| = q^2
//   GammaStar Gamma without 0
//   Lambda    roots of X^{q+1}+X+1, |Lambda| = q+1
//   Mu(m)     m-th roots of unity inside the ambient field
//   P1(k)     the subfield GF(p^k) together with infinity

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ffperm/field.hpp"

namespace ffperm {

/// A point of the projective line: a finite element or infinity.
class ProjPoint {
  public:
    constexpr ProjPoint(Elem e) : value_(e), infinite_(false) {}
    static constexpr ProjPoint infinity() { return ProjPoint(); }

    constexpr bool is_infinity() const { return infinite_; }
    /// Undefined for the point at infinity.
    constexpr Elem finite() const { return value_; }

    friend constexpr bool operator==(const ProjPoint&, const ProjPoint&) = default;

  private:
    constexpr ProjPoint() : value_(), infinite_(true) {}
    Elem value_;
    bool infinite_;
};

/// Sorted element collection with O(1) membership.
class Subset {
  public:
    Subset(const Field& field, std::vector<Elem> sorted_elems);

    const std::vector<Elem>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(Elem e) const { return e.v < mask_.size() && mask_[e.v]; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

  private:
    std::vector<Elem> elems_;
    std::vector<bool> mask_;
};

struct GammaKind {};
struct GammaStarKind {};
struct LambdaKind {};
struct MuKind {
    std::uint64_t m;
};
struct P1Kind {
    unsigned k;
};
using SubsetKind = std::variant<GammaKind, GammaStarKind, LambdaKind, MuKind, P1Kind>;

std::string kind_name(const SubsetKind& kind);

Subset gamma_set(const Field& f3, unsigned k);
Subset gamma_star_set(const Field& f3, unsigned k);
Subset lambda_set(const Field& f3, unsigned k);
/// Nonzero a with a^m = 1; throws FieldError for m == 0.
Subset mu_set(const Field& f, std::uint64_t m);
/// Elements of the degree-k subfield of f.
Subset subfield_set(const Field& f, unsigned k);
/// Subfield elements as finite points followed by infinity.
std::vector<ProjPoint> p1_points(const Field& f, unsigned k);

/// Finite-element view of a kind; for P1 this is the subfield without infinity.
Subset materialize(const Field& f, unsigned k, const SubsetKind& kind);

}  // namespace ffperm
