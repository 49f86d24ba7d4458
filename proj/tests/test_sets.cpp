#include <doctest.h>

#include <numeric>

#include "ffperm/sets.hpp"
#include "ffperm/verify.hpp"
#include "oracles.hpp"

using namespace ffperm;

namespace {

struct Case {
    unsigned p, k;
};
const std::vector<Case> kCubics = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};

}  // namespace

TEST_CASE("gamma") {
    const Field f8 = Field::build(2, 3);
    const Subset g = gamma_set(f8, 1);
    CHECK(g.size() == 4);
    CHECK(g.contains(f8.zero()));
    CHECK(gamma_set(Field::build(2, 6), 2).size() == 16);
    CHECK_THROWS_AS(gamma_set(f8, 2), FieldError);
}

TEST_CASE("gamma equals the linear-algebra kernel") {
    for (auto [p, k] : kCubics) {
        const Field f3 = Field::build(p, 3 * k);
        CAPTURE(p);
        CAPTURE(k);
        CHECK(gamma_set(f3, k).elems() == oracle::gamma_by_linear_algebra(f3, k));
    }
}

TEST_CASE("gamma is an F_q-subspace") {
    for (auto [p, k] : kCubics) {
        const Field f3 = Field::build(p, 3 * k);
        const Subset g = gamma_set(f3, k);
        const Subset fq = subfield_set(f3, k);
        bool closed = true;
        for (Elem a : g) {
            for (Elem b : g) closed = closed && g.contains(f3.add(a, b));
            for (Elem s : fq) closed = closed && g.contains(f3.mul(s, a));
        }
        CHECK(closed);
    }
}

TEST_CASE("lambda") {
    const Field f8 = Field::build(2, 3);
    const Subset l = lambda_set(f8, 1);
    CHECK(l.size() == 3);
    CHECK_FALSE(l.contains(f8.one()));
    CHECK_FALSE(l.contains(f8.zero()));
    CHECK(lambda_set(Field::build(2, 6), 2).size() == 5);
}

TEST_CASE("cardinalities") {
    for (auto [p, k] : kCubics) {
        const Field f3 = Field::build(p, 3 * k);
        const Field f2 = Field::build(p, 2 * k);
        const std::uint64_t q = oracle::ipow(p, k);
        CAPTURE(p);
        CAPTURE(k);
        CHECK(gamma_set(f3, k).size() == q * q);
        CHECK(gamma_star_set(f3, k).size() == q * q - 1);
        CHECK(lambda_set(f3, k).size() == q + 1);
        CHECK(mu_set(f2, q + 1).size() == q + 1);
        CHECK(p1_points(f2, k).size() == q + 1);
        CHECK_FALSE(lambda_set(f3, k).contains(f3.zero()));
    }
}

TEST_CASE("mu") {
    const Field f4 = Field::build(2, 2);
    CHECK(mu_set(f4, 3).elems() == std::vector<Elem>{Elem(1), Elem(2), Elem(3)});
    CHECK(mu_set(f4, 3).size() == 3);
    const Field f = Field::build(3, 4);
    for (std::uint64_t m : {1, 2, 5, 8, 10, 16, 40, 80, 81}) {
        const Subset s = mu_set(f, m);
        CHECK(s.contains(f.one()));
        CHECK(s.size() == std::gcd(m, std::uint64_t{f.size() - 1}));
    }
    CHECK_THROWS_AS(mu_set(f, 0), FieldError);
}

TEST_CASE("projective line over a subfield") {
    const auto pts = p1_points(Field::build(2, 2), 1);
    CHECK(pts.size() == 3);
    CHECK(pts.back().is_infinity());
    CHECK(p1_points(Field::build(2, 4), 2).size() == 5);
    CHECK_THROWS_AS(p1_points(Field::build(2, 4), 3), FieldError);
}

TEST_CASE("subset kinds") {
    const Field f3 = Field::build(2, 6);
    CHECK(materialize(f3, 2, GammaKind{}).size() == 16);
    CHECK(materialize(f3, 2, LambdaKind{}).size() == 5);
    CHECK(materialize(f3, 2, MuKind{9}).size() == 9);
    CHECK(materialize(f3, 2, P1Kind{2}).size() == 4);
    CHECK(kind_name(MuKind{5}) == "mu_5");
}

TEST_CASE("fiberings over gamma and lambda") {
    for (auto [p, k] : kCubics) {
        const Field f3 = Field::build(p, 3 * k);
        const std::uint64_t q = oracle::ipow(p, k);
        std::vector<Elem> all;
        for (Index i = 0; i < f3.size(); ++i) all.emplace_back(i);
        const Subset whole(f3, all);
        CAPTURE(p);
        CAPTURE(k);

        const auto mult = fibering(f3, k, FiberMapKind::PowerQMinusOne, gamma_star_set(f3, k), lambda_set(f3, k));
        CHECK(mult.into_target);
        CHECK(mult.onto_target);
        CHECK(mult.uniform_fiber == q - 1);

        const auto add = fibering(f3, k, FiberMapKind::ArtinSchreier, whole, gamma_set(f3, k));
        CHECK(add.into_target);
        CHECK(add.onto_target);
        CHECK(add.uniform_fiber == q);

        // x^{q-1} on the whole field sends F_q^* to 1, and 1 lies in Gamma
        // only in characteristic 3.
        const auto literal = fibering(f3, k, FiberMapKind::PowerQMinusOne, whole, gamma_set(f3, k));
        CHECK(literal.into_target == false);
    }
}
