#include <doctest.h>

#include <random>

#include "demroots/errors.hpp"
#include "demroots/toric.hpp"
#include "test_util.hpp"

using namespace demroots;

namespace {

IntVec v(std::initializer_list<long long> xs) {
    IntVec r;
    for (long long x : xs) r.emplace_back(x);
    return r;
}

std::shared_ptr<const WeightMonoid> plane_monoid() {
    return std::make_shared<const WeightMonoid>(2, std::vector<IntVec>{v({1, 0}), v({0, 1})});
}

std::shared_ptr<const WeightMonoid> index_two_monoid() {
    return std::make_shared<const WeightMonoid>(2, std::vector<IntVec>{v({1, -1}), v({0, -2})});
}

AlgebraElement mono(std::initializer_list<long long> u, Rat c = 1) {
    return AlgebraElement::monomial(v(u), c);
}

}  // namespace

TEST_CASE("monoid membership is the saturated closure") {
    auto plane = plane_monoid();
    CHECK(plane->monoid_membership(v({2, 3})));
    CHECK(plane->monoid_membership(v({0, 0})));
    CHECK_FALSE(plane->monoid_membership(v({-1, 2})));

    auto idx2 = index_two_monoid();
    CHECK(idx2->monoid_membership(v({1, -1})));
    CHECK_FALSE(idx2->monoid_membership(v({0, -1})));  // odd coordinate sum: outside the lattice
}

TEST_CASE("saturation warning state on a gapped numerical semigroup") {
    WeightMonoid m(1, {v({2}), v({3})});
    CHECK_FALSE(m.saturation_verified());
    REQUIRE(m.saturation_gaps().size() == 1);
    CHECK(m.saturation_gaps()[0] == v({1}));
    // Saturated-closure membership still answers for the closure.
    CHECK(m.monoid_membership(v({1})));
    CHECK_FALSE(m.generates(v({1})));
    CHECK(m.generates(v({5})));

    CHECK(plane_monoid()->saturation_verified());
    CHECK(index_two_monoid()->saturation_verified());
}

TEST_CASE("exact monoid membership handles units") {
    // Dominant halfplane of the plane lattice: the vertical axis is a unit.
    WeightMonoid m(2, {v({1, 0}), v({0, 1}), v({0, -1})});
    CHECK(m.saturation_verified());
    CHECK(m.generates(v({3, -7})));
    CHECK(m.generates(v({0, 5})));
    CHECK_FALSE(m.generates(v({-1, 0})));
}

TEST_CASE("derivation of a monomial") {
    auto plane = plane_monoid();
    ToricLND d(plane, v({-1, 2}));
    CHECK(lnd_apply(d, mono({3, 1})) == mono({2, 3}, 3));
    // Facet points are killed.
    CHECK(lnd_apply(d, mono({0, 5})).is_zero());
    // Term-by-term: the second summand dies.
    ToricLND d2(plane, v({-1, 0}));
    AlgebraElement f = ae_add(mono({1, 0}), mono({0, 1}));
    CHECK(lnd_apply(d2, f) == mono({0, 0}));
    // Support outside the monoid is rejected.
    CHECK_THROWS_AS(lnd_apply(d, mono({-1, 0})), DomainError);
}

TEST_CASE("invalid roots are rejected at construction") {
    CHECK_THROWS_AS(ToricLND(plane_monoid(), v({-1, -1})), DomainError);
    CHECK_THROWS_AS(ToricLND(plane_monoid(), v({1, 1})), DomainError);
}

TEST_CASE("nilpotency indices") {
    auto plane = plane_monoid();
    ToricLND d(plane, v({-1, 0}));
    CHECK(lnd_nilpotency_index(d, v({3, 1})) == 4);
    CHECK(lnd_nilpotency_index(d, v({0, 7})) == 1);
    CHECK(lnd_nilpotency_index(d, v({0, 0})) == 1);
    CHECK_THROWS_AS(lnd_nilpotency_index(d, v({-1, 0})), DomainError);
}

TEST_CASE("exponential action") {
    auto plane = plane_monoid();
    ToricLND d(plane, v({-1, 2}));
    // Coordinate weights: the distinguished one gains one term, others fixed.
    AlgebraElement x1 = mono({1, 0});
    Rat s(3, 2);
    AlgebraElement moved = exp_action(d, s, x1);
    CHECK(moved == ae_add(mono({1, 0}), mono({0, 2}, s)));
    CHECK(exp_action(d, s, mono({0, 1})) == mono({0, 1}));
    // s = 0 is the identity of the one-parameter group.
    CHECK(exp_action(d, 0, mono({3, 1})) == mono({3, 1}));
    // Full three-term expansion.
    ToricLND d2(plane, v({-1, 0}));
    AlgebraElement expanded = exp_action(d2, 1, mono({2, 0}));
    CHECK(expanded == ae_add(ae_add(mono({2, 0}), mono({1, 0}, 2)), mono({0, 0})));
}

TEST_CASE("kernel membership") {
    auto plane = plane_monoid();
    ToricLND d(plane, v({-1, 2}));  // distinguished ray (1,0)
    CHECK(kernel_membership(d, v({0, 5})));
    CHECK_FALSE(kernel_membership(d, v({1, 0})));

    auto idx2 = index_two_monoid();
    // The ray annihilating (1,-1); scalar multiples of the facet generator
    // stay in the kernel.
    ToricLND dd(idx2, v({0, 2}));
    CHECK(kernel_membership(dd, v({3, -3})));
    CHECK_FALSE(kernel_membership(dd, v({0, -2})));
}

TEST_CASE("divisor ideal membership") {
    auto plane = plane_monoid();
    CHECK(divisor_ideal_membership(*plane, v({1, 0}), v({1, 1})));
    CHECK_FALSE(divisor_ideal_membership(*plane, v({1, 0}), v({0, 7})));
    CHECK_FALSE(divisor_ideal_membership(*plane, v({1, 0}), v({0, 0})));
    CHECK_THROWS_AS(divisor_ideal_membership(*plane, v({1, 1}), v({1, 1})), DomainError);
}

TEST_CASE("equivalence is ray equality") {
    auto plane = plane_monoid();
    ToricLND a(plane, v({-1, 0}));
    ToricLND b(plane, v({-1, 5}));
    ToricLND c(plane, v({0, -1}));
    CHECK(equivalent(a, b));
    CHECK_FALSE(equivalent(a, c));
    CHECK(equivalent(a, a));
    auto other = index_two_monoid();
    ToricLND d(other, v({0, 2}));
    CHECK_THROWS_AS(equivalent(a, d), DomainError);
}

TEST_CASE("moved divisor") {
    auto plane = plane_monoid();
    CHECK(moved_divisor(ToricLND(plane, v({-1, 2}))) == v({1, 0}));
    CHECK(moved_divisor(ToricLND(plane, v({0, -1}))) == v({0, 1}));
    // Rank-3 fixture shadow: in monoid-basis coordinates the root (0,-1)
    // moves the second coordinate divisor.
    auto shadow = std::make_shared<const WeightMonoid>(
        3, std::vector<IntVec>{v({1, 1, 0}), v({0, 0, 1})});
    CHECK(moved_divisor(ToricLND(shadow, v({0, 0, -1}))) == v({0, 1}));
}

TEST_CASE("explicit basis changes the reported coordinates only") {
    // Same lattice, reordered basis: dual-ray coordinates follow the basis.
    WeightMonoid canonical(2, {v({1, 0}), v({0, 1})});
    WeightMonoid reordered(2, {v({1, 0}), v({0, 1})}, IntMat({v({0, 1}), v({1, 0})}, 2));
    CHECK(canonical.dual_rays() == reordered.dual_rays());  // both are the coordinate rays
    WeightMonoid skewed(2, {v({1, 0}), v({0, 1})}, IntMat({v({1, 1}), v({0, 1})}, 2));
    CHECK(skewed.dual_rays() != canonical.dual_rays());
    CHECK_THROWS_AS(WeightMonoid(2, {v({2, 0}), v({0, 1})}, IntMat({v({1, 0}), v({0, 1})}, 2)),
                    DomainError);
}

namespace {

AlgebraElement random_element(testutil::Rng& rng, const WeightMonoid& m, int nterms) {
    // Random nonnegative combinations of generators keep the support inside
    // the monoid.
    AlgebraElement f;
    std::uniform_int_distribution<int> coeff(1, 3), count(0, 2);
    for (int t = 0; t < nterms; ++t) {
        IntVec u(m.ambient_rank(), 0);
        for (const auto& g : m.generators())
            for (int rep = count(rng); rep > 0; --rep) u = vec_add(u, g);
        f = ae_add(f, AlgebraElement::monomial(u, coeff(rng)));
    }
    return f;
}

std::optional<ToricLND> random_lnd(testutil::Rng& rng,
                                   const std::shared_ptr<const WeightMonoid>& m, const Int& bound) {
    RootsByRay groups = enumerate_roots(m->lattice(), Box(bound));
    std::vector<DemazureRoot> all;
    for (const auto& [rho, roots] : groups)
        for (const auto& r : roots) all.push_back(r);
    if (all.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return ToricLND(m, all[pick(rng)].e);
}

}  // namespace

TEST_CASE("Leibniz rule on random elements") {
    testutil::Rng rng(401);
    int done = 0;
    while (done < 30) {
        auto m = testutil::random_monoid_with_roots(rng, 2, 3, -2, 2, 3);
        auto d = random_lnd(rng, m, 3);
        if (!d) continue;
        AlgebraElement f = random_element(rng, *m, 2);
        AlgebraElement g = random_element(rng, *m, 2);
        AlgebraElement lhs = lnd_apply(*d, ae_mul(*m, f, g));
        AlgebraElement rhs =
            ae_add(ae_mul(*m, f, lnd_apply(*d, g)), ae_mul(*m, lnd_apply(*d, f), g));
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("one-parameter group law and ring homomorphism") {
    testutil::Rng rng(402);
    int done = 0;
    while (done < 30) {
        auto m = testutil::random_monoid_with_roots(rng, 2, 3, -2, 2, 3);
        auto d = random_lnd(rng, m, 3);
        if (!d) continue;
        AlgebraElement f = random_element(rng, *m, 2);
        AlgebraElement g = random_element(rng, *m, 2);
        Rat s = testutil::random_rational(rng);
        Rat t = testutil::random_rational(rng);
        CHECK(exp_action(*d, s + t, f) == exp_action(*d, s, exp_action(*d, t, f)));
        CHECK(exp_action(*d, s, ae_mul(*m, f, g)) ==
              ae_mul(*m, exp_action(*d, s, f), exp_action(*d, s, g)));
        ++done;
    }
}

TEST_CASE("nilpotency exactness, kernel dichotomy, equivalence theorem") {
    testutil::Rng rng(403);
    int done = 0;
    while (done < 15) {
        auto m = testutil::random_monoid_with_roots(rng, 2, 3, -2, 2, 3);
        RootsByRay groups = enumerate_roots(m->lattice(), Box(2));
        std::vector<ToricLND> lnds;
        for (const auto& [rho, roots] : groups)
            for (const auto& r : roots) lnds.emplace_back(m, r.e);
        if (lnds.empty()) continue;
        // In-box monoid points in basis coordinates.
        for_each_box_point(m->lattice().lattice_rank(), 3, [&](const IntVec& c) {
            if (!contains(m->lattice().basis_cone(), c)) return;
            IntVec u = m->lattice().to_ambient(c);
            for (const auto& d : lnds) {
                Int expected = pairing(d.root().rho, c) + 1;
                CHECK(lnd_nilpotency_index(d, u) == expected);
                // Exactly one of kernel / divisor ideal holds.
                bool k = kernel_membership(d, u);
                bool i = divisor_ideal_membership(*m, d.root().rho, u);
                CHECK(k != i);
            }
        });
        for (const auto& d1 : lnds)
            for (const auto& d2 : lnds)
                CHECK(equivalent(d1, d2) == (moved_divisor(d1) == moved_divisor(d2)));
        ++done;
    }
}
