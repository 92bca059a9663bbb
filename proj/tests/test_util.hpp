#pragma once

// Deterministic random fixtures for the property tests. All generators take
// an explicit engine so every suite fixes its own seed.

#include <optional>
#include <random>
#include <vector>

#include "demroots/cone.hpp"
#include "demroots/errors.hpp"
#include "demroots/horospherical.hpp"
#include "demroots/rank_one.hpp"
#include "demroots/toric.hpp"

namespace testutil {

using demroots::Int;
using demroots::IntVec;
using demroots::Rat;

using Rng = std::mt19937_64;

inline IntVec random_vec(Rng& rng, std::size_t dim, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntVec v(dim);
    for (auto& x : v) x = dist(rng);
    return v;
}

inline Rat random_rational(Rng& rng, int num_range = 6, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng), den(rng));
}

/// A full-dimensional strictly convex cone with generator coordinates in
/// [lo, hi]; resamples until both properties hold.
inline demroots::Cone random_pointed_cone(Rng& rng, std::size_t dim, std::size_t ngens, int lo,
                                          int hi) {
    // Fewer generators than the dimension can never span the space.
    ngens = std::max(ngens, dim);
    for (;;) {
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < ngens; ++i) {
            IntVec g = random_vec(rng, dim, lo, hi);
            if (!demroots::vec_is_zero(g)) gens.push_back(g);
        }
        if (gens.empty()) continue;
        demroots::Cone c(dim, gens);
        if (demroots::is_full_dimensional(c) && demroots::is_strictly_convex(c)) return c;
    }
}

/// A weight monoid with at least one Demazure root inside the given box.
inline std::shared_ptr<const demroots::WeightMonoid> random_monoid_with_roots(
    Rng& rng, std::size_t ambient, std::size_t ngens, int lo, int hi, const Int& bound) {
    for (;;) {
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < ngens; ++i) {
            IntVec g = random_vec(rng, ambient, lo, hi);
            if (!demroots::vec_is_zero(g)) gens.push_back(g);
        }
        if (gens.empty()) continue;
        auto m = std::make_shared<const demroots::WeightMonoid>(ambient, gens);
        if (m->generators().empty()) continue;
        auto groups = demroots::enumerate_roots(m->lattice(), demroots::Box(bound));
        std::size_t nroots = 0;
        for (const auto& [rho, roots] : groups) nroots += roots.size();
        if (nroots > 0) return m;
    }
}

/// A valid rank-one datum: dual root pairing 2 with the root, dominant
/// generators, root outside the rational span of the monoid, and a
/// non-degenerate extension (some generator has positive dominance).
inline std::optional<demroots::RankOneDatum> try_random_rank_one(Rng& rng, std::size_t ambient,
                                                                 std::size_t ngens) {
    // Root datum of SL2 x torus type: alpha twice a basis-like vector, dual
    // root the matching coordinate form.
    std::uniform_int_distribution<std::size_t> axis_dist(0, ambient - 1);
    std::size_t axis = axis_dist(rng);
    IntVec alpha(ambient, 0), alpha_dual(ambient, 0);
    alpha[axis] = 2;
    alpha_dual[axis] = 1;

    std::vector<IntVec> gens;
    bool positive_dominance = false;
    for (std::size_t i = 0; i < ngens; ++i) {
        IntVec g = random_vec(rng, ambient, -2, 2);
        if (demroots::vec_is_zero(g)) continue;
        if (g[axis] < 0) g[axis] = -g[axis];
        if (g[axis] > 0) positive_dominance = true;
        gens.push_back(g);
    }
    if (gens.empty() || !positive_dominance) return std::nullopt;
    if (!demroots::check_toric(alpha, gens).toric) return std::nullopt;
    try {
        return demroots::RankOneDatum(ambient, alpha, alpha_dual, gens);
    } catch (const demroots::Error&) {
        return std::nullopt;
    }
}

inline demroots::RankOneDatum random_rank_one(Rng& rng, std::size_t ambient, std::size_t ngens) {
    for (;;) {
        auto d = try_random_rank_one(rng, ambient, ngens);
        if (d) return std::move(*d);
    }
}

/// A horospherical datum with at least one stable-divisor ray.
inline demroots::HoroDatum random_horospherical_with_stable_ray(Rng& rng, std::size_t ambient,
                                                                std::size_t ngens,
                                                                std::size_t ncoroots) {
    for (;;) {
        std::vector<IntVec> coroots;
        for (std::size_t i = 0; i < ncoroots; ++i) {
            IntVec q = random_vec(rng, ambient, -2, 2);
            if (!demroots::vec_is_zero(q)) coroots.push_back(q);
        }
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < ngens; ++i) {
            IntVec g = random_vec(rng, ambient, -2, 2);
            if (demroots::vec_is_zero(g)) continue;
            bool dominant = true;
            for (const auto& q : coroots)
                if (demroots::pairing(q, g) < 0) dominant = false;
            if (dominant) gens.push_back(g);
        }
        if (gens.empty()) continue;
        try {
            demroots::HoroDatum h(ambient, gens, coroots);
            if (!demroots::g_stable_divisor_rays(h).empty()) return h;
        } catch (const demroots::Error&) {
            continue;
        }
    }
}

}  // namespace testutil
