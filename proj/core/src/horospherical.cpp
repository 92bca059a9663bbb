#include "demroots/horospherical.hpp"

#include <algorithm>

#include "demroots/errors.hpp"

namespace demroots {

namespace {

Cone build_coroot_cone(const WeightMonoid& gamma, const std::vector<IntVec>& coroots,
                       std::size_t ambient_rank) {
    std::vector<IntVec> restricted;
    for (const auto& q : coroots) {
        if (q.size() != ambient_rank)
            throw DimensionError("coroot length differs from ambient rank");
        IntVec r(gamma.basis().row_count());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = pairing(q, gamma.basis().rows[i]);
        if (!vec_is_zero(r)) restricted.push_back(std::move(r));
    }
    return Cone(gamma.basis().row_count(), std::move(restricted));
}

}  // namespace

HoroDatum::HoroDatum(std::size_t ambient_rank, std::vector<IntVec> gamma_generators,
                     std::vector<IntVec> coroots)
    : ambient_rank_(ambient_rank),
      gamma_(std::make_shared<const WeightMonoid>(ambient_rank, std::move(gamma_generators))),
      coroots_(std::move(coroots)),
      coroot_cone_(build_coroot_cone(*gamma_, coroots_, ambient_rank)) {
    for (const auto& g : gamma_->generators())
        if (!is_dominant(g))
            throw DomainError("monoid generator is not dominant: " + format_vec(g));
}

bool HoroDatum::is_dominant(const IntVec& lambda_ambient) const {
    if (lambda_ambient.size() != ambient_rank_)
        throw DimensionError("weight length differs from ambient rank");
    for (const auto& q : coroots_)
        if (pairing(q, lambda_ambient) < 0) return false;
    return true;
}

bool HoroDatum::in_dominant_lattice(const IntVec& lambda_ambient) const {
    return is_dominant(lambda_ambient) && in_sublattice(lambda_ambient, gamma_->basis());
}

IntVec HoroDatum::restrict_form(const IntVec& form_ambient) const {
    if (form_ambient.size() != ambient_rank_)
        throw DimensionError("form length differs from ambient rank");
    IntVec r(gamma_->basis().row_count());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = pairing(form_ambient, gamma_->basis().rows[i]);
    return r;
}

SaturationVerdict is_g_saturated(const HoroDatum& h, const Box& box) {
    SaturationVerdict verdict;
    const auto& gamma = h.gamma();
    for_each_box_point(gamma.basis().row_count(), box.bound, [&](const IntVec& c) {
        IntVec u = gamma.lattice().to_ambient(c);
        if (!h.is_dominant(u)) return;
        if (!gamma.generates_basis(c)) {
            verdict.saturated = false;
            verdict.counterexamples.push_back(std::move(u));
        }
    });
    return verdict;
}

std::vector<IntVec> horizontal_weight_set(const HoroDatum& h, const Box& box) {
    std::vector<IntVec> out;
    for_each_box_point(h.ambient_rank(), box.bound, [&](const IntVec& u) {
        if (!h.is_dominant(u)) return;
        auto root = classify_root(h.gamma().lattice(), u);
        if (root) out.push_back(u);
    });
    return out;  // box enumeration is already lexicographic
}

ShadowElement ShadowElement::basis_vector(IntVec lambda, Rat coeff) {
    ShadowElement e;
    if (coeff != 0) e.terms.emplace(std::move(lambda), std::move(coeff));
    return e;
}

ShadowElement shadow_add(const ShadowElement& a, const ShadowElement& b) {
    ShadowElement out = a;
    for (const auto& [u, c] : b.terms) {
        auto it = out.terms.find(u);
        if (it == out.terms.end()) {
            out.terms.emplace(u, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

ShadowElement shadow_mul(const HoroDatum& h, const ShadowElement& a, const ShadowElement& b) {
    ShadowElement out;
    for (const auto& [u, cu] : a.terms) {
        for (const auto& [v, cv] : b.terms) {
            IntVec s = vec_add(u, v);
            if (!h.in_dominant_lattice(s))
                throw DomainError("product support left the dominant lattice monoid");
            auto it = out.terms.find(s);
            if (it == out.terms.end()) {
                out.terms.emplace(std::move(s), cu * cv);
            } else {
                it->second += cu * cv;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

namespace {

void validate_horizontal_root(const HoroDatum& h, const DemazureRoot& mu) {
    auto check = classify_root(h.gamma().lattice(), mu.e);
    if (!check || check->rho != mu.rho)
        throw DomainError("not a root of the weight cone with the stated ray: " + format_vec(mu.e));
    if (!h.is_dominant(mu.e))
        throw DomainError("root weight is not dominant: " + format_vec(mu.e));
}

}  // namespace

ShadowElement horo_lnd_apply(const HoroDatum& h, const DemazureRoot& mu, const ShadowElement& f) {
    validate_horizontal_root(h, mu);
    ShadowElement out;
    for (const auto& [lambda, c] : f.terms) {
        if (!h.in_dominant_lattice(lambda))
            throw DomainError("support point outside the dominant lattice monoid: " +
                              format_vec(lambda));
        Int weight = pairing(mu.rho, *h.gamma().lattice().to_basis(lambda));
        if (weight == 0) continue;
        IntVec target = vec_add(lambda, mu.e);
        auto it = out.terms.find(target);
        Rat add = c * Rat(weight);
        if (it == out.terms.end()) {
            out.terms.emplace(std::move(target), std::move(add));
        } else {
            it->second += add;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

std::vector<IntVec> g_stable_divisor_rays(const HoroDatum& h) {
    std::vector<IntVec> out;
    for (const auto& rho : h.gamma().dual_rays())
        if (!contains(h.coroot_cone(), rho)) out.push_back(rho);
    return out;
}

DemazureRoot moving_witness(const HoroDatum& h, const IntVec& rho, const Box& box) {
    auto stable = g_stable_divisor_rays(h);
    if (std::find(stable.begin(), stable.end(), rho) == stable.end())
        throw DomainError("not a stable-divisor ray: " + format_vec(rho));

    std::optional<DemazureRoot> found;
    for_each_box_point(h.ambient_rank(), box.bound, [&](const IntVec& u) {
        if (found) return;
        if (!h.is_dominant(u)) return;
        auto root = classify_root(h.gamma().lattice(), u);
        if (root && root->rho == rho) found = std::move(root);
    });

    if (!found) {
        // Shift some root attached to rho into the dominant cone along an
        // interior facet direction.
        std::optional<DemazureRoot> seed;
        for_each_box_point(h.gamma().lattice().lattice_rank(), box.bound, [&](const IntVec& c) {
            if (seed) return;
            auto root = classify_root_basis(h.gamma().lattice(), c);
            if (root && root->rho == rho) seed = std::move(root);
        });
        if (seed) {
            Cone dominant_cone = dual_cone(h.coroot_cone());
            SubconeWitness w = subcone_witness(h.gamma().lattice(), dominant_cone, rho, *seed);
            IntVec shifted = seed->e_basis;
            for (Int k = 0; k < w.k0; ++k) shifted = vec_add(shifted, w.v_basis);
            auto root = classify_root_basis(h.gamma().lattice(), shifted);
            if (!root || root->rho != rho || !h.is_dominant(root->e))
                throw InternalError("witness construction produced an invalid root");
            bool in_box = true;
            for (const auto& x : root->e)
                if ((x < 0 ? Int(-x) : x) > box.bound) in_box = false;
            if (in_box) found = std::move(root);
        }
    }
    if (!found)
        throw BoxTooSmallError("no dominant root attached to " + format_vec(rho) +
                               " within bound " + box.bound.str());

    // The divisor ideal must be unstable: drive a generator inside the ideal
    // down its nilpotency chain and land outside.
    const WeightMonoid& gamma = h.gamma();
    bool verified = false;
    for (const auto& g : gamma.generators()) {
        Int v = pairing(rho, *gamma.lattice().to_basis(g));
        if (v <= 0) continue;
        ShadowElement f = ShadowElement::basis_vector(g);
        for (Int i = 0; i < v; ++i) f = horo_lnd_apply(h, *found, f);
        if (f.is_zero()) throw InternalError("derivation chain died inside the divisor ideal");
        for (const auto& [u, c] : f.terms)
            if (pairing(rho, *gamma.lattice().to_basis(u)) != 0)
                throw InternalError("derivation chain did not exit the divisor ideal");
        verified = true;
        break;
    }
    if (!verified) throw InternalError("no generator lies in the divisor ideal of the ray");
    return *found;
}

}  // namespace demroots
