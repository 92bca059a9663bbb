#include "demroots/rank_one.hpp"

#include <algorithm>
#include <sstream>

#include "demroots/errors.hpp"

namespace demroots {

ToricCriterion check_toric(const IntVec& alpha, const std::vector<IntVec>& gamma_generators) {
    ToricCriterion c;
    if (gamma_generators.empty()) {
        c.toric = !vec_is_zero(alpha);
        if (!c.toric) c.combination = RatVec{};
        return c;
    }
    auto sol = solve_rational(gamma_generators, to_rational(alpha));
    if (sol) {
        c.toric = false;
        c.combination = std::move(*sol);
    } else {
        c.toric = true;
    }
    return c;
}

RankOneDatum::RankOneDatum(std::size_t ambient_rank, IntVec alpha, IntVec alpha_dual,
                           std::vector<IntVec> gamma_generators)
    : ambient_rank_(ambient_rank), alpha_(std::move(alpha)), alpha_dual_(std::move(alpha_dual)) {
    if (alpha_.size() != ambient_rank_ || alpha_dual_.size() != ambient_rank_)
        throw DomainError("root and dual root must have the ambient rank");
    if (pairing(alpha_dual_, alpha_) != 2)
        throw DomainError("malformed root datum: <alpha_dual, alpha> must equal 2");
    gamma_ = std::make_shared<const WeightMonoid>(ambient_rank_, std::move(gamma_generators));
    for (const auto& g : gamma_->generators())
        if (pairing(alpha_dual_, g) < 0)
            throw DomainError("monoid generator is not dominant: " + format_vec(g));
    ToricCriterion crit = check_toric(alpha_, gamma_->generators());
    if (!crit.toric) {
        std::ostringstream os;
        os << "the root " << format_vec(alpha_)
           << " lies in the rational span of the weight monoid (combination:";
        for (const auto& c : *crit.combination) os << ' ' << format_rat(c);
        os << "); the variety is not toric under the maximal torus";
        throw TheoremPreconditionError(os.str());
    }
}

Int RankOneDatum::dominance(const IntVec& lambda) const { return pairing(alpha_dual_, lambda); }

IntVec RankOneDatum::weyl_reflect(const IntVec& lambda) const {
    return vec_sub(lambda, vec_scaled(dominance(lambda), alpha_));
}

HoroDatum RankOneDatum::as_horospherical() const {
    return HoroDatum(ambient_rank_, gamma_->generators(), {alpha_dual_});
}

ExtendedStructure build_extension(const RankOneDatum& d) {
    const WeightMonoid& gamma = d.gamma();
    bool degenerate = true;
    for (const auto& g : gamma.generators())
        if (d.dominance(g) != 0) degenerate = false;
    if (degenerate || gamma.generators().empty())
        throw StructureError(
            "degenerate datum: the reflection fixes every generator, so the extended cone is not "
            "full-dimensional");

    std::vector<IntVec> basis_rows = gamma.basis().rows;
    basis_rows.push_back(d.alpha());
    IntMat extended_basis(basis_rows, d.ambient_rank());

    std::vector<IntVec> gens = gamma.generators();
    for (const auto& g : gamma.generators()) gens.push_back(d.weyl_reflect(g));

    ExtendedStructure ext{extended_basis,
                          ConeLattice(d.ambient_rank(), extended_basis, gens),
                          IntVec(basis_rows.size(), 0),
                          {},
                          {},
                          {},
                          {}};
    ext.alpha_basis.back() = 1;
    ext.dual_rays = ext.extended.dual_rays();

    for (const auto& rho : ext.dual_rays) {
        Int v = pairing(rho, ext.alpha_basis);
        if (v < 0) {
            if (!ext.alpha_negative_ray.empty())
                throw InternalError("two dual rays pair negatively with the root");
            if (v != -1) throw InternalError("negative ray pairing with the root is not -1");
            ext.alpha_negative_ray = rho;
        } else if (v > 0) {
            if (!ext.alpha_positive_ray.empty())
                throw InternalError("two dual rays pair positively with the root");
            if (v != 1) throw InternalError("positive ray pairing with the root is not +1");
            ext.alpha_positive_ray = rho;
        } else {
            ext.stable_divisor_rays.push_back(rho);
        }
    }
    if (ext.alpha_negative_ray.empty() || ext.alpha_positive_ray.empty())
        throw InternalError("missing signed dual ray in the extended cone");

    // The two signed rays must cut out the weight cone and its reflection.
    std::vector<IntVec> cone_gens_ext, reflected_gens_ext;
    for (const auto& g : gamma.generators()) {
        cone_gens_ext.push_back(*ext.extended.to_basis(g));
        reflected_gens_ext.push_back(*ext.extended.to_basis(d.weyl_reflect(g)));
    }
    Cone weight_cone_ext(basis_rows.size(), cone_gens_ext);
    Cone reflected_cone_ext(basis_rows.size(), reflected_gens_ext);
    if (!cone_same(facet_of(ext.extended.basis_cone(), ext.alpha_negative_ray), weight_cone_ext))
        throw InternalError("facet at the negative ray is not the weight cone");
    if (!cone_same(facet_of(ext.extended.basis_cone(), ext.alpha_positive_ray),
                   reflected_cone_ext))
        throw InternalError("facet at the positive ray is not the reflected weight cone");

    auto alpha_root = classify_root_basis(ext.extended, ext.alpha_basis);
    if (!alpha_root || alpha_root->rho != ext.alpha_negative_ray)
        throw InternalError("the root itself must be a root at the negative ray");

    return ext;
}

std::vector<IntVec> vertical_weights(const ExtendedStructure& ext, const Box& box) {
    std::vector<IntVec> out;
    for_each_box_point(ext.extended.ambient_rank(), box.bound, [&](const IntVec& u) {
        auto root = classify_root(ext.extended, u);
        if (root && root->rho == ext.alpha_negative_ray) out.push_back(u);
    });
    return out;
}

std::vector<IntVec> horizontal_weights(const RankOneDatum& d, const ExtendedStructure& ext,
                                       const Box& box) {
    std::vector<IntVec> out;
    for_each_box_point(d.ambient_rank(), box.bound, [&](const IntVec& u) {
        if (d.dominance(u) < 0) return;
        auto root = classify_root(d.gamma().lattice(), u);
        if (!root) return;
        // Cross-validation: the weight extends to a root of the extended
        // cone, pairing 0 with the negative ray and its ray killing alpha.
        auto ext_root = classify_root(ext.extended, u);
        if (!ext_root) throw InternalError("horizontal weight is not a root of the extended cone");
        if (pairing(ext.alpha_negative_ray, ext_root->e_basis) != 0)
            throw InternalError("horizontal weight does not vanish on the negative ray");
        if (pairing(ext_root->rho, ext.alpha_basis) != 0)
            throw InternalError("the ray of a horizontal weight must kill the root direction");
        out.push_back(u);
    });
    return out;
}

std::vector<IntVec> alpha_positive_ray_exclusion(const RankOneDatum& d,
                                                 const ExtendedStructure& ext, const Box& box) {
    std::vector<IntVec> positive_ray_roots;
    for_each_box_point(ext.extended.ambient_rank(), box.bound, [&](const IntVec& u) {
        auto root = classify_root(ext.extended, u);
        if (root && root->rho == ext.alpha_positive_ray) positive_ray_roots.push_back(u);
    });
    std::vector<IntVec> weights = vertical_weights(ext, box);
    std::vector<IntVec> horizontal = horizontal_weights(d, ext, box);
    weights.insert(weights.end(), horizontal.begin(), horizontal.end());
    std::sort(weights.begin(), weights.end(), LexLess{});

    std::vector<IntVec> overlap;
    for (const auto& u : positive_ray_roots)
        if (std::binary_search(weights.begin(), weights.end(), u, LexLess{})) overlap.push_back(u);
    if (!overlap.empty())
        throw InternalError("roots at the positive ray occurred among subgroup weights");
    return overlap;
}

namespace {

/// The weight monoid of the variety as a torus variety: generated by the
/// full reflection strings of the monoid generators, with the extended basis.
WeightMonoid extended_monoid(const RankOneDatum& d, const ExtendedStructure& ext) {
    std::vector<IntVec> gens;
    for (const auto& g : d.gamma().generators()) {
        Int depth = d.dominance(g);
        IntVec cur = g;
        for (Int i = 0; i <= depth; ++i) {
            gens.push_back(cur);
            cur = vec_sub(cur, d.alpha());
        }
    }
    return WeightMonoid(d.ambient_rank(), gens, ext.extended_basis);
}

}  // namespace

MovingRoot stable_divisor_moving_root(const RankOneDatum& d, const ExtendedStructure& ext,
                                      const IntVec& rho, const Box& box) {
    if (std::find(ext.stable_divisor_rays.begin(), ext.stable_divisor_rays.end(), rho) ==
        ext.stable_divisor_rays.end())
        throw DomainError("not a stable-divisor ray: " + format_vec(rho));

    std::optional<DemazureRoot> eprime;
    for_each_box_point(ext.extended.lattice_rank(), box.bound, [&](const IntVec& c) {
        if (eprime) return;
        auto root = classify_root_basis(ext.extended, c);
        if (root && root->rho == rho) eprime = std::move(root);
    });
    if (!eprime)
        throw BoxTooSmallError("no root attached to " + format_vec(rho) + " within bound " +
                               box.bound.str());

    Int q = pairing(ext.alpha_negative_ray, eprime->e_basis);
    if (q < 0) throw InternalError("root at a stable ray pairs negatively with the negative ray");
    IntVec e_basis = vec_add(eprime->e_basis, vec_scaled(q, ext.alpha_basis));
    if (pairing(ext.alpha_negative_ray, e_basis) != 0)
        throw InternalError("shifted root does not vanish on the negative ray");

    auto ext_root = classify_root_basis(ext.extended, e_basis);
    if (!ext_root || ext_root->rho != rho)
        throw InternalError("shifted root is not a root at the same stable ray");
    IntVec e_ambient = ext_root->e;

    if (!in_sublattice(e_ambient, d.gamma().basis()))
        throw InternalError("shifted root left the monoid lattice");
    auto base_root = classify_root(d.gamma().lattice(), e_ambient);
    if (!base_root) throw InternalError("shifted root is not a root of the weight cone");
    if (d.dominance(e_ambient) < 0) throw InternalError("shifted root is not dominant");

    // The induced derivation on the extended weight monoid must move exactly
    // the divisor of rho.
    auto monoid = std::make_shared<const WeightMonoid>(extended_monoid(d, ext));
    ToricLND lnd(monoid, e_ambient);
    if (moved_divisor(lnd) != rho)
        throw InternalError("induced derivation moves a different divisor");

    return MovingRoot{rho, eprime->e_basis, q, e_ambient, *ext_root, *base_root};
}

RankOneReport classification_report(const RankOneDatum& d, const Box& box) {
    ExtendedStructure ext = build_extension(d);
    RankOneReport rep;
    rep.box_bound = box.bound;
    rep.dual_rays = ext.dual_rays;
    rep.alpha_negative_ray = ext.alpha_negative_ray;
    rep.alpha_positive_ray = ext.alpha_positive_ray;
    rep.stable_divisor_rays = ext.stable_divisor_rays;
    rep.vertical = vertical_weights(ext, box);
    rep.horizontal = horizontal_weights(d, ext, box);
    rep.exclusion_empty = alpha_positive_ray_exclusion(d, ext, box).empty();
    for (const auto& rho : ext.stable_divisor_rays)
        rep.moving_roots.push_back(stable_divisor_moving_root(d, ext, rho, box));
    rep.uniqueness_note =
        "each listed weight determines exactly one subgroup; distinct weights give distinct "
        "subgroups";
    return rep;
}

}  // namespace demroots
