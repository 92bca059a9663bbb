#include "demroots/demazure.hpp"

#include <algorithm>

#include "demroots/errors.hpp"

namespace demroots {

Box::Box(Int b) : bound(std::move(b)) {
    if (bound < 0) throw DomainError("box bound must be nonnegative");
}

namespace {

std::vector<IntVec> to_basis_gens(const IntMat& basis, const std::vector<IntVec>& gens_ambient) {
    std::vector<IntVec> out;
    out.reserve(gens_ambient.size());
    for (const auto& g : gens_ambient) {
        auto coords = integer_coordinates(g, basis);
        if (!coords) throw DomainError("cone generator outside the sublattice spanned by the basis");
        out.push_back(std::move(*coords));
    }
    return out;
}

}  // namespace

ConeLattice::ConeLattice(std::size_t ambient_rank, IntMat basis,
                         std::vector<IntVec> generators_ambient)
    : ambient_rank_(ambient_rank),
      basis_(std::move(basis)),
      ambient_cone_(ambient_rank, generators_ambient),
      basis_cone_(basis_.row_count(), to_basis_gens(basis_, generators_ambient)) {
    if (basis_.cols != ambient_rank_)
        throw DimensionError("basis row length differs from ambient rank");
    if (rational_rank(basis_.rows) != basis_.row_count())
        throw DomainError("basis rows must be linearly independent");
    if (!is_full_dimensional(basis_cone_))
        throw StructureError("cone is not full-dimensional in the rational span of its lattice");
    dual_rays_ = rays(dual_cone(basis_cone_)).rays;
}

IntVec ConeLattice::to_ambient(const IntVec& basis_coords) const {
    if (basis_coords.size() != basis_.row_count())
        throw DimensionError("coordinate length differs from lattice rank");
    IntVec v(ambient_rank_, 0);
    for (std::size_t i = 0; i < basis_coords.size(); ++i)
        for (std::size_t j = 0; j < ambient_rank_; ++j) v[j] += basis_coords[i] * basis_.rows[i][j];
    return v;
}

std::optional<IntVec> ConeLattice::to_basis(const IntVec& ambient) const {
    return integer_coordinates(ambient, basis_);
}

std::optional<DemazureRoot> classify_root_basis(const ConeLattice& cl, const IntVec& e_basis) {
    const IntVec* distinguished = nullptr;
    for (const auto& rho : cl.dual_rays()) {
        Int v = pairing(rho, e_basis);
        if (v < -1) return std::nullopt;
        if (v == -1) {
            if (distinguished) return std::nullopt;
            distinguished = &rho;
        }
    }
    if (!distinguished) return std::nullopt;
    return DemazureRoot{cl.to_ambient(e_basis), e_basis, *distinguished};
}

std::optional<DemazureRoot> classify_root(const ConeLattice& cl, const IntVec& e_ambient) {
    auto coords = cl.to_basis(e_ambient);
    if (!coords) return std::nullopt;
    return classify_root_basis(cl, *coords);
}

RootsByRay enumerate_roots(const ConeLattice& cl, const Box& box) {
    RootsByRay out;
    for (const auto& rho : cl.dual_rays()) out.emplace(rho, std::vector<DemazureRoot>{});
    for_each_box_point(cl.lattice_rank(), box.bound, [&](const IntVec& c) {
        auto root = classify_root_basis(cl, c);
        if (root) out[root->rho].push_back(std::move(*root));
    });
    for (auto& [rho, roots] : out)
        std::sort(roots.begin(), roots.end(),
                  [](const DemazureRoot& a, const DemazureRoot& b) { return lex_less(a.e, b.e); });
    return out;
}

SubconeWitness subcone_witness(const ConeLattice& g, const Cone& g_tilde_basis, const IntVec& rho,
                               const DemazureRoot& e0) {
    const std::size_t r = g.lattice_rank();
    if (g_tilde_basis.ambient_rank() != r)
        throw DimensionError("enclosing cone has the wrong rank");
    if (!is_full_dimensional(g_tilde_basis))
        throw DomainError("subcone_witness: enclosing cone must be full-dimensional");
    if (!cone_subset(g.basis_cone(), g_tilde_basis))
        throw DomainError("subcone_witness: cone is not contained in the enclosing cone");
    const auto& dual_rays = g.dual_rays();
    if (std::find(dual_rays.begin(), dual_rays.end(), rho) == dual_rays.end())
        throw DomainError("subcone_witness: rho is not a dual ray of the cone");
    if (contains(dual_cone(g_tilde_basis), rho))
        throw DomainError("subcone_witness: rho lies in the dual of the enclosing cone");
    auto e0_check = classify_root_basis(g, e0.e_basis);
    if (!e0_check || e0_check->rho != rho)
        throw DomainError("subcone_witness: e0 is not a root attached to rho");

    // Relative-interior point of the facet cut out by rho: the sum of the
    // generators annihilated by rho pairs strictly positively with every
    // other dual ray.
    IntVec v(r, 0);
    for (const auto& gen : g.basis_cone().generators())
        if (pairing(rho, gen) == 0) v = vec_add(v, gen);
    if (pairing(rho, v) != 0) throw InternalError("subcone_witness: facet point escapes Ker rho");
    for (const auto& other : dual_rays) {
        if (other == rho) continue;
        if (pairing(other, v) <= 0)
            throw InternalError("subcone_witness: facet point not interior to the facet");
    }

    Int k0 = 0;
    IntVec candidate = e0.e_basis;
    while (!contains(g_tilde_basis, candidate)) {
        ++k0;
        candidate = vec_add(candidate, v);
        if (k0 > 100000) throw InternalError("subcone_witness: no shift found (hypotheses violated?)");
    }
    for (Int k = k0; k <= k0 + 1; ++k) {
        IntVec probe = e0.e_basis;
        for (Int i = 0; i < k; ++i) probe = vec_add(probe, v);
        if (!contains(g_tilde_basis, probe))
            throw InternalError("subcone_witness: shifted root left the enclosing cone");
        auto cls = classify_root_basis(g, probe);
        if (!cls || cls->rho != rho)
            throw InternalError("subcone_witness: shifted root lost its distinguished ray");
    }
    return SubconeWitness{v, g.to_ambient(v), k0};
}

}  // namespace demroots
