#pragma once

#include <map>
#include <optional>
#include <vector>

#include "demroots/cone.hpp"
#include "demroots/linalg.hpp"
#include "demroots/numeric.hpp"

namespace demroots {

/// Sup-norm bound for truncating enumerations of infinite root sets.
struct Box {
    Int bound;

    explicit Box(Int b);
};

/// A Demazure root of a cone: a lattice vector e pairing to -1 with exactly
/// one ray rho of the dual cone and >= 0 with every other dual ray.
struct DemazureRoot {
    IntVec e;        // ambient-lattice coordinates
    IntVec e_basis;  // coordinates in the chosen basis of the sublattice
    IntVec rho;      // the distinguished dual ray, in coordinates dual to that basis

    bool operator==(const DemazureRoot&) const = default;
};

/// A full-dimensional cone inside the rational span of a sublattice M of an
/// ambient lattice, together with a fixed basis of M. Roots are classified
/// and enumerated in the basis coordinates; callers see ambient coordinates.
class ConeLattice {
public:
    /// basis: rows form a basis of M in ambient coordinates (may have fewer
    /// rows than the ambient rank). generators: lattice points of M, given in
    /// ambient coordinates, spanning the cone. StructureError when the cone
    /// is not full-dimensional in M_Q; DomainError when a generator lies
    /// outside M or the basis rows are dependent.
    ConeLattice(std::size_t ambient_rank, IntMat basis, std::vector<IntVec> generators_ambient);

    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t lattice_rank() const { return basis_.row_count(); }
    const IntMat& basis() const { return basis_; }
    const Cone& ambient_cone() const { return ambient_cone_; }
    const Cone& basis_cone() const { return basis_cone_; }

    /// Rays of the dual of the basis cone, lexicographically sorted.
    const std::vector<IntVec>& dual_rays() const { return dual_rays_; }

    IntVec to_ambient(const IntVec& basis_coords) const;
    std::optional<IntVec> to_basis(const IntVec& ambient) const;

private:
    std::size_t ambient_rank_;
    IntMat basis_;
    Cone ambient_cone_;
    Cone basis_cone_;
    std::vector<IntVec> dual_rays_;
};

/// Membership oracle: returns the root structure of e when e lies in M and
/// satisfies the defining inequalities, and nullopt otherwise.
std::optional<DemazureRoot> classify_root(const ConeLattice& cl, const IntVec& e_ambient);

/// As above, for e already in basis coordinates.
std::optional<DemazureRoot> classify_root_basis(const ConeLattice& cl, const IntVec& e_basis);

using RootsByRay = std::map<IntVec, std::vector<DemazureRoot>, LexLess>;

/// All Demazure roots whose basis coordinates have sup-norm <= box.bound,
/// grouped by distinguished dual ray; each group sorted by ambient
/// coordinates. Complete only within the box: every root set is infinite
/// once the lattice rank is at least two.
RootsByRay enumerate_roots(const ConeLattice& cl, const Box& box);

struct SubconeWitness {
    IntVec v_basis;    // interior point of the facet Ker rho, in basis coordinates
    IntVec v_ambient;
    Int k0;            // least k with e0 + k*v inside the enclosing cone
};

/// Witness for the infinite-family statement: given a full-dimensional cone
/// g contained in a full-dimensional cone g_tilde (basis coordinates), a dual
/// ray rho of g outside the dual of g_tilde, and a root e0 attached to rho,
/// produces v in M ∩ g with <rho,v> = 0 and <rho',v> > 0 for every other
/// dual ray, plus the least k0 such that e0 + k*v lies in g_tilde for all
/// k >= k0. Membership is re-verified for k0 and k0 + 1.
SubconeWitness subcone_witness(const ConeLattice& g,
                               const Cone& g_tilde_basis,
                               const IntVec& rho,
                               const DemazureRoot& e0);

/// Iterates all integer vectors with sup-norm <= bound in lexicographically
/// ascending order, invoking f on each.
template <typename F>
void for_each_box_point(std::size_t dim, const Int& bound, F&& f) {
    if (bound < 0) return;
    IntVec c(dim, -bound);
    if (dim == 0) {
        f(c);
        return;
    }
    for (;;) {
        f(c);
        std::size_t i = dim;
        while (i > 0) {
            --i;
            if (c[i] < bound) {
                ++c[i];
                for (std::size_t j = i + 1; j < dim; ++j) c[j] = -bound;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace demroots
