#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "demroots/demazure.hpp"
#include "demroots/numeric.hpp"

namespace demroots {

/// The weight monoid of an affine toric variety: monoid generators inside an
/// ambient character lattice, with the derived lattice M = Z·generators (a
/// canonical HNF basis unless an explicit one is supplied) and the weight
/// cone spanned by the generators.
///
/// Saturation (monoid = cone ∩ M) is verified at construction inside the box
/// spanned by pairwise sums of generators. A violation is a reported warning
/// state, not an error: cone-level answers then refer to the saturation.
class WeightMonoid {
public:
    WeightMonoid(std::size_t ambient_rank, std::vector<IntVec> generators,
                 std::optional<IntMat> explicit_basis = std::nullopt);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<IntVec>& generators() const { return generators_; }
    const ConeLattice& lattice() const { return lattice_; }
    const IntMat& basis() const { return lattice_.basis(); }
    const std::vector<IntVec>& dual_rays() const { return lattice_.dual_rays(); }

    /// Saturated-closure membership: u in M and u in the weight cone. Under
    /// the saturation warning state this is the saturation, not the monoid.
    bool monoid_membership(const IntVec& u) const;

    /// Exact membership in the monoid generated by the generators.
    bool generates(const IntVec& u_ambient) const;
    bool generates_basis(const IntVec& u_basis) const;

    bool saturation_verified() const { return saturation_gaps_.empty(); }
    const std::vector<IntVec>& saturation_gaps() const { return saturation_gaps_; }
    const Int& saturation_box_bound() const { return saturation_box_bound_; }

    bool operator==(const WeightMonoid& o) const {
        return ambient_rank_ == o.ambient_rank_ && generators_ == o.generators_;
    }

private:
    std::size_t ambient_rank_;
    std::vector<IntVec> generators_;          // sorted, deduplicated, zero dropped
    std::vector<IntVec> generators_basis_;
    ConeLattice lattice_;
    std::vector<std::size_t> unit_indices_;   // generators whose negative stays in the cone
    IntMat unit_lattice_;                     // lattice generated by those
    IntVec positive_form_;                    // vanishes on units, positive on the rest
    Int saturation_box_bound_ = 0;
    std::vector<IntVec> saturation_gaps_;     // ambient coordinates

    void run_saturation_check();
};

/// An element of the semigroup algebra: a finitely supported map from
/// monoid points (ambient coordinates) to nonzero rational coefficients.
struct AlgebraElement {
    std::map<IntVec, Rat, LexLess> terms;

    static AlgebraElement monomial(IntVec u, Rat coeff = 1);
    bool is_zero() const { return terms.empty(); }

    bool operator==(const AlgebraElement&) const = default;
};

AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement ae_scale(const Rat& c, const AlgebraElement& a);
/// Product by convolution of supports; every support point is validated
/// against the monoid.
AlgebraElement ae_mul(const WeightMonoid& w, const AlgebraElement& a, const AlgebraElement& b);

/// A homogeneous locally nilpotent derivation of the semigroup algebra,
/// determined by a Demazure root of the weight cone.
class ToricLND {
public:
    ToricLND(std::shared_ptr<const WeightMonoid> monoid, const IntVec& e_ambient);

    const WeightMonoid& monoid() const { return *monoid_; }
    const std::shared_ptr<const WeightMonoid>& monoid_ptr() const { return monoid_; }
    const DemazureRoot& root() const { return root_; }

private:
    std::shared_ptr<const WeightMonoid> monoid_;
    DemazureRoot root_;
};

/// The defining action: a monomial of weight u maps to <rho,u> times the
/// monomial of weight u + e, extended linearly.
AlgebraElement lnd_apply(const ToricLND& d, const AlgebraElement& f);

/// Least k with the k-th application of d killing the monomial of weight u,
/// computed by iteration and cross-checked against <rho,u> + 1.
Int lnd_nilpotency_index(const ToricLND& d, const IntVec& u);

/// exp(s*d) applied to f; a finite sum by local nilpotency.
AlgebraElement exp_action(const ToricLND& d, const Rat& s, const AlgebraElement& f);

/// True iff the monomial of weight u lies in the kernel, i.e. u sits on the
/// facet annihilated by the distinguished ray.
bool kernel_membership(const ToricLND& d, const IntVec& u);

/// True iff u lies in the ideal of the stable prime divisor attached to the
/// dual ray rho, i.e. <rho,u> > 0.
bool divisor_ideal_membership(const WeightMonoid& w, const IntVec& rho, const IntVec& u);

/// Two derivations generate equivalent one-parameter subgroups iff they share
/// the distinguished dual ray (equivalently, their kernels agree).
bool equivalent(const ToricLND& d1, const ToricLND& d2);

/// The dual ray of the unique stable prime divisor moved by d. Sanity-checks
/// that the divisor ideal is actually unstable under the exponential.
IntVec moved_divisor(const ToricLND& d);

}  // namespace demroots
