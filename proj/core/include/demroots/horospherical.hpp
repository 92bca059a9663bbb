#pragma once

#include <map>
#include <memory>
#include <vector>

#include "demroots/demazure.hpp"
#include "demroots/toric.hpp"

namespace demroots {

/// Input datum for the horospherical engine: a weight monoid inside the
/// character lattice of a maximal torus, plus the dual simple roots of the
/// acting group as linear forms on that lattice. A weight is dominant iff it
/// pairs nonnegatively with every listed coroot; every monoid generator must
/// be dominant.
class HoroDatum {
public:
    HoroDatum(std::size_t ambient_rank, std::vector<IntVec> gamma_generators,
              std::vector<IntVec> coroots);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const WeightMonoid& gamma() const { return *gamma_; }
    const std::shared_ptr<const WeightMonoid>& gamma_ptr() const { return gamma_; }
    const std::vector<IntVec>& coroots() const { return coroots_; }

    /// The cone in the dual lattice generated by the restrictions of the
    /// coroots to M (coordinates dual to the monoid basis). Rays of the dual
    /// weight cone outside this cone mark the group-stable prime divisors.
    const Cone& coroot_cone() const { return coroot_cone_; }

    bool is_dominant(const IntVec& lambda_ambient) const;

    /// Membership in Z·Gamma ∩ {dominant}: the weight monoid of the open
    /// orbit. Decided exactly per point.
    bool in_dominant_lattice(const IntVec& lambda_ambient) const;

    /// Restriction of an ambient linear form to M, in dual-basis coordinates.
    IntVec restrict_form(const IntVec& form_ambient) const;

private:
    std::size_t ambient_rank_;
    std::shared_ptr<const WeightMonoid> gamma_;
    std::vector<IntVec> coroots_;
    Cone coroot_cone_;
};

struct SaturationVerdict {
    bool saturated = true;
    std::vector<IntVec> counterexamples;  // dominant lattice points outside the monoid
};

/// Box-bounded test of G-saturation (monoid = Z·monoid ∩ dominant weights):
/// scans the lattice points of M with basis coordinates of sup-norm at most
/// box.bound. Complete only within the box.
SaturationVerdict is_g_saturated(const HoroDatum& h, const Box& box);

/// Dominant Demazure roots of the weight cone with ambient coordinates of
/// sup-norm <= box.bound: the weights of horizontal one-parameter subgroups
/// (exact for horospherical varieties, an upper bound in general). Empty
/// whenever the monoid is G-saturated.
std::vector<IntVec> horizontal_weight_set(const HoroDatum& h, const Box& box);

/// An element of the highest-weight-vector shadow of the coordinate ring:
/// finitely supported map from dominant lattice points to coefficients, with
/// multiplication adding the weights.
struct ShadowElement {
    std::map<IntVec, Rat, LexLess> terms;

    static ShadowElement basis_vector(IntVec lambda, Rat coeff = 1);
    bool is_zero() const { return terms.empty(); }

    bool operator==(const ShadowElement&) const = default;
};

ShadowElement shadow_add(const ShadowElement& a, const ShadowElement& b);
ShadowElement shadow_mul(const HoroDatum& h, const ShadowElement& a, const ShadowElement& b);

/// The derivation attached to a dominant root mu with distinguished ray rho:
/// the basis vector of weight lambda maps to <rho,lambda> times the basis
/// vector of weight lambda + mu.
ShadowElement horo_lnd_apply(const HoroDatum& h, const DemazureRoot& mu, const ShadowElement& f);

/// Dual-cone rays lying outside the restricted coroot cone: one per
/// group-stable prime divisor.
std::vector<IntVec> g_stable_divisor_rays(const HoroDatum& h);

/// A dominant root attached to rho witnessing that the corresponding stable
/// divisor is moved: searched lexicographically over the ambient box, with a
/// subcone-witness fallback. Verifies that the divisor ideal is unstable
/// under the induced derivation. BoxTooSmallError when the box is exhausted.
DemazureRoot moving_witness(const HoroDatum& h, const IntVec& rho, const Box& box);

}  // namespace demroots
