#pragma once

#include <optional>
#include <string>
#include <vector>

#include "demroots/demazure.hpp"
#include "demroots/horospherical.hpp"
#include "demroots/toric.hpp"

namespace demroots {

struct ToricCriterion {
    bool toric = false;                    // true iff alpha is outside Q·(monoid generators)
    std::optional<RatVec> combination;     // witnessing coefficients when false
};

/// The criterion for the variety to be toric under the maximal torus: the
/// positive root must avoid the rational span of the weight monoid. The
/// diagnostic names the offending rational combination when it fails.
ToricCriterion check_toric(const IntVec& alpha, const std::vector<IntVec>& gamma_generators);

/// Datum for the semisimple-rank-one classifier: the character lattice rank,
/// the positive root alpha, its dual root (as a linear form with
/// <alpha_dual, alpha> = 2), and a weight monoid of dominant generators.
/// TheoremPreconditionError when alpha lies in the rational span of the
/// monoid (the variety is then not toric and outside the classified family).
class RankOneDatum {
public:
    RankOneDatum(std::size_t ambient_rank, IntVec alpha, IntVec alpha_dual,
                 std::vector<IntVec> gamma_generators);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const IntVec& alpha() const { return alpha_; }
    const IntVec& alpha_dual() const { return alpha_dual_; }
    const WeightMonoid& gamma() const { return *gamma_; }
    const std::shared_ptr<const WeightMonoid>& gamma_ptr() const { return gamma_; }

    /// <alpha_dual, lambda>: nonnegative exactly on dominant weights.
    Int dominance(const IntVec& lambda) const;
    bool is_dominant(const IntVec& lambda) const { return dominance(lambda) >= 0; }

    /// The simple reflection lambda - <alpha_dual, lambda>·alpha.
    IntVec weyl_reflect(const IntVec& lambda) const;

    /// The same monoid viewed through the horospherical engine, with the dual
    /// root as the single coroot.
    HoroDatum as_horospherical() const;

private:
    std::size_t ambient_rank_;
    IntVec alpha_, alpha_dual_;
    std::shared_ptr<const WeightMonoid> gamma_;
};

/// The lattice M extended by the root direction, the cone spanned by the
/// monoid and its reflection, and the classified rays of its dual:
///   - exactly one ray pairs to -1 with alpha (facet: the weight cone),
///   - exactly one pairs to +1 (facet: the reflected weight cone),
///   - every other ray pairs to 0 and marks a group-stable prime divisor.
struct ExtendedStructure {
    IntMat extended_basis;             // rows: monoid basis rows, then alpha
    ConeLattice extended;              // the extended cone inside the extended lattice
    IntVec alpha_basis;                // alpha in extended-basis coordinates
    std::vector<IntVec> dual_rays;     // all rays, basis-dual coordinates, sorted
    IntVec alpha_negative_ray;         // pairing -1 with alpha
    IntVec alpha_positive_ray;         // pairing +1 with alpha
    std::vector<IntVec> stable_divisor_rays;  // pairing 0 with alpha
};

/// Builds the extended structure and verifies the facet classification
/// (uniqueness of the two signed rays, facets matching the weight cone and
/// its reflection, alpha being a root at the negative ray). StructureError
/// for the degenerate case where the reflection fixes the whole cone.
ExtendedStructure build_extension(const RankOneDatum& d);

/// Weights of vertical one-parameter subgroups inside the ambient box: the
/// roots attached to the alpha-negative ray of the extended cone. Always
/// contains alpha when alpha is inside the box.
std::vector<IntVec> vertical_weights(const ExtendedStructure& ext, const Box& box);

/// Weights of horizontal one-parameter subgroups inside the ambient box: the
/// dominant roots of the unextended weight cone. Each weight is
/// cross-validated against the extended cone (it must extend to a root there,
/// pairing 0 with the alpha-negative ray and its own ray killing alpha).
std::vector<IntVec> horizontal_weights(const RankOneDatum& d, const ExtendedStructure& ext,
                                       const Box& box);

/// Roots attached to the alpha-positive ray never occur as weights; this
/// computes their in-box intersection with vertical ∪ horizontal and throws
/// InternalError unless it is empty.
std::vector<IntVec> alpha_positive_ray_exclusion(const RankOneDatum& d,
                                                 const ExtendedStructure& ext, const Box& box);

struct MovingRoot {
    IntVec rho;              // the stable-divisor ray being moved
    IntVec e_prime_basis;    // the root found in the box (extended-basis coordinates)
    Int shift;               // multiple of alpha added to land inside M
    IntVec e_ambient;        // the resulting dominant root in ambient coordinates
    DemazureRoot extended_root;  // as a root of the extended cone
    DemazureRoot base_root;      // as a root of the unextended weight cone
};

/// For a stable-divisor ray rho, finds a root of the extended cone attached
/// to rho (lexicographic search over the extended-basis box), shifts it by a
/// multiple of alpha into M, and verifies it is a dominant root of the weight
/// cone whose induced derivation moves exactly the divisor of rho.
/// BoxTooSmallError when no root is found inside the box.
MovingRoot stable_divisor_moving_root(const RankOneDatum& d, const ExtendedStructure& ext,
                                      const IntVec& rho, const Box& box);

struct RankOneReport {
    Int box_bound;
    std::vector<IntVec> dual_rays;
    IntVec alpha_negative_ray;
    IntVec alpha_positive_ray;
    std::vector<IntVec> stable_divisor_rays;
    std::vector<IntVec> vertical;    // ambient coordinates, in-box
    std::vector<IntVec> horizontal;  // ambient coordinates, in-box
    std::vector<MovingRoot> moving_roots;  // one per stable-divisor ray
    bool exclusion_empty = false;
    std::string uniqueness_note;
};

/// Full classification on a datum: ray roles, vertical and horizontal in-box
/// weight sets, the exclusion check, and one moving root per stable divisor.
RankOneReport classification_report(const RankOneDatum& d, const Box& box);

}  // namespace demroots
