#pragma once

#include <memory>
#include <vector>

#include "demroots/numeric.hpp"

namespace demroots {

/// A finitely generated convex cone in a fixed-rank rational space, described
/// by lattice generators. Generators are stored primitive, lexicographically
/// sorted and deduplicated (zero generators are dropped), so equal cones with
/// equal generating ray sets compare equal. Values are immutable; the dual
/// cone is memoized internally and shared between copies.
class Cone {
public:
    Cone(std::size_t ambient_rank, std::vector<IntVec> generators);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<IntVec>& generators() const { return generators_; }

    bool operator==(const Cone& o) const {
        return ambient_rank_ == o.ambient_rank_ && generators_ == o.generators_;
    }

private:
    std::size_t ambient_rank_;
    std::vector<IntVec> generators_;

    struct Cache;
    std::shared_ptr<Cache> cache_;

    const Cone& dual() const;

    friend Cone dual_cone(const Cone&);
    friend const std::vector<IntVec>& dual_generators(const Cone&);
};

struct RaySet {
    std::vector<IntVec> rays;  // primitive, lexicographically sorted

    bool operator==(const RaySet&) const = default;
};

/// Generators (in the dual space) of { q : <q,v> >= 0 for all v in c },
/// computed by incremental double description over exact rationals. For a
/// full-dimensional c the output generators are exactly the extreme rays of
/// the dual; in general they include a lineality basis and its negatives.
Cone dual_cone(const Cone& c);

/// The memoized dual's generator list; valid as long as any copy of c lives.
const std::vector<IntVec>& dual_generators(const Cone& c);

/// Extreme rays of a strictly convex cone: its unique minimal generating set.
/// StructureError when c contains a line.
RaySet rays(const Cone& c);

/// The facet c ∩ Ker rho cut out by a dual ray rho, returned as the cone on
/// the generators of c annihilated by rho. DomainError when rho is not a ray
/// of the dual cone.
Cone facet_of(const Cone& c, const IntVec& rho);

bool contains(const Cone& c, const IntVec& v);
bool contains(const Cone& c, const RatVec& v);

bool is_full_dimensional(const Cone& c);
bool is_strictly_convex(const Cone& c);

/// True iff every generator of a lies in b (i.e. a is a subcone of b).
bool cone_subset(const Cone& a, const Cone& b);
bool cone_same(const Cone& a, const Cone& b);

}  // namespace demroots
