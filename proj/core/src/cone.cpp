#include "demroots/cone.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "demroots/errors.hpp"
#include "demroots/linalg.hpp"

namespace demroots {

namespace {

std::vector<IntVec> canonicalize(std::size_t rank, std::vector<IntVec> gens) {
    std::vector<IntVec> out;
    for (auto& g : gens) {
        if (g.size() != rank) throw DimensionError("cone generator length differs from ambient rank");
        if (vec_is_zero(g)) continue;
        out.push_back(primitive(g));
    }
    std::sort(out.begin(), out.end(), LexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct VDescription {
    std::vector<IntVec> rays;       // extreme rays of the pointed part, primitive
    std::vector<IntVec> lineality;  // basis of the lineality space
};

// Incremental double description: intersects halfspaces { q : <a,q> >= 0 }
// one at a time, maintaining a lineality basis L and the extreme rays R of
// the pointed part. Invariants after processing a prefix P of inequalities:
//   span(L) = common kernel of P, and R are extreme rays of the image cone
//   in the quotient by span(L) (where the cone is pointed).
VDescription halfspace_intersection(const std::vector<IntVec>& inequalities, std::size_t dim) {
    std::vector<IntVec> lin;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(dim, 0);
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<IntVec> rays;
    std::vector<IntVec> processed;

    auto active_rank = [&](const IntVec& r) {
        std::vector<IntVec> active;
        for (const auto& p : processed)
            if (pairing(p, r) == 0) active.push_back(p);
        return rational_rank(active);
    };

    for (const auto& a : inequalities) {
        if (a.size() != dim) throw DimensionError("inequality length differs from ambient rank");
        if (vec_is_zero(a)) continue;

        std::size_t pivot = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i) {
            if (pairing(a, lin[i]) != 0) {
                pivot = i;
                break;
            }
        }

        if (pivot != lin.size()) {
            // The new halfspace cuts the lineality: one lineality direction
            // becomes a ray, the rest (and all rays) are projected into the
            // hyperplane of a.
            IntVec lstar = lin[pivot];
            Int ap = pairing(a, lstar);
            if (ap < 0) {
                lstar = vec_neg(lstar);
                ap = -ap;
            }
            std::vector<IntVec> new_lin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == pivot) continue;
                IntVec l = vec_sub(vec_scaled(ap, lin[i]), vec_scaled(pairing(a, lin[i]), lstar));
                new_lin.push_back(primitive(l));
            }
            for (auto& r : rays) {
                IntVec adj = vec_sub(vec_scaled(ap, r), vec_scaled(pairing(a, r), lstar));
                r = primitive(adj);
            }
            rays.push_back(lstar);
            lin = std::move(new_lin);
        } else {
            std::vector<IntVec> pos, zero, neg;
            for (const auto& r : rays) {
                Int v = pairing(a, r);
                if (v > 0)
                    pos.push_back(r);
                else if (v == 0)
                    zero.push_back(r);
                else
                    neg.push_back(r);
            }
            if (!neg.empty()) {
                auto adjacent = [&](const IntVec& r1, const IntVec& r2) {
                    std::vector<const IntVec*> common;
                    for (const auto& p : processed)
                        if (pairing(p, r1) == 0 && pairing(p, r2) == 0) common.push_back(&p);
                    for (const auto& r3 : rays) {
                        if (r3 == r1 || r3 == r2) continue;
                        bool contains_face = true;
                        for (const auto* p : common) {
                            if (pairing(*p, r3) != 0) {
                                contains_face = false;
                                break;
                            }
                        }
                        if (contains_face) return false;
                    }
                    return true;
                };
                std::vector<IntVec> next = pos;
                next.insert(next.end(), zero.begin(), zero.end());
                for (const auto& rp : pos) {
                    for (const auto& rn : neg) {
                        if (!adjacent(rp, rn)) continue;
                        IntVec w = vec_sub(vec_scaled(pairing(a, rp), rn),
                                           vec_scaled(pairing(a, rn), rp));
                        next.push_back(primitive(w));
                    }
                }
                rays = std::move(next);
            }
        }

        processed.push_back(a);
        std::sort(rays.begin(), rays.end(), LexLess{});
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

        // Keep only extreme rays: in the pointed quotient a ray is extreme
        // iff its active inequalities have rank one less than the quotient
        // dimension.
        const std::size_t quotient_dim = dim - lin.size();
        std::vector<IntVec> extreme;
        for (const auto& r : rays)
            if (active_rank(r) + 1 == quotient_dim) extreme.push_back(r);
        rays = std::move(extreme);
    }

    if (!lin.empty()) {
        // Canonical lineality basis for deterministic output.
        IntMat basis = lattice_basis(lin, dim);
        lin = basis.rows;
    }
    return VDescription{std::move(rays), std::move(lin)};
}

}  // namespace

struct Cone::Cache {
    std::once_flag once;
    std::unique_ptr<const Cone> dual;
};

Cone::Cone(std::size_t ambient_rank, std::vector<IntVec> generators)
    : ambient_rank_(ambient_rank),
      generators_(canonicalize(ambient_rank, std::move(generators))),
      cache_(std::make_shared<Cache>()) {}

const Cone& Cone::dual() const {
    std::call_once(cache_->once, [this] {
        VDescription vd = halfspace_intersection(generators_, ambient_rank_);
        std::vector<IntVec> gens = std::move(vd.rays);
        for (const auto& l : vd.lineality) {
            gens.push_back(l);
            gens.push_back(vec_neg(l));
        }
        cache_->dual = std::make_unique<const Cone>(ambient_rank_, std::move(gens));
    });
    return *cache_->dual;
}

Cone dual_cone(const Cone& c) { return c.dual(); }

const std::vector<IntVec>& dual_generators(const Cone& c) { return c.dual().generators(); }

bool contains(const Cone& c, const IntVec& v) {
    if (v.size() != c.ambient_rank()) throw DimensionError("vector length differs from ambient rank");
    for (const auto& q : dual_generators(c))
        if (pairing(q, v) < 0) return false;
    return true;
}

bool contains(const Cone& c, const RatVec& v) {
    if (v.size() != c.ambient_rank()) throw DimensionError("vector length differs from ambient rank");
    for (const auto& q : dual_generators(c))
        if (pairing(q, v) < 0) return false;
    return true;
}

bool is_full_dimensional(const Cone& c) {
    return rational_rank(c.generators()) == c.ambient_rank();
}

bool is_strictly_convex(const Cone& c) {
    // The lineality space of c is the common kernel of the dual generators.
    return rational_rank(dual_generators(c)) == c.ambient_rank();
}

RaySet rays(const Cone& c) {
    if (!is_strictly_convex(c))
        throw StructureError("rays() requires a strictly convex cone");
    // Double dual reproduces exactly the extreme rays.
    return RaySet{dual_cone(dual_cone(c)).generators()};
}

Cone facet_of(const Cone& c, const IntVec& rho) {
    if (!is_full_dimensional(c))
        throw StructureError("facet_of() requires a full-dimensional cone");
    if (rho.size() != c.ambient_rank() || vec_is_zero(rho))
        throw DomainError("facet_of(): not a dual ray");
    IntVec r = primitive(rho);
    const RaySet dual_rays = rays(dual_cone(c));
    if (!std::binary_search(dual_rays.rays.begin(), dual_rays.rays.end(), r, LexLess{}))
        throw DomainError("facet_of(): not a dual ray");
    std::vector<IntVec> gens;
    for (const auto& g : c.generators())
        if (pairing(r, g) == 0) gens.push_back(g);
    return Cone(c.ambient_rank(), std::move(gens));
}

bool cone_subset(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw DimensionError("cones live in spaces of different rank");
    for (const auto& g : a.generators())
        if (!contains(b, g)) return false;
    return true;
}

bool cone_same(const Cone& a, const Cone& b) { return cone_subset(a, b) && cone_subset(b, a); }

}  // namespace demroots
