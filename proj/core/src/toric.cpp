#include "demroots/toric.hpp"

#include <algorithm>
#include <set>

#include "demroots/errors.hpp"

namespace demroots {

namespace {

std::vector<IntVec> clean_generators(std::size_t rank, std::vector<IntVec> gens) {
    std::vector<IntVec> out;
    for (auto& g : gens) {
        if (g.size() != rank) throw DimensionError("monoid generator length differs from ambient rank");
        if (vec_is_zero(g)) continue;  // the monoid identity adds nothing
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), LexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntMat derive_basis(std::size_t rank, const std::vector<IntVec>& gens,
                    std::optional<IntMat>& explicit_basis) {
    IntMat canonical = lattice_basis(gens, rank);
    if (!explicit_basis) return canonical;
    IntMat basis = std::move(*explicit_basis);
    if (basis.cols != rank) throw DimensionError("explicit basis row length differs from ambient rank");
    if (rational_rank(basis.rows) != basis.row_count())
        throw DomainError("explicit basis rows must be independent");
    for (const auto& row : basis.rows)
        if (!in_sublattice(row, canonical))
            throw DomainError("explicit basis does not lie in the generated lattice");
    for (const auto& row : canonical.rows)
        if (!in_sublattice(row, basis))
            throw DomainError("explicit basis does not span the generated lattice");
    return basis;
}

}  // namespace

WeightMonoid::WeightMonoid(std::size_t ambient_rank, std::vector<IntVec> generators,
                           std::optional<IntMat> explicit_basis)
    : ambient_rank_(ambient_rank),
      generators_(clean_generators(ambient_rank, std::move(generators))),
      lattice_(ambient_rank, derive_basis(ambient_rank, generators_, explicit_basis),
               generators_) {
    generators_basis_.reserve(generators_.size());
    for (const auto& g : generators_) generators_basis_.push_back(*lattice_.to_basis(g));

    // Generators whose negative stays in the cone are the units of the
    // monoid; membership reduces modulo the lattice they span, where the
    // remaining generators span a pointed cone.
    std::vector<IntVec> unit_gens;
    for (std::size_t i = 0; i < generators_basis_.size(); ++i) {
        if (contains(lattice_.basis_cone(), vec_neg(generators_basis_[i]))) {
            unit_indices_.push_back(i);
            unit_gens.push_back(generators_basis_[i]);
        }
    }
    unit_lattice_ = lattice_basis(unit_gens, lattice_.lattice_rank());

    // A form vanishing on the units and strictly positive on every other
    // generator: the sum of the dual-cone generators.
    positive_form_.assign(lattice_.lattice_rank(), 0);
    for (const auto& q : dual_generators(lattice_.basis_cone()))
        positive_form_ = vec_add(positive_form_, q);

    run_saturation_check();
}

bool WeightMonoid::monoid_membership(const IntVec& u) const {
    if (u.size() != ambient_rank_) throw DimensionError("weight length differs from ambient rank");
    auto coords = lattice_.to_basis(u);
    if (!coords) return false;
    return contains(lattice_.basis_cone(), *coords);
}

bool WeightMonoid::generates_basis(const IntVec& u_basis) const {
    if (!contains(lattice_.basis_cone(), u_basis)) return false;

    std::vector<std::size_t> pointed;
    for (std::size_t i = 0; i < generators_basis_.size(); ++i)
        if (std::find(unit_indices_.begin(), unit_indices_.end(), i) == unit_indices_.end())
            pointed.push_back(i);

    auto residual_in_units = [&](const IntVec& w) {
        if (unit_lattice_.row_count() == 0) return vec_is_zero(w);
        return in_sublattice(w, unit_lattice_);
    };
    if (pointed.empty()) return residual_in_units(u_basis);

    Int mass = pairing(positive_form_, u_basis);
    if (mass < 0) return false;

    // Depth-first search over coefficients of the non-unit generators,
    // bounded by the positive form; the leftover must land in the unit
    // lattice. Failed (index, residual) states are memoized.
    std::set<std::pair<std::size_t, IntVec>> failed;
    auto dfs = [&](auto&& self, std::size_t idx, const IntVec& residual) -> bool {
        if (idx == pointed.size()) return residual_in_units(residual);
        if (failed.count({idx, residual})) return false;
        const IntVec& gen = generators_basis_[pointed[idx]];
        Int step = pairing(positive_form_, gen);
        Int have = pairing(positive_form_, residual);
        Int max_n = have / step;
        IntVec current = residual;
        for (Int n = 0; n <= max_n; ++n) {
            if (self(self, idx + 1, current)) return true;
            current = vec_sub(current, gen);
        }
        failed.insert({idx, residual});
        return false;
    };
    return dfs(dfs, 0, u_basis);
}

bool WeightMonoid::generates(const IntVec& u_ambient) const {
    if (u_ambient.size() != ambient_rank_)
        throw DimensionError("weight length differs from ambient rank");
    auto coords = lattice_.to_basis(u_ambient);
    if (!coords) return false;
    return generates_basis(*coords);
}

void WeightMonoid::run_saturation_check() {
    if (generators_basis_.empty()) return;
    Int bound = 0;
    for (std::size_t i = 0; i < generators_basis_.size(); ++i) {
        for (std::size_t j = i; j < generators_basis_.size(); ++j) {
            IntVec s = vec_add(generators_basis_[i], generators_basis_[j]);
            for (const auto& x : s) {
                Int a = x < 0 ? Int(-x) : x;
                if (a > bound) bound = a;
            }
        }
    }
    saturation_box_bound_ = bound;
    for_each_box_point(lattice_.lattice_rank(), bound, [&](const IntVec& c) {
        if (!contains(lattice_.basis_cone(), c)) return;
        if (!generates_basis(c)) saturation_gaps_.push_back(lattice_.to_ambient(c));
    });
}

AlgebraElement AlgebraElement::monomial(IntVec u, Rat coeff) {
    AlgebraElement e;
    if (coeff != 0) e.terms.emplace(std::move(u), std::move(coeff));
    return e;
}

AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a;
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

AlgebraElement ae_scale(const Rat& c, const AlgebraElement& a) {
    AlgebraElement out;
    if (c == 0) return out;
    for (const auto& [u, x] : a.terms) out.terms.emplace(u, c * x);
    return out;
}

AlgebraElement ae_mul(const WeightMonoid& w, const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [u, cu] : a.terms) {
        for (const auto& [v, cv] : b.terms) {
            IntVec s = vec_add(u, v);
            if (!w.monoid_membership(s))
                throw DomainError("product support left the weight monoid");
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

ToricLND::ToricLND(std::shared_ptr<const WeightMonoid> monoid, const IntVec& e_ambient)
    : monoid_(std::move(monoid)) {
    auto root = classify_root(monoid_->lattice(), e_ambient);
    if (!root) throw DomainError("not a Demazure root of the weight cone: " + format_vec(e_ambient));
    root_ = std::move(*root);
}

namespace {

void check_support(const WeightMonoid& w, const AlgebraElement& f) {
    for (const auto& [u, c] : f.terms)
        if (!w.monoid_membership(u))
            throw DomainError("support point outside the weight monoid: " + format_vec(u));
}

}  // namespace

AlgebraElement lnd_apply(const ToricLND& d, const AlgebraElement& f) {
    const WeightMonoid& w = d.monoid();
    check_support(w, f);
    AlgebraElement out;
    for (const auto& [u, c] : f.terms) {
        Int weight = pairing(d.root().rho, *w.lattice().to_basis(u));
        if (weight == 0) continue;
        IntVec target = vec_add(u, d.root().e);
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

Int lnd_nilpotency_index(const ToricLND& d, const IntVec& u) {
    if (!d.monoid().monoid_membership(u))
        throw DomainError("weight outside the monoid: " + format_vec(u));
    AlgebraElement f = AlgebraElement::monomial(u);
    Int k = 0;
    while (!f.is_zero()) {
        f = lnd_apply(d, f);
        ++k;
    }
    Int expected = pairing(d.root().rho, *d.monoid().lattice().to_basis(u)) + 1;
    if (k != expected) throw InternalError("nilpotency index disagrees with the pairing formula");
    return k;
}

AlgebraElement exp_action(const ToricLND& d, const Rat& s, const AlgebraElement& f) {
    check_support(d.monoid(), f);
    AlgebraElement sum = f;
    AlgebraElement derivative = f;
    Rat factor = 1;
    Int k = 1;
    for (;;) {
        derivative = lnd_apply(d, derivative);
        if (derivative.is_zero()) break;
        factor = factor * s / Rat(k);
        sum = ae_add(sum, ae_scale(factor, derivative));
        ++k;
    }
    return sum;
}

bool kernel_membership(const ToricLND& d, const IntVec& u) {
    if (!d.monoid().monoid_membership(u))
        throw DomainError("weight outside the monoid: " + format_vec(u));
    return pairing(d.root().rho, *d.monoid().lattice().to_basis(u)) == 0;
}

bool divisor_ideal_membership(const WeightMonoid& w, const IntVec& rho, const IntVec& u) {
    const auto& dual_rays = w.dual_rays();
    if (std::find(dual_rays.begin(), dual_rays.end(), rho) == dual_rays.end())
        throw DomainError("not a dual ray of the weight cone: " + format_vec(rho));
    if (!w.monoid_membership(u))
        throw DomainError("weight outside the monoid: " + format_vec(u));
    return pairing(rho, *w.lattice().to_basis(u)) > 0;
}

bool equivalent(const ToricLND& d1, const ToricLND& d2) {
    if (!(d1.monoid() == d2.monoid()))
        throw DomainError("equivalence is only defined over a single monoid");
    bool same_ray = d1.root().rho == d2.root().rho;
    // The kernels are the facet subalgebras, so ray equality must match
    // kernel agreement on the generators.
    bool kernels_agree = true;
    for (const auto& g : d1.monoid().generators())
        if (kernel_membership(d1, g) != kernel_membership(d2, g)) kernels_agree = false;
    if (same_ray != kernels_agree)
        throw InternalError("ray comparison and kernel comparison disagree");
    return same_ray;
}

IntVec moved_divisor(const ToricLND& d) {
    const WeightMonoid& w = d.monoid();
    const IntVec& rho = d.root().rho;
    // Some generator lies in the divisor ideal, and the derivation's
    // nilpotency chain must exit the ideal.
    for (const auto& g : w.generators()) {
        Int v = pairing(rho, *w.lattice().to_basis(g));
        if (v <= 0) continue;
        AlgebraElement f = AlgebraElement::monomial(g);
        for (Int i = 0; i < v; ++i) f = lnd_apply(d, f);
        if (f.is_zero()) throw InternalError("derivation chain died inside the divisor ideal");
        for (const auto& [u, c] : f.terms)
            if (pairing(rho, *w.lattice().to_basis(u)) != 0)
                throw InternalError("derivation chain did not reach the kernel");
        return rho;
    }
    throw InternalError("no generator lies in the divisor ideal");
}

}  // namespace demroots
