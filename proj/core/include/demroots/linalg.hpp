#pragma once

#include <optional>
#include <vector>

#include "demroots/numeric.hpp"

namespace demroots {

/// Natural pairing between a linear form and a vector written in mutually
/// dual bases.
Int pairing(const IntVec& q, const IntVec& v);
Rat pairing(const IntVec& q, const RatVec& v);
Rat pairing(const RatVec& q, const RatVec& v);

/// v divided by the (positive) gcd of its coordinates; direction preserved.
IntVec primitive(const IntVec& v);

struct HnfResult {
    IntMat h;  // row-style Hermite normal form: echelon, positive pivots,
               // entries above a pivot reduced into [0, pivot)
    IntMat u;  // unimodular transform with u * m = h
};

HnfResult hnf(const IntMat& m);

/// Nonzero HNF rows of the span of `gens`: a canonical basis of the lattice
/// they generate (possibly zero rows for the trivial lattice).
IntMat lattice_basis(const std::vector<IntVec>& gens, std::size_t cols);

/// True iff v is an integer combination of the (independent) basis rows.
bool in_sublattice(const IntVec& v, const IntMat& basis);

/// Exact integer coordinates of v in the given independent basis rows, or
/// nullopt when v is outside the lattice.
std::optional<IntVec> integer_coordinates(const IntVec& v, const IntMat& basis);

/// True iff v lies in the Q-linear span of gens.
bool in_rational_span(const IntVec& v, const std::vector<IntVec>& gens);

/// Some rational coefficients c with sum c_i * gens[i] = target, or nullopt
/// when the system is inconsistent. Free variables are set to zero.
std::optional<RatVec> solve_rational(const std::vector<IntVec>& gens, const RatVec& target);

std::size_t rational_rank(const std::vector<IntVec>& vecs);

}  // namespace demroots
