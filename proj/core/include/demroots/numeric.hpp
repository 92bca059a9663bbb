#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace demroots {

// All arithmetic in the toolkit is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// A rectangular integer matrix stored as a list of rows.
struct IntMat {
    std::vector<IntVec> rows;
    std::size_t cols = 0;

    IntMat() = default;
    IntMat(std::vector<IntVec> r, std::size_t c);

    std::size_t row_count() const { return rows.size(); }
};

bool operator==(const IntMat& a, const IntMat& b);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scaled(const Int& c, const IntVec& a);
bool vec_is_zero(const IntVec& a);

/// Strict lexicographic order on coordinate vectors; the canonical order used
/// for every generator list, ray set and report section.
bool lex_less(const IntVec& a, const IntVec& b);

struct LexLess {
    bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

RatVec to_rational(const IntVec& a);

std::string format_vec(const IntVec& a);
std::string format_rat(const Rat& r);

/// Parses "7", "-3" or "3/2"; throws ParseError on anything else.
Rat parse_rational(const std::string& s);

}  // namespace demroots
