#include "demroots/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <sstream>

#include "demroots/errors.hpp"

namespace demroots {

IntMat::IntMat(std::vector<IntVec> r, std::size_t c) : rows(std::move(r)), cols(c) {
    for (const auto& row : rows) {
        if (row.size() != cols) throw DimensionError("matrix rows must all have the declared length");
    }
}

bool operator==(const IntMat& a, const IntMat& b) { return a.cols == b.cols && a.rows == b.rows; }

IntVec vec_add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch in addition");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch in subtraction");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

IntVec vec_scaled(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RatVec to_rational(const IntVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

std::string format_vec(const IntVec& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i];
    }
    os << ')';
    return os.str();
}

std::string format_rat(const Rat& r) {
    std::ostringstream os;
    if (denominator(r) == 1) {
        os << numerator(r);
    } else {
        os << numerator(r) << '/' << denominator(r);
    }
    return os.str();
}

Rat parse_rational(const std::string& s) {
    auto bad = [&]() { throw ParseError("not a rational number: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) bad();
    auto parse_int = [&](const std::string& p) -> Int {
        if (p.empty()) bad();
        std::size_t start = (p[0] == '-' || p[0] == '+') ? 1 : 0;
        if (start == p.size()) bad();
        for (std::size_t i = start; i < p.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(p[i]))) bad();
        return Int(p);
    };
    auto slash = t.find('/');
    if (slash == std::string::npos) return Rat(parse_int(t));
    Int num = parse_int(t.substr(0, slash));
    Int den = parse_int(t.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
}

Int pairing(const IntVec& q, const IntVec& v) {
    if (q.size() != v.size()) throw DimensionError("pairing of vectors of unequal length");
    Int s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * v[i];
    return s;
}

Rat pairing(const IntVec& q, const RatVec& v) {
    if (q.size() != v.size()) throw DimensionError("pairing of vectors of unequal length");
    Rat s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) s += Rat(q[i]) * v[i];
    return s;
}

Rat pairing(const RatVec& q, const RatVec& v) {
    if (q.size() != v.size()) throw DimensionError("pairing of vectors of unequal length");
    Rat s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q[i] * v[i];
    return s;
}

IntVec primitive(const IntVec& v) {
    if (vec_is_zero(v)) throw DomainError("primitive() of the zero vector");
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g < 0) g = -g;
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

IntMat identity(std::size_t n) {
    std::vector<IntVec> rows(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return IntMat(std::move(rows), n);
}

}  // namespace

HnfResult hnf(const IntMat& m) {
    const std::size_t nrows = m.row_count();
    const std::size_t ncols = m.cols;
    std::vector<IntVec> h = m.rows;
    IntMat u = identity(nrows);

    auto row_sub = [&](std::size_t dst, const Int& q, std::size_t src) {
        for (std::size_t c = 0; c < ncols; ++c) h[dst][c] -= q * h[src][c];
        for (std::size_t c = 0; c < nrows; ++c) u.rows[dst][c] -= q * u.rows[src][c];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(h[i], h[j]);
        std::swap(u.rows[i], u.rows[j]);
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : h[i]) x = -x;
        for (auto& x : u.rows[i]) x = -x;
    };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
        // Euclidean descent on the column until one nonzero entry remains.
        for (;;) {
            std::size_t best = nrows;
            for (std::size_t i = pivot_row; i < nrows; ++i) {
                if (h[i][col] == 0) continue;
                if (best == nrows ||
                    boost::multiprecision::abs(h[i][col]) < boost::multiprecision::abs(h[best][col]))
                    best = i;
            }
            if (best == nrows) break;  // column has no pivot
            if (best != pivot_row) row_swap(pivot_row, best);
            bool reduced_all = true;
            for (std::size_t i = pivot_row + 1; i < nrows; ++i) {
                if (h[i][col] == 0) continue;
                Int q = h[i][col] / h[pivot_row][col];
                row_sub(i, q, pivot_row);
                if (h[i][col] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (h[pivot_row][col] == 0) continue;
        if (h[pivot_row][col] < 0) row_negate(pivot_row);
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q = floor_div(h[i][col], h[pivot_row][col]);
            if (q != 0) row_sub(i, q, pivot_row);
        }
        ++pivot_row;
    }
    return HnfResult{IntMat(std::move(h), ncols), std::move(u)};
}

IntMat lattice_basis(const std::vector<IntVec>& gens, std::size_t cols) {
    for (const auto& g : gens)
        if (g.size() != cols) throw DimensionError("generator length mismatch in lattice_basis");
    HnfResult r = hnf(IntMat(gens, cols));
    std::vector<IntVec> basis;
    for (auto& row : r.h.rows)
        if (!vec_is_zero(row)) basis.push_back(row);
    return IntMat(std::move(basis), cols);
}

namespace {

// Row-reduces the system sum_j c_j * gens[j] = target over Q and returns a
// particular solution with free variables set to zero.
std::optional<RatVec> solve_impl(const std::vector<IntVec>& gens, const RatVec& target) {
    const std::size_t m = gens.size();
    const std::size_t d = target.size();
    for (const auto& g : gens)
        if (g.size() != d) throw DimensionError("generator length mismatch in rational solve");

    // Augmented matrix: one equation per ambient coordinate.
    std::vector<RatVec> a(d, RatVec(m + 1, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = Rat(gens[j][i]);
        a[i][m] = target[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < d; ++col) {
        std::size_t p = row;
        while (p < d && a[p][col] == 0) ++p;
        if (p == d) continue;
        std::swap(a[p], a[row]);
        Rat inv = a[row][col];
        for (std::size_t c = col; c <= m; ++c) a[row][c] /= inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t c = col; c <= m; ++c) a[i][c] -= f * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < d; ++i)
        if (a[i][m] != 0) return std::nullopt;

    RatVec sol(m, Rat(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = a[r][m];
    return sol;
}

}  // namespace

std::optional<RatVec> solve_rational(const std::vector<IntVec>& gens, const RatVec& target) {
    return solve_impl(gens, target);
}

std::optional<IntVec> integer_coordinates(const IntVec& v, const IntMat& basis) {
    if (v.size() != basis.cols) throw DimensionError("vector length mismatch in integer_coordinates");
    if (basis.row_count() == 0) {
        if (vec_is_zero(v)) return IntVec{};
        return std::nullopt;
    }
    auto sol = solve_impl(basis.rows, to_rational(v));
    if (!sol) return std::nullopt;
    // Basis rows are independent, so the solution is unique; integrality of
    // the coordinates is exactly lattice membership.
    IntVec coords(sol->size());
    for (std::size_t i = 0; i < sol->size(); ++i) {
        if (denominator((*sol)[i]) != 1) return std::nullopt;
        coords[i] = numerator((*sol)[i]);
    }
    return coords;
}

bool in_sublattice(const IntVec& v, const IntMat& basis) {
    return integer_coordinates(v, basis).has_value();
}

std::size_t rational_rank(const std::vector<IntVec>& vecs) {
    if (vecs.empty()) return 0;
    const std::size_t d = vecs[0].size();
    std::vector<RatVec> a;
    for (const auto& v : vecs) {
        if (v.size() != d) throw DimensionError("vector length mismatch in rank computation");
        a.push_back(to_rational(v));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < a.size(); ++col) {
        std::size_t p = rank;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (std::size_t c = col; c < d; ++c) a[i][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

bool in_rational_span(const IntVec& v, const std::vector<IntVec>& gens) {
    if (vec_is_zero(v)) return true;
    if (gens.empty()) return false;
    return solve_impl(gens, to_rational(v)).has_value();
}

}  // namespace demroots
