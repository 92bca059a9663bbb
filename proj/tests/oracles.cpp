#include "oracles.hpp"

#include <algorithm>

#include <boost/multiprecision/integer.hpp>

namespace oracle {

namespace {

// Self-contained rational elimination; deliberately not the library's.
struct Elim {
    std::vector<RatVec> m;
    std::size_t rows = 0, cols = 0;

    explicit Elim(std::vector<RatVec> a) : m(std::move(a)) {
        rows = m.size();
        cols = rows ? m[0].size() : 0;
    }

    // Reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t p = r;
            while (p < rows && m[p][c] == 0) ++p;
            if (p == rows) continue;
            std::swap(m[p], m[r]);
            Rat inv = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || m[i][c] == 0) continue;
                Rat f = m[i][c];
                for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }
};

IntVec scale_to_primitive(const RatVec& v) {
    Int lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    Int g = 0;
    for (const auto& x : w) g = boost::multiprecision::gcd(g, x);
    if (g < 0) g = -g;
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

}  // namespace

std::optional<IntVec> kernel_ray(const std::vector<IntVec>& rows, std::size_t dim) {
    std::vector<RatVec> a;
    for (const auto& r : rows) {
        RatVec rr(dim);
        for (std::size_t j = 0; j < dim; ++j) rr[j] = Rat(r[j]);
        a.push_back(std::move(rr));
    }
    Elim e(std::move(a));
    auto pivots = e.rref();
    if (pivots.size() + 1 != dim) return std::nullopt;
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free_col = dim;
    for (std::size_t c = 0; c < dim; ++c)
        if (!is_pivot[c]) free_col = c;
    RatVec sol(dim, Rat(0));
    sol[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = -e.m[r][free_col];
    return scale_to_primitive(sol);
}

std::vector<IntVec> dual_rays_bruteforce(const std::vector<IntVec>& gens, std::size_t dim) {
    std::vector<IntVec> out;
    if (dim == 0) return out;
    const std::size_t m = gens.size();
    if (dim == 1) {
        // One-dimensional dual: a sign, when consistent.
        bool pos_ok = true, neg_ok = true;
        for (const auto& g : gens) {
            if (g[0] < 0) pos_ok = false;
            if (g[0] > 0) neg_ok = false;
        }
        if (pos_ok && !gens.empty()) out.push_back(IntVec{1});
        if (neg_ok && !gens.empty()) out.push_back(IntVec{-1});
        std::sort(out.begin(), out.end(), LexLess{});
        return out;
    }
    std::vector<std::size_t> idx(dim - 1);
    // Enumerate all (dim-1)-subsets of generators.
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
        if (pos == dim - 1) {
            std::vector<IntVec> rows;
            for (auto i : idx) rows.push_back(gens[i]);
            auto q = kernel_ray(rows, dim);
            if (!q) return;
            bool all_nonneg = true, all_nonpos = true;
            for (const auto& g : gens) {
                Int s = 0;
                for (std::size_t j = 0; j < dim; ++j) s += (*q)[j] * g[j];
                if (s < 0) all_nonneg = false;
                if (s > 0) all_nonpos = false;
            }
            if (all_nonneg)
                out.push_back(*q);
            else if (all_nonpos)
                out.push_back(demroots::vec_neg(*q));
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (m >= dim - 1) rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), LexLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool cone_contains_bruteforce(const std::vector<IntVec>& gens, const RatVec& v) {
    const std::size_t m = gens.size();
    const std::size_t d = v.size();
    bool zero = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
    if (zero) return true;

    // Any feasible point of { c >= 0 : sum c_i g_i = v } yields a vertex
    // supported on an independent subset of generators.
    for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
        std::vector<std::size_t> sel;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) sel.push_back(i);
        if (sel.size() > d) continue;
        // Solve sum_{i in sel} c_i g_i = v; accept a unique nonnegative solution.
        std::vector<RatVec> a(d, RatVec(sel.size() + 1, Rat(0)));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t j = 0; j < sel.size(); ++j) a[r][j] = Rat(gens[sel[j]][r]);
            a[r][sel.size()] = v[r];
        }
        Elim e(std::move(a));
        auto pivots = e.rref();
        bool inconsistent = false;
        for (auto c : pivots)
            if (c == sel.size()) inconsistent = true;
        if (inconsistent) continue;
        if (pivots.size() != sel.size()) continue;  // dependent columns: smaller subset covers it
        RatVec sol(sel.size(), Rat(0));
        for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = e.m[r][sel.size()];
        bool ok = true;
        for (const auto& c : sol)
            if (c < 0) ok = false;
        if (ok) return true;
    }
    return false;
}

bool cone_contains_bruteforce(const std::vector<IntVec>& gens, const IntVec& v) {
    RatVec rv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rv[i] = Rat(v[i]);
    return cone_contains_bruteforce(gens, rv);
}

std::map<IntVec, std::vector<IntVec>, LexLess> roots_in_box_bruteforce(
    const std::vector<IntVec>& gens, std::size_t dim, const Int& bound) {
    std::vector<IntVec> rays = dual_rays_bruteforce(gens, dim);
    std::map<IntVec, std::vector<IntVec>, LexLess> out;
    for (const auto& rho : rays) out.emplace(rho, std::vector<IntVec>{});

    IntVec e(dim, -bound);
    auto classify = [&](const IntVec& cand) {
        const IntVec* hit = nullptr;
        for (const auto& rho : rays) {
            Int s = 0;
            for (std::size_t j = 0; j < dim; ++j) s += rho[j] * cand[j];
            if (s < -1) return;
            if (s == -1) {
                if (hit) return;
                hit = &rho;
            }
        }
        if (hit) out[*hit].push_back(cand);
    };
    if (dim == 0) return out;
    for (;;) {
        classify(e);
        std::size_t i = dim;
        bool done = true;
        while (i > 0) {
            --i;
            if (e[i] < bound) {
                ++e[i];
                for (std::size_t j = i + 1; j < dim; ++j) e[j] = -bound;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    for (auto& [rho, v] : out) std::sort(v.begin(), v.end(), LexLess{});
    return out;
}

}  // namespace oracle
