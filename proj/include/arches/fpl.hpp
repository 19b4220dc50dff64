#pragma once

// Fully packed loops on the n x n grid, brute force.

#include <gmpxx.h>

#include <array>
#include <map>
#include <vector>

#include "arches/error.hpp"
#include "arches/linkpat.hpp"

namespace arches {

/// Edge states of one configuration.  h(i, j) joins (i, j)-(i, j+1) for
/// j = -1..n-1, so j = -1 and j = n-1 are the left and right terminals;
/// v(i, j) joins (i, j)-(i+1, j) for i = -1..n-1 likewise.
struct FPLGrid {
    int n = 0;
    std::vector<char> horiz; // n rows x (n+1)
    std::vector<char> vert;  // (n+1) rows x n

    bool h(int i, int j) const { return horiz[static_cast<std::size_t>(i * (n + 1) + j + 1)] != 0; }
    bool v(int i, int j) const { return vert[static_cast<std::size_t>((i + 1) * n + j)] != 0; }
    void set_h(int i, int j, bool x) { horiz[static_cast<std::size_t>(i * (n + 1) + j + 1)] = x; }
    void set_v(int i, int j, bool x) { vert[static_cast<std::size_t>((i + 1) * n + j)] = x; }
};

inline constexpr int kFplMaxN = 7;

namespace detail {

// A boundary terminal as (vertex row, vertex col, side 0=up 1=right 2=down 3=left).
struct Terminal {
    int i, j, side;
};

// The 4n terminals clockwise from the top-left corner, top side first.
inline std::vector<Terminal> terminals(int n) {
    std::vector<Terminal> t;
    for (int j = 0; j < n; ++j) t.push_back({0, j, 0});
    for (int i = 0; i < n; ++i) t.push_back({i, n - 1, 1});
    for (int j = n - 1; j >= 0; --j) t.push_back({n - 1, j, 2});
    for (int i = n - 1; i >= 0; --i) t.push_back({i, 0, 3});
    return t;
}

inline void set_terminal(FPLGrid& g, const Terminal& t, bool x) {
    switch (t.side) {
    case 0: g.set_v(-1, t.j, x); break;
    case 1: g.set_h(t.i, g.n - 1, x); break;
    case 2: g.set_v(g.n - 1, t.j, x); break;
    default: g.set_h(t.i, -1, x); break;
    }
}

inline FPLGrid boundary_grid(int n) {
    FPLGrid g;
    g.n = n;
    g.horiz.assign(static_cast<std::size_t>(n * (n + 1)), 0);
    g.vert.assign(static_cast<std::size_t>((n + 1) * n), 0);
    auto ts = terminals(n);
    for (std::size_t k = 0; k < ts.size(); ++k) set_terminal(g, ts[k], k % 2 == 0);
    return g;
}

// Row-major walk; at (i, j) the left and up edges are known, choose right
// and down (the last column's right edge and last row's down edge are fixed).
template <class Visit>
void fpl_walk(FPLGrid& g, int pos, Visit& visit) {
    const int n = g.n;
    if (pos == n * n) {
        visit(g);
        return;
    }
    const int i = pos / n, j = pos % n;
    const int have = g.h(i, j - 1) + g.v(i - 1, j);
    const bool right_fixed = j == n - 1, down_fixed = i == n - 1;
    for (int r = 0; r <= 1; ++r) {
        if (right_fixed && r != g.h(i, j)) continue;
        for (int d = 0; d <= 1; ++d) {
            if (down_fixed && d != g.v(i, j)) continue;
            if (have + r + d != 2) continue;
            if (!right_fixed) g.set_h(i, j, r);
            if (!down_fixed) g.set_v(i, j, d);
            fpl_walk(g, pos + 1, visit);
        }
    }
    if (!right_fixed) g.set_h(i, j, false);
    if (!down_fixed) g.set_v(i, j, false);
}

} // namespace detail

/// Visits every FPL configuration, row-major backtracking order.
template <class Visit>
void for_each_fpl(int n, Visit visit) {
    if (n < 1 || n > kFplMaxN) throw Error(ErrorKind::SizeLimit, "fpl size must be in 1.." + std::to_string(kFplMaxN));
    FPLGrid g = detail::boundary_grid(n);
    detail::fpl_walk(g, 0, visit);
}

inline std::vector<FPLGrid> enumerate_fpl(int n) {
    std::vector<FPLGrid> out;
    for_each_fpl(n, [&](const FPLGrid& g) { out.push_back(g); });
    return out;
}

/// Pairing of the occupied terminals, numbered 0..2n-1 clockwise from the
/// top-left one.
inline LinkPattern link_pattern_of(const FPLGrid& g) {
    const int n = g.n;
    auto ts = detail::terminals(n);
    std::map<std::array<int, 3>, int> label;
    int k = 0;
    for (std::size_t t = 0; t < ts.size(); ++t) {
        if (t % 2) continue;
        label[{ts[t].i, ts[t].j, ts[t].side}] = k++;
    }
    auto edge = [&](int i, int j, int side) {
        switch (side) {
        case 0: return g.v(i - 1, j);
        case 1: return g.h(i, j);
        case 2: return g.v(i, j);
        default: return g.h(i, j - 1);
        }
    };
    std::vector<int> mate(static_cast<std::size_t>(2 * n), -1);
    for (const auto& [key, from] : label) {
        if (mate[static_cast<std::size_t>(from)] >= 0) continue;
        int i = key[0], j = key[1], came = key[2];
        for (int steps = 0;; ++steps) {
            if (steps > 4 * n * n) throw Error(ErrorKind::MalformedGrid, "path does not terminate");
            int out = -1, deg = 0;
            for (int s = 0; s < 4; ++s) {
                if (!edge(i, j, s)) continue;
                ++deg;
                if (s != came) out = s;
            }
            if (deg != 2 || out < 0) throw Error(ErrorKind::MalformedGrid, "vertex degree is not 2");
            bool leaves = (out == 0 && i == 0) || (out == 1 && j == n - 1) || (out == 2 && i == n - 1) || (out == 3 && j == 0);
            if (leaves) {
                auto it = label.find({i, j, out});
                if (it == label.end()) throw Error(ErrorKind::MalformedGrid, "path ends on an empty terminal");
                mate[static_cast<std::size_t>(from)] = it->second;
                mate[static_cast<std::size_t>(it->second)] = from;
                break;
            }
            static constexpr int di[] = {-1, 0, 1, 0}, dj[] = {0, 1, 0, -1};
            i += di[out];
            j += dj[out];
            came = (out + 2) % 4;
        }
    }
    return LinkPattern(std::move(mate));
}

struct FPLCensus {
    int n = 0;
    std::map<LinkPattern, mpz_class> counts;

    mpz_class total() const {
        mpz_class s = 0;
        for (const auto& [p, c] : counts) s += c;
        return s;
    }
    mpz_class count(const LinkPattern& p) const {
        auto it = counts.find(p);
        return it == counts.end() ? mpz_class(0) : it->second;
    }
};

inline FPLCensus fpl_counts(int n) {
    FPLCensus c;
    c.n = n;
    for (const auto& p : enumerate_patterns(n)) c.counts[p] = 0;
    for_each_fpl(n, [&](const FPLGrid& g) { c.counts[link_pattern_of(g)] += 1; });
    return c;
}

/// prod_{k<n} (3k+1)! / (n+k)!
inline mpz_class asm_count(int n) {
    mpz_class num = 1, den = 1;
    for (int k = 0; k < n; ++k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(3 * k + 1));
        num *= f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n + k));
        den *= f;
    }
    return num / den;
}

} // namespace arches
