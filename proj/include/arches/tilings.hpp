#pragma once

// Lozenge tilings of triangular-lattice regions carrying parameter lines.
//
// Lattice point (x, y) sits at x + y*zeta, zeta = e^{i pi/3}.  U(x, y) has
// corners (x,y), (x+1,y), (x,y+1); D(x, y) has corners (x+1,y), (x+1,y+1),
// (x,y+1).  Edge k of a triangle is its edge of direction k*60 degrees:
//   U(x,y): edge 0 -> D(x,y-1), edge 1 -> D(x-1,y), edge 2 -> D(x,y)
//   D(x,y): edge 0 -> U(x,y+1), edge 1 -> U(x+1,y), edge 2 -> U(x,y)
// The line of family k runs parallel to direction k and crosses the two
// other edges of each triangle it meets.  Family 0 is alpha, 1 beta, 2 gamma.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "arches/error.hpp"
#include "arches/exact.hpp"
#include "arches/linkpat.hpp"
#include "arches/nested.hpp"

namespace arches {

struct Triangle {
    bool up = true;
    int x = 0;
    int y = 0;
    friend bool operator==(const Triangle&, const Triangle&) = default;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Scan order used everywhere: rows bottom to top, then x, U before D.
inline bool scan_less(const Triangle& s, const Triangle& t) {
    if (s.y != t.y) return s.y < t.y;
    if (s.x != t.x) return s.x < t.x;
    return s.up > t.up;
}

enum class WeightMode { difference, q_difference };

struct TilingRegion {
    std::vector<Triangle> triangles;           // scan order
    std::vector<std::array<int, 3>> neighbour; // across edge k, -1 on the boundary
    std::vector<std::array<int, 3>> line;      // line id of family k, -1 if unset
    std::vector<int> line_family;
    std::vector<CycloNum> params;
    struct Glue {
        int t, k, u, l;
    };
    std::vector<Glue> glued; // identified edge pairs (edge k of t ~ edge l of u)
    std::vector<Triangle> dents;

    int size() const noexcept { return static_cast<int>(triangles.size()); }

    int index_of(const Triangle& t) const {
        auto it = std::lower_bound(triangles.begin(), triangles.end(), t, scan_less);
        if (it == triangles.end() || *it != t) return -1;
        return static_cast<int>(it - triangles.begin());
    }

    bool has_lines() const {
        for (const auto& l : line)
            for (int id : l)
                if (id < 0) return false;
        return true;
    }

    /// Line ids of one family, in increasing order.
    std::vector<int> family_lines(int family) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < line_family.size(); ++i)
            if (line_family[i] == family) out.push_back(static_cast<int>(i));
        return out;
    }
};

inline Triangle geometric_neighbour(const Triangle& t, int k) {
    if (t.up) {
        switch (k) {
        case 0: return {false, t.x, t.y - 1};
        case 1: return {false, t.x - 1, t.y};
        default: return {false, t.x, t.y};
        }
    }
    switch (k) {
    case 0: return {true, t.x, t.y + 1};
    case 1: return {true, t.x + 1, t.y};
    default: return {true, t.x, t.y};
    }
}

namespace detail {

// Sorts the triangles, drops dents and fills geometric adjacency.  `line` is
// permuted along with the triangles when present.
inline void finish_region(TilingRegion& r) {
    std::vector<std::size_t> order(r.triangles.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return scan_less(r.triangles[i], r.triangles[j]); });
    std::vector<Triangle> tr;
    std::vector<std::array<int, 3>> ln;
    for (std::size_t i : order) {
        if (std::find(r.dents.begin(), r.dents.end(), r.triangles[i]) != r.dents.end()) continue;
        if (!tr.empty() && tr.back() == r.triangles[i]) throw Error(ErrorKind::InvalidSpec, "repeated triangle in region");
        tr.push_back(r.triangles[i]);
        ln.push_back(r.line.empty() ? std::array<int, 3>{-1, -1, -1} : r.line[i]);
    }
    r.triangles = std::move(tr);
    r.line = std::move(ln);
    r.neighbour.assign(r.triangles.size(), {-1, -1, -1});
    for (int i = 0; i < r.size(); ++i)
        for (int k = 0; k < 3; ++k) r.neighbour[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = r.index_of(geometric_neighbour(r.triangles[static_cast<std::size_t>(i)], k));
}

} // namespace detail

/// Hexagon with sides a, b, c, a, b, c: the triangles whose centroid (cx, cy)
/// satisfies 0 <= cy <= b+c, -c <= cx <= a, 0 <= cx+cy <= a+b.
/// Lines: alpha_{y+1}, beta_{x+c+1}, gamma_{x+y+1} (U) or gamma_{x+y+2} (D).
inline TilingRegion build_hexagon(int a, int b, int c, const ParamSet& p) {
    detail::check_sizes({a, b, c}, p);
    TilingRegion r;
    const int na = b + c, nb = a + c;
    for (const auto& v : p.alphas) r.params.push_back(v), r.line_family.push_back(0);
    for (const auto& v : p.betas) r.params.push_back(v), r.line_family.push_back(1);
    for (const auto& v : p.gammas) r.params.push_back(v), r.line_family.push_back(2);
    for (int y = 0; y < b + c; ++y)
        for (int x = -c; x < a; ++x)
            for (int up = 1; up >= 0; --up) {
                // centroid times 3
                const int off = up ? 1 : 2;
                const int sx = 3 * x + off, sy = 3 * y + off;
                if (sy < 0 || sy > 3 * (b + c) || sx < -3 * c || sx > 3 * a || sx + sy < 0 || sx + sy > 3 * (a + b)) continue;
                r.triangles.push_back({up == 1, x, y});
                const int g = up ? x + y : x + y + 1;
                r.line.push_back({y, na + x + c, na + nb + g});
            }
    detail::finish_region(r);
    return r;
}

inline TilingRegion build_hexagon(int a, int b, int c) {
    ParamSet p;
    p.alphas.assign(static_cast<std::size_t>(b + c), CycloNum(0));
    p.betas.assign(static_cast<std::size_t>(a + c), CycloNum(0));
    p.gammas.assign(static_cast<std::size_t>(a + b), CycloNum(0));
    return build_hexagon(a, b, c, p);
}

/// mate[i] = partner triangle of i.
struct Tiling {
    std::vector<int> mate;
    friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// Edge of t shared with its partner u, or -1.
inline int shared_edge(const TilingRegion& r, int t, int u) {
    for (int k = 0; k < 3; ++k)
        if (r.neighbour[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] == u) return k;
    return -1;
}

/// Weight of the lozenge made of t and its neighbour across edge k.
inline CycloNum lozenge_weight(const TilingRegion& r, int t, int k, WeightMode mode) {
    const auto& ln = r.line[static_cast<std::size_t>(t)];
    auto P = [&](int fam) -> const CycloNum& { return r.params[static_cast<std::size_t>(ln[static_cast<std::size_t>(fam)])]; };
    if (mode == WeightMode::difference) {
        switch (k) {
        case 0: return P(2) - P(1); // gamma - beta
        case 1: return P(0) - P(2); // alpha - gamma
        default: return P(0) - P(1); // alpha - beta
        }
    }
    const CycloNum q = q_power(1), qi = q_power(-1);
    switch (k) {
    case 0: return q * P(1) - qi * P(2);
    case 1: return q * P(2) - qi * P(0);
    default: return q * P(0) - qi * P(1);
    }
}

namespace detail {

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto w : v) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
        return h;
    }
};

// Sum over tilings of the product of weight(t, k) over lozenges, where t is
// the earlier triangle in scan order and k its shared edge.  Memoized on the
// covered set; the first uncovered triangle is always the one placed next.
template <class T, class W>
T tiling_sum(const TilingRegion& r, W weight) {
    const int N = r.size();
    if (N % 2) return T(0);
    std::vector<std::uint64_t> cov(static_cast<std::size_t>((N + 63) / 64), 0);
    auto covered = [&](int i) { return (cov[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1u; };
    auto flip = [&](int i) { cov[static_cast<std::size_t>(i / 64)] ^= std::uint64_t{1} << (i % 64); };
    std::unordered_map<std::vector<std::uint64_t>, T, KeyHash> memo;
    auto rec = [&](auto&& self, int first) -> T {
        while (first < N && covered(first)) ++first;
        if (first == N) return T(1);
        if (auto it = memo.find(cov); it != memo.end()) return it->second;
        T sum(0);
        for (int k = 0; k < 3; ++k) {
            int u = r.neighbour[static_cast<std::size_t>(first)][static_cast<std::size_t>(k)];
            if (u < 0 || covered(u)) continue;
            flip(first);
            flip(u);
            T sub = self(self, first + 1);
            flip(first);
            flip(u);
            if (sub != T(0)) sum += weight(first, k) * sub;
        }
        memo.emplace(cov, sum);
        return sum;
    };
    return rec(rec, 0);
}

} // namespace detail

/// Visits every tiling in scan order, trying edges 0, 1, 2 in turn.
template <class Visit>
void for_each_tiling(const TilingRegion& r, Visit visit) {
    const int N = r.size();
    if (N % 2) return;
    Tiling t;
    t.mate.assign(static_cast<std::size_t>(N), -1);
    auto rec = [&](auto&& self, int first) -> void {
        while (first < N && t.mate[static_cast<std::size_t>(first)] >= 0) ++first;
        if (first == N) {
            visit(static_cast<const Tiling&>(t));
            return;
        }
        for (int k = 0; k < 3; ++k) {
            int u = r.neighbour[static_cast<std::size_t>(first)][static_cast<std::size_t>(k)];
            if (u < 0 || t.mate[static_cast<std::size_t>(u)] >= 0) continue;
            t.mate[static_cast<std::size_t>(first)] = u;
            t.mate[static_cast<std::size_t>(u)] = first;
            self(self, first + 1);
            t.mate[static_cast<std::size_t>(first)] = -1;
            t.mate[static_cast<std::size_t>(u)] = -1;
        }
    };
    rec(rec, 0);
}

inline std::vector<Tiling> enumerate_tilings(const TilingRegion& r) {
    std::vector<Tiling> out;
    for_each_tiling(r, [&](const Tiling& t) { out.push_back(t); });
    return out;
}

inline mpz_class tiling_count(const TilingRegion& r) {
    return detail::tiling_sum<mpz_class>(r, [](int, int) { return mpz_class(1); });
}

inline CycloNum partition_function(const TilingRegion& r, WeightMode mode = WeightMode::difference) {
    if (!r.has_lines()) throw Error(ErrorKind::Precondition, "region has no parameter lines");
    return detail::tiling_sum<CycloNum>(r, [&](int t, int k) { return lozenge_weight(r, t, k, mode); });
}

/// Weight of one tiling.
inline CycloNum tiling_weight(const TilingRegion& r, const Tiling& t, WeightMode mode = WeightMode::difference) {
    CycloNum w(1);
    for (int i = 0; i < r.size(); ++i) {
        int u = t.mate[static_cast<std::size_t>(i)];
        if (u > i) w *= lozenge_weight(r, i, shared_edge(r, i, u), mode);
    }
    return w;
}

// ---- non-intersecting paths -------------------------------------------------

/// A path starts at a U whose edge-2 neighbour is missing, and each step
/// pairs the current U with its D across edge 0 or 1, then passes through
/// that D's edge 2 to the next U.
struct NIPPath {
    int start = -1;
    std::vector<int> steps; // 0 or 1
    friend bool operator==(const NIPPath&, const NIPPath&) = default;
    friend auto operator<=>(const NIPPath&, const NIPPath&) = default;
};

using NIPFamily = std::vector<NIPPath>;

inline NIPFamily nip_extract(const Tiling& t, const TilingRegion& r) {
    NIPFamily out;
    for (int i = 0; i < r.size(); ++i) {
        const auto& tri = r.triangles[static_cast<std::size_t>(i)];
        if (!tri.up || r.neighbour[static_cast<std::size_t>(i)][2] >= 0) continue;
        NIPPath p;
        p.start = i;
        int u = i;
        while (u >= 0) {
            int m = t.mate[static_cast<std::size_t>(u)];
            int k = shared_edge(r, u, m);
            if (k == 2 || k < 0) throw Error(ErrorKind::Precondition, "path meets a background lozenge");
            p.steps.push_back(k);
            u = r.neighbour[static_cast<std::size_t>(m)][2];
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// Inverse of nip_extract: paths first, every other U then pairs across edge 2.
inline Tiling nip_rebuild(const NIPFamily& paths, const TilingRegion& r) {
    Tiling t;
    t.mate.assign(static_cast<std::size_t>(r.size()), -1);
    auto pair = [&](int u, int m) {
        if (m < 0 || t.mate[static_cast<std::size_t>(u)] >= 0 || t.mate[static_cast<std::size_t>(m)] >= 0)
            throw Error(ErrorKind::Precondition, "paths do not describe a tiling");
        t.mate[static_cast<std::size_t>(u)] = m;
        t.mate[static_cast<std::size_t>(m)] = u;
    };
    for (const auto& p : paths) {
        int u = p.start;
        for (int k : p.steps) {
            if (u < 0) throw Error(ErrorKind::Precondition, "path leaves the region");
            int m = r.neighbour[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
            pair(u, m);
            u = r.neighbour[static_cast<std::size_t>(m)][2];
        }
        if (u >= 0) throw Error(ErrorKind::Precondition, "path stops inside the region");
    }
    for (int i = 0; i < r.size(); ++i)
        if (r.triangles[static_cast<std::size_t>(i)].up && t.mate[static_cast<std::size_t>(i)] < 0)
            pair(i, r.neighbour[static_cast<std::size_t>(i)][2]);
    for (int m : t.mate)
        if (m < 0) throw Error(ErrorKind::Precondition, "paths do not describe a tiling");
    return t;
}

/// Right side of the path factorization: prod over D of (alpha - beta) on
/// its lines, times the sum over tilings of prod over path lozenges of
/// weight / (alpha - beta) of the lozenge's D.
inline CycloNum partition_function_paths(const TilingRegion& r) {
    if (!r.has_lines()) throw Error(ErrorKind::Precondition, "region has no parameter lines");
    auto ab = [&](int d) {
        const auto& ln = r.line[static_cast<std::size_t>(d)];
        return r.params[static_cast<std::size_t>(ln[0])] - r.params[static_cast<std::size_t>(ln[1])];
    };
    CycloNum background(1);
    for (int i = 0; i < r.size(); ++i)
        if (!r.triangles[static_cast<std::size_t>(i)].up) background *= ab(i);
    CycloNum sum(0);
    for_each_tiling(r, [&](const Tiling& t) {
        CycloNum w(1);
        for (const auto& p : nip_extract(t, r)) {
            int u = p.start;
            for (int k : p.steps) {
                int m = r.neighbour[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)];
                w *= lozenge_weight(r, u, k, WeightMode::difference) / ab(m);
                u = r.neighbour[static_cast<std::size_t>(m)][2];
            }
        }
        sum += w;
    });
    return background * sum;
}

// ---- symmetry apparatus ----------------------------------------------------

/// (prod (alpha_i - g1)(beta_i - g2) - prod (alpha_i - g2)(beta_i - g1)) / (g1 - g2), i = 1..k+1.
inline CycloNum swap_hexagon_weight(int k, const std::vector<CycloNum>& al, const std::vector<CycloNum>& be,
                                         const CycloNum& g1, const CycloNum& g2) {
    if (k < 0 || al.size() != static_cast<std::size_t>(k + 1) || be.size() != static_cast<std::size_t>(k + 1))
        throw Error(ErrorKind::InconsistentSize, "need k+1 alphas and k+1 betas");
    if (g1 == g2) throw Error(ErrorKind::CoincidentParameters, "gamma_1 = gamma_2");
    CycloNum x(1), y(1);
    for (std::size_t i = 0; i < al.size(); ++i) {
        x *= (al[i] - g1) * (be[i] - g2);
        y *= (al[i] - g2) * (be[i] - g1);
    }
    return (x - y) / (g1 - g2);
}

/// The k x 1 x 1 hexagon is build_hexagon(1, 1, k).  Its partition
/// function is (-1)^k times swap_hexagon_weight: k of its lozenges
/// carry gamma - beta.
inline TilingRegion swap_hexagon_region(int k, const std::vector<CycloNum>& al, const std::vector<CycloNum>& be,
                                             const CycloNum& g1, const CycloNum& g2) {
    if (k < 0 || al.size() != static_cast<std::size_t>(k + 1) || be.size() != static_cast<std::size_t>(k + 1))
        throw Error(ErrorKind::InconsistentSize, "need k+1 alphas and k+1 betas");
    return build_hexagon(1, 1, k, ParamSet{al, be, {g1, g2}});
}

/// prod_{i<=k} (alpha_i - g1)(alpha_i - g2).
inline CycloNum swap_parallelogram_weight(int k, const std::vector<CycloNum>& al, const CycloNum& g1, const CycloNum& g2) {
    if (k < 1 || al.size() != static_cast<std::size_t>(k)) throw Error(ErrorKind::InconsistentSize, "need k >= 1 alphas");
    CycloNum w(1);
    for (const auto& a : al) w *= (a - g1) * (a - g2);
    return w;
}

/// The 2 x k parallelogram with sides along directions 0 and 2: triangles
/// U(g-y, y), D(g-y-1, y) for rows y < k and g in {0, 1}.  Beta lines are
/// present but carry zero; no lozenge of the unique tiling uses them.
inline TilingRegion swap_parallelogram_region(int k, const std::vector<CycloNum>& al, const CycloNum& g1, const CycloNum& g2) {
    if (k < 1 || al.size() != static_cast<std::size_t>(k)) throw Error(ErrorKind::InconsistentSize, "need k >= 1 alphas");
    TilingRegion r;
    for (const auto& a : al) r.params.push_back(a), r.line_family.push_back(0);
    const int beta0 = k;
    for (int j = 0; j < k + 2; ++j) r.params.emplace_back(0), r.line_family.push_back(1);
    const int gamma0 = 2 * k + 2;
    r.params.push_back(g1), r.line_family.push_back(2);
    r.params.push_back(g2), r.line_family.push_back(2);
    for (int y = 0; y < k; ++y)
        for (int g = 0; g < 2; ++g) {
            int x = g - y;
            r.triangles.push_back({true, x, y});
            r.line.push_back({y, beta0 + g, gamma0 + g});
            r.triangles.push_back({false, x - 1, y});
            r.line.push_back({y, beta0 + g + 1, gamma0 + g});
        }
    detail::finish_region(r);
    return r;
}

/// Swaps the parameters of lines i and j (positions within `family`) and
/// compares partition functions.
inline bool check_swap_symmetry(const TilingRegion& r, int family, int i, int j, WeightMode mode = WeightMode::difference) {
    auto ids = r.family_lines(family);
    if (i < 0 || j < 0 || i >= static_cast<int>(ids.size()) || j >= static_cast<int>(ids.size()))
        throw Error(ErrorKind::Precondition, "line index out of range");
    TilingRegion s = r;
    std::swap(s.params[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])], s.params[static_cast<std::size_t>(ids[static_cast<std::size_t>(j)])]);
    return partition_function(r, mode) == partition_function(s, mode);
}

/// gamma_1 := alpha_1 freezes the first alpha row and gamma line:
/// Z(a,b,c) = prod_j (alpha_1 - beta_j) * Z(a, b-1, c) on (alpha[2..], beta, gamma[2..]).
inline bool check_frozen_row(const NestedArchSpec& s, const ParamSet& p) {
    if (s.b < 1) throw Error(ErrorKind::Precondition, "frozen row needs b >= 1");
    ParamSet fr = p;
    fr.gammas[0] = fr.alphas[0];
    CycloNum lhs = partition_function(build_hexagon(s.a, s.b, s.c, fr));
    CycloNum pref(1);
    for (const auto& be : p.betas) pref *= p.alphas[0] - be;
    ParamSet sm{std::vector<CycloNum>(p.alphas.begin() + 1, p.alphas.end()), p.betas,
                std::vector<CycloNum>(p.gammas.begin() + 1, p.gammas.end())};
    return lhs == pref * partition_function(build_hexagon(s.a, s.b - 1, s.c, sm));
}

// ---- region files ------------------------------------------------------------
//
//   # comment
//   line <id> <family> <value>
//   tri U|D <x> <y> [<l0> <l1> <l2>]
//   glue <t> <k> <u> <l>        triangle indices in scan order of the listed triangles
//   dent U|D <x> <y>

inline void write_region(std::ostream& os, const TilingRegion& r) {
    for (std::size_t i = 0; i < r.params.size(); ++i) os << "line " << i << ' ' << r.line_family[i] << ' ' << r.params[i] << '\n';
    for (int i = 0; i < r.size(); ++i) {
        const auto& t = r.triangles[static_cast<std::size_t>(i)];
        const auto& l = r.line[static_cast<std::size_t>(i)];
        os << "tri " << (t.up ? 'U' : 'D') << ' ' << t.x << ' ' << t.y;
        if (l[0] >= 0) os << ' ' << l[0] << ' ' << l[1] << ' ' << l[2];
        os << '\n';
    }
    for (const auto& g : r.glued) os << "glue " << g.t << ' ' << g.k << ' ' << g.u << ' ' << g.l << '\n';
    for (const auto& d : r.dents) os << "dent " << (d.up ? 'U' : 'D') << ' ' << d.x << ' ' << d.y << '\n';
}

inline TilingRegion read_region(std::istream& is) {
    TilingRegion r;
    std::map<int, std::pair<int, CycloNum>> lines;
    std::vector<TilingRegion::Glue> glue;
    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& why) { throw Error(ErrorKind::Parse, "region line " + std::to_string(lineno) + ": " + why); };
    auto orient = [&](const std::string& s) {
        if (s == "U") return true;
        if (s == "D") return false;
        fail("expected U or D");
        return false;
    };
    while (std::getline(is, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "line") {
            int id, fam;
            std::string val;
            if (!(ls >> id >> fam >> val) || fam < 0 || fam > 2 || id < 0) fail("bad line record");
            lines[id] = {fam, CycloNum::parse(val)};
        } else if (kw == "tri") {
            std::string o;
            Triangle t;
            if (!(ls >> o >> t.x >> t.y)) fail("bad tri record");
            t.up = orient(o);
            std::array<int, 3> l{-1, -1, -1};
            if (ls >> l[0]) {
                if (!(ls >> l[1] >> l[2])) fail("tri needs three line ids");
            }
            r.triangles.push_back(t);
            r.line.push_back(l);
        } else if (kw == "glue") {
            TilingRegion::Glue g{};
            if (!(ls >> g.t >> g.k >> g.u >> g.l) || g.k < 0 || g.k > 2 || g.l < 0 || g.l > 2) fail("bad glue record");
            glue.push_back(g);
        } else if (kw == "dent") {
            std::string o;
            Triangle t;
            if (!(ls >> o >> t.x >> t.y)) fail("bad dent record");
            t.up = orient(o);
            r.dents.push_back(t);
        } else {
            fail("unknown record '" + kw + "'");
        }
    }
    int expect = 0;
    for (const auto& [id, v] : lines) {
        if (id != expect++) throw Error(ErrorKind::Parse, "line ids must be 0..m-1");
        r.line_family.push_back(v.first);
        r.params.push_back(v.second);
    }
    for (const auto& l : r.line)
        for (int k = 0; k < 3; ++k)
            if (l[static_cast<std::size_t>(k)] >= static_cast<int>(r.params.size()) ||
                (l[static_cast<std::size_t>(k)] >= 0 && r.line_family[static_cast<std::size_t>(l[static_cast<std::size_t>(k)])] != k))
                throw Error(ErrorKind::Parse, "triangle refers to a missing or misdirected line");
    detail::finish_region(r);
    for (const auto& g : glue) {
        if (g.t < 0 || g.u < 0 || g.t >= r.size() || g.u >= r.size()) throw Error(ErrorKind::Parse, "glue index out of range");
        if (r.triangles[static_cast<std::size_t>(g.t)].up == r.triangles[static_cast<std::size_t>(g.u)].up)
            throw Error(ErrorKind::Parse, "glued triangles must have opposite orientation");
        r.neighbour[static_cast<std::size_t>(g.t)][static_cast<std::size_t>(g.k)] = g.u;
        r.neighbour[static_cast<std::size_t>(g.u)][static_cast<std::size_t>(g.l)] = g.t;
    }
    r.glued = std::move(glue);
    return r;
}

// ---- four little arches, provisional cone geometry -------------------------
//
// The region is a quadrilateral with sides c+d+e, b+c, a+b+e, a+d turning
// by 60 degrees at each corner, closed on a cone of angle 240 degrees.  In
// the development the cone point P is the origin, the corners are B0..B4
// with B4 = B0 rotated by 240 degrees, and the two sides of the cut are
// identified by that rotation.  Heights: +1 along a tile edge in directions
// 0, 120, 240 degrees, -2 along a lozenge diagonal in those directions.
// Tilings are counted in the class h(P) - h(B0) = a - b + c.  Only e = 0
// with a, b, c >= 1 has been matched against FPL counts.

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct FourArchRegion {
    FourArchSpec spec;
    TilingRegion region;
    std::array<LatticePoint, 5> corners; // B0..B4; P is the origin
    int target_height = 0;
};

namespace detail {

inline std::complex<double> embed(double x, double y) {
    return {x + 0.5 * y, y * std::sqrt(3.0) / 2.0};
}

inline std::complex<double> centroid(const Triangle& t) {
    const double o = t.up ? 1.0 / 3.0 : 2.0 / 3.0;
    return embed(t.x + o, t.y + o);
}

// Rotation by 60 degrees about the origin on centroid coordinates times 3.
inline Triangle rotate60(const Triangle& t, int steps) {
    int X = 3 * t.x + (t.up ? 1 : 2), Y = 3 * t.y + (t.up ? 1 : 2);
    for (int s = 0; s < steps; ++s) {
        int nx = -Y, ny = X + Y;
        X = nx;
        Y = ny;
    }
    auto fdiv3 = [](int v) { return v >= 0 ? v / 3 : -((-v + 2) / 3); };
    if (((X % 3) + 3) % 3 == 1) return {true, fdiv3(X - 1), fdiv3(Y - 1)};
    return {false, fdiv3(X - 2), fdiv3(Y - 2)};
}

inline bool inside_polygon(std::complex<double> p, const std::vector<std::complex<double>>& poly) {
    int wn = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto a = poly[i], b = poly[(i + 1) % poly.size()];
        double cr = (b.real() - a.real()) * (p.imag() - a.imag()) - (b.imag() - a.imag()) * (p.real() - a.real());
        if (a.imag() <= p.imag()) {
            if (b.imag() > p.imag() && cr > 0) ++wn;
        } else if (b.imag() <= p.imag() && cr < 0) {
            --wn;
        }
    }
    return wn != 0;
}

inline std::array<LatticePoint, 2> edge_points(const Triangle& t, int k) {
    if (t.up) {
        switch (k) {
        case 0: return {{{t.x, t.y}, {t.x + 1, t.y}}};
        case 1: return {{{t.x, t.y}, {t.x, t.y + 1}}};
        default: return {{{t.x + 1, t.y}, {t.x, t.y + 1}}};
        }
    }
    switch (k) {
    case 0: return {{{t.x, t.y + 1}, {t.x + 1, t.y + 1}}};
    case 1: return {{{t.x + 1, t.y}, {t.x + 1, t.y + 1}}};
    default: return {{{t.x + 1, t.y}, {t.x, t.y + 1}}};
    }
}

} // namespace detail

inline FourArchRegion build_four_arch(const FourArchSpec& s) {
    if (s.a < 1 || s.b < 1 || s.c < 1 || s.d < 0 || s.e != 0)
        throw Error(ErrorKind::Precondition, "four-arch cone geometry is provisional: needs a, b, c >= 1, d >= 0, e = 0");
    FourArchRegion fr;
    fr.spec = s;
    fr.target_height = s.a - s.b + s.c;
    const std::array<int, 4> L{s.c + s.d + s.e, s.b + s.c, s.a + s.b + s.e, s.a + s.d};
    static constexpr int dx[] = {1, 0, -1, -1}, dy[] = {0, 1, 1, 0};
    fr.corners[0] = {s.a - s.c, -(s.a + s.b)};
    for (int k = 0; k < 4; ++k)
        fr.corners[static_cast<std::size_t>(k + 1)] = {fr.corners[static_cast<std::size_t>(k)].x + L[static_cast<std::size_t>(k)] * dx[k],
                                                       fr.corners[static_cast<std::size_t>(k)].y + L[static_cast<std::size_t>(k)] * dy[k]};
    {
        // B4 must be B0 turned by 240 degrees
        LatticePoint b = fr.corners[0];
        for (int r = 0; r < 4; ++r) b = {-b.y, b.x + b.y};
        if (b != fr.corners[4]) throw Error(ErrorKind::InvalidSpec, "cone development does not close");
    }
    const double pi = std::numbers::pi;
    auto B0 = detail::embed(fr.corners[0].x, fr.corners[0].y);
    const double th0 = std::arg(B0);
    std::vector<std::complex<double>> poly{{0.0, 0.0}};
    for (const auto& c : fr.corners) poly.push_back(detail::embed(c.x, c.y));
    auto rel_angle = [&](std::complex<double> c) {
        double a = std::fmod(std::arg(c) - th0, 2 * pi);
        return a < 0 ? a + 2 * pi : a;
    };
    int R = 3;
    for (const auto& p : poly) R = std::max(R, static_cast<int>(std::abs(p)) + 3);
    TilingRegion& r = fr.region;
    const auto tilt = std::polar(1.0, 1e-7);
    for (int y = -3 * R; y < 3 * R; ++y)
        for (int x = -3 * R; x < 3 * R; ++x)
            for (int up = 1; up >= 0; --up) {
                Triangle t{up == 1, x, y};
                auto c = detail::centroid(t);
                if (rel_angle(c) < 4 * pi / 3 - 1e-9 && detail::inside_polygon(c * tilt, poly)) r.triangles.push_back(t);
            }
    detail::finish_region(r);
    auto canon = [&](const Triangle& t) -> int {
        int i = r.index_of(t);
        if (i >= 0) return i;
        double a = rel_angle(detail::centroid(t));
        if (a < 4 * pi / 3 - 1e-9) return -1;
        return r.index_of(detail::rotate60(t, a < 5 * pi / 3 ? 2 : 4));
    };
    for (int i = 0; i < r.size(); ++i)
        for (int k = 0; k < 3; ++k) {
            auto& slot = r.neighbour[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (slot >= 0) continue;
            slot = canon(geometric_neighbour(r.triangles[static_cast<std::size_t>(i)], k));
            if (slot > i) {
                for (int l = 0; l < 3; ++l)
                    if (canon(geometric_neighbour(r.triangles[static_cast<std::size_t>(slot)], l)) == i) r.glued.push_back({i, k, slot, l});
            }
        }
    return fr;
}

/// h(P) - h(B0) for a tiling of the development.
inline int four_arch_apex_height(const FourArchRegion& fr, const Tiling& t) {
    const TilingRegion& r = fr.region;
    std::set<std::pair<LatticePoint, LatticePoint>> diag;
    auto mark = [&](int i, int k) {
        auto e = detail::edge_points(r.triangles[static_cast<std::size_t>(i)], k);
        diag.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
    };
    for (int i = 0; i < r.size(); ++i) mark(i, shared_edge(r, i, t.mate[static_cast<std::size_t>(i)]));
    std::map<LatticePoint, std::vector<std::pair<LatticePoint, int>>> adj;
    auto forward = [](int vx, int vy) { return (vx == 1 && vy == 0) || (vx == -1 && vy == 1) || (vx == 0 && vy == -1); };
    for (int i = 0; i < r.size(); ++i)
        for (int k = 0; k < 3; ++k) {
            auto e = detail::edge_points(r.triangles[static_cast<std::size_t>(i)], k);
            const bool dg = diag.count({std::min(e[0], e[1]), std::max(e[0], e[1])}) > 0;
            const int step = dg ? -2 : 1;
            const int s = forward(e[1].x - e[0].x, e[1].y - e[0].y) ? 1 : -1;
            adj[e[0]].push_back({e[1], s * step});
            adj[e[1]].push_back({e[0], -s * step});
        }
    std::map<LatticePoint, int> h;
    std::queue<LatticePoint> todo;
    h[fr.corners[0]] = 0;
    todo.push(fr.corners[0]);
    while (!todo.empty()) {
        auto p = todo.front();
        todo.pop();
        for (const auto& [nb, dh] : adj[p]) {
            auto it = h.find(nb);
            if (it == h.end()) {
                h[nb] = h[p] + dh;
                todo.push(nb);
            } else if (it->second != h[p] + dh) {
                throw Error(ErrorKind::InconsistentGrid, "height function is not single-valued");
            }
        }
    }
    auto it = h.find({0, 0});
    if (it == h.end()) throw Error(ErrorKind::InconsistentGrid, "cone point is not a vertex of the region");
    return it->second;
}

/// Number of tilings of each apex height class.
inline std::map<int, mpz_class> four_arch_height_classes(const FourArchRegion& fr) {
    std::map<int, mpz_class> out;
    for_each_tiling(fr.region, [&](const Tiling& t) { out[four_arch_apex_height(fr, t)] += 1; });
    return out;
}

inline mpz_class four_arch_tiling_count(const FourArchSpec& s) {
    auto fr = build_four_arch(s);
    auto cls = four_arch_height_classes(fr);
    auto it = cls.find(fr.target_height);
    return it == cls.end() ? mpz_class(0) : it->second;
}

} // namespace arches
