#pragma once

// Non-crossing link patterns on 2n points.
//
// Positions are 0-based in the API: position p is circle point p + 1 and
// carries the spectral parameter z_{p+1}.  Points run counterclockwise.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "arches/error.hpp"

namespace arches {

class LinkPattern {
public:
    LinkPattern() = default;

    /// Validates: involution, no fixed point, non-crossing.
    explicit LinkPattern(std::vector<int> mate) : mate_(std::move(mate)) {
        const int N = size();
        if (N % 2 != 0) throw Error(ErrorKind::InvalidSpec, "link pattern on an odd number of points");
        for (int i = 0; i < N; ++i) {
            int j = mate_[static_cast<std::size_t>(i)];
            if (j < 0 || j >= N || j == i || mate_[static_cast<std::size_t>(j)] != i)
                throw Error(ErrorKind::InvalidSpec, "mate is not a fixed-point-free involution");
        }
        // Non-crossing iff the parenthesis reading is balanced with matching partners.
        std::vector<int> stack;
        for (int i = 0; i < N; ++i) {
            int j = mate_[static_cast<std::size_t>(i)];
            if (j > i) {
                stack.push_back(i);
            } else {
                if (stack.empty() || stack.back() != j) throw Error(ErrorKind::InvalidSpec, "crossing arches");
                stack.pop_back();
            }
        }
    }

    static LinkPattern from_word(std::string_view w) {
        std::vector<int> mate(w.size(), -1), stack;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == '(') {
                stack.push_back(static_cast<int>(i));
            } else if (w[i] == ')') {
                if (stack.empty()) throw Error(ErrorKind::Parse, "unbalanced pattern word");
                mate[i] = stack.back();
                mate[static_cast<std::size_t>(stack.back())] = static_cast<int>(i);
                stack.pop_back();
            } else {
                throw Error(ErrorKind::Parse, "pattern word may only contain '(' and ')'");
            }
        }
        if (!stack.empty()) throw Error(ErrorKind::Parse, "unbalanced pattern word");
        return LinkPattern(std::move(mate));
    }

    std::string word() const {
        std::string w;
        for (int i = 0; i < size(); ++i) w += mate(i) > i ? '(' : ')';
        return w;
    }

    int size() const noexcept { return static_cast<int>(mate_.size()); }
    int half() const noexcept { return size() / 2; }
    int mate(int i) const { return mate_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& mates() const noexcept { return mate_; }

    /// Arch between i and its cyclic successor.
    bool has_little_arch(int i) const { return size() > 0 && mate(i) == (i + 1) % size(); }

    /// Pattern shifted by r positions counterclockwise: point i goes to i + r.
    LinkPattern rotated(int r) const {
        const int N = size();
        std::vector<int> m(mate_.size());
        for (int i = 0; i < N; ++i) m[static_cast<std::size_t>(((i + r) % N + N) % N)] = ((mate(i) + r) % N + N) % N;
        return LinkPattern(std::move(m));
    }

    /// Maximal cyclic runs of consecutive points with no arch inside the run.
    /// Each run is listed in cyclic order from its first point.
    std::vector<std::vector<int>> free_sequences() const {
        const int N = size();
        std::vector<std::vector<int>> out;
        if (N == 0) return out;
        int start = 0;
        for (int i = 0; i < N; ++i)
            if (has_little_arch(i)) {
                start = (i + 1) % N;
                break;
            }
        std::vector<int> cur;
        std::vector<bool> in_cur(mate_.size(), false);
        for (int k = 0; k < N; ++k) {
            int i = (start + k) % N;
            if (in_cur[static_cast<std::size_t>(mate(i))]) {
                for (int x : cur) in_cur[static_cast<std::size_t>(x)] = false;
                out.push_back(cur);
                cur.clear();
            }
            cur.push_back(i);
            in_cur[static_cast<std::size_t>(i)] = true;
        }
        out.push_back(cur);
        return out;
    }

    friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
    friend auto operator<=>(const LinkPattern& a, const LinkPattern& b) { return a.mate_ <=> b.mate_; }

private:
    std::vector<int> mate_;
};

/// All non-crossing perfect matchings of 2n points, lexicographic in the mate sequence.
inline std::vector<LinkPattern> enumerate_patterns(int n) {
    if (n < 0) throw Error(ErrorKind::Precondition, "negative pattern size");
    std::vector<LinkPattern> out;
    std::string w;
    auto rec = [&](auto&& self, int open, int close) -> void {
        if (static_cast<int>(w.size()) == 2 * n) {
            out.push_back(LinkPattern::from_word(w));
            return;
        }
        if (open < n) {
            w.push_back('(');
            self(self, open + 1, close);
            w.pop_back();
        }
        if (close < open) {
            w.push_back(')');
            self(self, open, close + 1);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct NestedArchSpec {
    int a = 0;
    int b = 0;
    int c = 0;
    int n() const noexcept { return a + b + c; }
};

/// (a, b | e | c, d): blocks X, Y, Z, T counterclockwise with fans X-Y (b),
/// Y-Z (c), Z-T (d), T-X (a) and the diagonal fan Y-T (e).
struct FourArchSpec {
    int a = 0;
    int b = 0;
    int e = 0;
    int c = 0;
    int d = 0;
    int n() const noexcept { return a + b + e + c + d; }
};

namespace detail {
inline void nest(std::vector<int>& m, int inner_left, int count) {
    for (int k = 0; k < count; ++k) {
        auto l = static_cast<std::size_t>(inner_left - k);
        auto r = static_cast<std::size_t>(inner_left + 1 + k);
        m[l] = static_cast<int>(r);
        m[r] = static_cast<int>(l);
    }
}
} // namespace detail

/// Three fans: c arches alpha|beta, a arches beta|gamma, b arches gamma|alpha.
/// Blocks: alpha = points 1..b+c, beta = next a+c, gamma = last a+b.
inline LinkPattern nested_pattern(const NestedArchSpec& s) {
    if (s.a < 0 || s.b < 0 || s.c < 0 || s.n() == 0) throw Error(ErrorKind::InvalidSpec, "need a, b, c >= 0, a+b+c >= 1");
    const int N = 2 * s.n();
    std::vector<int> m(static_cast<std::size_t>(N), -1);
    detail::nest(m, s.b + s.c - 1, s.c);
    detail::nest(m, s.b + 2 * s.c + s.a - 1, s.a);
    // b arches around the seam: innermost joins points 2n and 1
    for (int k = 0; k < s.b; ++k) {
        auto l = static_cast<std::size_t>(N - 1 - k);
        auto r = static_cast<std::size_t>(k);
        m[l] = static_cast<int>(r);
        m[r] = static_cast<int>(l);
    }
    return LinkPattern(std::move(m));
}

/// Provisional layout of the four-little-arch pattern (a, b | e | c, d).
/// X = points 1..a+b (a points towards T, then b towards Y), Y = b+e+c,
/// Z = c+d, T = d+e+a.  The fan a crosses the seam between 2n and 1.
inline LinkPattern four_arch_pattern(const FourArchSpec& s) {
    if (s.a < 0 || s.b < 0 || s.e < 0 || s.c < 0 || s.d < 0 || s.n() == 0)
        throw Error(ErrorKind::InvalidSpec, "four-arch parameters must be non-negative with positive sum");
    const int N = 2 * s.n();
    std::vector<int> m(static_cast<std::size_t>(N), -1);
    const int x0 = 0, y0 = s.a + s.b, z0 = y0 + s.b + s.e + s.c, t0 = z0 + s.c + s.d;
    detail::nest(m, x0 + s.a + s.b - 1, s.b);           // X-Y
    detail::nest(m, y0 + s.b + s.e + s.c - 1, s.c);     // Y-Z
    detail::nest(m, z0 + s.c + s.d - 1, s.d);           // Z-T
    for (int k = 0; k < s.e; ++k) {                      // Y-T diagonal
        auto l = static_cast<std::size_t>(y0 + s.b + s.e - 1 - k);
        auto r = static_cast<std::size_t>(t0 + s.d + k);
        m[l] = static_cast<int>(r);
        m[r] = static_cast<int>(l);
    }
    for (int k = 0; k < s.a; ++k) {                      // T-X around the seam
        auto l = static_cast<std::size_t>(N - 1 - k);
        auto r = static_cast<std::size_t>(x0 + k);
        m[l] = static_cast<int>(r);
        m[r] = static_cast<int>(l);
    }
    return LinkPattern(std::move(m));
}

/// Positions i with an arch joining i and i + 1 (cyclically).
inline std::vector<int> little_arches(const LinkPattern& p) {
    std::vector<int> out;
    for (int i = 0; i < p.size(); ++i)
        if (p.has_little_arch(i)) out.push_back(i);
    return out;
}

/// Removes the little arch (i, i+1); the remaining points keep their cyclic
/// order and are renumbered from the smallest surviving position.
inline LinkPattern remove_little_arch(const LinkPattern& p, int i) {
    const int N = p.size();
    if (i < 0 || i >= N || !p.has_little_arch(i))
        throw Error(ErrorKind::NoLittleArch, "no little arch at position " + std::to_string(i));
    const int j = (i + 1) % N;
    std::vector<int> pos(static_cast<std::size_t>(N), -1);
    int k = 0;
    for (int x = 0; x < N; ++x)
        if (x != i && x != j) pos[static_cast<std::size_t>(x)] = k++;
    std::vector<int> m(static_cast<std::size_t>(N - 2));
    for (int x = 0; x < N; ++x)
        if (x != i && x != j) m[static_cast<std::size_t>(pos[static_cast<std::size_t>(x)])] = pos[static_cast<std::size_t>(p.mate(x))];
    return LinkPattern(std::move(m));
}

/// Inverse of remove_little_arch: the result has a little arch at (i, i+1)
/// and size p.size() + 2.
inline LinkPattern insert_little_arch(const LinkPattern& p, int i) {
    const int N = p.size() + 2;
    if (i < 0 || i >= N) throw Error(ErrorKind::Precondition, "insertion position out of range");
    const int j = (i + 1) % N;
    std::vector<int> old_to_new;
    for (int x = 0; x < N; ++x)
        if (x != i && x != j) old_to_new.push_back(x);
    std::vector<int> m(static_cast<std::size_t>(N));
    for (int x = 0; x < p.size(); ++x)
        m[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(x)])] = old_to_new[static_cast<std::size_t>(p.mate(x))];
    m[static_cast<std::size_t>(i)] = j;
    m[static_cast<std::size_t>(j)] = i;
    return LinkPattern(std::move(m));
}

} // namespace arches
