#pragma once

// Word-size prime fields with a cube root of unity, used to run the large
// eliminations modulo several primes; exact values come back through CRT
// and rational reconstruction.

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <vector>

#include "arches/exact.hpp"

namespace arches::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }

/// Deterministic Miller-Rabin for 64-bit n.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (n % sp == 0) return n == sp;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mul(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

/// A prime p = 1 mod 3 together with both primitive cube roots of unity.
struct Field {
    u64 p = 0;
    u64 w1 = 0; ///< image of w under the first embedding
    u64 w2 = 0; ///< the other root, w1^2

    /// Reduction of a rational; nullopt when p divides the denominator.
    std::optional<u64> reduce(const BigRational& r) const {
        mpz_class m(static_cast<unsigned long>(p));
        mpz_class den = r.denominator() % m;
        if (den == 0) return std::nullopt;
        mpz_class num = r.numerator() % m;
        if (num < 0) num += m;
        u64 a = num.get_ui(), b = den.get_ui();
        return mul(a, inv(b, p), p);
    }

    /// Image of x under the embedding w -> root.
    std::optional<u64> reduce(const CycloNum& x, u64 root) const {
        auto a = reduce(x.re_part());
        auto b = reduce(x.om_part());
        if (!a || !b) return std::nullopt;
        return add(*a, mul(*b, root, p), p);
    }
};

/// The k-th prime field below 2^62 (descending, p = 1 mod 3), cached.
inline const Field& field(std::size_t k) {
    static std::deque<Field> cache; // stable references
    static std::mutex mu;
    std::lock_guard lock(mu);
    u64 cand = cache.empty() ? (u64{1} << 62) : cache.back().p;
    while (cache.size() <= k) {
        cand -= (cand % 3 == 1) ? 3 : (cand % 3 == 2 ? 1 : 2);
        while (!is_prime(cand)) cand -= 3;
        Field f;
        f.p = cand;
        for (u64 g = 2;; ++g) {
            u64 r = pow(g, (cand - 1) / 3, cand);
            if (r != 1) {
                f.w1 = r;
                f.w2 = mul(r, r, cand);
                break;
            }
        }
        cache.push_back(f);
    }
    return cache[k];
}

/// Recovers (a, b) of a + b w from its images under the two embeddings.
inline std::pair<u64, u64> split_embeddings(const Field& f, u64 v1, u64 v2) {
    u64 b = mul(sub(v1, v2, f.p), inv(sub(f.w1, f.w2, f.p), f.p), f.p);
    u64 a = sub(v1, mul(b, f.w1, f.p), f.p);
    return {a, b};
}

/// Rational reconstruction of u mod m with |num|, den <= sqrt(m / 2).
inline std::optional<BigRational> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
    mpz_class bound = sqrt(m / 2);
    mpz_class r0 = m, r1 = u, s0 = 0, s1 = 1;
    while (r1 > bound) {
        mpz_class qt = r0 / r1;
        mpz_class r2 = r0 - qt * r1;
        mpz_class s2 = s0 - qt * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    mpz_class g = gcd(r1, s1);
    if (g != 1) return std::nullopt;
    if (s1 < 0) {
        s1 = -s1;
        r1 = -r1;
    }
    return BigRational(r1, s1);
}

/// CRT accumulator for a vector of Q(w) values.
class CycloCRT {
public:
    explicit CycloCRT(std::size_t size) : a_(size), b_(size) {}

    void add(const Field& f, const std::vector<u64>& a, const std::vector<u64>& b) {
        mpz_class p(static_cast<unsigned long>(f.p));
        if (modulus_ == 0) {
            for (std::size_t i = 0; i < a_.size(); ++i) {
                a_[i] = static_cast<unsigned long>(a[i]);
                b_[i] = static_cast<unsigned long>(b[i]);
            }
            modulus_ = p;
            return;
        }
        mpz_class minv;
        mpz_class mm = modulus_ % p;
        mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), p.get_mpz_t());
        auto lift = [&](mpz_class& x, u64 r) {
            mpz_class d = (mpz_class(static_cast<unsigned long>(r)) - x % p) % p;
            if (d < 0) d += p;
            x += modulus_ * ((d * minv) % p);
        };
        for (std::size_t i = 0; i < a_.size(); ++i) {
            lift(a_[i], a[i]);
            lift(b_[i], b[i]);
        }
        modulus_ *= p;
    }

    std::optional<std::vector<CycloNum>> reconstruct() const {
        std::vector<CycloNum> out;
        out.reserve(a_.size());
        for (std::size_t i = 0; i < a_.size(); ++i) {
            auto ra = rational_reconstruct(a_[i], modulus_);
            auto rb = rational_reconstruct(b_[i], modulus_);
            if (!ra || !rb) return std::nullopt;
            out.emplace_back(*ra, *rb);
        }
        return out;
    }

private:
    std::vector<mpz_class> a_, b_;
    mpz_class modulus_ = 0;
};

/// Rank of an n x n matrix over F_p.
inline std::size_t rank(std::vector<u64> m, std::size_t n, u64 p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && m[piv * n + c] == 0) ++piv;
        if (piv == n) continue;
        if (piv != r)
            for (std::size_t k = 0; k < n; ++k) std::swap(m[piv * n + k], m[r * n + k]);
        u64 iv = inv(m[r * n + c], p);
        for (std::size_t i = r + 1; i < n; ++i) {
            u64 f = mul(m[i * n + c], iv, p);
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k)
                if (m[r * n + k]) m[i * n + k] = sub(m[i * n + k], mul(f, m[r * n + k], p), p);
        }
        ++r;
    }
    return r;
}

/// Kernel of a square matrix over F_p; nullopt unless it is one-dimensional.
/// The returned vector has a 1 at the (unique) free column.
inline std::optional<std::vector<u64>> kernel_line(std::vector<u64> m, std::size_t n, u64 p) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && m[piv * n + c] == 0) ++piv;
        if (piv == n) continue;
        if (piv != r)
            for (std::size_t k = 0; k < n; ++k) std::swap(m[piv * n + k], m[r * n + k]);
        u64 iv = inv(m[r * n + c], p);
        for (std::size_t k = c; k < n; ++k) m[r * n + k] = mul(m[r * n + k], iv, p);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            u64 f = m[i * n + c];
            if (f == 0) continue;
            for (std::size_t k = c; k < n; ++k)
                if (m[r * n + k]) m[i * n + k] = sub(m[i * n + k], mul(f, m[r * n + k], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivots.size() + 1 != n) return std::nullopt;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = sub(0, m[i * n + free], p);
    return v;
}

/// Inverse Vandermonde matrix over F_p: coefficients = V^{-1} values.
inline std::vector<u64> inverse_vandermonde(const std::vector<u64>& nodes, u64 p) {
    const std::size_t m = nodes.size();
    std::vector<u64> a(m * 2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        u64 x = 1;
        for (std::size_t j = 0; j < m; ++j) {
            a[i * 2 * m + j] = x;
            x = mul(x, nodes[i], p);
        }
        a[i * 2 * m + m + i] = 1;
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        while (a[piv * 2 * m + c] == 0) ++piv;
        for (std::size_t k = 0; k < 2 * m; ++k) std::swap(a[piv * 2 * m + k], a[c * 2 * m + k]);
        u64 iv = inv(a[c * 2 * m + c], p);
        for (std::size_t k = 0; k < 2 * m; ++k) a[c * 2 * m + k] = mul(a[c * 2 * m + k], iv, p);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == c || a[i * 2 * m + c] == 0) continue;
            u64 f = a[i * 2 * m + c];
            for (std::size_t k = 0; k < 2 * m; ++k) a[i * 2 * m + k] = sub(a[i * 2 * m + k], mul(f, a[c * 2 * m + k], p), p);
        }
    }
    // V maps coefficients to values; rows of V are nodes, so coef = V^{-1} values.
    std::vector<u64> out(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[i * m + j] = a[i * 2 * m + m + j];
    return out;
}

/// In-place tensor-grid interpolation mod p with the same node list on every
/// axis; values are row-major with the last axis fastest.
inline void interpolate_grid(std::vector<u64>& values, std::size_t axes, const std::vector<u64>& nodes, u64 p) {
    const std::size_t m = nodes.size();
    auto vinv = inverse_vandermonde(nodes, p);
    std::size_t total = values.size(), stride = total;
    std::vector<u64> fiber(m);
    for (std::size_t v = 0; v < axes; ++v) {
        stride /= m;
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % m != 0) continue;
            for (std::size_t i = 0; i < m; ++i) fiber[i] = values[base + i * stride];
            for (std::size_t j = 0; j < m; ++j) {
                u64 s = 0;
                for (std::size_t i = 0; i < m; ++i) s = add(s, mul(vinv[j * m + i], fiber[i], p), p);
                values[base + j * stride] = s;
            }
        }
    }
}

} // namespace arches::modular
