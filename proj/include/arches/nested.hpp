#pragma once

// Closed forms for the nested-arch quotient Phi_{a,b,c}(alpha; beta; gamma):
// subset sum (the reference definition), contour-integral determinant,
// path-propagator determinant, rectangular Schur specialization, and the
// homogeneous value.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "arches/error.hpp"
#include "arches/exact.hpp"
#include "arches/linalg.hpp"
#include "arches/linkpat.hpp"
#include "arches/mvpoly.hpp"

namespace arches {

struct ParamSet {
    std::vector<CycloNum> alphas; ///< b + c
    std::vector<CycloNum> betas;  ///< a + c
    std::vector<CycloNum> gammas; ///< a + b
};

namespace detail {

inline void check_sizes(const NestedArchSpec& s, const ParamSet& p) {
    if (s.a < 0 || s.b < 0 || s.c < 0) throw Error(ErrorKind::InvalidSpec, "negative arch count");
    if (p.alphas.size() != static_cast<std::size_t>(s.b + s.c) || p.betas.size() != static_cast<std::size_t>(s.a + s.c) ||
        p.gammas.size() != static_cast<std::size_t>(s.a + s.b))
        throw Error(ErrorKind::InconsistentSize, "parameter counts must be (b+c, a+c, a+b)");
}

inline void require_distinct_alphas(const std::vector<CycloNum>& al) {
    for (std::size_t i = 0; i < al.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (al[i] == al[j]) throw Error(ErrorKind::CoincidentParameters, "two alphas coincide");
}

inline void require_separated(const std::vector<CycloNum>& al, const std::vector<CycloNum>& be) {
    for (const auto& x : al)
        for (const auto& y : be)
            if (x == y) throw Error(ErrorKind::PoleCollision, "an alpha pole coincides with a beta pole");
}

/// All k-subsets of {0..m-1} in lexicographic order, as index vectors.
inline std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// sum over the poles alpha_i of num(z) / (prod_i (z - alpha_i) * prod_j (z - beta_j)),
/// each pole simple; num is supplied as a callback.
template <class Num>
CycloNum alpha_residues(const std::vector<CycloNum>& al, const std::vector<CycloNum>& be, Num&& num) {
    CycloNum total;
    for (std::size_t i = 0; i < al.size(); ++i) {
        const CycloNum& z = al[i];
        CycloNum den(1);
        for (std::size_t k = 0; k < al.size(); ++k)
            if (k != i) den *= z - al[k];
        for (const auto& b : be) den *= z - b;
        if (den.is_zero()) throw Error(ErrorKind::PoleCollision, "residue at a non-simple pole");
        total += num(z) / den;
    }
    return total;
}

inline CycloNum prod_diff(const CycloNum& z, const std::vector<CycloNum>& xs) {
    CycloNum r(1);
    for (const auto& x : xs) r *= z - x;
    return r;
}

/// xs[from-1 .. to-1] (1-based, inclusive); empty when to < from.
inline std::vector<CycloNum> slice(const std::vector<CycloNum>& xs, int from, int to) {
    std::vector<CycloNum> out;
    for (int i = from; i <= to; ++i) out.push_back(xs.at(static_cast<std::size_t>(i - 1)));
    return out;
}

} // namespace detail

/// Subset-sum formula, the reference definition of Phi.
inline CycloNum phi_subset(const NestedArchSpec& s, const ParamSet& p) {
    detail::check_sizes(s, p);
    const int m = s.b + s.c;
    if (s.c > 0 && s.c < m) detail::require_distinct_alphas(p.alphas);
    CycloNum total;
    for (const auto& I : detail::subsets(m, s.c)) {
        std::vector<bool> in(static_cast<std::size_t>(m), false);
        for (int i : I) in[static_cast<std::size_t>(i)] = true;
        CycloNum num(1), den(1);
        for (int i = 0; i < m && !num.is_zero(); ++i) {
            const auto& al = p.alphas[static_cast<std::size_t>(i)];
            if (in[static_cast<std::size_t>(i)]) {
                num *= detail::prod_diff(al, p.gammas);
                for (int j = 0; j < m; ++j)
                    if (!in[static_cast<std::size_t>(j)]) den *= al - p.alphas[static_cast<std::size_t>(j)];
            } else {
                num *= detail::prod_diff(al, p.betas);
            }
        }
        if (!num.is_zero()) total += num / den;
    }
    return total;
}

/// prod (alpha_i - beta_j) over 1 <= i <= b+c, 1 <= j <= a+c with lo < i+j <= hi.
inline CycloNum alpha_beta_product(const ParamSet& p, int lo, int hi) {
    CycloNum r(1);
    for (std::size_t i = 1; i <= p.alphas.size(); ++i)
        for (std::size_t j = 1; j <= p.betas.size(); ++j) {
            int s = static_cast<int>(i + j);
            if (s > lo && s <= hi) r *= p.alphas[i - 1] - p.betas[j - 1];
        }
    return r;
}

/// Contour-integral determinant with the polynomial families
///   P_l = (z - alpha_1)..(z - alpha_{l-1}) (z - beta_1)..(z - beta_{c-l}),
///   Q_m = (z - alpha_{b+m+1})..(z - alpha_{b+c}) (z - beta_{a+c+2-m})..(z - beta_{a+c}),
/// det P = prod_{i+j<=c}(alpha_i - beta_j), det Q = prod_{i+j>=a+b+c+2}(alpha_i - beta_j).
inline CycloNum phi_det(const NestedArchSpec& s, const ParamSet& p) {
    detail::check_sizes(s, p);
    const int a = s.a, b = s.b, c = s.c;
    CycloNum full = alpha_beta_product(p, 0, a + b + 2 * c);
    if (c == 0) return full;
    detail::require_distinct_alphas(p.alphas);
    detail::require_separated(p.alphas, p.betas);
    Matrix M(static_cast<std::size_t>(c), static_cast<std::size_t>(c));
    for (int l = 1; l <= c; ++l) {
        auto pa = detail::slice(p.alphas, 1, l - 1), pb = detail::slice(p.betas, 1, c - l);
        for (int m = 1; m <= c; ++m) {
            auto qa = detail::slice(p.alphas, b + m + 1, b + c), qb = detail::slice(p.betas, a + c + 2 - m, a + c);
            M(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(m - 1)) =
                detail::alpha_residues(p.alphas, p.betas, [&](const CycloNum& z) {
                    return detail::prod_diff(z, pa) * detail::prod_diff(z, pb) * detail::prod_diff(z, qa) *
                           detail::prod_diff(z, qb) * detail::prod_diff(z, p.gammas);
                });
        }
    }
    CycloNum detP(1), detQ(1);
    for (int i = 1; i <= b + c; ++i)
        for (int j = 1; j <= a + c; ++j) {
            if (i + j <= c) detP *= p.alphas[static_cast<std::size_t>(i - 1)] - p.betas[static_cast<std::size_t>(j - 1)];
            if (i + j >= a + b + c + 2) detQ *= p.alphas[static_cast<std::size_t>(i - 1)] - p.betas[static_cast<std::size_t>(j - 1)];
        }
    return full / (detP * detQ) * determinant(std::move(M));
}

/// Weighted single-path enumeration F_{a,b;1}: (alpha_{b+1} - beta_{a+1}) times
/// the residue sum at the alphas.  Zero when a or b is negative.
inline CycloNum propagator_single(int a, int b, const std::vector<CycloNum>& al, const std::vector<CycloNum>& be,
                                  const std::vector<CycloNum>& ga) {
    if (a < 0 || b < 0) return CycloNum(0);
    if (al.size() != static_cast<std::size_t>(b + 1) || be.size() != static_cast<std::size_t>(a + 1) ||
        ga.size() != static_cast<std::size_t>(a + b))
        throw Error(ErrorKind::InconsistentSize, "propagator needs b+1 alphas, a+1 betas, a+b gammas");
    detail::require_distinct_alphas(al);
    detail::require_separated(al, be);
    CycloNum r = detail::alpha_residues(al, be, [&](const CycloNum& z) { return detail::prod_diff(z, ga); });
    return (al.back() - be.back()) * r;
}

/// Path route: prefactor over i+j in (c, a+b+c] times det of shifted single-path propagators.
inline CycloNum phi_lgv(const NestedArchSpec& s, const ParamSet& p) {
    detail::check_sizes(s, p);
    const int a = s.a, b = s.b, c = s.c;
    if (c == 0) return alpha_beta_product(p, 0, a + b);
    detail::require_distinct_alphas(p.alphas);
    detail::require_separated(p.alphas, p.betas);
    Matrix M(static_cast<std::size_t>(c), static_cast<std::size_t>(c));
    for (int l = 1; l <= c; ++l)
        for (int m = 1; m <= c; ++m) {
            int aa = a + l - m, bb = b + m - l;
            if (aa < 0 || bb < 0) continue;
            M(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(m - 1)) =
                propagator_single(aa, bb, detail::slice(p.alphas, l, b + m), detail::slice(p.betas, c + 1 - l, a + c + 1 - m),
                                  p.gammas);
        }
    return alpha_beta_product(p, c, a + b + c) * determinant(std::move(M));
}

/// Sign s with phi(beta_{a+c} := alpha_{b+c}) = s * prod_k (alpha_{b+c} - gamma_k) * phi(a, b, c-1)
/// on the reduced parameters; nullopt if neither sign fits.
inline std::optional<int> recurrence_sign(const NestedArchSpec& s, const ParamSet& p) {
    detail::check_sizes(s, p);
    if (s.c < 1) throw Error(ErrorKind::Precondition, "recurrence needs c >= 1");
    ParamSet lhs_p = p;
    lhs_p.betas.back() = p.alphas.back();
    CycloNum lhs = phi_subset(s, lhs_p);
    ParamSet red{std::vector<CycloNum>(p.alphas.begin(), p.alphas.end() - 1),
                 std::vector<CycloNum>(p.betas.begin(), p.betas.end() - 1), p.gammas};
    CycloNum rhs = detail::prod_diff(p.alphas.back(), p.gammas) * phi_subset({s.a, s.b, s.c - 1}, red);
    if (lhs == rhs) return rhs.is_zero() ? std::optional<int>{} : std::optional<int>{1};
    if (lhs == -rhs) return -1;
    return std::nullopt;
}

inline bool check_recurrence(const NestedArchSpec& s, const ParamSet& p, int sign) {
    detail::check_sizes(s, p);
    if (s.c < 1) throw Error(ErrorKind::Precondition, "recurrence needs c >= 1");
    ParamSet lhs_p = p;
    lhs_p.betas.back() = p.alphas.back();
    ParamSet red{std::vector<CycloNum>(p.alphas.begin(), p.alphas.end() - 1),
                 std::vector<CycloNum>(p.betas.begin(), p.betas.end() - 1), p.gammas};
    CycloNum rhs = detail::prod_diff(p.alphas.back(), p.gammas) * phi_subset({s.a, s.b, s.c - 1}, red);
    return phi_subset(s, lhs_p) == (sign > 0 ? rhs : -rhs);
}

/// Complete homogeneous symmetric polynomials h_0..h_k of xs.
inline std::vector<CycloNum> complete_homogeneous(const std::vector<CycloNum>& xs, int k) {
    std::vector<CycloNum> h(static_cast<std::size_t>(std::max(k, 0) + 1));
    h[0] = CycloNum(1);
    for (const auto& x : xs)
        for (int d = 1; d <= k; ++d) h[static_cast<std::size_t>(d)] += x * h[static_cast<std::size_t>(d - 1)];
    return h;
}

/// Schur polynomial of the b x c rectangle (b rows of length c), by Jacobi-Trudi.
inline CycloNum schur_rect(int b, int c, const std::vector<CycloNum>& x) {
    if (b < 0 || c < 0) throw Error(ErrorKind::Precondition, "negative rectangle");
    if (b == 0 || c == 0) return CycloNum(1);
    if (static_cast<std::size_t>(b) > x.size()) return CycloNum(0);
    auto h = complete_homogeneous(x, c + b - 1);
    Matrix M(static_cast<std::size_t>(b), static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            int k = c - i + j;
            if (k >= 0) M(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = h[static_cast<std::size_t>(k)];
        }
    return determinant(std::move(M));
}

/// Schur polynomial of any partition by summing semistandard tableaux; small test oracle.
inline CycloNum schur_tableaux(const std::vector<int>& shape, const std::vector<CycloNum>& x) {
    std::vector<std::vector<int>> t;
    for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
    CycloNum total;
    const int N = static_cast<int>(x.size());
    auto rec = [&](auto&& self, std::size_t k, const CycloNum& w) -> void {
        if (k == cells.size()) {
            total += w;
            return;
        }
        auto [r, c] = cells[k];
        int lo = 0;
        if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v < N; ++v) {
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            self(self, k + 1, w * x[static_cast<std::size_t>(v)]);
        }
    };
    rec(rec, 0, CycloNum(1));
    return total;
}

/// Phi at alpha_i = alpha, beta_j = beta: C' s_{b x c}(Gamma) with
/// C' = (alpha - beta)^{ab} prod_k (alpha - gamma_k)^c and Gamma eigenvalues
/// (gamma_k - beta)/(alpha - gamma_k).  With (gamma_k - alpha)^c instead the
/// result is off by (-1)^{c(a+b)}.
inline CycloNum phi_schur_specialized(const NestedArchSpec& s, const CycloNum& alpha, const CycloNum& beta,
                                      const std::vector<CycloNum>& gammas) {
    if (gammas.size() != static_cast<std::size_t>(s.a + s.b)) throw Error(ErrorKind::InconsistentSize, "need a+b gammas");
    if (alpha == beta) throw Error(ErrorKind::PoleCollision, "alpha equals beta");
    CycloNum cp = (alpha - beta).pow(static_cast<long>(s.a) * s.b);
    std::vector<CycloNum> ev;
    for (const auto& g : gammas) {
        if (g == alpha) throw Error(ErrorKind::PoleCollision, "gamma equals alpha");
        cp *= (alpha - g).pow(s.c);
        ev.push_back((g - beta) / (alpha - g));
    }
    return cp * schur_rect(s.b, s.c, ev);
}

/// phi_subset at all alphas equal to `alpha` and all betas equal to `beta`,
/// reached by interpolating e -> Phi(alpha + e, alpha + 2e, ...) and setting e = 0.
inline CycloNum phi_subset_coincident(const NestedArchSpec& s, const CycloNum& alpha, const CycloNum& beta,
                                      const std::vector<CycloNum>& gammas) {
    const int deg = s.a * s.b + s.b * s.c + s.c * s.a;
    const int m = s.b + s.c;
    // Lagrange at 0 through e = 1..deg+1
    CycloNum total;
    for (int k = 1; k <= deg + 1; ++k) {
        ParamSet p;
        for (int i = 1; i <= m; ++i) p.alphas.push_back(alpha + CycloNum(static_cast<long>(i) * k));
        p.betas.assign(static_cast<std::size_t>(s.a + s.c), beta);
        p.gammas = gammas;
        BigRational w(1);
        for (int j = 1; j <= deg + 1; ++j)
            if (j != k) w *= BigRational(j, j - k);
        total += phi_subset(s, p) * w;
    }
    return total;
}

/// prod_{i<=a, j<=b, k<=c} (i+j+k-1)/(i+j+k-2).
inline mpz_class macmahon(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw Error(ErrorKind::Precondition, "negative box");
    BigRational r(1);
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) r *= BigRational(i + j + k - 1, i + j + k - 2);
    if (!r.is_integer()) throw Error(ErrorKind::Precondition, "MacMahon product is not integral");
    return r.numerator();
}

/// Homogeneous Phi (alpha = 1, beta = q^2, gamma = q) through the Schur form.
inline CycloNum phi_homogeneous(const NestedArchSpec& s) {
    return phi_schur_specialized(s, CycloNum(1), q_power(2), std::vector<CycloNum>(static_cast<std::size_t>(s.a + s.b), q_power(1)));
}

inline bool homogeneous_check(int a, int b, int c) {
    if (a + b + c < 1) throw Error(ErrorKind::Precondition, "need a+b+c >= 1");
    CycloNum phi = phi_homogeneous({a, b, c});
    mpz_class three_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(a * b + b * c + c * a));
    mpz_class m = macmahon(a, b, c);
    return phi.norm_sq() == BigRational(mpq_class(three_pow * m * m));
}

/// Phase of the homogeneous value: Phi / ((1 + 2w)^{ab+bc+ca} * macmahon), a sixth root of unity
/// when the check holds ((1 + 2w)^2 = -3).
inline CycloNum homogeneous_phase(int a, int b, int c) {
    CycloNum phi = phi_homogeneous({a, b, c});
    CycloNum sqrt_m3 = CycloNum(1) + CycloNum::omega() * BigRational(2);
    return phi / (sqrt_m3.pow(a * b + b * c + c * a) * CycloNum(BigRational(mpq_class(macmahon(a, b, c)))));
}

/// Random ParamSet: integers from [1, 10^6], alphas distinct and disjoint from betas.
inline ParamSet random_params(std::mt19937_64& rng, const NestedArchSpec& s) {
    std::uniform_int_distribution<long> dist(1, 1000000);
    std::set<long> used_alpha;
    ParamSet p;
    while (p.alphas.size() < static_cast<std::size_t>(s.b + s.c)) {
        long v = dist(rng);
        if (used_alpha.insert(v).second) p.alphas.emplace_back(v);
    }
    while (p.betas.size() < static_cast<std::size_t>(s.a + s.c)) {
        long v = dist(rng);
        if (!used_alpha.count(v)) p.betas.emplace_back(v);
    }
    for (int k = 0; k < s.a + s.b; ++k) p.gammas.emplace_back(dist(rng));
    return p;
}

/// Table a1.., b1.., g1.. for symbolic Phi.
inline TablePtr phi_table(const NestedArchSpec& s) {
    std::vector<std::string> names;
    for (int i = 1; i <= s.b + s.c; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= s.a + s.c; ++i) names.push_back("b" + std::to_string(i));
    for (int i = 1; i <= s.a + s.b; ++i) names.push_back("g" + std::to_string(i));
    return std::make_shared<const VarTable>(std::move(names));
}

/// Symbolic subset sum: every term is brought over the alpha Vandermonde
/// prod_{i<j}(a_i - a_j), summed, and the Vandermonde is divided out exactly.
inline MultiPoly phi_subset_symbolic(const NestedArchSpec& s) {
    auto t = phi_table(s);
    const int m = s.b + s.c, nb = s.a + s.c, ng = s.a + s.b;
    auto A = [&](int i) { return static_cast<std::size_t>(i); };
    auto B = [&](int j) { return static_cast<std::size_t>(m + j); };
    auto G = [&](int k) { return static_cast<std::size_t>(m + nb + k); };
    const CycloNum one(1), mone(-1);
    MultiPoly total(t);
    for (const auto& I : detail::subsets(m, s.c)) {
        std::vector<bool> in(static_cast<std::size_t>(m), false);
        for (int i : I) in[static_cast<std::size_t>(i)] = true;
        MultiPoly term = MultiPoly::constant(t, one);
        int sign = 1;
        for (int i = 0; i < m; ++i) {
            if (in[static_cast<std::size_t>(i)])
                for (int k = 0; k < ng; ++k) term *= MultiPoly::linear(t, A(i), one, G(k), mone);
            else
                for (int j = 0; j < nb; ++j) term *= MultiPoly::linear(t, A(i), one, B(j), mone);
        }
        // V / prod_{i in I, j not in I}(a_i - a_j): pairs on the same side survive
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                if (in[static_cast<std::size_t>(i)] == in[static_cast<std::size_t>(j)])
                    term *= MultiPoly::linear(t, A(i), one, A(j), mone);
                else if (!in[static_cast<std::size_t>(i)])
                    sign = -sign; // (a_i - a_j) with i outside, j inside = -(a_j - a_i)
            }
        total += sign > 0 ? term : term * mone;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto d = total.divide_linear(A(i), one, A(j), mone);
            if (!d) throw Error(ErrorKind::Precondition, "Vandermonde division left a remainder");
            total = std::move(*d);
        }
    return total;
}

// ---- link to the loop model ------------------------------------------------

/// Decoded parameters of a nested pattern: z = (alpha, q^2 beta, q gamma) block by block.
inline ParamSet decode_nested(const NestedArchSpec& s, std::span<const CycloNum> z) {
    if (z.size() != static_cast<std::size_t>(2 * s.n())) throw Error(ErrorKind::InconsistentSize, "need 2n spectral parameters");
    ParamSet p;
    const CycloNum to_beta = q_power(-2), to_gamma = q_power(-1);
    std::size_t k = 0;
    for (int i = 0; i < s.b + s.c; ++i) p.alphas.push_back(z[k++]);
    for (int i = 0; i < s.a + s.c; ++i) p.betas.push_back(z[k++] * to_beta);
    for (int i = 0; i < s.a + s.b; ++i) p.gammas.push_back(z[k++] * to_gamma);
    return p;
}

/// prod over the three blocks of prod_{i<j} (q z_i - q^-1 z_j).
inline CycloNum block_prefactor(const NestedArchSpec& s, std::span<const CycloNum> z) {
    const CycloNum q = q_power(1), qi = q_power(-1);
    CycloNum f(1);
    std::size_t start = 0;
    for (int len : {s.b + s.c, s.a + s.c, s.a + s.b}) {
        for (std::size_t i = start; i < start + static_cast<std::size_t>(len); ++i)
            for (std::size_t j = i + 1; j < start + static_cast<std::size_t>(len); ++j) f *= q * z[i] - qi * z[j];
        start += static_cast<std::size_t>(len);
    }
    return f;
}

/// Constant relating the normalized ground state to the closed form:
/// Psi_{a,b,c}(z) = unit * block_prefactor(z) * Phi(decoded z), with
/// unit = (-1)^{n(n-1)/2 + c(n-1)} q^{a(b-c)}.
inline CycloNum nested_unit(const NestedArchSpec& s) {
    const long n = s.n();
    CycloNum u = q_power(static_cast<long>(s.a) * (s.b - s.c));
    return ((n * (n - 1) / 2 + s.c * (n - 1)) % 2) ? -u : u;
}

inline CycloNum nested_component(const NestedArchSpec& s, std::span<const CycloNum> z) {
    return nested_unit(s) * block_prefactor(s, z) * phi_subset(s, decode_nested(s, z));
}

} // namespace arches
