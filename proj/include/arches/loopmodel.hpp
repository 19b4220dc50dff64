#pragma once

// Inhomogeneous O(1) loop model on link patterns of 2n points: the
// transfer matrix, its exact ground state, and the checks of the
// factorization, wheel and degree properties.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <tuple>
#include <vector>

#include "arches/exact.hpp"
#include "arches/linalg.hpp"
#include "arches/linkpat.hpp"
#include "arches/modular.hpp"
#include "arches/mvpoly.hpp"

namespace arches {

/// TURN_A pairs (W,S),(N,E); TURN_B pairs (W,N),(S,E).
enum class Plaquette : std::uint8_t { TurnA = 0, TurnB = 1 };

/// Site weights of the two plaquettes.  TURN_B carries
/// (q z - q^-1 t)/(q t - q^-1 z) and TURN_A carries (z - t)/(q t - q^-1 z);
/// the two always sum to 1.
struct SiteWeights {
    CycloNum turn_a;
    CycloNum turn_b;
};

inline SiteWeights site_weights(const CycloNum& t, const CycloNum& z) {
    const CycloNum q = q_power(1), qi = q_power(-1);
    CycloNum den = q * t - qi * z;
    if (den.is_zero()) throw Error(ErrorKind::SingularWeight, "q t - q^-1 z vanishes");
    CycloNum inv = den.inv();
    return {(z - t) * inv, (q * z - qi * t) * inv};
}

/// Combinatorial part of the transfer matrix: for every plaquette strip
/// (bit i set = TURN_B at site i) and every pattern, the resulting pattern.
/// Site i's east edge is glued to site i+1's west edge; the seam sits
/// between site 2n and site 1.
class StripTable {
public:
    explicit StripTable(int n) : n_(n), patterns_(enumerate_patterns(n)) {
        const int N = 2 * n;
        index_.clear();
        for (std::size_t k = 0; k < patterns_.size(); ++k) index_.emplace(patterns_[k].mates(), static_cast<int>(k));
        const std::size_t configs = std::size_t{1} << N;
        target_.resize(configs * patterns_.size());
        // nodes: S_i = i, N_i = N + i, h_i = 2N + i (h_i = east of site i = west of site i+1)
        std::vector<int> adj(static_cast<std::size_t>(3 * N) * 2);
        std::vector<int> deg(static_cast<std::size_t>(3 * N));
        std::vector<int> mate(static_cast<std::size_t>(N));
        for (std::size_t c = 0; c < configs; ++c) {
            for (std::size_t p = 0; p < patterns_.size(); ++p) {
                std::fill(deg.begin(), deg.end(), 0);
                auto link = [&](int x, int y) {
                    adj[static_cast<std::size_t>(2 * x + deg[static_cast<std::size_t>(x)]++)] = y;
                    adj[static_cast<std::size_t>(2 * y + deg[static_cast<std::size_t>(y)]++)] = x;
                };
                for (int i = 0; i < N; ++i) {
                    int S = i, Nn = N + i, W = 2 * N + (i + N - 1) % N, E = 2 * N + i;
                    if ((c >> i) & 1U) {
                        link(W, Nn);
                        link(S, E);
                    } else {
                        link(W, S);
                        link(Nn, E);
                    }
                }
                const auto& pm = patterns_[p];
                for (int i = 0; i < N; ++i)
                    if (i < pm.mate(i)) link(i, pm.mate(i));
                std::fill(mate.begin(), mate.end(), -1);
                for (int i = 0; i < N; ++i) {
                    if (mate[static_cast<std::size_t>(i)] >= 0) continue;
                    int prev = -1, cur = N + i;
                    while (true) {
                        int a0 = adj[static_cast<std::size_t>(2 * cur)];
                        int nxt = (deg[static_cast<std::size_t>(cur)] == 1 || a0 != prev) ? a0
                                                                                          : adj[static_cast<std::size_t>(2 * cur + 1)];
                        prev = cur;
                        cur = nxt;
                        if (cur >= N && cur < 2 * N) break;
                    }
                    mate[static_cast<std::size_t>(i)] = cur - N;
                    mate[static_cast<std::size_t>(cur - N)] = i;
                }
                target_[c * patterns_.size() + p] = index_.at(mate);
            }
        }
    }

    int n() const noexcept { return n_; }
    const std::vector<LinkPattern>& patterns() const noexcept { return patterns_; }
    std::size_t dim() const noexcept { return patterns_.size(); }
    int index_of(const LinkPattern& p) const { return index_.at(p.mates()); }
    int target(std::size_t config, std::size_t pattern) const { return target_[config * patterns_.size() + pattern]; }

    /// Shared, lazily built table for size n.
    static const StripTable& get(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<StripTable>> cache;
        if (n < 1 || n > 6) throw Error(ErrorKind::SizeLimit, "strip enumeration supports 1 <= n <= 6");
        std::lock_guard lock(mu);
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<StripTable>(n);
        return *slot;
    }

private:
    int n_;
    std::vector<LinkPattern> patterns_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> target_;
};

struct TransferMatrix {
    int n = 0;
    CycloNum t;
    std::vector<CycloNum> z;
    Matrix entries; ///< entries(target, source), indexed by enumerate_patterns(n)
};

namespace detail {
/// Strip sum with site weights (wa[i], wb[i]) for TURN_A / TURN_B.
inline Matrix strip_sum(const StripTable& table, const std::vector<CycloNum>& wa, const std::vector<CycloNum>& wb) {
    const std::size_t N = wa.size();
    std::vector<CycloNum> cw{CycloNum(1)};
    for (std::size_t i = 0; i < N; ++i) {
        std::vector<CycloNum> next(cw.size() * 2);
        for (std::size_t c = 0; c < cw.size(); ++c) {
            next[c] = cw[c] * wa[i];
            next[c | (std::size_t{1} << i)] = cw[c] * wb[i];
        }
        cw = std::move(next);
    }
    Matrix m(table.dim(), table.dim());
    for (std::size_t c = 0; c < cw.size(); ++c) {
        if (cw[c].is_zero()) continue;
        for (std::size_t p = 0; p < table.dim(); ++p) m(static_cast<std::size_t>(table.target(c, p)), p) += cw[c];
    }
    return m;
}
} // namespace detail

inline TransferMatrix build_transfer_matrix(int n, const CycloNum& t, std::span<const CycloNum> z) {
    if (static_cast<int>(z.size()) != 2 * n) throw Error(ErrorKind::InconsistentSize, "need 2n spectral parameters");
    const auto& table = StripTable::get(n);
    std::vector<CycloNum> wa, wb;
    for (const auto& zi : z) {
        auto w = site_weights(t, zi);
        wa.push_back(std::move(w.turn_a));
        wb.push_back(std::move(w.turn_b));
    }
    return {n, t, std::vector<CycloNum>(z.begin(), z.end()), detail::strip_sum(table, wa, wb)};
}

/// T(t) times prod_i (q t - q^-1 z_i): entries are polynomial in t and z,
/// which keeps the elimination below free of denominators.
inline Matrix transfer_numerator(int n, const CycloNum& t, std::span<const CycloNum> z, CycloNum* denom) {
    const auto& table = StripTable::get(n);
    const CycloNum q = q_power(1), qi = q_power(-1);
    std::vector<CycloNum> wa, wb;
    CycloNum d(1);
    for (const auto& zi : z) {
        CycloNum den = q * t - qi * zi;
        if (den.is_zero()) throw Error(ErrorKind::SingularWeight, "q t - q^-1 z vanishes");
        d *= den;
        wa.push_back(zi - t);
        wb.push_back(q * zi - qi * t);
    }
    if (denom) *denom = std::move(d);
    return detail::strip_sum(table, wa, wb);
}

/// prod over runs s of prod_{i<j in s} (q z_i - q^-1 z_j), runs in cyclic order.
inline CycloNum run_prefactor(const LinkPattern& p, std::span<const CycloNum> z) {
    const CycloNum q = q_power(1), qi = q_power(-1);
    CycloNum f(1);
    for (const auto& run : p.free_sequences())
        for (std::size_t x = 0; x < run.size(); ++x)
            for (std::size_t y = x + 1; y < run.size(); ++y)
                f *= q * z[static_cast<std::size_t>(run[x])] - qi * z[static_cast<std::size_t>(run[y])];
    return f;
}

/// Reference pattern used to fix the normalization: nested_pattern(1, n-1, 0).
inline LinkPattern reference_pattern(int n) { return nested_pattern({1, n - 1, 0}); }

/// Closed form of the reference component: its run prefactor times
/// (-1)^{n(n-1)/2}.  The same form holds for every rotation of the
/// reference pattern.
inline CycloNum reference_component(const LinkPattern& p, std::span<const CycloNum> z) {
    const int n = p.half();
    CycloNum f = run_prefactor(p, z);
    return ((n * (n - 1) / 2) % 2) ? -f : f;
}

struct GroundStateNumeric {
    int n = 0;
    std::vector<CycloNum> z;
    std::vector<LinkPattern> patterns;
    std::vector<CycloNum> components; ///< aligned with patterns

    const CycloNum& component(const LinkPattern& p) const {
        for (std::size_t k = 0; k < patterns.size(); ++k)
            if (patterns[k] == p) return components[k];
        throw Error(ErrorKind::InvalidSpec, "pattern of the wrong size");
    }
};

namespace detail {

inline const long kTrialT[] = {7, 11, 13, 17, 19};

/// T'(t) - d(t) I over F_p under the embedding w -> root, where T' is the
/// transfer numerator and d(t) its denominator; nullopt when d(t) = 0.
inline std::optional<std::vector<modular::u64>> transfer_minus_identity_mod(const StripTable& table, const modular::Field& f,
                                                                           modular::u64 root, std::span<const modular::u64> z,
                                                                           modular::u64 t) {
    using namespace modular;
    const u64 p = f.p, root2 = mul(root, root, p);
    const std::size_t N = z.size(), dim = table.dim();
    std::vector<u64> cw(1, 1), next, m(dim * dim, 0);
    u64 d = 1;
    for (std::size_t i = 0; i < N; ++i) {
        d = mul(d, sub(mul(root, t, p), mul(root2, z[i], p), p), p);
        const u64 wa = sub(z[i], t, p), wb = sub(mul(root, z[i], p), mul(root2, t, p), p);
        next.assign(cw.size() * 2, 0);
        for (std::size_t c = 0; c < cw.size(); ++c) {
            next[c] = mul(cw[c], wa, p);
            next[c | (std::size_t{1} << i)] = mul(cw[c], wb, p);
        }
        cw.swap(next);
    }
    if (d == 0) return std::nullopt;
    for (std::size_t c = 0; c < cw.size(); ++c) {
        if (cw[c] == 0) continue;
        for (std::size_t q = 0; q < dim; ++q) {
            auto& e = m[static_cast<std::size_t>(table.target(c, q)) * dim + q];
            e = add(e, cw[c], p);
        }
    }
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = sub(m[i * dim + i], d, p);
    return m;
}

/// Kernel line of T'(t) - d(t) I over F_p, trying the fixed t values in turn.
/// z holds the images of the z_i.
inline std::optional<std::vector<modular::u64>> kernel_mod(const StripTable& table, const modular::Field& f,
                                                           modular::u64 root, std::span<const modular::u64> z) {
    for (long tv : kTrialT) {
        auto m = transfer_minus_identity_mod(table, f, root, z, static_cast<modular::u64>(tv));
        if (!m) continue;
        if (auto v = modular::kernel_line(std::move(*m), table.dim(), f.p)) return v;
    }
    return std::nullopt;
}

inline std::optional<std::vector<modular::u64>> reduce_all(const modular::Field& f, modular::u64 root,
                                                           std::span<const CycloNum> xs) {
    std::vector<modular::u64> out;
    for (const auto& x : xs) {
        auto r = f.reduce(x, root);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    return out;
}

inline void scale_mod(std::vector<modular::u64>& v, modular::u64 s, modular::u64 p) {
    for (auto& x : v) x = modular::mul(x, s, p);
}

/// Upper limit on the number of primes spent on one reconstruction.
inline constexpr std::size_t kMaxPrimes = 400;

} // namespace detail

/// Ground state normalized so that the reference pattern (or, when that
/// component vanishes at z, the first rotation of it that does not) equals
/// its closed form.  The kernel is found modulo word-size primes and lifted;
/// the result is accepted once an extra prime leaves it unchanged.
inline GroundStateNumeric ground_state_numeric(int n, std::span<const CycloNum> z) {
    using namespace modular;
    if (static_cast<int>(z.size()) != 2 * n) throw Error(ErrorKind::InconsistentSize, "need 2n spectral parameters");
    const auto& table = StripTable::get(n);
    const std::size_t dim = table.dim();
    const LinkPattern ref = reference_pattern(n);
    std::vector<std::pair<std::size_t, CycloNum>> targets; // (index, value) for rotations with nonzero closed form
    for (int r = 0; r < 2 * n; ++r) {
        LinkPattern pr = ref.rotated(r);
        CycloNum v = reference_component(pr, z);
        if (!v.is_zero()) targets.emplace_back(static_cast<std::size_t>(table.index_of(pr)), std::move(v));
    }
    if (targets.empty()) throw Error(ErrorKind::Normalization, "every rotation of the reference component vanishes");

    CycloCRT crt(dim);
    std::optional<std::size_t> chosen; // position in targets
    std::optional<std::vector<CycloNum>> prev;
    int failures = 0, successes = 0;
    for (std::size_t k = 0; k < detail::kMaxPrimes; ++k) {
        const Field& f = field(k);
        auto z1 = detail::reduce_all(f, f.w1, z), z2 = detail::reduce_all(f, f.w2, z);
        if (!z1 || !z2) continue;
        auto v1 = detail::kernel_mod(table, f, f.w1, *z1), v2 = detail::kernel_mod(table, f, f.w2, *z2);
        if (!v1 || !v2) {
            if (successes == 0 && ++failures >= 3)
                throw Error(ErrorKind::DegenerateKernel, "eigenvalue 1 of the transfer matrix is not simple");
            continue;
        }
        if (!chosen) {
            for (std::size_t s = 0; s < targets.size() && !chosen; ++s)
                if ((*v1)[targets[s].first] != 0 && (*v2)[targets[s].first] != 0) chosen = s;
            if (!chosen) throw Error(ErrorKind::Normalization, "every rotation of the reference component vanishes");
        }
        const auto& [idx, target] = targets[*chosen];
        auto t1 = f.reduce(target, f.w1), t2 = f.reduce(target, f.w2);
        if (!t1 || !t2 || (*v1)[idx] == 0 || (*v2)[idx] == 0) continue;
        detail::scale_mod(*v1, mul(*t1, inv((*v1)[idx], f.p), f.p), f.p);
        detail::scale_mod(*v2, mul(*t2, inv((*v2)[idx], f.p), f.p), f.p);
        std::vector<u64> a(dim), b(dim);
        for (std::size_t i = 0; i < dim; ++i) std::tie(a[i], b[i]) = split_embeddings(f, (*v1)[i], (*v2)[i]);
        crt.add(f, a, b);
        ++successes;
        auto cur = crt.reconstruct();
        if (cur && prev && *cur == *prev)
            return {n, std::vector<CycloNum>(z.begin(), z.end()), table.patterns(), std::move(*cur)};
        prev = std::move(cur);
    }
    throw Error(ErrorKind::DegenerateKernel, "ground state reconstruction did not stabilize");
}

/// Exact check that the components are fixed by T(t).
inline bool verify_ground_state(const GroundStateNumeric& gs, const CycloNum& t) {
    auto tm = build_transfer_matrix(gs.n, t, gs.z);
    return tm.entries.apply(gs.components) == gs.components;
}

struct GroundStateSymbolic {
    int n = 0;
    TablePtr table; ///< z1 .. z2n
    std::vector<LinkPattern> patterns;
    std::vector<MultiPoly> components;

    const MultiPoly& component(const LinkPattern& p) const {
        for (std::size_t k = 0; k < patterns.size(); ++k)
            if (patterns[k] == p) return components[k];
        throw Error(ErrorKind::InvalidSpec, "pattern of the wrong size");
    }
};

/// Interpolation nodes used for the symbolic reconstruction: 1..n per variable.
inline std::vector<BigRational> symbolic_nodes(int n) {
    std::vector<BigRational> v;
    for (int k = 1; k <= n; ++k) v.emplace_back(k);
    return v;
}

/// Tensor-grid reconstruction of every component with partial degree bound
/// n - 1 per variable, carried out modulo primes and lifted coefficientwise.
inline GroundStateSymbolic ground_state_symbolic(int n) {
    using namespace modular;
    if (n < 1 || n > 4) throw Error(ErrorKind::SizeLimit, "symbolic ground state is limited to n <= 4");
    const int N = 2 * n;
    const auto& st = StripTable::get(n);
    const std::size_t dim = st.dim(), m = static_cast<std::size_t>(n);
    auto table = VarTable::numbered("z", static_cast<std::size_t>(N));
    std::size_t total = 1;
    for (int i = 0; i < N; ++i) total *= m;
    const LinkPattern ref = reference_pattern(n);
    const auto ref_idx = static_cast<std::size_t>(st.index_of(ref));

    auto residues = [&](const Field& f, u64 root) -> std::optional<std::vector<std::vector<u64>>> {
        std::vector<std::vector<u64>> values(dim, std::vector<u64>(total));
        std::vector<u64> zi(static_cast<std::size_t>(N));
        std::vector<CycloNum> zc(static_cast<std::size_t>(N));
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (int v = N; v-- > 0;) {
                zi[static_cast<std::size_t>(v)] = rest % m + 1;
                zc[static_cast<std::size_t>(v)] = CycloNum(static_cast<long>(rest % m + 1));
                rest /= m;
            }
            auto line = detail::kernel_mod(st, f, root, zi);
            if (!line || (*line)[ref_idx] == 0) return std::nullopt;
            auto target = f.reduce(reference_component(ref, zc), root);
            if (!target || *target == 0) return std::nullopt;
            u64 s = mul(*target, inv((*line)[ref_idx], f.p), f.p);
            for (std::size_t k = 0; k < dim; ++k) values[k][idx] = mul((*line)[k], s, f.p);
        }
        std::vector<u64> nodes;
        for (std::size_t k = 1; k <= m; ++k) nodes.push_back(k);
        for (auto& v : values) interpolate_grid(v, static_cast<std::size_t>(N), nodes, f.p);
        return values;
    };

    CycloCRT crt(dim * total);
    std::optional<std::vector<CycloNum>> prev;
    for (std::size_t k = 0; k < detail::kMaxPrimes; ++k) {
        const Field& f = field(k);
        auto r1 = residues(f, f.w1);
        if (!r1) continue;
        auto r2 = residues(f, f.w2);
        if (!r2) continue;
        std::vector<u64> a(dim * total), b(dim * total);
        for (std::size_t c = 0; c < dim; ++c)
            for (std::size_t i = 0; i < total; ++i)
                std::tie(a[c * total + i], b[c * total + i]) = split_embeddings(f, (*r1)[c][i], (*r2)[c][i]);
        crt.add(f, a, b);
        auto cur = crt.reconstruct();
        if (cur && prev && *cur == *prev) {
            GroundStateSymbolic out{n, table, st.patterns(), {}};
            Exponent e(static_cast<std::size_t>(N));
            for (std::size_t c = 0; c < dim; ++c) {
                MultiPoly poly(table);
                for (std::size_t i = 0; i < total; ++i) {
                    const CycloNum& coef = (*cur)[c * total + i];
                    if (coef.is_zero()) continue;
                    std::size_t rest = i;
                    for (int v = N; v-- > 0;) {
                        e[static_cast<std::size_t>(v)] = static_cast<int>(rest % m);
                        rest /= m;
                    }
                    poly.add_term(e, coef);
                }
                out.components.push_back(std::move(poly));
            }
            return out;
        }
        prev = std::move(cur);
    }
    throw Error(ErrorKind::DegenerateKernel, "symbolic reconstruction did not stabilize");
}

struct FactorizationCheck {
    bool divisible = false;
    bool quotient_symmetric = false;
    std::optional<MultiPoly> quotient;
    bool ok() const noexcept { return divisible && quotient_symmetric; }
};

/// Divides the component of `p` by its run prefactor and checks that the
/// quotient is symmetric within each run.
inline FactorizationCheck check_factorization(const GroundStateSymbolic& gs, const LinkPattern& p) {
    const CycloNum q = q_power(1), qi = q_power(-1);
    FactorizationCheck res;
    MultiPoly cur = gs.component(p);
    for (const auto& run : p.free_sequences())
        for (std::size_t x = 0; x < run.size(); ++x)
            for (std::size_t y = x + 1; y < run.size(); ++y) {
                auto d = cur.divide_linear(static_cast<std::size_t>(run[x]), q, static_cast<std::size_t>(run[y]), -qi);
                if (!d) return res;
                cur = std::move(*d);
            }
    res.divisible = true;
    res.quotient_symmetric = true;
    for (const auto& run : p.free_sequences()) {
        std::vector<std::size_t> vars(run.begin(), run.end());
        if (!cur.is_symmetric(vars)) res.quotient_symmetric = false;
    }
    res.quotient = std::move(cur);
    return res;
}

inline bool check_factorization_ok(const GroundStateSymbolic& gs, const LinkPattern& p) {
    return check_factorization(gs, p).ok();
}

/// Imposes z_{i+1} = q^2 z_i on a copy of z.
inline std::vector<CycloNum> impose_wheel(std::span<const CycloNum> z, int i) {
    std::vector<CycloNum> w(z.begin(), z.end());
    const std::size_t N = w.size();
    w[(static_cast<std::size_t>(i) + 1) % N] = q_power(2) * w[static_cast<std::size_t>(i)];
    return w;
}

/// Both cases of the wheel property at position i: vanishing when `p` has no
/// arch (i, i+1), otherwise the reduction to size n-1 with the prefactor
/// prod_{k != i, i+1} (q z_i - z_k).  `base` is overwritten at i+1.
inline bool check_wheel(int n, const LinkPattern& p, int i, std::span<const CycloNum> base) {
    const int N = 2 * n;
    auto z = impose_wheel(base, i);
    auto gs = ground_state_numeric(n, z);
    const CycloNum& val = gs.component(p);
    if (!p.has_little_arch(i)) return val.is_zero();
    const int j = (i + 1) % N;
    CycloNum pref(1);
    std::vector<CycloNum> reduced;
    for (int k = 0; k < N; ++k) {
        if (k == i || k == j) continue;
        pref *= q_power(1) * z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(k)];
        reduced.push_back(z[static_cast<std::size_t>(k)]);
    }
    LinkPattern smaller = remove_little_arch(p, i);
    CycloNum rhs = pref;
    if (n > 1) rhs *= ground_state_numeric(n - 1, reduced).component(smaller);
    return val == rhs;
}

/// Rank of T(t) - I modulo the first usable prime.  Reduction can only
/// lose rank, so this is a lower bound for the rank over Q(w); with exact
/// column sums equal to 1 (rank <= dim - 1) a value of dim - 1 proves the
/// eigenspace is a line.
inline std::size_t transfer_rank_lower_bound(int n, const CycloNum& t, std::span<const CycloNum> z) {
    const auto& table = StripTable::get(n);
    for (std::size_t k = 0; k < 8; ++k) {
        const auto& f = modular::field(k);
        auto zr = detail::reduce_all(f, f.w1, z);
        auto tr = f.reduce(t, f.w1);
        if (!zr || !tr) continue;
        auto m = detail::transfer_minus_identity_mod(table, f, f.w1, *zr, *tr);
        if (!m) continue;
        return modular::rank(std::move(*m), table.dim(), f.p);
    }
    throw Error(ErrorKind::DegenerateKernel, "no usable prime for the rank bound");
}

/// Homogeneous census: components at z = (1, ..., 1) divided by the
/// smallest one in modulus.
inline std::vector<CycloNum> homogeneous_census(int n) {
    std::vector<CycloNum> z(static_cast<std::size_t>(2 * n), CycloNum(1));
    auto gs = ground_state_numeric(n, z);
    BigRational best;
    std::optional<std::size_t> arg;
    for (std::size_t k = 0; k < gs.components.size(); ++k) {
        BigRational m = gs.components[k].norm_sq();
        if (!arg || m < best) {
            best = m;
            arg = k;
        }
    }
    CycloNum mn = gs.components[*arg];
    for (auto& c : gs.components) c /= mn;
    return gs.components;
}

/// Random rational spectral parameters, integers drawn from [1, 10^6].
inline std::vector<CycloNum> random_spectral(std::mt19937_64& rng, int count) {
    std::uniform_int_distribution<long> dist(1, 1000000);
    std::vector<CycloNum> z;
    for (int k = 0; k < count; ++k) z.emplace_back(dist(rng));
    return z;
}

} // namespace arches
