#pragma once

// Verification suites.  Each check group draws from its own generator seeded
// from (seed, group name), so a report depends only on the seed and bounds.

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arches/error.hpp"
#include "arches/fourarch.hpp"
#include "arches/fpl.hpp"
#include "arches/linalg.hpp"
#include "arches/loopmodel.hpp"
#include "arches/nested.hpp"
#include "arches/tilings.hpp"

namespace arches::verify {

struct Case {
    std::string id;
    std::string inputs;
    std::string digest;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Report {
    Report() = default;
    Report(std::string name, std::uint64_t s) : suite(std::move(name)), seed(s) {}

    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Case> cases;
    std::vector<std::pair<std::string, std::string>> notes; // e.g. the recurrence sign table
    bool aborted = false;
    double seconds = 0;

    bool ok() const {
        if (aborted) return false;
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t k = 0;
        for (const auto& c : cases) k += !c.pass;
        return k;
    }
    void append(const Report& o) {
        cases.insert(cases.end(), o.cases.begin(), o.cases.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
        aborted = aborted || o.aborted;
    }
};

struct Bounds {
    int n_max = 5;     // loop-model sizes
    int box_max = 3;   // hexagon sides for the Phi identities
    int tile_max = 4;  // hexagon sides for tiling counts
    int homog_max = 4; // hexagon sides for the homogeneous norm
    int samples = 10;
    int ratio_samples = 5;
    bool rs_n6 = false;
};

class Budget {
public:
    explicit Budget(double seconds = 0) {
        if (seconds > 0) deadline_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
    }
    bool expired() const { return deadline_ && std::chrono::steady_clock::now() > *deadline_; }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

inline std::string digest(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 15];
    return out;
}

inline std::string join(const std::vector<CycloNum>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].to_string();
    return s;
}

inline std::string param_string(const ParamSet& p) {
    return "alpha=" + join(p.alphas) + ";beta=" + join(p.betas) + ";gamma=" + join(p.gammas);
}

inline std::mt19937_64 group_rng(std::uint64_t seed, const std::string& group) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(std::hash<std::string>{}(group))};
    return std::mt19937_64(seq);
}

/// Integer in [1, 10^6], the same draw as random_spectral.
inline CycloNum random_value(std::mt19937_64& rng) { return random_spectral(rng, 1)[0]; }

namespace detail {

inline void add_case(Report& r, std::string id, const std::string& inputs, std::string expected, std::string actual, bool pass) {
    r.cases.push_back({std::move(id), inputs, digest(inputs), std::move(expected), std::move(actual), pass});
}

inline bool stop(Report& r, const Budget& b) {
    if (!b.expired()) return false;
    r.aborted = true;
    add_case(r, r.suite + "/budget", "", "within budget", "time limit reached", false);
    return true;
}

inline std::string pass_word(bool b) { return b ? "true" : "false"; }

} // namespace detail

using Group = std::function<Report(const Bounds&, std::uint64_t, const Budget&)>;

// ---- loop model --------------------------------------------------------------

inline Report group_stochastic(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"stochastic", seed};
    auto rng = group_rng(seed, r.suite);
    for (int n = 1; n <= bd.n_max; ++n)
        for (int s = 0; s < bd.samples; ++s) {
            if (detail::stop(r, budget)) return r;
            auto t = random_value(rng);
            std::vector<CycloNum> z;
            for (int i = 0; i < 2 * n; ++i) z.push_back(random_value(rng));
            auto tm = build_transfer_matrix(n, t, z);
            std::size_t bad = 0;
            for (std::size_t c = 0; c < tm.entries.cols(); ++c) {
                CycloNum sum;
                for (std::size_t q = 0; q < tm.entries.rows(); ++q) sum += tm.entries(q, c);
                if (sum != CycloNum(1)) ++bad;
            }
            detail::add_case(r, "stochastic/n=" + std::to_string(n) + "/s=" + std::to_string(s), "t=" + t.to_string() + ";z=" + join(z),
                             "every column sums to 1", std::to_string(bad) + " bad columns", bad == 0);
        }
    return r;
}

/// Rank bound plus exact column sums pin the eigenspace of T(t) to a line;
/// the lifted ground state is checked exactly at two t values, so both
/// lines are the same.
inline Report group_eigen(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"eigen", seed};
    auto rng = group_rng(seed, r.suite);
    for (int n = 1; n <= bd.n_max; ++n)
        for (int s = 0; s < bd.samples; ++s) {
            if (detail::stop(r, budget)) return r;
            auto t1 = random_value(rng), t2 = random_value(rng);
            std::vector<CycloNum> z;
            for (int i = 0; i < 2 * n; ++i) z.push_back(random_value(rng));
            const std::size_t dim = StripTable::get(n).dim();
            auto gs = ground_state_numeric(n, z);
            bool nonzero = false;
            for (const auto& c : gs.components) nonzero = nonzero || !c.is_zero();
            std::ostringstream got;
            bool ok = nonzero;
            for (const auto& t : {t1, t2}) {
                auto tm = build_transfer_matrix(n, t, z);
                bool sums = true;
                for (std::size_t c = 0; c < tm.entries.cols(); ++c) {
                    CycloNum sum;
                    for (std::size_t q = 0; q < tm.entries.rows(); ++q) sum += tm.entries(q, c);
                    sums = sums && sum == CycloNum(1);
                }
                const std::size_t rk = transfer_rank_lower_bound(n, t, z);
                const bool fixed = tm.entries.apply(gs.components) == gs.components;
                got << "rank>=" << rk << (sums ? " sums" : " BADSUMS") << (fixed ? " fixed;" : " NOTFIXED;");
                ok = ok && sums && rk + 1 == dim && fixed;
            }
            detail::add_case(r, "eigen/n=" + std::to_string(n) + "/s=" + std::to_string(s),
                             "t1=" + t1.to_string() + ";t2=" + t2.to_string() + ";z=" + join(z),
                             "rank " + std::to_string(dim - 1) + " at both t, common fixed vector", got.str(), ok);
        }
    return r;
}

namespace detail {
inline const GroundStateSymbolic& symbolic(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GroundStateSymbolic>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GroundStateSymbolic>(ground_state_symbolic(n));
    return *slot;
}
} // namespace detail

inline Report group_degrees(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"degrees", seed};
    auto rng = group_rng(seed, r.suite);
    for (int n = 1; n <= std::min(bd.n_max, 4); ++n) {
        if (detail::stop(r, budget)) return r;
        const auto& gs = detail::symbolic(n);
        const int deg = n * (n - 1);
        // lambda-scaling: P(2z) = 2^deg P(z) at a random point
        auto z = random_spectral(rng, 2 * n);
        std::vector<CycloNum> z2;
        for (const auto& x : z) z2.push_back(x * CycloNum(2));
        const CycloNum scale = CycloNum(2).pow(deg);
        BigRational least;
        for (std::size_t k = 0; k < gs.patterns.size(); ++k) {
            const auto& p = gs.patterns[k];
            const auto& P = gs.components[k];
            auto d = P.degrees();
            int maxp = 0;
            for (int e : d.partial) maxp = std::max(maxp, e);
            const bool scaled = P.eval(z2) == scale * P.eval(z);
            const bool ok = P.is_homogeneous(deg) && maxp <= n - 1 && scaled;
            detail::add_case(r, "degrees/n=" + std::to_string(n) + "/" + p.word(), p.word() + ";z=" + join(z),
                             "homogeneous of degree " + std::to_string(deg) + ", partial <= " + std::to_string(n - 1),
                             "total " + (d.total ? std::to_string(*d.total) : std::string("-inf")) + ", max partial " + std::to_string(maxp) +
                                 (scaled ? "" : ", scaling fails"),
                             ok);
            std::vector<CycloNum> ones(static_cast<std::size_t>(2 * n), CycloNum(1));
            const BigRational m = P.eval(ones).norm_sq();
            if (k == 0 || m < least) least = m;
        }
        // the reconstruction itself: symbolic components at a fresh point against the kernel there
        {
            auto gn = ground_state_numeric(n, z);
            std::size_t bad = 0;
            for (std::size_t k = 0; k < gs.patterns.size(); ++k) bad += gs.components[k].eval(z) != gn.component(gs.patterns[k]);
            detail::add_case(r, "degrees/n=" + std::to_string(n) + "/symbolic-vs-kernel", "z=" + join(z), "all components equal",
                             std::to_string(bad) + " differ", bad == 0);
        }
        mpz_class want;
        mpz_ui_pow_ui(want.get_mpz_t(), 3, static_cast<unsigned long>(deg));
        detail::add_case(r, "degrees/n=" + std::to_string(n) + "/min-homogeneous", std::to_string(n), "norm_sq " + want.get_str(),
                         "norm_sq " + least.to_string(), least == BigRational(mpq_class(want)));
    }
    return r;
}

inline Report group_factorization(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"factorization", seed};
    for (int n = 1; n <= std::min(bd.n_max, 4); ++n) {
        if (detail::stop(r, budget)) return r;
        const auto& gs = detail::symbolic(n);
        for (const auto& p : gs.patterns) {
            auto f = check_factorization(gs, p);
            detail::add_case(r, "factorization/n=" + std::to_string(n) + "/" + p.word(), p.word(), "divisible, symmetric quotient",
                             std::string(f.divisible ? "divisible" : "not divisible") + (f.quotient_symmetric ? ", symmetric" : ""), f.ok());
        }
    }
    return r;
}

/// Wheel cases at every position: symbolic components for n <= 4, the
/// numeric kernel at n = 5.  One ground state per position serves every pattern.
inline Report group_wheel(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"wheel", seed};
    auto rng = group_rng(seed, r.suite);
    for (int n = 2; n <= bd.n_max; ++n) {
        const int N = 2 * n;
        auto base = random_spectral(rng, N);
        for (int i = 0; i < N; ++i) {
            if (detail::stop(r, budget)) return r;
            auto z = impose_wheel(base, i);
            const int j = (i + 1) % N;
            std::vector<CycloNum> reduced;
            CycloNum pref(1);
            for (int k = 0; k < N; ++k) {
                if (k == i || k == j) continue;
                pref *= q_power(1) * z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(k)];
                reduced.push_back(z[static_cast<std::size_t>(k)]);
            }
            const bool symb = n <= 4;
            std::function<CycloNum(const LinkPattern&)> big, small;
            std::optional<GroundStateNumeric> gb, gsm;
            if (symb) {
                big = [&](const LinkPattern& p) { return detail::symbolic(n).component(p).eval(z); };
                small = [&](const LinkPattern& p) { return detail::symbolic(n - 1).component(p).eval(reduced); };
            } else {
                gb = ground_state_numeric(n, z);
                gsm = ground_state_numeric(n - 1, reduced);
                big = [&](const LinkPattern& p) { return gb->component(p); };
                small = [&](const LinkPattern& p) { return gsm->component(p); };
            }
            for (const auto& p : enumerate_patterns(n)) {
                const CycloNum v = big(p);
                const std::string id = "wheel/n=" + std::to_string(n) + "/" + p.word() + "/i=" + std::to_string(i) + (symb ? "/symbolic" : "/numeric");
                const std::string in = p.word() + ";i=" + std::to_string(i) + ";z=" + join(z);
                if (!p.has_little_arch(i)) {
                    detail::add_case(r, id, in, "0", v.to_string(), v.is_zero());
                } else {
                    const CycloNum rhs = pref * small(remove_little_arch(p, i));
                    detail::add_case(r, id, in, rhs.to_string(), v.to_string(), v == rhs);
                }
            }
        }
    }
    return r;
}

/// Psi_{a,b,c} / Psi_ref from the kernel against the closed-form ratio,
/// ref = nested (1, n-1, 0).
inline Report group_ratio(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"ratio", seed};
    auto rng = group_rng(seed, r.suite);
    for (int n = 3; n <= std::min(bd.n_max, 5); ++n)
        for (int s = 0; s < bd.ratio_samples; ++s) {
            if (detail::stop(r, budget)) return r;
            auto z = random_spectral(rng, 2 * n);
            auto gs = ground_state_numeric(n, z);
            const auto ref = reference_pattern(n);
            const CycloNum base = gs.component(ref), base_cf = reference_component(ref, z);
            for (int a = 0; a <= n; ++a)
                for (int b = 0; a + b <= n; ++b) {
                    NestedArchSpec ns{a, b, n - a - b};
                    const CycloNum got = gs.component(nested_pattern(ns)) / base;
                    const CycloNum want = nested_component(ns, z) / base_cf;
                    detail::add_case(r, "ratio/n=" + std::to_string(n) + "/s=" + std::to_string(s) + "/" + std::to_string(a) + std::to_string(b) + std::to_string(ns.c),
                                     "z=" + join(z), want.to_string(), got.to_string(), got == want);
                }
        }
    return r;
}

// ---- closed forms -------------------------------------------------------------

inline Report group_phi_cross(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"phi-cross", seed};
    auto rng = group_rng(seed, r.suite);
    for (int a = 0; a <= bd.box_max; ++a)
        for (int b = 0; b <= bd.box_max; ++b)
            for (int c = 0; c <= bd.box_max; ++c) {
                if (a + b + c == 0) continue;
                for (int s = 0; s < bd.samples; ++s) {
                    if (detail::stop(r, budget)) return r;
                    auto p = random_params(rng, {a, b, c});
                    const CycloNum ref = phi_subset({a, b, c}, p);
                    const CycloNum det = phi_det({a, b, c}, p), lgv = phi_lgv({a, b, c}, p);
                    const CycloNum til = partition_function(build_hexagon(a, b, c, p));
                    const bool ok = det == ref && lgv == ref && til == ref;
                    detail::add_case(r, "phi-cross/" + std::to_string(a) + std::to_string(b) + std::to_string(c) + "/s=" + std::to_string(s), param_string(p),
                                     ref.to_string(), ok ? ref.to_string() : "det=" + det.to_string() + ";lgv=" + lgv.to_string() + ";tiling=" + til.to_string(), ok);
                }
            }
    return r;
}

inline Report group_recurrence(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"recurrence", seed};
    auto rng = group_rng(seed, r.suite);
    for (int a = 0; a <= bd.box_max; ++a)
        for (int b = 0; b <= bd.box_max; ++b)
            for (int c = 1; c <= bd.box_max; ++c) {
                std::set<int> signs;
                bool defined = true;
                for (int s = 0; s < bd.samples; ++s) {
                    if (detail::stop(r, budget)) return r;
                    auto sg = recurrence_sign({a, b, c}, random_params(rng, {a, b, c}));
                    if (sg) signs.insert(*sg);
                    else defined = false;
                }
                const bool ok = defined && signs.size() == 1;
                const std::string key = std::to_string(a) + std::to_string(b) + std::to_string(c);
                std::string got = defined ? "" : "undefined ";
                for (int sg : signs) got += (sg > 0 ? "+1 " : "-1 ");
                detail::add_case(r, "recurrence/" + key, key + ";samples=" + std::to_string(bd.samples), "one sign for every sample", got, ok);
                r.notes.push_back({"sign(" + key + ")", ok ? (*signs.begin() > 0 ? "+1" : "-1") : "inconsistent"});
            }
    return r;
}

inline Report group_schur(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"schur", seed};
    auto rng = group_rng(seed, r.suite);
    for (int a = 0; a <= bd.box_max; ++a)
        for (int b = 0; b <= bd.box_max; ++b)
            for (int c = 0; c <= bd.box_max; ++c) {
                if (a + b + c == 0) continue;
                if (detail::stop(r, budget)) return r;
                auto g = random_spectral(rng, a + b);
                auto ab = random_spectral(rng, 2);
                if (ab[0] == ab[1]) ab[1] += CycloNum(1);
                const CycloNum lhs = phi_schur_specialized({a, b, c}, ab[0], ab[1], g);
                const CycloNum rhs = phi_subset_coincident({a, b, c}, ab[0], ab[1], g);
                detail::add_case(r, "schur/" + std::to_string(a) + std::to_string(b) + std::to_string(c),
                                 "alpha=" + ab[0].to_string() + ";beta=" + ab[1].to_string() + ";gamma=" + join(g), rhs.to_string(), lhs.to_string(), lhs == rhs);
            }
    return r;
}

inline Report group_homogeneous(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"homogeneous", seed};
    for (int a = 0; a <= bd.homog_max; ++a)
        for (int b = 0; b <= bd.homog_max; ++b)
            for (int c = 0; c <= bd.homog_max; ++c) {
                if (a + b + c == 0) continue;
                if (detail::stop(r, budget)) return r;
                const CycloNum phi = phi_homogeneous({a, b, c});
                mpz_class three;
                mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(a * b + b * c + c * a));
                const mpz_class m = macmahon(a, b, c);
                const BigRational want(mpq_class(three * m * m));
                const std::string key = std::to_string(a) + std::to_string(b) + std::to_string(c);
                detail::add_case(r, "homogeneous/" + key, key, want.to_string(), phi.norm_sq().to_string(), phi.norm_sq() == want);
            }
    return r;
}

// ---- tilings -------------------------------------------------------------------

inline Report group_tiling(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"tiling", seed};
    for (int a = 0; a <= bd.tile_max; ++a)
        for (int b = 0; b <= bd.tile_max; ++b)
            for (int c = 0; c <= bd.tile_max; ++c) {
                if (detail::stop(r, budget)) return r;
                const std::string key = std::to_string(a) + std::to_string(b) + std::to_string(c);
                const mpz_class got = tiling_count(build_hexagon(a, b, c)), want = macmahon(a, b, c);
                detail::add_case(r, "tiling/count/" + key, key, want.get_str(), got.get_str(), got == want);
            }
    for (int a = 0; a <= std::min(bd.tile_max, 3); ++a)
        for (int b = 0; b <= std::min(bd.tile_max, 3); ++b)
            for (int c = 0; c <= std::min(bd.tile_max, 3); ++c) {
                if (detail::stop(r, budget)) return r;
                auto reg = build_hexagon(a, b, c);
                std::set<NIPFamily> fams;
                std::size_t count = 0, roundtrip = 0;
                for_each_tiling(reg, [&](const Tiling& t) {
                    auto f = nip_extract(t, reg);
                    roundtrip += nip_rebuild(f, reg) == t;
                    fams.insert(std::move(f));
                    ++count;
                });
                const std::string key = std::to_string(a) + std::to_string(b) + std::to_string(c);
                detail::add_case(r, "tiling/paths/" + key, key, std::to_string(count) + " families, all rebuilt",
                                 std::to_string(fams.size()) + " families, " + std::to_string(roundtrip) + " rebuilt", fams.size() == count && roundtrip == count);
            }
    return r;
}

inline Report group_swap(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"appendixA", seed};
    auto rng = group_rng(seed, r.suite);
    for (int k = 0; k <= 3; ++k) {
        if (detail::stop(r, budget)) return r;
        auto al = random_spectral(rng, k + 1), be = random_spectral(rng, k + 1), g = random_spectral(rng, 2);
        if (g[0] == g[1]) g[1] += CycloNum(1);
        CycloNum w = swap_hexagon_weight(k, al, be, g[0], g[1]);
        if (k % 2) w = -w;
        const CycloNum z = partition_function(swap_hexagon_region(k, al, be, g[0], g[1]));
        const std::string in = "alpha=" + join(al) + ";beta=" + join(be) + ";gamma=" + join(g);
        detail::add_case(r, "appendixA/hexagon/k=" + std::to_string(k), in, w.to_string(), z.to_string(), z == w);
        const CycloNum zs = partition_function(swap_hexagon_region(k, al, be, g[1], g[0]));
        detail::add_case(r, "appendixA/hexagon-swap/k=" + std::to_string(k), in, z.to_string(), zs.to_string(), zs == z);
        if (k >= 1) {
            std::vector<CycloNum> a2(al.begin(), al.begin() + k);
            const auto reg = swap_parallelogram_region(k, a2, g[0], g[1]);
            const CycloNum pw = swap_parallelogram_weight(k, a2, g[0], g[1]), pz = partition_function(reg);
            const mpz_class cnt = tiling_count(reg);
            detail::add_case(r, "appendixA/parallelogram/k=" + std::to_string(k), "alpha=" + join(a2) + ";gamma=" + join(g),
                             pw.to_string() + " (1 tiling)", pz.to_string() + " (" + cnt.get_str() + " tilings)", pz == pw && cnt == 1);
        }
    }
    for (int a = 0; a <= bd.box_max; ++a)
        for (int b = 0; b <= bd.box_max; ++b)
            for (int c = 0; c <= bd.box_max; ++c) {
                if (a + b + c == 0) continue;
                if (detail::stop(r, budget)) return r;
                auto p = random_params(rng, {a, b, c});
                auto reg = build_hexagon(a, b, c, p);
                const CycloNum z0 = partition_function(reg);
                const char* names[] = {"alpha", "beta", "gamma"};
                for (int fam = 0; fam < 3; ++fam) {
                    auto ids = reg.family_lines(fam);
                    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
                        TilingRegion s = reg;
                        std::swap(s.params[static_cast<std::size_t>(ids[i])], s.params[static_cast<std::size_t>(ids[i + 1])]);
                        const CycloNum z1 = partition_function(s);
                        detail::add_case(r, "appendixA/swap/" + std::to_string(a) + std::to_string(b) + std::to_string(c) + "/" + names[fam] + std::to_string(i + 1) + "-" + std::to_string(i + 2),
                                         param_string(p), z0.to_string(), z1.to_string(), z0 == z1);
                    }
                }
            }
    return r;
}

// ---- Razumov-Stroganov -----------------------------------------------------------

inline Report group_rs(const Bounds& bd, std::uint64_t seed, const Budget& budget) {
    Report r{"rs", seed};
    const long totals[] = {1, 2, 7, 42, 429, 7436};
    const int top = bd.rs_n6 ? 6 : std::min(bd.n_max, 5);
    for (int n = 1; n <= top; ++n) {
        if (detail::stop(r, budget)) return r;
        auto census = homogeneous_census(n);
        auto fpl = fpl_counts(n);
        auto pats = enumerate_patterns(n);
        for (std::size_t k = 0; k < pats.size(); ++k) {
            const CycloNum want(BigRational(mpq_class(fpl.count(pats[k]))));
            detail::add_case(r, "rs/n=" + std::to_string(n) + "/" + pats[k].word(), pats[k].word(), want.to_string(), census[k].to_string(), census[k] == want);
        }
        CycloNum sum;
        for (const auto& c : census) sum += c;
        detail::add_case(r, "rs/n=" + std::to_string(n) + "/total", std::to_string(n), std::to_string(totals[n - 1]),
                         sum.to_string() + " (fpl " + fpl.total().get_str() + ")", sum == CycloNum(totals[n - 1]) && fpl.total() == totals[n - 1]);
    }
    return r;
}

// ---- four little arches -------------------------------------------------------------

inline std::string spec_key(const FourArchSpec& s) {
    return std::to_string(s.a) + std::to_string(s.b) + "|" + std::to_string(s.e) + "|" + std::to_string(s.c) + std::to_string(s.d);
}

inline Report group_four_arch(const Bounds&, std::uint64_t seed, const Budget& budget) {
    Report r{"four-arch", seed};
    auto rng = group_rng(seed, r.suite);
    for (auto s : {FourArchSpec{1, 1, 0, 1, 0}, FourArchSpec{1, 1, 1, 1, 0}, FourArchSpec{2, 1, 0, 2, 0}, FourArchSpec{1, 2, 1, 1, 0}}) {
        if (detail::stop(r, budget)) return r;
        auto z = random_spectral(rng, 2 * s.n());
        auto rep = check_four_arch_d0(s, z);
        detail::add_case(r, "four-arch/d0/" + spec_key(s), "z=" + join(z),
                         "Psi = unit * prefactor * Z_hexagon" , "hexagon " + std::to_string(rep.hexagon.a) + std::to_string(rep.hexagon.b) + std::to_string(rep.hexagon.c) + " rotation " + std::to_string(rep.rotation) + (rep.ok ? " equal" : " differ"), rep.ok);
        const mpz_class cone = s.e == 0 ? four_arch_tiling_count(s) : mpz_class(-1);
        if (s.e == 0) {
            const mpz_class mm = macmahon(s.c + s.e, s.a, s.b);
            detail::add_case(r, "four-arch/d0-count/" + spec_key(s), spec_key(s), mm.get_str(), cone.get_str(), cone == mm);
        }
    }
    const std::pair<FourArchSpec, FrozenArch> frozen[] = {{{2, 1, 0, 1, 1}, FrozenArch::tx}, {{2, 1, 1, 1, 1}, FrozenArch::tx},
                                                          {{1, 1, 0, 1, 2}, FrozenArch::zt}, {{1, 1, 1, 1, 2}, FrozenArch::zt}};
    for (const auto& [s, w] : frozen) {
        if (detail::stop(r, budget)) return r;
        auto z = random_spectral(rng, 2 * s.n());
        auto rep = check_four_arch_frozen(s, w, z);
        detail::add_case(r, std::string("four-arch/frozen-") + (w == FrozenArch::tx ? "tx/" : "zt/") + spec_key(s), "z=" + join(z),
                         "Phi = prefactor * Phi(smaller)", rep.ok ? "equal" : "differ", rep.ok);
    }
    std::map<int, FPLCensus> fpl;
    for (auto s : {FourArchSpec{1, 1, 0, 1, 1}, FourArchSpec{1, 1, 0, 1, 2}, FourArchSpec{1, 1, 0, 2, 1}, FourArchSpec{2, 1, 0, 1, 1},
                   FourArchSpec{1, 2, 0, 1, 1}}) {
        if (detail::stop(r, budget)) return r;
        if (!fpl.count(s.n())) fpl.emplace(s.n(), fpl_counts(s.n()));
        const mpz_class want = fpl.at(s.n()).count(four_arch_pattern(s)), got = four_arch_tiling_count(s);
        detail::add_case(r, "four-arch/count/" + spec_key(s), spec_key(s), want.get_str(), got.get_str(), got == want);
    }
    return r;
}

// ---- suites ------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"stochastic", "eigen",       "theorems", "phi-cross", "recurrence", "tiling",
                                                "schur",      "homogeneous", "appendixA", "rs",       "four-arch"};
    return names;
}

inline std::vector<Group> suite_groups(const std::string& suite) {
    if (suite == "stochastic") return {group_stochastic};
    if (suite == "eigen") return {group_eigen};
    if (suite == "theorems") return {group_degrees, group_factorization, group_wheel, group_ratio};
    if (suite == "phi-cross") return {group_phi_cross};
    if (suite == "recurrence") return {group_recurrence};
    if (suite == "tiling") return {group_tiling};
    if (suite == "schur") return {group_schur};
    if (suite == "homogeneous") return {group_homogeneous};
    if (suite == "appendixA") return {group_swap};
    if (suite == "rs") return {group_rs};
    if (suite == "four-arch") return {group_four_arch};
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + suite + "'");
}

inline void check_bounds(const Bounds& b) {
    if (b.n_max < 1 || b.n_max > 5) throw Error(ErrorKind::SizeLimit, "loop-model bound must be in 1..5 (n = 6 only through the rs flag)");
    if (b.box_max < 0 || b.box_max > 4 || b.tile_max < 0 || b.tile_max > 5 || b.homog_max < 0 || b.homog_max > 6)
        throw Error(ErrorKind::SizeLimit, "hexagon bound out of range");
    if (b.samples < 1 || b.ratio_samples < 1) throw Error(ErrorKind::SizeLimit, "need at least one sample");
}

/// Runs the groups of one suite concurrently and concatenates their cases in
/// a fixed order.
inline Report run_verify(const std::string& suite, const Bounds& bounds, std::uint64_t seed, double max_seconds = 0) {
    check_bounds(bounds);
    auto groups = suite_groups(suite);
    const Budget budget(max_seconds);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::future<Report>> jobs;
    for (const auto& g : groups) jobs.push_back(std::async(std::launch::async, g, std::cref(bounds), seed, std::cref(budget)));
    Report out{suite, seed};
    for (auto& j : jobs) out.append(j.get());
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace arches::verify
