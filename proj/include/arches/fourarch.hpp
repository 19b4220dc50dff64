#pragma once

// Four little arches on the loop-model side: reductions of the component
// of four_arch_pattern that are exact consequences of the kernel, stated on
// Phi = Psi / run_prefactor.

#include <span>
#include <utility>
#include <vector>

#include "arches/error.hpp"
#include "arches/linkpat.hpp"
#include "arches/loopmodel.hpp"
#include "arches/nested.hpp"
#include "arches/tilings.hpp"

namespace arches {

inline CycloNum four_arch_phi(const GroundStateNumeric& gs, const LinkPattern& p, std::span<const CycloNum> z) {
    return gs.component(p) / run_prefactor(p, z);
}

/// With d = 0 the pattern is a rotation of a nested one: returns (s, r)
/// with four_arch_pattern == nested_pattern(s).rotated(r).
inline std::pair<NestedArchSpec, int> four_arch_as_nested(const FourArchSpec& s) {
    const int n = s.n();
    const LinkPattern p = four_arch_pattern(s);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
            NestedArchSpec ns{a, b, n - a - b};
            LinkPattern base = nested_pattern(ns);
            for (int r = 0; r < 2 * n; ++r)
                if (base.rotated(r) == p) return {ns, r};
        }
    throw Error(ErrorKind::Precondition, "pattern is not a rotated nested pattern");
}

struct FourArchD0Report {
    bool ok = false;
    NestedArchSpec hexagon;
    int rotation = 0;
};

/// d = 0: Psi(z) = unit * block_prefactor(z') * Z_hexagon(decoded z') with
/// z'_p = z_{p+r}, Z from the tiling enumerator.
inline FourArchD0Report check_four_arch_d0(const FourArchSpec& s, std::span<const CycloNum> z) {
    if (s.d != 0) throw Error(ErrorKind::Precondition, "d = 0 reduction needs d = 0");
    const int n = s.n();
    if (z.size() != static_cast<std::size_t>(2 * n)) throw Error(ErrorKind::InconsistentSize, "need 2n spectral parameters");
    auto [ns, r] = four_arch_as_nested(s);
    std::vector<CycloNum> zr(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) zr[k] = z[(k + static_cast<std::size_t>(r)) % z.size()];
    auto gs = ground_state_numeric(n, z);
    auto pd = decode_nested(ns, zr);
    CycloNum hex = partition_function(build_hexagon(ns.a, ns.b, ns.c, pd));
    FourArchD0Report rep;
    rep.hexagon = ns;
    rep.rotation = r;
    rep.ok = gs.component(four_arch_pattern(s)) == nested_unit(ns) * block_prefactor(ns, zr) * hex;
    return rep;
}

/// The two little arches used for frozen rows: the T-X arch across the
/// seam (a -> a-1) and the Z-T arch (d -> d-1).
enum class FrozenArch { tx, zt };

inline int frozen_arch_position(const FourArchSpec& s, FrozenArch which) {
    if (which == FrozenArch::tx) {
        if (s.a < 2) throw Error(ErrorKind::Precondition, "T-X reduction needs a >= 2");
        return 2 * s.n() - 1;
    }
    if (s.d < 2) throw Error(ErrorKind::Precondition, "Z-T reduction needs d >= 2");
    return (s.a + s.b) + (s.b + s.e + s.c) + (s.c + s.d) - 1;
}

struct FrozenReport {
    bool ok = false;
    CycloNum prefactor;
};

/// Sets z_{i+1} = q^2 z_i across the chosen arch (i = last point before it)
/// and checks
///   Phi(s) = (-q^2)^{|run(i)|-1} q^{|run(i+1)|-1} prod_{k outside both runs} (q z_i - z_k) * Phi(s')
/// with s' = s with a or d lowered by one.  Needs a (resp. d) >= 2 so that
/// the runs on both sides survive the removal.
inline FrozenReport check_four_arch_frozen(const FourArchSpec& s, FrozenArch which, std::span<const CycloNum> base) {
    const int n = s.n();
    if (n < 2) throw Error(ErrorKind::Precondition, "frozen reduction needs n >= 2");
    const int N = 2 * n;
    const int i = frozen_arch_position(s, which), j = (i + 1) % N;
    const LinkPattern p = four_arch_pattern(s);
    if (!p.has_little_arch(i)) throw Error(ErrorKind::NoLittleArch, "expected a little arch");
    FourArchSpec sm = s;
    (which == FrozenArch::tx ? sm.a : sm.d) -= 1;
    const LinkPattern ps = four_arch_pattern(sm);
    if (remove_little_arch(p, i) != ps) throw Error(ErrorKind::InvalidSpec, "arch removal does not give the smaller pattern");

    auto z = impose_wheel(base, i);
    std::vector<CycloNum> rest;
    for (int k = 0; k < N; ++k)
        if (k != i && k != j) rest.push_back(z[static_cast<std::size_t>(k)]);

    std::vector<int> run_of(static_cast<std::size_t>(N), -1);
    auto runs = p.free_sequences();
    for (std::size_t r = 0; r < runs.size(); ++r)
        for (int k : runs[r]) run_of[static_cast<std::size_t>(k)] = static_cast<int>(r);
    const int ri = run_of[static_cast<std::size_t>(i)], rj = run_of[static_cast<std::size_t>(j)];
    const auto& zi = z[static_cast<std::size_t>(i)];
    CycloNum pref(1);
    for (int k = 0; k < N; ++k) {
        const int rk = run_of[static_cast<std::size_t>(k)];
        if (rk != ri && rk != rj) pref *= q_power(1) * zi - z[static_cast<std::size_t>(k)];
    }
    const long li = static_cast<long>(runs[static_cast<std::size_t>(ri)].size()) - 1;
    const long lj = static_cast<long>(runs[static_cast<std::size_t>(rj)].size()) - 1;
    pref *= q_power(2 * li + lj);
    if (li % 2) pref = -pref;

    auto big = ground_state_numeric(n, z);
    auto small = ground_state_numeric(n - 1, rest);
    FrozenReport rep;
    rep.prefactor = pref;
    rep.ok = four_arch_phi(big, p, z) == pref * four_arch_phi(small, ps, rest);
    return rep;
}

} // namespace arches
