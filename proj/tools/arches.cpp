// arches: command-line front end.  Values are printed as exact strings.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "arches/fourarch.hpp"
#include "arches/fpl.hpp"
#include "arches/loopmodel.hpp"
#include "arches/nested.hpp"
#include "arches/report.hpp"
#include "arches/tilings.hpp"
#include "arches/verify.hpp"

using namespace arches;
using report::Format;
using report::Json;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::string format = "text";
    double max_seconds = 0;
    Format fmt() const { return report::parse_format(format); }
};

std::uint64_t default_seed() {
    const char* s = std::getenv("ARCHES_SEED");
    if (!s || !*s) return 1;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "ARCHES_SEED is not an unsigned integer");
    }
}

std::vector<CycloNum> parse_list(const std::string& s) {
    std::vector<CycloNum> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        auto cut = s.find(',', pos);
        out.push_back(CycloNum::parse(s.substr(pos, cut == std::string::npos ? std::string::npos : cut - pos)));
        if (cut == std::string::npos) break;
        pos = cut + 1;
    }
    return out;
}

Json strings(const std::vector<CycloNum>& xs) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(x.to_string());
    return j;
}

// Runs f on a worker and gives up after the budget.  Computations are pure,
// so the abandoned worker is simply dropped at exit.
int with_budget(double seconds, const std::function<int()>& f) {
    if (seconds <= 0) return f();
    auto task = std::make_shared<std::packaged_task<int()>>(f);
    auto fut = task->get_future();
    std::thread([task] { (*task)(); }).detach();
    if (fut.wait_for(std::chrono::duration<double>(seconds)) == std::future_status::timeout) {
        std::cerr << "arches: time limit of " << seconds << " s reached\n";
        std::cout.flush();
        std::_Exit(3);
    }
    return fut.get();
}

// ---- phi ---------------------------------------------------------------------

struct PhiArgs {
    int a = 0, b = 0, c = 0;
    std::string alphas, betas, gammas, method = "subset";
};

int run_phi(const Globals& g, const PhiArgs& o) {
    const NestedArchSpec s{o.a, o.b, o.c};
    if (s.a < 0 || s.b < 0 || s.c < 0 || s.n() == 0) throw Error(ErrorKind::InvalidSpec, "need a, b, c >= 0 with a+b+c >= 1");
    ParamSet p{parse_list(o.alphas), parse_list(o.betas), parse_list(o.gammas)};
    if (p.alphas.empty() && p.betas.empty() && p.gammas.empty() && o.method != "homogeneous") {
        std::mt19937_64 rng(g.seed);
        p = random_params(rng, s);
    }
    CycloNum v;
    if (o.method == "subset") v = phi_subset(s, p);
    else if (o.method == "det") v = phi_det(s, p);
    else if (o.method == "lgv") v = phi_lgv(s, p);
    else if (o.method == "tiling") v = partition_function(build_hexagon(s.a, s.b, s.c, p));
    else if (o.method == "homogeneous") v = phi_homogeneous(s);
    else if (o.method == "schur") {
        auto same = [](const std::vector<CycloNum>& xs) {
            for (const auto& x : xs)
                if (x != xs.front()) return false;
            return !xs.empty();
        };
        if (!same(p.alphas) || !same(p.betas))
            throw Error(ErrorKind::Precondition, "schur method needs all alphas equal and all betas equal");
        v = phi_schur_specialized(s, p.alphas.front(), p.betas.front(), p.gammas);
    } else
        throw Error(ErrorKind::Parse, "unknown method '" + o.method + "'");

    report::Table t;
    t.head = {{"a", s.a}, {"b", s.b}, {"c", s.c}, {"method", o.method}};
    if (o.method != "homogeneous") {
        t.head["alphas"] = strings(p.alphas);
        t.head["betas"] = strings(p.betas);
        t.head["gammas"] = strings(p.gammas);
    }
    t.key_name = "quantity";
    t.rows.push_back({g.fmt() == Format::text ? "" : "phi", v.to_string()});
    report::emit(std::cout, t, g.fmt());
    return 0;
}

// ---- psi -----------------------------------------------------------------------

struct PsiArgs {
    int n = 2;
    std::string z, pattern;
    bool homogeneous = false;
};

int run_psi(const Globals& g, const PsiArgs& o) {
    if (o.n < 1 || o.n > 5) throw Error(ErrorKind::SizeLimit, "psi is limited to 1 <= n <= 5");
    report::Table t;
    t.key_name = "pattern";
    t.rows_name = "components";
    t.head["n"] = o.n;
    std::vector<LinkPattern> pats;
    std::vector<CycloNum> vals;
    if (o.homogeneous) {
        t.head["z"] = "homogeneous, divided by the smallest component";
        pats = enumerate_patterns(o.n);
        vals = homogeneous_census(o.n);
    } else {
        auto z = parse_list(o.z);
        if (z.empty()) {
            std::mt19937_64 rng(g.seed);
            z = random_spectral(rng, 2 * o.n);
        }
        if (z.size() != static_cast<std::size_t>(2 * o.n)) throw Error(ErrorKind::InconsistentSize, "need 2n spectral parameters");
        t.head["z"] = strings(z);
        auto gs = ground_state_numeric(o.n, z);
        pats = gs.patterns;
        vals = gs.components;
    }
    for (std::size_t k = 0; k < pats.size(); ++k) {
        if (!o.pattern.empty() && pats[k].word() != o.pattern) continue;
        t.rows.push_back({pats[k].word(), vals[k].to_string()});
    }
    if (!o.pattern.empty() && t.rows.empty()) throw Error(ErrorKind::InvalidSpec, "no pattern '" + o.pattern + "' of size " + std::to_string(o.n));
    report::emit(std::cout, t, g.fmt());
    return 0;
}

// ---- tilings -------------------------------------------------------------------

struct TilingArgs {
    int a = 1, b = 1, c = 1, d = 0, e = 0;
    std::string region, mode = "difference";
    std::string alphas, betas, gammas;
    bool partition = false, write = false;
};

TilingRegion load_region(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open region file '" + path + "'");
    return read_region(in);
}

WeightMode parse_mode(const std::string& m) {
    if (m == "difference") return WeightMode::difference;
    if (m == "q") return WeightMode::q_difference;
    throw Error(ErrorKind::Parse, "mode must be 'difference' or 'q'");
}

int run_tilings_region(const Globals& g, const TilingArgs& o, bool partition) {
    auto r = load_region(o.region);
    report::Table t;
    t.key_name = "quantity";
    t.head = {{"region", o.region}, {"triangles", r.size()}};
    const bool text = g.fmt() == Format::text;
    if (partition) {
        t.head["mode"] = o.mode;
        t.rows.push_back({text ? "" : "partition", partition_function(r, parse_mode(o.mode)).to_string()});
    } else {
        t.rows.push_back({text ? "" : "count", tiling_count(r).get_str()});
    }
    report::emit(std::cout, t, g.fmt());
    return 0;
}

int run_tilings_hexagon(const Globals& g, const TilingArgs& o) {
    const NestedArchSpec s{o.a, o.b, o.c};
    if (s.a < 0 || s.b < 0 || s.c < 0) throw Error(ErrorKind::InvalidSpec, "hexagon sides must be non-negative");
    if (o.write) {
        ParamSet p{parse_list(o.alphas), parse_list(o.betas), parse_list(o.gammas)};
        if (p.alphas.empty() && p.betas.empty() && p.gammas.empty()) {
            std::mt19937_64 rng(g.seed);
            p = random_params(rng, s);
        }
        write_region(std::cout, build_hexagon(s.a, s.b, s.c, p));
        return 0;
    }
    report::Table t;
    t.key_name = "quantity";
    t.head = {{"a", s.a}, {"b", s.b}, {"c", s.c}};
    const bool text = g.fmt() == Format::text;
    if (o.partition) {
        ParamSet p{parse_list(o.alphas), parse_list(o.betas), parse_list(o.gammas)};
        if (p.alphas.empty() && p.betas.empty() && p.gammas.empty()) {
            std::mt19937_64 rng(g.seed);
            p = random_params(rng, s);
        }
        t.head["alphas"] = strings(p.alphas);
        t.head["betas"] = strings(p.betas);
        t.head["gammas"] = strings(p.gammas);
        t.head["mode"] = o.mode;
        t.rows.push_back({text ? "" : "partition", partition_function(build_hexagon(s.a, s.b, s.c, p), parse_mode(o.mode)).to_string()});
    } else {
        const mpz_class cnt = tiling_count(build_hexagon(s.a, s.b, s.c));
        t.rows.push_back({"count", cnt.get_str()});
        t.rows.push_back({"macmahon", macmahon(s.a, s.b, s.c).get_str()});
    }
    report::emit(std::cout, t, g.fmt());
    return 0;
}

int run_tilings_four_arch(const Globals& g, const TilingArgs& o) {
    const FourArchSpec s{o.a, o.b, o.e, o.c, o.d};
    auto fr = build_four_arch(s);
    report::Table t;
    t.key_name = "height";
    t.value_name = "tilings";
    t.rows_name = "classes";
    t.head = {{"a", s.a}, {"b", s.b}, {"e", s.e}, {"c", s.c}, {"d", s.d}, {"pattern", four_arch_pattern(s).word()},
              {"triangles", fr.region.size()}, {"target_height", fr.target_height}, {"count", four_arch_tiling_count(s).get_str()}};
    for (const auto& [h, k] : four_arch_height_classes(fr))
        t.rows.push_back({std::to_string(h) + (h == fr.target_height ? "*" : ""), k.get_str()});
    if (g.fmt() == Format::text) std::cout << "pattern " << four_arch_pattern(s).word() << ", count " << four_arch_tiling_count(s).get_str() << " (class marked *)\n";
    report::emit(std::cout, t, g.fmt());
    return 0;
}

// ---- fpl -------------------------------------------------------------------------

int run_fpl(const Globals& g, int n, bool json, bool tsv) {
    Format f = g.fmt();
    if (json) f = Format::json;
    if (tsv) f = Format::tsv;
    report::emit(std::cout, fpl_counts(n), f);
    return 0;
}

// ---- verify ----------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    verify::Bounds bounds;
    bool timing = false;
};

int run_verify_cmd(const Globals& g, VerifyArgs o) {
    std::string suite = o.suite == "phi" ? "phi-cross" : o.suite;
    std::vector<std::string> names;
    if (suite == "all") names = verify::suite_names();
    else {
        verify::suite_groups(suite); // throws on an unknown name
        names = {suite};
    }
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<verify::Report> reports;
    bool ok = true;
    for (const auto& name : names) {
        double left = 0;
        if (g.max_seconds > 0) {
            left = g.max_seconds - std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (left <= 0) left = 1e-9;
        }
        reports.push_back(verify::run_verify(name, o.bounds, g.seed, left));
        ok = ok && reports.back().ok();
    }
    const Format f = g.fmt();
    if (reports.size() == 1) {
        report::emit(std::cout, reports.front(), f, o.timing);
    } else if (f == Format::json) {
        Json j;
        j["seed"] = g.seed;
        j["pass"] = ok;
        j["suites"] = Json::array();
        for (const auto& r : reports) j["suites"].push_back(report::to_json(r, o.timing));
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports) report::emit(std::cout, r, f, o.timing);
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for the loop model ground state, nested-arch formulas and lozenge tilings", "arches"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    try {
        g.seed = default_seed();
    } catch (const Error& e) {
        std::cerr << "arches: " << e.what() << '\n';
        return 2;
    }
    app.add_option("--seed", g.seed, "random seed (default $ARCHES_SEED, else 1)");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--max-seconds", g.max_seconds, "abort after this many seconds (0 = no limit)")->check(CLI::NonNegativeNumber);

    std::function<int()> action;

    PhiArgs phi;
    auto* cphi = app.add_subcommand("phi", "evaluate Phi_{a,b,c}");
    cphi->add_option("--a", phi.a)->required();
    cphi->add_option("--b", phi.b)->required();
    cphi->add_option("--c", phi.c)->required();
    cphi->add_option("--alphas", phi.alphas, "b+c comma-separated values (random if all lists are omitted)");
    cphi->add_option("--betas", phi.betas, "a+c values");
    cphi->add_option("--gammas", phi.gammas, "a+b values");
    cphi->add_option("--method", phi.method)->check(CLI::IsMember({"subset", "det", "lgv", "schur", "tiling", "homogeneous"}));
    cphi->callback([&] { action = [&] { return run_phi(g, phi); }; });

    PsiArgs psi;
    auto* cpsi = app.add_subcommand("psi", "ground state components");
    cpsi->add_option("--n", psi.n)->required();
    cpsi->add_option("--z", psi.z, "2n comma-separated spectral parameters (random if omitted)");
    cpsi->add_option("--pattern", psi.pattern, "only this pattern, as a parenthesis word");
    cpsi->add_flag("--homogeneous", psi.homogeneous, "all z = 1, divided by the smallest component");
    cpsi->callback([&] { action = [&] { return run_psi(g, psi); }; });

    TilingArgs til;
    auto* ctil = app.add_subcommand("tilings", "lozenge tilings");
    ctil->require_subcommand(1);
    auto* chex = ctil->add_subcommand("hexagon", "the a x b x c hexagon");
    chex->add_option("--a", til.a)->required();
    chex->add_option("--b", til.b)->required();
    chex->add_option("--c", til.c)->required();
    chex->add_flag("--partition", til.partition, "weighted sum instead of the count");
    chex->add_flag("--write-region", til.write, "print the region file instead");
    chex->add_option("--alphas", til.alphas);
    chex->add_option("--betas", til.betas);
    chex->add_option("--gammas", til.gammas);
    chex->add_option("--mode", til.mode)->check(CLI::IsMember({"difference", "q"}));
    chex->callback([&] { action = [&] { return run_tilings_hexagon(g, til); }; });
    auto* ccount = ctil->add_subcommand("count", "count tilings of a region file");
    ccount->add_option("--region", til.region)->required();
    ccount->callback([&] { action = [&] { return run_tilings_region(g, til, false); }; });
    auto* cpart = ctil->add_subcommand("partition", "partition function of a region file");
    cpart->add_option("--region", til.region)->required();
    cpart->add_option("--mode", til.mode)->check(CLI::IsMember({"difference", "q"}));
    cpart->callback([&] { action = [&] { return run_tilings_region(g, til, true); }; });
    auto* cfour = ctil->add_subcommand("four-arch", "cone region for (a, b | e | c, d), e = 0 only");
    cfour->add_option("--a", til.a)->required();
    cfour->add_option("--b", til.b)->required();
    cfour->add_option("--c", til.c)->required();
    cfour->add_option("--d", til.d)->required();
    cfour->add_option("--e", til.e);
    cfour->callback([&] { action = [&] { return run_tilings_four_arch(g, til); }; });

    int fpl_n = 3;
    bool fpl_json = false, fpl_tsv = false;
    auto* cfpl = app.add_subcommand("fpl", "fully packed loop census");
    auto fpl_opts = [&](CLI::App* c) {
        c->add_option("--n", fpl_n)->check(CLI::Range(1, kFplMaxN));
        c->add_flag("--json", fpl_json);
        c->add_flag("--tsv", fpl_tsv);
    };
    fpl_opts(cfpl);
    auto* ccensus = cfpl->add_subcommand("census", "per-pattern counts");
    fpl_opts(ccensus);
    cfpl->callback([&] { action = [&] { return run_fpl(g, fpl_n, fpl_json, fpl_tsv); }; });

    VerifyArgs ver;
    auto* cver = app.add_subcommand("verify", "run verification suites; exit 0 iff every case passes");
    std::string suites_help = "all";
    for (const auto& s : verify::suite_names()) suites_help += ", " + s;
    cver->add_option("suite,--suite", ver.suite, suites_help);
    cver->add_option("--n-max", ver.bounds.n_max, "loop-model sizes");
    cver->add_option("--box-max", ver.bounds.box_max, "hexagon sides for the Phi identities");
    cver->add_option("--tile-max", ver.bounds.tile_max, "hexagon sides for tiling counts");
    cver->add_option("--homog-max", ver.bounds.homog_max, "hexagon sides for the homogeneous value");
    cver->add_option("--samples", ver.bounds.samples, "random draws per size");
    cver->add_option("--ratio-samples", ver.bounds.ratio_samples);
    cver->add_flag("--rs-n6", ver.bounds.rs_n6, "include n = 6 in the rs suite");
    cver->add_flag("--timing", ver.timing, "include wall time (reports are then not reproducible)");
    cver->callback([&] { action = [&] { return run_verify_cmd(g, ver); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        // verify has its own cooperative budget
        if (cver->parsed()) return action();
        return with_budget(g.max_seconds, action);
    } catch (const Error& e) {
        std::cerr << "arches: " << e.what() << '\n';
        return 2;
    }
}
