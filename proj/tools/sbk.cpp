// Command-line front end: exact verification of the osp(2|2) and
// osp(1|2)(+)u(1) super-bialgebra catalog.

#include "sbk/autos.hpp"
#include "sbk/catalog.hpp"
#include "sbk/cocycle_space.hpp"
#include "sbk/cybe.hpp"
#include "sbk/equiv.hpp"
#include "sbk/io.hpp"
#include "sbk/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SBK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring non-numeric SBK_SEED\n";
        }
    }
    return 42;
}

const sbk::SuperAlgebra& resolve_algebra(const std::string& name,
                                         std::optional<sbk::SuperAlgebra>& storage) {
    if (std::filesystem::exists(name)) {
        storage.emplace(sbk::load_algebra(name));
        return *storage;
    }
    return sbk::catalog().algebra(name);
}

sbk::ParamMap parse_params(const std::vector<std::string>& kvs) {
    sbk::ParamMap values;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw sbk::LoadError("--param expects name=value, got '" + kv + "'");
        auto q = sbk::parse_rational(kv.substr(eq + 1));
        if (!q) throw sbk::LoadError("bad rational in --param '" + kv + "'");
        values[kv.substr(0, eq)] = *q;
    }
    return values;
}

void print_block(const sbk::SuperAlgebra& alg, const sbk::RMatrix& r) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            if (r.at(i, j) != 0)
                std::cout << "  r[" << alg.generator_names()[i] << ", "
                          << alg.generator_names()[j] << "] = " << sbk::to_string(r.at(i, j))
                          << "\n";
}

int cmd_verify_algebra(const std::string& name) {
    std::optional<sbk::SuperAlgebra> storage;
    const auto& alg = resolve_algebra(name, storage);
    auto rep = sbk::verify_lie_superalgebra(alg);
    std::cout << "algebra " << alg.name() << " (dim " << alg.dim() << ")\n"
              << "  parity closure:       " << (rep.parity_closure ? "pass" : "fail") << "\n"
              << "  graded antisymmetry:  " << (rep.graded_antisymmetry ? "pass" : "fail")
              << "\n"
              << "  graded Jacobi:        " << (rep.graded_jacobi ? "pass" : "fail") << "\n";
    for (const auto& v : rep.violations) {
        std::cout << "  violation [" << v.axiom << "] at (";
        for (std::size_t t = 0; t < v.indices.size(); ++t)
            std::cout << (t ? ", " : "") << alg.generator_names()[v.indices[t]];
        std::cout << "): residual " << sbk::to_string(v.residual) << "\n";
    }
    return rep.pass() ? kExitPass : kExitFail;
}

int cmd_cocycle_space(const std::string& name, const std::string& export_path) {
    std::optional<sbk::SuperAlgebra> storage;
    const auto& alg = resolve_algebra(name, storage);
    auto space = sbk::cocycle_space(alg);
    std::cout << "cocycle space of " << alg.name() << ": dimension " << space.dimension
              << "\n";
    std::size_t solved = 0;
    for (const auto& f : space.basis)
        if (sbk::coboundary_solve(alg, f).coboundary) ++solved;
    std::cout << "coboundary: " << solved << "/" << space.dimension
              << " basis cobrackets solvable\n";
    if (!export_path.empty()) {
        std::ofstream out(export_path);
        out << sbk::cocycle_space_to_json(alg, space).dump(2) << "\n";
        std::cout << "basis exported to " << export_path << "\n";
    }
    return solved == space.dimension ? kExitPass : kExitFail;
}

int check_r_instance(const sbk::SuperAlgebra& alg, const sbk::RMatrix& r,
                     const std::string& label) {
    bool even = r.is_even(alg);
    bool anti = r.is_graded_antisymmetric(alg);
    auto f = sbk::coboundary_delta(alg, r);
    auto cb = sbk::verify_cobracket(alg, f, 4);
    auto cc = sbk::verify_cocycle(alg, f, 4);
    bool cybe = sbk::is_cybe(alg, r);
    bool adinv = cybe || sbk::ad_invariant(alg, sbk::schouten_square(alg, r));
    std::cout << label << "\n"
              << "  even:                  " << (even ? "pass" : "fail") << "\n"
              << "  graded antisymmetric:  " << (anti ? "pass" : "fail") << "\n"
              << "  cobracket axioms:      " << (cb.pass() ? "pass" : "fail") << "\n"
              << "  cocycle condition:     " << (cc.pass ? "pass" : "fail") << "\n"
              << "  CYBE:                  " << (cybe ? "yes" : "no") << "\n"
              << "  Schouten ad-invariant: " << (adinv ? "yes" : "no") << "\n";
    return (even && anti && cb.pass() && cc.pass) ? kExitPass : kExitFail;
}

int cmd_check_r(const std::string& name, const std::string& id,
                const std::vector<std::string>& params, bool grid,
                const std::string& file) {
    const auto& cat = sbk::catalog();
    std::optional<sbk::SuperAlgebra> storage;
    const auto& alg = resolve_algebra(name, storage);
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw sbk::LoadError("cannot open '" + file + "'");
        sbk::json j;
        in >> j;
        auto loaded = sbk::rmatrix_from_json(alg, j);
        if (loaded.adjusted)
            std::cout << "note: entries were even-projected/antisymmetrized\n";
        return check_r_instance(alg, loaded.r, "r-matrix from " + file);
    }
    const auto& tpl = cat.r_template(id);
    if (tpl.algebra != alg.name() && !(tpl.algebra == "osp12_u1" && alg.name() == "osp12_u1"))
        throw sbk::LoadError("template '" + id + "' lives over " + tpl.algebra);
    if (grid || (params.empty() && !tpl.rational_function)) {
        if (tpl.rational_function)
            std::cout << "note: rational-function template; grid points hitting "
                         "exclusions are skipped\n";
        int worst = kExitPass;
        std::size_t skipped = 0;
        for (const auto& values : tpl.grid()) {
            std::ostringstream label;
            label << id << " at {";
            for (const auto& [k, v] : values) label << k << "=" << sbk::to_string(v) << " ";
            label << "}";
            try {
                worst = std::max(worst, check_r_instance(alg, tpl.evaluate(alg, values),
                                                         label.str()));
            } catch (const sbk::ExcludedPoint&) {
                ++skipped;
            }
        }
        if (skipped) std::cout << skipped << " grid points excluded\n";
        return worst;
    }
    sbk::ParamMap values = parse_params(params);
    if (params.empty() && tpl.rational_function) {
        // sample three admissible points deterministically
        sbk::RationalSampler sampler(default_seed());
        int worst = kExitPass;
        for (int s = 0; s < 3; ++s) {
            for (int attempt = 0; attempt < 100; ++attempt) {
                sbk::ParamMap vals;
                for (const auto& p : tpl.params) vals[p.name] = sampler.next();
                try {
                    auto r = tpl.evaluate(alg, vals);
                    std::ostringstream label;
                    label << id << " at sample {";
                    for (const auto& [k, v] : vals)
                        label << k << "=" << sbk::to_string(v) << " ";
                    label << "}";
                    worst = std::max(worst, check_r_instance(alg, r, label.str()));
                    break;
                } catch (const sbk::ExcludedPoint&) {
                    continue;
                }
            }
        }
        return worst;
    }
    return check_r_instance(alg, tpl.evaluate(alg, values), id);
}

int cmd_cybe(const std::string& name, const std::string& id,
             const std::vector<std::string>& params) {
    const auto& cat = sbk::catalog();
    std::optional<sbk::SuperAlgebra> storage;
    const auto& alg = resolve_algebra(name, storage);
    const auto& tpl = cat.r_template(id);
    sbk::ParamMap values = parse_params(params);
    auto r = tpl.evaluate(alg, values);
    auto square = sbk::schouten_square(alg, r);
    bool zero = square.is_zero();
    std::cout << id << ": CYBE " << (zero ? "holds" : "fails") << "\n";
    if (!zero) {
        std::cout << "  ad-invariant obstruction: "
                  << (sbk::ad_invariant(alg, square) ? "yes (modified CYBE)" : "no") << "\n";
        std::cout << "  [[r,r]] entries:\n";
        for (const auto& [i, j, k, v] : square.entries())
            std::cout << "    (" << alg.generator_names()[i] << ", "
                      << alg.generator_names()[j] << ", " << alg.generator_names()[k]
                      << ") = " << sbk::to_string(v) << "\n";
    }
    return kExitPass;
}

int cmd_equiv(const std::string& id, bool all, std::size_t samples, std::uint64_t seed) {
    const auto& cat = sbk::catalog();
    int exit = kExitPass;
    auto run = [&](const sbk::EquivalenceWitness& w) {
        auto rep = sbk::verify_equivalence(w, samples, seed);
        const char* verdict = rep.verdict == sbk::EquivVerdict::pass      ? "pass"
                              : rep.verdict == sbk::EquivVerdict::skipped ? "skipped"
                                                                          : "fail";
        std::cout << "[" << verdict << "] " << w.id << ": " << rep.detail << "\n";
        if (rep.verdict == sbk::EquivVerdict::fail) exit = kExitFail;
        if (rep.verdict == sbk::EquivVerdict::skipped &&
            w.status != sbk::WitnessStatus::unverifiable)
            exit = kExitFail;
    };
    if (all) {
        for (const auto& w : cat.witness_list()) run(w);
    } else {
        run(cat.witness(id));
    }
    return exit;
}

int cmd_normal_step(const std::string& name, const std::string& id,
                    const std::vector<std::string>& params) {
    const auto& cat = sbk::catalog();
    std::optional<sbk::SuperAlgebra> storage;
    const auto& alg = resolve_algebra(name, storage);
    const auto& tpl = cat.r_template(id);
    auto r = tpl.evaluate(alg, parse_params(params));
    auto res = sbk::fermionic_normal_step(alg, r);
    std::cout << "normal step on " << id << ":\n"
              << "  swap applied: " << (res.swapped ? "yes" : "no") << "\n"
              << "  exact normalization: " << (res.exact ? "yes" : res.note.c_str()) << "\n"
              << "result entries:\n";
    print_block(alg, res.r);
    auto blocks = sbk::block_split(alg, res.r);
    sbk::RationalMatrix vv(2, 2), ww(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            vv(i, j) = blocks.fermionic(i, j);
            ww(i, j) = blocks.fermionic(i + 2, j + 2);
        }
    std::cout << "rank r_VV = " << sbk::rank(vv) << ", rank r_WW = " << sbk::rank(ww)
              << "\n";
    return kExitPass;
}

int cmd_report(const std::string& format, std::uint64_t seed, std::size_t samples,
               const std::string& command_echo) {
    auto rep = sbk::run_full_report(seed, samples);
    rep.command = command_echo;
    if (format == "json") {
        std::cout << sbk::report_to_json(rep, true).dump(2) << "\n";
    } else {
        std::cout << sbk::report_to_text(rep);
    }
    return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the osp(2|2) and osp(1|2)(+)u(1) classical "
                 "r-matrix catalog"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();

    std::string alg_name, tpl_id, file, export_path, format = "text", witness_id;
    std::vector<std::string> params;
    bool grid = false, all = false;
    std::size_t samples = 5;

    auto* verify = app.add_subcommand("verify-algebra", "check the Lie superalgebra axioms");
    verify->add_option("algebra", alg_name, "builtin name (osp22, osp12_u1) or JSON file")
        ->required();

    auto* cspace = app.add_subcommand("cocycle-space",
                                      "dimension and basis of the compatibility solutions");
    cspace->add_option("algebra", alg_name)->required();
    cspace->add_option("--export", export_path, "write the basis as JSON");

    auto* checkr = app.add_subcommand("check-r", "verify an r-matrix template or file");
    checkr->add_option("algebra", alg_name)->required();
    checkr->add_option("id", tpl_id, "catalog template id");
    checkr->add_option("--param", params, "parameter assignment name=value");
    checkr->add_flag("--grid", grid, "check the whole verification grid");
    checkr->add_option("--file", file, "load the r-matrix from JSON instead");

    auto* cybe = app.add_subcommand("cybe", "Schouten square and Yang-Baxter status");
    cybe->add_option("algebra", alg_name)->required();
    cybe->add_option("id", tpl_id)->required();
    cybe->add_option("--param", params, "parameter assignment name=value");

    auto* equiv = app.add_subcommand("equiv", "verify equivalence witnesses");
    equiv->add_option("witness", witness_id, "witness id (see --all for the list)");
    equiv->add_flag("--all", all, "run every cataloged witness");
    equiv->add_option("--samples", samples, "exact samples per witness (default 5)");
    equiv->add_option("--seed", seed, "sampling seed (default 42 or SBK_SEED)");

    auto* nstep = app.add_subcommand("normal-step",
                                     "rank-ordering swap and fermionic block congruence");
    nstep->add_option("algebra", alg_name)->required();
    nstep->add_option("id", tpl_id)->required();
    nstep->add_option("--param", params, "parameter assignment name=value");

    auto* report = app.add_subcommand("report", "run the full acceptance suite");
    report->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    report->add_option("--seed", seed, "sampling seed (default 42 or SBK_SEED)");
    report->add_option("--samples", samples, "witness samples (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify_algebra(alg_name);
        if (cspace->parsed()) return cmd_cocycle_space(alg_name, export_path);
        if (checkr->parsed()) {
            if (tpl_id.empty() && file.empty())
                throw sbk::LoadError("check-r needs a template id or --file");
            return cmd_check_r(alg_name, tpl_id, params, grid, file);
        }
        if (cybe->parsed()) return cmd_cybe(alg_name, tpl_id, params);
        if (equiv->parsed()) {
            if (!all && witness_id.empty())
                throw sbk::LoadError("equiv needs a witness id or --all");
            return cmd_equiv(witness_id, all, samples, seed);
        }
        if (nstep->parsed()) return cmd_normal_step(alg_name, tpl_id, params);
        if (report->parsed()) {
            std::string echo;
            for (int i = 0; i < argc; ++i) echo += std::string(i ? " " : "") + argv[i];
            return cmd_report(format, seed, samples, echo);
        }
    } catch (const sbk::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sbk::ExcludedPoint& e) {
        std::cerr << "error: parameters hit an exclusion: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
