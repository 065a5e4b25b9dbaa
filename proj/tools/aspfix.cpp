// aspfix: answer-set solving, maximal consistent subsets, and minimal
// corrections for ground logic programs, plus instance generation and a
// benchmark harness.
//
// Exit codes:
//   solve            10 consistent, 20 inconsistent, 1 error
//   maxcon, correct   0 success, 30 no consistent subset / no correction,
//                     1 error
//   gen-*, bench      0 success, 1 error

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aspfix/bench.hpp"
#include "aspfix/correction.hpp"
#include "aspfix/generators.hpp"
#include "aspfix/grounder.hpp"
#include "aspfix/maxcon.hpp"
#include "aspfix/parser.hpp"
#include "aspfix/solver.hpp"

namespace {

using namespace aspfix;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct CommonOpts {
    char algo = 'p';
    std::uint64_t seed = 0;
    std::uint64_t budget_ms = 0;  // 0 = no budget
    std::string oracle = "search";
    std::string format = "json";
    bool shuffle = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_algo = true) {
    if (with_algo)
        cmd->add_option("--algo", o.algo, "algorithm: a, u, p, or x")
            ->check(CLI::IsMember({'a', 'u', 'p', 'x'}));
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--budget-ms", o.budget_ms, "time budget in ms (0 = none)");
    cmd->add_option("--oracle", o.oracle, "solver backend")
        ->check(CLI::IsMember({"brute", "search"}));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

SolverConfig make_config(const CommonOpts& o, unsigned brute_ceiling) {
    SolverConfig cfg;
    cfg.backend = o.oracle == "brute" ? Backend::BruteForce : Backend::Search;
    cfg.seed = o.seed;
    cfg.brute_force_max_atoms = brute_ceiling;
    if (o.budget_ms) cfg = cfg.with_budget(std::chrono::milliseconds(o.budget_ms));
    return cfg;
}

Program load_ground(const std::string& file) {
    Program p = parse_program(slurp(file), file);
    return ground(p).program;
}

nlohmann::json atoms_json(const AtomSet& atoms) {
    auto arr = nlohmann::json::array();
    for (const auto& a : atoms) arr.push_back(a.to_string());
    return arr;
}

nlohmann::json rules_json(const std::vector<Rule>& rules) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rules) arr.push_back(r.to_string());
    return arr;
}

int cmd_solve(const std::string& file, std::uint64_t models, const CommonOpts& o,
              unsigned brute_ceiling) {
    Program g = load_ground(file);
    SolverConfig cfg = make_config(o, brute_ceiling);
    auto found = enumerate_answer_sets(g, cfg, models);
    if (found.empty()) {
        std::cout << "UNSAT\n";
        return 20;
    }
    std::cout << "SAT\n";
    for (const auto& m : found) {
        std::cout << "Answer:";
        for (const auto& a : m.atoms) std::cout << ' ' << a.to_string();
        std::cout << '\n';
    }
    std::cout << "Models: " << found.size() << (found.size() == models ? "+" : "") << '\n';
    return 10;
}

TargetSet resolve_targets(const Program& g, const std::string& target_pred,
                          const std::string& target_file, const CommonOpts& o) {
    std::vector<Atom> atoms;
    if (!target_pred.empty()) {
        auto slash = target_pred.rfind('/');
        if (slash == std::string::npos)
            throw std::runtime_error("--target-pred must be pred/arity: " + target_pred);
        std::string pred = target_pred.substr(0, slash);
        std::size_t arity = std::stoul(target_pred.substr(slash + 1));
        AtomSet seen;
        for (const auto& a : atoms_of(g))
            if (a.predicate == pred && a.arity() == arity && seen.insert(a).second)
                atoms.push_back(a);
    } else if (!target_file.empty()) {
        std::istringstream in(slurp(target_file));
        std::string line;
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '%') continue;
            auto last = line.find_last_not_of(" \t\r.");
            atoms.push_back(parse_atom(line.substr(first, last - first + 1), target_file));
        }
    }
    if (o.shuffle) {
        std::mt19937_64 rng(o.seed);
        std::shuffle(atoms.begin(), atoms.end(), rng);
    }
    return TargetSet(std::move(atoms));
}

int cmd_maxcon(const std::string& file, const std::string& target_pred,
               const std::string& target_file, const CommonOpts& o, unsigned brute_ceiling) {
    Program g = load_ground(file);
    TargetSet s = resolve_targets(g, target_pred, target_file, o);
    SolverConfig cfg = make_config(o, brute_ceiling);
    MaxConResult r;
    try {
        r = run_maxcon(*algo_from_letter(o.algo), g, s, cfg);
    } catch (const NoConsistentSubset& e) {
        std::cerr << e.what() << '\n';
        return 30;
    }
    if (o.format == "json") {
        nlohmann::json j;
        j["L"] = atoms_json(r.subset);
        j["witness"] = atoms_json(r.witness.atoms);
        j["oracle_calls"] = r.oracle_calls;
        j["algo"] = std::string(1, o.algo);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "L:";
        for (const auto& a : r.subset) std::cout << ' ' << a.to_string();
        std::cout << "\nwitness:";
        for (const auto& a : r.witness.atoms) std::cout << ' ' << a.to_string();
        std::cout << "\noracle_calls: " << r.oracle_calls << "\nalgo: " << o.algo << '\n';
    }
    return 0;
}

int cmd_correct(const std::string& file, const std::string& spec_file, const CommonOpts& o,
                unsigned brute_ceiling) {
    Program g = load_ground(file);
    CorrectionSpec spec = CorrectionSpec::from_json_text(slurp(spec_file), spec_file);
    SolverConfig cfg = make_config(o, brute_ceiling);
    Correction c;
    try {
        c = min_correct(g, spec, *algo_from_letter(o.algo), cfg);
    } catch (const NoCorrection& e) {
        std::cerr << e.what() << '\n';
        return 30;
    } catch (const NoAdditionCandidates& e) {
        std::cerr << e.what() << '\n';
        return 30;
    }
    if (o.format == "json") {
        nlohmann::json j;
        j["remove"] = rules_json(c.removed);
        j["add"] = rules_json(c.added);
        j["materialized_A"] = rules_json(c.materialized_additions);
        j["oracle_calls"] = c.oracle_calls;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "remove:";
        for (const auto& r : c.removed) std::cout << " " << r.to_string();
        std::cout << "\nadd:";
        for (const auto& r : c.added) std::cout << " " << r.to_string();
        std::cout << "\noracle_calls: " << c.oracle_calls << '\n';
    }
    return 0;
}

int write_instance(const GeneratedInstance& inst, const std::string& out_dir) {
    std::string base = out_dir.empty() ? inst.name : out_dir + "/" + inst.name;
    spit(base + ".lp", inst.program_text);
    spit(base + ".spec.json", inst.spec_text);
    std::cout << base << ".lp\n" << base << ".spec.json\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"answer-set consistency restoration toolkit"};
    app.require_subcommand(1);

    unsigned brute_ceiling = 20;
    app.add_option("--brute-ceiling", brute_ceiling,
                   "maximum atom count accepted by the brute-force backend")
        ->capture_default_str();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "compute answer sets of a program");
    std::string solve_file;
    std::uint64_t models = 1;
    CommonOpts solve_opts;
    solve_cmd->add_option("file", solve_file, "program file")->required();
    solve_cmd->add_option("--models", models, "number of answer sets to report");
    add_common(solve_cmd, solve_opts, /*with_algo=*/false);

    // maxcon
    auto* maxcon_cmd =
        app.add_subcommand("maxcon", "maximal consistent subset of a target atom set");
    std::string maxcon_file, target_pred, target_file;
    CommonOpts maxcon_opts;
    maxcon_cmd->add_option("file", maxcon_file, "program file")->required();
    auto* tp = maxcon_cmd->add_option("--target-pred", target_pred,
                                      "target atoms: every ground pred/arity atom");
    auto* tf = maxcon_cmd->add_option("--target-file", target_file,
                                      "target atoms: one ground atom per line");
    tp->excludes(tf);
    maxcon_cmd->add_flag("--shuffle", maxcon_opts.shuffle,
                         "permute the target order with --seed");
    add_common(maxcon_cmd, maxcon_opts);

    // correct
    auto* correct_cmd =
        app.add_subcommand("correct", "minimal correction restoring consistency");
    std::string correct_file, correct_spec;
    CommonOpts correct_opts;
    correct_cmd->add_option("file", correct_file, "program file")->required();
    correct_cmd->add_option("--spec", correct_spec, "correction spec (JSON)")->required();
    add_common(correct_cmd, correct_opts);

    // gen-graceful
    auto* gg_cmd = app.add_subcommand("gen-graceful", "generate a graceful-labeling instance");
    unsigned gg_v = 5, gg_e = 6;
    std::uint64_t gg_seed = 0;
    std::string gg_out;
    gg_cmd->add_option("--vertices", gg_v, "vertex count")->required();
    gg_cmd->add_option("--edges", gg_e, "edge count")->required();
    gg_cmd->add_option("--seed", gg_seed, "random seed");
    gg_cmd->add_option("--out", gg_out, "output directory (default: cwd)");

    // gen-patterns
    auto* gp_cmd =
        app.add_subcommand("gen-patterns", "generate a permutation-pattern instance");
    unsigned gp_t = 6, gp_p = 3;
    std::uint64_t gp_seed = 0;
    std::string gp_out;
    gp_cmd->add_option("--text", gp_t, "text permutation length")->required();
    gp_cmd->add_option("--pattern", gp_p, "pattern length")->required();
    gp_cmd->add_option("--seed", gp_seed, "random seed");
    gp_cmd->add_option("--out", gp_out, "output directory (default: cwd)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run all instances under a directory");
    std::string bench_dir, bench_algos = "aupx", bench_csv;
    CommonOpts bench_opts;
    bench_opts.budget_ms = 60000;
    unsigned bench_jobs = 1;
    bench_cmd->add_option("dir", bench_dir, "directory of .lp + .spec.json pairs")
        ->required();
    bench_cmd->add_option("--algos", bench_algos, "algorithms to run, e.g. aupx")
        ->capture_default_str();
    bench_cmd->add_option("--jobs", bench_jobs, "parallel instances")->capture_default_str();
    bench_cmd->add_option("--csv", bench_csv, "also write per-run timings CSV to this file");
    add_common(bench_cmd, bench_opts, /*with_algo=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_file, models, solve_opts, brute_ceiling);
        if (maxcon_cmd->parsed())
            return cmd_maxcon(maxcon_file, target_pred, target_file, maxcon_opts,
                              brute_ceiling);
        if (correct_cmd->parsed())
            return cmd_correct(correct_file, correct_spec, correct_opts, brute_ceiling);
        if (gg_cmd->parsed()) return write_instance(gen_graceful(gg_v, gg_e, gg_seed), gg_out);
        if (gp_cmd->parsed()) return write_instance(gen_patterns(gp_t, gp_p, gp_seed), gp_out);
        if (bench_cmd->parsed()) {
            BenchOptions bo;
            bo.algos.clear();
            for (char c : bench_algos) {
                if (!algo_from_letter(c))
                    throw std::runtime_error(std::string("unknown algorithm letter: ") + c);
                bo.algos.push_back(c);
            }
            bo.budget_ms = bench_opts.budget_ms;
            bo.jobs = bench_jobs;
            bo.seed = bench_opts.seed;
            bo.backend =
                bench_opts.oracle == "brute" ? Backend::BruteForce : Backend::Search;
            BenchReport report = run_bench(bench_dir, bo);
            std::cout << (bench_opts.format == "json" ? report.to_json_text()
                                                      : report.to_text())
                      << '\n';
            if (!bench_csv.empty()) spit(bench_csv, report.timings_csv());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
