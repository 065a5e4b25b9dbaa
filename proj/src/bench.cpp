#include "aspfix/bench.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "aspfix/correction.hpp"
#include "aspfix/grounder.hpp"
#include "aspfix/parser.hpp"

namespace aspfix {

namespace fs = std::filesystem;

namespace {

struct Task {
    std::string stem;
    std::string lp_path;
    std::string spec_path;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string family_of(const std::string& spec_text, const std::string& stem) {
    auto j = nlohmann::json::parse(spec_text);
    if (j.contains("family")) return j.at("family").get<std::string>();
    auto dash = stem.find('-');
    return dash == std::string::npos ? stem : stem.substr(0, dash);
}

}  // namespace

BenchReport run_bench(const std::string& dir, const BenchOptions& opts) {
    std::vector<Task> tasks;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".lp") continue;
        std::string stem = entry.path().stem().string();
        fs::path spec = entry.path().parent_path() / (stem + ".spec.json");
        if (fs::exists(spec)) tasks.push_back({stem, entry.path().string(), spec.string()});
    }
    std::sort(tasks.begin(), tasks.end(),
              [](const Task& a, const Task& b) { return a.stem < b.stem; });

    struct Job {
        std::size_t task;
        char algo;
    };
    std::vector<Job> jobs;
    for (std::size_t t = 0; t < tasks.size(); ++t)
        for (char algo : opts.algos) jobs.push_back({t, algo});

    std::vector<BenchRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex io_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= jobs.size()) break;
            const Task& task = tasks[jobs[k].task];
            char algo = jobs[k].algo;
            BenchRecord rec;
            rec.instance = task.stem;
            rec.algo = algo;
            rec.seed = opts.seed;
            auto t0 = std::chrono::steady_clock::now();
            try {
                std::string lp_text, spec_text;
                {
                    std::lock_guard<std::mutex> lock(io_mutex);
                    lp_text = slurp(task.lp_path);
                    spec_text = slurp(task.spec_path);
                }
                rec.family = family_of(spec_text, task.stem);
                Program p = parse_program(lp_text, task.lp_path);
                Program g = ground(p).program;
                CorrectionSpec spec = CorrectionSpec::from_json_text(spec_text, task.spec_path);
                SolverConfig cfg;
                cfg.backend = opts.backend;
                cfg.seed = opts.seed;
                cfg = cfg.with_budget(std::chrono::milliseconds(opts.budget_ms));
                Correction c = min_correct(g, spec, *algo_from_letter(algo), cfg);
                rec.solved = true;
                rec.oracle_calls = c.oracle_calls;
                rec.correction_size = c.removed.size() + c.added.size();
            } catch (const BudgetExceeded&) {
                // timeout: unsolved, not an error
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
            rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            records[k] = std::move(rec);
        }
    };

    unsigned nthreads = std::max(1u, opts.jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BenchReport report;
    report.records = std::move(records);

    // per-family solved counts with the virtual-best-solver column
    std::map<std::string, FamilyRow> fam;
    std::map<std::string, std::set<std::string>> fam_instances;
    std::map<std::string, std::set<std::string>> fam_vbs;
    for (const auto& r : report.records) {
        auto& row = fam[r.family];
        row.family = r.family;
        fam_instances[r.family].insert(r.instance);
        if (r.solved) {
            row.solved[r.algo] += 1;
            fam_vbs[r.family].insert(r.instance);
        }
    }
    for (auto& [name, row] : fam) {
        row.total = fam_instances[name].size();
        row.vbs = fam_vbs[name].size();
        for (char a : opts.algos) row.solved.try_emplace(a, 0);
        report.families.push_back(row);
    }

    // delta rows: correction-size gap to the maximization approach,
    // counted where both solved
    std::map<std::pair<std::string, std::string>, const BenchRecord*> by_key;
    for (const auto& r : report.records)
        if (r.solved) by_key[{r.instance, std::string(1, r.algo)}] = &r;
    std::map<std::size_t, DeltaRow> deltas;
    for (const auto& r : report.records) {
        if (!r.solved || r.algo == 'x' || !r.correction_size) continue;
        auto x = by_key.find({r.instance, "x"});
        if (x == by_key.end() || !x->second->correction_size) continue;
        std::size_t best = *x->second->correction_size;
        std::size_t mine = *r.correction_size;
        if (mine < best)
            throw std::logic_error("cardinality maximization produced a larger correction on " +
                                   r.instance);
        std::size_t d = mine - best;
        deltas[d].delta = d;
        deltas[d].counts[r.algo] += 1;
    }
    for (auto& [d, row] : deltas) report.deltas.push_back(row);

    return report;
}

std::string BenchReport::to_text() const {
    std::ostringstream os;
    std::vector<char> algos;
    for (const auto& f : families)
        for (const auto& [a, _] : f.solved)
            if (std::find(algos.begin(), algos.end(), a) == algos.end()) algos.push_back(a);
    std::sort(algos.begin(), algos.end());

    os << "family";
    for (char a : algos) os << '\t' << a;
    os << "\tVBS\ttotal\n";
    for (const auto& f : families) {
        os << f.family;
        for (char a : algos) {
            auto it = f.solved.find(a);
            os << '\t' << (it == f.solved.end() ? 0 : it->second);
        }
        os << '\t' << f.vbs << '\t' << f.total << '\n';
    }
    os << "\ndelta";
    for (char a : algos)
        if (a != 'x') os << '\t' << a;
    os << '\n';
    for (const auto& d : deltas) {
        os << d.delta;
        for (char a : algos) {
            if (a == 'x') continue;
            auto it = d.counts.find(a);
            os << '\t' << (it == d.counts.end() ? 0 : it->second);
        }
        os << '\n';
    }
    return os.str();
}

std::string BenchReport::to_json_text() const {
    nlohmann::json j;
    auto& fams = j["families"] = nlohmann::json::array();
    for (const auto& f : families) {
        nlohmann::json row;
        row["family"] = f.family;
        row["total"] = f.total;
        row["vbs"] = f.vbs;
        for (const auto& [a, n] : f.solved) row["solved"][std::string(1, a)] = n;
        fams.push_back(row);
    }
    auto& ds = j["deltas"] = nlohmann::json::array();
    for (const auto& d : deltas) {
        nlohmann::json row;
        row["delta"] = d.delta;
        for (const auto& [a, n] : d.counts) row["counts"][std::string(1, a)] = n;
        ds.push_back(row);
    }
    auto& recs = j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row;
        row["instance"] = r.instance;
        row["family"] = r.family;
        row["algo"] = std::string(1, r.algo);
        row["solved"] = r.solved;
        row["seed"] = r.seed;
        if (!r.error.empty()) row["error"] = r.error;
        if (r.solved) {
            row["oracle_calls"] = r.oracle_calls;
            row["correction_size"] = *r.correction_size;
        }
        recs.push_back(row);
    }
    return j.dump(2);
}

std::string BenchReport::timings_csv() const {
    std::ostringstream os;
    os << "instance,family,algo,solved,elapsed_ms,oracle_calls,correction_size\n";
    for (const auto& r : records) {
        os << r.instance << ',' << r.family << ',' << r.algo << ',' << (r.solved ? 1 : 0)
           << ',' << r.elapsed_ms << ',' << r.oracle_calls << ',';
        if (r.correction_size) os << *r.correction_size;
        os << '\n';
    }
    return os.str();
}

}  // namespace aspfix
