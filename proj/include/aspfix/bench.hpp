#ifndef ASPFIX_BENCH_HPP
#define ASPFIX_BENCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aspfix/maxcon.hpp"

namespace aspfix {

struct BenchRecord {
    std::string instance;
    std::string family;
    char algo;          // a, u, p, x
    bool solved = false;
    std::string error;  // empty when solved or budget-limited
    double elapsed_ms = 0.0;
    std::uint64_t oracle_calls = 0;
    std::optional<std::size_t> correction_size;  // removals + additions
    std::uint64_t seed = 0;
};

struct FamilyRow {
    std::string family;
    std::size_t total = 0;
    std::map<char, std::size_t> solved;  // per algorithm
    std::size_t vbs = 0;                 // solved by at least one algorithm
};

struct DeltaRow {
    std::size_t delta;
    std::map<char, std::size_t> counts;  // per algorithm in {a, u, p}
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::vector<FamilyRow> families;
    std::vector<DeltaRow> deltas;

    std::string to_text() const;
    // Deterministic portion only: timings are omitted.
    std::string to_json_text() const;
    // instance,family,algo,solved,elapsed_ms,oracle_calls,correction_size
    std::string timings_csv() const;
};

struct BenchOptions {
    std::vector<char> algos = {'a', 'u', 'p', 'x'};
    std::uint64_t budget_ms = 60000;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    Backend backend = Backend::Search;
};

// Runs every `<stem>.lp` + `<stem>.spec.json` pair under dir through the
// chosen algorithms; per-instance failures are recorded, not fatal.
BenchReport run_bench(const std::string& dir, const BenchOptions& opts);

}  // namespace aspfix

#endif
