#ifndef ASPFIX_SOLVER_HPP
#define ASPFIX_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aspfix/model.hpp"

namespace aspfix {

enum class Backend { BruteForce, Search };

struct SolverConfig {
    Backend backend = Backend::Search;
    unsigned brute_force_max_atoms = 20;
    std::uint64_t seed = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    // Convenience: configuration whose deadline is now + budget.
    SolverConfig with_budget(std::chrono::milliseconds budget) const {
        SolverConfig c = *this;
        c.deadline = std::chrono::steady_clock::now() + budget;
        return c;
    }
    bool expired() const {
        return deadline && std::chrono::steady_clock::now() >= *deadline;
    }
};

struct SolveStats {
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    double elapsed_ms = 0.0;
};

struct SolveResult {
    bool consistent = false;
    std::optional<Interpretation> model;
    SolveStats stats;
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("solver budget exceeded") {}
};

struct BruteForceLimit : std::runtime_error {
    explicit BruteForceLimit(unsigned atoms, unsigned ceiling)
        : std::runtime_error("brute force refused: " + std::to_string(atoms) +
                             " atoms exceed ceiling " + std::to_string(ceiling)) {}
};

// Reduct of a ground program w.r.t. i: rules blocked by a true negative body
// are dropped, surviving normal/constraint rules keep their positive body,
// choice rules contribute one fact per chosen atom (bounds are not checked
// here).
Program reduct(const Program& ground, const Interpretation& i);

// Least model of a positive ground program (constraint rules are ignored,
// choice rules are not allowed).
Interpretation least_model(const Program& positive);

// Stable-model check: constraints satisfied, choice bounds met, and i equals
// the least model of the reduct.
bool is_answer_set(const Program& ground, const Interpretation& i);

SolveResult solve(const Program& ground, const SolverConfig& cfg = {});

// Up to `limit` distinct answer sets (all of them when limit is empty).
std::vector<Interpretation> enumerate_answer_sets(
    const Program& ground, const SolverConfig& cfg = {},
    std::optional<std::uint64_t> limit = std::nullopt);

}  // namespace aspfix

#endif
