#ifndef ASPFIX_SAT_HPP
#define ASPFIX_SAT_HPP

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <utility>
#include <vector>

namespace aspfix::sat {

// Literal encoding: variable v yields literals 2v (positive) and 2v+1 (negated).
using Lit = int;

inline Lit mk_lit(int var, bool neg = false) { return 2 * var + (neg ? 1 : 0); }
inline Lit neg(Lit l) { return l ^ 1; }
inline int var_of(Lit l) { return l >> 1; }
inline bool sign_of(Lit l) { return l & 1; }  // true = negated

// Conflict-driven clause-learning solver with two-watched literals,
// first-UIP learning, activity-based branching and Luby restarts.
// Clauses may be added between successive solve() calls.
class Solver {
public:
    enum class Status { Sat, Unsat, Interrupted };

    int new_var();
    int num_vars() const { return static_cast<int>(assign_.size()); }

    // Returns false when the clause makes the instance trivially unsatisfiable.
    bool add_clause(std::vector<Lit> lits);

    Status solve();

    bool model_value(int var) const { return model_[var] == 1; }

    std::uint64_t decisions() const { return decisions_; }
    std::uint64_t conflicts() const { return conflicts_; }

    void set_seed(std::uint64_t seed) { seed_ = seed; }

    // Polled periodically; returning true aborts the search with Interrupted.
    std::function<bool()> interrupt;

private:
    struct Clause {
        std::vector<Lit> lits;
    };

    static constexpr int kNoReason = -1;

    bool propagate(int& conflict);
    void analyze(int conflict, std::vector<Lit>& learnt, int& backjump);
    void enqueue(Lit l, int reason);
    void backtrack(int level);
    int pick_branch();
    void bump(int var);
    void decay() { var_inc_ /= 0.95; }
    void rescale();
    int level_of(Lit l) const { return level_[var_of(l)]; }
    int8_t value(Lit l) const {
        int8_t a = assign_[var_of(l)];
        if (a == -1) return -1;
        return sign_of(l) ? static_cast<int8_t>(1 - a) : a;
    }
    void attach(int ci);

    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> watches_;  // per literal: clause indices
    std::vector<int8_t> assign_;             // per var: -1 unset, 0 false, 1 true
    std::vector<int8_t> model_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    std::vector<int8_t> phase_;
    std::priority_queue<std::pair<double, int>> order_;
    std::mt19937_64 rng_;
    bool rng_ready_ = false;

    std::vector<int8_t> seen_;
    std::uint64_t decisions_ = 0;
    std::uint64_t conflicts_ = 0;
    std::uint64_t seed_ = 0;
    bool unsat_ = false;
};

}  // namespace aspfix::sat

#endif
