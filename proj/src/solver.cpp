#include "aspfix/solver.hpp"

#include "aspfix/ground_index.hpp"

namespace aspfix {

Program reduct(const Program& ground, const Interpretation& i) {
    if (!ground.is_ground())
        throw std::invalid_argument("reduct requires a ground program");
    Program out;
    for (const auto& r : ground.rules()) {
        if (r.kind == RuleKind::Choice) {
            for (const auto& a : r.choice_atoms)
                if (i.contains(a)) out.add_rule(Rule::fact(a));
            continue;
        }
        bool blocked = false;
        for (const auto& n : r.body_neg)
            if (i.contains(n)) {
                blocked = true;
                break;
            }
        if (blocked) continue;
        if (r.kind == RuleKind::Normal)
            out.add_rule(Rule::normal(*r.head, r.body_pos, {}));
        else
            out.add_rule(Rule::constraint(r.body_pos, {}));
    }
    return out;
}

Interpretation least_model(const Program& positive) {
    Interpretation out;
    for (const auto& r : positive.rules()) {
        if (r.kind == RuleKind::Choice)
            throw std::invalid_argument("least_model: choice rules not allowed");
        if (!r.body_neg.empty())
            throw std::invalid_argument("least_model: default negation not allowed");
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : positive.rules()) {
            if (r.kind != RuleKind::Normal || out.contains(*r.head)) continue;
            bool fires = true;
            for (const auto& b : r.body_pos)
                if (!out.contains(b)) {
                    fires = false;
                    break;
                }
            if (fires) {
                out.atoms.insert(*r.head);
                changed = true;
            }
        }
    }
    return out;
}

bool is_answer_set(const Program& ground, const Interpretation& i) {
    for (const auto& r : ground.rules()) {
        if (r.kind == RuleKind::Constraint) {
            bool fires = true;
            for (const auto& b : r.body_pos)
                if (!i.contains(b)) {
                    fires = false;
                    break;
                }
            if (fires)
                for (const auto& n : r.body_neg)
                    if (i.contains(n)) {
                        fires = false;
                        break;
                    }
            if (fires) return false;
        } else if (r.kind == RuleKind::Choice) {
            unsigned count = 0;
            for (const auto& a : r.choice_atoms)
                if (i.contains(a)) ++count;
            if (count < r.choice_bound) return false;
        }
    }
    return least_model(reduct(ground, i)) == i;
}

// Backends (brute_force.cpp / search.cpp).
SolveResult brute_force_solve(const Program& ground, const SolverConfig& cfg);
std::vector<Interpretation> brute_force_enumerate(const Program& ground,
                                                  const SolverConfig& cfg,
                                                  std::optional<std::uint64_t> limit);
SolveResult search_solve(const Program& ground, const SolverConfig& cfg);
std::vector<Interpretation> search_enumerate(const Program& ground,
                                             const SolverConfig& cfg,
                                             std::optional<std::uint64_t> limit);

SolveResult solve(const Program& ground, const SolverConfig& cfg) {
    if (!ground.is_ground())
        throw std::invalid_argument("solve requires a ground program");
    return cfg.backend == Backend::BruteForce ? brute_force_solve(ground, cfg)
                                              : search_solve(ground, cfg);
}

std::vector<Interpretation> enumerate_answer_sets(const Program& ground,
                                                  const SolverConfig& cfg,
                                                  std::optional<std::uint64_t> limit) {
    if (!ground.is_ground())
        throw std::invalid_argument("enumerate requires a ground program");
    return cfg.backend == Backend::BruteForce
               ? brute_force_enumerate(ground, cfg, limit)
               : search_enumerate(ground, cfg, limit);
}

}  // namespace aspfix
