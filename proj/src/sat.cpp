#include "aspfix/sat.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <random>

namespace aspfix::sat {

namespace {

// Luby restart sequence (Luby, Sinclair, Zuckerman 1993).
double luby(double y, int x) {
    int size, seq;
    for (size = 1, seq = 0; size < x + 1; seq++, size = 2 * size + 1) {
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        seq--;
        x = x % size;
    }
    double r = 1;
    for (int i = 0; i < seq; i++) r *= y;
    return r;
}

}  // namespace

int Solver::new_var() {
    int v = num_vars();
    assign_.push_back(-1);
    model_.push_back(0);
    level_.push_back(0);
    reason_.push_back(kNoReason);
    activity_.push_back(0.0);
    seen_.push_back(0);
    watches_.emplace_back();
    watches_.emplace_back();
    if (!rng_ready_) {
        rng_.seed(seed_ ^ 0x9e3779b97f4a7c15ULL);
        rng_ready_ = true;
    }
    phase_.push_back(static_cast<int8_t>(rng_() & 1));
    order_.emplace(0.0, v);
    return v;
}

bool Solver::add_clause(std::vector<Lit> lits) {
    if (unsat_) return false;
    backtrack(0);
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> out;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && lits[i + 1] == neg(lits[i])) return true;  // tautology
        int8_t v = value(lits[i]);
        if (v == 1) return true;  // satisfied at level 0
        if (v == 0) continue;     // falsified at level 0
        out.push_back(lits[i]);
    }
    if (out.empty()) {
        unsat_ = true;
        return false;
    }
    if (out.size() == 1) {
        enqueue(out[0], kNoReason);
        int confl;
        if (!propagate(confl)) {
            unsat_ = true;
            return false;
        }
        return true;
    }
    clauses_.push_back({std::move(out)});
    attach(static_cast<int>(clauses_.size()) - 1);
    return true;
}

void Solver::attach(int ci) {
    const auto& lits = clauses_[ci].lits;
    watches_[lits[0]].push_back(ci);
    watches_[lits[1]].push_back(ci);
}

void Solver::enqueue(Lit l, int reason) {
    int v = var_of(l);
    assert(assign_[v] == -1);
    assign_[v] = sign_of(l) ? 0 : 1;
    level_[v] = static_cast<int>(trail_lim_.size());
    reason_[v] = reason;
    trail_.push_back(l);
}

bool Solver::propagate(int& conflict) {
    conflict = -1;
    while (qhead_ < trail_.size()) {
        Lit p = trail_[qhead_++];
        Lit fl = neg(p);  // literal that just became false
        auto& ws = watches_[fl];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            int ci = ws[i];
            auto& lits = clauses_[ci].lits;
            if (lits[0] == fl) std::swap(lits[0], lits[1]);
            if (value(lits[0]) == 1) {  // satisfied
                ws[j++] = ws[i++];
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < lits.size(); ++k) {
                if (value(lits[k]) != 0) {
                    std::swap(lits[1], lits[k]);
                    watches_[lits[1]].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) {
                ++i;
                continue;
            }
            ws[j++] = ws[i++];
            if (value(lits[0]) == 0) {
                conflict = ci;
                while (i < ws.size()) ws[j++] = ws[i++];
                ws.resize(j);
                qhead_ = trail_.size();
                return false;
            }
            enqueue(lits[0], ci);
        }
        ws.resize(j);
    }
    return true;
}

void Solver::bump(int var) {
    activity_[var] += var_inc_;
    if (activity_[var] > 1e100) rescale();
    order_.emplace(activity_[var], var);
}

void Solver::rescale() {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
    order_ = {};
    for (int v = 0; v < num_vars(); ++v)
        if (assign_[v] == -1) order_.emplace(activity_[v], v);
}

int Solver::pick_branch() {
    while (!order_.empty()) {
        int v = order_.top().second;
        order_.pop();
        if (assign_[v] == -1) return v;
    }
    for (int v = 0; v < num_vars(); ++v)
        if (assign_[v] == -1) return v;
    return -1;
}

void Solver::backtrack(int level) {
    if (static_cast<int>(trail_lim_.size()) <= level) return;
    for (int c = static_cast<int>(trail_.size()) - 1; c >= trail_lim_[level]; --c) {
        int v = var_of(trail_[c]);
        phase_[v] = assign_[v];
        assign_[v] = -1;
        reason_[v] = kNoReason;
        order_.emplace(activity_[v], v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
}

void Solver::analyze(int conflict, std::vector<Lit>& learnt, int& backjump) {
    learnt.clear();
    learnt.push_back(0);  // slot for the asserting literal
    int path = 0;
    Lit p = -1;
    int index = static_cast<int>(trail_.size()) - 1;
    int current = static_cast<int>(trail_lim_.size());

    do {
        const auto& lits = clauses_[conflict].lits;
        for (std::size_t j = (p == -1 ? 0 : 1); j < lits.size(); ++j) {
            Lit q = lits[j];
            int v = var_of(q);
            if (!seen_[v] && level_[v] > 0) {
                seen_[v] = 1;
                bump(v);
                if (level_[v] >= current)
                    ++path;
                else
                    learnt.push_back(q);
            }
        }
        while (!seen_[var_of(trail_[index])]) --index;
        p = trail_[index];
        conflict = reason_[var_of(p)];
        seen_[var_of(p)] = 0;
        --path;
        --index;
    } while (path > 0);
    learnt[0] = neg(p);

    if (learnt.size() == 1) {
        backjump = 0;
    } else {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i)
            if (level_of(learnt[i]) > level_of(learnt[max_i])) max_i = i;
        std::swap(learnt[1], learnt[max_i]);
        backjump = level_of(learnt[1]);
    }
    for (Lit l : learnt) seen_[var_of(l)] = 0;
}

Solver::Status Solver::solve() {
    if (unsat_) return Status::Unsat;
    backtrack(0);
    {
        int confl;
        if (!propagate(confl)) {
            unsat_ = true;
            return Status::Unsat;
        }
    }

    int restarts = 0;
    std::uint64_t budget = static_cast<std::uint64_t>(64 * luby(2.0, restarts));
    std::uint64_t local_conflicts = 0;

    for (;;) {
        int confl;
        if (!propagate(confl)) {
            ++conflicts_;
            ++local_conflicts;
            if (trail_lim_.empty()) {
                unsat_ = true;
                return Status::Unsat;
            }
            std::vector<Lit> learnt;
            int bj;
            analyze(confl, learnt, bj);
            backtrack(bj);
            if (learnt.size() == 1) {
                enqueue(learnt[0], kNoReason);
            } else {
                clauses_.push_back({std::move(learnt)});
                int ci = static_cast<int>(clauses_.size()) - 1;
                attach(ci);
                enqueue(clauses_[ci].lits[0], ci);
            }
            decay();
            if ((conflicts_ & 1023) == 0 && interrupt && interrupt()) {
                backtrack(0);
                return Status::Interrupted;
            }
        } else {
            if (local_conflicts >= budget) {
                backtrack(0);
                ++restarts;
                budget = static_cast<std::uint64_t>(64 * luby(2.0, restarts));
                local_conflicts = 0;
                if (interrupt && interrupt()) return Status::Interrupted;
                continue;
            }
            int v = pick_branch();
            if (v == -1) {
                model_ = assign_;
                return Status::Sat;
            }
            ++decisions_;
            trail_lim_.push_back(static_cast<int>(trail_.size()));
            enqueue(mk_lit(v, phase_[v] == 0), kNoReason);
            if ((decisions_ & 511) == 0 && interrupt && interrupt()) {
                backtrack(0);
                return Status::Interrupted;
            }
        }
    }
}

}  // namespace aspfix::sat
