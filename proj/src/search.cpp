#include "aspfix/ground_index.hpp"
#include "aspfix/sat.hpp"
#include "aspfix/solver.hpp"

namespace aspfix {

namespace {

// Search backend: Clark completion over atom and rule-body variables solved
// with CDCL; candidate models are checked for unfounded atoms and refuted
// with loop nogoods until a stable model appears (lazy loop handling).
class SearchSolver {
public:
    SearchSolver(const Program& ground, const SolverConfig& cfg)
        : gi_(ground), cfg_(cfg) {
        sat_.set_seed(cfg.seed);
        if (cfg_.deadline)
            sat_.interrupt = [this] { return cfg_.expired(); };
        encode();
    }

    SolveResult solve() {
        auto t0 = std::chrono::steady_clock::now();
        auto model = next_stable();
        SolveResult r;
        r.consistent = model.has_value();
        if (model) r.model = gi_.to_interpretation(*model);
        fill_stats(r.stats, t0);
        return r;
    }

    std::vector<Interpretation> enumerate(std::optional<std::uint64_t> limit) {
        std::vector<Interpretation> out;
        while (!limit || out.size() < *limit) {
            auto model = next_stable();
            if (!model) break;
            out.push_back(gi_.to_interpretation(*model));
            block(*model);
        }
        return out;
    }

private:
    void encode() {
        using sat::mk_lit;
        using sat::neg;
        atom_var_.resize(gi_.num_atoms());
        for (int a = 0; a < gi_.num_atoms(); ++a) atom_var_[a] = sat_.new_var();

        body_var_.resize(gi_.normals.size());
        for (std::size_t r = 0; r < gi_.normals.size(); ++r) {
            const auto& nr = gi_.normals[r];
            int b = sat_.new_var();
            body_var_[r] = b;
            // b <-> body literals
            std::vector<sat::Lit> back{mk_lit(b)};
            for (int p : nr.pos) {
                sat_.add_clause({neg(mk_lit(b)), mk_lit(atom_var_[p])});
                back.push_back(neg(mk_lit(atom_var_[p])));
            }
            for (int n : nr.neg) {
                sat_.add_clause({neg(mk_lit(b)), neg(mk_lit(atom_var_[n]))});
                back.push_back(mk_lit(atom_var_[n]));
            }
            sat_.add_clause(std::move(back));
            // b -> head
            sat_.add_clause({neg(mk_lit(b)), mk_lit(atom_var_[nr.head])});
        }

        // completion: non-choice atoms need a supporting body
        for (int a = 0; a < gi_.num_atoms(); ++a) {
            if (gi_.is_choice_atom[a]) continue;
            std::vector<sat::Lit> cl{neg(mk_lit(atom_var_[a]))};
            for (int r : gi_.support[a]) cl.push_back(mk_lit(body_var_[r]));
            sat_.add_clause(std::move(cl));
        }

        for (const auto& c : gi_.constraints) {
            std::vector<sat::Lit> cl;
            for (int p : c.pos) cl.push_back(neg(mk_lit(atom_var_[p])));
            for (int n : c.neg) cl.push_back(mk_lit(atom_var_[n]));
            sat_.add_clause(std::move(cl));
        }

        for (const auto& ch : gi_.choices) {
            std::vector<sat::Lit> xs;
            for (int a : ch.atoms) xs.push_back(mk_lit(atom_var_[a]));
            encode_at_least(ch.bound, xs);
        }
    }

    // at-least-l over xs, as at-most-(k-l) over the negated literals
    // (sequential counter encoding).
    void encode_at_least(unsigned l, const std::vector<sat::Lit>& xs) {
        using sat::neg;
        if (l == 0) return;
        unsigned k = static_cast<unsigned>(xs.size());
        if (l == k) {
            for (sat::Lit x : xs) sat_.add_clause({x});
            return;
        }
        unsigned m = k - l;
        std::vector<sat::Lit> ys;
        for (sat::Lit x : xs) ys.push_back(neg(x));

        // s[i][j]: at least j+1 of ys[0..i] are true
        std::vector<std::vector<int>> s(k, std::vector<int>(m));
        for (unsigned i = 0; i + 1 < k; ++i)
            for (unsigned j = 0; j < m; ++j) s[i][j] = sat_.new_var();

        auto S = [&](unsigned i, unsigned j) { return sat::mk_lit(s[i][j]); };

        sat_.add_clause({neg(ys[0]), S(0, 0)});
        for (unsigned j = 1; j < m; ++j) sat_.add_clause({neg(S(0, j))});
        for (unsigned i = 1; i + 1 < k; ++i) {
            sat_.add_clause({neg(ys[i]), S(i, 0)});
            sat_.add_clause({neg(S(i - 1, 0)), S(i, 0)});
            for (unsigned j = 1; j < m; ++j) {
                sat_.add_clause({neg(ys[i]), neg(S(i - 1, j - 1)), S(i, j)});
                sat_.add_clause({neg(S(i - 1, j)), S(i, j)});
            }
            sat_.add_clause({neg(ys[i]), neg(S(i - 1, m - 1))});
        }
        sat_.add_clause({neg(ys[k - 1]), neg(S(k - 2, m - 1))});
    }

    std::optional<std::vector<char>> next_stable() {
        using sat::mk_lit;
        using sat::neg;
        for (;;) {
            if (cfg_.expired()) throw BudgetExceeded();
            auto st = sat_.solve();
            if (st == sat::Solver::Status::Interrupted) throw BudgetExceeded();
            if (st == sat::Solver::Status::Unsat) return std::nullopt;

            std::vector<char> in(gi_.num_atoms());
            for (int a = 0; a < gi_.num_atoms(); ++a)
                in[a] = sat_.model_value(atom_var_[a]) ? 1 : 0;
            std::vector<char> j = gi_.derivable(in);
            std::vector<int> unfounded;
            for (int a = 0; a < gi_.num_atoms(); ++a)
                if (in[a] && !j[a]) unfounded.push_back(a);
            if (unfounded.empty()) return in;

            // loop nogood: not all of U can be true unless some rule with a
            // head in U and a positive body disjoint from U fires
            std::vector<char> in_u(gi_.num_atoms(), 0);
            for (int a : unfounded) in_u[a] = 1;
            std::vector<sat::Lit> cl;
            for (int a : unfounded) cl.push_back(neg(mk_lit(atom_var_[a])));
            for (int a : unfounded) {
                for (int r : gi_.support[a]) {
                    bool external = true;
                    for (int p : gi_.normals[r].pos)
                        if (in_u[p]) {
                            external = false;
                            break;
                        }
                    if (external) cl.push_back(mk_lit(body_var_[r]));
                }
            }
            sat_.add_clause(std::move(cl));
        }
    }

    void block(const std::vector<char>& in) {
        std::vector<sat::Lit> cl;
        for (int a = 0; a < gi_.num_atoms(); ++a)
            cl.push_back(sat::mk_lit(atom_var_[a], in[a] != 0));
        sat_.add_clause(std::move(cl));
    }

    void fill_stats(SolveStats& s, std::chrono::steady_clock::time_point t0) const {
        s.decisions = sat_.decisions();
        s.conflicts = sat_.conflicts();
        s.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
    }

    GroundIndex gi_;
    SolverConfig cfg_;
    sat::Solver sat_;
    std::vector<int> atom_var_;
    std::vector<int> body_var_;
};

}  // namespace

SolveResult search_solve(const Program& ground, const SolverConfig& cfg) {
    SearchSolver s(ground, cfg);
    SolveResult r = s.solve();
    if (r.consistent && !is_answer_set(ground, *r.model))
        throw std::logic_error("search backend produced a non-stable model");
    return r;
}

std::vector<Interpretation> search_enumerate(const Program& ground,
                                             const SolverConfig& cfg,
                                             std::optional<std::uint64_t> limit) {
    SearchSolver s(ground, cfg);
    return s.enumerate(limit);
}

}  // namespace aspfix
