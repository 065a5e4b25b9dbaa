#include "aspfix/ground_index.hpp"
#include "aspfix/solver.hpp"

namespace aspfix {

namespace {

// Bitmask view for exhaustive enumeration. Only atoms occurring as a normal
// rule head or in a choice rule can be true in an answer set, so subsets are
// drawn from that universe; all program atoms still get a mask bit for the
// body tests.
struct MaskIndex {
    const GroundIndex& gi;
    std::vector<int> universe;  // atom indices eligible to be true

    struct MRule {
        std::uint64_t head, pos, neg;
    };
    std::vector<MRule> normals, constraints;
    struct MChoice {
        unsigned bound;
        std::uint64_t atoms;
    };
    std::vector<MChoice> choices;
    std::uint64_t choice_mask = 0;

    explicit MaskIndex(const GroundIndex& g) : gi(g) {
        auto bit = [](int i) { return std::uint64_t{1} << i; };
        for (int i = 0; i < gi.num_atoms(); ++i)
            if (!gi.support[i].empty() || gi.is_choice_atom[i]) universe.push_back(i);
        for (const auto& r : gi.normals) {
            MRule m{bit(r.head), 0, 0};
            for (int b : r.pos) m.pos |= bit(b);
            for (int n : r.neg) m.neg |= bit(n);
            normals.push_back(m);
        }
        for (const auto& r : gi.constraints) {
            MRule m{0, 0, 0};
            for (int b : r.pos) m.pos |= bit(b);
            for (int n : r.neg) m.neg |= bit(n);
            constraints.push_back(m);
        }
        for (const auto& c : gi.choices) {
            MChoice m{c.bound, 0};
            for (int a : c.atoms) m.atoms |= bit(a);
            choices.push_back(m);
            choice_mask |= m.atoms;
        }
    }

    bool stable(std::uint64_t i) const {
        for (const auto& c : constraints)
            if ((c.pos & ~i) == 0 && (c.neg & i) == 0) return false;
        for (const auto& c : choices)
            if (static_cast<unsigned>(__builtin_popcountll(c.atoms & i)) < c.bound)
                return false;
        std::uint64_t j = choice_mask & i;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : normals) {
                if ((r.head & j) || (r.neg & i)) continue;
                if ((r.pos & ~j) == 0) {
                    j |= r.head;
                    changed = true;
                }
            }
        }
        return j == i;
    }

    std::uint64_t expand(std::uint64_t subset) const {
        std::uint64_t full = 0;
        for (std::size_t k = 0; k < universe.size(); ++k)
            if (subset & (std::uint64_t{1} << k)) full |= std::uint64_t{1} << universe[k];
        return full;
    }

    Interpretation interp(std::uint64_t i) const {
        Interpretation out;
        for (int a = 0; a < gi.num_atoms(); ++a)
            if (i & (std::uint64_t{1} << a)) out.atoms.insert(gi.atoms[a]);
        return out;
    }
};

}  // namespace

std::vector<Interpretation> brute_force_enumerate(const Program& ground,
                                                  const SolverConfig& cfg,
                                                  std::optional<std::uint64_t> limit) {
    GroundIndex gi(ground);
    if (gi.num_atoms() > 63)
        throw BruteForceLimit(static_cast<unsigned>(gi.num_atoms()), 63);
    MaskIndex mi(gi);
    if (mi.universe.size() > cfg.brute_force_max_atoms)
        throw BruteForceLimit(static_cast<unsigned>(mi.universe.size()),
                              cfg.brute_force_max_atoms);

    std::vector<Interpretation> out;
    std::uint64_t n = std::uint64_t{1} << mi.universe.size();
    for (std::uint64_t subset = 0; subset < n; ++subset) {
        if ((subset & 0xFFFF) == 0 && cfg.expired()) throw BudgetExceeded();
        std::uint64_t i = mi.expand(subset);
        if (mi.stable(i)) {
            out.push_back(mi.interp(i));
            if (limit && out.size() >= *limit) break;
        }
    }
    return out;
}

SolveResult brute_force_solve(const Program& ground, const SolverConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    auto models = brute_force_enumerate(ground, cfg, 1);
    SolveResult r;
    r.consistent = !models.empty();
    if (r.consistent) r.model = std::move(models.front());
    r.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

}  // namespace aspfix
