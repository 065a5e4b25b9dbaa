#ifndef ASPFIX_MAXCON_HPP
#define ASPFIX_MAXCON_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aspfix/model.hpp"
#include "aspfix/solver.hpp"

namespace aspfix {

// The candidate atom set S; order drives tie-breaking in the algorithms.
struct TargetSet {
    std::vector<Atom> atoms;

    TargetSet() = default;
    explicit TargetSet(std::vector<Atom> a);  // validates: distinct, ground

    bool contains(const Atom& a) const;
    std::size_t size() const { return atoms.size(); }
    AtomSet as_set() const { return AtomSet(atoms.begin(), atoms.end()); }
};

struct MaxConResult {
    AtomSet subset;             // L
    std::uint64_t oracle_calls = 0;
    Interpretation witness;     // answer set of P + facts_of(L)
};

enum class MaxConAlgo { Atleast, Unit, Progression, MaxCard };

std::optional<MaxConAlgo> algo_from_letter(char c);  // a, u, p, x
char algo_letter(MaxConAlgo a);

struct NoConsistentSubset : std::runtime_error {
    NoConsistentSubset()
        : std::runtime_error("no consistent subset: even the empty set is infeasible") {}
};

// choice(S): 0 <= { s1; ...; sk }
Rule choice_of(const std::vector<Atom>& s);
// atleast(S): 1 <= { s1; ...; sk }; S must be non-empty
Rule atleast_of(const std::vector<Atom>& s);
// k <= { s1; ...; sk }, used by the cardinality maximization
Rule atleast_k_of(unsigned k, const std::vector<Atom>& s);

// Single solver call deciding whether l extends to a consistent subset of s;
// returns the extension mu cap S on success.
std::optional<AtomSet> can_extend(const Program& p, const TargetSet& s, const AtomSet& l,
                                  const SolverConfig& cfg = {});

// Single solver call deciding maximality of a consistent l (l = s counts as
// maximal by convention).
bool is_maximal(const Program& p, const TargetSet& s, const AtomSet& l,
                const SolverConfig& cfg = {});

MaxConResult algo_atleast(const Program& p, const TargetSet& s, const SolverConfig& cfg = {});
MaxConResult algo_unit(const Program& p, const TargetSet& s, const SolverConfig& cfg = {});
MaxConResult algo_progression(const Program& p, const TargetSet& s,
                              const SolverConfig& cfg = {});
MaxConResult algo_maxcard(const Program& p, const TargetSet& s, const SolverConfig& cfg = {});

MaxConResult run_maxcon(MaxConAlgo algo, const Program& p, const TargetSet& s,
                        const SolverConfig& cfg = {});

}  // namespace aspfix

#endif
