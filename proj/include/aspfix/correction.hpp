#ifndef ASPFIX_CORRECTION_HPP
#define ASPFIX_CORRECTION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aspfix/maxcon.hpp"
#include "aspfix/model.hpp"
#include "aspfix/solver.hpp"

namespace aspfix {

// "p(A1):t(A2)": candidate additions p over a domain predicate t.
// Every variable of the head pattern must occur in the domain pattern.
struct AdditionExpr {
    Atom head_pattern;
    Atom domain_pattern;

    static AdditionExpr parse(const std::string& text);
    std::string to_string() const;
};

struct CorrectionSpec {
    std::vector<std::pair<std::string, std::size_t>> removable_preds;  // pred/arity
    std::vector<int> removable_ids;
    std::vector<Rule> addable_rules;
    std::vector<AdditionExpr> addition_exprs;

    // JSON: { "removable": ["pred/arity", ...] | [rule_ids],
    //         "addable_rules": ["<rule text>", ...],
    //         "addition_exprs": ["p(A1):t(A2)", ...] }
    static CorrectionSpec from_json_text(const std::string& text,
                                         const std::string& filename = "<spec>");
    std::string to_json_text() const;
};

struct InstrumentedProgram {
    Program program;      // the input with selector-gated rules
    TargetSet selectors;  // S, removal selectors first
    std::string removal_pred, addition_pred;
    // selector atom -> (original rule, true = removal / false = addition)
    std::map<Atom, std::pair<Rule, bool>> provenance;
};

struct Correction {
    std::vector<Rule> removed;
    std::vector<Rule> added;
    Interpretation witness;  // answer set of (P minus removed) plus added
    std::uint64_t oracle_calls = 0;
    std::vector<Rule> materialized_additions;  // A produced from expressions
};

struct NoCorrection : std::runtime_error {
    NoCorrection() : std::runtime_error("no correction exists for the given (A, R)") {}
};

struct NoAdditionCandidates : std::runtime_error {
    NoAdditionCandidates()
        : std::runtime_error(
              "no correction exists within the given removals and addition expressions") {}
};

// Selector instrumentation: each removable rule r becomes
// head(r) :- sel_r(id), body(r); each addable rule becomes
// head(r) :- not sel_a(k), body(r). Selector predicate names are mangled
// until fresh. Removable/addable rules must be normal or constraint rules.
InstrumentedProgram instrument(const Program& p, const std::vector<Rule>& removable,
                               const std::vector<Rule>& addable);

// Complements a maximal consistent subset of the selectors into the
// (removals, additions) pair.
// With verify=true, maximality of l is re-checked through the solver first.
Correction extract_correction(const AtomSet& l, const InstrumentedProgram& ip,
                              const Interpretation& witness, bool verify = false,
                              const SolverConfig& cfg = {});

// One solver call over the removal instrumentation plus candidate atoms from
// the expressions; the returned facts form A.
std::vector<Rule> instantiate_additions(const Program& p,
                                        const std::vector<Rule>& removable,
                                        const std::vector<AdditionExpr>& exprs,
                                        const SolverConfig& cfg = {},
                                        std::uint64_t* oracle_calls = nullptr);

// End-to-end MinCorrect pipeline on a ground program.
Correction min_correct(const Program& ground, const CorrectionSpec& spec, MaxConAlgo algo,
                       const SolverConfig& cfg = {});

// Resolves the spec's removable selection against a ground program:
// predicate names select every fact over that predicate, ids select rules.
std::vector<Rule> resolve_removable(const Program& ground, const CorrectionSpec& spec);

}  // namespace aspfix

#endif
