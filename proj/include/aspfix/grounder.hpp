#ifndef ASPFIX_GROUNDER_HPP
#define ASPFIX_GROUNDER_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "aspfix/model.hpp"

namespace aspfix {

// Constants occurring anywhere in p.
std::set<Term> herbrand_universe(const Program& p);

struct SafetyViolation {
    int rule_id;
    std::string variable;
    std::string message;
};

// A rule is safe when every variable occurs in its positive body.
// Non-ground choice rules are also flagged (they must be ground).
std::vector<SafetyViolation> check_safety(const Program& p);

struct UnsafeProgram : std::runtime_error {
    explicit UnsafeProgram(std::vector<SafetyViolation> v)
        : std::runtime_error(describe(v)), violations(std::move(v)) {}
    std::vector<SafetyViolation> violations;

private:
    static std::string describe(const std::vector<SafetyViolation>& v);
};

struct GroundResult {
    Program program;
    // ground rule id -> source rule id
    std::unordered_map<int, int> provenance;
};

// Full substitution of every variable by every Herbrand constant.
// Throws UnsafeProgram when check_safety reports violations.
GroundResult ground(const Program& p);

}  // namespace aspfix

#endif
