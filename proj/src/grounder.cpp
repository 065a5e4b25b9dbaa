#include "aspfix/grounder.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace aspfix {

namespace {

void collect_constants(const Atom& a, std::set<Term>& out) {
    for (const auto& t : a.args)
        if (t.is_ground()) out.insert(t);
}

void collect_vars(const Atom& a, std::vector<std::string>& order,
                  std::set<std::string>& seen) {
    for (const auto& t : a.args) {
        if (t.kind == TermKind::Variable && seen.insert(t.name).second)
            order.push_back(t.name);
    }
}

std::set<std::string> vars_of(const std::vector<Atom>& atoms) {
    std::set<std::string> out;
    for (const auto& a : atoms)
        for (const auto& t : a.args)
            if (t.kind == TermKind::Variable) out.insert(t.name);
    return out;
}

// distinct atoms may collapse under substitution; bodies stay sets
void dedupe(std::vector<Atom>& v) {
    std::vector<Atom> out;
    for (auto& a : v) {
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    }
    v = std::move(out);
}

Atom substitute(const Atom& a, const std::map<std::string, Term>& sub) {
    Atom out = a;
    for (auto& t : out.args) {
        if (t.kind == TermKind::Variable) t = sub.at(t.name);
    }
    return out;
}

}  // namespace

std::set<Term> herbrand_universe(const Program& p) {
    std::set<Term> out;
    for (const auto& r : p.rules()) {
        if (r.head) collect_constants(*r.head, out);
        for (const auto& a : r.body_pos) collect_constants(a, out);
        for (const auto& a : r.body_neg) collect_constants(a, out);
        for (const auto& a : r.choice_atoms) collect_constants(a, out);
    }
    return out;
}

std::vector<SafetyViolation> check_safety(const Program& p) {
    std::vector<SafetyViolation> out;
    for (const auto& r : p.rules()) {
        if (r.kind == RuleKind::Choice) {
            if (!r.is_ground())
                out.push_back({r.id, "", "choice rule must be ground"});
            continue;
        }
        std::set<std::string> safe = vars_of(r.body_pos);
        std::set<std::string> all = safe;
        if (r.head)
            for (const auto& t : r.head->args)
                if (t.kind == TermKind::Variable) all.insert(t.name);
        for (const auto& v : vars_of(r.body_neg)) all.insert(v);
        for (const auto& v : all) {
            if (!safe.count(v))
                out.push_back({r.id, v,
                               "variable " + v + " does not occur in the positive body"});
        }
    }
    return out;
}

std::string UnsafeProgram::describe(const std::vector<SafetyViolation>& v) {
    std::ostringstream os;
    os << "unsafe program:";
    for (const auto& s : v) os << " [rule " << s.rule_id << "] " << s.message << ';';
    return os.str();
}

GroundResult ground(const Program& p) {
    auto violations = check_safety(p);
    if (!violations.empty()) throw UnsafeProgram(std::move(violations));

    std::set<Term> universe_set = herbrand_universe(p);
    std::vector<Term> universe(universe_set.begin(), universe_set.end());

    GroundResult out;
    for (const auto& r : p.rules()) {
        // variables in order of first occurrence
        std::vector<std::string> vars;
        {
            std::set<std::string> seen;
            if (r.head) collect_vars(*r.head, vars, seen);
            for (const auto& a : r.body_pos) collect_vars(a, vars, seen);
            for (const auto& a : r.body_neg) collect_vars(a, vars, seen);
        }
        if (vars.empty()) {
            int gid = out.program.add_rule(r);
            out.provenance[gid] = r.id;
            continue;
        }
        if (universe.empty()) continue;  // |U|^k = 0 instances

        std::vector<std::size_t> odo(vars.size(), 0);
        while (true) {
            std::map<std::string, Term> sub;
            for (std::size_t i = 0; i < vars.size(); ++i) sub[vars[i]] = universe[odo[i]];
            Rule g = r;
            if (g.head) g.head = substitute(*g.head, sub);
            for (auto& a : g.body_pos) a = substitute(a, sub);
            for (auto& a : g.body_neg) a = substitute(a, sub);
            dedupe(g.body_pos);
            dedupe(g.body_neg);
            int gid = out.program.add_rule(std::move(g));
            out.provenance[gid] = r.id;

            std::size_t i = 0;
            for (; i < odo.size(); ++i) {
                if (++odo[i] < universe.size()) break;
                odo[i] = 0;
            }
            if (i == odo.size()) break;
        }
    }
    return out;
}

}  // namespace aspfix
