#ifndef ASPFIX_MODEL_HPP
#define ASPFIX_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace aspfix {

enum class TermKind { Symbol, Integer, Variable };

// A term is a constant (symbol or integer) or a variable. Variables start
// with an uppercase letter in the surface syntax.
struct Term {
    TermKind kind = TermKind::Symbol;
    std::string name;      // Symbol / Variable
    long long value = 0;   // Integer

    static Term sym(std::string s) { return Term{TermKind::Symbol, std::move(s), 0}; }
    static Term integer(long long v) { return Term{TermKind::Integer, {}, v}; }
    static Term var(std::string s) { return Term{TermKind::Variable, std::move(s), 0}; }

    bool is_ground() const { return kind != TermKind::Variable; }

    bool operator==(const Term& o) const {
        return kind == o.kind && name == o.name && value == o.value;
    }
    bool operator!=(const Term& o) const { return !(*this == o); }
    bool operator<(const Term& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (kind == TermKind::Integer) return value < o.value;
        return name < o.name;
    }

    std::string to_string() const {
        return kind == TermKind::Integer ? std::to_string(value) : name;
    }
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    Atom() = default;
    Atom(std::string pred, std::vector<Term> a = {})
        : predicate(std::move(pred)), args(std::move(a)) {}

    std::size_t arity() const { return args.size(); }
    bool is_ground() const {
        for (const auto& t : args)
            if (!t.is_ground()) return false;
        return true;
    }

    bool operator==(const Atom& o) const {
        return predicate == o.predicate && args == o.args;
    }
    bool operator!=(const Atom& o) const { return !(*this == o); }
    bool operator<(const Atom& o) const {
        if (predicate != o.predicate) return predicate < o.predicate;
        return args < o.args;
    }

    std::string to_string() const;
};

struct Literal {
    Atom atom;
    bool negated = false;  // true = default negation "not a"
};

enum class RuleKind { Normal, Constraint, Choice };

struct Rule {
    RuleKind kind = RuleKind::Normal;
    std::optional<Atom> head;        // Normal only
    std::vector<Atom> body_pos;      // B+
    std::vector<Atom> body_neg;      // B-
    unsigned choice_bound = 0;       // Choice only
    std::vector<Atom> choice_atoms;  // Choice only
    int id = -1;

    static Rule fact(Atom a) {
        Rule r;
        r.kind = RuleKind::Normal;
        r.head = std::move(a);
        return r;
    }
    static Rule normal(Atom head, std::vector<Atom> pos, std::vector<Atom> neg) {
        Rule r;
        r.kind = RuleKind::Normal;
        r.head = std::move(head);
        r.body_pos = std::move(pos);
        r.body_neg = std::move(neg);
        return r;
    }
    static Rule constraint(std::vector<Atom> pos, std::vector<Atom> neg) {
        Rule r;
        r.kind = RuleKind::Constraint;
        r.body_pos = std::move(pos);
        r.body_neg = std::move(neg);
        return r;
    }
    static Rule choice(unsigned bound, std::vector<Atom> atoms) {
        std::vector<Atom> distinct;
        for (auto& a : atoms) {
            bool dup = false;
            for (const auto& b : distinct)
                if (b == a) {
                    dup = true;
                    break;
                }
            if (!dup) distinct.push_back(std::move(a));
        }
        if (bound > distinct.size())
            throw std::invalid_argument("choice bound exceeds atom count");
        Rule r;
        r.kind = RuleKind::Choice;
        r.choice_bound = bound;
        r.choice_atoms = std::move(distinct);
        return r;
    }

    bool is_fact() const {
        return kind == RuleKind::Normal && body_pos.empty() && body_neg.empty();
    }
    bool is_ground() const;
    std::string to_string() const;
};

// Structural rule equality; ids are ignored, bodies compared as sets.
bool rules_equal(const Rule& a, const Rule& b);

using AtomSet = std::set<Atom>;

struct Interpretation {
    AtomSet atoms;

    Interpretation() = default;
    explicit Interpretation(AtomSet a) : atoms(std::move(a)) {}

    bool contains(const Atom& a) const { return atoms.count(a) != 0; }
    std::size_t size() const { return atoms.size(); }
    bool operator==(const Interpretation& o) const { return atoms == o.atoms; }
    bool operator<(const Interpretation& o) const { return atoms < o.atoms; }
};

class Program {
public:
    const std::vector<Rule>& rules() const { return rules_; }
    const std::map<std::string, std::size_t>& signature() const { return signature_; }

    // Declares pred/arity, checking consistency with prior declarations.
    void declare(const std::string& pred, std::size_t arity);
    bool declared(const std::string& pred) const { return signature_.count(pred) != 0; }

    // Appends a rule, assigns a fresh id, declares all its predicates.
    // Returns the assigned id.
    int add_rule(Rule r);

    // Replaces the rule at position idx in place, keeping its id.
    void replace_rule(std::size_t idx, Rule r);

    const Rule* rule_by_id(int id) const;

    bool is_ground() const;
    bool empty() const { return rules_.empty(); }
    std::size_t size() const { return rules_.size(); }

    // Copy of this program extended with one fact per atom (fresh ids).
    Program with_facts(const AtomSet& atoms) const;
    Program with_rule(Rule r) const;

    std::string render() const;

private:
    std::vector<Rule> rules_;
    std::map<std::string, std::size_t> signature_;
    int next_id_ = 0;
};

// One fact rule per atom; all atoms must be ground.
Program facts_of(const AtomSet& atoms);

std::string render(const Program& p);

// Structural program equality: same rule sequence up to ids, bodies as sets.
bool structurally_equal(const Program& a, const Program& b);

// All distinct ground atoms occurring anywhere in p (heads, bodies, choices).
AtomSet atoms_of(const Program& p);

}  // namespace aspfix

#endif
