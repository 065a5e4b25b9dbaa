#include "aspfix/model.hpp"

#include <algorithm>
#include <sstream>

namespace aspfix {

std::string Atom::to_string() const {
    if (args.empty()) return predicate;
    std::ostringstream os;
    os << predicate << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) os << ',';
        os << args[i].to_string();
    }
    os << ')';
    return os.str();
}

bool Rule::is_ground() const {
    auto all_ground = [](const std::vector<Atom>& v) {
        return std::all_of(v.begin(), v.end(), [](const Atom& a) { return a.is_ground(); });
    };
    if (head && !head->is_ground()) return false;
    return all_ground(body_pos) && all_ground(body_neg) && all_ground(choice_atoms);
}

std::string Rule::to_string() const {
    std::ostringstream os;
    if (kind == RuleKind::Choice) {
        os << choice_bound << " { ";
        for (std::size_t i = 0; i < choice_atoms.size(); ++i) {
            if (i) os << "; ";
            os << choice_atoms[i].to_string();
        }
        os << " }.";
        return os.str();
    }
    if (head) os << head->to_string();
    if (!body_pos.empty() || !body_neg.empty()) {
        os << (head ? " :- " : ":- ");
        bool first = true;
        for (const auto& a : body_pos) {
            if (!first) os << ", ";
            os << a.to_string();
            first = false;
        }
        for (const auto& a : body_neg) {
            if (!first) os << ", ";
            os << "not " << a.to_string();
            first = false;
        }
    } else if (!head) {
        os << ":- ";  // unreachable for well-formed rules
    }
    os << '.';
    return os.str();
}

namespace {

std::vector<Atom> sorted(std::vector<Atom> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool rules_equal(const Rule& a, const Rule& b) {
    if (a.kind != b.kind) return false;
    if (a.head.has_value() != b.head.has_value()) return false;
    if (a.head && !(*a.head == *b.head)) return false;
    if (a.kind == RuleKind::Choice)
        return a.choice_bound == b.choice_bound &&
               sorted(a.choice_atoms) == sorted(b.choice_atoms);
    return sorted(a.body_pos) == sorted(b.body_pos) &&
           sorted(a.body_neg) == sorted(b.body_neg);
}

void Program::declare(const std::string& pred, std::size_t arity) {
    auto [it, inserted] = signature_.emplace(pred, arity);
    if (!inserted && it->second != arity)
        throw std::invalid_argument("arity clash for predicate '" + pred + "': " +
                                    std::to_string(it->second) + " vs " +
                                    std::to_string(arity));
}

int Program::add_rule(Rule r) {
    auto declare_atom = [this](const Atom& a) { declare(a.predicate, a.arity()); };
    if (r.head) declare_atom(*r.head);
    for (const auto& a : r.body_pos) declare_atom(a);
    for (const auto& a : r.body_neg) declare_atom(a);
    for (const auto& a : r.choice_atoms) declare_atom(a);
    r.id = next_id_++;
    rules_.push_back(std::move(r));
    return rules_.back().id;
}

void Program::replace_rule(std::size_t idx, Rule r) {
    int keep = rules_.at(idx).id;
    auto declare_atom = [this](const Atom& a) { declare(a.predicate, a.arity()); };
    if (r.head) declare_atom(*r.head);
    for (const auto& a : r.body_pos) declare_atom(a);
    for (const auto& a : r.body_neg) declare_atom(a);
    for (const auto& a : r.choice_atoms) declare_atom(a);
    r.id = keep;
    rules_[idx] = std::move(r);
}

const Rule* Program::rule_by_id(int id) const {
    for (const auto& r : rules_)
        if (r.id == id) return &r;
    return nullptr;
}

bool Program::is_ground() const {
    return std::all_of(rules_.begin(), rules_.end(),
                       [](const Rule& r) { return r.is_ground(); });
}

Program Program::with_facts(const AtomSet& atoms) const {
    Program out = *this;
    for (const auto& a : atoms) {
        if (!a.is_ground())
            throw std::invalid_argument("non-ground fact atom: " + a.to_string());
        out.add_rule(Rule::fact(a));
    }
    return out;
}

Program Program::with_rule(Rule r) const {
    Program out = *this;
    out.add_rule(std::move(r));
    return out;
}

std::string Program::render() const {
    std::ostringstream os;
    for (const auto& r : rules_) os << r.to_string() << '\n';
    return os.str();
}

Program facts_of(const AtomSet& atoms) {
    Program p;
    for (const auto& a : atoms) {
        if (!a.is_ground())
            throw std::invalid_argument("non-ground fact atom: " + a.to_string());
        p.add_rule(Rule::fact(a));
    }
    return p;
}

std::string render(const Program& p) { return p.render(); }

bool structurally_equal(const Program& a, const Program& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!rules_equal(a.rules()[i], b.rules()[i])) return false;
    return true;
}

AtomSet atoms_of(const Program& p) {
    AtomSet out;
    for (const auto& r : p.rules()) {
        if (r.head && r.head->is_ground()) out.insert(*r.head);
        for (const auto& a : r.body_pos)
            if (a.is_ground()) out.insert(a);
        for (const auto& a : r.body_neg)
            if (a.is_ground()) out.insert(a);
        for (const auto& a : r.choice_atoms)
            if (a.is_ground()) out.insert(a);
    }
    return out;
}

}  // namespace aspfix
