#include "aspfix/correction.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "aspfix/parser.hpp"

namespace aspfix {

namespace {

std::set<std::string> pattern_vars(const Atom& a) {
    std::set<std::string> out;
    for (const auto& t : a.args)
        if (t.kind == TermKind::Variable) out.insert(t.name);
    return out;
}

}  // namespace

AdditionExpr AdditionExpr::parse(const std::string& text) {
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == ':' && depth == 0) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw std::invalid_argument("addition expression must have the form p(A1):t(A2): " +
                                    text);
    AdditionExpr e;
    e.head_pattern = parse_atom(text.substr(0, split));
    e.domain_pattern = parse_atom(text.substr(split + 1));
    auto hv = pattern_vars(e.head_pattern);
    auto dv = pattern_vars(e.domain_pattern);
    for (const auto& v : hv)
        if (!dv.count(v))
            throw std::invalid_argument("unsafe addition expression, variable " + v +
                                        " does not occur in the domain: " + text);
    return e;
}

std::string AdditionExpr::to_string() const {
    return head_pattern.to_string() + ":" + domain_pattern.to_string();
}

CorrectionSpec CorrectionSpec::from_json_text(const std::string& text,
                                              const std::string& filename) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(filename + ": " + e.what());
    }
    CorrectionSpec spec;
    if (j.contains("removable")) {
        for (const auto& item : j.at("removable")) {
            if (item.is_number_integer()) {
                spec.removable_ids.push_back(item.get<int>());
            } else {
                std::string s = item.get<std::string>();
                auto slash = s.rfind('/');
                if (slash == std::string::npos)
                    throw std::invalid_argument(filename +
                                                ": removable entry must be pred/arity or a "
                                                "rule id: " +
                                                s);
                spec.removable_preds.emplace_back(
                    s.substr(0, slash),
                    static_cast<std::size_t>(std::stoul(s.substr(slash + 1))));
            }
        }
    }
    if (j.contains("addable_rules"))
        for (const auto& item : j.at("addable_rules"))
            spec.addable_rules.push_back(parse_rule(item.get<std::string>(), filename));
    if (j.contains("addition_exprs"))
        for (const auto& item : j.at("addition_exprs"))
            spec.addition_exprs.push_back(AdditionExpr::parse(item.get<std::string>()));
    return spec;
}

std::string CorrectionSpec::to_json_text() const {
    nlohmann::json j;
    auto& rem = j["removable"] = nlohmann::json::array();
    for (const auto& [pred, arity] : removable_preds)
        rem.push_back(pred + "/" + std::to_string(arity));
    for (int id : removable_ids) rem.push_back(id);
    auto& add = j["addable_rules"] = nlohmann::json::array();
    for (const auto& r : addable_rules) add.push_back(r.to_string());
    auto& ex = j["addition_exprs"] = nlohmann::json::array();
    for (const auto& e : addition_exprs) ex.push_back(e.to_string());
    return j.dump(2);
}

std::vector<Rule> resolve_removable(const Program& ground, const CorrectionSpec& spec) {
    std::set<int> ids;
    std::vector<Rule> out;
    for (const auto& r : ground.rules()) {
        bool take = false;
        if (r.is_fact()) {
            for (const auto& [pred, arity] : spec.removable_preds)
                if (r.head->predicate == pred && r.head->arity() == arity) {
                    take = true;
                    break;
                }
        }
        if (!take &&
            std::find(spec.removable_ids.begin(), spec.removable_ids.end(), r.id) !=
                spec.removable_ids.end())
            take = true;
        if (take && ids.insert(r.id).second) out.push_back(r);
    }
    for (int id : spec.removable_ids)
        if (!ids.count(id))
            throw std::invalid_argument("removable rule id not found: " + std::to_string(id));
    return out;
}

namespace {

std::string fresh_predicate(std::string base, const std::set<std::string>& taken) {
    while (taken.count(base)) base += "_";
    return base;
}

Rule gate_removal(const Rule& r, const Atom& selector) {
    Rule out = r;  // keeps kind, head, id
    out.body_pos.push_back(selector);
    return out;
}

Rule gate_addition(const Rule& r, const Atom& selector) {
    Rule out = r;
    out.body_neg.push_back(selector);
    return out;
}

}  // namespace

InstrumentedProgram instrument(const Program& p, const std::vector<Rule>& removable,
                               const std::vector<Rule>& addable) {
    std::set<std::string> taken;
    for (const auto& [pred, _] : p.signature()) taken.insert(pred);
    for (const auto& r : addable) {
        if (r.head) taken.insert(r.head->predicate);
        for (const auto& a : r.body_pos) taken.insert(a.predicate);
        for (const auto& a : r.body_neg) taken.insert(a.predicate);
    }

    InstrumentedProgram ip;
    ip.removal_pred = fresh_predicate("sel_r", taken);
    taken.insert(ip.removal_pred);
    ip.addition_pred = fresh_predicate("sel_a", taken);

    for (const auto& r : removable) {
        if (r.kind == RuleKind::Choice)
            throw std::invalid_argument("choice rules cannot be instrumented for removal");
        if (!p.rule_by_id(r.id))
            throw std::invalid_argument("removable rule not found in program: " +
                                        r.to_string());
    }
    for (const auto& r : addable) {
        if (r.kind == RuleKind::Choice)
            throw std::invalid_argument("choice rules cannot be instrumented for addition");
        for (const auto& pr : p.rules())
            if (rules_equal(pr, r))
                throw std::invalid_argument("addable rule already present in program: " +
                                            r.to_string());
    }

    ip.program = p;
    std::vector<Atom> selectors;
    for (const auto& r : removable) {
        Atom sel(ip.removal_pred, {Term::integer(r.id)});
        for (std::size_t i = 0; i < ip.program.rules().size(); ++i) {
            if (ip.program.rules()[i].id == r.id) {
                ip.program.replace_rule(i, gate_removal(r, sel));
                break;
            }
        }
        selectors.push_back(sel);
        ip.provenance.emplace(sel, std::make_pair(r, true));
    }
    int addition_index = 1;
    for (const auto& r : addable) {
        Atom sel(ip.addition_pred, {Term::integer(addition_index++)});
        ip.program.add_rule(gate_addition(r, sel));
        selectors.push_back(sel);
        ip.provenance.emplace(sel, std::make_pair(r, false));
    }
    ip.selectors = TargetSet(std::move(selectors));
    return ip;
}

Correction extract_correction(const AtomSet& l, const InstrumentedProgram& ip,
                              const Interpretation& witness, bool verify,
                              const SolverConfig& cfg) {
    if (verify && !is_maximal(ip.program, ip.selectors, l, cfg))
        throw std::invalid_argument(
            "selector subset is not maximal; correction would not be minimal");

    Correction c;
    for (const auto& sel : ip.selectors.atoms) {
        if (l.count(sel)) continue;
        const auto& [rule, is_removal] = ip.provenance.at(sel);
        (is_removal ? c.removed : c.added).push_back(rule);
    }
    for (const auto& a : witness.atoms)
        if (a.predicate != ip.removal_pred && a.predicate != ip.addition_pred)
            c.witness.atoms.insert(a);
    return c;
}

std::vector<Rule> instantiate_additions(const Program& p,
                                        const std::vector<Rule>& removable,
                                        const std::vector<AdditionExpr>& exprs,
                                        const SolverConfig& cfg,
                                        std::uint64_t* oracle_calls) {
    InstrumentedProgram ip = instrument(p, removable, {});

    // candidate atoms: head patterns instantiated by matching the domain
    // pattern against derivable atoms of the grounding
    AtomSet derivable;
    for (const auto& r : p.rules()) {
        if (r.head) derivable.insert(*r.head);
        for (const auto& a : r.choice_atoms) derivable.insert(a);
    }
    AtomSet candidates;
    for (const auto& e : exprs) {
        for (const auto& d : derivable) {
            if (d.predicate != e.domain_pattern.predicate ||
                d.arity() != e.domain_pattern.arity())
                continue;
            std::map<std::string, Term> binding;
            bool ok = true;
            for (std::size_t i = 0; i < d.args.size(); ++i) {
                const Term& pat = e.domain_pattern.args[i];
                if (pat.kind == TermKind::Variable) {
                    auto [it, inserted] = binding.emplace(pat.name, d.args[i]);
                    if (!inserted && !(it->second == d.args[i])) {
                        ok = false;
                        break;
                    }
                } else if (!(pat == d.args[i])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Atom candidate = e.head_pattern;
            for (auto& t : candidate.args)
                if (t.kind == TermKind::Variable) t = binding.at(t.name);
            candidates.insert(candidate);
        }
    }

    std::vector<Atom> trigger(ip.selectors.atoms.begin(), ip.selectors.atoms.end());
    trigger.insert(trigger.end(), candidates.begin(), candidates.end());
    if (trigger.empty()) throw NoAdditionCandidates();

    Program query = ip.program.with_rule(atleast_of(trigger));
    if (oracle_calls) ++*oracle_calls;
    auto res = solve(query, cfg);
    if (!res.consistent) throw NoAdditionCandidates();

    std::vector<Rule> additions;
    for (const auto& a : candidates)
        if (res.model->contains(a)) additions.push_back(Rule::fact(a));
    return additions;
}

Correction min_correct(const Program& ground, const CorrectionSpec& spec, MaxConAlgo algo,
                       const SolverConfig& cfg) {
    if (!ground.is_ground())
        throw std::invalid_argument("min_correct requires a ground program");

    std::vector<Rule> removable = resolve_removable(ground, spec);

    std::uint64_t calls = 0;
    std::vector<Rule> materialized;
    if (!spec.addition_exprs.empty())
        materialized = instantiate_additions(ground, removable, spec.addition_exprs, cfg, &calls);

    std::vector<Rule> addable;
    auto push_addable = [&](const Rule& r) {
        for (const auto& existing : addable)
            if (rules_equal(existing, r)) return;
        for (const auto& pr : ground.rules())
            if (rules_equal(pr, r)) return;  // adding an existing rule is a no-op
        addable.push_back(r);
    };
    for (const auto& r : spec.addable_rules) push_addable(r);
    for (const auto& r : materialized) push_addable(r);

    InstrumentedProgram ip = instrument(ground, removable, addable);

    MaxConResult mc;
    try {
        mc = run_maxcon(algo, ip.program, ip.selectors, cfg);
    } catch (const NoConsistentSubset&) {
        throw NoCorrection();
    }

    Correction c = extract_correction(mc.subset, ip, mc.witness);
    c.oracle_calls = calls + mc.oracle_calls;
    c.materialized_additions = std::move(materialized);
    return c;
}

}  // namespace aspfix
