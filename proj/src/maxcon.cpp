#include "aspfix/maxcon.hpp"

#include <algorithm>
#include <deque>

namespace aspfix {

TargetSet::TargetSet(std::vector<Atom> a) : atoms(std::move(a)) {
    AtomSet seen;
    for (const auto& atom : atoms) {
        if (!atom.is_ground())
            throw std::invalid_argument("target atom not ground: " + atom.to_string());
        if (!seen.insert(atom).second)
            throw std::invalid_argument("duplicate target atom: " + atom.to_string());
    }
}

bool TargetSet::contains(const Atom& a) const {
    return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
}

std::optional<MaxConAlgo> algo_from_letter(char c) {
    switch (c) {
        case 'a': return MaxConAlgo::Atleast;
        case 'u': return MaxConAlgo::Unit;
        case 'p': return MaxConAlgo::Progression;
        case 'x': return MaxConAlgo::MaxCard;
        default: return std::nullopt;
    }
}

char algo_letter(MaxConAlgo a) {
    switch (a) {
        case MaxConAlgo::Atleast: return 'a';
        case MaxConAlgo::Unit: return 'u';
        case MaxConAlgo::Progression: return 'p';
        case MaxConAlgo::MaxCard: return 'x';
    }
    return '?';
}

Rule choice_of(const std::vector<Atom>& s) { return Rule::choice(0, s); }

Rule atleast_of(const std::vector<Atom>& s) {
    if (s.empty())
        throw std::invalid_argument("atleast over the empty set is unsatisfiable");
    return Rule::choice(1, s);
}

Rule atleast_k_of(unsigned k, const std::vector<Atom>& s) { return Rule::choice(k, s); }

namespace {

// Builds P + {s. : s in facts} + optional extra choice rule.
Program extend(const Program& p, const AtomSet& facts, std::optional<Rule> extra) {
    Program out = p.with_facts(facts);
    if (extra) out.add_rule(std::move(*extra));
    return out;
}

AtomSet intersect(const Interpretation& mu, const TargetSet& s) {
    AtomSet out;
    for (const auto& a : s.atoms)
        if (mu.contains(a)) out.insert(a);
    return out;
}

std::vector<Atom> minus(const std::vector<Atom>& s, const AtomSet& l) {
    std::vector<Atom> out;
    for (const auto& a : s)
        if (!l.count(a)) out.push_back(a);
    return out;
}

void ensure(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

struct Oracle {
    const SolverConfig& cfg;
    std::uint64_t calls = 0;
    SolveResult run(const Program& p) {
        ++calls;
        return solve(p, cfg);
    }
};

// Feasibility precheck: P + choice(S) decides whether any subset works and
// seeds L with mu cap S.
struct Seed {
    AtomSet l;
    Interpretation witness;
};

Seed precheck(Oracle& oracle, const Program& p, const TargetSet& s) {
    auto res = oracle.run(extend(p, {}, choice_of(s.atoms)));
    if (!res.consistent) throw NoConsistentSubset();
    return Seed{intersect(*res.model, s), std::move(*res.model)};
}

}  // namespace

std::optional<AtomSet> can_extend(const Program& p, const TargetSet& s, const AtomSet& l,
                                  const SolverConfig& cfg) {
    auto res = solve(extend(p, l, choice_of(minus(s.atoms, l))), cfg);
    if (!res.consistent) return std::nullopt;
    return intersect(*res.model, s);
}

bool is_maximal(const Program& p, const TargetSet& s, const AtomSet& l,
                const SolverConfig& cfg) {
    std::vector<Atom> rest = minus(s.atoms, l);
    if (rest.empty()) return true;
    auto res = solve(extend(p, l, atleast_of(rest)), cfg);
    return !res.consistent;
}

MaxConResult algo_atleast(const Program& p, const TargetSet& s, const SolverConfig& cfg) {
    Oracle oracle{cfg};
    Seed seed = precheck(oracle, p, s);
    AtomSet l = std::move(seed.l);
    Interpretation witness = std::move(seed.witness);

    for (;;) {
        std::vector<Atom> rest = minus(s.atoms, l);
        if (rest.empty()) break;
        auto res = oracle.run(extend(p, l, atleast_of(rest)));
        if (!res.consistent) break;
        AtomSet grown = intersect(*res.model, s);
        ensure(std::includes(grown.begin(), grown.end(), l.begin(), l.end()),
               "lower bound did not grow monotonically");
        l = std::move(grown);
        witness = std::move(*res.model);
    }
    ensure(oracle.calls <= s.size() + 2, "atleast exceeded its |S|+2 call budget");
    return MaxConResult{std::move(l), oracle.calls, std::move(witness)};
}

MaxConResult algo_unit(const Program& p, const TargetSet& s, const SolverConfig& cfg) {
    Oracle oracle{cfg};
    Seed seed = precheck(oracle, p, s);
    AtomSet l = std::move(seed.l);
    Interpretation witness = std::move(seed.witness);

    std::deque<Atom> pending(s.atoms.begin(), s.atoms.end());
    while (!pending.empty()) {
        Atom sf = pending.front();
        pending.pop_front();
        if (l.count(sf)) continue;
        AtomSet candidate = l;
        candidate.insert(sf);
        std::vector<Atom> rest;
        for (const auto& a : pending)
            if (!candidate.count(a)) rest.push_back(a);
        auto res = oracle.run(extend(p, candidate, choice_of(rest)));
        if (!res.consistent) continue;  // sf rejected for good
        l = intersect(*res.model, s);
        witness = std::move(*res.model);
    }
    ensure(oracle.calls <= s.size() + 1, "unit exceeded its |S|+1 call budget");
    return MaxConResult{std::move(l), oracle.calls, std::move(witness)};
}

MaxConResult algo_progression(const Program& p, const TargetSet& s,
                              const SolverConfig& cfg) {
    Oracle oracle{cfg};
    Seed seed = precheck(oracle, p, s);
    AtomSet l = std::move(seed.l);
    Interpretation witness = std::move(seed.witness);

    std::deque<Atom> pending;
    for (const auto& a : s.atoms)
        if (!l.count(a)) pending.push_back(a);
    std::size_t chunk_size = 1;

    while (!pending.empty()) {
        std::size_t take = std::min(chunk_size, pending.size());
        std::vector<Atom> chunk(pending.begin(), pending.begin() + take);
        pending.erase(pending.begin(), pending.begin() + take);

        AtomSet candidate = l;
        for (const auto& a : chunk) candidate.insert(a);
        std::vector<Atom> rest(pending.begin(), pending.end());
        auto res = oracle.run(extend(p, candidate, choice_of(rest)));
        if (!res.consistent) {
            if (chunk.size() > 1)  // re-analyze the chunk more finely
                pending.insert(pending.begin(), chunk.begin(), chunk.end());
            chunk_size = 1;
        } else {
            chunk_size *= 2;
            l = intersect(*res.model, s);
            witness = std::move(*res.model);
            std::erase_if(pending, [&](const Atom& a) { return l.count(a) != 0; });
        }
    }
    ensure(oracle.calls <= 3 * s.size() + 1, "progression exceeded its 3|S|+1 call budget");
    return MaxConResult{std::move(l), oracle.calls, std::move(witness)};
}

MaxConResult algo_maxcard(const Program& p, const TargetSet& s, const SolverConfig& cfg) {
    Oracle oracle{cfg};
    Seed seed = precheck(oracle, p, s);
    AtomSet l = std::move(seed.l);
    Interpretation witness = std::move(seed.witness);

    while (l.size() < s.size()) {
        auto res =
            oracle.run(p.with_rule(atleast_k_of(static_cast<unsigned>(l.size()) + 1, s.atoms)));
        if (!res.consistent) break;
        l = intersect(*res.model, s);
        witness = std::move(*res.model);
    }
    return MaxConResult{std::move(l), oracle.calls, std::move(witness)};
}

MaxConResult run_maxcon(MaxConAlgo algo, const Program& p, const TargetSet& s,
                        const SolverConfig& cfg) {
    switch (algo) {
        case MaxConAlgo::Atleast: return algo_atleast(p, s, cfg);
        case MaxConAlgo::Unit: return algo_unit(p, s, cfg);
        case MaxConAlgo::Progression: return algo_progression(p, s, cfg);
        case MaxConAlgo::MaxCard: return algo_maxcard(p, s, cfg);
    }
    throw std::logic_error("unknown algorithm");
}

}  // namespace aspfix
