// Test-side reference oracles, deliberately independent from the search
// backend: consistency and maximality are decided here by exhaustive
// enumeration over candidate interpretations through the declarative
// stable-model checker only. Keep instances small (<= ~16 candidate atoms).
#ifndef ASPFIX_TESTS_ORACLES_HPP
#define ASPFIX_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "aspfix/maxcon.hpp"
#include "aspfix/model.hpp"
#include "aspfix/solver.hpp"

namespace aspfix::test {

// Candidate atoms for any answer set: rule heads and choice atoms (every
// other atom is underivable and can never be in a stable model).
inline std::vector<Atom> candidate_universe(const Program& p) {
    std::vector<Atom> out;
    AtomSet seen;
    for (const auto& r : p.rules()) {
        if (r.head && seen.insert(*r.head).second) out.push_back(*r.head);
        for (const auto& a : r.choice_atoms)
            if (seen.insert(a).second) out.push_back(a);
    }
    return out;
}

// All answer sets, found by checking every subset of the candidate universe
// with is_answer_set. Independent of both solver backends.
inline std::set<AtomSet> exhaustive_answer_sets(const Program& p) {
    std::vector<Atom> uni = candidate_universe(p);
    if (uni.size() > 22) throw std::invalid_argument("oracle instance too large");
    std::set<AtomSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << uni.size()); ++mask) {
        AtomSet s;
        for (std::size_t i = 0; i < uni.size(); ++i)
            if (mask >> i & 1) s.insert(uni[i]);
        if (is_answer_set(p, Interpretation(s))) out.insert(s);
    }
    return out;
}

// Consistency of P + facts(must): only supersets of `must` can be stable, so
// enumeration ranges over the free candidate atoms.
inline bool oracle_consistent(const Program& p, const AtomSet& must = {}) {
    Program q = p.with_facts(must);
    std::vector<Atom> free;
    for (const auto& a : candidate_universe(q))
        if (!must.count(a)) free.push_back(a);
    if (free.size() > 22) throw std::invalid_argument("oracle instance too large");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        AtomSet s = must;
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask >> i & 1) s.insert(free[i]);
        if (is_answer_set(q, Interpretation(s))) return true;
    }
    return false;
}

// Exhaustive maximality: no strict superset of l within s keeps P + facts
// consistent. This is the ground truth the algorithms are judged against.
inline bool oracle_maximal(const Program& p, const TargetSet& s, const AtomSet& l) {
    if (!oracle_consistent(p, l)) return false;
    std::vector<Atom> rest;
    for (const auto& a : s.atoms)
        if (!l.count(a)) rest.push_back(a);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest.size()); ++mask) {
        AtomSet sup = l;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1) sup.insert(rest[i]);
        if (oracle_consistent(p, sup)) return false;
    }
    return true;
}

// Deliberately naive maximality check that only tests single-atom extensions.
// It wrongly accepts non-maximal sets on non-monotone programs (e.g. the
// empty set under {:- a, not b. :- b, not a.}), which is exactly why the
// algorithms must decide maximality through an atleast-extended solver call.
inline bool naive_single_extension_maximal(const Program& p, const TargetSet& s,
                                           const AtomSet& l) {
    if (!oracle_consistent(p, l)) return false;
    for (const auto& a : s.atoms) {
        if (l.count(a)) continue;
        AtomSet ext = l;
        ext.insert(a);
        if (oracle_consistent(p, ext)) return false;
    }
    return true;
}

// Seeded random ground programs: <= max_atoms atoms, <= max_rules rules,
// mixing normal rules, constraints, and bounded choice rules.
inline Program random_ground_program(std::uint64_t seed, unsigned max_atoms = 12,
                                     unsigned max_rules = 25) {
    std::mt19937_64 rng(seed);
    auto ri = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    int natoms = ri(std::min(3, static_cast<int>(max_atoms)), static_cast<int>(max_atoms));
    std::vector<Atom> pool;
    for (int i = 0; i < natoms; ++i) pool.emplace_back("a" + std::to_string(i));
    auto pick = [&] { return pool[ri(0, natoms - 1)]; };
    auto pick_some = [&](int maxn) {
        std::vector<Atom> v;
        int n = ri(0, maxn);
        for (int j = 0; j < n; ++j) v.push_back(pick());
        return v;
    };

    Program p;
    int nrules = ri(std::min(5, static_cast<int>(max_rules)), static_cast<int>(max_rules));
    for (int i = 0; i < nrules; ++i) {
        int kind = ri(0, 9);
        if (kind < 6) {
            p.add_rule(Rule::normal(pick(), pick_some(2), pick_some(2)));
        } else if (kind < 8) {
            auto pos = pick_some(2);
            auto neg = pick_some(2);
            if (pos.empty() && neg.empty()) pos.push_back(pick());
            p.add_rule(Rule::constraint(pos, neg));
        } else {
            std::vector<Atom> atoms;
            int n = ri(1, 3);
            for (int j = 0; j < n; ++j) atoms.push_back(pick());
            Rule dedup = Rule::choice(0, atoms);
            unsigned bound =
                static_cast<unsigned>(ri(0, static_cast<int>(dedup.choice_atoms.size())));
            p.add_rule(Rule::choice(bound, dedup.choice_atoms));
        }
    }
    return p;
}

// Random target set: a subset of the atoms mentioned by p, at most max_size.
inline TargetSet random_target_set(const Program& p, std::uint64_t seed,
                                   unsigned max_size = 10) {
    std::mt19937_64 rng(seed);
    AtomSet all = atoms_of(p);
    std::vector<Atom> atoms(all.begin(), all.end());
    std::shuffle(atoms.begin(), atoms.end(), rng);
    std::size_t n = std::uniform_int_distribution<std::size_t>(
        0, std::min<std::size_t>(atoms.size(), max_size))(rng);
    atoms.resize(n);
    return TargetSet(std::move(atoms));
}

}  // namespace aspfix::test

#endif
