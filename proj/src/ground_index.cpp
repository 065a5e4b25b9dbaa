#include "aspfix/ground_index.hpp"

#include <stdexcept>

namespace aspfix {

GroundIndex::GroundIndex(const Program& p) {
    auto intern = [this](const Atom& a) {
        auto [it, inserted] = index_of.emplace(a, static_cast<int>(atoms.size()));
        if (inserted) {
            atoms.push_back(a);
            is_choice_atom.push_back(0);
        }
        return it->second;
    };

    for (const auto& r : p.rules()) {
        if (!r.is_ground())
            throw std::invalid_argument("GroundIndex requires a ground program");
        switch (r.kind) {
            case RuleKind::Normal: {
                NormalRule nr;
                nr.head = intern(*r.head);
                for (const auto& a : r.body_pos) nr.pos.push_back(intern(a));
                for (const auto& a : r.body_neg) nr.neg.push_back(intern(a));
                normals.push_back(std::move(nr));
                break;
            }
            case RuleKind::Constraint: {
                ConstraintRule cr;
                for (const auto& a : r.body_pos) cr.pos.push_back(intern(a));
                for (const auto& a : r.body_neg) cr.neg.push_back(intern(a));
                constraints.push_back(std::move(cr));
                break;
            }
            case RuleKind::Choice: {
                ChoiceRule ch;
                ch.bound = r.choice_bound;
                for (const auto& a : r.choice_atoms) {
                    int i = intern(a);
                    ch.atoms.push_back(i);
                    is_choice_atom[i] = 1;
                }
                choices.push_back(std::move(ch));
                break;
            }
        }
    }
    support.assign(atoms.size(), {});
    for (std::size_t i = 0; i < normals.size(); ++i)
        support[normals[i].head].push_back(static_cast<int>(i));
}

std::vector<char> GroundIndex::derivable(const std::vector<char>& in) const {
    std::vector<char> out(atoms.size(), 0);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (in[i] && is_choice_atom[i]) out[i] = 1;

    // rules not blocked by their negative body under `in`
    std::vector<char> active(normals.size(), 1);
    for (std::size_t r = 0; r < normals.size(); ++r)
        for (int n : normals[r].neg)
            if (in[n]) {
                active[r] = 0;
                break;
            }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < normals.size(); ++r) {
            if (!active[r] || out[normals[r].head]) continue;
            bool fires = true;
            for (int b : normals[r].pos)
                if (!out[b]) {
                    fires = false;
                    break;
                }
            if (fires) {
                out[normals[r].head] = 1;
                changed = true;
            }
        }
    }
    return out;
}

bool GroundIndex::constraints_ok(const std::vector<char>& in) const {
    for (const auto& c : constraints) {
        bool fires = true;
        for (int b : c.pos)
            if (!in[b]) {
                fires = false;
                break;
            }
        if (!fires) continue;
        for (int n : c.neg)
            if (in[n]) {
                fires = false;
                break;
            }
        if (fires) return false;
    }
    return true;
}

bool GroundIndex::bounds_ok(const std::vector<char>& in) const {
    for (const auto& ch : choices) {
        unsigned count = 0;
        for (int a : ch.atoms)
            if (in[a]) ++count;
        if (count < ch.bound) return false;
    }
    return true;
}

Interpretation GroundIndex::to_interpretation(const std::vector<char>& in) const {
    Interpretation out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (in[i]) out.atoms.insert(atoms[i]);
    return out;
}

}  // namespace aspfix
