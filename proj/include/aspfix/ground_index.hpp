#ifndef ASPFIX_GROUND_INDEX_HPP
#define ASPFIX_GROUND_INDEX_HPP

#include <map>
#include <vector>

#include "aspfix/model.hpp"

namespace aspfix {

// Integer-indexed view of a ground program, shared by the solver backends.
struct GroundIndex {
    struct NormalRule {
        int head;
        std::vector<int> pos, neg;
    };
    struct ConstraintRule {
        std::vector<int> pos, neg;
    };
    struct ChoiceRule {
        unsigned bound;
        std::vector<int> atoms;
    };

    std::vector<Atom> atoms;  // index -> atom
    std::map<Atom, int> index_of;
    std::vector<NormalRule> normals;
    std::vector<ConstraintRule> constraints;
    std::vector<ChoiceRule> choices;
    std::vector<char> is_choice_atom;  // per atom index
    std::vector<std::vector<int>> support;  // atom -> normal rule indices with that head

    explicit GroundIndex(const Program& p);

    int num_atoms() const { return static_cast<int>(atoms.size()); }

    // Least model of the reduct w.r.t. the candidate assignment `in`
    // (indexed by atom): choice atoms true in `in` seed the fixpoint,
    // normal rules blocked by a true negative body are dropped.
    std::vector<char> derivable(const std::vector<char>& in) const;

    // Constraint satisfaction and choice bounds for `in`.
    bool constraints_ok(const std::vector<char>& in) const;
    bool bounds_ok(const std::vector<char>& in) const;

    Interpretation to_interpretation(const std::vector<char>& in) const;
};

}  // namespace aspfix

#endif
