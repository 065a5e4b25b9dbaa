#ifndef ASPFIX_GENERATORS_HPP
#define ASPFIX_GENERATORS_HPP

#include <cstdint>
#include <string>

namespace aspfix {

struct GeneratedInstance {
    std::string name;          // instance id, also the suggested file stem
    std::string family;        // e.g. "graceful[6,10]"
    std::string program_text;  // .lp contents
    std::string spec_text;     // .spec.json contents
};

// Graceful-graph labeling over a random simple graph: vertices take distinct
// labels 0..E, edge labels are the absolute label differences (pre-tabulated
// as diff/3 facts) and must be pairwise distinct. Edge facts are removable.
GeneratedInstance gen_graceful(unsigned vertices, unsigned edges, std::uint64_t seed);

// Permutation pattern matching: the pattern P, given as pel(pos,val) facts,
// must embed order-isomorphically into the text permutation T. Every pattern
// position must carry a value, so corrections replace pattern elements:
// pel facts are removable and fresh (pos,val) pairs are addable via
// pel(I,V):peldom(I,V).
GeneratedInstance gen_patterns(unsigned text_len, unsigned pattern_len, std::uint64_t seed);

}  // namespace aspfix

#endif
