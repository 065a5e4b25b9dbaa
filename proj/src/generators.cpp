#include "aspfix/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace aspfix {

namespace {

std::string vertex(unsigned i) { return "v" + std::to_string(i + 1); }

}  // namespace

GeneratedInstance gen_graceful(unsigned vertices, unsigned edges, std::uint64_t seed) {
    unsigned max_edges = vertices * (vertices - 1) / 2;
    if (edges > max_edges)
        throw std::invalid_argument("infeasible graph: " + std::to_string(edges) +
                                    " edges exceed " + std::to_string(max_edges));

    std::vector<std::pair<unsigned, unsigned>> all_edges;
    for (unsigned u = 0; u < vertices; ++u)
        for (unsigned w = u + 1; w < vertices; ++w) all_edges.emplace_back(u, w);
    std::mt19937_64 rng(seed);
    std::shuffle(all_edges.begin(), all_edges.end(), rng);
    all_edges.resize(edges);
    std::sort(all_edges.begin(), all_edges.end());

    std::ostringstream lp;
    lp << "% graceful labeling instance: " << vertices << " vertices, " << edges
       << " edges, seed " << seed << "\n";
    for (auto [u, w] : all_edges) lp << "edge(" << vertex(u) << "," << vertex(w) << ").\n";

    for (unsigned i = 0; i <= edges; ++i)
        for (unsigned j = 0; j <= edges; ++j)
            if (i != j) lp << "diff(" << i << "," << j << "," << (i > j ? i - j : j - i) << ").\n";

    // each vertex takes exactly one label in 0..E
    for (unsigned v = 0; v < vertices; ++v) {
        lp << "1 { ";
        for (unsigned i = 0; i <= edges; ++i) {
            if (i) lp << "; ";
            lp << "label(" << vertex(v) << "," << i << ")";
        }
        lp << " }.\n";
    }
    for (unsigned v = 0; v < vertices; ++v)
        for (unsigned i = 0; i <= edges; ++i)
            for (unsigned j = i + 1; j <= edges; ++j)
                lp << ":- label(" << vertex(v) << "," << i << "), label(" << vertex(v) << ","
                   << j << ").\n";

    // vertex labels are pairwise distinct
    for (unsigned v = 0; v < vertices; ++v)
        for (unsigned w = v + 1; w < vertices; ++w)
            for (unsigned i = 0; i <= edges; ++i)
                lp << ":- label(" << vertex(v) << "," << i << "), label(" << vertex(w) << ","
                   << i << ").\n";

    // edge labels are the label differences of present edges
    for (auto [u, w] : all_edges)
        for (unsigned i = 0; i <= edges; ++i)
            for (unsigned j = 0; j <= edges; ++j) {
                if (i == j) continue;
                unsigned d = i > j ? i - j : j - i;
                lp << "elabel(" << vertex(u) << "," << vertex(w) << "," << d << ") :- edge("
                   << vertex(u) << "," << vertex(w) << "), label(" << vertex(u) << "," << i
                   << "), label(" << vertex(w) << "," << j << "), diff(" << i << "," << j
                   << "," << d << ").\n";
            }

    // edge labels are pairwise distinct
    for (std::size_t a = 0; a < all_edges.size(); ++a)
        for (std::size_t b = a + 1; b < all_edges.size(); ++b)
            for (unsigned d = 1; d <= edges; ++d)
                lp << ":- elabel(" << vertex(all_edges[a].first) << ","
                   << vertex(all_edges[a].second) << "," << d << "), elabel("
                   << vertex(all_edges[b].first) << "," << vertex(all_edges[b].second) << ","
                   << d << ").\n";

    GeneratedInstance out;
    out.name = "graceful-v" + std::to_string(vertices) + "-e" + std::to_string(edges) +
               "-s" + std::to_string(seed);
    out.family = "graceful[" + std::to_string(vertices) + "," + std::to_string(edges) + "]";
    out.program_text = lp.str();
    out.spec_text = std::string("{\n  \"family\": \"") + out.family +
                    "\",\n  \"removable\": [\"edge/2\"]\n}\n";
    return out;
}

GeneratedInstance gen_patterns(unsigned text_len, unsigned pattern_len, std::uint64_t seed) {
    if (pattern_len > text_len)
        throw std::invalid_argument("pattern longer than text");

    std::mt19937_64 rng(seed);
    std::vector<unsigned> text(text_len), pattern(pattern_len);
    std::iota(text.begin(), text.end(), 1);
    std::iota(pattern.begin(), pattern.end(), 1);
    std::shuffle(text.begin(), text.end(), rng);
    std::shuffle(pattern.begin(), pattern.end(), rng);

    std::ostringstream lp;
    lp << "% permutation pattern instance: |T|=" << text_len << " |P|=" << pattern_len
       << ", seed " << seed << "\n% T =";
    for (unsigned x : text) lp << ' ' << x;
    lp << "\n";

    for (unsigned i = 0; i < pattern_len; ++i)
        lp << "pel(" << i + 1 << "," << pattern[i] << ").\n";
    for (unsigned i = 1; i <= pattern_len; ++i)
        for (unsigned v = 1; v <= pattern_len; ++v)
            if (v != pattern[i - 1]) lp << "peldom(" << i << "," << v << ").\n";

    // every pattern position carries exactly one value, values distinct
    for (unsigned i = 1; i <= pattern_len; ++i)
        for (unsigned v = 1; v <= pattern_len; ++v)
            lp << "haspos(" << i << ") :- pel(" << i << "," << v << ").\n";
    for (unsigned i = 1; i <= pattern_len; ++i) lp << ":- not haspos(" << i << ").\n";
    for (unsigned i = 1; i <= pattern_len; ++i)
        for (unsigned v = 1; v <= pattern_len; ++v)
            for (unsigned w = v + 1; w <= pattern_len; ++w)
                lp << ":- pel(" << i << "," << v << "), pel(" << i << "," << w << ").\n";
    for (unsigned i = 1; i <= pattern_len; ++i)
        for (unsigned k = i + 1; k <= pattern_len; ++k)
            for (unsigned v = 1; v <= pattern_len; ++v)
                lp << ":- pel(" << i << "," << v << "), pel(" << k << "," << v << ").\n";

    // embedding: position i maps to exactly one text position, in order
    for (unsigned i = 1; i <= pattern_len; ++i) {
        lp << "0 { ";
        for (unsigned j = 1; j <= text_len; ++j) {
            if (j > 1) lp << "; ";
            lp << "m(" << i << "," << j << ")";
        }
        lp << " }.\n";
    }
    for (unsigned i = 1; i <= pattern_len; ++i)
        for (unsigned j = 1; j <= text_len; ++j)
            lp << "matched(" << i << ") :- m(" << i << "," << j << ").\n";
    for (unsigned i = 1; i <= pattern_len; ++i) lp << ":- not matched(" << i << ").\n";
    for (unsigned i = 1; i <= pattern_len; ++i)
        for (unsigned j = 1; j <= text_len; ++j)
            for (unsigned k = j + 1; k <= text_len; ++k)
                lp << ":- m(" << i << "," << j << "), m(" << i << "," << k << ").\n";
    for (unsigned j = 1; j <= text_len; ++j)
        for (unsigned i = 1; i <= pattern_len; ++i)
            for (unsigned k = i + 1; k <= pattern_len; ++k)
                lp << ":- m(" << i << "," << j << "), m(" << k << "," << j << ").\n";
    for (unsigned i = 1; i <= pattern_len; ++i)
        for (unsigned k = i + 1; k <= pattern_len; ++k)
            for (unsigned j = 1; j <= text_len; ++j)
                for (unsigned j2 = 1; j2 <= j; ++j2)
                    lp << ":- m(" << i << "," << j << "), m(" << k << "," << j2 << ").\n";

    // order isomorphism between pattern values and text values
    for (unsigned i = 1; i <= pattern_len; ++i)
        for (unsigned k = i + 1; k <= pattern_len; ++k)
            for (unsigned v = 1; v <= pattern_len; ++v)
                for (unsigned w = 1; w <= pattern_len; ++w) {
                    if (v == w) continue;
                    for (unsigned j = 1; j <= text_len; ++j)
                        for (unsigned j2 = j + 1; j2 <= text_len; ++j2) {
                            bool pattern_up = v < w;
                            bool text_up = text[j - 1] < text[j2 - 1];
                            if (pattern_up == text_up) continue;
                            lp << ":- pel(" << i << "," << v << "), pel(" << k << "," << w
                               << "), m(" << i << "," << j << "), m(" << k << "," << j2
                               << ").\n";
                        }
                }

    GeneratedInstance out;
    out.name = "patterns-t" + std::to_string(text_len) + "-p" + std::to_string(pattern_len) +
               "-s" + std::to_string(seed);
    out.family = "patterns[" + std::to_string(text_len) + "," + std::to_string(pattern_len) + "]";
    out.program_text = lp.str();
    out.spec_text = std::string("{\n  \"family\": \"") + out.family +
                    "\",\n  \"removable\": [\"pel/2\"],\n  \"addition_exprs\": "
                    "[\"pel(I,V):peldom(I,V)\"]\n}\n";
    return out;
}

}  // namespace aspfix
