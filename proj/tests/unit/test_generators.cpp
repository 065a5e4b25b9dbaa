#include <doctest.h>

#include "aspfix/correction.hpp"
#include "aspfix/generators.hpp"
#include "aspfix/grounder.hpp"
#include "aspfix/parser.hpp"
#include "support/oracles.hpp"

using namespace aspfix;

TEST_CASE("generated instances are deterministic under a fixed seed") {
    auto a = gen_graceful(4, 4, 7);
    auto b = gen_graceful(4, 4, 7);
    CHECK(a.program_text == b.program_text);
    CHECK(a.spec_text == b.spec_text);
    CHECK(a.name == "graceful-v4-e4-s7");
    CHECK(gen_graceful(4, 4, 8).program_text != a.program_text);

    auto c = gen_patterns(5, 3, 7);
    CHECK(c.program_text == gen_patterns(5, 3, 7).program_text);
    CHECK(c.name == "patterns-t5-p3-s7");
}

TEST_CASE("generated instances parse, are safe, and are ground") {
    for (const auto& inst :
         {gen_graceful(4, 4, 1), gen_graceful(3, 3, 2), gen_patterns(5, 3, 1),
          gen_patterns(4, 2, 9)}) {
        Program p = parse_program(inst.program_text, inst.name);
        CHECK(check_safety(p).empty());
        CHECK(p.is_ground());
        CHECK_NOTHROW(CorrectionSpec::from_json_text(inst.spec_text));
    }
}

TEST_CASE("infeasible generator parameters are rejected") {
    CHECK_THROWS(gen_graceful(3, 4, 0));  // more edges than pairs
    CHECK_THROWS(gen_patterns(2, 3, 0));  // pattern longer than text
}

TEST_CASE("a single edge is gracefully labelable: empty correction") {
    auto inst = gen_graceful(2, 1, 3);
    Program p = parse_program(inst.program_text);
    CorrectionSpec spec = CorrectionSpec::from_json_text(inst.spec_text);
    Correction c = min_correct(p, spec, MaxConAlgo::Progression);
    CHECK(c.removed.empty());
    CHECK(c.added.empty());
}

TEST_CASE("triangle maxcon keeps at most its three edges") {
    auto inst = gen_graceful(3, 3, 11);
    Program p = parse_program(inst.program_text);
    std::vector<Atom> edges;
    for (const auto& r : p.rules())
        if (r.is_fact() && r.head->predicate == "edge") edges.push_back(*r.head);
    REQUIRE(edges.size() == 3);
    auto r = run_maxcon(MaxConAlgo::MaxCard, p, TargetSet(edges));
    CHECK(r.subset.size() <= 3);
    // a maximum-size graceful subgraph of the triangle keeps at least 2 edges
    CHECK(r.subset.size() >= 2);
}

TEST_CASE("pattern corrections replace elements and stay valid") {
    bool saw_nonempty = false;
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto inst = gen_patterns(5, 3, seed);
        Program p = parse_program(inst.program_text);
        CorrectionSpec spec = CorrectionSpec::from_json_text(inst.spec_text);
        Correction c = min_correct(p, spec, MaxConAlgo::Unit);
        // removable pel facts only; additions are pel facts over peldom
        for (const auto& r : c.removed) CHECK(r.head->predicate == "pel");
        for (const auto& r : c.added) CHECK(r.head->predicate == "pel");
        // every position must stay filled, so removals pair with additions
        CHECK(c.added.size() == c.removed.size());
        saw_nonempty |= !c.removed.empty();

        Program repaired;
        for (const auto& r : p.rules()) {
            bool drop = false;
            for (const auto& m : c.removed) drop |= m.id == r.id;
            if (!drop) repaired.add_rule(r);
        }
        for (const auto& r : c.added) repaired.add_rule(r);
        CHECK(solve(repaired).consistent);
    }
    CHECK(saw_nonempty);  // at least one seed needs a real correction
}
