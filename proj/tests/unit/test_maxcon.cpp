#include <doctest.h>

#include "aspfix/maxcon.hpp"
#include "aspfix/parser.hpp"
#include "support/oracles.hpp"

using namespace aspfix;

namespace {

// Rules (1)-(2) of the stone/move fragment, without the stone(c) fact.
const char* kFragment =
    ":- not move(a).\n"
    "move(a) :- stone(b), not stone(c).\n";

// Two constraints whose single-atom extensions of the empty set all fail
// even though {a,b} is consistent; maximality is not decidable one atom at
// a time here.
const char* kNonMonotone = ":- a, not b.\n:- b, not a.\n";

TargetSet stones() {
    return TargetSet({parse_atom("stone(b)"), parse_atom("stone(c)")});
}

const std::vector<MaxConAlgo> kAlgos{MaxConAlgo::Atleast, MaxConAlgo::Unit,
                                     MaxConAlgo::Progression, MaxConAlgo::MaxCard};

}  // namespace

TEST_CASE("choice_of and atleast_of build the documented rules") {
    CHECK(choice_of({Atom("a"), Atom("b")}).to_string() == "0 { a; b }.");
    CHECK(choice_of({}).to_string() == "0 {  }.");
    CHECK(choice_of({parse_atom("stone(b)")}).to_string() == "0 { stone(b) }.");
    CHECK(atleast_of({Atom("a"), Atom("b")}).to_string() == "1 { a; b }.");
    CHECK(atleast_of({Atom("x")}).to_string() == "1 { x }.");
    CHECK_THROWS(atleast_of({}));
    CHECK(atleast_k_of(2, {Atom("a"), Atom("b")}).choice_bound == 2);
}

TEST_CASE("target sets must be ground and duplicate-free") {
    CHECK_THROWS(TargetSet({Atom("p", {Term::var("X")})}));
    CHECK_THROWS(TargetSet({Atom("a"), Atom("a")}));
}

TEST_CASE("can_extend returns the extension from the witness model") {
    Program p = parse_program(kFragment);
    auto ext = can_extend(p, stones(), {});
    REQUIRE(ext.has_value());
    CHECK(*ext == AtomSet{parse_atom("stone(b)")});

    CHECK_FALSE(can_extend(p, stones(), {parse_atom("stone(c)")}).has_value());

    Program trivial = parse_program("a.\n");
    auto empty = can_extend(trivial, TargetSet{}, {});
    REQUIRE(empty.has_value());
    CHECK(empty->empty());
}

TEST_CASE("is_maximal matches exhaustive enumeration") {
    Program nm = parse_program(kNonMonotone);
    TargetSet s({Atom("a"), Atom("b")});
    CHECK_FALSE(is_maximal(nm, s, {}));
    CHECK(test::oracle_maximal(nm, s, {Atom("a"), Atom("b")}));

    Program frag = parse_program(kFragment);
    CHECK(is_maximal(frag, stones(), {parse_atom("stone(b)")}));
    CHECK(test::oracle_maximal(frag, stones(), {parse_atom("stone(b)")}));

    CHECK(is_maximal(nm, s, {Atom("a"), Atom("b")}));  // L = S by convention
}

TEST_CASE("all four algorithms solve the stone fragment") {
    Program p = parse_program(kFragment);
    for (auto algo : kAlgos) {
        auto r = run_maxcon(algo, p, stones());
        CHECK(r.subset == AtomSet{parse_atom("stone(b)")});
        CHECK(is_answer_set(p.with_facts(r.subset), r.witness));
    }
}

TEST_CASE("all four algorithms return the full set on the non-monotone program") {
    Program p = parse_program(kNonMonotone);
    TargetSet s({Atom("a"), Atom("b")});
    for (auto algo : kAlgos) {
        auto r = run_maxcon(algo, p, s);
        CHECK(r.subset == AtomSet{Atom("a"), Atom("b")});
    }
}

TEST_CASE("the naive single-extension check wrongly accepts the empty set") {
    // Documents why maximality needs the atleast-extended solver call: every
    // single-atom extension of {} is inconsistent, yet {} is not maximal.
    Program p = parse_program(kNonMonotone);
    TargetSet s({Atom("a"), Atom("b")});
    CHECK(test::naive_single_extension_maximal(p, s, {}));
    CHECK_FALSE(test::oracle_maximal(p, s, {}));
}

TEST_CASE("empty target set returns the empty subset") {
    Program p = parse_program("a.\n");
    for (auto algo : kAlgos) {
        auto r = run_maxcon(algo, p, TargetSet{});
        CHECK(r.subset.empty());
        CHECK(r.oracle_calls == 1);  // the feasibility precheck only
    }
}

TEST_CASE("unconstrained targets are returned in full") {
    Program p = parse_program("0 { a; b; c }.\n");
    TargetSet s({Atom("a"), Atom("b"), Atom("c")});
    for (auto algo : kAlgos) CHECK(run_maxcon(algo, p, s).subset.size() == 3);
}

TEST_CASE("infeasible programs raise NoConsistentSubset") {
    Program p = parse_program(":- not x.\n0 { y }.\n");
    TargetSet s({Atom("y")});
    for (auto algo : kAlgos) CHECK_THROWS_AS(run_maxcon(algo, p, s), NoConsistentSubset);
}

TEST_CASE("unit tests elements in target order") {
    // stone(c) first: rejected, then stone(b) accepted; two calls after the
    // precheck would be the worst case, the bound |S|+1 still holds.
    Program p = parse_program(kFragment);
    TargetSet s({parse_atom("stone(c)"), parse_atom("stone(b)")});
    auto r = algo_unit(p, s);
    CHECK(r.subset == AtomSet{parse_atom("stone(b)")});
    CHECK(r.oracle_calls <= s.size() + 1);
}

TEST_CASE("maxcard finds a maximum-cardinality subset") {
    Program p = parse_program(":- a, not b.\n0 { a; b }.\n");
    TargetSet s({Atom("a"), Atom("b")});
    CHECK(algo_maxcard(p, s).subset.size() == 2);

    Program pairwise = parse_program(
        "0 { a; b; c }.\n:- a, b.\n:- a, c.\n:- b, c.\n");
    TargetSet s3({Atom("a"), Atom("b"), Atom("c")});
    CHECK(algo_maxcard(pairwise, s3).subset.size() == 1);
}

TEST_CASE("random instances: maximality, budgets, dominance") {
    SolverConfig cfg;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Program p = test::random_ground_program(seed * 1000 + 3, 10, 18);
        TargetSet s = test::random_target_set(p, seed * 1000 + 4, 6);

        std::vector<std::size_t> sizes;
        bool infeasible = false;
        for (auto algo : kAlgos) {
            MaxConResult r;
            try {
                r = run_maxcon(algo, p, s, cfg);
            } catch (const NoConsistentSubset&) {
                infeasible = true;
                break;
            }
            CHECK(test::oracle_maximal(p, s, r.subset));
            CHECK(is_answer_set(p.with_facts(r.subset), r.witness));
            switch (algo) {
                case MaxConAlgo::Atleast: CHECK(r.oracle_calls <= s.size() + 2); break;
                case MaxConAlgo::Unit: CHECK(r.oracle_calls <= s.size() + 1); break;
                case MaxConAlgo::Progression:
                    CHECK(r.oracle_calls <= 3 * s.size() + 1);
                    break;
                case MaxConAlgo::MaxCard: break;
            }
            sizes.push_back(r.subset.size());
        }
        if (infeasible) {
            CHECK_FALSE(test::oracle_consistent(p.with_rule(choice_of(s.atoms))));
            continue;
        }
        // maxcard (last) dominates the other three in cardinality
        for (std::size_t i = 0; i + 1 < sizes.size(); ++i) CHECK(sizes.back() >= sizes[i]);
    }
}
