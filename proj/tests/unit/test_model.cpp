#include <doctest.h>

#include "aspfix/model.hpp"
#include "aspfix/parser.hpp"

using namespace aspfix;

namespace {
const char* kFlagship =
    ":- not move(a).\n"
    "move(a) :- stone(b), not stone(c).\n"
    "stone(c).\n";
}

TEST_CASE("facts_of builds one fact per atom") {
    AtomSet atoms{Atom("stone", {Term::sym("b")})};
    Program p = facts_of(atoms);
    REQUIRE(p.size() == 1);
    CHECK(p.rules()[0].is_fact());
    CHECK(p.rules()[0].to_string() == "stone(b).");

    CHECK(facts_of({}).empty());

    Program two = facts_of({Atom("p", {Term::integer(1)}), Atom("q", {Term::sym("a")})});
    CHECK(two.size() == 2);
    CHECK(two.render() == "p(1).\nq(a).\n");
}

TEST_CASE("facts_of rejects non-ground atoms") {
    CHECK_THROWS(facts_of({Atom("p", {Term::var("X")})}));
}

TEST_CASE("render round-trips structurally") {
    Program p = parse_program(kFlagship);
    Program back = parse_program(p.render());
    CHECK(structurally_equal(p, back));

    CHECK(Program{}.render().empty());

    Rule c = Rule::choice(1, {Atom("a"), Atom("b")});
    CHECK(c.to_string() == "1 { a; b }.");
}

TEST_CASE("round-trip holds on mixed rule forms") {
    const char* text =
        "p(1).\n"
        "q(X) :- p(X), not r(X).\n"
        ":- q(1), r(1).\n"
        "0 { r(1); r(2) }.\n"
        "2 { s(1); s(2); s(3) }.\n";
    Program p = parse_program(text);
    CHECK(structurally_equal(p, parse_program(p.render())));
}

TEST_CASE("choice construction dedupes atoms and checks the bound") {
    Rule r = Rule::choice(1, {Atom("a"), Atom("a"), Atom("b")});
    CHECK(r.choice_atoms.size() == 2);
    CHECK_THROWS(Rule::choice(3, {Atom("a"), Atom("a"), Atom("b")}));
}

TEST_CASE("rule ids are sequential and stable") {
    Program p = parse_program(kFlagship);
    REQUIRE(p.size() == 3);
    CHECK(p.rules()[0].id == 0);
    CHECK(p.rules()[2].id == 2);
    CHECK(p.rule_by_id(1) != nullptr);
    CHECK(p.rule_by_id(7) == nullptr);

    Program q = p.with_facts({Atom("stone", {Term::sym("b")})});
    CHECK(q.rules()[3].id == 3);  // fresh id, originals untouched
    CHECK(q.rules()[0].id == 0);
}

TEST_CASE("signature rejects arity clashes") {
    Program p;
    p.add_rule(Rule::fact(Atom("p", {Term::integer(1)})));
    CHECK_THROWS(p.add_rule(Rule::fact(Atom("p", {Term::integer(1), Term::integer(2)}))));
}

TEST_CASE("rules_equal ignores ids and body order") {
    Rule a = parse_rule("h :- p, q, not r.");
    Rule b = parse_rule("h :- q, p, not r.");
    b.id = 42;
    CHECK(rules_equal(a, b));
    CHECK_FALSE(rules_equal(a, parse_rule("h :- p, not r.")));
}

TEST_CASE("atoms_of collects heads, bodies, and choice atoms") {
    Program p = parse_program("h :- b, not c.\n0 { d }.\n:- e.\n");
    AtomSet atoms = atoms_of(p);
    CHECK(atoms == AtomSet{Atom("h"), Atom("b"), Atom("c"), Atom("d"), Atom("e")});
}

TEST_CASE("term and atom ordering is total") {
    CHECK(Term::integer(1) < Term::integer(2));
    CHECK(Term::sym("a") < Term::sym("b"));
    CHECK(Atom("p", {Term::integer(1)}) < Atom("p", {Term::integer(2)}));
    CHECK(Atom("p") < Atom("q"));
}
