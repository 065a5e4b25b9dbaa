#include <doctest.h>

#include "aspfix/parser.hpp"

using namespace aspfix;

TEST_CASE("normal rule with positive and negative body") {
    Rule r = parse_rule("a :- b, not c.");
    CHECK(r.kind == RuleKind::Normal);
    CHECK(r.head == Atom("a"));
    CHECK(r.body_pos == std::vector<Atom>{Atom("b")});
    CHECK(r.body_neg == std::vector<Atom>{Atom("c")});
}

TEST_CASE("constraint with negated body") {
    Rule r = parse_rule(":- not move(a).");
    CHECK(r.kind == RuleKind::Constraint);
    CHECK_FALSE(r.head.has_value());
    CHECK(r.body_pos.empty());
    CHECK(r.body_neg == std::vector<Atom>{Atom("move", {Term::sym("a")})});
}

TEST_CASE("choice rule with bound") {
    Rule r = parse_rule("1 { p(1); p(2) }.");
    CHECK(r.kind == RuleKind::Choice);
    CHECK(r.choice_bound == 1);
    CHECK(r.choice_atoms.size() == 2);
}

TEST_CASE("choice bound defaults to zero") {
    Rule r = parse_rule("{ a; b }.");
    CHECK(r.choice_bound == 0);
    CHECK(r.choice_atoms.size() == 2);
}

TEST_CASE("comments and whitespace are skipped") {
    Program p = parse_program("% leading comment\n a. % trailing\n\n b :- a.\n");
    CHECK(p.size() == 2);
}

TEST_CASE("variables and integers parse") {
    Rule r = parse_rule("p(X,1) :- q(X).");
    CHECK(r.head->args[0] == Term::var("X"));
    CHECK(r.head->args[1] == Term::integer(1));
}

TEST_CASE("duplicate body literals collapse") {
    Rule r = parse_rule("a :- b, b, not c, not c.");
    CHECK(r.body_pos.size() == 1);
    CHECK(r.body_neg.size() == 1);
}

TEST_CASE("syntax errors carry file, line, and column") {
    try {
        parse_program("a.\nb :- ;.\n", "bad.lp");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("bad.lp:2:", 0) == 0);
        CHECK(e.span().line == 2);
    }
}

TEST_CASE("arity clash is a parse error") {
    CHECK_THROWS_AS(parse_program("p(1).\np(1,2).\n"), ParseError);
}

TEST_CASE("choice rules must be ground") {
    CHECK_THROWS_AS(parse_program("1 { p(X) }.\n"), ParseError);
}

TEST_CASE("choice bound may not exceed the atom count") {
    CHECK_THROWS_AS(parse_program("3 { a; b }.\n"), ParseError);
}

TEST_CASE("missing terminating dot is an error") {
    CHECK_THROWS_AS(parse_program("a :- b"), ParseError);
}

TEST_CASE("parse_atom parses a single ground atom") {
    Atom a = parse_atom("stone(b)");
    CHECK(a.predicate == "stone");
    CHECK(a.args == std::vector<Term>{Term::sym("b")});
    CHECK(parse_atom("p(1,2)").args.size() == 2);
    CHECK_THROWS(parse_atom("p(1) extra"));
}
