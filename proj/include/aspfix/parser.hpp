#ifndef ASPFIX_PARSER_HPP
#define ASPFIX_PARSER_HPP

#include <stdexcept>
#include <string>

#include "aspfix/model.hpp"

namespace aspfix {

struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t offset = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, SourceSpan span, const std::string& message)
        : std::runtime_error(format(file, span, message)),
          file_(std::move(file)),
          span_(span) {}

    const SourceSpan& span() const { return span_; }
    const std::string& file() const { return file_; }

private:
    static std::string format(const std::string& file, SourceSpan s,
                              const std::string& msg) {
        return file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column) +
               ": " + msg;
    }
    std::string file_;
    SourceSpan span_;
};

// Grammar:
//   head :- lit, ..., lit.     normal rule
//   head.                      fact
//   :- lit, ..., lit.          constraint
//   l { a; ...; a }.           choice rule (l defaults to 0; must be ground)
//   not a                      default negation
//   % ...                      comment to end of line
Program parse_program(const std::string& text, const std::string& filename = "<input>");

// Parses a single ground atom, e.g. "stone(b)" or "p(1,2)".
Atom parse_atom(const std::string& text, const std::string& filename = "<input>");

// Parses a single rule statement, e.g. "p(1) :- q(1)."
Rule parse_rule(const std::string& text, const std::string& filename = "<input>");

}  // namespace aspfix

#endif
