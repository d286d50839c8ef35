#pragma once

#include <stdexcept>
#include <string>

namespace nlie {

/// Input text could not be parsed; carries a 1-based line/column position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The caller handed an operation something outside its stated domain
/// (a non-ideal subspace, mismatched arities, a degenerate form, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A state the library's own invariants rule out (e.g. a "minimal" ideal
/// that is neither nondegenerate nor isotropic). Distinct from bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace nlie
