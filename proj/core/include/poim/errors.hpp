#pragma once

#include <stdexcept>
#include <string>

namespace poim {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// An attribute map is missing an entry for an attribute of its source graph.
class TotalityError : public Error {
public:
    explicit TotalityError(const std::string& message) : Error(message) {}
};

/// An operation was invoked on arguments that violate its contract.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message) : Error(message) {}
};

/// Parse error with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A prefixed name uses a prefix with no preceding declaration.
class UndefinedPrefixError : public SyntaxError {
public:
    UndefinedPrefixError(int line, int column, const std::string& prefix)
        : SyntaxError(line, column, "undefined prefix '" + prefix + ":'") {}
};

/// A variable occurred in a data document.
class VariableInDataError : public SyntaxError {
public:
    VariableInDataError(int line, int column, const std::string& name)
        : SyntaxError(line, column, "variable ?" + name + " is not allowed in a data graph") {}
};

/// A SELECT column variable does not occur in the WHERE pattern.
class UnboundColumnError : public Error {
public:
    explicit UnboundColumnError(const std::string& name)
        : Error("select variable ?" + name + " does not occur in the query pattern") {}
};

/// A SELECT column list repeats a variable.
class DuplicateColumnError : public Error {
public:
    explicit DuplicateColumnError(const std::string& name)
        : Error("duplicate select variable ?" + name) {}
};

/// A graph handed to relationOf is not a relational data graph.
class NotRelationalError : public Error {
public:
    explicit NotRelationalError(const std::string& message) : Error(message) {}
};

} // namespace poim
