#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcanet {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid in-memory input (bad leaf name, duplicate
// arc, cycle, self-incomparability constraint, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// File-level syntax or validation failure. what() is the one-line diagnostic
// "file:line: cause"; line 0 means the problem concerns the file as a whole.
class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& cause)
        : Error(line == 0 ? file + ": " + cause
                          : file + ":" + std::to_string(line) + ": " + cause),
          file_(file), line_(line), cause_(cause) {}

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }
    const std::string& cause() const { return cause_; }

private:
    std::string file_;
    std::size_t line_;
    std::string cause_;
};

class UnknownLeaf : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

// Two operands were built over different leaf sets.
class LeafSetMismatch : public Error {
public:
    using Error::Error;
};

// An operation defined only for realizable relations was given one that is not.
class NotRealizable : public Error {
public:
    using Error::Error;
};

// Canonical-DAG construction was attempted although condition X1 fails.
class X1Violated : public Error {
public:
    using Error::Error;
};

} // namespace lcanet
