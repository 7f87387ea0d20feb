#pragma once

#include <stdexcept>
#include <string>

namespace codesign {

/// Raised when an input object violates one of its documented invariants.
class ValidationError : public std::runtime_error {
public:
    enum class Kind {
        dimension_mismatch,
        negative_cost,
        infinite_io_cost,
        index_out_of_range,
        not_square,
        unknown_vertex,
        invalid_label,
        invalid_spec,
    };

    ValidationError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Raised by the polynomial solver when the dynamics pattern is reducible.
class NotIrreducibleError : public std::runtime_error {
public:
    explicit NotIrreducibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the brute-force oracles when an instance exceeds their size caps.
class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a JSON document does not match the expected schema.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace codesign
