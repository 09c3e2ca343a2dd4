#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace medgeo {

/// Bad or inconsistent input (malformed JSON, index out of range,
/// violated precondition). CLI exit code 1.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap was exceeded. CLI exit code 2.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A proved invariant failed to hold at runtime. Always a bug in this
/// library, never a property of the input. CLI exit code 3.
class verification_error : public std::logic_error {
public:
    explicit verification_error(const std::string& what)
        : std::logic_error("internal verification failure: " + what) {}
};

/// An operation that requires a median metric hit a triple whose median
/// point is missing or not unique.
class non_median_error : public invalid_input {
public:
    non_median_error(int a, int b, int c)
        : invalid_input("input metric is not median: triple (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) +
                        ") has no unique median point"),
          witness{a, b, c} {}
    std::array<int, 3> witness;
};

} // namespace medgeo
