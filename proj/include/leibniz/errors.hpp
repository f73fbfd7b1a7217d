#pragma once

#include <stdexcept>
#include <string>

namespace leibniz {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract external input (files, CLI arguments).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// A mathematical cross-check failed at runtime: two independent routes to
// the same object disagreed, or a structural guarantee did not hold on a
// concrete instance. These are reportable findings, not usage mistakes.
struct FindingError : Error {
    explicit FindingError(const std::string& what) : Error(what) {}
};

} // namespace leibniz
