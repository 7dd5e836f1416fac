#pragma once

#include <stdexcept>
#include <string>

namespace partsign {

// Malformed set-spec text or an invalid construction (even base inside a
// scaled union, duplicate explicit elements, ...). CLI maps this to exit 2.
class SpecError : public std::invalid_argument {
public:
    explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource guard was exceeded (brute-force cap, table bound,
// cyclotomic index). CLI maps this to exit 3.
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Window too small to validate any period candidate.
class WindowTooShort : public std::runtime_error {
public:
    explicit WindowTooShort(const std::string& what) : std::runtime_error(what) {}
};

} // namespace partsign
