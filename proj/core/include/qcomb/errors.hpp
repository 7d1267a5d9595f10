#pragma once

#include <stdexcept>
#include <string>

namespace qcomb {

// Exact division failed; the numerator is not a multiple of the denominator.
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration was requested beyond its configured cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidLabel : std::invalid_argument {
    explicit InvalidLabel(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidPartition : std::invalid_argument {
    explicit InvalidPartition(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownIdentity : std::invalid_argument {
    explicit UnknownIdentity(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qcomb
