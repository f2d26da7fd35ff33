#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mfkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Input that violates a precondition (bad polynomial, unknown case, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A degree-window audit did not stabilize after the allowed retries.
struct AuditError : std::runtime_error {
    explicit AuditError(const std::string& what) : std::runtime_error(what) {}
};

inline long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer out of long long range");
    return static_cast<long long>(v);
}

}  // namespace mfkit
