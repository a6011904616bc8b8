#pragma once
// Small shared utilities: error types, deterministic float formatting,
// FNV-1a hashing for config/shape fingerprints, thread-count control.

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace okflow {

// Raised when inputs violate a documented precondition (bad shape spec,
// non-simple curve passed to the flow, unsupported kernel parameter, ...).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computation leaves its domain of validity mid-run
// (flow developed a self-intersection, quadrature drift check tripped, ...).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest round-trip-exact decimal for a double.  %.17g is always
// round-trip exact; we use it everywhere so that identical runs produce
// byte-identical output files.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 1469598103934665603ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(s.data(), s.size());
}

inline std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Number of worker threads for the OpenMP paths.  OKFLOW_THREADS caps the
// OpenMP default; value <= 0 or unset means "whatever OpenMP picks".
int worker_threads();

enum class ParallelMode { serial, omp };

} // namespace okflow
