#pragma once

#include <stdexcept>
#include <string>

namespace flatband {

enum class ErrorKind {
    parse,                  // malformed presentation / braid text
    invalid_presentation,   // well-formed text that violates a presentation invariant
    precondition,           // operation called outside its domain
    invalid_slide,          // slide spec not representable
    iteration_cap_exceeded, // greedy normalization gave up
    non_integral_genus,     // mu and chi parity disagree
    unsupported,            // no route for this input (e.g. geometry for non-layered bands)
    overflow,               // exact integer arithmetic left int64
    degenerate_geometry,    // perturbation failed twice
    inconsistent            // internal invariant broken; a bug trap
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_presentation: return "invalid-presentation";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::invalid_slide: return "invalid-slide";
    case ErrorKind::iteration_cap_exceeded: return "iteration-cap-exceeded";
    case ErrorKind::non_integral_genus: return "non-integral-genus";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::degenerate_geometry: return "degenerate-geometry";
    case ErrorKind::inconsistent: return "inconsistent";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "integer addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "integer subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "integer multiplication");
    return r;
}

} // namespace detail
} // namespace flatband
