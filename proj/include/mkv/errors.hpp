#pragma once

#include <stdexcept>
#include <string>

namespace mkv {

// Error taxonomy used across the library. Everything derives from
// std::runtime_error so callers can catch broadly; the CLI maps these to
// exit status 1 (configuration / runtime faults).

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct LookupError : std::runtime_error {
    explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

struct NotPsdError : std::runtime_error {
    explicit NotPsdError(const std::string& what) : std::runtime_error(what) {}
};

struct OrderViolationError : std::runtime_error {
    explicit OrderViolationError(const std::string& what) : std::runtime_error(what) {}
};

// A particle left the admissible region; carries particle and step context.
struct DivergenceError : std::runtime_error {
    int particle;
    int step;
    DivergenceError(int particle_, int step_, const std::string& what)
        : std::runtime_error(what), particle(particle_), step(step_) {}
};

struct TooLargeError : std::runtime_error {
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatchError : std::runtime_error {
    explicit GridMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct HorizonError : std::runtime_error {
    explicit HorizonError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mkv
