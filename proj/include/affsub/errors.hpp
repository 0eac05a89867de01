#ifndef AFFSUB_ERRORS_HPP
#define AFFSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace affsub {

// Malformed or inconsistent caller input (bad dimensions, bad files, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size limit was hit (closure cap, tuple-space cap).
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The first d+1 points of a configuration are affinely dependent.
class DegenerateConfiguration : public InputError {
public:
    DegenerateConfiguration() : InputError("degenerate configuration") {}
    explicit DegenerateConfiguration(const std::string& what) : InputError(what) {}
};

} // namespace affsub

#endif
