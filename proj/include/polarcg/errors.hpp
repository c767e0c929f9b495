#ifndef POLARCG_ERRORS_HPP
#define POLARCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polarcg {

// Invalid quantum numbers, out-of-domain arguments, malformed input.
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A computation would exceed a configured budget (e.g. expansion degree).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural assumption of the implementation failed (not user error).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace polarcg

#endif
