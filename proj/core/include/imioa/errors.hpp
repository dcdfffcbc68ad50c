#ifndef IMIOA_ERRORS_HPP
#define IMIOA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace imioa {

// Violated input contract (bad parameters, malformed files, ...).
// The CLI maps this to exit code 2.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Instance is valid but too large for the requested exact method
// (enumeration budget, width guard, table memory cap, ...).
// The CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace imioa

#endif
