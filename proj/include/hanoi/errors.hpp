#ifndef HANOI_ERRORS_HPP
#define HANOI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hanoi {

// Invalid user-supplied parameter (bad peg count, residue violation, ...).
// CLI maps this to exit code 2.
class parameter_error : public std::runtime_error {
public:
    explicit parameter_error(const std::string& what) : std::runtime_error(what) {}
};

// A materialization or solver cap was exceeded. CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hanoi

#endif
