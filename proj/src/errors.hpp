#ifndef ACLAT_ERRORS_HPP
#define ACLAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aclat {

// Malformed antichain text; pos is the byte offset of the offending character.
struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what), pos(pos) {}
};

// Caller handed arguments that never make sense (mixed universes, bad flags).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arguments violate a documented precondition of the operation.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force enumeration exceeded its configured budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace aclat

#endif
