#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cotree {

// Bad input or violated precondition.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search or sweep would exceed its configured budget.
struct BudgetExceeded : Error {
    std::uint64_t needed;
    BudgetExceeded(const std::string& what, std::uint64_t needed_count)
        : Error(what), needed(needed_count) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace cotree
