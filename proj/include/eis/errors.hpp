#pragma once
#include <stdexcept>
#include <string>

namespace eis {

// exit-code contract: usage/parse 1, mathematical domain 2, internal invariant 3
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& m) : std::runtime_error(m) {}
};

} // namespace eis
