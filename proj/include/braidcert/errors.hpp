#pragma once

#include <stdexcept>
#include <string>

namespace braidcert {

// Raised on malformed input or violated operation preconditions.
// The CLI maps this to exit code 2; anything else escaping is a bug.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace braidcert
