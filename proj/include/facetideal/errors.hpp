#pragma once

#include <stdexcept>
#include <string>

namespace facetideal {

/// Error with a stable machine-readable code ("UnknownVertex", "EmptyComplex", ...)
/// alongside the human message.  The CLI surfaces the code in its JSON error
/// object; tests match on it.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace facetideal
