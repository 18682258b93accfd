#ifndef RATREL_ERROR_HPP
#define RATREL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace ratrel {

// Domain error carrying a stable kind tag (e.g. "DivisionByZeroPolynomial").
// The CLI prints the kind verbatim, so tags are part of the public surface.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void raise(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace ratrel

#endif
