#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace farey {

// Domain failures carry a stable machine-readable code; the CLI maps them
// to exit status 2 and, under --json, to an error object.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define FAREY_DEFINE_ERROR(Name)                                            \
    struct Name : DomainError {                                             \
        explicit Name(const std::string& what) : DomainError(#Name, what) {} \
    }

FAREY_DEFINE_ERROR(NotAnAction);
FAREY_DEFINE_ERROR(NotTransitive);
FAREY_DEFINE_ERROR(HasStubs);
FAREY_DEFINE_ERROR(NotClosed);
FAREY_DEFINE_ERROR(NotAdjacent);
FAREY_DEFINE_ERROR(NotHyperbolic);
FAREY_DEFINE_ERROR(SquareDiscriminant);
FAREY_DEFINE_ERROR(NotPrimitive);
FAREY_DEFINE_ERROR(DiscriminantMismatch);
FAREY_DEFINE_ERROR(BadDiscriminant);
FAREY_DEFINE_ERROR(ZeroTarget);
FAREY_DEFINE_ERROR(LimitExceeded);
FAREY_DEFINE_ERROR(InvalidGraph);

#undef FAREY_DEFINE_ERROR

} // namespace farey
