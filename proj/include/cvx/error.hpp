#pragma once

#include <stdexcept>
#include <string>

namespace cvx {

/// Violated operation precondition or invalid input. Maps to CLI exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant; always a bug. Maps to CLI exit code 1.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

#define CVX_CHECK(cond, msg)                                                   \
    do {                                                                       \
        if (!(cond)) throw ::cvx::InternalError(msg);                          \
    } while (0)

#define CVX_REQUIRE(cond, msg)                                                 \
    do {                                                                       \
        if (!(cond)) throw ::cvx::PreconditionError(msg);                      \
    } while (0)

} // namespace cvx
