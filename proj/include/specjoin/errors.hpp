#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specjoin {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// The normalized Laplacian is undefined at a degree-0 vertex.
class IsolatedVertex : public Error {
public:
    explicit IsolatedVertex(std::size_t vertex)
        : Error("IsolatedVertex: vertex " + std::to_string(vertex) + " has degree 0"),
          vertex_(vertex) {}

    std::size_t vertex() const noexcept { return vertex_; }

private:
    std::size_t vertex_;
};

class NonRegularComponent : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class TotalMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace specjoin
