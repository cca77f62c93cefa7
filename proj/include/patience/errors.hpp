#pragma once

#include <stdexcept>
#include <string>

namespace patience {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidPermutation : public Error {
public:
    using Error::Error;
};

class InvalidPileConfig : public Error {
public:
    using Error::Error;
};

class UnsupportedBar : public Error {
public:
    using Error::Error;
};

class BarredNotAllowed : public Error {
public:
    using Error::Error;
};

class MalformedPair : public Error {
public:
    using Error::Error;
};

class MalformedDiagram : public Error {
public:
    using Error::Error;
};

class OracleBoundExceeded : public Error {
public:
    OracleBoundExceeded(int n, int bound)
        : Error("oracle bound exceeded: n = " + std::to_string(n) +
                " > bound " + std::to_string(bound)),
          n_(n), bound_(bound) {}

    int n() const noexcept { return n_; }
    int bound() const noexcept { return bound_; }

private:
    int n_;
    int bound_;
};

class UnknownFormat : public Error {
public:
    using Error::Error;
};

class CompositionNotWellDefined : public Error {
public:
    using Error::Error;
};

}  // namespace patience
