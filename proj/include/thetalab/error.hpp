#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thetalab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Raised by build_graph; carries the position of the rejected pair in the input list.
class EdgeListError : public InvalidArgument {
public:
    EdgeListError(std::size_t pair_index, const std::string& what)
        : InvalidArgument(what), pair_index_(pair_index) {}

    std::size_t pair_index() const noexcept { return pair_index_; }

private:
    std::size_t pair_index_;
};

class SizeCapExceeded : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace thetalab
