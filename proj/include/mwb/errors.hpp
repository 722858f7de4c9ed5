#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwb {

/// Element of a finite monoid, an index into its Cayley table.
using Elem = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A table failed the monoid laws. `witness` holds the offending indices:
/// a triple (i,j,k) for associativity, a single element for the identity
/// law, a cell (i,j) for an out-of-range entry.
class InvalidMonoid : public Error {
public:
    InvalidMonoid(const std::string& what, std::vector<Elem> witness)
        : Error(what), witness(std::move(witness)) {}
    std::vector<Elem> witness;
};

class InvalidHom : public Error {
public:
    InvalidHom(const std::string& what, std::vector<Elem> witness = {})
        : Error(what), witness(std::move(witness)) {}
    std::vector<Elem> witness;
};

class DomainMismatch : public Error {
public:
    using Error::Error;
};

class NotSurjective : public Error {
public:
    using Error::Error;
};

class InvalidPoint : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace mwb
