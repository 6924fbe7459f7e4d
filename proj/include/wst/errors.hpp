#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wst {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// complex-core
struct UnknownVertex : Error {
    explicit UnknownVertex(const std::string& what) : Error(what) {}
};
struct DuplicateVertex : Error {
    explicit DuplicateVertex(const std::string& what) : Error(what) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

// weighted chains
struct VanishingScale : Error {
    explicit VanishingScale(const std::string& what) : Error(what) {}
};

// quotient forms
struct NotPSD : Error {
    explicit NotPSD(const std::string& what) : Error(what) {}
};
struct NotSubspace : Error {
    explicit NotSubspace(const std::string& what) : Error(what) {}
};
struct NotEquivariant : Error {
    explicit NotEquivariant(const std::string& what) : Error(what) {}
};

// spectra and torsion
struct SingularGram : Error {
    explicit SingularGram(const std::string& what) : Error(what) {}
};
struct EigenFailure : Error {
    explicit EigenFailure(const std::string& what) : Error(what) {}
};
struct ZeroScalar : Error {
    explicit ZeroScalar(const std::string& what) : Error(what) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

// based chain data
struct LiftFailure : Error {
    explicit LiftFailure(const std::string& what) : Error(what) {}
};
struct DegenerateBasis : Error {
    explicit DegenerateBasis(const std::string& what) : Error(what) {}
};

// input format
struct SyntaxError : Error {
    SyntaxError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};
struct UnsupportedVersion : Error {
    explicit UnsupportedVersion(const std::string& what) : Error(what) {}
};

}  // namespace wst
