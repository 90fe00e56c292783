#pragma once

#include <stdexcept>
#include <string>

namespace cms {

// Root of every error the library throws; the CLI maps these to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DenominatorVanishes : public Error {
public:
    explicit DenominatorVanishes(const std::string& what) : Error("denominator vanishes: " + what) {}
};

class DivergentLimit : public Error {
public:
    explicit DivergentLimit(const std::string& what) : Error("divergent limit: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class CellOutsideDiagram : public Error {
public:
    explicit CellOutsideDiagram(const std::string& what) : Error("cell outside diagram: " + what) {}
};

class NotAPartition : public Error {
public:
    explicit NotAPartition(const std::string& what) : Error("not a partition: " + what) {}
};

class NoJackProvider : public Error {
public:
    NoJackProvider() : Error("no Jack provider registered") {}
};

class DegenerateEigenvalue : public Error {
public:
    explicit DegenerateEigenvalue(const std::string& what) : Error("degenerate eigenvalue: " + what) {}
};

class PochhammerPole : public Error {
public:
    explicit PochhammerPole(const std::string& what) : Error("Pochhammer pole: " + what) {}
};

class NotInDeformedAlgebra : public Error {
public:
    explicit NotInDeformedAlgebra(const std::string& what) : Error("not in deformed algebra: " + what) {}
};

class SingularPoint : public Error {
public:
    explicit SingularPoint(const std::string& what) : Error("singular point: " + what) {}
};

class UnknownSuite : public Error {
public:
    explicit UnknownSuite(const std::string& name) : Error("unknown suite: " + name) {}
};

class BasisMismatch : public Error {
public:
    explicit BasisMismatch(const std::string& what) : Error("basis mismatch: " + what) {}
};

}  // namespace cms
