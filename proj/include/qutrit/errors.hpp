#pragma once

#include <stdexcept>
#include <string>

namespace qutrit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// State-validation failures. Each carries the measured deviation so callers
// can report how badly the property was violated, not just that it was.
class NotHermitian : public Error {
public:
    NotHermitian(double deviation, double bound)
        : Error("matrix is not Hermitian: max |m(i,j) - conj(m(j,i))| = " +
                std::to_string(deviation) + " exceeds " + std::to_string(bound)),
          deviation(deviation), bound(bound) {}
    double deviation;
    double bound;
};

class TraceNotOne : public Error {
public:
    explicit TraceNotOne(double deviation)
        : Error("trace differs from 1 by " + std::to_string(deviation)),
          deviation(deviation) {}
    double deviation;
};

class NotPSD : public Error {
public:
    explicit NotPSD(double min_eigenvalue)
        : Error("matrix is not positive semidefinite: min eigenvalue = " +
                std::to_string(min_eigenvalue)),
          min_eigenvalue(min_eigenvalue) {}
    double min_eigenvalue;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class NoSplit : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NotReal : public Error {
public:
    explicit NotReal(double max_imag)
        : Error("matrix has imaginary entries up to " + std::to_string(max_imag)),
          max_imag(max_imag) {}
    double max_imag;
};

class SingletDominant : public Error {
public:
    explicit SingletDominant(double weight)
        : Error("singlet weight " + std::to_string(weight) +
                " leaves no triplet component to renormalize"),
          singlet_weight(weight) {}
    double singlet_weight;
};

class NegativeRadicand : public Error {
public:
    explicit NegativeRadicand(double radicand)
        : Error("negative radicand " + std::to_string(radicand) +
                " (parameters outside the valid domain)"),
          radicand(radicand) {}
    double radicand;
};

class EmptyGrid : public Error {
public:
    using Error::Error;
};

// Matrix-file parse failures; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

class BadHeader : public ParseError {
public:
    using ParseError::ParseError;
};

class BadEntryCount : public ParseError {
public:
    using ParseError::ParseError;
};

class BadNumber : public ParseError {
public:
    using ParseError::ParseError;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace qutrit
