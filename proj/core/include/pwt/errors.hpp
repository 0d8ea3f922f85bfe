#pragma once

#include <stdexcept>
#include <string>

namespace pwt {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ArithmeticError : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

class AdmissibilityViolation : public Error {
public:
    using Error::Error;
};

class AlgebraMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotNakayama : public Error {
public:
    using Error::Error;
};

class EnumerationBudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotRepresentationFiniteWithinBounds : public Error {
public:
    using Error::Error;
};

class DecompositionInconclusive : public Error {
public:
    using Error::Error;
};

// A summand's endomorphism ring has a residue division ring of dimension > 1
// over the base field; counting-based operations refuse such inputs.
class NonSplitResidueField : public Error {
public:
    using Error::Error;
};

class CertificationFailed : public Error {
public:
    using Error::Error;
};

class NotSelfOrthogonal : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class NotSourceExtension : public Error {
public:
    using Error::Error;
};

class SummandMissing : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace pwt
