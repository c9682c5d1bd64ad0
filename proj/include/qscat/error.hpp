#pragma once

#include <stdexcept>
#include <string>

namespace qscat {

enum class Errc {
    NonPrime,
    ReducibleModulus,
    NoGeneratorFound,
    CtxMismatch,
    DivisionByZero,
    NotDivisor,
    WrongLength,
    NotSubfield,
    NoRootFound,
    ZeroRho,
    BaseMismatch,
    ZeroPolynomial,
    GcdViolation,
    ZeroVector,
    ExponentRange,
    WrongTower,
    NotPrimitive,
    NotBasis,
    EvenN,
    BudgetExceeded,
    TowerMismatch,
    HypothesisNotMet,
    SmallT,
    NotInvertible,
    PhiNotRPartial,
    ParseError,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace qscat
