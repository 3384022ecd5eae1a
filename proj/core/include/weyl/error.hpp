#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

enum class Err {
    NotDivisible,
    DivisionByZero,
    GridDegenerate,
    NotAffine,
    BadIndex,
    NotCommuting,
    SingularPoint,
    RankMismatch,
    NotPolynomialCoefficients,
    ZeroOperator,
    TrivialOperator,
    BracketVanishes,
    NotAPower,
    OrderMismatch,
    UnsupportedStructure,
    NotOrder4,
    CurveShapeUnexpected,
    SyntaxError,
    NonIntegerExponent,
    Internal,
};

/// Domain error carrying a machine-checkable code next to the human message.
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg) : std::runtime_error(msg), code(code) {}
    Err code;
};

inline const char* err_name(Err e) {
    switch (e) {
    case Err::NotDivisible: return "NotDivisible";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::GridDegenerate: return "GridDegenerate";
    case Err::NotAffine: return "NotAffine";
    case Err::BadIndex: return "BadIndex";
    case Err::NotCommuting: return "NotCommuting";
    case Err::SingularPoint: return "SingularPoint";
    case Err::RankMismatch: return "RankMismatch";
    case Err::NotPolynomialCoefficients: return "NotPolynomialCoefficients";
    case Err::ZeroOperator: return "ZeroOperator";
    case Err::TrivialOperator: return "TrivialOperator";
    case Err::BracketVanishes: return "BracketVanishes";
    case Err::NotAPower: return "NotAPower";
    case Err::OrderMismatch: return "OrderMismatch";
    case Err::UnsupportedStructure: return "UnsupportedStructure";
    case Err::NotOrder4: return "NotOrder4";
    case Err::CurveShapeUnexpected: return "CurveShapeUnexpected";
    case Err::SyntaxError: return "SyntaxError";
    case Err::NonIntegerExponent: return "NonIntegerExponent";
    case Err::Internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

} // namespace weyl
