#pragma once

#include <stdexcept>
#include <string>

namespace hamgen {

// Every contract violation in the library throws Error with one of these
// codes. Absent results ("no such cycle", "search gave up") are values, not
// exceptions.
enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    OutOfRange,
    TooLarge,
    EmptySet,
    Overlap,
    UnknownEdge,
    LengthMismatch,
    TooSmall,
    NotUDP,
    SameVertex,
    EndpointInInterior,
    KTooSmall,
    BadPartition,
    KOutOfRange,
    NotBalanced,
    NotMatching,
    NotDisjoint,
    NonEdge,
    DegreeViolation,
    NotBipartiteInput,
    BudgetExceeded,
    PairsOverlap,
    EvenOrder,
    EvenN,
    NotHamiltonian,
    BadLength,
    BadPath,
    BadSizes,
    ShapeMismatch,
    IoError,
    ParseError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::Overlap: return "Overlap";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NotUDP: return "NotUDP";
        case ErrorCode::SameVertex: return "SameVertex";
        case ErrorCode::EndpointInInterior: return "EndpointInInterior";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::BadPartition: return "BadPartition";
        case ErrorCode::KOutOfRange: return "KOutOfRange";
        case ErrorCode::NotBalanced: return "NotBalanced";
        case ErrorCode::NotMatching: return "NotMatching";
        case ErrorCode::NotDisjoint: return "NotDisjoint";
        case ErrorCode::NonEdge: return "NonEdge";
        case ErrorCode::DegreeViolation: return "DegreeViolation";
        case ErrorCode::NotBipartiteInput: return "NotBipartiteInput";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::PairsOverlap: return "PairsOverlap";
        case ErrorCode::EvenOrder: return "EvenOrder";
        case ErrorCode::EvenN: return "EvenN";
        case ErrorCode::NotHamiltonian: return "NotHamiltonian";
        case ErrorCode::BadLength: return "BadLength";
        case ErrorCode::BadPath: return "BadPath";
        case ErrorCode::BadSizes: return "BadSizes";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace hamgen
