#include "autstab/error.hpp"

namespace autstab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SignatureMismatch: return "SignatureMismatch";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::BadExponent: return "BadExponent";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownSymbol: return "UnknownSymbol";
        case ErrorCode::UnvalidatedMap: return "UnvalidatedMap";
        case ErrorCode::BadPolynomial: return "BadPolynomial";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::BadPermutation: return "BadPermutation";
        case ErrorCode::BadFamilyParams: return "BadFamilyParams";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::InvertibleNotDegreeZero: return "InvertibleNotDegreeZero";
        case ErrorCode::NonPositiveWeylPairWeight: return "NonPositiveWeylPairWeight";
        case ErrorCode::DegreeExceedsCap: return "DegreeExceedsCap";
        case ErrorCode::ScalarSeed: return "ScalarSeed";
        case ErrorCode::CharacteristicPositive: return "CharacteristicPositive";
        case ErrorCode::UnsupportedSignature: return "UnsupportedSignature";
        case ErrorCode::SelectionFailed: return "SelectionFailed";
        case ErrorCode::InputNotDegreeOne: return "InputNotDegreeOne";
        case ErrorCode::ZeroLinearPart: return "ZeroLinearPart";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::NotContainingOne: return "NotContainingOne";
        case ErrorCode::SequenceTooShort: return "SequenceTooShort";
        case ErrorCode::CoverageIncomplete: return "CoverageIncomplete";
        case ErrorCode::BadCertificate: return "BadCertificate";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

}  // namespace autstab
