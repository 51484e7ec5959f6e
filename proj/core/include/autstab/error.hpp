#pragma once

#include <stdexcept>
#include <string>

namespace autstab {

// Every failure the library reports deliberately carries one of these codes.
// Codes are part of the public contract: callers branch on them, tests pin them.
enum class ErrorCode {
    SignatureMismatch,      // operands built over different algebra signatures
    FieldMismatch,          // scalars from different coefficient fields
    DivisionByZero,
    ZeroElement,            // operation undefined on the zero element
    IndexOutOfRange,
    LengthMismatch,         // parallel lists of different length
    BadExponent,            // negative power of a non-invertible generator
    ParseError,
    UnknownSymbol,          // expression names a generator the signature lacks
    UnvalidatedMap,         // endomorphism applied before validate() passed
    BadPolynomial,          // map parameter polynomial not of the required shape
    SingularMatrix,
    BadPermutation,
    BadFamilyParams,        // family parameters outside their domain
    NegativeWeight,
    InvertibleNotDegreeZero,
    NonPositiveWeylPairWeight,
    DegreeExceedsCap,
    ScalarSeed,             // closure seed lies in the coefficient field
    CharacteristicPositive, // scripted recipes require characteristic 0
    UnsupportedSignature,   // operation undefined for this signature shape
    SelectionFailed,        // degree-reduction could not pick a variable
    InputNotDegreeOne,
    ZeroLinearPart,
    SingularSystem,         // interpolation system not solvable
    NotContainingOne,       // generating subspace must contain 1
    SequenceTooShort,
    CoverageIncomplete,     // internal guard: certificate missed a monomial
    BadCertificate,         // structurally malformed certificate
    IoError,
    UsageError,             // bad command-line invocation
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace autstab
