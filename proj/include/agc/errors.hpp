#pragma once

#include <stdexcept>
#include <string>

namespace agc {

/// Failure categories. Every throwing operation documents which of these it
/// can raise; messages name the violated precondition.
enum class errc {
    non_prime,
    no_irreducible_found,
    budget_exceeded,
    spec_mismatch,
    division_by_zero,
    even_char_unsupported,
    length_mismatch,
    zero_dimensional,
    duplicate_evaluation_point,
    k_out_of_range,
    d_not_exact,
    domain,
    tvz_undefined,
    singular_curve,
    bad_characteristic,
    point_not_on_curve,
    degree_too_large,
    duplicate_point,
    point_at_infinity_in_eval_set,
    singular_input,
    inconsistent_ramification,
    ell_too_small,
    equal_primes,
    congruence_violation,
    parse,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "NonPrime";
        case errc::no_irreducible_found: return "NoIrreducibleFound";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::spec_mismatch: return "SpecMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::even_char_unsupported: return "EvenCharUnsupported";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::zero_dimensional: return "ZeroDimensional";
        case errc::duplicate_evaluation_point: return "DuplicateEvaluationPoint";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::d_not_exact: return "DNotExact";
        case errc::domain: return "DomainError";
        case errc::tvz_undefined: return "TVZUndefined";
        case errc::singular_curve: return "SingularCurve";
        case errc::bad_characteristic: return "BadCharacteristic";
        case errc::point_not_on_curve: return "PointNotOnCurve";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::duplicate_point: return "DuplicatePoint";
        case errc::point_at_infinity_in_eval_set: return "PointAtInfinityInEvalSet";
        case errc::singular_input: return "SingularInput";
        case errc::inconsistent_ramification: return "InconsistentRamification";
        case errc::ell_too_small: return "EllTooSmall";
        case errc::equal_primes: return "EqualPrimes";
        case errc::congruence_violation: return "CongruenceViolation";
        case errc::parse: return "ParseError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) { throw error(code, message); }

inline void require(bool cond, errc code, const std::string& message) {
    if (!cond) raise(code, message);
}

}  // namespace agc
