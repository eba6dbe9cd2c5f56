#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewring {

/// Error categories raised by the library. Each operation documents which ones it can throw.
enum class errc {
    not_prime,
    not_irreducible,
    degree_mismatch,
    field_too_large,
    division_by_zero,
    parse_error,
    invalid_action,
    not_a_group,
    invalid_theta,
    invalid_cocycle,
    zero_lambda,
    context_mismatch,
    condition_a_violated,
    condition_b_violated,
    condition_c_violated,
    not_stabilized,
    not_cyclic,
    zero_code,
    too_large,
    not_square_field,
    hermitian_cocycle_condition,
    cocycle_not_involutive,
    characteristic_divides_order,
    verification_failed,
    not_idempotent,
    not_left_ideal,
    size_cap,
    length_mismatch,
    variant_resolution_failed,
    io_error,
};

constexpr std::string_view to_string(errc e) noexcept
{
    switch (e) {
    case errc::not_prime: return "NotPrime";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::parse_error: return "ParseError";
    case errc::invalid_action: return "InvalidAction";
    case errc::not_a_group: return "NotAGroup";
    case errc::invalid_theta: return "InvalidTheta";
    case errc::invalid_cocycle: return "InvalidCocycle";
    case errc::zero_lambda: return "ZeroLambda";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::condition_a_violated: return "ConditionAViolated";
    case errc::condition_b_violated: return "ConditionBViolated";
    case errc::condition_c_violated: return "ConditionCViolated";
    case errc::not_stabilized: return "NotStabilized";
    case errc::not_cyclic: return "NotCyclic";
    case errc::zero_code: return "ZeroCode";
    case errc::too_large: return "TooLarge";
    case errc::not_square_field: return "NotSquareField";
    case errc::hermitian_cocycle_condition: return "HermitianCocycleCondition";
    case errc::cocycle_not_involutive: return "CocycleNotInvolutive";
    case errc::characteristic_divides_order: return "CharacteristicDividesOrder";
    case errc::verification_failed: return "VerificationFailed";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_left_ideal: return "NotLeftIdeal";
    case errc::size_cap: return "SizeCap";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::variant_resolution_failed: return "VariantResolutionFailed";
    case errc::io_error: return "IoError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// A list of failed checks; empty means everything checked out.
struct Report {
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
    void fail(std::string msg) { failures.push_back(std::move(msg)); }
};

}  // namespace skewring
