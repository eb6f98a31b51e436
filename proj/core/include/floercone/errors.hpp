#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace floercone {

/// All domain errors carry a machine-readable kind (e.g. "CompositionNonzero",
/// "ValidationError") so the CLI can put them into structured reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

namespace errkind {
inline constexpr const char* composition_nonzero = "CompositionNonzero";
inline constexpr const char* not_invariant = "NotInvariant";
inline constexpr const char* empty_complex = "EmptyComplex";
inline constexpr const char* not_rank_one = "NotRankOne";
inline constexpr const char* out_of_range = "OutOfRange";
inline constexpr const char* not_normalizable = "NotNormalizable";
inline constexpr const char* parse = "ParseError";
inline constexpr const char* schema = "SchemaError";
inline constexpr const char* validation = "ValidationError";
inline constexpr const char* criterion_mismatch = "CriterionMismatch";
inline constexpr const char* suite_failure = "SuiteFailure";
inline constexpr const char* invalid_spec = "InvalidSpec";
inline constexpr const char* usage = "UsageError";
inline constexpr const char* io = "IoError";
inline constexpr const char* internal = "InternalError";
} // namespace errkind

} // namespace floercone
