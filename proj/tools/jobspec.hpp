#pragma once

#include "orbcol/collision.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace orbcol::cli {

using Json = nlohmann::ordered_json;

/// Bad command line or job document (exit code 1).
class UsageError : public Error {
public:
    using Error::Error;
};

struct JobSpec {
    Field field;
    std::optional<CurveFF> curve;
    std::vector<std::pair<std::string, PointFF>> sections;  // declaration order
    Json doc;

    const CurveFF& C() const { return *curve; }
    /// Throws UsageError for an unknown name.
    const PointFF& section(const std::string& name) const;
    /// Command block of the document, or an empty object.
    Json block(const std::string& command) const;
};

/// Parses a job document. Expression and schema problems raise ParseError or
/// UsageError; a singular curve or a section off the curve raises MathError.
JobSpec parse_job(const Json& doc);
JobSpec load_job(const std::string& path);

/// "a", "b*theta", "a + b*theta", "theta", "-theta", ...; "th" also names theta.
OrderElem parse_order_elem(std::string_view text, const OrderSpec& spec);

/// Sum of terms "[alpha]NAME" or "NAME" with optional signs, e.g.
/// "[1+theta]P1", "[2]P1 - P2".
PointFF parse_combo(std::string_view text, const JobSpec& job);

}  // namespace orbcol::cli
