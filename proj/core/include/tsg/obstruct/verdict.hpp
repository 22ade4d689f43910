#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tsg::obstruct {

enum class Status { Pass, Fail };

enum class Reason {
    Identity,
    EmptyFixedStructure,
    DegreeExceedsTwo,
    CyclePlusExtra,
    MidpointCollision,
    ExceedsS0,
    NotInvolution,
    NonplanarFixedGraph,
    ColoringInfeasible,
    OddOrderNeedsPositive,
    RestrictionClassMismatch,
};

/// Kebab-case code, e.g. "midpoint-collision".
[[nodiscard]] std::string_view reason_code(Reason r);
/// Throws InputError for unknown codes.
[[nodiscard]] Reason parse_reason(std::string_view code);

/// Filter outcome. A Fail always has a reason; a Pass may carry one that says
/// why the check was vacuous (identity, empty fixed structure).
struct Verdict {
    Status status = Status::Pass;
    std::optional<Reason> reason;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();

    [[nodiscard]] bool passed() const noexcept { return status == Status::Pass; }

    static Verdict pass(std::optional<Reason> reason = std::nullopt,
                        nlohmann::ordered_json witness = nlohmann::ordered_json::object());
    static Verdict fail(Reason reason, nlohmann::ordered_json witness = nlohmann::ordered_json::object());
};

/// `{"status":"pass"|"fail","reason":code|null,"witness":{...}}`
[[nodiscard]] nlohmann::ordered_json to_json(const Verdict& v);

/// One line: "pass", "fail (midpoint-collision)", ...
[[nodiscard]] std::string summary(const Verdict& v);

}  // namespace tsg::obstruct
