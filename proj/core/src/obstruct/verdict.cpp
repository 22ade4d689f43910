#include "tsg/obstruct/verdict.hpp"

#include "tsg/common/error.hpp"

#include <array>
#include <utility>

namespace tsg::obstruct {

namespace {

constexpr std::array<std::pair<Reason, std::string_view>, 11> kCodes{{
    {Reason::Identity, "identity"},
    {Reason::EmptyFixedStructure, "empty-fixed-structure"},
    {Reason::DegreeExceedsTwo, "degree-exceeds-two"},
    {Reason::CyclePlusExtra, "cycle-plus-extra"},
    {Reason::MidpointCollision, "midpoint-collision"},
    {Reason::ExceedsS0, "exceeds-S0"},
    {Reason::NotInvolution, "not-involution"},
    {Reason::NonplanarFixedGraph, "nonplanar-fixed-graph"},
    {Reason::ColoringInfeasible, "coloring-infeasible"},
    {Reason::OddOrderNeedsPositive, "odd-order-needs-positive"},
    {Reason::RestrictionClassMismatch, "restriction-class-mismatch"},
}};

}  // namespace

std::string_view reason_code(Reason r)
{
    for (const auto& [reason, code] : kCodes) {
        if (reason == r) {
            return code;
        }
    }
    return "unknown";
}

Reason parse_reason(std::string_view code)
{
    for (const auto& [reason, c] : kCodes) {
        if (c == code) {
            return reason;
        }
    }
    throw InputError("unknown reason code '" + std::string(code) + "'");
}

Verdict Verdict::pass(std::optional<Reason> reason, nlohmann::ordered_json witness)
{
    return Verdict{Status::Pass, reason, std::move(witness)};
}

Verdict Verdict::fail(Reason reason, nlohmann::ordered_json witness)
{
    return Verdict{Status::Fail, reason, std::move(witness)};
}

nlohmann::ordered_json to_json(const Verdict& v)
{
    nlohmann::ordered_json out;
    out["status"] = v.passed() ? "pass" : "fail";
    out["reason"] = v.reason ? nlohmann::ordered_json(std::string(reason_code(*v.reason))) : nlohmann::ordered_json();
    out["witness"] = v.witness;
    return out;
}

std::string summary(const Verdict& v)
{
    std::string s = v.passed() ? "pass" : "fail";
    if (v.reason) {
        s += " (" + std::string(reason_code(*v.reason)) + ")";
    }
    return s;
}

}  // namespace tsg::obstruct
