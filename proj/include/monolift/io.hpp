#pragma once

#include <json.hpp>
#include <string>

#include "monolift/learners.hpp"
#include "monolift/oracle.hpp"
#include "monolift/reduction.hpp"
#include "monolift/setcover.hpp"
#include "monolift/verify.hpp"

namespace monolift {

using Json = nlohmann::json;

/// {"n": 3, "universe": ["110", "101"]}
Json to_json(const SetCoverInstance& inst);
SetCoverInstance instance_from_json(const Json& j);

/// A JSON file path, or "suite:<name>" for a built-in instance.
SetCoverInstance load_instance(const std::string& source);

// Rationals are written as "p/q" strings.
Json to_json(const DistReport& r);
Json to_json(const FalsifyReport& r);
Json to_json(const Verdict& v);
Json to_json(const CheckResult& r);
Json to_json(const LearnerOutput& out);

}  // namespace monolift
