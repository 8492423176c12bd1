#include "monolift/io.hpp"

#include <fstream>

#include "monolift/errors.hpp"

namespace monolift {

Json to_json(const SetCoverInstance& inst) {
  Json u = Json::array();
  for (BitVector x : inst.universe()) u.push_back(vector_to_string(x, inst.n()));
  return Json{{"n", inst.n()}, {"universe", u}};
}

SetCoverInstance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("universe") || !j["n"].is_number_integer() ||
      !j["universe"].is_array()) {
    throw Error(ErrorCode::ParseError, "instance JSON needs an integer \"n\" and a \"universe\" array");
  }
  std::vector<std::string> vectors;
  for (const auto& x : j["universe"]) {
    if (!x.is_string()) throw Error(ErrorCode::ParseError, "universe entries must be bit strings");
    vectors.push_back(x.get<std::string>());
  }
  return SetCoverInstance::from_strings(j["n"].get<int>(), vectors);
}

SetCoverInstance load_instance(const std::string& source) {
  constexpr std::string_view prefix = "suite:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    for (auto& s : desk_suite()) {
      if (s.name == name) return s.instance;
    }
    throw Error(ErrorCode::InvalidArgument, "no suite instance named '" + name + "'");
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + source + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
  return instance_from_json(j);
}

Json to_json(const DistReport& r) {
  return Json{{"dist", to_pq(r.dist)},
              {"err_given_1", to_pq(r.err_given_1)},
              {"err_given_0", to_pq(r.err_given_0)},
              {"support_size", r.support_size},
              {"top_errors", r.top_errors},
              {"bottom_errors", r.bottom_errors}};
}

Json to_json(const FalsifyReport& r) {
  return Json{{"variant", to_string(r.variant)},
              {"strategy", to_string(r.strategy)},
              {"opt", r.opt},
              {"size_budget", r.size_budget},
              {"bound", r.bound_text},
              {"bound_approx", r.bound_approx},
              {"best", serialize(r.best)},
              {"best_dist", to_pq(r.best_dist)},
              {"candidates", r.candidates},
              {"exhaustive", r.exhaustive},
              {"verdict", to_string(r.verdict)},
              {"note", r.note}};
}

Json to_json(const Verdict& v) {
  Json j{{"answer", to_string(v.answer)},
         {"reason", to_string(v.reason)},
         {"threshold", to_pq(v.threshold)},
         {"steps_used", v.steps_used},
         {"learner", v.learner},
         {"eta", v.eta ? Json(to_pq(*v.eta)) : Json()},
         {"hyp_size", v.hypothesis ? Json(v.hypothesis->size()) : Json()}};
  if (v.radius) {
    j["radius"] = *v.radius;
    j["low_power"] = v.low_power;
  }
  return j;
}

Json to_json(const CheckResult& r) {
  return Json{{"name", r.name},        {"pass", r.pass},     {"cases", r.cases},
              {"skipped", r.skipped},  {"detail", r.detail}, {"counterexample", r.counterexample}};
}

Json to_json(const LearnerOutput& out) {
  Json j{{"steps_used", out.steps_used},
         {"aborted", out.aborted},
         {"consistent", out.consistent},
         {"sample_size", out.sample_size},
         {"hyp_size", out.hypothesis ? Json(out.hypothesis->size()) : Json()}};
  if (out.tree) j["tree"] = out.tree->to_string();
  if (!out.junta.empty()) {
    Json vars = Json::array();
    for (const auto& v : out.junta) vars.push_back(std::to_string(v.block) + "." + std::to_string(v.pos));
    j["junta"] = vars;
  }
  return j;
}

}  // namespace monolift
