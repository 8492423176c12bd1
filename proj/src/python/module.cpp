#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monolift/construction.hpp"
#include "monolift/errors.hpp"
#include "monolift/io.hpp"
#include "monolift/sampler.hpp"

namespace py = pybind11;
using namespace monolift;

namespace {

py::object fraction(const std::string& pq) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(pq);
}

py::object fraction(const Rational& q) { return fraction(to_pq(q)); }

py::object from_json(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(from_json(x));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = from_json(v);
      return out;
    }
  }
}

// Report dicts carry rationals as "p/q"; these keys become Fractions.
py::dict report(const Json& j) {
  static const std::vector<std::string> rational_keys{"dist", "err_given_1", "err_given_0", "threshold", "eta", "best_dist"};
  py::dict out = from_json(j);
  for (const auto& key : rational_keys) {
    if (j.contains(key) && j[key].is_string()) out[py::str(key)] = fraction(j[key].get<std::string>());
  }
  return out;
}

std::vector<int> indices(SetMask mask) { return mask_to_indices(mask); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lifted set-cover distributions, oracles, learners and the distinguisher.";

  static py::exception<Error> error(m, "MonoliftError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<SetCoverInstance>(m, "SetCoverInstance")
      .def(py::init([](int n, const std::vector<std::string>& universe) { return SetCoverInstance::from_strings(n, universe); }),
           py::arg("n"), py::arg("universe"))
      .def_property_readonly("n", &SetCoverInstance::n)
      .def_property_readonly("universe",
                             [](const SetCoverInstance& s) {
                               std::vector<std::string> out;
                               for (auto v : s.universe()) out.push_back(vector_to_string(v, s.n()));
                               return out;
                             })
      .def_property_readonly("vertex_count", &SetCoverInstance::vertex_count)
      .def("to_json", [](const SetCoverInstance& s) { return to_json(s).dump(); })
      .def_static("from_json", [](const std::string& text) {
        try {
          return instance_from_json(Json::parse(text));
        } catch (const Json::exception& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
      })
      .def("__eq__", [](const SetCoverInstance& a, const SetCoverInstance& b) { return a == b; })
      .def("__repr__", [](const SetCoverInstance& s) { return "SetCoverInstance(" + to_json(s).dump() + ")"; });

  m.def("load_instance", &load_instance, py::arg("source"));
  m.def("suite", [] {
    py::dict out;
    for (const auto& [name, s] : desk_suite()) out[py::str(name)] = s;
    return out;
  });
  m.def("random_instance", &random_instance, py::arg("n"), py::arg("m"), py::arg("zero_density") = 0.5, py::arg("seed") = 0);
  m.def(
      "planted_instance",
      [](int n, int opt_target, std::uint64_t seed) {
        const auto p = planted_instance(n, opt_target, seed);
        return py::make_tuple(p.instance, indices(p.planted_cover));
      },
      py::arg("n"), py::arg("opt_target"), py::arg("seed") = 0);
  m.def("opt_exact", [](const SetCoverInstance& s) {
    const auto sol = opt_exact(s);
    return py::make_tuple(sol.size, indices(sol.witness));
  });
  m.def("greedy_cover", [](const SetCoverInstance& s) { return indices(greedy_cover(s)); });
  m.def("is_cover", [](const SetCoverInstance& s, const std::vector<int>& sets) {
    return is_cover(s, indices_to_mask(sets, s.n()));
  });

  m.def("support_size", [](const SetCoverInstance& s, int ell) {
    const auto sz = support_size(s, ell);
    return py::make_tuple(sz.top, sz.bottom);
  });
  m.def("pmf", [](const SetCoverInstance& s, const std::string& point) {
    return fraction(d_lift_pmf(s, LiftedPoint::parse(point)));
  });
  m.def("label", [](const SetCoverInstance& s, const std::string& point) { return gamma_lift(s, LiftedPoint::parse(point)); });
  m.def("exact_sampler_pmf", [](const SetCoverInstance& s, int ell) {
    py::dict out;
    for (const auto& [point, mass] : sampler_exact_pmf(s, ell)) out[py::str(point)] = fraction(mass);
    return out;
  });
  m.def(
      "sample",
      [](const SetCoverInstance& s, int ell, std::uint64_t count, std::uint64_t seed) {
        SampleOracle oracle(s, ell, seed);
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& e : oracle.draw_many(count)) out.emplace_back(e.point.to_string(), e.label);
        return out;
      },
      py::arg("instance"), py::arg("ell"), py::arg("count"), py::arg("seed") = 0);

  m.def("normalize_dnf", [](const std::string& text) { return serialize(parse_dnf(text)); });
  m.def("evaluate", [](const std::string& dnf, const std::string& point) {
    return eval(parse_dnf(dnf), LiftedPoint::parse(point));
  });
  m.def("dist", [](const SetCoverInstance& s, int ell, const std::string& dnf) {
    return report(to_json(dist_exact(s, ell, parse_dnf(dnf))));
  });

  m.def(
      "learn",
      [](const SetCoverInstance& s, int ell, const std::string& algo, int param, std::uint64_t seed, std::uint64_t examples,
         std::uint64_t steps) {
        const auto learner = make_learner(algo, param);
        SampleOracle oracle(s, ell, seed);
        const auto out = learner->learn(oracle, {examples, steps});
        py::dict d = report(to_json(out));
        d["hypothesis"] = out.hypothesis ? py::object(py::str(serialize(*out.hypothesis))) : py::none();
        return d;
      },
      py::arg("instance"), py::arg("ell"), py::arg("algo"), py::arg("param"), py::arg("seed") = 0, py::arg("examples") = 0,
      py::arg("steps") = 1'000'000);

  m.def(
      "reduce",
      [](const SetCoverInstance& s, int ell, const std::string& algo, int param, std::uint64_t seed, std::uint64_t steps,
         std::optional<std::uint64_t> size_cap, const std::string& mode, std::uint64_t samples) {
        ReductionParams p;
        p.ell = ell;
        p.seed = seed;
        p.step_budget = steps;
        p.size_cap = size_cap;
        p.mode = parse_distance_mode(mode);
        p.sample_count = samples;
        const auto v = algorithm_b(s, *make_learner(algo, param), p);
        py::dict d = report(to_json(v));
        d["hypothesis"] = v.hypothesis ? py::object(py::str(serialize(*v.hypothesis))) : py::none();
        return d;
      },
      py::arg("instance"), py::arg("ell"), py::arg("algo"), py::arg("param"), py::arg("seed") = 0,
      py::arg("steps") = 10'000'000, py::arg("size_cap") = py::none(), py::arg("mode") = "exact",
      py::arg("samples") = 10'000);

  m.def(
      "falsify",
      [](const SetCoverInstance& s, int ell, const std::string& variant, const std::string& strategy, std::uint64_t seed) {
        FalsifyOptions opts;
        opts.strategy = parse_strategy(strategy);
        opts.seed = seed;
        return report(to_json(falsify_error_lemma(s, ell, parse_variant(variant), opts)));
      },
      py::arg("instance"), py::arg("ell") = 5, py::arg("variant") = "v16", py::arg("strategy") = "exhaustive1",
      py::arg("seed") = 0);

  m.def(
      "verify",
      [](const std::string& suite, const SetCoverInstance& s, int ell, std::uint64_t seed) {
        VerifyConfig cfg;
        cfg.seed = seed;
        py::list out;
        for (const auto& r : verify_suite(suite, s, ell, cfg)) out.append(report(to_json(r)));
        return out;
      },
      py::arg("suite"), py::arg("instance"), py::arg("ell"), py::arg("seed") = 0);
}
