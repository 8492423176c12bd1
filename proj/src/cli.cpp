#include "monolift/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <ostream>

#include "monolift/construction.hpp"
#include "monolift/errors.hpp"
#include "monolift/io.hpp"
#include "monolift/learners.hpp"
#include "monolift/reduction.hpp"
#include "monolift/verify.hpp"

namespace monolift {

namespace {

// Accepts plain integers and exact scientific forms such as "1e7".
std::uint64_t parse_count(const std::string& text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    try {
      return std::stoull(text);
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::ParseError, "count out of range: " + text);
    }
  }
  double x = 0;
  try {
    std::size_t used = 0;
    x = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a count: '" + text + "'");
  }
  if (!(x >= 0) || x >= 1.8e19 || x != std::floor(x)) throw Error(ErrorCode::ParseError, "not a count: '" + text + "'");
  return static_cast<std::uint64_t>(x);
}

std::string class_name(SupportKind k) {
  switch (k) {
    case SupportKind::Top: return "top";
    case SupportKind::Bottom: return "bottom";
    case SupportKind::Off: return "off";
  }
  return "?";
}

struct Globals {
  std::uint64_t seed = 0;
  int workers = 1;
};

struct InstanceArgs {
  std::string instance;
  int ell = 3;
};

void add_instance(CLI::App* cmd, InstanceArgs& a, int default_ell) {
  a.ell = default_ell;
  cmd->add_option("--instance", a.instance, "instance JSON file or suite:<name>")->required();
  cmd->add_option("--ell", a.ell, "block length (odd, >= 3)")->capture_default_str();
}

struct LearnerArgs {
  std::string algo = "junta";
  int m = -1;
  int s = -1;
  int cap = -1;
  std::string examples = "0";
  std::string steps = "1e7";
};

void add_learner(CLI::App* cmd, LearnerArgs& a, const std::string& flag) {
  cmd->add_option(flag, a.algo, "junta | ehdt | greedy")->capture_default_str();
  cmd->add_option("--m", a.m, "junta size");
  cmd->add_option("--s", a.s, "decision tree size parameter");
  cmd->add_option("--cap", a.cap, "greedy term cap");
  cmd->add_option("--examples", a.examples, "sample size (0 = 8 S ln S)")->capture_default_str();
  cmd->add_option("--steps", a.steps, "step budget")->capture_default_str();
}

std::unique_ptr<Learner> build_learner(const LearnerArgs& a) {
  const int param = a.algo == "junta" ? a.m : a.algo == "ehdt" ? a.s : a.cap;
  if (param < 0) {
    const char* flag = a.algo == "junta" ? "--m" : a.algo == "ehdt" ? "--s" : "--cap";
    throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required for learner " + a.algo);
  }
  return make_learner(a.algo, param);
}

}  // namespace

int report_pmf_check(const Pmf& sampler, const Pmf& definition, std::ostream& out) {
  if (auto m = compare_pmf(sampler, definition)) {
    out << "FAIL first differing point " << m->point << ": sampler " << to_pq(m->lhs) << ", definition "
        << to_pq(m->rhs) << "\n";
    return kExitCheckFailed;
  }
  const Rational a = pmf_total(sampler);
  const Rational b = pmf_total(definition);
  if (a != 1 || b != 1) {
    out << "FAIL totals: sampler " << to_pq(a) << ", definition " << to_pq(b) << "\n";
    return kExitCheckFailed;
  }
  out << "PASS " << sampler.size() << " support points agree, total 1/1\n";
  return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"monolift: lifted set-cover constructions, exact checkers and learners"};
  app.name("monolift");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for every randomized step")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads for exhaustive sweeps")->capture_default_str()->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a set-cover instance");
  int gen_n = 3;
  int gen_m = 0;
  double gen_density = 0.5;
  int gen_planted = 0;
  gen->add_option("--n", gen_n, "number of sets")->capture_default_str();
  gen->add_option("--m", gen_m, "number of elements (0 = n)")->capture_default_str();
  gen->add_option("--density", gen_density, "probability of a zero coordinate")->capture_default_str();
  gen->add_option("--planted", gen_planted, "plant a cover of this size instead");
  std::string format = "json";
  gen->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  // solve-cover
  auto* solve = app.add_subcommand("solve-cover", "exact minimum cover and greedy cover");
  std::string solve_instance;
  solve->add_option("--instance", solve_instance)->required();
  solve->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  // build
  auto* build = app.add_subcommand("build", "support sizes and point masses");
  InstanceArgs build_args;
  add_instance(build, build_args, 3);
  bool build_list = false;
  build->add_flag("--list", build_list, "print every support point");

  // pmf
  auto* pmf = app.add_subcommand("pmf", "class, label and mass of one point");
  std::string pmf_instance;
  std::string pmf_point;
  pmf->add_option("--instance", pmf_instance)->required();
  pmf->add_option("--point", pmf_point, "blocks joined by '.', e.g. 110.011")->required();

  // sample
  auto* sample = app.add_subcommand("sample", "draw points with the two-phase sampler");
  InstanceArgs sample_args;
  add_instance(sample, sample_args, 3);
  std::string sample_count = "10";
  bool sample_labels = false;
  sample->add_option("--count", sample_count)->capture_default_str();
  sample->add_flag("--labels", sample_labels, "append the target label");

  // pmf-check
  auto* check = app.add_subcommand("pmf-check", "compare the sampler's exact pmf with the definition");
  InstanceArgs check_args;
  add_instance(check, check_args, 3);

  // dist
  auto* dist = app.add_subcommand("dist", "exact distance of a DNF to the lifted target");
  InstanceArgs dist_args;
  add_instance(dist, dist_args, 3);
  std::string dnf_text;
  dist->add_option("--dnf", dnf_text, "e.g. \"+1.1 +1.2 | +2.3\"")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run a check suite");
  std::string suite;
  std::string verify_instance;
  std::vector<int> verify_ells;
  std::size_t corpus = 200;
  verify->add_option("--suite", suite, "facts | claims | lemmas")->required()->check(CLI::IsMember({"facts", "claims", "lemmas"}));
  verify->add_option("--instance", verify_instance, "default: every built-in instance");
  verify->add_option("--ell", verify_ells, "default: 3 and 5 (5 only for lemmas)");
  verify->add_option("--corpus", corpus, "hypotheses per instance for claims")->capture_default_str();
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  // falsify
  auto* falsify = app.add_subcommand("falsify", "search for a counterexample to the error lemma");
  InstanceArgs falsify_args;
  add_instance(falsify, falsify_args, 5);
  std::string variant = "v16";
  std::string strategy = "exhaustive1";
  FalsifyOptions fopts;
  std::string iterations = "20000";
  falsify->add_option("--variant", variant, "v16 | v20")->capture_default_str();
  falsify->add_option("--strategy", strategy, "exhaustive1 | exhaustivek | random")->capture_default_str();
  falsify->add_option("--max-terms", fopts.max_terms, "terms per DNF for exhaustivek")->capture_default_str();
  falsify->add_option("--iterations", iterations, "random search iterations")->capture_default_str();

  // learn
  auto* learn = app.add_subcommand("learn", "run a learner on lifted samples");
  InstanceArgs learn_args;
  add_instance(learn, learn_args, 3);
  LearnerArgs learn_learner;
  add_learner(learn, learn_learner, "--algo");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "the distinguisher: learn, gate, measure, answer");
  InstanceArgs reduce_args;
  add_instance(reduce, reduce_args, 5);
  LearnerArgs reduce_learner;
  add_learner(reduce, reduce_learner, "--learner");
  std::string mode = "exact";
  std::string samples = "10000";
  std::string size_cap;
  std::string threshold;
  bool fallback = false;
  reduce->add_option("--mode", mode, "exact | sampled")->capture_default_str();
  reduce->add_option("--samples", samples, "draws for sampled mode")->capture_default_str();
  reduce->add_option("--size-cap", size_cap, "strict-proper size cap");
  reduce->add_option("--threshold", threshold, "eta threshold p/q (default 1/(16N))");
  reduce->add_flag("--fallback", fallback, "sample when the support is too large to enumerate");

  // bench
  auto* bench = app.add_subcommand("bench", "sweep planted instances, CSV out");
  BenchConfig bench_cfg;
  std::string bench_steps = "5e6";
  bench->add_option("--ell", bench_cfg.ells)->capture_default_str();
  bench->add_option("--n", bench_cfg.n_values)->capture_default_str();
  bench->add_option("--seeds", bench_cfg.seeds)->capture_default_str();
  bench->add_option("--steps", bench_steps)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Json j;
      if (gen_planted > 0) {
        const auto p = planted_instance(gen_n, gen_planted, g.seed, gen_m);
        j = to_json(p.instance);
        j["planted_cover"] = mask_to_indices(p.planted_cover);
      } else {
        j = to_json(random_instance(gen_n, gen_m == 0 ? gen_n : gen_m, gen_density, g.seed));
      }
      if (format == "text") {
        out << j["n"].get<int>();
        for (const auto& u : j["universe"]) out << " " << u.get<std::string>();
        out << "\n";
      } else {
        out << j.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (solve->parsed()) {
      const auto inst = load_instance(solve_instance);
      const auto sol = opt_exact(inst);
      const SetMask greedy = greedy_cover(inst);
      if (format == "text") {
        out << "opt " << sol.size << "\n";
        return kExitOk;
      }
      Json j{{"opt", sol.size},
             {"witness", mask_to_indices(sol.witness)},
             {"greedy", mask_to_indices(greedy)},
             {"greedy_size", std::popcount(greedy)},
             {"vertex_count", inst.vertex_count()}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (build->parsed()) {
      const auto inst = load_instance(build_args.instance);
      require_valid_ell(build_args.ell);
      const auto size = support_size(inst, build_args.ell);
      if (build_list) {
        for (const auto& p : support_enumerate(inst, build_args.ell)) {
          out << p.point.to_string() << " " << class_name(p.cls.kind);
          if (p.cls.kind == SupportKind::Bottom) out << ":" << vector_to_string(p.cls.element, inst.n());
          out << " " << to_pq(p.mass) << "\n";
        }
        return kExitOk;
      }
      Json j{{"ell", build_args.ell},
             {"n", inst.n()},
             {"universe_size", inst.universe_size()},
             {"top", size.top},
             {"bottom", size.bottom},
             {"total", size.total()},
             {"top_point_mass", to_pq(top_point_mass(inst, build_args.ell))},
             {"bottom_point_mass", to_pq(bottom_point_mass(inst, build_args.ell))}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (pmf->parsed()) {
      const auto inst = load_instance(pmf_instance);
      const auto y = LiftedPoint::parse(pmf_point);
      require_valid_ell(y.ell());
      const auto cls = classify(inst, y);
      Json j{{"point", y.to_string()}, {"class", class_name(cls.kind)}, {"mass", to_pq(d_lift_pmf(inst, y))}};
      if (cls.kind == SupportKind::Bottom) j["element"] = vector_to_string(cls.element, inst.n());
      j["label"] = cls.kind == SupportKind::Off ? Json() : Json(gamma_lift(inst, y));
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (sample->parsed()) {
      const auto inst = load_instance(sample_args.instance);
      SampleOracle oracle(inst, sample_args.ell, g.seed);
      const auto count = parse_count(sample_count);
      for (std::uint64_t k = 0; k < count; ++k) {
        const auto e = oracle.draw();
        out << e.point.to_string();
        if (sample_labels) out << " " << (e.label ? 1 : 0);
        out << "\n";
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const auto inst = load_instance(check_args.instance);
      return report_pmf_check(sampler_exact_pmf(inst, check_args.ell), definition_pmf(inst, check_args.ell), out);
    }

    if (dist->parsed()) {
      const auto inst = load_instance(dist_args.instance);
      const Dnf f = parse_dnf(dnf_text);
      Json j = to_json(dist_exact(inst, dist_args.ell, f));
      j["dnf"] = serialize(f);
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      std::vector<SuiteInstance> targets;
      if (verify_instance.empty()) {
        targets = desk_suite();
      } else {
        targets.push_back({verify_instance, load_instance(verify_instance)});
      }
      if (verify_ells.empty()) verify_ells = suite == "lemmas" ? std::vector<int>{5} : std::vector<int>{3, 5};
      VerifyConfig cfg;
      cfg.seed = g.seed;
      cfg.workers = g.workers;
      cfg.corpus_size = corpus;
      bool all_pass = true;
      Json report = Json::array();
      for (const auto& [name, inst] : targets) {
        for (int ell : verify_ells) {
          for (const auto& r : verify_suite(suite, inst, ell, cfg)) {
            all_pass = all_pass && r.pass;
            if (verify_format == "json") {
              Json j = to_json(r);
              j["instance"] = name;
              j["ell"] = ell;
              report.push_back(j);
              continue;
            }
            out << (r.pass ? "PASS " : "FAIL ") << name << " ell=" << ell << " " << r.name << ": " << r.detail << "\n";
            if (!r.pass) out << "  counterexample: " << r.counterexample << "\n";
          }
        }
      }
      if (verify_format == "json") out << report.dump(2) << "\n";
      return all_pass ? kExitOk : kExitCheckFailed;
    }

    if (falsify->parsed()) {
      const auto inst = load_instance(falsify_args.instance);
      fopts.strategy = parse_strategy(strategy);
      fopts.seed = g.seed;
      fopts.workers = g.workers;
      fopts.iterations = parse_count(iterations);
      const auto rep = falsify_error_lemma(inst, falsify_args.ell, parse_variant(variant), fopts);
      out << to_json(rep).dump(2) << "\n";
      return rep.verdict == FalsifyVerdict::Refuted ? kExitCheckFailed : kExitOk;
    }

    if (learn->parsed()) {
      const auto inst = load_instance(learn_args.instance);
      const auto learner = build_learner(learn_learner);
      SampleOracle oracle(inst, learn_args.ell, g.seed);
      const auto result = learner->learn(oracle, {parse_count(learn_learner.examples), parse_count(learn_learner.steps)});
      Json stats = to_json(result);
      stats["learner"] = learner->name();
      if (result.hypothesis) {
        out << serialize(*result.hypothesis) << "\n";
        try {
          stats["dist"] = to_pq(dist_exact(inst, learn_args.ell, *result.hypothesis).dist);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BudgetExceeded) throw;
        }
      }
      out << stats.dump() << "\n";
      return kExitOk;
    }

    if (reduce->parsed()) {
      const auto inst = load_instance(reduce_args.instance);
      const auto learner = build_learner(reduce_learner);
      ReductionParams p;
      p.ell = reduce_args.ell;
      p.step_budget = parse_count(reduce_learner.steps);
      p.examples = parse_count(reduce_learner.examples);
      p.mode = parse_distance_mode(mode);
      p.sample_count = parse_count(samples);
      p.seed = g.seed;
      p.fallback_to_sampled = fallback;
      if (!size_cap.empty()) p.size_cap = parse_count(size_cap);
      if (!threshold.empty()) p.eta_threshold = parse_pq(threshold);
      const auto v = p.size_cap ? algorithm_b_proper(inst, *learner, p) : algorithm_b(inst, *learner, p);
      out << to_json(v).dump(2) << "\n";
      return kExitOk;
    }

    if (bench->parsed()) {
      bench_cfg.seed = g.seed;
      bench_cfg.step_budget = parse_count(bench_steps);
      out << bench_csv_header() << "\n";
      for (const auto& row : run_bench(bench_cfg)) out << to_csv(row) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace monolift
