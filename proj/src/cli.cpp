#include "extshift/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "extshift/ekr.hpp"
#include "extshift/enumerate.hpp"
#include "extshift/errors.hpp"
#include "extshift/factor.hpp"
#include "extshift/io.hpp"
#include "extshift/limits.hpp"
#include "extshift/random.hpp"

namespace extshift::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string order = "lex";
  std::string route = "init-shift";
  std::string pair;
  std::string trace_path;
  std::string mode = "all_intersecting";
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  int n = 0;
  int k = 0;
  int m = 1;
  int random_trials = 0;
  bool check = false;
  bool list = false;
};

ShiftPair parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--pair expects i,j");
  try {
    return ShiftPair{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw ParseError("--pair expects two integers, got '" + text + "'");
  }
}

OrderKind order_of(const Options& o) { return parse_order_kind(o.order); }

SetFamily read_family(const Options& o) {
  auto in = io::parse_input(o.input);
  if (auto* f = std::get_if<SetFamily>(&in)) return *f;
  throw ParseError("expected a set family {n, k, sets}");
}

Subspace read_subspace(const Options& o, bool accept_family = true) {
  const OrderKind kind = order_of(o);
  auto in = io::parse_input(o.input, std::nullopt, kind);
  if (auto* v = std::get_if<Subspace>(&in)) return *v;
  if (auto* f = std::get_if<SetFamily>(&in); f && accept_family) return monomial_span(*f, kind);
  throw ParseError("expected a subspace {n, k, order, basis}");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_trace(const Options& o, const std::vector<TraceStep>& trace) {
  if (o.trace_path.empty()) return;
  std::ofstream file(o.trace_path);
  if (!file) throw ParseError("cannot write trace file " + o.trace_path);
  file << io::to_json(trace).dump(2) << '\n';
}

int verify_family(const Options& o, std::ostream& out) {
  const SetFamily f = read_family(o);
  if (!is_intersecting(f)) {
    throw PreconditionError(PreconditionError::Reason::not_intersecting, "family is not intersecting");
  }
  SetFamily shifted = f;
  std::vector<TraceStep> trace;
  if (!is_shifted(f)) {
    // Combinatorial shifting keeps size and the intersecting property.
    auto fixed = bn_fixed_point(monomial_span(f), Route::init_then_shift);
    shifted = *monomial_basis(fixed.result);
    trace = std::move(fixed.trace);
  }
  VerifyReport report = shifted_ekr_verify(shifted);
  report.subject = "family of " + std::to_string(f.size()) + " sets";
  report.family = f;
  report.star_element = is_star(f);
  report.trace = std::move(trace);
  write_trace(o, report.trace);
  emit(out, io::to_json(report));
  return report.satisfied ? kOk : kFalsified;
}

int pipeline(const Options& o, std::ostream& out) {
  const Subspace v = read_subspace(o);
  const VerifyReport report = ekr_pipeline(v, parse_route(o.route));
  write_trace(o, report.trace);
  emit(out, io::to_json(report));
  return report.satisfied ? kOk : kFalsified;
}

int shift(const Options& o, std::ostream& out) {
  const SetFamily f = read_family(o);
  if (!o.pair.empty()) {
    emit(out, io::to_json(combinatorial_shift(f, parse_pair(o.pair))));
    return kOk;
  }
  const auto fixed = bn_fixed_point(monomial_span(f), Route::init_then_shift);
  write_trace(o, fixed.trace);
  emit(out, io::to_json(*monomial_basis(fixed.result)));
  return kOk;
}

int limit(const Options& o, std::ostream& out) {
  const Subspace v = read_subspace(o);
  if (o.pair.empty()) {
    const auto fixed = bn_fixed_point(v, parse_route(o.route));
    write_trace(o, fixed.trace);
    emit(out, io::to_json(fixed.result));
  } else {
    emit(out, io::to_json(limit_shift(v, parse_pair(o.pair))));
  }
  return kOk;
}

int init(const Options& o, std::ostream& out) {
  emit(out, io::to_json(init_subspace(read_subspace(o))));
  return kOk;
}

int factor(const Options& o, std::ostream& out) {
  auto in = io::parse_input(o.input, o.n > 0 ? std::optional<int>(o.n) : std::nullopt);
  const auto* v = std::get_if<Multivector>(&in);
  if (!v) throw ParseError("factor expects a multivector literal");
  emit(out, io::to_json(factor_report(*v)));
  return kOk;
}

int annihilator(const Options& o, std::ostream& out) {
  const Subspace a = common_annihilator(read_subspace(o));
  Json j = io::to_json(a);
  j["dim"] = a.dim();
  emit(out, j);
  return kOk;
}

int example_cross(const Options& o, std::ostream& out) {
  if (!o.check) {
    emit(out, io::to_json(Subspace::span(MonomialOrder{OrderKind::lex, 2 * o.k, o.k},
                                         cross_example_generators(o.k))));
    return kOk;
  }
  const Subspace v = cross_example(o.k);  // throws ClaimViolation on a failed guarantee
  const auto gens = cross_example_generators(o.k);
  std::size_t without_factor = 0;
  for (const auto& g : gens) without_factor += linear_factors(g).is_zero() ? 1 : 0;
  const std::uint64_t bound = ekr_bound(2 * o.k, o.k);
  Json j{{"n", v.n()},
         {"k", v.k()},
         {"dim", v.dim()},
         {"ekr_bound", bound},
         {"self_annihilating", self_annihilating(v)},
         {"generators", gens.size()},
         {"generators_without_linear_factor", without_factor},
         {"annihilator_dim", common_annihilator(v).dim()},
         {"example_generator", gens.front().to_string()}};
  emit(out, j);
  return v.dim() == bound ? kOk : kFalsified;
}

int enumerate(const Options& o, std::ostream& out) {
  const auto mode = parse_enumeration_mode(o.mode);
  Json families = Json::array();
  std::size_t max_size = 0;
  const auto count = enumerate_families(
      o.n, o.k, mode,
      [&](const SetFamily& f) {
        max_size = std::max(max_size, f.size());
        if (o.list) families.push_back(io::to_json(f)["sets"]);
      },
      o.budget);
  Json j{{"n", o.n}, {"k", o.k}, {"mode", to_string(mode)}, {"count", count}, {"max_size", max_size}};
  if (2 * o.k <= o.n) {
    j["ekr_bound"] = ekr_bound(o.n, o.k);
    j["within_bound"] = max_size <= ekr_bound(o.n, o.k);
  }
  if (o.list) j["families"] = std::move(families);
  emit(out, j);
  if (2 * o.k <= o.n && max_size > ekr_bound(o.n, o.k)) return kFalsified;
  return kOk;
}

int hm_verify(const Options& o, std::ostream& out) {
  const VerifyReport report = hilton_milner_verify(o.n, o.k, o.budget);
  emit(out, io::to_json(report));
  return report.satisfied ? kOk : kFalsified;
}

Json oracle_record(const Subspace& v, ShiftPair p, bool& all_equal) {
  const PlueckerVector direct = pluecker(limit_shift(v, p));
  const PlueckerVector symbolic = pluecker_limit(v, p);
  const bool equal = direct == symbolic;
  all_equal = all_equal && equal;
  return Json{{"pair", {p.i, p.j}},
              {"equal", equal},
              {"limit_shift", io::to_json(direct)},
              {"pluecker_limit", io::to_json(symbolic)}};
}

int oracle_pluecker(const Options& o, std::ostream& out) {
  bool all_equal = true;
  if (o.random_trials > 0) {
    RandomSource rng(o.seed);
    const MonomialOrder order{order_of(o), o.n, o.k};
    std::size_t checked = 0;
    for (int t = 0; t < o.random_trials; ++t) {
      const Subspace v = rng.subspace(order, o.m);
      if (v.is_zero()) continue;
      for (int i = 1; i <= o.n; ++i)
        for (int j = 1; j <= o.n; ++j) {
          if (i == j) continue;
          const ShiftPair p{i, j};
          all_equal = all_equal && pluecker(limit_shift(v, p)) == pluecker_limit(v, p);
          ++checked;
        }
    }
    emit(out, Json{{"trials", o.random_trials}, {"seed", o.seed}, {"comparisons", checked}, {"all_equal", all_equal}});
    return all_equal ? kOk : kFalsified;
  }
  const Subspace v = read_subspace(o);
  if (v.is_zero()) throw ParseError("the zero subspace has no Plücker vector");
  Json records = Json::array();
  if (!o.pair.empty()) {
    records.push_back(oracle_record(v, parse_pair(o.pair), all_equal));
  } else {
    for (int i = 1; i <= v.n(); ++i)
      for (int j = 1; j <= v.n(); ++j)
        if (i != j) records.push_back(oracle_record(v, ShiftPair{i, j}, all_equal));
  }
  emit(out, Json{{"all_equal", all_equal}, {"comparisons", std::move(records)}});
  return all_equal ? kOk : kFalsified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact exterior-algebra shifting and EKR verification", "extshift"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("input", o.input, "file path or inline literal");
    if (required) opt->required();
  };
  const auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "monomial order: lex or weight2")
        ->check(CLI::IsMember({"lex", "weight2"}));
  };
  const auto add_route = [&](CLI::App* sub) {
    sub->add_option("--route", o.route, "fixed-point route: iterate or init-shift")
        ->check(CLI::IsMember({"iterate", "init-shift"}));
  };
  const auto add_trace = [&](CLI::App* sub) {
    sub->add_option("--trace", o.trace_path, "write the step trace as JSON");
  };
  const auto add_nk = [&](CLI::App* sub, bool required) {
    auto* n = sub->add_option("--n", o.n, "ground dimension");
    auto* k = sub->add_option("--k", o.k, "grade / set size");
    if (required) {
      n->required();
      k->required();
    }
  };

  auto* verify_cmd = app.add_subcommand("verify-family", "check a set family against the EKR bound");
  add_input(verify_cmd);
  add_trace(verify_cmd);

  auto* pipeline_cmd = app.add_subcommand("pipeline", "degenerate V with V^V=0 to a shifted family");
  add_input(pipeline_cmd);
  add_order(pipeline_cmd);
  add_route(pipeline_cmd);
  add_trace(pipeline_cmd);

  auto* shift_cmd = app.add_subcommand("shift", "combinatorial shift of a set family");
  add_input(shift_cmd);
  shift_cmd->add_option("--pair", o.pair, "i,j (default: shift until shifted)");
  add_trace(shift_cmd);

  auto* limit_cmd = app.add_subcommand("limit", "limit of M_ij(t)·V as t grows");
  add_input(limit_cmd);
  limit_cmd->add_option("--pair", o.pair, "i,j (default: run to a fixed point)");
  add_order(limit_cmd);
  add_route(limit_cmd);
  add_trace(limit_cmd);

  auto* init_cmd = app.add_subcommand("init", "span of initial monomials");
  add_input(init_cmd);
  add_order(init_cmd);

  auto* factor_cmd = app.add_subcommand("factor", "linear factors of a multivector");
  add_input(factor_cmd);
  factor_cmd->add_option("--n", o.n, "ground dimension")->required();

  auto* annihilator_cmd = app.add_subcommand("annihilator", "common linear factors of a subspace");
  add_input(annihilator_cmd);
  add_order(annihilator_cmd);

  auto* cross_cmd = app.add_subcommand("example-cross", "span of m_A + m_{A^c} over A containing 1");
  cross_cmd->add_option("--k", o.k, "odd grade >= 3")->required();
  cross_cmd->add_flag("--check", o.check, "verify the construction guarantees");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate intersecting families");
  add_nk(enumerate_cmd, true);
  enumerate_cmd->add_option("--mode", o.mode, "all_intersecting | shifted_intersecting | maximal_intersecting");
  enumerate_cmd->add_option("--budget", o.budget, "search node cap");
  enumerate_cmd->add_flag("--list", o.list, "print every family");

  auto* hm_cmd = app.add_subcommand("hm-verify", "Hilton-Milner bound over shifted families");
  add_nk(hm_cmd, true);
  hm_cmd->add_option("--budget", o.budget, "search node cap");

  auto* oracle_cmd = app.add_subcommand("oracle-pluecker", "compare limit_shift with the Plücker limit");
  add_input(oracle_cmd, false);
  oracle_cmd->add_option("--pair", o.pair, "i,j (default: every ordered pair)");
  add_order(oracle_cmd);
  add_nk(oracle_cmd, false);
  oracle_cmd->add_option("--m", o.m, "subspace dimension for --random");
  oracle_cmd->add_option("--random", o.random_trials, "number of seeded random subspaces");
  oracle_cmd->add_option("--seed", o.seed, "random seed");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("extshift");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*verify_cmd) return verify_family(o, out);
    if (*pipeline_cmd) return pipeline(o, out);
    if (*shift_cmd) return shift(o, out);
    if (*limit_cmd) return limit(o, out);
    if (*init_cmd) return init(o, out);
    if (*factor_cmd) return factor(o, out);
    if (*annihilator_cmd) return annihilator(o, out);
    if (*cross_cmd) return example_cross(o, out);
    if (*enumerate_cmd) return enumerate(o, out);
    if (*hm_cmd) return hm_verify(o, out);
    if (*oracle_cmd) {
      if (o.random_trials == 0 && o.input.empty()) throw ParseError("oracle-pluecker needs an input or --random");
      return oracle_pluecker(o, out);
    }
  } catch (const ClaimViolation& e) {
    err << "FALSIFIED: " << e.what() << '\n';
    return kFalsified;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const NonTermination& e) {
    err << "iteration cap reached: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace extshift::cli
