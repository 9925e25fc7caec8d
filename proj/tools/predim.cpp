// Copyright 2026 The predim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// predim: command-line front end. JSON payload on stdout, log on stderr.
// Exit codes: 0 ok, 1 verification failed, 2 usage, 3 budget, 4 precision.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "predim/checks.hpp"
#include "predim/constructions.hpp"
#include "predim/generic.hpp"
#include "predim/oracle.hpp"
#include "predim/sampler.hpp"
#include "predim/structure_io.hpp"

namespace {

using nlohmann::json;
using namespace predim;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3, kPrecision = 4 };

struct Common {
  std::string alpha;
  std::vector<std::string> interval;
  std::string beta = "1";
  bool oracle = false;
  std::string engine = "automatic";
  std::string out;
  std::string dot;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::optional<std::uint64_t> budget;
};

AlphaSpec alpha_of(const Common& c) {
  if (!c.interval.empty()) {
    if (!c.alpha.empty()) throw InvalidArgument("give --alpha or --alpha-interval, not both");
    return AlphaSpec::interval(parse_rational(c.interval[0]), parse_rational(c.interval[1]));
  }
  if (c.alpha.empty()) throw InvalidArgument("--alpha is required");
  return AlphaSpec::parse(c.alpha);
}

json alpha_json(const AlphaSpec& a) {
  if (a.is_exact()) return to_string(a.value());
  return json::array({to_string(a.lo()), to_string(a.hi())});
}

// p - q*alpha; "value" only when alpha is exact.
json dim_json(const DimValue& d, const AlphaSpec& a) {
  json j{{"p", to_string(d.p)}, {"q", to_string(d.q)}, {"text", d.describe()}};
  if (a.is_exact()) j["value"] = to_string(d.at(a.value()));
  return j;
}

Structure read_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
  return structure_from_json(j);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

class Runner {
 public:
  explicit Runner(const Common& c) : c_(c) {
    options_.strategy = parse_strategy(c.engine);
    options_.oracle = c.oracle;
    if (c.oracle) options_.strategy = Strategy::exhaustive;
  }

  MinimizeOptions options() {
    if (c_.budget) {
      budget_.emplace(*c_.budget);
      options_.budget = &*budget_;
    }
    return options_;
  }

  SearchBudget search_budget() const {
    SearchBudget b;
    if (c_.budget) b.max_elements = static_cast<std::size_t>(*c_.budget);
    return b;
  }

  Rational beta() const { return parse_rational(c_.beta); }

  std::uint64_t seed(const char* command) const {
    if (!c_.seed_given) throw InvalidArgument(std::string(command) + " needs an explicit --seed");
    return c_.seed;
  }

  // Prints the payload and writes --out / --dot for the main structure.
  int emit(json payload, const Structure* main, const ElementSet& highlight, bool verified) {
    json j{{"schema", 1}};
    j.update(payload);
    j["verified"] = verified;
    std::cout << j.dump(2) << "\n";
    if (main && !c_.out.empty()) write_file(c_.out, to_json(*main).dump() + "\n");
    if (main && !c_.dot.empty()) write_file(c_.dot, to_dot(*main, highlight));
    if (!main && (!c_.out.empty() || !c_.dot.empty())) {
      std::cerr << "predim: no structure to write\n";
    }
    return verified ? kOk : kFailed;
  }

 private:
  const Common& c_;
  MinimizeOptions options_;
  std::optional<Budget> budget_;
};

json class_json(const ClassReport& r, const AlphaSpec& a) {
  return {{"member", r.member},
          {"in_k", r.in_k},
          {"discrete", r.discrete},
          {"minimal", r.minimal},
          {"in_range", r.in_range},
          {"failed_clause", r.failed_clause},
          {"observation_holds", r.observation_holds},
          {"rel", dim_json(r.rel, a)},
          {"witness", r.witness},
          {"detail", r.detail}};
}

json pointed_json(const PointedStructure& p) {
  return {{"structure", to_json(p.s)}, {"a", p.a}, {"b", p.b}, {"e", p.e}};
}

json cert_json(const XCertificate& x, const AlphaSpec& a) {
  return {{"pointed", pointed_json(x.p)},
          {"beta", dim_json(x.beta, a)},
          {"size", x.size()},
          {"member", x.member},
          {"trace", trace_json(x)}};
}

json cn_json(const CnResult& r, const AlphaSpec& a) {
  json j{{"structure", to_json(r.c)},
         {"x", r.x},
         {"y", r.y},
         {"point", r.point},
         {"rel", dim_json(r.rel, a)},
         {"route", r.route},
         {"discrete", r.discrete},
         {"range_ok", r.range_ok},
         {"primitive", r.primitive},
         {"primitive_exhaustive", r.primitive_exhaustive},
         {"rel_x", dim_json(r.rel_x, a)},
         {"rel_y", dim_json(r.rel_y, a)},
         {"d_point_x", dim_json(r.d_point_x, a)},
         {"d_point_y", dim_json(r.d_point_y, a)},
         {"ok", r.ok()}};
  if (r.cert) j["trace"] = trace_json(*r.cert);
  return j;
}

int cmd_dim(Runner& run, const AlphaSpec& a, const std::string& in, const std::string& base) {
  const Structure s = read_structure(in);
  const ElementSet b = parse_element_list(base);
  require_elements(s, b);
  const Rational beta = run.beta();
  const MinimizeOptions o = run.options();
  const DInResult d = d_in(s, b, a, beta, o);
  const KResult k = is_in_K(s, a, beta, o);
  json j{{"command", "dim"},
         {"alpha", alpha_json(a)},
         {"beta", to_string(beta)},
         {"base", b},
         {"delta", dim_json(delta(s, beta), a)},
         {"delta_rel", dim_json(delta_rel(s, set_difference(s.elements(), b), b, beta), a)},
         {"d", dim_json(d.value, a)},
         {"d_rel", dim_json(d.value - delta(induced(s, b), beta), a)},
         {"minimizer", d.minimizer},
         {"base_strong", is_strong(b, s, a, beta, o)},
         {"in_k", k.member},
         {"k_violation", k.violating}};
  return run.emit(j, &s, b, true);
}

int cmd_icl(Runner& run, const AlphaSpec& a, const std::string& in, const std::string& base) {
  const Structure s = read_structure(in);
  const ElementSet b = parse_element_list(base);
  require_elements(s, b);
  const Rational beta = run.beta();
  const MinimizeOptions o = run.options();
  const ClosureResult r = icl(s, b, a, beta, o);
  const bool strong = r.converged && is_strong(r.closure, s, a, beta, o);
  json j{{"command", "icl"},
         {"alpha", alpha_json(a)},
         {"beta", to_string(beta)},
         {"base", b},
         {"closure", r.closure},
         {"converged", r.converged},
         {"rounds", r.rounds},
         {"budget_hit", r.budget_hit},
         {"strong", strong}};
  std::cerr << "predim: icl has " << r.closure.size() << " elements\n";
  return run.emit(j, &s, r.closure, r.converged && strong);
}

int cmd_seed(Runner& run, const AlphaSpec& a) {
  const Rational beta = run.beta();
  const MinimizeOptions o = run.options();
  const CertPtr x = find_seed(a, beta, o);
  const ClassReport r = is_in_A_class(x->p, a, beta, o);
  json j{{"command", "seed"}, {"alpha", alpha_json(a)}, {"beta", to_string(beta)},
         {"label", x->label}, {"certificate", cert_json(*x, a)}, {"class", class_json(r, a)}};
  std::cerr << "predim: seed " << x->label << ", " << x->size() << " elements\n";
  return run.emit(j, &x->p.s, x->p.base(), r.member && revalidate(*x, beta));
}

int cmd_construct(Runner& run, const AlphaSpec& a, const std::string& what, int n, int m,
                  const std::string& lower, const std::string& upper, bool chain_route) {
  const Rational beta = run.beta();
  const MinimizeOptions o = run.options();
  const SearchBudget budget = run.search_budget();
  json j{{"command", "construct"}, {"kind", what}, {"alpha", alpha_json(a)},
         {"beta", to_string(beta)}};
  if (what == "cn") {
    const CnResult r =
        build_Cn(a, n, budget, beta, o, chain_route ? CnRoute::chain : CnRoute::automatic);
    j["n"] = n;
    j["result"] = cn_json(r, a);
    std::cerr << "predim: C_" << n << " via " << r.route << ", " << r.c.size() << " elements\n";
    return run.emit(j, &r.c, {r.x, r.y, r.point}, r.ok());
  }
  CertPtr x;
  if (what == "approach") {
    x = approach_zero(a, m, budget, beta, o);
    j["m"] = m;
  } else if (what == "dense") {
    const Rational lo = parse_rational(lower);
    const Rational hi = parse_rational(upper);
    x = dense_find(a, lo, hi, budget, beta, o);
    j["interval"] = {to_string(lo), to_string(hi)};
  } else {
    throw InvalidArgument("construct kind must be cn, approach or dense");
  }
  j["certificate"] = cert_json(*x, a);
  std::cerr << "predim: " << x->size() << " elements, beta " << x->beta.describe() << "\n";
  return run.emit(j, &x->p.s, x->p.base(), x->member && revalidate(*x, beta));
}

int cmd_witness(Runner& run, const AlphaSpec& a, const std::string& what, int blocks) {
  const Rational beta = run.beta();
  const MinimizeOptions o = run.options();
  const SearchBudget budget = run.search_budget();
  json j{{"command", "witness"}, {"kind", what}, {"alpha", alpha_json(a)},
         {"beta", to_string(beta)}, {"blocks", blocks}};
  if (what == "rank0") {
    const WitnessReport r = rank0_witness(a, blocks, budget, beta, o);
    json rels = json::array();
    for (const DimValue& d : r.block_rel) rels.push_back(dim_json(d, a));
    const DimValue one = DimValue::constant(beta);
    const DimValue bound = DimValue::constant(beta / blocks);
    const bool ok = lt(r.d_c_over_b, bound, a) && le(one, r.d_c_over_x, a) &&
                    le(one, r.d_c_over_y, a) && r.nonnegative;
    j.update({{"structure", to_json(r.w)},
              {"x", r.x},
              {"y", r.y},
              {"c", r.c},
              {"block_rel", rels},
              {"block_size", r.block_size},
              {"block_route", r.block_route},
              {"d_c_over_xy", dim_json(r.d_c_over_b, a)},
              {"d_c_over_x", dim_json(r.d_c_over_x, a)},
              {"d_c_over_y", dim_json(r.d_c_over_y, a)}});
    std::cerr << "predim: rank-0 witness, " << r.w.size() << " elements\n";
    return run.emit(j, &r.w, {r.x, r.y, r.c}, ok);
  }
  if (what == "didip") {
    const DidipReport r = didip_witness(a, blocks, budget, beta, o);
    json rels = json::array();
    for (const DimValue& d : r.block_rel) rels.push_back(dim_json(d, a));
    json prefix = json::array();
    for (const DimValue& d : r.d_c_prefix) prefix.push_back(dim_json(d, a));
    j.update({{"structure", to_json(r.w)},
              {"c", r.c},
              {"bases", r.bases},
              {"block_rel", rels},
              {"d_c_over_all", dim_json(r.d_c_over_all, a)},
              {"d_c_prefix", prefix}});
    ElementSet marks{r.c};
    for (const ElementSet& b : r.bases) marks = set_union(marks, b);
    std::cerr << "predim: didip witness, " << r.w.size() << " elements\n";
    return run.emit(j, &r.w, marks, sign(r.d_c_over_all, a) == 0);
  }
  throw InvalidArgument("witness kind must be rank0 or didip");
}

int cmd_generic(Runner& run, const AlphaSpec& a, std::size_t steps, int max_ext, bool audit,
                std::size_t samples) {
  const Rational beta = run.beta();
  const std::uint64_t seed = run.seed("generic");
  GenericApprox g = build_generic(a, beta, steps, max_ext, seed);
  json j{{"command", "generic"}, {"model", to_json(g)}, {"stage_sizes", g.stage_sizes()}};
  bool ok = is_in_K(g.structure(), a, beta).member;
  j["in_k"] = ok;
  if (audit) {
    const MinimizeOptions o = run.options();
    const ExtensionAudit e = audit_extension(g, 20, o);
    const ClosureAudit c = audit_finite_closures(g, samples, seed, o);
    j["extension_audit"] = {{"scheduled", e.scheduled},
                            {"scheduled_ok", e.scheduled_ok},
                            {"unscheduled", e.unscheduled},
                            {"unscheduled_ok", e.unscheduled_ok},
                            {"empty_strong", e.empty_strong},
                            {"failures", e.failures}};
    j["closure_audit"] = {{"stages_checked", c.stages_checked},
                          {"stages_ok", c.stages_ok},
                          {"samples", c.samples},
                          {"closures_ok", c.closures_ok},
                          {"failures", c.failures}};
    ok = ok && e.ok() && c.ok();
  }
  std::cerr << "predim: stage " << g.stage() << ", " << g.structure().size() << " elements\n";
  return run.emit(j, &g.structure(), {}, ok);
}

int cmd_sample(Runner& run, std::size_t n, const std::string& alpha, const std::string& coeff,
               const std::vector<std::string>& patterns) {
  SampleSpec spec;
  spec.n = n;
  spec.alpha = parse_rational(alpha);
  spec.coeff = parse_rational(coeff);
  spec.seed = run.seed("sample");
  const Structure g = sample(spec);
  json j{{"command", "sample"},
         {"n", n},
         {"alpha", to_string(spec.alpha)},
         {"coeff", to_string(spec.coeff)},
         {"seed", spec.seed},
         {"p", edge_probability(spec)},
         {"edges", g.instance_count()}};
  MinimizeOptions o = run.options();
  json census_j = json::object();
  for (const std::string& name : patterns) {
    const Structure h = named_pattern(name);
    census_j[name] = {{"count", census(g, h, o.budget)}, {"expected", expected_count(spec, h)}};
  }
  j["census"] = census_j;
  if (patterns.size() == 1) {
    j["count"] = census_j[patterns[0]]["count"];
    j["expected"] = census_j[patterns[0]]["expected"];
  }
  return run.emit(j, &g, {}, true);
}

int cmd_check(Runner& run, const std::string& suite, std::size_t trials) {
  const std::uint64_t seed = run.seed("check");
  const MinimizeOptions o = run.options();
  SuiteReport r;
  if (suite == "axioms") {
    r = check_axioms(trials, seed);
  } else if (suite == "identities") {
    r = check_identities(trials, seed, o);
  } else if (suite == "closure") {
    r = check_closure(trials, seed, o);
  } else if (suite == "amalgamation") {
    r = check_amalgamation(trials, seed, o);
  } else {
    throw InvalidArgument("suite must be axioms, identities, closure or amalgamation");
  }
  json j{{"command", "check"}, {"report", to_json(r)}};
  std::cerr << "predim: " << suite << " " << r.passed << "/" << r.trials << "\n";
  return run.emit(j, nullptr, {}, r.ok());
}

int fail(int code, const std::string& kind, const std::string& what) {
  std::cerr << "predim: " << kind << ": " << what << "\n";
  json j{{"schema", 1}, {"error", kind}, {"message", what}};
  std::cout << j.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Predimension calculus for Hrushovski-style generic structures"};
  app.require_subcommand(1);
  Common c;

  auto common = [&c](CLI::App* sub, bool needs_alpha) {
    if (needs_alpha) {
      sub->add_option("--alpha", c.alpha, "exact alpha, P/Q");
      sub->add_option("--alpha-interval", c.interval, "irrational alpha inside (LO, HI)")
          ->expected(2);
    }
    sub->add_option("--beta", c.beta, "weight of an element")->capture_default_str();
    sub->add_flag("--oracle", c.oracle, "plain exhaustive evaluation, no pruning");
    sub->add_option("--engine", c.engine, "automatic, decomposition, flow or exhaustive")
        ->capture_default_str();
    sub->add_option("--out", c.out, "write the structure as canonical JSON");
    sub->add_option("--dot", c.dot, "write the structure as DOT");
    sub->add_option("--budget", c.budget,
                    "element cap for constructions, node cap for searches");
  };
  auto seeded = [&c](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed",
        [&c](const std::uint64_t& s) {
          c.seed = s;
          c.seed_given = true;
        },
        "random seed (required)");
  };

  std::string in, base;
  auto* dim = app.add_subcommand("dim", "delta, d and the minimizer over a base");
  common(dim, true);
  dim->add_option("--in", in, "structure JSON")->required();
  dim->add_option("--base", base, "comma-separated element ids");

  auto* icl_cmd = app.add_subcommand("icl", "intrinsic closure of a base");
  common(icl_cmd, true);
  icl_cmd->add_option("--in", in, "structure JSON")->required();
  icl_cmd->add_option("--base", base, "comma-separated element ids");

  auto* seed_cmd = app.add_subcommand("seed", "a seed of the pointed class");
  common(seed_cmd, true);

  std::string what;
  int n = 1, m = 2, blocks = 1;
  std::string lower = "-1", upper = "0";
  bool chain_route = false;
  auto* construct = app.add_subcommand("construct", "cn, approach or dense");
  common(construct, true);
  construct->add_option("kind", what, "cn, approach or dense")->required();
  construct->add_option("--n", n, "C_n index")->capture_default_str();
  construct->add_option("--m", m, "approach: beta in (-1/m, 0]")->capture_default_str();
  construct->add_option("--lower", lower, "dense: open lower end")->capture_default_str();
  construct->add_option("--upper", upper, "dense: upper end")->capture_default_str();
  construct->add_flag("--chain", chain_route, "cn: always chain two links");

  auto* witness = app.add_subcommand("witness", "rank0 or didip");
  common(witness, true);
  witness->add_option("kind", what, "rank0 or didip")->required();
  witness->add_option("--blocks", blocks, "number of blocks")->capture_default_str();

  std::size_t steps = 100, samples = 50;
  int max_ext = 3;
  bool audit = false;
  auto* generic = app.add_subcommand("generic", "finite stage of the generic model");
  common(generic, true);
  seeded(generic);
  generic->add_option("--steps", steps, "obligations to discharge")->capture_default_str();
  generic->add_option("--max-ext", max_ext, "largest extension in the catalog")
      ->capture_default_str();
  generic->add_flag("--audit", audit, "run the extension and closure audits");
  generic->add_option("--samples", samples, "closure audit samples")->capture_default_str();

  std::size_t size = 100;
  std::string sample_alpha, coeff = "1";
  std::vector<std::string> patterns;
  auto* sample_cmd = app.add_subcommand("sample", "G(n, c n^-alpha) and subgraph census");
  common(sample_cmd, false);
  seeded(sample_cmd);
  sample_cmd->add_option("--n", size, "vertices")->capture_default_str();
  sample_cmd->add_option("--alpha", sample_alpha, "exponent, P/Q")->required();
  sample_cmd->add_option("--coeff", coeff, "coefficient c")->capture_default_str();
  sample_cmd->add_option("--census", patterns, "K<n>, P<n>, C<n>, E<n>, edge, triangle");

  std::string suite;
  std::size_t trials = 100;
  auto* check = app.add_subcommand("check", "randomized property suites");
  common(check, false);
  seeded(check);
  check->add_option("suite", suite, "axioms, identities, closure or amalgamation")->required();
  check->add_option("--trials", trials, "number of trials")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Runner run(c);
    if (dim->parsed()) return cmd_dim(run, alpha_of(c), in, base);
    if (icl_cmd->parsed()) return cmd_icl(run, alpha_of(c), in, base);
    if (seed_cmd->parsed()) return cmd_seed(run, alpha_of(c));
    if (construct->parsed()) {
      return cmd_construct(run, alpha_of(c), what, n, m, lower, upper, chain_route);
    }
    if (witness->parsed()) return cmd_witness(run, alpha_of(c), what, blocks);
    if (generic->parsed()) return cmd_generic(run, alpha_of(c), steps, max_ext, audit, samples);
    if (sample_cmd->parsed()) return cmd_sample(run, size, sample_alpha, coeff, patterns);
    if (check->parsed()) return cmd_check(run, suite, trials);
  } catch (const BudgetExceeded& e) {
    return fail(kBudget, "BudgetExceeded", e.what());
  } catch (const InsufficientPrecision& e) {
    return fail(kPrecision, "InsufficientPrecision", e.what());
  } catch (const Unachievable& e) {
    return fail(kFailed, "Unachievable", e.what());
  } catch (const XRangeViolation& e) {
    return fail(kFailed, "XRangeViolation", e.what());
  } catch (const NotStrong& e) {
    return fail(kFailed, "NotStrong", e.what());
  } catch (const AlphaOutOfRange& e) {
    return fail(kUsage, "AlphaOutOfRange", e.what());
  } catch (const ProbabilityOverflow& e) {
    return fail(kUsage, "ProbabilityOverflow", e.what());
  } catch (const UnknownElement& e) {
    return fail(kUsage, "UnknownElement", e.what());
  } catch (const Error& e) {
    return fail(kUsage, "InvalidArgument", e.what());
  } catch (const std::exception& e) {
    return fail(kFailed, "InternalError", e.what());
  }
  return kUsage;
}
