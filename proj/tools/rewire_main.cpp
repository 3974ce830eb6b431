#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rewire/code.hpp"
#include "rewire/codes.hpp"
#include "rewire/metrics.hpp"
#include "rewire/planner.hpp"
#include "rewire/tableau.hpp"

namespace {

using namespace rewire;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerificationError = 2;

StabilizerCode load_valid(const std::string& path) {
  StabilizerCode code = load_code(path);
  ValidationReport rep = validate(code);
  if (!rep.ok) {
    std::cerr << "invalid code in " << path << "\n";
    for (const auto& p : rep.problems) std::cerr << "  " << p << "\n";
    throw std::invalid_argument("validation failed");
  }
  return code;
}

std::string row_bits(const Gf2Matrix& m, std::size_t i) {
  std::string s;
  for (std::size_t j = 0; j < m.cols(); ++j)
    s.push_back(m.get(i, j) ? '1' : '0');
  return s;
}

void print_action(const LogicalAction& act) {
  if (act.is_identity()) {
    std::cout << "logical_action=identity\n";
    return;
  }
  std::cout << "logical_action=nontrivial\n";
  for (std::size_t i = 0; i < act.symplectic.rows(); ++i)
    std::cout << "action_row=" << row_bits(act.symplectic, i)
              << " sign=" << (act.signs[i] > 0 ? "+1" : "-1") << "\n";
}

int cmd_validate(const std::string& file) {
  StabilizerCode code = load_code(file);
  ValidationReport rep = validate(code);
  std::cout << "code=" << code.label << " n=" << code.n << " k=" << code.k
            << " generators=" << code.generators.size() << "\n";
  if (rep.ok) {
    std::cout << "valid=true\n";
    return kOk;
  }
  std::cout << "valid=false\n";
  for (const auto& p : rep.problems) std::cout << "problem: " << p << "\n";
  return kInputError;
}

int cmd_plan(const std::string& from, const std::string& to,
             const std::string& out, bool verbose) {
  StabilizerCode s = load_valid(from);
  StabilizerCode t = load_valid(to);
  BlockDecomposition d = decompose_blocks(s, t);
  RewirePlan plan = build_plan(d);
  std::cout << "from=" << plan.from_label << " to=" << plan.to_label
            << " a=" << d.a() << " b=" << d.b() << " c=" << d.c()
            << " N=" << plan.steps.size() << "\n";
  if (verbose) {
    for (const auto& step : plan.steps)
      std::cout << "measure " << step.measure.str() << " correct "
                << step.correction.str() << "\n";
  }
  if (!out.empty()) {
    save_plan(plan, out);
    std::cout << "wrote " << out << "\n";
  }
  return kOk;
}

struct Branch {
  StabilizerState state;
  std::vector<Pauli> track;
  std::size_t leaves = 1;  // outcome paths that reached this state
};

// Forced-outcome variant of a plan step, for branch enumeration.
void step_with_outcome(StabilizerState& state, const MeasurementStep& step,
                       int outcome) {
  auto ev = stabilizer_eigenvalue(state, step.correction);
  if (!ev || *ev != +1)
    throw std::invalid_argument("correction does not stabilize the state");
  measure_postselect(state, step.measure, outcome);
  if (outcome < 0) apply_pauli(state, step.correction);
}

void transport(std::vector<Pauli>& track, const MeasurementStep& step) {
  for (auto& p : track) {
    bool flip = !p.commutes_with(step.measure);
    bool corr = !p.commutes_with(step.correction);
    if (flip == corr) continue;  // even parity: conjugation fixes it
    p = p.times(step.correction).times(step.measure);
  }
}

int verify_final(StabilizerState& state, const StabilizerCode& padded_source,
                 const StabilizerCode& final_code,
                 const std::vector<Pauli>& transported) {
  bool ok = true;
  for (const auto& g : final_code.generators) {
    auto ev = stabilizer_eigenvalue(state, g);
    if (!ev || *ev != +1) {
      ok = false;
      std::cout << "final_generator_not_fixed " << g.str() << "\n";
    }
  }
  std::cout << "final_codespace=" << (ok ? "ok" : "fail") << "\n";
  if (!ok) return kVerificationError;

  StabilizerCode after = final_code;
  if (after.logicals.empty()) after.logicals = compute_logicals(after);
  LogicalAction act =
      extract_logical_action(padded_source, after, transported);
  print_action(act);
  return kOk;
}

int cmd_simulate(const std::string& from, const std::vector<std::string>& plan_files,
                 const std::vector<std::string>& fixings_text,
                 std::uint64_t seed, bool branches, const std::string& out) {
  StabilizerCode source = load_valid(from);

  std::vector<RewirePlan> plans;
  std::size_t total_steps = 0;
  for (const auto& pf : plan_files) {
    plans.push_back(load_plan(pf));
    total_steps += plans.back().steps.size();
  }
  if (plans.empty()) throw std::invalid_argument("no plan given");

  const std::size_t n = plans.front().n;
  for (const auto& p : plans)
    if (p.n != n) throw std::invalid_argument("plans disagree on qubit count");
  if (source.n > n)
    throw std::invalid_argument("source code larger than the plan");
  if (source.n < n) {
    std::string label = source.label;
    source = pad_with_ancillas(source, n - source.n);
    source.label = label;
  }
  if (source.logicals.empty()) source.logicals = compute_logicals(source);

  std::vector<Pauli> fixings;
  for (const auto& ft : fixings_text) fixings.push_back(Pauli::parse(ft, n));

  // X block then Z block, the order extract_logical_action expects.
  std::vector<Pauli> track;
  for (const auto& [lx, lz] : source.logicals) track.push_back(lx);
  for (const auto& [lx, lz] : source.logicals) track.push_back(lz);

  const StabilizerCode& final_code = plans.back().intermediate_codes.back();

  if (branches) {
    if (total_steps > 12)
      throw std::invalid_argument("branch enumeration guarded to 12 steps");
    std::vector<Branch> frontier;
    frontier.push_back({prepare_codespace(source, fixings, seed), track, 1});
    for (const auto& g : plans.front().intermediate_codes.front().generators) {
      auto ev = stabilizer_eigenvalue(frontier.front().state, g);
      if (!ev || *ev != +1)
        throw std::invalid_argument(
            "state is not stabilized by the plan's initial code");
    }
    for (const auto& plan : plans) {
      for (const auto& step : plan.steps) {
        std::map<std::string, Branch> next;
        for (auto& br : frontier) {
          auto ev = stabilizer_eigenvalue(br.state, step.measure);
          std::vector<int> outcomes =
              ev ? std::vector<int>{*ev} : std::vector<int>{+1, -1};
          for (int o : outcomes) {
            Branch child{br.state, br.track, br.leaves};
            step_with_outcome(child.state, step, o);
            transport(child.track, step);
            std::string key = canonical_tableau(child.state);
            for (const auto& p : child.track) key += "|" + p.str();
            auto it = next.find(key);
            if (it == next.end())
              next.emplace(std::move(key), std::move(child));
            else
              it->second.leaves += child.leaves;
          }
        }
        frontier.clear();
        for (auto& [k, br] : next) frontier.push_back(std::move(br));
      }
    }
    std::size_t leaves = 0;
    for (const auto& br : frontier) leaves += br.leaves;
    std::cout << "branches=" << leaves
              << " distinct_finals=" << frontier.size() << "\n";
    if (frontier.size() != 1) {
      std::cout << "verdict=branch_divergence\n";
      return kVerificationError;
    }
    return verify_final(frontier.front().state, source, final_code,
                        frontier.front().track);
  }

  StabilizerState state = prepare_codespace(source, fixings, seed);
  std::vector<MeasurementRecord> records;
  for (const auto& plan : plans) {
    ExecutionResult res = execute_plan(state, plan, track);
    track = res.transported;
    for (auto& r : res.records) {
      r.step = records.size();
      records.push_back(std::move(r));
    }
  }
  std::string transcript = serialize_transcript(records, seed);
  if (!out.empty()) {
    std::ofstream f(out);
    f << transcript;
  }
  std::cout << transcript;
  return verify_final(state, source, final_code, track);
}

int cmd_distance(const std::string& code_file, const std::string& plan_file,
                 std::size_t max_weight, std::size_t jobs) {
  if (code_file.empty() == plan_file.empty())
    throw std::invalid_argument("give exactly one of --code / --plan");
  if (!code_file.empty()) {
    StabilizerCode code = load_valid(code_file);
    std::cout << code_distance(code, max_weight, jobs).str() << "\n";
    return kOk;
  }
  RewirePlan plan = load_plan(plan_file);
  for (const auto& rep : path_distance_profile(plan, max_weight, jobs))
    std::cout << rep.str() << "\n";
  return kOk;
}

int cmd_catcheck(const std::string& code_file, std::size_t gen_index,
                 std::size_t trials, std::uint64_t seed) {
  StabilizerCode code = load_valid(code_file);
  if (gen_index >= code.generators.size())
    throw std::invalid_argument("generator index out of range");
  const Pauli& g = code.generators[gen_index];
  const std::size_t w = g.weight();
  std::cout << "code=" << code.label << " generator=" << gen_index
            << " weight=" << w << " trials=" << trials << "\n";

  std::size_t discrepancies = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    StabilizerState cat_state = prepare_codespace(code, {}, seed + t);
    StabilizerState direct = cat_state;
    CatResult cr = cat_state_measure(cat_state, g);
    int direct_outcome = measure_postselect(direct, g, cr.outcome);
    if (direct_outcome != cr.outcome ||
        canonical_tableau(cat_state) != canonical_tableau(direct))
      ++discrepancies;
  }
  std::cout << "discrepancies=" << discrepancies << "\n";

  // An X before one cat ancilla's coupling gate must corrupt at most one
  // data qubit: some single-qubit Pauli (or none) reconciles the states.
  std::size_t worst = 0;
  bool bound_ok = true;
  for (std::size_t j = 0; j < w; ++j) {
    StabilizerState err = prepare_codespace(code, {}, seed + 7919 * (j + 1));
    StabilizerState clean = err;
    CatOptions opts;
    opts.inject = {j, 'X'};
    CatResult cr = cat_state_measure(err, g, opts);
    measure_postselect(clean, g, cr.outcome);
    const std::string want = canonical_tableau(clean);

    std::optional<std::size_t> cost;
    if (canonical_tableau(err) == want) cost = 0;
    for (std::size_t q = 0; !cost && q < code.n; ++q) {
      for (char L : {'X', 'Y', 'Z'}) {
        Pauli d(code.n);
        d.set_letter(q, L);
        StabilizerState fixed = err;
        apply_pauli(fixed, d);
        if (canonical_tableau(fixed) == want) {
          cost = 1;
          break;
        }
      }
    }
    if (!cost) {
      bound_ok = false;
      std::cout << "ancilla=" << j << " unreconciled\n";
    } else {
      worst = std::max(worst, *cost);
    }
  }
  std::cout << "injected_ancilla_errors=" << w
            << " max_data_qubits_affected=" << worst << "\n";
  const bool ok = discrepancies == 0 && bound_ok;
  std::cout << "verdict=" << (ok ? "equivalent" : "discrepant") << "\n";
  return ok ? kOk : kVerificationError;
}

int cmd_constrained(const std::string& from, const std::string& to,
                    const std::string& allowed_file, std::size_t depth,
                    const std::string& out) {
  StabilizerCode s = load_valid(from);
  StabilizerCode t = load_valid(to);
  if (s.n != t.n)
    throw std::invalid_argument("constrained search needs equal qubit counts");

  ConstraintSet cs;
  cs.depth_bound = depth;
  std::ifstream f(allowed_file);
  if (!f) throw std::invalid_argument("cannot open " + allowed_file);
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    cs.allowed.push_back(Pauli::parse(line, s.n));
  }

  ConstrainedSearchResult res = constrained_path_search(s, t, cs);
  switch (res.verdict) {
    case ConstrainedSearchResult::Found:
      std::cout << "verdict=found steps=" << res.plan->steps.size() << "\n";
      if (!out.empty()) {
        save_plan(*res.plan, out);
        std::cout << "wrote " << out << "\n";
      }
      return kOk;
    case ConstrainedSearchResult::NecessaryConditionFailed:
      std::cout << "verdict=necessary_condition_failed\n";
      return kVerificationError;
    case ConstrainedSearchResult::NotFoundWithinBound:
      std::cout << "verdict=not_found_within_bound depth=" << depth << "\n";
      return kVerificationError;
  }
  return kInputError;
}

int cmd_fixtures(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& nc : fixture_codes()) {
    const std::string path = out_dir + "/" + nc.name + ".code";
    save_code(nc.code, path);
    std::cout << "wrote " << path << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer-code rewiring toolkit"};
  app.require_subcommand(1);

  std::string from, to, out, code_file, plan_file, allowed_file, file;
  std::vector<std::string> plan_files, fixings;
  std::uint64_t seed = 0;
  std::size_t max_weight = 4, depth = 8, jobs = 1, gen_index = 0,
              trials = 100;
  bool branches = false, verbose = false;
  std::string fixtures_dir = "fixtures";

  auto* v = app.add_subcommand("validate", "Check a code file");
  v->add_option("file", file, "code file")->required();

  auto* p = app.add_subcommand("plan", "Build a rewiring plan");
  p->add_option("--from", from, "source code file")->required();
  p->add_option("--to", to, "target code file")->required();
  p->add_option("--out", out, "plan output file");
  p->add_flag("--verbose", verbose, "print the measurement steps");

  auto* s = app.add_subcommand("simulate", "Execute a plan on the tableau");
  s->add_option("--from", from, "source code file")->required();
  s->add_option("--plan", plan_files, "plan file (repeatable, run in order)")
      ->required();
  s->add_option("--seed", seed, "rng seed");
  s->add_option("--fix-logical", fixings,
                "extra commuting operator fixed to +1 at preparation");
  s->add_flag("--branches", branches, "enumerate all outcome branches");
  s->add_option("--out", out, "transcript output file");

  auto* d = app.add_subcommand("distance", "Brute-force distance scan");
  d->add_option("--code", code_file, "code file");
  d->add_option("--plan", plan_file, "plan file (profiles every code)");
  d->add_option("--max-weight", max_weight, "search cap");
  d->add_option("--jobs", jobs, "worker threads");

  auto* c = app.add_subcommand("catcheck", "Cat-state measurement check");
  c->add_option("--code", code_file, "code file")->required();
  c->add_option("--generator", gen_index, "generator index");
  c->add_option("--trials", trials, "paired trials");
  c->add_option("--seed", seed, "rng seed");

  auto* cs = app.add_subcommand("constrained", "Search within allowed ops");
  cs->add_option("--from", from, "source code file")->required();
  cs->add_option("--to", to, "target code file")->required();
  cs->add_option("--allowed", allowed_file, "file with one operator per line")
      ->required();
  cs->add_option("--depth", depth, "step bound");
  cs->add_option("--out", out, "plan output file");

  auto* fx = app.add_subcommand("fixtures", "Export the built-in fixtures");
  fx->add_option("--out-dir", fixtures_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (v->parsed()) return cmd_validate(file);
    if (p->parsed()) return cmd_plan(from, to, out, verbose);
    if (s->parsed())
      return cmd_simulate(from, plan_files, fixings, seed, branches, out);
    if (d->parsed()) return cmd_distance(code_file, plan_file, max_weight, jobs);
    if (c->parsed()) return cmd_catcheck(code_file, gen_index, trials, seed);
    if (cs->parsed())
      return cmd_constrained(from, to, allowed_file, depth, out);
    if (fx->parsed()) return cmd_fixtures(fixtures_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
