#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rewire/code.hpp"
#include "rewire/gf2.hpp"
#include "rewire/pauli.hpp"
#include "rewire/planner.hpp"

namespace rewire {

// Sign-tracked stabilizer tableau. Row i of destab anticommutes with row i
// of stab and commutes with every other row; stab rows pairwise commute and
// stay independent. Those invariants hold after every public operation.
struct StabilizerState {
  std::size_t n = 0;
  std::vector<Pauli> stab, destab;
  std::uint64_t rng_seed = 0;
  std::mt19937_64 rng;

  // |0...0>: stab Z_q, destab X_q.
  static StabilizerState zero_state(std::size_t n, std::uint64_t seed = 0);

  void reseed(std::uint64_t seed);

  // Clifford gates, conjugating every row phase-exactly.
  void apply_h(std::size_t q);
  void apply_s(std::size_t q);
  void apply_sdg(std::size_t q);
  void apply_cx(std::size_t control, std::size_t target);

  bool invariants_hold() const;
};

struct MeasurementRecord {
  std::size_t step = 0;
  Pauli op;
  int outcome = +1;
  bool corrected = false;  // true iff outcome was -1
};

// The state's eigenvalue for p when p is in the +-stabilizer group,
// nullopt when a measurement of p would be random.
std::optional<int> stabilizer_eigenvalue(const StabilizerState& state,
                                         const Pauli& p);

// Projective measurement of a Hermitian Pauli; random outcomes come from
// the state's seeded generator.
int measure(StabilizerState& state, const Pauli& p);

// Measurement with the random branch forced to `desired`; deterministic
// outcomes are returned as-is (they may disagree with desired).
int measure_postselect(StabilizerState& state, const Pauli& p, int desired);

// Pauli frame update: flips the sign of every anticommuting row.
void apply_pauli(StabilizerState& state, const Pauli& p);

// Measures every generator (then every fixing) and corrects -1 outcomes
// with the matching destabilizer, which stabilized the previous state, so
// the result is outcome-independent. Fixings must commute with the
// generators and each other.
StabilizerState prepare_codespace(const StabilizerCode& code,
                                  const std::vector<Pauli>& fixings = {},
                                  std::uint64_t seed = 0);

// Measure-then-correct channel of one plan step. Requires the correction
// (a pre-step generator) to stabilize the state at +1.
MeasurementRecord apply_rewire_step(StabilizerState& state,
                                    const MeasurementStep& step,
                                    std::size_t step_index = 0);

struct ExecutionResult {
  std::vector<MeasurementRecord> records;
  // Images of the tracked operators under the product of step unitaries
  // U = (1 + g_new g_old)/sqrt(2), phase-exact.
  std::vector<Pauli> transported;
};

// Runs every step in order. `track` is typically the flattened logical
// operators of the initial code. Throws when the state is not stabilized
// by the plan's initial code.
ExecutionResult execute_plan(StabilizerState& state, const RewirePlan& plan,
                             const std::vector<Pauli>& track = {});

struct LogicalAction {
  // Rows/columns ordered X_1..X_k then Z_1..Z_k over the after-code pairs.
  Gf2Matrix symplectic;
  std::vector<int> signs;  // +1/-1 per transported operator
  bool is_identity() const;
};

// Expresses each transported logical over the after-code logicals modulo
// the after-code stabilizer, sign-tracked. `transported` is ordered
// X_1..X_k then Z_1..Z_k of the before-code.
LogicalAction extract_logical_action(const StabilizerCode& before,
                                     const StabilizerCode& after,
                                     const std::vector<Pauli>& transported);

struct CatOptions {
  std::optional<std::uint64_t> reseed;
  // Inject this Pauli kind on the j'th ancilla right before its
  // controlled gate (fault-propagation experiments).
  std::optional<std::pair<std::size_t, char>> inject;
};

struct CatResult {
  int outcome = +1;
  std::vector<int> ancilla_outcomes;
};

// Indirect measurement of p through a weight(p)-qubit cat state: GHZ
// ancillas, one controlled-Pauli per support qubit, Hadamards, Z readout.
// Even ancilla parity means the +1 body outcome; the stored sign of p is
// folded in. Ancillas are discarded afterwards, leaving a pure data state.
CatResult cat_state_measure(StabilizerState& state, const Pauli& p,
                            const CatOptions& opts = {});

struct UnitaryReport {
  bool ok = true;
  std::vector<std::string> problems;
  void fail(std::string msg) {
    ok = false;
    problems.push_back(std::move(msg));
  }
};

// Property check for U = (1 + g'g)/sqrt(2): U maps g to g', fixes
// operators commuting with g'g, and maps anticommuting ones to their
// product with g g'. At n <= 3 everything is cross-checked against the
// dense matrix form of U, including unitarity. Throws when g, g' commute.
UnitaryReport verify_unitary_properties(const Pauli& g, const Pauli& gp);

// Sign-tracked reduced echelon form of the stabilizer rows; equal strings
// iff equal states. Destabilizers are bookkeeping and excluded.
std::string canonical_tableau(const StabilizerState& state);

// One line per record: "step=<i> op=<pauli> outcome=<+1|-1>
// corrected=<bool>", after a "seed=<seed>" header.
std::string serialize_transcript(const std::vector<MeasurementRecord>& records,
                                 std::uint64_t seed);

}  // namespace rewire
