#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rewire/code.hpp"
#include "rewire/gf2.hpp"
#include "rewire/pauli.hpp"

namespace rewire {

// Connectivity matrix: M[i][j] = 1 iff source[i] anticommutes with target[j].
Gf2Matrix connectivity_matrix(const std::vector<Pauli>& source,
                              const std::vector<Pauli>& target);

struct DiagonalizeResult {
  std::vector<Pauli> source;  // transformed source generators
  std::vector<Pauli> target;  // transformed target generators
  Gf2Matrix m;                // connectivity of the transformed sets; diagonal
  // combination rows over the ORIGINAL generators, phase-exact on replay
  Gf2Matrix source_combos;
  Gf2Matrix target_combos;
};

// Rewrites both generator sets so their connectivity matrix is diagonal:
// zero block (rows commuting with everything opposite) first, then a 1-block
// of anticommuting pairs. Deterministic; reproduces the published worked
// reductions.
DiagonalizeResult diagonalize(const std::vector<Pauli>& source,
                              const std::vector<Pauli>& target,
                              std::size_t n);

struct BPair {
  Pauli g;           // the block-B generator
  Pauli complement;  // anticommutes g only; commutes the whole other code
};

struct CPair {
  Pauli g;         // source-side element
  Pauli g_target;  // target-side partner; anticommutes g only
};

struct BlockDecomposition {
  StabilizerCode source, target;  // padded input codes
  std::size_t n = 0;

  std::vector<Pauli> block_a;         // shared elements (source-signed)
  std::vector<Pauli> block_a_target;  // same bodies, target combination signs
  std::vector<BPair> block_b;         // source side
  std::vector<BPair> block_b_target;  // target side, index-paired to block_b
  std::vector<CPair> block_c;

  // transformed full lists [A | B | C] and [A | B' | C'] in block order
  std::vector<Pauli> source_generators;
  std::vector<Pauli> target_generators;

  // op log: combination rows over the (padded) original generators for each
  // transformed generator, in source_generators/target_generators order
  Gf2Matrix source_combos;
  Gf2Matrix target_combos;

  std::size_t a() const { return block_a.size(); }
  std::size_t b() const { return block_b.size(); }
  std::size_t c() const { return block_c.size(); }
};

// Full block decomposition of a code pair (pads the shorter code first).
// Throws std::invalid_argument when the logical counts differ.
BlockDecomposition decompose_blocks(const StabilizerCode& s,
                                    const StabilizerCode& t);

struct MeasurementStep {
  Pauli measure;     // new generator, installed on measurement
  Pauli correction;  // replaced generator, applied on outcome -1
};

struct RewirePlan {
  std::string from_label, to_label;
  std::vector<MeasurementStep> steps;
  std::vector<StabilizerCode> intermediate_codes;  // N+1 codes, S0..SN
  std::size_t n = 0;
};

// Emits the 2b+c step plan: two steps per B pair (complement product, then
// the target generator), then one step per C pair, in block order.
RewirePlan build_plan(const BlockDecomposition& d);
RewirePlan plan_rewire(const StabilizerCode& s, const StabilizerCode& t);

std::string serialize_plan(const RewirePlan& plan);
RewirePlan parse_plan(std::string_view text);
RewirePlan load_plan(const std::string& path);
void save_plan(const RewirePlan& plan, const std::string& path);

struct ConstraintSet {
  std::vector<Pauli> allowed;  // the measurable set W
  std::size_t depth_bound = 8;
};

struct ConstrainedSearchResult {
  enum Verdict {
    Found,
    NecessaryConditionFailed,  // G' not inside <W u G>: definitive no
    NotFoundWithinBound,
  } verdict = NotFoundWithinBound;
  std::optional<RewirePlan> plan;
};

// Breadth-first search over measurement sequences drawn from W, with a
// span-fingerprint visited set. Guarded to desk scale: requires
// n <= 10 or |W| <= 16.
ConstrainedSearchResult constrained_path_search(const StabilizerCode& s,
                                                const StabilizerCode& t,
                                                const ConstraintSet& cs);

// Minimum-(weight, dense-string) Pauli solving the affine system
// "anticommute each of odds, commute each of evens"; nullopt when
// inconsistent. Exposed for reuse and for direct testing.
std::optional<Pauli> min_weight_anticommuter(const std::vector<Pauli>& odds,
                                             const std::vector<Pauli>& evens,
                                             std::size_t n);

}  // namespace rewire
