#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rewire/code.hpp"
#include "rewire/pauli.hpp"
#include "rewire/planner.hpp"

namespace rewire {

struct DistanceReport {
  std::string code_label;
  // Empty means "no logical of weight <= searched_weight exists".
  std::optional<std::size_t> distance;
  std::optional<Pauli> witness;  // minimum-weight logical when found
  std::size_t searched_weight = 0;

  // "code=<label> distance=<d|>W> witness=<pauli|none> searched=<W>"
  std::string str() const;
};

// Exact minimum weight over all Paulis of weight <= max_weight that
// commute with every generator and sit outside the sign-blind stabilizer
// span. Supports are scanned in increasing weight with all 3^w letter
// assignments, earliest hit wins; `jobs` splits supports across threads
// without changing the winner. Throws when k = 0.
DistanceReport code_distance(const StabilizerCode& code,
                             std::size_t max_weight, std::size_t jobs = 1);

// One report per intermediate code of the plan, in order.
std::vector<DistanceReport> path_distance_profile(const RewirePlan& plan,
                                                  std::size_t max_weight,
                                                  std::size_t jobs = 1);

// Subsystem code of a decomposition with empty B blocks: stabilizer group
// from the shared block, gauge group from shared + both C sides.
SubsystemCode joint_subsystem_code(const BlockDecomposition& d);

// One subsystem code per choice of side for each B pair (bit j of the
// list index: 0 keeps the source generator, 1 the target one). Gauge
// groups always contain the complement products c_j c'_j and both C
// sides. Guarded to b <= 12.
std::vector<SubsystemCode> enumerate_subsystem_codes(
    const BlockDecomposition& d);

// Minimum weight of a dressed logical: commutes with every stabilizer
// generator, outside the sign-blind gauge span.
DistanceReport subsystem_distance(const SubsystemCode& sc,
                                  std::size_t max_weight,
                                  std::size_t jobs = 1);

// True iff every generator of `code` lies in the gauge span of `sc` and
// the stabilizer group of `sc` lies in the span of `code`'s generators
// (both sign-blind).
bool is_gauge_fixing(const StabilizerCode& code, const SubsystemCode& sc);

}  // namespace rewire
