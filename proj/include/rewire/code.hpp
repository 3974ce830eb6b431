#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rewire/gf2.hpp"
#include "rewire/pauli.hpp"

namespace rewire {

// Stabilizer code on n qubits with k = n - #generators logical qubits.
// Logical pairs are optional; when present, logicals[j] = (X_j, Z_j) with
// the usual pairing (X_j anticommutes only with Z_j among the pairs and
// commutes with every generator).
struct StabilizerCode {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Pauli> generators;
  std::vector<std::pair<Pauli, Pauli>> logicals;
  std::string label;

  static StabilizerCode make(std::size_t n, std::vector<Pauli> generators,
                             std::string label = {});
};

// Subsystem code: stabilizer group inside a larger gauge group. The gauge
// generator list includes the stabilizer generators.
struct SubsystemCode {
  std::size_t n = 0;
  std::vector<Pauli> stabilizer_generators;
  std::vector<Pauli> gauge_generators;
  std::size_t k_logical = 0;  // n - s - r
  std::size_t r_gauge = 0;
  std::string label;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;

  void fail(std::string msg) {
    ok = false;
    problems.push_back(std::move(msg));
  }
};

// Checks commutation, independence, k consistency, and (when present) the
// logical-pair relations. Reports every violation rather than throwing.
ValidationReport validate(const StabilizerCode& code);

// Deterministic logical-operator synthesis: canonical (reduced-echelon)
// centralizer basis filtered against the stabilizer span, then symplectic
// Gram-Schmidt pairing. Pure-X / pure-Z representatives are steered to the
// X / Z slots of a pair when that distinction exists.
std::vector<std::pair<Pauli, Pauli>> compute_logicals(
    const StabilizerCode& code);

// New code with generator i replaced by generators[i] * generators[j].
StabilizerCode replace_generator(const StabilizerCode& code, std::size_t i,
                                 std::size_t j);

// Appends m fresh qubits, each with a single-qubit Z stabilizer.
StabilizerCode pad_with_ancillas(const StabilizerCode& code, std::size_t m);

// perm[q] = image of qubit q (0-based); must be a permutation of 0..n-1.
StabilizerCode permute_qubits(const StabilizerCode& code,
                              const std::vector<std::size_t>& perm);

// Text format:
//   n=<int> k=<int> label=<text>
//   <one generator per line, pauli text>
//   logicals:            (optional)
//   <X line> <Z line> alternating, k pairs
std::string serialize_code(const StabilizerCode& code);
StabilizerCode parse_code(std::string_view text);
StabilizerCode load_code(const std::string& path);
void save_code(const StabilizerCode& code, const std::string& path);

// Sign-blind canonical fingerprint of the generated group (RREF of the
// symplectic row matrix); equal iff the stabilizer groups match up to signs.
std::string span_fingerprint(const std::vector<Pauli>& gens, std::size_t n);

}  // namespace rewire
