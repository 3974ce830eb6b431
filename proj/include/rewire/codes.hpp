#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rewire/code.hpp"
#include "rewire/pauli.hpp"

namespace rewire {

// The published generator tables, all signs +1.
StabilizerCode build_steane();         // [[7,1,3]], 6 generators
StabilizerCode build_padded_steane();  // Steane + 8 ancilla Z's on 15 qubits
StabilizerCode build_reed_muller();    // [[15,1,3]], 14 generators

struct SurfaceDefect {
  std::size_t row = 0, col = 0;  // plaquette coordinates
  char type = 'Z';               // must match the plaquette color
};

// Domain wall along the bottom plaquette row: rhombus generators on
// columns [col_lo, col_hi], pentagon ends on the flanking columns.
struct TwistSegment {
  std::size_t row = 0;  // must be the bottom plaquette row
  std::size_t col_lo = 0, col_hi = 0;
};

// Checkerboard patch: qubits on the vertices of a plaq_rows x plaq_cols
// grid of whole plaquettes, row-major numbering from the top left.
struct SurfaceLayout {
  std::size_t plaq_rows = 0, plaq_cols = 0;
  std::vector<SurfaceDefect> defects;
  std::optional<TwistSegment> twist;
  std::string label;

  std::size_t num_qubits() const { return (plaq_rows + 1) * (plaq_cols + 1); }
  std::size_t vertex(std::size_t r, std::size_t c) const {
    return r * (plaq_cols + 1) + c;
  }
  char plaquette_color(std::size_t pr, std::size_t pc) const {
    return ((pr + pc) & 1) ? 'X' : 'Z';
  }
};

// Plain 4-corner plaquette operator in the layout's color.
Pauli plaquette_operator(const SurfaceLayout& l, std::size_t pr,
                         std::size_t pc);

// One generator per intact plaquette; removed plaquettes contribute none;
// a twist segment swaps in its rhombus and pentagon generators. Throws on
// out-of-range or overlapping defects and ill-fitting twists.
StabilizerCode build_surface_code(const SurfaceLayout& layout);

struct NamedCode {
  std::string name;
  StabilizerCode code;
};

// 2-qubit and 3-qubit generator-replacement pairs plus the qubit-swap pair
// with its published low-distance intermediate.
std::vector<NamedCode> appendix_fixtures();

// Literal generator lists for the defect-move and twist-move figure pairs;
// independent of any lattice numbering convention.
std::vector<NamedCode> figure_fixtures();

// Every exported fixture, keyed by file-stem name.
std::vector<NamedCode> fixture_codes();

}  // namespace rewire
