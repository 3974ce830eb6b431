#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rewire/pauli.hpp"

namespace rewire {

// Bit vector with 0/1 bytes; small and transparent at desk scale.
using Gf2Vec = std::vector<std::uint8_t>;

struct RowOp {
  enum Kind { Swap, Add } kind;  // Add means row a ^= row b
  std::size_t a = 0, b = 0;
};

// Dense GF(2) matrix, rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);

  void row_xor(std::size_t dst, std::size_t src);  // row dst ^= row src
  void swap_rows(std::size_t a, std::size_t b);
  void apply(const RowOp& op);

  bool row_is_zero(std::size_t r) const;
  // Column of the leading 1 in row r, or cols() if the row is zero.
  std::size_t leading_col(std::size_t r) const;
  std::size_t row_weight(std::size_t r) const;

  Gf2Vec row(std::size_t r) const;
  void set_row(std::size_t r, const Gf2Vec& v);
  Gf2Matrix transposed() const;

  // Matrix * column vector.
  Gf2Vec mul(const Gf2Vec& x) const;

  bool operator==(const Gf2Matrix& o) const = default;
  std::string str() const;

 private:
  std::size_t words() const { return (cols_ + 63) / 64; }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  Gf2Matrix reduced;
  std::vector<RowOp> ops;   // replays input -> reduced
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row-echelon form over GF(2); deterministic (first nonzero pivot
// in column order, entries above and below pivots cleared).
RrefResult row_reduce(const Gf2Matrix& m);

std::size_t gf2_rank(const Gf2Matrix& m);

struct SolveResult {
  bool consistent = false;
  Gf2Vec particular;               // one solution of A x = b (free vars 0)
  std::vector<Gf2Vec> nullspace;   // basis of A x = 0
};

// Solves A x = b; b.size() must equal A.rows().
SolveResult solve_gf2(const Gf2Matrix& a, const Gf2Vec& b);

// ---- Pauli <-> symplectic bridging -------------------------------------

// Row r = (x_0..x_{n-1} | z_0..z_{n-1}) of paulis[r].
Gf2Matrix symplectic_matrix(const std::vector<Pauli>& paulis, std::size_t n);
Gf2Vec symplectic_vector(const Pauli& p);

// Ordered product (ascending index) of basis elements selected by combo.
Pauli product_of(const std::vector<Pauli>& basis, const Gf2Vec& combo,
                 std::size_t n);

struct SpanResult {
  bool in_span = false;
  // candidate = i^phase_exp * product_of(basis, combo) when in_span
  Gf2Vec combo;
  int phase_exp = 0;
  // true when a combo reproducing the candidate's phase exactly was found
  // (phase_exp == 0), or when the combo is unique so phase_exp is exact
  bool sign_matches = false;
};

// Membership of candidate's x/z part in the GF(2) span of basis. With
// track_sign, additionally searches the solution space for a combination
// whose ordered product reproduces the candidate phase-exactly.
SpanResult in_span(const Pauli& candidate, const std::vector<Pauli>& basis,
                   bool track_sign);

}  // namespace rewire
