#include "rewire/gf2.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace rewire {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * ((cols + 63) / 64), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (data_[r * words() + (c >> 6)] >> (c & 63)) & 1;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t m = std::uint64_t(1) << (c & 63);
  if (v)
    data_[r * words() + (c >> 6)] |= m;
  else
    data_[r * words() + (c >> 6)] &= ~m;
}

void Gf2Matrix::row_xor(std::size_t dst, std::size_t src) {
  std::size_t w = words();
  for (std::size_t i = 0; i < w; ++i)
    data_[dst * w + i] ^= data_[src * w + i];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::size_t w = words();
  for (std::size_t i = 0; i < w; ++i)
    std::swap(data_[a * w + i], data_[b * w + i]);
}

void Gf2Matrix::apply(const RowOp& op) {
  if (op.kind == RowOp::Swap)
    swap_rows(op.a, op.b);
  else
    row_xor(op.a, op.b);
}

bool Gf2Matrix::row_is_zero(std::size_t r) const {
  std::size_t w = words();
  for (std::size_t i = 0; i < w; ++i)
    if (data_[r * w + i]) return false;
  return true;
}

std::size_t Gf2Matrix::leading_col(std::size_t r) const {
  std::size_t w = words();
  for (std::size_t i = 0; i < w; ++i) {
    std::uint64_t v = data_[r * w + i];
    if (v) return i * 64 + static_cast<std::size_t>(std::countr_zero(v));
  }
  return cols_;
}

std::size_t Gf2Matrix::row_weight(std::size_t r) const {
  std::size_t w = words(), c = 0;
  for (std::size_t i = 0; i < w; ++i) c += std::popcount(data_[r * w + i]);
  return c;
}

Gf2Vec Gf2Matrix::row(std::size_t r) const {
  Gf2Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c);
  return v;
}

void Gf2Matrix::set_row(std::size_t r, const Gf2Vec& v) {
  assert(v.size() == cols_);
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

Gf2Vec Gf2Matrix::mul(const Gf2Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("gf2 dim mismatch");
  Gf2Vec y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint8_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= (get(r, c) & x[c]);
    y[r] = acc;
  }
  return y;
}

std::string Gf2Matrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

RrefResult row_reduce(const Gf2Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Gf2Matrix& a = res.reduced;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t r = pr; r < a.rows(); ++r)
      if (a.get(r, c)) { piv = r; break; }
    if (piv == a.rows()) continue;
    if (piv != pr) {
      a.swap_rows(piv, pr);
      res.ops.push_back({RowOp::Swap, piv, pr});
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != pr && a.get(r, c)) {
        a.row_xor(r, pr);
        res.ops.push_back({RowOp::Add, r, pr});
      }
    }
    res.pivot_cols.push_back(c);
    ++pr;
  }
  res.rank = pr;
  return res;
}

std::size_t gf2_rank(const Gf2Matrix& m) { return row_reduce(m).rank; }

SolveResult solve_gf2(const Gf2Matrix& a, const Gf2Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("gf2 dim mismatch");
  // Augment [A | b] and reduce.
  Gf2Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
    aug.set(r, a.cols(), b[r]);
  }
  RrefResult rr = row_reduce(aug);

  SolveResult out;
  std::vector<std::size_t> pivot_of_col(a.cols(), SIZE_MAX);
  bool augmented_pivot = false;
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
    if (rr.pivot_cols[i] == a.cols())
      augmented_pivot = true;
    else
      pivot_of_col[rr.pivot_cols[i]] = i;
  }
  out.consistent = !augmented_pivot;

  if (out.consistent) {
    out.particular.assign(a.cols(), 0);
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (pivot_of_col[c] != SIZE_MAX)
        out.particular[c] = rr.reduced.get(pivot_of_col[c], a.cols());
  }
  // Nullspace basis: one vector per free column.
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (pivot_of_col[c] != SIZE_MAX) continue;
    Gf2Vec v(a.cols(), 0);
    v[c] = 1;
    for (std::size_t pc = 0; pc < a.cols(); ++pc)
      if (pivot_of_col[pc] != SIZE_MAX)
        v[pc] = rr.reduced.get(pivot_of_col[pc], c);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

Gf2Matrix symplectic_matrix(const std::vector<Pauli>& paulis, std::size_t n) {
  Gf2Matrix m(paulis.size(), 2 * n);
  for (std::size_t r = 0; r < paulis.size(); ++r) {
    if (paulis[r].num_qubits() != n)
      throw std::invalid_argument("pauli length mismatch");
    for (std::size_t q = 0; q < n; ++q) {
      if (paulis[r].x_bit(q)) m.set(r, q, true);
      if (paulis[r].z_bit(q)) m.set(r, n + q, true);
    }
  }
  return m;
}

Gf2Vec symplectic_vector(const Pauli& p) {
  std::size_t n = p.num_qubits();
  Gf2Vec v(2 * n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    v[q] = p.x_bit(q);
    v[n + q] = p.z_bit(q);
  }
  return v;
}

Pauli product_of(const std::vector<Pauli>& basis, const Gf2Vec& combo,
                 std::size_t n) {
  assert(combo.size() == basis.size());
  Pauli p = Pauli::identity(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (combo[i]) p = p.times(basis[i]);
  return p;
}

SpanResult in_span(const Pauli& candidate, const std::vector<Pauli>& basis,
                   bool track_sign) {
  SpanResult out;
  std::size_t n = candidate.num_qubits();
  Gf2Matrix bt = symplectic_matrix(basis, n).transposed();
  SolveResult sol = solve_gf2(bt, symplectic_vector(candidate));
  if (!sol.consistent) return out;
  out.in_span = true;
  out.combo = sol.particular;

  auto phase_delta = [&](const Gf2Vec& combo) {
    Pauli prod = product_of(basis, combo, n);
    return ((candidate.iexp() - prod.iexp()) % 4 + 4) % 4;
  };
  out.phase_exp = phase_delta(out.combo);
  if (!track_sign) return out;

  if (sol.nullspace.empty()) {
    out.sign_matches = true;  // combo unique; phase_exp is exact
    return out;
  }
  if (out.phase_exp == 0) {
    out.sign_matches = true;
    return out;
  }
  // Search the affine solution space for an exact-phase combination.
  std::size_t dim = sol.nullspace.size();
  if (dim <= 16) {
    for (std::uint32_t mask = 1; mask < (1u << dim); ++mask) {
      Gf2Vec combo = sol.particular;
      for (std::size_t j = 0; j < dim; ++j)
        if ((mask >> j) & 1)
          for (std::size_t i = 0; i < combo.size(); ++i)
            combo[i] ^= sol.nullspace[j][i];
      if (phase_delta(combo) == 0) {
        out.combo = combo;
        out.phase_exp = 0;
        out.sign_matches = true;
        return out;
      }
    }
  } else {
    // Desk-scale guard: probe single nullspace flips only.
    for (std::size_t j = 0; j < dim; ++j) {
      Gf2Vec combo = sol.particular;
      for (std::size_t i = 0; i < combo.size(); ++i)
        combo[i] ^= sol.nullspace[j][i];
      if (phase_delta(combo) == 0) {
        out.combo = combo;
        out.phase_exp = 0;
        out.sign_matches = true;
        return out;
      }
    }
  }
  return out;
}

}  // namespace rewire
