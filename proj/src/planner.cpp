#include "rewire/planner.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace rewire {

Gf2Matrix connectivity_matrix(const std::vector<Pauli>& source,
                              const std::vector<Pauli>& target) {
  Gf2Matrix m(source.size(), target.size());
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j)
      m.set(i, j, !source[i].commutes_with(target[j]));
  return m;
}

namespace {

Gf2Vec xor_vec(Gf2Vec a, const Gf2Vec& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  return a;
}

std::size_t vec_weight(const Gf2Vec& v) {
  std::size_t w = 0;
  for (auto b : v) w += b;
  return w;
}

// Incremental GF(2) row basis for span-membership tests.
class EchelonBasis {
 public:
  // Reduces v against the basis; returns the residue.
  Gf2Vec reduce(Gf2Vec v) const {
    for (const auto& r : rows_) {
      std::size_t lead = leading(r);
      if (lead < v.size() && v[lead]) v = xor_vec(std::move(v), r);
    }
    return v;
  }
  bool contains(const Gf2Vec& v) const {
    return vec_weight(reduce(v)) == 0;
  }
  // Absorbs v; returns false when v was already in the span.
  bool add(const Gf2Vec& v) {
    Gf2Vec res = reduce(v);
    if (vec_weight(res) == 0) return false;
    rows_.push_back(std::move(res));
    std::sort(rows_.begin(), rows_.end(),
              [](const Gf2Vec& a, const Gf2Vec& b) {
                return leading(a) < leading(b);
              });
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  static std::size_t leading(const Gf2Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) return i;
    return v.size();
  }
  std::vector<Gf2Vec> rows_;
};

// ---- affine (weight, body) minimization --------------------------------
//
// Candidates live in the affine space particular + span(nullspace); every
// candidate has a body image in GF(2)^{2n} ((x|z) layout). The key being
// minimized is (Pauli weight of the body, dense-letter order), which is
// blind to phases, so enumeration runs on body vectors only and the caller
// materializes the winner phase-exactly from its combination.

std::size_t body_weight(const Gf2Vec& body, std::size_t n) {
  std::size_t w = 0;
  for (std::size_t q = 0; q < n; ++q) w += body[q] | body[n + q];
  return w;
}

int letter_rank(bool x, bool z) {
  if (x && z) return 2;  // Y
  if (x) return 1;       // X
  if (z) return 3;       // Z
  return 0;              // I
}

// Dense-string order, matching Pauli::body_less (I<X<Y<Z per qubit).
bool body_less(const Gf2Vec& a, const Gf2Vec& b, std::size_t n) {
  for (std::size_t q = 0; q < n; ++q) {
    int ra = letter_rank(a[q], a[n + q]);
    int rb = letter_rank(b[q], b[n + q]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

bool body_key_less(const Gf2Vec& a, const Gf2Vec& b, std::size_t n) {
  std::size_t wa = body_weight(a, n), wb = body_weight(b, n);
  if (wa != wb) return wa < wb;
  return body_less(a, b, n);
}

constexpr std::size_t kAffineEnumCap = 22;

// Minimizes (weight, body) over {particular + subset of basis images}.
// Full Gray-code enumeration up to kAffineEnumCap free dimensions, greedy
// single-flip descent beyond. Returns the selected basis subset.
std::vector<std::size_t> min_affine_subset(const Gf2Vec& particular_body,
                                           const std::vector<Gf2Vec>& images,
                                           std::size_t n) {
  std::size_t dim = images.size();
  if (dim == 0) return {};

  if (dim <= kAffineEnumCap) {
    Gf2Vec cur = particular_body;
    Gf2Vec best = cur;
    std::uint64_t best_gray = 0;
    std::uint64_t total = std::uint64_t(1) << dim;
    for (std::uint64_t i = 1; i < total; ++i) {
      std::size_t flip = static_cast<std::size_t>(std::countr_zero(i));
      cur = xor_vec(std::move(cur), images[flip]);
      if (body_key_less(cur, best, n)) {
        best = cur;
        best_gray = i ^ (i >> 1);
      }
    }
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < dim; ++j)
      if ((best_gray >> j) & 1) subset.push_back(j);
    return subset;
  }

  // Greedy hill-climb: repeatedly take the best improving single flip.
  Gf2Vec cur = particular_body;
  std::vector<std::uint8_t> chosen(dim, 0);
  for (;;) {
    std::size_t best_j = dim;
    Gf2Vec best = cur;
    for (std::size_t j = 0; j < dim; ++j) {
      Gf2Vec cand = xor_vec(Gf2Vec(cur), images[j]);
      if (body_key_less(cand, best, n)) {
        best = std::move(cand);
        best_j = j;
      }
    }
    if (best_j == dim) break;
    cur = best;
    chosen[best_j] ^= 1;
  }
  std::vector<std::size_t> subset;
  for (std::size_t j = 0; j < dim; ++j)
    if (chosen[j]) subset.push_back(j);
  return subset;
}

Pauli pauli_from_body(const Gf2Vec& body, std::size_t n) {
  Pauli p(n);
  for (std::size_t q = 0; q < n; ++q) {
    bool x = body[q], z = body[n + q];
    p.set_letter(q, x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
  }
  return p;
}

// ---- shared planner core ------------------------------------------------

struct DiagCore {
  Gf2Matrix conn;                  // ms x mt
  std::size_t rho = 0;
  std::vector<std::size_t> slots;  // target indices, ascending, size rho
  std::vector<Gf2Vec> ker_src;     // canonical combos over source gens
  std::vector<Gf2Vec> ker_tgt;     // canonical combos over target gens
  std::vector<Gf2Vec> u_combos;    // over source gens, aligned with slots
};

std::vector<Gf2Vec> canonical_nullspace(const Gf2Matrix& a) {
  SolveResult sol = solve_gf2(a, Gf2Vec(a.rows(), 0));
  assert(sol.consistent);
  if (sol.nullspace.empty()) return {};
  Gf2Matrix rows(sol.nullspace.size(), a.cols());
  for (std::size_t i = 0; i < sol.nullspace.size(); ++i)
    rows.set_row(i, sol.nullspace[i]);
  RrefResult rr = row_reduce(rows);
  std::vector<Gf2Vec> out;
  for (std::size_t r = 0; r < rr.rank; ++r) out.push_back(rr.reduced.row(r));
  return out;
}

// Picks the rho target generators kept intact on the diagonal. Nonzero
// connectivity rows are sorted so that heavily connected, heavy, early
// generators come first, and the tail of the list is taken; a repair pass
// swaps span-dependent tail rows for the nearest independent head row of
// matching connectivity weight.
std::vector<std::size_t> select_slots(const Gf2Matrix& mt_rows,
                                      const std::vector<Pauli>& target,
                                      std::size_t rho) {
  struct Row {
    std::size_t t;
    Gf2Vec vec;
    std::size_t lead, conn, pweight;
  };
  std::vector<Row> rows;
  for (std::size_t t = 0; t < mt_rows.rows(); ++t) {
    if (mt_rows.row_is_zero(t)) continue;
    rows.push_back({t, mt_rows.row(t), mt_rows.leading_col(t),
                    mt_rows.row_weight(t), target[t].weight()});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.lead != b.lead) return a.lead < b.lead;
    if (a.conn != b.conn) return a.conn > b.conn;
    if (a.pweight != b.pweight) return a.pweight > b.pweight;
    return a.t > b.t;
  });

  assert(rho <= rows.size());
  std::size_t head = rows.size() - rho;
  for (;;) {
    // Bottom-up scan for the lowest tail row inside the span of rows
    // below it.
    EchelonBasis seen;
    std::size_t bad = rows.size();
    for (std::size_t i = rows.size(); i-- > head;) {
      if (!seen.add(rows[i].vec)) {
        bad = i;
        break;
      }
    }
    if (bad == rows.size()) break;

    EchelonBasis others;  // tail rows except the bad one
    for (std::size_t i = head; i < rows.size(); ++i)
      if (i != bad) others.add(rows[i].vec);

    std::size_t best = rows.size();
    std::size_t best_dconn = 0, best_dist = 0;
    for (std::size_t i = 0; i < head; ++i) {
      if (others.contains(rows[i].vec)) continue;
      std::size_t dconn = rows[i].conn > rows[bad].conn
                              ? rows[i].conn - rows[bad].conn
                              : rows[bad].conn - rows[i].conn;
      std::size_t dist = bad - i;
      if (best == rows.size() || dconn < best_dconn ||
          (dconn == best_dconn && dist < best_dist)) {
        best = i;
        best_dconn = dconn;
        best_dist = dist;
      }
    }
    assert(best != rows.size());  // rank(all rows) = rho guarantees one
    std::swap(rows[best], rows[bad]);
  }

  std::vector<std::size_t> slots;
  for (std::size_t i = head; i < rows.size(); ++i) slots.push_back(rows[i].t);
  std::sort(slots.begin(), slots.end());
  return slots;
}

DiagCore diag_core(const std::vector<Pauli>& source,
                   const std::vector<Pauli>& target, std::size_t n) {
  DiagCore core;
  core.conn = connectivity_matrix(source, target);
  Gf2Matrix mt_rows = core.conn.transposed();
  core.rho = gf2_rank(core.conn);
  core.slots = select_slots(mt_rows, target, core.rho);

  // u-partners: one product of source generators per slot, anticommuting
  // with exactly that slot among the slot set. The solution space is affine;
  // take the lightest representative.
  if (core.rho > 0) {
    Gf2Matrix a(core.rho, source.size());
    for (std::size_t r = 0; r < core.rho; ++r)
      a.set_row(r, mt_rows.row(core.slots[r]));
    Gf2Matrix src_sym = symplectic_matrix(source, n);
    for (std::size_t r = 0; r < core.rho; ++r) {
      Gf2Vec e(core.rho, 0);
      e[r] = 1;
      SolveResult sol = solve_gf2(a, e);
      assert(sol.consistent);  // slot rows are independent
      auto body_of = [&](const Gf2Vec& combo) {
        Gf2Vec body(2 * n, 0);
        for (std::size_t i = 0; i < combo.size(); ++i)
          if (combo[i]) body = xor_vec(std::move(body), src_sym.row(i));
        return body;
      };
      std::vector<Gf2Vec> images;
      images.reserve(sol.nullspace.size());
      for (const auto& nv : sol.nullspace) images.push_back(body_of(nv));
      std::vector<std::size_t> subset =
          min_affine_subset(body_of(sol.particular), images, n);
      Gf2Vec combo = sol.particular;
      for (std::size_t j : subset) combo = xor_vec(std::move(combo),
                                                   sol.nullspace[j]);
      core.u_combos.push_back(std::move(combo));
    }
  }

  core.ker_src = canonical_nullspace(mt_rows);
  core.ker_tgt = canonical_nullspace(core.conn);
  return core;
}

}  // namespace

DiagonalizeResult diagonalize(const std::vector<Pauli>& source,
                              const std::vector<Pauli>& target,
                              std::size_t n) {
  DiagCore core = diag_core(source, target, n);
  DiagonalizeResult out;
  out.source_combos = Gf2Matrix(source.size(), source.size());
  out.target_combos = Gf2Matrix(target.size(), target.size());

  std::size_t r = 0;
  for (const auto& combo : core.ker_src) {
    out.source.push_back(product_of(source, combo, n));
    out.source_combos.set_row(r++, combo);
  }
  for (const auto& combo : core.u_combos) {
    out.source.push_back(product_of(source, combo, n));
    out.source_combos.set_row(r++, combo);
  }

  r = 0;
  for (const auto& combo : core.ker_tgt) {
    out.target.push_back(product_of(target, combo, n));
    out.target_combos.set_row(r++, combo);
  }
  for (std::size_t t : core.slots) {
    Gf2Vec e(target.size(), 0);
    e[t] = 1;
    out.target.push_back(target[t]);
    out.target_combos.set_row(r++, e);
  }

  out.m = connectivity_matrix(out.source, out.target);
  return out;
}

std::optional<Pauli> min_weight_anticommuter(const std::vector<Pauli>& odds,
                                             const std::vector<Pauli>& evens,
                                             std::size_t n) {
  // One linear constraint per operator: the symplectic pairing of g with
  // the unknown (x|z) is 1 for odds, 0 for evens. The functional's row is
  // (z_g | x_g).
  Gf2Matrix a(odds.size() + evens.size(), 2 * n);
  Gf2Vec b(odds.size() + evens.size(), 0);
  std::size_t r = 0;
  auto add = [&](const Pauli& g, bool parity) {
    for (std::size_t q = 0; q < n; ++q) {
      a.set(r, q, g.z_bit(q));
      a.set(r, n + q, g.x_bit(q));
    }
    b[r++] = parity;
  };
  for (const auto& g : odds) add(g, true);
  for (const auto& g : evens) add(g, false);

  SolveResult sol = solve_gf2(a, b);
  if (!sol.consistent) return std::nullopt;
  std::vector<std::size_t> subset =
      min_affine_subset(sol.particular, sol.nullspace, n);
  Gf2Vec body = sol.particular;
  for (std::size_t j : subset) body = xor_vec(std::move(body),
                                              sol.nullspace[j]);
  if (vec_weight(body) == 0) return std::nullopt;  // only the identity fits
  return pauli_from_body(body, n);
}

BlockDecomposition decompose_blocks(const StabilizerCode& s,
                                    const StabilizerCode& t) {
  if (s.k != t.k)
    throw std::invalid_argument("logical counts differ: k=" +
                                std::to_string(s.k) + " vs k=" +
                                std::to_string(t.k));
  BlockDecomposition d;
  d.source = s.n < t.n ? pad_with_ancillas(s, t.n - s.n) : s;
  d.target = t.n < s.n ? pad_with_ancillas(t, s.n - t.n) : t;
  d.n = d.source.n;
  std::size_t n = d.n;
  const auto& sg = d.source.generators;
  const auto& tg = d.target.generators;
  std::size_t m = sg.size();

  DiagCore core = diag_core(sg, tg, n);
  std::size_t p = m - core.rho;  // kernel dimension, both sides

  std::vector<Pauli> ker_src_ops, ker_tgt_ops;
  for (const auto& c : core.ker_src) ker_src_ops.push_back(product_of(sg, c, n));
  for (const auto& c : core.ker_tgt) ker_tgt_ops.push_back(product_of(tg, c, n));

  // Block A: the intersection of the two kernel spans, as a canonical
  // (row-reduced) basis. Pairs (alpha|beta) with alpha.K = beta.K' are the
  // nullspace of the stacked kernel bodies.
  std::vector<Gf2Vec> a_src_combo, a_tgt_combo;  // over original generators
  if (p > 0) {
    Gf2Matrix stacked(2 * p, 2 * n);
    for (std::size_t i = 0; i < p; ++i)
      stacked.set_row(i, symplectic_vector(ker_src_ops[i]));
    for (std::size_t j = 0; j < p; ++j)
      stacked.set_row(p + j, symplectic_vector(ker_tgt_ops[j]));
    SolveResult null = solve_gf2(stacked.transposed(), Gf2Vec(2 * n, 0));

    std::size_t a_dim = null.nullspace.size();
    if (a_dim > 0) {
      // Canonicalize the intersection basis by its body rows, replaying the
      // reduction on the (alpha|beta) selectors.
      Gf2Matrix bodies(a_dim, 2 * n);
      Gf2Matrix selectors(a_dim, 2 * p);
      for (std::size_t i = 0; i < a_dim; ++i) {
        const Gf2Vec& ab = null.nullspace[i];
        Gf2Vec body(2 * n, 0);
        for (std::size_t j = 0; j < p; ++j)
          if (ab[j])
            body = xor_vec(std::move(body),
                           symplectic_vector(ker_src_ops[j]));
        bodies.set_row(i, body);
        selectors.set_row(i, ab);
      }
      RrefResult rr = row_reduce(bodies);
      for (const auto& op : rr.ops) selectors.apply(op);
      assert(rr.rank == a_dim);  // intersection selectors are independent
      for (std::size_t i = 0; i < a_dim; ++i) {
        Gf2Vec ab = selectors.row(i);
        Gf2Vec sc(m, 0), tc(m, 0);
        for (std::size_t j = 0; j < p; ++j) {
          if (ab[j]) sc = xor_vec(std::move(sc), core.ker_src[j]);
          if (ab[p + j]) tc = xor_vec(std::move(tc), core.ker_tgt[j]);
        }
        a_src_combo.push_back(std::move(sc));
        a_tgt_combo.push_back(std::move(tc));
      }
    }
  }
  std::size_t a_dim = a_src_combo.size();
  for (std::size_t i = 0; i < a_dim; ++i) {
    d.block_a.push_back(product_of(sg, a_src_combo[i], n));
    d.block_a_target.push_back(product_of(tg, a_tgt_combo[i], n));
  }

  // Block B: extend the intersection to each full kernel.
  struct Tracked {
    Pauli op;
    Gf2Vec combo;
  };
  auto extend = [&](const std::vector<Pauli>& a_ops,
                    const std::vector<Pauli>& ker_ops,
                    const std::vector<Gf2Vec>& ker_combos) {
    EchelonBasis basis;
    for (const auto& op : a_ops) basis.add(symplectic_vector(op));
    std::vector<Tracked> out;
    for (std::size_t i = 0; i < ker_ops.size(); ++i)
      if (basis.add(symplectic_vector(ker_ops[i])))
        out.push_back({ker_ops[i], ker_combos[i]});
    return out;
  };
  std::vector<Tracked> b_src = extend(d.block_a, ker_src_ops, core.ker_src);
  std::vector<Tracked> b_tgt =
      extend(d.block_a_target, ker_tgt_ops, core.ker_tgt);
  assert(b_src.size() == b_tgt.size());
  auto by_key = [](const Tracked& x, const Tracked& y) {
    if (x.op.weight() != y.op.weight()) return x.op.weight() < y.op.weight();
    return x.op.body_less(y.op);
  };
  std::sort(b_src.begin(), b_src.end(), by_key);
  std::sort(b_tgt.begin(), b_tgt.end(), by_key);
  std::size_t b_dim = b_src.size();

  // Complementary partners, source side first. Each complement anticommutes
  // with its own kernel element and commutes with the rest of that kernel
  // and with the whole opposite code.
  std::vector<Pauli> c_src, c_tgt;
  for (std::size_t j = 0; j < b_dim; ++j) {
    std::vector<Pauli> evens = d.block_a;
    for (std::size_t l = 0; l < b_dim; ++l)
      if (l != j) evens.push_back(b_src[l].op);
    evens.insert(evens.end(), tg.begin(), tg.end());
    auto c = min_weight_anticommuter({b_src[j].op}, evens, n);
    if (!c) throw std::logic_error("no complement for a block-B generator");
    c_src.push_back(*c);
  }
  // Pairwise fix-up: later complements absorb the earlier kernel element.
  for (std::size_t j = 0; j < b_dim; ++j)
    for (std::size_t k = j + 1; k < b_dim; ++k)
      if (!c_src[j].commutes_with(c_src[k]))
        c_src[k] = c_src[k].times(b_src[j].op);

  // Target complements additionally commute with every source complement,
  // keeping the paired products Hermitian.
  for (std::size_t j = 0; j < b_dim; ++j) {
    std::vector<Pauli> evens = d.block_a_target;
    for (std::size_t l = 0; l < b_dim; ++l)
      if (l != j) evens.push_back(b_tgt[l].op);
    evens.insert(evens.end(), sg.begin(), sg.end());
    evens.insert(evens.end(), c_src.begin(), c_src.end());
    auto c = min_weight_anticommuter({b_tgt[j].op}, evens, n);
    if (!c) throw std::logic_error("no complement for a block-B generator");
    c_tgt.push_back(*c);
  }
  for (std::size_t j = 0; j < b_dim; ++j)
    for (std::size_t k = j + 1; k < b_dim; ++k)
      if (!c_tgt[j].commutes_with(c_tgt[k]))
        c_tgt[k] = c_tgt[k].times(b_tgt[j].op);

  // Block C: the slot pairs. A source partner anticommuting with a source
  // complement absorbs that complement's kernel element; slot generators
  // get the mirrored treatment on the target side.
  std::vector<Gf2Vec> u_combos = core.u_combos;
  std::vector<Gf2Vec> t_combos;
  for (std::size_t s_i = 0; s_i < core.rho; ++s_i) {
    Gf2Vec e(m, 0);
    e[core.slots[s_i]] = 1;
    t_combos.push_back(std::move(e));
  }
  for (std::size_t s_i = 0; s_i < core.rho; ++s_i) {
    Pauli u = product_of(sg, u_combos[s_i], n);
    for (std::size_t j = 0; j < b_dim; ++j)
      if (!u.commutes_with(c_src[j]))
        u_combos[s_i] = xor_vec(std::move(u_combos[s_i]), b_src[j].combo);
    Pauli tgt_op = product_of(tg, t_combos[s_i], n);
    for (std::size_t j = 0; j < b_dim; ++j)
      if (!tgt_op.commutes_with(c_tgt[j]))
        t_combos[s_i] = xor_vec(std::move(t_combos[s_i]), b_tgt[j].combo);
  }

  // Assemble [A | B | C] and the combination log over the padded inputs.
  d.source_combos = Gf2Matrix(m, m);
  d.target_combos = Gf2Matrix(m, m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < a_dim; ++i, ++r) {
    d.source_combos.set_row(r, a_src_combo[i]);
    d.target_combos.set_row(r, a_tgt_combo[i]);
    d.source_generators.push_back(d.block_a[i]);
    d.target_generators.push_back(d.block_a_target[i]);
  }
  for (std::size_t j = 0; j < b_dim; ++j, ++r) {
    d.source_combos.set_row(r, b_src[j].combo);
    d.target_combos.set_row(r, b_tgt[j].combo);
    d.block_b.push_back({b_src[j].op, c_src[j]});
    d.block_b_target.push_back({b_tgt[j].op, c_tgt[j]});
    d.source_generators.push_back(b_src[j].op);
    d.target_generators.push_back(b_tgt[j].op);
  }
  for (std::size_t s_i = 0; s_i < core.rho; ++s_i, ++r) {
    Pauli u = product_of(sg, u_combos[s_i], n);
    Pauli tgt_op = product_of(tg, t_combos[s_i], n);
    d.source_combos.set_row(r, u_combos[s_i]);
    d.target_combos.set_row(r, t_combos[s_i]);
    d.block_c.push_back({u, tgt_op});
    d.source_generators.push_back(u);
    d.target_generators.push_back(tgt_op);
  }
  return d;
}

RewirePlan build_plan(const BlockDecomposition& d) {
  RewirePlan plan;
  plan.from_label = d.source.label;
  plan.to_label = d.target.label;
  plan.n = d.n;
  std::size_t a = d.a(), b = d.b();

  std::vector<Pauli> gens = d.source_generators;
  auto snapshot = [&](std::size_t idx) {
    plan.intermediate_codes.push_back(
        StabilizerCode::make(d.n, gens, "S" + std::to_string(idx)));
  };
  snapshot(0);
  std::size_t step = 0;
  auto apply = [&](const Pauli& measure, std::size_t pos) {
    plan.steps.push_back({measure, gens[pos]});
    gens[pos] = measure;
    snapshot(++step);
  };
  for (std::size_t j = 0; j < b; ++j) {
    Pauli pair_product =
        d.block_b[j].complement.times(d.block_b_target[j].complement);
    apply(pair_product, a + j);
    apply(d.block_b_target[j].g, a + j);
  }
  for (std::size_t s = 0; s < d.c(); ++s)
    apply(d.block_c[s].g_target, a + b + s);
  return plan;
}

RewirePlan plan_rewire(const StabilizerCode& s, const StabilizerCode& t) {
  return build_plan(decompose_blocks(s, t));
}

std::string serialize_plan(const RewirePlan& plan) {
  std::ostringstream os;
  os << "from=" << plan.from_label << " to=" << plan.to_label
     << " steps=" << plan.steps.size() << "\n";
  for (const auto& st : plan.steps)
    os << "measure " << st.measure.str() << " correct " << st.correction.str()
       << "\n";
  for (const auto& code : plan.intermediate_codes)
    os << "intermediate:\n" << serialize_code(code);
  return os.str();
}

RewirePlan parse_plan(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty plan");
  RewirePlan plan;
  std::size_t steps = 0;
  {
    auto to_pos = line.find(" to=");
    auto steps_pos = line.find(" steps=");
    if (line.rfind("from=", 0) != 0 || to_pos == std::string::npos ||
        steps_pos == std::string::npos || to_pos > steps_pos)
      throw std::invalid_argument("bad plan header");
    plan.from_label = line.substr(5, to_pos - 5);
    plan.to_label = line.substr(to_pos + 4, steps_pos - (to_pos + 4));
    steps = std::stoul(line.substr(steps_pos + 7));
  }
  for (std::size_t i = 0; i < steps; ++i) {
    if (!std::getline(is, line))
      throw std::invalid_argument("plan ends before step " +
                                  std::to_string(i));
    std::istringstream ls(line);
    std::string kw1, ptext, kw2, ctext;
    if (!(ls >> kw1 >> ptext >> kw2 >> ctext) || kw1 != "measure" ||
        kw2 != "correct")
      throw std::invalid_argument("bad step line: " + line);
    MeasurementStep st{Pauli::parse(ptext), Pauli::parse(ctext)};
    if (st.measure.num_qubits() != st.correction.num_qubits())
      throw std::invalid_argument("step operator sizes differ");
    plan.n = st.measure.num_qubits();
    plan.steps.push_back(std::move(st));
  }
  std::string block;
  bool in_block = false;
  auto flush = [&]() {
    if (!in_block) return;
    plan.intermediate_codes.push_back(parse_code(block));
    plan.n = plan.intermediate_codes.back().n;
    block.clear();
  };
  while (std::getline(is, line)) {
    if (line == "intermediate:") {
      flush();
      in_block = true;
      continue;
    }
    if (line.empty() && !in_block) continue;
    if (!in_block) throw std::invalid_argument("stray plan line: " + line);
    block += line;
    block += "\n";
  }
  flush();
  return plan;
}

RewirePlan load_plan(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_plan(ss.str());
}

void save_plan(const RewirePlan& plan, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << serialize_plan(plan);
}

ConstrainedSearchResult constrained_path_search(const StabilizerCode& s,
                                                const StabilizerCode& t,
                                                const ConstraintSet& cs) {
  if (s.n != t.n || s.k != t.k)
    throw std::invalid_argument("constrained search needs matching n and k");
  if (s.n > 10 && cs.allowed.size() > 16)
    throw std::invalid_argument("constrained search instance too large");
  std::size_t n = s.n;

  ConstrainedSearchResult res;

  // Necessary condition: every target generator must lie in <W u G>.
  std::vector<Pauli> reach = cs.allowed;
  reach.insert(reach.end(), s.generators.begin(), s.generators.end());
  for (const auto& g : t.generators) {
    if (reach.empty() || !in_span(g, reach, false).in_span) {
      res.verdict = ConstrainedSearchResult::NecessaryConditionFailed;
      return res;
    }
  }

  struct Node {
    std::vector<Pauli> gens;
    std::size_t parent;   // index into nodes
    std::size_t depth;
    Pauli measured;       // edge from parent
    std::size_t replaced; // position replaced on that edge
  };
  std::string goal = span_fingerprint(t.generators, n);
  std::vector<Node> nodes;
  std::unordered_set<std::string> visited;
  std::deque<std::size_t> queue;

  auto emit_plan = [&](std::size_t idx) {
    std::vector<std::size_t> path;
    for (std::size_t i = idx; i != SIZE_MAX; i = nodes[i].parent)
      path.push_back(i);
    std::reverse(path.begin(), path.end());
    RewirePlan plan;
    plan.from_label = s.label;
    plan.to_label = t.label;
    plan.n = n;
    for (std::size_t step = 0; step < path.size(); ++step) {
      const Node& node = nodes[path[step]];
      plan.intermediate_codes.push_back(
          StabilizerCode::make(n, node.gens, "S" + std::to_string(step)));
      if (step + 1 < path.size()) {
        const Node& next = nodes[path[step + 1]];
        plan.steps.push_back({next.measured, node.gens[next.replaced]});
      }
    }
    res.verdict = ConstrainedSearchResult::Found;
    res.plan = std::move(plan);
  };

  nodes.push_back({s.generators, SIZE_MAX, 0, Pauli(), 0});
  visited.insert(span_fingerprint(s.generators, n));
  if (span_fingerprint(s.generators, n) == goal) {
    emit_plan(0);
    return res;
  }
  queue.push_back(0);

  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (nodes[cur].depth >= cs.depth_bound) continue;
    for (const auto& w : cs.allowed) {
      if (w.num_qubits() != n) continue;
      // Valid moves replace exactly one anticommuting generator; anything
      // else either measures a logical operator or is a no-op.
      std::size_t hit = SIZE_MAX, hits = 0;
      const auto& gens = nodes[cur].gens;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].commutes_with(w)) {
          hit = i;
          ++hits;
        }
      }
      if (hits != 1) continue;
      std::vector<Pauli> next = gens;
      next[hit] = w;
      std::string fp = span_fingerprint(next, n);
      if (!visited.insert(fp).second) continue;
      nodes.push_back({std::move(next), cur, nodes[cur].depth + 1, w, hit});
      if (fp == goal) {
        emit_plan(nodes.size() - 1);
        return res;
      }
      queue.push_back(nodes.size() - 1);
    }
  }
  res.verdict = ConstrainedSearchResult::NotFoundWithinBound;
  return res;
}

}  // namespace rewire
