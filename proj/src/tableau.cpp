#include "rewire/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rewire/planner.hpp"

namespace rewire {

namespace {

constexpr std::size_t kNoPivot = std::numeric_limits<std::size_t>::max();

bool anticommutes(const Pauli& a, const Pauli& b) {
  return !a.commutes_with(b);
}

// Letter-copy into a wider register, sign preserved.
Pauli embed(const Pauli& p, std::size_t n_total) {
  Pauli r(n_total);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    char c = p.letter(q);
    if (c != 'I') r.set_letter(q, c);
  }
  if (p.sign() < 0) r = r.negated();
  return r;
}

// Drop trailing ancilla qubits; p must act trivially on them.
Pauli restrict_front(const Pauli& p, std::size_t n) {
  Pauli r(n);
  for (std::size_t q = 0; q < n; ++q) {
    char c = p.letter(q);
    if (c != 'I') r.set_letter(q, c);
  }
  if (p.sign() < 0) r = r.negated();
  return r;
}

// Shared measurement core. Returns the outcome; *pivot_out is the stab row
// index that got replaced, or kNoPivot when the outcome was deterministic.
// `forced` overrides the random branch without consuming the generator.
int measure_core(StabilizerState& state, const Pauli& p,
                 std::optional<int> forced, std::size_t* pivot_out) {
  if (p.num_qubits() != state.n)
    throw std::invalid_argument("measurement operator size mismatch");
  if (!p.is_hermitian())
    throw std::invalid_argument("measurement of a non-Hermitian operator");

  std::size_t pivot = kNoPivot;
  for (std::size_t i = 0; i < state.n; ++i) {
    if (anticommutes(state.stab[i], p)) {
      pivot = i;
      break;
    }
  }

  if (pivot == kNoPivot) {
    // p commutes with the full stabilizer group, so it lies in it up to
    // sign; the destabilizer pattern names the exact combination.
    Pauli prod = Pauli::identity(state.n);
    for (std::size_t i = 0; i < state.n; ++i)
      if (anticommutes(state.destab[i], p)) prod = prod.times(state.stab[i]);
    assert(prod.same_body(p));
    if (pivot_out) *pivot_out = kNoPivot;
    return prod == p ? +1 : -1;
  }

  const Pauli old = state.stab[pivot];
  for (std::size_t i = 0; i < state.n; ++i) {
    if (i != pivot && anticommutes(state.stab[i], p))
      state.stab[i] = state.stab[i].times(old);
    if (i != pivot && anticommutes(state.destab[i], p))
      state.destab[i] = state.destab[i].times(old);
  }
  state.destab[pivot] = old;

  int outcome;
  if (forced) {
    outcome = *forced;
  } else {
    outcome = (state.rng() & 1) ? -1 : +1;
  }
  state.stab[pivot] = outcome < 0 ? p.negated() : p;
  if (pivot_out) *pivot_out = pivot;
  return outcome;
}

}  // namespace

StabilizerState StabilizerState::zero_state(std::size_t n,
                                            std::uint64_t seed) {
  StabilizerState s;
  s.n = n;
  s.stab.reserve(n);
  s.destab.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    s.stab.push_back(Pauli::single(n, q, 'Z'));
    s.destab.push_back(Pauli::single(n, q, 'X'));
  }
  s.rng_seed = seed;
  s.rng.seed(seed);
  return s;
}

void StabilizerState::reseed(std::uint64_t seed) {
  rng_seed = seed;
  rng.seed(seed);
}

void StabilizerState::apply_h(std::size_t q) {
  auto conj = [q](Pauli& p) {
    switch (p.letter(q)) {
      case 'X': p.set_letter(q, 'Z'); break;
      case 'Z': p.set_letter(q, 'X'); break;
      case 'Y': p = p.negated(); break;
      default: break;
    }
  };
  for (auto& r : stab) conj(r);
  for (auto& r : destab) conj(r);
}

void StabilizerState::apply_s(std::size_t q) {
  auto conj = [q](Pauli& p) {
    switch (p.letter(q)) {
      case 'X': p.set_letter(q, 'Y'); break;
      case 'Y': p.set_letter(q, 'X'); p = p.negated(); break;
      default: break;
    }
  };
  for (auto& r : stab) conj(r);
  for (auto& r : destab) conj(r);
}

void StabilizerState::apply_sdg(std::size_t q) {
  auto conj = [q](Pauli& p) {
    switch (p.letter(q)) {
      case 'X': p.set_letter(q, 'Y'); p = p.negated(); break;
      case 'Y': p.set_letter(q, 'X'); break;
      default: break;
    }
  };
  for (auto& r : stab) conj(r);
  for (auto& r : destab) conj(r);
}

void StabilizerState::apply_cx(std::size_t control, std::size_t target) {
  // In i^p X^x Z^z storage the phase exponent is untouched: the only
  // letter products CX creates are squares, which cancel without sign.
  auto conj = [control, target](Pauli& p) {
    bool xc = p.x_bit(control), zt = p.z_bit(target);
    if (xc) p.set_x(target, !p.x_bit(target));
    if (zt) p.set_z(control, !p.z_bit(control));
  };
  for (auto& r : stab) conj(r);
  for (auto& r : destab) conj(r);
}

bool StabilizerState::invariants_hold() const {
  if (stab.size() != n || destab.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!stab[i].is_hermitian() || !destab[i].is_hermitian()) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!stab[i].commutes_with(stab[j])) return false;
      if (!destab[i].commutes_with(destab[j])) return false;
      bool want_anti = (i == j);
      if (destab[i].commutes_with(stab[j]) == want_anti) return false;
    }
  }
  return true;
}

std::optional<int> stabilizer_eigenvalue(const StabilizerState& state,
                                         const Pauli& p) {
  if (p.num_qubits() != state.n)
    throw std::invalid_argument("operator size mismatch");
  if (!p.is_hermitian())
    throw std::invalid_argument("eigenvalue of a non-Hermitian operator");
  for (std::size_t i = 0; i < state.n; ++i)
    if (anticommutes(state.stab[i], p)) return std::nullopt;
  Pauli prod = Pauli::identity(state.n);
  for (std::size_t i = 0; i < state.n; ++i)
    if (anticommutes(state.destab[i], p)) prod = prod.times(state.stab[i]);
  assert(prod.same_body(p));
  return prod == p ? +1 : -1;
}

int measure(StabilizerState& state, const Pauli& p) {
  return measure_core(state, p, std::nullopt, nullptr);
}

int measure_postselect(StabilizerState& state, const Pauli& p, int desired) {
  if (desired != +1 && desired != -1)
    throw std::invalid_argument("desired outcome must be +1 or -1");
  return measure_core(state, p, desired, nullptr);
}

void apply_pauli(StabilizerState& state, const Pauli& p) {
  if (p.num_qubits() != state.n)
    throw std::invalid_argument("operator size mismatch");
  for (auto& r : state.stab)
    if (anticommutes(r, p)) r = r.negated();
  for (auto& r : state.destab)
    if (anticommutes(r, p)) r = r.negated();
}

StabilizerState prepare_codespace(const StabilizerCode& code,
                                  const std::vector<Pauli>& fixings,
                                  std::uint64_t seed) {
  for (std::size_t i = 0; i < fixings.size(); ++i) {
    for (const auto& g : code.generators)
      if (anticommutes(fixings[i], g))
        throw std::invalid_argument(
            "logical fixing anticommutes with a generator");
    for (std::size_t j = i + 1; j < fixings.size(); ++j)
      if (anticommutes(fixings[i], fixings[j]))
        throw std::invalid_argument("logical fixings must commute");
  }

  StabilizerState state = StabilizerState::zero_state(code.n, seed);
  auto fix = [&state](const Pauli& op) {
    std::size_t pivot = kNoPivot;
    int outcome = measure_core(state, op, std::nullopt, &pivot);
    if (outcome < 0) {
      if (pivot == kNoPivot)
        throw std::invalid_argument(
            "operator contradicts an earlier generator or fixing");
      // The fresh destabilizer is the replaced row: it stabilized the
      // pre-measurement state and anticommutes only with row `pivot`, so
      // applying it flips exactly this outcome.
      apply_pauli(state, state.destab[pivot]);
    }
  };
  for (const auto& g : code.generators) fix(g);
  for (const auto& f : fixings) fix(f);
  assert(state.invariants_hold());
  return state;
}

MeasurementRecord apply_rewire_step(StabilizerState& state,
                                    const MeasurementStep& step,
                                    std::size_t step_index) {
  auto ev = stabilizer_eigenvalue(state, step.correction);
  if (!ev || *ev != +1)
    throw std::invalid_argument(
        "rewire step precondition violated: the replaced generator does "
        "not stabilize the state at +1");
  MeasurementRecord rec;
  rec.step = step_index;
  rec.op = step.measure;
  rec.outcome = measure(state, step.measure);
  rec.corrected = rec.outcome < 0;
  if (rec.corrected) apply_pauli(state, step.correction);
  return rec;
}

ExecutionResult execute_plan(StabilizerState& state, const RewirePlan& plan,
                             const std::vector<Pauli>& track) {
  if (!plan.intermediate_codes.empty()) {
    for (const auto& g : plan.intermediate_codes.front().generators) {
      auto ev = stabilizer_eigenvalue(state, g);
      if (!ev || *ev != +1)
        throw std::invalid_argument(
            "state is not stabilized by the plan's initial code");
    }
  }
  ExecutionResult res;
  res.transported = track;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const MeasurementStep& step = plan.steps[i];
    res.records.push_back(apply_rewire_step(state, step, i));
    // Step unitary U = (1 + g_new g_old)/sqrt(2); operators anticommuting
    // with g_new g_old pick up the factor g_old g_new, phase-exactly.
    for (auto& sigma : res.transported) {
      bool flips = anticommutes(sigma, step.measure) !=
                   anticommutes(sigma, step.correction);
      if (flips) sigma = sigma.times(step.correction).times(step.measure);
    }
  }
  return res;
}

bool LogicalAction::is_identity() const {
  if (symplectic != Gf2Matrix::identity(symplectic.rows())) return false;
  for (int s : signs)
    if (s != +1) return false;
  return true;
}

LogicalAction extract_logical_action(const StabilizerCode& before,
                                     const StabilizerCode& after,
                                     const std::vector<Pauli>& transported) {
  std::size_t k = before.logicals.size();
  if (k == 0 || after.logicals.size() != k)
    throw std::invalid_argument(
        "both codes must carry the same number of logical pairs");
  if (transported.size() != 2 * k)
    throw std::invalid_argument(
        "expected one transported operator per logical (X block then Z)");

  std::vector<Pauli> basis;
  basis.reserve(2 * k + after.generators.size());
  for (const auto& pr : after.logicals) basis.push_back(pr.first);
  for (const auto& pr : after.logicals) basis.push_back(pr.second);
  for (const auto& g : after.generators) basis.push_back(g);

  LogicalAction act;
  act.symplectic = Gf2Matrix(2 * k, 2 * k);
  act.signs.resize(2 * k, +1);
  for (std::size_t i = 0; i < 2 * k; ++i) {
    SpanResult sr = in_span(transported[i], basis, /*track_sign=*/false);
    if (!sr.in_span)
      throw std::runtime_error(
          "transported operator left the span of the target logicals and "
          "stabilizers");
    for (std::size_t c = 0; c < 2 * k; ++c)
      act.symplectic.set(i, c, sr.combo[c] != 0);
    // Sign relative to the +1 Hermitian form of the selected monomial;
    // independent of the product order inside the monomial.
    Pauli monomial = product_of(basis, sr.combo, after.n).abs();
    if (transported[i] == monomial) {
      act.signs[i] = +1;
    } else if (transported[i] == monomial.negated()) {
      act.signs[i] = -1;
    } else {
      throw std::logic_error("transported operator mismatches its monomial");
    }
  }
  return act;
}

CatResult cat_state_measure(StabilizerState& state, const Pauli& p,
                            const CatOptions& opts) {
  if (p.num_qubits() != state.n)
    throw std::invalid_argument("operator size mismatch");
  if (!p.is_hermitian())
    throw std::invalid_argument("cat measurement of a non-Hermitian operator");
  if (p.weight() == 0)
    throw std::invalid_argument("cat measurement needs a non-trivial support");
  if (opts.reseed) state.reseed(*opts.reseed);

  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < state.n; ++q)
    if (p.letter(q) != 'I') support.push_back(q);
  const std::size_t w = support.size();
  const std::size_t n = state.n;
  const std::size_t nt = n + w;

  StabilizerState ext;
  ext.n = nt;
  ext.rng_seed = state.rng_seed;
  ext.rng = state.rng;  // continue the caller's stream
  for (std::size_t i = 0; i < n; ++i) {
    ext.stab.push_back(embed(state.stab[i], nt));
    ext.destab.push_back(embed(state.destab[i], nt));
  }
  for (std::size_t j = 0; j < w; ++j) {
    ext.stab.push_back(Pauli::single(nt, n + j, 'Z'));
    ext.destab.push_back(Pauli::single(nt, n + j, 'X'));
  }

  // GHZ chain on the ancillas.
  ext.apply_h(n);
  for (std::size_t j = 1; j < w; ++j) ext.apply_cx(n + j - 1, n + j);

  // One controlled letter per support qubit; ancilla j touches only
  // support[j], so a single ancilla fault reaches a single data qubit.
  for (std::size_t j = 0; j < w; ++j) {
    if (opts.inject && opts.inject->first == j)
      apply_pauli(ext, Pauli::single(nt, n + j, opts.inject->second));
    std::size_t q = support[j];
    switch (p.letter(q)) {
      case 'X':
        ext.apply_cx(n + j, q);
        break;
      case 'Z':
        ext.apply_h(q);
        ext.apply_cx(n + j, q);
        ext.apply_h(q);
        break;
      case 'Y':
        ext.apply_sdg(q);
        ext.apply_cx(n + j, q);
        ext.apply_s(q);
        break;
      default:
        break;
    }
  }

  CatResult res;
  int parity = +1;
  for (std::size_t j = 0; j < w; ++j) {
    ext.apply_h(n + j);
    int o = measure(ext, Pauli::single(nt, n + j, 'Z'));
    res.ancilla_outcomes.push_back(o);
    parity *= o;
  }
  res.outcome = parity * p.sign();

  // Ancillas are now in Z product states: no stabilizer row carries
  // ancilla X support (it would anticommute with the measured +-Z rows).
  // Eliminate ancilla Z columns and drop the pivots; the survivors
  // stabilize the data register alone.
  std::vector<Pauli> rows = ext.stab;
  for (std::size_t j = 0; j < w; ++j) {
    std::size_t col = n + j;
    std::size_t pivot = kNoPivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(!rows[i].x_bit(col));
      if (rows[i].z_bit(col)) {
        pivot = i;
        break;
      }
    }
    assert(pivot != kNoPivot);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != pivot && rows[i].z_bit(col)) rows[i] = rows[i].times(rows[pivot]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
  }
  assert(rows.size() == n);

  StabilizerState fresh = StabilizerState::zero_state(n, state.rng_seed);
  fresh.rng = ext.rng;
  std::vector<Pauli> installed;
  for (const auto& r : rows) {
    Pauli data_row = restrict_front(r, n);
    std::size_t pivot = kNoPivot;
    int out = measure_core(fresh, data_row, +1, &pivot);
    if (out != +1) {
      // Deterministic -1: the value came from leftover zero-state rows, not
      // from the rows installed so far (those are mutually consistent).
      // Flip it without touching the installed ones.
      auto d = min_weight_anticommuter({data_row}, installed, n);
      if (!d) throw std::logic_error("inconsistent ancilla discard");
      apply_pauli(fresh, *d);
    }
    installed.push_back(data_row);
  }
  state = std::move(fresh);
  assert(state.invariants_hold());
  return res;
}

namespace {

using Cx = std::complex<double>;
using CMat = std::vector<std::vector<Cx>>;

CMat cmat_identity(std::size_t dim) {
  CMat m(dim, std::vector<Cx>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

CMat kron(const CMat& a, const CMat& b) {
  std::size_t ar = a.size(), br = b.size();
  CMat m(ar * br, std::vector<Cx>(ar * br, 0.0));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ar; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < br; ++l)
          m[i * br + k][j * br + l] = a[i][j] * b[k][l];
  return m;
}

CMat cmat_mul(const CMat& a, const CMat& b) {
  std::size_t dim = a.size();
  CMat m(dim, std::vector<Cx>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[i][k] == Cx(0.0)) continue;
      for (std::size_t j = 0; j < dim; ++j) m[i][j] += a[i][k] * b[k][j];
    }
  return m;
}

CMat cmat_dagger(const CMat& a) {
  std::size_t dim = a.size();
  CMat m(dim, std::vector<Cx>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m[i][j] = std::conj(a[j][i]);
  return m;
}

bool cmat_close(const CMat& a, const CMat& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
  return true;
}

// Dense form of i^p prod X^x Z^z, exact for any phase exponent.
CMat pauli_matrix(const Pauli& p) {
  const CMat kI = {{1, 0}, {0, 1}};
  const CMat kX = {{0, 1}, {1, 0}};
  const CMat kZ = {{1, 0}, {0, -1}};
  const CMat kXZ = {{0, -1}, {1, 0}};  // X*Z
  CMat m = {{1}};
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    bool x = p.x_bit(q), z = p.z_bit(q);
    m = kron(m, x ? (z ? kXZ : kX) : (z ? kZ : kI));
  }
  static const Cx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Cx ph = kPhase[p.iexp() & 3];
  for (auto& row : m)
    for (auto& v : row) v *= ph;
  return m;
}

Pauli conj_rule(const Pauli& sigma, const Pauli& g, const Pauli& gp) {
  bool flips = sigma.commutes_with(g) != sigma.commutes_with(gp);
  return flips ? sigma.times(g).times(gp) : sigma;
}

Pauli random_pauli(std::mt19937_64& rng, std::size_t n) {
  static const char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  Pauli p(n);
  for (std::size_t q = 0; q < n; ++q) {
    char c = kLetters[rng() & 3];
    if (c != 'I') p.set_letter(q, c);
  }
  if (rng() & 1) p = p.negated();
  return p;
}

}  // namespace

UnitaryReport verify_unitary_properties(const Pauli& g, const Pauli& gp) {
  if (g.num_qubits() != gp.num_qubits())
    throw std::invalid_argument("operator size mismatch");
  if (!g.is_hermitian() || !gp.is_hermitian())
    throw std::invalid_argument("both operators must be Hermitian");
  if (g.commutes_with(gp))
    throw std::invalid_argument(
        "commuting operators define no replacement unitary");

  UnitaryReport rep;
  const std::size_t n = g.num_qubits();

  if (conj_rule(g, g, gp) != gp)
    rep.fail("conjugation does not map the old generator to the new one");
  if (conj_rule(gp, g, gp) != g.negated())
    rep.fail("conjugation does not map the new generator to minus the old");
  Pauli a = gp.times(g);
  if (!(a.times(a).is_identity() && a.times(a).iexp() == 2))
    rep.fail("g'g must square to -1");

  std::mt19937_64 rng(0x7ab1eau);
  for (int t = 0; t < 32; ++t) {
    Pauli s1 = random_pauli(rng, n), s2 = random_pauli(rng, n);
    Pauli i1 = conj_rule(s1, g, gp), i2 = conj_rule(s2, g, gp);
    if (conj_rule(s1.times(s2), g, gp) != i1.times(i2)) {
      rep.fail("conjugation is not multiplicative on " + s1.str() + ", " +
               s2.str());
      break;
    }
    if (s1.commutes_with(s2) != i1.commutes_with(i2)) {
      rep.fail("conjugation broke a commutation relation");
      break;
    }
  }

  if (n <= 3) {
    const double tol = 1e-10;
    std::size_t dim = std::size_t(1) << n;
    CMat mg = pauli_matrix(g), mgp = pauli_matrix(gp);
    CMat u = cmat_mul(mgp, mg);
    const double inv_sqrt2 = 0.7071067811865475244;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) u[i][j] *= inv_sqrt2;
      u[i][i] += inv_sqrt2;
    }
    CMat udag = cmat_dagger(u);
    if (!cmat_close(cmat_mul(u, udag), cmat_identity(dim), tol))
      rep.fail("dense check: U is not unitary");
    if (!cmat_close(cmat_mul(u, cmat_mul(mg, udag)), mgp, tol))
      rep.fail("dense check: U g U^dag != g'");
    for (int t = 0; t < 20; ++t) {
      Pauli s = random_pauli(rng, n);
      CMat lhs = cmat_mul(u, cmat_mul(pauli_matrix(s), udag));
      if (!cmat_close(lhs, pauli_matrix(conj_rule(s, g, gp)), tol)) {
        rep.fail("dense check: conjugation rule mismatch on " + s.str());
        break;
      }
    }
  }
  return rep;
}

std::string canonical_tableau(const StabilizerState& state) {
  std::vector<Pauli> rows = state.stab;
  const std::size_t n = state.n;
  std::size_t r = 0;
  auto bit = [n](const Pauli& p, std::size_t col) {
    return col < n ? p.x_bit(col) : p.z_bit(col - n);
  };
  for (std::size_t col = 0; col < 2 * n && r < rows.size(); ++col) {
    std::size_t pivot = kNoPivot;
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (bit(rows[i], col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == kNoPivot) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && bit(rows[i], col)) rows[i] = rows[i].times(rows[r]);
    ++r;
  }
  std::ostringstream os;
  for (const auto& row : rows) os << row.str() << "\n";
  return os.str();
}

std::string serialize_transcript(const std::vector<MeasurementRecord>& records,
                                 std::uint64_t seed) {
  std::ostringstream os;
  os << "seed=" << seed << "\n";
  for (const auto& rec : records) {
    os << "step=" << rec.step << " op=" << rec.op.str()
       << " outcome=" << (rec.outcome < 0 ? "-1" : "+1")
       << " corrected=" << (rec.corrected ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace rewire
