#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rewire/code.hpp"
#include "rewire/codes.hpp"
#include "rewire/gf2.hpp"
#include "rewire/pauli.hpp"
#include "rewire/planner.hpp"
#include "test_util.hpp"

using namespace rewire;
using testutil::random_code;

namespace {

StabilizerCode named(const std::vector<NamedCode>& list, const std::string& n) {
  for (const auto& e : list)
    if (e.name == n) return e.code;
  REQUIRE_MESSAGE(false, "missing fixture " << n);
  return {};
}

Pauli P(const char* text, std::size_t n) { return Pauli::parse(text, n); }

Pauli random_pauli(std::mt19937_64& rng, std::size_t n) {
  Pauli p(n);
  for (std::size_t q = 0; q < n; ++q) p.set_letter(q, "IXYZ"[rng() % 4]);
  if (p.is_identity()) p.set_letter(rng() % n, "XYZ"[rng() % 3]);
  return p;
}

}  // namespace

TEST_CASE("connectivity matrix marks anticommuting generator pairs") {
  auto apx = appendix_fixtures();
  StabilizerCode s = named(apx, "appc_3q_a"), t = named(apx, "appc_3q_b");
  Gf2Matrix m = connectivity_matrix(s.generators, t.generators);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 2);
  CHECK(m.get(0, 0) == 0);
  CHECK(m.get(0, 1) == 1);
  CHECK(m.get(1, 0) == 0);
  CHECK(m.get(1, 1) == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + rng() % 5;
    std::vector<Pauli> a, b;
    for (std::size_t i = 0; i < 3; ++i) a.push_back(random_pauli(rng, n));
    for (std::size_t i = 0; i < 4; ++i) b.push_back(random_pauli(rng, n));
    Gf2Matrix c = connectivity_matrix(a, b);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        CHECK(c.get(i, j) == !a[i].commutes_with(b[j]));
  }
}

TEST_CASE("padded Steane vs Reed-Muller connectivity reproduces the published table") {
  StabilizerCode s = build_padded_steane();
  StabilizerCode t = build_reed_muller();
  Gf2Matrix m = connectivity_matrix(s.generators, t.generators);
  REQUIRE(m.rows() == 14);
  REQUIRE(m.cols() == 14);

  std::set<std::pair<std::size_t, std::size_t>> ones = {
      {0, 9},  {1, 8},  {2, 10},
      {6, 3},
      {7, 0},  {7, 3},
      {8, 1},  {8, 3},
      {9, 0},  {9, 1},  {9, 3},
      {10, 2}, {10, 3},
      {11, 0}, {11, 2}, {11, 3},
      {12, 1}, {12, 2}, {12, 3},
      {13, 0}, {13, 1}, {13, 2}, {13, 3}};
  for (std::size_t i = 0; i < 14; ++i)
    for (std::size_t j = 0; j < 14; ++j)
      CHECK(m.get(i, j) == (ones.count({i, j}) > 0));
  // The three rows matching target generators verbatim stay disconnected.
  for (std::size_t j = 0; j < 14; ++j) {
    CHECK(m.get(3, j) == 0);
    CHECK(m.get(4, j) == 0);
    CHECK(m.get(5, j) == 0);
  }
}

TEST_CASE("diagonalize produces a zero block then an identity block") {
  auto apx = appendix_fixtures();
  StabilizerCode s = named(apx, "appc_3q_a"), t = named(apx, "appc_3q_b");
  DiagonalizeResult d = diagonalize(s.generators, t.generators, 3);

  REQUIRE(d.source.size() == 2);
  REQUIRE(d.target.size() == 2);
  CHECK(d.source[0] == P("+ZZZ", 3));  // kernel product first
  CHECK(d.target[0] == P("+ZII", 3));
  CHECK(d.target[1] == P("+IXX", 3));
  CHECK(!d.source[1].commutes_with(d.target[1]));
  CHECK(d.source[1].commutes_with(d.target[0]));

  CHECK(d.m.get(0, 0) == 0);
  CHECK(d.m.get(0, 1) == 0);
  CHECK(d.m.get(1, 0) == 0);
  CHECK(d.m.get(1, 1) == 1);

  // combination rows replay to the transformed generators phase-exactly
  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(product_of(s.generators, d.source_combos.row(r), 3) == d.source[r]);
    CHECK(product_of(t.generators, d.target_combos.row(r), 3) == d.target[r]);
  }
}

TEST_CASE("diagonalize structure holds for random generator sets") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 5;
    std::size_t m = 1 + rng() % (n - 1);
    StabilizerCode a = random_code(rng, n, m, "a");
    StabilizerCode b = random_code(rng, n, m, "b");
    DiagonalizeResult d = diagonalize(a.generators, b.generators, n);

    std::size_t rho = gf2_rank(connectivity_matrix(a.generators, b.generators));
    std::size_t p = m - rho;
    REQUIRE(d.source.size() == m);
    REQUIRE(d.target.size() == m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        CHECK(d.m.get(i, j) == (i == j && i >= p));

    // row operations never change the generated group
    CHECK(span_fingerprint(d.source, n) == span_fingerprint(a.generators, n));
    CHECK(span_fingerprint(d.target, n) == span_fingerprint(b.generators, n));
    for (std::size_t r = 0; r < m; ++r) {
      CHECK(product_of(a.generators, d.source_combos.row(r), n) == d.source[r]);
      CHECK(product_of(b.generators, d.target_combos.row(r), n) == d.target[r]);
    }
  }
}

TEST_CASE("block decomposition of the 3-qubit replacement pair") {
  auto apx = appendix_fixtures();
  StabilizerCode s = named(apx, "appc_3q_a"), t = named(apx, "appc_3q_b");
  BlockDecomposition d = decompose_blocks(s, t);

  CHECK(d.a() == 0);
  CHECK(d.b() == 1);
  CHECK(d.c() == 1);
  CHECK(d.n == 3);

  CHECK(d.block_b[0].g == P("+ZZZ", 3));
  CHECK(d.block_b[0].complement == P("+IIX", 3));
  CHECK(d.block_b_target[0].g == P("+ZII", 3));
  CHECK(d.block_b_target[0].complement == P("+XXI", 3));
  CHECK(d.block_c[0].g == P("+ZZI", 3));
  CHECK(d.block_c[0].g_target == P("+IXX", 3));

  REQUIRE(d.source_generators.size() == 2);
  CHECK(d.source_generators[0] == P("+ZZZ", 3));
  CHECK(d.source_generators[1] == P("+ZZI", 3));
  CHECK(d.target_generators[0] == P("+ZII", 3));
  CHECK(d.target_generators[1] == P("+IXX", 3));

  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(product_of(d.source.generators, d.source_combos.row(r), 3) ==
          d.source_generators[r]);
    CHECK(product_of(d.target.generators, d.target_combos.row(r), 3) ==
          d.target_generators[r]);
  }

  // complement contract: flips its own generator, invisible to the rest
  CHECK(!d.block_b[0].complement.commutes_with(d.block_b[0].g));
  for (const auto& g : t.generators)
    CHECK(d.block_b[0].complement.commutes_with(g));
  CHECK(!d.block_b_target[0].complement.commutes_with(d.block_b_target[0].g));
  for (const auto& g : s.generators)
    CHECK(d.block_b_target[0].complement.commutes_with(g));
  CHECK(d.block_b_target[0].complement.commutes_with(d.block_b[0].complement));
}

TEST_CASE("block decomposition rejects mismatched logical counts") {
  std::mt19937_64 rng(3);
  StabilizerCode a = random_code(rng, 4, 2, "a");
  StabilizerCode b = random_code(rng, 4, 3, "b");
  CHECK_THROWS_AS((void)decompose_blocks(a, b), std::invalid_argument);
}

TEST_CASE("generator replacement plan for the 3-qubit pair, step by step") {
  auto apx = appendix_fixtures();
  RewirePlan plan = plan_rewire(named(apx, "appc_3q_a"), named(apx, "appc_3q_b"));

  CHECK(plan.from_label == "appc_3q_a");
  CHECK(plan.to_label == "appc_3q_b");
  CHECK(plan.n == 3);
  REQUIRE(plan.steps.size() == 3);
  CHECK(plan.steps[0].measure == P("+XXX", 3));
  CHECK(plan.steps[0].correction == P("+ZZZ", 3));
  CHECK(plan.steps[1].measure == P("+ZII", 3));
  CHECK(plan.steps[1].correction == P("+XXX", 3));
  CHECK(plan.steps[2].measure == P("+IXX", 3));
  CHECK(plan.steps[2].correction == P("+ZZI", 3));

  REQUIRE(plan.intermediate_codes.size() == 4);
  std::vector<std::vector<const char*>> chain = {
      {"+ZZZ", "+ZZI"}, {"+XXX", "+ZZI"}, {"+ZII", "+ZZI"}, {"+ZII", "+IXX"}};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& code = plan.intermediate_codes[i];
    CHECK(code.label == "S" + std::to_string(i));
    REQUIRE(code.generators.size() == 2);
    CHECK(code.generators[0] == P(chain[i][0], 3));
    CHECK(code.generators[1] == P(chain[i][1], 3));
  }
}

TEST_CASE("generator replacement plan for the 2-qubit pair") {
  auto apx = appendix_fixtures();
  RewirePlan plan = plan_rewire(named(apx, "appc_2q_a"), named(apx, "appc_2q_b"));

  REQUIRE(plan.steps.size() == 2);
  CHECK(plan.steps[0].measure == P("+XX", 2));
  CHECK(plan.steps[0].correction == P("+ZI", 2));
  CHECK(plan.steps[1].measure == P("+IZ", 2));
  CHECK(plan.steps[1].correction == P("+XX", 2));

  REQUIRE(plan.intermediate_codes.size() == 3);
  CHECK(plan.intermediate_codes[0].generators[0] == P("+ZI", 2));
  CHECK(plan.intermediate_codes[1].generators[0] == P("+XX", 2));
  CHECK(plan.intermediate_codes[2].generators[0] == P("+IZ", 2));
}

TEST_CASE("moving a boundary defect costs one two-step generator swap") {
  auto figs = figure_fixtures();
  StabilizerCode s = named(figs, "fig1_left"), t = named(figs, "fig1_right");
  BlockDecomposition d = decompose_blocks(s, t);
  CHECK(d.a() == 3);
  CHECK(d.b() == 1);
  CHECK(d.c() == 0);

  RewirePlan plan = build_plan(d);
  REQUIRE(plan.steps.size() == 2);
  CHECK(plan.steps[0].measure == P("+IIIXIII", 7));
  CHECK(plan.steps[0].correction == P("+ZZZZIII", 7));
  CHECK(plan.steps[1].measure == P("+IIIZZZZ", 7));
  CHECK(plan.steps[1].correction == P("+IIIXIII", 7));
}

TEST_CASE("moving a twist defect costs a single joint measurement") {
  auto figs = figure_fixtures();
  StabilizerCode s = named(figs, "fig3_left"), t = named(figs, "fig3_right");
  BlockDecomposition d = decompose_blocks(s, t);
  CHECK(d.a() == 1);
  CHECK(d.b() == 0);
  CHECK(d.c() == 1);

  RewirePlan plan = build_plan(d);
  REQUIRE(plan.steps.size() == 1);
  CHECK(plan.steps[0].measure == P("+IXXIIXX", 7));
  CHECK(plan.steps[0].correction == P("+ZZIXXII", 7));
}

TEST_CASE("Steane to Reed-Muller: seven decoupled swaps, no complements needed") {
  StabilizerCode s = build_padded_steane();
  StabilizerCode t = build_reed_muller();
  BlockDecomposition d = decompose_blocks(s, t);
  CHECK(d.a() == 7);
  CHECK(d.b() == 0);
  CHECK(d.c() == 7);

  const auto& sg = s.generators;
  RewirePlan plan = build_plan(d);
  REQUIRE(plan.steps.size() == 7);
  std::vector<std::size_t> measured_idx = {0, 1, 2, 3, 8, 9, 10};
  std::vector<Pauli> corrections = {
      sg[12].times(sg[13]), sg[11].times(sg[13]), sg[9].times(sg[13]),
      sg[6], sg[1], sg[0], sg[2]};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(plan.steps[i].measure == t.generators[measured_idx[i]]);
    CHECK(plan.steps[i].correction == corrections[i]);
  }

  // reverse direction: same cost, the mirrored measured set
  RewirePlan back = plan_rewire(t, s);
  REQUIRE(back.steps.size() == 7);
  std::set<std::string> measured;
  for (const auto& st : back.steps) measured.insert(st.measure.str());
  std::set<std::string> expected;
  for (std::size_t i : {0, 1, 2, 6, 8, 9, 10}) expected.insert(sg[i].str());
  CHECK(measured == expected);
}

TEST_CASE("plan length is 2b+c and each step flips exactly one generator") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 7;
    std::size_t m = 1 + rng() % (n < 8 ? n - 1 : 7);
    StabilizerCode s = random_code(rng, n, m, "s");
    StabilizerCode t = random_code(rng, n, m, "t");

    BlockDecomposition d = decompose_blocks(s, t);
    CHECK(d.a() + d.b() + d.c() == m);
    RewirePlan plan = build_plan(d);
    REQUIRE(plan.steps.size() == 2 * d.b() + d.c());
    REQUIRE(plan.intermediate_codes.size() == plan.steps.size() + 1);

    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
      const auto& before = plan.intermediate_codes[i].generators;
      const auto& after = plan.intermediate_codes[i + 1].generators;
      const Pauli& w = plan.steps[i].measure;
      std::size_t flips = 0, pos = m;
      for (std::size_t j = 0; j < m; ++j)
        if (!before[j].commutes_with(w)) {
          ++flips;
          pos = j;
        }
      CHECK(flips == 1);
      REQUIRE(pos < m);
      CHECK(before[pos] == plan.steps[i].correction);
      CHECK(after[pos] == w);
      for (std::size_t j = 0; j < m; ++j)
        if (j != pos) CHECK(after[j] == before[j]);
      CHECK(validate(plan.intermediate_codes[i + 1]).ok);
    }
    CHECK(span_fingerprint(plan.intermediate_codes.back().generators, n) ==
          span_fingerprint(t.generators, n));
  }
}

TEST_CASE("minimum-weight anticommuter agrees with exhaustive search on 3 qubits") {
  std::mt19937_64 rng(41);
  std::size_t n = 3;

  std::vector<Pauli> all;
  for (int code = 1; code < 64; ++code) {
    Pauli p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, "IXYZ"[(code >> (2 * q)) & 3]);
    all.push_back(p);
  }

  int consistent_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Pauli> odds = {random_pauli(rng, n)};
    std::vector<Pauli> evens;
    for (std::size_t i = 0; i < rng() % 3; ++i) evens.push_back(random_pauli(rng, n));

    std::optional<Pauli> best;
    for (const auto& cand : all) {
      bool ok = true;
      for (const auto& g : odds) ok = ok && !cand.commutes_with(g);
      for (const auto& g : evens) ok = ok && cand.commutes_with(g);
      if (!ok) continue;
      if (!best || cand.weight() < best->weight() ||
          (cand.weight() == best->weight() && cand.body_less(*best)))
        best = cand;
    }

    std::optional<Pauli> got = min_weight_anticommuter(odds, evens, n);
    REQUIRE(got.has_value() == best.has_value());
    if (best) {
      CHECK(*got == *best);
      ++consistent_seen;
    }
  }
  CHECK(consistent_seen > 100);  // the comparison actually exercised solutions

  // contradictory constraints have no solution
  Pauli x1 = Pauli::parse("+XII");
  CHECK(!min_weight_anticommuter({x1}, {x1}, n).has_value());
}

TEST_CASE("removing one plaquette of each color admits a pure-Y joint complement") {
  SurfaceLayout base{2, 3, {}, {}, ""};
  SurfaceLayout left = base, right = base;
  left.defects = {{1, 1, 'Z'}};
  left.label = "left";
  right.defects = {{0, 1, 'X'}};
  right.label = "right";
  StabilizerCode L = build_surface_code(left);
  StabilizerCode R = build_surface_code(right);
  REQUIRE(L.n == 12);
  REQUIRE(L.k == 7);
  REQUIRE(R.k == 7);

  BlockDecomposition d = decompose_blocks(L, R);
  CHECK(d.a() == 4);
  CHECK(d.b() == 1);
  CHECK(d.c() == 0);
  CHECK(d.block_b[0].g == plaquette_operator(left, 0, 1));
  CHECK(d.block_b_target[0].g == plaquette_operator(right, 1, 1));

  // Joint support S with Z^S complementing the X-side hole and X^S the
  // Z-side hole: one parity constraint per plaquette of the matching
  // color, plus an even-|S| row so the combined operator is Hermitian.
  std::size_t n = L.n;
  std::vector<Gf2Vec> rows;
  Gf2Vec rhs;
  auto constrain = [&](const Pauli& g, bool use_x_part, bool want) {
    Gf2Vec r(n, 0);
    for (std::size_t q = 0; q < n; ++q)
      r[q] = use_x_part ? g.x_bit(q) : g.z_bit(q);
    rows.push_back(std::move(r));
    rhs.push_back(want);
  };
  for (const auto& g : L.generators)
    if (g.str().find('X') != std::string::npos)
      constrain(g, true, g == d.block_b[0].g);
  for (const auto& g : R.generators)
    if (g.str().find('Z') != std::string::npos)
      constrain(g, false, g == d.block_b_target[0].g);
  rows.push_back(Gf2Vec(n, 1));
  rhs.push_back(0);

  Gf2Matrix a(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) a.set_row(i, rows[i]);
  SolveResult sol = solve_gf2(a, rhs);
  REQUIRE(sol.consistent);

  Pauli zs(n), xs(n), ys(n);
  std::size_t support = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (sol.particular[q]) {
      zs.set_letter(q, 'Z');
      xs.set_letter(q, 'X');
      ys.set_letter(q, 'Y');
      ++support;
    }
  CHECK(support > 0);
  CHECK(support % 2 == 0);

  // Z^S is a valid complement for the left hole, X^S for the right one.
  CHECK(!zs.commutes_with(d.block_b[0].g));
  for (const auto& g : L.generators)
    if (!(g == d.block_b[0].g)) CHECK(zs.commutes_with(g));
  for (const auto& g : R.generators) CHECK(zs.commutes_with(g));
  CHECK(!xs.commutes_with(d.block_b_target[0].g));
  for (const auto& g : R.generators)
    if (!(g == d.block_b_target[0].g)) CHECK(xs.commutes_with(g));
  for (const auto& g : L.generators) CHECK(xs.commutes_with(g));

  // Their product is the pure-Y string on S.
  CHECK(ys.is_hermitian());
  CHECK(zs.times(xs).same_body(ys));
  CHECK(!ys.commutes_with(d.block_b[0].g));
  CHECK(!ys.commutes_with(d.block_b_target[0].g));
  for (const auto& g : d.block_a) CHECK(ys.commutes_with(g));
}

TEST_CASE("plan text round trips through serialize and parse") {
  auto apx = appendix_fixtures();
  RewirePlan plan = plan_rewire(named(apx, "appc_3q_a"), named(apx, "appc_3q_b"));
  std::string text = serialize_plan(plan);
  RewirePlan back = parse_plan(text);

  CHECK(back.from_label == plan.from_label);
  CHECK(back.to_label == plan.to_label);
  CHECK(back.n == plan.n);
  REQUIRE(back.steps.size() == plan.steps.size());
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    CHECK(back.steps[i].measure == plan.steps[i].measure);
    CHECK(back.steps[i].correction == plan.steps[i].correction);
  }
  REQUIRE(back.intermediate_codes.size() == plan.intermediate_codes.size());
  CHECK(serialize_plan(back) == text);

  auto path = std::filesystem::temp_directory_path() / "rewire_plan_rt.plan";
  save_plan(plan, path.string());
  RewirePlan loaded = load_plan(path.string());
  CHECK(serialize_plan(loaded) == text);
  std::filesystem::remove(path);

  CHECK_THROWS_AS((void)parse_plan(""), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_plan("steps=1 from=a to=b\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_plan("from=a to=b steps=1\n"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_plan("from=a to=b steps=1\nmeasure +XX junk +ZZ\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)parse_plan("from=a to=b steps=0\nxyz\n"),
                  std::invalid_argument);
}

TEST_CASE("constrained search finds a path when the allowed set suffices") {
  auto apx = appendix_fixtures();
  StabilizerCode s = named(apx, "appc_2q_a"), t = named(apx, "appc_2q_b");
  ConstraintSet cs{{P("+XX", 2), P("+IZ", 2)}, 8};
  ConstrainedSearchResult res = constrained_path_search(s, t, cs);

  REQUIRE(res.verdict == ConstrainedSearchResult::Found);
  REQUIRE(res.plan.has_value());
  REQUIRE(res.plan->steps.size() == 2);
  CHECK(res.plan->steps[0].measure == P("+XX", 2));
  CHECK(res.plan->steps[0].correction == P("+ZI", 2));
  CHECK(res.plan->steps[1].measure == P("+IZ", 2));
  CHECK(res.plan->steps[1].correction == P("+XX", 2));
  REQUIRE(res.plan->intermediate_codes.size() == 3);
  CHECK(span_fingerprint(res.plan->intermediate_codes.back().generators, 2) ==
        span_fingerprint(t.generators, 2));
}

TEST_CASE("constrained search separates definitive no from depth exhaustion") {
  auto apx = appendix_fixtures();
  StabilizerCode s = named(apx, "appc_2q_a"), t = named(apx, "appc_2q_b");

  // target generator outside <W u G>: no sequence can ever work
  ConstraintSet poor{{P("+ZI", 2)}, 8};
  CHECK(constrained_path_search(s, t, poor).verdict ==
        ConstrainedSearchResult::NecessaryConditionFailed);

  // reachable in principle, but not within a zero-step budget
  ConstraintSet shallow{{P("+XX", 2), P("+IZ", 2)}, 0};
  CHECK(constrained_path_search(s, t, shallow).verdict ==
        ConstrainedSearchResult::NotFoundWithinBound);

  // identical endpoints succeed with an empty plan regardless of W
  ConstrainedSearchResult same = constrained_path_search(s, s, {{}, 8});
  REQUIRE(same.verdict == ConstrainedSearchResult::Found);
  CHECK(same.plan->steps.empty());
  REQUIRE(same.plan->intermediate_codes.size() == 1);

  CHECK_THROWS_AS(
      (void)constrained_path_search(s, named(apx, "appc_3q_b"), {{}, 8}),
      std::invalid_argument);
}

TEST_CASE("constrained search refuses oversized instances") {
  std::vector<Pauli> gens;
  for (std::size_t q = 0; q < 10; ++q) gens.push_back(Pauli::single(11, q, 'Z'));
  StabilizerCode big = StabilizerCode::make(11, gens, "big");
  ConstraintSet cs;
  for (std::size_t q = 0; q < 11; ++q) cs.allowed.push_back(Pauli::single(11, q, 'X'));
  for (std::size_t q = 0; q < 6; ++q) cs.allowed.push_back(Pauli::single(11, q, 'Y'));
  REQUIRE(cs.allowed.size() == 17);
  CHECK_THROWS_AS((void)constrained_path_search(big, big, cs),
                  std::invalid_argument);
}
