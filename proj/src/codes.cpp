#include "rewire/codes.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace rewire {

namespace {

StabilizerCode code_from(std::size_t n, const std::vector<std::string>& gens,
                         std::string label) {
  std::vector<Pauli> ps;
  ps.reserve(gens.size());
  for (const auto& g : gens) ps.push_back(Pauli::parse(g, n));
  return StabilizerCode::make(n, std::move(ps), std::move(label));
}

char flip_letter(char c) { return c == 'Z' ? 'X' : 'Z'; }

}  // namespace

StabilizerCode build_steane() {
  return code_from(7,
                   {
                       "X1 X3 X5 X7",
                       "X2 X3 X6 X7",
                       "X4 X5 X6 X7",
                       "Z1 Z3 Z5 Z7",
                       "Z2 Z3 Z6 Z7",
                       "Z4 Z5 Z6 Z7",
                   },
                   "steane");
}

StabilizerCode build_padded_steane() {
  StabilizerCode c = pad_with_ancillas(build_steane(), 8);
  c.label = "steane15";
  return c;
}

StabilizerCode build_reed_muller() {
  return code_from(15,
                   {
                       "X1 X3 X5 X7 X9 X11 X13 X15",
                       "X2 X3 X6 X7 X10 X11 X14 X15",
                       "X4 X5 X6 X7 X12 X13 X14 X15",
                       "X8 X9 X10 X11 X12 X13 X14 X15",
                       "Z1 Z3 Z5 Z7 Z9 Z11 Z13 Z15",
                       "Z2 Z3 Z6 Z7 Z10 Z11 Z14 Z15",
                       "Z4 Z5 Z6 Z7 Z12 Z13 Z14 Z15",
                       "Z8 Z9 Z10 Z11 Z12 Z13 Z14 Z15",
                       "Z1 Z3 Z9 Z11",
                       "Z2 Z3 Z10 Z11",
                       "Z3 Z7 Z11 Z15",
                       "Z1 Z3 Z5 Z7",
                       "Z2 Z3 Z6 Z7",
                       "Z4 Z5 Z6 Z7",
                   },
                   "reed_muller15");
}

Pauli plaquette_operator(const SurfaceLayout& l, std::size_t pr,
                         std::size_t pc) {
  if (pr >= l.plaq_rows || pc >= l.plaq_cols)
    throw std::out_of_range("plaquette outside the grid");
  const char color = l.plaquette_color(pr, pc);
  Pauli p(l.num_qubits());
  p.set_letter(l.vertex(pr, pc), color);
  p.set_letter(l.vertex(pr, pc + 1), color);
  p.set_letter(l.vertex(pr + 1, pc), color);
  p.set_letter(l.vertex(pr + 1, pc + 1), color);
  return p;
}

StabilizerCode build_surface_code(const SurfaceLayout& layout) {
  const std::size_t R = layout.plaq_rows, C = layout.plaq_cols;
  if (R == 0 || C == 0)
    throw std::invalid_argument("surface layout needs at least one plaquette");
  const std::size_t n = layout.num_qubits();

  std::vector<std::vector<char>> removed(R, std::vector<char>(C, 0));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& d : layout.defects) {
    if (d.row >= R || d.col >= C)
      throw std::invalid_argument("defect outside the plaquette grid");
    if (!seen.insert({d.row, d.col}).second)
      throw std::invalid_argument("overlapping defects");
    if (d.type != layout.plaquette_color(d.row, d.col))
      throw std::invalid_argument("defect type does not match plaquette color");
    removed[d.row][d.col] = 1;
  }

  // Twist generators keyed by the plaquette cell they replace.
  std::map<std::pair<std::size_t, std::size_t>, Pauli> replacement;
  if (layout.twist) {
    const TwistSegment& t = *layout.twist;
    // The wall runs along the bottom boundary so no plaquette sits below
    // the mixed-letter corners.
    if (t.row + 1 != R)
      throw std::invalid_argument(
          "twist segment must run along the bottom plaquette row");
    if (t.col_lo > t.col_hi)
      throw std::invalid_argument("twist segment has an empty column range");
    if (t.col_lo < 2 || t.col_hi + 3 > C)
      throw std::invalid_argument(
          "layout too small: pentagon ends need two columns of clearance");
    for (std::size_t c = t.col_lo - 1; c <= t.col_hi + 1; ++c)
      if (removed[t.row][c])
        throw std::invalid_argument("twist segment overlaps a defect");

    const std::size_t ps = t.row;
    // Rhombus: top corners keep the cell color, bottom corners flip it.
    for (std::size_t c = t.col_lo; c <= t.col_hi; ++c) {
      const char top = layout.plaquette_color(ps, c);
      Pauli p(n);
      p.set_letter(layout.vertex(ps, c), top);
      p.set_letter(layout.vertex(ps, c + 1), top);
      p.set_letter(layout.vertex(ps + 1, c), flip_letter(top));
      p.set_letter(layout.vertex(ps + 1, c + 1), flip_letter(top));
      replacement.emplace(std::make_pair(ps, c), p);
    }
    // Pentagon ends: three corners in the cell color, a Y on the bottom
    // corner facing the wall, the flipped letter on the other bottom
    // corner, plus one cell-colored qubit one step outward.
    {
      const std::size_t cL = t.col_lo - 1;
      const char P = layout.plaquette_color(ps, cL);
      Pauli p(n);
      p.set_letter(layout.vertex(ps, cL), P);
      p.set_letter(layout.vertex(ps, cL + 1), P);
      p.set_letter(layout.vertex(ps + 1, cL - 1), P);
      p.set_letter(layout.vertex(ps + 1, cL), flip_letter(P));
      p.set_letter(layout.vertex(ps + 1, cL + 1), 'Y');
      replacement.emplace(std::make_pair(ps, cL), p);
    }
    {
      const std::size_t cR = t.col_hi + 1;
      const char P = layout.plaquette_color(ps, cR);
      Pauli p(n);
      p.set_letter(layout.vertex(ps, cR), P);
      p.set_letter(layout.vertex(ps, cR + 1), P);
      p.set_letter(layout.vertex(ps + 1, cR), 'Y');
      p.set_letter(layout.vertex(ps + 1, cR + 1), flip_letter(P));
      p.set_letter(layout.vertex(ps + 1, cR + 2), P);
      replacement.emplace(std::make_pair(ps, cR), p);
    }
  }

  std::vector<Pauli> gens;
  gens.reserve(R * C);
  for (std::size_t pr = 0; pr < R; ++pr) {
    for (std::size_t pc = 0; pc < C; ++pc) {
      if (removed[pr][pc]) continue;
      auto it = replacement.find({pr, pc});
      gens.push_back(it != replacement.end()
                         ? it->second
                         : plaquette_operator(layout, pr, pc));
    }
  }

  std::string label = layout.label;
  if (label.empty())
    label = "surface_" + std::to_string(R) + "x" + std::to_string(C);
  return StabilizerCode::make(n, std::move(gens), std::move(label));
}

std::vector<NamedCode> appendix_fixtures() {
  std::vector<NamedCode> out;
  out.push_back({"appc_2q_a", code_from(2, {"Z1"}, "appc_2q_a")});
  out.push_back({"appc_2q_b", code_from(2, {"Z2"}, "appc_2q_b")});
  out.push_back({"appc_3q_a", code_from(3, {"Z1 Z2", "Z3"}, "appc_3q_a")});
  out.push_back({"appc_3q_b", code_from(3, {"Z1", "X2 X3"}, "appc_3q_b")});

  StabilizerCode a = build_steane();
  a.label = "appd_a";
  out.push_back({"appd_a", a});
  out.push_back({"appd_mid", code_from(7,
                                       {
                                           "Z1 Z4 Z5 Z7",
                                           "X1 X2 X5 X6",
                                           "X1 X3 X4 X6",
                                           "Z1 Z3 Z5 Z7",
                                           "Z1 Z2 Z5 Z6",
                                           "Z1 Z3 Z4 Z6",
                                       },
                                       "appd_mid")});
  StabilizerCode b = permute_qubits(build_steane(), {0, 1, 3, 2, 4, 5, 6});
  b.label = "appd_b";
  out.push_back({"appd_b", b});
  return out;
}

std::vector<NamedCode> figure_fixtures() {
  std::vector<NamedCode> out;
  out.push_back({"fig1_left",
                 code_from(7, {"Z1 Z2 Z3 Z4", "Z1 Z2", "Z3", "Y6 Y7"},
                           "fig1_left")});
  out.push_back({"fig1_right",
                 code_from(7, {"Z4 Z5 Z6 Z7", "Z1 Z2", "Z3", "Y6 Y7"},
                           "fig1_right")});
  out.push_back({"fig3_left",
                 code_from(7, {"Z1 Z2 X4 X5", "X2 X3 Z5 Y6 X7"},
                           "fig3_left")});
  // The first generator carries a minus sign so the two panels' generator
  // products agree as signed operators, not just up to phase.
  out.push_back({"fig3_right",
                 code_from(7, {"-Z1 Z2 X4 Y5 Z6", "X2 X3 X6 X7"},
                           "fig3_right")});
  return out;
}

std::vector<NamedCode> fixture_codes() {
  std::vector<NamedCode> out;
  out.push_back({"steane", build_steane()});
  out.push_back({"steane15", build_padded_steane()});
  out.push_back({"reed_muller15", build_reed_muller()});
  for (auto& nc : appendix_fixtures()) out.push_back(std::move(nc));
  for (auto& nc : figure_fixtures()) out.push_back(std::move(nc));
  return out;
}

}  // namespace rewire
