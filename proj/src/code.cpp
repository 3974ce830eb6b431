#include "rewire/code.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rewire {

StabilizerCode StabilizerCode::make(std::size_t n,
                                    std::vector<Pauli> generators,
                                    std::string label) {
  StabilizerCode c;
  c.n = n;
  if (generators.size() > n)
    throw std::invalid_argument("more generators than qubits");
  c.k = n - generators.size();
  c.generators = std::move(generators);
  c.label = std::move(label);
  for (const auto& g : c.generators)
    if (g.num_qubits() != n)
      throw std::invalid_argument("generator length mismatch");
  return c;
}

ValidationReport validate(const StabilizerCode& code) {
  ValidationReport rep;
  const auto& g = code.generators;
  if (code.k != code.n - g.size())
    rep.fail("k=" + std::to_string(code.k) + " inconsistent with n-" +
             std::to_string(g.size()) + " generators");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].num_qubits() != code.n)
      rep.fail("generator " + std::to_string(i) + " has wrong qubit count");
    if (!g[i].is_hermitian())
      rep.fail("generator " + std::to_string(i) + " is not Hermitian");
    if (g[i].is_identity())
      rep.fail("generator " + std::to_string(i) + " is the identity");
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!g[i].commutes_with(g[j]))
        rep.fail("generators " + std::to_string(i) + " and " +
                 std::to_string(j) + " anticommute");
  if (gf2_rank(symplectic_matrix(g, code.n)) != g.size())
    rep.fail("generators are linearly dependent (rank deficient)");

  if (!code.logicals.empty()) {
    if (code.logicals.size() != code.k)
      rep.fail("expected " + std::to_string(code.k) + " logical pairs");
    std::vector<Pauli> flat;
    for (const auto& [lx, lz] : code.logicals) {
      flat.push_back(lx);
      flat.push_back(lz);
    }
    for (std::size_t a = 0; a < flat.size(); ++a) {
      for (std::size_t i = 0; i < g.size(); ++i)
        if (!flat[a].commutes_with(g[i]))
          rep.fail("logical " + std::to_string(a) +
                   " anticommutes with generator " + std::to_string(i));
      if (in_span(flat[a], g, false).in_span)
        rep.fail("logical " + std::to_string(a) + " lies in stabilizer span");
      for (std::size_t b = a + 1; b < flat.size(); ++b) {
        bool partners = (a / 2 == b / 2);
        bool commute = flat[a].commutes_with(flat[b]);
        if (partners && commute)
          rep.fail("logical pair " + std::to_string(a / 2) +
                   " does not anticommute");
        if (!partners && !commute)
          rep.fail("logicals " + std::to_string(a) + " and " +
                   std::to_string(b) + " anticommute");
      }
    }
  }
  return rep;
}

std::vector<std::pair<Pauli, Pauli>> compute_logicals(
    const StabilizerCode& code) {
  ValidationReport rep = validate(code);
  if (!rep.ok)
    throw std::invalid_argument("compute_logicals on invalid code: " +
                                rep.problems.front());
  std::size_t n = code.n;
  // Centralizer: vectors v with <v, g> = 0 for every generator, where the
  // symplectic product pairs x against z. Rows (gz|gx) turn that into a
  // plain linear system.
  Gf2Matrix sys(code.generators.size(), 2 * n);
  for (std::size_t r = 0; r < code.generators.size(); ++r) {
    const Pauli& g = code.generators[r];
    for (std::size_t q = 0; q < n; ++q) {
      if (g.z_bit(q)) sys.set(r, q, true);
      if (g.x_bit(q)) sys.set(r, n + q, true);
    }
  }
  SolveResult cen = solve_gf2(sys, Gf2Vec(code.generators.size(), 0));

  auto vec_to_pauli = [n](const Gf2Vec& v) {
    Pauli p(n);
    for (std::size_t q = 0; q < n; ++q) {
      if (v[q]) p.set_x(q, true);
      if (v[n + q]) p.set_z(q, true);
    }
    return p.abs();
  };

  // Keep centralizer vectors independent of the stabilizer span; the RREF
  // nullspace basis order makes the choice canonical.
  std::vector<Pauli> chosen;
  std::vector<Pauli> span_basis = code.generators;
  for (const auto& v : cen.nullspace) {
    Pauli p = vec_to_pauli(v);
    if (!in_span(p, span_basis, false).in_span) {
      chosen.push_back(p);
      span_basis.push_back(p);
    }
    if (chosen.size() == 2 * code.k) break;
  }
  if (chosen.size() != 2 * code.k)
    throw std::logic_error("centralizer dimension mismatch");

  // Symplectic Gram-Schmidt over the quotient representatives.
  std::vector<std::pair<Pauli, Pauli>> pairs;
  std::vector<Pauli> rem = chosen;
  while (!rem.empty()) {
    Pauli a = rem.front();
    rem.erase(rem.begin());
    std::size_t bi = rem.size();
    for (std::size_t i = 0; i < rem.size(); ++i)
      if (!a.commutes_with(rem[i])) { bi = i; break; }
    if (bi == rem.size())
      throw std::logic_error("symplectic pairing failed");
    Pauli b = rem[bi];
    rem.erase(rem.begin() + bi);
    for (auto& c : rem) {
      if (!c.commutes_with(b)) c = c.times(a).abs();
      if (!c.commutes_with(a)) c = c.times(b).abs();
    }
    pairs.emplace_back(a, b);
  }

  // Steer pure-X and pure-Z representatives into their named slots.
  for (auto& [px, pz] : pairs) {
    auto pure_x = [](const Pauli& p) {
      for (std::size_t q = 0; q < p.num_qubits(); ++q)
        if (p.z_bit(q)) return false;
      return true;
    };
    auto pure_z = [](const Pauli& p) {
      for (std::size_t q = 0; q < p.num_qubits(); ++q)
        if (p.x_bit(q)) return false;
      return true;
    };
    bool swap_them = false;
    if (pure_z(px) && !pure_z(pz)) swap_them = true;
    if (pure_x(pz) && !pure_x(px)) swap_them = true;
    if (swap_them) std::swap(px, pz);
  }
  return pairs;
}

StabilizerCode replace_generator(const StabilizerCode& code, std::size_t i,
                                 std::size_t j) {
  if (i >= code.generators.size() || j >= code.generators.size())
    throw std::out_of_range("generator index out of range");
  if (i == j) throw std::invalid_argument("i and j must differ");
  StabilizerCode out = code;
  out.generators[i] = code.generators[i].times(code.generators[j]);
  return out;
}

StabilizerCode pad_with_ancillas(const StabilizerCode& code, std::size_t m) {
  if (m == 0) return code;
  std::size_t nn = code.n + m;
  std::vector<Pauli> gens;
  gens.reserve(code.generators.size() + m);
  for (const auto& g : code.generators) {
    Pauli p(nn);
    for (std::size_t q = 0; q < code.n; ++q) p.set_letter(q, g.letter(q));
    if (g.sign() < 0) p = p.negated();
    gens.push_back(p);
  }
  for (std::size_t q = code.n; q < nn; ++q)
    gens.push_back(Pauli::single(nn, q, 'Z'));
  StabilizerCode out = StabilizerCode::make(nn, std::move(gens), code.label);
  for (const auto& [lx, lz] : code.logicals) {
    Pauli ex(nn), ez(nn);
    for (std::size_t q = 0; q < code.n; ++q) {
      ex.set_letter(q, lx.letter(q));
      ez.set_letter(q, lz.letter(q));
    }
    if (lx.sign() < 0) ex = ex.negated();
    if (lz.sign() < 0) ez = ez.negated();
    out.logicals.emplace_back(ex, ez);
  }
  return out;
}

StabilizerCode permute_qubits(const StabilizerCode& code,
                              const std::vector<std::size_t>& perm) {
  if (perm.size() != code.n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(code.n, false);
  for (auto p : perm) {
    if (p >= code.n || seen[p])
      throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  auto remap = [&](const Pauli& g) {
    Pauli p(code.n);
    for (std::size_t q = 0; q < code.n; ++q)
      p.set_letter(perm[q], g.letter(q));
    if (g.sign() < 0) p = p.negated();
    return p;
  };
  StabilizerCode out = code;
  for (auto& g : out.generators) g = remap(g);
  for (auto& [lx, lz] : out.logicals) {
    lx = remap(lx);
    lz = remap(lz);
  }
  return out;
}

std::string serialize_code(const StabilizerCode& code) {
  std::ostringstream os;
  os << "n=" << code.n << " k=" << code.k << " label=" << code.label << "\n";
  for (const auto& g : code.generators) os << g.str() << "\n";
  if (!code.logicals.empty()) {
    os << "logicals:\n";
    for (const auto& [lx, lz] : code.logicals)
      os << lx.str() << "\n" << lz.str() << "\n";
  }
  return os.str();
}

StabilizerCode parse_code(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty code file");
  std::size_t n = 0, k = 0;
  std::string label;
  {
    std::istringstream hs(line);
    std::string tok;
    bool saw_n = false, saw_k = false;
    while (hs >> tok) {
      if (tok.rfind("n=", 0) == 0) {
        n = std::stoul(tok.substr(2));
        saw_n = true;
      } else if (tok.rfind("k=", 0) == 0) {
        k = std::stoul(tok.substr(2));
        saw_k = true;
      } else if (tok.rfind("label=", 0) == 0) {
        label = tok.substr(6);
        std::string rest;
        if (std::getline(hs, rest) && !rest.empty()) label += rest;
      }
    }
    if (!saw_n || !saw_k) throw std::invalid_argument("bad code header");
  }
  std::vector<Pauli> gens;
  std::vector<Pauli> logical_lines;
  bool in_logicals = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "logicals:") {
      in_logicals = true;
      continue;
    }
    Pauli p = Pauli::parse(line, n);
    (in_logicals ? logical_lines : gens).push_back(p);
  }
  StabilizerCode code = StabilizerCode::make(n, std::move(gens), label);
  if (code.k != k)
    throw std::invalid_argument("k does not match generator count");
  if (!logical_lines.empty()) {
    if (logical_lines.size() != 2 * k)
      throw std::invalid_argument("expected 2k logical lines");
    for (std::size_t j = 0; j < k; ++j)
      code.logicals.emplace_back(logical_lines[2 * j],
                                 logical_lines[2 * j + 1]);
  }
  return code;
}

StabilizerCode load_code(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_code(ss.str());
}

void save_code(const StabilizerCode& code, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << serialize_code(code);
}

std::string span_fingerprint(const std::vector<Pauli>& gens, std::size_t n) {
  RrefResult rr = row_reduce(symplectic_matrix(gens, n));
  std::string s;
  for (std::size_t r = 0; r < rr.rank; ++r) {
    for (std::size_t c = 0; c < 2 * n; ++c)
      s += rr.reduced.get(r, c) ? '1' : '0';
    s += '/';
  }
  return s;
}

}  // namespace rewire
