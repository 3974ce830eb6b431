#include "rewire/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rewire/gf2.hpp"

namespace rewire {

namespace {

// Sign-blind span membership via an incrementally echelonized basis.
class SpanChecker {
 public:
  SpanChecker(const std::vector<Pauli>& basis, std::size_t n) {
    width_ = 2 * n;
    for (const auto& p : basis) insert(symplectic_vector(p));
  }

  std::size_t rank() const { return rows_.size(); }

  bool contains(Gf2Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return !b; });
  }

 private:
  static std::size_t leading(const Gf2Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) return i;
    return v.size();
  }

  void reduce(Gf2Vec& v) const {
    for (const auto& row : rows_) {
      std::size_t lead = leading(row);
      if (lead < v.size() && v[lead])
        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= row[i];
    }
  }

  void insert(Gf2Vec v) {
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == v.size()) return;
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const Gf2Vec& r) {
      return leading(r) > lead;
    });
    rows_.insert(pos, std::move(v));
  }

  std::size_t width_ = 0;
  std::vector<Gf2Vec> rows_;
};

std::vector<std::vector<std::size_t>> supports_of_weight(std::size_t n,
                                                         std::size_t w) {
  std::vector<std::vector<std::size_t>> out;
  if (w == 0 || w > n) return out;
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    // next lexicographic combination
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == n - w + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::size_t pow3(std::size_t w) {
  std::size_t r = 1;
  while (w--) r *= 3;
  return r;
}

Pauli assemble(std::size_t n, const std::vector<std::size_t>& support,
               std::size_t letters) {
  static const char kLetters[3] = {'X', 'Y', 'Z'};
  Pauli p(n);
  for (std::size_t j = 0; j < support.size(); ++j) {
    p.set_letter(support[j], kLetters[letters % 3]);
    letters /= 3;
  }
  return p;
}

bool is_witness(const Pauli& p, const std::vector<Pauli>& commute_with,
                const SpanChecker& span) {
  for (const auto& g : commute_with)
    if (!p.commutes_with(g)) return false;
  return !span.contains(symplectic_vector(p));
}

// Earliest witness in (support index, letter index) order within a weight
// class, so the result is independent of the thread count.
std::optional<Pauli> scan_weight_class(
    std::size_t n, const std::vector<std::vector<std::size_t>>& supports,
    std::size_t w, const std::vector<Pauli>& commute_with,
    const SpanChecker& span, std::size_t jobs) {
  const std::size_t combos = pow3(w);
  if (jobs <= 1 || supports.size() < 2 * jobs) {
    for (const auto& sup : supports)
      for (std::size_t t = 0; t < combos; ++t) {
        Pauli p = assemble(n, sup, t);
        if (is_witness(p, commute_with, span)) return p;
      }
    return std::nullopt;
  }

  struct Hit {
    std::size_t support = 0, letters = 0;
    std::optional<Pauli> p;
  };
  std::vector<Hit> hits(jobs);
  std::vector<std::thread> pool;
  std::size_t chunk = (supports.size() + jobs - 1) / jobs;
  for (std::size_t j = 0; j < jobs; ++j) {
    std::size_t lo = j * chunk, hi = std::min(supports.size(), lo + chunk);
    pool.emplace_back([&, j, lo, hi]() {
      for (std::size_t s = lo; s < hi; ++s)
        for (std::size_t t = 0; t < combos; ++t) {
          Pauli p = assemble(n, supports[s], t);
          if (is_witness(p, commute_with, span)) {
            hits[j] = {s, t, p};
            return;
          }
        }
    });
  }
  for (auto& th : pool) th.join();
  const Hit* best = nullptr;
  for (const auto& h : hits)
    if (h.p && (!best || h.support < best->support ||
                (h.support == best->support && h.letters < best->letters)))
      best = &h;
  return best ? best->p : std::nullopt;
}

std::optional<Pauli> scan_min_logical(std::size_t n,
                                      const std::vector<Pauli>& commute_with,
                                      const SpanChecker& span,
                                      std::size_t max_weight,
                                      std::size_t jobs) {
  for (std::size_t w = 1; w <= max_weight; ++w) {
    auto supports = supports_of_weight(n, w);
    auto hit = scan_weight_class(n, supports, w, commute_with, span, jobs);
    if (hit) return hit;
  }
  return std::nullopt;
}

std::size_t symplectic_rank(const std::vector<Pauli>& ops, std::size_t n) {
  if (ops.empty()) return 0;
  return gf2_rank(symplectic_matrix(ops, n));
}

SubsystemCode make_subsystem(std::size_t n, std::vector<Pauli> stab,
                             std::vector<Pauli> gauge, std::string label) {
  SubsystemCode sc;
  sc.n = n;
  sc.stabilizer_generators = std::move(stab);
  sc.gauge_generators = std::move(gauge);
  std::size_t s = symplectic_rank(sc.stabilizer_generators, n);
  std::size_t g = symplectic_rank(sc.gauge_generators, n);
  assert(s == sc.stabilizer_generators.size());
  assert((g - s) % 2 == 0);
  sc.r_gauge = (g - s) / 2;
  sc.k_logical = n - s - sc.r_gauge;
  sc.label = std::move(label);
  return sc;
}

}  // namespace

std::string DistanceReport::str() const {
  std::ostringstream os;
  os << "code=" << code_label << " distance=";
  if (distance)
    os << *distance;
  else
    os << ">" << searched_weight;
  os << " witness=" << (witness ? witness->str() : "none")
     << " searched=" << searched_weight;
  return os.str();
}

DistanceReport code_distance(const StabilizerCode& code,
                             std::size_t max_weight, std::size_t jobs) {
  if (code.k == 0)
    throw std::invalid_argument("distance of a code with no logical qubits");
  SpanChecker span(code.generators, code.n);
  DistanceReport rep;
  rep.code_label = code.label;
  rep.searched_weight = max_weight;
  rep.witness =
      scan_min_logical(code.n, code.generators, span, max_weight, jobs);
  if (rep.witness) rep.distance = rep.witness->weight();
  return rep;
}

std::vector<DistanceReport> path_distance_profile(const RewirePlan& plan,
                                                  std::size_t max_weight,
                                                  std::size_t jobs) {
  std::vector<DistanceReport> out;
  out.reserve(plan.intermediate_codes.size());
  for (const auto& code : plan.intermediate_codes)
    out.push_back(code_distance(code, max_weight, jobs));
  return out;
}

SubsystemCode joint_subsystem_code(const BlockDecomposition& d) {
  if (d.b() != 0)
    throw std::invalid_argument(
        "joint subsystem code requires an empty B block");
  std::vector<Pauli> gauge = d.block_a;
  for (const auto& c : d.block_c) gauge.push_back(c.g);
  for (const auto& c : d.block_c) gauge.push_back(c.g_target);
  return make_subsystem(d.n, d.block_a, std::move(gauge),
                        d.source.label + "+" + d.target.label);
}

std::vector<SubsystemCode> enumerate_subsystem_codes(
    const BlockDecomposition& d) {
  if (d.b() > 12)
    throw std::invalid_argument("B block too large to enumerate");
  std::vector<SubsystemCode> out;
  const std::size_t count = std::size_t(1) << d.b();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Pauli> gauge = d.block_a;
    for (std::size_t j = 0; j < d.b(); ++j)
      gauge.push_back((mask >> j) & 1 ? d.block_b_target[j].g
                                      : d.block_b[j].g);
    for (std::size_t j = 0; j < d.b(); ++j)
      gauge.push_back(
          d.block_b[j].complement.times(d.block_b_target[j].complement));
    for (const auto& c : d.block_c) gauge.push_back(c.g);
    for (const auto& c : d.block_c) gauge.push_back(c.g_target);
    out.push_back(make_subsystem(
        d.n, d.block_a, std::move(gauge),
        d.source.label + "+" + d.target.label + "#" + std::to_string(mask)));
  }
  return out;
}

DistanceReport subsystem_distance(const SubsystemCode& sc,
                                  std::size_t max_weight, std::size_t jobs) {
  if (sc.k_logical == 0)
    throw std::invalid_argument(
        "dressed distance of a subsystem code with no logical qubits");
  SpanChecker span(sc.gauge_generators, sc.n);
  DistanceReport rep;
  rep.code_label = sc.label;
  rep.searched_weight = max_weight;
  rep.witness = scan_min_logical(sc.n, sc.stabilizer_generators, span,
                                 max_weight, jobs);
  if (rep.witness) rep.distance = rep.witness->weight();
  return rep;
}

bool is_gauge_fixing(const StabilizerCode& code, const SubsystemCode& sc) {
  if (code.n != sc.n) throw std::invalid_argument("qubit count mismatch");
  SpanChecker gauge_span(sc.gauge_generators, sc.n);
  for (const auto& g : code.generators)
    if (!gauge_span.contains(symplectic_vector(g))) return false;
  SpanChecker code_span(code.generators, code.n);
  for (const auto& g : sc.stabilizer_generators)
    if (!code_span.contains(symplectic_vector(g))) return false;
  return true;
}

}  // namespace rewire
