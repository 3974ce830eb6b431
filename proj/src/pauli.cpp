#include "rewire/pauli.hpp"

#include <bit>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rewire {

namespace {

std::size_t popcount_and(const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace

Pauli Pauli::single(std::size_t n, std::size_t q, char kind) {
  Pauli p(n);
  p.set_letter(q, kind);
  return p;
}

char Pauli::letter(std::size_t q) const {
  bool x = x_bit(q), z = z_bit(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

bool Pauli::is_hermitian() const {
  return static_cast<std::size_t>(phase_ & 1) == (y_count() & 1);
}

int Pauli::sign() const {
  int r = (phase_ - static_cast<int>(y_count() & 3) + 8) & 3;
  assert(r == 0 || r == 2);
  return r == 0 ? +1 : -1;
}

bool Pauli::is_identity() const {
  for (std::size_t w = 0; w < x_.size(); ++w)
    if (x_[w] | z_[w]) return false;
  return true;
}

bool Pauli::is_positive_identity() const {
  return phase_ == 0 && is_identity();
}

std::size_t Pauli::weight() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < x_.size(); ++w)
    c += std::popcount(x_[w] | z_[w]);
  return c;
}

std::size_t Pauli::y_count() const { return popcount_and(x_, z_); }

Pauli Pauli::times(const Pauli& o) const {
  if (n_ != o.n_) throw std::invalid_argument("pauli length mismatch");
  Pauli r(n_);
  // Z^za X^xb = (-1)^{za.xb} X^xb Z^za, per qubit.
  std::size_t swaps = popcount_and(z_, o.x_);
  for (std::size_t w = 0; w < x_.size(); ++w) {
    r.x_[w] = x_[w] ^ o.x_[w];
    r.z_[w] = z_[w] ^ o.z_[w];
  }
  r.phase_ = (phase_ + o.phase_ + 2 * static_cast<int>(swaps & 1)) & 3;
  return r;
}

Pauli Pauli::negated() const {
  Pauli r = *this;
  r.phase_ = (phase_ + 2) & 3;
  return r;
}

Pauli Pauli::abs() const {
  Pauli r = *this;
  r.phase_ = static_cast<int>(y_count() & 3);
  return r;
}

bool Pauli::commutes_with(const Pauli& o) const {
  if (n_ != o.n_) throw std::invalid_argument("pauli length mismatch");
  std::size_t s = popcount_and(x_, o.z_) + popcount_and(z_, o.x_);
  return (s & 1) == 0;
}

bool Pauli::body_less(const Pauli& o) const {
  assert(n_ == o.n_);
  // Dense-string order with I<X<Y<Z, matching letter() output lexically.
  for (std::size_t q = 0; q < n_; ++q) {
    char a = letter(q), b = o.letter(q);
    if (a != b) return a < b;
  }
  return false;
}

std::string Pauli::str() const {
  std::string s;
  int r = (phase_ - static_cast<int>(y_count() & 3) + 8) & 3;
  switch (r) {
    case 0: s = "+"; break;
    case 1: s = "+i"; break;
    case 2: s = "-"; break;
    case 3: s = "-i"; break;
  }
  for (std::size_t q = 0; q < n_; ++q) s += letter(q);
  return s;
}

std::string Pauli::str_sparse() const {
  std::string s = sign() < 0 ? "-" : "+";
  bool any = false;
  for (std::size_t q = 0; q < n_; ++q) {
    char c = letter(q);
    if (c == 'I') continue;
    if (any) s += ' ';
    s += c;
    s += std::to_string(q + 1);
    any = true;
  }
  if (!any) s += 'I';
  return s;
}

void Pauli::set_x(std::size_t q, bool v) {
  std::uint64_t m = std::uint64_t(1) << (q & 63);
  if (v)
    x_[q >> 6] |= m;
  else
    x_[q >> 6] &= ~m;
}

void Pauli::set_z(std::size_t q, bool v) {
  std::uint64_t m = std::uint64_t(1) << (q & 63);
  if (v)
    z_[q >> 6] |= m;
  else
    z_[q >> 6] &= ~m;
}

void Pauli::set_letter(std::size_t q, char kind) {
  // Keep the stored phase equal to the Hermitian +1 form: bump the
  // i-exponent when toggling a Y in or out.
  bool was_y = x_bit(q) && z_bit(q);
  switch (kind) {
    case 'I': set_x(q, false); set_z(q, false); break;
    case 'X': set_x(q, true);  set_z(q, false); break;
    case 'Y': set_x(q, true);  set_z(q, true);  break;
    case 'Z': set_x(q, false); set_z(q, true);  break;
    default: throw std::invalid_argument("bad pauli letter");
  }
  bool is_y = x_bit(q) && z_bit(q);
  if (was_y != is_y) phase_ = (phase_ + (is_y ? 1 : 3)) & 3;
}

std::size_t Pauli::hash() const {
  std::size_t h = n_ * 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(phase_);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto w : x_) mix(w);
  for (auto w : z_) mix(w);
  return h;
}

Pauli Pauli::parse(std::string_view text, std::optional<std::size_t> n) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  int sgn = +1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    sgn = text[i] == '-' ? -1 : +1;
    ++i;
  }
  std::string_view body = text.substr(i);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  if (body.empty()) throw std::invalid_argument("empty pauli text");

  bool sparse = body.find_first_of("0123456789") != std::string_view::npos;
  Pauli p;
  if (body == "I") {
    // bare identity token, size taken from the caller
    p = Pauli(n.value_or(1));
  } else if (!sparse) {
    if (n && *n != body.size())
      throw std::invalid_argument("pauli length mismatch");
    p = Pauli(body.size());
    for (std::size_t q = 0; q < body.size(); ++q) {
      char c = body[q];
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw std::invalid_argument("bad pauli letter");
      p.set_letter(q, c);
    }
  } else {
    struct Tok { char kind; std::size_t q; };
    std::vector<Tok> toks;
    std::size_t maxq = 0;
    std::istringstream ss{std::string(body)};
    std::string t;
    while (ss >> t) {
      if (t == "I") continue;  // allow explicit identity token
      if (t.size() < 2 || (t[0] != 'X' && t[0] != 'Y' && t[0] != 'Z'))
        throw std::invalid_argument("bad sparse pauli token: " + t);
      std::size_t q = 0;
      for (std::size_t j = 1; j < t.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(t[j])))
          throw std::invalid_argument("bad sparse pauli token: " + t);
        q = q * 10 + static_cast<std::size_t>(t[j] - '0');
      }
      if (q == 0) throw std::invalid_argument("sparse indices are 1-based");
      toks.push_back({t[0], q - 1});
      maxq = std::max(maxq, q);
    }
    std::size_t nn = n.value_or(maxq);
    if (nn < maxq) throw std::invalid_argument("index exceeds qubit count");
    p = Pauli(nn);
    for (const auto& tk : toks) {
      if (p.letter(tk.q) != 'I')
        throw std::invalid_argument("duplicate qubit in sparse pauli");
      p.set_letter(tk.q, tk.kind);
    }
  }
  if (sgn < 0) p.phase_ = (p.phase_ + 2) & 3;
  return p;
}

}  // namespace rewire
