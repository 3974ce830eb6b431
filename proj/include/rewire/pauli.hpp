#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rewire {

// Pauli operator on n qubits in binary symplectic form.
//
// The operator is i^p * prod_q X^x_q Z^z_q (X left of Z on each qubit),
// with the i-exponent p kept mod 4 so products are phase-exact.
// Y = iXZ, i.e. x=1, z=1, p=1. The operator is Hermitian iff
// p == popcount(x&z) (mod 2); Hermitian operators have sign
// i^(p - popcount(x&z)) in {+1,-1}.
//
// Qubits are 0-based in this API; all text I/O is 1-based.
// Values are immutable once built.
class Pauli {
 public:
  Pauli() = default;
  explicit Pauli(std::size_t n) : n_(n), x_(words(n), 0), z_(words(n), 0) {}

  static Pauli identity(std::size_t n) { return Pauli(n); }
  // kind is one of 'I','X','Y','Z'
  static Pauli single(std::size_t n, std::size_t q, char kind);

  std::size_t num_qubits() const { return n_; }

  bool x_bit(std::size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
  bool z_bit(std::size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
  char letter(std::size_t q) const;  // 'I','X','Y','Z'

  int iexp() const { return phase_; }
  bool is_hermitian() const;
  // +1 or -1; only meaningful for Hermitian operators (asserted).
  int sign() const;
  bool is_identity() const;           // weight 0 (any phase)
  bool is_positive_identity() const;  // exactly +I

  std::size_t weight() const;
  std::size_t y_count() const;

  Pauli times(const Pauli& o) const;
  Pauli negated() const;
  // Same operator with phase forced to the +1-signed Hermitian form.
  Pauli abs() const;

  bool commutes_with(const Pauli& o) const;

  // Exact equality including phase.
  bool operator==(const Pauli& o) const {
    return n_ == o.n_ && phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
  }
  // Equality of the x/z part, ignoring phase.
  bool same_body(const Pauli& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }
  // Order by dense string of the body, then phase; used for canonical picks.
  bool body_less(const Pauli& o) const;

  // Dense text, e.g. "+XIZZY" / "-ZII"; non-Hermitian values render with
  // an "i"/"-i" prefix (never written to files).
  std::string str() const;
  // Sparse text, e.g. "+X1 X3 Z5"; identity renders as "+I".
  std::string str_sparse() const;

  // Accepts dense ("XIZZY", optional +/- prefix) or sparse ("X1 X3 Z5",
  // 1-based) text. For sparse text n must be given unless every index is
  // covered by the largest one seen. Throws std::invalid_argument on junk.
  static Pauli parse(std::string_view text, std::optional<std::size_t> n = {});

  // Raw word access for the GF(2) layer.
  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }

  // Builder-style mutators, only for constructing a value.
  void set_x(std::size_t q, bool v);
  void set_z(std::size_t q, bool v);
  void set_letter(std::size_t q, char kind);
  void set_iexp(int p) { phase_ = ((p % 4) + 4) % 4; }

  std::size_t hash() const;

 private:
  static std::size_t words(std::size_t n) { return (n + 63) / 64; }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_, z_;
  int phase_ = 0;  // i-exponent, 0..3
};

}  // namespace rewire
