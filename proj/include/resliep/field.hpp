#ifndef RESLIEP_FIELD_HPP
#define RESLIEP_FIELD_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace resliep {

inline constexpr int kMaxExtDeg = 8;

/// Element of F_{p^k}: residues mod p in the modulus basis {1, x, ..., x^{k-1}},
/// zero-padded beyond degree k-1 so equality is plain array comparison.
struct Fq {
  std::array<uint16_t, kMaxExtDeg> c{};

  friend bool operator==(const Fq&, const Fq&) = default;
};

/// Error raised when an enumeration guard refuses a search space.
class feasibility_error : public std::runtime_error {
 public:
  explicit feasibility_error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic context for F_{p^k}. For k > 1 the field is F_p[x]/(modulus)
/// with a monic irreducible modulus (verified by exhaustive trial division).
/// Immutable after construction; all operations are pure.
class Field {
 public:
  /// k = 1: prime field, modulus ignored. k > 1: modulus has k+1 coefficients,
  /// constant term first, leading coefficient 1. When no modulus is supplied
  /// a built-in one is used for F_4, F_8, F_9, F_25, F_27.
  Field(uint64_t p, int k = 1,
        std::optional<std::vector<uint16_t>> modulus = std::nullopt);

  uint64_t p() const { return p_; }
  int k() const { return k_; }
  uint64_t order() const { return q_; }
  const std::vector<uint16_t>& modulus() const { return mod_; }
  std::string label() const;  // e.g. "F_9"

  Fq zero() const { return Fq{}; }
  Fq one() const;

  Fq add(const Fq& a, const Fq& b) const;
  Fq sub(const Fq& a, const Fq& b) const;
  Fq neg(const Fq& a) const;
  Fq mul(const Fq& a, const Fq& b) const;
  Fq inv(const Fq& a) const;  // throws on zero
  Fq pow(const Fq& a, uint64_t e) const;
  Fq frobenius(const Fq& a) const { return pow(a, p_); }

  bool is_zero(const Fq& a) const { return a == Fq{}; }

  /// Integer reduced mod p as a constant polynomial (negatives allowed).
  Fq from_int(int64_t v) const;

  /// Enumeration: index i in [0, order) maps to the element with base-p
  /// digits (c_0, c_1, ...), little-endian.
  Fq element(uint64_t index) const;
  uint64_t index_of(const Fq& a) const;

  Fq random(std::mt19937_64& rng) const { return element(rng() % q_); }

  std::string to_string(const Fq& a) const;  // "2" or "1+2*x+x^2"
  Fq parse(const std::string& s) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.mod_ == b.mod_;
  }

 private:
  uint64_t p_ = 0;
  int k_ = 1;
  uint64_t q_ = 0;
  std::vector<uint16_t> mod_;  // k+1 coefficients, constant first, monic
};

}  // namespace resliep

#endif
