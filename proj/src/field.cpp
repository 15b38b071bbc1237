#include "resliep/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace resliep {

namespace {

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense F_p[x] coefficient vectors, constant term first, no trailing zeros.
using Poly = std::vector<uint16_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a by monic b.
Poly poly_rem(Poly a, const Poly& b, uint64_t p) {
  a = trim(a);
  while (a.size() >= b.size()) {
    uint64_t lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t v = a[shift + i] + p * p - (lead * b[i]) % p;
      a[shift + i] = static_cast<uint16_t>(v % p);
    }
    a = trim(a);
  }
  return a;
}

// Decode index into a monic polynomial of the given degree.
Poly monic_poly(uint64_t index, int degree, uint64_t p) {
  Poly f(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<uint16_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::optional<std::vector<uint16_t>> builtin_modulus(uint64_t p, int k) {
  if (p == 2 && k == 2) return std::vector<uint16_t>{1, 1, 1};        // x^2+x+1
  if (p == 2 && k == 3) return std::vector<uint16_t>{1, 1, 0, 1};     // x^3+x+1
  if (p == 3 && k == 2) return std::vector<uint16_t>{1, 0, 1};        // x^2+1
  if (p == 5 && k == 2) return std::vector<uint16_t>{2, 0, 1};        // x^2+2
  if (p == 3 && k == 3) return std::vector<uint16_t>{1, 2, 0, 1};     // x^3+2x+1
  return std::nullopt;
}

}  // namespace

Field::Field(uint64_t p, int k, std::optional<std::vector<uint16_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1 || k > kMaxExtDeg)
    throw std::invalid_argument("extension degree out of range [1, " +
                                std::to_string(kMaxExtDeg) + "]");
  p_ = p;
  k_ = k;
  q_ = ipow(p, k);
  if (k == 1) {
    mod_ = {0, 1};  // unused placeholder: x
    return;
  }
  if (!modulus) {
    modulus = builtin_modulus(p, k);
    if (!modulus)
      throw std::invalid_argument("no built-in modulus for p=" + std::to_string(p) +
                                  ", k=" + std::to_string(k) + "; supply one");
  }
  if (static_cast<int>(modulus->size()) != k + 1)
    throw std::invalid_argument("modulus must have k+1 coefficients");
  mod_ = *modulus;
  for (auto& c : mod_) c = static_cast<uint16_t>(c % p);
  if (mod_.back() != 1) throw std::invalid_argument("modulus must be monic");

  // Irreducibility by trial division against every monic divisor candidate
  // of degree <= k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    uint64_t count = ipow(p, d);
    if (count > (1u << 20))
      throw feasibility_error("modulus irreducibility check infeasible at this size");
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly cand = monic_poly(idx, d, p);
      if (poly_rem(mod_, cand, p).empty())
        throw std::invalid_argument("modulus is reducible over F_p");
    }
  }
}

Fq Field::one() const {
  Fq r;
  r.c[0] = 1;
  return r;
}

Fq Field::add(const Fq& a, const Fq& b) const {
  Fq r;
  for (int i = 0; i < k_; ++i) r.c[i] = static_cast<uint16_t>((a.c[i] + b.c[i]) % p_);
  return r;
}

Fq Field::sub(const Fq& a, const Fq& b) const {
  Fq r;
  for (int i = 0; i < k_; ++i)
    r.c[i] = static_cast<uint16_t>((a.c[i] + p_ - b.c[i]) % p_);
  return r;
}

Fq Field::neg(const Fq& a) const { return sub(Fq{}, a); }

Fq Field::mul(const Fq& a, const Fq& b) const {
  if (k_ == 1) {
    Fq r;
    r.c[0] = static_cast<uint16_t>((uint64_t(a.c[0]) * b.c[0]) % p_);
    return r;
  }
  std::array<uint64_t, 2 * kMaxExtDeg> t{};
  for (int i = 0; i < k_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < k_; ++j) t[i + j] += uint64_t(a.c[i]) * b.c[j];
  }
  // reduce modulo the monic modulus, top degree down
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    uint64_t lead = t[d] % p_;
    if (lead == 0) continue;
    for (int i = 0; i < k_; ++i)
      t[d - k_ + i] += (p_ - (lead * mod_[i]) % p_);
    t[d] = 0;
  }
  Fq r;
  for (int i = 0; i < k_; ++i) r.c[i] = static_cast<uint16_t>(t[i] % p_);
  return r;
}

Fq Field::pow(const Fq& a, uint64_t e) const {
  Fq base = a;
  Fq r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fq Field::inv(const Fq& a) const {
  if (is_zero(a)) throw std::invalid_argument("inverse of zero");
  return pow(a, q_ - 2);
}

Fq Field::from_int(int64_t v) const {
  int64_t m = v % static_cast<int64_t>(p_);
  if (m < 0) m += static_cast<int64_t>(p_);
  Fq r;
  r.c[0] = static_cast<uint16_t>(m);
  return r;
}

Fq Field::element(uint64_t index) const {
  Fq r;
  for (int i = 0; i < k_; ++i) {
    r.c[i] = static_cast<uint16_t>(index % p_);
    index /= p_;
  }
  return r;
}

uint64_t Field::index_of(const Fq& a) const {
  uint64_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a.c[i];
  return idx;
}

std::string Field::label() const { return "F_" + std::to_string(q_); }

std::string Field::to_string(const Fq& a) const {
  if (is_zero(a)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < k_; ++i) {
    if (a.c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << a.c[i];
    } else {
      if (a.c[i] != 1) os << a.c[i] << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Fq Field::parse(const std::string& s) const {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty field element");

  // Plain (possibly negative) integer when no 'x' appears.
  if (t.find('x') == std::string::npos) {
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad field element: " + s);
    return from_int(v);
  }

  Fq r;
  size_t i = 0;
  while (i < t.size()) {
    size_t j = t.find('+', i);
    if (j == std::string::npos) j = t.size();
    std::string term = t.substr(i, j - i);
    i = j + 1;
    if (term.empty()) throw std::invalid_argument("bad field element: " + s);

    uint64_t coeff = 1;
    int deg = 0;
    size_t xp = term.find('x');
    if (xp == std::string::npos) {
      coeff = std::stoull(term);
    } else {
      std::string cs = term.substr(0, xp);
      if (!cs.empty() && cs.back() == '*') cs.pop_back();
      if (!cs.empty()) coeff = std::stoull(cs);
      deg = 1;
      std::string es = term.substr(xp + 1);
      if (!es.empty()) {
        if (es[0] != '^') throw std::invalid_argument("bad field element: " + s);
        deg = std::stoi(es.substr(1));
      }
    }
    if (deg >= k_) throw std::invalid_argument("element degree exceeds field degree");
    r.c[deg] = static_cast<uint16_t>((r.c[deg] + coeff) % p_);
  }
  return r;
}

}  // namespace resliep
