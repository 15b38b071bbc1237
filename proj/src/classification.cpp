#include "resliep/classification.hpp"

#include <numeric>
#include <stdexcept>

namespace resliep {

namespace {

Mat symplectic_j(const Field& f, int m) {
  Mat j(f, 2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    j.at(i, m + i) = f.one();
    j.at(m + i, i) = f.neg(f.one());
  }
  return j;
}

// Union-find with path compression; sizes small enough that rank tricks
// would be noise.
struct DisjointSet {
  std::vector<uint32_t> parent;
  explicit DisjointSet(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
};

uint64_t pow_u64(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// lambda tuples in lexicographic order: lambda_1 is the most significant digit
std::vector<Fq> decode_lambda(const Field& f, int len, uint64_t idx) {
  std::vector<Fq> v(len);
  for (int i = len - 1; i >= 0; --i) {
    v[i] = f.element(idx % f.order());
    idx /= f.order();
  }
  return v;
}

double gl_size(double q, int d) {
  double qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  double total = 1;
  double qi = 1;
  for (int i = 0; i < d; ++i) {
    total *= (qd - qi);
    qi *= q;
  }
  return total;
}

void check_search_feasible(const Field& f, int m) {
  double candidates = gl_size(static_cast<double>(f.order()), 2 * m);
  for (int i = 0; i < 2 * m; ++i) candidates *= static_cast<double>(f.order());
  if (candidates > 1e8)
    throw feasibility_error("witness search space exceeds 10^8 candidates");
}

}  // namespace

IsoCheckResult iso_check(const Field& f, int m, const std::vector<Fq>& lambda,
                         const std::vector<Fq>& lambda2, const IsoWitness& w) {
  const int d = 2 * m;
  if (w.A.rows() != d || w.A.cols() != d || static_cast<int>(w.k.size()) != d ||
      static_cast<int>(lambda.size()) != d + 1 ||
      static_cast<int>(lambda2.size()) != d + 1)
    throw std::invalid_argument("iso_check dimension mismatch");
  if (f.is_zero(determinant(w.A)))
    throw std::invalid_argument("iso_check witness matrix is singular");

  const uint64_t p = f.p();
  IsoCheckResult r;

  Mat j = symplectic_j(f, m);
  r.cond1 = w.A.mul(j).mul(w.A.transposed()) == j.scaled(w.mu);

  r.cond3 = lambda[d] == f.mul(f.pow(w.mu, p - 1), lambda2[d]);

  Fq det = determinant(w.A);
  r.det_consistent = f.mul(det, det) == f.pow(w.mu, static_cast<uint64_t>(d));

  if (p > 2) {
    r.cond2 = true;
    for (int i = 0; i < d && r.cond2; ++i) {
      Fq rhs{};
      for (int jj = 0; jj < d; ++jj)
        rhs = f.add(rhs, f.mul(f.pow(w.A.at(i, jj), p), lambda2[jj]));
      rhs = f.add(rhs, f.mul(lambda2[d], f.pow(w.k[i], p)));
      if (!(f.mul(w.mu, lambda[i]) == rhs)) r.cond2 = false;
    }
    return r;
  }

  // p = 2: the quadratic identity must hold for every a in F^{2m}
  uint64_t space = pow_u64(f.order(), d);
  if (space > (1u << 20))
    throw feasibility_error("quadratic identity check refused beyond 2^20 vectors");
  auto q_form = [&](const std::vector<Fq>& lam, const Vec& a) {
    Fq acc{};
    for (int i = 0; i < d; ++i) acc = f.add(acc, f.mul(lam[i], f.mul(a[i], a[i])));
    for (int i = 0; i < m; ++i) acc = f.add(acc, f.mul(a[i], a[m + i]));
    return acc;
  };
  r.cond2 = true;
  for (uint64_t idx = 0; idx < space && r.cond2; ++idx) {
    Vec a(d);
    uint64_t t = idx;
    for (int i = 0; i < d; ++i) {
      a[i] = f.element(t % f.order());
      t /= f.order();
    }
    Vec b = w.A.transposed().apply(a);  // row vector a times A
    Fq ak{};
    for (int i = 0; i < d; ++i) ak = f.add(ak, f.mul(a[i], w.k[i]));
    Fq lhs = f.mul(w.mu, q_form(lambda, a));
    Fq rhs = f.add(q_form(lambda2, b), f.mul(lambda2[d], f.mul(ak, ak)));
    if (!(lhs == rhs)) r.cond2 = false;
  }
  return r;
}

std::optional<IsoWitness> find_iso(const Field& f, int m,
                                   const std::vector<Fq>& lambda,
                                   const std::vector<Fq>& lambda2) {
  const int d = 2 * m;
  if (static_cast<int>(lambda.size()) != d + 1 ||
      static_cast<int>(lambda2.size()) != d + 1)
    throw std::invalid_argument("find_iso lambda length mismatch");
  check_search_feasible(f, m);

  const uint64_t q = f.order();
  Mat j = symplectic_j(f, m);
  const uint64_t a_count = pow_u64(q, d * d);
  const uint64_t k_count = pow_u64(q, d);

  for (uint64_t ai = 0; ai < a_count; ++ai) {
    Mat A(f, d, d);
    uint64_t t = ai;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        A.at(r, c) = f.element(t % q);
        t /= q;
      }
    // mu is pinned by A J A^T = mu J; read it off and validate
    Mat aja = A.mul(j).mul(A.transposed());
    Fq mu = aja.at(0, m);
    if (f.is_zero(mu)) continue;
    if (!(aja == j.scaled(mu))) continue;

    // the [p]-image condition ignores k when lambda'_{2m+1} = 0
    uint64_t k_limit = f.is_zero(lambda2[d]) ? 1 : k_count;
    for (uint64_t ki = 0; ki < k_limit; ++ki) {
      Vec k(d);
      uint64_t s = ki;
      for (int i = 0; i < d; ++i) {
        k[i] = f.element(s % q);
        s /= q;
      }
      IsoWitness w{A, k, mu};
      if (iso_check(f, m, lambda, lambda2, w).ok()) return w;
    }
  }
  return std::nullopt;
}

Mat witness_basis_matrix(const Field& f, int m, const IsoWitness& w) {
  const int n = 2 * m + 1;
  Mat b(f, n, n);
  for (int i = 0; i < 2 * m; ++i) {
    for (int jj = 0; jj < 2 * m; ++jj) b.at(jj, i) = w.A.at(i, jj);
    b.at(n - 1, i) = w.k[i];
  }
  b.at(n - 1, n - 1) = w.mu;
  return b;
}

ClassifyResult classify(const Field& f, int m, const ClassifyOptions& opt) {
  check_search_feasible(f, m);
  const int len = 2 * m + 1;
  const uint64_t total = pow_u64(f.order(), len);

  DisjointSet ds(total);
  std::vector<uint64_t> reps;  // ascending, since lambda is visited in lex order
  for (uint64_t li = 0; li < total; ++li) {
    std::vector<Fq> lam = decode_lambda(f, len, li);
    bool placed = false;
    for (uint64_t rep : reps) {
      if (find_iso(f, m, lam, decode_lambda(f, len, rep))) {
        ds.unite(static_cast<uint32_t>(li), static_cast<uint32_t>(rep));
        placed = true;
        break;
      }
    }
    if (!placed) reps.push_back(li);
  }

  ClassifyResult out;
  out.total = total;
  for (uint64_t rep : reps) {
    Orbit o;
    o.representative = decode_lambda(f, len, rep);
    for (uint64_t li = 0; li < total; ++li)
      if (ds.find(static_cast<uint32_t>(li)) ==
          ds.find(static_cast<uint32_t>(rep)))
        o.members.push_back(decode_lambda(f, len, li));
    out.orbits.push_back(std::move(o));
  }

  // partition consistency: find_iso agreement on all pairs when small,
  // on random pairs otherwise
  auto same_orbit = [&](uint64_t a, uint64_t b) {
    return ds.find(static_cast<uint32_t>(a)) == ds.find(static_cast<uint32_t>(b));
  };
  auto check_pair = [&](uint64_t a, uint64_t b) {
    bool found = find_iso(f, m, decode_lambda(f, len, a), decode_lambda(f, len, b))
                     .has_value();
    ++out.validation_pairs;
    if (found != same_orbit(a, b)) ++out.violations;
  };
  if (total <= opt.exhaustive_validation_limit) {
    for (uint64_t a = 0; a < total; ++a)
      for (uint64_t b = 0; b < total; ++b) check_pair(a, b);
  } else {
    std::mt19937_64 rng(opt.seed);
    for (int s = 0; s < opt.validation_samples; ++s)
      check_pair(rng() % total, rng() % total);
  }
  out.validated = out.violations == 0;
  return out;
}

BruteForceIsoTester::BruteForceIsoTester(const LieAlgebra& L1, const LieAlgebra& L2)
    : f_(L1.field()), n_(L1.dim()), l1_(L1), l2_(L2) {
  if (!(L2.field() == f_) || L2.dim() != n_)
    throw std::invalid_argument("isomorphism oracle needs matching field and dimension");
  if (n_ > 3 || f_.order() > 5)
    throw feasibility_error("brute-force isomorphism search limited to dim <= 3, |F| <= 5");

  const uint64_t q = f_.order();
  uint64_t vec_count = pow_u64(q, n_);
  for (uint64_t vi = 0; vi < vec_count; ++vi) {
    Vec v(n_);
    uint64_t t = vi;
    for (int i = 0; i < n_; ++i) {
      v[i] = f_.element(t % q);
      t /= q;
    }
    vectors_.push_back(std::move(v));
  }
  auto index_of_vec = [&](const Vec& v) {
    uint64_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * q + f_.index_of(v[i]);
    return static_cast<uint32_t>(idx);
  };

  uint64_t mat_count = pow_u64(q, n_ * n_);
  for (uint64_t mi = 0; mi < mat_count; ++mi) {
    Mat M(f_, n_, n_);
    uint64_t t = mi;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) {
        M.at(r, c) = f_.element(t % q);
        t /= q;
      }
    if (f_.is_zero(determinant(M))) continue;
    bool brackets_ok = true;
    for (int i = 1; i <= n_ && brackets_ok; ++i)
      for (int jj = i + 1; jj <= n_ && brackets_ok; ++jj) {
        Vec lhs = M.apply(l1_.bracket_basis(i, jj));
        Vec rhs = l2_.bracket(M.col(i - 1), M.col(jj - 1));
        if (!(lhs == rhs)) brackets_ok = false;
      }
    if (!brackets_ok) continue;
    std::vector<uint32_t> action(vectors_.size());
    for (size_t vi = 0; vi < vectors_.size(); ++vi)
      action[vi] = index_of_vec(M.apply(vectors_[vi]));
    candidates_.push_back(std::move(M));
    candidate_action_.push_back(std::move(action));
  }
}

bool BruteForceIsoTester::isomorphic(const PMap& P1, const PMap& P2) const {
  const uint64_t q = f_.order();
  auto index_of_vec = [&](const Vec& v) {
    uint64_t idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * q + f_.index_of(v[i]);
    return static_cast<uint32_t>(idx);
  };
  std::vector<uint32_t> pow1(vectors_.size()), pow2(vectors_.size());
  for (size_t vi = 0; vi < vectors_.size(); ++vi) {
    pow1[vi] = index_of_vec(pmap_eval(l1_, P1, vectors_[vi]));
    pow2[vi] = index_of_vec(pmap_eval(l2_, P2, vectors_[vi]));
  }
  for (const auto& action : candidate_action_) {
    bool ok = true;
    for (size_t vi = 0; vi < vectors_.size() && ok; ++vi)
      if (action[pow1[vi]] != pow2[action[vi]]) ok = false;
    if (ok) return true;
  }
  return false;
}

bool brute_force_algebra_iso(const RestrictedAlgebra& R1, const RestrictedAlgebra& R2) {
  return BruteForceIsoTester(R1.alg, R2.alg).isomorphic(R1.pmap, R2.pmap);
}

}  // namespace resliep
