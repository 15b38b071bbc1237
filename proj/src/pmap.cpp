#include "resliep/pmap.hpp"

#include <sstream>
#include <stdexcept>

namespace resliep {

namespace {

std::string vec_str(const Field& f, const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << f.to_string(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace

Vec random_vec(const Field& f, int n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& x : v) x = f.random(rng);
  return v;
}

PolyMat::PolyMat(const LieAlgebra& L, const Vec& g, const Vec& h)
    : f_(L.field()), n_(L.dim()), a_(size_t(n_) * n_) {
  Mat adg = L.ad(g);
  Mat adh = L.ad(h);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a_[size_t(i) * n_ + j] = {adh.at(i, j), adg.at(i, j)};
}

std::vector<PolyMat::Poly> PolyMat::apply(const std::vector<Poly>& v, int maxdeg) const {
  std::vector<Poly> r(n_, Poly(maxdeg + 1));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const Poly& e = a_[size_t(i) * n_ + j];
      const Poly& x = v[j];
      for (size_t d1 = 0; d1 < e.size(); ++d1) {
        if (f_.is_zero(e[d1])) continue;
        for (size_t d2 = 0; d2 < x.size(); ++d2) {
          if (d1 + d2 > static_cast<size_t>(maxdeg))
            throw std::logic_error("polynomial degree bound exceeded");
          r[i][d1 + d2] = f_.add(r[i][d1 + d2], f_.mul(e[d1], x[d2]));
        }
      }
    }
  return r;
}

std::vector<Vec> s_terms(const LieAlgebra& L, const Vec& g, const Vec& h) {
  const Field& f = L.field();
  const int n = L.dim();
  const int p = static_cast<int>(f.p());

  PolyMat m(L, g, h);
  std::vector<PolyMat::Poly> v(n);
  for (int i = 0; i < n; ++i) v[i] = {g[i]};
  for (int step = 0; step < p - 1; ++step) v = m.apply(v, p - 1);

  std::vector<Vec> s;
  for (int i = 1; i <= p - 1; ++i) {
    Vec si(n);
    Fq scale = f.inv(f.from_int(i));
    for (int r = 0; r < n; ++r)
      if (i - 1 < static_cast<int>(v[r].size())) si[r] = f.mul(scale, v[r][i - 1]);
    s.push_back(std::move(si));
  }
  return s;
}

Vec pmap_eval(const LieAlgebra& L, const PMap& P, const Vec& g) {
  const Field& f = L.field();
  const int n = L.dim();
  if (static_cast<int>(P.images.size()) != n || static_cast<int>(g.size()) != n)
    throw std::invalid_argument("pmap_eval dimension mismatch");

  Vec acc_vec(n);      // partial sum of basis terms
  Vec acc_pow(n);      // its [p]-image
  bool started = false;
  for (int i = 0; i < n; ++i) {
    if (f.is_zero(g[i])) continue;
    Vec term(n);
    term[i] = g[i];
    Vec term_pow = vec_scale(f, f.pow(g[i], f.p()), P.images[i]);
    if (!started) {
      acc_vec = term;
      acc_pow = term_pow;
      started = true;
      continue;
    }
    Vec next_pow = vec_add(f, acc_pow, term_pow);
    for (const Vec& si : s_terms(L, acc_vec, term)) next_pow = vec_add(f, next_pow, si);
    acc_pow = next_pow;
    acc_vec = vec_add(f, acc_vec, term);
  }
  return acc_pow;
}

AxiomReport verify_restricted(const RestrictedAlgebra& R, int samples,
                              std::mt19937_64& rng) {
  const LieAlgebra& L = R.alg;
  const Field& f = L.field();
  const int n = L.dim();
  const int p = static_cast<int>(f.p());
  AxiomReport rep;

  for (int i = 1; i <= n; ++i) {
    Mat lhs = L.ad(R.pmap.images[i - 1]);
    Mat rhs = ad_power(L, basis_vec(f, n, i), p);
    if (!(lhs == rhs)) {
      rep.jacobson_ok = false;
      rep.counterexample = "ad(e_" + std::to_string(i) + "^[p]) != (ad e_" +
                           std::to_string(i) + ")^p";
      return rep;
    }
  }

  for (int s = 0; s < samples; ++s) {
    Fq a = f.random(rng);
    Vec g = random_vec(f, n, rng);
    Vec lhs = pmap_eval(L, R.pmap, vec_scale(f, a, g));
    Vec rhs = vec_scale(f, f.pow(a, p), pmap_eval(L, R.pmap, g));
    if (!(lhs == rhs)) {
      rep.scaling_ok = false;
      rep.counterexample =
          "(a g)^[p] != a^p g^[p] at a=" + f.to_string(a) + ", g=" + vec_str(f, g);
      return rep;
    }
  }

  for (int s = 0; s < samples; ++s) {
    Vec g = random_vec(f, n, rng);
    Vec h = random_vec(f, n, rng);
    Vec lhs = pmap_eval(L, R.pmap, vec_add(f, g, h));
    Vec rhs = vec_add(f, pmap_eval(L, R.pmap, g), pmap_eval(L, R.pmap, h));
    for (const Vec& si : s_terms(L, g, h)) rhs = vec_add(f, rhs, si);
    if (!(lhs == rhs)) {
      rep.sum_ok = false;
      rep.counterexample =
          "sum axiom fails at g=" + vec_str(f, g) + ", h=" + vec_str(f, h);
      return rep;
    }
  }

  for (int s = 0; s < samples; ++s) {
    Vec g = random_vec(f, n, rng);
    if (!(L.ad(pmap_eval(L, R.pmap, g)) == ad_power(L, g, p))) {
      rep.ad_ok = false;
      rep.counterexample = "ad(g^[p]) != (ad g)^p at g=" + vec_str(f, g);
      return rep;
    }
  }
  return rep;
}

RestrictedHeisenberg heisenberg_restricted(const Field& f, const HeisenbergParams& hp) {
  if (hp.m < 1) throw std::invalid_argument("heisenberg needs m >= 1");
  const int n = 2 * hp.m + 1;
  if (static_cast<int>(hp.lambda.size()) != n)
    throw std::invalid_argument("lambda must have 2m+1 entries");
  RestrictedHeisenberg rh{RestrictedAlgebra{heisenberg(f, hp.m), PMap{}}, hp};
  for (int i = 0; i < n; ++i) {
    Vec img(n);
    img[n - 1] = hp.lambda[i];
    rh.ra.pmap.images.push_back(std::move(img));
  }
  return rh;
}

Vec RestrictedHeisenberg::pow_closed_form(const Vec& g) const {
  const Field& f = ra.alg.field();
  const int n = ra.alg.dim();
  const int m = params.m;
  Fq coeff{};
  for (int i = 0; i < n; ++i)
    coeff = f.add(coeff, f.mul(f.pow(g[i], f.p()), params.lambda[i]));
  if (f.p() == 2)
    for (int j = 0; j < m; ++j) coeff = f.add(coeff, f.mul(g[j], g[m + j]));
  Vec r(n);
  r[n - 1] = coeff;
  return r;
}

RestrictedAlgebra transport(const RestrictedAlgebra& R, const Mat& basis) {
  const Field& f = R.alg.field();
  const int n = R.alg.dim();
  if (basis.rows() != n || basis.cols() != n)
    throw std::invalid_argument("transport needs an n x n basis matrix");
  Mat inv = inverse(basis);

  RestrictedAlgebra out{LieAlgebra(f, n), PMap{}};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Vec b = inv.apply(R.alg.bracket(basis.col(i - 1), basis.col(j - 1)));
      std::vector<std::pair<int, Fq>> terms;
      for (int r = 0; r < n; ++r)
        if (!f.is_zero(b[r])) terms.emplace_back(r + 1, b[r]);
      if (!terms.empty()) out.alg.set_bracket(i, j, terms);
    }
  for (int i = 0; i < n; ++i)
    out.pmap.images.push_back(inv.apply(pmap_eval(R.alg, R.pmap, basis.col(i))));
  return out;
}

}  // namespace resliep
