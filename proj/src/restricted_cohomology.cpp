#include "resliep/restricted_cohomology.hpp"

#include <stdexcept>

namespace resliep {

namespace {

// Antisymmetric matrix of a 2-cochain: phi(x ^ y) = x^T Phi y.
Mat phi_matrix(const Field& f, int n, const Vec& phi) {
  Mat m(f, n, n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx) {
      m.at(i, j) = phi[idx];
      m.at(j, i) = f.neg(phi[idx]);
    }
  return m;
}

Fq dot(const Field& f, const Vec& a, const Vec& b) {
  Fq acc{};
  for (size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::vector<Vec> nonzero_columns(const Mat& m) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.cols(); ++j) {
    Vec c = m.col(j);
    if (!vec_is_zero(c)) cols.push_back(std::move(c));
  }
  return cols;
}

}  // namespace

Fq compat_correction(const LieAlgebra& L, const Vec& phi, const Vec& g, const Vec& h) {
  const Field& f = L.field();
  const int n = L.dim();
  const int p = static_cast<int>(f.p());
  if (p > 13)
    throw feasibility_error("compatibility correction enumerates 2^(p-2) sequences; p > 13 refused");

  const int free_slots = p - 2;  // entries g_3 .. g_p
  Fq acc{};
  for (uint32_t mask = 0; mask < (1u << free_slots); ++mask) {
    auto entry = [&](int i) -> const Vec& {  // 1-based sequence position
      if (i == 1) return g;
      if (i == 2) return h;
      return (mask >> (i - 3)) & 1 ? h : g;
    };
    // #(g): g_1 plus the free slots not set to h
    int count_g = 1;
    for (int t = 0; t < free_slots; ++t)
      if (((mask >> t) & 1) == 0) ++count_g;

    Vec b = entry(1);
    for (int i = 2; i <= p - 1; ++i) b = L.bracket(b, entry(i));
    Fq term = eval_cochain2(f, n, phi, b, entry(p));
    acc = f.add(acc, f.mul(f.inv(f.from_int(count_g)), term));
  }
  return acc;
}

Fq tilde_eval(const LieAlgebra& L, const Vec& phi, const Vec& g) {
  const Field& f = L.field();
  const int n = L.dim();
  Fq acc{};
  Vec partial(n);
  bool started = false;
  for (int i = 0; i < n; ++i) {
    if (f.is_zero(g[i])) continue;
    Vec term(n);
    term[i] = g[i];
    if (!started) {
      partial = term;
      started = true;
      continue;
    }
    acc = f.add(acc, compat_correction(L, phi, partial, term));
    partial = vec_add(f, partial, term);
  }
  return acc;
}

Fq omega_eval(const LieAlgebra& L, const RestrictedTwoCochain& rc, const Vec& g) {
  const Field& f = L.field();
  Fq acc = tilde_eval(L, rc.phi, g);
  for (size_t i = 0; i < g.size(); ++i)
    acc = f.add(acc, f.mul(rc.frob[i], f.pow(g[i], f.p())));
  return acc;
}

bool compat_check(const LieAlgebra& L, const Vec& phi,
                  const std::function<Fq(const Vec&)>& omega, bool exhaustive,
                  int samples, std::mt19937_64& rng) {
  const Field& f = L.field();
  const int n = L.dim();

  auto scaling_holds = [&](const Fq& a, const Vec& g) {
    return omega(vec_scale(f, a, g)) == f.mul(f.pow(a, f.p()), omega(g));
  };
  auto recursion_holds = [&](const Vec& g, const Vec& h) {
    Fq lhs = omega(vec_add(f, g, h));
    Fq rhs = f.add(f.add(omega(g), omega(h)), compat_correction(L, phi, g, h));
    return lhs == rhs;
  };

  if (exhaustive) {
    double space = 1;
    for (int i = 0; i < n; ++i) space *= static_cast<double>(f.order());
    if (space > double(1 << 15))
      throw feasibility_error("exhaustive compatibility check refused beyond 2^15 vectors");
    uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= f.order();
    auto decode = [&](uint64_t idx) {
      Vec v(n);
      for (int i = 0; i < n; ++i) {
        v[i] = f.element(idx % f.order());
        idx /= f.order();
      }
      return v;
    };
    for (uint64_t gi = 0; gi < total; ++gi) {
      Vec g = decode(gi);
      for (uint64_t a = 0; a < f.order(); ++a)
        if (!scaling_holds(f.element(a), g)) return false;
      for (uint64_t hi = 0; hi < total; ++hi)
        if (!recursion_holds(g, decode(hi))) return false;
    }
    return true;
  }

  for (int s = 0; s < samples; ++s) {
    Vec g = random_vec(f, n, rng);
    Vec h = random_vec(f, n, rng);
    if (!scaling_holds(f.random(rng), g)) return false;
    if (!recursion_holds(g, h)) return false;
  }
  return true;
}

Mat ind1_matrix(const LieAlgebra& L, const PMap& P) {
  const Field& f = L.field();
  const int n = L.dim();
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = P.images[i][j];
  return m;
}

RestrictedTwoCochain d1_star(const LieAlgebra& L, const PMap& P, const Vec& psi) {
  const Field& f = L.field();
  const int n = L.dim();
  RestrictedTwoCochain rc;
  rc.phi = differential_matrix(L, 1).apply(psi);
  rc.frob.resize(n);
  for (int i = 0; i < n; ++i) rc.frob[i] = dot(f, psi, P.images[i]);
  return rc;
}

Mat d1_star_matrix(const LieAlgebra& L, const PMap& P) {
  return differential_matrix(L, 1).vstack(ind1_matrix(L, P));
}

Fq ind2_eval(const LieAlgebra& L, const PMap& P, const Vec& phi, const Vec& g,
             const Vec& h) {
  const Field& f = L.field();
  const int n = L.dim();
  const int p = static_cast<int>(f.p());
  Fq first = eval_cochain2(f, n, phi, g, pmap_eval(L, P, h));
  Vec chain = g;
  for (int i = 0; i < p - 1; ++i) chain = L.bracket(chain, h);
  return f.sub(first, eval_cochain2(f, n, phi, chain, h));
}

Vec ind2_functional(const LieAlgebra& L, const PMap& P, const Vec& phi, const Vec& h) {
  const Field& f = L.field();
  const int n = L.dim();
  const int p = static_cast<int>(f.p());
  Mat Phi = phi_matrix(f, n, phi);
  // first term: phi(g ^ h^[p]) = <g, Phi h^[p]>
  Vec w = Phi.apply(pmap_eval(L, P, h));
  // second: phi([g,h,...,h] ^ h) with [x,h] = -(ad h)x iterated p-1 times
  Mat A = ad_power(L, h, p - 1);
  Vec u = Phi.apply(h);                   // phi(x ^ h) = <x, Phi h>
  Vec v = A.transposed().apply(u);        // <A g, Phi h> = <g, A^T Phi h>
  Fq sign = (p - 1) % 2 == 0 ? f.one() : f.neg(f.one());
  for (int r = 0; r < n; ++r) w[r] = f.sub(w[r], f.mul(sign, v[r]));
  return w;
}

RestrictedThreeCochainData ind2_on_pairs(const LieAlgebra& L, const PMap& P,
                                         const Vec& phi) {
  const Field& f = L.field();
  const int n = L.dim();
  RestrictedThreeCochainData out{differential_matrix(L, 2).apply(phi), Mat(f, n, n)};
  for (int j = 1; j <= n; ++j) {
    Vec w = ind2_functional(L, P, phi, basis_vec(f, n, j));
    for (int i = 0; i < n; ++i) out.eta.at(i, j - 1) = w[i];
  }
  return out;
}

Mat d2_star_matrix(const LieAlgebra& L, const PMap& P) {
  const Field& f = L.field();
  const int n = L.dim();
  const int c2 = static_cast<int>(binomial(n, 2));
  const int c3 = static_cast<int>(binomial(n, 3));
  Mat m(f, c3 + n * n, c2 + n);
  Mat d2 = differential_matrix(L, 2);
  for (int i = 0; i < c3; ++i)
    for (int j = 0; j < c2; ++j) m.at(i, j) = d2.at(i, j);
  for (int col = 1; col <= c2; ++col) {
    RestrictedThreeCochainData data = ind2_on_pairs(L, P, basis_vec(f, c2, col));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(c3 + i * n + j, col - 1) = data.eta.at(i, j);
  }
  return m;  // frob columns stay zero: ind^2 ignores omega
}

CohomologyReport restricted_cohomology(const LieAlgebra& L, const PMap& P, int q) {
  const Field& f = L.field();
  const int n = L.dim();
  CohomologyReport rep;
  rep.q = q;
  if (q == 1) {
    std::vector<Vec> z = kernel_basis(d1_star_matrix(L, P));
    rep.dim_cocycles = static_cast<int>(z.size());
    rep.dim_coboundaries = 0;
    rep.dim_H = rep.dim_cocycles;
    rep.representatives = std::move(z);
    return rep;
  }
  if (q != 2) throw std::invalid_argument("restricted cohomology is computed in degrees 1 and 2");

  std::vector<Vec> cocycles = kernel_basis(d2_star_matrix(L, P));
  std::vector<Vec> coboundaries = nonzero_columns(d1_star_matrix(L, P));
  const int dim = static_cast<int>(binomial(n, 2)) + n;
  rep.dim_cocycles = static_cast<int>(cocycles.size());
  rep.dim_coboundaries = span_rank(f, coboundaries, dim);
  rep.dim_H = rep.dim_cocycles - rep.dim_coboundaries;
  rep.representatives = quotient_representatives(f, cocycles, coboundaries, dim);
  return rep;
}

namespace {

// Delta on all of C^2 at the formula level; well-defined on classes only for
// cocycles, which is what callers quotient against.
Mat delta_matrix_raw(const LieAlgebra& L, const PMap& P) {
  const Field& f = L.field();
  const int n = L.dim();
  const int p = static_cast<int>(f.p());
  const int c2 = static_cast<int>(binomial(n, 2));
  Fq sign = (p - 1) % 2 == 0 ? f.one() : f.neg(f.one());

  // rows flatten (j, h) with j major: Delta_phi(e_{j+1})(e_{h+1})
  Mat m(f, n * n, c2);
  for (int col = 1; col <= c2; ++col) {
    Vec phi = basis_vec(f, c2, col);
    Mat Phi = phi_matrix(f, n, phi);
    for (int j = 1; j <= n; ++j) {
      Vec first = Phi.apply(P.images[j - 1]);  // phi(e_h ^ e_j^[p]) over h
      Mat A = ad_power(L, basis_vec(f, n, j), p - 1);
      Vec second = A.transposed().apply(Phi.apply(basis_vec(f, n, j)));
      for (int h = 0; h < n; ++h)
        m.at((j - 1) * n + h, col - 1) =
            f.sub(first[h], f.mul(sign, second[h]));
    }
  }
  return m;
}

}  // namespace

Mat delta_map(const LieAlgebra& L, const PMap& P, const Vec& phi) {
  const Field& f = L.field();
  const int n = L.dim();
  if (!vec_is_zero(differential_matrix(L, 2).apply(phi)))
    throw std::invalid_argument("delta_map requires a 2-cocycle");
  Vec flat = delta_matrix_raw(L, P).apply(phi);
  Mat out(f, n, n);
  for (int j = 0; j < n; ++j)
    for (int h = 0; h < n; ++h) out.at(j, h) = flat[j * n + h];
  return out;
}

SequenceReport verify_sequences(const LieAlgebra& L, const PMap& P) {
  const Field& f = L.field();
  const int n = L.dim();
  const int c2 = static_cast<int>(binomial(n, 2));
  SequenceReport rep;

  Mat D1 = differential_matrix(L, 1);
  Mat D2 = differential_matrix(L, 2);
  Mat IND1 = ind1_matrix(L, P);
  Mat D1S = d1_star_matrix(L, P);
  Mat D2S = d2_star_matrix(L, P);

  std::vector<Vec> Z1 = kernel_basis(D1);        // H^1 (no coboundaries)
  std::vector<Vec> Z1S = kernel_basis(D1S);      // H^1_*
  std::vector<Vec> Z2 = kernel_basis(D2);
  std::vector<Vec> B2 = nonzero_columns(D1);
  std::vector<Vec> Z2S = kernel_basis(D2S);
  std::vector<Vec> B2S = nonzero_columns(D1S);

  rep.dim_H1 = static_cast<int>(Z1.size());
  rep.dim_H1_star = static_cast<int>(Z1S.size());
  rep.dim_HomFr = n;
  rep.dim_H2 = static_cast<int>(Z2.size()) - span_rank(f, B2, c2);
  rep.dim_H2_star = static_cast<int>(Z2S.size()) - span_rank(f, B2S, c2 + n);

  // node H^1_*: the map into H^1 is the inclusion of kernels
  rep.exact_at_H1_star = true;
  for (const Vec& v : Z1S)
    if (!vec_is_zero(D1.apply(v))) rep.exact_at_H1_star = false;

  // node H^1: kernel of alpha = image of the inclusion
  std::vector<Vec> ker_alpha;
  if (!Z1.empty()) {
    Mat Z1cols = Mat::from_columns(f, n, Z1);
    for (const Vec& u : kernel_basis(IND1.mul(Z1cols)))
      ker_alpha.push_back(Z1cols.apply(u));
  }
  rep.exact_at_H1 = same_span(f, ker_alpha, Z1S, n);

  // node Hom_Fr: image of alpha = kernel of beta
  std::vector<Vec> im_alpha;
  for (const Vec& z : Z1) {
    Vec v = IND1.apply(z);
    if (!vec_is_zero(v)) im_alpha.push_back(std::move(v));
  }
  std::vector<Vec> frob_axes;
  for (int i = 1; i <= n; ++i) {
    Vec v(c2 + n);
    v[c2 + i - 1] = f.one();
    frob_axes.push_back(std::move(v));
  }
  std::vector<Vec> ker_beta;
  for (const Vec& v : span_intersection(f, B2S, frob_axes, c2 + n)) {
    Vec omega(v.begin() + c2, v.end());
    ker_beta.push_back(std::move(omega));
  }
  rep.exact_at_HomFr = same_span(f, im_alpha, ker_beta, n);

  // node H^2_*: ker(pi) = im(beta) as subspaces of the quotient by B2S
  std::vector<Vec> coboundary_phi_lifts;  // {(phi, omega) : phi in B2}
  for (const Vec& b : B2) {
    Vec v(c2 + n);
    for (int i = 0; i < c2; ++i) v[i] = b[i];
    coboundary_phi_lifts.push_back(std::move(v));
  }
  for (const Vec& v : frob_axes) coboundary_phi_lifts.push_back(v);
  std::vector<Vec> ker_pi = span_intersection(f, Z2S, coboundary_phi_lifts, c2 + n);
  {
    std::vector<Vec> lhs = ker_pi, rhs = frob_axes;
    lhs.insert(lhs.end(), B2S.begin(), B2S.end());
    rhs.insert(rhs.end(), B2S.begin(), B2S.end());
    rep.exact_at_H2_star = same_span(f, lhs, rhs, c2 + n);
  }

  // node H^2: ker(Delta) = im(pi) modulo B2
  Mat Delta = delta_matrix_raw(L, P);
  std::vector<Vec> ker_delta = kernel_basis(D2.vstack(Delta));
  std::vector<Vec> im_pi;
  for (const Vec& z : Z2S) {
    Vec phi(z.begin(), z.begin() + c2);
    if (!vec_is_zero(phi)) im_pi.push_back(std::move(phi));
  }
  {
    std::vector<Vec> lhs = ker_delta, rhs = im_pi;
    lhs.insert(lhs.end(), B2.begin(), B2.end());
    rhs.insert(rhs.end(), B2.begin(), B2.end());
    rep.exact_at_H2 = same_span(f, lhs, rhs, c2);
  }

  // Delta on classes
  rep.delta_kills_coboundaries = true;
  for (const Vec& b : B2)
    if (!vec_is_zero(Delta.apply(b))) rep.delta_kills_coboundaries = false;
  std::vector<Vec> delta_images;
  for (const Vec& z : Z2) {
    Vec img = Delta.apply(z);
    if (!vec_is_zero(img)) delta_images.push_back(std::move(img));
  }
  rep.delta_rank = span_rank(f, delta_images, n * n);
  rep.delta_zero = delta_images.empty();

  if (rep.delta_zero) {
    rep.ses_applicable = true;
    bool beta_injective;
    {
      std::vector<Vec> with_b = frob_axes;
      with_b.insert(with_b.end(), B2S.begin(), B2S.end());
      beta_injective = span_rank(f, with_b, c2 + n) - span_rank(f, B2S, c2 + n) == n;
    }
    bool pi_surjective;
    {
      std::vector<Vec> with_b = im_pi;
      with_b.insert(with_b.end(), B2.begin(), B2.end());
      pi_surjective = span_rank(f, with_b, c2) - span_rank(f, B2, c2) == rep.dim_H2;
    }
    rep.ses_exact = beta_injective && pi_surjective && rep.exact_at_H2_star &&
                    rep.dim_H2_star == rep.dim_HomFr + rep.dim_H2;
  }
  return rep;
}

}  // namespace resliep
