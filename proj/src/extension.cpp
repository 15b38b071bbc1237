#include "resliep/extension.hpp"

#include <stdexcept>

namespace resliep {

namespace {

Vec lift(const Vec& v, int extra = 1) {
  Vec out = v;
  out.resize(v.size() + extra);
  return out;
}

// copy all base brackets into the (n+1)-dimensional algebra
LieAlgebra lift_algebra(const LieAlgebra& L) {
  LieAlgebra out(L.field(), L.dim() + 1);
  for (const auto& [key, terms] : L.entries()) out.set_bracket(key.first, key.second, terms);
  return out;
}

}  // namespace

CentralExtension central_extension(const RestrictedAlgebra& base,
                                   const RestrictedTwoCochain& rc) {
  const Field& f = base.alg.field();
  const int n = base.alg.dim();
  if (static_cast<int>(rc.phi.size()) != binomial(n, 2) ||
      static_cast<int>(rc.frob.size()) != n)
    throw std::invalid_argument("central_extension cochain dimension mismatch");

  RestrictedThreeCochainData d2 = ind2_on_pairs(base.alg, base.pmap, rc.phi);
  if (!vec_is_zero(d2.zeta) || !d2.eta.is_zero())
    throw std::invalid_argument("central_extension requires a restricted 2-cocycle");

  CentralExtension ext{base, rc, RestrictedAlgebra{lift_algebra(base.alg), PMap{}}};
  int idx = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++idx) {
      if (f.is_zero(rc.phi[idx])) continue;
      Vec b = base.alg.bracket_basis(i, j);
      std::vector<std::pair<int, Fq>> terms;
      for (int r = 0; r < n; ++r)
        if (!f.is_zero(b[r])) terms.emplace_back(r + 1, b[r]);
      terms.emplace_back(n + 1, rc.phi[idx]);
      ext.total.alg.set_bracket(i, j, terms);
    }
  for (int i = 0; i < n; ++i) {
    Vec img = lift(base.pmap.images[i]);
    // omega(e_i) = tilde(phi)(e_i) + frob_i = frob_i
    img[n] = rc.frob[i];
    ext.total.pmap.images.push_back(std::move(img));
  }
  ext.total.pmap.images.push_back(Vec(n + 1));  // c^[p] = 0
  return ext;
}

RestrictedTwoCochain named_cocycle_coordinates(const RestrictedHeisenberg& rh,
                                               const NamedCocycle& nc) {
  const Field& f = rh.ra.alg.field();
  const int n = rh.ra.alg.dim();
  const int m = rh.params.m;
  RestrictedTwoCochain rc;
  rc.phi.resize(binomial(n, 2));
  rc.frob.resize(n);
  if (nc.kind == NamedCocycle::Kind::Hi) {
    if (nc.i < 1 || nc.i > n) throw std::invalid_argument("Hi index out of range");
    rc.frob[nc.i - 1] = f.one();
  } else {
    if (nc.s < 1 || nc.s >= nc.t || nc.t > 2 * m)
      throw std::invalid_argument("Hst needs 1 <= s < t <= 2m");
    rc.phi[pair_index(n, nc.s, nc.t)] = f.one();
  }
  return rc;
}

CentralExtension named_extension(const RestrictedHeisenberg& rh, const NamedCocycle& nc) {
  const Field& f = rh.ra.alg.field();
  const int n = rh.ra.alg.dim();
  CentralExtension ext{rh.ra, named_cocycle_coordinates(rh, nc),
                       RestrictedAlgebra{lift_algebra(rh.ra.alg), PMap{}}};

  if (nc.kind == NamedCocycle::Kind::Hst) {
    // [g,h]_G = [g,h] + (a_s b_t - a_t b_s)c; on basis pairs only (s,t) survives
    Vec b = rh.ra.alg.bracket_basis(nc.s, nc.t);
    std::vector<std::pair<int, Fq>> terms;
    for (int r = 0; r < n; ++r)
      if (!f.is_zero(b[r])) terms.emplace_back(r + 1, b[r]);
    terms.emplace_back(n + 1, f.one());
    ext.total.alg.set_bracket(nc.s, nc.t, terms);
  }
  for (int i = 0; i < n; ++i) {
    Vec img = lift(rh.ra.pmap.images[i]);
    // Hi: e_j^[p] gains a_i^p c, so exactly delta_ij on basis vectors.
    // Hst: tilde e^{s,t} vanishes on basis vectors at every p, including the
    // p = 2 family where a_s a_t shows up only on mixed vectors.
    if (nc.kind == NamedCocycle::Kind::Hi && i == nc.i - 1) img[n] = f.one();
    ext.total.pmap.images.push_back(std::move(img));
  }
  ext.total.pmap.images.push_back(Vec(n + 1));
  return ext;
}

std::vector<RestrictedTwoCochain> heisenberg_standard_two_cocycles(
    const RestrictedHeisenberg& rh) {
  const int m = rh.params.m;
  const int n = 2 * m + 1;
  std::vector<RestrictedTwoCochain> out;
  auto pair_cocycle = [&](int s, int t) {
    NamedCocycle nc{NamedCocycle::Kind::Hst, 1, s, t};
    out.push_back(named_cocycle_coordinates(rh, nc));
  };
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      pair_cocycle(i, j);
      pair_cocycle(m + i, m + j);
      pair_cocycle(i, m + j);
      pair_cocycle(j, m + i);
    }
  for (int i = 1; i <= m - 1; ++i) pair_cocycle(i, m + i);
  for (int i = 1; i <= n; ++i) {
    NamedCocycle nc{NamedCocycle::Kind::Hi, i, 1, 2};
    out.push_back(named_cocycle_coordinates(rh, nc));
  }
  return out;
}

ExtensionReport verify_extension(const CentralExtension& ext, int samples,
                                 std::mt19937_64& rng) {
  const Field& f = ext.total.alg.field();
  const int n = ext.base.alg.dim();
  ExtensionReport rep;

  rep.jacobi_ok = structure_report(ext.total.alg).jacobi_ok;
  AxiomReport ax = verify_restricted(ext.total, samples, rng);
  rep.axioms_ok = ax.ok();
  if (!rep.axioms_ok) rep.detail = ax.counterexample;

  rep.c_central = true;
  for (int i = 1; i <= n; ++i)
    if (!vec_is_zero(ext.total.alg.bracket_basis(i, n + 1))) rep.c_central = false;
  rep.c_pth_power_zero = vec_is_zero(ext.total.pmap.images[n]);

  rep.omega_matches = true;
  for (int s = 0; s < samples && rep.omega_matches; ++s) {
    Vec g = random_vec(f, n, rng);
    Vec expected = lift(pmap_eval(ext.base.alg, ext.base.pmap, g));
    expected[n] = omega_eval(ext.base.alg, ext.cocycle, g);
    if (!(pmap_eval(ext.total.alg, ext.total.pmap, lift(g)) == expected)) {
      rep.omega_matches = false;
      rep.detail = "extension [p]-operator disagrees with base [p] + omega(g)c";
    }
  }
  return rep;
}

}  // namespace resliep
