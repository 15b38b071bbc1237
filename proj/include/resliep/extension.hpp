#ifndef RESLIEP_EXTENSION_HPP
#define RESLIEP_EXTENSION_HPP

#include "resliep/restricted_cohomology.hpp"

namespace resliep {

inline bool restricted_algebras_identical(const RestrictedAlgebra& a,
                                          const RestrictedAlgebra& b) {
  return a.alg == b.alg && a.pmap.images == b.pmap.images;
}

/// One-dimensional restricted central extension G = g + Fc built from a
/// restricted 2-cocycle: [g,h]_G = [g,h] + phi(g^h)c, g^[p]_G = g^[p] + omega(g)c,
/// c central with c^[p] = 0. The new basis vector c sits at index n+1.
struct CentralExtension {
  RestrictedAlgebra base;
  RestrictedTwoCochain cocycle;
  RestrictedAlgebra total;
};

/// Build the extension; refuses cochains outside ker d^2_*.
CentralExtension central_extension(const RestrictedAlgebra& base,
                                   const RestrictedTwoCochain& rc);

/// The explicit extension families of h_m^lambda: by (0, ebar^i) for
/// kind Hi, by (e^{s,t}, tilde e^{s,t}) with s < t <= 2m for kind Hst.
struct NamedCocycle {
  enum class Kind { Hi, Hst } kind = Kind::Hi;
  int i = 1;         // Hi: 1 <= i <= 2m+1
  int s = 1, t = 2;  // Hst: 1 <= s < t <= 2m
};

/// Build the named extension directly from its displayed bracket and
/// [p]-operator data, bypassing the generic constructor.
CentralExtension named_extension(const RestrictedHeisenberg& rh, const NamedCocycle& nc);

RestrictedTwoCochain named_cocycle_coordinates(const RestrictedHeisenberg& rh,
                                               const NamedCocycle& nc);

/// The standard spanning set of restricted 2-cocycle classes on h_m^lambda:
/// (e^{a,b}, tilde) for the 2m^2 - m - 1 off-diagonal index pairs and
/// (0, ebar^i) for 1 <= i <= 2m+1; a basis of H^2_* whenever m >= 2.
std::vector<RestrictedTwoCochain> heisenberg_standard_two_cocycles(
    const RestrictedHeisenberg& rh);

struct ExtensionReport {
  bool jacobi_ok = false;
  bool axioms_ok = false;
  bool c_central = false;
  bool c_pth_power_zero = false;
  bool omega_matches = false;  // g^[p]_G = g^[p] + omega(g)c on sampled g
  std::string detail;
  bool ok() const {
    return jacobi_ok && axioms_ok && c_central && c_pth_power_zero && omega_matches;
  }
};

ExtensionReport verify_extension(const CentralExtension& ext, int samples,
                                 std::mt19937_64& rng);

}  // namespace resliep

#endif
