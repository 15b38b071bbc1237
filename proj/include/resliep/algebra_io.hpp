#ifndef RESLIEP_ALGEBRA_IO_HPP
#define RESLIEP_ALGEBRA_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "resliep/pmap.hpp"
#include "resliep/restricted_cohomology.hpp"

namespace resliep {

struct LoadedAlgebra {
  LieAlgebra alg;
  std::optional<PMap> pmap;
};

// Algebra file format:
// {
//   "field": {"p": int, "k": int, "modulus": [ints]?},
//   "dim": int,
//   "brackets": [{"i": int, "j": int, "v": [[index, coeff-int-list], ...]}, ...],
//   "pmap": [[coeff-int-list per coordinate] per basis vector]?   (optional)
// }
// Coefficients are length-k residue lists; i < j throughout. Unknown keys are
// ignored so reports can be fed back in.

nlohmann::ordered_json coeff_to_json(const Field& f, const Fq& a);
Fq coeff_from_json(const Field& f, const nlohmann::json& j);

nlohmann::ordered_json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::ordered_json algebra_to_json(const LieAlgebra& L, const PMap* pmap);
LoadedAlgebra algebra_from_json(const nlohmann::json& j);

LoadedAlgebra load_algebra_file(const std::string& path);
void write_algebra_file(const std::string& path, const LieAlgebra& L, const PMap* pmap,
                        const nlohmann::ordered_json* meta = nullptr);

nlohmann::ordered_json cocycle_to_json(const Field& f, int n,
                                       const RestrictedTwoCochain& rc);
RestrictedTwoCochain cocycle_from_json(const Field& f, int n, const nlohmann::json& j);

}  // namespace resliep

#endif
