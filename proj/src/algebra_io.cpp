#include "resliep/algebra_io.hpp"

#include <fstream>
#include <stdexcept>

namespace resliep {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json coeff_to_json(const Field& f, const Fq& a) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < f.k(); ++i) out.push_back(a.c[i]);
  return out;
}

Fq coeff_from_json(const Field& f, const json& j) {
  Fq a;
  if (j.is_number_integer()) {
    return f.from_int(j.get<int64_t>());
  }
  if (!j.is_array() || j.size() > static_cast<size_t>(f.k()))
    throw std::invalid_argument("coefficient must be an int or a length-k list");
  for (size_t i = 0; i < j.size(); ++i) {
    int64_t v = j[i].get<int64_t>();
    v %= static_cast<int64_t>(f.p());
    if (v < 0) v += static_cast<int64_t>(f.p());
    a.c[i] = static_cast<uint16_t>(v);
  }
  return a;
}

ordered_json field_to_json(const Field& f) {
  ordered_json out;
  out["p"] = f.p();
  out["k"] = f.k();
  if (f.k() > 1) out["modulus"] = f.modulus();
  return out;
}

Field field_from_json(const json& j) {
  uint64_t p = j.at("p").get<uint64_t>();
  int k = j.value("k", 1);
  std::optional<std::vector<uint16_t>> modulus;
  if (j.contains("modulus")) modulus = j["modulus"].get<std::vector<uint16_t>>();
  return Field(p, k, modulus);
}

ordered_json algebra_to_json(const LieAlgebra& L, const PMap* pmap) {
  const Field& f = L.field();
  ordered_json out;
  out["field"] = field_to_json(f);
  out["dim"] = L.dim();
  ordered_json brackets = ordered_json::array();
  for (const auto& [key, terms] : L.entries()) {
    ordered_json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    ordered_json v = ordered_json::array();
    for (const auto& [r, c] : terms) v.push_back({r, coeff_to_json(f, c)});
    entry["v"] = std::move(v);
    brackets.push_back(std::move(entry));
  }
  out["brackets"] = std::move(brackets);
  if (pmap) {
    ordered_json images = ordered_json::array();
    for (const Vec& img : pmap->images) {
      ordered_json row = ordered_json::array();
      for (const Fq& c : img) row.push_back(coeff_to_json(f, c));
      images.push_back(std::move(row));
    }
    out["pmap"] = std::move(images);
  }
  return out;
}

LoadedAlgebra algebra_from_json(const json& j) {
  Field f = field_from_json(j.at("field"));
  int n = j.at("dim").get<int>();
  if (n < 1) throw std::invalid_argument("algebra dimension must be positive");
  LieAlgebra L(f, n);
  for (const auto& entry : j.value("brackets", json::array())) {
    int i = entry.at("i").get<int>();
    int jj = entry.at("j").get<int>();
    std::vector<std::pair<int, Fq>> terms;
    for (const auto& term : entry.at("v")) {
      if (!term.is_array() || term.size() != 2)
        throw std::invalid_argument("bracket term must be [index, coeff]");
      terms.emplace_back(term[0].get<int>(), coeff_from_json(f, term[1]));
    }
    L.set_bracket(i, jj, terms);
  }
  LoadedAlgebra out{std::move(L), std::nullopt};
  if (j.contains("pmap")) {
    const auto& images = j["pmap"];
    if (!images.is_array() || static_cast<int>(images.size()) != n)
      throw std::invalid_argument("pmap must list one image per basis vector");
    PMap P;
    for (const auto& row : images) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw std::invalid_argument("pmap image has wrong length");
      Vec img(n);
      for (int c = 0; c < n; ++c) img[c] = coeff_from_json(f, row[c]);
      P.images.push_back(std::move(img));
    }
    out.pmap = std::move(P);
  }
  return out;
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed algebra file " + path + ": " + e.what());
  }
  return algebra_from_json(j);
}

void write_algebra_file(const std::string& path, const LieAlgebra& L, const PMap* pmap,
                        const ordered_json* meta) {
  ordered_json j = algebra_to_json(L, pmap);
  if (meta) j["meta"] = *meta;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write algebra file: " + path);
  out << j.dump(2) << "\n";
}

ordered_json cocycle_to_json(const Field& f, int n, const RestrictedTwoCochain& rc) {
  ordered_json out;
  ordered_json phi = ordered_json::array();
  int idx = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++idx)
      if (!f.is_zero(rc.phi[idx])) phi.push_back({i, j, coeff_to_json(f, rc.phi[idx])});
  out["phi"] = std::move(phi);
  ordered_json frob = ordered_json::array();
  for (const Fq& c : rc.frob) frob.push_back(coeff_to_json(f, c));
  out["frob"] = std::move(frob);
  return out;
}

RestrictedTwoCochain cocycle_from_json(const Field& f, int n, const json& j) {
  RestrictedTwoCochain rc;
  rc.phi.resize(static_cast<size_t>(n) * (n - 1) / 2);
  rc.frob.resize(n);
  for (const auto& term : j.value("phi", json::array())) {
    if (!term.is_array() || term.size() != 3)
      throw std::invalid_argument("cocycle phi term must be [i, j, coeff]");
    int i = term[0].get<int>();
    int jj = term[1].get<int>();
    if (i < 1 || jj <= i || jj > n) throw std::invalid_argument("cocycle pair out of range");
    rc.phi[pair_index(n, i, jj)] = coeff_from_json(f, term[2]);
  }
  if (j.contains("frob")) {
    const auto& frob = j["frob"];
    if (!frob.is_array() || static_cast<int>(frob.size()) != n)
      throw std::invalid_argument("cocycle frob part has wrong length");
    for (int i = 0; i < n; ++i) rc.frob[i] = coeff_from_json(f, frob[i]);
  }
  return rc;
}

}  // namespace resliep
