#include "ztop/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "ztop/catalog.hpp"

namespace ztop {

Json polytope_to_json(const SimplePolytope& P) {
  Json j;
  j["m"] = P.m;
  j["faces"] = P.cycles;
  return j;
}

SimplePolytope polytope_from_json(const Json& j) {
  if (!j.contains("faces") || !j["faces"].is_array())
    throw ValidationError("BadIndex", "polytope JSON needs a 'faces' array");
  std::vector<std::vector<int>> cyc = j["faces"].get<std::vector<std::vector<int>>>();
  if (j.contains("m") && (int)j["m"].get<int>() != (int)cyc.size())
    throw ValidationError("BadIndex", "'m' does not match the number of faces");
  return from_face_cycles(cyc);
}

SimplePolytope load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("UnknownName", "cannot open file '" + path + "'");
  Json j;
  in >> j;
  return polytope_from_json(j);
}

SimplePolytope resolve_polytope(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return load_polytope_file(spec);
  std::ifstream probe(spec);
  if (probe.good()) return load_polytope_file(spec);
  return named(spec);
}

Json belt_to_json(const Belt& B) {
  Json j;
  j["faces"] = B.faces;
  j["trivial_sides"] = B.trivial_sides;
  return j;
}

Json betti_to_json(const BettiTable& T) {
  Json j;
  Json big = Json::array();
  for (int i = 0; i < (int)T.beta.size(); ++i)
    for (int jj = 0; jj < (int)T.beta[i].size(); ++jj)
      if (T.beta[i][jj]) big.push_back({i, jj, T.beta[i][jj]});
  j["bigraded"] = big;
  j["total"] = T.total;
  return j;
}

std::string betti_text_table(const BettiTable& T) {
  std::ostringstream os;
  auto width = [&](long long v) { return std::to_string(v).size(); };
  std::vector<size_t> w(T.total.size());
  for (size_t k = 0; k < T.total.size(); ++k)
    w[k] = std::max(width((long long)k), width(T.total[k]));
  os << "k        |";
  for (size_t k = 0; k < T.total.size(); ++k) {
    os << " ";
    std::string s = std::to_string(k);
    os << std::string(w[k] - s.size(), ' ') << s;
  }
  os << "\nrk H^k   |";
  for (size_t k = 0; k < T.total.size(); ++k) {
    std::string s = std::to_string(T.total[k]);
    os << " " << std::string(w[k] - s.size(), ' ') << s;
  }
  os << "\n";
  return os.str();
}

Json ranks_to_json(const RingRanks& R) {
  Json j;
  j["n2"] = R.n2;
  j["a3"] = R.a3;
  j["b4"] = R.b4;
  j["b5"] = R.b5;
  j["h3"] = R.h3;
  j["i7"] = R.i7;
  j["a7"] = R.a7;
  j["bold_i7"] = R.bold_i7;
  return j;
}

Json fingerprint_to_json(const Fingerprint& F) {
  Json j;
  j["schema"] = "ztop.fingerprint/1";
  j["m"] = F.m;
  j["f"] = F.f;
  j["p4"] = F.p4;
  j["p_vector"] = F.pvec;
  Json belts = Json::object();
  for (auto& [k, v] : F.belts)
    belts[std::to_string(k)] = {{"count", v[0]}, {"trivial", v[1]}, {"nontrivial", v[2]}};
  j["belts"] = belts;
  Json qa = Json::object();
  for (auto& [k, v] : F.quad_alt)
    qa[std::to_string(k)] = {{"count", v[0]}, {"trivial", v[1]}, {"nontrivial", v[2]}};
  j["quad_alternating_belts"] = qa;
  j["betti_total"] = F.betti.total;
  j["ranks"] = ranks_to_json(F.ranks);
  j["family"] = F.family;
  j["deep_fields"] = F.deep;
  if (F.deep) {
    j["annihilator_codims"] = F.ann_codims;
    j["bad_pair_counts"] = F.bad_counts;
  }
  j["canonical_code"] = F.code_hex;
  return j;
}

Json compare_to_json(const CompareReport& R) {
  Json j;
  j["fingerprints_equal"] = R.fingerprints_equal;
  j["first_difference"] = R.first_difference;
  j["difference_kind"] = R.difference_kind;
  j["isomorphic"] = R.isomorphic;
  j["verdict"] = R.verdict;
  return j;
}

Json rigidity_to_json(const RigidityReport& R) {
  Json j;
  j["family"] = R.family;
  j["m_max"] = R.m_max;
  j["members"] = R.members;
  Json counts = Json::object();
  for (auto& [m, c] : R.count_by_m) counts[std::to_string(m)] = c;
  j["count_by_m"] = counts;
  j["all_pairwise_distinct"] = R.all_pairwise_distinct;
  Json cols = Json::array();
  for (auto& [a, b] : R.collisions) cols.push_back({a, b});
  j["collisions"] = cols;
  j["detail"] = R.lines;
  return j;
}

Json ring_to_json(const RingTable& T, bool structure_constants) {
  Json j;
  j["m"] = T.polytope().m;
  j["total_dim"] = T.total_dim();
  Json basis = Json::array();
  std::vector<Mask> belt_masks;
  for (auto& B : T.belts4()) belt_masks.push_back(B.mask());
  for (auto& B : T.belts5()) belt_masks.push_back(B.mask());
  for (auto& [w, p] : T.block_keys()) {
    int d = T.block_dim(w, p);
    for (int t = 0; t < d; ++t) {
      Json e;
      e["id"] = T.id(w, p, t);
      e["omega"] = mask_to_vec(w);
      e["omega_mask"] = w;
      e["htilde_degree"] = p;
      e["degree"] = T.degree_of_block(w, p);
      Mask wc = full_mask(T.polytope().m) & ~w;
      std::string tag;
      if (p == -1) tag = "unit";
      else if (p == 2) tag = "fundamental";
      else if (p == 0 && popcount(w) == 2) tag = "omega~";
      else if (p == 1 &&
               std::find(belt_masks.begin(), belt_masks.end(), w) != belt_masks.end())
        tag = "belt";
      else if (p == 1 && popcount(wc) == 2 &&
               !T.polytope().adjacent(mask_to_vec(wc)[0], mask_to_vec(wc)[1]))
        tag = "omega~dual";
      else if (p == 0 &&
               std::find(belt_masks.begin(), belt_masks.end(), wc) != belt_masks.end())
        tag = "belt-dual";
      if (!tag.empty()) e["tag"] = tag;
      basis.push_back(e);
    }
  }
  j["basis"] = basis;
  if (structure_constants) {
    Json sc = Json::array();
    int N = T.total_dim();
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        auto ra = T.ref(a), rb = T.ref(b);
        if ((ra.omega & rb.omega) != 0) continue;
        auto [tkey, coords] = T.basis_product(a, b);
        if (coords.empty()) continue;
        Json terms = Json::array();
        for (int t = 0; t < (int)coords.size(); ++t)
          if (coords[t] != 0) {
            std::ostringstream os;
            os << coords[t];
            terms.push_back({T.id(tkey.first, tkey.second, t), os.str()});
          }
        if (!terms.empty()) sc.push_back({a, b, terms});
      }
    j["products"] = sc;
  }
  return j;
}

}  // namespace ztop
