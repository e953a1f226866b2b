#include "ztop/fingerprint.hpp"

#include <algorithm>
#include <sstream>

#include "ztop/catalog.hpp"

namespace ztop {

Fingerprint fingerprint(const SimplePolytope& P, const FingerprintOptions& opt) {
  Fingerprint F;
  F.m = P.m;
  F.f = P.f_vector();
  F.p4 = P.p4();
  F.pvec = P.p_vector();
  F.code_hex = canonical_code_hex(P);
  for (int k = 3; k <= opt.k_max && k <= P.m; ++k) {
    auto bs = enumerate_belts(P, k);
    long long triv = 0;
    for (auto& B : bs) triv += B.trivial() ? 1 : 0;
    F.belts[k] = {(long long)bs.size(), triv, (long long)bs.size() - triv};
  }
  for (auto& B : quad_alternating_belts(P)) {
    auto& slot = F.quad_alt[B.k()];
    slot[0]++;
    slot[B.trivial() ? 1 : 2]++;
  }
  F.family = to_string(classify_family(P).cls);
  if (P.m <= opt.betti_max_m) F.betti = bigraded_betti(P, opt.betti_max_m);
  if (P.m <= opt.ring_max_m) {
    auto T = build_ring(P, Coeff::Q, opt.ring_max_m);
    F.ranks = T->ranks();
    if (P.m <= opt.deep_max_m) {
      F.deep = true;
      auto belts = all_belts(P);
      for (Mask w : T->n2()) {
        F.ann_codims.push_back(T->annihilator_codim(T->omega_tilde(w)));
        long long bad = 0;
        for (Mask wp : T->n2())
          if (wp != w && !is_good_pair(P, belts, wp, w)) ++bad;
        F.bad_counts.push_back(bad);
      }
      std::sort(F.ann_codims.begin(), F.ann_codims.end());
      std::sort(F.bad_counts.begin(), F.bad_counts.end());
    }
  }
  return F;
}

namespace {

template <class T>
std::string dump(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <class T>
std::string dump(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

// returns the first differing ring-level field, then combinatorial ones
std::pair<std::string, std::string> first_difference(const Fingerprint& A, const Fingerprint& B) {
  auto belts_str = [](const std::map<int, std::array<long long, 3>>& m) {
    std::ostringstream os;
    for (auto& [k, v] : m) os << k << ":" << v[0] << "(" << v[1] << "+" << v[2] << ") ";
    return os.str();
  };
  if (A.m != B.m) return {"m (" + dump(A.m) + " vs " + dump(B.m) + ")", "ring-level"};
  if (A.betti.total != B.betti.total)
    return {"total Betti numbers " + dump(A.betti.total) + " vs " + dump(B.betti.total),
            "ring-level"};
  if (A.betti.beta != B.betti.beta) return {"bigraded Betti numbers", "ring-level"};
  if (A.belts != B.belts)
    return {"belt census " + belts_str(A.belts) + "vs " + belts_str(B.belts), "ring-level"};
  auto rk = [](const RingRanks& r) {
    return std::array<long long, 8>{r.n2, r.a3, r.b4, r.b5, r.h3, r.i7, r.a7, r.bold_i7};
  };
  if (rk(A.ranks) != rk(B.ranks)) {
    const char* names[] = {"rk H3(=|N2|)", "rk A3", "rk B4", "rk B5", "rk H3/A3", "rk I7",
                           "rk A7",        "rk I7/A7"};
    auto a = rk(A.ranks), b = rk(B.ranks);
    for (int t = 0; t < 8; ++t)
      if (a[t] != b[t])
        return {std::string(names[t]) + " (" + dump(a[t]) + " vs " + dump(b[t]) + ")",
                "ring-level"};
  }
  if (A.quad_alt != B.quad_alt) return {"quad-alternating belt census", "ring-level"};
  if (A.deep && B.deep) {
    if (A.ann_codims != B.ann_codims)
      return {"annihilator codimension multiset " + dump(A.ann_codims) + " vs " +
                  dump(B.ann_codims),
              "ring-level"};
    if (A.bad_counts != B.bad_counts)
      return {"bad-pair count profile", "combinatorial"};
  }
  if (A.family != B.family)
    return {"family class (" + A.family + " vs " + B.family + ")", "ring-level"};
  if (A.pvec != B.pvec) return {"face size vector", "combinatorial"};
  return {"", ""};
}

}  // namespace

CompareReport compare(const SimplePolytope& P, const SimplePolytope& Q,
                      const FingerprintOptions& opt) {
  CompareReport R;
  Fingerprint A = fingerprint(P, opt), B = fingerprint(Q, opt);
  auto [diff, kind] = first_difference(A, B);
  R.fingerprints_equal = diff.empty();
  R.first_difference = diff;
  R.difference_kind = kind;
  R.isomorphic = is_isomorphic(P, Q);
  if (!R.fingerprints_equal)
    R.verdict = "distinguished by " + kind + " field: " + diff;
  else if (R.isomorphic)
    R.verdict = "indistinguishable by fingerprint; combinatorially equivalent";
  else
    R.verdict = "indistinguishable by fingerprint (no ring isomorphism is claimed); "
                "not combinatorially equivalent";
  return R;
}

Family family_from_string(const std::string& s) {
  if (s == "flag") return Family::Flag;
  if (s == "apog") return Family::AlmostPogorelov;
  if (s == "iapog") return Family::IdealAlmostPogorelov;
  throw UsageError("UnknownName", "family must be one of flag|apog|iapog");
}

RigidityReport verify_rigidity_facts(Family fam, int m_max, const FingerprintOptions& opt) {
  RigidityReport R;
  R.m_max = m_max;
  std::vector<SimplePolytope> members;
  switch (fam) {
    case Family::Flag:
      R.family = "flag";
      members = enumerate_flag(m_max);
      break;
    case Family::AlmostPogorelov:
      R.family = "apog";
      members = enumerate_almost_pogorelov(m_max);
      break;
    case Family::IdealAlmostPogorelov:
      R.family = "iapog";
      members = enumerate_ideal_almost_pogorelov(m_max);
      break;
  }
  R.members = (int)members.size();
  for (auto& P : members) R.count_by_m[P.m]++;
  std::vector<Fingerprint> fps;
  for (auto& P : members) fps.push_back(fingerprint(P, opt));
  R.all_pairwise_distinct = true;
  for (size_t a = 0; a < fps.size(); ++a)
    for (size_t b = a + 1; b < fps.size(); ++b) {
      auto [diff, kind] = first_difference(fps[a], fps[b]);
      if (diff.empty()) {
        R.all_pairwise_distinct = false;
        R.collisions.emplace_back(fps[a].code_hex, fps[b].code_hex);
      } else if (kind != "ring-level") {
        // distinguished only combinatorially: not a ring-level separation
        R.all_pairwise_distinct = false;
        R.collisions.emplace_back(fps[a].code_hex, fps[b].code_hex);
      }
    }
  for (auto& fp : fps) {
    std::ostringstream os;
    os << "m=" << fp.m << " p4=" << fp.p4 << " family=" << fp.family
       << " rkB4=" << fp.ranks.b4 << " code=" << fp.code_hex.substr(0, 16) << "...";
    R.lines.push_back(os.str());
  }
  return R;
}

}  // namespace ztop
