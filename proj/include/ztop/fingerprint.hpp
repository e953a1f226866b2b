#ifndef ZTOP_FINGERPRINT_HPP
#define ZTOP_FINGERPRINT_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ztop/belts.hpp"
#include "ztop/polytope.hpp"
#include "ztop/subset_betti.hpp"
#include "ztop/torring.hpp"

namespace ztop {

// The invariant record used to distinguish polytopes.  Ring-level fields are
// the B-rigid content; combinatorial fields are listed separately and never
// used to certify a ring-level distinction.
struct Fingerprint {
  int m = 0;
  std::array<long long, 3> f{};
  int p4 = 0;
  std::vector<int> pvec;
  // per k (3..k_max): {count, trivial, nontrivial}
  std::map<int, std::array<long long, 3>> belts;
  std::map<int, std::array<long long, 3>> quad_alt;  // per 2k
  BettiTable betti;
  RingRanks ranks;
  std::string family;
  bool deep = false;                  // annihilator/good-bad fields populated
  std::vector<long long> ann_codims;  // sorted multiset over N2
  std::vector<long long> bad_counts;  // sorted multiset over N2
  std::string code_hex;               // combinatorial identity
};

struct FingerprintOptions {
  int k_max = 6;
  int deep_max_m = 12;   // annihilator multiset + good/bad profile bound
  int ring_max_m = 20;   // ring rank fields bound
  int betti_max_m = 20;
};

Fingerprint fingerprint(const SimplePolytope& P, const FingerprintOptions& opt = {});

struct CompareReport {
  bool fingerprints_equal = false;
  std::string first_difference;  // empty when equal
  std::string difference_kind;   // "ring-level" or "combinatorial"
  bool isomorphic = false;
  std::string verdict;
};

CompareReport compare(const SimplePolytope& P, const SimplePolytope& Q,
                      const FingerprintOptions& opt = {});

enum class Family { Flag, AlmostPogorelov, IdealAlmostPogorelov };
Family family_from_string(const std::string& s);

struct RigidityReport {
  std::string family;
  int m_max = 0;
  std::map<int, int> count_by_m;
  int members = 0;
  bool all_pairwise_distinct = false;
  std::vector<std::pair<std::string, std::string>> collisions;  // codes
  std::vector<std::string> lines;                               // human-readable detail
};

RigidityReport verify_rigidity_facts(Family fam, int m_max,
                                     const FingerprintOptions& opt = {});

}  // namespace ztop

#endif
