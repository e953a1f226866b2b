#include "ztop/cli_core.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ostream>
#include <random>

#include "ztop/catalog.hpp"
#include "ztop/json_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ztop {

namespace {

struct Options {
  bool json = false;
  int threads = 0;
  std::string input, input_b;
  int k = 0;
  bool table = false;
  std::string coeff = "q";
  bool full = false;
  std::string family = "flag";
  int max_faces = 8;
  bool count_only = false;
  int stability = 0;
  unsigned seed = 1;
};

void cmd_build(const Options& o, std::ostream& out) {
  SimplePolytope P = resolve_polytope(o.input);
  if (o.json) {
    Json j = polytope_to_json(P);
    j["f"] = P.f_vector();
    j["p_vector"] = P.p_vector();
    j["canonical_code"] = canonical_code_hex(P);
    out << j.dump(2) << "\n";
    return;
  }
  auto [f0, f1, f2] = P.f_vector();
  out << "m = " << P.m << ", f = (" << f0 << ", " << f1 << ", " << f2 << ")\n";
  auto pv = P.p_vector();
  out << "p-vector:";
  for (int k = 3; k < (int)pv.size(); ++k)
    if (pv[k]) out << " p" << k << "=" << pv[k];
  out << "\ncanonical code: " << canonical_code_hex(P) << "\n";
}

void cmd_classify(const Options& o, std::ostream& out) {
  SimplePolytope P = resolve_polytope(o.input);
  auto R = classify_family(P);
  if (o.json) {
    Json j;
    j["family"] = to_string(R.cls);
    j["has_3belt"] = R.has_3belt;
    j["all_3belts_trivial"] = R.all_3belts_trivial;
    j["has_4belt"] = R.has_4belt;
    j["all_4belts_trivial"] = R.all_4belts_trivial;
    j["has_nontrivial_5belt"] = R.has_nontrivial_5belt;
    j["vertex_on_unique_quad"] = R.vertex_on_unique_quad;
    j["is_flag"] = R.in_flag();
    j["in_almost_pogorelov"] = R.in_apog();
    j["in_pogorelov"] = R.in_pog();
    j["is_ideal"] = R.is_ideal();
    out << j.dump(2) << "\n";
    return;
  }
  out << "family: " << to_string(R.cls) << "\n";
  out << "flags: 3-belts=" << (R.has_3belt ? "yes" : "no")
      << " 4-belts=" << (R.has_4belt ? "yes" : "no")
      << " all-4-trivial=" << (R.all_4belts_trivial ? "yes" : "no")
      << " nontrivial-5-belt=" << (R.has_nontrivial_5belt ? "yes" : "no")
      << " vertex-on-unique-quad=" << (R.vertex_on_unique_quad ? "yes" : "no") << "\n";
}

void cmd_belts(const Options& o, std::ostream& out) {
  SimplePolytope P = resolve_polytope(o.input);
  if (o.k == 0) {
    if (o.json) {
      Json j = Json::object();
      for (int k = 3; k <= std::min(P.m, 6); ++k) {
        auto bs = enumerate_belts(P, k);
        long long triv = 0;
        for (auto& B : bs) triv += B.trivial();
        j[std::to_string(k)] = {{"count", bs.size()},
                                {"trivial", triv},
                                {"nontrivial", (long long)bs.size() - triv}};
      }
      out << j.dump(2) << "\n";
      return;
    }
    for (int k = 3; k <= std::min(P.m, 6); ++k) {
      auto bs = enumerate_belts(P, k);
      long long triv = 0;
      for (auto& B : bs) triv += B.trivial();
      out << k << "-belts: " << bs.size() << " (" << triv << " trivial, "
          << bs.size() - triv << " nontrivial)\n";
    }
    return;
  }
  auto bs = enumerate_belts(P, o.k);
  if (o.json) {
    Json j = Json::array();
    for (auto& B : bs) j.push_back(belt_to_json(B));
    out << j.dump(2) << "\n";
    return;
  }
  long long triv = 0;
  for (auto& B : bs) triv += B.trivial();
  out << bs.size() << " belts of length " << o.k << " (" << triv << " trivial, "
      << bs.size() - triv << " nontrivial)\n";
  for (auto& B : bs) {
    out << "  (";
    for (size_t t = 0; t < B.faces.size(); ++t) out << (t ? " " : "") << B.faces[t];
    out << ")";
    if (B.trivial()) {
      out << " trivial around";
      for (int f : B.trivial_sides) out << " " << f;
    }
    out << "\n";
  }
}

void cmd_betti(const Options& o, std::ostream& out) {
  SimplePolytope P = resolve_polytope(o.input);
  BettiTable T = bigraded_betti(P);
  if (o.json) {
    out << betti_to_json(T).dump(2) << "\n";
    return;
  }
  out << betti_text_table(T);
  if (o.table) {
    out << "bigraded (i, j, beta^{-i,2j}):\n";
    for (int i = 0; i < (int)T.beta.size(); ++i)
      for (int j = 0; j < (int)T.beta[i].size(); ++j)
        if (T.beta[i][j]) out << "  (" << i << ", " << j << ", " << T.beta[i][j] << ")\n";
  }
  out << "Poincare series identity: " << (verify_poincare_series(P, T) ? "ok" : "FAILED")
      << "\n";
}

void cmd_ring(const Options& o, std::ostream& out) {
  SimplePolytope P = resolve_polytope(o.input);
  auto T = build_ring(P, o.coeff == "z" ? Coeff::Z : Coeff::Q);
  auto R = T->ranks();
  bool flag = is_flag(P);
  if (o.json) {
    Json j = ring_to_json(*T, o.full || P.m <= 10);
    j["ranks"] = ranks_to_json(R);
    if (flag) {
      j["criterion_bapog"] = T->criterion_bapog();
      j["criterion_ideal_bapog"] = T->criterion_ideal_bapog();
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << "ring dimension: " << T->total_dim() << " over " << (o.coeff == "z" ? "Z" : "Q")
      << "\n";
  out << "rk H^3 = " << R.n2 << ", rk A3 = " << R.a3 << ", rk B4 = " << R.b4
      << ", rk B5 = " << R.b5 << ", rk H3/A3 = " << R.h3 << ", rk I7 = " << R.i7
      << ", rk A7 = " << R.a7 << ", rk I7/A7 = " << R.bold_i7 << "\n";
  if (flag) {
    out << "almost-Pogorelov criterion: " << (T->criterion_bapog() ? "yes" : "no") << "\n";
    out << "ideal criterion: " << (T->criterion_ideal_bapog() ? "yes" : "no") << "\n";
  } else {
    out << "(family criteria skipped: polytope is not flag)\n";
  }
}

void cmd_fingerprint(const Options& o, std::ostream& out) {
  SimplePolytope P = resolve_polytope(o.input);
  Fingerprint F = fingerprint(P);
  if (o.json) {
    out << fingerprint_to_json(F).dump(2) << "\n";
    return;
  }
  Json j = fingerprint_to_json(F);
  out << j.dump(2) << "\n";
}

void cmd_compare(const Options& o, std::ostream& out) {
  SimplePolytope P = resolve_polytope(o.input);
  SimplePolytope Q = resolve_polytope(o.input_b);
  CompareReport R = compare(P, Q);
  if (o.json) {
    out << compare_to_json(R).dump(2) << "\n";
    return;
  }
  out << R.verdict << "\n";
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  std::vector<SimplePolytope> v;
  switch (family_from_string(o.family)) {
    case Family::Flag: v = enumerate_flag(o.max_faces); break;
    case Family::AlmostPogorelov: v = enumerate_almost_pogorelov(o.max_faces); break;
    case Family::IdealAlmostPogorelov: v = enumerate_ideal_almost_pogorelov(o.max_faces); break;
  }
  std::map<int, int> counts;
  // include explicit zeros over the family's admissible face counts
  int m_min = family_from_string(o.family) == Family::IdealAlmostPogorelov ? 14 : 6;
  int step = family_from_string(o.family) == Family::IdealAlmostPogorelov ? 2 : 1;
  for (int m = m_min; m <= o.max_faces; m += step) counts[m] = 0;
  for (auto& P : v) counts[P.m]++;
  if (o.json) {
    Json j;
    Json manifest = Json::object();
    for (auto& [m, c] : counts) manifest[std::to_string(m)] = c;
    j["family"] = o.family;
    j["max_faces"] = o.max_faces;
    j["counts_by_m"] = manifest;
    j["total"] = v.size();
    if (!o.count_only) {
      Json arr = Json::array();
      for (auto& P : v) {
        Json e = polytope_to_json(P);
        e["canonical_code"] = canonical_code_hex(P);
        arr.push_back(e);
      }
      j["polytopes"] = arr;
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << o.family << " polytopes with m <= " << o.max_faces << ": " << v.size() << "\n";
  for (auto& [m, c] : counts) out << "  m=" << m << ": " << c << "\n";
  if (!o.count_only)
    for (auto& P : v)
      out << "  m=" << P.m << " p4=" << P.p4() << " code=" << canonical_code_hex(P) << "\n";
}

void cmd_verify(const Options& o, std::ostream& out) {
  RigidityReport R = verify_rigidity_facts(family_from_string(o.family), o.max_faces);
  bool stable = true;
  if (o.stability > 0) {
    // fingerprint stability under random relabelings
    std::mt19937 rng(o.seed);
    std::vector<SimplePolytope> v;
    switch (family_from_string(o.family)) {
      case Family::Flag: v = enumerate_flag(o.max_faces); break;
      case Family::AlmostPogorelov: v = enumerate_almost_pogorelov(o.max_faces); break;
      case Family::IdealAlmostPogorelov: v = enumerate_ideal_almost_pogorelov(o.max_faces); break;
    }
    for (auto& P : v) {
      Fingerprint F0 = fingerprint(P);
      for (int t = 0; t < o.stability; ++t) {
        std::vector<int> perm(P.m);
        for (int i = 0; i < P.m; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Fingerprint F1 = fingerprint(relabel(P, perm, t % 2 == 1));
        if (fingerprint_to_json(F0) != fingerprint_to_json(F1)) stable = false;
      }
    }
  }
  if (o.json) {
    Json j = rigidity_to_json(R);
    if (o.stability > 0) j["relabel_stable"] = stable;
    out << j.dump(2) << "\n";
    return;
  }
  out << "family " << R.family << ", m <= " << R.m_max << ": " << R.members << " members\n";
  for (auto& [m, c] : R.count_by_m) out << "  m=" << m << ": " << c << "\n";
  for (auto& l : R.lines) out << "  " << l << "\n";
  out << "pairwise distinguished by ring-level fingerprint fields: "
      << (R.all_pairwise_distinct ? "yes" : "NO") << "\n";
  if (o.stability > 0)
    out << "fingerprint stable under " << o.stability
        << " random relabelings: " << (stable ? "yes" : "NO") << "\n";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"combinatorics and moment-angle cohomology of simple 3-polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--threads", o.threads, "worker threads (0 = library default)");

  auto add_input = [&](CLI::App* c) {
    c->add_option("input", o.input, "catalog name or polytope JSON file")->required();
  };
  auto* build = app.add_subcommand("build", "validate a polytope and print invariants");
  add_input(build);
  auto* classify = app.add_subcommand("classify", "cyclic-connectivity family classification");
  add_input(classify);
  auto* belts = app.add_subcommand("belts", "enumerate k-belts");
  add_input(belts);
  belts->add_option("--k", o.k, "belt length (default: summary for k <= 6)");
  auto* betti = app.add_subcommand("betti", "bigraded Betti numbers of Z_P");
  add_input(betti);
  betti->add_flag("--table", o.table, "also print the bigraded table");
  auto* ring = app.add_subcommand("ring", "cohomology ring ranks and criteria");
  add_input(ring);
  ring->add_option("--coeff", o.coeff, "z or q")->check(CLI::IsMember({"z", "q"}));
  ring->add_flag("--full", o.full, "include structure constants in --json output");
  auto* fp = app.add_subcommand("fingerprint", "rigidity fingerprint");
  add_input(fp);
  auto* cmp = app.add_subcommand("compare", "compare two polytopes by fingerprint");
  cmp->add_option("input", o.input, "first polytope")->required();
  cmp->add_option("input_b", o.input_b, "second polytope")->required();
  auto* en = app.add_subcommand("enumerate", "enumerate a family up to a face bound");
  en->add_option("--family", o.family, "flag | apog | iapog")->required();
  en->add_option("--max-faces", o.max_faces, "face bound")->required();
  en->add_flag("--count-only", o.count_only, "only report counts per m");
  auto* ver = app.add_subcommand("verify", "pairwise-distinctness report for a family");
  ver->add_option("--family", o.family, "flag | apog | iapog")->required();
  ver->add_option("--max-faces", o.max_faces, "face bound")->required();
  ver->add_option("--stability", o.stability, "random relabelings per member");
  ver->add_option("--seed", o.seed, "seed for the relabeling check");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif

  try {
    if (build->parsed()) cmd_build(o, out);
    else if (classify->parsed()) cmd_classify(o, out);
    else if (belts->parsed()) cmd_belts(o, out);
    else if (betti->parsed()) cmd_betti(o, out);
    else if (ring->parsed()) cmd_ring(o, out);
    else if (fp->parsed()) cmd_fingerprint(o, out);
    else if (cmp->parsed()) cmd_compare(o, out);
    else if (en->parsed()) cmd_enumerate(o, out);
    else if (ver->parsed()) cmd_verify(o, out);
  } catch (const BoundError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace ztop
