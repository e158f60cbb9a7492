// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//
// Usage: tightforge_acceptance <path to tightforge CLI> <tests/data dir>

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tightforge/corpus.hpp"
#include "tightforge/fsp.hpp"
#include "tightforge/gpd.hpp"
#include "tightforge/hom.hpp"
#include "tightforge/io.hpp"
#include "tightforge/suite.hpp"
#include "tightforge/tlk.hpp"

namespace tf = tightforge;
namespace fs = std::filesystem;

namespace {

/// Collects failed requirements of one criterion; the first message is shown.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_++ == 0) first_ = what;
  }
  void check(const tf::suite::CheckResult& r) {
    require(r.passed(), r.name + ": " + r.first_failure);
    require(r.cases > 0, r.name + ": no cases");
    require(r.skipped == 0, r.name + ": " + std::to_string(r.skipped) + " skipped");
  }
  bool ok() const { return failures_ == 0; }
  const std::string& first() const { return first_; }
  std::size_t failures() const { return failures_; }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Verdict&)> run;
};

tf::InverseSemigroupPtr find_semigroup(const tf::suite::Context& ctx, const std::string& id) {
  for (const auto& [name, S] : ctx.semigroups)
    if (name == id) return S;
  throw tf::PreconditionFailed("corpus has no semigroup " + id);
}

tf::InverseSemigroupPtr as_semigroup(const tf::SemilatticePtr& E) {
  return std::make_shared<const tf::FiniteInverseSemigroup>(tf::FiniteInverseSemigroup::from_semilattice(*E));
}

std::string hom_string(const tf::SemilatticeHom& h) {
  std::string s;
  for (std::size_t i = 0; i < h.map.size(); ++i) s += (i ? "," : "") + h.cod->name(h.map[i]);
  return "[" + s + "]";
}

struct Run {
  int status = -1;
  std::string output;
};

Run run_cli(const std::string& cli, const std::string& args) {
  Run r;
  const std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

// ---------------------------------------------------------------------------

void chain_and_inclusion(Verdict& v) {
  const auto C = tf::corpus::chain(3);
  const int one = C->find("1"), two = C->find("2");
  v.require(tf::tight_leq(*C, two, one), "2 is not tightly below 1");
  v.require(!C->leq(two, one), "2 <= 1 in the chain");
  v.require(oracle::tight_leq(*C, two, one) && !oracle::leq(*C, two, one), "oracle disagrees on the chain");

  const auto E = tf::corpus::chain(2);
  const auto D = tf::corpus::diamond();
  const auto h = tf::SemilatticeHom::make(E, D, {D->find("0"), D->find("1")});
  v.require(tf::is_tight_hom(h).tight(), "inclusion is not tight");
  v.require(oracle::preserves_covers(h) && oracle::covers_targets(h), "oracle: inclusion is not tight");
  v.require(tf::is_tightly_injective(h) && oracle::tightly_injective(h), "inclusion is not tightly injective");
  v.require(!tf::is_tightly_surjective(h) && !oracle::tightly_surjective(h), "inclusion is tightly surjective");
  const auto d = tf::dual_map(h);
  v.require(!d.injective, "dual map of the inclusion is injective");
  v.require(d.cod_spectrum.size() == 2 && d.dom_spectrum.size() == 1, "unexpected spectrum sizes");
}

void corpus_characterizations(const tf::suite::Context& ctx, Verdict& v) {
  int small = 0;
  for (const auto& [id, E] : ctx.semilattices) small += E->size() <= 7;
  v.require(small >= 30, "fewer than 30 semilattices");
  int semigroups = 0, random = 0;
  bool has_i2 = false;
  for (const auto& [id, S] : ctx.semigroups) {
    semigroups += S->size() <= 12;
    random += id.rfind("rand", 0) == 0;
    has_i2 = has_i2 || id == "I_2";
  }
  v.require(semigroups >= 10, "fewer than 10 semigroups");
  v.require(has_i2, "I_2 missing");
  v.require(random > 0, "no random closures");
  // I_3 has 34 elements, so the cap of 12 must refuse it.
  bool refused = false;
  try {
    tf::corpus::symmetric_inverse_monoid(3, 12);
  } catch (const tf::SizeCapExceeded&) {
    refused = true;
  }
  v.require(refused, "I_3 accepted under cap 12");
  v.require(tf::corpus::symmetric_inverse_monoid(3, 64)->size() == 34, "I_3 does not have 34 elements");

  v.check(tf::suite::tight_order_characterizations(ctx));
  v.check(tf::suite::tight_order_via_spectrum_sets(ctx));
  v.check(tf::suite::kernel_criteria_for_tight_injectivity(ctx));
  v.check(tf::suite::semigroup_tight_order_on_idempotents(ctx));
  v.check(tf::suite::tight_order_passes_to_sources(ctx));
  v.check(tf::suite::tight_order_under_translation(ctx));
}

void oracle_agreement(const tf::suite::Context& ctx, Verdict& v) {
  const auto small = tf::suite::small_semilattices(ctx, 6);
  for (const auto& [id, E] : small) {
    const auto lib = tf::filters(*E);
    const auto brute = oracle::filters(*E);
    v.require(lib.size() == brute.size(), id + ": filter count");
    for (const auto& xi : lib) {
      v.require(std::find(brute.begin(), brute.end(), xi.members) != brute.end(), id + ": unknown filter");
      v.require(tf::is_tight_filter(*E, xi) == oracle::is_tight_filter(*E, xi.members),
                id + ": is_tight_filter " + tf::format_set(*E, xi.members));
    }
  }

  std::vector<std::pair<std::string, tf::InverseSemigroupPtr>> semigroups;
  for (const auto& [id, S] : ctx.semigroups)
    if (S->idempotents().size() <= 6) semigroups.emplace_back(id, S);
  for (const auto& [id, E] : small) semigroups.emplace_back(id, as_semigroup(E));
  for (const auto& [id, S] : semigroups)
    for (int s = 0; s < S->size(); ++s)
      for (int t = 0; t < S->size(); ++t)
        v.require(tf::tight_leq_s(*S, s, t) == oracle::tight_leq_s(*S, s, t),
                  id + ": tight_leq_s " + S->name(s) + " " + S->name(t));

  auto compare = [&](const tf::SemilatticeHom& h, const std::string& where) {
    v.require(tf::is_tightly_surjective(h) == oracle::tightly_surjective(h), where + " tightly surjective");
    v.require(tf::is_tight_hom(h).preserves_covers == oracle::preserves_covers(h), where + " cover preservation");
    v.require(tf::is_tight_hom(h).covers_targets == oracle::covers_targets(h), where + " target covers");
    v.require(tf::is_tightly_injective(h) == oracle::tightly_injective(h), where + " tightly injective");
  };
  for (const auto& [ida, E] : small)
    for (const auto& [idb, F] : small)
      for (const auto& h : tf::all_homs(E, F)) compare(h, ida + "->" + idb + " " + hom_string(h));
  for (const auto& [ida, S] : ctx.semigroups)
    for (const auto& [idb, T] : ctx.semigroups) {
      if (S->idempotents().size() > 6 || T->idempotents().size() > 6) continue;
      for (const auto& h : tf::all_homs(S, T)) {
        const auto r = h.restrict_to_idempotents();
        compare(r, ida + "->" + idb + " restricted " + hom_string(r));
      }
    }
}

void germ_set_order(const tf::suite::Context& ctx, Verdict& v) {
  v.check(tf::suite::tight_order_via_germ_sets(ctx));
  for (const auto& [id, E] : ctx.semilattices) {
    const auto S = as_semigroup(E);
    const auto G = tf::tight_groupoid(S);
    for (int s = 0; s < S->size(); ++s)
      for (int t = 0; t < S->size(); ++t) {
        const auto &A = G.delta(s), &B = G.delta(t);
        v.require(tf::tight_leq_s(*S, s, t) == std::includes(B.begin(), B.end(), A.begin(), A.end()),
                  id + ": order vs germ sets");
        v.require(tf::tight_equiv_s(*S, s, t) == (A == B), id + ": equivalence vs germ sets");
      }
  }
}

void dual_maps(const tf::suite::Context& ctx, Verdict& v) { v.check(tf::suite::dual_map_properties(ctx)); }

void induced_maps(const tf::suite::Context& ctx, Verdict& v) {
  v.require(!ctx.consonances.empty(), "no consonances discovered");
  v.check(tf::suite::induced_groupoid_maps(ctx));
}

void slices_and_envelopes(const tf::suite::Context& ctx, Verdict& v) {
  v.check(tf::suite::germ_order_is_partial_order(ctx));
  v.check(tf::suite::upsets_are_unions_of_germ_sets(ctx));
  v.check(tf::suite::up_slice_closure(ctx));
  v.check(tf::suite::re_axioms(ctx));
  v.check(tf::suite::idempotent_slice_covers_are_unions(ctx));
  v.check(tf::suite::envelope_is_distributive(ctx));
  v.check(tf::suite::joins_from_covers(ctx));
  v.check(tf::suite::compatibility_formulations(ctx));
  bool nontrivial = false;
  for (const auto& [id, S] : ctx.semigroups) nontrivial = nontrivial || !tf::ehresmann_re(*S).trivial_order();
  v.require(nontrivial, "no Ehresmann fixture with nontrivial order");
}

void consonance(const tf::suite::Context& ctx, Verdict& v) {
  int yes = 0, no = 0;
  for (const auto& pc : tf::suite::consonance_pairs(ctx)) {
    const auto d = tf::decide_consonant(pc.a, pc.b, ctx.limits);
    v.require(d.consonant == pc.expected, pc.first + " vs " + pc.second);
    if (pc.expected) {
      ++yes;
      v.require(tf::check_consonance(d.h1).is_consonance && tf::check_consonance(d.h2).is_consonance,
                pc.first + " vs " + pc.second + ": mediator arrows");
    } else {
      ++no;
    }
  }
  v.require(yes >= 3 && no >= 3, "too few pairs");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto env = tf::tight_envelope(S, ctx.limits);
    const auto d = tf::decide_consonant(S, env.cpl.semigroup, ctx.limits);
    v.require(d.consonant, id + " vs its envelope");
    if (d.consonant)
      v.require(tf::check_consonance(d.h1).is_consonance && tf::check_consonance(d.h2).is_consonance,
                id + " vs its envelope: mediator arrows");
    const auto f = tf::factor_through(env.rho, ctx.limits);
    v.require(compose(f.k, env.rho).map == f.envelope.rho.map, id + ": factorization of rho");
  }
  for (const auto& h : ctx.consonances) {
    const auto f = tf::factor_through(h, ctx.limits);
    v.require(compose(f.k, h).map == f.envelope.rho.map, "factorization of a consonance");
  }
  v.check(tf::suite::consonance_decisions(ctx));
}

void uniqueness(const tf::suite::Context& ctx, Verdict& v) {
  v.check(tf::suite::envelope_uniqueness(ctx));
  for (const auto& [id, S] : ctx.semigroups) {
    const auto C = tf::tight_envelope(S, ctx.limits).cpl.semigroup;
    std::vector<int> perm(C->size());
    std::iota(perm.begin(), perm.end(), 0);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    const auto R = tf::corpus::relabeled(*C, perm, "r");
    for (const auto& T : {C, R}) {
      const auto c = tf::classify(*T, ctx.limits);
      v.require(c.flat && c.distributive, id + ": envelope copy not flat and distributive");
      v.require(tf::decide_consonant(S, T, ctx.limits).consonant, id + ": envelope copy not consonant");
      v.require(tf::isomorphic(*T, *C), id + ": envelope copy not isomorphic");
    }
  }
  const auto I2 = find_semigroup(ctx, "I_2");
  const auto env = tf::tight_envelope(I2, ctx.limits);
  v.require(tf::isomorphic(*env.cpl.semigroup, *I2), "Cpl(I_2) is not isomorphic to I_2");
  std::set<int> image(env.rho.map.begin(), env.rho.map.end());
  v.require(env.cpl.semigroup->size() == I2->size() && static_cast<int>(image.size()) == I2->size(),
            "rho is not bijective on I_2");
}

void dualities(const tf::suite::Context& ctx, Verdict& v) {
  v.check(tf::suite::space_duality_round_trip(ctx));
  v.check(tf::suite::groupoid_round_trips(ctx));
  for (const auto& [id, S] : ctx.semigroups) {
    const auto r = tf::groupoid_duality_roundtrip(S, ctx.limits);
    v.require(r.mu_iso, id + ": germ map is not an isomorphism");
    v.require(r.search_iso, id + ": no isomorphism found by search");
    v.require(r.envelope_iso, id + ": U(Gt S) differs from the envelope");
  }
}

void full_dual(const tf::suite::Context& ctx, Verdict& v) {
  v.check(tf::suite::full_dual_isomorphism_criterion(ctx));
  for (const auto& [ida, E] : tf::suite::small_semilattices(ctx, 4))
    for (const auto& [idb, F] : tf::suite::small_semilattices(ctx, 4)) {
      const auto P = std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::validate(E->names(), E->table()));
      const auto Q = std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::validate(F->names(), F->table()));
      for (const auto& h : tf::all_plain_homs(P, Q)) {
        // A bijective homomorphism of finite semilattices is an isomorphism.
        const bool bijective = P->size() == Q->size() && std::set<int>(h.map.begin(), h.map.end()).size() == h.map.size();
        const auto c = tf::full_dual_iso_criterion(h);
        v.require(c.iso == bijective && c.total_and_bijective == bijective, ida + "->" + idb);
      }
    }
}

void cli(const tf::suite::Context& ctx, const std::string& cli_path, const fs::path& data, Verdict& v) {
  const fs::path dir = fs::temp_directory_path() / ("tightforge_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);

  std::vector<tf::io::Document> docs;
  for (const auto& e : ctx.semilattices) {
    docs.emplace_back(e.E);
    docs.emplace_back(
        std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::validate(e.E->names(), e.E->table())));
  }
  for (const auto& [id, S] : ctx.semigroups) {
    docs.emplace_back(S);
    docs.emplace_back(tf::tight_groupoid(S).germs.groupoid);
    docs.emplace_back(std::make_shared<const tf::FiniteOrderedGroupoid>(tf::ehresmann_re(*S)));
    docs.emplace_back(tf::SemigroupHom::identity(S));
  }
  for (const auto& [gens, S] : tf::corpus::random_closures(ctx.seed, 8, 3, ctx.limits.max_elements))
    docs.emplace_back(tf::io::PartialBijections{3, gens, S});
  for (const auto& [id, X] : ctx.spaces) docs.emplace_back(X);
  for (const auto& h : ctx.consonances) docs.emplace_back(h);

  int n = 0;
  for (const auto& doc : docs) {
    const auto text = tf::io::to_json(doc).dump(2) + "\n";
    const auto file = dir / ("doc" + std::to_string(n++) + ".json");
    std::ofstream(file) << text;
    const auto r = run_cli(cli_path, "print \"" + file.string() + "\"");
    v.require(r.status == 0 && r.output == text, "round trip of " + tf::io::kind_of(doc) + " " + file.string());
  }

  auto expect = [&](const std::string& args, int status) {
    const auto r = run_cli(cli_path, args);
    v.require(r.status == status, "'" + args + "' exited " + std::to_string(r.status) + ", expected " +
                                      std::to_string(status));
  };
  auto in = [&](const char* name) { return "\"" + (data / name).string() + "\""; };
  expect("tight-order " + in("chain.json") + " 2 1", 0);
  expect("tight-order " + in("diamond.json") + " e f", 1);
  expect("consonant " + in("i2.json") + " " + in("b2.json"), 0);
  expect("consonant " + in("chain.json") + " " + in("diamond.json"), 1);
  expect("check-hom " + in("inclusion.json"), 0);
  expect("check-consonance " + in("inclusion.json"), 1);
  expect("full-spectrum " + in("plain_inclusion.json"), 1);
  expect("validate " + in("i2.json"), 0);
  expect("validate " + in("non_associative.json"), 2);
  expect("validate " + in("bad_reference.json"), 2);
  expect("validate " + in("malformed.json"), 2);
  expect("validate " + in("no_such_file.json"), 2);
  expect("no-such-command", 2);
  expect("tight-order " + in("chain.json") + " 2 q", 2);
  expect("--max-elements 5 validate " + in("i2.json"), 2);
  expect("duality " + in("two_chain_space.json"), 1);

  const auto first = run_cli(cli_path, "suite --seed 7");
  const auto second = run_cli(cli_path, "suite --seed 7");
  v.require(first.status == 0, "suite --seed 7 failed");
  v.require(!first.output.empty() && first.output == second.output, "suite --seed 7 output differs between runs");

  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <tightforge CLI> <test data dir>\n";
    return 2;
  }
  const std::string cli_path = argv[1];
  const fs::path data = argv[2];

  const auto t0 = std::chrono::steady_clock::now();
  const auto ctx = tf::suite::make_context(7);
  const double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "corpus: " << ctx.semilattices.size() << " semilattices, " << ctx.semigroups.size()
            << " semigroups, " << ctx.consonances.size() << " consonances among " << ctx.homs_enumerated
            << " homs (" << std::fixed << std::setprecision(2) << setup << " s)\n";

  const std::vector<Criterion> criteria = {
      {1, "chain example and the inclusion into the diamond", 1, chain_and_inclusion},
      {2, "tight order characterizations over the corpus", 60, [&](Verdict& v) { corpus_characterizations(ctx, v); }},
      {3, "decision procedures agree with brute-force oracles", 120, [&](Verdict& v) { oracle_agreement(ctx, v); }},
      {4, "tight order is inclusion of germ sets", 0, [&](Verdict& v) { germ_set_order(ctx, v); }},
      {5, "dual maps of tight homomorphisms", 0, [&](Verdict& v) { dual_maps(ctx, v); }},
      {6, "induced groupoid maps of consonances", 0, [&](Verdict& v) { induced_maps(ctx, v); }},
      {7, "germ order, up-slices and envelopes", 0, [&](Verdict& v) { slices_and_envelopes(ctx, v); }},
      {8, "consonance decisions and factorizations", 0, [&](Verdict& v) { consonance(ctx, v); }},
      {9, "uniqueness of the tight envelope", 0, [&](Verdict& v) { uniqueness(ctx, v); }},
      {10, "space and groupoid dualities", 120, [&](Verdict& v) { dualities(ctx, v); }},
      {11, "full dual isomorphism criterion", 60, [&](Verdict& v) { full_dual(ctx, v); }},
      {12, "command line round trips, exit codes and determinism", 0,
       [&](Verdict& v) { cli(ctx, cli_path, data, v); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) v.require(secs < c.limit_seconds, "time limit exceeded");
    std::cout << (v.ok() ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << " (" << std::fixed
              << std::setprecision(2) << secs << " s)";
    if (!v.ok()) std::cout << ": " << v.failures() << " failures, first: " << v.first();
    std::cout << "\n";
    failed += !v.ok();
  }
  std::cout << (failed ? "acceptance: FAILED " + std::to_string(failed) : std::string("acceptance: all passed"))
            << "\n";
  return failed ? 1 : 0;
}
