#include "tightforge/suite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tightforge/error.hpp"
#include "tightforge/fsp.hpp"
#include "tightforge/gpd.hpp"
#include "tightforge/hom.hpp"
#include "tightforge/io.hpp"
#include "tightforge/tlk.hpp"

namespace tightforge::suite {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  template <class Where>
  void record(bool ok, Where&& where) {
    ++r_.cases;
    if (!ok && r_.failures++ == 0) r_.first_failure = where();
  }
  void skip() { ++r_.skipped; }
  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string pair_name(const std::string& id, const std::string& a, const std::string& b) {
  return id + " (" + a + ", " + b + ")";
}

/// All subsets of `items` of size between 1 and `max_size`.
template <class F>
void for_each_family(const std::vector<int>& items, std::size_t max_size, F&& f) {
  std::vector<int> family;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!family.empty()) f(family);
    if (family.size() == max_size) return;
    for (std::size_t i = start; i < items.size(); ++i) {
      family.push_back(items[i]);
      self(self, i + 1);
      family.pop_back();
    }
  };
  rec(rec, 0);
}

std::size_t family_bound(std::size_t n) { return n <= 12 ? n : 2; }

InverseSemigroupPtr as_semigroup(const SemilatticePtr& E) {
  return std::make_shared<const FiniteInverseSemigroup>(FiniteInverseSemigroup::from_semilattice(*E));
}

bool within_arrow_cap(const InverseSemigroupPtr& S, const Limits& limits) {
  return static_cast<std::size_t>(tight_groupoid(S).groupoid().size()) <= limits.max_arrows;
}

template <class Hom>
std::string map_string(const Hom& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.map.size(); ++i)
    s += (i ? "," : "") + h.dom->name(static_cast<int>(i)) + ">" + h.cod->name(h.map[i]);
  return s + "}";
}

}  // namespace

Context make_context(std::uint64_t seed, const Limits& limits) {
  Context ctx;
  ctx.seed = seed;
  ctx.limits = limits;
  ctx.semilattices = corpus::semilattices();
  ctx.semigroups = corpus::semigroups(seed);
  ctx.spaces = corpus::spaces();
  for (const auto& [ida, S] : ctx.semigroups)
    for (const auto& [idb, T] : ctx.semigroups)
      for (auto& h : all_homs(S, T)) {
        ++ctx.homs_enumerated;
        if (check_consonance(h).is_consonance) ctx.consonances.push_back(std::move(h));
      }
  return ctx;
}

std::vector<corpus::NamedSemilattice> small_semilattices(const Context& ctx, int max_size) {
  std::vector<corpus::NamedSemilattice> out;
  for (const auto& e : ctx.semilattices)
    if (e.E->size() <= max_size) out.push_back(e);
  return out;
}

std::vector<PairCase> consonance_pairs(const Context& ctx) {
  auto find = [&](const std::string& id) {
    for (const auto& [name, S] : ctx.semigroups)
      if (name == id) return S;
    throw PreconditionFailed("corpus has no semigroup " + id);
  };
  const auto chain2 = as_semigroup(corpus::chain(2));
  return {
      {"I_2", "B_2", find("I_2"), find("B_2"), true},
      {"chain3", "chain2", find("chain3"), chain2, true},
      {"fan2", "diamond", find("fan2"), find("diamond"), true},
      {"B_3", "I_2", find("B_3"), find("I_2"), false},
      {"chain3", "diamond", find("chain3"), find("diamond"), false},
      {"Z2_0", "chain3", find("Z2_0"), find("chain3"), false},
      {"B_2", "fan2", find("B_2"), find("fan2"), false},
      {"Z3_0", "Z2_0", find("Z3_0"), find("Z2_0"), false},
  };
}

CheckResult tight_order_characterizations(const Context& ctx) {
  Tally t("tight order: five characterizations agree");
  for (const auto& [id, Ep] : ctx.semilattices) {
    const auto& E = *Ep;
    const auto sp = tight_spectrum(E);
    const int n = E.size();
    for (int e = 0; e < n; ++e)
      for (int f = 0; f < n; ++f) {
        const bool i = tight_leq(E, e, f);
        bool ii = true, iii = true, iv = true, v = true;
        for (const auto& xi : sp.points) {
          const int phi_e = xi.contains(e) ? 1 : 0, phi_f = xi.contains(f) ? 1 : 0;
          ii = ii && phi_e <= phi_f;
          iii = iii && (!xi.contains(e) || xi.contains(f));
        }
        for (int g = 0; g < n; ++g) {
          iv = iv && (!E.perp(g, f) || E.perp(g, e));
          if (g != E.zero() && E.leq(g, e)) v = v && !E.perp(g, f);
        }
        t.record(i == ii && i == iii && i == iv && i == v, [&] { return pair_name(id, E.name(e), E.name(f)); });
      }
  }
  return t.done();
}

CheckResult tight_order_is_preorder(const Context& ctx) {
  Tally t("tight order: reflexive and transitive");
  for (const auto& [id, Ep] : ctx.semilattices) {
    const auto& E = *Ep;
    const int n = E.size();
    for (int e = 0; e < n; ++e) {
      t.record(tight_leq(E, e, e), [&] { return id + " " + E.name(e); });
      for (int f = 0; f < n; ++f) {
        if (!tight_leq(E, e, f)) continue;
        for (int g = 0; g < n; ++g)
          if (tight_leq(E, f, g))
            t.record(tight_leq(E, e, g), [&] { return id + " (" + E.name(e) + ", " + E.name(f) + ", " + E.name(g) + ")"; });
      }
    }
  }
  return t.done();
}

CheckResult tight_order_via_spectrum_sets(const Context& ctx) {
  Tally t("tight order: inclusion of spectrum sets");
  for (const auto& [id, Ep] : ctx.semilattices) {
    const auto& E = *Ep;
    const auto sp = tight_spectrum(E);
    for (int e = 0; e < E.size(); ++e)
      for (int f = 0; f < E.size(); ++f) {
        const bool inc = subset(sp.d_sets[e], sp.d_sets[f]);
        t.record(tight_leq(E, e, f) == inc && tight_equiv(E, e, f) == (sp.d_sets[e] == sp.d_sets[f]),
                 [&] { return pair_name(id, E.name(e), E.name(f)); });
      }
  }
  return t.done();
}

CheckResult nonzero_elements_lie_in_tight_filters(const Context& ctx) {
  Tally t("tight spectrum: every nonzero element lies in a tight filter");
  for (const auto& [id, Ep] : ctx.semilattices) {
    const auto sp = tight_spectrum(*Ep);
    for (int e = 0; e < Ep->size(); ++e)
      if (e != Ep->zero()) t.record(!sp.d_sets[e].empty(), [&] { return id + " " + Ep->name(e); });
  }
  return t.done();
}

CheckResult tight_filters_are_ultra(const Context& ctx) {
  Tally t("tight spectrum: tight filters are the ultra-filters");
  for (const auto& [id, Ep] : ctx.semilattices) {
    const auto& E = *Ep;
    for (const auto& xi : filters(E))
      t.record(is_tight_filter(E, xi) == xi.ultra && xi.ultra == E.is_atom(xi.minimum),
               [&] { return id + " " + format_set(E, xi.members); });
    t.record(tight_spectrum(E).size() == static_cast<int>(E.atoms().size()), [&] { return id + " point count"; });
  }
  return t.done();
}

CheckResult kernel_criteria_for_tight_injectivity(const Context& ctx) {
  Tally t("semilattice homs: trivial kernel, tight injectivity and order reflection agree");
  // Every corpus semilattice appears, paired with the small ones on either side.
  for (const auto& [ida, E] : ctx.semilattices)
    for (const auto& [idb, F] : ctx.semilattices) {
      if (E->size() > 4 && F->size() > 4) continue;
      for (const auto& h : all_homs(E, F)) {
        const bool i = kernel(h) == std::vector<int>{E->zero()};
        const bool ii = is_tightly_injective(h);
        bool iii = true;
        for (int e = 0; e < E->size(); ++e)
          for (int f = 0; f < E->size(); ++f)
            if (tight_leq(*F, h(e), h(f)) && !tight_leq(*E, e, f)) iii = false;
        t.record(i == ii && i == iii, [&] { return ida + "->" + idb + " " + map_string(h); });
      }
    }
  return t.done();
}

CheckResult semigroup_tight_order_on_idempotents(const Context& ctx) {
  Tally t("inverse semigroups: tight order on idempotents matches the semilattice");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto& E = S->idempotents();
    for (int e = 0; e < E.size(); ++e)
      for (int f = 0; f < E.size(); ++f)
        t.record(tight_leq_s(*S, S->from_e(e), S->from_e(f)) == tight_leq(E, e, f),
                 [&] { return pair_name(id, E.name(e), E.name(f)); });
  }
  return t.done();
}

CheckResult tight_order_passes_to_sources(const Context& ctx) {
  Tally t("inverse semigroups: tight order passes to source idempotents");
  for (const auto& [id, S] : ctx.semigroups)
    for (int s = 0; s < S->size(); ++s)
      for (int u = 0; u < S->size(); ++u) {
        if (tight_leq_s(*S, s, u))
          t.record(tight_leq_s(*S, S->dom(s), S->dom(u)), [&] { return pair_name(id, S->name(s), S->name(u)); });
        if (tight_equiv_s(*S, s, u))
          t.record(tight_equiv_s(*S, S->dom(s), S->dom(u)), [&] { return pair_name(id, S->name(s), S->name(u)); });
      }
  return t.done();
}

CheckResult tight_order_via_germ_sets(const Context& ctx) {
  Tally t("inverse semigroups: tight order is inclusion of germ sets");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto G = tight_groupoid(S);
    for (int s = 0; s < S->size(); ++s)
      for (int u = 0; u < S->size(); ++u)
        t.record(tight_leq_s(*S, s, u) == subset(G.delta(s), G.delta(u)) &&
                     tight_equiv_s(*S, s, u) == (G.delta(s) == G.delta(u)),
                 [&] { return pair_name(id, S->name(s), S->name(u)); });
  }
  return t.done();
}

CheckResult tight_order_under_translation(const Context& ctx) {
  Tally t("inverse semigroups: tight order under translation");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto& idem = S->idempotent_list();
    const int n = S->size();
    for (int s = 0; s < n; ++s)
      for (int u = 0; u < n; ++u) {
        for (int f : idem) {
          if (!tight_equiv_s(*S, S->mul(s, f), S->mul(u, f))) continue;
          for (int e : idem)
            if (tight_leq_s(*S, e, f))
              t.record(tight_equiv_s(*S, S->mul(s, e), S->mul(u, e)),
                       [&] { return id + " s=" + S->name(s) + " t=" + S->name(u) + " e=" + S->name(e); });
        }
        if (tight_leq_s(*S, s, u))
          for (int r = 0; r < n; ++r)
            t.record(tight_leq_s(*S, S->mul(s, r), S->mul(u, r)),
                     [&] { return id + " s=" + S->name(s) + " t=" + S->name(u) + " r=" + S->name(r); });
      }
  }
  return t.done();
}

CheckResult tight_hom_character_conditions(const Context& ctx) {
  Tally t("semilattice homs: character and cover conditions for tightness agree");
  const auto small = small_semilattices(ctx, 4);
  for (const auto& [ida, E] : small)
    for (const auto& [idb, F] : small) {
      const auto spF = tight_spectrum(*F);
      for (const auto& h : all_homs(E, F)) {
        const auto rep = is_tight_hom(h);
        bool nonzero = true, tight = true;
        for (const auto& psi : spF.points) {
          std::vector<int> pulled;
          for (int e = 0; e < E->size(); ++e)
            if (psi.contains(h(e))) pulled.push_back(e);
          if (pulled.empty()) {
            nonzero = false;
            continue;
          }
          Filter xi;
          xi.members = pulled;
          xi.minimum = std::accumulate(pulled.begin(), pulled.end(), pulled.front(),
                                       [&](int a, int b) { return E->meet(a, b); });
          if (!is_filter(*E, pulled) || !is_tight_filter(*E, xi)) tight = false;
        }
        t.record(nonzero == rep.covers_targets, [&] { return ida + "->" + idb + " " + map_string(h) + " targets"; });
        if (nonzero)
          t.record(tight == rep.preserves_covers, [&] { return ida + "->" + idb + " " + map_string(h) + " covers"; });
      }
    }
  return t.done();
}

CheckResult dual_map_properties(const Context& ctx) {
  Tally t("semilattice homs: dual map surjective, order-injective and inverse");
  const auto small = small_semilattices(ctx, 5);
  for (const auto& [ida, E] : small)
    for (const auto& [idb, F] : small)
      for (const auto& h : all_homs(E, F)) {
        const auto where = [&] { return ida + "->" + idb + " " + map_string(h); };
        const auto rep = is_tight_hom(h);
        const bool inj = is_tightly_injective(h), sur = is_tightly_surjective(h);
        // Both tight properties together force tightness.
        if (inj && sur) t.record(rep.tight(), where);
        if (!rep.tight()) continue;
        const auto d = dual_map(h);
        t.record(d.surjective == inj, where);
        t.record(d.order_injective == sur, where);
        t.record(d.order_preserving, where);
        bool order_iso = d.injective && d.surjective;
        for (int x = 0; x < d.cod_spectrum.size() && order_iso; ++x)
          for (int y = 0; y < d.cod_spectrum.size(); ++y)
            if (d.cod_spectrum.order[x][y] != d.dom_spectrum.order[d.hat[x]][d.hat[y]]) order_iso = false;
        const bool consonance = inj && sur;
        t.record(order_iso == consonance, where);
        if (consonance) {
          const auto inv = check_inverse(h);
          bool exact = inv.size() == static_cast<std::size_t>(d.dom_spectrum.size());
          for (std::size_t x = 0; exact && x < inv.size(); ++x) exact = d.hat[inv[x]] == static_cast<int>(x);
          t.record(exact && inverse_dual_candidate(h) == inv, where);
        }
      }
  return t.done();
}

CheckResult induced_groupoid_maps(const Context& ctx) {
  Tally t("inverse semigroup homs: induced groupoid maps of consonances are isomorphisms");
  auto check_iso = [&](const SemigroupHom& h, const std::string& where) {
    const auto m = induced_groupoid_map(h);
    t.record(m.injective && m.surjective && m.functor && m.order_preserving && m.order_reflecting,
             [&] { return where; });
  };
  for (const auto& [id, S] : ctx.semigroups) {
    const auto env = tight_envelope(S, ctx.limits);
    check_iso(env.rho, id + " fundamental");
  }
  for (const auto& h : ctx.consonances) check_iso(h, "consonance " + map_string(h));
  // Converse: a bijective induced map comes from a consonance.
  for (const auto& [ida, S] : ctx.semigroups)
    for (const auto& [idb, T] : ctx.semigroups)
      for (const auto& h : all_homs(S, T)) {
        const auto cv = check_consonance(h);
        if (!cv.restriction_consonance) continue;
        const auto m = induced_groupoid_map(h);
        if (m.injective && m.surjective) t.record(cv.is_consonance, [&] { return ida + "->" + idb + " " + map_string(h); });
        if (cv.is_consonance) t.record(m.injective && m.surjective, [&] { return ida + "->" + idb + " " + map_string(h); });
      }
  return t.done();
}

CheckResult germ_order_is_partial_order(const Context& ctx) {
  Tally t("tight groupoids: germ order is a partial order");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto T = tight_groupoid(S);
    const auto& G = T.groupoid();
    const int n = G.size();
    for (int a = 0; a < n; ++a) {
      t.record(G.leq(a, a), [&] { return id + " " + G.name(a); });
      for (int b = 0; b < n; ++b) {
        if (a != b && G.leq(a, b)) t.record(!G.leq(b, a), [&] { return pair_name(id, G.name(a), G.name(b)); });
        if (!G.leq(a, b)) continue;
        for (int c = 0; c < n; ++c)
          if (G.leq(b, c)) t.record(G.leq(a, c), [&] { return pair_name(id, G.name(a), G.name(c)); });
      }
    }
  }
  return t.done();
}

CheckResult upsets_are_unions_of_germ_sets(const Context& ctx) {
  Tally t("tight groupoids: up-sets are unions of germ sets");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto T = tight_groupoid(S);
    const auto& G = T.groupoid();
    const int n = G.size();
    if (static_cast<std::size_t>(n) > ctx.limits.max_arrows) {
      t.skip();
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ArrowSet A;
      for (int a = 0; a < n; ++a)
        if (mask >> a & 1) A.push_back(a);
      std::vector<bool> covered(n, false);
      for (int s = 0; s < S->size(); ++s)
        if (subset(T.delta(s), A))
          for (int a : T.delta(s)) covered[a] = true;
      bool is_union = true;
      for (int a : A) is_union = is_union && covered[a];
      t.record(is_up_set(G, A) == is_union, [&] { return id + " " + slice_name(G, A); });
    }
  }
  return t.done();
}

CheckResult up_slice_closure(const Context& ctx) {
  Tally t("up-slices: closed under product and inverse; source and range maps are order embeddings");
  auto check = [&](const std::string& id, const FiniteOrderedGroupoid& G) {
    if (static_cast<std::size_t>(G.size()) > ctx.limits.max_arrows) {
      t.skip();
      return;
    }
    const auto slices = up_slices(G, ctx.limits);
    for (const auto& U : slices) {
      t.record(is_up_slice(G, set_inverse(G, U)), [&] { return id + " inverse of " + slice_name(G, U); });
      for (const auto& V : slices)
        t.record(is_up_slice(G, set_product(G, U, V)),
                 [&] { return id + " " + slice_name(G, U) + " * " + slice_name(G, V); });
      for (const auto& X : {set_source(G, U), set_range(G, U)}) {
        bool up = true;
        for (int x : X)
          for (int y : G.units())
            if (G.leq(x, y) && !contains(X, y)) up = false;
        t.record(up, [&] { return id + " source/range of " + slice_name(G, U); });
      }
      for (int a : U)
        for (int b : U)
          t.record(G.leq(a, b) == G.leq(G.source(a), G.source(b)) && G.leq(a, b) == G.leq(G.range(a), G.range(b)),
                   [&] { return id + " " + slice_name(G, U) + " at " + G.name(a) + ", " + G.name(b); });
    }
  };
  for (const auto& [id, S] : ctx.semigroups) {
    check(id + " Gt", tight_groupoid(S).groupoid());
    check(id + " Ehresmann", ehresmann_re(*S));
  }
  return t.done();
}

CheckResult germ_sets_are_multiplicative(const Context& ctx) {
  Tally t("tight groupoids: germ sets are multiplicative");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto T = tight_groupoid(S);
    for (int s = 0; s < S->size(); ++s) {
      t.record(set_inverse(T.groupoid(), T.delta(s)) == T.delta(S->star(s)), [&] { return id + " inverse " + S->name(s); });
      for (int u = 0; u < S->size(); ++u)
        t.record(set_product(T.groupoid(), T.delta(s), T.delta(u)) == T.delta(S->mul(s, u)),
                 [&] { return pair_name(id, S->name(s), S->name(u)); });
    }
  }
  return t.done();
}

CheckResult singleton_germs_are_open(const Context& ctx) {
  Tally t("tight groupoids: every germ is isolated by a germ set and its source");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto T = tight_groupoid(S);
    const auto& G = T.groupoid();
    for (int a = 0; a < G.size(); ++a) {
      const auto [s, x] = T.germs.germ[a];
      ArrowSet iso;
      for (int b : T.delta(S->mul(s, T.germs.min_idempotent[x])))
        if (G.source(b) == G.source(a)) iso.push_back(b);
      t.record(iso == ArrowSet{a}, [&] { return id + " " + G.name(a); });
    }
  }
  return t.done();
}

CheckResult re_axioms(const Context& ctx) {
  Tally t("ordered groupoids: tight and Ehresmann groupoids satisfy the RE axioms");
  bool nontrivial_seen = false;
  for (const auto& [id, S] : ctx.semigroups) {
    t.record(check_re_axioms(tight_groupoid(S).groupoid()).all(), [&] { return id + " Gt"; });
    const auto R = ehresmann_re(*S);
    nontrivial_seen = nontrivial_seen || !R.trivial_order();
    t.record(check_re_axioms(R).all(), [&] { return id + " Ehresmann"; });
  }
  t.record(nontrivial_seen, [] { return std::string("no Ehresmann fixture with nontrivial order"); });
  t.record(!check_re_axioms(*corpus::non_re_groupoid()).all(), [] { return std::string("negative fixture passes"); });
  return t.done();
}

CheckResult idempotent_slice_covers_are_unions(const Context& ctx) {
  Tally t("slice semigroups between germ sets and the envelope: covers are unions, semigroup is flat");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto env = tight_envelope(S, ctx.limits);
    const auto& G = env.gt.groupoid();
    std::vector<ArrowSet> gens;
    for (int s = 0; s < S->size(); ++s) gens.push_back(env.gt.delta(s));
    const auto image = generated_slice_semigroup(G, gens, ctx.limits);
    for (const auto* T : {&env.cpl, &image}) {
      const auto& TS = *T->semigroup;
      const auto& E = TS.idempotents();
      t.record(classify(TS, ctx.limits).flat, [&] { return id + " flatness"; });
      for (int u = 0; u < E.size(); ++u) {
        if (u == E.zero()) continue;
        const auto& U = T->slices[TS.from_e(u)];
        std::vector<int> below;
        for (int v : E.down_set(u))
          if (v != E.zero()) below.push_back(v);
        for_each_family(below, family_bound(below.size()), [&](const std::vector<int>& fam) {
          if (!is_cover(E, fam, u)) return;
          ArrowSet uni;
          for (int v : fam) {
            const auto& V = T->slices[TS.from_e(v)];
            uni.insert(uni.end(), V.begin(), V.end());
          }
          std::sort(uni.begin(), uni.end());
          uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
          t.record(uni == U, [&] { return id + " cover of " + slice_name(G, U); });
        });
      }
    }
  }
  return t.done();
}

CheckResult compatibility_formulations(const Context& ctx) {
  Tally t("inverse semigroups: three formulations of compatibility agree");
  for (const auto& [id, S] : ctx.semigroups)
    for (int s = 0; s < S->size(); ++s)
      for (int u = 0; u < S->size(); ++u) {
        const int e = S->mul(S->dom(s), S->dom(u)), f = S->mul(S->ran(s), S->ran(u));
        const bool i = compatible(*S, s, u);
        const bool ii = S->mul(s, e) == S->mul(u, e) && S->mul(f, u) == S->mul(f, s);
        const bool iii = S->mul(s, S->dom(u)) == S->mul(u, S->dom(s)) && S->mul(S->ran(s), u) == S->mul(S->ran(u), s);
        t.record(i == ii && i == iii && compatibility_and_join(*S, {s, u}).pairwise_compatible == i,
                 [&] { return pair_name(id, S->name(s), S->name(u)); });
      }
  return t.done();
}

CheckResult joins_from_covers(const Context& ctx) {
  Tally t("flat distributive semigroups: a family below s joins to s iff its sources cover");
  std::vector<std::pair<std::string, InverseSemigroupPtr>> targets;
  for (const auto& [id, S] : ctx.semigroups) {
    const auto c = classify(*S, ctx.limits);
    if (c.flat && c.distributive) targets.emplace_back(id, S);
    targets.emplace_back(id + " envelope", tight_envelope(S, ctx.limits).cpl.semigroup);
  }
  for (const auto& [id, S] : targets) {
    const auto& E = S->idempotents();
    for (int s = 0; s < S->size(); ++s) {
      if (s == S->zero()) continue;
      std::vector<int> below;
      for (int u = 0; u < S->size(); ++u)
        if (S->leq(u, s)) below.push_back(u);
      for_each_family(below, family_bound(below.size()), [&](const std::vector<int>& fam) {
        std::vector<int> sources;
        for (int u : fam) sources.push_back(S->to_e(S->dom(u)));
        const bool cover = is_cover(E, sources, S->to_e(S->dom(s)));
        t.record(cover == (join_of(*S, fam) == s), [&] { return id + " below " + S->name(s); });
      });
    }
  }
  return t.done();
}

CheckResult envelope_is_distributive(const Context& ctx) {
  Tally t("tight envelopes: finite joins exist and are distributive");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto c = classify(*tight_envelope(S, ctx.limits).cpl.semigroup, ctx.limits);
    t.record(c.has_finite_joins && c.distributive, [&] { return id + " " + c.joins_witness + c.distributive_witness; });
  }
  return t.done();
}

CheckResult tight_quotient_is_consonance(const Context& ctx) {
  Tally t("tight quotients: the quotient map is a consonance onto a flat semigroup");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto q = tight_quotient(S);
    t.record(check_consonance(q.map).is_consonance && classify(*q.quotient, ctx.limits).flat, [&] { return id; });
  }
  return t.done();
}

CheckResult consonance_decisions(const Context& ctx) {
  Tally t("consonance: decisions, mediators and factorizations");
  for (const auto& pc : consonance_pairs(ctx)) {
    const auto v = decide_consonant(pc.a, pc.b, ctx.limits);
    const auto where = [&] { return pc.first + " vs " + pc.second; };
    t.record(v.consonant == pc.expected, where);
    if (v.consonant) {
      t.record(check_consonance(v.h1).is_consonance && check_consonance(v.h2).is_consonance, where);
      if (v.has_envelope_route) t.record(check_consonance(v.envelope_route).is_consonance, where);
    }
  }
  for (const auto& [id, S] : ctx.semigroups) {
    const auto env = tight_envelope(S, ctx.limits);
    const auto v = decide_consonant(S, env.cpl.semigroup, ctx.limits);
    t.record(v.consonant, [&] { return id + " vs its envelope"; });
    const auto f = factor_through(env.rho, ctx.limits);
    t.record(compose(f.k, env.rho).map == f.envelope.rho.map, [&] { return id + " factor through its envelope"; });
  }
  for (const auto& h : ctx.consonances) {
    const auto f = factor_through(h, ctx.limits);
    t.record(compose(f.k, h).map == f.envelope.rho.map && check_consonance(f.k).is_consonance,
             [&] { return "factor " + map_string(h); });
  }
  return t.done();
}

CheckResult envelope_uniqueness(const Context& ctx) {
  Tally t("tight envelopes: unique flat distributive consonant semigroup");
  for (const auto& [id, S] : ctx.semigroups) {
    const auto env = tight_envelope(S, ctx.limits);
    const auto& C = env.cpl.semigroup;
    std::vector<int> perm(C->size());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::vector<std::pair<std::string, InverseSemigroupPtr>> candidates{{"envelope", C},
                                                                        {"relabeled", corpus::relabeled(*C, perm)}};
    for (const auto& [idt, T] : ctx.semigroups) candidates.emplace_back(idt, T);
    for (const auto& [idt, T] : candidates) {
      const auto c = classify(*T, ctx.limits);
      if (!c.flat || !c.distributive) continue;
      if (!decide_consonant(S, T, ctx.limits).consonant) continue;
      t.record(isomorphic(*T, *C), [&] { return id + " with " + idt; });
    }
  }
  return t.done();
}

CheckResult space_duality_round_trip(const Context& ctx) {
  Tally t("ordered spaces: tight-like spaces are spectra of their up-set semilattices");
  std::vector<std::pair<std::string, FiniteOrderedSpace>> spaces;
  for (const auto& [id, X] : ctx.spaces)
    if (check_tight_like_space(X).tight_like()) spaces.emplace_back(id, X);
  for (const auto& [id, E] : ctx.semilattices)
    spaces.emplace_back("spectrum of " + id, FiniteOrderedSpace::from_spectrum(*E, tight_spectrum(*E)));
  for (const auto& [id, X] : spaces) {
    t.record(check_tight_like_space(X).tight_like(), [&] { return id + " tight-like"; });
    const auto d = space_duality(X, ctx.limits);
    t.record(d.ok, [&] { return id + " " + d.failure; });
    const auto& E = *d.upsets.lattice;
    const auto& sets = d.upsets.upsets;
    for (int x = 0; x < X.size(); ++x) {
      std::vector<int> inter(X.size());
      std::iota(inter.begin(), inter.end(), 0);
      for (const auto& V : sets)
        if (contains(V, x)) {
          std::vector<int> next;
          std::set_intersection(inter.begin(), inter.end(), V.begin(), V.end(), std::back_inserter(next));
          inter = std::move(next);
        }
      t.record(inter == X.up(x), [&] { return id + " neighbourhoods of " + X.name(x); });
    }
    for (int u = 0; u < E.size(); ++u)
      for (int v = 0; v < E.size(); ++v) {
        if (u == v || !subset(sets[v], sets[u])) continue;
        std::vector<int> diff;
        std::set_difference(sets[u].begin(), sets[u].end(), sets[v].begin(), sets[v].end(), std::back_inserter(diff));
        bool found = false;
        for (const auto& W : sets) found = found || (!W.empty() && subset(W, diff));
        t.record(found, [&] { return id + " " + E.name(v) + " in " + E.name(u); });
      }
    for (int u = 0; u < E.size(); ++u) {
      if (u == E.zero()) continue;
      std::vector<int> below;
      for (int v : E.down_set(u))
        if (v != E.zero()) below.push_back(v);
      const std::size_t bound = below.size() <= 12 ? 3 : 2;
      for_each_family(below, bound, [&](const std::vector<int>& fam) {
        std::vector<bool> hit(X.size(), false);
        for (int v : fam)
          for (int x : sets[v]) hit[x] = true;
        bool uni = true;
        for (int x : sets[u]) uni = uni && hit[x];
        t.record(is_cover(E, fam, u) == uni, [&] { return id + " family below " + E.name(u); });
      });
    }
  }
  return t.done();
}

CheckResult groupoid_round_trips(const Context& ctx) {
  Tally t("groupoid duality: round trips through fundamental semigroups");
  for (const auto& [id, S] : ctx.semigroups) {
    if (!within_arrow_cap(S, ctx.limits)) {
      t.skip();
      continue;
    }
    const auto r = groupoid_duality_roundtrip(S, ctx.limits);
    t.record(r.ok(), [&] { return id + " " + r.failure; });
    const auto G = tight_groupoid(S).germs.groupoid;
    const auto rg = groupoid_duality_roundtrip(G, ctx.limits);
    t.record(rg.ok(), [&] { return id + " groupoid side " + rg.failure; });
  }
  return t.done();
}

CheckResult full_dual_isomorphism_criterion(const Context& ctx) {
  Tally t("plain semilattices: isomorphism iff the full dual map is total and bijective");
  std::vector<std::pair<std::string, PlainSemilatticePtr>> plain;
  for (const auto& [id, E] : small_semilattices(ctx, 4)) {
    plain.emplace_back(id, std::make_shared<const PlainSemilattice>(PlainSemilattice::from(*E)));
    plain.emplace_back(id + " no zero",
                       std::make_shared<const PlainSemilattice>(PlainSemilattice::validate(E->names(), E->table())));
  }
  for (const auto& [ida, E] : plain)
    for (const auto& [idb, F] : plain)
      for (const auto& h : all_plain_homs(E, F)) {
        const auto c = full_dual_iso_criterion(h);
        t.record(c.iso == c.total_and_bijective && c.iso == c.total_and_homeomorphism,
                 [&] { return ida + "->" + idb + " " + map_string(h); });
      }
  return t.done();
}

CheckResult document_round_trip(const Context& ctx) {
  Tally t("documents: print then parse is the identity");
  std::vector<io::Document> docs;
  for (const auto& e : ctx.semilattices) docs.emplace_back(e.E);
  for (const auto& e : ctx.semilattices)
    docs.emplace_back(std::make_shared<const PlainSemilattice>(PlainSemilattice::validate(e.E->names(), e.E->table())));
  for (const auto& [id, S] : ctx.semigroups) {
    docs.emplace_back(S);
    docs.emplace_back(tight_groupoid(S).germs.groupoid);
    docs.emplace_back(std::make_shared<const FiniteOrderedGroupoid>(ehresmann_re(*S)));
    docs.emplace_back(SemigroupHom::identity(S));
  }
  for (const auto& [gens, S] : corpus::random_closures(ctx.seed, 8, 3, ctx.limits.max_elements))
    docs.emplace_back(io::PartialBijections{3, gens, S});
  for (const auto& [id, X] : ctx.spaces) docs.emplace_back(X);
  for (const auto& h : ctx.consonances) docs.emplace_back(h);
  docs.emplace_back(SemilatticeHom::identity(corpus::diamond()));
  for (const auto& doc : docs) {
    const auto printed = io::to_json(doc);
    const auto text = printed.dump();
    const auto back = io::parse_document_text(text, ctx.limits);
    t.record(io::same_document(doc, back) && io::to_json(back).dump() == text,
             [&] { return io::kind_of(doc) + " " + text.substr(0, 60); });
  }
  return t.done();
}

std::vector<CheckResult> run_all(const Context& ctx) {
  using Fn = CheckResult (*)(const Context&);
  const Fn checks[] = {tight_order_characterizations,
                       tight_order_is_preorder,
                       tight_order_via_spectrum_sets,
                       nonzero_elements_lie_in_tight_filters,
                       tight_filters_are_ultra,
                       kernel_criteria_for_tight_injectivity,
                       semigroup_tight_order_on_idempotents,
                       tight_order_passes_to_sources,
                       tight_order_via_germ_sets,
                       tight_order_under_translation,
                       tight_hom_character_conditions,
                       dual_map_properties,
                       induced_groupoid_maps,
                       germ_order_is_partial_order,
                       upsets_are_unions_of_germ_sets,
                       up_slice_closure,
                       germ_sets_are_multiplicative,
                       singleton_germs_are_open,
                       re_axioms,
                       idempotent_slice_covers_are_unions,
                       compatibility_formulations,
                       joins_from_covers,
                       envelope_is_distributive,
                       tight_quotient_is_consonance,
                       consonance_decisions,
                       envelope_uniqueness,
                       space_duality_round_trip,
                       groupoid_round_trips,
                       full_dual_isomorphism_criterion,
                       document_round_trip};
  std::vector<CheckResult> out;
  for (auto fn : checks) out.push_back(fn(ctx));
  return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << (r.passed() ? "pass" : "FAIL") << ": " << r.name << " (cases " << r.cases;
    if (r.skipped) os << ", skipped " << r.skipped;
    os << ")";
    if (!r.passed()) {
      ++failed;
      os << " failures " << r.failures << " first " << r.first_failure;
    }
    os << "\n";
  }
  os << "checks: " << results.size() << "\n";
  os << "failed: " << failed << "\n";
  return os.str();
}

}  // namespace tightforge::suite
