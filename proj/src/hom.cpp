#include "tightforge/hom.hpp"

#include <algorithm>

namespace tightforge {

std::vector<int> kernel(const SemilatticeHom& h) {
  std::vector<int> out;
  for (int e = 0; e < h.dom->size(); ++e)
    if (h(e) == h.cod->zero()) out.push_back(e);
  return out;
}

std::vector<int> kernel(const SemigroupHom& h) {
  std::vector<int> out;
  for (int s = 0; s < h.dom->size(); ++s)
    if (h(s) == h.cod->zero()) out.push_back(s);
  return out;
}

TightHomReport is_tight_hom(const SemilatticeHom& h) {
  const auto& E = *h.dom;
  const auto& F = *h.cod;
  TightHomReport r;
  for (int f = 0; f < F.size() && r.covers_targets; ++f) {
    if (f == F.zero()) continue;  // nothing to cover below zero
    std::vector<int> C;
    for (int e = 0; e < E.size(); ++e) C.push_back(F.meet(f, h(e)));
    if (!is_cover(F, C, f)) {
      r.covers_targets = false;
      r.target_witness = f;
    }
  }
  // A counterexample to cover preservation exists iff, for some e and some
  // nonzero g <= h(e), the elements c <= e with g h(c) = 0 already cover e.
  for (int e = 0; e < E.size() && r.preserves_covers; ++e) {
    if (e == E.zero() || h(e) == F.zero()) continue;
    for (int g = 0; g < F.size(); ++g) {
      if (g == F.zero() || !F.leq(g, h(e))) continue;
      std::vector<int> A;
      for (int c = 0; c < E.size(); ++c)
        if (E.leq(c, e) && F.perp(g, h(c))) A.push_back(c);
      if (is_cover(E, A, e)) {
        r.preserves_covers = false;
        r.cover_element_witness = e;
        r.cover_gap_witness = g;
        break;
      }
    }
  }
  return r;
}

InjectivityVerdict tightly_injective(const SemilatticeHom& h) {
  InjectivityVerdict v;
  for (int a = 0; a < h.dom->size(); ++a)
    for (int b = a + 1; b < h.dom->size(); ++b)
      if (tight_equiv(*h.cod, h(a), h(b)) && !tight_equiv(*h.dom, a, b)) {
        v = {false, a, b};
        return v;
      }
  return v;
}

SurjectivityVerdict tightly_surjective(const SemilatticeHom& h) {
  const auto& F = *h.cod;
  std::vector<bool> in_range(F.size(), false);
  for (int e = 0; e < h.dom->size(); ++e) in_range[h(e)] = true;
  for (int f = 0; f < F.size(); ++f) {
    if (f == F.zero()) continue;
    std::vector<int> C;
    for (int r = 0; r < F.size(); ++r)
      if (in_range[r] && tight_leq(F, r, f)) C.push_back(F.meet(f, r));
    if (!is_cover(F, C, f)) return {false, f};
  }
  return {};
}

InjectivityVerdict tightly_injective(const SemigroupHom& h) {
  for (int a = 0; a < h.dom->size(); ++a)
    for (int b = a + 1; b < h.dom->size(); ++b)
      if (tight_equiv_s(*h.cod, h(a), h(b)) && !tight_equiv_s(*h.dom, a, b)) return {false, a, b};
  return {};
}

SurjectivityVerdict tightly_surjective(const SemigroupHom& h) {
  const auto& T = *h.cod;
  const auto& ET = T.idempotents();
  std::vector<bool> in_range(T.size(), false);
  for (int s = 0; s < h.dom->size(); ++s) in_range[h(s)] = true;
  for (int t = 0; t < T.size(); ++t) {
    const int d = T.dom(t);
    if (d == T.zero()) continue;
    std::vector<int> C;
    for (int r = 0; r < T.size(); ++r)
      if (in_range[r] && tight_leq_s(T, r, t)) C.push_back(T.to_e(T.mul(T.dom(r), d)));
    if (!is_cover(ET, C, T.to_e(d))) return {false, t};
  }
  return {};
}

ConsonanceVerdict check_consonance(const SemilatticeHom& h) {
  ConsonanceVerdict v;
  v.injective = tightly_injective(h);
  v.surjective = tightly_surjective(h);
  v.is_consonance = v.injective.holds && v.surjective.holds;
  return v;
}

ConsonanceVerdict check_consonance(const SemigroupHom& h) {
  ConsonanceVerdict v;
  v.injective = tightly_injective(h);
  v.surjective = tightly_surjective(h);
  v.is_consonance = v.injective.holds && v.surjective.holds;
  v.has_restriction = true;
  v.restriction_consonance = check_consonance(h.restrict_to_idempotents()).is_consonance;
  if (v.is_consonance) ensure(v.restriction_consonance, "consonances restrict to consonances on idempotents");
  return v;
}

namespace {

int point_with_members(const TightSpectrum& sp, const std::vector<int>& members) {
  for (int i = 0; i < sp.size(); ++i)
    if (sp.points[i].members == members) return i;
  return -1;
}

}  // namespace

DualMap dual_map(const SemilatticeHom& h) {
  const auto report = is_tight_hom(h);
  if (!report.tight()) {
    if (!report.covers_targets) throw NotTight("products with the range do not cover " + h.cod->name(report.target_witness));
    throw NotTight("a cover of " + h.dom->name(report.cover_element_witness) + " is sent to a non-cover, missing " +
                   h.cod->name(report.cover_gap_witness));
  }
  const auto& E = *h.dom;
  DualMap d;
  d.dom_spectrum = tight_spectrum(E);
  d.cod_spectrum = tight_spectrum(*h.cod);
  for (const auto& eta : d.cod_spectrum.points) {
    std::vector<int> members;
    for (int e = 0; e < E.size(); ++e)
      if (eta.contains(h(e))) members.push_back(e);
    const int p = point_with_members(d.dom_spectrum, members);
    ensure(p >= 0, "tight homomorphisms pull tight filters back to tight filters");
    d.hat.push_back(p);
  }
  const int m = d.cod_spectrum.size();
  std::vector<bool> hit(d.dom_spectrum.size(), false);
  for (int p : d.hat) hit[p] = true;
  d.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  d.injective = true;
  d.order_preserving = true;
  d.order_injective = true;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a != b && d.hat[a] == d.hat[b]) d.injective = false;
      const bool src = d.cod_spectrum.order[a][b];
      const bool img = d.dom_spectrum.order[d.hat[a]][d.hat[b]];
      if (src && !img) d.order_preserving = false;
      if (img && !src) d.order_injective = false;
    }
  return d;
}

std::vector<int> inverse_dual_candidate(const SemilatticeHom& h) {
  const auto& F = *h.cod;
  const auto sE = tight_spectrum(*h.dom);
  const auto sF = tight_spectrum(F);
  std::vector<int> out;
  for (const auto& xi : sE.points) {
    std::vector<int> members;
    for (int f = 0; f < F.size(); ++f)
      if (std::any_of(xi.members.begin(), xi.members.end(), [&](int e) { return tight_leq(F, h(e), f); }))
        members.push_back(f);
    out.push_back(point_with_members(sF, members));
  }
  return out;
}

std::vector<int> check_inverse(const SemilatticeHom& h) {
  if (!check_consonance(h).is_consonance) throw PreconditionFailed("homomorphism is not a consonance");
  const auto d = dual_map(h);
  const auto inv = inverse_dual_candidate(h);
  for (int x = 0; x < d.dom_spectrum.size(); ++x) {
    ensure(inv[x] >= 0, "the inverse dual of a consonance yields tight filters");
    ensure(d.hat[inv[x]] == x, "the inverse dual is a right inverse");
  }
  for (int y = 0; y < d.cod_spectrum.size(); ++y) ensure(inv[d.hat[y]] == y, "the inverse dual is a left inverse");
  ensure(d.order_preserving && d.order_injective, "the dual of a consonance is an order-isomorphism");
  return inv;
}

InducedMap induced_groupoid_map(const SemigroupHom& h) {
  const auto h0 = h.restrict_to_idempotents();
  if (!check_consonance(h0).is_consonance)
    throw PreconditionFailed("restriction to idempotents is not a consonance");
  InducedMap m;
  m.source = tight_groupoid(h.dom);
  m.target = tight_groupoid(h.cod);
  m.point_map = check_inverse(h0);
  const auto& G = m.source.groupoid();
  const auto& H = m.target.groupoid();
  for (int a = 0; a < G.size(); ++a) {
    const auto [u, x] = m.source.germs.germ[a];
    const int b = m.target.germs.arrow_of(h(u), m.point_map[x]);
    ensure(b >= 0, "images of germs are germs");
    m.map.push_back(b);
  }
  const auto& S = *h.dom;
  for (int s = 0; s < S.size(); ++s)
    for (int x = 0; x < m.source.spectrum.size(); ++x)
      if (m.source.action.in_domain(s, x))
        ensure(m.map[m.source.germs.arrow_of(s, x)] == m.target.germs.arrow_of(h(s), m.point_map[x]),
               "the induced groupoid map is well defined");

  std::vector<bool> hit(H.size(), false);
  m.injective = true;
  for (int b : m.map) {
    if (hit[b]) m.injective = false;
    hit[b] = true;
  }
  m.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  m.functor = true;
  m.order_preserving = true;
  m.order_reflecting = true;
  for (int a = 0; a < G.size(); ++a) {
    if (m.map[G.inverse(a)] != H.inverse(m.map[a])) m.functor = false;
    for (int b = 0; b < G.size(); ++b) {
      if (int c = G.compose(a, b); c >= 0 && H.compose(m.map[a], m.map[b]) != m.map[c]) m.functor = false;
      const bool src = G.leq(a, b), img = H.leq(m.map[a], m.map[b]);
      if (src && !img) m.order_preserving = false;
      if (img && !src) m.order_reflecting = false;
    }
  }
  ensure(m.functor, "the induced groupoid map is a homomorphism");
  ensure(m.injective == is_tightly_injective(h), "induced map injective iff tightly injective");
  ensure(m.surjective == is_tightly_surjective(h), "induced map surjective iff tightly surjective");
  return m;
}

const char* to_string(Covariance c) {
  switch (c) {
    case Covariance::none: return "none";
    case Covariance::covariant: return "covariant";
    case Covariance::epimorphism: return "epimorphism";
  }
  return "none";
}

CovarianceReport check_covariant(const SemigroupHom& h, const std::vector<int>& f, const SemigroupAction& alpha,
                                 const SemigroupAction& beta) {
  const auto& S = *h.dom;
  CovarianceReport rep;
  if (static_cast<int>(f.size()) != alpha.size()) throw PreconditionFailed("point map has wrong length");
  for (int s = 0; s < S.size(); ++s)
    for (int x = 0; x < alpha.size(); ++x) {
      if (!alpha.in_domain(s, x)) continue;
      if (!beta.in_domain(h(s), f[x])) {
        rep.violated = "domain containment at (" + S.name(s) + ", " + alpha.point_names[x] + ")";
        return rep;
      }
      if (f[alpha.theta[s][x]] != beta.theta[h(s)][f[x]]) {
        rep.violated = "equivariance at (" + S.name(s) + ", " + alpha.point_names[x] + ")";
        return rep;
      }
    }
  rep.level = Covariance::covariant;

  bool epi = true;
  std::vector<bool> hit(beta.size(), false);
  for (int y : f) hit[y] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
    epi = false;
    rep.violated = "point map not surjective";
  }
  for (int s = 0; s < S.size() && epi; ++s)
    for (int y = 0; y < beta.size(); ++y) {
      bool image = false;
      for (int x = 0; x < alpha.size(); ++x) image = image || (alpha.in_domain(s, x) && f[x] == y);
      if (image != beta.in_domain(h(s), y)) {
        epi = false;
        rep.violated = "domain image differs at " + S.name(s);
        break;
      }
    }
  if (epi) rep.level = Covariance::epimorphism;

  // (h x f) carries each fundamental slice into the one of h(s), onto it for
  // epimorphisms.
  const auto ga = germ_groupoid(alpha);
  const auto gb = germ_groupoid(beta);
  for (int s = 0; s < S.size(); ++s) {
    ArrowSet image;
    for (int x = 0; x < alpha.size(); ++x)
      if (alpha.in_domain(s, x)) image.push_back(gb.arrow_of(h(s), f[x]));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto& target = gb.delta[h(s)];
    ensure(std::includes(target.begin(), target.end(), image.begin(), image.end()),
           "covariant pairs map fundamental slices into fundamental slices");
    if (epi) ensure(image == target, "covariant epimorphisms map fundamental slices onto fundamental slices");
  }
  return rep;
}

ConsonantVerdict decide_consonant(const InverseSemigroupPtr& S1, const InverseSemigroupPtr& S2, const Limits& limits) {
  ConsonantVerdict v;
  const auto gt1 = tight_groupoid(S1);
  const auto gt2 = tight_groupoid(S2);
  const auto& G1 = gt1.groupoid();
  const auto& G2 = gt2.groupoid();
  auto phi = groupoid_iso_search(G1, G2, limits);
  if (!phi) {
    v.reason = "tight groupoids are not isomorphic (arrows " + std::to_string(G1.size()) + " vs " +
               std::to_string(G2.size()) + ", units " + std::to_string(G1.units().size()) + " vs " +
               std::to_string(G2.units().size()) + ")";
    return v;
  }
  v.consonant = true;
  v.groupoid_iso = *phi;
  auto push = [&](const ArrowSet& A) {
    ArrowSet out;
    for (int a : A) out.push_back((*phi)[a]);
    std::sort(out.begin(), out.end());
    return out;
  };

  if (static_cast<std::size_t>(G1.size()) <= limits.max_arrows) {
    const auto env = tight_envelope(S1, limits);
    std::vector<int> inv(G2.size());
    for (int a = 0; a < G1.size(); ++a) inv[(*phi)[a]] = a;
    std::vector<int> k(S2->size());
    for (int t = 0; t < S2->size(); ++t) {
      ArrowSet back;
      for (int b : gt2.delta(t)) back.push_back(inv[b]);
      std::sort(back.begin(), back.end());
      k[t] = env.cpl.find(back);
      ensure(k[t] >= 0, "pulled back fundamental slices are up-slices");
    }
    v.envelope_route = SemigroupHom::make(S2, env.cpl.semigroup, std::move(k));
    ensure(check_consonance(v.envelope_route).is_consonance, "the envelope route is a consonance");
    v.has_envelope_route = true;
  }

  std::vector<ArrowSet> gens;
  for (int s = 0; s < S1->size(); ++s) gens.push_back(push(gt1.delta(s)));
  for (int t = 0; t < S2->size(); ++t) gens.push_back(gt2.delta(t));
  v.mediator = generated_slice_semigroup(G2, gens, limits);
  for (const auto& A : v.mediator.slices) ensure(is_up_slice(G2, A), "the mediator consists of up-slices");
  std::vector<int> m1(S1->size()), m2(S2->size());
  for (int s = 0; s < S1->size(); ++s) m1[s] = v.mediator.find(push(gt1.delta(s)));
  for (int t = 0; t < S2->size(); ++t) m2[t] = v.mediator.find(gt2.delta(t));
  v.h1 = SemigroupHom::make(S1, v.mediator.semigroup, std::move(m1));
  v.h2 = SemigroupHom::make(S2, v.mediator.semigroup, std::move(m2));
  ensure(check_consonance(v.h1).is_consonance, "the first mediator arrow is a consonance");
  ensure(check_consonance(v.h2).is_consonance, "the second mediator arrow is a consonance");
  return v;
}

Factorization factor_through(const SemigroupHom& h, const Limits& limits) {
  if (!check_consonance(h).is_consonance) throw PreconditionFailed("homomorphism is not a consonance");
  Factorization out{tight_envelope(h.dom, limits), SemigroupHom{}};
  const auto induced = induced_groupoid_map(h);
  ensure(induced.injective && induced.surjective, "consonances induce bijections of tight groupoids");
  std::vector<int> inv(induced.map.size());
  for (std::size_t a = 0; a < induced.map.size(); ++a) inv[induced.map[a]] = static_cast<int>(a);
  // The induced groupoid of the envelope computation must be the same as the
  // one used by the induced map; both come from tight_groupoid(dom).
  std::vector<int> k(h.cod->size());
  for (int t = 0; t < h.cod->size(); ++t) {
    ArrowSet back;
    for (int b : induced.target.delta(t)) back.push_back(inv[b]);
    std::sort(back.begin(), back.end());
    k[t] = out.envelope.cpl.find(back);
    ensure(k[t] >= 0, "pulled back fundamental slices are up-slices");
  }
  out.k = SemigroupHom::make(h.cod, out.envelope.cpl.semigroup, std::move(k));
  ensure(compose(out.k, h).map == out.envelope.rho.map, "the factorisation reproduces the fundamental map");
  ensure(check_consonance(out.k).is_consonance, "the factor is a consonance");
  return out;
}

}  // namespace tightforge
