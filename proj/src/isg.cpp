#include "tightforge/isg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tightforge {

namespace {

std::string tuple_of(const std::vector<std::string>& names, std::initializer_list<int> idx) {
  std::string out = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) out += ", ";
    out += names[i];
    first = false;
  }
  return out + ")";
}

PartialMap compose(const PartialMap& s, const PartialMap& t) {
  PartialMap out(t.size(), -1);
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t[x] >= 0) out[x] = s[t[x]];
  return out;
}

PartialMap invert(const PartialMap& s) {
  PartialMap out(s.size(), -1);
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s[x] >= 0) out[s[x]] = static_cast<int>(x);
  return out;
}

}  // namespace

FiniteInverseSemigroup FiniteInverseSemigroup::validate(std::vector<std::string> names, Table product, int zero) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InvalidStructure("empty carrier", "");
  if (static_cast<int>(product.size()) != n) throw InvalidStructure("product table has wrong number of rows", "");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(product[i].size()) != n)
      throw InvalidStructure("product table row has wrong length", tuple_of(names, {i}));
    for (int j = 0; j < n; ++j)
      if (product[i][j] < 0 || product[i][j] >= n)
        throw InvalidStructure("product table entry out of range", tuple_of(names, {i, j}));
  }
  {
    std::set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second) throw InvalidStructure("duplicate element name", "(" + s + ")");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (product[product[a][b]][c] != product[a][product[b][c]])
          throw InvalidStructure("not associative", tuple_of(names, {a, b, c}));

  auto absorbing = [&](int z) {
    for (int s = 0; s < n; ++s)
      if (product[z][s] != z || product[s][z] != z) return s;
    return -1;
  };
  if (zero < 0 || zero >= n) throw InvalidStructure("no zero", "");
  if (int bad = absorbing(zero); bad >= 0) {
    bool any = false;
    for (int z = 0; z < n && !any; ++z) any = absorbing(z) < 0;
    throw InvalidStructure(any ? "zero not absorbing" : "no zero",
                           tuple_of(names, {zero, bad, product[zero][bad]}));
  }

  FiniteInverseSemigroup S;
  S.star_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (product[product[s][t]][s] == s && product[product[t][s]][t] == t) {
        if (S.star_[s] >= 0)
          throw InvalidStructure("ambiguous generalized inverse", tuple_of(names, {s, S.star_[s], t}));
        S.star_[s] = t;
      }
    }
    if (S.star_[s] < 0) throw InvalidStructure("missing generalized inverse", tuple_of(names, {s}));
  }

  S.idem_pos_.assign(n, -1);
  for (int s = 0; s < n; ++s)
    if (product[s][s] == s) {
      S.idem_pos_[s] = static_cast<int>(S.idem_.size());
      S.idem_.push_back(s);
    }
  for (int e : S.idem_)
    for (int f : S.idem_)
      if (product[e][f] != product[f][e])
        throw InvalidStructure("idempotents do not commute", tuple_of(names, {e, f, product[e][f]}));

  const int k = static_cast<int>(S.idem_.size());
  std::vector<std::string> enames;
  Table emeet(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    enames.push_back(names[S.idem_[i]]);
    for (int j = 0; j < k; ++j) emeet[i][j] = S.idem_pos_[product[S.idem_[i]][S.idem_[j]]];
  }
  S.E_ = std::make_shared<const FiniteSemilattice>(
      FiniteSemilattice::validate(std::move(enames), std::move(emeet), S.idem_pos_[zero]));

  for (int s = 0; s < n; ++s) {
    ensure(S.star_[S.star_[s]] == s, "star is an involution");
    for (int t = 0; t < n; ++t)
      ensure(S.star_[product[s][t]] == product[S.star_[t]][S.star_[s]], "star reverses products");
  }

  S.names_ = std::move(names);
  S.product_ = std::move(product);
  S.zero_ = zero;
  S.natural_.assign(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) S.natural_[s][t] = S.product_[t][S.dom(s)] == s;
  return S;
}

FiniteInverseSemigroup FiniteInverseSemigroup::from_semilattice(const FiniteSemilattice& E) {
  return validate(E.names(), E.table(), E.zero());
}

int FiniteInverseSemigroup::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == label) return i;
  return -1;
}

std::string partial_map_name(const PartialMap& m) {
  std::string out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m[x] < 0) continue;
    out += out.empty() ? "{" : ",";
    out += std::to_string(x + 1) + ">" + std::to_string(m[x] + 1);
  }
  return out.empty() ? "0" : out + "}";
}

FiniteInverseSemigroup from_partial_bijections(int degree, const std::vector<PartialMap>& generators,
                                               std::size_t cap) {
  if (degree <= 0) throw PreconditionFailed("degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw PreconditionFailed("generator has wrong length");
    std::set<int> image;
    for (int y : g) {
      if (y < -1 || y >= degree) throw PreconditionFailed("generator value out of range");
      if (y >= 0 && !image.insert(y).second) throw PreconditionFailed("generator is not injective");
    }
  }

  std::set<PartialMap> seen;
  std::vector<PartialMap> elems;
  auto add = [&](const PartialMap& m) {
    if (seen.insert(m).second) {
      elems.push_back(m);
      if (elems.size() > cap) throw SizeCapExceeded("partial bijection closure", elems.size(), cap);
    }
  };
  add(PartialMap(degree, -1));
  for (const auto& g : generators) {
    add(g);
    add(invert(g));
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(compose(elems[i], elems[j]));
      add(compose(elems[j], elems[i]));
    }

  // Deterministic element order: by domain size, then image vector.
  std::sort(elems.begin(), elems.end(), [](const PartialMap& a, const PartialMap& b) {
    auto rank = [](const PartialMap& m) { return std::count_if(m.begin(), m.end(), [](int y) { return y >= 0; }); };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a < b;
  });
  std::map<PartialMap, int> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = static_cast<int>(i);
    names.push_back(partial_map_name(elems[i]));
  }
  const int n = static_cast<int>(elems.size());
  Table product(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) product[i][j] = index.at(compose(elems[i], elems[j]));
  return FiniteInverseSemigroup::validate(std::move(names), std::move(product), 0);
}

bool tight_leq_s(const FiniteInverseSemigroup& S, int s, int t) {
  const int d = S.dom(s);
  if (d == S.zero()) return true;
  const auto& E = S.idempotents();
  std::vector<int> agreement;
  for (int e = 0; e < E.size(); ++e) {
    const int es = S.from_e(e);
    if (E.leq(e, S.to_e(d)) && S.mul(s, es) == S.mul(t, es)) agreement.push_back(e);
  }
  return is_cover(E, agreement, S.to_e(d));
}

bool tight_equiv_s(const FiniteInverseSemigroup& S, int s, int t) { return tight_leq_s(S, s, t) && tight_leq_s(S, t, s); }

bool compatible(const FiniteInverseSemigroup& S, int s, int t) {
  return S.is_idempotent(S.mul(s, S.star(t))) && S.is_idempotent(S.mul(S.star(s), t));
}

namespace {

void check_compatibility_forms(const FiniteInverseSemigroup& S, int s, int t) {
  const int e = S.mul(S.dom(s), S.dom(t));
  const int f = S.mul(S.ran(s), S.ran(t));
  const bool i = compatible(S, s, t);
  const bool ii = S.mul(s, e) == S.mul(t, e) && S.mul(f, t) == S.mul(f, s);
  const bool iii = S.mul(s, S.dom(t)) == S.mul(t, S.dom(s)) && S.mul(S.ran(s), t) == S.mul(S.ran(t), s);
  ensure(i == ii && ii == iii, "the three forms of compatibility agree");
}

}  // namespace

int join_of(const FiniteInverseSemigroup& S, const std::vector<int>& elements) {
  std::vector<int> upper;
  for (int u = 0; u < S.size(); ++u)
    if (std::all_of(elements.begin(), elements.end(), [&](int s) { return S.leq(s, u); })) upper.push_back(u);
  for (int u : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](int v) { return S.leq(u, v); })) return u;
  return -1;
}

JoinVerdict compatibility_and_join(const FiniteInverseSemigroup& S, const std::vector<int>& elements) {
  JoinVerdict v;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      check_compatibility_forms(S, elements[i], elements[j]);
      if (!compatible(S, elements[i], elements[j])) v.pairwise_compatible = false;
    }
  v.join = join_of(S, elements);
  return v;
}

std::vector<std::vector<int>> compatible_families(const FiniteInverseSemigroup& S) {
  const int n = S.size();
  const std::size_t max_size = n <= 12 ? static_cast<std::size_t>(n) : 4;
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Depth-first clique enumeration in the compatibility graph on nonzero elements.
  auto rec = [&](auto&& self, int next) -> void {
    if (current.size() >= 2) out.push_back(current);
    if (current.size() == max_size) return;
    for (int s = next; s < n; ++s) {
      if (s == S.zero()) continue;
      if (!std::all_of(current.begin(), current.end(), [&](int c) { return compatible(S, c, s); })) continue;
      current.push_back(s);
      self(self, s + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Classification classify(const FiniteInverseSemigroup& S, const Limits& limits) {
  if (static_cast<std::size_t>(S.size()) > limits.max_elements)
    throw SizeCapExceeded("classify", S.size(), limits.max_elements);
  Classification c;
  c.flat = true;
  for (int s = 0; s < S.size() && c.flat; ++s)
    for (int t = 0; t < S.size(); ++t)
      if (tight_leq_s(S, s, t) != S.leq(s, t)) {
        c.flat = false;
        c.flat_witness = "(" + S.name(s) + ", " + S.name(t) + ")";
        break;
      }

  const auto families = compatible_families(S);
  c.families_tested = families.size();
  c.has_finite_joins = true;
  c.distributive = true;
  auto render = [&](const std::vector<int>& fam) {
    std::string out = "{";
    for (std::size_t i = 0; i < fam.size(); ++i) out += (i ? "," : "") + S.name(fam[i]);
    return out + "}";
  };
  for (const auto& fam : families) {
    const int j = join_of(S, fam);
    if (j < 0) {
      c.has_finite_joins = false;
      c.distributive = false;
      c.joins_witness = render(fam);
      break;
    }
    if (!c.distributive) continue;
    for (int r = 0; r < S.size() && c.distributive; ++r) {
      std::vector<int> left, right;
      for (int s : fam) {
        left.push_back(S.mul(r, s));
        right.push_back(S.mul(s, r));
      }
      if (join_of(S, left) != S.mul(r, j) || join_of(S, right) != S.mul(j, r)) {
        c.distributive = false;
        c.distributive_witness = S.name(r) + " against " + render(fam);
      }
    }
  }
  return c;
}

}  // namespace tightforge
