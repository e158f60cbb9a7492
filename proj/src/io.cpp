#include "tightforge/io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tightforge/error.hpp"

namespace tightforge::io {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string sub(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> name_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], at(path, i)));
    if (!seen.insert(out.back()).second) throw InputError(at(path, i), "duplicate name '" + out.back() + "'");
  }
  return out;
}

int resolve(const std::map<std::string, int>& index, const Json& j, const std::string& path) {
  const auto name = as_string(j, path);
  auto it = index.find(name);
  if (it == index.end()) throw InputError(path, "unknown name '" + name + "'");
  return it->second;
}

std::map<std::string, int> index_of(const std::vector<std::string>& names) {
  std::map<std::string, int> m;
  for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = static_cast<int>(i);
  return m;
}

Table name_table(const Json& j, const std::string& path, const std::map<std::string, int>& index, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError(path, "expected " + std::to_string(n) + " rows");
  Table t(n, std::vector<int>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto rp = at(path, r);
    if (!j[r].is_array() || j[r].size() != n) throw InputError(rp, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) t[r][c] = resolve(index, j[r][c], at(rp, c));
  }
  return t;
}

Json name_table_json(const Table& t, const std::vector<std::string>& names) {
  Json rows = Json::array();
  for (const auto& row : t) {
    Json r = Json::array();
    for (int v : row) r.push_back(names[v]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string check_kind(const Json& j, const std::string& path) {
  return as_string(field(j, path, "kind"), sub(path, "kind"));
}

Document parse_at(const Json& j, const std::string& path, const Limits& limits);

Document parse_semilattice(const Json& j, const std::string& path) {
  const auto names = name_list(field(j, path, "elements"), sub(path, "elements"));
  if (names.empty()) throw InputError(sub(path, "elements"), "semilattice needs at least one element");
  const auto index = index_of(names);
  auto meet = name_table(field(j, path, "meet"), sub(path, "meet"), index, names.size());
  if (j.contains("zero") && !j["zero"].is_null()) {
    const int zero = resolve(index, j["zero"], sub(path, "zero"));
    return std::make_shared<const FiniteSemilattice>(FiniteSemilattice::validate(names, std::move(meet), zero));
  }
  return std::make_shared<const PlainSemilattice>(PlainSemilattice::validate(names, std::move(meet)));
}

Document parse_semigroup(const Json& j, const std::string& path) {
  const auto names = name_list(field(j, path, "elements"), sub(path, "elements"));
  if (names.empty()) throw InputError(sub(path, "elements"), "semigroup needs at least one element");
  const auto index = index_of(names);
  auto product = name_table(field(j, path, "product"), sub(path, "product"), index, names.size());
  const int zero = resolve(index, field(j, path, "zero"), sub(path, "zero"));
  return std::make_shared<const FiniteInverseSemigroup>(
      FiniteInverseSemigroup::validate(names, std::move(product), zero));
}

Document parse_partial_bijections(const Json& j, const std::string& path, const Limits& limits) {
  const auto& d = field(j, path, "degree");
  if (!d.is_number_integer() || d.get<int>() <= 0) throw InputError(sub(path, "degree"), "expected a positive integer");
  PartialBijections P;
  P.degree = d.get<int>();
  const auto gpath = sub(path, "generators");
  const auto& gens = field(j, path, "generators");
  if (!gens.is_array()) throw InputError(gpath, "expected an array of image arrays");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto p = at(gpath, g);
    if (!gens[g].is_array() || static_cast<int>(gens[g].size()) != P.degree)
      throw InputError(p, "expected " + std::to_string(P.degree) + " images");
    PartialMap m;
    std::set<int> image;
    for (std::size_t i = 0; i < gens[g].size(); ++i) {
      const auto& v = gens[g][i];
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > P.degree)
        throw InputError(at(p, i), "expected an integer in 0.." + std::to_string(P.degree));
      const int y = v.get<int>() - 1;
      if (y >= 0 && !image.insert(y).second) throw InputError(at(p, i), "generator is not injective");
      m.push_back(y);
    }
    P.generators.push_back(std::move(m));
  }
  P.closure = std::make_shared<const FiniteInverseSemigroup>(
      from_partial_bijections(P.degree, P.generators, limits.max_elements));
  return P;
}

Document parse_hom(const Json& j, const std::string& path, const Limits& limits) {
  const auto dom = parse_at(field(j, path, "domain"), sub(path, "domain"), limits);
  const auto cod = parse_at(field(j, path, "codomain"), sub(path, "codomain"), limits);
  const auto mpath = sub(path, "map");
  const auto& mj = field(j, path, "map");
  if (!mj.is_object()) throw InputError(mpath, "expected an object from domain names to codomain names");

  auto build_map = [&](const std::vector<std::string>& dn, const std::vector<std::string>& cn) {
    const auto di = index_of(dn), ci = index_of(cn);
    std::vector<int> map(dn.size(), -1);
    for (auto it = mj.begin(); it != mj.end(); ++it) {
      auto d = di.find(it.key());
      if (d == di.end()) throw InputError(mpath + "." + it.key(), "unknown domain name");
      map[d->second] = resolve(ci, it.value(), mpath + "." + it.key());
    }
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] < 0) throw InputError(mpath + "." + dn[i], "missing image");
    return map;
  };
  auto semigroup_of = [](const Document& d) -> InverseSemigroupPtr {
    if (auto p = std::get_if<InverseSemigroupPtr>(&d)) return *p;
    if (auto p = std::get_if<PartialBijections>(&d)) return p->closure;
    return nullptr;
  };

  if (auto S = semigroup_of(dom)) {
    auto T = semigroup_of(cod);
    if (!T) throw InputError(sub(path, "codomain"), "codomain must be an inverse semigroup");
    return SemigroupHom::make(S, T, build_map(S->names(), T->names()));
  }
  if (auto E = std::get_if<SemilatticePtr>(&dom)) {
    if (auto F = std::get_if<SemilatticePtr>(&cod))
      return SemilatticeHom::make(*E, *F, build_map((*E)->names(), (*F)->names()));
    if (auto F = std::get_if<PlainSemilatticePtr>(&cod)) {
      auto P = std::make_shared<const PlainSemilattice>(PlainSemilattice::from(**E));
      return PlainHom::make(P, *F, build_map(P->names(), (*F)->names()));
    }
  }
  if (auto E = std::get_if<PlainSemilatticePtr>(&dom)) {
    PlainSemilatticePtr F;
    if (auto p = std::get_if<PlainSemilatticePtr>(&cod)) F = *p;
    if (auto p = std::get_if<SemilatticePtr>(&cod)) F = std::make_shared<const PlainSemilattice>(PlainSemilattice::from(**p));
    if (F) return PlainHom::make(*E, F, build_map((*E)->names(), F->names()));
  }
  throw InputError(path, "domain and codomain must both be semilattices or both inverse semigroups");
}

Document parse_groupoid(const Json& j, const std::string& path) {
  const auto names = name_list(field(j, path, "arrows"), sub(path, "arrows"));
  const auto index = index_of(names);
  const std::size_t n = names.size();
  auto arrow_map = [&](const char* key) {
    const auto p = sub(path, key);
    const auto& o = field(j, path, key);
    if (!o.is_object()) throw InputError(p, "expected an object keyed by arrow name");
    std::vector<int> out(n, -1);
    for (auto it = o.begin(); it != o.end(); ++it) {
      auto a = index.find(it.key());
      if (a == index.end()) throw InputError(p + "." + it.key(), "unknown arrow");
      out[a->second] = resolve(index, it.value(), p + "." + it.key());
    }
    for (std::size_t a = 0; a < n; ++a)
      if (out[a] < 0) throw InputError(p + "." + names[a], "missing entry");
    return out;
  };
  auto source = arrow_map("source");
  auto range = arrow_map("range");
  auto inverse = arrow_map("inverse");
  if (j.contains("units")) {
    const auto upath = sub(path, "units");
    const auto units = name_list(j["units"], upath);
    std::set<int> listed;
    for (std::size_t i = 0; i < units.size(); ++i) listed.insert(resolve(index, j["units"][i], at(upath, i)));
    for (std::size_t a = 0; a < n; ++a)
      if ((source[a] == static_cast<int>(a)) != (listed.count(static_cast<int>(a)) > 0))
        throw InputError(upath, "unit list disagrees with source map at '" + names[a] + "'");
  }
  Table compose(n, std::vector<int>(n, -1));
  const auto cpath = sub(path, "compose");
  const auto& cj = field(j, path, "compose");
  if (!cj.is_array()) throw InputError(cpath, "expected an array of [a, b, ab] triples");
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const auto p = at(cpath, i);
    if (!cj[i].is_array() || cj[i].size() != 3) throw InputError(p, "expected a triple");
    const int a = resolve(index, cj[i][0], at(p, 0)), b = resolve(index, cj[i][1], at(p, 1));
    const int c = resolve(index, cj[i][2], at(p, 2));
    if (compose[a][b] >= 0 && compose[a][b] != c) throw InputError(p, "conflicting product");
    compose[a][b] = c;
  }
  Relation order(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) order[a][a] = true;
  const auto opath = sub(path, "order");
  const auto& oj = field(j, path, "order");
  if (!oj.is_array()) throw InputError(opath, "expected an array of [a, b] pairs meaning a <= b");
  for (std::size_t i = 0; i < oj.size(); ++i) {
    const auto p = at(opath, i);
    if (!oj[i].is_array() || oj[i].size() != 2) throw InputError(p, "expected a pair");
    order[resolve(index, oj[i][0], at(p, 0))][resolve(index, oj[i][1], at(p, 1))] = true;
  }
  return std::make_shared<const FiniteOrderedGroupoid>(FiniteOrderedGroupoid::validate(
      names, std::move(source), std::move(range), std::move(compose), std::move(inverse), std::move(order)));
}

Document parse_space(const Json& j, const std::string& path) {
  const auto names = name_list(field(j, path, "points"), sub(path, "points"));
  const auto index = index_of(names);
  Relation order(names.size(), std::vector<bool>(names.size(), false));
  for (std::size_t a = 0; a < names.size(); ++a) order[a][a] = true;
  const auto opath = sub(path, "order");
  const auto& oj = field(j, path, "order");
  if (!oj.is_array()) throw InputError(opath, "expected an array of [x, y] pairs meaning x <= y");
  for (std::size_t i = 0; i < oj.size(); ++i) {
    const auto p = at(opath, i);
    if (!oj[i].is_array() || oj[i].size() != 2) throw InputError(p, "expected a pair");
    order[resolve(index, oj[i][0], at(p, 0))][resolve(index, oj[i][1], at(p, 1))] = true;
  }
  return FiniteOrderedSpace::validate(names, std::move(order));
}

Document parse_at(const Json& j, const std::string& path, const Limits& limits) {
  const auto kind = check_kind(j, path);
  if (kind == "semilattice") return parse_semilattice(j, path);
  if (kind == "inverse_semigroup") return parse_semigroup(j, path);
  if (kind == "partial_bijections") return parse_partial_bijections(j, path, limits);
  if (kind == "hom") return parse_hom(j, path, limits);
  if (kind == "ordered_groupoid") return parse_groupoid(j, path);
  if (kind == "ordered_space") return parse_space(j, path);
  throw InputError(sub(path, "kind"), "unknown kind '" + kind + "'");
}

Json map_json(const std::vector<int>& map, const std::vector<std::string>& dn, const std::vector<std::string>& cn) {
  Json m = Json::object();
  for (std::size_t i = 0; i < map.size(); ++i) m[dn[i]] = cn[map[i]];
  return m;
}

}  // namespace

std::string kind_of(const Document& doc) {
  return std::visit(overloaded{[](const SemilatticePtr&) { return "semilattice"; },
                               [](const PlainSemilatticePtr&) { return "semilattice"; },
                               [](const InverseSemigroupPtr&) { return "inverse_semigroup"; },
                               [](const PartialBijections&) { return "partial_bijections"; },
                               [](const SemilatticeHom&) { return "hom"; }, [](const SemigroupHom&) { return "hom"; },
                               [](const PlainHom&) { return "hom"; },
                               [](const GroupoidPtr&) { return "ordered_groupoid"; },
                               [](const FiniteOrderedSpace&) { return "ordered_space"; }},
                    doc);
}

Document parse_document(const Json& j, const Limits& limits) { return parse_at(j, "", limits); }

Document parse_document_text(std::string_view text, const Limits& limits) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
    const auto line = 1 + std::count(upto.begin(), upto.end(), '\n');
    throw InputError("line " + std::to_string(line), "malformed JSON");
  }
  return parse_document(j, limits);
}

Json to_json(const FiniteSemilattice& E) {
  Json j;
  j["kind"] = "semilattice";
  j["elements"] = E.names();
  j["zero"] = E.name(E.zero());
  j["meet"] = name_table_json(E.table(), E.names());
  return j;
}

Json to_json(const PlainSemilattice& E) {
  Json j;
  j["kind"] = "semilattice";
  j["elements"] = E.names();
  if (E.zero()) j["zero"] = E.name(*E.zero());
  j["meet"] = name_table_json(E.table(), E.names());
  return j;
}

Json to_json(const FiniteInverseSemigroup& S) {
  Json j;
  j["kind"] = "inverse_semigroup";
  j["elements"] = S.names();
  j["zero"] = S.name(S.zero());
  j["product"] = name_table_json(S.table(), S.names());
  return j;
}

Json to_json(const PartialBijections& P) {
  Json j;
  j["kind"] = "partial_bijections";
  j["degree"] = P.degree;
  Json gens = Json::array();
  for (const auto& g : P.generators) {
    Json row = Json::array();
    for (int y : g) row.push_back(y + 1);
    gens.push_back(std::move(row));
  }
  j["generators"] = std::move(gens);
  return j;
}

Json to_json(const SemilatticeHom& h) {
  Json j;
  j["kind"] = "hom";
  j["domain"] = to_json(*h.dom);
  j["codomain"] = to_json(*h.cod);
  j["map"] = map_json(h.map, h.dom->names(), h.cod->names());
  return j;
}

Json to_json(const SemigroupHom& h) {
  Json j;
  j["kind"] = "hom";
  j["domain"] = to_json(*h.dom);
  j["codomain"] = to_json(*h.cod);
  j["map"] = map_json(h.map, h.dom->names(), h.cod->names());
  return j;
}

Json to_json(const PlainHom& h) {
  Json j;
  j["kind"] = "hom";
  j["domain"] = to_json(*h.dom);
  j["codomain"] = to_json(*h.cod);
  j["map"] = map_json(h.map, h.dom->names(), h.cod->names());
  return j;
}

Json to_json(const FiniteOrderedGroupoid& G) {
  Json j;
  j["kind"] = "ordered_groupoid";
  j["arrows"] = G.names();
  Json units = Json::array();
  for (int u : G.units()) units.push_back(G.name(u));
  j["units"] = std::move(units);
  Json source = Json::object(), range = Json::object(), inverse = Json::object();
  for (int a = 0; a < G.size(); ++a) {
    source[G.name(a)] = G.name(G.source(a));
    range[G.name(a)] = G.name(G.range(a));
    inverse[G.name(a)] = G.name(G.inverse(a));
  }
  j["source"] = std::move(source);
  j["range"] = std::move(range);
  j["inverse"] = std::move(inverse);
  Json compose = Json::array();
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b)
      if (G.compose(a, b) >= 0) compose.push_back(Json::array({G.name(a), G.name(b), G.name(G.compose(a, b))}));
  j["compose"] = std::move(compose);
  Json order = Json::array();
  for (int a = 0; a < G.size(); ++a)
    for (int b = 0; b < G.size(); ++b)
      if (a != b && G.leq(a, b)) order.push_back(Json::array({G.name(a), G.name(b)}));
  j["order"] = std::move(order);
  return j;
}

Json to_json(const FiniteOrderedSpace& X) {
  Json j;
  j["kind"] = "ordered_space";
  j["points"] = X.names();
  Json order = Json::array();
  for (int a = 0; a < X.size(); ++a)
    for (int b = 0; b < X.size(); ++b)
      if (a != b && X.leq(a, b)) order.push_back(Json::array({X.name(a), X.name(b)}));
  j["order"] = std::move(order);
  return j;
}

Json to_json(const Document& doc) {
  return std::visit(overloaded{[](const SemilatticePtr& p) { return to_json(*p); },
                               [](const PlainSemilatticePtr& p) { return to_json(*p); },
                               [](const InverseSemigroupPtr& p) { return to_json(*p); },
                               [](const GroupoidPtr& p) { return to_json(*p); },
                               [](const auto& v) { return to_json(v); }},
                    doc);
}

bool same_document(const Document& a, const Document& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const SemilatticePtr& p) { return *p == *std::get<SemilatticePtr>(b); },
          [&](const PlainSemilatticePtr& p) {
            const auto& q = *std::get<PlainSemilatticePtr>(b);
            return p->names() == q.names() && p->table() == q.table() && p->zero() == q.zero();
          },
          [&](const InverseSemigroupPtr& p) { return *p == *std::get<InverseSemigroupPtr>(b); },
          [&](const PartialBijections& p) {
            const auto& q = std::get<PartialBijections>(b);
            return p.degree == q.degree && p.generators == q.generators && *p.closure == *q.closure;
          },
          [&](const SemilatticeHom& h) {
            const auto& k = std::get<SemilatticeHom>(b);
            return *h.dom == *k.dom && *h.cod == *k.cod && h.map == k.map;
          },
          [&](const SemigroupHom& h) {
            const auto& k = std::get<SemigroupHom>(b);
            return *h.dom == *k.dom && *h.cod == *k.cod && h.map == k.map;
          },
          [&](const PlainHom& h) {
            const auto& k = std::get<PlainHom>(b);
            return h.dom->names() == k.dom->names() && h.dom->table() == k.dom->table() &&
                   h.cod->names() == k.cod->names() && h.cod->table() == k.cod->table() && h.map == k.map;
          },
          [&](const GroupoidPtr& p) { return *p == *std::get<GroupoidPtr>(b); },
          [&](const FiniteOrderedSpace& X) { return X == std::get<FiniteOrderedSpace>(b); }},
      a);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const FiniteOrderedGroupoid& G) {
  std::string out = "digraph G {\n";
  for (int u : G.units()) out += "  " + quoted(G.name(u)) + ";\n";
  for (int a = 0; a < G.size(); ++a) {
    if (G.is_unit(a)) continue;
    const int b = G.inverse(a);
    if (b < a) continue;
    out += "  " + quoted(G.name(G.source(a))) + " -> " + quoted(G.name(G.range(a)));
    if (b == a)
      out += " [label=" + quoted(G.name(a)) + "];\n";
    else
      out += " [label=" + quoted(G.name(a) + " / " + G.name(b)) + ", dir=both];\n";
  }
  for (int u : G.units())
    for (int v : G.units())
      if (u != v && G.leq(u, v))
        out += "  " + quoted(G.name(u)) + " -> " + quoted(G.name(v)) + " [style=dashed];\n";
  return out + "}\n";
}

}  // namespace tightforge::io
