// Command-line front end: reads structure documents (JSON) and prints
// key: value reports.  Exit codes: 0 true/success, 1 property false,
// 2 input error, 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tightforge/corpus.hpp"
#include "tightforge/error.hpp"
#include "tightforge/fsp.hpp"
#include "tightforge/gpd.hpp"
#include "tightforge/hom.hpp"
#include "tightforge/io.hpp"
#include "tightforge/isg.hpp"
#include "tightforge/latt.hpp"
#include "tightforge/suite.hpp"
#include "tightforge/tlk.hpp"

namespace tf = tightforge;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

const char* yes_no(bool b) { return b ? "true" : "false"; }

void field(std::ostream& out, const std::string& key, const std::string& value) { out << key << ": " << value << "\n"; }
void field(std::ostream& out, const std::string& key, bool value) { field(out, key, std::string(yes_no(value))); }
void field(std::ostream& out, const std::string& key, long long value) { field(out, key, std::to_string(value)); }

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw tf::InputError(path, "cannot open file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

tf::io::Document load(const std::string& path, const tf::Limits& limits) {
  const auto text = read_source(path);
  try {
    return tf::io::parse_document_text(text, limits);
  } catch (const tf::InputError& e) {
    throw tf::InputError(path + (e.where().empty() ? "" : ":" + e.where()),
                         std::string(e.what()).substr(e.where().empty() ? 0 : e.where().size() + 2));
  }
}

tf::InverseSemigroupPtr semigroup_of(const tf::io::Document& doc, const std::string& path) {
  if (auto p = std::get_if<tf::InverseSemigroupPtr>(&doc)) return *p;
  if (auto p = std::get_if<tf::io::PartialBijections>(&doc)) return p->closure;
  if (auto p = std::get_if<tf::SemilatticePtr>(&doc))
    return std::make_shared<const tf::FiniteInverseSemigroup>(tf::FiniteInverseSemigroup::from_semilattice(**p));
  throw tf::InputError(path, "expected an inverse semigroup, partial bijections or semilattice with zero");
}

int element(const std::vector<std::string>& names, const std::string& label, const std::string& arg) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == label) return static_cast<int>(i);
  throw tf::InputError(arg, "unknown element '" + label + "'");
}

struct Options {
  std::size_t max_elements = 0;
  std::size_t max_arrows = 0;
  bool dot = false;

  tf::Limits limits() const {
    auto l = tf::Limits::from_env();
    if (max_elements) l.max_elements = max_elements;
    if (max_arrows) l.max_arrows = max_arrows;
    return l;
  }
};

int cmd_validate(const std::string& path, const Options& opt, std::ostream& out) {
  try {
    const auto doc = load(path, opt.limits());
    field(out, "kind", tf::io::kind_of(doc));
    field(out, "valid", true);
    if (auto S = std::get_if<tf::InverseSemigroupPtr>(&doc)) field(out, "size", (long long)(*S)->size());
    if (auto P = std::get_if<tf::io::PartialBijections>(&doc)) field(out, "size", (long long)P->closure->size());
    if (auto E = std::get_if<tf::SemilatticePtr>(&doc)) field(out, "size", (long long)(*E)->size());
    if (auto E = std::get_if<tf::PlainSemilatticePtr>(&doc)) field(out, "size", (long long)(*E)->size());
    if (auto G = std::get_if<tf::GroupoidPtr>(&doc)) field(out, "size", (long long)(*G)->size());
    if (auto X = std::get_if<tf::FiniteOrderedSpace>(&doc)) field(out, "size", (long long)X->size());
    return kTrue;
  } catch (const tf::InvalidStructure& e) {
    field(out, "valid", false);
    field(out, "reason", e.reason());
    if (!e.witness().empty()) field(out, "witness", e.witness());
    return kInputError;
  }
}

int cmd_print(const std::string& path, const Options& opt, std::ostream& out) {
  const auto doc = load(path, opt.limits());
  const auto* G = std::get_if<tf::GroupoidPtr>(&doc);
  if (opt.dot && G)
    out << tf::io::export_dot(**G);
  else
    out << tf::io::to_json(doc).dump(2) << "\n";
  return kTrue;
}

void print_spectrum(const tf::FiniteSemilattice& E, std::ostream& out) {
  const auto sp = tf::tight_spectrum(E);
  field(out, "points", (long long)sp.size());
  for (const auto& xi : sp.points) field(out, "point", E.name(xi.minimum) + " " + tf::format_set(E, xi.members));
  for (int i = 0; i < sp.size(); ++i)
    for (int j = 0; j < sp.size(); ++j)
      if (i != j && sp.order[i][j])
        field(out, "order", E.name(sp.points[i].minimum) + " <= " + E.name(sp.points[j].minimum));
}

int cmd_tight_spectrum(const std::string& path, const Options& opt, std::ostream& out) {
  const auto doc = load(path, opt.limits());
  if (auto E = std::get_if<tf::SemilatticePtr>(&doc)) {
    print_spectrum(**E, out);
    return kTrue;
  }
  print_spectrum(semigroup_of(doc, path)->idempotents(), out);
  return kTrue;
}

int cmd_tight_order(const std::string& path, const std::string& a, const std::string& b, const Options& opt,
                    std::ostream& out) {
  const auto doc = load(path, opt.limits());
  if (auto Ep = std::get_if<tf::SemilatticePtr>(&doc)) {
    const auto& E = **Ep;
    const int e = element(E.names(), a, "e"), f = element(E.names(), b, "f");
    const int w = tf::tight_leq_witness(E, e, f);
    field(out, "tight_leq", w < 0);
    field(out, "leq", E.leq(e, f));
    field(out, "tight_equiv", tf::tight_equiv(E, e, f));
    if (w >= 0) field(out, "witness", E.name(w));
    return w < 0 ? kTrue : kFalse;
  }
  const auto S = semigroup_of(doc, path);
  const int s = element(S->names(), a, "s"), t = element(S->names(), b, "t");
  const bool r = tf::tight_leq_s(*S, s, t);
  field(out, "tight_leq", r);
  field(out, "leq", S->leq(s, t));
  field(out, "tight_equiv", tf::tight_equiv_s(*S, s, t));
  return r ? kTrue : kFalse;
}

int cmd_groupoid(const std::string& path, const Options& opt, std::ostream& out) {
  const auto doc = load(path, opt.limits());
  tf::GroupoidPtr G;
  if (auto g = std::get_if<tf::GroupoidPtr>(&doc))
    G = *g;
  else
    G = tf::tight_groupoid(semigroup_of(doc, path)).germs.groupoid;
  if (opt.dot)
    out << tf::io::export_dot(*G);
  else
    out << tf::io::to_json(*G).dump(2) << "\n";
  return kTrue;
}

int cmd_envelope(const std::string& path, const Options& opt, std::ostream& out) {
  const auto S = semigroup_of(load(path, opt.limits()), path);
  const auto env = tf::tight_envelope(S, opt.limits());
  if (opt.dot)
    out << tf::io::export_dot(env.gt.groupoid());
  else
    out << tf::io::to_json(env.rho).dump(2) << "\n";
  return kTrue;
}

int cmd_quotient(const std::string& path, const Options& opt, std::ostream& out) {
  const auto S = semigroup_of(load(path, opt.limits()), path);
  out << tf::io::to_json(tf::tight_quotient(S).map).dump(2) << "\n";
  return kTrue;
}

void print_semilattice_hom(const tf::SemilatticeHom& h, std::ostream& out) {
  const auto rep = tf::is_tight_hom(h);
  field(out, "covers_targets", rep.covers_targets);
  if (!rep.covers_targets) field(out, "target_witness", h.cod->name(rep.target_witness));
  field(out, "preserves_covers", rep.preserves_covers);
  if (!rep.preserves_covers)
    field(out, "cover_witness", h.dom->name(rep.cover_element_witness) + " " + h.cod->name(rep.cover_gap_witness));
  field(out, "tight", rep.tight());
  const auto inj = tf::tightly_injective(h);
  const auto sur = tf::tightly_surjective(h);
  field(out, "tightly_injective", inj.holds);
  if (!inj.holds) field(out, "injective_witness", h.dom->name(inj.first) + " " + h.dom->name(inj.second));
  field(out, "tightly_surjective", sur.holds);
  if (!sur.holds) field(out, "surjective_witness", h.cod->name(sur.target));
  field(out, "consonance", inj.holds && sur.holds);
  if (rep.tight()) {
    const auto d = tf::dual_map(h);
    field(out, "dual_surjective", d.surjective);
    field(out, "dual_injective", d.injective);
    field(out, "dual_order_injective", d.order_injective);
  }
}

int cmd_check_hom(const std::string& path, const Options& opt, std::ostream& out) {
  const auto doc = load(path, opt.limits());
  if (auto h = std::get_if<tf::SemilatticeHom>(&doc)) {
    print_semilattice_hom(*h, out);
    return tf::is_tight_hom(*h).tight() ? kTrue : kFalse;
  }
  if (auto h = std::get_if<tf::SemigroupHom>(&doc)) {
    const auto r = h->restrict_to_idempotents();
    print_semilattice_hom(r, out);
    field(out, "kernel_size", (long long)tf::kernel(*h).size());
    return tf::is_tight_hom(r).tight() ? kTrue : kFalse;
  }
  throw tf::InputError(path, "expected a hom between semilattices with zero or inverse semigroups");
}

int cmd_check_consonance(const std::string& path, const Options& opt, std::ostream& out) {
  const auto doc = load(path, opt.limits());
  tf::ConsonanceVerdict v;
  const tf::SemigroupHom* sh = std::get_if<tf::SemigroupHom>(&doc);
  if (auto h = std::get_if<tf::SemilatticeHom>(&doc))
    v = tf::check_consonance(*h);
  else if (sh)
    v = tf::check_consonance(*sh);
  else
    throw tf::InputError(path, "expected a hom between semilattices with zero or inverse semigroups");
  field(out, "tightly_injective", v.injective.holds);
  field(out, "tightly_surjective", v.surjective.holds);
  if (v.has_restriction) field(out, "restriction_consonance", v.restriction_consonance);
  field(out, "consonance", v.is_consonance);
  if (sh && v.restriction_consonance) {
    const auto m = tf::induced_groupoid_map(*sh);
    field(out, "groupoid_map_bijective", m.injective && m.surjective);
    field(out, "groupoid_map_order_iso", m.order_preserving && m.order_reflecting);
  }
  return v.is_consonance ? kTrue : kFalse;
}

int cmd_consonant(const std::string& a, const std::string& b, const Options& opt, std::ostream& out) {
  const auto limits = opt.limits();
  const auto S1 = semigroup_of(load(a, limits), a), S2 = semigroup_of(load(b, limits), b);
  const auto v = tf::decide_consonant(S1, S2, limits);
  field(out, "consonant", v.consonant);
  if (!v.reason.empty()) field(out, "reason", v.reason);
  if (v.consonant) {
    field(out, "mediator_size", (long long)v.mediator.semigroup->size());
    field(out, "envelope_route", v.has_envelope_route);
  }
  return v.consonant ? kTrue : kFalse;
}

void print_round_trip(const tf::RoundTripReport& r, std::ostream& out) {
  field(out, "tight_like", r.tight_like);
  field(out, "envelope_iso", r.envelope_iso);
  field(out, "search_iso", r.search_iso);
  field(out, "mu_iso", r.mu_iso);
  field(out, "flat", r.flat);
  field(out, "distributive", r.distributive);
  field(out, "refinement", r.refinement);
  if (r.recovers_semigroup) field(out, "recovers_semigroup", *r.recovers_semigroup);
  if (!r.failure.empty()) field(out, "failure", r.failure);
  field(out, "ok", r.ok());
}

int cmd_duality(const std::string& path, const Options& opt, std::ostream& out) {
  const auto limits = opt.limits();
  const auto doc = load(path, limits);
  if (auto X = std::get_if<tf::FiniteOrderedSpace>(&doc)) {
    const auto rep = tf::check_tight_like_space(*X);
    field(out, "upset_neighbourhoods", rep.upset_neighbourhoods);
    field(out, "separated", rep.separated);
    field(out, "maximal_dense", rep.maximal_dense);
    if (!rep.maximal_dense) field(out, "density_witness", rep.density_witness);
    field(out, "note", rep.note);
    field(out, "tight_like", rep.tight_like());
    if (!rep.tight_like()) return kFalse;
    const auto d = tf::space_duality(*X, limits);
    field(out, "upsets", (long long)d.upsets.lattice->size());
    field(out, "spectrum_points", (long long)d.spectrum.size());
    if (!d.failure.empty()) field(out, "failure", d.failure);
    field(out, "ok", d.ok);
    return d.ok ? kTrue : kFalse;
  }
  if (auto G = std::get_if<tf::GroupoidPtr>(&doc)) {
    const auto rep = tf::check_tight_like_groupoid(**G, limits);
    field(out, "re_axioms", rep.re.all());
    field(out, "unit_space_tight_like", rep.units.tight_like());
    field(out, "covered_by_up_slices", rep.covered);
    if (!rep.covered) field(out, "uncovered", (*G)->name(rep.uncovered));
    if (!rep.tight_like()) {
      field(out, "tight_like", false);
      return kFalse;
    }
    const auto r = tf::groupoid_duality_roundtrip(*G, limits);
    print_round_trip(r, out);
    return r.ok() ? kTrue : kFalse;
  }
  const auto r = tf::groupoid_duality_roundtrip(semigroup_of(doc, path), limits);
  print_round_trip(r, out);
  return r.ok() ? kTrue : kFalse;
}

std::string support_string(const tf::PlainSemilattice& E, const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + E.name(s[i]);
  return out + "}";
}

int cmd_full_spectrum(const std::string& path, const Options& opt, std::ostream& out) {
  const auto doc = load(path, opt.limits());
  auto plain = [](const tf::io::Document& d) -> tf::PlainSemilatticePtr {
    if (auto p = std::get_if<tf::PlainSemilatticePtr>(&d)) return *p;
    if (auto p = std::get_if<tf::SemilatticePtr>(&d))
      return std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::from(**p));
    return nullptr;
  };
  if (auto E = plain(doc)) {
    const auto chars = tf::full_spectrum(*E);
    field(out, "characters", (long long)chars.size());
    for (const auto& c : chars)
      field(out, "character", E->name(c.minimum) + " " + support_string(*E, c.support) +
                                  (c.kills_zero ? " kills_zero" : ""));
    return kTrue;
  }
  std::optional<tf::PlainHom> h;
  if (auto p = std::get_if<tf::PlainHom>(&doc)) h = *p;
  if (auto p = std::get_if<tf::SemilatticeHom>(&doc)) {
    auto D = std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::from(*p->dom));
    auto C = std::make_shared<const tf::PlainSemilattice>(tf::PlainSemilattice::from(*p->cod));
    h = tf::PlainHom::make(D, C, p->map);
  }
  if (!h) throw tf::InputError(path, "expected a semilattice or a semilattice hom");
  const auto d = tf::full_dual(*h);
  long long defined = 0;
  for (bool b : d.in_domain) defined += b;
  field(out, "codomain_characters", (long long)d.cod_spectrum.size());
  field(out, "dual_domain", defined);
  for (std::size_t y = 0; y < d.hat.size(); ++y)
    if (d.hat[y] >= 0)
      field(out, "dual", h->cod->name(d.cod_spectrum[y].minimum) + " -> " +
                             h->dom->name(d.dom_spectrum[d.hat[y]].minimum));
  const auto c = tf::full_dual_iso_criterion(*h);
  field(out, "isomorphism", c.iso);
  field(out, "total_and_bijective", c.total_and_bijective);
  if (!c.witness.empty()) field(out, "witness", c.witness);
  return c.iso ? kTrue : kFalse;
}

int cmd_suite(std::uint64_t seed, const Options& opt, std::ostream& out) {
  const auto ctx = tf::suite::make_context(seed, opt.limits());
  const auto results = tf::suite::run_all(ctx);
  field(out, "seed", std::to_string(seed));
  field(out, "semilattices", (long long)ctx.semilattices.size());
  field(out, "semigroups", (long long)ctx.semigroups.size());
  out << tf::suite::format_report(results);
  for (const auto& r : results)
    if (!r.passed()) return kFalse;
  return kTrue;
}

int cmd_gen_corpus(std::uint64_t seed, int count, int degree, const Options& opt, std::ostream& out) {
  if (count < 0) throw tf::InputError("--count", "must be non-negative");
  if (degree <= 0) throw tf::InputError("--degree", "must be positive");
  for (const auto& [gens, S] : tf::corpus::random_closures(seed, count, degree, opt.limits().max_elements))
    out << tf::io::to_json(*S).dump() << "\n";
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight spectra, tight groupoids and consonance of finite inverse semigroups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-elements", opt.max_elements, "Cap on enumerated elements (default 64)");
  app.add_option("--max-arrows", opt.max_arrows, "Cap on groupoid arrows for slice enumeration (default 16)");
  app.add_flag("--dot", opt.dot, "Emit DOT instead of JSON where a groupoid is printed");

  std::string path, path2, a, b;
  std::uint64_t seed = 7;
  int count = 10, degree = 3;
  std::function<int()> action;

  auto doc_cmd = [&](const char* name, const char* help, int (*fn)(const std::string&, const Options&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("document", path, "Document path, or - for stdin")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(path, opt, std::cout); }; });
  };
  doc_cmd("validate", "Parse and validate a document", cmd_validate);
  doc_cmd("print", "Parse a document and print it in canonical form", cmd_print);
  doc_cmd("tight-spectrum", "Tight filters of a semilattice (or of E(S))", cmd_tight_spectrum);
  doc_cmd("groupoid", "Emit the tight groupoid", cmd_groupoid);
  doc_cmd("envelope", "Emit the fundamental map into the tight envelope", cmd_envelope);
  doc_cmd("quotient", "Emit the quotient by tight equivalence", cmd_quotient);
  doc_cmd("check-hom", "Tightness report for a homomorphism", cmd_check_hom);
  doc_cmd("check-consonance", "Consonance report for a homomorphism", cmd_check_consonance);
  doc_cmd("duality", "Duality round trip for a space, groupoid or semigroup", cmd_duality);
  doc_cmd("full-spectrum", "Characters without zero requirement, or the full dual of a hom", cmd_full_spectrum);

  auto* order = app.add_subcommand("tight-order", "Decide e tightly below f");
  order->add_option("document", path, "Document path, or - for stdin")->required();
  order->add_option("e", a, "Element name")->required();
  order->add_option("f", b, "Element name")->required();
  order->callback([&] { action = [&] { return cmd_tight_order(path, a, b, opt, std::cout); }; });

  auto* cons = app.add_subcommand("consonant", "Decide whether two inverse semigroups are consonant");
  cons->add_option("first", path, "Document path")->required();
  cons->add_option("second", path2, "Document path")->required();
  cons->callback([&] { action = [&] { return cmd_consonant(path, path2, opt, std::cout); }; });

  auto* suite = app.add_subcommand("suite", "Run every property check over the built-in corpus");
  suite->add_option("--seed", seed, "Seed for the random part of the corpus");
  suite->callback([&] { action = [&] { return cmd_suite(seed, opt, std::cout); }; });

  auto* gen = app.add_subcommand("gen-corpus", "Emit random partial bijection closures as JSON lines");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--count", count, "Number of semigroups");
  gen->add_option("--degree", degree, "Number of points acted on");
  gen->callback([&] { action = [&] { return cmd_gen_corpus(seed, count, degree, opt, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return action();
  } catch (const tf::InputError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const tf::InvalidStructure& e) {
    field(std::cout, "valid", false);
    field(std::cout, "reason", e.reason());
    if (!e.witness().empty()) field(std::cout, "witness", e.witness());
    return kInputError;
  } catch (const tf::SizeCapExceeded& e) {
    std::cout << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const tf::PreconditionFailed& e) {
    std::cout << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const tf::NotTight& e) {
    std::cout << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const tf::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
