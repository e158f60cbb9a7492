#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tightforge/fsp.hpp"
#include "tightforge/gpd.hpp"
#include "tightforge/isg.hpp"
#include "tightforge/limits.hpp"
#include "tightforge/morphism.hpp"
#include "tightforge/tlk.hpp"

namespace tightforge::io {

using Json = nlohmann::ordered_json;

/// A partial_bijections document keeps its generators next to the closure so
/// that printing reproduces the input.
struct PartialBijections {
  int degree = 0;
  std::vector<PartialMap> generators;
  InverseSemigroupPtr closure;
};

using Document = std::variant<SemilatticePtr, PlainSemilatticePtr, InverseSemigroupPtr, PartialBijections,
                              SemilatticeHom, SemigroupHom, PlainHom, GroupoidPtr, FiniteOrderedSpace>;

/// The "kind" tag the document prints with.
std::string kind_of(const Document& doc);

/// Parses one document.  Schema problems raise InputError naming the field
/// path; axiom failures raise InvalidStructure.
Document parse_document(const Json& j, const Limits& limits = {});
/// As above, from text; JSON syntax errors are reported with a line number.
Document parse_document_text(std::string_view text, const Limits& limits = {});

Json to_json(const FiniteSemilattice& E);
Json to_json(const PlainSemilattice& E);
Json to_json(const FiniteInverseSemigroup& S);
Json to_json(const PartialBijections& P);
Json to_json(const SemilatticeHom& h);
Json to_json(const SemigroupHom& h);
Json to_json(const PlainHom& h);
Json to_json(const FiniteOrderedGroupoid& G);
Json to_json(const FiniteOrderedSpace& X);
Json to_json(const Document& doc);

/// Structural equality of two documents of the same kind.
bool same_document(const Document& a, const Document& b);

/// DOT digraph: one node per unit, one edge per non-unit arrow with an
/// arrow and its inverse merged into a single dir=both edge, and dashed edges
/// for strict order between units.
std::string export_dot(const FiniteOrderedGroupoid& G);

}  // namespace tightforge::io
