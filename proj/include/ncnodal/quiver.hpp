#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncnodal/errors.hpp"
#include "ncnodal/rational.hpp"

namespace ncnodal {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
};

/// Finite quiver. Vertex and arrow ids are opaque case-sensitive tokens,
/// unique within the quiver; arrow endpoints must be declared vertices.
class Quiver {
 public:
  void add_vertex(const std::string& id);
  void add_arrow(const std::string& id, const std::string& source,
                 const std::string& target);

  bool has_vertex(const std::string& id) const;
  bool has_arrow(const std::string& id) const;
  const Arrow& arrow(const std::string& id) const;

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::vector<std::string> arrows_in(const std::string& vertex) const;
  std::vector<std::string> arrows_out(const std::string& vertex) const;

  /// Connectivity of the underlying undirected graph. Empty quivers count
  /// as disconnected.
  bool connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
};

/// One summand c * (a_m ... a_1) of a relation. Arrows are stored in
/// application order: arrows[0] acts first.
struct RelTerm {
  Rat coeff;
  std::vector<std::string> arrows;
};

/// Formal rational linear combination of parallel paths, kept in canonical
/// form: terms sorted by display key, primitive integer coefficients,
/// leading coefficient positive.
struct Relation {
  std::vector<RelTerm> terms;

  bool monomial() const { return terms.size() == 1; }
  std::string display() const;
};

/// Renders "a_m*...*a_1" for a path given in application order.
std::string path_display(const std::vector<std::string>& arrows_applied);

enum class AlgebraKind { general, gentle, skew_gentle };

std::string algebra_kind_name(AlgebraKind kind);

struct Presentation {
  std::string name = "Q";
  Quiver quiver;
  std::vector<Relation> relations;
  AlgebraKind kind = AlgebraKind::general;  // advisory tag set by constructors

  /// Validates composability/parallelism of every relation and canonicalizes
  /// term order and coefficients. Throws ValidationError.
  void add_relation(std::vector<RelTerm> terms);

  /// Structural equality up to normalization (name and kind tag ignored).
  bool equivalent_to(const Presentation& other) const;

  /// True when (b, a applied first) composes to an element of the monomial
  /// relation ideal, i.e. some single-term relation has path exactly [a, b].
  bool in_monomial_ideal(const std::string& first_applied,
                         const std::string& second_applied) const;
};

Presentation parse_presentation(const std::string& text);
std::string render_presentation(const Presentation& p);

struct GentleViolation {
  std::string code;
  std::string detail;
};

struct GentleReport {
  bool is_gentle = false;
  std::vector<GentleViolation> violations;
  /// Cyclic arrow sequences (application order) all of whose length-2
  /// subpaths lie in the ideal.
  std::vector<std::vector<std::string>> forbidden_cycles;
  int longest_forbidden_path_length = 0;
  bool has_relation_free_cycle = false;
};

GentleReport check_gentle(const Presentation& p);

struct PresentationBijection {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> arrow_map;
};

/// Exact backtracking search for a quiver isomorphism carrying the relations
/// of p onto those of q up to a nonzero rational rescaling per relation.
std::optional<PresentationBijection> presentations_isomorphic(
    const Presentation& p, const Presentation& q);

/// Relabels vertices and arrows through the given maps (total on p).
Presentation relabel(const Presentation& p,
                     const std::map<std::string, std::string>& vertex_map,
                     const std::map<std::string, std::string>& arrow_map);

}  // namespace ncnodal
