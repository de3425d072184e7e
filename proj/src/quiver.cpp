#include "ncnodal/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace ncnodal {

void Quiver::add_vertex(const std::string& id) {
  if (vertex_index_.count(id))
    throw ValidationError("duplicate vertex id: " + id);
  vertex_index_[id] = vertices_.size();
  vertices_.push_back(id);
}

void Quiver::add_arrow(const std::string& id, const std::string& source,
                       const std::string& target) {
  if (arrow_index_.count(id)) throw ValidationError("duplicate arrow id: " + id);
  if (!vertex_index_.count(source))
    throw ValidationError("arrow " + id + ": unknown vertex " + source);
  if (!vertex_index_.count(target))
    throw ValidationError("arrow " + id + ": unknown vertex " + target);
  arrow_index_[id] = arrows_.size();
  arrows_.push_back(Arrow{id, source, target});
}

bool Quiver::has_vertex(const std::string& id) const {
  return vertex_index_.count(id) != 0;
}

bool Quiver::has_arrow(const std::string& id) const {
  return arrow_index_.count(id) != 0;
}

const Arrow& Quiver::arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end())
    throw ValidationError("unknown arrow id: " + id);
  return arrows_[it->second];
}

std::vector<std::string> Quiver::arrows_in(const std::string& vertex) const {
  std::vector<std::string> out;
  for (const auto& a : arrows_)
    if (a.target == vertex) out.push_back(a.id);
  return out;
}

std::vector<std::string> Quiver::arrows_out(const std::string& vertex) const {
  std::vector<std::string> out;
  for (const auto& a : arrows_)
    if (a.source == vertex) out.push_back(a.id);
  return out;
}

bool Quiver::connected() const {
  if (vertices_.empty()) return false;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& a : arrows_) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  std::set<std::string> seen;
  std::vector<std::string> stack{vertices_.front()};
  seen.insert(vertices_.front());
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == vertices_.size();
}

std::string path_display(const std::vector<std::string>& arrows_applied) {
  std::string out;
  for (auto it = arrows_applied.rbegin(); it != arrows_applied.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += *it;
  }
  return out;
}

std::string algebra_kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::gentle: return "gentle";
    case AlgebraKind::skew_gentle: return "skew-gentle";
    default: return "general";
  }
}

namespace {

// Sorts terms by display key, merges equal paths, scales to primitive
// integer coefficients with positive leading coefficient.
void canonicalize_terms(std::vector<RelTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const RelTerm& a, const RelTerm& b) {
    return path_display(a.arrows) < path_display(b.arrows);
  });
  std::vector<RelTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().arrows == t.arrows)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const RelTerm& t) { return t.coeff == 0; }),
               merged.end());
  terms = std::move(merged);
  if (terms.empty()) return;
  Int den_lcm = 1;
  for (const auto& t : terms) den_lcm = lcm(den_lcm, denominator(t.coeff));
  Int num_gcd = 0;
  for (const auto& t : terms)
    num_gcd = gcd(num_gcd, Int(numerator(t.coeff) * (den_lcm / denominator(t.coeff))));
  Rat scale(den_lcm, num_gcd);
  if (terms.front().coeff < 0) scale = -scale;
  for (auto& t : terms) t.coeff *= scale;
}

}  // namespace

std::string Relation::display() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Rat c = terms[i].coeff;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rat a = abs(c);
    if (a != 1) out += rat_to_string(a) + "*";
    out += path_display(terms[i].arrows);
  }
  out += " = 0";
  return out;
}

void Presentation::add_relation(std::vector<RelTerm> terms) {
  if (terms.empty()) throw ValidationError("relation with no terms");
  std::optional<std::pair<std::string, std::string>> ends;
  std::set<std::string> seen_paths;
  for (const auto& t : terms) {
    if (t.coeff == 0) throw ValidationError("relation term with zero coefficient");
    if (t.arrows.empty()) throw ValidationError("relation term with empty path");
    for (std::size_t i = 0; i + 1 < t.arrows.size(); ++i) {
      const Arrow& first = quiver.arrow(t.arrows[i]);
      const Arrow& second = quiver.arrow(t.arrows[i + 1]);
      if (first.target != second.source)
        throw ValidationError("path " + path_display(t.arrows) +
                              " not composable");
    }
    std::pair<std::string, std::string> st{quiver.arrow(t.arrows.front()).source,
                                           quiver.arrow(t.arrows.back()).target};
    if (!ends)
      ends = st;
    else if (*ends != st)
      throw ValidationError("relation terms not parallel: " +
                            path_display(t.arrows));
    if (!seen_paths.insert(path_display(t.arrows)).second)
      throw ValidationError("duplicate path in relation: " +
                            path_display(t.arrows));
  }
  if (terms.size() == 1 && terms.front().arrows.size() < 2)
    throw ValidationError("relation term of length < 2: " +
                          path_display(terms.front().arrows));
  Relation rel;
  rel.terms = std::move(terms);
  canonicalize_terms(rel.terms);
  if (rel.terms.empty()) return;  // cancelled away
  if (rel.terms.size() == 1 && rel.terms.front().arrows.size() < 2)
    throw ValidationError("relation term of length < 2: " +
                          path_display(rel.terms.front().arrows));
  relations.push_back(std::move(rel));
}

bool Presentation::in_monomial_ideal(const std::string& first_applied,
                                     const std::string& second_applied) const {
  for (const auto& r : relations)
    if (r.monomial() && r.terms.front().arrows.size() == 2 &&
        r.terms.front().arrows[0] == first_applied &&
        r.terms.front().arrows[1] == second_applied)
      return true;
  return false;
}

namespace {

std::string canonical_text(const Presentation& p) {
  std::vector<std::string> verts = p.quiver.vertices();
  std::sort(verts.begin(), verts.end());
  std::vector<const Arrow*> arrows;
  for (const auto& a : p.quiver.arrows()) arrows.push_back(&a);
  std::sort(arrows.begin(), arrows.end(),
            [](const Arrow* a, const Arrow* b) { return a->id < b->id; });
  std::vector<std::string> rels;
  for (const auto& r : p.relations) rels.push_back(r.display());
  std::sort(rels.begin(), rels.end());
  std::ostringstream out;
  for (const auto& v : verts) out << "vertex " << v << "\n";
  for (const Arrow* a : arrows)
    out << "arrow " << a->id << " : " << a->source << " -> " << a->target
        << "\n";
  for (const auto& r : rels) out << "rel " << r << "\n";
  return out.str();
}

}  // namespace

bool Presentation::equivalent_to(const Presentation& other) const {
  return canonical_text(*this) == canonical_text(other);
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "quiver " << p.name << "\n";
  out << canonical_text(p);
  return out.str();
}

// ---------------------------------------------------------------------------
// DSL parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    for (std::size_t i = 0; i < raw.size();) {
      char c = raw[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
      int col = static_cast<int>(i) + 1;
      if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < raw.size() && ident_char(raw[j])) ++j;
        toks.push_back(Token{raw.substr(i, j - i), lineno, col});
        i = j;
      } else if (c == '-' && i + 1 < raw.size() && raw[i + 1] == '>') {
        toks.push_back(Token{"->", lineno, col});
        i += 2;
      } else if (c == ':' || c == '*' || c == '+' || c == '-' || c == '=' ||
                 c == '~') {
        toks.push_back(Token{std::string(1, c), lineno, col});
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         lineno, col);
      }
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

bool is_ident(const std::string& t) {
  if (t.empty() || !ident_start(t[0])) return false;
  return std::all_of(t.begin(), t.end(), ident_char);
}

bool is_integer(const std::string& t) {
  if (t.empty()) return false;
  return std::all_of(t.begin(), t.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// vertex names may be bare numbers (1, 2, ... are common labels)
bool is_word(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), ident_char);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty document", 1, 1);
  Presentation p;
  bool have_header = false;
  for (const auto& toks : lines) {
    const Token& head = toks[0];
    auto expect = [&](bool cond, const std::string& msg, const Token& at) {
      if (!cond) throw ParseError(msg, at.line, at.col);
    };
    if (!have_header) {
      expect(head.text == "quiver", "expected 'quiver <ident>' header", head);
      expect(toks.size() == 2 && is_ident(toks[1].text),
             "expected 'quiver <ident>'", head);
      p.name = toks[1].text;
      have_header = true;
      continue;
    }
    if (head.text == "quiver") {
      throw ParseError("duplicate quiver header", head.line, head.col);
    } else if (head.text == "vertex") {
      expect(toks.size() == 2 && is_word(toks[1].text),
             "expected 'vertex <ident>'", head);
      try {
        p.quiver.add_vertex(toks[1].text);
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), toks[1].line, toks[1].col);
      }
    } else if (head.text == "arrow") {
      expect(toks.size() == 6 && is_ident(toks[1].text) && toks[2].text == ":" &&
                 is_word(toks[3].text) && toks[4].text == "->" &&
                 is_word(toks[5].text),
             "expected 'arrow <ident> : <ident> -> <ident>'", head);
      try {
        p.quiver.add_arrow(toks[1].text, toks[3].text, toks[5].text);
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), toks[1].line, toks[1].col);
      }
    } else if (head.text == "rel") {
      std::vector<RelTerm> terms;
      std::size_t i = 1;
      int sign = 1;
      bool first = true;
      while (i < toks.size() && toks[i].text != "=") {
        if (!first) {
          expect(toks[i].text == "+" || toks[i].text == "-",
                 "expected '+' or '-' between terms", toks[i]);
          sign = toks[i].text == "-" ? -1 : 1;
          ++i;
          expect(i < toks.size(), "dangling sign in relation", toks[i - 1]);
        }
        RelTerm term;
        term.coeff = sign;
        if (is_integer(toks[i].text)) {
          term.coeff = sign * Rat(Int(toks[i].text));
          ++i;
          expect(i < toks.size() && toks[i].text == "*",
                 "expected '*' after coefficient", toks[i - 1]);
          ++i;
        }
        expect(i < toks.size() && is_ident(toks[i].text),
               "expected arrow identifier in relation term",
               toks[i < toks.size() ? i : i - 1]);
        std::vector<std::string> display_order{toks[i].text};
        ++i;
        while (i + 1 < toks.size() && toks[i].text == "*" &&
               is_ident(toks[i + 1].text)) {
          display_order.push_back(toks[i + 1].text);
          i += 2;
        }
        // display lists a_m ... a_1; store in application order
        term.arrows.assign(display_order.rbegin(), display_order.rend());
        for (const auto& id : term.arrows)
          expect(p.quiver.has_arrow(id), "unknown arrow id: " + id, head);
        terms.push_back(std::move(term));
        first = false;
        sign = 1;
      }
      expect(i + 1 < toks.size() && toks[i].text == "=" &&
                 toks[i + 1].text == "0" && i + 2 == toks.size(),
             "relation must end with '= 0'", head);
      expect(!terms.empty(), "relation with no terms", head);
      try {
        p.add_relation(std::move(terms));
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), head.line, head.col);
      }
    } else {
      throw ParseError("unknown directive: " + head.text, head.line, head.col);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Gentleness analysis
// ---------------------------------------------------------------------------

namespace {

// Functional-graph style analysis on the arrow composition graphs.
struct ArrowGraph {
  // edges[a] = arrows b with s(b) = t(a) and the (a,b) membership condition
  std::map<std::string, std::vector<std::string>> edges;

  // Tarjan SCC over arrow ids; returns cycles (SCCs of size > 1, or self loop).
  std::vector<std::vector<std::string>> cycles(
      const std::vector<std::string>& nodes) const {
    std::map<std::string, int> index, low;
    std::map<std::string, bool> on_stack;
    std::vector<std::string> stack;
    std::vector<std::vector<std::string>> out;
    int next = 0;
    std::function<void(const std::string&)> strongconnect =
        [&](const std::string& v) {
          index[v] = low[v] = next++;
          stack.push_back(v);
          on_stack[v] = true;
          auto it = edges.find(v);
          if (it != edges.end())
            for (const auto& w : it->second) {
              if (!index.count(w)) {
                strongconnect(w);
                low[v] = std::min(low[v], low[w]);
              } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
              }
            }
          if (low[v] == index[v]) {
            std::vector<std::string> comp;
            for (;;) {
              std::string w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp.push_back(w);
              if (w == v) break;
            }
            bool self_loop = false;
            auto eit = edges.find(v);
            if (comp.size() == 1 && eit != edges.end())
              self_loop = std::find(eit->second.begin(), eit->second.end(),
                                    v) != eit->second.end();
            if (comp.size() > 1 || self_loop) {
              std::reverse(comp.begin(), comp.end());
              out.push_back(std::move(comp));
            }
          }
        };
    for (const auto& v : nodes)
      if (!index.count(v)) strongconnect(v);
    return out;
  }
};

}  // namespace

GentleReport check_gentle(const Presentation& p) {
  GentleReport report;
  const Quiver& q = p.quiver;
  auto violate = [&](const std::string& code, const std::string& detail) {
    report.violations.push_back(GentleViolation{code, detail});
  };

  for (const auto& v : q.vertices()) {
    if (q.arrows_in(v).size() > 2)
      violate("vertex-in-degree", v + " has more than 2 incoming arrows");
    if (q.arrows_out(v).size() > 2)
      violate("vertex-out-degree", v + " has more than 2 outgoing arrows");
  }
  for (const auto& r : p.relations) {
    if (!r.monomial())
      violate("non-monomial-relation", r.display());
    else if (r.terms.front().arrows.size() != 2)
      violate("relation-length", r.display());
  }

  // Pairing axioms over the monomial ideal.
  for (const auto& a : q.arrows()) {
    int succ_in = 0, succ_out = 0, pred_in = 0, pred_out = 0;
    for (const auto& b : q.arrows()) {
      if (b.source == a.target)
        (p.in_monomial_ideal(a.id, b.id) ? succ_in : succ_out)++;
      if (b.target == a.source)
        (p.in_monomial_ideal(b.id, a.id) ? pred_in : pred_out)++;
    }
    if (succ_in > 1)
      violate("pairing", "two relations start with arrow " + a.id);
    if (succ_out > 1)
      violate("pairing", "two relation-free compositions follow arrow " + a.id);
    if (pred_in > 1)
      violate("pairing", "two relations end with arrow " + a.id);
    if (pred_out > 1)
      violate("pairing",
              "two relation-free compositions precede arrow " + a.id);
  }

  std::vector<std::string> arrow_ids;
  for (const auto& a : q.arrows()) arrow_ids.push_back(a.id);

  ArrowGraph permitted, forbidden;
  for (const auto& a : q.arrows())
    for (const auto& b : q.arrows())
      if (b.source == a.target) {
        if (p.in_monomial_ideal(a.id, b.id))
          forbidden.edges[a.id].push_back(b.id);
        else
          permitted.edges[a.id].push_back(b.id);
      }

  if (!permitted.cycles(arrow_ids).empty()) {
    report.has_relation_free_cycle = true;
    violate("relation-free-cycle", "quiver has a cycle avoiding the ideal");
  }
  report.forbidden_cycles = forbidden.cycles(arrow_ids);

  // Longest chain in the forbidden graph, counted in arrows; on cyclic input
  // this is the longest chain of the condensation, a lower bound only.
  {
    std::map<std::string, int> scc_of;
    int nscc = 0;
    for (const auto& cyc : report.forbidden_cycles) {
      for (const auto& a : cyc) scc_of[a] = nscc;
      ++nscc;
    }
    for (const auto& a : arrow_ids)
      if (!scc_of.count(a)) scc_of[a] = nscc++;
    std::map<std::string, int> best;
    std::function<int(const std::string&)> longest = [&](const std::string& a) {
      auto it = best.find(a);
      if (it != best.end()) return it->second;
      best[a] = 1;  // cut recursion on cycles
      int r = 1;
      auto eit = forbidden.edges.find(a);
      if (eit != forbidden.edges.end())
        for (const auto& b : eit->second)
          if (scc_of[b] != scc_of[a]) r = std::max(r, 1 + longest(b));
      best[a] = r;
      return r;
    };
    int overall = 0;
    for (const auto& a : arrow_ids) overall = std::max(overall, longest(a));
    report.longest_forbidden_path_length = overall;
  }

  report.is_gentle = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Presentation isomorphism
// ---------------------------------------------------------------------------

namespace {

struct IsoContext {
  const Presentation* p;
  const Presentation* q;
  std::map<std::string, std::string> vmap;   // p vertex -> q vertex
  std::map<std::string, std::string> vused;  // q vertex -> p vertex
};

std::pair<int, int> degree_signature(const Quiver& q, const std::string& v) {
  return {static_cast<int>(q.arrows_in(v).size()),
          static_cast<int>(q.arrows_out(v).size())};
}

std::multiset<std::string> normalized_relations(
    const Presentation& p, const std::map<std::string, std::string>& arrow_map) {
  std::multiset<std::string> out;
  for (const auto& r : p.relations) {
    std::vector<RelTerm> terms;
    for (const auto& t : r.terms) {
      RelTerm nt;
      nt.coeff = t.coeff;
      for (const auto& a : t.arrows) nt.arrows.push_back(arrow_map.at(a));
      terms.push_back(std::move(nt));
    }
    canonicalize_terms(terms);
    Relation rel;
    rel.terms = std::move(terms);
    out.insert(rel.display());
  }
  return out;
}

bool match_arrows(const IsoContext& ctx, PresentationBijection& result) {
  // Group arrows by mapped (source, target) pair and try bijections between
  // the parallel classes.
  std::map<std::pair<std::string, std::string>, std::vector<std::string>>
      p_classes, q_classes;
  for (const auto& a : ctx.p->quiver.arrows())
    p_classes[{ctx.vmap.at(a.source), ctx.vmap.at(a.target)}].push_back(a.id);
  for (const auto& a : ctx.q->quiver.arrows())
    q_classes[{a.source, a.target}].push_back(a.id);
  if (p_classes.size() != q_classes.size()) return false;
  for (const auto& [key, ids] : p_classes) {
    auto it = q_classes.find(key);
    if (it == q_classes.end() || it->second.size() != ids.size()) return false;
  }

  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      classes;
  for (const auto& [key, ids] : p_classes)
    classes.push_back({ids, q_classes[key]});

  std::map<std::string, std::string> amap;
  std::multiset<std::string> q_rels;
  for (const auto& r : ctx.q->relations) q_rels.insert(r.display());

  std::function<bool(std::size_t)> rec = [&](std::size_t ci) -> bool {
    if (ci == classes.size()) {
      if (normalized_relations(*ctx.p, amap) != q_rels) return false;
      result.vertex_map = ctx.vmap;
      result.arrow_map = amap;
      return true;
    }
    auto& [pids, qids] = classes[ci];
    std::vector<std::string> perm = qids;
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < pids.size(); ++i) amap[pids[i]] = perm[i];
      if (rec(ci + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& id : pids) amap.erase(id);
    return false;
  };
  return rec(0);
}

bool match_vertices(IsoContext& ctx, std::vector<std::string>& order,
                    std::size_t idx, PresentationBijection& result) {
  if (idx == order.size()) return match_arrows(ctx, result);
  const std::string& v = order[idx];
  auto sig = degree_signature(ctx.p->quiver, v);
  for (const auto& w : ctx.q->quiver.vertices()) {
    if (ctx.vused.count(w)) continue;
    if (degree_signature(ctx.q->quiver, w) != sig) continue;
    // neighbor consistency against already-mapped vertices
    bool ok = true;
    for (const auto& a : ctx.p->quiver.arrows()) {
      if (a.source == v && ctx.vmap.count(a.target)) {
        const std::string& wt = a.target == v ? w : ctx.vmap.at(a.target);
        bool found = false;
        for (const auto& b : ctx.q->quiver.arrows())
          if (b.source == w && b.target == wt) { found = true; break; }
        if (!found) { ok = false; break; }
      }
      if (a.target == v && ctx.vmap.count(a.source)) {
        const std::string& ws = a.source == v ? w : ctx.vmap.at(a.source);
        bool found = false;
        for (const auto& b : ctx.q->quiver.arrows())
          if (b.target == w && b.source == ws) { found = true; break; }
        if (!found) { ok = false; break; }
      }
    }
    if (!ok) continue;
    ctx.vmap[v] = w;
    ctx.vused[w] = v;
    if (match_vertices(ctx, order, idx + 1, result)) return true;
    ctx.vmap.erase(v);
    ctx.vused.erase(w);
  }
  return false;
}

}  // namespace

std::optional<PresentationBijection> presentations_isomorphic(
    const Presentation& p, const Presentation& q) {
  if (p.quiver.vertices().size() != q.quiver.vertices().size()) return std::nullopt;
  if (p.quiver.arrows().size() != q.quiver.arrows().size()) return std::nullopt;
  if (p.relations.size() != q.relations.size()) return std::nullopt;
  {
    std::multiset<std::pair<int, int>> ps, qs;
    for (const auto& v : p.quiver.vertices())
      ps.insert(degree_signature(p.quiver, v));
    for (const auto& v : q.quiver.vertices())
      qs.insert(degree_signature(q.quiver, v));
    if (ps != qs) return std::nullopt;
  }
  IsoContext ctx{&p, &q, {}, {}};
  std::vector<std::string> order = p.quiver.vertices();
  // most-connected first keeps the search shallow
  std::stable_sort(order.begin(), order.end(),
                   [&](const std::string& a, const std::string& b) {
                     auto da = degree_signature(p.quiver, a);
                     auto db = degree_signature(p.quiver, b);
                     return da.first + da.second > db.first + db.second;
                   });
  PresentationBijection result;
  if (match_vertices(ctx, order, 0, result)) return result;
  return std::nullopt;
}

Presentation relabel(const Presentation& p,
                     const std::map<std::string, std::string>& vertex_map,
                     const std::map<std::string, std::string>& arrow_map) {
  Presentation out;
  out.name = p.name;
  out.kind = p.kind;
  for (const auto& v : p.quiver.vertices())
    out.quiver.add_vertex(vertex_map.at(v));
  for (const auto& a : p.quiver.arrows())
    out.quiver.add_arrow(arrow_map.at(a.id), vertex_map.at(a.source),
                         vertex_map.at(a.target));
  for (const auto& r : p.relations) {
    std::vector<RelTerm> terms;
    for (const auto& t : r.terms) {
      RelTerm nt;
      nt.coeff = t.coeff;
      for (const auto& a : t.arrows) nt.arrows.push_back(arrow_map.at(a));
      terms.push_back(std::move(nt));
    }
    out.add_relation(std::move(terms));
  }
  return out;
}

}  // namespace ncnodal
