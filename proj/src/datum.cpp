#include "ncnodal/datum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ncnodal/feasibility.hpp"

namespace ncnodal {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

std::string tie_class_key(const std::string& a, const std::string& b) {
  return a < b ? a + "~" + b : b + "~" + a;
}

struct Token {
  std::string text;
  int line;
  int col;
};

std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto word_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<Token> toks;
    for (std::size_t i = 0; i < raw.size();) {
      char c = raw[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
      int col = static_cast<int>(i) + 1;
      if (word_char(c)) {
        std::size_t j = i;
        while (j < raw.size() && word_char(raw[j])) ++j;
        toks.push_back(Token{raw.substr(i, j - i), lineno, col});
        i = j;
      } else if (c == '-' && i + 1 < raw.size() && raw[i + 1] == '>') {
        toks.push_back(Token{"->", lineno, col});
        i += 2;
      } else if (c == ':' || c == '~' || c == '+' || c == '-') {
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

bool is_number(const std::string& t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

int parse_int_token(const Token& t) {
  if (!is_number(t.text) || t.text.size() > 9)
    throw ParseError("integer out of range: " + t.text, t.line, t.col);
  return std::stoi(t.text);
}

long long parse_ll_token(const Token& t) {
  if (!is_number(t.text) || t.text.size() > 18)
    throw ParseError("integer out of range: " + t.text, t.line, t.col);
  return std::stoll(t.text);
}

}  // namespace

// ---------------------------------------------------------------------------
// NodalDatum
// ---------------------------------------------------------------------------

long long NodalDatum::weight_of(const std::string& elem) const {
  if (reflexives.count(elem)) {
    long long p = weights.count(elem + "+") ? weights.at(elem + "+") : 1;
    long long m = weights.count(elem + "-") ? weights.at(elem + "-") : 1;
    return p + m;
  }
  return weights.count(elem) ? weights.at(elem) : 1;
}

NodalCheck check_nodal_datum(const NodalDatum& d) {
  NodalCheck out;
  std::set<std::string> omega_set(d.omega.begin(), d.omega.end());
  if (omega_set.size() != d.omega.size())
    out.violations.push_back("duplicate element in omega");

  // sigma bijective on omega
  std::set<std::string> image;
  for (const auto& e : d.omega) {
    auto it = d.sigma.find(e);
    if (it == d.sigma.end()) {
      out.violations.push_back("sigma undefined on " + e);
      continue;
    }
    if (!omega_set.count(it->second))
      out.violations.push_back("sigma maps " + e + " outside omega");
    else if (!image.insert(it->second).second)
      out.violations.push_back("sigma not injective at " + it->second);
  }

  std::map<std::string, int> partners;
  for (const auto& [a, b] : d.ties) {
    if (!omega_set.count(a) || !omega_set.count(b)) {
      out.violations.push_back("tie with unknown element " + a + "~" + b);
      continue;
    }
    if (a == b) {
      out.violations.push_back("tie of element with itself: " + a);
      continue;
    }
    partners[a]++;
    partners[b]++;
  }
  for (const auto& e : d.reflexives) {
    if (!omega_set.count(e)) {
      out.violations.push_back("reflexive unknown element " + e);
      continue;
    }
    partners[e]++;
  }
  for (const auto& [e, n] : partners)
    if (n > 1) out.violations.push_back("element " + e + " has two partners");

  for (const auto& [k, w] : d.weights)
    if (w <= 0)
      out.violations.push_back("non-positive weight at " + k);
  for (const auto& [a, b] : d.ties)
    if (d.weight_of(a) != d.weight_of(b))
      out.violations.push_back("weight mismatch on tied pair " + a + "~" + b);

  for (const auto& e : d.omega) {
    if (d.reflexives.count(e))
      out.classes[e] = ElementClass::reflexive;
    else if (partners.count(e))
      out.classes[e] = ElementClass::tied;
    else
      out.classes[e] = ElementClass::simple;
  }

  std::set<std::string> emitted;
  for (const auto& e : d.omega) {
    if (out.classes[e] == ElementClass::reflexive) {
      out.omega_ddagger.push_back(e + "+");
      out.omega_ddagger.push_back(e + "-");
      out.omega_tilde_ddagger.push_back(e + "+");
      out.omega_tilde_ddagger.push_back(e + "-");
    } else if (out.classes[e] == ElementClass::tied) {
      out.omega_ddagger.push_back(e);
      std::string partner;
      for (const auto& [a, b] : d.ties) {
        if (a == e) partner = b;
        if (b == e) partner = a;
      }
      std::string key = tie_class_key(e, partner);
      if (emitted.insert(key).second) out.omega_tilde_ddagger.push_back(key);
    } else {
      out.omega_ddagger.push_back(e);
      out.omega_tilde_ddagger.push_back(e);
    }
  }

  out.valid = out.violations.empty();
  return out;
}

NodalDatum parse_nodal(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty document", 1, 1);
  if (lines[0].size() != 1 || lines[0][0].text != "nodal")
    throw ParseError("expected 'nodal' header", lines[0][0].line,
                     lines[0][0].col);
  NodalDatum d;
  std::set<std::string> omega_set;
  struct WtEntry { std::string elem; int sign; long long value; };
  std::vector<WtEntry> wt_entries;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& toks = lines[li];
    const Token& head = toks[0];
    auto err = [&](const std::string& m, const Token& at) -> void {
      throw ParseError(m, at.line, at.col);
    };
    if (head.text == "omega") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!omega_set.insert(toks[i].text).second)
          err("duplicate omega element " + toks[i].text, toks[i]);
        d.omega.push_back(toks[i].text);
      }
    } else if (head.text == "sigma") {
      std::size_t i = 1;
      while (i < toks.size()) {
        if (i + 2 >= toks.size() || toks[i + 1].text != "->")
          err("expected '<elem> -> <elem>'", toks[i]);
        if (d.sigma.count(toks[i].text))
          err("sigma already defined on " + toks[i].text, toks[i]);
        d.sigma[toks[i].text] = toks[i + 2].text;
        i += 3;
      }
    } else if (head.text == "tie") {
      if (toks.size() != 4 || toks[2].text != "~")
        err("expected 'tie <elem> ~ <elem>'", head);
      std::string a = toks[1].text, b = toks[3].text;
      if (a > b) std::swap(a, b);
      d.ties.emplace_back(a, b);
    } else if (head.text == "refl") {
      if (toks.size() != 2) err("expected 'refl <elem>'", head);
      d.reflexives.insert(toks[1].text);
    } else if (head.text == "wt") {
      // wt <elem> <int>   or   wt <elem>(+|-) <int>
      if (toks.size() == 3 && is_number(toks[2].text)) {
        wt_entries.push_back(WtEntry{toks[1].text, 0, parse_ll_token(toks[2])});
      } else if (toks.size() == 4 &&
                 (toks[2].text == "+" || toks[2].text == "-") &&
                 is_number(toks[3].text)) {
        wt_entries.push_back(WtEntry{toks[1].text, toks[2].text == "+" ? 1 : -1,
                                     parse_ll_token(toks[3])});
      } else {
        err("expected 'wt <elem>[+|-] <int>'", head);
      }
    } else {
      err("unknown directive: " + head.text, head);
    }
  }
  // defaults: identity sigma, unit weights
  for (const auto& e : d.omega)
    if (!d.sigma.count(e)) d.sigma[e] = e;
  for (const auto& e : d.omega) {
    if (d.reflexives.count(e)) {
      d.weights[e + "+"] = 1;
      d.weights[e + "-"] = 1;
    } else {
      d.weights[e] = 1;
    }
  }
  for (const auto& w : wt_entries) {
    if (!omega_set.count(w.elem))
      throw ParseError("wt on unknown element " + w.elem, 1, 1);
    bool refl = d.reflexives.count(w.elem) != 0;
    if (w.sign == 0) {
      if (refl)
        throw ValidationError("reflexive element " + w.elem +
                              " needs wt with + or -");
      d.weights[w.elem] = w.value;
    } else {
      if (!refl)
        throw ValidationError("signed wt on non-reflexive element " + w.elem);
      d.weights[w.elem + (w.sign > 0 ? "+" : "-")] = w.value;
    }
  }
  return d;
}

NodalDatum build_cyclic_nodal(int n, int c) {
  if (c <= 0 || c >= n) throw ValidationError("cyclic datum requires 0 < c < n");
  if (std::gcd(n, c) != 1) throw ValidationError("cyclic datum requires gcd(n, c) = 1");
  NodalDatum d;
  for (int k = 1; k <= n; ++k) d.omega.push_back(std::to_string(k));
  for (int k = 1; k <= n; ++k) d.omega.push_back("t" + std::to_string(k));
  auto prev = [n](int k) { return k == 1 ? n : k - 1; };
  for (int k = 1; k <= n; ++k) {
    d.sigma[std::to_string(k)] = std::to_string(prev(k));
    d.sigma["t" + std::to_string(k)] = "t" + std::to_string(prev(k));
  }
  auto tau = [n, c](int k) {
    int r = static_cast<int>((static_cast<long long>(c) * k) % n);
    return r == 0 ? n : r;  // representatives 1..n
  };
  for (int k = 1; k <= n; ++k) {
    std::string a = "t" + std::to_string(k);
    std::string b = std::to_string(tau(k));
    if (a > b) std::swap(a, b);
    d.ties.emplace_back(a, b);
  }
  std::sort(d.ties.begin(), d.ties.end());
  for (const auto& e : d.omega) d.weights[e] = 1;
  return d;
}

NodalDatum build_dihedral_nodal(int n) {
  if (n < 1) throw ValidationError("dihedral datum requires n >= 1");
  NodalDatum d;
  int l = (n - 1) / 2;
  if (n % 2 == 1) {
    for (int k = 1; k <= n; ++k) d.omega.push_back(std::to_string(k));
    d.reflexives.insert(std::to_string(n));
  } else {
    l = (n - 2) / 2;
    for (int k = 0; k <= 2 * l + 1; ++k) d.omega.push_back(std::to_string(k));
    d.reflexives.insert(std::to_string(0));
    d.reflexives.insert(std::to_string(2 * l + 1));
  }
  for (std::size_t i = 0; i < d.omega.size(); ++i)
    d.sigma[d.omega[i]] = d.omega[(i + d.omega.size() - 1) % d.omega.size()];
  for (int k = 1; k <= l; ++k) {
    std::string a = std::to_string(2 * k - 1), b = std::to_string(2 * k);
    if (a > b) std::swap(a, b);
    d.ties.emplace_back(a, b);
  }
  std::sort(d.ties.begin(), d.ties.end());
  for (const auto& e : d.omega) {
    if (d.reflexives.count(e)) {
      d.weights[e + "+"] = 1;
      d.weights[e + "-"] = 1;
    } else {
      d.weights[e] = 1;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// CurveDatum
// ---------------------------------------------------------------------------

std::string x_elem(int comp, int j, int sign) {
  return "x:" + std::to_string(comp) + ":" + std::to_string(j) + ":" +
         (sign > 0 ? "+" : "-");
}

std::string w_elem(int comp, int j) {
  return "w:" + std::to_string(comp) + ":" + std::to_string(j);
}

bool CurveDatum::elem_exists(const std::string& key) const {
  // keys are produced by x_elem / w_elem only
  for (std::size_t k = 0; k < p_components.size(); ++k) {
    for (int j = 1; j <= p_components[k].first; ++j)
      if (key == x_elem(static_cast<int>(k) + 1, j, +1)) return true;
    for (int j = 1; j <= p_components[k].second; ++j)
      if (key == x_elem(static_cast<int>(k) + 1, j, -1)) return true;
  }
  for (std::size_t k = 0; k < q_components.size(); ++k)
    for (int j = 1; j <= q_components[k]; ++j)
      if (key == w_elem(static_cast<int>(k) + 1, j)) return true;
  return false;
}

std::vector<std::string> CurveDatum::elements() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < p_components.size(); ++k) {
    for (int j = 1; j <= p_components[k].first; ++j)
      out.push_back(x_elem(static_cast<int>(k) + 1, j, +1));
    for (int j = 1; j <= p_components[k].second; ++j)
      out.push_back(x_elem(static_cast<int>(k) + 1, j, -1));
  }
  for (std::size_t k = 0; k < q_components.size(); ++k)
    for (int j = 1; j <= q_components[k]; ++j)
      out.push_back(w_elem(static_cast<int>(k) + 1, j));
  return out;
}

bool CurveDatum::is_tied(const std::string& key) const {
  for (const auto& [a, b] : ties)
    if (a == key || b == key) return true;
  return false;
}

bool CurveDatum::is_special(const std::string& key) const {
  return is_tied(key) || reflexives.count(key) != 0;
}

std::optional<std::string> CurveDatum::tie_partner(const std::string& key) const {
  for (const auto& [a, b] : ties) {
    if (a == key) return b;
    if (b == key) return a;
  }
  return std::nullopt;
}

void CurveDatum::validate() const {
  for (const auto& [pp, pm] : p_components)
    if (pp < 1 || pm < 1)
      throw ValidationError("p-component types must be positive");
  for (int q : q_components)
    if (q < 1) throw ValidationError("q-component types must be positive");
  std::map<std::string, int> partners;
  for (const auto& [a, b] : ties) {
    if (a == b) throw ValidationError("tie of element with itself: " + a);
    if (!elem_exists(a)) throw ValidationError("unknown element " + a);
    if (!elem_exists(b)) throw ValidationError("unknown element " + b);
    partners[a]++;
    partners[b]++;
  }
  for (const auto& e : reflexives) {
    if (!elem_exists(e)) throw ValidationError("unknown element " + e);
    partners[e]++;
  }
  for (const auto& [e, n] : partners)
    if (n > 1) throw ValidationError("element " + e + " has two partners");
}

CurveDatum parse_curve(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty document", 1, 1);
  if (lines[0].size() != 1 || lines[0][0].text != "curve")
    throw ParseError("expected 'curve' header", lines[0][0].line,
                     lines[0][0].col);
  CurveDatum d;
  // element := x : k : j : (+|-)  or  w : k : j
  auto parse_elem = [](const std::vector<Token>& toks, std::size_t& i) {
    auto bad = [&](const Token& at) -> std::string {
      throw ParseError("expected element x:<k>:<j>:(+|-) or w:<k>:<j>", at.line,
                       at.col);
    };
    if (i >= toks.size()) bad(toks.back());
    const Token& t0 = toks[i];
    if (t0.text == "x") {
      if (i + 6 >= toks.size() || toks[i + 1].text != ":" ||
          !is_number(toks[i + 2].text) || toks[i + 3].text != ":" ||
          !is_number(toks[i + 4].text) || toks[i + 5].text != ":" ||
          (toks[i + 6].text != "+" && toks[i + 6].text != "-"))
        bad(t0);
      std::string key = x_elem(parse_int_token(toks[i + 2]),
                               parse_int_token(toks[i + 4]),
                               toks[i + 6].text == "+" ? 1 : -1);
      i += 7;
      return key;
    }
    if (t0.text == "w") {
      if (i + 4 >= toks.size() || toks[i + 1].text != ":" ||
          !is_number(toks[i + 2].text) || toks[i + 3].text != ":" ||
          !is_number(toks[i + 4].text))
        bad(t0);
      std::string key =
          w_elem(parse_int_token(toks[i + 2]), parse_int_token(toks[i + 4]));
      i += 5;
      return key;
    }
    return bad(t0);
  };
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& toks = lines[li];
    const Token& head = toks[0];
    if (head.text == "component") {
      if (toks.size() >= 4 && is_number(toks[1].text) && toks[2].text == "p" &&
          toks.size() == 5 && is_number(toks[3].text) &&
          is_number(toks[4].text)) {
        int k = parse_int_token(toks[1]);
        if (k != static_cast<int>(d.p_components.size()) + 1)
          throw ParseError("p-components must be numbered consecutively from 1",
                           head.line, head.col);
        d.p_components.emplace_back(parse_int_token(toks[3]),
                                    parse_int_token(toks[4]));
      } else if (toks.size() == 4 && is_number(toks[1].text) &&
                 toks[2].text == "q" && is_number(toks[3].text)) {
        int k = parse_int_token(toks[1]);
        if (k != static_cast<int>(d.q_components.size()) + 1)
          throw ParseError("q-components must be numbered consecutively from 1",
                           head.line, head.col);
        d.q_components.push_back(parse_int_token(toks[3]));
      } else {
        throw ParseError("expected 'component <k> p <int> <int>' or "
                         "'component <k> q <int>'",
                         head.line, head.col);
      }
    } else if (head.text == "tie") {
      std::size_t i = 1;
      std::string a = parse_elem(toks, i);
      if (i >= toks.size() || toks[i].text != "~")
        throw ParseError("expected '~' in tie", head.line, head.col);
      ++i;
      std::string b = parse_elem(toks, i);
      if (i != toks.size())
        throw ParseError("trailing tokens after tie", head.line, head.col);
      if (a > b) std::swap(a, b);
      d.ties.emplace_back(a, b);
    } else if (head.text == "refl") {
      std::size_t i = 1;
      std::string a = parse_elem(toks, i);
      if (i != toks.size())
        throw ParseError("trailing tokens after refl", head.line, head.col);
      d.reflexives.insert(a);
    } else {
      throw ParseError("unknown directive: " + head.text, head.line, head.col);
    }
  }
  std::sort(d.ties.begin(), d.ties.end());
  return d;
}

std::string render_curve(const CurveDatum& d) {
  std::ostringstream out;
  out << "curve\n";
  for (std::size_t k = 0; k < d.p_components.size(); ++k)
    out << "component " << k + 1 << " p " << d.p_components[k].first << " "
        << d.p_components[k].second << "\n";
  for (std::size_t k = 0; k < d.q_components.size(); ++k)
    out << "component " << k + 1 << " q " << d.q_components[k] << "\n";
  auto ties = d.ties;
  std::sort(ties.begin(), ties.end());
  for (const auto& [a, b] : ties) out << "tie " << a << " ~ " << b << "\n";
  for (const auto& e : d.reflexives) out << "refl " << e << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Admissibility
// ---------------------------------------------------------------------------

namespace {

struct Point {
  std::string total_key;              // "p<k>" or "q<k>"
  std::vector<std::string> elements;  // Xi elements at this point
  int extra_slacks = 0;               // untied elements not in Xi (q poles)
};

std::vector<Point> special_points(const CurveDatum& d) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < d.p_components.size(); ++k) {
    Point plus{"p" + std::to_string(k + 1), {}, 0};
    for (int j = 1; j <= d.p_components[k].first; ++j)
      plus.elements.push_back(x_elem(static_cast<int>(k) + 1, j, +1));
    Point minus{"p" + std::to_string(k + 1), {}, 0};
    for (int j = 1; j <= d.p_components[k].second; ++j)
      minus.elements.push_back(x_elem(static_cast<int>(k) + 1, j, -1));
    pts.push_back(std::move(plus));
    pts.push_back(std::move(minus));
  }
  for (std::size_t k = 0; k < d.q_components.size(); ++k) {
    Point mid{"q" + std::to_string(k + 1), {}, 0};
    for (int j = 1; j <= d.q_components[k]; ++j)
      mid.elements.push_back(w_elem(static_cast<int>(k) + 1, j));
    pts.push_back(std::move(mid));
    // the two poles of a q-component have length 2 and untied elements only
    for (int pole = 0; pole < 2; ++pole)
      pts.push_back(Point{"q" + std::to_string(k + 1), {}, 2});
  }
  return pts;
}

}  // namespace

std::optional<WeightAssignment> solve_admissible_weight(const CurveDatum& d) {
  d.validate();
  auto pts = special_points(d);

  // Variables: one per tie class / free element / reflexive half / component
  // total / pole slack.
  std::map<std::string, std::size_t> var_of;
  std::vector<std::string> var_names;
  auto var = [&](const std::string& name) {
    auto it = var_of.find(name);
    if (it != var_of.end()) return it->second;
    std::size_t id = var_names.size();
    var_of[name] = id;
    var_names.push_back(name);
    return id;
  };
  auto elem_vars = [&](const std::string& e) {
    std::vector<std::size_t> vs;
    if (d.reflexives.count(e)) {
      vs.push_back(var(e + "+"));
      vs.push_back(var(e + "-"));
    } else if (auto partner = d.tie_partner(e)) {
      vs.push_back(var(tie_class_key(e, *partner)));
    } else {
      vs.push_back(var(e));
    }
    return vs;
  };

  // First pass fixes the variable set; slack names are per point.
  std::vector<std::vector<std::size_t>> point_vars;
  std::vector<std::size_t> point_total;
  int slack_id = 0;
  for (const auto& pt : pts) {
    std::vector<std::size_t> vs;
    for (const auto& e : pt.elements)
      for (auto v : elem_vars(e)) vs.push_back(v);
    for (int s = 0; s < pt.extra_slacks; ++s)
      vs.push_back(var("slack" + std::to_string(slack_id++)));
    point_vars.push_back(std::move(vs));
    point_total.push_back(var("total:" + pt.total_key));
  }

  EqualityFeasibility prob(var_names.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Rat> row(var_names.size(), Rat(0));
    for (auto v : point_vars[i]) row[v] += 1;
    row[point_total[i]] -= 1;
    prob.add_equation(std::move(row));
  }
  auto sol = prob.solve();
  if (!sol) return std::nullopt;

  // least positive integer scaling over the whole solution vector
  Int den_lcm = 1;
  for (const auto& r : *sol) den_lcm = lcm(den_lcm, denominator(r));
  Int num_gcd = 0;
  for (const auto& r : *sol)
    num_gcd = gcd(num_gcd, Int(numerator(r) * (den_lcm / denominator(r))));
  std::vector<long long> value(var_names.size());
  for (std::size_t i = 0; i < sol->size(); ++i) {
    Int scaled = numerator((*sol)[i]) * (den_lcm / denominator((*sol)[i]));
    value[i] = static_cast<long long>(scaled / num_gcd);
  }

  WeightAssignment wa;
  for (const auto& e : d.elements()) {
    if (d.reflexives.count(e)) {
      wa.weights[e + "+"] = value[var_of.at(e + "+")];
      wa.weights[e + "-"] = value[var_of.at(e + "-")];
    } else if (auto partner = d.tie_partner(e)) {
      wa.weights[e] = value[var_of.at(tie_class_key(e, *partner))];
    } else {
      wa.weights[e] = value[var_of.at(e)];
    }
  }
  for (std::size_t k = 0; k < d.p_components.size(); ++k)
    wa.component_totals["p" + std::to_string(k + 1)] =
        value[var_of.at("total:p" + std::to_string(k + 1))];
  for (std::size_t k = 0; k < d.q_components.size(); ++k)
    wa.component_totals["q" + std::to_string(k + 1)] =
        value[var_of.at("total:q" + std::to_string(k + 1))];
  return wa;
}

bool verify_weight_assignment(const CurveDatum& d, const WeightAssignment& wa) {
  auto weight_of = [&](const std::string& e) -> long long {
    if (d.reflexives.count(e)) {
      auto p = wa.weights.find(e + "+");
      auto m = wa.weights.find(e + "-");
      if (p == wa.weights.end() || m == wa.weights.end()) return -1;
      if (p->second < 1 || m->second < 1) return -1;
      return p->second + m->second;
    }
    auto it = wa.weights.find(e);
    if (it == wa.weights.end() || it->second < 1) return -1;
    return it->second;
  };
  for (const auto& [a, b] : d.ties) {
    if (weight_of(a) < 0 || weight_of(a) != weight_of(b)) return false;
  }
  for (const auto& pt : special_points(d)) {
    auto total_it = wa.component_totals.find(pt.total_key);
    if (total_it == wa.component_totals.end() || total_it->second < 1)
      return false;
    long long sum = 0;
    for (const auto& e : pt.elements) {
      long long w = weight_of(e);
      if (w < 0) return false;
      sum += w;
    }
    if (pt.extra_slacks > 0) {
      // untied point elements just need room: total >= slacks
      if (total_it->second < pt.extra_slacks) return false;
    } else if (sum != total_it->second) {
      return false;
    }
  }
  return true;
}

bool satisfies_admissible_sufficient(const CurveDatum& d) {
  for (const auto& pt : special_points(d)) {
    if (pt.elements.empty()) continue;
    bool has_tied = false, has_untied = pt.extra_slacks > 0;
    for (const auto& e : pt.elements) {
      if (d.tie_partner(e))
        has_tied = true;
      else
        has_untied = true;  // simple or reflexive halves absorb slack
    }
    if (has_tied && !has_untied) return false;
  }
  return true;
}

std::pair<CurveDatum, WeightAssignment> build_stacky_cycle(
    const std::vector<int>& n, const std::vector<int>& c) {
  if (n.empty() || n.size() != c.size())
    throw ValidationError("stacky cycle needs matching nonempty n and c");
  int r = static_cast<int>(n.size());
  for (int k = 0; k < r; ++k) {
    if (n[k] < 1 || c[k] < 1)
      throw ValidationError("stacky cycle entries must be positive");
    if (std::gcd(n[k], c[k]) != 1)
      throw ValidationError("stacky cycle requires gcd(n_k, c_k) = 1");
  }
  CurveDatum d;
  for (int k = 0; k < r; ++k)
    d.p_components.emplace_back(n[(k + r - 1) % r], n[k]);
  for (int k = 0; k < r; ++k) {
    int next = (k + 1) % r;
    for (int j = 1; j <= n[k]; ++j) {
      int t = static_cast<int>((static_cast<long long>(c[k]) * j) % n[k]);
      if (t == 0) t = n[k];
      std::string a = x_elem(k + 1, j, -1);
      std::string b = x_elem(next + 1, t, +1);
      if (a > b) std::swap(a, b);
      d.ties.emplace_back(a, b);
    }
  }
  std::sort(d.ties.begin(), d.ties.end());
  d.validate();

  long long lcm_n = 1;
  for (int k = 0; k < r; ++k) lcm_n = lcm_n / gcd_ll(lcm_n, n[k]) * n[k];
  WeightAssignment wa;
  for (int k = 0; k < r; ++k) {
    for (int j = 1; j <= d.p_components[k].first; ++j)
      wa.weights[x_elem(k + 1, j, +1)] = lcm_n / n[(k + r - 1) % r];
    for (int j = 1; j <= d.p_components[k].second; ++j)
      wa.weights[x_elem(k + 1, j, -1)] = lcm_n / n[k];
    wa.component_totals["p" + std::to_string(k + 1)] = lcm_n;
  }
  return {d, wa};
}

}  // namespace ncnodal
