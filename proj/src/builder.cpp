#include "ncnodal/builder.hpp"

#include <algorithm>

namespace ncnodal {

namespace {

std::string dsl_safe(const std::string& elem) {
  // "x:1:2:+" -> "x1_2_p", "w:1:2" -> "w1_2"
  std::string out;
  for (char ch : elem) {
    switch (ch) {
      case ':': out += '_'; break;
      case '+': out += 'p'; break;
      case '-': out += 'm'; break;
      default: out += ch;
    }
  }
  // collapse the leading "x_" introduced by the first colon
  auto pos = out.find('_');
  if (pos == 1) out.erase(1, 1);
  return out;
}

struct GammaBlock {
  std::string src, snk;
};

// Adds the p-component block for component k; arrow ids are the element ids.
GammaBlock add_gamma_block(Presentation& p, int k, int p_plus, int p_minus) {
  std::string src = "vp" + std::to_string(k) + "_src";
  std::string snk = "vp" + std::to_string(k) + "_snk";
  p.quiver.add_vertex(src);
  std::vector<std::string> plus_mid, minus_mid;
  for (int j = 1; j < p_plus; ++j) {
    plus_mid.push_back("vp" + std::to_string(k) + "_p" + std::to_string(j));
    p.quiver.add_vertex(plus_mid.back());
  }
  for (int j = 1; j < p_minus; ++j) {
    minus_mid.push_back("vp" + std::to_string(k) + "_m" + std::to_string(j));
    p.quiver.add_vertex(minus_mid.back());
  }
  p.quiver.add_vertex(snk);
  auto chain = [&](int len, int sign, const std::vector<std::string>& mids) {
    for (int j = 1; j <= len; ++j) {
      std::string from = j == 1 ? src : mids[j - 2];
      std::string to = j == len ? snk : mids[j - 1];
      p.quiver.add_arrow(dsl_safe(x_elem(k, j, sign)), from, to);
    }
  };
  chain(p_plus, +1, plus_mid);
  chain(p_minus, -1, minus_mid);
  return {src, snk};
}

// Adds the Gamma(2,2,q) block for q-component k, including its relation.
GammaBlock add_gamma22q_block(Presentation& p, int k, int q) {
  std::string kk = std::to_string(k);
  std::string src = "vq" + kk + "_src";
  std::string snk = "vq" + kk + "_snk";
  std::string up = "vq" + kk + "_up";
  std::string um = "vq" + kk + "_um";
  p.quiver.add_vertex(src);
  p.quiver.add_vertex(up);
  p.quiver.add_vertex(um);
  std::vector<std::string> mids;
  for (int j = 1; j < q; ++j) {
    mids.push_back("vq" + kk + "_w" + std::to_string(j));
    p.quiver.add_vertex(mids.back());
  }
  p.quiver.add_vertex(snk);
  p.quiver.add_arrow("u" + kk + "_p", src, up);
  p.quiver.add_arrow("v" + kk + "_p", up, snk);
  p.quiver.add_arrow("u" + kk + "_m", src, um);
  p.quiver.add_arrow("v" + kk + "_m", um, snk);
  std::vector<std::string> wchain;
  for (int j = 1; j <= q; ++j) {
    std::string from = j == 1 ? src : mids[j - 2];
    std::string to = j == q ? snk : mids[j - 1];
    wchain.push_back(dsl_safe(w_elem(k, j)));
    p.quiver.add_arrow(wchain.back(), from, to);
  }
  std::vector<RelTerm> terms;
  terms.push_back(RelTerm{Rat(1), {"u" + kk + "_p", "v" + kk + "_p"}});
  terms.push_back(RelTerm{Rat(1), {"u" + kk + "_m", "v" + kk + "_m"}});
  terms.push_back(RelTerm{Rat(1), wchain});
  p.add_relation(std::move(terms));
  return {src, snk};
}

}  // namespace

std::string glue_vertex_name(int pair_index) {
  return "g" + std::to_string(pair_index);
}

std::string blowup_vertex_name(const std::string& elem, int sign) {
  return "b" + dsl_safe(elem) + (sign > 0 ? "_p" : "_m");
}

Presentation build_gamma(int p_plus, int p_minus) {
  if (p_plus < 1 || p_minus < 1)
    throw ValidationError("gamma types must be positive");
  Presentation p;
  p.name = "gamma_" + std::to_string(p_plus) + "_" + std::to_string(p_minus);
  p.kind = AlgebraKind::gentle;
  add_gamma_block(p, 1, p_plus, p_minus);
  return p;
}

Presentation build_gamma_22q(int q) {
  if (q < 1) throw ValidationError("gamma(2,2,q) needs q >= 1");
  Presentation p;
  p.name = "gamma_2_2_" + std::to_string(q);
  p.kind = AlgebraKind::general;
  add_gamma22q_block(p, 1, q);
  return p;
}

Presentation build_lambda(const CurveDatum& d) {
  d.validate();
  Presentation p;
  p.name = "lambda";
  for (std::size_t k = 0; k < d.p_components.size(); ++k)
    add_gamma_block(p, static_cast<int>(k) + 1, d.p_components[k].first,
                    d.p_components[k].second);
  for (std::size_t k = 0; k < d.q_components.size(); ++k)
    add_gamma22q_block(p, static_cast<int>(k) + 1, d.q_components[k]);

  auto ties = d.ties;
  std::sort(ties.begin(), ties.end());
  int pair_index = 0;
  for (const auto& [e1, e2] : ties) {
    ++pair_index;
    std::string j = glue_vertex_name(pair_index);
    p.quiver.add_vertex(j);
    std::string rho1 = dsl_safe(e1);
    std::string rho2 = dsl_safe(e2);
    std::string th1 = "th" + std::to_string(pair_index) + "_1";
    std::string th2 = "th" + std::to_string(pair_index) + "_2";
    p.quiver.add_arrow(th1, p.quiver.arrow(rho1).target, j);
    p.quiver.add_arrow(th2, p.quiver.arrow(rho2).target, j);
    p.add_relation({RelTerm{Rat(1), {rho1, th1}}});
    p.add_relation({RelTerm{Rat(1), {rho2, th2}}});
  }
  for (const auto& e : d.reflexives) {
    std::string rho = dsl_safe(e);
    for (int sign : {+1, -1}) {
      std::string j = blowup_vertex_name(e, sign);
      p.quiver.add_vertex(j);
      std::string tb = "t" + j;
      p.quiver.add_arrow(tb, p.quiver.arrow(rho).target, j);
      p.add_relation({RelTerm{Rat(1), {rho, tb}}});
    }
  }

  if (d.q_components.empty())
    p.kind = d.reflexives.empty() ? AlgebraKind::gentle
                                  : AlgebraKind::skew_gentle;
  else
    p.kind = AlgebraKind::general;
  return p;
}

Presentation build_upsilon(int n) {
  if (n < 1) throw ValidationError("upsilon needs n >= 1");
  Presentation p;
  p.name = "upsilon_" + std::to_string(n);
  p.kind = AlgebraKind::gentle;
  auto v = [](int row, int i) {
    return "v" + std::to_string(i) + "_" + std::to_string(row);
  };
  for (int row = 1; row <= 4; ++row)
    for (int i = 1; i <= n; ++i) p.quiver.add_vertex(v(row, i));
  auto id = [](const std::string& base, int i, char s) {
    return base + std::to_string(i) + "_" + s;
  };
  for (int i = 1; i <= n; ++i) {
    int next = i % n + 1;
    p.quiver.add_arrow(id("a", i, 'p'), v(1, i), v(2, i));
    p.quiver.add_arrow(id("a", i, 'm'), v(1, i), v(2, i));
    p.quiver.add_arrow(id("b", i, 'p'), v(2, i), v(3, i));
    p.quiver.add_arrow(id("b", i, 'm'), v(2, i), v(3, next));
    p.quiver.add_arrow(id("c", i, 'p'), v(3, i), v(4, i));
    p.quiver.add_arrow(id("c", i, 'm'), v(3, i), v(4, i));
  }
  for (int i = 1; i <= n; ++i) {
    int next = i % n + 1;
    p.add_relation({RelTerm{Rat(1), {id("a", i, 'm'), id("b", i, 'p')}}});
    p.add_relation({RelTerm{Rat(1), {id("a", i, 'p'), id("b", i, 'm')}}});
    p.add_relation({RelTerm{Rat(1), {id("b", i, 'p'), id("c", i, 'm')}}});
    p.add_relation({RelTerm{Rat(1), {id("b", i, 'm'), id("c", next, 'p')}}});
  }
  return p;
}

namespace {

Presentation four_arm_star() {
  Presentation p;
  p.quiver.add_vertex("top");
  for (int i = 1; i <= 4; ++i) p.quiver.add_vertex("m" + std::to_string(i));
  p.quiver.add_vertex("bot");
  for (int i = 1; i <= 4; ++i) {
    p.quiver.add_arrow("a" + std::to_string(i), "top", "m" + std::to_string(i));
    p.quiver.add_arrow("b" + std::to_string(i), "m" + std::to_string(i), "bot");
  }
  return p;
}

std::vector<std::string> arm(int i) {
  return {"a" + std::to_string(i), "b" + std::to_string(i)};
}

}  // namespace

Presentation build_deg_tubular() {
  Presentation p = four_arm_star();
  p.name = "deg_tubular";
  p.kind = AlgebraKind::general;
  p.add_relation({RelTerm{Rat(1), arm(1)}, RelTerm{Rat(1), arm(2)},
                  RelTerm{Rat(1), arm(3)}});
  p.add_relation({RelTerm{Rat(1), arm(1)}, RelTerm{Rat(-1), arm(4)}});
  return p;
}

Presentation build_tubular(const Rat& lambda) {
  if (lambda == 0 || lambda == 1)
    throw ValidationError("tubular parameter must avoid 0 and 1");
  Presentation p = four_arm_star();
  p.name = "tubular";
  p.kind = AlgebraKind::general;
  p.add_relation({RelTerm{Rat(1), arm(1)}, RelTerm{Rat(-1), arm(2)},
                  RelTerm{Rat(-1), arm(3)}});
  p.add_relation({RelTerm{Rat(1), arm(1)}, RelTerm{-lambda, arm(2)},
                  RelTerm{Rat(-1), arm(4)}});
  return p;
}

Presentation build_skew_s() {
  Presentation p;
  p.name = "skew_S";
  p.kind = AlgebraKind::general;
  for (const char* v : {"Lp", "Mp", "Rp", "Lm", "Mm", "Rm"})
    p.quiver.add_vertex(v);
  p.quiver.add_arrow("a_p", "Lp", "Mp");
  p.quiver.add_arrow("b_p", "Mp", "Rp");
  p.quiver.add_arrow("c_p", "Lp", "Mm");
  p.quiver.add_arrow("d_p", "Mp", "Rm");
  p.quiver.add_arrow("a_m", "Lm", "Mm");
  p.quiver.add_arrow("b_m", "Mm", "Rm");
  p.quiver.add_arrow("c_m", "Lm", "Mp");
  p.quiver.add_arrow("d_m", "Mm", "Rp");
  // any two parallel paths agree
  p.add_relation({RelTerm{Rat(1), {"a_p", "d_p"}},
                  RelTerm{Rat(-1), {"c_p", "b_m"}}});
  p.add_relation({RelTerm{Rat(1), {"a_m", "d_m"}},
                  RelTerm{Rat(-1), {"c_m", "b_p"}}});
  p.add_relation({RelTerm{Rat(1), {"a_p", "b_p"}},
                  RelTerm{Rat(-1), {"c_p", "d_m"}}});
  p.add_relation({RelTerm{Rat(1), {"a_m", "b_m"}},
                  RelTerm{Rat(-1), {"c_m", "d_p"}}});
  return p;
}

}  // namespace ncnodal
