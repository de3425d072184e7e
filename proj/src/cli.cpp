#include "ncnodal/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ncnodal/ag.hpp"
#include "ncnodal/builder.hpp"
#include "ncnodal/datum.hpp"
#include "ncnodal/moves.hpp"
#include "ncnodal/nodal_report.hpp"
#include "ncnodal/surface.hpp"

namespace ncnodal {

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kParseError = 2;
constexpr int kUsageError = 64;

const char kUsage[] =
    "usage: ncnodal <command> [args]\n"
    "  validate <file>                     check a quiver/curve/nodal file\n"
    "  gentle <file>                       gentleness report\n"
    "  ag <file>                           AG-invariant of a gentle quiver\n"
    "  surface <file>                      marked-surface invariants\n"
    "  build-lambda <file>                 glued algebra of a curve datum\n"
    "  fixture <name> [params]             named algebra (upsilon N,\n"
    "                                      deg_tubular, skew_S, tubular L,\n"
    "                                      gamma P M, gamma22q Q)\n"
    "  nodal-report <file>                 nodal-order classification report\n"
    "  admissible <file>                   admissible weight search\n"
    "  modify one|two <file> --at <vertex> elementary tilting rewrite\n"
    "  eliminate-redundant <file> --arrow <id>\n"
    "  cross-validate <file>               closed form vs direct AG\n"
    "file '-' reads standard input\n";

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

std::string ag_text(const AGInvariant& inv, const Presentation& p,
                    std::size_t thread_count) {
  std::ostringstream out;
  for (const auto& [key, count] : inv.phi)
    out << "phi " << key.first << " " << key.second << " " << count << "\n";
  out << "threads " << thread_count << " arrows " << p.quiver.arrows().size()
      << "\n";
  return out.str();
}

int cmd_validate(const std::string& text, std::ostream& out) {
  std::istringstream probe(text);
  std::string first;
  probe >> first;
  while (!first.empty() && first[0] == '#') {
    std::string line;
    std::getline(probe, line);
    first.clear();
    probe >> first;
  }
  if (first == "quiver") {
    Presentation p = parse_presentation(text);
    out << "kind quiver\n"
        << "name " << p.name << "\n"
        << "vertices " << p.quiver.vertices().size() << "\n"
        << "arrows " << p.quiver.arrows().size() << "\n"
        << "relations " << p.relations.size() << "\n";
    return kOk;
  }
  if (first == "curve") {
    CurveDatum d = parse_curve(text);
    d.validate();
    out << "kind curve\n"
        << "p-components " << d.p_components.size() << "\n"
        << "q-components " << d.q_components.size() << "\n"
        << "ties " << d.ties.size() << "\n"
        << "reflexives " << d.reflexives.size() << "\n";
    return kOk;
  }
  if (first == "nodal") {
    NodalDatum d = parse_nodal(text);
    auto check = check_nodal_datum(d);
    if (!check.valid) {
      for (const auto& v : check.violations) out << "violation " << v << "\n";
      return kDomainError;
    }
    out << "kind nodal\n"
        << "elements " << d.omega.size() << "\n"
        << "ddagger " << check.omega_ddagger.size() << "\n"
        << "tilde-ddagger " << check.omega_tilde_ddagger.size() << "\n";
    return kOk;
  }
  throw ParseError("unrecognized document (expected quiver/curve/nodal)", 1, 1);
}

int cmd_gentle(const std::string& text, std::ostream& out) {
  Presentation p = parse_presentation(text);
  GentleReport r = check_gentle(p);
  out << "gentle " << (r.is_gentle ? "yes" : "no") << "\n";
  for (const auto& v : r.violations)
    out << "violation " << v.code << " " << v.detail << "\n";
  for (const auto& cyc : r.forbidden_cycles)
    out << "forbidden-cycle " << path_display(cyc) << "\n";
  out << "longest-forbidden-path " << r.longest_forbidden_path_length << "\n";
  out << "relation-free-cycle " << (r.has_relation_free_cycle ? "yes" : "no")
      << "\n";
  return kOk;
}

int cmd_ag(const std::string& text, std::ostream& out) {
  Presentation p = parse_presentation(text);
  ThreadSystem sys = threads(p);  // throws ValidationError when gated
  AGInvariant inv = ag_invariant(p);
  out << ag_text(inv, p, sys.permitted.size());
  return kOk;
}

int cmd_surface(const std::string& text, std::ostream& out) {
  Presentation p = parse_presentation(text);
  SurfaceModel s = surface_model(p);
  out << "genus " << s.genus << "\n"
      << "boundary " << s.boundary << "\n"
      << "euler " << s.euler << "\n";
  for (const auto& [m, w] : s.boundaries)
    out << "component " << m << " " << w << "\n";
  return kOk;
}

int cmd_build_lambda(const std::string& text, std::ostream& out) {
  CurveDatum d = parse_curve(text);
  out << render_presentation(build_lambda(d));
  return kOk;
}

int cmd_fixture(const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty()) throw ValidationError("fixture needs a name");
  const std::string& name = args[0];
  auto int_arg = [&](std::size_t i) {
    if (args.size() <= i)
      throw ValidationError("fixture " + name + " needs a parameter");
    return std::stoi(args[i]);
  };
  Presentation p;
  if (name == "upsilon") {
    p = build_upsilon(int_arg(1));
  } else if (name == "deg_tubular") {
    p = build_deg_tubular();
  } else if (name == "skew_S") {
    p = build_skew_s();
  } else if (name == "tubular") {
    if (args.size() < 2) throw ValidationError("fixture tubular needs lambda");
    p = build_tubular(rat_from_string(args[1]));
  } else if (name == "gamma") {
    p = build_gamma(int_arg(1), int_arg(2));
  } else if (name == "gamma22q") {
    p = build_gamma_22q(int_arg(1));
  } else {
    throw ValidationError("unknown fixture: " + name);
  }
  out << render_presentation(p);
  return kOk;
}

int cmd_nodal_report(const std::string& text, std::ostream& out) {
  NodalDatum d = parse_nodal(text);
  auto check = check_nodal_datum(d);
  if (!check.valid)
    throw ValidationError("invalid nodal datum: " + check.violations.front());
  NodalOrderReport r = nodal_report(d);
  for (std::size_t i = 0; i < r.cycles.size(); ++i) {
    out << "cover " << r.cycles[i].first << " :";
    for (long long w : r.cycles[i].second) out << " " << w;
    out << "\n";
  }
  out << "connected " << (r.connected ? "yes" : "no") << "\n";
  out << "center t " << r.center_t << "\n";
  out << "center " << r.center << "\n";
  for (const auto& [g, s] : r.aj_blocks) out << "aj " << g << " " << s << "\n";
  for (const auto& [o, s] : r.hj_blocks) out << "hj " << o << " " << s << "\n";
  for (const auto& [g, k] : r.embedding_kinds)
    out << "embed " << g << " " << embedding_kind_name(k) << "\n";
  for (const auto& [g, s] : r.conductor_aj_blocks)
    out << "conductor-aj " << g << " " << s << "\n";
  for (const auto& [o, s] : r.conductor_hj_blocks)
    out << "conductor-hj " << o << " " << s << "\n";
  for (const auto& [key, mult] : r.ext_table)
    out << "ext " << key.first << " " << key.second << " " << mult << "\n";
  return kOk;
}

int cmd_admissible(const std::string& text, std::ostream& out) {
  CurveDatum d = parse_curve(text);
  auto wa = solve_admissible_weight(d);
  if (!wa) {
    out << "admissible no\n";
    return kOk;
  }
  out << "admissible yes\n";
  for (const auto& [k, v] : wa->component_totals)
    out << "total " << k << " " << v << "\n";
  for (const auto& [k, v] : wa->weights) out << "wt " << k << " " << v << "\n";
  return kOk;
}

int cmd_modify(const std::vector<std::string>& args, std::istream& in,
               std::ostream& out) {
  if (args.size() != 4 || (args[0] != "one" && args[0] != "two") ||
      args[2] != "--at")
    throw std::invalid_argument("modify");
  Presentation p = parse_presentation(read_input(args[1], in));
  const std::string& vertex = args[3];
  for (const auto& m : find_fragments(p)) {
    bool hit = args[0] == "one"
                   ? (m.kind == FragmentMatch::Kind::glue && m.j == vertex)
                   : (m.kind == FragmentMatch::Kind::blowup &&
                      (m.j_plus == vertex || m.j_minus == vertex));
    if (!hit) continue;
    Presentation q = args[0] == "one" ? modify_one(p, m) : modify_two(p, m);
    out << render_presentation(q);
    return kOk;
  }
  throw ValidationError("no " + std::string(args[0] == "one" ? "glue" : "blow-up") +
                        " fragment at vertex " + vertex);
}

int cmd_eliminate(const std::vector<std::string>& args, std::istream& in,
                  std::ostream& out) {
  if (args.size() != 3 || args[1] != "--arrow")
    throw std::invalid_argument("eliminate-redundant");
  Presentation p = parse_presentation(read_input(args[0], in));
  out << render_presentation(eliminate_redundant(p, args[2]));
  return kOk;
}

int cmd_cross_validate(const std::string& text, std::ostream& out,
                       std::ostream& err) {
  CurveDatum d = parse_curve(text);
  Presentation lambda = build_lambda(d);
  ThreadSystem sys = threads(lambda);
  AGInvariant direct = ag_invariant(lambda);
  out << ag_text(direct, lambda, sys.permitted.size());
  AGInvariant closed = ag_closed_form(d);
  if (direct.phi != closed.phi) {
    err << "closed form disagrees with direct computation\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return kUsageError;
  }
  const std::string& cmd = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (cmd == "validate" && rest.size() == 1)
      return cmd_validate(read_input(rest[0], in), out);
    if (cmd == "gentle" && rest.size() == 1)
      return cmd_gentle(read_input(rest[0], in), out);
    if (cmd == "ag" && rest.size() == 1)
      return cmd_ag(read_input(rest[0], in), out);
    if (cmd == "surface" && rest.size() == 1)
      return cmd_surface(read_input(rest[0], in), out);
    if (cmd == "build-lambda" && rest.size() == 1)
      return cmd_build_lambda(read_input(rest[0], in), out);
    if (cmd == "fixture" && !rest.empty()) return cmd_fixture(rest, out);
    if (cmd == "nodal-report" && rest.size() == 1)
      return cmd_nodal_report(read_input(rest[0], in), out);
    if (cmd == "admissible" && rest.size() == 1)
      return cmd_admissible(read_input(rest[0], in), out);
    if (cmd == "modify") return cmd_modify(rest, in, out);
    if (cmd == "eliminate-redundant") return cmd_eliminate(rest, in, out);
    if (cmd == "cross-validate" && rest.size() == 1)
      return cmd_cross_validate(read_input(rest[0], in), out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument&) {
    err << kUsage;
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  err << kUsage;
  return kUsageError;
}

}  // namespace ncnodal
