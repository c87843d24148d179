// geomlie command-line tool.
//
// Exit codes: 0 success, 1 failed check or I/O error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "geomlie/coxplane.hpp"
#include "geomlie/liealg.hpp"
#include "geomlie/verify.hpp"
#include "geomlie/wheel.hpp"

using namespace geomlie;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct CheckFailed {};

bool use_color() {
  const char* env = std::getenv("GEOMLIE_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string paint(const std::string& s, const char* code) {
  return use_color() ? fmt::format("\x1b[{}m{}\x1b[0m", code, s) : s;
}

LieType parse_type(const std::string& label) {
  LieType t;
  try {
    t = make_type(label);
  } catch (const TypeError& e) {
    throw UsageError(e.what());
  }
  if (t.is_low_rank_alias()) std::cerr << "warning: D3 coincides with A3; using the D numbering\n";
  return t;
}

Root parse_root(const std::string& text) {
  IntVector v;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == ' ') continue;
    if (ch == ',') {
      if (cur.empty()) continue;
      try {
        v.push_back(std::stoll(cur));
      } catch (const std::exception&) {
        throw UsageError("malformed root '" + text + "'");
      }
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return Root(v);
}

void print_matrix(const IntMatrix& m) {
  int width = 1;
  for (const auto& row : m.to_rows())
    for (auto x : row) width = std::max(width, static_cast<int>(std::to_string(x).size()));
  for (const auto& row : m.to_rows()) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) line += fmt::format("{}{:>{}}", j ? " " : "", row[j], width);
    std::cout << line << '\n';
  }
}

std::string vec(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += fmt::format("{}{:>2}", i ? " " : "", v[i]);
  return "[" + s + "]";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void print_report(const VerifyReport& r) {
  for (const auto& c : r.records) {
    const std::string status = c.pass ? paint("PASS", "32") : paint("FAIL", "31");
    std::cout << fmt::format("{} {:>2} {:<22} {:<6} {:>9.1f} ms  {}\n", status, c.criterion, c.name, c.subject,
                             c.millis, c.actual);
    if (!c.pass) std::cout << fmt::format("{:>38}expected: {}\n", "", c.expected);
  }
  const auto bad = r.failing_criteria();
  std::cout << fmt::format("{} checks, {} failing criteria\n", r.records.size(), bad.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric root systems and Lie algebras of simple singularities"};
  app.require_subcommand(1);
  std::function<void()> action;

  std::string type_label;
  bool json = false;

  auto* info = app.add_subcommand("info", "Print the constants of a type");
  info->add_option("type", type_label, "Type label, e.g. E8")->required();
  info->add_flag("--json", json, "Machine-readable output");
  info->callback([&] {
    action = [&] {
      const LieType t = parse_type(type_label);
      const auto d = orbit_decomposition(t, OrbitOperator::Monodromy);
      const unsigned m = d.operator_order;
      nlohmann::json j = {{"type", t.name()},          {"rank", t.rank},
                          {"coxeter_number", t.coxeter_number}, {"roots", t.root_count},
                          {"lie_dimension", t.rank + t.root_count}, {"monodromy_order", m},
                          {"monodromy_orbits", d.orbits.size()}};
      if (json) return print_json(j);
      std::cout << fmt::format("type            {}\nrank            {}\nCoxeter number  {}\nroots           {}\n"
                               "Lie dimension   {}\nmonodromy order {}\nmonodromy orbits {}\n",
                               t.name(), t.rank, t.coxeter_number, t.root_count, t.rank + t.root_count, m,
                               d.orbits.size());
    };
  });

  auto* cartan = app.add_subcommand("cartan", "Print the Cartan matrix B + B^T");
  cartan->add_option("type", type_label)->required();
  cartan->add_flag("--json", json);
  cartan->callback([&] {
    action = [&] {
      const LieType t = parse_type(type_label);
      const IntMatrix c = cartan_matrix(t).entries;
      json ? print_json(matrix_json(t, c)) : print_matrix(c);
    };
  });

  int variables = 0;
  bool form = false;
  auto* seifert = app.add_subcommand("seifert", "Print the mixed intersection matrix B or the Seifert form");
  seifert->add_option("type", type_label)->required();
  seifert->add_flag("--form", form, "Print the Seifert form L = -B^T instead of B");
  seifert->add_option("--variables", variables, "Seifert form of the stabilization in n variables")
      ->check(CLI::Range(2, 64));
  seifert->add_flag("--json", json);
  seifert->callback([&] {
    action = [&] {
      const LieType t = parse_type(type_label);
      const IntMatrix m = variables ? stabilized_seifert_matrix(t, variables)
                          : form    ? Lattice(t).seifert_form_matrix()
                                    : seifert_matrix(t).entries;
      json ? print_json(matrix_json(t, m)) : print_matrix(m);
    };
  });

  bool count = false;
  auto* roots = app.add_subcommand("roots", "Enumerate the geometric roots");
  roots->add_option("type", type_label)->required();
  roots->add_flag("--count", count, "Print only the number of roots");
  roots->add_flag("--json", json);
  roots->callback([&] {
    action = [&] {
      const RootSystem rs = enumerate_roots(parse_type(type_label));
      if (count) {
        std::cout << rs.size() << '\n';
      } else if (json) {
        print_json(rs.to_json());
      } else {
        for (std::size_t i = 0; i < rs.size(); ++i) std::cout << fmt::format("{:>4}  {}\n", i, vec(rs[i].coords));
      }
    };
  });

  std::string basis = "simple";
  auto* mono = app.add_subcommand("monodromy", "Print the monodromy matrix rho_* = -c");
  mono->add_option("type", type_label)->required();
  mono->add_option("--basis", basis, "simple or projective")->check(CLI::IsMember({"simple", "projective"}));
  mono->add_flag("--json", json);
  mono->callback([&] {
    action = [&] {
      const LieType t = parse_type(type_label);
      const IntMatrix m = monodromy_matrix(t, basis == "simple" ? Basis::Simple : Basis::Projective);
      json ? print_json(matrix_json(t, m)) : print_matrix(m);
    };
  });

  std::string op = "rho";
  auto* orbits = app.add_subcommand("orbits", "Orbit decomposition of the roots");
  orbits->add_option("type", type_label)->required();
  orbits->add_option("--operator", op, "rho (monodromy) or rhobar (Coxeter element)")
      ->check(CLI::IsMember({"rho", "rhobar"}));
  orbits->add_flag("--json", json);
  orbits->callback([&] {
    action = [&] {
      const RootSystem rs = enumerate_roots(parse_type(type_label));
      const auto d = orbit_decomposition(rs, op == "rho" ? OrbitOperator::Monodromy : OrbitOperator::CoxeterBar);
      if (json) return print_json(d.to_json());
      std::cout << fmt::format("operator {}  order {}  orbits {}  {}\n", op, d.operator_order, d.orbits.size(),
                               d.free ? "free" : "not free");
      for (std::size_t o = 0; o < d.orbits.size(); ++o) {
        std::cout << fmt::format("orbit {} (size {}):", o, d.orbits[o].size());
        for (auto r : d.orbits[o]) std::cout << ' ' << vec(rs[r].coords);
        std::cout << '\n';
      }
    };
  });

  std::string check = "all";
  auto* lie = app.add_subcommand("lie", "Build the Lie algebra and check its laws");
  lie->add_option("type", type_label)->required();
  lie->add_option("--check", check, "all, antisymmetry, jacobi, killing, sl2, model")
      ->check(CLI::IsMember({"all", "antisymmetry", "jacobi", "killing", "sl2", "model"}));
  lie->callback([&] {
    action = [&] {
      const LieType t = parse_type(type_label);
      const LieAlgebra L = LieAlgebra::build(t);
      bool ok = true;
      auto line = [&](const std::string& what, bool pass, const std::string& detail) {
        ok = ok && pass;
        std::cout << fmt::format("{} {:<14} {}\n", pass ? paint("PASS", "32") : paint("FAIL", "31"), what, detail);
      };
      std::cout << fmt::format("{}: dimension {}\n", t.name(), L.dimension());
      const bool all = check == "all";
      if (all || check == "antisymmetry") {
        const auto v = antisymmetry_violations(L);
        line("antisymmetry", v.empty(), fmt::format("{} violations", v.size()));
      }
      if (all || check == "jacobi") {
        const auto r = check_jacobi(L);
        line("jacobi", r.ok(), fmt::format("{} violations over {} triples", r.violations.size(), r.triples_checked));
      }
      if (all || check == "killing") {
        const IntMatrix k = killing_form(L);
        line("killing", k.is_symmetric() && is_nondegenerate(k), "symmetric, det " + exact_determinant(k).str());
      }
      if (all || check == "sl2") {
        std::size_t bad = 0;
        for (const auto& r : L.root_system().roots())
          if (!sl2_triple(L, r).verified) ++bad;
        line("sl2", bad == 0, fmt::format("{} of {} triples fail", bad, L.root_system().size()));
      }
      if (check == "model" || (all && t.family == Family::A)) {
        if (t.family != Family::A) throw UsageError("the matrix model exists for type A only");
        line("matrix model", slk_model_check(t.rank), fmt::format("sl_{}", t.rank + 1));
      }
      if (!ok) throw CheckFailed{};
    };
  });

  std::string root_text;
  auto* sl2 = app.add_subcommand("sl2", "Print and verify the sl2-triple of a root");
  sl2->add_option("type", type_label)->required();
  sl2->add_option("root", root_text, "Root in simple coordinates, e.g. 1,1,0")->required();
  sl2->callback([&] {
    action = [&] {
      const LieAlgebra L = LieAlgebra::build(parse_type(type_label));
      const Root r = parse_root(root_text);
      if (r.size() != L.rank()) throw UsageError(fmt::format("root must have {} coordinates", L.rank()));
      const Sl2Triple tr = sl2_triple(L, r);
      auto show = [&](const AlgebraElement& x) {
        std::string s;
        for (const auto& term : x.terms())
          s += fmt::format("{}{}*{}", s.empty() ? "" : " + ", term.coef, L.label(static_cast<std::size_t>(term.index)));
        return s.empty() ? std::string("0") : s;
      };
      std::cout << "e = " << show(tr.e) << "\nf = " << show(tr.f) << "\nh = " << show(tr.h) << '\n';
      std::cout << "[h,e] = " << show(L.bracket(tr.h, tr.e)) << "\n[h,f] = " << show(L.bracket(tr.h, tr.f))
                << "\n[e,f] = " << show(L.bracket(tr.e, tr.f)) << '\n';
      std::cout << (tr.verified ? paint("verified", "32") : paint("NOT verified", "31")) << '\n';
      if (!tr.verified) throw CheckFailed{};
    };
  });

  std::string out_path, format = "json";
  auto* exp = app.add_subcommand("export", "Write the structure constants");
  exp->add_option("type", type_label)->required();
  exp->add_option("-o,--output", out_path, "Output file")->required();
  exp->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  exp->callback([&] {
    action = [&] {
      const LieAlgebra L = LieAlgebra::build(parse_type(type_label));
      write_file(out_path, format == "json" ? structure_constants_json(L).dump() + "\n" : structure_constants_csv(L));
      std::cout << fmt::format("wrote {} ({} basis elements)\n", out_path, L.dimension());
    };
  });

  bool classes = false;
  auto* wheel = app.add_subcommand("wheel", "Coxeter wheel model");
  wheel->add_option("type", type_label)->required();
  wheel->add_flag("--classes", classes, "Dump the segment classes");
  wheel->add_flag("--json", json);
  wheel->callback([&] {
    action = [&] {
      const LieType t = parse_type(type_label);
      const WheelModel w = build_wheel(t);
      if (classes) {
        const auto cls = enumerate_classes(t);
        if (json) return print_json(segment_classes_json(t, cls));
        for (const auto& c : cls) {
          std::string reps;
          for (const auto& s : c.representatives) {
            if (const auto* v = std::get_if<VertexSegment>(&s))
              reps += fmt::format(" v{}->v{}", v->source, v->target);
            else {
              const auto& l = std::get<OrbitLabel>(s);
              reps += fmt::format(" ({},{},{:+})", l.j, l.m, l.sign);
            }
          }
          std::cout << vec(c.homology.coords) << "  <-" << reps << '\n';
        }
        return;
      }
      std::cout << fmt::format("{} wheel: ", t.name());
      if (t.family == Family::E)
        std::cout << fmt::format("orbit labels, {} x {} steps", t.rank, w.orbit_steps);
      else
        std::cout << fmt::format("{}-gon{}, {} punctures", w.polygon_size, w.has_center ? " with center" : "",
                                 w.punctures.size());
      if (w.rotation) std::cout << fmt::format(", rotation {}/{} pi", w.rotation->numerator(), w.rotation->denominator());
      std::cout << '\n';
    };
  });

  std::string svg_path;
  bool no_edges = false, no_colors = false, report = false;
  int size = 400;
  auto* cox = app.add_subcommand("coxplane", "Coxeter-plane projection");
  cox->add_option("type", type_label)->required();
  cox->add_option("--svg", svg_path, "Write an SVG drawing");
  cox->add_flag("--no-edges", no_edges);
  cox->add_flag("--no-colors", no_colors);
  cox->add_option("--size", size)->check(CLI::Range(16, 10000));
  cox->add_flag("--report", report, "Print the multiplicity report");
  cox->add_flag("--json", json);
  cox->callback([&] {
    action = [&] {
      const LieType t = parse_type(type_label);
      if (!svg_path.empty()) {
        write_file(svg_path, render_svg(t, {!no_edges, !no_colors, size}));
        std::cout << "wrote " << svg_path << '\n';
      }
      if (report || svg_path.empty()) {
        const auto cl = multiplicity_report(t);
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& c : cl) arr.push_back({{"x", c.x}, {"y", c.y}, {"count", c.members.size()}});
          return print_json({{"type", t.name()}, {"clusters", arr}});
        }
        std::cout << fmt::format("{}: {} roots, {} projection clusters, {}\n", t.name(), t.root_count, cl.size(),
                                 cl.size() == static_cast<std::size_t>(t.root_count) ? "injective" : "not injective");
        std::cout << fmt::format("equivariance residual {:.3e}\n", equivariance_residual(t));
      }
    };
  });

  std::string fold_label;
  auto* fold_cmd = app.add_subcommand("fold", "Fold a simply-laced Cartan matrix, e.g. E6:F4");
  fold_cmd->add_option("folding", fold_label)->required();
  fold_cmd->add_flag("--json", json);
  fold_cmd->callback([&] {
    action = [&] {
      FoldingSpec spec;
      try {
        spec = classical_folding(fold_label);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const FoldResult r = fold(spec);
      if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : r.cartan.to_rows()) rows.push_back(row);
        nlohmann::json nodes = nlohmann::json::array();
        for (const auto& n : r.nodes) {
          nlohmann::json one = nlohmann::json::array();
          for (int i : n) one.push_back(i + 1);
          nodes.push_back(one);
        }
        return print_json({{"source", spec.source.name()}, {"target", spec.target_name}, {"nodes", nodes}, {"cartan", rows}});
      }
      std::cout << fmt::format("{} -> {}  nodes:", spec.source.name(), spec.target_name);
      for (const auto& n : r.nodes) {
        std::string s;
        for (int i : n) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
        std::cout << " {" << s << "}";
      }
      std::cout << '\n';
      print_matrix(r.cartan);
    };
  });

  bool all_types = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("type", type_label, "Single type (default: all)");
  verify->add_flag("--all", all_types, "A1..A8, D3..D8, E6..E8 and the foldings");
  verify->add_flag("--json", json);
  verify->callback([&] {
    action = [&] {
      const bool everything = all_types || type_label.empty();
      const auto types = everything ? standard_types() : std::vector<LieType>{parse_type(type_label)};
      const VerifyReport r = run_verify(types, everything);
      json ? print_json(r.to_json()) : print_report(r);
      if (!r.ok()) throw CheckFailed{};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
