// Command-line front end: one query per invocation, or one per line with @file.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "danielewski/danielewski.hpp"
#include "danielewski/report.hpp"

namespace dw = danielewski;
using dw::report::Json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitShape = 3;
constexpr int kExitInternal = 4;

struct Options {
  bool json = false;
  bool rational_only = false;
  bool no_witness = false;
  std::string field;
  std::string map;
  std::string inverse;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(dw::ErrorCode c) {
  switch (c) {
    case dw::ErrorCode::SyntaxError: return kExitParse;
    case dw::ErrorCode::InternalAssertion: return kExitInternal;
    default: return kExitShape;
  }
}

std::string trim(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(trim(part));
  return out;
}

// "t^2 - 2" -> Q(t); the generator is whatever identifier is not a number.
dw::NumberField parse_field(const std::string& text) {
  if (text.empty()) return {};
  std::smatch m;
  std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  if (!std::regex_search(text, m, ident)) dw::fail(dw::ErrorCode::SyntaxError, "field needs a generator name");
  const std::string gen = m.str();
  if (gen == "x" || gen == "y") dw::fail(dw::ErrorCode::SyntaxError, "field generator may not be x or y");
  const std::string as_z = std::regex_replace(text, std::regex("\\b" + gen + "\\b"), "z");
  const dw::BiPoly p = dw::parse_bipoly(as_z);
  if (p.degree_in(dw::kX) > 0) dw::fail(dw::ErrorCode::ShapeError, "minimal polynomial must be univariate");
  return dw::NumberField::extension(dw::to_qpoly(dw::at_x0(p)).with_var('t'), gen);
}

dw::MapComponents parse_map(const std::string& text, const dw::NumberField& f) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("a map needs three comma-separated components");
  return {dw::parse_polynomial(parts[0], f), dw::parse_polynomial(parts[1], f), dw::parse_polynomial(parts[2], f)};
}

std::size_t arity(const std::string& cmd) { return cmd == "iso" || cmd == "equiv" || cmd == "verify-map" ? 2 : 1; }

Json run_query(const std::string& cmd, const std::vector<std::string>& args, const Options& opt) {
  const dw::NumberField field = parse_field(opt.field);
  std::vector<dw::DanielewskiSurface> xs;
  for (std::size_t i = 0; i < arity(cmd); ++i) xs.push_back(dw::parse_surface(args[i], field));
  const dw::DanielewskiSurface& X = xs[0];
  const bool with_witness = !opt.no_witness;
  dw::ClassifyOptions copt{opt.rational_only, with_witness};
  Json r;
  r["surfaces"] = Json::array();
  for (const auto& s : xs) r["surfaces"].push_back(dw::report::surface_json(s));

  if (cmd == "validate") {
    r["valid"] = true;
    r["standardness"] = dw::report::standardness_json(dw::standardness(X));
  } else if (cmd == "invariants") {
    auto inv = dw::invariants(X);
    r["invariants"] = Json{{"n", inv.n}, {"d", inv.d}};
  } else if (cmd == "standard" || cmd == "reduced") {
    dw::Reduction red = cmd == "standard" ? dw::to_standard_form(X) : dw::to_reduced_standard_form(X);
    r["result"] = dw::report::surface_json(red.surface);
    r["standardness"] = dw::report::standardness_json(dw::standardness(red.surface));
    if (with_witness) r["witness"] = dw::report::witness_json(red.witness);
  } else if (cmd == "normal") {
    dw::NormalForm nf = dw::to_normal_form(X);
    r["normal_form"] = dw::report::normal_form_json(nf);
    if (with_witness) r["witness"] = dw::report::witness_json(nf.witness);
  } else if (cmd == "iso") {
    r["result"] = dw::report::classification_json(dw::are_isomorphic(xs[0], xs[1], copt), with_witness);
  } else if (cmd == "equiv") {
    r["result"] = dw::report::classification_json(dw::are_equivalent(xs[0], xs[1], copt), with_witness);
  } else if (cmd == "embeddings") {
    dw::EmbeddingPair e = dw::nonequiv_embeddings(X, copt);
    r["result"] = dw::report::surface_json(e.Y);
    r["equivalence"] = dw::report::classification_json(e.equivalence, with_witness);
    if (with_witness) r["witness"] = dw::report::witness_json(e.witness);
  } else if (cmd == "act") {
    auto a = dw::plus_action(X);
    r["action"] = Json::array({dw::format_poly(a[0]), dw::format_poly(a[1]), dw::format_poly(a[2])});
    auto D = dw::canonical_lnd(X);
    r["derivation"] = Json{{"x", "0"}, {"y", dw::format_poly(D.image_y())}, {"z", dw::format_poly(D.image_z())}};
  } else if (cmd == "ml") {
    r["ml"] = dw::to_string(dw::ml_invariant(X).kind);
  } else if (cmd == "verify-map") {
    const std::string map_text = args.size() > 2 ? args[2] : opt.map;
    const std::string inv_text = args.size() > 3 ? args[3] : opt.inverse;
    if (map_text.empty()) throw UsageError("verify-map needs --map");
    dw::AmbientMap m = inv_text.empty() ? dw::AmbientMap(parse_map(map_text, field))
                                        : dw::AmbientMap(parse_map(map_text, field), parse_map(inv_text, field));
    auto mu = dw::verify_ambient_equivalence(m, xs[0], xs[1]);
    r["ambient_equivalence"] = Json{{"holds", mu.has_value()}, {"mu", mu ? Json(mu->to_string()) : Json(nullptr)}};
    if (m.has_inverse()) {
      dw::IsoWitness w{m, mu.value_or(dw::FieldElement(1)), xs[0], xs[1], dw::WitnessScope::SurfaceIsomorphism};
      auto v = dw::verify_surface_isomorphism(w);
      r["isomorphism"] = Json{{"holds", v.ok}};
      if (!v.ok) r["isomorphism"]["diagnostic"] = v.diagnostic;
    } else {
      r["isomorphism"] = Json{{"holds", false}, {"diagnostic", "no inverse given"}};
    }
  }
  return r;
}

// Runs one query, never throws; returns the exit code alongside the report.
std::pair<Json, int> run_safely(const std::string& cmd, const std::vector<std::string>& args, const Options& opt) {
  Json head{{"command", cmd}, {"input", args}};
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (args.size() < arity(cmd)) throw UsageError(cmd + " needs " + std::to_string(arity(cmd)) + " equation(s)");
    Json body = run_query(cmd, args, opt);
    head["status"] = "ok";
    head.update(body);
  } catch (const dw::Error& e) {
    code = exit_code(e.code());
    head["status"] = "error";
    head["error"] = Json{{"code", dw::to_string(e.code())}, {"message", e.what()}};
  } catch (const UsageError& e) {
    code = kExitParse;
    head["status"] = "error";
    head["error"] = Json{{"code", "UsageError"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = kExitInternal;
    head["status"] = "error";
    head["error"] = Json{{"code", "InternalAssertion"}, {"message", e.what()}};
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  head["timing_ms"] = std::round(elapsed.count() * 1000.0) / 1000.0;
  return {head, code};
}

void print_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      print_text(os, v, indent + 2);
    } else if (v.is_array() && v.empty()) {
      os << pad << it.key() << ": []\n";
    } else if (v.is_array()) {
      os << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          os << pad << "  -\n";
          print_text(os, e, indent + 4);
        } else {
          os << pad << "  - " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
        }
      }
    } else {
      os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

std::vector<std::vector<std::string>> batch_queries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(split(line, ';'));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decisions for Danielewski surfaces x^n*y = Q(x,z)"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit JSON");
  app.add_flag("--rational-only", opt.rational_only, "only accept matching constants from the input field");
  app.add_flag("--no-witness", opt.no_witness, "skip building and printing witness maps");
  app.add_option("--field", opt.field, "coefficient field as a minimal polynomial, e.g. \"t^2 - 2\"");

  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "check an equation and report its standardness"},
      {"invariants", "print n and deg p"},
      {"standard", "reduce to standard form"},
      {"reduced", "reduce to reduced standard form"},
      {"normal", "compute the normal form"},
      {"iso", "decide isomorphism of two surfaces"},
      {"equiv", "decide ambient equivalence of two surfaces"},
      {"embeddings", "build an isomorphic but non-equivalent embedding"},
      {"act", "print the additive group action and its derivation"},
      {"verify-map", "check a map between two surfaces"},
      {"ml", "print the Makar-Limanov invariant"},
  };
  std::vector<std::string> inputs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("inputs", inputs, "equations, or @file for one query per line")->required();
    if (name == "verify-map") {
      sub->add_option("--map", opt.map, "images of x, y, z, comma separated");
      sub->add_option("--inverse", opt.inverse, "inverse map, comma separated");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  std::vector<std::vector<std::string>> queries;
  const bool batch = inputs.size() == 1 && !inputs[0].empty() && inputs[0][0] == '@';
  try {
    queries = batch ? batch_queries(inputs[0].substr(1)) : std::vector<std::vector<std::string>>{inputs};
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  int worst = 0;
  Json all = Json::array();
  for (const auto& q : queries) {
    auto [report, code] = run_safely(cmd, q, opt);
    worst = std::max(worst, code);
    all.push_back(std::move(report));
  }
  if (opt.json) {
    std::cout << (batch ? all : all.front()).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i) std::cout << "\n";
      print_text(std::cout, all[i], 0);
    }
  }
  return worst;
}
