// kspace: command-line front end for knot-space components.
#include "kspace/catalog.hpp"
#include "kspace/circle_model.hpp"
#include "kspace/dsl.hpp"
#include "kspace/errors.hpp"
#include "kspace/homotopy_expr.hpp"
#include "kspace/oracle.hpp"
#include "kspace/pi1.hpp"
#include "kspace/serialize.hpp"
#include "kspace/snf.hpp"
#include "kspace/symmetry.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

using namespace kspace;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kCompute = 3, kMismatch = 4 };

struct Options {
  bool json = false;
  std::string file;
  std::string file2;
  bool no_simplify = false;
  bool presentation = false;
  bool verify = false;
  std::string name;
};

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// DSL text, or a kspace-v1 tree document when the input starts with '{'.
KnotTree load(const std::string& path) {
  std::string text = read_source(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return deserialize_tree(text);
  return parse_knot(text);
}

KnotTree load_canonical(const std::string& path) { return canonical_form(normalize(load(path))); }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string render_h1(const H1Result& h) {
  std::ostringstream os;
  bool first = true;
  if (h.free_rank > 0) {
    os << "Z";
    if (h.free_rank > 1) os << "^" << h.free_rank;
    first = false;
  }
  for (const auto& d : h.torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string render_vector(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << "]";
  return os.str();
}

struct VerifyReport {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> notes;
};

void compare(VerifyReport& r, const IntMatrix& m, const std::string& label) {
  ++r.checked;
  auto fast = snf(m).invariant_factors();
  auto slow = oracle::naive_invariant_factors(m);
  if (fast != slow) {
    ++r.mismatches;
    r.notes.push_back("invariant factors disagree on " + label);
  }
}

void collect_splices(const KnotTree& t, std::vector<KnotTree>& out) {
  switch (t.kind()) {
    case KnotTree::Kind::Cable:
      collect_splices(t.cable().companion, out);
      break;
    case KnotTree::Kind::Sum:
      for (const auto& x : t.sum().summands) collect_splices(x, out);
      break;
    case KnotTree::Kind::HypSplice:
      out.push_back(t);
      for (const auto& x : t.splice().children) collect_splices(x, out);
      break;
    default:
      break;
  }
}

VerifyReport verify(const KnotTree& tree) {
  VerifyReport r;
  compare(r, circle_model(tree).relations, "the relation matrix");

  std::vector<KnotTree> splices;
  collect_splices(tree, splices);
  for (const auto& s : splices) {
    SpliceTwist tw = splice_twist(s);
    if (!tw.fiber_relations.is_zero() && tw.fiber_relations.cols() > 0) continue;
    ++r.checked;
    AbelianGroup engine =
        cokernel(tw.monodromy - IntMatrix::identity(tw.monodromy.rows()));
    H1Result brute = oracle::coinvariants_bruteforce(tw.monodromy, tw.order);
    if (!(engine == brute.group())) {
      ++r.mismatches;
      r.notes.push_back("coinvariants disagree at " + s.splice().kgl.name);
    }
  }

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int k = 0; k < 500; ++k) {
    IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    compare(r, m, "random matrix " + std::to_string(k));
  }
  return r;
}

void af_walk(const KnotTree& t, const std::string& path, json& rows) {
  switch (t.kind()) {
    case KnotTree::Kind::Cable:
      af_walk(t.cable().companion, path + ".companion", rows);
      break;
    case KnotTree::Kind::Sum:
      for (std::size_t i = 0; i < t.sum().summands.size(); ++i)
        af_walk(t.sum().summands[i], path + ".summands[" + std::to_string(i) + "]", rows);
      break;
    case KnotTree::Kind::HypSplice: {
      const auto& s = t.splice();
      CyclicSubgroup af = compute_Af(s.kgl, s.children);
      rows.push_back({{"path", path},
                      {"kgl", s.kgl.name},
                      {"B", s.kgl.b_order},
                      {"order", af.order()},
                      {"index", af.index},
                      {"generator", af.generator_image().to_string()}});
      for (std::size_t i = 0; i < s.children.size(); ++i)
        af_walk(s.children[i], path + ".children[" + std::to_string(i) + "]", rows);
      break;
    }
    default:
      break;
  }
}

json catalog_json(const std::string& name) {
  CatalogEntry e = catalog_get(name);
  if (const auto* k = std::get_if<KglDatum>(&e)) {
    json j = to_json(*k);
    j["kind"] = "kgl";
    return j;
  }
  const auto& t = std::get<KnotTree>(e);
  return {{"kind", "knot"}, {"name", name}, {"knot", print_knot(t)}};
}

std::string catalog_line(const std::string& name) {
  json j = catalog_json(name);
  std::ostringstream os;
  os << name << ": ";
  if (j["kind"] == "kgl") {
    os << "KGL n=" << j["n"].get<std::size_t>() << " |B|=" << j["B"].get<long long>()
       << " rho=" << j["rho"].get<std::string>();
    if (j.contains("inv"))
      os << " inv=" << j["inv"].get<std::string>();
    else
      os << " (no inversion datum)";
  } else {
    os << "knot " << j["knot"].get<std::string>();
  }
  return os.str();
}

int run(const std::string& cmd, const Options& o) {
  if (cmd == "catalog") {
    if (!o.name.empty()) {
      if (o.json)
        emit({{"schema", kSchema}, {"entry", catalog_json(o.name)}});
      else
        std::cout << catalog_line(o.name) << "\n";
      return kOk;
    }
    json all = json::array();
    for (const auto& n : catalog_names()) {
      if (o.json)
        all.push_back(catalog_json(n));
      else
        std::cout << catalog_line(n) << "\n";
    }
    if (o.json) emit({{"schema", kSchema}, {"entries", all}});
    return kOk;
  }

  if (cmd == "parse") {
    KnotTree raw = load(o.file);
    KnotTree t = canonical_form(normalize(raw));
    if (o.json) {
      json j = to_json(t);
      j["violations"] = to_json(validate(raw))["violations"];
      emit(j);
    } else {
      std::cout << print_knot(t) << "\n";
    }
    return kOk;
  }

  if (cmd == "eq") {
    bool same = classes_equal(load(o.file), load(o.file2));
    if (o.json)
      emit({{"schema", kSchema}, {"equal", same}});
    else
      std::cout << (same ? "equal" : "not equal") << "\n";
    return kOk;
  }

  KnotTree t = load_canonical(o.file);

  if (cmd == "type") {
    HomotopyExpr e = homotopy_type(t);
    if (!o.no_simplify) e = simplify(e);
    if (o.json)
      emit(to_json(e));
    else
      std::cout << expr_render(e) << "\n";
    return kOk;
  }
  if (cmd == "pi1") {
    if (o.presentation) {
      FpGroup g = pi1_presentation(t);
      if (o.json) {
        json rel = json::array();
        for (const auto& r : g.relators) rel.push_back(word_to_string(r, g.generators));
        emit({{"schema", kSchema},
              {"presentation", {{"generators", g.generators}, {"relators", rel}}}});
      } else {
        std::cout << g.to_string() << "\n";
      }
      return kOk;
    }
    ExtensionTree x = pi1_structure(simplify(homotopy_type(t)));
    if (o.json)
      emit(to_json(x));
    else
      std::cout << x.render() << "\n";
    return kOk;
  }
  if (cmd == "h1") {
    H1Result h = h1(simplify(homotopy_type(t)), t);
    if (!o.verify) {
      if (o.json) {
        emit(to_json(h));
      } else {
        std::cout << render_h1(h) << "\n";
        if (!h.basis_tags.empty()) {
          std::cout << "free generators:";
          for (const auto& tag : h.basis_tags) std::cout << " " << tag;
          std::cout << "\n";
        }
      }
      return kOk;
    }
    VerifyReport r = verify(t);
    if (o.json) {
      json j = to_json(h);
      j["verify"] = {{"checked", r.checked}, {"mismatches", r.mismatches}};
      emit(j);
    } else {
      std::cout << render_h1(h) << "\n";
      std::cout << "verify: " << r.checked << " checks, " << r.mismatches << " mismatches\n";
    }
    for (const auto& n : r.notes) std::cerr << "kspace: " << n << "\n";
    return r.mismatches == 0 ? kOk : kMismatch;
  }
  if (cmd == "gramain") {
    CircleModel m = circle_model(t);
    Integer p = gramain_pairing(t);
    if (o.json) {
      json cls = json::array(), coc = json::array();
      for (const auto& v : m.gramain_class) cls.push_back(integer_json(v));
      for (const auto& v : m.gramain_cocycle) coc.push_back(integer_json(v));
      emit({{"schema", kSchema}, {"pairing", integer_json(p)}, {"class", cls}, {"cocycle", coc}});
    } else {
      std::cout << p << "\n";
    }
    return kOk;
  }
  if (cmd == "invertible") {
    bool inv = is_invertible(t);
    if (o.json)
      emit({{"schema", kSchema}, {"invertible", inv}});
    else
      std::cout << (inv ? "true" : "false") << "\n";
    return kOk;
  }
  if (cmd == "af") {
    json rows = json::array();
    af_walk(t, "$", rows);
    if (o.json) {
      emit({{"schema", kSchema}, {"splices", rows}});
    } else {
      if (rows.empty()) std::cout << "no hyperbolic splice vertices\n";
      for (const auto& r : rows)
        std::cout << r["path"].get<std::string>() << " " << r["kgl"].get<std::string>()
                  << ": |A_f| = " << r["order"].get<long long>() << " of |B_L| = "
                  << r["B"].get<long long>() << ", generator "
                  << r["generator"].get<std::string>() << "\n";
    }
    return kOk;
  }
  if (cmd == "dim") {
    auto d = dimension(simplify(homotopy_type(t)));
    if (o.json)
      emit({{"schema", kSchema}, {"dimension", d ? json(*d) : json(nullptr)}});
    else
      std::cout << (d ? std::to_string(*d) : "undefined (configuration-space factor)") << "\n";
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy types of components of the space of long knots"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Structured output on standard output");

  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", o.file, "Knot file, or - for standard input")->required();
    return sub;
  };
  file_cmd("parse", "Validate and print the canonical form");
  file_cmd("type", "Homotopy type of the component")
      ->add_flag("--no-simplify", o.no_simplify, "Show the unsimplified expression");
  file_cmd("pi1", "Fundamental group")
      ->add_flag("--presentation", o.presentation, "Print an explicit presentation");
  file_cmd("h1", "First homology")
      ->add_flag("--verify", o.verify, "Cross-check against the brute-force oracle");
  file_cmd("gramain", "Gramain pairing");
  file_cmd("invertible", "Whether the knot is isotopic to its inverse");
  file_cmd("af", "A_f at each hyperbolic splice vertex");
  file_cmd("dim", "Dimension of the component's model manifold");
  auto* eq = app.add_subcommand("eq", "Compare two isotopy classes");
  eq->add_option("FILE1", o.file, "First knot")->required();
  eq->add_option("FILE2", o.file2, "Second knot")->required();
  app.add_subcommand("catalog", "List built-in KGLs and knots")
      ->add_option("NAME", o.name, "Show a single entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const std::string where = o.file.empty() ? std::string("kspace") : o.file;
  try {
    return run(cmd, o);
  } catch (const SyntaxError& e) {
    std::cerr << where << ":" << e.line() << ":" << e.column() << ": expected " << e.expected()
              << "\n";
    return kInput;
  } catch (const SemanticError& e) {
    std::cerr << where << ": invalid knot: " << e.what() << "\n";
    return kInput;
  } catch (const InvalidTree& e) {
    std::cerr << where << ": invalid knot: " << e.what() << "\n";
    return kInput;
  } catch (const UnknownName& e) {
    std::cerr << "kspace: " << e.what() << "\n";
    return kInput;
  } catch (const SchemaError& e) {
    std::cerr << where << ": " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "kspace: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "kspace: " << e.what() << "\n";
    return kCompute;
  }
}
