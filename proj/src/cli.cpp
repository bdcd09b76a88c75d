#include "affa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "affa/classify.hpp"
#include "affa/equiv.hpp"
#include "affa/evaluate.hpp"
#include "affa/fusion.hpp"
#include "affa/labeling.hpp"
#include "affa/relations.hpp"
#include "affa/testgen.hpp"

namespace affa {

namespace {

using json = nlohmann::ordered_json;

// Outcome of a check-style command.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json cyclo_json(const Cyclo& c) {
  json coeffs = json::array();
  for (const mpq_class& q : c.coeffs()) coeffs.push_back(q.get_str());
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw DiagramError("parse", "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("AFFA_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) n = v;
  }
  return std::max(1, n);
}

std::vector<Label> parse_word(const std::string& s) {
  std::vector<Label> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    w.push_back(parse_label(item));
  }
  return w;
}

json word_json(const Word& w) {
  json a = json::array();
  for (Label l : w) a.push_back(label_name(l));
  return a;
}

struct TheoryFlags {
  std::string file, family;
  int n = 0;
  long root_exp = 0;
  bool root_given = false;

  void add(CLI::App* sub) {
    sub->add_option("--theory", file, "theory JSON file");
    sub->add_option("--family", family, "family name");
    sub->add_option("--n", n, "size parameter");
    sub->add_option("--root-exp", root_exp, "root exponent k, root = exp(2 pi i k / N)")->each([this](const std::string&) {
      root_given = true;
    });
  }
  Theory get() const {
    if (!file.empty()) return parse_theory_json(read_input(file));
    if (family.empty()) throw DiagramError("parse", "need --theory or --family");
    return Theory::make(parse_family(family), n, root_exp);
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DiagramError("parse", "cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json eval_one(const std::string& text) {
  Morphism m = parse_morphism(text);
  if (!m.closed()) throw DiagramError("structure", "eval needs a closed morphism");
  EvalStats st;
  Cyclo v = eval_closed(m, &st);
  return {{"value", v.to_string()}, {"exact", cyclo_json(v)}, {"steps", st.rewrites + st.pops}};
}

int cmd_eval(const std::string& in, bool batch, Output& out) {
  if (!batch) {
    out.os() << eval_one(read_input(in)).dump() << "\n";
    return 0;
  }
  std::unique_ptr<std::ifstream> file;
  std::istream* src = &std::cin;
  if (!in.empty() && in != "-") {
    file = std::make_unique<std::ifstream>(in);
    if (!*file) throw DiagramError("parse", "cannot open " + in);
    src = file.get();
  }
  int workers = thread_count();
  const size_t chunk = 64 * static_cast<size_t>(workers);
  long index = 0;
  bool any_error = false;
  std::vector<std::string> lines;
  std::string line;
  auto flush = [&]() {
    std::vector<json> res(lines.size());
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = w; i < lines.size(); i += workers) {
          json r;
          try {
            r = eval_one(lines[i]);
          } catch (const std::exception& e) {
            r = {{"error", e.what()}};
          }
          res[i] = std::move(r);
        }
      });
    for (auto& th : pool) th.join();
    for (auto& r : res) {
      json o = {{"index", index++}};
      for (auto& [k, v] : r.items()) o[k] = v;
      any_error = any_error || o.contains("error");
      out.os() << o.dump() << "\n";
    }
    out.os().flush();
    lines.clear();
  };
  while (std::getline(*src, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
    if (lines.size() >= chunk) flush();
  }
  flush();
  return any_error ? 1 : 0;
}

json labeling_json(const LabelResult& r) {
  json labels = json::object();
  for (size_t f = 0; f < r.labeling.labels.size(); ++f)
    labels[std::to_string(f)] = r.labeling.labels[f].to_string();
  return {{"faces", r.labeling.faces.num_faces},
          {"star_face", r.labeling.star_face},
          {"labels", labels},
          {"ell", r.ell},
          {"value", r.value.to_string()}};
}

int cmd_label(const std::string& in, Output& out) {
  Morphism m = parse_morphism(read_input(in));
  if (!m.closed()) throw DiagramError("structure", "label needs a closed morphism");
  json terms = json::array();
  for (const Term& t : m.terms)
    for (const Diagram& x : expand_plain(t.d)) {
      if (!is_valid(x)) continue;
      json j = labeling_json(label_term(x));
      j["coeff"] = t.c.to_string();
      terms.push_back(j);
    }
  Cyclo v = invariant(m);
  json o;
  if (terms.size() == 1 && m.terms.size() == 1 && m.terms[0].c == Cyclo::one()) {
    o = terms[0];
    o.erase("coeff");
  } else {
    o = {{"value", v.to_string()}, {"terms", terms}};
  }
  o["value"] = v.to_string();
  out.os() << o.dump() << "\n";
  return 0;
}

int cmd_relcheck(const TheoryFlags& tf, Output& out) {
  std::vector<Theory> ts;
  if (tf.file.empty() && !tf.root_given)
    ts = theories_with_roots(parse_family(tf.family), tf.n);
  else
    ts = {tf.get()};
  json arr = json::array();
  bool all = true;
  for (const Theory& t : ts) {
    json rels = json::array();
    for (const RelationResult& r : check_relations(t)) {
      rels.push_back({{"name", r.name}, {"pass", r.pass}});
      all = all && r.pass;
    }
    arr.push_back({{"theory", t.name()}, {"relations", rels}});
  }
  out.os() << json{{"theories", arr}, {"pass", all}}.dump(2) << "\n";
  return all ? 0 : 2;
}

int cmd_homdim(const TheoryFlags& tf, const std::string& w1, const std::string& w2, Output& out) {
  Theory t = tf.get();
  Word a = parse_word(w1), b = parse_word(w2);
  int d = t.source() ? source_hom_dim(t, a, b) : hom_dim(t, a, b);
  out.os() << json{{"theory", t.name()}, {"w1", word_json(a)}, {"w2", word_json(b)}, {"dim", d}}.dump() << "\n";
  return 0;
}

int cmd_graph(const TheoryFlags& tf, int radius, const std::string& format, Output& out) {
  Theory t = tf.get();
  FusionGraph g = principal_graph(t, radius);
  if (format == "dot") {
    out.os() << g.to_dot();
  } else {
    json vs = json::array(), es = json::array();
    for (size_t i = 0; i < g.vertices.size(); ++i)
      vs.push_back({{"id", i},
                    {"word", word_json(g.vertices[i].word)},
                    {"grading", g.vertices[i].g.to_string()},
                    {"trace", g.vertices[i].trace.to_string()}});
    for (auto [a, b] : g.edges) es.push_back({a, b});
    out.os() << json{{"theory", t.name()}, {"vertices", vs}, {"edges", es}, {"trace_formula_ok", g.trace_formula_ok}}.dump(2)
             << "\n";
  }
  return g.trace_formula_ok ? 0 : 2;
}

int cmd_bratteli(const TheoryFlags& tf, int rows, Output& out) {
  Theory t = tf.get();
  json arr = json::array();
  for (const BratteliRow& r : bratteli(t, rows)) {
    json es = json::array();
    for (auto& [w, m] : r.entries) es.push_back({{"word", word_json(w)}, {"mult", m}});
    arr.push_back({{"entries", es}, {"dim", r.dim()}});
  }
  out.os() << json{{"theory", t.name()}, {"rows", arr}}.dump(2) << "\n";
  return 0;
}

int cmd_gram(const TheoryFlags& tf, const std::string& w, int max_boxes, Output& out) {
  Theory t = tf.get();
  Word word = parse_word(w);
  GramResult g = gram_matrix(t, word, max_boxes);
  json mat = json::array();
  for (auto& row : g.gram) {
    json r = json::array();
    for (auto& c : row) r.push_back(c.to_string());
    mat.push_back(r);
  }
  int h = hom_dim(t, {}, word);
  out.os() << json{{"theory", t.name()}, {"word", word_json(word)}, {"size", g.basis.size()}, {"rank", g.rank},
                   {"hom_dim", h}, {"hermitian", g.hermitian}, {"psd", g.psd}, {"matrix", mat}}
                  .dump(2)
           << "\n";
  return g.rank == h && g.hermitian && g.psd ? 0 : 2;
}

int cmd_functor(const std::string& which, int m, long zeta_exp, Output& out) {
  if (which != "vec" && which != "rep") throw DiagramError("parse", "--which must be vec or rep");
  if (m < 1) throw DiagramError("parse", "--m must be positive");
  FunctorReport r = check_functor(which == "vec" ? Which::Vec : Which::Rep, m, zeta_exp);
  auto checks = [](const std::vector<Check>& cs) {
    json a = json::array();
    for (const Check& c : cs) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return a;
  };
  bool cocycle = check_cocycle({m, zeta_exp});
  bool pass = r.pass() && cocycle;
  out.os() << json{{"which", which},
                   {"m", m},
                   {"zeta_exp", zeta_exp},
                   {"relations", checks(r.relations)},
                   {"hom_dims", checks(r.hom_dims)},
                   {"nontrivial", checks(r.nontrivial)},
                   {"cocycle", cocycle},
                   {"pass", pass}}
                  .dump(2)
           << "\n";
  return pass ? 0 : 2;
}

int expected_count(FamilyClass f, int n) {
  switch (f) {
    case FamilyClass::ShadedAodd:
      return n;
    case FamilyClass::UnshadedAodd:
      return 3 * n;
    case FamilyClass::Aeven:
      return 2 * n + 1;
    case FamilyClass::UnshadedAInf:
      return 2;
    case FamilyClass::ShadedAInf:
      return 1;
  }
  return -1;
}

int cmd_classify(const std::string& family, int n, Output& out) {
  FamilyClass f = parse_family_class(family);
  std::vector<Theory> ts = enumerate_presentations(f, n);
  json arr = json::array();
  std::vector<int> cls(ts.size(), -1);
  int next = 0;
  for (size_t i = 0; i < ts.size(); ++i) {
    for (size_t j = 0; j < i && cls[i] < 0; ++j)
      if (are_isomorphic(ts[i], ts[j]).isomorphic) cls[i] = cls[j];
    if (cls[i] < 0) cls[i] = next++;
    json e = {{"theory", ts[i].name()}, {"class", cls[i]}};
    if (ts[i].has_boxes()) e["eigenvalue"] = click_eigenvalue(ts[i]).to_string();
    arr.push_back(e);
  }
  int count = count_classes(f, n);
  bool ok = count == next && count == expected_count(f, n);
  out.os() << json{{"family", family_class_name(f)}, {"n", n}, {"theories", arr}, {"count", count}, {"expected", expected_count(f, n)}}
                  .dump(2)
           << "\n";
  return ok ? 0 : 2;
}

int cmd_selftest(std::uint64_t seed, int draws, Output& out) {
  bool all = true;
  json rel = json::array(), oracle = json::array();
  for (Family f : {Family::ShadedAodd, Family::UnshadedArrowAodd, Family::UnshadedArrowAeven, Family::UnshadedColorAodd,
                   Family::ShadedAInf, Family::UnshadedArrowAInf, Family::UnshadedColorAInf, Family::VecCyclicSource,
                   Family::SUTwoRepSource})
    for (int n = 1; n <= 3; ++n)
      for (const Theory& t : theories_with_roots(f, n)) {
        int failed = 0, total = 0;
        for (const RelationResult& r : check_relations(t)) {
          ++total;
          failed += !r.pass;
        }
        all = all && failed == 0;
        rel.push_back({{"theory", t.name()}, {"relations", total}, {"failed", failed}});
        if (t.has_boxes() && !t.source()) {
          int agree = 0;
          for (int i = 0; i < draws; ++i) {
            Diagram d = random_closed(t, 6, 3, seed + static_cast<std::uint64_t>(i));
            agree += eval_diagram(d) == invariant(d);
          }
          all = all && agree == draws;
          oracle.push_back({{"theory", t.name()}, {"draws", draws}, {"agree", agree}});
        }
        if (t.infinite()) break;
      }
  out.os() << json{{"seed", seed}, {"relations", rel}, {"oracle", oracle}, {"pass", all}}.dump(2) << "\n";
  return all ? 0 : 2;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"affa: affine A planar algebra engine"};
  app.require_subcommand(1);
  std::string in, out_path, w1, w2, word, which = "vec", format = "json", family_class;
  bool batch = false;
  int radius = 4, rows = 3, max_boxes = 8, m = 1, n = 1, draws = 100;
  long zeta_exp = 0;
  std::uint64_t seed = 1;
  TheoryFlags tf;

  auto with_out = [&](CLI::App* s) { s->add_option("--out", out_path, "output file"); };
  auto* eval = app.add_subcommand("eval", "evaluate a closed morphism");
  eval->add_option("--in", in, "morphism JSON file, - for stdin");
  eval->add_flag("--batch", batch, "one JSON morphism per input line");
  with_out(eval);
  auto* label = app.add_subcommand("label", "region labeling and invariant of a closed morphism");
  label->add_option("--in", in, "morphism JSON file");
  with_out(label);
  auto* relcheck = app.add_subcommand("relcheck", "check the defining relations");
  tf.add(relcheck);
  with_out(relcheck);
  auto* homdim = app.add_subcommand("homdim", "hom-space dimension between two words");
  tf.add(homdim);
  homdim->add_option("--w1", w1, "comma-separated labels");
  homdim->add_option("--w2", w2, "comma-separated labels");
  with_out(homdim);
  auto* graph = app.add_subcommand("graph", "principal graph");
  tf.add(graph);
  graph->add_option("--radius", radius, "radius for infinite families");
  graph->add_option("--format", format, "json or dot");
  with_out(graph);
  auto* brat = app.add_subcommand("bratteli", "Bratteli diagram of tensor powers of X");
  tf.add(brat);
  brat->add_option("--rows", rows, "number of rows");
  with_out(brat);
  auto* gram = app.add_subcommand("gram", "Gram matrix of the spanning diagrams empty -> w");
  tf.add(gram);
  gram->add_option("--w", word, "comma-separated labels");
  gram->add_option("--max-boxes", max_boxes, "box limit per diagram");
  with_out(gram);
  auto* functor = app.add_subcommand("functor-check", "check an equivalence functor");
  functor->add_option("--which", which, "vec or rep");
  functor->add_option("--m", m, "size m");
  functor->add_option("--zeta-exp", zeta_exp, "zeta = exp(2 pi i k / m)");
  with_out(functor);
  auto* classify = app.add_subcommand("classify", "classify the presentations of a family");
  classify->add_option("--family", family_class, "shaded-a-odd, unshaded-a-odd, a-even, unshaded-a-inf, shaded-a-inf")
      ->required();
  classify->add_option("--n", n, "size parameter");
  with_out(classify);
  auto* self = app.add_subcommand("selftest", "relation and oracle suites for n <= 3");
  self->add_option("--seed", seed, "random seed");
  self->add_option("--draws", draws, "random diagrams per theory");
  with_out(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Output out(out_path);
    if (*eval) return cmd_eval(in, batch, out);
    if (*label) return cmd_label(in, out);
    if (*relcheck) return cmd_relcheck(tf, out);
    if (*homdim) return cmd_homdim(tf, w1, w2, out);
    if (*graph) return cmd_graph(tf, radius, format, out);
    if (*brat) return cmd_bratteli(tf, rows, out);
    if (*gram) return cmd_gram(tf, word, max_boxes, out);
    if (*functor) return cmd_functor(which, m, zeta_exp, out);
    if (*classify) return cmd_classify(family_class, n, out);
    if (*self) return cmd_selftest(seed, draws, out);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    // invalid_argument is a user error; other logic errors are broken invariants
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace affa
