#include "affa/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "affa/evaluate.hpp"
#include "affa/generators.hpp"

namespace affa {

namespace {

long mod(long a, int n) { return n == 0 ? a : ((a % n) + n) % n; }

// The two strand generators that make up X.
std::vector<Label> x_letters(const Theory& t) {
  if (t.colored()) return {Label::Red, Label::Blue};
  if (t.family == Family::VecCyclicSource) return {Label::Dot};
  if (t.family == Family::SUTwoRepSource) return {Label::Plus, Label::Minus};
  return {Label::Up, Label::Down};
}

}  // namespace

std::string GroupElement::to_string() const {
  std::ostringstream os;
  if (!dihedral) {
    os << "u^" << rotation;
    if (order) os << " (mod " << order << ")";
    return os.str();
  }
  os << "(rb)^" << rotation << (reflection ? " r" : "");
  if (order) os << " in D_" << order;
  return os.str();
}

GroupElement identity_element(const Theory& t) {
  GroupElement g;
  g.dihedral = t.colored();
  g.order = t.modulus();
  return g;
}

GroupElement times(const GroupElement& g, Label l) {
  GroupElement h = g;
  if (g.dihedral) {
    // elements are (rb)^a r^e; b = r (rb)
    if (l == Label::Red) {
      h.reflection = !g.reflection;
    } else if (l == Label::Blue) {
      if (g.reflection) {
        h.rotation = mod(g.rotation + 1, g.order);
        h.reflection = false;
      } else {
        h.rotation = mod(g.rotation - 1, g.order);
        h.reflection = true;
      }
    } else {
      throw std::invalid_argument("grading: label " + label_name(l) + " is not a colored strand");
    }
    return h;
  }
  switch (l) {
    case Label::Down:
    case Label::Dot:
    case Label::Minus:
      h.rotation = mod(g.rotation + 1, g.order);
      break;
    case Label::Up:
    case Label::Plus:
      h.rotation = mod(g.rotation - 1, g.order);
      break;
    default:
      throw std::invalid_argument("grading: label " + label_name(l) + " is not an oriented strand");
  }
  return h;
}

GroupElement grading(const Theory& t, const Word& w) {
  GroupElement g = identity_element(t);
  for (Label l : w) g = times(g, l);
  return g;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement h = g;
  if (!g.reflection) h.rotation = mod(-g.rotation, g.order);
  return h;
}

int hom_dim(const Theory& t, const Word& w1, const Word& w2) {
  return grading(t, w1) == grading(t, w2) ? 1 : 0;
}

namespace {

Word alternating_from(Label first, long len) {
  Word w;
  Label l = first;
  for (long i = 0; i < len; ++i) {
    w.push_back(l);
    l = l == Label::Red ? Label::Blue : Label::Red;
  }
  return w;
}

// Shortest word for (rb)^a r^e with a taken as an integer (no reduction).
Word dihedral_word(long a, bool refl) {
  if (!refl) return a >= 0 ? alternating_from(Label::Red, 2 * a) : alternating_from(Label::Blue, -2 * a);
  return a >= 0 ? alternating_from(Label::Red, 2 * a + 1) : alternating_from(Label::Blue, -2 * a - 1);
}

}  // namespace

std::string word_name(const Word& w) {
  if (w.empty()) return "empty";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + label_name(w[i]);
  return s;
}

std::vector<int> FusionGraph::neighbours(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

std::string FusionGraph::to_dot() const {
  std::ostringstream os;
  os << "graph fusion {\n";
  for (size_t i = 0; i < vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << word_name(vertices[i].word) << "\", trace=\""
       << vertices[i].trace.to_string() << "\"];\n";
  for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

// Shortest word with grading g.
Word class_word(const Theory& t, const GroupElement& g) {
  if (g.dihedral) {
    Word best = dihedral_word(g.rotation, g.reflection);
    if (g.order) {
      Word alt = dihedral_word(g.rotation - g.order, g.reflection);
      if (alt.size() < best.size()) best = alt;
    }
    return best;
  }
  long a = g.rotation;
  int N = g.order;
  if (t.family == Family::VecCyclicSource) return repeat(Label::Dot, static_cast<int>(a));
  if (N && 2 * a >= N) a -= N;  // ties go to the P (upward) side
  Label up = x_letters(t).front(), down = x_letters(t).back();
  return a > 0 ? repeat(down, static_cast<int>(a)) : repeat(up, static_cast<int>(-a));
}

}  // namespace

Cyclo trace_of_word(const Theory& t, const Word& w) {
  if (w.empty()) return Cyclo::one();
  return eval_closed(trace_close(id(t, w), Side::Right));
}

Word simple_decompose(const Theory& t, const Word& w) { return class_word(t, grading(t, w)); }

FusionGraph principal_graph(const Theory& t, int radius) {
  FusionGraph g;
  std::map<GroupElement, int> index;
  std::vector<int> dist;
  std::queue<int> q;
  auto visit = [&](const GroupElement& e, int d) {
    auto it = index.find(e);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(g.vertices.size());
    index[e] = id;
    g.vertices.push_back({e, {}, Cyclo::one()});
    dist.push_back(d);
    q.push(id);
    return id;
  };
  visit(identity_element(t), 0);
  bool finite = t.modulus() != 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (!finite && dist[v] >= radius) continue;
    for (Label l : x_letters(t)) visit(times(g.vertices[v].g, l), dist[v] + 1);
  }
  std::vector<Label> letters = x_letters(t);
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    for (Label l : letters) {
      auto it = index.find(times(g.vertices[v].g, l));
      if (it != index.end() && v < it->second) g.edges.push_back({v, it->second});
    }
  for (auto& v : g.vertices) {
    v.word = class_word(t, v.g);
    v.trace = trace_of_word(t, v.word);
  }
  g.trace_formula_ok = true;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    if (!finite && dist[v] >= radius) continue;  // the frontier lacks neighbours
    Cyclo sum = Cyclo::zero();
    for (int w : g.neighbours(v)) sum += g.vertices[w].trace;
    if (sum != Cyclo::from_int(2) * g.vertices[v].trace) g.trace_formula_ok = false;
  }
  return g;
}

long BratteliRow::dim() const {
  long s = 0;
  for (auto& e : entries) s += e.second * e.second;
  return s;
}

std::vector<BratteliRow> bratteli(const Theory& t, int rows) {
  std::vector<BratteliRow> out;
  std::map<GroupElement, long> cur{{identity_element(t), 1}};
  for (int k = 0; k <= rows; ++k) {
    BratteliRow row;
    // order classes by their representative word for stable output
    std::vector<std::pair<Word, long>> es;
    for (auto& [g, mult] : cur) es.push_back({class_word(t, g), mult});
    std::sort(es.begin(), es.end(), [](auto& a, auto& b) {
      return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
    });
    row.entries = es;
    out.push_back(row);
    std::map<GroupElement, long> next;
    for (auto& [g, mult] : cur)
      for (Label l : x_letters(t)) next[times(g, l)] += mult;
    cur = std::move(next);
  }
  return out;
}

// ---- exact linear algebra --------------------------------------------------------------

int exact_rank(Matrix m) {
  int rows = static_cast<int>(m.size());
  if (!rows) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    Cyclo inv = m[rank][c].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Cyclo f = m[r][c] * inv;
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool is_hermitian(const Matrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != m[j][i].conj()) return false;
  return true;
}

namespace {

// Sign of a nonzero real cyclotomic number. The double estimate is trusted only when it
// clears the rounding error bound of the coefficient sum.
int certified_sign(const Cyclo& x) {
  double v = x.to_complex().real();
  double bound = 0;
  for (const mpq_class& c : x.coeffs()) bound += std::abs(c.get_d());
  double eps = 1e-12 * (bound + 1);
  if (std::abs(v) <= eps) throw InternalError("is_psd: pivot sign could not be certified: " + x.to_string());
  return v > 0 ? 1 : -1;
}

}  // namespace

bool is_psd(const Matrix& input) {
  if (!is_hermitian(input)) return false;
  Matrix a = input;
  std::vector<int> alive(a.size());
  for (size_t i = 0; i < a.size(); ++i) alive[i] = static_cast<int>(i);
  while (!alive.empty()) {
    int piv = -1;
    for (int i : alive)
      if (!a[i][i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // zero diagonal: PSD only if the rest vanishes
      for (int i : alive)
        for (int j : alive)
          if (!a[i][j].is_zero()) return false;
      return true;
    }
    if (certified_sign(a[piv][piv]) < 0) return false;
    Cyclo inv = a[piv][piv].inverse();
    alive.erase(std::find(alive.begin(), alive.end(), piv));
    for (int i : alive) {
      if (a[i][piv].is_zero()) continue;
      Cyclo f = a[i][piv] * inv;
      for (int j : alive) a[i][j] -= f * a[piv][j];
    }
  }
  return true;
}

// ---- Gram matrices -------------------------------------------------------------------

namespace {

struct Block {
  std::vector<int> pos;
};

// Noncrossing partitions of [lo, hi) into blocks whose sizes are in `sizes`.
void partitions(int lo, int hi, const std::vector<int>& sizes, std::vector<std::vector<Block>>& out) {
  if (lo == hi) {
    out.push_back({});
    return;
  }
  for (int s : sizes) {
    // choose s-1 further positions after lo; gaps are filled independently
    std::vector<int> pick{lo};
    std::function<void()> rec = [&]() {
      if (static_cast<int>(pick.size()) == s) {
        // segments between picked positions and after the last one
        std::vector<std::vector<std::vector<Block>>> segs;
        for (int i = 0; i < s; ++i) {
          int a = pick[i] + 1, b = i + 1 < s ? pick[i + 1] : hi;
          std::vector<std::vector<Block>> sub;
          partitions(a, b, sizes, sub);
          if (sub.empty()) return;
          segs.push_back(std::move(sub));
        }
        std::vector<std::vector<Block>> acc{{Block{pick}}};
        for (auto& seg : segs) {
          std::vector<std::vector<Block>> next;
          for (auto& x : acc)
            for (auto& y : seg) {
              auto z = x;
              z.insert(z.end(), y.begin(), y.end());
              next.push_back(std::move(z));
            }
          acc = std::move(next);
        }
        out.insert(out.end(), acc.begin(), acc.end());
        return;
      }
      for (int p = pick.back() + 1; p < hi; ++p) {
        pick.push_back(p);
        rec();
        pick.pop_back();
      }
    };
    rec();
  }
}

}  // namespace

std::vector<Diagram> spanning_diagrams(const Theory& t, const Word& w, int max_boxes) {
  std::vector<int> sizes{2};
  std::map<int, std::vector<BoxKind>> by_size;
  if (max_boxes > 0)
    for (BoxKind k : box_kinds(t)) by_size[leg_count(t, k)].push_back(k);
  for (auto& [s, ks] : by_size)
    if (s != 2) sizes.push_back(s);
  std::vector<std::vector<Block>> parts;
  partitions(0, static_cast<int>(w.size()), sizes, parts);

  std::vector<Diagram> out;
  std::set<std::string> seen;
  for (const auto& part : parts) {
    // Each block spans an at most one-dimensional space empty -> (its labels), so one
    // generator per block suffices: a cup when it fits, else the first fitting box. Shaded
    // boxes keep one choice per star shading.
    std::vector<std::vector<std::pair<int, int>>> choices(part.size());
    for (size_t i = 0; i < part.size(); ++i) {
      const auto& pos = part[i].pos;
      int s = static_cast<int>(pos.size());
      if (s == 2 && (dual_label(w[pos[0]]) == w[pos[1]] || (t.colored() && w[pos[0]] == w[pos[1]]))) {
        choices[i].push_back({-1, 0});
        continue;
      }
      std::set<int> keys;
      for (size_t k = 0; k < by_size[s].size(); ++k)
        for (int r = 0; r < s; ++r) {
          bool fits = true;
          for (int j = 0; j < s && fits; ++j) fits = state_leg_label(t, by_size[s][k], r, j) == w[pos[j]];
          int key = t.shaded() ? (star_shading(by_size[s][k]) + r) % 2 : 0;
          if (fits && keys.insert(key).second) choices[i].push_back({static_cast<int>(k), r});
        }
      if (choices[i].empty()) break;
    }
    bool feasible = true;
    for (auto& c : choices) feasible = feasible && !c.empty();
    if (!feasible) continue;
    std::vector<size_t> sel(part.size(), 0);
    while (true) {
      int nbox = 0;
      for (size_t i = 0; i < part.size(); ++i) nbox += choices[i][sel[i]].first >= 0;
      if (nbox <= max_boxes) {
        Diagram d;
        d.theory = t;
        d.top = w;
        for (size_t i = 0; i < part.size(); ++i) {
          auto [k, r] = choices[i][sel[i]];
          const auto& pos = part[i].pos;
          if (k < 0) {
            d.strands.push_back(make_strand(w[pos[0]], Endpoint::top(pos[0]), false, Endpoint::top(pos[1])));
          } else {
            int s = static_cast<int>(pos.size());
            int b = static_cast<int>(d.boxes.size());
            d.boxes.push_back({by_size[s][k], r});
            for (int j = 0; j < s; ++j)
              d.strands.push_back(make_strand(w[pos[j]], Endpoint::top(pos[j]), false, Endpoint::box(b, j)));
          }
        }
        // shaded theories: the star region is unshaded, so both shadings are not mixed
        if (is_valid(d) && (!t.shaded() || derived_shading(d).value_or(0) == 0)) {
          Diagram c = canonical(d);
          if (seen.insert(diagram_key(c)).second) out.push_back(c);
        }
      }
      size_t i = 0;
      while (i < sel.size() && ++sel[i] == choices[i].size()) sel[i++] = 0;
      if (i == sel.size()) break;
    }
  }
  return out;
}

GramResult gram_matrix(const Theory& t, const Word& w, int max_boxes) {
  GramResult g;
  g.basis = spanning_diagrams(t, w, max_boxes);
  size_t n = g.basis.size();
  g.gram.assign(n, std::vector<Cyclo>(n, Cyclo::zero()));
  std::vector<Morphism> ms;
  for (const Diagram& d : g.basis) ms.push_back(Morphism::of(d));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g.gram[i][j] = inner_product(ms[i], ms[j]);
  g.rank = exact_rank(g.gram);
  g.hermitian = is_hermitian(g.gram);
  g.psd = g.hermitian && is_psd(g.gram);
  return g;
}

}  // namespace affa
