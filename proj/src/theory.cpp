#include "affa/theory.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace affa {

namespace {

const std::array<std::pair<Family, const char*>, 9> kFamilies{{
    {Family::ShadedAodd, "ShadedAodd"},
    {Family::UnshadedArrowAodd, "UnshadedArrowAodd"},
    {Family::UnshadedArrowAeven, "UnshadedArrowAeven"},
    {Family::UnshadedColorAodd, "UnshadedColorAodd"},
    {Family::ShadedAInf, "ShadedAInf"},
    {Family::UnshadedArrowAInf, "UnshadedArrowAInf"},
    {Family::UnshadedColorAInf, "UnshadedColorAInf"},
    {Family::VecCyclicSource, "VecCyclicSource"},
    {Family::SUTwoRepSource, "SUTwoRepSource"},
}};

const std::array<std::pair<Label, const char*>, 8> kLabels{{
    {Label::Red, "Red"},
    {Label::Blue, "Blue"},
    {Label::Up, "Up"},
    {Label::Down, "Down"},
    {Label::Plain, "Plain"},
    {Label::Dot, "Dot"},
    {Label::Plus, "Plus"},
    {Label::Minus, "Minus"},
}};

const std::array<std::pair<BoxKind, const char*>, 14> kKinds{{
    {BoxKind::U, "U"},
    {BoxKind::Ustar, "Ustar"},
    {BoxKind::V, "V"},
    {BoxKind::Vstar, "Vstar"},
    {BoxKind::UTilde, "UTilde"},
    {BoxKind::UTildeStar, "UTildeStar"},
    {BoxKind::UTildePrime, "UTildePrime"},
    {BoxKind::UTildeStarPrime, "UTildeStarPrime"},
    {BoxKind::ScriptU, "ScriptU"},
    {BoxKind::ScriptUstar, "ScriptUstar"},
    {BoxKind::NCapPlus, "NCapPlus"},
    {BoxKind::NCapMinus, "NCapMinus"},
    {BoxKind::NCupPlus, "NCupPlus"},
    {BoxKind::NCupMinus, "NCupMinus"},
}};

std::vector<Label> alternating(Label first, int len) {
  std::vector<Label> w;
  Label other = first == Label::Red ? Label::Blue : Label::Red;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? first : other);
  return w;
}

std::vector<Label> repeat(Label l, int len) { return std::vector<Label>(len, l); }

}  // namespace

Theory Theory::make(Family f, int n, long k) {
  Theory t;
  t.family = f;
  t.n = n;
  bool inf = f == Family::ShadedAInf || f == Family::UnshadedArrowAInf ||
             f == Family::UnshadedColorAInf;
  if (inf) {
    t.n = 0;
    return t;
  }
  bool allow_zero = f == Family::UnshadedArrowAeven;
  if (n < (allow_zero ? 0 : 1)) throw std::invalid_argument("theory size parameter out of range");
  int N = t.modulus();
  long e = ((k % N) + N) % N;
  long g = std::gcd(e, static_cast<long>(N));
  if (e == 0) {
    t.root_order = 1;
    t.root_exp = 0;
  } else {
    t.root_order = static_cast<int>(N / g);
    t.root_exp = static_cast<int>(e / g);
  }
  return t;
}

int Theory::modulus() const {
  switch (family) {
    case Family::ShadedAodd:
    case Family::UnshadedColorAodd:
    case Family::VecCyclicSource:
    case Family::SUTwoRepSource:
      return n;
    case Family::UnshadedArrowAodd:
      return 2 * n;
    case Family::UnshadedArrowAeven:
      return 2 * n + 1;
    default:
      return 0;
  }
}

bool Theory::infinite() const {
  return family == Family::ShadedAInf || family == Family::UnshadedArrowAInf ||
         family == Family::UnshadedColorAInf;
}

bool Theory::colored() const {
  return family == Family::ShadedAodd || family == Family::UnshadedColorAodd ||
         family == Family::ShadedAInf || family == Family::UnshadedColorAInf;
}

bool Theory::oriented() const { return !colored(); }

std::string Theory::name() const {
  std::string s = family_name(family);
  if (!infinite()) s += "(n=" + std::to_string(n) + ",root=" + std::to_string(root_exp) + "/" +
                        std::to_string(root_order) + ")";
  return s;
}

std::string family_name(Family f) {
  for (auto& [k, v] : kFamilies)
    if (k == f) return v;
  throw std::logic_error("unknown family");
}

Family parse_family(const std::string& s) {
  for (auto& [k, v] : kFamilies)
    if (s == v) return k;
  if (s == "shaded" || s == "shaded-a-odd") return Family::ShadedAodd;
  if (s == "arrow" || s == "arrow-a-odd") return Family::UnshadedArrowAodd;
  if (s == "a-even" || s == "arrow-a-even") return Family::UnshadedArrowAeven;
  if (s == "color" || s == "color-a-odd") return Family::UnshadedColorAodd;
  if (s == "shaded-a-inf") return Family::ShadedAInf;
  if (s == "arrow-a-inf") return Family::UnshadedArrowAInf;
  if (s == "color-a-inf") return Family::UnshadedColorAInf;
  if (s == "vec") return Family::VecCyclicSource;
  if (s == "rep") return Family::SUTwoRepSource;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::string label_name(Label l) {
  for (auto& [k, v] : kLabels)
    if (k == l) return v;
  throw std::logic_error("unknown label");
}

Label parse_label(const std::string& s) {
  for (auto& [k, v] : kLabels)
    if (s == v) return k;
  throw std::invalid_argument("unknown strand label '" + s + "'");
}

std::string kind_name(BoxKind k) {
  for (auto& [a, v] : kKinds)
    if (a == k) return v;
  throw std::logic_error("unknown box kind");
}

BoxKind parse_kind(const std::string& s) {
  for (auto& [k, v] : kKinds)
    if (s == v) return k;
  throw std::invalid_argument("unknown box kind '" + s + "'");
}

std::vector<Label> alphabet(const Theory& t) {
  switch (t.family) {
    case Family::ShadedAodd:
    case Family::UnshadedColorAodd:
    case Family::ShadedAInf:
    case Family::UnshadedColorAInf:
      return {Label::Red, Label::Blue, Label::Plain};
    case Family::UnshadedArrowAodd:
    case Family::UnshadedArrowAeven:
    case Family::UnshadedArrowAInf:
      return {Label::Up, Label::Down, Label::Plain};
    case Family::VecCyclicSource:
      return {Label::Dot};
    case Family::SUTwoRepSource:
      return {Label::Plus, Label::Minus};
  }
  return {};
}

std::vector<BoxKind> box_kinds(const Theory& t) {
  switch (t.family) {
    case Family::ShadedAodd:
      return {BoxKind::U, BoxKind::Ustar, BoxKind::V, BoxKind::Vstar};
    case Family::UnshadedArrowAodd:
    case Family::UnshadedArrowAeven:
      return {BoxKind::U,          BoxKind::Ustar,       BoxKind::UTilde,
              BoxKind::UTildeStar, BoxKind::UTildePrime, BoxKind::UTildeStarPrime};
    case Family::UnshadedColorAodd:
      return {BoxKind::V, BoxKind::Vstar};
    case Family::VecCyclicSource:
      return {BoxKind::ScriptU, BoxKind::ScriptUstar};
    case Family::SUTwoRepSource:
      return {BoxKind::NCapPlus, BoxKind::NCapMinus, BoxKind::NCupPlus, BoxKind::NCupMinus};
    default:
      return {};
  }
}

bool kind_legal(const Theory& t, BoxKind k) {
  for (BoxKind x : box_kinds(t))
    if (x == k) return true;
  return false;
}

Signature box_signature(const Theory& t, BoxKind k) {
  if (!kind_legal(t, k))
    throw std::invalid_argument("box kind " + kind_name(k) + " illegal in " + t.name());
  int n = t.n;
  switch (t.family) {
    case Family::ShadedAodd:
      if (k == BoxKind::U || k == BoxKind::V)
        return {alternating(Label::Blue, n), alternating(Label::Red, n)};
      return {alternating(Label::Red, n), alternating(Label::Blue, n)};
    case Family::UnshadedColorAodd:
      if (k == BoxKind::V) return {alternating(Label::Red, n), alternating(Label::Blue, n)};
      return {alternating(Label::Blue, n), alternating(Label::Red, n)};
    case Family::UnshadedArrowAodd:
    case Family::UnshadedArrowAeven: {
      int p = t.family == Family::UnshadedArrowAodd ? n : n + 1;
      int m = n + p;
      switch (k) {
        case BoxKind::U:
          return {repeat(Label::Up, p), repeat(Label::Down, n)};
        case BoxKind::Ustar:
          return {repeat(Label::Down, n), repeat(Label::Up, p)};
        case BoxKind::UTilde:
          return {{}, repeat(Label::Down, m)};
        case BoxKind::UTildeStar:
          return {repeat(Label::Down, m), {}};
        case BoxKind::UTildePrime:
          return {repeat(Label::Up, m), {}};
        default:
          return {{}, repeat(Label::Up, m)};
      }
    }
    case Family::VecCyclicSource:
      if (k == BoxKind::ScriptU) return {{}, repeat(Label::Dot, n)};
      return {repeat(Label::Dot, n), {}};
    case Family::SUTwoRepSource:
      switch (k) {
        case BoxKind::NCapPlus:
          return {{}, repeat(Label::Plus, n)};
        case BoxKind::NCapMinus:
          return {repeat(Label::Minus, n), {}};
        case BoxKind::NCupPlus:
          return {repeat(Label::Plus, n), {}};
        default:
          return {{}, repeat(Label::Minus, n)};
      }
    default:
      break;
  }
  throw std::logic_error("box_signature: unreachable");
}

int leg_count(const Theory& t, BoxKind k) {
  Signature s = box_signature(t, k);
  return static_cast<int>(s.bottom.size() + s.top.size());
}

bool canonical_leg_on_top(const Theory& t, BoxKind k, int j) {
  Signature s = box_signature(t, k);
  return j < static_cast<int>(s.top.size());
}

Label canonical_leg_label(const Theory& t, BoxKind k, int j) {
  Signature s = box_signature(t, k);
  int q = static_cast<int>(s.top.size());
  int L = q + static_cast<int>(s.bottom.size());
  if (j < 0 || j >= L) throw std::out_of_range("canonical leg index");
  if (j < q) return s.top[j];
  return s.bottom[L - 1 - j];
}

bool is_oriented(Label l) {
  return l == Label::Up || l == Label::Down || l == Label::Dot || l == Label::Plus ||
         l == Label::Minus;
}

bool points_up(Label l) { return l == Label::Up || l == Label::Dot || l == Label::Plus; }

Label flip_label(Label l) {
  switch (l) {
    case Label::Up:
      return Label::Down;
    case Label::Down:
      return Label::Up;
    case Label::Plus:
      return Label::Minus;
    case Label::Minus:
      return Label::Plus;
    case Label::Dot:
      throw std::invalid_argument("Dot strands have no reversed label");
    default:
      return l;
  }
}

Label dual_label(Label l) { return flip_label(l); }

Label orient_class(Label l) {
  switch (l) {
    case Label::Up:
    case Label::Down:
      return Label::Up;
    case Label::Plus:
    case Label::Minus:
      return Label::Plus;
    default:
      return l;
  }
}

Label with_direction(Label cls, bool up) {
  if (cls == Label::Dot) {
    if (!up) throw std::invalid_argument("Dot strands only point upward");
    return Label::Dot;
  }
  if (cls == Label::Up) return up ? Label::Up : Label::Down;
  if (cls == Label::Plus) return up ? Label::Plus : Label::Minus;
  return cls;
}

Role end_role(Label l, bool above) {
  if (!is_oriented(l)) return Role::None;
  bool up = points_up(l);
  return up == above ? Role::Source : Role::Sink;
}

ClickRule click_rule(const Theory& t, BoxKind k) {
  Cyclo one = Cyclo::one();
  Cyclo w = t.root();
  switch (t.family) {
    case Family::ShadedAodd:
      switch (k) {
        case BoxKind::U:
          return {w, BoxKind::Vstar};
        case BoxKind::Vstar:
          return {one, BoxKind::U};
        case BoxKind::Ustar:
          return {one, BoxKind::V};
        default:
          return {w, BoxKind::Ustar};
      }
    case Family::UnshadedColorAodd:
      if (k == BoxKind::V) return {w, BoxKind::Vstar};
      return {one, BoxKind::V};
    case Family::UnshadedArrowAodd:
    case Family::UnshadedArrowAeven:
      return {w, k};
    case Family::VecCyclicSource:
      return {w.conj(), k};
    case Family::SUTwoRepSource:
      return {one, k};
    default:
      throw std::invalid_argument("click_rule: box-free theory");
  }
}

BoxKind adjoint_kind(BoxKind k) {
  switch (k) {
    case BoxKind::U:
      return BoxKind::Ustar;
    case BoxKind::Ustar:
      return BoxKind::U;
    case BoxKind::V:
      return BoxKind::Vstar;
    case BoxKind::Vstar:
      return BoxKind::V;
    case BoxKind::UTilde:
      return BoxKind::UTildeStar;
    case BoxKind::UTildeStar:
      return BoxKind::UTilde;
    case BoxKind::UTildePrime:
      return BoxKind::UTildeStarPrime;
    case BoxKind::UTildeStarPrime:
      return BoxKind::UTildePrime;
    case BoxKind::ScriptU:
      return BoxKind::ScriptUstar;
    case BoxKind::ScriptUstar:
      return BoxKind::ScriptU;
    case BoxKind::NCapPlus:
      return BoxKind::NCupPlus;
    case BoxKind::NCupPlus:
      return BoxKind::NCapPlus;
    case BoxKind::NCapMinus:
      return BoxKind::NCupMinus;
    case BoxKind::NCupMinus:
      return BoxKind::NCapMinus;
  }
  return k;
}

BoxKind vertex_kind(BoxKind k) {
  switch (k) {
    case BoxKind::UTilde:
    case BoxKind::UTildePrime:
      return BoxKind::U;
    case BoxKind::UTildeStar:
    case BoxKind::UTildeStarPrime:
      return BoxKind::Ustar;
    default:
      return k;
  }
}

BoxKind unitary_partner(BoxKind k) { return adjoint_kind(vertex_kind(k)); }

int star_shading(BoxKind k) { return (k == BoxKind::V || k == BoxKind::Vstar) ? 1 : 0; }

Theory arrow_theory_of_size(int m, long k) {
  if (m < 1) throw std::invalid_argument("arrow theory size must be positive");
  if (m % 2 == 0) return Theory::make(Family::UnshadedArrowAodd, m / 2, k);
  return Theory::make(Family::UnshadedArrowAeven, (m - 1) / 2, k);
}

Theory vec_target(const Theory& src) {
  // root zeta = exp(2 pi i e/d), re-expressed over m
  int m = src.n;
  long k = src.root_order == 1 ? 0 : static_cast<long>(src.root_exp) * (m / src.root_order);
  return arrow_theory_of_size(m, k);
}

Theory rep_target(const Theory& src) { return arrow_theory_of_size(src.n, 0); }

}  // namespace affa
