// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "affa/classify.hpp"
#include "affa/equiv.hpp"
#include "affa/evaluate.hpp"
#include "affa/fusion.hpp"
#include "affa/generators.hpp"
#include "affa/labeling.hpp"
#include "affa/relations.hpp"
#include "affa/testgen.hpp"

using namespace affa;

namespace {

const Family kFinite[] = {Family::ShadedAodd, Family::UnshadedArrowAodd, Family::UnshadedArrowAeven,
                          Family::UnshadedColorAodd};
const Family kInfinite[] = {Family::ShadedAInf, Family::UnshadedArrowAInf, Family::UnshadedColorAInf};

void parallel_for(size_t count, const std::function<void(size_t)>& body) {
  size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < std::min(workers, count); ++w)
    pool.emplace_back([&] {
      for (size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

struct Report {
  int failed = 0;
  void line(int id, bool pass, const std::string& what, double secs) {
    std::printf("criterion %d: %s  %s  (%.1f s)\n", id, pass ? "PASS" : "FAIL", what.c_str(), secs);
    std::fflush(stdout);
    failed += !pass;
  }
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Theory> finite_theories(int max_n) {
  std::vector<Theory> out;
  for (Family f : kFinite)
    for (int n = f == Family::UnshadedArrowAeven ? 0 : 1; n <= max_n; ++n)
      for (const Theory& t : theories_with_roots(f, n)) out.push_back(t);
  return out;
}

std::vector<Word> words(const std::vector<Label>& alpha, int k) {
  std::vector<Word> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (Label l : alpha) next.push_back(concat(w, {l}));
    out = next;
  }
  return out;
}

// Connected, every vertex of degree two; returns the vertex count or -1.
int cycle_length(const FusionGraph& g) {
  int V = static_cast<int>(g.vertices.size());
  std::vector<int> deg(V, 0);
  for (auto [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; })) return -1;
  std::vector<bool> seen(V, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : g.edges) {
      int o = a == v ? b : b == v ? a : -1;
      if (o >= 0 && !seen[o]) {
        seen[o] = true;
        ++count;
        stack.push_back(o);
      }
    }
  }
  return count == V ? V : -1;
}

// Relations for every theory with n <= 4 and every root.
bool criterion_relations(std::string& what) {
  std::vector<Theory> ts = finite_theories(4);
  for (Family f : kInfinite) ts.push_back(Theory::make(f));
  for (Family f : {Family::VecCyclicSource, Family::SUTwoRepSource})
    for (int m = 1; m <= 4; ++m)
      for (const Theory& t : theories_with_roots(f, m)) ts.push_back(t);
  std::vector<int> total(ts.size(), 0);
  std::vector<std::string> bad(ts.size());
  parallel_for(ts.size(), [&](size_t i) {
    for (const RelationResult& r : check_relations(ts[i])) {
      ++total[i];
      if (!r.pass) bad[i] += " " + ts[i].name() + ":" + r.name;
    }
  });
  int n = 0;
  std::string failures;
  for (size_t i = 0; i < ts.size(); ++i) {
    n += total[i];
    failures += bad[i];
  }
  what = std::to_string(n) + " relations over " + std::to_string(ts.size()) + " theories" +
         (failures.empty() ? "" : "; failed:" + failures);
  return failures.empty() && n > 0;
}

// Evaluator against the region-labeling invariant.
bool criterion_oracle(std::string& what) {
  const int draws = 1000;
  std::vector<Theory> ts = finite_theories(4);
  std::vector<int> mismatches(ts.size(), 0);
  std::vector<long> nonzero(ts.size(), 0);
  parallel_for(ts.size(), [&](size_t i) {
    for (int s = 0; s < draws; ++s) {
      Diagram d = random_closed(ts[i], 6, 3, 1000003ULL * i + static_cast<std::uint64_t>(s));
      Cyclo e = eval_diagram(d);
      if (e != invariant(d)) ++mismatches[i];
      nonzero[i] += !e.is_zero();
    }
  });
  int bad = 0;
  long nz = 0;
  std::string names;
  for (size_t i = 0; i < ts.size(); ++i) {
    nz += nonzero[i];
    if (mismatches[i]) {
      ++bad;
      names += " " + ts[i].name() + "(" + std::to_string(mismatches[i]) + ")";
    }
  }
  what = std::to_string(draws) + " draws for each of " + std::to_string(ts.size()) + " theories, " +
         std::to_string(nz) + " with nonzero value" + (bad ? "; mismatches:" + names : "");
  return bad == 0;
}

// Closed diagrams of c plain loops, nested and side by side, evaluate to 2^c.
bool criterion_loops(std::string& what) {
  std::vector<Theory> ts;
  for (Family f : kFinite) ts.push_back(Theory::make(f, 2, 1));
  for (Family f : kInfinite) ts.push_back(Theory::make(f));
  int checked = 0;
  bool ok = true;
  for (const Theory& t : ts) {
    Morphism plain = loop(t, Label::Plain);
    for (int c = 0; c <= 10; ++c) {
      Cyclo want = Cyclo::from_int(1L << c);
      Morphism side = id(t, {}), nested = id(t, {}), mixed = id(t, {});
      for (int i = 0; i < c; ++i) {
        side = tensor(side, plain);
        nested = trace_close(tensor(id(t, {Label::Plain}), nested), Side::Right);
        mixed = i % 3 == 1 ? tensor(plain, mixed) : trace_close(tensor(mixed, id(t, {Label::Plain})), Side::Left);
      }
      for (const Morphism* m : {&side, &nested, &mixed}) {
        ok = ok && eval_closed(*m) == want;
        ++checked;
      }
    }
  }
  what = std::to_string(checked) + " loop diagrams over " + std::to_string(ts.size()) + " theories, c = 0..10";
  return ok;
}

struct GramTally {
  std::mutex mu;
  long pairs = 0, matrices = 0, largest = 0;
  std::string hom_fail, gram_fail;
};

// Hom dimensions against Gram ranks; the Gram matrices are also checked for positivity.
void hom_and_gram(GramTally& tally) {
  std::vector<Theory> ts = finite_theories(4);
  for (Family f : kInfinite) ts.push_back(Theory::make(f));
  parallel_for(ts.size(), [&](size_t i) {
    const Theory& t = ts[i];
    std::vector<Label> alpha = alphabet(t);
    std::erase(alpha, Label::Plain);
    std::map<Word, GramResult> cache;
    auto gram_of = [&](const Word& w) -> const GramResult& {
      auto it = cache.find(w);
      if (it == cache.end()) it = cache.emplace(w, gram_matrix(t, w, 8)).first;
      return it->second;
    };
    long pairs = 0;
    std::string hom_fail, gram_fail;
    for (int total = 0; total <= 8; ++total)
      for (int l1 = 0; l1 <= total; ++l1)
        for (const Word& w1 : words(alpha, l1))
          for (const Word& w2 : words(alpha, total - l1)) {
            const GramResult& g = gram_of(concat(w1, dual(w2)));
            int h = hom_dim(t, w1, w2);
            ++pairs;
            if (g.rank != h) hom_fail += " " + t.name() + "[" + word_name(w1) + "|" + word_name(w2) + "]";
          }
    if (t.arrow()) {
      int m = t.modulus() ? t.modulus() : 6;
      for (int k = 0; k <= 2 * m; ++k) {
        int want = t.modulus() && k % m == 0 ? 1 : (k == 0 ? 1 : 0);
        Word qk = repeat(Label::Down, k);
        if (hom_dim(t, qk, {}) != want || gram_of(qk).rank != want)
          hom_fail += " " + t.name() + "[Q1^" + std::to_string(k) + "]";
        ++pairs;
      }
    }
    long largest = 0;
    for (auto& [w, g] : cache) {
      largest = std::max<long>(largest, static_cast<long>(g.basis.size()));
      if (!g.hermitian || !g.psd || g.rank != hom_dim(t, w, {}))
        gram_fail += " " + t.name() + "[" + word_name(w) + "]";
    }
    std::lock_guard lock(tally.mu);
    tally.pairs += pairs;
    tally.matrices += static_cast<long>(cache.size());
    tally.largest = std::max(tally.largest, largest);
    tally.hom_fail += hom_fail;
    tally.gram_fail += gram_fail;
  });
}

bool criterion_graphs(std::string& what) {
  bool ok = true;
  int graphs = 0;
  std::string bad;
  for (int n = 1; n <= 5; ++n)
    for (Family f : kFinite)
      for (const Theory& t : theories_with_roots(f, n)) {
        FusionGraph g = principal_graph(t);
        int want = f == Family::UnshadedArrowAeven ? 2 * n + 1 : 2 * n;
        bool traces = std::all_of(g.vertices.begin(), g.vertices.end(),
                                  [](const FusionGraph::Vertex& v) { return v.trace == Cyclo::one(); });
        bool good = cycle_length(g) == want && g.trace_formula_ok && traces;
        if (!good) bad += " " + t.name();
        ok = ok && good;
        ++graphs;
      }
  what = std::to_string(graphs) + " principal graphs, n = 1..5" + (bad.empty() ? "" : "; failed:" + bad);
  return ok;
}

bool criterion_classify(std::string& what) {
  bool ok = true;
  std::string bad;
  int eigen = 0;
  auto expect = [&](FamilyClass f, int n, int want) {
    int got = count_classes(f, n);
    if (got != want) {
      ok = false;
      bad += " " + family_class_name(f) + "(n=" + std::to_string(n) + "): " + std::to_string(got);
    }
    for (const Theory& t : enumerate_presentations(f, n)) {
      if (!t.has_boxes()) continue;
      ++eigen;
      if (click_eigenvalue(t) != t.root()) {
        ok = false;
        bad += " eigenvalue " + t.name();
      }
    }
  };
  for (int n = 1; n <= 5; ++n) {
    expect(FamilyClass::ShadedAodd, n, n);
    expect(FamilyClass::UnshadedAodd, n, 3 * n);
    expect(FamilyClass::Aeven, n, 2 * n + 1);
  }
  expect(FamilyClass::UnshadedAInf, 0, 2);
  expect(FamilyClass::ShadedAInf, 0, 1);
  what = "counts n, 3n, 2n+1 for n = 1..5 and 2, 1 for the infinite families; " + std::to_string(eigen) +
         " click eigenvalues" + (bad.empty() ? "" : "; failed:" + bad);
  return ok;
}

bool criterion_functors(std::string& what) {
  struct Job {
    Which which;
    int m;
    long e;
  };
  std::vector<Job> jobs;
  for (int m = 1; m <= 6; ++m)
    for (long e = 0; e < m; ++e) {
      jobs.push_back({Which::Vec, m, e});
      jobs.push_back({Which::Rep, m, e});
    }
  std::vector<char> pass(jobs.size(), 0);
  std::vector<long> checks(jobs.size(), 0);
  parallel_for(jobs.size(), [&](size_t i) {
    FunctorReport r = check_functor(jobs[i].which, jobs[i].m, jobs[i].e);
    pass[i] = r.pass() && !r.relations.empty() && !r.hom_dims.empty() && !r.nontrivial.empty();
    checks[i] = static_cast<long>(r.relations.size() + r.hom_dims.size() + r.nontrivial.size());
  });
  bool ok = true;
  long total = 0;
  std::string bad;
  for (size_t i = 0; i < jobs.size(); ++i) {
    total += checks[i];
    if (!pass[i]) {
      ok = false;
      bad += std::string(" ") + (jobs[i].which == Which::Vec ? "vec" : "rep") + "(m=" + std::to_string(jobs[i].m) +
             ",k=" + std::to_string(jobs[i].e) + ")";
    }
  }
  int cocycles = 0;
  for (int m = 1; m <= 8; ++m)
    for (long e = 0; e < m; ++e) {
      ++cocycles;
      if (!check_cocycle({m, e})) {
        ok = false;
        bad += " cocycle(m=" + std::to_string(m) + ",k=" + std::to_string(e) + ")";
      }
    }
  what = std::to_string(jobs.size()) + " functor reports with " + std::to_string(total) + " checks, " +
         std::to_string(cocycles) + " cocycles" + (bad.empty() ? "" : "; failed:" + bad);
  return ok;
}

template <class F>
bool guarded(F&& f, std::string& what) {
  try {
    return f(what);
  } catch (const InternalError& e) {
    what += std::string(" internal error: ") + e.what();
  } catch (const std::exception& e) {
    what += std::string(" exception: ") + e.what();
  }
  return false;
}

}  // namespace

int main() {
  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  long evals0 = eval_totals().evaluations.load();
  long checks0 = eval_totals().measure_checks.load(), steps0 = eval_totals().rewrites.load() + eval_totals().pops.load();
  bool internal = false;
  auto run = [&](int id, bool (*fn)(std::string&)) {
    auto t = std::chrono::steady_clock::now();
    std::string what;
    bool pass = guarded(fn, what);
    internal = internal || what.find("internal error") != std::string::npos;
    rep.line(id, pass, what, since(t));
  };
  run(1, criterion_relations);
  run(2, criterion_oracle);
  run(3, criterion_loops);
  long checks = eval_totals().measure_checks.load() - checks0;
  long steps = eval_totals().rewrites.load() + eval_totals().pops.load() - steps0;
  long evals = eval_totals().evaluations.load() - evals0;

  auto t4 = std::chrono::steady_clock::now();
  GramTally tally;
  std::string err4;
  try {
    hom_and_gram(tally);
  } catch (const std::exception& e) {
    err4 = std::string(" exception: ") + e.what();
  }
  double s4 = since(t4);
  rep.line(4, tally.hom_fail.empty() && err4.empty() && tally.pairs > 0,
           std::to_string(tally.pairs) + " word pairs of total length <= 8 plus Q1^k checks" +
               (tally.hom_fail.empty() ? "" : "; failed:" + tally.hom_fail) + err4,
           s4);
  run(5, criterion_graphs);
  run(6, criterion_classify);
  run(7, criterion_functors);
  rep.line(8, tally.gram_fail.empty() && err4.empty() && tally.matrices > 0,
           std::to_string(tally.matrices) + " Gram matrices Hermitian, PSD, rank = hom dim (largest " +
               std::to_string(tally.largest) + "x" + std::to_string(tally.largest) + ")" +
               (tally.gram_fail.empty() ? "" : "; failed:" + tally.gram_fail),
           0.0);
  // every rewrite and pop is preceded by a measure comparison that throws on failure
  rep.line(9, !internal && checks > 0 && checks >= steps,
           std::to_string(checks) + " measure decreases asserted over " + std::to_string(steps) + " steps in " +
               std::to_string(evals) + " evaluations (criteria 1-3)",
           0.0);
  std::printf("total %.1f s, %d failed\n", since(t0), rep.failed);
  return rep.failed ? 1 : 0;
}
