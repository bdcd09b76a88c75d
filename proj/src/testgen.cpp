#include "affa/testgen.hpp"

#include <algorithm>
#include <random>

#include "affa/generators.hpp"

namespace affa {

void Coverage::merge(const Coverage& o) {
  draws += o.draws;
  for (auto& [k, v] : o.kinds) kinds[k] += v;
  nested_boxes += o.nested_boxes;
  plain_strands += o.plain_strands;
  loops_one_way += o.loops_one_way;
  loops_other_way += o.loops_other_way;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Block {
  int size = 2;
  BoxKind kind = BoxKind::U;  // used when box is true
  bool box = false;
  int rot = 0;
  Label cup_label = Label::Red;  // label read at the left end of a cup
  std::vector<int> pos;
};

// Lays the blocks out as a random noncrossing partition; every block gets its positions.
void arrange(std::vector<int> ids, std::vector<Block>& blocks, Rng& rng, std::vector<int>& seq) {
  if (ids.empty()) return;
  std::shuffle(ids.begin(), ids.end(), rng);
  int root = ids.back();
  ids.pop_back();
  int s = blocks[root].size;
  // bins 0..s-2 sit between consecutive legs, bin s-1 follows the block
  std::vector<std::vector<int>> bins(s);
  for (int id : ids) bins[uniform(rng, 0, s - 1)].push_back(id);
  for (int j = 0; j < s; ++j) {
    blocks[root].pos.push_back(static_cast<int>(seq.size()));
    seq.push_back(root);
    if (j + 1 < s) arrange(bins[j], blocks, rng, seq);
  }
  arrange(bins[s - 1], blocks, rng, seq);
}

Label random_cup_label(const Theory& t, Rng& rng) {
  if (t.colored()) return uniform(rng, 0, 1) ? Label::Red : Label::Blue;
  return uniform(rng, 0, 1) ? Label::Up : Label::Down;
}

// State empty -> w from laid-out blocks; nullopt when a box does not fit its labels.
std::optional<Diagram> build_state(const Theory& t, const std::vector<Block>& blocks, int len,
                                   const std::vector<Label>* forced) {
  Diagram d;
  d.theory = t;
  d.top.assign(len, Label::Plain);
  for (const Block& b : blocks) {
    if (b.box) {
      int bi = static_cast<int>(d.boxes.size());
      d.boxes.push_back({b.kind, b.rot});
      for (int j = 0; j < b.size; ++j) {
        Label l = state_leg_label(t, b.kind, b.rot, j);
        d.top[b.pos[j]] = l;
        d.strands.push_back(make_strand(l, Endpoint::top(b.pos[j]), false, Endpoint::box(bi, j)));
      }
    } else {
      Label l = b.cup_label;
      d.top[b.pos[0]] = l;
      d.top[b.pos[1]] = dual_label(l);
      d.strands.push_back(make_strand(l, Endpoint::top(b.pos[0]), false, Endpoint::top(b.pos[1])));
    }
  }
  if (forced && d.top != *forced) return std::nullopt;
  if (!is_valid(d)) return std::nullopt;
  return d;
}

std::vector<Block> random_blocks(const Theory& t, int boxes, int cups, Rng& rng) {
  std::vector<Block> blocks;
  auto kinds = box_kinds(t);
  for (int i = 0; i < boxes && !kinds.empty(); ++i) {
    Block b;
    b.box = true;
    b.kind = kinds[uniform(rng, 0, static_cast<int>(kinds.size()) - 1)];
    b.size = leg_count(t, b.kind);
    b.rot = uniform(rng, 0, b.size - 1);
    blocks.push_back(b);
  }
  for (int i = 0; i < cups; ++i) {
    Block b;
    b.cup_label = random_cup_label(t, rng);
    blocks.push_back(b);
  }
  return blocks;
}

std::vector<Block> laid_out(std::vector<Block> blocks, Rng& rng, int& len) {
  std::vector<int> ids(blocks.size()), seq;
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  arrange(ids, blocks, rng, seq);
  len = static_cast<int>(seq.size());
  return blocks;
}

// Refit every box of a laid-out state to some kind and rotation matching the same labels.
std::vector<Block> refit(const Theory& t, std::vector<Block> blocks, const std::vector<Label>& w, Rng& rng) {
  for (Block& b : blocks) {
    if (!b.box) continue;
    std::vector<std::pair<BoxKind, int>> fits;
    for (BoxKind k : box_kinds(t)) {
      if (leg_count(t, k) != b.size) continue;
      for (int r = 0; r < b.size; ++r) {
        Block c = b;
        c.kind = k;
        c.rot = r;
        if (build_state(t, {c}, static_cast<int>(w.size()), nullptr)) {
          // compare only this block's labels
          auto one = build_state(t, {c}, static_cast<int>(w.size()), nullptr);
          bool ok = true;
          for (int p : c.pos) ok = ok && one->top[p] == w[p];
          if (ok) fits.push_back({k, r});
        }
      }
    }
    if (fits.empty()) continue;
    auto [k, r] = fits[uniform(rng, 0, static_cast<int>(fits.size()) - 1)];
    b.kind = k;
    b.rot = r;
  }
  return blocks;
}

bool inside_some_cup(const std::vector<Block>& blocks, const Block& b) {
  for (const Block& c : blocks)
    if (!c.box && c.pos[0] < b.pos.front() && b.pos.back() < c.pos[1]) return true;
  return false;
}

}  // namespace

Diagram random_closed(const Theory& t, int max_boxes, int max_loops, std::uint64_t seed, Coverage* cov) {
  Rng rng(seed);
  Coverage local;
  local.draws = 1;
  for (int attempt = 0;; ++attempt) {
    int half = t.has_boxes() ? max_boxes / 2 : 0;
    int nb = uniform(rng, 0, half);
    int nc = uniform(rng, max_boxes == 0 ? std::min(1, max_loops) : 0, std::max(0, max_loops));
    int len = 0;
    std::vector<Block> s_blocks = laid_out(random_blocks(t, nb, nc, rng), rng, len);
    auto S = build_state(t, s_blocks, len, nullptr);
    if (!S) {
      if (attempt > 200) return Diagram{t, {}, {}, {}, 0, {}, {}};
      continue;
    }
    // the closing state: an independent layout when one fits, else a refit of the first
    std::optional<Diagram> C;
    std::vector<Block> c_blocks;
    if (uniform(rng, 0, 1)) {
      for (int tries = 0; tries < 20 && !C; ++tries) {
        int cb = uniform(rng, 0, half);
        auto kinds = box_kinds(t);
        std::vector<Block> blocks = random_blocks(t, cb, 0, rng);
        int used = 0;
        for (auto& b : blocks) used += b.size;
        if (used > len || (len - used) % 2) continue;
        for (int i = 0; i < (len - used) / 2; ++i) blocks.push_back(Block{});
        int l2 = 0;
        blocks = laid_out(blocks, rng, l2);
        // cups copy their labels from w; boxes must already agree
        for (auto& b : blocks)
          if (!b.box) b.cup_label = S->top[b.pos[0]];
        blocks = refit(t, blocks, S->top, rng);
        C = build_state(t, blocks, len, &S->top);
        if (C) c_blocks = blocks;
      }
    }
    if (!C) {
      c_blocks = refit(t, s_blocks, S->top, rng);
      C = build_state(t, c_blocks, len, &S->top);
    }
    if (!C) continue;
    std::optional<Diagram> closed;
    try {
      closed = compose(adjoint(*C), *S);
    } catch (const DiagramError&) {
      continue;  // the two states force opposite shadings
    }
    if (!closed) continue;
    Diagram d = *closed;
    // forget some labels
    for (Strand& st : d.strands) {
      if (uniform(rng, 0, 6)) continue;
      Strand keep = st;
      st.label = Label::Plain;
      st.dir = 0;
      if (is_valid(d))
        ++local.plain_strands;
      else
        st = keep;
    }
    validate(d);
    for (const auto* bl : {&s_blocks, &c_blocks})
      for (const Block& b : *bl) {
        if (b.box) {
          ++local.kinds[b.kind];
          if (inside_some_cup(*bl, b)) ++local.nested_boxes;
        } else if (b.cup_label == Label::Red || b.cup_label == Label::Up) {
          ++local.loops_one_way;
        } else {
          ++local.loops_other_way;
        }
      }
    if (cov) cov->merge(local);
    return canonical(d);
  }
}

}  // namespace affa
