#include "tricrit/bass_serre.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace tricrit::tree {

namespace {

// Normal-form word: alternating ('a', exp) / ('b', exp) parts, exponents in
// 1..m-1 resp. 1..k-1. A coset wA additionally has no trailing 'a' part, wB
// no trailing 'b' part.
using CosetWord = std::vector<std::pair<char, unsigned>>;

std::string coset_key(const CosetWord& w, char type) {
  std::string out;
  for (auto [c, e] : w) {
    out += c;
    if (e > 1) out += std::to_string(e);
    out += '.';
  }
  out += type == 'a' ? 'A' : 'B';
  return out;
}

CosetWord strip_trailing(CosetWord w, char side) {
  if (!w.empty() && w.back().first == side) w.pop_back();
  return w;
}

CosetWord left_multiply(CosetWord w, char letter, unsigned order) {
  if (!w.empty() && w.front().first == letter) {
    unsigned e = (w.front().second + 1) % order;
    if (e == 0)
      w.erase(w.begin());
    else
      w.front().second = e;
  } else {
    w.insert(w.begin(), {letter, 1});
  }
  return w;
}

}  // namespace

BassSerreBall bass_serre_ball(unsigned m, unsigned k, unsigned radius, std::size_t vertex_cap) {
  if (m < 2 || k < 2) throw std::invalid_argument("free product factors need order >= 2");

  struct Vertex {
    CosetWord word;
    char type;  // 'a' for wA, 'b' for wB
  };
  std::vector<Vertex> verts;
  std::map<std::string, unsigned> ids;
  std::vector<unsigned> depth;
  std::vector<std::pair<unsigned, unsigned>> edges;

  auto intern = [&](const CosetWord& w, char type) -> unsigned {
    std::string key = coset_key(w, type);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    if (verts.size() >= vertex_cap) throw std::invalid_argument("ball exceeds vertex cap");
    unsigned id = static_cast<unsigned>(verts.size());
    ids.emplace(std::move(key), id);
    verts.push_back({w, type});
    depth.push_back(~0u);
    return id;
  };

  unsigned base = intern({}, 'a');
  depth[base] = 0;
  std::deque<unsigned> work{base};
  while (!work.empty()) {
    unsigned cur = work.front();
    work.pop_front();
    if (depth[cur] == radius) continue;
    // Neighbors of wA are the B-cosets over the edge set wA (and dually).
    const Vertex v = verts[cur];  // copy: intern() may reallocate verts
    const char other = v.type == 'a' ? 'b' : 'a';
    const unsigned fan = v.type == 'a' ? m : k;
    std::vector<CosetWord> nbs;
    nbs.push_back(strip_trailing(v.word, other));
    for (unsigned e = 1; e < fan; ++e) {
      CosetWord w = v.word;
      w.push_back({v.type, e});
      nbs.push_back(std::move(w));
    }
    for (const CosetWord& w : nbs) {
      unsigned nb = intern(w, other);
      if (depth[nb] == ~0u) {
        depth[nb] = depth[cur] + 1;
        edges.emplace_back(cur, nb);
        work.push_back(nb);
      }
    }
  }

  std::vector<std::string> names;
  names.reserve(verts.size());
  for (const Vertex& v : verts) names.push_back(coset_key(v.word, v.type));

  auto act = [&](char letter, unsigned order) {
    std::vector<std::optional<unsigned>> table(verts.size());
    for (unsigned id = 0; id < verts.size(); ++id) {
      // Left-multiply, then re-canonicalize the representative: a coset wA
      // keeps no trailing a-part (a * A = A itself, not "aA").
      CosetWord w = strip_trailing(left_multiply(verts[id].word, letter, order),
                                   verts[id].type);
      auto it = ids.find(coset_key(w, verts[id].type));
      if (it != ids.end()) table[id] = it->second;
    }
    return table;
  };

  return BassSerreBall{m,
                       k,
                       radius,
                       Tree::from_edges(static_cast<unsigned>(verts.size()), edges),
                       base,
                       std::move(names),
                       std::move(depth),
                       act('a', m),
                       act('b', k)};
}

unsigned min_displacement(const BassSerreBall& ball, std::string_view element_word,
                          unsigned inner_radius) {
  std::vector<char> letters;
  for (char c : element_word) {
    if (c == ' ' || c == '\t') continue;
    if (c != 'a' && c != 'b')
      throw std::invalid_argument(std::string("unexpected character '") + c +
                                  "' in element word (expected letters a, b)");
    letters.push_back(c);
  }
  if (letters.empty()) throw std::invalid_argument("empty element word");

  unsigned best = ~0u;
  for (unsigned v = 0; v < ball.ball.vertex_count(); ++v) {
    if (ball.depth[v] > inner_radius) continue;
    unsigned image = v;
    // Right-to-left application: the last letter acts first.
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      const auto& table = *it == 'a' ? ball.act_a : ball.act_b;
      auto next = table[image];
      if (!next)
        throw std::runtime_error("element image leaves the ball; enlarge the radius or "
                                 "shrink inner_radius");
      image = *next;
    }
    // Ball distances agree with tree distances (balls are convex); the
    // subdivision metric counts half-edges, hence the /2.
    unsigned disp = distance(ball.ball, v, image) / 2;
    best = std::min(best, disp);
    if (best == 0) break;
  }
  return best;
}

}  // namespace tricrit::tree
