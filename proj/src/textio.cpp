#include "tricrit/textio.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace tricrit::textio {

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r'))
      ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
           text[i] != '\r')
      ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t token_pos, const std::string& message) {
  throw std::invalid_argument("token " + std::to_string(token_pos + 1) + ": " + message);
}

unsigned parse_index(std::string_view tok, std::size_t token_pos) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0)
    fail(token_pos, "expected a positive index, got '" + std::string(tok) + "'");
  return value;
}

/// Parse `(1 2)(3 4)`-style cycles (possibly spread over several tokens)
/// into a full image table for S_n acting on generator indices.
std::vector<unsigned> parse_cycles(const std::string& text, unsigned n, std::size_t token_pos) {
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = i + 1;
  std::size_t i = 0;
  bool any = false;
  auto apply_cycle = [&](const std::vector<unsigned>& cycle) {
    // Right-to-left composition overall; within one parse, later cycles act
    // first, so apply each new cycle on the right: images = images o cycle.
    std::vector<unsigned> next = images;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      unsigned from = cycle[k];
      unsigned to = cycle[(k + 1) % cycle.size()];
      next[from - 1] = images[to - 1];
    }
    images = std::move(next);
  };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') fail(token_pos, "expected '(' in permutation");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail(token_pos, "unbalanced '(' in permutation");
    std::vector<unsigned> cycle;
    std::size_t j = i + 1;
    while (j < close) {
      while (j < close && text[j] == ' ') ++j;
      std::size_t start = j;
      while (j < close && text[j] != ' ') ++j;
      if (j > start) {
        std::string_view tok(text.data() + start, j - start);
        unsigned v = parse_index(tok, token_pos);
        if (v > n) fail(token_pos, "cycle entry " + std::to_string(v) + " exceeds rank");
        cycle.push_back(v);
      }
    }
    if (cycle.size() < 2) fail(token_pos, "cycle needs at least two entries");
    for (std::size_t a = 0; a < cycle.size(); ++a)
      for (std::size_t b = a + 1; b < cycle.size(); ++b)
        if (cycle[a] == cycle[b]) fail(token_pos, "repeated entry in cycle");
    apply_cycle(cycle);
    any = true;
    i = close + 1;
  }
  if (!any) fail(token_pos, "empty permutation");
  return images;
}

}  // namespace

freegroup::FreeAut parse_generator_word(std::string_view text, const freegroup::Basis& basis) {
  using freegroup::NamedGenerator;
  auto tokens = tokenize(text);
  if (tokens.empty()) throw std::invalid_argument("empty generator word");

  freegroup::FreeAut result = freegroup::FreeAut::identity(basis);
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::string_view tok = tokens[i];
    NamedGenerator gen = NamedGenerator::eps(1);  // placeholder
    if (tok == "rho") {
      if (i + 2 >= tokens.size()) fail(i, "rho needs two indices");
      unsigned a = parse_index(tokens[i + 1], i + 1);
      unsigned b = parse_index(tokens[i + 2], i + 2);
      if (a == b) fail(i + 2, "rho needs distinct indices");
      gen = NamedGenerator::rho(a, b);
      i += 3;
    } else if (tok == "eps") {
      if (i + 1 >= tokens.size()) fail(i, "eps needs an index");
      gen = NamedGenerator::eps(parse_index(tokens[i + 1], i + 1));
      i += 2;
    } else if (tok == "perm") {
      std::size_t first = i + 1;
      std::string joined;
      std::size_t j = first;
      int balance = 0;
      for (; j < tokens.size(); ++j) {
        for (char c : tokens[j]) {
          if (c == '(') ++balance;
          if (c == ')') --balance;
        }
        joined += ' ';
        joined += tokens[j];
        if (balance == 0) {
          ++j;
          break;
        }
      }
      if (j == first || balance != 0) fail(i, "perm needs balanced (...) cycles");
      gen = NamedGenerator::permutation(parse_cycles(joined, basis.rank(), first));
      i = j;
    } else if (tok == "theta") {
      gen = NamedGenerator::theta();
      ++i;
    } else if (tok == "tau") {
      gen = NamedGenerator::tau();
      ++i;
    } else if (tok == "eta") {
      gen = NamedGenerator::eta();
      ++i;
    } else if (tok == "alpha") {
      gen = NamedGenerator::alpha();
      ++i;
    } else {
      fail(i, "unknown generator '" + std::string(tok) + "'");
    }
    freegroup::FreeAut g = [&] {
      try {
        return aut_from_generator(gen, basis);
      } catch (const std::invalid_argument& e) {
        fail(i - 1, e.what());
      }
    }();
    result = result * g;  // left-to-right listing = right-to-left action
  }
  return result;
}

tree::Tree parse_tree_edge_list(std::string_view text) {
  std::vector<std::pair<unsigned, unsigned>> edges;
  unsigned max_id = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    if (tokens.size() != 2)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected two vertex ids");
    unsigned ids[2];
    for (int k = 0; k < 2; ++k) {
      auto tok = tokens[k];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), ids[k]);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad vertex id '" +
                                    std::string(tok) + "'");
    }
    edges.emplace_back(ids[0], ids[1]);
    max_id = std::max({max_id, ids[0], ids[1]});
  }
  if (edges.empty()) throw std::invalid_argument("edge list is empty");
  return tree::Tree::from_edges(max_id + 1, edges);
}

tree::TreeIsom parse_isometry_line(std::string_view text, const tree::Tree& t) {
  auto tokens = tokenize(text);
  std::vector<unsigned> images;
  images.reserve(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    unsigned v = 0;
    auto tok = tokens[k];
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("entry " + std::to_string(k + 1) + ": bad vertex id '" +
                                  std::string(tok) + "'");
    images.push_back(v);
  }
  return tree::TreeIsom::from_vertex_map(t, images);
}

}  // namespace tricrit::textio
