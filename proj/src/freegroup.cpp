#include "tricrit/freegroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "tricrit/hashing.hpp"

namespace tricrit::freegroup {

Basis::Basis(unsigned rank) : rank_(rank) {
  if (rank == 0) throw std::invalid_argument("basis rank must be positive");
}

Word Word::identity(const Basis& basis) {
  Word w;
  w.rank_ = basis.rank();
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::int32_t x : letters_) {
    if (!out.empty()) out += ' ';
    out += 'a';
    out += std::to_string(x > 0 ? x : -x);
    if (x < 0) out += "^-1";
  }
  return out;
}

Word word_reduce(std::span<const std::int32_t> raw, const Basis& basis) {
  Word w;
  w.rank_ = basis.rank();
  w.letters_.reserve(raw.size());
  for (std::int32_t x : raw) {
    if (x == 0 || static_cast<unsigned>(x > 0 ? x : -x) > basis.rank())
      throw std::invalid_argument("letter " + std::to_string(x) + " outside basis of rank " +
                                  std::to_string(basis.rank()));
    if (!w.letters_.empty() && w.letters_.back() == -x)
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

Word word_mul(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_)
    throw std::invalid_argument("word basis mismatch: rank " + std::to_string(u.rank_) +
                                " vs " + std::to_string(v.rank_));
  Word w;
  w.rank_ = u.rank_;
  w.letters_ = u.letters_;
  for (std::int32_t x : v.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -x)
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

Word word_inv(const Word& w) {
  Word r;
  r.rank_ = w.rank_;
  r.letters_.assign(w.letters_.rbegin(), w.letters_.rend());
  for (std::int32_t& x : r.letters_) x = -x;
  return r;
}

FreeAut::FreeAut(const Basis& basis, std::vector<Word> images) : images_(std::move(images)) {
  if (images_.size() != basis.rank())
    throw std::invalid_argument("expected " + std::to_string(basis.rank()) +
                                " generator images, got " + std::to_string(images_.size()));
  for (const Word& w : images_)
    if (w.rank() != basis.rank()) throw std::invalid_argument("image word over wrong basis");
}

FreeAut FreeAut::identity(const Basis& basis) {
  std::vector<Word> images;
  images.reserve(basis.rank());
  for (unsigned i = 1; i <= basis.rank(); ++i) {
    std::int32_t letter = static_cast<std::int32_t>(i);
    images.push_back(word_reduce(std::span(&letter, 1), basis));
  }
  return FreeAut(basis, std::move(images));
}

const Word& FreeAut::image(unsigned i) const {
  if (i == 0 || i > images_.size())
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  return images_[i - 1];
}

Word FreeAut::apply(const Word& w, std::size_t max_letters) const {
  if (w.rank() != rank()) throw std::invalid_argument("word basis mismatch in apply");
  Word out = Word::identity(basis());
  for (std::int32_t x : w.letters()) {
    const Word& img = images_[static_cast<unsigned>(x > 0 ? x : -x) - 1];
    out = x > 0 ? word_mul(out, img) : word_mul(out, word_inv(img));
  }
  if (out.size() > max_letters)
    throw ImageOverflowError("image of length " + std::to_string(out.size()) +
                             " exceeds budget of " + std::to_string(max_letters) + " letters");
  return out;
}

bool FreeAut::is_identity() const {
  for (unsigned i = 1; i <= rank(); ++i) {
    auto img = images_[i - 1].letters();
    if (img.size() != 1 || img[0] != static_cast<std::int32_t>(i)) return false;
  }
  return true;
}

FreeAut aut_compose(const FreeAut& f, const FreeAut& g, std::size_t max_letters) {
  if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch in composition");
  std::vector<Word> images;
  images.reserve(g.rank());
  for (unsigned i = 1; i <= g.rank(); ++i) images.push_back(f.apply(g.image(i), max_letters));
  return FreeAut(f.basis(), std::move(images));
}

std::optional<unsigned> aut_order(const FreeAut& f, unsigned cap) {
  const std::size_t budget =
      std::max<std::size_t>(1024, 2 * static_cast<std::size_t>(cap) + 2);
  FreeAut power = f;
  for (unsigned k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    if (k < cap) power = aut_compose(f, power, budget);
  }
  return std::nullopt;
}

std::size_t hash_value(const FreeAut& f) {
  Fnv1a h;
  h.feed(f.rank());
  for (const Word& w : f.images()) {
    h.feed(w.size());
    for (std::int32_t x : w.letters()) h.feed(static_cast<std::uint64_t>(static_cast<std::int64_t>(x)));
  }
  return h.digest();
}

intmat::IntMatrix abelianize(const FreeAut& f) {
  const unsigned n = f.rank();
  intmat::IntMatrix m(n);
  for (unsigned j = 1; j <= n; ++j)
    for (std::int32_t x : f.image(j).letters()) {
      unsigned i = static_cast<unsigned>(x > 0 ? x : -x);
      m.at(i - 1, j - 1) += x > 0 ? 1 : -1;
    }
  intmat::Int d = intmat::mat_det(m);
  if (d != 1 && d != -1)
    throw std::logic_error("abelianized automorphism has det " + d.str() + ", expected +-1");
  return m;
}

NamedGenerator NamedGenerator::rho(unsigned i, unsigned j) {
  if (i == 0 || j == 0 || i == j) throw std::invalid_argument("rho needs distinct positive indices");
  return {Kind::kRho, i, j, {}};
}

NamedGenerator NamedGenerator::eps(unsigned i) {
  if (i == 0) throw std::invalid_argument("eps needs a positive index");
  return {Kind::kEps, i, 0, {}};
}

NamedGenerator NamedGenerator::permutation(std::vector<unsigned> images) {
  return {Kind::kPerm, 0, 0, std::move(images)};
}

NamedGenerator NamedGenerator::transposition(unsigned i, unsigned j, unsigned n) {
  if (i == 0 || j == 0 || i > n || j > n || i == j)
    throw std::invalid_argument("transposition indices out of range");
  std::vector<unsigned> images(n);
  for (unsigned k = 1; k <= n; ++k) images[k - 1] = k;
  std::swap(images[i - 1], images[j - 1]);
  return permutation(std::move(images));
}

std::string NamedGenerator::str() const {
  switch (kind) {
    case Kind::kRho: return "rho" + std::to_string(i) + std::to_string(j);
    case Kind::kEps: return "eps" + std::to_string(i);
    case Kind::kTheta: return "theta";
    case Kind::kTau: return "tau";
    case Kind::kEta: return "eta";
    case Kind::kAlpha: return "alpha";
    case Kind::kPerm: {
      std::string out = "perm[";
      for (std::size_t k = 0; k < perm.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(perm[k]);
      }
      return out + "]";
    }
  }
  return "?";
}

namespace {

Word single_letter(std::int32_t x, const Basis& basis) {
  return word_reduce(std::span(&x, 1), basis);
}

FreeAut make_rho(unsigned i, unsigned j, const Basis& basis) {
  const unsigned n = basis.rank();
  if (i > n || j > n) throw std::invalid_argument("rho index exceeds rank");
  FreeAut id = FreeAut::identity(basis);
  std::vector<Word> images = id.images();
  std::int32_t pair[2] = {static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)};
  images[i - 1] = word_reduce(std::span(pair, 2), basis);
  return FreeAut(basis, std::move(images));
}

FreeAut make_eps(unsigned i, const Basis& basis) {
  if (i > basis.rank()) throw std::invalid_argument("eps index exceeds rank");
  FreeAut id = FreeAut::identity(basis);
  std::vector<Word> images = id.images();
  images[i - 1] = single_letter(-static_cast<std::int32_t>(i), basis);
  return FreeAut(basis, std::move(images));
}

FreeAut make_perm(const std::vector<unsigned>& p, const Basis& basis) {
  const unsigned n = basis.rank();
  if (p.size() != n) throw std::invalid_argument("permutation table size != rank");
  std::vector<bool> seen(n, false);
  for (unsigned v : p) {
    if (v == 0 || v > n || seen[v - 1]) throw std::invalid_argument("not a permutation of 1..rank");
    seen[v - 1] = true;
  }
  std::vector<Word> images;
  images.reserve(n);
  for (unsigned k = 0; k < n; ++k) images.push_back(single_letter(static_cast<std::int32_t>(p[k]), basis));
  return FreeAut(basis, std::move(images));
}

}  // namespace

FreeAut aut_from_generator(const NamedGenerator& g, const Basis& basis) {
  const unsigned n = basis.rank();
  using K = NamedGenerator::Kind;
  switch (g.kind) {
    case K::kRho: return make_rho(g.i, g.j, basis);
    case K::kEps: return make_eps(g.i, basis);
    case K::kPerm: return make_perm(g.perm, basis);
    case K::kTheta:
      if (n < 3) throw std::invalid_argument("theta needs rank >= 3");
      return aut_compose(make_rho(1, 2, basis), make_eps(2, basis));
    case K::kTau: {
      if (n < 3) throw std::invalid_argument("tau needs rank >= 3");
      auto t23 = NamedGenerator::transposition(2, 3, n);
      return aut_compose(make_perm(t23.perm, basis), make_eps(1, basis));
    }
    case K::kEta: {
      if (n < 3) throw std::invalid_argument("eta needs rank >= 3");
      auto t12 = NamedGenerator::transposition(1, 2, n);
      return aut_compose(aut_compose(make_perm(t12.perm, basis), make_eps(1, basis)),
                         make_eps(2, basis));
    }
    case K::kAlpha: {
      if (n < 2) throw std::invalid_argument("alpha needs rank >= 2");
      auto t = NamedGenerator::transposition(n, n - 1, n);
      return aut_compose(make_eps(n, basis), make_perm(t.perm, basis));
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

FreeAut aut_generator_inverse(const NamedGenerator& g, const Basis& basis) {
  using K = NamedGenerator::Kind;
  switch (g.kind) {
    case K::kRho: {
      // a_i -> a_i a_j^{-1}
      FreeAut id = FreeAut::identity(basis);
      if (g.i > basis.rank() || g.j > basis.rank())
        throw std::invalid_argument("rho index exceeds rank");
      std::vector<Word> images = id.images();
      std::int32_t pair[2] = {static_cast<std::int32_t>(g.i), -static_cast<std::int32_t>(g.j)};
      images[g.i - 1] = word_reduce(std::span(pair, 2), basis);
      return FreeAut(basis, std::move(images));
    }
    case K::kEps:
    case K::kTheta:
    case K::kTau:
    case K::kEta:
      return aut_from_generator(g, basis);  // involutions
    case K::kPerm: {
      std::vector<unsigned> inv(g.perm.size());
      for (unsigned k = 0; k < g.perm.size(); ++k) {
        if (g.perm[k] == 0 || g.perm[k] > g.perm.size())
          throw std::invalid_argument("not a permutation of 1..rank");
        inv[g.perm[k] - 1] = k + 1;
      }
      return make_perm(inv, basis);
    }
    case K::kAlpha: {
      FreeAut a = aut_from_generator(g, basis);
      return aut_compose(a, aut_compose(a, a));  // alpha has order 4
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace tricrit::freegroup
