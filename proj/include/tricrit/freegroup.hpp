#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricrit/errors.hpp"
#include "tricrit/intmat.hpp"

namespace tricrit::freegroup {

/// Free basis a_1..a_n. Letters are signed 1-based indices: +i means a_i,
/// -i means a_i^{-1}.
class Basis {
 public:
  explicit Basis(unsigned rank);
  unsigned rank() const { return rank_; }
  bool operator==(const Basis&) const = default;

 private:
  unsigned rank_;
};

/// A freely reduced word over a basis. Construct via word_reduce or the
/// algebra below; instances are always reduced.
class Word {
 public:
  Word() = default;  // empty word over rank 0; use Word::identity for a basis

  static Word identity(const Basis& basis);

  unsigned rank() const { return rank_; }
  std::span<const std::int32_t> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  std::string str() const;  // e.g. "a1 a2^-1", identity prints "1"

 private:
  friend Word word_reduce(std::span<const std::int32_t>, const Basis&);
  friend Word word_mul(const Word&, const Word&);
  friend Word word_inv(const Word&);

  unsigned rank_ = 0;
  std::vector<std::int32_t> letters_;
};

/// Free reduction of a raw letter sequence. Throws std::invalid_argument on a
/// zero letter or an index outside the basis.
Word word_reduce(std::span<const std::int32_t> raw, const Basis& basis);

/// Concatenate-and-reduce. Throws std::invalid_argument on basis mismatch.
Word word_mul(const Word& u, const Word& v);

Word word_inv(const Word& w);

/// Default budget for automorphism image lengths. Compositions whose final
/// images exceed the budget throw ImageOverflowError; see aut_compose.
inline constexpr std::size_t kDefaultMaxImageLetters = 64;

/// An endomorphism of the free group given by generator images; the library
/// only ever constructs automorphisms but does not verify invertibility.
class FreeAut {
 public:
  FreeAut(const Basis& basis, std::vector<Word> images);

  static FreeAut identity(const Basis& basis);

  unsigned rank() const { return static_cast<unsigned>(images_.size()); }
  Basis basis() const { return Basis(rank()); }

  /// Image of generator a_i, 1-based.
  const Word& image(unsigned i) const;
  const std::vector<Word>& images() const { return images_; }

  /// Apply to an arbitrary word. max_letters bounds the result length.
  Word apply(const Word& w, std::size_t max_letters = kDefaultMaxImageLetters) const;

  bool is_identity() const;

  bool operator==(const FreeAut&) const = default;
  auto operator<=>(const FreeAut&) const = default;

 private:
  std::vector<Word> images_;
};

/// Composition f∘g: (f*g)(x) = f(g(x)). Words of generators listed
/// left-to-right therefore apply right-to-left, matching the convention of
/// every identity this library certifies. Throws ImageOverflowError if any
/// image of the result exceeds max_letters.
FreeAut aut_compose(const FreeAut& f, const FreeAut& g,
                    std::size_t max_letters = kDefaultMaxImageLetters);

inline FreeAut operator*(const FreeAut& f, const FreeAut& g) { return aut_compose(f, g); }

/// Least k in [1, cap] with f^k = id, or nullopt ("unbounded within cap").
/// Internally raises the image budget to max(1024, 2*cap+2) so that
/// polynomially growing automorphisms (e.g. transvections) report nullopt
/// instead of overflowing.
std::optional<unsigned> aut_order(const FreeAut& f, unsigned cap);

std::size_t hash_value(const FreeAut& f);

/// Induced matrix on H_1(F_n) = Z^n, column convention: column j holds the
/// exponent sums of f(a_j), so abelianize(f*g) = abelianize(f) * abelianize(g).
/// Asserts det = +-1 (an automorphism must induce one of GL(n,Z)).
intmat::IntMatrix abelianize(const FreeAut& f);

/// The named generators of the three certified subgroup families.
///   rho i j : a_i -> a_i a_j                     (transvection)
///   eps i   : a_i -> a_i^{-1}                    (inversion)
///   perm    : a_i -> a_{p(i)}                    (basis permutation)
///   theta   = rho12 . eps2        (right-to-left composition throughout)
///   tau     = (a2 a3) . eps1
///   eta     = (a1 a2) . eps1 . eps2
///   alpha   = eps_n . (a_n a_{n-1})
struct NamedGenerator {
  enum class Kind { kRho, kEps, kPerm, kTheta, kTau, kEta, kAlpha };

  Kind kind;
  unsigned i = 0;               // rho/eps
  unsigned j = 0;               // rho
  std::vector<unsigned> perm;   // perm: full 1-based image table, perm[k-1] = p(k)

  static NamedGenerator rho(unsigned i, unsigned j);
  static NamedGenerator eps(unsigned i);
  static NamedGenerator permutation(std::vector<unsigned> images);
  static NamedGenerator transposition(unsigned i, unsigned j, unsigned n);
  static NamedGenerator theta() { return {Kind::kTheta, 0, 0, {}}; }
  static NamedGenerator tau() { return {Kind::kTau, 0, 0, {}}; }
  static NamedGenerator eta() { return {Kind::kEta, 0, 0, {}}; }
  static NamedGenerator alpha() { return {Kind::kAlpha, 0, 0, {}}; }

  std::string str() const;
};

/// Realize a named generator at a given rank. Throws std::invalid_argument if
/// the rank is too small (rho/eps indices out of range, theta/tau/eta need
/// rank >= 3, alpha needs rank >= 2) or the permutation table is not a
/// bijection of the right size.
FreeAut aut_from_generator(const NamedGenerator& g, const Basis& basis);

/// Explicit inverse of a named generator (rho^{-1}: a_i -> a_i a_j^{-1};
/// involutions are their own inverses; alpha^{-1} = alpha^3).
FreeAut aut_generator_inverse(const NamedGenerator& g, const Basis& basis);

}  // namespace tricrit::freegroup
