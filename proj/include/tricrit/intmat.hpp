#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tricrit::intmat {

using Int = boost::multiprecision::cpp_int;

/// Dense square integer matrix with exact arbitrary-precision entries.
/// Row-major, 0-based accessors; the 1-based convention of elementary() is
/// called out there.
class IntMatrix {
 public:
  explicit IntMatrix(unsigned n);  // zero matrix
  static IntMatrix identity(unsigned n);

  unsigned dim() const { return n_; }
  Int& at(unsigned r, unsigned c) { return entries_[index(r, c)]; }
  const Int& at(unsigned r, unsigned c) const { return entries_[index(r, c)]; }

  bool operator==(const IntMatrix&) const = default;
  bool operator<(const IntMatrix& other) const;

  std::string str() const;

 private:
  std::size_t index(unsigned r, unsigned c) const;
  unsigned n_;
  std::vector<Int> entries_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return mat_mul(a, b); }

/// Exact determinant via Bareiss fraction-free elimination.
Int mat_det(const IntMatrix& m);

/// Exactly one nonzero entry in every row and column, each +-1.
bool is_monomial(const IntMatrix& m);

/// g -> det(g) * g. Throws std::invalid_argument unless det(g) is +-1.
/// For odd dimension this is a homomorphism GL(n,Z) -> SL(n,Z).
IntMatrix det_twist(const IntMatrix& g);

/// E_ij(k): identity plus k in row i, column j (1-based, i != j).
IntMatrix elementary(unsigned n, unsigned i, unsigned j, const Int& k);

/// Copy m into the top-left block of the n x n identity.
IntMatrix embed(const IntMatrix& m, unsigned n);

/// Inverse of a finite-order matrix, found as m^(k-1) with m^k = I, k <= cap.
/// Throws std::invalid_argument if no power within cap is the identity.
IntMatrix finite_order_inverse(const IntMatrix& m, unsigned cap = 64);

std::size_t hash_value(const IntMatrix& m);

}  // namespace tricrit::intmat
