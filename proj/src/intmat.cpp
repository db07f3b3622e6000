#include "tricrit/intmat.hpp"

#include <stdexcept>

#include "tricrit/hashing.hpp"

namespace tricrit::intmat {

IntMatrix::IntMatrix(unsigned n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
}

IntMatrix IntMatrix::identity(unsigned n) {
  IntMatrix m(n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t IntMatrix::index(unsigned r, unsigned c) const {
  if (r >= n_ || c >= n_) throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(r) * n_ + c;
}

bool IntMatrix::operator<(const IntMatrix& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] != other.entries_[k]) return entries_[k] < other.entries_[k];
  return false;
}

std::string IntMatrix::str() const {
  std::string out;
  for (unsigned r = 0; r < n_; ++r) {
    out += r == 0 ? "[" : " ";
    for (unsigned c = 0; c < n_; ++c) {
      if (c) out += ' ';
      out += at(r, c).str();
    }
    out += r + 1 == n_ ? "]" : "\n";
  }
  return out;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  const unsigned n = a.dim();
  IntMatrix out(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Int mat_det(const IntMatrix& m) {
  const unsigned n = m.dim();
  IntMatrix w = m;  // working copy, Bareiss keeps all entries integral
  Int prev = 1;
  int sign = 1;
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      unsigned pivot = k + 1;
      while (pivot < n && w.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (unsigned c = k; c < n; ++c) std::swap(w.at(k, c), w.at(pivot, c));
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n; ++i)
      for (unsigned j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

bool is_monomial(const IntMatrix& m) {
  const unsigned n = m.dim();
  std::vector<bool> col_used(n, false);
  for (unsigned r = 0; r < n; ++r) {
    unsigned hits = 0;
    for (unsigned c = 0; c < n; ++c) {
      const Int& v = m.at(r, c);
      if (v == 0) continue;
      if (v != 1 && v != -1) return false;
      if (col_used[c]) return false;
      col_used[c] = true;
      ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

IntMatrix det_twist(const IntMatrix& g) {
  Int d = mat_det(g);
  if (d != 1 && d != -1)
    throw std::invalid_argument("det_twist needs det = +-1, got " + d.str());
  if (d == 1) return g;
  IntMatrix out = g;
  for (unsigned r = 0; r < g.dim(); ++r)
    for (unsigned c = 0; c < g.dim(); ++c) out.at(r, c) = -out.at(r, c);
  return out;
}

IntMatrix elementary(unsigned n, unsigned i, unsigned j, const Int& k) {
  if (i == 0 || j == 0 || i > n || j > n || i == j)
    throw std::invalid_argument("elementary needs distinct 1-based indices within dimension");
  IntMatrix m = IntMatrix::identity(n);
  m.at(i - 1, j - 1) = k;
  return m;
}

IntMatrix embed(const IntMatrix& m, unsigned n) {
  if (m.dim() > n) throw std::invalid_argument("embed target dimension too small");
  IntMatrix out = IntMatrix::identity(n);
  for (unsigned r = 0; r < m.dim(); ++r)
    for (unsigned c = 0; c < m.dim(); ++c) out.at(r, c) = m.at(r, c);
  return out;
}

IntMatrix finite_order_inverse(const IntMatrix& m, unsigned cap) {
  const IntMatrix id = IntMatrix::identity(m.dim());
  IntMatrix prev = id;
  IntMatrix power = m;
  for (unsigned k = 1; k <= cap; ++k) {
    if (power == id) return prev;
    prev = power;
    power = mat_mul(power, m);
  }
  throw std::invalid_argument("matrix has no order within cap " + std::to_string(cap));
}

std::size_t hash_value(const IntMatrix& m) {
  Fnv1a h;
  h.feed(m.dim());
  for (unsigned r = 0; r < m.dim(); ++r)
    for (unsigned c = 0; c < m.dim(); ++c) {
      const Int& v = m.at(r, c);
      // Entries in this codebase are tiny; fold the low 64 bits plus sign.
      Int mag = v < 0 ? Int(-v) : v;
      h.feed_byte(v < 0 ? 1 : 0);
      h.feed((mag & 0xffffffffffffffffull).convert_to<std::uint64_t>());
    }
  return h.digest();
}

}  // namespace tricrit::intmat
