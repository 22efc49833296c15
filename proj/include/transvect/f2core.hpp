#pragma once

// Linear algebra over GF(2): bit-packed vectors, alternating bilinear forms,
// Gaussian elimination, and symplectic transvections.
//
// Bit convention used everywhere: coordinate c (1-based in prose and in the
// instance file format) is bit c-1 of the word, so the leftmost character of
// a bitstring is coordinate 1.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace transvect {

inline constexpr int kMaxDim = 64;

inline std::uint64_t low_mask(int dim) {
  return dim >= 64 ? ~0ull : ((std::uint64_t{1} << dim) - 1);
}

inline int parity(std::uint64_t x) { return std::popcount(x) & 1; }

// ---------------------------------------------------------------------------
// F2Vector

struct F2Vector {
  std::uint64_t bits = 0;
  int dim = 0;

  F2Vector() = default;
  F2Vector(int dim_, std::uint64_t bits_);

  bool bit(int i) const { return (bits >> i) & 1; }  // i is 0-based
  int weight() const { return std::popcount(bits); }
  bool is_zero() const { return bits == 0; }

  friend F2Vector operator+(const F2Vector& a, const F2Vector& b);
  friend bool operator==(const F2Vector&, const F2Vector&) = default;
  friend std::strong_ordering operator<=>(const F2Vector& a, const F2Vector& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.bits <=> b.bits;
  }
};

F2Vector zero_vector(int dim);
F2Vector basis_vector(int dim, int index);  // index is 0-based
F2Vector parse_vector(const std::string& s);
std::string to_bitstring(const F2Vector& v);

// ---------------------------------------------------------------------------
// Gaussian elimination over GF(2)
//
// Rows are bit words; column j of a row is bit j.

int f2_rank(std::vector<std::uint64_t> rows);

// Basis of the left kernel {x : x*A = 0}; x is packed over row indices of A.
// Requires rows.size() <= 64.
std::vector<std::uint64_t> f2_left_kernel(const std::vector<std::uint64_t>& rows);

struct F2Solve {
  bool consistent = false;
  bool unique = false;
  std::uint64_t solution = 0;  // one solution (free variables zero) if consistent
};

// Solve parity(rows[i] & x) == bit i of rhs, for x on ncols columns.
F2Solve f2_solve(std::vector<std::uint64_t> rows, std::uint64_t rhs, int ncols);

// ---------------------------------------------------------------------------
// BitMatrix
//
// Row i is the image of basis vector e_i; vectors act as rows, so applying a
// matrix XORs together the rows selected by the vector's bits, and M*N means
// "apply M, then N".

struct BitMatrix {
  int dim = 0;
  std::vector<std::uint64_t> rows;

  BitMatrix() = default;
  BitMatrix(int dim_, std::vector<std::uint64_t> rows_);

  static BitMatrix identity(int dim);

  std::uint64_t apply_bits(std::uint64_t v) const;
  F2Vector apply(const F2Vector& v) const;
  bool is_identity() const;
  bool is_invertible() const;
  // rank of M - I; 1 for a transvection with direction outside the radical
  int displacement_rank() const;

  // Row words concatenated into one 64-bit key; requires dim <= 8.
  std::uint64_t encode() const;
  static BitMatrix decode(int dim, std::uint64_t key);

  friend BitMatrix operator*(const BitMatrix& m, const BitMatrix& n);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

// ---------------------------------------------------------------------------
// SymplecticSpace: (dim, Gram matrix) of an alternating bilinear form.
// The form may be degenerate; rad V is first-class.

class SymplecticSpace {
 public:
  SymplecticSpace(int dim, std::vector<std::uint64_t> gram_rows);

  // B(e_i, e_j) = 1 iff |i-j| = 1 (the form of the counterexample family).
  static SymplecticSpace path_form(int dim);
  // Direct sum of hyperbolic planes on coordinate pairs (1,2), (3,4), ...;
  // a trailing unpaired coordinate (odd dim) is radical.
  static SymplecticSpace hyperbolic_form(int dim);
  static SymplecticSpace random_alternating(int dim, std::mt19937_64& rng);

  int dim() const { return dim_; }
  std::uint64_t gram_row(int i) const { return gram_[i]; }
  const std::vector<std::uint64_t>& gram() const { return gram_; }

  int form(const F2Vector& u, const F2Vector& v) const;
  // The functional B(u, -) as a bit row: XOR of the Gram rows selected by u.
  std::uint64_t row_action(const F2Vector& u) const;

  std::vector<F2Vector> radical_basis() const;
  int radical_dim() const;
  bool in_radical(const F2Vector& v) const;

  F2Vector transvect(const F2Vector& alpha, const F2Vector& beta) const;
  BitMatrix transvection_matrix(const F2Vector& alpha) const;

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

 private:
  int dim_;
  std::vector<std::uint64_t> gram_;
};

// ---------------------------------------------------------------------------
// VectorSet: ordered, duplicate-free set of vectors of one width.
// Zero is rejected unless allow_zero is set (it is radical and its
// transvection is the identity).

class VectorSet {
 public:
  VectorSet(int dim, std::vector<F2Vector> members, bool allow_zero = false);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<F2Vector>& members() const { return members_; }
  const F2Vector& operator[](int i) const { return members_[i]; }
  bool contains(const F2Vector& v) const;
  int index_of(const F2Vector& v) const;  // -1 if absent

  // Canonical form: member bit words, sorted ascending.
  std::vector<std::uint64_t> sorted_encodings() const;

 private:
  int dim_;
  std::vector<F2Vector> members_;
};

int rank(const VectorSet& s);
bool is_independent(const VectorSet& s);
bool spans(const VectorSet& s);

}  // namespace transvect
