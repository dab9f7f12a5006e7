#pragma once

#include "rly/matrix.hpp"

#include <optional>
#include <utility>

namespace rly {

/// Basis e_i ^ e_j (i < j) of the exterior square, lexicographic.
std::vector<std::pair<std::size_t, std::size_t>> wedge_basis(std::size_t n);
std::size_t wedge_count(std::size_t n);
/// Index of e_i ^ e_j for i < j.
std::size_t wedge_index(std::size_t n, std::size_t i, std::size_t j);
/// Coordinates of x ^ y in the wedge basis.
Vec wedge_coords(std::span<const Scalar> x, std::span<const Scalar> y);

/// Size data of the Yamaguti cochain space of degree p with an n-dimensional
/// algebra and an m-dimensional module.
///
/// Coordinates are laid out in blocks of m (one block per input tuple, the
/// output index runs fastest):
///   p = 1:     block l                      for h(e_l)
///   p = k + 1: block lex(w_1..w_k)          for f(W_1, ..., W_k)
///              then W^k + lex(w_1..w_k, z)  for g(W_1, ..., W_k, e_z)
/// where W = number of wedges and lex is row-major.
struct CochainShape {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t degree = 1;

  std::size_t wedge_arity() const { return degree - 1; }
  std::size_t f_blocks() const;
  std::size_t g_blocks() const;
  std::size_t blocks() const { return degree == 1 ? n : f_blocks() + g_blocks(); }
  std::size_t dim() const { return blocks() * m; }

  friend bool operator==(const CochainShape&, const CochainShape&) = default;
};

/// Element of C^p_LY(L, V) (and, with the same coordinates, of C^p_RO).
class Cochain {
 public:
  Cochain() = default;
  Cochain(CochainShape shape, Vec coords);

  static Cochain zero(CochainShape shape) { return Cochain(shape, zero_vec(shape.dim())); }
  /// Degree 1 from the m x n matrix of h: L -> V.
  static Cochain from_map(const Matrix& h);
  /// Degree 2 from full tensors f (n,n,m) and g (n,n,n,m), both antisymmetric in
  /// the first two slots. Throws InvalidInput otherwise.
  static Cochain from_bilinear(const Tensor& f, const Tensor& g);

  const CochainShape& shape() const { return shape_; }
  std::size_t degree() const { return shape_.degree; }
  const Vec& coords() const { return coords_; }
  bool is_zero() const { return rly::is_zero(coords_); }

  /// Degree 1 only.
  Matrix as_map() const;
  /// Degree 2 only: the antisymmetric extensions to all basis pairs.
  Tensor full_f() const;
  Tensor full_g() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  CochainShape shape_;
  Vec coords_;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Scalar& c, const Cochain& a);

/// Element of C^p_RLY = C^p_LY + C^{p-1}_RO (no tail in degree 1).
struct RlyCochain {
  Cochain top;
  std::optional<Cochain> tail;

  std::size_t degree() const { return top.degree(); }
  Vec coords() const;

  static std::size_t dim(std::size_t n, std::size_t m, std::size_t p);
  static RlyCochain zero(std::size_t n, std::size_t m, std::size_t p);
  static RlyCochain from_coords(std::size_t n, std::size_t m, std::size_t p, std::span<const Scalar> v);

  friend bool operator==(const RlyCochain&, const RlyCochain&) = default;
};

}  // namespace rly
