#pragma once

#include "rly/matrix.hpp"
#include "rly/report.hpp"

#include <string>
#include <vector>

namespace rly {

/// Finite-dimensional Lie-Yamaguti algebra given by structure constants:
///   [e_i, e_j]      = sum_k binary(i,j,k) e_k
///   {e_i, e_j, e_k} = sum_l ternary(i,j,k,l) e_l
/// Antisymmetry of both brackets in their first two slots is enforced at
/// construction (InvalidInput otherwise); the remaining axioms are checked by
/// verify_ly_axioms.
class LyAlgebra {
 public:
  LyAlgebra() : LyAlgebra(0, Tensor({0, 0, 0}), Tensor({0, 0, 0, 0})) {}
  LyAlgebra(std::size_t dim, Tensor binary, Tensor ternary, std::vector<std::string> labels = {});

  static LyAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Tensor& binary() const { return binary_; }
  const Tensor& ternary() const { return ternary_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_abelian() const { return binary_.is_zero() && ternary_.is_zero(); }

  Vec bracket2(std::span<const Scalar> x, std::span<const Scalar> y) const;
  Vec bracket3(std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const;

  /// Structure-constant fibers, i.e. brackets of basis vectors.
  Vec basis_bracket2(std::size_t i, std::size_t j) const;
  Vec basis_bracket3(std::size_t i, std::size_t j, std::size_t k) const;

  friend bool operator==(const LyAlgebra& a, const LyAlgebra& b) {
    return a.dim_ == b.dim_ && a.binary_ == b.binary_ && a.ternary_ == b.ternary_;
  }

 private:
  std::size_t dim_;
  Tensor binary_;
  Tensor ternary_;
  std::vector<std::string> labels_;
};

/// Check names, in report order.
namespace axiom {
inline constexpr const char* kBinaryAntisymmetry = "binary_antisymmetry";
inline constexpr const char* kTernaryAntisymmetry = "ternary_antisymmetry";
inline constexpr const char* kCyclicJacobi = "cyclic_jacobi";
inline constexpr const char* kCyclicTernary = "cyclic_ternary";
inline constexpr const char* kTernaryDerivesBinary = "ternary_derives_binary";
inline constexpr const char* kTernaryDerivesTernary = "ternary_derives_ternary";
}  // namespace axiom

/// Evaluates the six Lie-Yamaguti axioms on all basis tuples:
///   binary_antisymmetry      [x,y] = -[y,x]                       tuple (x,y)
///   ternary_antisymmetry     {x,y,z} = -{y,x,z}                   tuple (x,y,z)
///   cyclic_jacobi            cyc [[x,y],z] + cyc {x,y,z} = 0      tuple (x,y,z)
///   cyclic_ternary           cyc {[x,y],z,a} = 0                  tuple (x,y,z,a)
///   ternary_derives_binary   {a,b,[x,y]} = [{a,b,x},y] + [x,{a,b,y}]   tuple (a,b,x,y)
///   ternary_derives_ternary  {a,b,{x,y,z}} = {{a,b,x},y,z} + {x,{a,b,y},z} + {x,y,{a,b,z}}
///                                                                 tuple (a,b,x,y,z)
AxiomReport verify_ly_axioms(const LyAlgebra& a);

/// Checks that phi: source -> target preserves both brackets.
AxiomReport verify_morphism(const LyAlgebra& source, const LyAlgebra& target, const Matrix& phi);

/// {x,y,z} = [[x,y],z]. Throws NotLieAlgebra (antisymmetry or Jacobi witness).
LyAlgebra from_lie_algebra(const Tensor& lie_binary);

/// [x,y] = x*y - y*x, {x,y,z} = -(x*y)*z for a left Leibniz algebra
/// x*(y*z) = (x*y)*z + y*(x*z). Throws NotLeibniz with a witness.
LyAlgebra from_leibniz(const Tensor& star);

/// Lie-Yamaguti structure on M for a reductive split L = N + M with
/// [N,N] in N and [N,M] in M:
///   [x,y]_M = pi_M [x,y],  {x,y,z}_M = [pi_N [x,y], z].
/// The result's basis is `m_indices` in the given order.
LyAlgebra from_reductive_pair(const Tensor& lie_binary, const std::vector<std::size_t>& n_indices,
                              const std::vector<std::size_t>& m_indices);

/// Transports the structure along an invertible change of basis P whose
/// columns are the new basis vectors in old coordinates.
LyAlgebra change_basis(const LyAlgebra& a, const Matrix& p);

namespace examples {

/// Basis e1, e2 with [e1,e2] = e1 and {e1,e2,e2} = e1 (plus antisymmetric images).
LyAlgebra two_dim();
/// sl2 in the basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
Tensor sl2_lie_binary();
LyAlgebra sl2();
/// Three-dimensional non-Lie left Leibniz product
///   e1*e3 = -e1, e3*e1 = e1, e3*e2 = -e2,
/// whose induced ternary bracket is nonzero ({e3,e1,e3} = e1).
Tensor leibniz_sample();

}  // namespace examples

}  // namespace rly
