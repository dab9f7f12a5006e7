#pragma once

#include "rly/ly_algebra.hpp"

namespace rly {

/// Linear map T with T e_j = sum_i matrix(i,j) e_i, and its weight.
struct ReynoldsOperator {
  Matrix matrix;
  Scalar weight;

  Vec apply(std::span<const Scalar> x) const { return matrix.apply(x); }
  friend bool operator==(const ReynoldsOperator&, const ReynoldsOperator&) = default;
};

namespace axiom {
inline constexpr const char* kReynoldsBinary = "reynolds_binary";
inline constexpr const char* kReynoldsTernary = "reynolds_ternary";
}  // namespace axiom

/// reynolds_binary:  [Tx,Ty] = T([Tx,y] + [x,Ty] + w[Tx,Ty])               tuple (x,y)
/// reynolds_ternary: {Tx,Ty,Tz} = T({x,Ty,Tz} + {Tx,y,Tz} + {Tx,Ty,z} + 2w{Tx,Ty,Tz})
///                                                                          tuple (x,y,z)
AxiomReport verify_reynolds(const LyAlgebra& a, const ReynoldsOperator& r);

/// (c T, w / c). Throws ZeroScale for c = 0.
ReynoldsOperator scale_weight(const ReynoldsOperator& r, const Scalar& c);

/// Brackets of L_T:
///   [x,y]_T   = [Tx,y] + [x,Ty] + w[Tx,Ty]
///   {x,y,z}_T = {x,Ty,Tz} + {Tx,y,Tz} + {Tx,Ty,z} + 2w{Tx,Ty,Tz}
/// Throws InvalidReynolds if r fails verify_reynolds, and InternalInconsistency
/// if the result fails the axioms or T is not a morphism L_T -> L.
LyAlgebra descendant_algebra(const LyAlgebra& a, const ReynoldsOperator& r);

/// Same brackets without any validation.
LyAlgebra descendant_brackets(const LyAlgebra& a, const ReynoldsOperator& r);

/// derivation_binary:  D[x,y] = [Dx,y] + [x,Dy]
/// derivation_ternary: D{x,y,z} = {Dx,y,z} + {x,Dy,z} + {x,y,Dz}
AxiomReport derivation_check(const LyAlgebra& a, const Matrix& d);

/// Basis of the derivation algebra, as n x n matrices.
std::vector<Matrix> derivation_space(const LyAlgebra& a);

/// (D - w Id)^{-1} with weight w. Throws NotDerivation or SingularMatrix.
ReynoldsOperator reynolds_from_derivation(const LyAlgebra& a, const Matrix& d, const Scalar& weight);

}  // namespace rly
