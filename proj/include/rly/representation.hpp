#pragma once

#include "rly/reynolds.hpp"

#include <optional>
#include <utility>

namespace rly {

/// Representation (V; rho, theta) of an n-dimensional LY algebra on an
/// m-dimensional space V, optionally carrying a module operator T_V whose
/// weight is that of the algebra operator it is paired with.
class Representation {
 public:
  Representation() = default;
  Representation(std::size_t algebra_dim, std::size_t module_dim, std::vector<Matrix> rho,
                 std::vector<Matrix> theta, std::optional<Matrix> module_op = std::nullopt);

  static Representation zero(std::size_t algebra_dim, std::size_t module_dim,
                             std::optional<Matrix> module_op = std::nullopt);

  std::size_t algebra_dim() const { return n_; }
  std::size_t module_dim() const { return m_; }
  const Matrix& rho(std::size_t i) const { return rho_.at(i); }
  const Matrix& theta(std::size_t i, std::size_t j) const { return theta_.at(i * n_ + j); }
  const std::vector<Matrix>& rho_all() const { return rho_; }
  const std::vector<Matrix>& theta_all() const { return theta_; }
  const std::optional<Matrix>& module_op() const { return module_op_; }
  /// Throws MissingModuleOp.
  const Matrix& require_module_op() const;

  Representation with_module_op(std::optional<Matrix> op) const;

  /// Linear extensions to arbitrary algebra elements.
  Matrix rho_of(std::span<const Scalar> x) const;
  Matrix theta_of(std::span<const Scalar> x, std::span<const Scalar> y) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Matrix> rho_;
  std::vector<Matrix> theta_;  // row-major n x n
  std::optional<Matrix> module_op_;
};

/// D(x,y) = theta(y,x) - theta(x,y) - rho([x,y]) + rho(x)rho(y) - rho(y)rho(x)
/// at x = e_i, y = e_j. Throws IndexOutOfRange.
Matrix d_map(const LyAlgebra& a, const Representation& rep, std::size_t i, std::size_t j);
Matrix d_of(const LyAlgebra& a, const Representation& rep, std::span<const Scalar> x, std::span<const Scalar> y);

/// All D(e_i, e_j), row-major.
std::vector<Matrix> d_table(const LyAlgebra& a, const Representation& rep);

namespace axiom {
inline constexpr const char* kThetaBracketFirst = "theta_bracket_first";
inline constexpr const char* kDRhoCommutator = "d_rho_commutator";
inline constexpr const char* kThetaBracketSecond = "theta_bracket_second";
inline constexpr const char* kDThetaCommutator = "d_theta_commutator";
inline constexpr const char* kThetaTernary = "theta_ternary";
inline constexpr const char* kDCyclic = "d_cyclic";
inline constexpr const char* kDDCommutator = "d_d_commutator";
inline constexpr const char* kModuleOpRho = "module_op_rho";
inline constexpr const char* kModuleOpTheta = "module_op_theta";
inline constexpr const char* kModuleOpD = "module_op_d";
}  // namespace axiom

/// theta_bracket_first   theta([x,y],a) = theta(x,a)rho(y) - theta(y,a)rho(x)            (x,y,a)
/// d_rho_commutator      D(a,b)rho(x) = rho(x)D(a,b) + rho({a,b,x})                       (a,b,x)
/// theta_bracket_second  theta(x,[a,b]) = rho(a)theta(x,b) - rho(b)theta(x,a)             (x,a,b)
/// d_theta_commutator    D(a,b)theta(x,y) = theta(x,y)D(a,b) + theta({a,b,x},y) + theta(x,{a,b,y})
///                                                                                         (a,b,x,y)
/// theta_ternary         theta(a,{x,y,z}) = theta(y,z)theta(a,x) - theta(x,z)theta(a,y) + D(x,y)theta(a,z)
///                                                                                         (a,x,y,z)
/// Consequences, flagged as internal inconsistencies when they fail while the
/// five above pass:
/// d_cyclic              D([x,y],z) + D([y,z],x) + D([z,x],y) = 0                          (x,y,z)
/// d_d_commutator        D(a,b)D(x,y) = D(x,y)D(a,b) + D({a,b,x},y) + D(x,{a,b,y})        (a,b,x,y)
AxiomReport verify_rep(const LyAlgebra& a, const Representation& rep);

/// With w the weight of r and T_V the module operator:
/// module_op_rho    rho(Tx)T_V = T_V(rho(Tx) + rho(x)T_V + w rho(Tx)T_V)                          (x)
/// module_op_theta  theta(Tx,Ty)T_V = T_V(theta(Tx,Ty) + theta(Tx,y)T_V + theta(x,Ty)T_V + 2w theta(Tx,Ty)T_V)
///                                                                                                 (x,y)
/// module_op_d      the same identity for D (consequence of module_op_theta)                     (x,y)
/// Throws MissingModuleOp, DimMismatch.
AxiomReport verify_reynolds_rep(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep);

/// rho(x) = ad x, theta(x,y) = (z -> {z,x,y}); module operator T when r is given.
Representation adjoint_rep(const LyAlgebra& a, const std::optional<ReynoldsOperator>& r = std::nullopt);

/// (V; rho_T, theta_T) over the descendant algebra, same module operator:
///   rho_T(x)     = rho(Tx) - T_V(w rho(Tx) + rho(x))
///   theta_T(x,y) = theta(Tx,Ty) - T_V(2w theta(Tx,Ty) + theta(Tx,y) + theta(x,Ty))
/// Throws InvalidInput unless rep passes verify_rep and verify_reynolds_rep.
Representation induced_rep(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep);
/// Same maps without validation.
Representation induced_maps(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep);

/// Algebra on L + V (L coordinates first) with
///   [x+u, y+v]     = [x,y] + rho(x)v - rho(y)u + nu(x,y)
///   {x+u,y+v,z+w}  = {x,y,z} + theta(y,z)u - theta(x,z)v + D(x,y)w + psi(x,y,z)
/// and operator T(x+u) = Tx + chi(x) + T_V u. nu is n x n x m, psi n x n x n x m,
/// chi an m x n matrix. No validation beyond shapes.
std::pair<LyAlgebra, ReynoldsOperator> twisted_sum(const LyAlgebra& a, const ReynoldsOperator& r,
                                                   const Representation& rep, const Tensor& nu, const Tensor& psi,
                                                   const Matrix& chi);

/// twisted_sum with zero twist. Throws InvalidInput unless rep passes both
/// verifiers.
std::pair<LyAlgebra, ReynoldsOperator> semidirect_product(const LyAlgebra& a, const ReynoldsOperator& r,
                                                          const Representation& rep);

/// Block-diagonal sum. Throws MixedAlgebras when algebra dimensions or the
/// presence of module operators differ, InvalidInput for an empty list.
Representation direct_sum_rep(const std::vector<Representation>& reps);

/// Transport along an invertible change of basis P of V (columns are the
/// new basis vectors): every map M becomes P^{-1} M P.
Representation conjugate_rep(const Representation& rep, const Matrix& p);

}  // namespace rly
