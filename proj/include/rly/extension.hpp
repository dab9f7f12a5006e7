#pragma once

#include "rly/cohomology.hpp"

namespace rly {

/// ((nu, psi), chi): nu (n,n,m) and psi (n,n,n,m) antisymmetric in the first
/// two slots, chi an m x n matrix.
struct ExtensionCocycle {
  Tensor nu;
  Tensor psi;
  Matrix chi;

  static ExtensionCocycle zero(std::size_t n, std::size_t m);
  /// Throws InvalidInput for non-antisymmetric parts.
  RlyCochain to_cochain() const;
  static ExtensionCocycle from_cochain(const RlyCochain& c);

  friend bool operator==(const ExtensionCocycle&, const ExtensionCocycle&) = default;
};

/// 0 -> V -> L^ -> L -> 0 with operators. `inject` is N x m, `project` n x N.
struct AbelianExtension {
  LyAlgebra total;
  ReynoldsOperator op;
  Matrix inject;
  Matrix project;

  std::size_t base_dim() const { return project.rows(); }
  std::size_t module_dim() const { return inject.cols(); }
  /// inject = [0; I] and project = [I 0].
  bool is_block_form() const;

  friend bool operator==(const AbelianExtension&, const AbelianExtension&) = default;
};

/// Linear map s: L -> L^ with project s = Id.
struct Section {
  Matrix map;
};

/// Checks the total algebra and operator, exactness of the sequence, that V is
/// an abelian ideal, and that both operator squares commute over (A, R).
AxiomReport verify_extension(const LyAlgebra& a, const ReynoldsOperator& r, const AbelianExtension& e);

/// Block algebra on L + V with brackets twisted by the cocycle and operator
/// T(x+u) = Tx + chi(x) + T_V u. No cocycle check.
AbelianExtension assemble_extension(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep,
                                    const ExtensionCocycle& c);

/// assemble_extension after checking that c is a degree-2 cocycle of the
/// mapping-cone complex (NotCocycle) satisfying the linearized cyclic axioms
/// (NotAdmissible). The result is re-verified (InternalInconsistency).
AbelianExtension build_extension(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep,
                                 const ExtensionCocycle& c);

/// s(x) = (x, 0) on a block-form extension.
Section canonical_section(const AbelianExtension& e);
/// s(x) = (x, iota(x)) on a block-form extension, iota m x n.
Section shifted_section(const AbelianExtension& e, const Matrix& iota);

/// Transports e to block form along the basis [s | inject].
AbelianExtension normalize(const AbelianExtension& e, const Section& s);

/// rho(x)u = [s(x), i(u)], theta(x,y)u = {i(u), s(x), s(y)}, T_V = restriction
/// of the total operator. Throws NotSection, IncompatibleData.
Representation extract_rep(const AbelianExtension& e, const Section& s);

/// nu(x,y) = [sx,sy] - s[x,y], psi(x,y,z) = {sx,sy,sz} - s{x,y,z},
/// chi(x) = T^ s(x) - s(Tx), read in V coordinates. Throws NotSection.
ExtensionCocycle extract_cocycle(const AbelianExtension& e, const Section& s);

struct ExtensionIsomorphism {
  Matrix iota;  // m x n, with c1 = c2 + d^1(iota)
  Matrix map;   // x + u -> x + iota(x) + u
};

/// phi_iota from e1 to e2 when their canonical cocycles are cohomologous,
/// verified as an isomorphism of Reynolds LY algebras that is the identity on
/// V and covers the identity on L; nullopt otherwise. Throws IncompatibleData
/// when the extensions are not in block form over (A, R, Rep).
std::optional<ExtensionIsomorphism> extensions_equivalent(const LyAlgebra& a, const ReynoldsOperator& r,
                                                          const Representation& rep, const AbelianExtension& e1,
                                                          const AbelianExtension& e2);

}  // namespace rly
