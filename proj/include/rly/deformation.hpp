#pragma once

#include "rly/cohomology.hpp"

namespace rly {

/// Truncation of a formal deformation (F_t, G_t, T_t) at order N:
/// F_t = sum F_i t^i with F_0 the bracket, likewise G_t and T_t.
struct TruncatedDeformation {
  std::vector<Tensor> F;  // (n,n,n) each
  std::vector<Tensor> G;  // (n,n,n,n) each
  std::vector<Matrix> T;  // n x n each

  std::size_t order() const { return F.empty() ? 0 : F.size() - 1; }

  /// F_0, G_0, T_0 from (A, R); all higher terms zero.
  static TruncatedDeformation constant(const LyAlgebra& a, const ReynoldsOperator& r, std::size_t order);
  /// Order-1 deformation with ((F_1, G_1), T_1) read from a degree-2 RLY cochain
  /// with adjoint coefficients.
  static TruncatedDeformation first_order(const LyAlgebra& a, const ReynoldsOperator& r, const RlyCochain& c);

  friend bool operator==(const TruncatedDeformation&, const TruncatedDeformation&) = default;
};

/// phi_t = sum phi_i t^i with phi_0 = Id.
struct FormalIsomorphism {
  std::vector<Matrix> phi;

  std::size_t order() const { return phi.empty() ? 0 : phi.size() - 1; }

  static FormalIsomorphism identity(std::size_t n, std::size_t order);
  /// Id + phi1 t, higher terms zero.
  static FormalIsomorphism linear(const Matrix& phi1, std::size_t order);
  /// Inverse series modulo t^{order+1}.
  FormalIsomorphism inverse() const;

  friend bool operator==(const FormalIsomorphism&, const FormalIsomorphism&) = default;
};

/// Per-order verification. orders[n] holds the coefficient-of-t^n identities,
/// named after the undeformed axioms they reduce to at n = 0.
struct OrderReport {
  std::vector<AxiomReport> orders;

  bool passed() const;
  bool passed_through(std::size_t n) const;
  struct Failure {
    std::size_t order;
    const CheckResult* check;
  };
  std::optional<Failure> first_failure() const;
};

/// Coefficient of t^n, for every n <= order, of:
///   binary/ternary antisymmetry, the four LY compatibility identities, and
///   the two Reynolds identities (multi-index sums over all orders adding to n).
/// Order 0 also checks that the base terms are the undeformed data.
/// Throws ShapeMismatch.
OrderReport verify_deformation(const LyAlgebra& a, const ReynoldsOperator& r, const TruncatedDeformation& def);

/// ((F_1, G_1), T_1) as a degree-2 RLY cochain with adjoint coefficients.
/// Throws OrderTooLow, InvalidInput (non-antisymmetric F_1 or G_1).
RlyCochain infinitesimal(const TruncatedDeformation& def);

/// The deformation def' for which iso is a formal isomorphism from def' to def:
///   F' = phi^{-1} F (phi x phi),  G' = phi^{-1} G (phi x phi x phi),  T' = phi^{-1} T phi,
/// all modulo t^{N+1}. Then infinitesimal(def') - infinitesimal(def) = d^1(phi_1).
/// Throws OrderMismatch, InvalidInput when phi_0 != Id.
TruncatedDeformation apply_equivalence(const TruncatedDeformation& def, const FormalIsomorphism& iso);

/// If infinitesimal(def) = d^1(phi_1), returns Id - phi_1 t and the transported
/// deformation, whose order-1 terms vanish. Throws NotCoboundary otherwise.
std::pair<FormalIsomorphism, TruncatedDeformation> trivialize_first_order(const LyAlgebra& a,
                                                                          const ReynoldsOperator& r,
                                                                          const TruncatedDeformation& def);

}  // namespace rly
