#pragma once

#include "rly/cochain.hpp"
#include "rly/linalg.hpp"
#include "rly/representation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string_view>

namespace rly {

enum class ComplexKind { LY, RO, RLY };

std::string_view to_string(ComplexKind k);
/// "ly", "ro", "rly" (case-insensitive). Throws InvalidInput.
ComplexKind parse_complex_kind(std::string_view s);

/// Highest degree accepted by the matrix builders.
inline constexpr std::size_t kMaxDegree = 5;

std::size_t cochain_dim(ComplexKind k, std::size_t n, std::size_t m, std::size_t p);

/// Yamaguti coboundary, evaluated directly on the cochain.
Cochain delta(const LyAlgebra& a, const Representation& rep, const Cochain& c);
/// Same map as a matrix, dim C^{p+1} x dim C^p.
Matrix delta_matrix(const LyAlgebra& a, const Representation& rep, std::size_t p);

/// delta over (L_T; rho_T, theta_T).
Cochain partial(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, const Cochain& c);

/// Phi^1(h) = h T - T_V h; in degree k+1 the binary part is
///   f(T..T) - T_V(sum_i f(T..Id_i..T) + (2k-1) w f(T..T))
/// over the 2k vector slots, and the ternary part is the same over 2k+1 slots
/// with coefficient 2k w.
Cochain phi(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, const Cochain& c);
Matrix phi_matrix(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, std::size_t p);

/// d^1 h = (delta h, -Phi h); d^p(a, b) = (delta a, -partial b - Phi a).
RlyCochain d_rly(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, const RlyCochain& c);

/// Linearized forms of the two cyclic axioms on C^2_LY:
///   cyc_{x,y,z} ( f([x,y],z) - rho(z) f(x,y) + g(x,y,z) ) = 0     rows per (x,y,z,a)
///   cyc_{x,y,z} ( g([x,y],z,b) + theta(z,b) f(x,y) ) = 0          rows per (x,y,z,b,a)
/// A degree-2 cocycle defines an extension or a first-order deformation only
/// when it also lies in the kernel of this matrix.
Matrix admissibility_matrix(const LyAlgebra& a, const Representation& rep);

struct DegreeRow {
  std::size_t degree = 0;
  std::size_t dim_cochain = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_image_incoming = 0;
  std::size_t rank_outgoing = 0;
  std::size_t betti = 0;

  friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

struct ComplexReport {
  ComplexKind kind = ComplexKind::LY;
  std::vector<DegreeRow> rows;  // degrees 1..max_degree
  /// Codomain of the last differential: only its dimension and incoming image
  /// are known.
  std::size_t top_dim = 0;
  std::size_t top_image = 0;
  bool squares_vanish = true;
  /// Phi^{p+1} delta^p = partial^p Phi^p for p < max_degree; absent for LY.
  std::optional<bool> chain_map = std::nullopt;

  friend bool operator==(const ComplexReport&, const ComplexReport&) = default;
};

/// Caches every differential of one (A, R, Rep) triple. Thread-safe.
/// The operator may be absent, in which case only the LY complex is available.
class CohomologyContext {
 public:
  CohomologyContext(LyAlgebra a, std::optional<ReynoldsOperator> r, Representation rep);

  const LyAlgebra& algebra() const { return a_; }
  const Representation& rep() const { return rep_; }
  const std::optional<ReynoldsOperator>& op() const { return r_; }
  std::size_t n() const { return a_.dim(); }
  std::size_t m() const { return rep_.module_dim(); }

  /// Differential out of degree p. Throws DegreeOutOfRange, MissingModuleOp.
  const Matrix& differential(ComplexKind k, std::size_t p);
  const Matrix& phi(std::size_t p);
  /// Admissibility rows lifted to C^2_RLY (zero on the tail).
  const Matrix& admissibility();

  ComplexReport report(ComplexKind k, std::size_t max_degree);

  bool is_cocycle(ComplexKind k, std::size_t p, std::span<const Scalar> c);
  /// Some b with d^{p-1} b = c (p = 1: only c = 0, with b empty).
  std::optional<Vec> preimage(ComplexKind k, std::size_t p, std::span<const Scalar> c);
  bool is_coboundary(ComplexKind k, std::size_t p, std::span<const Scalar> c) {
    return preimage(k, p, c).has_value();
  }
  bool cohomologous(ComplexKind k, std::size_t p, std::span<const Scalar> c1, std::span<const Scalar> c2);

  /// RLY degree-2 cocycles that are also admissible.
  const SubspaceBasis& admissible_cocycles();
  /// Admissible cocycles completing the image of d^1 to a basis; one per
  /// dimension of the admissible second cohomology.
  std::vector<Vec> h2_representatives();

 private:
  const Matrix& cached(std::map<std::pair<int, std::size_t>, Matrix>& cache, std::pair<int, std::size_t> key,
                       auto&& build);
  const LyAlgebra& descendant();
  const Representation& induced();

  LyAlgebra a_;
  std::optional<ReynoldsOperator> r_;
  Representation rep_;
  std::optional<LyAlgebra> lt_;
  std::optional<Representation> rep_t_;
  std::map<std::pair<int, std::size_t>, Matrix> diff_;
  std::map<std::pair<int, std::size_t>, Matrix> phi_;
  std::optional<Matrix> adm_;
  std::optional<SubspaceBasis> adm_cocycles_;
  std::recursive_mutex mu_;
};

Matrix differential_matrix(const LyAlgebra& a, const std::optional<ReynoldsOperator>& r, const Representation& rep,
                           ComplexKind k, std::size_t p);
ComplexReport cohomology_dims(const LyAlgebra& a, const std::optional<ReynoldsOperator>& r,
                              const Representation& rep, ComplexKind k, std::size_t max_degree);

}  // namespace rly
