#include "rly/deformation.hpp"
#include "rly/extension.hpp"
#include "support/generators.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace rly;

namespace {

// All comparisons are exact rational equalities; only runtimes carry limits.
constexpr double kLimitExamples = 1.0;
constexpr double kLimitSquares = 5.0;
constexpr double kLimitTotal = 60.0;
constexpr int kRandomTriples = 6;
constexpr int kSamples = 10;
constexpr int kConjugations = 3;
constexpr std::uint64_t kSeed = 20240601;

const ReynoldsOperator kR{Matrix{{2, 3}, {0, 5}}, Scalar(-1, 5)};

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0) o.expect(secs < limit, "runtime over limit");
  std::cout << (o.ok ? "PASS" : "FAIL") << ' ' << id << ' ' << title << " (" << secs << " s";
  if (limit > 0) std::cout << ", limit " << limit << " s";
  std::cout << ')';
  if (!o.ok) {
    std::cout << ": " << o.why.str();
    ++failures;
  }
  std::cout << '\n';
  if (!o.detail.empty()) std::cout << "     " << o.detail << '\n';
}

struct Setup {
  LyAlgebra a;
  ReynoldsOperator r;
  Representation rep;
};

Setup example() {
  LyAlgebra a = examples::two_dim();
  return {a, kR, adjoint_rep(a, kR)};
}

Setup sl2_setup() {
  LyAlgebra s = examples::sl2();
  ReynoldsOperator r = reynolds_from_derivation(s, Matrix{{0, 0, 0}, {0, 2, 0}, {0, 0, -2}}, 1);
  return {s, r, adjoint_rep(s, r)};
}

Vec d1_of(CohomologyContext& ctx, const Matrix& iota) {
  return ctx.differential(ComplexKind::RLY, 1).apply(Cochain::from_map(iota).coords());
}

}  // namespace

int main() {
  auto total_start = std::chrono::steady_clock::now();
  testgen::Rng rng(kSeed);

  criterion(1, "example structures verify", kLimitExamples, [](Outcome& o) {
    LyAlgebra two = examples::two_dim();
    LyAlgebra sl2 = from_lie_algebra(examples::sl2_lie_binary());
    LyAlgebra leib = from_leibniz(examples::leibniz_sample());
    o.expect(verify_ly_axioms(two).passed(), "two-dim axioms");
    o.expect(verify_reynolds(two, kR).passed(), "T(2,3,5) at weight -1/5");
    for (const LyAlgebra* a : {&two, &sl2, &leib})
      o.expect(verify_reynolds(*a, {Matrix::identity(a->dim()), -1}).passed(), "identity at weight -1");
  });

  criterion(2, "d o d = 0 in all three complexes", kLimitSquares, [](Outcome& o) {
    Setup s = example();
    for (auto k : {ComplexKind::LY, ComplexKind::RO, ComplexKind::RLY})
      for (std::size_t p = 1; p <= 2; ++p) {
        Matrix prod = differential_matrix(s.a, s.r, s.rep, k, p + 1) * differential_matrix(s.a, s.r, s.rep, k, p);
        o.expect(prod.is_zero(), std::string(to_string(k)) + " p=" + std::to_string(p));
      }
  });

  criterion(3, "Phi is a cochain map", 0, [&](Outcome& o) {
    std::vector<Setup> setups{example()};
    for (int i = 0; i < kRandomTriples; ++i) {
      auto t = testgen::random_triple(rng);
      setups.push_back({t.a, t.r, t.rep});
      o.detail += (i ? ", " : "random triples: ") + t.label;
    }
    for (const auto& s : setups)
      for (std::size_t p = 1; p <= 2; ++p) {
        Matrix lhs = phi_matrix(s.a, s.r, s.rep, p + 1) * differential_matrix(s.a, s.r, s.rep, ComplexKind::LY, p);
        Matrix rhs = differential_matrix(s.a, s.r, s.rep, ComplexKind::RO, p) * phi_matrix(s.a, s.r, s.rep, p);
        o.expect(lhs == rhs, "chain map at p=" + std::to_string(p));
      }
    o.expect(setups.size() >= 6, "too few setups");
  });

  criterion(4, "mapping-cone dimensions", 0, [](Outcome& o) {
    Setup s = example();
    for (std::size_t p = 2; p <= 3; ++p)
      o.expect(cochain_dim(ComplexKind::RLY, 2, 2, p) ==
                   cochain_dim(ComplexKind::LY, 2, 2, p) + cochain_dim(ComplexKind::RO, 2, 2, p - 1),
               "dim identity");
    ComplexReport r = cohomology_dims(s.a, s.r, s.rep, ComplexKind::RLY, 3);
    std::vector<std::size_t> dims;
    for (const auto& row : r.rows) dims.push_back(row.dim_cochain);
    o.expect(dims == std::vector<std::size_t>{4, 10, 12}, "dim column");
  });

  criterion(5, "betti numbers invariant under change of basis on V", 0, [&](Outcome& o) {
    std::vector<Setup> setups{example()};
    auto t = testgen::random_triple(rng);
    setups.push_back({t.a, t.r, t.rep});
    for (const auto& s : setups)
      for (auto k : {ComplexKind::LY, ComplexKind::RO, ComplexKind::RLY}) {
        ComplexReport base = cohomology_dims(s.a, s.r, s.rep, k, 3);
        for (int i = 0; i < kConjugations; ++i) {
          Representation c = conjugate_rep(s.rep, testgen::random_invertible(rng, s.rep.module_dim()));
          o.expect(cohomology_dims(s.a, s.r, c, k, 3) == base, std::string(to_string(k)) + " report changed");
        }
      }
  });

  criterion(6, "deformations", 0, [&](Outcome& o) {
    int sampled = 0;
    for (Setup s : {example(), sl2_setup()}) {
      CohomologyContext ctx(s.a, s.r, s.rep);
      const std::size_t n = s.a.dim();
      const auto& adm = ctx.admissible_cocycles();
      o.expect(adm.dim() == ctx.report(ComplexKind::RLY, 2).rows[1].dim_kernel, "admissible != ker d^2");
      for (int i = 0; i < kSamples / 2; ++i, ++sampled) {
        RlyCochain c = RlyCochain::from_coords(n, n, 2, testgen::random_combination(rng, adm));
        auto def = TruncatedDeformation::first_order(s.a, s.r, c);
        o.expect(verify_deformation(s.a, s.r, def).passed_through(1), "order-1 deformation fails");
        o.expect(ctx.is_cocycle(ComplexKind::RLY, 2, infinitesimal(def).coords()), "infinitesimal not a cocycle");
      }
      for (int i = 0; i < kSamples / 2; ++i) {
        Matrix p1 = testgen::random_matrix(rng, n, n);
        auto moved = apply_equivalence(TruncatedDeformation::constant(s.a, s.r, 2), FormalIsomorphism::linear(p1, 2));
        o.expect(verify_deformation(s.a, s.r, moved).passed(), "transported deformation fails");
        o.expect(infinitesimal(moved).coords() == d1_of(ctx, p1), "infinitesimal != d1(phi1)");
        auto [iso, flat] = trivialize_first_order(s.a, s.r, moved);
        o.expect(flat.F[1].is_zero() && flat.G[1].is_zero() && flat.T[1].is_zero(), "order-1 terms remain");
      }
    }
    o.expect(sampled >= kSamples, "too few samples");
  });

  criterion(7, "extensions and the second cohomology", 0, [&](Outcome& o) {
    Setup s = example();
    CohomologyContext ctx(s.a, s.r, s.rep);
    const auto& adm = ctx.admissible_cocycles();
    for (int i = 0; i < kSamples; ++i) {
      ExtensionCocycle c =
          ExtensionCocycle::from_cochain(RlyCochain::from_coords(2, 2, 2, testgen::random_combination(rng, adm)));
      AbelianExtension e = build_extension(s.a, s.r, s.rep, c);
      o.expect(extract_cocycle(e, canonical_section(e)) == c, "round trip");
    }
    for (int i = 0; i < kSamples; ++i) {
      Vec base = testgen::random_combination(rng, adm);
      AbelianExtension e =
          build_extension(s.a, s.r, s.rep, ExtensionCocycle::from_cochain(RlyCochain::from_coords(2, 2, 2, base)));
      Matrix iota = testgen::random_matrix(rng, 2, 2);
      Vec shifted = extract_cocycle(e, shifted_section(e, iota)).to_cochain().coords();
      o.expect(shifted - base == d1_of(ctx, iota), "section shift");
    }
    int rejected = 0;
    while (rejected < kSamples) {
      Vec v = testgen::random_vec(rng, RlyCochain::dim(2, 2, 2));
      if (ctx.is_cocycle(ComplexKind::RLY, 2, v)) continue;
      ExtensionCocycle c = ExtensionCocycle::from_cochain(RlyCochain::from_coords(2, 2, 2, v));
      bool threw = false;
      try {
        build_extension(s.a, s.r, s.rep, c);
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::NotCocycle;
      }
      o.expect(threw, "non-cocycle accepted");
      AxiomReport r = verify_extension(s.a, s.r, assemble_extension(s.a, s.r, s.rep, c));
      o.expect(!r.passed() && !r.first_failure()->witness.empty(), "force-built total verifies");
      ++rejected;
    }
    auto reps = ctx.h2_representatives();
    o.expect(reps.size() == 2, "h2 basis size");
    for (int i = 0; i < kSamples; ++i) {
      Vec base = testgen::random_combination(rng, adm);
      Matrix iota = testgen::random_matrix(rng, 2, 2);
      const bool same = i % 2 == 0;
      Vec other = base + d1_of(ctx, iota);
      if (!same) other = other + reps[i % reps.size()];
      auto build = [&](const Vec& v) {
        return build_extension(s.a, s.r, s.rep, ExtensionCocycle::from_cochain(RlyCochain::from_coords(2, 2, 2, v)));
      };
      auto iso = extensions_equivalent(s.a, s.r, s.rep, build(other), build(base));
      o.expect(iso.has_value() == same, "equivalence does not follow the class");
      o.expect(iso.has_value() == ctx.cohomologous(ComplexKind::RLY, 2, other, base), "class test disagrees");
    }
  });

  criterion(8, "weight zero and identity operator pipelines", 0, [](Outcome& o) {
    std::vector<Setup> setups;
    LyAlgebra two = examples::two_dim();
    ReynoldsOperator rb{Matrix{{0, 1}, {0, 0}}, 0};
    setups.push_back({two, rb, adjoint_rep(two, rb)});
    for (const LyAlgebra& a : {two, examples::sl2(), from_leibniz(examples::leibniz_sample())}) {
      ReynoldsOperator id{Matrix::identity(a.dim()), -1};
      setups.push_back({a, id, adjoint_rep(a, id)});
    }
    for (std::size_t i = 0; i < setups.size(); ++i) {
      const Setup& s = setups[i];
      LyAlgebra lt = descendant_algebra(s.a, s.r);
      Representation ind = induced_rep(s.a, s.r, s.rep);
      o.expect(verify_ly_axioms(lt).passed() && verify_rep(lt, ind).passed(), "descendant data");
      if (i > 0) o.expect(lt == s.a, "L_T != L for the identity");
      for (auto k : {ComplexKind::LY, ComplexKind::RO, ComplexKind::RLY}) {
        ComplexReport r = cohomology_dims(s.a, s.r, s.rep, k, 3);
        o.expect(r.squares_vanish && r.chain_map.value_or(true), "complex check");
      }
    }
  });

  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
  bool in_time = total < kLimitTotal;
  std::cout << (in_time ? "PASS" : "FAIL") << " total runtime " << total << " s (limit " << kLimitTotal << " s)\n";
  if (!in_time) ++failures;
  return failures == 0 ? 0 : 1;
}
