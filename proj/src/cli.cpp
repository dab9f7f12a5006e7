#include "rly/cli.hpp"

#include "rly/workspace.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

namespace rly {

namespace {

bool is_math_failure(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidReynolds:
    case ErrorCode::NotCocycle:
    case ErrorCode::NotAdmissible:
    case ErrorCode::NotCoboundary:
    case ErrorCode::CompositionNotZero:
    case ErrorCode::InternalInconsistency:
      return true;
    default:
      return false;
  }
}

/// One check per coordinate of v, witness = coordinate index.
CheckResult vanishing_check(std::string name, const Vec& v) {
  CheckResult c;
  c.name = std::move(name);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t idx[1] = {i};
    c.record(idx, std::span<const Scalar>(&v[i], 1));
  }
  return c;
}

/// Verifies the algebra, the representation and, when given, the operator and
/// its compatibility with the module operator.
AxiomReport verify_setup(const LyAlgebra& a, const std::optional<ReynoldsOperator>& r, const Representation& rep) {
  AxiomReport out;
  out.append(verify_ly_axioms(a), "algebra.");
  if (r) out.append(verify_reynolds(a, *r), "operator.");
  out.append(verify_rep(a, rep), "rep.");
  if (r) out.append(verify_reynolds_rep(a, *r, rep), "rep.");
  return out;
}

class Session {
 public:
  Session(std::ostream& out, bool json) : out_(out), json_(json) {}

  int verify(const Workspace& ws, const std::string& name) {
    auto kind = ws.kind_of(name);
    if (!kind) fail(ErrorCode::NameNotFound, "no object named '" + name + "'");
    Json j{{"command", "verify"}, {"name", name}, {"kind", std::string(to_string(*kind))}};
    bool passed = false;
    if (*kind == ObjectKind::Deformation) {
      const auto& e = ws.deformation(name);
      OrderReport rep = verify_deformation(ws.algebra(e.algebra), ws.op(e.op).op, e.def);
      passed = rep.passed();
      j["passed"] = passed;
      j["report"] = to_json(rep);
      if (!json_) {
        out_ << "deformation " << name << " (order " << e.def.order() << ")\n";
        for (std::size_t n = 0; n < rep.orders.size(); ++n) {
          out_ << "order " << n << ":\n" << indent(format_report(rep.orders[n]));
        }
      }
    } else {
      AxiomReport rep = verify_object(ws, name, *kind);
      passed = rep.passed();
      j["passed"] = passed;
      j["report"] = to_json(rep);
      if (!json_) out_ << to_string(*kind) << ' ' << name << '\n' << indent(format_report(rep));
    }
    return finish(j, passed);
  }

  int cohomology(const Workspace& ws, const std::string& alg, const std::string& op, const std::string& rep_name,
                 ComplexKind kind, std::size_t max_degree) {
    const LyAlgebra& a = ws.algebra(alg);
    std::optional<ReynoldsOperator> r;
    if (!op.empty()) r = ws.op(op).op;
    require(kind == ComplexKind::LY || r.has_value(), ErrorCode::InvalidInput, "the ro and rly complexes need --operator");
    const Representation& rep = ws.rep(rep_name).rep;
    require(rep.algebra_dim() == a.dim(), ErrorCode::DimMismatch, "representation and algebra dimensions differ");
    if (r) require(r->matrix.rows() == a.dim(), ErrorCode::DimMismatch, "operator and algebra dimensions differ");
    if (!setup_ok(a, r, rep)) return kExitCheckFailed;

    ComplexReport report = cohomology_dims(a, r, rep, kind, max_degree);
    const bool passed = report.squares_vanish && report.chain_map.value_or(true);
    Json j{{"command", "cohomology"}, {"passed", passed}, {"report", to_json(report)}};
    if (!json_) print_table(report);
    return finish(j, passed);
  }

  int classify(const Workspace& ws, const std::string& alg, const std::string& op, const std::string& rep_name) {
    const LyAlgebra& a = ws.algebra(alg);
    const ReynoldsOperator& r = ws.op(op).op;
    const Representation& rep = ws.rep(rep_name).rep;
    require(rep.algebra_dim() == a.dim() && r.matrix.rows() == a.dim(), ErrorCode::DimMismatch,
            "operator, representation and algebra dimensions differ");
    rep.require_module_op();
    if (!setup_ok(a, r, rep)) return kExitCheckFailed;

    CohomologyContext ctx(a, r, rep);
    const std::size_t betti2 = ctx.report(ComplexKind::RLY, 2).rows.at(1).betti;
    const std::vector<Vec> reps = ctx.h2_representatives();
    Json list = Json::array();
    bool all_ok = true;
    if (!json_) {
      out_ << "betti(2) of the rly complex: " << betti2 << '\n';
      out_ << "admissible classes: " << reps.size() << '\n';
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      ExtensionCocycle c = ExtensionCocycle::from_cochain(RlyCochain::from_coords(a.dim(), rep.module_dim(), 2, reps[i]));
      bool ok = true;
      std::string failure;
      try {
        AbelianExtension e = build_extension(a, r, rep, c);
        ok = verify_extension(a, r, e).passed();
        if (!ok) failure = "extension fails verification";
      } catch (const Error& err) {
        ok = false;
        failure = err.what();
      }
      all_ok = all_ok && ok;
      Json entry = to_json(c);
      entry["verified"] = ok;
      list.push_back(entry);
      if (!json_) {
        out_ << "class " << i + 1 << (ok ? " verified" : " FAILED: " + failure) << '\n';
        out_ << "  nu  " << sparse_to_json(c.nu).dump() << '\n';
        out_ << "  psi " << sparse_to_json(c.psi).dump() << '\n';
        out_ << "  chi " << matrix_to_json(c.chi).dump() << '\n';
      }
    }
    const bool trivial = reps.empty();
    if (!json_ && trivial) out_ << "all extensions equivalent to the semidirect product\n";
    Json j{{"command", "classify-extensions"},
           {"passed", all_ok},
           {"betti2", betti2},
           {"admissible", reps.size()},
           {"semidirect_only", trivial},
           {"representatives", list}};
    return finish(j, all_ok);
  }

  int deform_check(const Workspace& ws, const std::string& only, std::optional<std::size_t> order) {
    std::vector<std::string> names;
    if (!only.empty()) {
      ws.deformation(only);
      names.push_back(only);
    } else {
      for (const auto& [name, e] : ws.deformations()) names.push_back(name);
    }
    Json list = Json::array();
    bool all_ok = true;
    for (const auto& name : names) {
      const auto& e = ws.deformation(name);
      const std::size_t upto = order.value_or(e.def.order());
      require(upto <= e.def.order(), ErrorCode::DegreeOutOfRange,
              "deformation '" + name + "' has order " + std::to_string(e.def.order()) + ", below --order " +
                  std::to_string(upto));
      const LyAlgebra& a = ws.algebra(e.algebra);
      const ReynoldsOperator& r = ws.op(e.op).op;
      OrderReport rep = verify_deformation(a, r, e.def);
      bool ok = rep.passed_through(upto);
      Json entry{{"name", name}, {"order", upto}, {"passed", ok}, {"report", to_json(rep)}};
      entry["infinitesimal_cocycle"] = nullptr;
      entry["infinitesimal_coboundary"] = nullptr;
      if (!json_) out_ << "deformation " << name << " checked through order " << upto << ": " << (ok ? "PASS" : "FAIL")
                       << '\n';
      for (std::size_t n = 0; n <= upto && n < rep.orders.size(); ++n) {
        if (!json_ && (!rep.orders[n].passed() || n == upto))
          out_ << "order " << n << ":\n" << indent(format_report(rep.orders[n]));
      }
      if (e.def.order() >= 1 && upto >= 1 && rep.passed_through(1)) {
        CohomologyContext ctx(a, r, adjoint_rep(a, r));
        Vec inf = infinitesimal(e.def).coords();
        const bool cocycle = ctx.is_cocycle(ComplexKind::RLY, 2, inf);
        const bool coboundary = cocycle && ctx.is_coboundary(ComplexKind::RLY, 2, inf);
        entry["infinitesimal_cocycle"] = cocycle;
        entry["infinitesimal_coboundary"] = coboundary;
        if (!cocycle) ok = false;
        entry["passed"] = ok;
        if (!json_) {
          out_ << "infinitesimal: " << (cocycle ? "2-cocycle" : "NOT a 2-cocycle [internal inconsistency]");
          if (cocycle) out_ << (coboundary ? ", coboundary (trivial to first order)" : ", not a coboundary");
          out_ << '\n';
        }
      }
      all_ok = all_ok && ok;
      list.push_back(entry);
    }
    if (!json_ && names.empty()) out_ << "no deformations\n";
    Json j{{"command", "deform-check"}, {"passed", all_ok}, {"deformations", list}};
    return finish(j, all_ok);
  }

 private:
  static std::string indent(const std::string& s) {
    std::string out;
    bool start = true;
    for (char c : s) {
      if (start) out += "  ";
      out += c;
      start = c == '\n';
    }
    return out;
  }

  AxiomReport verify_object(const Workspace& ws, const std::string& name, ObjectKind kind) {
    switch (kind) {
      case ObjectKind::Algebra:
        return verify_ly_axioms(ws.algebra(name));
      case ObjectKind::Operator: {
        const auto& e = ws.op(name);
        return verify_reynolds(ws.algebra(e.algebra), e.op);
      }
      case ObjectKind::Representation: {
        const auto& e = ws.rep(name);
        const LyAlgebra& a = ws.algebra(e.algebra);
        AxiomReport rep = verify_rep(a, e.rep);
        if (!e.op.empty() && e.rep.module_op()) rep.append(verify_reynolds_rep(a, ws.op(e.op).op, e.rep));
        return rep;
      }
      case ObjectKind::Cochain: {
        const auto& e = ws.cochain(name);
        std::optional<ReynoldsOperator> r;
        if (!e.op.empty()) r = ws.op(e.op).op;
        CohomologyContext ctx(ws.algebra(e.algebra), r, ws.rep(e.rep).rep);
        AxiomReport rep;
        rep.checks.push_back(vanishing_check("cocycle", ctx.differential(e.complex, e.degree).apply(e.coords)));
        if (e.complex == ComplexKind::RLY && e.degree == 2)
          rep.checks.push_back(vanishing_check("admissible", ctx.admissibility().apply(e.coords)));
        return rep;
      }
      case ObjectKind::Extension: {
        const auto& e = ws.extension(name);
        const LyAlgebra& a = ws.algebra(e.algebra);
        const ReynoldsOperator& r = ws.op(e.op).op;
        if (e.total) return verify_extension(a, r, *e.total);
        const Representation& rep = ws.rep(e.rep).rep;
        CohomologyContext ctx(a, r, rep);
        Vec c = e.cocycle.to_cochain().coords();
        AxiomReport out;
        out.checks.push_back(vanishing_check("cocycle", ctx.differential(ComplexKind::RLY, 2).apply(c)));
        out.checks.push_back(vanishing_check("admissible", ctx.admissibility().apply(c)));
        out.append(verify_extension(a, r, assemble_extension(a, r, rep, e.cocycle)));
        return out;
      }
      case ObjectKind::Deformation:
        break;
    }
    fail(ErrorCode::InvalidInput, "unsupported object kind");
  }

  bool setup_ok(const LyAlgebra& a, const std::optional<ReynoldsOperator>& r, const Representation& rep) {
    AxiomReport pre = verify_setup(a, r, rep);
    if (pre.passed()) return true;
    if (json_) {
      out_ << Json{{"passed", false}, {"prerequisites", to_json(pre)}}.dump(2) << '\n';
    } else {
      out_ << "prerequisites fail:\n" << indent(format_report(pre));
    }
    return false;
  }

  void print_table(const ComplexReport& r) {
    out_ << "complex " << to_string(r.kind) << '\n';
    out_ << std::setw(6) << "degree" << std::setw(8) << "dim" << std::setw(8) << "kernel" << std::setw(10) << "image_in"
         << std::setw(8) << "betti" << '\n';
    for (const auto& row : r.rows)
      out_ << std::setw(6) << row.degree << std::setw(8) << row.dim_cochain << std::setw(8) << row.dim_kernel
           << std::setw(10) << row.dim_image_incoming << std::setw(8) << row.betti << '\n';
    out_ << std::setw(6) << r.rows.size() + 1 << std::setw(8) << r.top_dim << std::setw(8) << "-" << std::setw(10)
         << r.top_image << std::setw(8) << "-" << '\n';
    out_ << "d o d = 0: " << (r.squares_vanish ? "PASS" : "FAIL") << '\n';
    if (r.chain_map) out_ << "chain map: " << (*r.chain_map ? "PASS" : "FAIL") << '\n';
  }

  int finish(const Json& j, bool passed) {
    if (json_) {
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "result: " << (passed ? "PASS" : "FAIL") << '\n';
    }
    return passed ? kExitPass : kExitCheckFailed;
  }

  std::ostream& out_;
  bool json_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reynolds Lie-Yamaguti algebra checker", "rly"};
  app.require_subcommand(1);
  bool json = false;

  std::vector<std::string> files;
  std::string name, alg, op, rep, complex = "ly";
  std::size_t max_degree = 3;
  std::optional<std::size_t> order;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("files", files, "input files")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", json, "machine-readable report");
  };
  auto* verify = app.add_subcommand("verify", "verify one named object");
  add_common(verify);
  verify->add_option("--name", name, "object name")->required();

  auto* coh = app.add_subcommand("cohomology", "cohomology dimensions of a complex");
  add_common(coh);
  coh->add_option("--algebra", alg)->required();
  coh->add_option("--operator", op);
  coh->add_option("--rep", rep)->required();
  coh->add_option("--complex", complex)->check(CLI::IsMember({"ly", "ro", "rly"}, CLI::ignore_case));
  coh->add_option("--max-degree", max_degree)->check(CLI::Range(std::size_t{1}, kMaxDegree));

  auto* cls = app.add_subcommand("classify-extensions", "abelian extensions up to equivalence");
  add_common(cls);
  cls->add_option("--algebra", alg)->required();
  cls->add_option("--operator", op)->required();
  cls->add_option("--rep", rep)->required();

  auto* def = app.add_subcommand("deform-check", "check truncated deformations");
  add_common(def);
  def->add_option("--name", name, "only this deformation");
  def->add_option("--order", order, "check identities up to this order");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  Workspace ws;
  try {
    ws = Workspace::load(files);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  Session session(out, json);
  try {
    if (*verify) return session.verify(ws, name);
    if (*coh) return session.cohomology(ws, alg, op, rep, parse_complex_kind(complex), max_degree);
    if (*cls) return session.classify(ws, alg, op, rep);
    return session.deform_check(ws, name, order);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_math_failure(e.code()) ? kExitCheckFailed : kExitInputError;
  }
}

}  // namespace rly
