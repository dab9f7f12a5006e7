#include "rly/workspace.hpp"

#include <fstream>
#include <sstream>

namespace rly {

std::string_view to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::Algebra: return "algebra";
    case ObjectKind::Operator: return "operator";
    case ObjectKind::Representation: return "representation";
    case ObjectKind::Cochain: return "cochain";
    case ObjectKind::Deformation: return "deformation";
    case ObjectKind::Extension: return "extension";
  }
  return "unknown";
}

namespace {

const std::vector<std::pair<std::string, ObjectKind>> kSections = {
    {"algebras", ObjectKind::Algebra},         {"operators", ObjectKind::Operator},
    {"representations", ObjectKind::Representation}, {"cochains", ObjectKind::Cochain},
    {"deformations", ObjectKind::Deformation}, {"extensions", ObjectKind::Extension},
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& obj, const char* key, const std::string& fallback = {}) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (!fallback.empty()) return fallback;
    fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  require(it->is_string(), ErrorCode::ParseError, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::string optional_string(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  require(it->is_string(), ErrorCode::ParseError, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::size_t size_field(const Json& v, const std::string& what) {
  require(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0), ErrorCode::ParseError,
          what + " must be a non-negative integer");
  return v.get<std::size_t>();
}

Matrix sized_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  Matrix m = matrix_from_json(j);
  if (rows == 0 || cols == 0) {
    if (m.rows() == 0 || m.cols() == 0) return Matrix(rows, cols);
  }
  require(m.rows() == rows && m.cols() == cols, ErrorCode::DimMismatch,
          what + " must be " + std::to_string(rows) + " x " + std::to_string(cols) + ", got " +
              std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
  return m;
}

/// Sparse entries [i, j, ..., value]. With `antisymmetric`, the first two
/// indices are antisymmetric: the image is filled in, and a repeated pair
/// must carry the negated value.
Tensor sparse_tensor(const Json& j, const std::vector<std::size_t>& shape, bool antisymmetric, const std::string& what) {
  Tensor t(shape);
  if (j.is_null()) return t;
  require(j.is_array(), ErrorCode::ParseError, what + " must be a list of entries");
  std::map<std::vector<std::size_t>, std::pair<Scalar, std::vector<std::size_t>>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const Json& entry = j[e];
    const std::string where = what + " entry " + std::to_string(e);
    require(entry.is_array() && entry.size() == shape.size() + 1, ErrorCode::ParseError,
            where + " must list " + std::to_string(shape.size()) + " indices and a value");
    std::vector<std::size_t> idx(shape.size());
    for (std::size_t d = 0; d < shape.size(); ++d) {
      idx[d] = size_field(entry[d], where + " index");
      require(idx[d] < shape[d], ErrorCode::DimMismatch,
              where + ": index " + std::to_string(idx[d]) + " out of range " + std::to_string(shape[d]));
    }
    Scalar value = scalar_from_json(entry.back());
    std::vector<std::size_t> key = idx;
    Scalar signed_value = value;
    if (antisymmetric) {
      if (idx[0] == idx[1]) {
        require(is_zero(value), ErrorCode::InvalidInput, where + ": diagonal entry must vanish");
        continue;
      }
      if (idx[0] > idx[1]) {
        std::swap(key[0], key[1]);
        signed_value = -value;
      }
    }
    auto it = seen.find(key);
    if (it != seen.end()) {
      require(it->second.second != idx, ErrorCode::InvalidInput, where + ": duplicate entry");
      require(it->second.first == signed_value, ErrorCode::InvalidInput,
              where + ": inconsistent with its antisymmetric image");
      continue;
    }
    seen.emplace(key, std::make_pair(signed_value, idx));
    t.at(key) = signed_value;
    if (antisymmetric) {
      std::swap(key[0], key[1]);
      t.at(key) = -signed_value;
    }
  }
  return t;
}

struct Item {
  std::string where;
  const Json* obj;
};

}  // namespace

class WorkspaceBuilder {
 public:
  explicit WorkspaceBuilder(Workspace& ws) : ws_(ws) {}

  void add_document(const std::string& source, const Json& doc) {
    require(doc.is_object(), ErrorCode::ParseError, source + ": top level must be an object");
    for (const auto& [key, value] : doc.items()) {
      auto sec = std::find_if(kSections.begin(), kSections.end(), [&](const auto& s) { return s.first == key; });
      require(sec != kSections.end(), ErrorCode::ParseError, source + ": unknown section '" + key + "'");
      require(value.is_array(), ErrorCode::ParseError, source + ": section '" + key + "' must be a list");
      for (std::size_t i = 0; i < value.size(); ++i)
        items_[sec->second].push_back({source + ": /" + key + "/" + std::to_string(i), &value[i]});
    }
  }

  void build() {
    for (const auto& [key, kind] : kSections) {
      for (const auto& item : items_[kind]) {
        try {
          require(item.obj->is_object(), ErrorCode::ParseError, "entry must be an object");
          std::string name = string_field(*item.obj, "name");
          require(!ws_.kinds_.contains(name), ErrorCode::InvalidInput, "duplicate name '" + name + "'");
          build_one(kind, name, *item.obj);
          ws_.kinds_[name] = kind;
        } catch (const Error& e) {
          throw Error(e.code(), item.where + ": " + e.detail());
        } catch (const Json::exception& e) {
          throw Error(ErrorCode::ParseError, item.where + ": " + e.what());
        }
      }
    }
  }

 private:
  void build_one(ObjectKind kind, const std::string& name, const Json& o) {
    switch (kind) {
      case ObjectKind::Algebra: ws_.algebras_[name] = algebra(o); break;
      case ObjectKind::Operator: ws_.ops_[name] = op(o); break;
      case ObjectKind::Representation: ws_.reps_[name] = rep(o); break;
      case ObjectKind::Cochain: ws_.cochains_[name] = cochain(o); break;
      case ObjectKind::Deformation: ws_.deformations_[name] = deformation(o); break;
      case ObjectKind::Extension: ws_.extensions_[name] = extension(o); break;
    }
  }

  LyAlgebra algebra(const Json& o) {
    std::string kind = string_field(o, "kind", "explicit");
    if (kind == "reductive") {
      std::size_t d = size_field(field(o, "lie_dim"), "lie_dim");
      Tensor b = sparse_tensor(field(o, "binary"), {d, d, d}, true, "binary");
      auto n_idx = field(o, "subalgebra").get<std::vector<std::size_t>>();
      auto m_idx = field(o, "complement").get<std::vector<std::size_t>>();
      for (auto i : n_idx) require(i < d, ErrorCode::DimMismatch, "subalgebra index out of range");
      for (auto i : m_idx) require(i < d, ErrorCode::DimMismatch, "complement index out of range");
      return from_reductive_pair(b, n_idx, m_idx);
    }
    std::size_t n = size_field(field(o, "dim"), "dim");
    if (kind == "lie") return from_lie_algebra(sparse_tensor(field(o, "binary"), {n, n, n}, true, "binary"));
    if (kind == "leibniz") return from_leibniz(sparse_tensor(field(o, "product"), {n, n, n}, false, "product"));
    require(kind == "explicit", ErrorCode::ParseError, "unknown algebra kind '" + kind + "'");
    std::vector<std::string> labels;
    if (o.contains("labels")) {
      labels = o["labels"].get<std::vector<std::string>>();
      require(labels.size() == n, ErrorCode::DimMismatch, "labels must have one entry per basis vector");
    }
    Tensor b = sparse_tensor(o.value("binary", Json()), {n, n, n}, true, "binary");
    Tensor t = sparse_tensor(o.value("ternary", Json()), {n, n, n, n}, true, "ternary");
    return LyAlgebra(n, std::move(b), std::move(t), std::move(labels));
  }

  const LyAlgebra& algebra_ref(const std::string& name) { return ws_.algebra(name); }

  const OperatorEntry& op_on(const std::string& op_name, const std::string& algebra) {
    const auto& e = ws_.op(op_name);
    require(e.algebra == algebra, ErrorCode::InvalidInput,
            "operator '" + op_name + "' acts on '" + e.algebra + "', not '" + algebra + "'");
    return e;
  }

  OperatorEntry op(const Json& o) {
    OperatorEntry e;
    e.algebra = string_field(o, "algebra");
    std::size_t n = algebra_ref(e.algebra).dim();
    e.op.matrix = sized_matrix(field(o, "matrix"), n, n, "matrix");
    e.op.weight = o.contains("weight") ? scalar_from_json(o["weight"]) : Scalar(0);
    return e;
  }

  RepEntry rep(const Json& o) {
    RepEntry e;
    e.algebra = string_field(o, "algebra");
    const LyAlgebra& a = algebra_ref(e.algebra);
    const std::size_t n = a.dim();
    e.op = optional_string(o, "operator");
    std::optional<ReynoldsOperator> r;
    if (!e.op.empty()) r = op_on(e.op, e.algebra).op;
    std::string kind = string_field(o, "kind", "explicit");
    if (kind == "adjoint") {
      require(!o.contains("module_op"), ErrorCode::InvalidInput, "the adjoint module operator is the operator itself");
      e.rep = adjoint_rep(a, r);
      return e;
    }
    std::size_t m = size_field(field(o, "module_dim"), "module_dim");
    std::optional<Matrix> t_v;
    if (o.contains("module_op")) t_v = sized_matrix(o["module_op"], m, m, "module_op");
    if (kind == "zero") {
      e.rep = Representation::zero(n, m, t_v);
      return e;
    }
    require(kind == "explicit", ErrorCode::ParseError, "unknown representation kind '" + kind + "'");
    std::vector<Matrix> rho(n, Matrix(m, m));
    std::vector<Matrix> theta(n * n, Matrix(m, m));
    std::vector<bool> rho_set(n, false), theta_set(n * n, false);
    for (const auto& entry : o.value("rho", Json::array())) {
      std::size_t x = size_field(field(entry, "x"), "rho x");
      require(x < n, ErrorCode::DimMismatch, "rho index out of range");
      require(!rho_set[x], ErrorCode::InvalidInput, "rho(" + std::to_string(x) + ") given twice");
      rho_set[x] = true;
      rho[x] = sized_matrix(field(entry, "matrix"), m, m, "rho matrix");
    }
    for (const auto& entry : o.value("theta", Json::array())) {
      std::size_t x = size_field(field(entry, "x"), "theta x");
      std::size_t y = size_field(field(entry, "y"), "theta y");
      require(x < n && y < n, ErrorCode::DimMismatch, "theta index out of range");
      require(!theta_set[x * n + y], ErrorCode::InvalidInput,
              "theta(" + std::to_string(x) + "," + std::to_string(y) + ") given twice");
      theta_set[x * n + y] = true;
      theta[x * n + y] = sized_matrix(field(entry, "matrix"), m, m, "theta matrix");
    }
    e.rep = Representation(n, m, std::move(rho), std::move(theta), t_v);
    return e;
  }

  const RepEntry& rep_on(const std::string& rep_name, const std::string& algebra) {
    const auto& e = ws_.rep(rep_name);
    require(e.algebra == algebra, ErrorCode::InvalidInput,
            "representation '" + rep_name + "' is over '" + e.algebra + "', not '" + algebra + "'");
    return e;
  }

  CochainEntry cochain(const Json& o) {
    CochainEntry e;
    e.algebra = string_field(o, "algebra");
    const std::size_t n = algebra_ref(e.algebra).dim();
    e.rep = string_field(o, "rep");
    const std::size_t m = rep_on(e.rep, e.algebra).rep.module_dim();
    e.complex = parse_complex_kind(string_field(o, "complex", "ly"));
    e.op = optional_string(o, "operator");
    if (e.complex != ComplexKind::LY) {
      require(!e.op.empty(), ErrorCode::InvalidInput, "ro and rly cochains need an operator");
      op_on(e.op, e.algebra);
    }
    e.degree = size_field(field(o, "degree"), "degree");
    require(e.degree >= 1 && e.degree <= kMaxDegree, ErrorCode::DegreeOutOfRange,
            "degree must lie in 1.." + std::to_string(kMaxDegree));
    const std::size_t dim = cochain_dim(e.complex, n, m, e.degree);
    if (o.contains("coords")) {
      e.coords = vec_from_json(o["coords"]);
      require(e.coords.size() == dim, ErrorCode::DimMismatch,
              "coords must have length " + std::to_string(dim) + ", got " + std::to_string(e.coords.size()));
      return e;
    }
    require(e.degree <= 2, ErrorCode::InvalidInput, "cochains above degree 2 must be given by coords");
    Cochain top;
    if (e.degree == 1) {
      top = Cochain::from_map(sized_matrix(field(o, "map"), m, n, "map"));
    } else {
      top = Cochain::from_bilinear(sparse_tensor(o.value("f", Json()), {n, n, m}, true, "f"),
                                   sparse_tensor(o.value("g", Json()), {n, n, n, m}, true, "g"));
    }
    e.coords = top.coords();
    if (e.complex == ComplexKind::RLY && e.degree == 2) {
      Matrix tail = o.contains("tail") ? sized_matrix(o["tail"], m, n, "tail") : Matrix(m, n);
      Vec t = Cochain::from_map(tail).coords();
      e.coords.insert(e.coords.end(), t.begin(), t.end());
    } else {
      require(!o.contains("tail"), ErrorCode::InvalidInput, "only degree-2 rly cochains have a tail");
    }
    return e;
  }

  DeformationEntry deformation(const Json& o) {
    DeformationEntry e;
    e.algebra = string_field(o, "algebra");
    const LyAlgebra& a = algebra_ref(e.algebra);
    const std::size_t n = a.dim();
    e.op = string_field(o, "operator");
    const ReynoldsOperator& r = op_on(e.op, e.algebra).op;
    const Json terms = o.value("terms", Json::array());
    require(terms.is_array(), ErrorCode::ParseError, "terms must be a list");
    std::size_t order = o.contains("order") ? size_field(o["order"], "order") : terms.size();
    require(terms.size() <= order, ErrorCode::DimMismatch, "more terms than the declared order");
    e.def = TruncatedDeformation::constant(a, r, order);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const Json& t = terms[i];
      e.def.F[i + 1] = sparse_tensor(t.value("binary", Json()), {n, n, n}, true, "binary");
      e.def.G[i + 1] = sparse_tensor(t.value("ternary", Json()), {n, n, n, n}, true, "ternary");
      if (t.contains("operator")) e.def.T[i + 1] = sized_matrix(t["operator"], n, n, "operator");
    }
    return e;
  }

  ExtensionEntry extension(const Json& o) {
    ExtensionEntry e;
    e.algebra = string_field(o, "algebra");
    const std::size_t n = algebra_ref(e.algebra).dim();
    e.op = string_field(o, "operator");
    op_on(e.op, e.algebra);
    if (o.contains("total")) {
      AbelianExtension t;
      const std::string total = string_field(o, "total");
      t.total = algebra_ref(total);
      t.op = op_on(string_field(o, "total_operator"), total).op;
      const std::size_t big = t.total.dim();
      require(big >= n, ErrorCode::DimMismatch, "total algebra smaller than the base");
      t.inject = sized_matrix(field(o, "inject"), big, big - n, "inject");
      t.project = sized_matrix(field(o, "project"), n, big, "project");
      e.total = std::move(t);
      return e;
    }
    e.rep = string_field(o, "rep");
    const Representation& rep = rep_on(e.rep, e.algebra).rep;
    rep.require_module_op();
    const std::size_t m = rep.module_dim();
    e.cocycle.nu = sparse_tensor(o.value("nu", Json()), {n, n, m}, true, "nu");
    e.cocycle.psi = sparse_tensor(o.value("psi", Json()), {n, n, n, m}, true, "psi");
    e.cocycle.chi = o.contains("chi") ? sized_matrix(o["chi"], m, n, "chi") : Matrix(m, n);
    return e;
  }

  Workspace& ws_;
  std::map<ObjectKind, std::vector<Item>> items_;
};

Workspace Workspace::from_text(const std::vector<std::pair<std::string, std::string>>& sources) {
  Workspace ws;
  std::vector<Json> docs;
  docs.reserve(sources.size());
  for (const auto& [source, text] : sources) {
    try {
      docs.push_back(Json::parse(text));
    } catch (const Json::parse_error& e) {
      auto [line, col] = line_col(text, e.byte);
      std::string what = e.what();
      auto pos = what.find("parse error");
      fail(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                                      (pos == std::string::npos ? what : what.substr(pos)));
    }
  }
  WorkspaceBuilder builder(ws);
  for (std::size_t i = 0; i < docs.size(); ++i) builder.add_document(sources[i].first, docs[i]);
  builder.build();
  return ws;
}

Workspace Workspace::load(const std::vector<std::string>& paths) {
  std::vector<std::pair<std::string, std::string>> sources;
  for (const auto& p : paths) {
    std::ifstream in(p);
    require(static_cast<bool>(in), ErrorCode::ParseError, p + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.emplace_back(p, buf.str());
  }
  return from_text(sources);
}

std::optional<ObjectKind> Workspace::kind_of(const std::string& name) const {
  auto it = kinds_.find(name);
  if (it == kinds_.end()) return std::nullopt;
  return it->second;
}

namespace {
template <class M>
const typename M::mapped_type& lookup(const M& map, const std::string& name, std::string_view kind) {
  auto it = map.find(name);
  if (it == map.end()) fail(ErrorCode::NameNotFound, "no " + std::string(kind) + " named '" + name + "'");
  return it->second;
}
}  // namespace

const LyAlgebra& Workspace::algebra(const std::string& name) const { return lookup(algebras_, name, "algebra"); }
const OperatorEntry& Workspace::op(const std::string& name) const { return lookup(ops_, name, "operator"); }
const RepEntry& Workspace::rep(const std::string& name) const { return lookup(reps_, name, "representation"); }
const CochainEntry& Workspace::cochain(const std::string& name) const { return lookup(cochains_, name, "cochain"); }
const DeformationEntry& Workspace::deformation(const std::string& name) const {
  return lookup(deformations_, name, "deformation");
}
const ExtensionEntry& Workspace::extension(const std::string& name) const {
  return lookup(extensions_, name, "extension");
}

}  // namespace rly
