#include "rly/cohomology.hpp"

#include "rly/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>

namespace rly {

namespace {

using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

Sparse sparse(std::span<const Scalar> v) {
  Sparse out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

Sparse unit(std::size_t i) { return Sparse{{i, Scalar(1)}}; }

/// Accumulates sums of terms  c * M * (input block ib)  into output block ob,
/// either as a matrix of the linear map or as its value on one input vector.
class Accumulator {
 public:
  Accumulator(std::size_t m, std::size_t out_blocks, std::size_t in_blocks)
      : m_(m), mat_(out_blocks * m, in_blocks * m) {}
  Accumulator(std::size_t m, std::size_t out_blocks, const Vec& input)
      : m_(m), input_(&input), vec_(zero_vec(out_blocks * m)) {}

  void add(std::size_t ob, std::size_t ib, const Scalar& c, const Matrix* mm) {
    if (is_zero(c)) return;
    if (input_) {
      std::span<const Scalar> in(input_->data() + ib * m_, m_);
      if (rly::is_zero(in)) return;
      for (std::size_t a = 0; a < m_; ++a) {
        Scalar s = 0;
        if (mm) {
          for (std::size_t b = 0; b < m_; ++b) s += (*mm)(a, b) * in[b];
        } else {
          s = in[a];
        }
        vec_[ob * m_ + a] += c * s;
      }
      return;
    }
    for (std::size_t a = 0; a < m_; ++a) {
      if (mm) {
        for (std::size_t b = 0; b < m_; ++b)
          if (!is_zero((*mm)(a, b))) mat_(ob * m_ + a, ib * m_ + b) += c * (*mm)(a, b);
      } else {
        mat_(ob * m_ + a, ib * m_ + a) += c;
      }
    }
  }

  Matrix take_matrix() { return std::move(mat_); }
  Vec take_vec() { return std::move(vec_); }

 private:
  std::size_t m_;
  const Vec* input_ = nullptr;
  Matrix mat_;
  Vec vec_;
};

/// Multilinear expansion of f(W_1..W_k) (last == nullptr) or g(W_1..W_k, z)
/// (or h(z) in degree 1) on sparse arguments: calls emit(input block, coeff).
void expand(const CochainShape& s, const std::vector<const Sparse*>& wedges, const Sparse* last,
            const std::function<void(std::size_t, const Scalar&)>& emit) {
  const std::size_t W = wedge_count(s.n);
  if (s.degree == 1) {
    for (const auto& [l, c] : *last) emit(l, c);
    return;
  }
  std::function<void(std::size_t, std::size_t, const Scalar&)> rec = [&](std::size_t depth, std::size_t lex,
                                                                          const Scalar& coeff) {
    if (depth == wedges.size()) {
      if (!last) {
        emit(lex, coeff);
      } else {
        for (const auto& [z, c] : *last) emit(s.f_blocks() + lex * s.n + z, coeff * c);
      }
      return;
    }
    for (const auto& [w, c] : *wedges[depth]) rec(depth + 1, lex * W + w, coeff * c);
  };
  rec(0, 0, Scalar(1));
}

void check_degree(std::size_t p) {
  require(p >= 1 && p <= kMaxDegree, ErrorCode::DegreeOutOfRange,
          "degree " + std::to_string(p) + " outside [1, " + std::to_string(kMaxDegree) + "]");
}

/// Decodes a lexicographic tuple of k wedge indices.
std::vector<std::size_t> decode(std::size_t lex, std::size_t k, std::size_t base) {
  std::vector<std::size_t> out(k);
  for (std::size_t i = k; i-- > 0;) {
    out[i] = lex % base;
    lex /= base;
  }
  return out;
}

void build_delta(const LyAlgebra& a, const Representation& rep, std::size_t p, Accumulator& acc) {
  const std::size_t n = a.dim();
  const CochainShape in{n, rep.module_dim(), p};
  const CochainShape out{n, rep.module_dim(), p + 1};
  const auto wb = wedge_basis(n);
  const std::size_t W = wb.size();
  const auto dt = d_table(a, rep);
  auto D = [&](std::size_t i, std::size_t j) -> const Matrix* { return &dt[i * n + j]; };
  auto e = [n](std::size_t i) { return unit_vec(n, i); };
  const std::size_t k = p - 1;  // wedge arity of the input

  // Output f tuples.
  for (std::size_t ob = 0; ob < out.f_blocks(); ++ob) {
    auto ws = decode(ob, k + 1, W);
    std::vector<std::size_t> xs(k + 1), ys(k + 1);
    for (std::size_t t = 0; t <= k; ++t) std::tie(xs[t], ys[t]) = wb[ws[t]];
    std::vector<Sparse> units(k + 1);
    for (std::size_t t = 0; t <= k; ++t) units[t] = unit(ws[t]);

    if (k == 0) {
      // rho(x)h(y) - rho(y)h(x) - h([x,y])
      const std::size_t x = xs[0], y = ys[0];
      acc.add(ob, y, 1, &rep.rho(x));
      acc.add(ob, x, -1, &rep.rho(y));
      for (const auto& [l, c] : sparse(a.basis_bracket2(x, y))) acc.add(ob, l, -c, nullptr);
      continue;
    }
    const Scalar sign_k = (k % 2 == 0) ? 1 : -1;
    std::vector<const Sparse*> head;
    for (std::size_t t = 0; t < k; ++t) head.push_back(&units[t]);
    {
      const std::size_t x = xs[k], y = ys[k];
      Sparse sy = unit(y), sx = unit(x), sb = sparse(a.basis_bracket2(x, y));
      expand(in, head, &sy, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, sign_k * c, &rep.rho(x)); });
      expand(in, head, &sx, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, -sign_k * c, &rep.rho(y)); });
      expand(in, head, &sb, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, -sign_k * c, nullptr); });
    }
    for (std::size_t t = 0; t < k; ++t) {
      const Scalar sg = (t % 2 == 0) ? 1 : -1;  // (-1)^{(t+1)+1}
      std::vector<const Sparse*> rest;
      for (std::size_t u = 0; u <= k; ++u)
        if (u != t) rest.push_back(&units[u]);
      expand(in, rest, nullptr, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, sg * c, D(xs[t], ys[t])); });
    }
    for (std::size_t t = 0; t <= k; ++t)
      for (std::size_t l = t + 1; l <= k; ++l) {
        const Scalar sg = (t % 2 == 0) ? -1 : 1;  // (-1)^{t+1}
        Sparse repl = sparse(wedge_coords(a.basis_bracket3(xs[t], ys[t], xs[l]), e(ys[l])) +
                             wedge_coords(e(xs[l]), a.basis_bracket3(xs[t], ys[t], ys[l])));
        std::vector<const Sparse*> args;
        for (std::size_t u = 0; u <= k; ++u) {
          if (u == t) continue;
          args.push_back(u == l ? &repl : &units[u]);
        }
        expand(in, args, nullptr, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, sg * c, nullptr); });
      }
  }

  // Output g tuples.
  for (std::size_t gb = 0; gb < out.g_blocks(); ++gb) {
    const std::size_t ob = out.f_blocks() + gb;
    const std::size_t z = gb % n;
    auto ws = decode(gb / n, k + 1, W);
    std::vector<std::size_t> xs(k + 1), ys(k + 1);
    for (std::size_t t = 0; t <= k; ++t) std::tie(xs[t], ys[t]) = wb[ws[t]];
    std::vector<Sparse> units(k + 1);
    for (std::size_t t = 0; t <= k; ++t) units[t] = unit(ws[t]);

    if (k == 0) {
      // D(x,y)h(z) + theta(y,z)h(x) - theta(x,z)h(y) - h({x,y,z})
      const std::size_t x = xs[0], y = ys[0];
      acc.add(ob, z, 1, D(x, y));
      acc.add(ob, x, 1, &rep.theta(y, z));
      acc.add(ob, y, -1, &rep.theta(x, z));
      for (const auto& [l, c] : sparse(a.basis_bracket3(x, y, z))) acc.add(ob, l, -c, nullptr);
      continue;
    }
    const Scalar sign_k = (k % 2 == 0) ? 1 : -1;
    Sparse sz = unit(z);
    std::vector<const Sparse*> head;
    for (std::size_t t = 0; t < k; ++t) head.push_back(&units[t]);
    {
      const std::size_t x = xs[k], y = ys[k];
      Sparse sx = unit(x), sy = unit(y);
      expand(in, head, &sx, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, sign_k * c, &rep.theta(y, z)); });
      expand(in, head, &sy, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, -sign_k * c, &rep.theta(x, z)); });
    }
    for (std::size_t t = 0; t <= k; ++t) {
      const Scalar sg_plus = (t % 2 == 0) ? 1 : -1;  // (-1)^{(t+1)+1}
      std::vector<const Sparse*> rest;
      for (std::size_t u = 0; u <= k; ++u)
        if (u != t) rest.push_back(&units[u]);
      expand(in, rest, &sz, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, sg_plus * c, D(xs[t], ys[t])); });
      Sparse tz = sparse(a.basis_bracket3(xs[t], ys[t], z));
      expand(in, rest, &tz, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, -sg_plus * c, nullptr); });
    }
    for (std::size_t t = 0; t <= k; ++t)
      for (std::size_t l = t + 1; l <= k; ++l) {
        const Scalar sg = (t % 2 == 0) ? -1 : 1;
        Sparse repl = sparse(wedge_coords(a.basis_bracket3(xs[t], ys[t], xs[l]), e(ys[l])) +
                             wedge_coords(e(xs[l]), a.basis_bracket3(xs[t], ys[t], ys[l])));
        std::vector<const Sparse*> args;
        for (std::size_t u = 0; u <= k; ++u) {
          if (u == t) continue;
          args.push_back(u == l ? &repl : &units[u]);
        }
        expand(in, args, &sz, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, sg * c, nullptr); });
      }
  }
}

void build_phi(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, std::size_t p,
               Accumulator& acc) {
  const std::size_t n = a.dim(), m = rep.module_dim();
  const Matrix& tv = rep.require_module_op();
  require(r.matrix.rows() == n && r.matrix.cols() == n, ErrorCode::DimMismatch, "operator matrix side");
  const CochainShape s{n, m, p};
  const Scalar& w = r.weight;
  std::vector<Vec> tcol(n);
  for (std::size_t i = 0; i < n; ++i) tcol[i] = r.matrix.column(i);
  const Matrix neg_tv = -tv;
  if (p == 1) {
    for (std::size_t l = 0; l < n; ++l) {
      for (const auto& [j, c] : sparse(tcol[l])) acc.add(l, j, c, nullptr);
      acc.add(l, l, 1, &neg_tv);
    }
    return;
  }
  const std::size_t k = p - 1;
  const auto wb = wedge_basis(n);
  const std::size_t W = wb.size();
  auto run = [&](std::size_t ob, const std::vector<std::size_t>& slots, bool ternary) {
    const std::size_t nslots = slots.size();
    const Scalar coeff = ternary ? Scalar(2 * k) * w : Scalar(2 * k - 1) * w;
    const Matrix full = Matrix::identity(m) - coeff * tv;
    // id_slot == nslots means T in every slot.
    for (std::size_t id_slot = 0; id_slot <= nslots; ++id_slot) {
      std::vector<Vec> vals(nslots);
      for (std::size_t i = 0; i < nslots; ++i) vals[i] = (i == id_slot) ? unit_vec(n, slots[i]) : tcol[slots[i]];
      std::vector<Sparse> wedge_args(k);
      std::vector<const Sparse*> ptrs;
      for (std::size_t r2 = 0; r2 < k; ++r2) {
        wedge_args[r2] = sparse(wedge_coords(vals[2 * r2], vals[2 * r2 + 1]));
        ptrs.push_back(&wedge_args[r2]);
      }
      Sparse last;
      if (ternary) last = sparse(vals.back());
      const Matrix* mm = id_slot == nslots ? &full : &neg_tv;
      expand(s, ptrs, ternary ? &last : nullptr, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, c, mm); });
    }
  };
  for (std::size_t ob = 0; ob < s.f_blocks(); ++ob) {
    auto ws = decode(ob, k, W);
    std::vector<std::size_t> slots;
    for (auto wi : ws) {
      slots.push_back(wb[wi].first);
      slots.push_back(wb[wi].second);
    }
    run(ob, slots, false);
  }
  for (std::size_t gb = 0; gb < s.g_blocks(); ++gb) {
    auto ws = decode(gb / n, k, W);
    std::vector<std::size_t> slots;
    for (auto wi : ws) {
      slots.push_back(wb[wi].first);
      slots.push_back(wb[wi].second);
    }
    slots.push_back(gb % n);
    run(s.f_blocks() + gb, slots, true);
  }
}

void require_pair(const LyAlgebra& a, const Representation& rep) {
  require(a.dim() == rep.algebra_dim(), ErrorCode::DimMismatch, "representation is over another dimension");
}

}  // namespace

std::string_view to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::LY: return "ly";
    case ComplexKind::RO: return "ro";
    case ComplexKind::RLY: return "rly";
  }
  return "?";
}

ComplexKind parse_complex_kind(std::string_view s) {
  std::string low(s);
  std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
  if (low == "ly") return ComplexKind::LY;
  if (low == "ro") return ComplexKind::RO;
  if (low == "rly") return ComplexKind::RLY;
  fail(ErrorCode::InvalidInput, "unknown complex '" + std::string(s) + "' (expected ly, ro or rly)");
}

std::size_t cochain_dim(ComplexKind k, std::size_t n, std::size_t m, std::size_t p) {
  return k == ComplexKind::RLY ? RlyCochain::dim(n, m, p) : CochainShape{n, m, p}.dim();
}

Cochain delta(const LyAlgebra& a, const Representation& rep, const Cochain& c) {
  require_pair(a, rep);
  const CochainShape s = c.shape();
  require(s.n == a.dim() && s.m == rep.module_dim(), ErrorCode::ShapeMismatch, "cochain shape");
  const CochainShape out{s.n, s.m, s.degree + 1};
  Accumulator acc(s.m, out.blocks(), c.coords());
  build_delta(a, rep, s.degree, acc);
  return Cochain(out, acc.take_vec());
}

Matrix delta_matrix(const LyAlgebra& a, const Representation& rep, std::size_t p) {
  check_degree(p);
  require_pair(a, rep);
  const std::size_t n = a.dim(), m = rep.module_dim();
  Accumulator acc(m, CochainShape{n, m, p + 1}.blocks(), CochainShape{n, m, p}.blocks());
  build_delta(a, rep, p, acc);
  return acc.take_matrix();
}

Cochain partial(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, const Cochain& c) {
  return delta(descendant_algebra(a, r), induced_rep(a, r, rep), c);
}

Cochain phi(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, const Cochain& c) {
  require_pair(a, rep);
  const CochainShape s = c.shape();
  require(s.n == a.dim() && s.m == rep.module_dim(), ErrorCode::ShapeMismatch, "cochain shape");
  Accumulator acc(s.m, s.blocks(), c.coords());
  build_phi(a, r, rep, s.degree, acc);
  return Cochain(s, acc.take_vec());
}

Matrix phi_matrix(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, std::size_t p) {
  check_degree(p);
  require_pair(a, rep);
  const CochainShape s{a.dim(), rep.module_dim(), p};
  Accumulator acc(s.m, s.blocks(), s.blocks());
  build_phi(a, r, rep, p, acc);
  return acc.take_matrix();
}

RlyCochain d_rly(const LyAlgebra& a, const ReynoldsOperator& r, const Representation& rep, const RlyCochain& c) {
  const std::size_t p = c.degree();
  require((p == 1) == !c.tail.has_value(), ErrorCode::ShapeMismatch, "mapping-cone cochain tail presence");
  Cochain top = delta(a, rep, c.top);
  Cochain tail = Scalar(-1) * phi(a, r, rep, c.top);
  if (c.tail) tail = tail - partial(a, r, rep, *c.tail);
  return RlyCochain{std::move(top), std::move(tail)};
}

Matrix admissibility_matrix(const LyAlgebra& a, const Representation& rep) {
  require_pair(a, rep);
  const std::size_t n = a.dim(), m = rep.module_dim();
  const CochainShape s{n, m, 2};
  Accumulator acc(m, n * n * n + n * n * n * n, s.blocks());
  auto e = [n](std::size_t i) { return unit_vec(n, i); };
  auto cycles = [](std::size_t x, std::size_t y, std::size_t z) {
    return std::array<std::array<std::size_t, 3>, 3>{{{x, y, z}, {y, z, x}, {z, x, y}}};
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t ob = (x * n + y) * n + z;
        for (auto [p, q, r] : cycles(x, y, z)) {
          Sparse bz = sparse(wedge_coords(a.basis_bracket2(p, q), e(r)));
          Sparse pq = sparse(wedge_coords(e(p), e(q)));
          Sparse sr = unit(r);
          expand(s, {&bz}, nullptr, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, c, nullptr); });
          expand(s, {&pq}, nullptr, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, -c, &rep.rho(r)); });
          expand(s, {&pq}, &sr, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, c, nullptr); });
        }
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t b = 0; b < n; ++b) {
          const std::size_t ob = n * n * n + ((x * n + y) * n + z) * n + b;
          Sparse sb = unit(b);
          for (auto [p, q, r] : cycles(x, y, z)) {
            Sparse bz = sparse(wedge_coords(a.basis_bracket2(p, q), e(r)));
            Sparse pq = sparse(wedge_coords(e(p), e(q)));
            expand(s, {&bz}, &sb, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, c, nullptr); });
            expand(s, {&pq}, nullptr, [&](std::size_t ib, const Scalar& c) { acc.add(ob, ib, c, &rep.theta(r, b)); });
          }
        }
  return acc.take_matrix();
}

CohomologyContext::CohomologyContext(LyAlgebra a, std::optional<ReynoldsOperator> r, Representation rep)
    : a_(std::move(a)), r_(std::move(r)), rep_(std::move(rep)) {
  require_pair(a_, rep_);
  if (r_)
    require(r_->matrix.rows() == a_.dim() && r_->matrix.cols() == a_.dim(), ErrorCode::DimMismatch,
            "operator matrix side");
}

const Matrix& CohomologyContext::cached(std::map<std::pair<int, std::size_t>, Matrix>& cache,
                                        std::pair<int, std::size_t> key, auto&& build) {
  std::lock_guard lock(mu_);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build()).first;
  return it->second;
}

const LyAlgebra& CohomologyContext::descendant() {
  std::lock_guard lock(mu_);
  require(r_.has_value(), ErrorCode::MissingModuleOp, "operator complexes need a Reynolds operator");
  if (!lt_) lt_ = descendant_algebra(a_, *r_);
  return *lt_;
}

const Representation& CohomologyContext::induced() {
  std::lock_guard lock(mu_);
  require(r_.has_value(), ErrorCode::MissingModuleOp, "operator complexes need a Reynolds operator");
  if (!rep_t_) rep_t_ = induced_rep(a_, *r_, rep_);
  return *rep_t_;
}

const Matrix& CohomologyContext::phi(std::size_t p) {
  check_degree(p);
  return cached(phi_, {0, p}, [&] {
    require(r_.has_value(), ErrorCode::MissingModuleOp, "the chain map needs a Reynolds operator");
    return phi_matrix(a_, *r_, rep_, p);
  });
}

const Matrix& CohomologyContext::differential(ComplexKind k, std::size_t p) {
  check_degree(p);
  return cached(diff_, {static_cast<int>(k), p}, [&]() -> Matrix {
    switch (k) {
      case ComplexKind::LY: return delta_matrix(a_, rep_, p);
      case ComplexKind::RO: return delta_matrix(descendant(), induced(), p);
      case ComplexKind::RLY: {
        const Matrix& dl = differential(ComplexKind::LY, p);
        const Matrix neg_phi = -phi(p);
        if (p == 1) return Matrix::vstack(dl, neg_phi);
        const Matrix neg_ro = -differential(ComplexKind::RO, p - 1);
        Matrix out(dl.rows() + neg_phi.rows(), dl.cols() + neg_ro.cols());
        out.set_block(0, 0, dl);
        out.set_block(dl.rows(), 0, neg_phi);
        out.set_block(dl.rows(), dl.cols(), neg_ro);
        return out;
      }
    }
    fail(ErrorCode::InvalidInput, "unknown complex");
  });
}

const Matrix& CohomologyContext::admissibility() {
  std::lock_guard lock(mu_);
  if (!adm_) {
    Matrix k = admissibility_matrix(a_, rep_);
    adm_ = Matrix::hstack(k, Matrix(k.rows(), CochainShape{n(), m(), 1}.dim()));
  }
  return *adm_;
}

ComplexReport CohomologyContext::report(ComplexKind k, std::size_t max_degree) {
  check_degree(max_degree);
  ComplexReport out;
  out.kind = k;
  std::size_t incoming = 0;
  for (std::size_t p = 1; p <= max_degree; ++p) {
    const Matrix& d = differential(k, p);
    const std::size_t r = rank(d);
    DegreeRow row;
    row.degree = p;
    row.dim_cochain = d.cols();
    row.rank_outgoing = r;
    row.dim_kernel = d.cols() - r;
    row.dim_image_incoming = incoming;
    require(row.dim_kernel >= incoming, ErrorCode::InternalInconsistency, "image exceeds kernel");
    row.betti = row.dim_kernel - incoming;
    out.rows.push_back(row);
    incoming = r;
    out.top_dim = d.rows();
    out.top_image = r;
  }
  for (std::size_t p = 1; p < max_degree; ++p)
    if (!(differential(k, p + 1) * differential(k, p)).is_zero()) out.squares_vanish = false;
  if (k != ComplexKind::LY) {
    bool ok = true;
    for (std::size_t p = 1; p < max_degree; ++p)
      if (phi(p + 1) * differential(ComplexKind::LY, p) != differential(ComplexKind::RO, p) * phi(p)) ok = false;
    out.chain_map = ok;
  }
  return out;
}

bool CohomologyContext::is_cocycle(ComplexKind k, std::size_t p, std::span<const Scalar> c) {
  const Matrix& d = differential(k, p);
  require(c.size() == d.cols(), ErrorCode::ShapeMismatch, "cochain coordinate count");
  return rly::is_zero(d.apply(c));
}

std::optional<Vec> CohomologyContext::preimage(ComplexKind k, std::size_t p, std::span<const Scalar> c) {
  check_degree(p);
  require(c.size() == cochain_dim(k, n(), m(), p), ErrorCode::ShapeMismatch, "cochain coordinate count");
  if (p == 1) return rly::is_zero(c) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(differential(k, p - 1), c);
}

bool CohomologyContext::cohomologous(ComplexKind k, std::size_t p, std::span<const Scalar> c1,
                                     std::span<const Scalar> c2) {
  require(c1.size() == c2.size(), ErrorCode::ShapeMismatch, "cochains of different size");
  Vec diff(c1.begin(), c1.end());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= c2[i];
  return is_coboundary(k, p, diff);
}

const SubspaceBasis& CohomologyContext::admissible_cocycles() {
  std::lock_guard lock(mu_);
  if (!adm_cocycles_)
    adm_cocycles_ = kernel_basis(Matrix::vstack(differential(ComplexKind::RLY, 2), admissibility()));
  return *adm_cocycles_;
}

std::vector<Vec> CohomologyContext::h2_representatives() {
  const Matrix& d1 = differential(ComplexKind::RLY, 1);
  std::vector<Vec> span = image_basis(d1).vectors;
  std::size_t r = span.size();
  std::vector<Vec> reps;
  for (const Vec& v : admissible_cocycles().vectors) {
    span.push_back(v);
    const std::size_t r2 = rank(Matrix::from_columns(d1.rows(), span));
    if (r2 > r) {
      reps.push_back(v);
      r = r2;
    } else {
      span.pop_back();
    }
  }
  return reps;
}

Matrix differential_matrix(const LyAlgebra& a, const std::optional<ReynoldsOperator>& r, const Representation& rep,
                           ComplexKind k, std::size_t p) {
  CohomologyContext ctx(a, r, rep);
  return ctx.differential(k, p);
}

ComplexReport cohomology_dims(const LyAlgebra& a, const std::optional<ReynoldsOperator>& r,
                              const Representation& rep, ComplexKind k, std::size_t max_degree) {
  CohomologyContext ctx(a, r, rep);
  return ctx.report(k, max_degree);
}

}  // namespace rly
