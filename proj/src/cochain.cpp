#include "rly/cochain.hpp"

#include "rly/error.hpp"

namespace rly {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> wedge_basis(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::size_t wedge_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::size_t wedge_index(std::size_t n, std::size_t i, std::size_t j) {
  require(i < j && j < n, ErrorCode::IndexOutOfRange, "wedge index needs i < j < n");
  // rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i)
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Vec wedge_coords(std::span<const Scalar> x, std::span<const Scalar> y) {
  require(x.size() == y.size(), ErrorCode::DimMismatch, "wedge of vectors of different length");
  const std::size_t n = x.size();
  Vec out = zero_vec(wedge_count(n));
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++w) out[w] = x[i] * y[j] - x[j] * y[i];
  return out;
}

std::size_t CochainShape::f_blocks() const { return degree == 1 ? 0 : ipow(wedge_count(n), degree - 1); }
std::size_t CochainShape::g_blocks() const { return degree == 1 ? 0 : f_blocks() * n; }

Cochain::Cochain(CochainShape shape, Vec coords) : shape_(shape), coords_(std::move(coords)) {
  require(shape_.degree >= 1, ErrorCode::DegreeOutOfRange, "cochain degree must be at least 1");
  require(coords_.size() == shape_.dim(), ErrorCode::ShapeMismatch, "cochain coordinate count");
}

Cochain Cochain::from_map(const Matrix& h) {
  const std::size_t m = h.rows(), n = h.cols();
  Vec v(n * m);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t a = 0; a < m; ++a) v[l * m + a] = h(a, l);
  return Cochain({n, m, 1}, std::move(v));
}

Cochain Cochain::from_bilinear(const Tensor& f, const Tensor& g) {
  require(f.rank() == 3 && g.rank() == 4, ErrorCode::ShapeMismatch, "bilinear cochain tensor ranks");
  const std::size_t n = f.shape()[0], m = f.shape()[2];
  require(f.shape() == std::vector<std::size_t>{n, n, m} && g.shape() == std::vector<std::size_t>{n, n, n, m},
          ErrorCode::ShapeMismatch, "bilinear cochain tensor shapes");
  CochainShape s{n, m, 2};
  Vec v = zero_vec(s.dim());
  const std::size_t W = wedge_count(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < m; ++a) {
        require(f(i, j, a) == -f(j, i, a), ErrorCode::InvalidInput, "binary cochain part is not antisymmetric");
        for (std::size_t z = 0; z < n; ++z)
          require(g(i, j, z, a) == -g(j, i, z, a), ErrorCode::InvalidInput,
                  "ternary cochain part is not antisymmetric");
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t w = wedge_index(n, i, j);
      for (std::size_t a = 0; a < m; ++a) v[w * m + a] = f(i, j, a);
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t a = 0; a < m; ++a) v[(W + w * n + z) * m + a] = g(i, j, z, a);
    }
  return Cochain(s, std::move(v));
}

Matrix Cochain::as_map() const {
  require(shape_.degree == 1, ErrorCode::DegreeOutOfRange, "as_map needs a degree-1 cochain");
  Matrix h(shape_.m, shape_.n);
  for (std::size_t l = 0; l < shape_.n; ++l)
    for (std::size_t a = 0; a < shape_.m; ++a) h(a, l) = coords_[l * shape_.m + a];
  return h;
}

Tensor Cochain::full_f() const {
  require(shape_.degree == 2, ErrorCode::DegreeOutOfRange, "full_f needs a degree-2 cochain");
  const std::size_t n = shape_.n, m = shape_.m;
  Tensor f({n, n, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t w = wedge_index(n, i, j);
      for (std::size_t a = 0; a < m; ++a) {
        f(i, j, a) = coords_[w * m + a];
        f(j, i, a) = -coords_[w * m + a];
      }
    }
  return f;
}

Tensor Cochain::full_g() const {
  require(shape_.degree == 2, ErrorCode::DegreeOutOfRange, "full_g needs a degree-2 cochain");
  const std::size_t n = shape_.n, m = shape_.m, W = wedge_count(n);
  Tensor g({n, n, n, m});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t w = wedge_index(n, i, j);
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t a = 0; a < m; ++a) {
          const Scalar& c = coords_[(W + w * n + z) * m + a];
          g(i, j, z, a) = c;
          g(j, i, z, a) = -c;
        }
    }
  return g;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  require(a.shape() == b.shape(), ErrorCode::ShapeMismatch, "adding cochains of different shape");
  return Cochain(a.shape(), a.coords() + b.coords());
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  require(a.shape() == b.shape(), ErrorCode::ShapeMismatch, "subtracting cochains of different shape");
  return Cochain(a.shape(), a.coords() - b.coords());
}

Cochain operator*(const Scalar& c, const Cochain& a) { return Cochain(a.shape(), c * a.coords()); }

Vec RlyCochain::coords() const {
  Vec v = top.coords();
  if (tail) v.insert(v.end(), tail->coords().begin(), tail->coords().end());
  return v;
}

std::size_t RlyCochain::dim(std::size_t n, std::size_t m, std::size_t p) {
  std::size_t d = CochainShape{n, m, p}.dim();
  if (p >= 2) d += CochainShape{n, m, p - 1}.dim();
  return d;
}

RlyCochain RlyCochain::zero(std::size_t n, std::size_t m, std::size_t p) {
  return from_coords(n, m, p, zero_vec(dim(n, m, p)));
}

RlyCochain RlyCochain::from_coords(std::size_t n, std::size_t m, std::size_t p, std::span<const Scalar> v) {
  require(p >= 1, ErrorCode::DegreeOutOfRange, "cochain degree must be at least 1");
  require(v.size() == dim(n, m, p), ErrorCode::ShapeMismatch, "mapping-cone cochain coordinate count");
  CochainShape top{n, m, p};
  RlyCochain out{Cochain(top, Vec(v.begin(), v.begin() + top.dim())), std::nullopt};
  if (p >= 2) out.tail = Cochain({n, m, p - 1}, Vec(v.begin() + top.dim(), v.end()));
  return out;
}

}  // namespace rly
