#include "qhopf/linear_map.hpp"

#include "arith.hpp"
#include "qhopf/errors.hpp"

namespace qhopf {

using detail::vec;
using detail::with_arith;

namespace {

// Row-reduces an r x c row-major matrix in place; returns pivot columns.
template <class A>
std::vector<std::size_t> rref(const A& ar, detail::Vec<A>& m, std::size_t rows, std::size_t cols,
                              std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = row; r < rows; ++r) {
      if (!A::is_zero(m[r * cols + col])) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m[sel * cols + c], m[row * cols + c]);
    }
    const auto inv = ar.inv(m[row * cols + col]);
    for (std::size_t c = 0; c < cols; ++c) m[row * cols + c] = ar.mul(m[row * cols + c], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || A::is_zero(m[r * cols + col])) continue;
      const auto factor = m[r * cols + col];
      for (std::size_t c = 0; c < cols; ++c) {
        if (A::is_zero(m[row * cols + c])) continue;
        m[r * cols + c] = ar.sub(m[r * cols + c], ar.mul(factor, m[row * cols + c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearMap::LinearMap(Field field, std::size_t dst_dim, std::size_t src_dim)
    : dst_(dst_dim), src_(src_dim), m_(field, {{"out", dst_dim}, {"in", src_dim}}) {}

LinearMap LinearMap::identity(Field field, std::size_t dim) {
  LinearMap m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, Scalar(1));
  return m;
}

LinearMap LinearMap::from_tensor(const Tensor& t, std::span<const std::string> out_legs,
                                 std::span<const std::string> in_legs) {
  std::vector<std::string> order(out_legs.begin(), out_legs.end());
  order.insert(order.end(), in_legs.begin(), in_legs.end());
  Tensor o = t.ordered(order);
  std::size_t dst = 1, src = 1;
  for (const auto& n : out_legs) dst *= t.dim(n);
  for (const auto& n : in_legs) src *= t.dim(n);
  LinearMap m;
  m.dst_ = dst;
  m.src_ = src;
  Tensor mat(t.field(), {{"out", dst}, {"in", src}});
  mat.storage() = o.storage();
  m.m_ = std::move(mat);
  return m;
}

LinearMap LinearMap::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t dst = rows.size();
  const std::size_t src = dst ? rows[0].size() : 0;
  LinearMap m(field, dst, src);
  for (std::size_t r = 0; r < dst; ++r) {
    if (rows[r].size() != src) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < src; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Tensor LinearMap::as_weight() const { return m_.ordered({"in", "out"}); }

Tensor LinearMap::as_tensor(std::vector<Leg> out_legs, std::vector<Leg> in_legs) const {
  std::size_t dst = 1, src = 1;
  for (const auto& l : out_legs) dst *= l.dim;
  for (const auto& l : in_legs) src *= l.dim;
  if (dst != dst_ || src != src_) throw DimensionMismatch("as_tensor: dims do not match map");
  std::vector<Leg> legs = out_legs;
  legs.insert(legs.end(), in_legs.begin(), in_legs.end());
  Tensor t(field(), legs);
  t.storage() = m_.storage();
  return t;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (src_ != inner.dst_) {
    throw DimensionMismatch("compose: " + std::to_string(dst_) + "x" + std::to_string(src_) +
                            " after " + std::to_string(inner.dst_) + "x" +
                            std::to_string(inner.src_));
  }
  // (this ∘ inner)[out, in] = Σ_k this[out, k] inner[k, in]
  const Tensor t = inner.m_.contract({"out"}, m_.ordered({"in", "out"}), {Leg{"out", dst_}});
  return from_tensor(t, {"out"}, {"in"});
}

LinearMap LinearMap::kron(const LinearMap& other) const {
  const Tensor a = m_.with_names({"o1", "i1"});
  const Tensor b = other.m_.with_names({"o2", "i2"});
  return from_tensor(Tensor::outer(a, b), {"o1", "o2"}, {"i1", "i2"});
}

LinearMap LinearMap::transpose() const {
  LinearMap t;
  t.dst_ = src_;
  t.src_ = dst_;
  t.m_ = m_.ordered({"in", "out"}).with_names({"out", "in"});
  return t;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (dst_ != o.dst_ || src_ != o.src_) throw DimensionMismatch("sum of maps of different shape");
  LinearMap r = *this;
  r.m_ = m_ + o.m_;
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const { return *this + o.scaled(Scalar(-1)); }

LinearMap LinearMap::scaled(const Scalar& s) const {
  LinearMap r = *this;
  r.m_ = m_.scaled(s);
  return r;
}

std::size_t LinearMap::rank() const {
  return with_arith(field(), [&](auto ar) -> std::size_t {
    using A = decltype(ar);
    auto m = vec<A>(m_.storage());
    return rref(ar, m, dst_, src_, src_).size();
  });
}

std::optional<LinearMap> LinearMap::inverse() const {
  if (dst_ != src_) return std::nullopt;
  const std::size_t n = dst_;
  return with_arith(field(), [&](auto ar) -> std::optional<LinearMap> {
    using A = decltype(ar);
    const auto& src = vec<A>(m_.storage());
    detail::Vec<A> aug(n * 2 * n, ar.zero());
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug[r * 2 * n + c] = src[r * n + c];
      aug[r * 2 * n + n + r] = ar.one();
    }
    if (rref(ar, aug, n, 2 * n, n).size() != n) return std::nullopt;
    LinearMap inv(field(), n, n);
    auto& out = vec<A>(inv.m_.storage());
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) out[r * n + c] = aug[r * 2 * n + n + c];
    }
    return inv;
  });
}

std::optional<LinearMap> LinearMap::solve(const LinearMap& b) const {
  if (b.dst_ != dst_) throw DimensionMismatch("solve: right-hand side has wrong height");
  const std::size_t rows = dst_, n = src_, k = b.src_, cols = n + k;
  return with_arith(field(), [&](auto ar) -> std::optional<LinearMap> {
    using A = decltype(ar);
    const auto& a = vec<A>(m_.storage());
    const auto& bb = vec<A>(b.m_.storage());
    detail::Vec<A> aug(rows * cols, ar.zero());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < n; ++c) aug[r * cols + c] = a[r * n + c];
      for (std::size_t c = 0; c < k; ++c) aug[r * cols + n + c] = bb[r * k + c];
    }
    const auto pivots = rref(ar, aug, rows, cols, n);
    for (std::size_t r = pivots.size(); r < rows; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        if (!A::is_zero(aug[r * cols + n + c])) return std::nullopt;
      }
    }
    LinearMap x(field(), n, k);
    auto& out = vec<A>(x.m_.storage());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = 0; c < k; ++c) out[pivots[r] * k + c] = aug[r * cols + n + c];
    }
    return x;
  });
}

std::vector<LinearMap> LinearMap::kernel() const {
  return with_arith(field(), [&](auto ar) -> std::vector<LinearMap> {
    using A = decltype(ar);
    auto m = vec<A>(m_.storage());
    const auto pivots = rref(ar, m, dst_, src_, src_);
    std::vector<bool> is_pivot(src_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<LinearMap> basis;
    for (std::size_t c = 0; c < src_; ++c) {
      if (is_pivot[c]) continue;
      LinearMap v(field(), src_, 1);
      auto& out = vec<A>(v.m_.storage());
      out[c] = ar.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = ar.neg(m[r * src_ + c]);
      basis.push_back(std::move(v));
    }
    return basis;
  });
}

bool LinearMap::is_identity() const { return dst_ == src_ && *this == identity(field(), dst_); }

bool LinearMap::operator==(const LinearMap& o) const {
  return dst_ == o.dst_ && src_ == o.src_ && m_ == o.m_;
}

}  // namespace qhopf
