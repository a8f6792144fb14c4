#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhopf/field.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// Matrix of a linear map src -> dst; stored as a tensor with legs ["out", "in"].
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Field field, std::size_t dst_dim, std::size_t src_dim);

  static LinearMap identity(Field field, std::size_t dim);
  // Reads a map out of a tensor whose legs are exactly out_legs followed by in_legs
  // (in any stored order); legs are flattened row-major in the listed order.
  static LinearMap from_tensor(const Tensor& t, std::span<const std::string> out_legs,
                               std::span<const std::string> in_legs);
  static LinearMap from_tensor(const Tensor& t, std::initializer_list<std::string> out_legs,
                               std::initializer_list<std::string> in_legs) {
    return from_tensor(t, std::span<const std::string>(out_legs.begin(), out_legs.size()),
                       std::span<const std::string>(in_legs.begin(), in_legs.size()));
  }
  static LinearMap from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const noexcept { return m_.field(); }
  std::size_t src_dim() const noexcept { return src_; }
  std::size_t dst_dim() const noexcept { return dst_; }
  Scalar get(std::size_t row, std::size_t col) const { return m_.get(row * src_ + col); }
  void set(std::size_t row, std::size_t col, const Scalar& v) { m_.set(row * src_ + col, v); }
  const Tensor& matrix() const noexcept { return m_; }

  // Weight for Tensor::contract: legs [in, out].
  Tensor as_weight() const;
  // Tensor with the given leg names: [out..., in...] split to the given dims.
  Tensor as_tensor(std::vector<Leg> out_legs, std::vector<Leg> in_legs) const;

  // this ∘ inner
  LinearMap compose(const LinearMap& inner) const;
  LinearMap operator*(const LinearMap& inner) const { return compose(inner); }
  // Kronecker product, acting on the row-major product space.
  LinearMap kron(const LinearMap& other) const;
  LinearMap transpose() const;
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap scaled(const Scalar& s) const;

  std::size_t rank() const;
  std::optional<LinearMap> inverse() const;
  // Some x with this·x = b (b given as a dst_dim × k map); nullopt when inconsistent.
  std::optional<LinearMap> solve(const LinearMap& b) const;
  // Basis of the kernel as src_dim x 1 columns.
  std::vector<LinearMap> kernel() const;

  bool is_identity() const;
  bool is_zero() const { return m_.is_zero(); }
  bool operator==(const LinearMap& o) const;
  std::string describe(std::size_t max_terms = 24) const { return m_.describe(max_terms); }

 private:
  std::size_t dst_ = 0;
  std::size_t src_ = 0;
  Tensor m_;
};

}  // namespace qhopf
