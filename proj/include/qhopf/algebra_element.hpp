#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qhopf/field.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// Element of H^{⊗k}: n^k coefficients over the product basis, first leg slowest.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(Field field, std::size_t dim, std::size_t legs);
  // Takes the legs of t in their stored order; every leg must have dimension dim.
  static AlgebraElement from_tensor(const Tensor& t);
  static AlgebraElement from_tensor(const Tensor& t, std::span<const std::string> order);
  static AlgebraElement from_tensor(const Tensor& t, std::initializer_list<std::string> order) {
    return from_tensor(t, std::span<const std::string>(order.begin(), order.size()));
  }
  // e_{i1} ⊗ ... ⊗ e_{ik}
  static AlgebraElement basis(Field field, std::size_t dim, std::initializer_list<std::size_t> index);

  const Field& field() const noexcept { return t_.field(); }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t legs() const noexcept { return t_.rank(); }

  Scalar coeff(std::span<const std::size_t> index) const { return t_.at(index); }
  Scalar coeff(std::initializer_list<std::size_t> index) const { return t_.at(index); }
  void set(std::span<const std::size_t> index, const Scalar& v) { t_.set_at(index, v); }
  void set(std::initializer_list<std::size_t> index, const Scalar& v) { t_.set_at(index, v); }

  // Legs named "0", "1", ...
  const Tensor& tensor() const noexcept { return t_; }
  Tensor named(std::vector<std::string> names) const { return t_.with_names(std::move(names)); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& s) const;
  // Reorders legs: result leg k is leg perm[k] of this element.
  AlgebraElement permuted(std::span<const std::size_t> perm) const;
  AlgebraElement permuted(std::initializer_list<std::size_t> perm) const {
    return permuted(std::span<const std::size_t>(perm.begin(), perm.size()));
  }
  bool is_zero() const { return t_.is_zero(); }
  bool operator==(const AlgebraElement& o) const;
  std::string describe() const { return t_.describe(); }

 private:
  std::size_t dim_ = 0;
  Tensor t_;
};

}  // namespace qhopf
