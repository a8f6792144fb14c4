#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhopf/field.hpp"

namespace qhopf {

struct Leg {
  std::string name;
  std::size_t dim = 1;
  bool operator==(const Leg&) const = default;
};

// Which implementation of the contraction kernel to run.
enum class KernelMode { parallel, reference };

namespace detail {
// Rationals are held as mpq; prime-field entries as residues in [0, p).
using Storage = std::variant<std::vector<mpq_class>, std::vector<std::uint64_t>>;
}  // namespace detail

// Dense exact tensor with named legs, row-major (first leg slowest).
class Tensor {
 public:
  Tensor();  // rank 0 zero over Q
  Tensor(Field field, std::vector<Leg> legs);

  static Tensor scalar(Field field, const Scalar& value);
  // Kronecker delta with legs [in, out].
  static Tensor identity(Field field, std::size_t dim, std::string in, std::string out);

  const Field& field() const noexcept { return field_; }
  const std::vector<Leg>& legs() const noexcept { return legs_; }
  std::size_t rank() const noexcept { return legs_.size(); }
  std::size_t size() const noexcept { return size_; }
  std::vector<std::size_t> dims() const;
  std::vector<std::string> names() const;
  bool has_leg(std::string_view name) const;
  std::size_t leg_index(std::string_view name) const;
  std::size_t dim(std::string_view name) const { return legs_[leg_index(name)].dim; }

  Scalar get(std::size_t flat) const;
  void set(std::size_t flat, const Scalar& value);
  Scalar at(std::span<const std::size_t> index) const;
  Scalar at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }
  void set_at(std::span<const std::size_t> index, const Scalar& value);
  void set_at(std::initializer_list<std::size_t> index, const Scalar& value) {
    set_at(std::span<const std::size_t>(index.begin(), index.size()), value);
  }
  std::size_t flat_index(std::span<const std::size_t> index) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  Tensor renamed(std::string_view from, std::string to) const;
  Tensor with_names(std::vector<std::string> names) const;
  // Reorders legs so that leg k is the leg named order[k]; order must name every leg.
  Tensor ordered(std::span<const std::string> order) const;
  Tensor ordered(std::initializer_list<std::string> order) const {
    return ordered(std::span<const std::string>(order.begin(), order.size()));
  }
  // new leg k = old leg perm[k]
  Tensor permuted(std::span<const std::size_t> perm) const;
  // Fuses the named legs (in the given order) into one leg placed where the first one was.
  Tensor merged(std::span<const std::string> names, std::string into) const;
  Tensor merged(std::initializer_list<std::string> names, std::string into) const {
    return merged(std::span<const std::string>(names.begin(), names.size()), std::move(into));
  }
  // Splits a leg into consecutive legs whose dims multiply to its dim.
  Tensor split(std::string_view name, std::vector<Leg> parts) const;

  Tensor operator+(const Tensor& other) const;
  Tensor operator-(const Tensor& other) const;
  Tensor scaled(const Scalar& s) const;

  // Exact comparison. Legs must agree as a set of names; the other tensor is
  // reordered to this tensor's leg order when needed.
  bool operator==(const Tensor& other) const;
  std::optional<std::size_t> first_difference(const Tensor& other) const;
  std::string describe(std::size_t max_terms = 24) const;

  static Tensor outer(const Tensor& a, const Tensor& b, KernelMode mode = KernelMode::parallel);

  // General contraction: the legs named in `in` are consumed against the leading
  // legs of `weight`; the remaining legs of `weight` become new legs `out`, inserted
  // where the first consumed leg sat (appended when `in` is empty).
  Tensor contract(std::span<const std::string> in, const Tensor& weight, std::span<const Leg> out,
                  KernelMode mode = KernelMode::parallel) const;
  Tensor contract(std::initializer_list<std::string> in, const Tensor& weight,
                  std::initializer_list<Leg> out, KernelMode mode = KernelMode::parallel) const {
    return contract(std::span<const std::string>(in.begin(), in.size()), weight,
                    std::span<const Leg>(out.begin(), out.size()), mode);
  }
  // Sums over the diagonal of two legs of equal dimension.
  Tensor trace(std::string_view a, std::string_view b) const;

  const detail::Storage& storage() const noexcept { return data_; }
  detail::Storage& storage() noexcept { return data_; }

 private:
  Field field_;
  std::vector<Leg> legs_;
  std::size_t size_ = 1;
  detail::Storage data_;
};

}  // namespace qhopf
