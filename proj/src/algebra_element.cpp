#include "qhopf/algebra_element.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {
std::vector<Leg> positional_legs(std::size_t dim, std::size_t k) {
  std::vector<Leg> legs;
  for (std::size_t i = 0; i < k; ++i) legs.push_back({std::to_string(i), dim});
  return legs;
}
std::vector<std::string> positional_names(std::size_t k) {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < k; ++i) n.push_back(std::to_string(i));
  return n;
}
}  // namespace

AlgebraElement::AlgebraElement(Field field, std::size_t dim, std::size_t legs)
    : dim_(dim), t_(field, positional_legs(dim, legs)) {}

AlgebraElement AlgebraElement::from_tensor(const Tensor& t) {
  if (t.rank() == 0) throw DimensionMismatch("from_tensor: rank-0 tensor has no algebra legs");
  const std::size_t dim = t.legs()[0].dim;
  for (const auto& l : t.legs()) {
    if (l.dim != dim) throw DimensionMismatch("algebra element legs must share one dimension");
  }
  AlgebraElement x;
  x.dim_ = dim;
  x.t_ = t.with_names(positional_names(t.rank()));
  return x;
}

AlgebraElement AlgebraElement::from_tensor(const Tensor& t, std::span<const std::string> order) {
  return from_tensor(t.ordered(order));
}

AlgebraElement AlgebraElement::basis(Field field, std::size_t dim,
                                     std::initializer_list<std::size_t> index) {
  AlgebraElement x(field, dim, index.size());
  x.set(index, Scalar(1));
  return x;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r.t_ = t_ + o.t_;
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  r.t_ = t_ - o.t_;
  return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
  AlgebraElement r = *this;
  r.t_ = t_.scaled(s);
  return r;
}

AlgebraElement AlgebraElement::permuted(std::span<const std::size_t> perm) const {
  AlgebraElement r = *this;
  r.t_ = t_.permuted(perm).with_names(positional_names(legs()));
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return dim_ == o.dim_ && legs() == o.legs() && t_ == o.t_;
}

}  // namespace qhopf
