#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhopf/algebra_element.hpp"
#include "qhopf/linear_map.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// Structure tensors of a finite-dimensional algebra with a (quasi-)coalgebra structure.
//   mult[a,b,c]:   e_a e_b = Σ_c mult[a,b,c] e_c
//   comult[a,b,c]: Δ(e_a) = Σ comult[a,b,c] e_b ⊗ e_c
//   antipode:      S(e_a) = Σ_b S(b,a) e_b  (matrix acting on coordinate columns)
struct AlgebraStructure {
  Field field;
  std::size_t n = 0;
  std::vector<std::string> basis;
  Tensor mult;    // legs a,b,c
  Tensor unit;    // leg a
  Tensor comult;  // legs a,b,c
  Tensor counit;  // leg a
  std::optional<LinearMap> antipode;
  std::optional<LinearMap> antipode_inv;
};

// Eager evaluation of Sweedler-index expressions on tensors with named legs.
// Every operation consumes and produces legs by name; module legs carry the
// action and coaction tensors of the module they belong to.
//
// Module tensor conventions:
//   action[h, v, w]:        e_h · v_v = Σ_w action[h,v,w] v_w   (same for right actions, v · e_h)
//   left coaction[v, h, w]:  λ(v_v) = Σ coaction[v,h,w] e_h ⊗ v_w
//   right coaction[v, w, h]: ρ(v_v) = Σ coaction[v,w,h] v_w ⊗ e_h
class Sweedler {
 public:
  explicit Sweedler(std::shared_ptr<const AlgebraStructure> s);

  const AlgebraStructure& structure() const noexcept { return *s_; }
  const Field& field() const noexcept { return s_->field; }
  std::size_t n() const noexcept { return s_->n; }

  Tensor load(const AlgebraElement& x, std::vector<std::string> names) const;
  Tensor one(const std::string& name) const;
  // δ over H with legs [in, out]; used to carry a free algebra argument.
  Tensor free(const std::string& in, const std::string& out) const;

  // a := a·b; b disappears. The product keeps the name `a` unless `as` is given.
  Tensor mul(const Tensor& t, const std::string& a, const std::string& b,
             const std::string& as = {}) const;
  // Left-to-right product of several legs into the first.
  Tensor mul(const Tensor& t, std::initializer_list<std::string> legs, const std::string& as = {}) const;
  // a := c·a and a := a·c for a fixed element c.
  Tensor lmul(const Tensor& t, const std::string& a, const AlgebraElement& c) const;
  Tensor rmul(const Tensor& t, const std::string& a, const AlgebraElement& c) const;
  Tensor delta(const Tensor& t, const std::string& a, const std::string& a1, const std::string& a2) const;
  Tensor eps(const Tensor& t, const std::string& a) const;
  Tensor S(const Tensor& t, const std::string& a) const;
  Tensor Sinv(const Tensor& t, const std::string& a) const;
  // Applies a linear map to one leg.
  Tensor apply(const Tensor& t, const std::string& a, const LinearMap& m) const;

  Tensor act(const Tensor& t, const Tensor& action, const std::string& h, const std::string& v) const;
  Tensor coact_left(const Tensor& t, const Tensor& coaction, const std::string& v,
                    const std::string& h) const;
  Tensor coact_right(const Tensor& t, const Tensor& coaction, const std::string& v,
                     const std::string& h) const;

  // Componentwise product in H^{⊗k}.
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement multiply(std::initializer_list<AlgebraElement> xs) const;
  AlgebraElement unit_element(std::size_t legs) const;
  // x on the given 1-based legs of an m-fold tensor power, unit elsewhere.
  AlgebraElement embed(const AlgebraElement& x, std::span<const std::size_t> positions,
                       std::size_t total) const;
  AlgebraElement embed(const AlgebraElement& x, std::initializer_list<std::size_t> positions,
                       std::size_t total) const {
    return embed(x, std::span<const std::size_t>(positions.begin(), positions.size()), total);
  }
  AlgebraElement coproduct_at(const AlgebraElement& x, std::size_t leg) const;
  AlgebraElement counit_at(const AlgebraElement& x, std::size_t leg) const;
  AlgebraElement antipode_each(const AlgebraElement& x) const;
  AlgebraElement antipode_inv_each(const AlgebraElement& x) const;
  Scalar counit_value(const AlgebraElement& x) const;
  // Matrix of y ↦ x·y on H^{⊗k}.
  LinearMap left_multiplication(const AlgebraElement& x) const;
  LinearMap right_multiplication(const AlgebraElement& x) const;
  // Solves x·y = 1 and checks y·x = 1; throws NotInvertible.
  AlgebraElement invert(const AlgebraElement& x) const;

  const Tensor& mult_weight() const noexcept { return s_->mult; }
  const Tensor& comult_weight() const noexcept { return s_->comult; }

 private:
  Tensor map_weight(const LinearMap& m) const;

  std::shared_ptr<const AlgebraStructure> s_;
  Tensor s_weight_;
  Tensor sinv_weight_;
};

}  // namespace qhopf
