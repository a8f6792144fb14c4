#include "qhopf/sweedler.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {
std::vector<std::string> prefixed(const std::string& p, std::size_t k) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(p + std::to_string(i));
  return v;
}
}  // namespace

Sweedler::Sweedler(std::shared_ptr<const AlgebraStructure> s) : s_(std::move(s)) {
  if (s_->antipode) s_weight_ = map_weight(*s_->antipode);
  if (s_->antipode_inv) sinv_weight_ = map_weight(*s_->antipode_inv);
}

Tensor Sweedler::map_weight(const LinearMap& m) const {
  if (m.src_dim() != n() || m.dst_dim() != n()) throw DimensionMismatch("map on H has wrong shape");
  return m.as_weight();
}

Tensor Sweedler::load(const AlgebraElement& x, std::vector<std::string> names) const {
  if (x.dim() != n()) throw DimensionMismatch("element of dimension " + std::to_string(x.dim()));
  return x.named(std::move(names));
}

Tensor Sweedler::one(const std::string& name) const { return s_->unit.with_names({name}); }

Tensor Sweedler::free(const std::string& in, const std::string& out) const {
  return Tensor::identity(field(), n(), in, out);
}

Tensor Sweedler::mul(const Tensor& t, const std::string& a, const std::string& b,
                     const std::string& as) const {
  const std::string names[2] = {a, b};
  const Leg out[1] = {{as.empty() ? a : as, n()}};
  return t.contract(names, s_->mult, out);
}

Tensor Sweedler::mul(const Tensor& t, std::initializer_list<std::string> legs,
                     const std::string& as) const {
  if (legs.size() == 0) throw DimensionMismatch("empty product");
  auto it = legs.begin();
  const std::string first = *it++;
  Tensor r = t;
  for (; it != legs.end(); ++it) r = mul(r, first, *it);
  if (!as.empty() && as != first) r = r.renamed(first, as);
  return r;
}

Tensor Sweedler::lmul(const Tensor& t, const std::string& a, const AlgebraElement& c) const {
  const Tensor w = c.named({"k"}).contract({"k"}, s_->mult, {Leg{"x", n()}, Leg{"y", n()}});
  return t.contract({a}, w, {Leg{a, n()}});
}

Tensor Sweedler::rmul(const Tensor& t, const std::string& a, const AlgebraElement& c) const {
  const Tensor w =
      c.named({"k"}).contract({"k"}, s_->mult.ordered({"b", "a", "c"}), {Leg{"x", n()}, Leg{"y", n()}});
  return t.contract({a}, w, {Leg{a, n()}});
}

Tensor Sweedler::delta(const Tensor& t, const std::string& a, const std::string& a1,
                       const std::string& a2) const {
  return t.contract({a}, s_->comult, {Leg{a1, n()}, Leg{a2, n()}});
}

Tensor Sweedler::eps(const Tensor& t, const std::string& a) const {
  return t.contract({a}, s_->counit, {});
}

Tensor Sweedler::S(const Tensor& t, const std::string& a) const {
  if (!s_->antipode) throw Error("algebra has no antipode");
  return t.contract({a}, s_weight_, {Leg{a, n()}});
}

Tensor Sweedler::Sinv(const Tensor& t, const std::string& a) const {
  if (!s_->antipode_inv) throw Error("algebra has no inverse antipode");
  return t.contract({a}, sinv_weight_, {Leg{a, n()}});
}

Tensor Sweedler::apply(const Tensor& t, const std::string& a, const LinearMap& m) const {
  if (m.src_dim() != t.dim(a)) throw DimensionMismatch("map source does not match leg " + a);
  return t.contract({a}, m.as_weight(), {Leg{a, m.dst_dim()}});
}

Tensor Sweedler::act(const Tensor& t, const Tensor& action, const std::string& h,
                     const std::string& v) const {
  return t.contract({h, v}, action, {Leg{v, t.dim(v)}});
}

Tensor Sweedler::coact_left(const Tensor& t, const Tensor& coaction, const std::string& v,
                            const std::string& h) const {
  return t.contract({v}, coaction, {Leg{h, n()}, Leg{v, t.dim(v)}});
}

Tensor Sweedler::coact_right(const Tensor& t, const Tensor& coaction, const std::string& v,
                             const std::string& h) const {
  return t.contract({v}, coaction, {Leg{v, t.dim(v)}, Leg{h, n()}});
}

AlgebraElement Sweedler::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.legs() != y.legs()) throw DimensionMismatch("product of elements with different leg counts");
  const std::size_t k = x.legs();
  if (k == 0) throw DimensionMismatch("product of rank-0 elements");
  const auto xn = prefixed("x", k), yn = prefixed("y", k);
  Tensor t = Tensor::outer(load(x, xn), load(y, yn));
  for (std::size_t i = 0; i < k; ++i) t = mul(t, xn[i], yn[i]);
  return AlgebraElement::from_tensor(t, xn);
}

AlgebraElement Sweedler::multiply(std::initializer_list<AlgebraElement> xs) const {
  if (xs.size() == 0) throw DimensionMismatch("empty product");
  auto it = xs.begin();
  AlgebraElement r = *it++;
  for (; it != xs.end(); ++it) r = multiply(r, *it);
  return r;
}

AlgebraElement Sweedler::unit_element(std::size_t legs) const {
  if (legs == 0) throw DimensionMismatch("unit of rank 0");
  Tensor t = one("u0");
  for (std::size_t i = 1; i < legs; ++i) t = Tensor::outer(t, one("u" + std::to_string(i)));
  return AlgebraElement::from_tensor(t);
}

AlgebraElement Sweedler::embed(const AlgebraElement& x, std::span<const std::size_t> positions,
                               std::size_t total) const {
  if (positions.size() != x.legs()) throw DimensionMismatch("embed: one position per leg required");
  std::vector<bool> used(total + 1, false);
  std::vector<std::string> names;
  for (auto p : positions) {
    if (p < 1 || p > total) throw DimensionMismatch("embed: position out of range");
    if (used[p]) throw DimensionMismatch("embed: duplicate position");
    used[p] = true;
    names.push_back("p" + std::to_string(p));
  }
  Tensor t = load(x, names);
  std::vector<std::string> order;
  for (std::size_t p = 1; p <= total; ++p) {
    if (!used[p]) t = Tensor::outer(t, one("p" + std::to_string(p)));
    order.push_back("p" + std::to_string(p));
  }
  return AlgebraElement::from_tensor(t, order);
}

AlgebraElement Sweedler::coproduct_at(const AlgebraElement& x, std::size_t leg) const {
  const auto names = prefixed("l", x.legs());
  Tensor t = delta(load(x, names), names.at(leg), "L", "R");
  std::vector<std::string> order;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i == leg) {
      order.push_back("L");
      order.push_back("R");
    } else {
      order.push_back(names[i]);
    }
  }
  return AlgebraElement::from_tensor(t, order);
}

AlgebraElement Sweedler::counit_at(const AlgebraElement& x, std::size_t leg) const {
  const auto names = prefixed("l", x.legs());
  Tensor t = eps(load(x, names), names.at(leg));
  std::vector<std::string> order;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != leg) order.push_back(names[i]);
  }
  return AlgebraElement::from_tensor(t, order);
}

AlgebraElement Sweedler::antipode_each(const AlgebraElement& x) const {
  const auto names = prefixed("l", x.legs());
  Tensor t = load(x, names);
  for (const auto& nm : names) t = S(t, nm);
  return AlgebraElement::from_tensor(t, names);
}

AlgebraElement Sweedler::antipode_inv_each(const AlgebraElement& x) const {
  const auto names = prefixed("l", x.legs());
  Tensor t = load(x, names);
  for (const auto& nm : names) t = Sinv(t, nm);
  return AlgebraElement::from_tensor(t, names);
}

Scalar Sweedler::counit_value(const AlgebraElement& x) const {
  const auto names = prefixed("l", x.legs());
  Tensor t = load(x, names);
  for (const auto& nm : names) t = eps(t, nm);
  return t.get(0);
}

LinearMap Sweedler::left_multiplication(const AlgebraElement& x) const {
  const std::size_t k = x.legs();
  const auto in = prefixed("i", k), out = prefixed("o", k), xs = prefixed("x", k);
  Tensor t = load(x, xs);
  for (std::size_t i = 0; i < k; ++i) {
    t = Tensor::outer(t, free(in[i], out[i]));
    t = mul(t, xs[i], out[i], out[i]);
  }
  return LinearMap::from_tensor(t, out, in);
}

LinearMap Sweedler::right_multiplication(const AlgebraElement& x) const {
  const std::size_t k = x.legs();
  const auto in = prefixed("i", k), out = prefixed("o", k), xs = prefixed("x", k);
  Tensor t = load(x, xs);
  for (std::size_t i = 0; i < k; ++i) {
    t = Tensor::outer(t, free(in[i], out[i]));
    t = mul(t, out[i], xs[i]);
  }
  return LinearMap::from_tensor(t, out, in);
}

AlgebraElement Sweedler::invert(const AlgebraElement& x) const {
  const std::size_t k = x.legs();
  const AlgebraElement one_k = unit_element(k);
  const auto names = prefixed("o", k);
  const LinearMap rhs = LinearMap::from_tensor(load(one_k, names), names, {});
  const auto sol = left_multiplication(x).solve(rhs);
  if (!sol) throw NotInvertible("element is not invertible: x·y = 1 has no solution");
  std::vector<Leg> legs;
  for (const auto& nm : names) legs.push_back({nm, n()});
  const AlgebraElement y = AlgebraElement::from_tensor(sol->as_tensor(legs, {}));
  if (!(multiply(x, y) == one_k) || !(multiply(y, x) == one_k)) {
    throw NotInvertible("element has a one-sided inverse only");
  }
  return y;
}

}  // namespace qhopf
