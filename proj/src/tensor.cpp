#include "qhopf/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arith.hpp"
#include "qhopf/errors.hpp"

namespace qhopf {

using detail::make_storage;
using detail::vec;
using detail::with_arith;

namespace {

std::size_t product(const std::vector<Leg>& legs) {
  std::size_t s = 1;
  for (const auto& l : legs) s *= l.dim;
  return s;
}

std::vector<std::size_t> strides_of(const std::vector<Leg>& legs) {
  std::vector<std::size_t> st(legs.size(), 1);
  for (std::size_t k = legs.size(); k-- > 1;) st[k - 1] = st[k] * legs[k].dim;
  return st;
}

// Offsets of every multi-index over the chosen legs, enumerated row-major.
std::vector<std::size_t> offsets(const std::vector<std::size_t>& dims,
                                 const std::vector<std::size_t>& strides) {
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> out(total, 0);
  std::vector<std::size_t> idx(dims.size(), 0);
  std::size_t off = 0;
  for (std::size_t f = 0; f < total; ++f) {
    out[f] = off;
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++idx[k] < dims[k]) {
        off += strides[k];
        break;
      }
      off -= strides[k] * (dims[k] - 1);
      idx[k] = 0;
    }
  }
  return out;
}

struct Plan {
  std::vector<Leg> out_legs;
  std::vector<std::size_t> base_rest;  // offsets into the input, per rest index
  std::vector<std::size_t> off_in;     // offsets into the input, per consumed index
  std::vector<std::size_t> out_rest;   // offsets into the output, per rest index
  std::vector<std::size_t> out_new;    // offsets into the output, per new index
};

Plan make_plan(const Tensor& t, const std::vector<std::size_t>& in_idx, const Tensor& w,
               std::span<const Leg> out) {
  const auto& legs = t.legs();
  if (w.rank() != in_idx.size() + out.size()) {
    throw DimensionMismatch("contraction weight has rank " + std::to_string(w.rank()) +
                            ", expected " + std::to_string(in_idx.size() + out.size()));
  }
  for (std::size_t k = 0; k < in_idx.size(); ++k) {
    if (w.legs()[k].dim != legs[in_idx[k]].dim) {
      throw DimensionMismatch("contraction weight leg " + std::to_string(k) + " has dim " +
                              std::to_string(w.legs()[k].dim) + ", leg '" + legs[in_idx[k]].name +
                              "' has dim " + std::to_string(legs[in_idx[k]].dim));
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (w.legs()[in_idx.size() + k].dim != out[k].dim) {
      throw DimensionMismatch("output leg '" + out[k].name + "' dim disagrees with weight");
    }
  }
  std::vector<bool> consumed(legs.size(), false);
  for (auto i : in_idx) {
    if (consumed[i]) throw DimensionMismatch("leg '" + legs[i].name + "' consumed twice");
    consumed[i] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!consumed[k]) rest.push_back(k);
  }
  std::size_t pos = rest.size();
  if (!in_idx.empty()) {
    const std::size_t first = *std::min_element(in_idx.begin(), in_idx.end());
    pos = static_cast<std::size_t>(std::count_if(rest.begin(), rest.end(),
                                                 [&](std::size_t r) { return r < first; }));
  }
  Plan plan;
  std::vector<std::size_t> rest_out_pos, new_out_pos;
  for (std::size_t k = 0; k < rest.size(); ++k) {
    if (k == pos) {
      for (const auto& l : out) {
        new_out_pos.push_back(plan.out_legs.size());
        plan.out_legs.push_back(l);
      }
    }
    rest_out_pos.push_back(plan.out_legs.size());
    plan.out_legs.push_back(legs[rest[k]]);
  }
  if (pos == rest.size()) {
    for (const auto& l : out) {
      new_out_pos.push_back(plan.out_legs.size());
      plan.out_legs.push_back(l);
    }
  }
  for (std::size_t a = 0; a < plan.out_legs.size(); ++a) {
    for (std::size_t b = a + 1; b < plan.out_legs.size(); ++b) {
      if (plan.out_legs[a].name == plan.out_legs[b].name) {
        throw DimensionMismatch("duplicate leg name '" + plan.out_legs[a].name + "'");
      }
    }
  }
  const auto st = strides_of(legs);
  const auto so = strides_of(plan.out_legs);
  std::vector<std::size_t> d, s;
  for (auto r : rest) {
    d.push_back(legs[r].dim);
    s.push_back(st[r]);
  }
  plan.base_rest = offsets(d, s);
  d.clear();
  s.clear();
  for (std::size_t k = 0; k < rest.size(); ++k) {
    d.push_back(legs[rest[k]].dim);
    s.push_back(so[rest_out_pos[k]]);
  }
  plan.out_rest = offsets(d, s);
  d.clear();
  s.clear();
  for (auto i : in_idx) {
    d.push_back(legs[i].dim);
    s.push_back(st[i]);
  }
  plan.off_in = offsets(d, s);
  d.clear();
  s.clear();
  for (std::size_t k = 0; k < out.size(); ++k) {
    d.push_back(out[k].dim);
    s.push_back(so[new_out_pos[k]]);
  }
  plan.out_new = offsets(d, s);
  return plan;
}

template <class A>
void run_parallel(const A& ar, const detail::Vec<A>& t, const Plan& plan, const detail::Vec<A>& w,
                  detail::Vec<A>& out) {
  using V = typename A::value_type;
  const std::size_t n_in = plan.off_in.size();
  const std::size_t n_new = plan.out_new.size();
  // Nonzero pattern of each weight row.
  std::vector<std::vector<std::pair<std::size_t, const V*>>> rows(n_in);
  for (std::size_t i = 0; i < n_in; ++i) {
    for (std::size_t o = 0; o < n_new; ++o) {
      const V& x = w[i * n_new + o];
      if (!A::is_zero(x)) rows[i].emplace_back(plan.out_new[o], &x);
    }
  }
  const auto n_rest = static_cast<std::int64_t>(plan.base_rest.size());
  const bool big = plan.base_rest.size() * n_in > 2048;
#pragma omp parallel if (big)
  {
    V tmp = ar.zero();
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < n_rest; ++r) {
      const std::size_t base = plan.base_rest[r];
      const std::size_t obase = plan.out_rest[r];
      for (std::size_t i = 0; i < n_in; ++i) {
        const V& x = t[base + plan.off_in[i]];
        if (A::is_zero(x)) continue;
        for (const auto& [o, wv] : rows[i]) ar.addmul(out[obase + o], x, *wv, tmp);
      }
    }
  }
}

// Output-stationary loop order with no sparsity shortcuts.
template <class A>
void run_reference(const A& ar, const detail::Vec<A>& t, const Plan& plan, const detail::Vec<A>& w,
                   detail::Vec<A>& out) {
  using V = typename A::value_type;
  const std::size_t n_in = plan.off_in.size();
  const std::size_t n_new = plan.out_new.size();
  V tmp = ar.zero();
  for (std::size_t r = 0; r < plan.base_rest.size(); ++r) {
    for (std::size_t o = 0; o < n_new; ++o) {
      V acc = ar.zero();
      for (std::size_t i = 0; i < n_in; ++i) {
        ar.addmul(acc, t[plan.base_rest[r] + plan.off_in[i]], w[i * n_new + o], tmp);
      }
      out[plan.out_rest[r] + plan.out_new[o]] = acc;
    }
  }
}

void check_same_field(const Tensor& a, const Tensor& b) {
  if (!(a.field() == b.field())) {
    throw DimensionMismatch("field mismatch: " + a.field().name() + " vs " + b.field().name());
  }
}

}  // namespace

Tensor::Tensor() : data_(make_storage(Field(), 1)) {}

Tensor::Tensor(Field field, std::vector<Leg> legs)
    : field_(field), legs_(std::move(legs)), size_(product(legs_)), data_(make_storage(field_, size_)) {
  for (std::size_t a = 0; a < legs_.size(); ++a) {
    if (legs_[a].dim == 0) throw DimensionMismatch("leg '" + legs_[a].name + "' has dim 0");
    for (std::size_t b = a + 1; b < legs_.size(); ++b) {
      if (legs_[a].name == legs_[b].name) {
        throw DimensionMismatch("duplicate leg name '" + legs_[a].name + "'");
      }
    }
  }
}

Tensor Tensor::scalar(Field field, const Scalar& value) {
  Tensor t(field, {});
  t.set(0, value);
  return t;
}

Tensor Tensor::identity(Field field, std::size_t dim, std::string in, std::string out) {
  Tensor t(field, {{std::move(in), dim}, {std::move(out), dim}});
  for (std::size_t i = 0; i < dim; ++i) t.set(i * dim + i, Scalar(1));
  return t;
}

std::vector<std::size_t> Tensor::dims() const {
  std::vector<std::size_t> d;
  for (const auto& l : legs_) d.push_back(l.dim);
  return d;
}

std::vector<std::string> Tensor::names() const {
  std::vector<std::string> n;
  for (const auto& l : legs_) n.push_back(l.name);
  return n;
}

bool Tensor::has_leg(std::string_view name) const {
  return std::any_of(legs_.begin(), legs_.end(), [&](const Leg& l) { return l.name == name; });
}

std::size_t Tensor::leg_index(std::string_view name) const {
  for (std::size_t k = 0; k < legs_.size(); ++k) {
    if (legs_[k].name == name) return k;
  }
  std::string have;
  for (const auto& l : legs_) have += " " + l.name;
  throw DimensionMismatch("no leg named '" + std::string(name) + "' (legs:" + have + ")");
}

Scalar Tensor::get(std::size_t flat) const {
  return with_arith(field_, [&](auto ar) -> Scalar {
    using A = decltype(ar);
    return A::to(vec<A>(data_).at(flat));
  });
}

void Tensor::set(std::size_t flat, const Scalar& value) {
  with_arith(field_, [&](auto ar) {
    using A = decltype(ar);
    vec<A>(data_).at(flat) = ar.from(value);
  });
}

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != legs_.size()) throw DimensionMismatch("index rank mismatch");
  std::size_t f = 0;
  for (std::size_t k = 0; k < legs_.size(); ++k) {
    if (index[k] >= legs_[k].dim) throw DimensionMismatch("index out of range");
    f = f * legs_[k].dim + index[k];
  }
  return f;
}

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(legs_.size());
  for (std::size_t k = legs_.size(); k-- > 0;) {
    idx[k] = flat % legs_[k].dim;
    flat /= legs_[k].dim;
  }
  return idx;
}

Scalar Tensor::at(std::span<const std::size_t> index) const { return get(flat_index(index)); }

void Tensor::set_at(std::span<const std::size_t> index, const Scalar& value) {
  set(flat_index(index), value);
}

std::size_t Tensor::nonzeros() const {
  return with_arith(field_, [&](auto ar) -> std::size_t {
    using A = decltype(ar);
    const auto& v = vec<A>(data_);
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [](const auto& x) { return !A::is_zero(x); }));
  });
}

Tensor Tensor::renamed(std::string_view from, std::string to) const {
  Tensor t = *this;
  t.legs_[leg_index(from)].name = std::move(to);
  for (std::size_t a = 0; a < t.legs_.size(); ++a) {
    for (std::size_t b = a + 1; b < t.legs_.size(); ++b) {
      if (t.legs_[a].name == t.legs_[b].name) {
        throw DimensionMismatch("rename creates duplicate leg '" + t.legs_[a].name + "'");
      }
    }
  }
  return t;
}

Tensor Tensor::with_names(std::vector<std::string> names) const {
  if (names.size() != legs_.size()) throw DimensionMismatch("with_names: rank mismatch");
  std::vector<Leg> legs = legs_;
  for (std::size_t k = 0; k < legs.size(); ++k) legs[k].name = std::move(names[k]);
  Tensor t(field_, std::move(legs));
  t.data_ = data_;
  return t;
}

Tensor Tensor::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != legs_.size()) throw DimensionMismatch("permutation rank mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw DimensionMismatch("not a permutation");
    seen[p] = true;
  }
  bool trivial = true;
  for (std::size_t k = 0; k < perm.size(); ++k) trivial = trivial && perm[k] == k;
  if (trivial) return *this;
  std::vector<Leg> legs;
  for (auto p : perm) legs.push_back(legs_[p]);
  Tensor out(field_, legs);
  const auto st = strides_of(legs_);
  std::vector<std::size_t> d, s;
  for (auto p : perm) {
    d.push_back(legs_[p].dim);
    s.push_back(st[p]);
  }
  const auto src = offsets(d, s);
  with_arith(field_, [&](auto ar) {
    using A = decltype(ar);
    const auto& in = vec<A>(data_);
    auto& o = vec<A>(out.data_);
    for (std::size_t f = 0; f < src.size(); ++f) o[f] = in[src[f]];
  });
  return out;
}

Tensor Tensor::ordered(std::span<const std::string> order) const {
  if (order.size() != legs_.size()) {
    std::string have;
    for (const auto& l : legs_) have += " " + l.name;
    throw DimensionMismatch("ordering names " + std::to_string(order.size()) + " legs, tensor has" +
                            have);
  }
  std::vector<std::size_t> perm;
  for (const auto& n : order) perm.push_back(leg_index(n));
  return permuted(perm);
}

Tensor Tensor::merged(std::span<const std::string> names, std::string into) const {
  if (names.empty()) throw DimensionMismatch("merge of no legs");
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(leg_index(n));
  const std::size_t first = idx.front();
  // Order: legs before `first` that are not merged, merged group, the rest.
  std::vector<std::size_t> perm;
  std::vector<bool> in_group(legs_.size(), false);
  for (auto i : idx) in_group[i] = true;
  for (std::size_t k = 0; k < first; ++k) {
    if (!in_group[k]) perm.push_back(k);
  }
  const std::size_t pos = perm.size();
  for (auto i : idx) perm.push_back(i);
  for (std::size_t k = first; k < legs_.size(); ++k) {
    if (!in_group[k]) perm.push_back(k);
  }
  Tensor p = permuted(perm);
  std::size_t dim = 1;
  for (auto i : idx) dim *= legs_[i].dim;
  std::vector<Leg> legs;
  for (std::size_t k = 0; k < pos; ++k) legs.push_back(p.legs_[k]);
  legs.push_back({std::move(into), dim});
  for (std::size_t k = pos + idx.size(); k < p.legs_.size(); ++k) legs.push_back(p.legs_[k]);
  Tensor out(field_, std::move(legs));
  out.data_ = std::move(p.data_);
  return out;
}

Tensor Tensor::split(std::string_view name, std::vector<Leg> parts) const {
  const std::size_t k = leg_index(name);
  std::size_t dim = 1;
  for (const auto& l : parts) dim *= l.dim;
  if (dim != legs_[k].dim) throw DimensionMismatch("split dims do not multiply to leg dim");
  std::vector<Leg> legs(legs_.begin(), legs_.begin() + static_cast<std::ptrdiff_t>(k));
  for (auto& l : parts) legs.push_back(std::move(l));
  legs.insert(legs.end(), legs_.begin() + static_cast<std::ptrdiff_t>(k) + 1, legs_.end());
  Tensor out(field_, std::move(legs));
  out.data_ = data_;
  return out;
}

Tensor Tensor::operator+(const Tensor& other) const {
  check_same_field(*this, other);
  const Tensor o = other.legs_ == legs_ ? other : other.ordered(names());
  if (o.legs_ != legs_) throw DimensionMismatch("sum of tensors with different legs");
  Tensor r = *this;
  with_arith(field_, [&](auto ar) {
    using A = decltype(ar);
    auto& a = vec<A>(r.data_);
    const auto& b = vec<A>(o.data_);
    for (std::size_t f = 0; f < a.size(); ++f) a[f] = ar.add(a[f], b[f]);
  });
  return r;
}

Tensor Tensor::operator-(const Tensor& other) const { return *this + other.scaled(Scalar(-1)); }

Tensor Tensor::scaled(const Scalar& s) const {
  Tensor r = *this;
  with_arith(field_, [&](auto ar) {
    using A = decltype(ar);
    const auto c = ar.from(s);
    for (auto& x : vec<A>(r.data_)) x = ar.mul(x, c);
  });
  return r;
}

std::optional<std::size_t> Tensor::first_difference(const Tensor& other) const {
  check_same_field(*this, other);
  if (legs_.size() != other.legs_.size()) throw DimensionMismatch("comparison of different ranks");
  const Tensor o = other.legs_ == legs_ ? other : other.ordered(names());
  if (o.legs_ != legs_) throw DimensionMismatch("comparison of tensors with different legs");
  return with_arith(field_, [&](auto ar) -> std::optional<std::size_t> {
    using A = decltype(ar);
    const auto& a = vec<A>(data_);
    const auto& b = vec<A>(o.data_);
    for (std::size_t f = 0; f < a.size(); ++f) {
      if (!(a[f] == b[f])) return f;
    }
    return std::nullopt;
  });
}

bool Tensor::operator==(const Tensor& other) const {
  if (!(field_ == other.field_) || legs_.size() != other.legs_.size()) return false;
  for (const auto& l : other.legs_) {
    if (!has_leg(l.name) || legs_[leg_index(l.name)].dim != l.dim) return false;
  }
  return !first_difference(other).has_value();
}

std::string Tensor::describe(std::size_t max_terms) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < legs_.size(); ++k) os << (k ? "," : "") << legs_[k].name;
  os << "]{";
  std::size_t shown = 0, total = 0;
  for (std::size_t f = 0; f < size_; ++f) {
    const Scalar v = get(f);
    if (v == 0) continue;
    ++total;
    if (shown < max_terms) {
      os << (shown ? " " : "") << "(";
      const auto idx = multi_index(f);
      for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
      os << "):" << v.get_str();
      ++shown;
    }
  }
  if (total > shown) os << " ... " << (total - shown) << " more";
  os << "}";
  return os.str();
}

Tensor Tensor::outer(const Tensor& a, const Tensor& b, KernelMode mode) {
  check_same_field(a, b);
  std::vector<Leg> out = b.legs_;
  return a.contract(std::span<const std::string>(), b, out, mode);
}

Tensor Tensor::contract(std::span<const std::string> in, const Tensor& weight,
                        std::span<const Leg> out, KernelMode mode) const {
  check_same_field(*this, weight);
  std::vector<std::size_t> in_idx;
  for (const auto& n : in) in_idx.push_back(leg_index(n));
  const Plan plan = make_plan(*this, in_idx, weight, out);
  Tensor result(field_, plan.out_legs);
  with_arith(field_, [&](auto ar) {
    using A = decltype(ar);
    if (mode == KernelMode::parallel) {
      run_parallel(ar, vec<A>(data_), plan, vec<A>(weight.data_), vec<A>(result.data_));
    } else {
      run_reference(ar, vec<A>(data_), plan, vec<A>(weight.data_), vec<A>(result.data_));
    }
  });
  return result;
}

Tensor Tensor::trace(std::string_view a, std::string_view b) const {
  const std::size_t d = dim(a);
  if (dim(b) != d) throw DimensionMismatch("trace over legs of different dims");
  const Tensor delta = Tensor::identity(field_, d, "i", "j");
  const std::string names[2] = {std::string(a), std::string(b)};
  return contract(names, delta, std::span<const Leg>());
}

}  // namespace qhopf
