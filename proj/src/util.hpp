#pragma once

#include <string>

#include "qhopf/algebra_element.hpp"
#include "qhopf/linear_map.hpp"
#include "qhopf/report.hpp"
#include "qhopf/sweedler.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf::detail {

inline Tensor convert(const Tensor& t, const Field& f) {
  Tensor r(f, t.legs());
  for (std::size_t i = 0; i < t.size(); ++i) r.set(i, f.reduce(t.get(i)));
  return r;
}

inline LinearMap convert(const LinearMap& m, const Field& f) {
  LinearMap r(f, m.dst_dim(), m.src_dim());
  for (std::size_t i = 0; i < m.dst_dim(); ++i)
    for (std::size_t j = 0; j < m.src_dim(); ++j) r.set(i, j, f.reduce(m.get(i, j)));
  return r;
}

inline bool expect(VerificationReport& rep, const std::string& tag, const AlgebraElement& a,
                   const AlgebraElement& b, const std::string& context = {}) {
  return rep.expect_equal(tag, a.tensor(), b.tensor(), context);
}

// x ↦ m(x) on a one-leg element.
inline AlgebraElement apply(const Sweedler& sw, const LinearMap& m, const AlgebraElement& x) {
  return AlgebraElement::from_tensor(sw.apply(x.named({"0"}), "0", m));
}

}  // namespace qhopf::detail
