#include "qhopf/catalog.hpp"

#include <algorithm>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

struct Builder {
  Field f;
  std::size_t n;
  AlgebraStructure s;

  Builder(Field field, std::size_t dim, std::vector<std::string> basis) : f(field), n(dim) {
    s.field = f;
    s.n = n;
    s.basis = std::move(basis);
    s.mult = Tensor(f, {{"a", n}, {"b", n}, {"c", n}});
    s.comult = Tensor(f, {{"a", n}, {"b", n}, {"c", n}});
    s.unit = Tensor(f, {{"a", n}});
    s.counit = Tensor(f, {{"a", n}});
    s.antipode = LinearMap(f, n, n);
  }
  void add(Tensor& t, std::initializer_list<std::size_t> idx, const Scalar& v) {
    t.set_at(idx, f.add(t.at(idx), v));
  }
  void m(std::size_t i, std::size_t j, std::size_t k, const Scalar& v = 1) { add(s.mult, {i, j, k}, v); }
  void d(std::size_t i, std::size_t j, std::size_t k, const Scalar& v = 1) { add(s.comult, {i, j, k}, v); }
  void unit(std::size_t i, const Scalar& v = 1) { add(s.unit, {i}, v); }
  void counit(std::size_t i, const Scalar& v = 1) { add(s.counit, {i}, v); }
  // S(e_src) has coefficient v on e_dst
  void S(std::size_t src, std::size_t dst, const Scalar& v = 1) {
    s.antipode->set(dst, src, f.add(s.antipode->get(dst, src), v));
  }
  AlgebraStructure finish() {
    auto inv = s.antipode->inverse();
    if (!inv) throw ConsistencyFailure("antipode is not bijective");
    s.antipode_inv = *inv;
    return s;
  }
};

AlgebraElement elem(const Field& f, std::size_t n, std::size_t legs,
                    std::initializer_list<std::pair<std::vector<std::size_t>, Scalar>> terms) {
  AlgebraElement x(f, n, legs);
  for (const auto& [idx, v] : terms) x.set(std::span<const std::size_t>(idx), f.add(x.coeff(std::span<const std::size_t>(idx)), v));
  return x;
}

// Group algebra of ℤ₂ with basis {1, g}.
QuasiHopfAlgebra kz2(const std::string& name, const Field& f) {
  Builder b(f, 2, {"1", "g"});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b.m(i, j, (i + j) % 2);
  b.d(0, 0, 0);
  b.d(1, 1, 1);
  b.unit(0);
  b.counit(0);
  b.counit(1);
  b.S(0, 0);
  b.S(1, 1);
  const AlgebraElement one = elem(f, 2, 1, {{{0}, 1}});
  return make_quasi_hopf(name, b.finish(), elem(f, 2, 3, {{{0, 0, 0}, 1}}), one, one);
}

// Sweedler's algebra, basis g^a x^b at index a + 2b: {1, g, x, gx}.
QuasiHopfAlgebra sweedler(const Field& f) {
  Builder b(f, 4, {"1", "g", "x", "gx"});
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t a = i % 2, bx = i / 2, c = j % 2, dx = j / 2;
      if (bx + dx >= 2) continue;
      const Scalar sign = (bx * c) % 2 ? -1 : 1;
      b.m(i, j, (a + c) % 2 + 2 * (bx + dx), sign);
    }
  }
  b.unit(0);
  b.d(0, 0, 0);
  b.d(1, 1, 1);
  b.d(2, 2, 0);  // x⊗1
  b.d(2, 1, 2);  // g⊗x
  b.d(3, 3, 1);  // gx⊗g
  b.d(3, 0, 3);  // 1⊗gx
  b.counit(0);
  b.counit(1);
  b.S(0, 0);
  b.S(1, 1);
  b.S(2, 3, -1);
  b.S(3, 2);
  const AlgebraElement one = elem(f, 4, 1, {{{0}, 1}});
  return make_quasi_hopf("sweedler4_Rtri", b.finish(), elem(f, 4, 3, {{{0, 0, 0}, 1}}), one, one);
}

// k[g]/(g²−1) in the basis {1, p}, p = (1−g)/2.
QuasiHopfAlgebra h2(const Field& f) {
  Builder b(f, 2, {"1", "p"});
  b.m(0, 0, 0);
  b.m(0, 1, 1);
  b.m(1, 0, 1);
  b.m(1, 1, 1);
  b.unit(0);
  b.d(0, 0, 0);
  b.d(1, 1, 0);
  b.d(1, 0, 1);
  b.d(1, 1, 1, -2);
  b.counit(0);
  b.S(0, 0);
  b.S(1, 1);
  const AlgebraElement phi = elem(f, 2, 3, {{{0, 0, 0}, 1}, {{1, 1, 1}, -2}});
  const AlgebraElement g = elem(f, 2, 1, {{{0}, 1}, {{1}, -2}});
  const AlgebraElement one = elem(f, 2, 1, {{{0}, 1}});
  return make_quasi_hopf("H2", b.finish(), phi, g, one, phi);
}

// Double of ℤ₂, basis δ_a g^s at index a + 2s.
QuasiHopfAlgebra dz2(const Field& f) {
  Builder b(f, 4, {"d0", "d1", "d0g", "d1g"});
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t a = i % 2, s = i / 2, c = j % 2, t = j / 2;
      if (a == c) b.m(i, j, a + 2 * ((s + t) % 2));
    }
  }
  b.unit(0);
  b.unit(1);
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t a = i % 2, s = i / 2;
    for (std::size_t x = 0; x < 2; ++x) b.d(i, x + 2 * s, (a + x) % 2 + 2 * s);
    if (a == 0) b.counit(i);
    b.S(i, i);
  }
  const AlgebraElement one = elem(f, 4, 1, {{{0}, 1}, {{1}, 1}});
  AlgebraElement phi(f, 4, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) phi.set({i, j, k}, 1);
  return make_quasi_hopf("dZ2", b.finish(), phi, one, one);
}

}  // namespace

QuasiHopfAlgebra cocycle_algebra(std::size_t n, long q, const Field& f) {
  if (n == 0) throw std::invalid_argument("cocycle algebra needs n >= 1");
  const Scalar zeta = f.root_of_unity(n);
  auto power = [&](long e) {
    e %= static_cast<long>(n);
    if (e < 0) e += static_cast<long>(n);
    Scalar r = 1;
    for (long i = 0; i < e; ++i) r = f.mul(r, zeta);
    return r;
  };
  auto omega = [&](std::size_t a, std::size_t b, std::size_t c) {
    const long carry = static_cast<long>((b + c) / n);
    return power(q * static_cast<long>(a) * carry);
  };
  std::vector<std::string> basis;
  for (std::size_t a = 0; a < n; ++a) basis.push_back("e" + std::to_string(a));
  Builder b(f, n, basis);
  for (std::size_t a = 0; a < n; ++a) {
    b.m(a, a, a);
    b.unit(a);
    for (std::size_t x = 0; x < n; ++x) b.d(a, x, (a + n - x) % n);
    b.S(a, (n - a) % n);
  }
  b.counit(0);
  AlgebraElement phi(f, n, 3), one(f, n, 1), beta(f, n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    one.set({a}, 1);
    beta.set({a}, f.inv(omega(a, (n - a) % n, a)));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) phi.set({a, x, y}, omega(a, x, y));
  }
  return make_quasi_hopf("cocycle" + std::to_string(n) + "_" + std::to_string(q), b.finish(), phi, one, beta);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"kZ2", "kZ2_Rt", "sweedler4_Rtri", "H2", "dZ2"};
  return names;
}

bool is_builtin(const std::string& name) {
  const auto& v = builtin_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

QuasiHopfAlgebra builtin_algebra(const std::string& name, const Field& f) {
  if (name == "kZ2" || name == "kZ2_Rt") return kz2(name, f);
  if (name == "sweedler4_Rtri") return sweedler(f);
  if (name == "H2") return h2(f);
  if (name == "dZ2") return dz2(f);
  throw std::invalid_argument("unknown builtin algebra: " + name);
}

std::optional<AlgebraElement> builtin_R(const std::string& name, const QuasiHopfAlgebra& H) {
  const Field& f = H.field();
  const Scalar half = f.inv(2);
  if (name == "kZ2") return elem(f, 2, 2, {{{0, 0}, 1}});
  if (name == "kZ2_Rt") {
    return elem(f, 2, 2, {{{0, 0}, half}, {{0, 1}, half}, {{1, 0}, half}, {{1, 1}, f.neg(half)}});
  }
  if (name == "sweedler4_Rtri") {
    // ½(1⊗1+1⊗g+g⊗1−g⊗g) + ½(x⊗x − x⊗gx + gx⊗x + gx⊗gx)
    return elem(f, 4, 2,
                {{{0, 0}, half}, {{0, 1}, half}, {{1, 0}, half}, {{1, 1}, f.neg(half)},
                 {{2, 2}, half}, {{2, 3}, f.neg(half)}, {{3, 2}, half}, {{3, 3}, half}});
  }
  if (name == "dZ2") {
    // δ₀⊗1 + δ₁⊗g with 1 = δ₀+δ₁ and g = δ₀g+δ₁g
    return elem(f, 4, 2, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 2}, 1}, {{1, 3}, 1}});
  }
  return std::nullopt;
}

Ambient builtin(const std::string& name, const Field& f) {
  QuasiHopfAlgebra H = builtin_algebra(name, f);
  auto R = builtin_R(name, H);
  return make_ambient(std::move(H), std::move(R));
}

std::vector<HModule> builtin_modules(const std::string& name, const QuasiHopfAlgebra& H) {
  const Field& f = H.field();
  auto scalar = [&](Scalar v) { return LinearMap::from_rows(f, {{f.reduce(v)}}); };
  std::vector<HModule> out;
  if (name == "kZ2" || name == "kZ2_Rt") {
    for (int s : {1, -1}) out.push_back(make_module(H, Side::left, {scalar(1), scalar(s)}));
  } else if (name == "H2") {
    for (int p : {0, 1}) out.push_back(make_module(H, Side::left, {scalar(1), scalar(p)}));
  } else if (name == "sweedler4_Rtri") {
    for (int s : {1, -1}) out.push_back(make_module(H, Side::left, {scalar(1), scalar(s), scalar(0), scalar(s * 0)}));
    for (int s : {1, -1}) {
      const LinearMap one = LinearMap::identity(f, 2);
      const LinearMap g = LinearMap::from_rows(f, {{Scalar(s), 0}, {0, Scalar(-s)}});
      const LinearMap x = LinearMap::from_rows(f, {{0, 0}, {1, 0}});
      out.push_back(make_module(H, Side::left, {one, g, x, g * x}));
    }
  } else if (name == "dZ2") {
    for (int a : {0, 1})
      for (int s : {1, -1})
        out.push_back(make_module(H, Side::left,
                                  {scalar(a == 0), scalar(a == 1), scalar(a == 0 ? s : 0), scalar(a == 1 ? s : 0)}));
  } else {
    // cocycle algebras: evaluation characters δ_a ↦ [a = i]
    for (std::size_t i = 0; i < H.dim(); ++i) {
      std::vector<LinearMap> ms;
      for (std::size_t a = 0; a < H.dim(); ++a) ms.push_back(scalar(a == i));
      out.push_back(make_module(H, Side::left, ms));
    }
  }
  return out;
}

std::vector<YDModule> builtin_yd_modules(const std::string& name, const Ambient& A) {
  const QuasiHopfAlgebra& H = A.H;
  const Field& f = H.field();
  const std::size_t n = H.dim();
  std::vector<YDModule> out;
  out.push_back(trivial_yd(H, Flavor::LL));
  const std::vector<HModule> mods = builtin_modules(name, H);
  if (A.qt) {
    for (const auto& m : mods) out.push_back(qt_embed(A, m));
  }
  if (H.phi() == H.one(3)) out.push_back(adjoint_yd(H));

  auto one_dim = [&](const HModule& m, const AlgebraElement& c) {
    Tensor t(f, {{"v", 1}, {"h", n}, {"w", 1}});
    for (std::size_t i = 0; i < n; ++i) t.set_at({0, i, 0}, c.coeff({i}));
    out.push_back(make_yd(Flavor::LL, m, std::move(t)));
  };
  if (name == "H2") {
    // c = g on the counit character; on the sign character c = 1 + (ι−1)p with ι² = −1
    one_dim(mods[0], elem(f, 2, 1, {{{0}, 1}, {{1}, -2}}));
    std::optional<Scalar> iota;
    try {
      iota = f.root_of_unity(4);
    } catch (const std::invalid_argument&) {
    }
    if (iota) {
      for (const Scalar& s : {*iota, f.neg(*iota)}) one_dim(mods[1], elem(f, 2, 1, {{{0}, 1}, {{1}, f.sub(s, 1)}}));
    }
  } else if (!is_builtin(name)) {
    // cocycle algebras: characters of ℤ_n as coactions on the counit character
    const Scalar zeta = f.root_of_unity(n);
    for (std::size_t k = 1; k < n; ++k) {
      AlgebraElement c(f, n, 1);
      Scalar z = 1, step = 1;
      for (std::size_t j = 0; j < k; ++j) step = f.mul(step, zeta);
      for (std::size_t x = 0; x < n; ++x) {
        c.set({x}, z);
        z = f.mul(z, step);
      }
      one_dim(mods[0], c);
    }
  }
  return out;
}

}  // namespace qhopf
