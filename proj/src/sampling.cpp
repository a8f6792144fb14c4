#include "qhopf/sampling.hpp"

#include <stdexcept>

#include "qhopf/errors.hpp"

namespace qhopf {

Sampler::Sampler(std::uint64_t seed, Field field) : engine_(seed), field_(field) {}

std::size_t Sampler::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Sampler::below(0)");
  return static_cast<std::size_t>(engine_() % n);
}

Scalar Sampler::scalar() {
  if (field_.is_rational()) return Scalar(static_cast<long>(below(7)) - 3);
  return Scalar(static_cast<unsigned long>(below(field_.modulus())));
}

LinearMap Sampler::matrix(std::size_t rows, std::size_t cols) {
  LinearMap m(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar());
  return m;
}

std::pair<LinearMap, LinearMap> Sampler::invertible(std::size_t d) {
  for (;;) {
    LinearMap P = matrix(d, d);
    if (auto inv = P.inverse()) return {std::move(P), std::move(*inv)};
  }
}

namespace {

template <class Obj, class Sum, class Conj>
Obj random_sum(Sampler& rng, const std::vector<Obj>& pool, std::size_t max_dim, Sum sum, Conj conj) {
  auto pick = [&](std::size_t budget) -> const Obj* {
    std::vector<const Obj*> fit;
    for (const Obj& o : pool)
      if (o.dim() <= budget) fit.push_back(&o);
    if (fit.empty()) return nullptr;
    return fit[rng.below(fit.size())];
  };
  const Obj* first = pick(max_dim);
  if (!first) throw std::invalid_argument("no pool member of dimension <= " + std::to_string(max_dim));
  Obj acc = *first;
  while (acc.dim() < max_dim && rng.below(2) == 0) {
    const Obj* next = pick(max_dim - acc.dim());
    if (!next) break;
    acc = sum(acc, *next);
  }
  auto [P, P_inv] = rng.invertible(acc.dim());
  return conj(acc, P, P_inv);
}

struct ModuleDim {
  HModule m;
  std::size_t dim() const { return m.dim; }
};

// Columns of the returned matrix are the residuals of the elementary maps E_rk, so its kernel
// is the space of maps on which residual vanishes.
template <class Residual>
std::vector<LinearMap> solve_hom(const Field& f, std::size_t dst, std::size_t src, Residual residual) {
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t r = 0; r < dst; ++r)
    for (std::size_t k = 0; k < src; ++k) {
      LinearMap E(f, dst, src);
      E.set(r, k, Scalar(1));
      cols.push_back(residual(E));
    }
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  LinearMap C(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) C.set(r, c, cols[c][r]);
  std::vector<LinearMap> out;
  for (const LinearMap& v : C.kernel()) {
    LinearMap m(f, dst, src);
    for (std::size_t r = 0; r < dst; ++r)
      for (std::size_t k = 0; k < src; ++k) m.set(r, k, v.get(r * src + k, 0));
    out.push_back(std::move(m));
  }
  return out;
}

void append(std::vector<Scalar>& out, const LinearMap& m) {
  for (std::size_t i = 0; i < m.matrix().size(); ++i) out.push_back(m.matrix().get(i));
}

std::vector<LinearMap> action_matrices(const QuasiHopfAlgebra& H, const HModule& M) {
  std::vector<LinearMap> out;
  for (std::size_t i = 0; i < H.dim(); ++i) out.push_back(basis_action(H, M, i));
  return out;
}

}  // namespace

HModule random_module(Sampler& rng, const std::vector<HModule>& pool, std::size_t max_dim) {
  std::vector<ModuleDim> wrapped;
  for (const HModule& m : pool) wrapped.push_back({m});
  return random_sum(
             rng, wrapped, max_dim,
             [](const ModuleDim& a, const ModuleDim& b) { return ModuleDim{direct_sum(a.m, b.m)}; },
             [](const ModuleDim& a, const LinearMap& P, const LinearMap& Pi) {
               return ModuleDim{conjugate(a.m, P, Pi)};
             })
      .m;
}

YDModule random_yd_module(Sampler& rng, const std::vector<YDModule>& pool, std::size_t max_dim) {
  return random_sum(rng, pool, max_dim, yd_direct_sum, yd_conjugate);
}

YDModule to_flavor(const Ambient& A, const YDModule& M, Flavor flavor) {
  if (M.flavor != Flavor::LL) throw std::invalid_argument("to_flavor expects an LL module");
  switch (flavor) {
    case Flavor::LL: return M;
    case Flavor::LR: return functor_F_inv(A, M);
    case Flavor::RR: return functor_K(A, M);
    case Flavor::RL: return functor_G_inv(A, functor_F_inv(A, M));
  }
  throw std::logic_error("unknown flavor");
}

std::vector<LinearMap> module_hom_basis(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N) {
  const auto am = action_matrices(H, M), an = action_matrices(H, N);
  return solve_hom(H.field(), N.dim, M.dim, [&](const LinearMap& f) {
    std::vector<Scalar> r;
    for (std::size_t i = 0; i < am.size(); ++i) append(r, an[i] * f - f * am[i]);
    return r;
  });
}

std::vector<LinearMap> yd_hom_basis(const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N) {
  if (M.flavor != N.flavor) throw DimensionMismatch("Hom between YD modules of different flavors");
  const auto am = action_matrices(H, M.module), an = action_matrices(H, N.module);
  const LinearMap cm = coaction_map(M), cn = coaction_map(N);
  const LinearMap In = LinearMap::identity(H.field(), H.dim());
  const bool L = left_coaction(M.flavor);
  return solve_hom(H.field(), N.dim(), M.dim(), [&](const LinearMap& f) {
    std::vector<Scalar> r;
    for (std::size_t i = 0; i < am.size(); ++i) append(r, an[i] * f - f * am[i]);
    append(r, cn * f - (L ? In.kron(f) : f.kron(In)) * cm);
    return r;
  });
}

LinearMap random_combination(Sampler& rng, const std::vector<LinearMap>& basis, std::size_t dst,
                             std::size_t src) {
  LinearMap out(rng.field(), dst, src);
  for (const LinearMap& b : basis) out = out + b.scaled(rng.scalar());
  return out;
}

}  // namespace qhopf
