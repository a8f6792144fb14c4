#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qhopf/yd.hpp"

namespace qhopf {

// Seeded source of scalars and matrices. Draws are reduced with a plain modulo so that a
// seed gives the same sequence with any standard library.
class Sampler {
 public:
  Sampler(std::uint64_t seed, Field field);

  const Field& field() const noexcept { return field_; }
  std::size_t below(std::size_t n);
  // Uniform over F_p; an integer in [-3, 3] over ℚ.
  Scalar scalar();
  LinearMap matrix(std::size_t rows, std::size_t cols);
  // (P, P⁻¹)
  std::pair<LinearMap, LinearMap> invertible(std::size_t d);

 private:
  std::mt19937_64 engine_;
  Field field_;
};

// Conjugated direct sum of pool members of total dimension at most max_dim.
HModule random_module(Sampler& rng, const std::vector<HModule>& pool, std::size_t max_dim);
YDModule random_yd_module(Sampler& rng, const std::vector<YDModule>& pool, std::size_t max_dim);

// LL → the given flavor: LR = F⁻¹(M), RR = K(M), RL = G⁻¹(F⁻¹(M)).
YDModule to_flavor(const Ambient& A, const YDModule& M, Flavor flavor);

// Bases of Hom spaces, as dst×src maps.
std::vector<LinearMap> module_hom_basis(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N);
std::vector<LinearMap> yd_hom_basis(const QuasiHopfAlgebra& H, const YDModule& M, const YDModule& N);
// Random combination of the basis (the zero map when it is empty).
LinearMap random_combination(Sampler& rng, const std::vector<LinearMap>& basis, std::size_t dst,
                             std::size_t src);

}  // namespace qhopf
