#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/hmod.hpp"
#include "qhopf/quasitriangular.hpp"
#include "qhopf/yd.hpp"

namespace qhopf {

const std::vector<std::string>& builtin_names();
bool is_builtin(const std::string& name);

QuasiHopfAlgebra builtin_algebra(const std::string& name, const Field& f = Field::rationals());
std::optional<AlgebraElement> builtin_R(const std::string& name, const QuasiHopfAlgebra& H);
// Algebra plus derived records; throws on unknown names.
Ambient builtin(const std::string& name, const Field& f = Field::rationals());

// Functions on ℤ_n with the reassociator of the cocycle ω(a,b,c) = ζ^{q·a·⌊(b+c)/n⌋}.
QuasiHopfAlgebra cocycle_algebra(std::size_t n, long q, const Field& f);

// Small left modules shipped with each builtin (characters and low-dimensional indecomposables).
std::vector<HModule> builtin_modules(const std::string& name, const QuasiHopfAlgebra& H);

// Left Yetter-Drinfeld modules known for the algebra: QT embeddings of the shipped modules,
// the adjoint module when Φ is trivial, and one-dimensional coactions m ↦ c⊗m on characters.
std::vector<YDModule> builtin_yd_modules(const std::string& name, const Ambient& A);

}  // namespace qhopf
