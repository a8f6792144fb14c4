#include <doctest.h>

#include <random>

#include "qhopf/algebra_element.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/linear_map.hpp"
#include "qhopf/tensor.hpp"

using namespace qhopf;

namespace {

Tensor random_tensor(const Field& f, std::vector<Leg> legs, std::uint64_t seed) {
  Tensor t(f, std::move(legs));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < t.size(); ++i) t.set(i, f.reduce(Scalar(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3)));
  return t;
}

LinearMap random_map(const Field& f, std::size_t r, std::size_t c, std::uint64_t seed) {
  return LinearMap::from_tensor(random_tensor(f, {{"out", r}, {"in", c}}, seed), {"out"}, {"in"});
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(101);
  CHECK(f.reduce(Scalar(-1)) == 100);
  CHECK(f.reduce(Scalar(1, 2)) == 51);  // 2·51 = 102
  CHECK(f.mul(f.inv(Scalar(7)), Scalar(7)) == 1);
  CHECK_THROWS_AS(f.inv(Scalar(0)), NotInvertible);
  CHECK_THROWS(Field::prime(100));
  const Scalar z = f.root_of_unity(4);
  CHECK(f.mul(z, z) == 100);
  CHECK(to_string(parse_scalar("-3/4")) == "-3/4");
  CHECK(Field::rationals().reduce(Scalar(6, 4)) == Scalar(3, 2));
}

TEST_CASE("contraction matches an explicit triple loop") {
  for (const Field& f : {Field::rationals(), Field::prime(101)}) {
    const Tensor x = random_tensor(f, {{"a", 3}, {"b", 4}, {"c", 2}}, 11);
    const Tensor w = random_tensor(f, {{"b", 4}, {"c", 2}, {"k", 5}}, 12);
    for (const KernelMode mode : {KernelMode::parallel, KernelMode::reference}) {
      const Tensor r = x.contract({"b", "c"}, w, {Leg{"k", 5}}, mode);
      REQUIRE(r.names() == std::vector<std::string>{"a", "k"});
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t k = 0; k < 5; ++k) {
          Scalar s = 0;
          for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t c = 0; c < 2; ++c) s += x.at({a, b, c}) * w.at({b, c, k});
          CHECK(r.at({a, k}) == f.reduce(s));
        }
    }
  }
}

TEST_CASE("parallel and reference kernels agree on outer products") {
  const Field f = Field::prime(101);
  const Tensor a = random_tensor(f, {{"a", 5}, {"b", 3}}, 1);
  const Tensor b = random_tensor(f, {{"c", 4}}, 2);
  const Tensor p = Tensor::outer(a, b, KernelMode::parallel);
  CHECK(p == Tensor::outer(a, b, KernelMode::reference));
  CHECK(p.at({2, 1, 3}) == f.mul(a.at({2, 1}), b.at({3})));
}

TEST_CASE("leg bookkeeping") {
  const Tensor t = random_tensor(Field::rationals(), {{"a", 2}, {"b", 3}}, 5);
  const Tensor o = t.ordered({"b", "a"});
  CHECK(o.at({2, 1}) == t.at({1, 2}));
  CHECK(o == t);  // equality is by leg name
  const Tensor m = t.merged({"a", "b"}, "ab");
  CHECK(m.at({1 * 3 + 2}) == t.at({1, 2}));
  CHECK(m.split("ab", {{"a", 2}, {"b", 3}}) == t);
  CHECK_THROWS(t.contract({"zz"}, t, {}));
}

TEST_CASE("linear maps") {
  const Field f = Field::prime(101);
  const LinearMap A = random_map(f, 3, 3, 21), B = random_map(f, 2, 2, 22);
  const LinearMap K = A.kron(B);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 2; ++l) CHECK(K.get(i * 2 + j, k * 2 + l) == f.mul(A.get(i, k), B.get(j, l)));
  if (auto inv = A.inverse()) {
    CHECK((A * *inv).is_identity());
    CHECK((*inv * A).is_identity());
  }
  LinearMap S(f, 2, 3);  // rank 1
  S.set(0, 0, 1);
  S.set(0, 1, 2);
  S.set(1, 0, 2);
  S.set(1, 1, 4);
  CHECK(S.rank() == 1);
  const auto ker = S.kernel();
  CHECK(ker.size() == 2);
  for (const LinearMap& v : ker) CHECK((S * v).is_zero());
  CHECK_FALSE(S.transpose().kron(S).inverse().has_value());
  LinearMap b(f, 2, 1);
  b.set(0, 0, 1);
  CHECK_FALSE(S.solve(b).has_value());
  b.set(1, 0, 2);
  const auto x = S.solve(b);
  REQUIRE(x.has_value());
  CHECK(S * *x == b);
}

TEST_CASE("algebra elements") {
  const Field f = Field::rationals();
  AlgebraElement x(f, 2, 3);
  x.set({0, 1, 1}, Scalar(3));
  const AlgebraElement y = x.permuted({2, 0, 1});
  CHECK(y.coeff({1, 0, 1}) == 3);
  CHECK((x - x).is_zero());
  CHECK(x.scaled(Scalar(1, 3)).coeff({0, 1, 1}) == 1);
}
