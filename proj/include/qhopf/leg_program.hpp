#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qhopf/algebra_element.hpp"
#include "qhopf/linear_map.hpp"
#include "qhopf/sweedler.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

// Fluent wrapper over Sweedler: a tensor with named legs and a chain of steps.
// Starts as the scalar 1; `put` adjoins new legs by outer product.
class Term {
 public:
  explicit Term(const Sweedler& sw);
  Term(const Sweedler& sw, Tensor t);

  Term& put(const AlgebraElement& x, std::vector<std::string> names);
  Term& put(const Tensor& t);
  Term& one(const std::string& name);
  // δ on H (free algebra argument): legs [in, out].
  Term& free(const std::string& in, const std::string& out);
  // δ on a module of the given dimension.
  Term& ident(const std::string& in, const std::string& out, std::size_t dim);

  Term& mul(std::initializer_list<std::string> legs, const std::string& as = {});
  Term& lmul(const std::string& a, const AlgebraElement& c);
  Term& rmul(const std::string& a, const AlgebraElement& c);
  Term& delta(const std::string& a, const std::string& a1, const std::string& a2);
  Term& eps(const std::string& a);
  Term& S(const std::string& a);
  Term& Sinv(const std::string& a);
  Term& apply(const std::string& a, const LinearMap& m);

  Term& act(const Tensor& action, const std::string& h, const std::string& v);
  Term& coact_left(const Tensor& coaction, const std::string& v, const std::string& h);
  Term& coact_right(const Tensor& coaction, const std::string& v, const std::string& h);

  Term& rename(const std::string& from, const std::string& to);
  Term& trace(const std::string& a, const std::string& b);
  Term& contract(std::initializer_list<std::string> in, const Tensor& weight,
                 std::initializer_list<Leg> out);

  const Tensor& tensor() const noexcept { return t_; }
  const Sweedler& sweedler() const noexcept { return *sw_; }
  AlgebraElement element(std::initializer_list<std::string> order) const;
  LinearMap map(std::initializer_list<std::string> out, std::initializer_list<std::string> in) const;
  LinearMap map(std::span<const std::string> out, std::span<const std::string> in) const;

 private:
  const Sweedler* sw_;
  Tensor t_;
};

// A recorded Sweedler expression, replayed through Term on each evaluation.
// Inputs are algebra elements (one leg name per tensor leg) or module vectors.
class LegProgram {
 public:
  struct LoadConstant {
    AlgebraElement value;
    std::vector<std::string> names;
  };
  struct LoadInput {
    std::size_t slot;
    std::vector<std::string> names;
  };
  struct LoadUnit {
    std::string name;
  };
  struct Multiply {
    std::string a, b;
  };
  struct Coproduct {
    std::string a, a1, a2;
  };
  struct Antipode {
    std::string a;
  };
  struct AntipodeInv {
    std::string a;
  };
  struct Counit {
    std::string a;
  };
  struct ContractAction {
    Tensor action;
    std::string h, v;
  };
  struct Output {
    std::vector<std::string> order;
  };
  using Step = std::variant<LoadConstant, LoadInput, LoadUnit, Multiply, Coproduct, Antipode,
                            AntipodeInv, Counit, ContractAction, Output>;

  LegProgram& load_constant(AlgebraElement x, std::vector<std::string> names);
  LegProgram& load_input(std::size_t slot, std::vector<std::string> names);
  LegProgram& load_unit(std::string name);
  LegProgram& multiply(std::string a, std::string b);
  LegProgram& coproduct(std::string a, std::string a1, std::string a2);
  LegProgram& antipode(std::string a);
  LegProgram& antipode_inv(std::string a);
  LegProgram& counit(std::string a);
  LegProgram& contract_action(Tensor action, std::string h, std::string v);
  // Final leg order; places the result legs as positions 1..k.
  LegProgram& output(std::vector<std::string> order);

  const std::vector<Step>& steps() const noexcept { return steps_; }

  // Inputs are tensors whose legs are matched positionally to the LoadInput names.
  Tensor evaluate(const Sweedler& sw, const std::vector<Tensor>& inputs) const;
  AlgebraElement evaluate_element(const Sweedler& sw, const std::vector<AlgebraElement>& inputs) const;

 private:
  std::vector<Step> steps_;
};

}  // namespace qhopf
