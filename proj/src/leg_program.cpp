#include "qhopf/leg_program.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

Term::Term(const Sweedler& sw) : sw_(&sw), t_(Tensor::scalar(sw.field(), Scalar(1))) {}

Term::Term(const Sweedler& sw, Tensor t) : sw_(&sw), t_(std::move(t)) {}

Term& Term::put(const AlgebraElement& x, std::vector<std::string> names) {
  t_ = Tensor::outer(t_, sw_->load(x, std::move(names)));
  return *this;
}

Term& Term::put(const Tensor& t) {
  t_ = Tensor::outer(t_, t);
  return *this;
}

Term& Term::one(const std::string& name) { return put(sw_->one(name)); }

Term& Term::free(const std::string& in, const std::string& out) { return put(sw_->free(in, out)); }

Term& Term::ident(const std::string& in, const std::string& out, std::size_t dim) {
  return put(Tensor::identity(sw_->field(), dim, in, out));
}

Term& Term::mul(std::initializer_list<std::string> legs, const std::string& as) {
  t_ = sw_->mul(t_, legs, as);
  return *this;
}

Term& Term::lmul(const std::string& a, const AlgebraElement& c) {
  t_ = sw_->lmul(t_, a, c);
  return *this;
}

Term& Term::rmul(const std::string& a, const AlgebraElement& c) {
  t_ = sw_->rmul(t_, a, c);
  return *this;
}

Term& Term::delta(const std::string& a, const std::string& a1, const std::string& a2) {
  t_ = sw_->delta(t_, a, a1, a2);
  return *this;
}

Term& Term::eps(const std::string& a) {
  t_ = sw_->eps(t_, a);
  return *this;
}

Term& Term::S(const std::string& a) {
  t_ = sw_->S(t_, a);
  return *this;
}

Term& Term::Sinv(const std::string& a) {
  t_ = sw_->Sinv(t_, a);
  return *this;
}

Term& Term::apply(const std::string& a, const LinearMap& m) {
  t_ = sw_->apply(t_, a, m);
  return *this;
}

Term& Term::act(const Tensor& action, const std::string& h, const std::string& v) {
  t_ = sw_->act(t_, action, h, v);
  return *this;
}

Term& Term::coact_left(const Tensor& coaction, const std::string& v, const std::string& h) {
  t_ = sw_->coact_left(t_, coaction, v, h);
  return *this;
}

Term& Term::coact_right(const Tensor& coaction, const std::string& v, const std::string& h) {
  t_ = sw_->coact_right(t_, coaction, v, h);
  return *this;
}

Term& Term::rename(const std::string& from, const std::string& to) {
  t_ = t_.renamed(from, to);
  return *this;
}

Term& Term::trace(const std::string& a, const std::string& b) {
  t_ = t_.trace(a, b);
  return *this;
}

Term& Term::contract(std::initializer_list<std::string> in, const Tensor& weight,
                     std::initializer_list<Leg> out) {
  t_ = t_.contract(in, weight, out);
  return *this;
}

AlgebraElement Term::element(std::initializer_list<std::string> order) const {
  return AlgebraElement::from_tensor(t_, order);
}

LinearMap Term::map(std::initializer_list<std::string> out, std::initializer_list<std::string> in) const {
  return LinearMap::from_tensor(t_, out, in);
}

LinearMap Term::map(std::span<const std::string> out, std::span<const std::string> in) const {
  return LinearMap::from_tensor(t_, out, in);
}

LegProgram& LegProgram::load_constant(AlgebraElement x, std::vector<std::string> names) {
  steps_.push_back(LoadConstant{std::move(x), std::move(names)});
  return *this;
}
LegProgram& LegProgram::load_input(std::size_t slot, std::vector<std::string> names) {
  steps_.push_back(LoadInput{slot, std::move(names)});
  return *this;
}
LegProgram& LegProgram::load_unit(std::string name) {
  steps_.push_back(LoadUnit{std::move(name)});
  return *this;
}
LegProgram& LegProgram::multiply(std::string a, std::string b) {
  steps_.push_back(Multiply{std::move(a), std::move(b)});
  return *this;
}
LegProgram& LegProgram::coproduct(std::string a, std::string a1, std::string a2) {
  steps_.push_back(Coproduct{std::move(a), std::move(a1), std::move(a2)});
  return *this;
}
LegProgram& LegProgram::antipode(std::string a) {
  steps_.push_back(Antipode{std::move(a)});
  return *this;
}
LegProgram& LegProgram::antipode_inv(std::string a) {
  steps_.push_back(AntipodeInv{std::move(a)});
  return *this;
}
LegProgram& LegProgram::counit(std::string a) {
  steps_.push_back(Counit{std::move(a)});
  return *this;
}
LegProgram& LegProgram::contract_action(Tensor action, std::string h, std::string v) {
  steps_.push_back(ContractAction{std::move(action), std::move(h), std::move(v)});
  return *this;
}
LegProgram& LegProgram::output(std::vector<std::string> order) {
  steps_.push_back(Output{std::move(order)});
  return *this;
}

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

Tensor LegProgram::evaluate(const Sweedler& sw, const std::vector<Tensor>& inputs) const {
  Term t(sw);
  std::optional<std::vector<std::string>> order;
  for (const auto& step : steps_) {
    std::visit(overloaded{
                   [&](const LoadConstant& s) { t.put(s.value, s.names); },
                   [&](const LoadInput& s) {
                     if (s.slot >= inputs.size()) throw DimensionMismatch("missing program input");
                     t.put(inputs[s.slot].with_names(s.names));
                   },
                   [&](const LoadUnit& s) { t.one(s.name); },
                   [&](const Multiply& s) { t.mul({s.a, s.b}); },
                   [&](const Coproduct& s) { t.delta(s.a, s.a1, s.a2); },
                   [&](const Antipode& s) { t.S(s.a); },
                   [&](const AntipodeInv& s) { t.Sinv(s.a); },
                   [&](const Counit& s) { t.eps(s.a); },
                   [&](const ContractAction& s) { t.act(s.action, s.h, s.v); },
                   [&](const Output& s) { order = s.order; },
               },
               step);
  }
  if (order) return t.tensor().ordered(*order);
  return t.tensor();
}

AlgebraElement LegProgram::evaluate_element(const Sweedler& sw,
                                            const std::vector<AlgebraElement>& inputs) const {
  std::vector<Tensor> ts;
  for (const auto& x : inputs) ts.push_back(x.tensor());
  const Tensor r = evaluate(sw, ts);
  if (r.rank() == 0) {
    AlgebraElement one = sw.unit_element(1);
    return one.scaled(r.get(0));
  }
  return AlgebraElement::from_tensor(r);
}

}  // namespace qhopf
