#include "qhopf/spec_format.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qhopf/catalog.hpp"
#include "qhopf/errors.hpp"
#include "util.hpp"

namespace qhopf {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

// Entries keyed by index tuple so duplicates are caught.
using Entries = std::map<std::vector<std::size_t>, Scalar>;

struct Block {
  bool yd = false;
  Side side = Side::left;
  Flavor flavor = Flavor::LL;
  std::size_t dim = 0;
  Entries act, coact;
  std::size_t line = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AlgebraSpec run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header = false;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos) eol = text_.size();
      ++line_no;
      line_ = line_no;
      toks_ = tokenize(text_.substr(pos, eol - pos));
      pos = eol + 1;
      if (toks_.empty()) continue;
      if (!header) {
        if (toks_[0].text != "qhopf-spec") fail(0, "expected header 'qhopf-spec 1'");
        arity(2);
        if (toks_[1].text != "1") fail(1, "unsupported format version '" + toks_[1].text + "'");
        header = true;
        continue;
      }
      statement();
    }
    if (!header) throw ParseError(line_no, 1, "empty input");
    if (block_) throw ParseError(block_->line, 1, "block not closed with 'end'");
    return build();
  }

 private:
  [[noreturn]] void fail(std::size_t tok, const std::string& what) const {
    const std::size_t col = tok < toks_.size() ? toks_[tok].column : (toks_.empty() ? 1 : toks_.back().column);
    throw ParseError(line_, col, what);
  }

  void arity(std::size_t n) const {
    if (toks_.size() != n) {
      fail(toks_.size() > n ? n : toks_.size() - 1,
           "'" + toks_[0].text + "' takes " + std::to_string(n - 1) + " argument(s), got " +
               std::to_string(toks_.size() - 1));
    }
  }

  std::size_t number(std::size_t tok) const {
    const std::string& s = toks_[tok].text;
    std::size_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(tok, "expected a non-negative integer, got '" + s + "'");
    return v;
  }

  // Basis index: an integer below n or a basis name. Tokens starting with a digit are always
  // read as integers, so a name such as "1" is a label only.
  std::size_t index(std::size_t tok, std::size_t bound) const {
    const std::string& s = toks_[tok].text;
    if (!s.empty() && s[0] >= '0' && s[0] <= '9') {
      const std::size_t v = number(tok);
      if (v >= bound) fail(tok, "index " + s + " out of range (bound " + std::to_string(bound) + ")");
      return v;
    }
    if (bound == n_) {
      for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == s) return i;
    }
    fail(tok, "unknown basis element '" + s + "'");
  }

  Scalar scalar(std::size_t tok) const {
    try {
      return field_->reduce(parse_scalar(toks_[tok].text));
    } catch (const NotInvertible&) {
      fail(tok, "scalar '" + toks_[tok].text + "' has a denominator divisible by p");
    } catch (const std::invalid_argument&) {
      fail(tok, "expected an exact scalar (integer or a/b), got '" + toks_[tok].text + "'");
    }
  }

  void need_shape() const {
    if (!field_) fail(0, "'field' must precede '" + toks_[0].text + "'");
    if (n_ == 0) fail(0, "'dim' must precede '" + toks_[0].text + "'");
  }

  void entry(Entries& e, std::size_t legs, const std::vector<std::size_t>& bounds) {
    need_shape();
    arity(legs + 2);
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < legs; ++k) idx.push_back(index(k + 1, bounds[k]));
    const Scalar v = scalar(legs + 1);
    if (!e.emplace(idx, v).second) fail(1, "duplicate entry for '" + toks_[0].text + "'");
  }

  void statement() {
    const std::string& kw = toks_[0].text;
    if (block_) {
      if (kw == "end") {
        arity(1);
        blocks_.push_back(std::move(*block_));
        block_.reset();
      } else if (kw == "act") {
        entry(block_->act, 3, {n_, block_->dim, block_->dim});
      } else if (kw == "coact" && block_->yd) {
        const bool left = left_coaction(block_->flavor);
        entry(block_->coact, 3,
              left ? std::vector<std::size_t>{block_->dim, n_, block_->dim}
                   : std::vector<std::size_t>{block_->dim, block_->dim, n_});
      } else {
        fail(0, "unexpected '" + kw + "' inside a module block");
      }
      return;
    }
    if (kw == "name") {
      if (toks_.size() < 2) fail(0, "'name' needs a value");
      name_ = toks_[1].text;
      for (std::size_t i = 2; i < toks_.size(); ++i) name_ += " " + toks_[i].text;
    } else if (kw == "field") {
      arity(2);
      if (field_) fail(0, "duplicate 'field'");
      try {
        field_ = parse_field(toks_[1].text);
      } catch (const std::invalid_argument& e) {
        fail(1, e.what());
      }
    } else if (kw == "dim") {
      arity(2);
      if (n_ != 0) fail(0, "duplicate 'dim'");
      n_ = number(1);
      if (n_ == 0) fail(1, "dimension must be positive");
    } else if (kw == "basis") {
      need_shape();
      arity(n_ + 1);
      basis_.clear();
      std::set<std::string> seen;
      for (std::size_t i = 1; i <= n_; ++i) {
        if (!seen.insert(toks_[i].text).second) fail(i, "duplicate basis name");
        basis_.push_back(toks_[i].text);
      }
    } else if (kw == "mult") {
      entry(mult_, 3, {n_, n_, n_});
    } else if (kw == "comult") {
      entry(comult_, 3, {n_, n_, n_});
    } else if (kw == "unit") {
      entry(unit_, 1, {n_});
    } else if (kw == "counit") {
      entry(counit_, 1, {n_});
    } else if (kw == "antipode") {
      entry(antipode_, 2, {n_, n_});
    } else if (kw == "antipode_inv") {
      entry(antipode_inv_, 2, {n_, n_});
    } else if (kw == "alpha") {
      entry(alpha_, 1, {n_});
    } else if (kw == "beta") {
      entry(beta_, 1, {n_});
    } else if (kw == "phi") {
      entry(phi_, 3, {n_, n_, n_});
    } else if (kw == "R") {
      has_R_ = true;
      entry(R_, 2, {n_, n_});
    } else if (kw == "module") {
      need_shape();
      arity(3);
      Block b;
      if (toks_[1].text == "left") b.side = Side::left;
      else if (toks_[1].text == "right") b.side = Side::right;
      else fail(1, "module side must be 'left' or 'right'");
      b.dim = number(2);
      if (b.dim == 0) fail(2, "module dimension must be positive");
      b.line = line_;
      block_ = std::move(b);
    } else if (kw == "yd") {
      need_shape();
      arity(3);
      Block b;
      b.yd = true;
      const std::array<std::pair<const char*, Flavor>, 4> fl{
          {{"LL", Flavor::LL}, {"LR", Flavor::LR}, {"RL", Flavor::RL}, {"RR", Flavor::RR}}};
      bool found = false;
      for (const auto& [s, f] : fl) {
        if (toks_[1].text == s) {
          b.flavor = f;
          found = true;
        }
      }
      if (!found) fail(1, "flavor must be one of LL, LR, RL, RR");
      b.side = action_side(b.flavor);
      b.dim = number(2);
      if (b.dim == 0) fail(2, "module dimension must be positive");
      b.line = line_;
      block_ = std::move(b);
    } else {
      fail(0, "unknown keyword '" + kw + "'");
    }
  }

  Tensor fill(const Entries& e, std::vector<Leg> legs) const {
    Tensor t(*field_, std::move(legs));
    for (const auto& [idx, v] : e) t.set_at(std::span<const std::size_t>(idx), v);
    return t;
  }

  AlgebraElement element(const Entries& e, std::size_t legs) const {
    std::vector<Leg> l;
    for (std::size_t k = 0; k < legs; ++k) l.push_back({std::to_string(k), n_});
    return AlgebraElement::from_tensor(fill(e, std::move(l)));
  }

  LinearMap matrix(const Entries& e) const {
    LinearMap m(*field_, n_, n_);
    for (const auto& [idx, v] : e) m.set(idx[1], idx[0], v);  // S(e_src) has coefficient v on e_dst
    return m;
  }

  AlgebraSpec build() {
    if (!field_ || n_ == 0) throw ParseError(line_, 1, "missing 'field' or 'dim'");
    if (antipode_.empty()) throw ParseError(line_, 1, "missing 'antipode'");
    if (basis_.empty()) {
      for (std::size_t i = 0; i < n_; ++i) basis_.push_back("e" + std::to_string(i));
    }
    AlgebraStructure s;
    s.field = *field_;
    s.n = n_;
    s.basis = basis_;
    s.mult = fill(mult_, {{"a", n_}, {"b", n_}, {"c", n_}});
    s.comult = fill(comult_, {{"a", n_}, {"b", n_}, {"c", n_}});
    s.unit = fill(unit_, {{"a", n_}});
    s.counit = fill(counit_, {{"a", n_}});
    s.antipode = matrix(antipode_);
    if (antipode_inv_.empty()) {
      auto inv = s.antipode->inverse();
      if (!inv) throw ValidationError("S-inverse", "antipode is not bijective");
      s.antipode_inv = *inv;
    } else {
      s.antipode_inv = matrix(antipode_inv_);
    }
    std::optional<QuasiHopfAlgebra> H;
    try {
      H = make_quasi_hopf(name_, std::move(s), element(phi_, 3), element(alpha_, 1), element(beta_, 1));
    } catch (const NotInvertible&) {
      throw ValidationError("phi-inv", "reassociator is not invertible");
    }
    AlgebraSpec spec{std::move(*H), std::nullopt, {}, {}};
    if (has_R_) spec.R = element(R_, 2);
    for (const Block& b : blocks_) {
      HModule m{b.side, b.dim, fill(b.act, {{"h", n_}, {"v", b.dim}, {"w", b.dim}})};
      if (!b.yd) {
        spec.modules.push_back(std::move(m));
        continue;
      }
      Tensor c = left_coaction(b.flavor) ? fill(b.coact, {{"v", b.dim}, {"h", n_}, {"w", b.dim}})
                                         : fill(b.coact, {{"v", b.dim}, {"w", b.dim}, {"h", n_}});
      spec.yd_modules.push_back(make_yd(b.flavor, std::move(m), std::move(c)));
    }
    return spec;
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::vector<Token> toks_;

  std::string name_ = "unnamed";
  std::optional<Field> field_;
  std::size_t n_ = 0;
  std::vector<std::string> basis_;
  Entries mult_, comult_, unit_, counit_, antipode_, antipode_inv_, alpha_, beta_, phi_, R_;
  bool has_R_ = false;
  std::optional<Block> block_;
  std::vector<Block> blocks_;
};

// Lower rank = more basic; the most basic failing tag is the one cited.
int priority(const std::string& tag) {
  static const std::vector<std::string> order{"assoc", "unit",    "eps-hom", "delta-hom", "(q2)",  "phi-inv",
                                              "(q4)",  "(q7)",    "(q1)",    "(q3)",      "S-inverse", "S-anti",
                                              "eps-S", "eps-alpha-beta", "(q5)", "(q6)"};
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == tag) return static_cast<int>(i);
  return static_cast<int>(order.size());
}

void reject(const VerificationReport& rep, const std::string& prefix = {}) {
  if (rep.all_passed()) return;
  const std::vector<CheckResult> summary = rep.summary();
  const CheckResult* best = nullptr;
  std::string failing;
  for (const CheckResult& c : summary) {
    if (c.passed || c.skipped) continue;
    failing += (failing.empty() ? "" : ", ") + c.tag;
    if (!best || priority(c.tag) < priority(best->tag)) best = &c;
  }
  throw ValidationError(prefix + best->tag, "failing identities: " + failing + "; " + best->detail);
}

void emit(std::ostringstream& os, const char* kw, const Tensor& t) {
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    const Scalar v = t.get(flat);
    if (v == 0) continue;
    os << kw;
    for (const std::size_t i : t.multi_index(flat)) os << ' ' << i;
    os << ' ' << to_string(v) << '\n';
  }
}

void emit_matrix(std::ostringstream& os, const char* kw, const LinearMap& m) {
  for (std::size_t src = 0; src < m.src_dim(); ++src)
    for (std::size_t dst = 0; dst < m.dst_dim(); ++dst)
      if (m.get(dst, src) != 0) os << kw << ' ' << src << ' ' << dst << ' ' << to_string(m.get(dst, src)) << '\n';
}

}  // namespace

Field parse_field(std::string_view text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.starts_with("fp:")) {
    const std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return Field::prime(p);
  }
  throw std::invalid_argument("field must be 'q' or 'fp:<prime>', got '" + std::string(text) + "'");
}

std::string field_descriptor(const Field& f) {
  return f.is_rational() ? "q" : "fp:" + std::to_string(f.modulus());
}

void validate_spec(const AlgebraSpec& spec) {
  const QuasiHopfAlgebra& H = spec.H;
  VerificationReport rep = verify_quasi_bialgebra(H);
  rep.merge(verify_antipode(H));
  reject(rep);
  if (spec.R) reject(verify_qt(H, *spec.R));
  for (std::size_t i = 0; i < spec.modules.size(); ++i)
    reject(verify_module(H, spec.modules[i]), "module " + std::to_string(i) + ": ");
  for (std::size_t i = 0; i < spec.yd_modules.size(); ++i)
    reject(verify_yd(H, spec.yd_modules[i]), "yd module " + std::to_string(i) + ": ");
}

AlgebraSpec parse_spec(std::string_view text, bool validate) {
  AlgebraSpec spec = Parser(text).run();
  if (validate) validate_spec(spec);
  return spec;
}

AlgebraSpec load_spec(const std::string& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), validate);
}

std::string format_spec(const AlgebraSpec& spec) {
  const QuasiHopfAlgebra& H = spec.H;
  const AlgebraStructure& s = H.structure();
  std::ostringstream os;
  os << "qhopf-spec 1\n";
  os << "name " << H.name() << '\n';
  os << "field " << field_descriptor(H.field()) << '\n';
  os << "dim " << H.dim() << '\n';
  os << "basis";
  for (const auto& b : s.basis) os << ' ' << b;
  os << '\n';
  emit(os, "unit", s.unit);
  emit(os, "mult", s.mult);
  emit(os, "counit", s.counit);
  emit(os, "comult", s.comult);
  emit_matrix(os, "antipode", H.S());
  emit_matrix(os, "antipode_inv", H.S_inv());
  emit(os, "alpha", H.alpha().tensor());
  emit(os, "beta", H.beta().tensor());
  emit(os, "phi", H.phi().tensor());
  if (spec.R) emit(os, "R", spec.R->tensor());
  for (const HModule& m : spec.modules) {
    os << "module " << (m.side == Side::left ? "left" : "right") << ' ' << m.dim << '\n';
    emit(os, "act", m.action.ordered({"h", "v", "w"}));
    os << "end\n";
  }
  for (const YDModule& m : spec.yd_modules) {
    os << "yd " << flavor_name(m.flavor) << ' ' << m.dim() << '\n';
    emit(os, "act", m.module.action.ordered({"h", "v", "w"}));
    emit(os, "coact", left_coaction(m.flavor) ? m.coaction.ordered({"v", "h", "w"}) : m.coaction.ordered({"v", "w", "h"}));
    os << "end\n";
  }
  return os.str();
}

void save_spec(const AlgebraSpec& spec, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << format_spec(spec);
  if (!out) throw Error("write failed: " + path);
}

AlgebraSpec builtin_spec(const std::string& name, const Field& f) {
  Ambient A = builtin(name, f);
  AlgebraSpec spec{A.H, std::nullopt, builtin_modules(name, A.H), builtin_yd_modules(name, A)};
  if (A.qt) spec.R = A.qt->R;
  return spec;
}

AlgebraSpec spec_over(const AlgebraSpec& spec, const Field& f) {
  if (spec.H.field() == f) return spec;
  AlgebraSpec out{over_field(spec.H, f), std::nullopt, {}, {}};
  if (spec.R) out.R = reduce_element(*spec.R, f);
  for (const HModule& m : spec.modules) out.modules.push_back({m.side, m.dim, detail::convert(m.action, f)});
  for (const YDModule& y : spec.yd_modules) {
    HModule m{y.module.side, y.module.dim, detail::convert(y.module.action, f)};
    out.yd_modules.push_back(make_yd(y.flavor, std::move(m), detail::convert(y.coaction, f)));
  }
  return out;
}

}  // namespace qhopf
