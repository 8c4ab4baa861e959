#include "multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "error.hpp"

namespace hkl {

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Rational q{Integer(n), Integer(std::string(den))};
  if (q.get_den() == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace hkl

namespace hkl::poly {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrlexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  unsigned dl = total_degree(lhs), dr = total_degree(rhs);
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) fail(ErrorCode::InvalidArgument, "duplicate variable '" + vars_[i] + "'");
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.nvars(), 0);
  e[p.variable_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents e, const Rational& c) {
  MultiPoly p(std::move(variables));
  if (e.size() != p.nvars()) fail(ErrorCode::InvalidArgument, "exponent vector length mismatch");
  p.add_term(e, c);
  return p;
}

std::optional<std::size_t> MultiPoly::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::size_t MultiPoly::variable_index(std::string_view name) const {
  if (auto i = find_variable(name)) return *i;
  fail(ErrorCode::InvalidArgument, "unknown variable '" + std::string(name) + "'");
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) fail(ErrorCode::Internal, "exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(poly::total_degree(terms_.begin()->first));
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool MultiPoly::is_homogeneous_in(std::span<const std::size_t> vars, unsigned degree) const {
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (auto v : vars) d += e.at(v);
    if (d != degree) return false;
  }
  return true;
}

void MultiPoly::require_same_variables(const MultiPoly& other, const char* op) const {
  if (vars_ != other.vars_) fail(ErrorCode::InvalidArgument, std::string(op) + ": variable lists differ");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_variables(rhs, "add");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_same_variables(rhs, "sub");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) fail(ErrorCode::InvalidArgument, "mul: variable lists differ");
  MultiPoly out(a.variables());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly arith(const MultiPoly& p, const MultiPoly& q, ArithOp op) {
  auto vars = merge_variables(p.variables(), q.variables());
  MultiPoly a = p.with_variables(vars), b = q.with_variables(vars);
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  fail(ErrorCode::Internal, "unknown arithmetic op");
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly out(vars_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(vars_, 1), base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& expr) const {
  require_same_variables(expr, "substitute");
  std::size_t v = variable_index(var);
  std::vector<MultiPoly> powers{constant(vars_, 1)};
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[v]) powers.push_back(powers.back() * expr);
    Exponents rest = e;
    rest[v] = 0;
    out += powers[e[v]] * monomial(vars_, rest, c);
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  std::size_t v = variable_index(var);
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    --d[v];
    out.add_term(d, c * e[v]);
  }
  return out;
}

MultiPoly MultiPoly::evaluate_at(std::string_view var, const Rational& value) const {
  std::size_t v = variable_index(var);
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    r[v] = 0;
    out.add_term(r, c * hkl::pow(value, e[v]));
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) fail(ErrorCode::InvalidArgument, "evaluate: point has wrong dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= hkl::pow(point[i], e[i]);
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::coefficient_of(std::string_view var, unsigned power) const {
  std::size_t v = variable_index(var);
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] != power) continue;
    Exponents r = e;
    r[v] = 0;
    out.add_term(r, c);
  }
  return out;
}

MultiPoly MultiPoly::with_variables(std::vector<std::string> variables) const {
  MultiPoly out(std::move(variables));
  std::vector<std::size_t> map(vars_.size());
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto j = out.find_variable(vars_[i]);
    if (!j) {
      if (used[i]) fail(ErrorCode::InvalidArgument, "variable '" + vars_[i] + "' missing from target list");
      map[i] = SIZE_MAX;
    } else {
      map[i] = *j;
    }
  }
  for (const auto& [e, c] : terms_) {
    Exponents r(out.nvars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (map[i] != SIZE_MAX) r[map[i]] = e[i];
    out.add_term(r, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (p.variables() != d.variables()) fail(ErrorCode::InvalidArgument, "divide: variable lists differ");
  const auto& [lead_e, lead_c] = *d.terms().begin();
  MultiPoly rem = p, quot(p.variables());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    Exponents q(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      q[i] = re[i] - lead_e[i];
    }
    MultiPoly t = MultiPoly::monomial(p.variables(), q, rc / lead_c);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

// ---- parser ----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars) : text_(text), vars_(std::move(vars)) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, "polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        MultiPoly d = unary();
        if (d.total_degree() != 0) error("division by a non-constant");
        acc = acc.scaled(1 / d.terms().begin()->second);
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) error("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(vars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) error("unknown variable '" + name + "'");
      return MultiPoly::variable(vars_, name);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char c = text[i];
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string name(text.substr(i, j - i));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
      i = j;
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> variables) {
  return Parser(text, std::move(variables)).run();
}

MultiPoly MultiPoly::parse(std::string_view text) { return parse(text, scan_identifiers(text)); }

}  // namespace hkl::poly
