#include "cohsup/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace cohsup {

monomial::monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  deg_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

monomial monomial::unit(std::size_t arity) {
  return monomial(std::vector<std::uint32_t>(arity, 0));
}

monomial monomial::variable(std::size_t arity, std::size_t i) {
  std::vector<std::uint32_t> e(arity, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

monomial monomial::operator*(const monomial& o) const {
  if (arity() != o.arity()) throw arity_mismatch{};
  std::vector<std::uint32_t> e(arity());
  for (std::size_t i = 0; i < arity(); ++i) e[i] = exps_[i] + o.exps_[i];
  return monomial(std::move(e));
}

bool monomial::divides(const monomial& o) const {
  if (arity() != o.arity()) throw arity_mismatch{};
  for (std::size_t i = 0; i < arity(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

monomial monomial::quotient_by(const monomial& o) const {
  if (arity() != o.arity()) throw arity_mismatch{};
  std::vector<std::uint32_t> e(arity());
  for (std::size_t i = 0; i < arity(); ++i) e[i] = exps_[i] - o.exps_[i];
  return monomial(std::move(e));
}

monomial monomial::lcm(const monomial& a, const monomial& b) {
  if (a.arity() != b.arity()) throw arity_mismatch{};
  std::vector<std::uint32_t> e(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return monomial(std::move(e));
}

bool monomial::coprime_with(const monomial& o) const {
  if (arity() != o.arity()) throw arity_mismatch{};
  for (std::size_t i = 0; i < arity(); ++i)
    if (exps_[i] && o.exps_[i]) return false;
  return true;
}

std::vector<std::size_t> monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < arity(); ++i)
    if (exps_[i]) s.push_back(i);
  return s;
}

int monomial_order::compare(const monomial& a, const monomial& b) const {
  if (a.arity() != b.arity()) throw arity_mismatch{};
  if (kind == order_kind::grevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // rightmost differing exponent: smaller exponent there means the larger monomial
    for (std::size_t i = a.arity(); i-- > 0;) {
      if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
  }
  return 0;
}

polynomial normalized(polynomial p) {
  auto& t = p.terms_;
  std::sort(t.begin(), t.end(), [&](const polynomial::term& x, const polynomial::term& y) {
    return p.order_.compare(x.first, y.first) > 0;
  });
  std::vector<polynomial::term> out;
  out.reserve(t.size());
  for (auto& tm : t) {
    if (!out.empty() && out.back().first == tm.first)
      out.back().second += tm.second;
    else
      out.push_back(std::move(tm));
  }
  std::erase_if(out, [](const polynomial::term& tm) { return tm.second.is_zero(); });
  p.terms_ = std::move(out);
  return p;
}

polynomial polynomial::zero(const field_spec& f, std::size_t arity, monomial_order ord) {
  polynomial p;
  p.field_ = f;
  p.arity_ = arity;
  p.order_ = ord;
  return p;
}

polynomial polynomial::constant(const scalar& c, std::size_t arity, monomial_order ord) {
  return single(c, monomial::unit(arity), ord);
}

polynomial polynomial::single(const scalar& c, const monomial& m, monomial_order ord) {
  polynomial p = zero(c.field(), m.arity(), ord);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

polynomial polynomial::from_terms(const field_spec& f, std::size_t arity,
                                  std::vector<term> terms, monomial_order ord) {
  polynomial p = zero(f, arity, ord);
  for (const auto& [m, c] : terms) {
    if (m.arity() != arity) throw arity_mismatch{};
    if (c.field() != f) throw field_mismatch{};
  }
  p.terms_ = std::move(terms);
  return normalized(std::move(p));
}

const monomial& polynomial::leading_monomial() const {
  if (is_zero()) throw zero_polynomial{};
  return terms_.front().first;
}

const scalar& polynomial::leading_coeff() const {
  if (is_zero()) throw zero_polynomial{};
  return terms_.front().second;
}

void polynomial::check_compatible(const polynomial& o) const {
  if (field_ != o.field_) throw field_mismatch{};
  if (arity_ != o.arity_) throw arity_mismatch{};
}

polynomial polynomial::operator-() const {
  polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

polynomial polynomial::operator+(const polynomial& o) const {
  check_compatible(o);
  const polynomial& rhs = order_ == o.order_ ? o : o.with_order(order_);
  polynomial out = zero(field_, arity_, order_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int cmp = order_.compare(terms_[i].first, rhs.terms_[j].first);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(rhs.terms_[j++]);
    } else {
      scalar c = terms_[i].second + rhs.terms_[j].second;
      if (!c.is_zero()) out.terms_.push_back({terms_[i].first, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.terms_.push_back(rhs.terms_[j]);
  return out;
}

polynomial polynomial::operator-(const polynomial& o) const { return *this + (-o); }

polynomial polynomial::operator*(const polynomial& o) const {
  check_compatible(o);
  auto greater = [this](const monomial& a, const monomial& b) {
    return order_.compare(a, b) > 0;
  };
  std::map<monomial, scalar, decltype(greater)> acc(greater);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      monomial m = ma * mb;
      scalar c = ca * cb;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second += c;
    }
  }
  polynomial out = zero(field_, arity_, order_);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
  return out;
}

polynomial polynomial::scaled(const scalar& c) const {
  if (c.field() != field_) throw field_mismatch{};
  if (c.is_zero()) return zero(field_, arity_, order_);
  polynomial p = *this;
  for (auto& [m, k] : p.terms_) k *= c;
  return p;
}

polynomial polynomial::times_term(const scalar& c, const monomial& m) const {
  if (c.field() != field_) throw field_mismatch{};
  if (m.arity() != arity_) throw arity_mismatch{};
  if (c.is_zero()) return zero(field_, arity_, order_);
  polynomial p = zero(field_, arity_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) p.terms_.push_back({mm * m, cc * c});
  return p;  // multiplying by a fixed monomial preserves the term order
}

polynomial polynomial::monic() const {
  if (is_zero()) throw zero_polynomial{};
  return scaled(leading_coeff().inverse());
}

bool polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  const std::uint32_t d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const term& t) { return t.first.degree() == d; });
}

std::uint32_t polynomial::total_degree() const {
  if (is_zero()) throw zero_polynomial{};
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

polynomial polynomial::with_order(monomial_order ord) const {
  if (ord == order_) return *this;
  polynomial p = *this;
  p.order_ = ord;
  return normalized(std::move(p));
}

polynomial polynomial::truncated(std::uint32_t level) const {
  polynomial p = zero(field_, arity_, order_);
  for (const auto& t : terms_)
    if (t.first.degree() <= level) p.terms_.push_back(t);
  return p;
}

bool polynomial::operator==(const polynomial& o) const {
  if (field_ != o.field_ || arity_ != o.arity_) return false;
  const polynomial& rhs = order_ == o.order_ ? o : o.with_order(order_);
  return terms_ == rhs.terms_;
}

std::size_t ord(const polynomial& f) {
  if (f.is_zero()) throw zero_polynomial{};
  std::uint32_t d = UINT32_MAX;
  for (const auto& [m, c] : f.terms()) d = std::min(d, m.degree());
  return d;
}

polynomial lowest_form(const polynomial& f) {
  if (f.is_zero()) throw zero_polynomial{};
  const std::uint32_t d = static_cast<std::uint32_t>(ord(f));
  std::vector<polynomial::term> keep;
  for (const auto& t : f.terms())
    if (t.first.degree() == d) keep.push_back(t);
  return polynomial::from_terms(f.field(), f.arity(), std::move(keep), f.order());
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  field_spec field;
  monomial_order order;
  std::size_t pos = 0;

  // variable indices sorted so longer names match first
  std::vector<std::size_t> by_length;

  parser(const std::string& t, const std::vector<std::string>& v, const field_spec& f,
         monomial_order o)
      : text(t), vars(v), field(f), order(o) {
    by_length.resize(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) by_length[i] = i;
    std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
      return vars[a].size() > vars[b].size();
    });
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  unsigned long long parse_uint() {
    skip_ws();
    std::size_t begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == begin) throw syntax_error(pos, "expected a number");
    const std::string digits = text.substr(begin, pos - begin);
    if (digits.size() > 18) throw syntax_error(begin, "integer literal too large");
    return std::stoull(digits);
  }

  // returns npos when no declared variable matches at pos
  std::size_t match_variable() {
    skip_ws();
    for (std::size_t idx : by_length) {
      const std::string& name = vars[idx];
      if (text.compare(pos, name.size(), name) == 0) {
        pos += name.size();
        return idx;
      }
    }
    return std::string::npos;
  }

  bool at_factor() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  monomial parse_factor() {
    std::size_t begin = pos;
    std::size_t v = match_variable();
    if (v == std::string::npos) {
      std::size_t p = pos;
      std::string name;
      while (p < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_'))
        name += text[p++];
      throw unknown_variable(name, begin);
    }
    std::uint32_t e = 1;
    if (eat('^')) {
      unsigned long long raw = parse_uint();
      if (raw > 1'000'000) throw syntax_error(begin, "exponent too large");
      e = static_cast<std::uint32_t>(raw);
    }
    std::vector<std::uint32_t> exps(vars.size(), 0);
    exps[v] = e;
    return monomial(std::move(exps));
  }

  polynomial::term parse_term() {
    scalar coeff = scalar::one(field);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      unsigned long long num = parse_uint();
      coeff = scalar::of_int(field, static_cast<long long>(num));
      if (eat('/')) {
        std::size_t dpos = pos;
        unsigned long long den = parse_uint();
        if (den == 0) throw syntax_error(dpos, "zero denominator");
        coeff = coeff / scalar::of_int(field, static_cast<long long>(den));
      }
      have_coeff = true;
      if (eat('*') && !at_factor())
        throw syntax_error(pos, "expected a variable after '*'");
    }
    monomial m = monomial::unit(vars.size());
    bool have_factor = false;
    while (at_factor()) {
      m = m * parse_factor();
      have_factor = true;
      if (eat('*') && !at_factor())
        throw syntax_error(pos, "expected a variable after '*'");
    }
    if (!have_coeff && !have_factor)
      throw syntax_error(pos, "expected a term");
    return {std::move(m), std::move(coeff)};
  }

  polynomial parse() {
    std::vector<polynomial::term> terms;
    bool neg = eat('-');
    auto push = [&](polynomial::term t, bool negate) {
      if (negate) t.second = -t.second;
      terms.push_back(std::move(t));
    };
    push(parse_term(), neg);
    while (!at_end()) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        push(parse_term(), c == '-');
      } else {
        throw syntax_error(pos, std::string("unexpected character '") + c + "'");
      }
    }
    return polynomial::from_terms(field, vars.size(), std::move(terms), order);
  }
};

}  // namespace

polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                            const field_spec& f, monomial_order ord) {
  if (vars.empty() || vars.size() > max_arity)
    throw invalid_presentation("variable count must be between 1 and 16");
  parser p(text, vars, f, ord);
  return p.parse();
}

std::string to_string(const polynomial& f, const std::vector<std::string>& vars) {
  if (f.arity() != vars.size()) throw arity_mismatch{};
  if (f.is_zero()) return "0";
  const polynomial g = f.with_order({order_kind::grevlex});
  std::string out;
  bool first = true;
  for (const auto& [m, c] : g.terms()) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? '-' : '+';
    }
    const bool unit_coeff = cs == "1";
    if (!unit_coeff || m.is_unit()) out += cs;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m.exp(i) == 0) continue;
      out += vars[i];
      if (m.exp(i) > 1) out += "^" + std::to_string(m.exp(i));
    }
  }
  return out;
}

}  // namespace cohsup
