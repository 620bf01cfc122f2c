#include "sds/form.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sds {

Rat parse_rational(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw std::invalid_argument("bad rational: '" + s + "'");
  std::size_t den_begin = num_end;
  if (num_end < s.size()) {
    if (s[num_end] != '/') throw std::invalid_argument("bad rational: '" + s + "'");
    den_begin = num_end + 1;
    std::size_t den_end = digits(den_begin);
    if (den_end != s.size() || den_end == den_begin)
      throw std::invalid_argument("bad rational: '" + s + "'");
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Int lcm_upto(int n) {
  Int l = 1;
  for (int k = 2; k <= n; ++k) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
  return l;
}

Rat rat_pow(const Rat& r, unsigned long k) {
  if (k == 0) return Rat(1);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num().get_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den().get_mpz_t(), k);
  return out;  // canonical already: gcd(num,den)=1 is preserved by powers
}

RatPoint parse_point(const std::string& text) {
  std::vector<Rat> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
    auto b = piece.find_first_not_of(" \t");
    auto e = piece.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coordinate in point");
    coords.push_back(parse_rational(piece.substr(b, e - b + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RatPoint(std::move(coords));
}

std::string to_string(const RatPoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ",";
    out += to_string(p.coords[i]);
  }
  return out;
}

Form::Form(int nvars) : nvars_(nvars), degree_(0) {
  if (nvars < 1) throw std::invalid_argument("a form needs at least one variable");
}

void Form::insert_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  if (int(e.size()) != nvars_) throw std::invalid_argument("exponent length != nvars");
  int total = 0;
  for (int p : e) {
    if (p < 0) throw std::invalid_argument("negative exponent");
    total += p;
  }
  if (terms_.empty()) {
    degree_ = total;
  } else if (total != degree_) {
    throw std::invalid_argument("non-homogeneous term: degree " + std::to_string(total) +
                                " vs " + std::to_string(degree_));
  }
  terms_.emplace(e, c);
}

Form Form::monomial(const Exponent& e, const Rat& c) {
  Form f(int(e.size()));
  f.insert_term(e, c);
  return f;
}

Form Form::sum_of_vars(int nvars) {
  Form f(nvars);
  for (int i = 0; i < nvars; ++i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    f.insert_term(e, 1);
  }
  return f;
}

Rat Form::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool Form::trivially_positive() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

Rat Form::value_at_ones() const {
  Rat sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

namespace {

// Recursive-descent parser for the term grammar. Tracks positions for error
// reporting; accumulates like terms before canonicalization.
class FormParser {
 public:
  FormParser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

  Form run() {
    skip_ws();
    if (eof()) throw ParseError("empty input", pos_);
    parse_signed_term(/*sign_required=*/false);
    while (true) {
      skip_ws();
      if (eof()) break;
      parse_signed_term(/*sign_required=*/true);
    }
    Form f(nvars_);
    // graded-lex canonical order falls out of the std::map; zero sums drop here
    for (auto& [e, c] : acc_) f.insert_term(e, c);
    return f;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  unsigned long parse_index(const char* what) {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(std::string("expected ") + what, pos_);
    unsigned long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > 1'000'000) throw ParseError(std::string(what) + " too large", pos_);
      ++pos_;
    }
    return v;
  }

  Int parse_integer() {
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return Int(text_.substr(start, pos_ - start));
  }

  Rat parse_coef() {
    Int num = parse_integer();
    if (!eof() && peek() == '/') {
      ++pos_;
      std::size_t den_pos = pos_;
      Int den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  void parse_factor(Exponent& expo) {
    if (eof() || peek() != 'x') throw ParseError("expected variable", pos_);
    ++pos_;
    std::size_t idx_pos = pos_;
    unsigned long k = parse_index("variable index");
    if (k < 1 || k > static_cast<unsigned long>(nvars_))
      throw ParseError("variable index " + std::to_string(k) + " out of range 1.." +
                           std::to_string(nvars_),
                       idx_pos);
    unsigned long e = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t e_pos = pos_;
      e = parse_index("exponent");
      if (e < 1) throw ParseError("exponent must be >= 1", e_pos);
    }
    expo[k - 1] += int(e);
  }

  void parse_signed_term(bool sign_required) {
    skip_ws();
    int sign = 1;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      sign = (peek() == '-') ? -1 : 1;
      ++pos_;
      skip_ws();
    } else if (sign_required) {
      throw ParseError("expected '+' or '-' between terms", pos_);
    }
    if (eof()) throw ParseError("expected term", pos_);

    std::size_t term_pos = pos_;
    Rat coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = parse_coef();
      have_coef = true;
    }
    Exponent expo(nvars_, 0);
    bool have_factor = false;
    skip_ws();
    if (!eof() && peek() == '*' && have_coef) {
      ++pos_;
      skip_ws();
      parse_factor(expo);
      have_factor = true;
    } else if (!eof() && peek() == 'x') {
      parse_factor(expo);
      have_factor = true;
    }
    if (!have_coef && !have_factor)
      throw ParseError("expected coefficient or variable", pos_);
    while (have_factor) {
      std::size_t save = pos_;
      skip_ws();
      if (eof() || peek() != '*') {
        pos_ = save;
        break;
      }
      ++pos_;
      skip_ws();
      parse_factor(expo);
    }
    add_term(expo, sign * coef, term_pos);
  }

  void add_term(const Exponent& expo, const Rat& coef, std::size_t term_pos) {
    int total = std::accumulate(expo.begin(), expo.end(), 0);
    if (first_degree_ < 0) {
      first_degree_ = total;
    } else if (total != first_degree_) {
      throw ParseError("non-homogeneous input: term of degree " + std::to_string(total) +
                           " conflicts with degree " + std::to_string(first_degree_),
                       term_pos);
    }
    auto [it, fresh] = acc_.emplace(expo, coef);
    if (!fresh) it->second += coef;
  }

  const std::string& text_;
  int nvars_;
  std::size_t pos_ = 0;
  int first_degree_ = -1;
  std::map<Exponent, Rat> acc_;
};

}  // namespace

Form Form::parse(const std::string& text, int nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
  return FormParser(text, nvars).run();
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // descending graded-lex: leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Rat mag = abs(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

Rat evaluate(const Form& f, const RatPoint& p) {
  if (int(p.size()) != f.nvars())
    throw std::invalid_argument("point has " + std::to_string(p.size()) +
                                " coordinates, form has " + std::to_string(f.nvars()) +
                                " variables");
  Rat sum = 0;
  for (const auto& [e, c] : f.terms()) {
    Rat term = c;
    for (int i = 0; i < f.nvars(); ++i)
      if (e[i] > 0) term *= rat_pow(p.coords[i], static_cast<unsigned long>(e[i]));
    sum += term;
  }
  return sum;
}

Form add(const Form& a, const Form& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("adding forms over different variables");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() != b.degree())
    throw std::invalid_argument("adding forms of degree " + std::to_string(a.degree()) +
                                " and " + std::to_string(b.degree()));
  Form out(a.nvars());
  std::map<Exponent, Rat> acc = a.terms_;
  for (const auto& [e, c] : b.terms_) {
    auto [it, fresh] = acc.emplace(e, c);
    if (!fresh) it->second += c;
  }
  for (const auto& [e, c] : acc) out.insert_term(e, c);
  return out;
}

Form multiply(const Form& a, const Form& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("multiplying forms over different variables");
  Form out(a.nvars());
  if (a.is_zero() || b.is_zero()) return out;
  std::map<Exponent, Rat> acc;
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      Rat prod = ca * cb;
      auto [it, fresh] = acc.emplace(e, prod);
      if (!fresh) it->second += prod;
    }
  }
  for (const auto& [ee, c] : acc) out.insert_term(ee, c);
  return out;
}

Form scale(const Form& f, const Rat& c) {
  Form out(f.nvars());
  if (c == 0) return out;
  for (const auto& [e, coef] : f.terms_) out.insert_term(e, c * coef);
  return out;
}

Form permute_vars(const Form& f, const Permutation& sigma) {
  if (int(sigma.size()) != f.nvars()) throw std::invalid_argument("permutation size != nvars");
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= int(sigma.size()) || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  Form out(f.nvars());
  Exponent moved(f.nvars());
  for (const auto& [e, c] : f.terms_) {
    for (int i = 0; i < f.nvars(); ++i) moved[sigma[i]] = e[i];
    out.insert_term(moved, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binary (two-variable) square-free machinery, through the dehomogenization
// p(t) = f(t, 1). Dense univariate polynomials, low-order coefficient first.

namespace {

using UPoly = std::vector<Rat>;  // empty = zero polynomial

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree_of(const UPoly& p) { return int(p.size()) - 1; }

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(long(i)) * p[i]);
  trim(d);
  return d;
}

UPoly make_monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

UPoly subtract(UPoly a, const UPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  UPoly q(a.size(), Rat(0));
  while (degree_of(a) >= degree_of(b) && !a.empty()) {
    int shift = degree_of(a) - degree_of(b);
    Rat factor = a.back() / b.back();
    q[shift] += factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::logic_error("inexact univariate division");
  return q;
}

UPoly gcd_monic(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

// f = x2^e * u with x2 not dividing u; returns p(t) = u(t,1) and e.
std::pair<UPoly, int> dehomogenize(const Form& f) {
  int e = f.degree();
  for (const auto& [expo, c] : f.terms()) e = std::min(e, expo[1]);
  UPoly p(std::size_t(f.degree() - e) + 1, Rat(0));
  for (const auto& [expo, c] : f.terms()) p[std::size_t(expo[0])] = c;
  trim(p);
  return {p, e};
}

Form homogenize2(const UPoly& q) {
  if (q.empty()) return Form::zero(2);
  Form out = Form::zero(2);
  int d = degree_of(q);
  for (int j = 0; j <= d; ++j)
    if (q[std::size_t(j)] != 0)
      out = out + Form::monomial({j, d - j}, q[std::size_t(j)]);
  return out;
}

// Yun's square-free decomposition: p = content * prod u_k^k, u_k monic.
// result[k-1] = u_k (possibly the constant 1).
std::vector<UPoly> yun(const UPoly& p, Rat* content) {
  UPoly a = make_monic(p);
  *content = p.back();
  std::vector<UPoly> parts;
  if (degree_of(a) == 0) return parts;
  UPoly da = derivative(a);
  UPoly g = gcd_monic(a, da);
  if (degree_of(g) == 0) {
    parts.push_back(a);
    return parts;
  }
  UPoly b = divexact(a, g);
  UPoly d = subtract(divexact(da, g), derivative(b));
  while (degree_of(b) > 0) {
    UPoly u = gcd_monic(b, d);
    UPoly b_next = divexact(b, u);
    d = subtract(divexact(d, u), derivative(b_next));
    parts.push_back(std::move(u));
    b = std::move(b_next);
  }
  return parts;
}

void require_binary_nonzero(const Form& f, const char* op) {
  if (f.nvars() != 2)
    throw std::invalid_argument(std::string(op) + " needs a binary form, got " +
                                std::to_string(f.nvars()) + " variables");
  if (f.is_zero()) throw std::invalid_argument(std::string(op) + " needs a nonzero form");
}

}  // namespace

Form squarefree_binary(const Form& f) {
  require_binary_nonzero(f, "squarefree_binary");
  auto [p, e] = dehomogenize(f);
  UPoly g = gcd_monic(p, derivative(p));
  UPoly radical = g.size() == 1 ? p : divexact(p, g);
  Form out = homogenize2(radical);
  if (e > 0) out = out * Form::monomial({0, 1}, 1);
  return out;
}

Form odd_multiplicity_part(const Form& f) {
  require_binary_nonzero(f, "odd_multiplicity_part");
  auto [p, e] = dehomogenize(f);
  Rat content;
  std::vector<UPoly> parts = yun(p, &content);
  Form out = Form::monomial(Exponent{0, 0}, content);
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (k % 2 == 0 && degree_of(parts[k]) > 0)  // multiplicity k+1 odd
      out = out * homogenize2(parts[k]);
  if (e % 2 == 1) out = out * Form::monomial({0, 1}, 1);
  return out;
}

}  // namespace sds
