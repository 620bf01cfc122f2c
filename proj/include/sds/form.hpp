#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sds/rational.hpp"

namespace sds {

/// Exponent vector of a monomial; entry i is the power of x(i+1).
using Exponent = std::vector<int>;

/// Permutation of {0..n-1} in image form: position i maps to sigma[i].
using Permutation = std::vector<int>;

struct RatPoint {
  std::vector<Rat> coords;

  RatPoint() = default;
  explicit RatPoint(std::vector<Rat> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  bool operator==(const RatPoint&) const = default;
};

/// Parses "p1/q1,p2/q2,..." into a point (whitespace around commas ok).
RatPoint parse_point(const std::string& text);
std::string to_string(const RatPoint& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos + 1) + ")"),
        pos_(pos) {}

  /// 0-based offset into the input text.
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// A homogeneous polynomial with exact rational coefficients, stored sparsely
/// in canonical graded-lex order. Immutable value type: every operation
/// returns a fresh Form. The zero form has degree 0 by convention.
class Form {
 public:
  /// The zero form in n variables.
  explicit Form(int nvars);

  static Form zero(int nvars) { return Form(nvars); }
  static Form monomial(const Exponent& e, const Rat& c);
  /// x1 + x2 + ... + xn.
  static Form sum_of_vars(int nvars);

  /// Parses the ASCII grammar: signed terms, term = [rational][*] factor
  /// (* factor)* or a bare rational, factor = xK[^e]. Throws ParseError on
  /// syntax errors, out-of-range variable indices, and non-homogeneous input.
  static Form parse(const std::string& text, int nvars);

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<Exponent, Rat>& terms() const noexcept { return terms_; }
  /// Coefficient of e, 0 when the monomial is absent.
  Rat coefficient(const Exponent& e) const;

  /// Canonical printing: graded-lex descending, explicit '*' and '^'.
  /// parse(str(), nvars()) round-trips exactly.
  std::string str() const;

  /// All coefficients >= 0 (vacuously true for the zero form).
  bool trivially_positive() const;
  /// Value at the all-ones point.
  Rat value_at_ones() const;

  bool operator==(const Form&) const = default;

 private:
  void insert_term(const Exponent& e, const Rat& c);

  int nvars_;
  int degree_;
  std::map<Exponent, Rat> terms_;

  friend Form add(const Form&, const Form&);
  friend Form multiply(const Form&, const Form&);
  friend Form scale(const Form&, const Rat&);
  friend Form permute_vars(const Form&, const Permutation&);
};

/// Exact value sum_a C_a prod_i p_i^{a_i}. Throws on dimension mismatch.
Rat evaluate(const Form& f, const RatPoint& p);

Form add(const Form& a, const Form& b);
Form multiply(const Form& a, const Form& b);
Form scale(const Form& f, const Rat& c);

inline Form operator+(const Form& a, const Form& b) { return add(a, b); }
inline Form operator*(const Form& a, const Form& b) { return multiply(a, b); }
inline Form operator*(const Rat& c, const Form& f) { return scale(f, c); }
inline Form operator-(const Form& f) { return scale(f, Rat(-1)); }
inline Form operator-(const Form& a, const Form& b) { return add(a, -b); }

/// Relabels variables: x_i -> x_{sigma(i)}. Equals substitution by the
/// permutation matrix of sigma.
Form permute_vars(const Form& f, const Permutation& sigma);

/// Square-free part of a nonzero binary form: the product of its distinct
/// irreducible factors (x2-power capped at 1), computed through the
/// dehomogenization p(t) = f(t,1) as p/gcd(p,p'). Same sign pattern on the
/// nonnegative quadrant up to vanishing on the dropped square factors.
Form squarefree_binary(const Form& f);

/// The odd-multiplicity part g of a nonzero binary form: f = s^2 * g exactly
/// for some binary form s, with g a product of distinct irreducible factors
/// carrying f's sign. f is nonnegative on the quadrant iff g is.
Form odd_multiplicity_part(const Form& f);

/// r^k with k >= 0.
Rat rat_pow(const Rat& r, unsigned long k);

}  // namespace sds
