#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "goursat/errors.hpp"
#include "goursat/numeric.hpp"

namespace goursat {

struct ExprRep;

// Exact symbolic scalar over named coordinates and parameters with the
// transcendental kernels exp, sin, cos, tan (eliminated on construction)
// and ln. Values are immutable and always held in canonical form: a
// fully expanded rational function in the coordinates and kernel symbols,
// with sin(u)^2 rewritten to 1 - cos(u)^2 and exp factors merged
// additively per direction. Two expressions of the supported fragment are
// equal iff their canonical forms are structurally identical.
class Expr {
 public:
  Expr();  // zero
  explicit Expr(long n);
  explicit Expr(const Rational& q);
  Expr(const Expr&);
  Expr(Expr&&) noexcept;
  Expr& operator=(const Expr&);
  Expr& operator=(Expr&&) noexcept;
  ~Expr();

  static Expr coordinate(const std::string& name);
  static Expr parameter(const std::string& name);

  bool is_zero() const;
  bool is_one() const;
  // The rational value if the expression is constant, nullopt otherwise.
  std::optional<Rational> as_constant() const;

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o);
  Expr& operator/=(const Expr& o);

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);

  // Structural equality of canonical forms.
  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

  // Exact partial derivative with respect to a coordinate (parameters and
  // unknown names differentiate to zero).
  Expr derivative(const std::string& coord) const;

  // Replace named symbols; kernel arguments are rewritten recursively.
  Expr substitute(const std::map<std::string, Expr>& repl) const;

  // Floating evaluation. Throws SingularPointError at kernel singularities
  // and when a denominator lands within 1e-12 of zero.
  double eval(const std::map<std::string, double>& point) const;

  // Exact rational evaluation; nullopt when the expression contains a
  // transcendental kernel. Throws SingularPointError on a vanishing
  // denominator.
  std::optional<Rational> eval_exact(const std::map<std::string, Rational>& point) const;

  bool depends_on(const std::string& name) const;
  std::set<std::string> symbols() const;

  std::string str() const;
  std::size_t hash() const;

 private:
  explicit Expr(std::shared_ptr<const ExprRep> rep);
  std::shared_ptr<const ExprRep> rep_;
  friend struct ExprOps;
};

Expr pow(const Expr& base, long n);
Expr exp(const Expr& u);
Expr sin(const Expr& u);
Expr cos(const Expr& u);
Expr tan(const Expr& u);  // rewritten to sin(u)/cos(u)
Expr ln(const Expr& u);

inline Expr operator+(const Expr& a, long b) { return a + Expr(b); }
inline Expr operator-(const Expr& a, long b) { return a - Expr(b); }
inline Expr operator*(const Expr& a, long b) { return a * Expr(b); }
inline Expr operator*(long a, const Expr& b) { return Expr(a) * b; }

}  // namespace goursat
