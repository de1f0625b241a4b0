#pragma once
#include "cosetcat/based_algebra.hpp"
#include "cosetcat/matched_pair.hpp"

#include <map>
#include <optional>

namespace cosetcat {

// Basis label of D: delta_y (x) x with y, x ranging over all of X.
struct DBasis {
  Elem y, x;
  auto operator<=>(const DBasis&) const = default;
};

struct DElem {
  std::map<DBasis, Rat> terms;

  DElem& add(DBasis b, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const DElem& o) const { return terms == o.terms; }
};

DElem operator+(const DElem& x, const DElem& y);
DElem operator-(const DElem& x, const DElem& y);
DElem operator*(const Rat& c, const DElem& x);

// Full X-grade of a D-basis element, split through the factorization
// zeta = v * t (v in G, t in M):  ||xi|| = zeta,  |xi| = v^{-1},  <xi> = t.
struct XGrade {
  Elem full;  // zeta
  Elem gabs;  // |xi| = v^{-1}
  Elem mpart; // <xi> = t
};

// zeta rtri~ chi = v^{-1} chi v'  where zeta = v t and chi^{-1} zeta chi = v' t'.
// Defined by the coset structure alone.
Elem tilde_rtri(const CosetStructure& st, Elem zeta, Elem chi);

// Pluggable cocycle table tau~ : X x X -> G. The table must be total on
// X x X; values must lie in G and the unit rows must be e. Violations throw
// Error{AxiomViolation}; malformed files throw Error{InvalidInput}.
class TauTilde {
public:
  static TauTilde from_table(const CosetSystem& cs, std::map<std::pair<Elem, Elem>, Elem> table);
  static TauTilde trivial(const CosetSystem& cs); // all entries e
  // JSON: {"entries": [{"a": label, "b": label, "value": label}, ...]}
  static TauTilde load(const std::string& path, const CosetSystem& cs);
  static TauTilde parse(const Json& j, const CosetSystem& cs);

  Elem operator()(Elem a, Elem b) const;

private:
  TauTilde() = default;
  int n_ = 0;
  std::vector<Elem> table_; // row-major n x n
};

// The double algebra D on delta_y (x) x with the conjugation grading and the
// hat action. Products need a tau~ table; without one mul() throws
// Error{TauTildeMissing} (strict mode).
class DoubleD {
public:
  explicit DoubleD(CosetStructure st);
  DoubleD(CosetStructure st, TauTilde tt);

  const CosetStructure& structure() const { return st_; }
  const FiniteGroup& X() const { return st_.X(); }
  bool has_tau_tilde() const { return tt_.has_value(); }
  const TauTilde& tau_tilde() const;

  int dim() const { return dim_; }
  DBasis basis(int k) const;
  int index(DBasis b) const;

  // ||delta_y (x) x|| solves zeta * y = y conj x, i.e. zeta = (x^{-1} y x) y^{-1}.
  XGrade norm_grade(Elem y, Elem x) const;
  XGrade norm_grade_of(Elem zeta) const; // split an arbitrary full grade

  // zeta rtri~ chi = v^{-1} chi v'  where zeta = v t and chi^{-1} zeta chi = v' t'.
  Elem tilde_rtri(Elem zeta, Elem chi) const;

  DElem hat_act(const DElem& xi, Elem chi) const; // xi hat-act chi, chi in X
  DElem mul(const DElem& xi, const DElem& eta) const;
  DElem unit() const; // sum_y delta_y (x) e

  // tau~-free commutativity analysis of mu vs mu o Psi: the grade identity
  // and the delta-support comparison; with a table also the full product
  // comparison. The "delta supports" check is the counterexample carrier.
  Report commutativity_report() const;

  BasedAlgebra based() const; // needs tau~
  RatVec candidate_counit_vec() const; // eps(delta_y (x) x) = [y = e]
  std::string to_string(const DElem& xi) const;

private:
  CosetStructure st_;
  std::optional<TauTilde> tt_;
  int dim_ = 0;
  int n_ = 0;
  std::vector<XGrade> grade_; // per basis index

  void validate_table_mode();
};

// Closed-form reduction of the D6 delta-condition, one row per quadruple
// (n,m,p,q) in {0..5}^4 with xi = delta_{ba^n} (x) ba^m, eta = delta_{ba^p} (x) ba^q.
struct DeltaConditionRow {
  int n, m, p, q;
  Elem lhs, rhs;      // w z (<xi>|eta|)^{-1} x  vs  z (<xi>|eta|)^{-1} x w
  bool equal;
  bool mod_condition; // 2q - 4p + 2m = 0 (mod 6)
};

// Requires the d6 fixture; throws Error{InvalidInput} otherwise.
std::vector<DeltaConditionRow> d6_delta_rows(const DoubleD& D);
Report d6_delta_condition(const DoubleD& D);

} // namespace cosetcat
