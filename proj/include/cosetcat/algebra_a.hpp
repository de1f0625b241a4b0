#pragma once
#include "cosetcat/based_algebra.hpp"
#include "cosetcat/matched_pair.hpp"

#include <map>

namespace cosetcat {

// Basis label of A: delta_s (x) u with s in M, u in G (X-element indices).
struct ABasis {
  Elem s, u;
  auto operator<=>(const ABasis&) const = default;
};

// Finite Rat-linear combination of A-basis elements. Plain data; all
// operations live on AlgebraA.
struct AElem {
  std::map<ABasis, Rat> terms;

  AElem& add(ABasis b, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const AElem& o) const { return terms == o.terms; }
};

AElem operator+(const AElem& x, const AElem& y);
AElem operator-(const AElem& x, const AElem& y);
AElem operator*(const Rat& c, const AElem& x);

// The algebra A built on delta_s (x) u with
//   (delta_s (x) u)(delta_t (x) v) =
//       [t = s ltri u] * delta_{s ltri tau(a,b)} (x) tau(a,b)^{-1} u v
// where a, b are the grades of the factors. The grade of delta_s (x) u is the
// unique a in M with dot(s, a) = s ltri u; non-uniqueness throws
// Error{AmbiguousGrade} at construction.
class AlgebraA {
public:
  explicit AlgebraA(CosetStructure st);

  const CosetStructure& structure() const { return st_; }
  const FiniteGroup& X() const { return st_.X(); }
  int dim() const { return dim_; }
  ABasis basis(int k) const;
  int index(ABasis b) const;

  Elem grade(ABasis b) const;
  Elem grade_of(const AElem& x) const; // grade of a homogeneous element; error otherwise

  AElem mul(const AElem& x, const AElem& y) const;
  Rat counit(const AElem& x) const;           // eps(delta_t (x) v) = [t = e]
  AElem act(const AElem& x, Elem v) const;    // x ltri-bar v, v in G
  AElem act_module(const AElem& xi, const AElem& alpha) const; // xi ltri-bar alpha

  AElem rho() const;            // sum_u delta_e (x) u
  AElem rho_normalized() const; // rho / |G|
  // Two-sided integral check h*L = eps(h)L = L*h over every basis h;
  // optionally also eps(L) = 1. Throws Error{InvalidInput} for L = 0.
  Report verify_integral(const AElem& lambda, bool require_normalized = false) const;

  AElem map_m(const AElem& x) const; // M(delta_s (x) u) = delta_{s^L} (x) s rtri u
  AElem map_p(const AElem& x) const; // P(delta_s (x) u), see map_p term rule
  // P checks: grade law, twisted involution, module compatibility with map_m.
  Report verify_p() const;

  std::string to_string(const AElem& x) const; // "q * d[s](x)u + ..."

  BasedAlgebra based() const;
  RatVec counit_vec() const;
  RatVec to_vec(const AElem& x) const;
  AElem from_vec(const RatVec& v) const;

private:
  CosetStructure st_;
  int dim_ = 0;
  std::vector<ABasis> basis_;          // index -> basis label
  std::map<ABasis, int> index_;        // basis label -> index
  std::map<ABasis, Elem> grade_;

  void check_key(ABasis b, const char* who) const;
};

} // namespace cosetcat
