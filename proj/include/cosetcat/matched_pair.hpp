#pragma once
#include "cosetcat/group.hpp"
#include "cosetcat/report.hpp"

#include <optional>

namespace cosetcat {

// Derived matched-pair data on a coset system. All arguments and results are
// X-elements; membership (s,t in M / u,v in G) is checked.
//
//   s u = rtri(s,u) * ltri(s,u)     rtri(s,u) in G, ltri(s,u) in M
//   s t = tau(s,t)  * dot(s,t)      tau(s,t)  in G, dot(s,t)  in M
//   dot(linv(s), s) = e             linv total, unique (else error)
//   dot(s, rinv(s)) = e             rinv may be partial
class CosetStructure {
public:
  explicit CosetStructure(CosetSystem cs);

  const CosetSystem& system() const { return cs_; }
  const FiniteGroup& X() const { return cs_.X(); }

  Elem ltri(Elem s, Elem u) const; // s ◁ u in M
  Elem rtri(Elem s, Elem u) const; // s ▷ u in G
  Elem dot(Elem s, Elem t) const;  // s · t in M
  Elem tau(Elem s, Elem t) const;  // τ(s,t) in G
  Elem linv(Elem s) const;         // s^L
  bool rinv_total() const { return rinv_total_; }
  bool has_rinv(Elem s) const;
  // s^R; throws Error{AssumptionViolated} where no unique right inverse exists
  Elem rinv(Elem s) const;

private:
  CosetSystem cs_;
  // tables indexed by (m_pos, g_pos) or (m_pos, m_pos); values are X-elements
  std::vector<std::vector<Elem>> ltri_, rtri_, dot_, tau_;
  std::vector<Elem> linv_;
  std::vector<Elem> rinv_; // -1 where absent
  bool rinv_total_ = true;

  int mp(Elem s, const char* who) const;
  int gp(Elem u, const char* who) const;
};

// Exhaustive identity suite: defining factorizations, action/cocycle laws,
// the inverse-compatibility law, both mixed dot/tau identities, unit rows,
// and the left-inverse law.
Report verify_matched_pair(const CosetStructure& st);

// The extra assumptions some constructions need, with witnesses for each
// failure. Invariant: a witness list is nonempty iff its flag is false.
struct AssumptionReport {
  bool s_ll_identity = true; // linv(linv(s)) = s
  bool l_absorb = true;      // linv(s) ▷ (s ▷ u) = u
  bool rinv_total = true;
  std::vector<Json> s_ll_witnesses, l_absorb_witnesses, rinv_witnesses;

  Json to_json() const;
};

AssumptionReport check_assumptions(const CosetStructure& st);

} // namespace cosetcat
