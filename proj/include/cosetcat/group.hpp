#pragma once
#include "cosetcat/error.hpp"
#include "cosetcat/report.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace cosetcat {

// Index of an element in its FiniteGroup's element list.
using Elem = int;

// Wire format for groups:
//   {"name": str, "elements": [labels], "table": [[int]],
//    "subgroup": [labels], "transversal": [labels]}
// table[i][j] is the index of elements[i] * elements[j].
struct GroupSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  std::vector<std::string> subgroup;    // may be empty
  std::vector<std::string> transversal; // may be empty

  static GroupSpec parse(const Json& j);
  static GroupSpec load(const std::string& path);
  Json to_json() const;
};

// Finite group given by its multiplication table. The table is fully
// validated at construction (closure, identity, inverses, associativity);
// violations throw Error{NotAGroup} with a witness, duplicate labels throw
// Error{DuplicateLabel}.
class FiniteGroup {
public:
  FiniteGroup(std::string name, std::vector<std::string> labels,
              std::vector<std::vector<int>> table);

  static std::shared_ptr<const FiniteGroup> from_spec(const GroupSpec& spec);

  int order() const { return n_; }
  Elem identity() const { return e_; }
  Elem mul(Elem x, Elem y) const { return table_[static_cast<size_t>(x) * n_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  // y ◁~ x = x^{-1} y x  (right conjugation action of X on itself)
  Elem conj(Elem y, Elem x) const { return mul(mul(inv(x), y), x); }

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws Error{InvalidInput} for unknown labels.
  Elem elem(const std::string& label) const;
  const std::string& name() const { return name_; }

private:
  std::string name_;
  int n_ = 0;
  Elem e_ = -1;
  std::vector<std::string> labels_;
  std::vector<int> table_; // row-major n x n
  std::vector<Elem> inv_;
  std::unordered_map<std::string, Elem> by_label_;

  void validate();
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subgroup G <= X together with a transversal M such that every x in X
// factors uniquely as x = u * s with u in G, s in M. Construction validates
// the subgroup (Error{NotAGroup}) and unique factorization
// (Error{NotATransversal}); e must lie in M.
class CosetSystem {
public:
  CosetSystem(GroupPtr X, std::vector<Elem> subgroup, std::vector<Elem> transversal);

  static CosetSystem from_spec(const GroupSpec& spec);

  const FiniteGroup& X() const { return *X_; }
  GroupPtr group_ptr() const { return X_; }
  const std::vector<Elem>& G() const { return g_; }
  const std::vector<Elem>& M() const { return m_; }
  bool in_G(Elem x) const { return g_pos_[x] >= 0; }
  bool in_M(Elem x) const { return m_pos_[x] >= 0; }
  int g_pos(Elem x) const { return g_pos_[x]; }
  int m_pos(Elem x) const { return m_pos_[x]; }

  struct Factor {
    Elem u; // G-part
    Elem s; // M-part
  };
  // The unique (u, s) with x = u * s.
  Factor factor(Elem x) const { return {fac_u_[x], fac_s_[x]}; }

private:
  GroupPtr X_;
  std::vector<Elem> g_, m_;
  std::vector<int> g_pos_, m_pos_; // X-index -> position, -1 if absent
  std::vector<Elem> fac_u_, fac_s_;
};

} // namespace cosetcat
