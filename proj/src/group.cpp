#include "cosetcat/group.hpp"

#include <fstream>
#include <sstream>

namespace cosetcat {

GroupSpec GroupSpec::parse(const Json& j) {
  GroupSpec s;
  if (!j.is_object()) fail(ErrCode::InvalidInput, "group spec must be a JSON object");
  if (!j.contains("elements") || !j["elements"].is_array())
    fail(ErrCode::InvalidInput, "group spec needs an \"elements\" array");
  if (!j.contains("table") || !j["table"].is_array())
    fail(ErrCode::InvalidInput, "group spec needs a \"table\" array");
  s.name = j.value("name", std::string("group"));
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail(ErrCode::InvalidInput, "element labels must be strings");
    s.elements.push_back(e.get<std::string>());
  }
  for (const auto& row : j["table"]) {
    if (!row.is_array()) fail(ErrCode::InvalidInput, "table rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(ErrCode::InvalidInput, "table entries must be integers");
      r.push_back(v.get<int>());
    }
    s.table.push_back(std::move(r));
  }
  if (j.contains("subgroup"))
    for (const auto& e : j["subgroup"]) s.subgroup.push_back(e.get<std::string>());
  if (j.contains("transversal"))
    for (const auto& e : j["transversal"]) s.transversal.push_back(e.get<std::string>());
  return s;
}

GroupSpec GroupSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrCode::InvalidInput, "cannot open group spec file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    fail(ErrCode::InvalidInput, std::string("group spec is not valid JSON: ") + ex.what());
  }
  return parse(j);
}

Json GroupSpec::to_json() const {
  Json j;
  j["name"] = name;
  j["elements"] = elements;
  j["table"] = table;
  if (!subgroup.empty()) j["subgroup"] = subgroup;
  if (!transversal.empty()) j["transversal"] = transversal;
  return j;
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels,
                         std::vector<std::vector<int>> table)
    : name_(std::move(name)), labels_(std::move(labels)) {
  n_ = static_cast<int>(labels_.size());
  if (n_ == 0) fail(ErrCode::NotAGroup, "empty element list");
  for (int i = 0; i < n_; ++i) {
    auto [it, fresh] = by_label_.emplace(labels_[i], i);
    if (!fresh) fail(ErrCode::DuplicateLabel, "duplicate element label: " + labels_[i]);
  }
  if (static_cast<int>(table.size()) != n_)
    fail(ErrCode::InvalidInput, "table must have one row per element");
  table_.resize(static_cast<size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(table[i].size()) != n_)
      fail(ErrCode::InvalidInput, "table row has wrong length: " + labels_[i]);
    for (int j = 0; j < n_; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n_)
        fail(ErrCode::InvalidInput, "table entry out of range at (" + labels_[i] + ", " +
                                        labels_[j] + ")");
      table_[static_cast<size_t>(i) * n_ + j] = v;
    }
  }
  validate();
}

void FiniteGroup::validate() {
  // identity
  e_ = -1;
  for (int c = 0; c < n_; ++c) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x)
      ok = mul(c, x) == x && mul(x, c) == x;
    if (ok) { e_ = c; break; }
  }
  if (e_ < 0) fail(ErrCode::NotAGroup, "no two-sided identity element");
  // inverses
  inv_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) == e_ && mul(y, x) == e_) { inv_[x] = y; break; }
    if (inv_[x] < 0)
      fail(ErrCode::NotAGroup, "no two-sided inverse for " + labels_[x]);
  }
  // associativity
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < n_; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
          fail(ErrCode::NotAGroup, "associativity fails at (" + labels_[x] + ", " + labels_[y] +
                                       ", " + labels_[z] + ")");
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_spec(const GroupSpec& spec) {
  return std::make_shared<const FiniteGroup>(spec.name, spec.elements, spec.table);
}

Elem FiniteGroup::elem(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end())
    fail(ErrCode::InvalidInput, "unknown element label: " + label + " in group " + name_);
  return it->second;
}

CosetSystem::CosetSystem(GroupPtr X, std::vector<Elem> subgroup, std::vector<Elem> transversal)
    : X_(std::move(X)), g_(std::move(subgroup)), m_(std::move(transversal)) {
  const FiniteGroup& G = *X_;
  int n = G.order();
  g_pos_.assign(n, -1);
  m_pos_.assign(n, -1);
  for (size_t i = 0; i < g_.size(); ++i) {
    Elem x = g_[i];
    if (x < 0 || x >= n) fail(ErrCode::InvalidInput, "subgroup element out of range");
    if (g_pos_[x] >= 0) fail(ErrCode::InvalidInput, "duplicate subgroup element " + G.label(x));
    g_pos_[x] = static_cast<int>(i);
  }
  for (size_t i = 0; i < m_.size(); ++i) {
    Elem x = m_[i];
    if (x < 0 || x >= n) fail(ErrCode::InvalidInput, "transversal element out of range");
    if (m_pos_[x] >= 0)
      fail(ErrCode::InvalidInput, "duplicate transversal element " + G.label(x));
    m_pos_[x] = static_cast<int>(i);
  }
  // subgroup axioms
  if (g_.empty() || g_pos_[G.identity()] < 0)
    fail(ErrCode::NotAGroup, "subgroup must contain the identity");
  for (Elem u : g_) {
    if (g_pos_[G.inv(u)] < 0)
      fail(ErrCode::NotAGroup, "subgroup not closed under inverse at " + G.label(u));
    for (Elem v : g_)
      if (g_pos_[G.mul(u, v)] < 0)
        fail(ErrCode::NotAGroup,
             "subgroup not closed under product at (" + G.label(u) + ", " + G.label(v) + ")");
  }
  if (m_pos_[G.identity()] < 0)
    fail(ErrCode::NotATransversal, "transversal must contain the identity");
  // unique factorization x = u * s
  fac_u_.assign(n, -1);
  fac_s_.assign(n, -1);
  for (Elem u : g_)
    for (Elem s : m_) {
      Elem x = G.mul(u, s);
      if (fac_u_[x] >= 0)
        fail(ErrCode::NotATransversal,
             "element " + G.label(x) + " factors twice: (" + G.label(fac_u_[x]) + ")(" +
                 G.label(fac_s_[x]) + ") and (" + G.label(u) + ")(" + G.label(s) + ")");
      fac_u_[x] = u;
      fac_s_[x] = s;
    }
  for (int x = 0; x < n; ++x)
    if (fac_u_[x] < 0)
      fail(ErrCode::NotATransversal, "element " + G.label(x) + " has no factorization u*s");
}

CosetSystem CosetSystem::from_spec(const GroupSpec& spec) {
  auto X = FiniteGroup::from_spec(spec);
  if (spec.subgroup.empty())
    fail(ErrCode::InvalidInput, "group spec has no subgroup list");
  if (spec.transversal.empty())
    fail(ErrCode::InvalidInput, "group spec has no transversal list");
  std::vector<Elem> g, m;
  for (const auto& l : spec.subgroup) g.push_back(X->elem(l));
  for (const auto& l : spec.transversal) m.push_back(X->elem(l));
  return CosetSystem(X, std::move(g), std::move(m));
}

} // namespace cosetcat
