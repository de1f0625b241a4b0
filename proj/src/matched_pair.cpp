#include "cosetcat/matched_pair.hpp"

namespace cosetcat {

CosetStructure::CosetStructure(CosetSystem cs) : cs_(std::move(cs)) {
  const FiniteGroup& X = cs_.X();
  const auto& M = cs_.M();
  const auto& G = cs_.G();
  size_t nm = M.size(), ng = G.size();
  ltri_.assign(nm, std::vector<Elem>(ng));
  rtri_.assign(nm, std::vector<Elem>(ng));
  for (size_t i = 0; i < nm; ++i)
    for (size_t j = 0; j < ng; ++j) {
      auto f = cs_.factor(X.mul(M[i], G[j]));
      rtri_[i][j] = f.u;
      ltri_[i][j] = f.s;
    }
  dot_.assign(nm, std::vector<Elem>(nm));
  tau_.assign(nm, std::vector<Elem>(nm));
  for (size_t i = 0; i < nm; ++i)
    for (size_t j = 0; j < nm; ++j) {
      auto f = cs_.factor(X.mul(M[i], M[j]));
      tau_[i][j] = f.u;
      dot_[i][j] = f.s;
    }
  // left inverses: the unique t with dot(t, s) = e
  linv_.assign(nm, -1);
  for (size_t j = 0; j < nm; ++j) {
    int count = 0;
    for (size_t i = 0; i < nm; ++i)
      if (dot_[i][j] == X.identity()) {
        linv_[j] = M[i];
        ++count;
      }
    if (count != 1)
      fail(ErrCode::MissingLeftInverse,
           "element " + X.label(M[j]) + " of M has " + std::to_string(count) +
               " left inverses (need exactly 1)");
  }
  // right inverses: t with dot(s, t) = e; rinv(s) is defined only where the
  // solution exists and is unique
  rinv_.assign(nm, -1);
  for (size_t i = 0; i < nm; ++i) {
    int count = 0;
    Elem last = -1;
    for (size_t j = 0; j < nm; ++j)
      if (dot_[i][j] == X.identity()) {
        last = M[j];
        ++count;
      }
    rinv_[i] = (count == 1) ? last : -1;
    if (count != 1) rinv_total_ = false;
  }
}

int CosetStructure::mp(Elem s, const char* who) const {
  int p = cs_.m_pos(s);
  if (p < 0)
    fail(ErrCode::InvalidInput,
         std::string(who) + ": " + cs_.X().label(s) + " is not in the transversal M");
  return p;
}

int CosetStructure::gp(Elem u, const char* who) const {
  int p = cs_.g_pos(u);
  if (p < 0)
    fail(ErrCode::InvalidInput,
         std::string(who) + ": " + cs_.X().label(u) + " is not in the subgroup G");
  return p;
}

Elem CosetStructure::ltri(Elem s, Elem u) const { return ltri_[mp(s, "ltri")][gp(u, "ltri")]; }
Elem CosetStructure::rtri(Elem s, Elem u) const { return rtri_[mp(s, "rtri")][gp(u, "rtri")]; }
Elem CosetStructure::dot(Elem s, Elem t) const { return dot_[mp(s, "dot")][mp(t, "dot")]; }
Elem CosetStructure::tau(Elem s, Elem t) const { return tau_[mp(s, "tau")][mp(t, "tau")]; }
Elem CosetStructure::linv(Elem s) const { return linv_[mp(s, "linv")]; }

bool CosetStructure::has_rinv(Elem s) const { return rinv_[mp(s, "rinv")] >= 0; }

Elem CosetStructure::rinv(Elem s) const {
  Elem r = rinv_[mp(s, "rinv")];
  if (r < 0)
    fail(ErrCode::AssumptionViolated,
         "element " + cs_.X().label(s) + " of M has no unique right inverse");
  return r;
}

Report verify_matched_pair(const CosetStructure& st) {
  const FiniteGroup& X = st.X();
  const auto& M = st.system().M();
  const auto& G = st.system().G();
  Elem e = X.identity();
  auto lab = [&](Elem x) { return X.label(x); };
  Report rep;

  {
    CheckBuilder c("su = (s rtri u)(s ltri u)");
    for (Elem s : M)
      for (Elem u : G)
        c.expect(X.mul(s, u) == X.mul(st.rtri(s, u), st.ltri(s, u)),
                 [&] { return Json{{"s", lab(s)}, {"u", lab(u)}}; });
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("st = tau(s,t)(s dot t)");
    for (Elem s : M)
      for (Elem t : M)
        c.expect(X.mul(s, t) == X.mul(st.tau(s, t), st.dot(s, t)),
                 [&] { return Json{{"s", lab(s)}, {"t", lab(t)}}; });
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("ltri is a right action: s ltri e = s, s ltri uv = (s ltri u) ltri v");
    for (Elem s : M) {
      c.expect(st.ltri(s, e) == s, [&] { return Json{{"s", lab(s)}}; });
      for (Elem u : G)
        for (Elem v : G)
          c.expect(st.ltri(s, X.mul(u, v)) == st.ltri(st.ltri(s, u), v),
                   [&] { return Json{{"s", lab(s)}, {"u", lab(u)}, {"v", lab(v)}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("rtri cocycle: s rtri e = e, s rtri uv = (s rtri u)((s ltri u) rtri v)");
    for (Elem s : M) {
      c.expect(st.rtri(s, e) == e, [&] { return Json{{"s", lab(s)}}; });
      for (Elem u : G)
        for (Elem v : G)
          c.expect(st.rtri(s, X.mul(u, v)) ==
                       X.mul(st.rtri(s, u), st.rtri(st.ltri(s, u), v)),
                   [&] { return Json{{"s", lab(s)}, {"u", lab(u)}, {"v", lab(v)}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("(s ltri u) rtri u^{-1} = (s rtri u)^{-1}");
    for (Elem s : M)
      for (Elem u : G)
        c.expect(st.rtri(st.ltri(s, u), X.inv(u)) == X.inv(st.rtri(s, u)),
                 [&] { return Json{{"s", lab(s)}, {"u", lab(u)}}; });
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("(s dot t) ltri u = (s ltri (t rtri u)) dot (t ltri u)");
    for (Elem s : M)
      for (Elem t : M)
        for (Elem u : G)
          c.expect(st.ltri(st.dot(s, t), u) ==
                       st.dot(st.ltri(s, st.rtri(t, u)), st.ltri(t, u)),
                   [&] { return Json{{"s", lab(s)}, {"t", lab(t)}, {"u", lab(u)}}; });
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c(
        "s rtri (t rtri u) = tau(s,t)((s dot t) rtri u) tau(s ltri (t rtri u), t ltri u)^{-1}");
    for (Elem s : M)
      for (Elem t : M)
        for (Elem u : G) {
          Elem lhs = st.rtri(s, st.rtri(t, u));
          Elem rhs = X.mul(X.mul(st.tau(s, t), st.rtri(st.dot(s, t), u)),
                           X.inv(st.tau(st.ltri(s, st.rtri(t, u)), st.ltri(t, u))));
          c.expect(lhs == rhs,
                   [&] { return Json{{"s", lab(s)}, {"t", lab(t)}, {"u", lab(u)}}; });
        }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("unit rows: e ltri u = e, e rtri u = u, dot/tau unit laws");
    for (Elem u : G) {
      c.expect(st.ltri(e, u) == e, [&] { return Json{{"u", lab(u)}}; });
      c.expect(st.rtri(e, u) == u, [&] { return Json{{"u", lab(u)}}; });
    }
    for (Elem t : M) {
      c.expect(st.dot(e, t) == t && st.dot(t, e) == t, [&] { return Json{{"t", lab(t)}}; });
      c.expect(st.tau(e, t) == e && st.tau(t, e) == e, [&] { return Json{{"t", lab(t)}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("left inverse: linv(s) dot s = e");
    for (Elem s : M)
      c.expect(st.dot(st.linv(s), s) == e, [&] { return Json{{"s", lab(s)}}; });
    rep.checks.push_back(c.done());
  }
  return rep;
}

Json AssumptionReport::to_json() const {
  Json j;
  j["s_ll_identity"] = s_ll_identity;
  j["s_ll_witnesses"] = s_ll_witnesses;
  j["l_absorb"] = l_absorb;
  j["l_absorb_witnesses"] = l_absorb_witnesses;
  j["rinv_total"] = rinv_total;
  j["rinv_witnesses"] = rinv_witnesses;
  return j;
}

AssumptionReport check_assumptions(const CosetStructure& st) {
  const FiniteGroup& X = st.X();
  const auto& M = st.system().M();
  const auto& G = st.system().G();
  AssumptionReport rep;
  constexpr int kMax = 5;
  for (Elem s : M)
    if (st.linv(st.linv(s)) != s) {
      rep.s_ll_identity = false;
      if (static_cast<int>(rep.s_ll_witnesses.size()) < kMax)
        rep.s_ll_witnesses.push_back(Json{{"s", X.label(s)}});
    }
  for (Elem s : M)
    for (Elem u : G)
      if (st.rtri(st.linv(s), st.rtri(s, u)) != u) {
        rep.l_absorb = false;
        if (static_cast<int>(rep.l_absorb_witnesses.size()) < kMax)
          rep.l_absorb_witnesses.push_back(Json{{"s", X.label(s)}, {"u", X.label(u)}});
      }
  rep.rinv_total = st.rinv_total();
  for (Elem s : M)
    if (!st.has_rinv(s)) {
      if (static_cast<int>(rep.rinv_witnesses.size()) < kMax)
        rep.rinv_witnesses.push_back(Json{{"s", X.label(s)}});
    }
  return rep;
}

} // namespace cosetcat
