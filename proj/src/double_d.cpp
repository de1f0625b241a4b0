#include "cosetcat/double_d.hpp"

#include <fstream>
#include <sstream>

namespace cosetcat {

DElem& DElem::add(DBasis b, const Rat& c) {
  if (c == 0) return *this;
  auto [it, fresh] = terms.emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

DElem operator+(const DElem& x, const DElem& y) {
  DElem r = x;
  for (const auto& [b, c] : y.terms) r.add(b, c);
  return r;
}

DElem operator-(const DElem& x, const DElem& y) {
  DElem r = x;
  for (const auto& [b, c] : y.terms) r.add(b, -c);
  return r;
}

DElem operator*(const Rat& c, const DElem& x) {
  DElem r;
  for (const auto& [b, v] : x.terms) r.add(b, c * v);
  return r;
}

TauTilde TauTilde::from_table(const CosetSystem& cs,
                              std::map<std::pair<Elem, Elem>, Elem> table) {
  const FiniteGroup& X = cs.X();
  int n = X.order();
  TauTilde t;
  t.n_ = n;
  t.table_.assign(static_cast<size_t>(n) * n, -1);
  for (const auto& [key, v] : table) {
    auto [a, b] = key;
    if (a < 0 || a >= n || b < 0 || b >= n || v < 0 || v >= n)
      fail(ErrCode::InvalidInput, "tau~ table entry out of range");
    t.table_[static_cast<size_t>(a) * n + b] = v;
  }
  Elem e = X.identity();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem v = t.table_[static_cast<size_t>(a) * n + b];
      if (v < 0)
        fail(ErrCode::InvalidInput, "tau~ table is not total: missing (" + X.label(a) + ", " +
                                        X.label(b) + ")");
      if (!cs.in_G(v))
        fail(ErrCode::AxiomViolation, "tau~(" + X.label(a) + ", " + X.label(b) + ") = " +
                                          X.label(v) + " is not in G");
      if ((a == e || b == e) && v != e)
        fail(ErrCode::AxiomViolation, "tau~ unit row violated at (" + X.label(a) + ", " +
                                          X.label(b) + ")");
    }
  return t;
}

TauTilde TauTilde::trivial(const CosetSystem& cs) {
  const FiniteGroup& X = cs.X();
  std::map<std::pair<Elem, Elem>, Elem> table;
  for (Elem a = 0; a < X.order(); ++a)
    for (Elem b = 0; b < X.order(); ++b) table[{a, b}] = X.identity();
  return from_table(cs, std::move(table));
}

TauTilde TauTilde::parse(const Json& j, const CosetSystem& cs) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    fail(ErrCode::InvalidInput, "tau~ file must be {\"entries\": [...]}");
  const FiniteGroup& X = cs.X();
  std::map<std::pair<Elem, Elem>, Elem> table;
  for (const auto& ent : j["entries"]) {
    if (!ent.is_object() || !ent.contains("a") || !ent.contains("b") || !ent.contains("value"))
      fail(ErrCode::InvalidInput, "tau~ entry needs \"a\", \"b\", \"value\"");
    Elem a = X.elem(ent["a"].get<std::string>());
    Elem b = X.elem(ent["b"].get<std::string>());
    Elem v = X.elem(ent["value"].get<std::string>());
    auto [it, fresh] = table.emplace(std::make_pair(a, b), v);
    if (!fresh && it->second != v)
      fail(ErrCode::InvalidInput, "tau~ entry (" + X.label(a) + ", " + X.label(b) +
                                      ") given twice with different values");
  }
  return from_table(cs, std::move(table));
}

TauTilde TauTilde::load(const std::string& path, const CosetSystem& cs) {
  std::ifstream in(path);
  if (!in) fail(ErrCode::InvalidInput, "cannot open tau~ file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    fail(ErrCode::InvalidInput, std::string("tau~ file is not valid JSON: ") + ex.what());
  }
  return parse(j, cs);
}

Elem TauTilde::operator()(Elem a, Elem b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    fail(ErrCode::InvalidInput, "tau~ argument out of range");
  return table_[static_cast<size_t>(a) * n_ + b];
}

DoubleD::DoubleD(CosetStructure st) : st_(std::move(st)) {
  n_ = X().order();
  dim_ = n_ * n_;
  grade_.reserve(dim_);
  for (Elem y = 0; y < n_; ++y)
    for (Elem x = 0; x < n_; ++x) {
      const FiniteGroup& Xg = X();
      Elem zeta = Xg.mul(Xg.conj(y, x), Xg.inv(y));
      auto f = st_.system().factor(zeta);
      grade_.push_back(XGrade{zeta, Xg.inv(f.u), f.s});
    }
}

DoubleD::DoubleD(CosetStructure st, TauTilde tt) : DoubleD(std::move(st)) {
  tt_ = std::move(tt);
  validate_table_mode();
}

const TauTilde& DoubleD::tau_tilde() const {
  if (!tt_) fail(ErrCode::TauTildeMissing, "no tau~ table installed");
  return *tt_;
}

DBasis DoubleD::basis(int k) const {
  if (k < 0 || k >= dim_) fail(ErrCode::InvalidInput, "D-basis index out of range");
  return DBasis{k / n_, k % n_};
}

int DoubleD::index(DBasis b) const {
  if (b.y < 0 || b.y >= n_ || b.x < 0 || b.x >= n_)
    fail(ErrCode::InvalidInput, "D-basis label out of range");
  return b.y * n_ + b.x;
}

XGrade DoubleD::norm_grade(Elem y, Elem x) const { return grade_[index(DBasis{y, x})]; }

XGrade DoubleD::norm_grade_of(Elem zeta) const {
  auto f = st_.system().factor(zeta);
  return XGrade{zeta, X().inv(f.u), f.s};
}

Elem tilde_rtri(const CosetStructure& st, Elem zeta, Elem chi) {
  const FiniteGroup& Xg = st.X();
  Elem v = st.system().factor(zeta).u;
  Elem vprime = st.system().factor(Xg.conj(zeta, chi)).u;
  return Xg.mul(Xg.mul(Xg.inv(v), chi), vprime);
}

Elem DoubleD::tilde_rtri(Elem zeta, Elem chi) const {
  return cosetcat::tilde_rtri(st_, zeta, chi);
}

DElem DoubleD::hat_act(const DElem& xi, Elem chi) const {
  const FiniteGroup& Xg = X();
  DElem r;
  for (const auto& [b, c] : xi.terms) {
    Elem g = grade_[index(b)].full;
    Elem t = tilde_rtri(g, chi);
    r.add(DBasis{Xg.conj(b.y, t), Xg.mul(Xg.inv(t), Xg.mul(b.x, chi))}, c);
  }
  return r;
}

DElem DoubleD::mul(const DElem& xi, const DElem& eta) const {
  const TauTilde& tt = tau_tilde();
  const FiniteGroup& Xg = X();
  DElem r;
  for (const auto& [h1, c1] : xi.terms) {
    Elem a = grade_[index(h1)].full;
    Elem wy = Xg.conj(h1.y, h1.x);
    for (const auto& [h2, c2] : eta.terms) {
      if (h2.y != wy) continue;
      Elem b = grade_[index(h2)].full;
      Elem t = tt(a, b);
      r.add(DBasis{Xg.conj(h1.y, t), Xg.mul(Xg.inv(t), Xg.mul(h1.x, h2.x))}, c1 * c2);
    }
  }
  return r;
}

DElem DoubleD::unit() const {
  DElem r;
  for (Elem y = 0; y < n_; ++y) r.add(DBasis{y, X().identity()}, 1);
  return r;
}

void DoubleD::validate_table_mode() {
  // unit must be a genuine two-sided unit for the installed table
  DElem one = unit();
  for (int k = 0; k < dim_; ++k) {
    DElem b;
    b.add(basis(k), 1);
    if (!(mul(one, b) == b) || !(mul(b, one) == b))
      fail(ErrCode::AxiomViolation,
           "sum_y delta_y (x) e is not a two-sided unit for the installed tau~ table at " +
               to_string(b));
  }
}

Report DoubleD::commutativity_report() const {
  const FiniteGroup& Xg = X();
  Report rep;
  {
    CheckBuilder c("grade identity: (a rtri~ |eta|)(<xi> ltri |eta|) = <xi> |eta|");
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        const XGrade& ga = grade_[i];
        const XGrade& gb = grade_[j];
        Elem lhs = Xg.mul(tilde_rtri(ga.full, gb.gabs), st_.ltri(ga.mpart, gb.gabs));
        Elem rhs = Xg.mul(ga.mpart, gb.gabs);
        c.expect(lhs == rhs, [&] {
          DBasis bi = basis(i), bj = basis(j);
          return Json{{"xi", "d[" + Xg.label(bi.y) + "](x)" + Xg.label(bi.x)},
                      {"eta", "d[" + Xg.label(bj.y) + "](x)" + Xg.label(bj.x)}};
        });
      }
    rep.checks.push_back(c.done());
  }
  {
    // mu and mu o Psi have the same delta-support at (xi, eta) iff the two
    // membership conditions agree; this needs no tau~ table.
    CheckBuilder c("delta supports of mu and mu o Psi agree");
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        DBasis bi = basis(i), bj = basis(j);
        const XGrade& ga = grade_[i];
        const XGrade& gb = grade_[j];
        bool cond_l = bj.y == Xg.conj(bi.y, bi.x);
        Elem lhs = Xg.conj(bi.y, tilde_rtri(ga.full, gb.gabs));
        Elem rhs = Xg.conj(bj.y, Xg.mul(bj.x, Xg.inv(st_.ltri(ga.mpart, gb.gabs))));
        bool cond_r = lhs == rhs;
        c.expect(cond_l == cond_r, [&] {
          return Json{{"xi", "d[" + Xg.label(bi.y) + "](x)" + Xg.label(bi.x)},
                      {"eta", "d[" + Xg.label(bj.y) + "](x)" + Xg.label(bj.x)},
                      {"mu_support", cond_l},
                      {"mu_psi_support", cond_r}};
        });
      }
    rep.checks.push_back(c.done());
  }
  if (tt_) {
    CheckBuilder c("full product: mu(xi, eta) = mu(Psi(xi (x) eta))");
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        DBasis bi = basis(i), bj = basis(j);
        DElem xi, eta;
        xi.add(bi, 1);
        eta.add(bj, 1);
        const XGrade& ga = grade_[i];
        const XGrade& gb = grade_[j];
        // Psi(xi (x) eta) = eta hat (<xi> ltri |eta|)^{-1} (x) xi hat |eta|
        DElem left = hat_act(eta, Xg.inv(st_.ltri(ga.mpart, gb.gabs)));
        DElem right = hat_act(xi, gb.gabs);
        DElem lhs = mul(xi, eta);
        DElem rhs = mul(left, right);
        c.expect(lhs == rhs, [&] {
          return Json{{"xi", to_string(xi)}, {"eta", to_string(eta)}};
        });
      }
    rep.checks.push_back(c.done());
  }
  return rep;
}

BasedAlgebra DoubleD::based() const {
  (void)tau_tilde(); // strict mode cannot build structure constants
  BasedAlgebra alg;
  alg.name = "D(" + X().name() + ")";
  alg.dim = dim_;
  for (int k = 0; k < dim_; ++k) {
    DBasis b = basis(k);
    alg.labels.push_back("d[" + X().label(b.y) + "]⊗" + X().label(b.x));
  }
  alg.mu.assign(dim_, std::vector<std::vector<std::pair<int, Rat>>>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      DElem x, y;
      x.add(basis(i), 1);
      y.add(basis(j), 1);
      for (const auto& [b, c] : mul(x, y).terms) alg.mu[i][j].push_back({index(b), c});
    }
  for (Elem y = 0; y < n_; ++y)
    alg.unit.push_back({index(DBasis{y, X().identity()}), Rat(1)});
  return alg;
}

RatVec DoubleD::candidate_counit_vec() const {
  RatVec v(dim_, Rat(0));
  for (Elem x = 0; x < n_; ++x) v[index(DBasis{X().identity(), x})] = 1;
  return v;
}

std::string DoubleD::to_string(const DElem& xi) const {
  if (xi.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : xi.terms) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << " * d[" << X().label(b.y) << "]⊗" << X().label(b.x);
  }
  return os.str();
}

std::vector<DeltaConditionRow> d6_delta_rows(const DoubleD& D) {
  const FiniteGroup& Xg = D.X();
  if (Xg.order() != 12)
    fail(ErrCode::InvalidInput, "d6_delta_rows needs the d6 fixture");
  std::vector<Elem> ba(6);
  for (int k = 0; k < 6; ++k)
    ba[k] = Xg.elem(k == 0 ? "b" : (k == 1 ? "ba" : "ba" + std::to_string(k)));
  std::vector<DeltaConditionRow> rows;
  rows.reserve(1296);
  for (int n = 0; n < 6; ++n)
    for (int m = 0; m < 6; ++m)
      for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) {
          XGrade ga = D.norm_grade(ba[n], ba[m]);
          XGrade gb = D.norm_grade(ba[p], ba[q]);
          Elem core = Xg.inv(Xg.mul(ga.mpart, gb.gabs)); // (<xi>|eta|)^{-1}
          Elem lhs = Xg.mul(Xg.mul(ba[p], ba[q]), Xg.mul(core, ba[m]));
          Elem rhs = Xg.mul(ba[q], Xg.mul(core, Xg.mul(ba[m], ba[p])));
          DeltaConditionRow row;
          row.n = n;
          row.m = m;
          row.p = p;
          row.q = q;
          row.lhs = lhs;
          row.rhs = rhs;
          row.equal = lhs == rhs;
          row.mod_condition = ((2 * q - 4 * p + 2 * m) % 6 + 6) % 6 == 0;
          rows.push_back(row);
        }
  return rows;
}

Report d6_delta_condition(const DoubleD& D) {
  const FiniteGroup& Xg = D.X();
  auto rows = d6_delta_rows(D);
  auto bak = [&](int k) {
    k = (k % 6 + 6) % 6;
    return Xg.elem(k == 0 ? "b" : (k == 1 ? "ba" : "ba" + std::to_string(k)));
  };
  Report rep;
  {
    CheckBuilder c("closed forms: lhs = ba^{q-p+m}, rhs = ba^{3p-q-m}");
    for (const auto& r : rows)
      c.expect(r.lhs == bak(r.q - r.p + r.m) && r.rhs == bak(3 * r.p - r.q - r.m), [&] {
        return Json{{"n", r.n}, {"m", r.m}, {"p", r.p}, {"q", r.q}};
      });
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("equality iff 2q - 4p + 2m = 0 (mod 6)");
    for (const auto& r : rows)
      c.expect(r.equal == r.mod_condition, [&] {
        return Json{{"n", r.n}, {"m", r.m}, {"p", r.p}, {"q", r.q}};
      });
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("the condition fails somewhere (noncommutativity witness exists)");
    bool found = false;
    Json witness;
    for (const auto& r : rows)
      if (!r.equal) {
        found = true;
        witness = Json{{"n", r.n}, {"m", r.m}, {"p", r.p}, {"q", r.q},
                       {"lhs", Xg.label(r.lhs)}, {"rhs", Xg.label(r.rhs)}};
        break;
      }
    c.expect(found, [] { return Json{{"note", "no failing quadruple found"}}; });
    if (found) {
      CheckResult res = c.done();
      res.witnesses.push_back(witness); // informational: the first witness
      rep.checks.push_back(std::move(res));
    } else {
      rep.checks.push_back(c.done());
    }
  }
  return rep;
}

} // namespace cosetcat
