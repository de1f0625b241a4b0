#include "cosetcat/category.hpp"

#include <map>

namespace cosetcat {

namespace {

constexpr int kMaxClassWitnesses = 4;

void check_same_space(const FiniteGroup& a, const FiniteGroup& b, const char* who) {
  if (&a != &b) fail(ErrCode::InvalidInput, std::string(who) + ": objects live over different groups");
}

RatVec dense_col(const RatMat& m, int j) {
  RatVec v(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
  return v;
}

// apply a column-sparse op to a dense vector
RatVec sparse_apply(const SparseOp& op, const RatVec& v, int rows) {
  RatVec r(rows, Rat(0));
  for (size_t j = 0; j < op.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, c] : op[j]) r[i] += c * v[j];
  }
  return r;
}

} // namespace

SparseVec sparse_normalize(const SparseVec& v) {
  std::map<int, Rat> acc;
  for (const auto& [i, c] : v) {
    if (c == 0) continue;
    acc[i] += c;
  }
  SparseVec r;
  for (const auto& [i, c] : acc)
    if (c != 0) r.push_back({i, c});
  return r;
}

SparseOp sparse_identity(int n) {
  SparseOp op(n);
  for (int j = 0; j < n; ++j) op[j] = {{j, Rat(1)}};
  return op;
}

SparseOp sparse_from_dense(const RatMat& m) {
  SparseOp op(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i)
      if (m.at(i, j) != 0) op[j].push_back({i, m.at(i, j)});
  return op;
}

RatMat sparse_to_dense(const SparseOp& op, int rows) {
  RatMat m(rows, static_cast<int>(op.size()));
  for (size_t j = 0; j < op.size(); ++j)
    for (const auto& [i, c] : op[j]) m.at(i, static_cast<int>(j)) += c;
  return m;
}

SparseOp sparse_compose(const SparseOp& a, const SparseOp& b) {
  SparseOp r(b.size());
  for (size_t j = 0; j < b.size(); ++j) {
    SparseVec acc;
    for (const auto& [k, c] : b[j]) {
      if (static_cast<size_t>(k) >= a.size())
        fail(ErrCode::DimensionMismatch, "sparse_compose: index out of range");
      for (const auto& [i, d] : a[k]) acc.push_back({i, c * d});
    }
    r[j] = sparse_normalize(acc);
  }
  return r;
}

bool sparse_equal(const SparseOp& a, const SparseOp& b) {
  if (a.size() != b.size()) return false;
  for (size_t j = 0; j < a.size(); ++j)
    if (sparse_normalize(a[j]) != sparse_normalize(b[j])) return false;
  return true;
}

CObject::CObject(CosetStructure st, std::string name, std::vector<Elem> grades,
                 std::vector<SparseOp> act_by_gpos)
    : st_(std::move(st)), name_(std::move(name)), dim_(static_cast<int>(grades.size())),
      grades_(std::move(grades)), act_(std::move(act_by_gpos)) {
  for (auto& op : act_)
    for (auto& col : op) col = sparse_normalize(col);
  validate();
}

Elem CObject::grade(int i) const {
  if (i < 0 || i >= dim_) fail(ErrCode::InvalidInput, "basis index out of range in " + name_);
  return grades_[i];
}

const SparseOp& CObject::act(Elem u) const {
  int p = st_.system().g_pos(u);
  if (p < 0)
    fail(ErrCode::InvalidInput, "act element " + st_.X().label(u) + " is not in G (" + name_ + ")");
  return act_[p];
}

void CObject::validate() const {
  const CosetSystem& cs = st_.system();
  const FiniteGroup& X = st_.X();
  const auto& G = cs.G();
  if (act_.size() != G.size())
    fail(ErrCode::DimensionMismatch, name_ + ": need one action matrix per element of G");
  for (Elem s : grades_)
    if (!cs.in_M(s)) fail(ErrCode::AxiomViolation, name_ + ": grade outside M");
  for (size_t p = 0; p < G.size(); ++p) {
    const SparseOp& op = act_[p];
    if (static_cast<int>(op.size()) != dim_)
      fail(ErrCode::DimensionMismatch, name_ + ": action matrix has wrong column count");
    for (int j = 0; j < dim_; ++j)
      for (const auto& [i, c] : op[j]) {
        if (i < 0 || i >= dim_)
          fail(ErrCode::DimensionMismatch, name_ + ": action entry out of range");
        (void)c;
        if (grades_[i] != st_.ltri(grades_[j], G[p]))
          fail(ErrCode::AxiomViolation, name_ + ": grade compatibility fails at column " +
                                            std::to_string(j) + " under " + X.label(G[p]));
      }
  }
  if (!sparse_equal(act(X.identity()), sparse_identity(dim_)))
    fail(ErrCode::AxiomViolation, name_ + ": act(e) is not the identity");
  for (Elem u : G)
    for (Elem v : G)
      if (!sparse_equal(act(X.mul(u, v)), sparse_compose(act(v), act(u))))
        fail(ErrCode::AxiomViolation, name_ + ": act(" + X.label(u) + " " + X.label(v) +
                                          ") != act(" + X.label(v) + ") act(" + X.label(u) + ")");
}

DObject::DObject(CosetStructure st, std::string name, std::vector<Elem> grades,
                 std::vector<SparseOp> act_by_elem)
    : st_(std::move(st)), name_(std::move(name)), dim_(static_cast<int>(grades.size())),
      grades_(std::move(grades)), act_(std::move(act_by_elem)) {
  for (auto& op : act_)
    for (auto& col : op) col = sparse_normalize(col);
  mpart_.resize(dim_);
  gabs_.resize(dim_);
  const FiniteGroup& X = st_.X();
  for (int i = 0; i < dim_; ++i) {
    auto f = st_.system().factor(grades_[i]);
    mpart_[i] = f.s;
    gabs_[i] = X.inv(f.u);
  }
  validate();
}

Elem DObject::grade(int i) const {
  if (i < 0 || i >= dim_) fail(ErrCode::InvalidInput, "basis index out of range in " + name_);
  return grades_[i];
}

Elem DObject::grade_mpart(int i) const {
  (void)grade(i);
  return mpart_[i];
}

Elem DObject::grade_gabs(int i) const {
  (void)grade(i);
  return gabs_[i];
}

const SparseOp& DObject::act(Elem chi) const {
  if (chi < 0 || chi >= st_.X().order())
    fail(ErrCode::InvalidInput, "act element out of range (" + name_ + ")");
  return act_[chi];
}

void DObject::validate() const {
  const FiniteGroup& X = st_.X();
  if (static_cast<int>(act_.size()) != X.order())
    fail(ErrCode::DimensionMismatch, name_ + ": need one action matrix per element of X");
  for (Elem chi = 0; chi < X.order(); ++chi) {
    const SparseOp& op = act_[chi];
    if (static_cast<int>(op.size()) != dim_)
      fail(ErrCode::DimensionMismatch, name_ + ": action matrix has wrong column count");
    for (int j = 0; j < dim_; ++j)
      for (const auto& [i, c] : op[j]) {
        if (i < 0 || i >= dim_)
          fail(ErrCode::DimensionMismatch, name_ + ": action entry out of range");
        (void)c;
        if (grades_[i] != X.conj(grades_[j], chi))
          fail(ErrCode::AxiomViolation, name_ + ": grade compatibility fails at column " +
                                            std::to_string(j) + " under " + X.label(chi));
      }
  }
  if (!sparse_equal(act(X.identity()), sparse_identity(dim_)))
    fail(ErrCode::AxiomViolation, name_ + ": act(e) is not the identity");
  for (Elem c1 = 0; c1 < X.order(); ++c1)
    for (Elem c2 = 0; c2 < X.order(); ++c2)
      if (!sparse_equal(act(X.mul(c1, c2)), sparse_compose(act(c2), act(c1))))
        fail(ErrCode::AxiomViolation, name_ + ": act(" + X.label(c1) + " " + X.label(c2) +
                                          ") != act(" + X.label(c2) + ") act(" + X.label(c1) + ")");
}

CObject a_object(const AlgebraA& A) {
  const CosetStructure& st = A.structure();
  std::vector<Elem> grades(A.dim());
  for (int k = 0; k < A.dim(); ++k) grades[k] = A.grade(A.basis(k));
  std::vector<SparseOp> act;
  for (Elem u : st.system().G()) {
    SparseOp op(A.dim());
    for (int k = 0; k < A.dim(); ++k) {
      AElem x;
      x.add(A.basis(k), 1);
      for (const auto& [b, c] : A.act(x, u).terms) op[k].push_back({A.index(b), c});
    }
    act.push_back(std::move(op));
  }
  return CObject(st, "A(" + A.X().name() + ")", std::move(grades), std::move(act));
}

CObject x_object(const CosetStructure& st) {
  const FiniteGroup& X = st.X();
  int n = X.order();
  std::vector<Elem> grades(n);
  for (Elem x = 0; x < n; ++x) grades[x] = st.system().factor(x).s;
  std::vector<SparseOp> act;
  for (Elem u : st.system().G()) {
    SparseOp op(n);
    for (Elem x = 0; x < n; ++x) op[x] = {{X.mul(x, u), Rat(1)}};
    act.push_back(std::move(op));
  }
  return CObject(st, "kX(" + X.name() + ")", std::move(grades), std::move(act));
}

CObject tensor_c(const CObject& V, const CObject& W) {
  check_same_space(V.structure().X(), W.structure().X(), "tensor_c");
  const CosetStructure& st = V.structure();
  int dv = V.dim(), dw = W.dim();
  std::vector<Elem> grades(static_cast<size_t>(dv) * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j)
      grades[static_cast<size_t>(i) * dw + j] = st.dot(V.grade(i), W.grade(j));
  std::vector<SparseOp> act;
  for (Elem u : st.system().G()) {
    SparseOp op(static_cast<size_t>(dv) * dw);
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dw; ++j) {
        const SparseVec& cv = V.act(st.rtri(W.grade(j), u))[i];
        const SparseVec& cw = W.act(u)[j];
        SparseVec& out = op[static_cast<size_t>(i) * dw + j];
        for (const auto& [i2, a] : cv)
          for (const auto& [j2, b] : cw) out.push_back({i2 * dw + j2, a * b});
      }
    act.push_back(std::move(op));
  }
  return CObject(st, "(" + V.name() + ") (x) (" + W.name() + ")", std::move(grades),
                 std::move(act));
}

DObject d_object(const DoubleD& D) {
  const CosetStructure& st = D.structure();
  const FiniteGroup& X = st.X();
  std::vector<Elem> grades(D.dim());
  for (int k = 0; k < D.dim(); ++k) {
    DBasis b = D.basis(k);
    grades[k] = D.norm_grade(b.y, b.x).full;
  }
  std::vector<SparseOp> act(X.order());
  for (Elem chi = 0; chi < X.order(); ++chi) {
    SparseOp op(D.dim());
    for (int k = 0; k < D.dim(); ++k) {
      DElem x;
      x.add(D.basis(k), 1);
      for (const auto& [b, c] : D.hat_act(x, chi).terms) op[k].push_back({D.index(b), c});
    }
    act[chi] = std::move(op);
  }
  return DObject(st, "D(" + X.name() + ")", std::move(grades), std::move(act));
}

DObject x_conj_object(const CosetStructure& st) {
  const FiniteGroup& X = st.X();
  int n = X.order();
  std::vector<Elem> grades(n);
  for (Elem x = 0; x < n; ++x) grades[x] = x;
  std::vector<SparseOp> act(n);
  for (Elem chi = 0; chi < n; ++chi) {
    SparseOp op(n);
    for (Elem x = 0; x < n; ++x) op[x] = {{X.conj(x, chi), Rat(1)}};
    act[chi] = std::move(op);
  }
  return DObject(st, "kX-conj(" + X.name() + ")", std::move(grades), std::move(act));
}

const char* map_kind_name(MapKind k) {
  switch (k) {
  case MapKind::TypeA: return "TypeA";
  case MapKind::TypeB: return "TypeB";
  case MapKind::Both: return "Both";
  case MapKind::Neither: return "Neither";
  }
  return "?";
}

namespace {

// Shared classification sweep. The grade map and per-column twist distinguish
// type A (identity grade map, twist u) from type B.
template <typename GradeOf, typename GradeLaw, typename Twist>
void classify_sweep(const FiniteGroup& X, const std::vector<Elem>& acting, int dv, int dw,
                    const RatMat& phi, GradeOf grade_w, GradeLaw law, Twist twist,
                    const std::function<const SparseOp&(bool, Elem)>& act, bool& ok,
                    std::vector<Json>& wit) {
  ok = true;
  for (int j = 0; j < dv; ++j)
    for (int i = 0; i < dw; ++i) {
      if (phi.at(i, j) == 0) continue;
      if (grade_w(i) != law(j)) {
        ok = false;
        if (static_cast<int>(wit.size()) < kMaxClassWitnesses)
          wit.push_back(Json{{"kind", "grade"}, {"row", i}, {"col", j}});
      }
    }
  for (Elem g : acting)
    for (int j = 0; j < dv; ++j) {
      // phi(e_j act g) vs phi(e_j) act twist(j, g)
      RatVec lhs(dw, Rat(0));
      for (const auto& [j2, c] : act(false, g)[j])
        for (int i = 0; i < dw; ++i) lhs[i] += c * phi.at(i, j2);
      RatVec col = dense_col(phi, j);
      RatVec rhs = sparse_apply(act(true, twist(j, g)), col, dw);
      if (lhs != rhs) {
        ok = false;
        if (static_cast<int>(wit.size()) < kMaxClassWitnesses)
          wit.push_back(Json{{"kind", "action"}, {"col", j}, {"element", X.label(g)}});
      }
    }
}

} // namespace

MapClass classify(const CObject& V, const CObject& W, const RatMat& phi) {
  check_same_space(V.structure().X(), W.structure().X(), "classify");
  if (phi.rows != W.dim() || phi.cols != V.dim())
    fail(ErrCode::DimensionMismatch, "classify: map has wrong shape");
  const CosetStructure& st = V.structure();
  MapClass r;
  std::function<const SparseOp&(bool, Elem)> act = [&](bool w, Elem u) -> const SparseOp& {
    return w ? W.act(u) : V.act(u);
  };
  classify_sweep(
      st.X(), st.system().G(), V.dim(), W.dim(), phi, [&](int i) { return W.grade(i); },
      [&](int j) { return V.grade(j); }, [&](int, Elem u) { return u; }, act, r.type_a,
      r.a_witnesses);
  classify_sweep(
      st.X(), st.system().G(), V.dim(), W.dim(), phi, [&](int i) { return W.grade(i); },
      [&](int j) { return st.linv(V.grade(j)); },
      [&](int j, Elem u) { return st.rtri(V.grade(j), u); }, act, r.type_b, r.b_witnesses);
  return r;
}

MapClass classify_d(const DObject& V, const DObject& W, const RatMat& phi) {
  check_same_space(V.structure().X(), W.structure().X(), "classify_d");
  if (phi.rows != W.dim() || phi.cols != V.dim())
    fail(ErrCode::DimensionMismatch, "classify_d: map has wrong shape");
  const CosetStructure& st = V.structure();
  const FiniteGroup& X = st.X();
  std::vector<Elem> all(X.order());
  for (Elem c = 0; c < X.order(); ++c) all[c] = c;
  MapClass r;
  std::function<const SparseOp&(bool, Elem)> act = [&](bool w, Elem chi) -> const SparseOp& {
    return w ? W.act(chi) : V.act(chi);
  };
  classify_sweep(
      X, all, V.dim(), W.dim(), phi, [&](int i) { return W.grade(i); },
      [&](int j) { return V.grade(j); }, [&](int, Elem chi) { return chi; }, act, r.type_a,
      r.a_witnesses);
  // ||xi||^L = |xi| <xi>^{-1}
  classify_sweep(
      X, all, V.dim(), W.dim(), phi, [&](int i) { return W.grade(i); },
      [&](int j) { return X.mul(V.grade_gabs(j), X.inv(V.grade_mpart(j))); },
      [&](int j, Elem chi) { return tilde_rtri(st, V.grade(j), chi); }, act, r.type_b,
      r.b_witnesses);
  return r;
}

namespace {

// Nullspace of the combined grade/equivariance constraints over the
// grade-allowed entries of the matrix.
template <typename GradeLaw, typename Twist, typename ActV, typename ActW>
std::vector<RatMat> solve_space(int dv, int dw, const std::vector<Elem>& acting, GradeLaw law,
                                Twist twist, ActV act_v, ActW act_w) {
  // unknowns: entries (i, j) with grade_w(i) == law(j)
  std::vector<int> unk(static_cast<size_t>(dw) * dv, -1);
  std::vector<std::pair<int, int>> slots;
  for (int j = 0; j < dv; ++j)
    for (int i = 0; i < dw; ++i)
      if (law(i, j)) {
        unk[static_cast<size_t>(i) * dv + j] = static_cast<int>(slots.size());
        slots.push_back({i, j});
      }
  int nu = static_cast<int>(slots.size());
  if (nu == 0) return {};

  SparseRowReducer red(nu);
  for (Elem g : acting)
    for (int j = 0; j < dv; ++j) {
      const SparseOp& av = act_v(g);
      const SparseOp& aw = act_w(twist(j, g));
      // for each output row i: sum_{j2} av[j][j2] X[i][j2] - sum_{i2} aw[i2][i] X[i2][j] = 0
      std::map<int, std::map<int, Rat>> expr; // i -> (unknown -> coeff)
      for (const auto& [j2, c] : av[j])
        for (int i = 0; i < dw; ++i) {
          int s = unk[static_cast<size_t>(i) * dv + j2];
          if (s >= 0) expr[i][s] += c;
        }
      for (int i2 = 0; i2 < dw; ++i2) {
        int s = unk[static_cast<size_t>(i2) * dv + j];
        if (s < 0) continue;
        for (const auto& [i, c] : aw[i2]) expr[i][s] -= c;
      }
      for (auto& [i, terms] : expr) {
        std::vector<std::pair<int, Rat>> r;
        for (auto& [s, c] : terms)
          if (c != 0) r.push_back({s, c});
        if (!r.empty()) red.add_row(r);
      }
    }

  std::vector<RatVec> null = red.nullspace();
  std::vector<RatMat> basis;
  for (const RatVec& v : null) {
    RatMat m(dw, dv);
    for (int s = 0; s < nu; ++s) m.at(slots[s].first, slots[s].second) = v[s];
    basis.push_back(std::move(m));
  }
  return basis;
}

} // namespace

std::vector<RatMat> morphism_space(const CObject& V, const CObject& W, bool type_b) {
  check_same_space(V.structure().X(), W.structure().X(), "morphism_space");
  const CosetStructure& st = V.structure();
  auto basis = solve_space(
      V.dim(), W.dim(), st.system().G(),
      [&](int i, int j) {
        return W.grade(i) == (type_b ? st.linv(V.grade(j)) : V.grade(j));
      },
      [&](int j, Elem u) { return type_b ? st.rtri(V.grade(j), u) : u; },
      [&](Elem u) -> const SparseOp& { return V.act(u); },
      [&](Elem u) -> const SparseOp& { return W.act(u); });
  for (const RatMat& m : basis) {
    MapClass c = classify(V, W, m);
    if (!(type_b ? c.type_b : c.type_a))
      fail(ErrCode::AxiomViolation, "morphism_space: solved basis fails re-classification");
  }
  return basis;
}

std::vector<RatMat> morphism_space_d(const DObject& V, const DObject& W, bool type_b) {
  check_same_space(V.structure().X(), W.structure().X(), "morphism_space_d");
  const CosetStructure& st = V.structure();
  const FiniteGroup& X = st.X();
  std::vector<Elem> all(X.order());
  for (Elem c = 0; c < X.order(); ++c) all[c] = c;
  auto basis = solve_space(
      V.dim(), W.dim(), all,
      [&](int i, int j) {
        Elem want = type_b ? X.mul(V.grade_gabs(j), X.inv(V.grade_mpart(j))) : V.grade(j);
        return W.grade(i) == want;
      },
      [&](int j, Elem chi) { return type_b ? tilde_rtri(st, V.grade(j), chi) : chi; },
      [&](Elem chi) -> const SparseOp& { return V.act(chi); },
      [&](Elem chi) -> const SparseOp& { return W.act(chi); });
  for (const RatMat& m : basis) {
    MapClass c = classify_d(V, W, m);
    if (!(type_b ? c.type_b : c.type_a))
      fail(ErrCode::AxiomViolation, "morphism_space_d: solved basis fails re-classification");
  }
  return basis;
}

RatMat sample_map(const std::vector<RatMat>& basis, std::mt19937_64& rng) {
  if (basis.empty()) fail(ErrCode::InvalidInput, "cannot sample from an empty morphism space");
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (;;) {
    RatMat m(basis[0].rows, basis[0].cols);
    bool nonzero = false;
    for (const RatMat& b : basis) {
      int c = coeff(rng);
      if (c == 0) continue;
      nonzero = true;
      m = m + Rat(c) * b;
    }
    if (nonzero && !m.is_zero()) return m;
  }
}

SparseVec pair_act_c(const CObject& P, const CObject& Q, const SparseVec& v, Elem u) {
  const CosetStructure& st = P.structure();
  int dq = Q.dim();
  SparseVec out;
  for (const auto& [idx, c] : v) {
    int p = idx / dq, q = idx % dq;
    const SparseVec& cp = P.act(st.rtri(Q.grade(q), u))[p];
    const SparseVec& cq = Q.act(u)[q];
    for (const auto& [p2, a] : cp)
      for (const auto& [q2, b] : cq) out.push_back({p2 * dq + q2, c * a * b});
  }
  return sparse_normalize(out);
}

SparseVec pair_act_d(const DObject& P, const DObject& Q, const SparseVec& v, Elem chi) {
  const CosetStructure& st = P.structure();
  int dq = Q.dim();
  SparseVec out;
  for (const auto& [idx, c] : v) {
    int p = idx / dq, q = idx % dq;
    const SparseVec& cp = P.act(tilde_rtri(st, Q.grade_mpart(q), chi))[p];
    const SparseVec& cq = Q.act(chi)[q];
    for (const auto& [p2, a] : cp)
      for (const auto& [q2, b] : cq) out.push_back({p2 * dq + q2, c * a * b});
  }
  return sparse_normalize(out);
}

namespace {

template <typename Obj, typename GradeOf, typename PairAct>
SparseOp boxtimes_impl(const Obj& V, const Obj& W, const Obj& Vt, const Obj& Wt,
                       const RatMat& phi, const RatMat& psi, GradeOf grade_of,
                       PairAct pair_act) {
  if (phi.rows != Vt.dim() || phi.cols != V.dim() || psi.rows != Wt.dim() ||
      psi.cols != W.dim())
    fail(ErrCode::DimensionMismatch, "boxtimes: map has wrong shape");
  const CosetStructure& st = V.structure();
  const FiniteGroup& X = st.X();
  int dv = V.dim(), dw = W.dim(), dvt = Vt.dim();
  SparseOp out(static_cast<size_t>(dv) * dw);
  for (int i = 0; i < dv; ++i) {
    Elem a = grade_of(V, i);
    Elem w_tw = st.tau(st.linv(a), a);
    for (int j = 0; j < dw; ++j) {
      Elem b = grade_of(W, j);
      // psi(e_j) act tau(a^L, a)^{-1}  (x)  phi(e_i), then pair-act tau(a, b)
      RatVec pj = sparse_apply(Wt.act(X.inv(w_tw)), dense_col(psi, j), Wt.dim());
      SparseVec pair;
      for (int jt = 0; jt < Wt.dim(); ++jt) {
        if (pj[jt] == 0) continue;
        for (int it = 0; it < dvt; ++it) {
          if (phi.at(it, i) == 0) continue;
          pair.push_back({jt * dvt + it, pj[jt] * phi.at(it, i)});
        }
      }
      out[static_cast<size_t>(i) * dw + j] = pair_act(Wt, Vt, pair, st.tau(a, b));
    }
  }
  return out;
}

} // namespace

SparseOp boxtimes_c(const CObject& V, const CObject& W, const CObject& Vt, const CObject& Wt,
                    const RatMat& phi, const RatMat& psi) {
  check_same_space(V.structure().X(), W.structure().X(), "boxtimes_c");
  check_same_space(V.structure().X(), Vt.structure().X(), "boxtimes_c");
  check_same_space(V.structure().X(), Wt.structure().X(), "boxtimes_c");
  return boxtimes_impl(
      V, W, Vt, Wt, phi, psi, [](const CObject& o, int i) { return o.grade(i); },
      [](const CObject& p, const CObject& q, const SparseVec& v, Elem u) {
        return pair_act_c(p, q, v, u);
      });
}

SparseOp boxtimes_d(const DObject& V, const DObject& W, const DObject& Vt, const DObject& Wt,
                    const RatMat& phi, const RatMat& psi) {
  check_same_space(V.structure().X(), W.structure().X(), "boxtimes_d");
  check_same_space(V.structure().X(), Vt.structure().X(), "boxtimes_d");
  check_same_space(V.structure().X(), Wt.structure().X(), "boxtimes_d");
  return boxtimes_impl(
      V, W, Vt, Wt, phi, psi, [](const DObject& o, int i) { return o.grade_mpart(i); },
      [](const DObject& p, const DObject& q, const SparseVec& v, Elem u) {
        return pair_act_d(p, q, v, u);
      });
}

SparseOp psi_op(const DObject& V, const DObject& W) {
  check_same_space(V.structure().X(), W.structure().X(), "psi_op");
  const CosetStructure& st = V.structure();
  const FiniteGroup& X = st.X();
  int dv = V.dim(), dw = W.dim();
  SparseOp out(static_cast<size_t>(dv) * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) {
      Elem chi1 = X.inv(st.ltri(V.grade_mpart(i), W.grade_gabs(j)));
      Elem chi2 = W.grade_gabs(j);
      SparseVec& col = out[static_cast<size_t>(i) * dw + j];
      for (const auto& [j2, cw] : W.act(chi1)[j])
        for (const auto& [i2, cv] : V.act(chi2)[i]) col.push_back({j2 * dv + i2, cw * cv});
      col = sparse_normalize(col);
    }
  return out;
}

SparseOp psi_inv_op(const DObject& V, const DObject& W) {
  check_same_space(V.structure().X(), W.structure().X(), "psi_inv_op");
  const CosetStructure& st = V.structure();
  const FiniteGroup& X = st.X();
  int dv = V.dim(), dw = W.dim();
  SparseOp out(static_cast<size_t>(dv) * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) {
      Elem chi2 = W.grade_mpart(j);
      // |xi hat <eta>| is determined by the grade alone
      Elem moved = X.conj(V.grade(i), chi2);
      Elem chi1 = st.system().factor(moved).u; // = |moved|^{-1}
      SparseVec& col = out[static_cast<size_t>(i) * dw + j];
      for (const auto& [j2, cw] : W.act(chi1)[j])
        for (const auto& [i2, cv] : V.act(chi2)[i]) col.push_back({j2 * dv + i2, cw * cv});
      col = sparse_normalize(col);
    }
  return out;
}

Report verify_main_identity(const DObject& V, const DObject& W, const DObject& Vt,
                            const DObject& Wt, const RatMat& phi, const RatMat& psi) {
  // both sides map W (x) V -> Wt (x) Vt
  SparseOp lhs = sparse_compose(psi_op(Vt, Wt), boxtimes_d(W, V, Wt, Vt, psi, phi));
  SparseOp rhs = sparse_compose(boxtimes_d(V, W, Vt, Wt, phi, psi), psi_inv_op(W, V));
  Report rep;
  CheckBuilder c("Psi o (psi boxtimes phi) = (phi boxtimes psi) o Psi^{-1} on every basis pair");
  int dv = V.dim();
  for (size_t k = 0; k < lhs.size(); ++k)
    c.expect(sparse_normalize(lhs[k]) == sparse_normalize(rhs[k]), [&] {
      return Json{{"eta", static_cast<int>(k) / dv}, {"xi", static_cast<int>(k) % dv}};
    });
  rep.checks.push_back(c.done());
  return rep;
}

CObject bar_object(const CObject& V) {
  const CosetStructure& st = V.structure();
  if (!st.rinv_total())
    fail(ErrCode::AssumptionViolated, "Bar needs a total right inverse on M");
  int d = V.dim();
  std::vector<Elem> grades(d);
  for (int i = 0; i < d; ++i) grades[i] = st.rinv(V.grade(i));
  std::vector<SparseOp> act;
  for (Elem u : st.system().G()) {
    SparseOp op(d);
    for (int i = 0; i < d; ++i) op[i] = V.act(st.rtri(st.rinv(V.grade(i)), u))[i];
    act.push_back(std::move(op));
  }
  return CObject(st, "Bar(" + V.name() + ")", std::move(grades), std::move(act));
}

RatMat omega_matrix(const CObject& V) {
  const CosetStructure& st = V.structure();
  if (!st.rinv_total())
    fail(ErrCode::AssumptionViolated, "Omega needs a total right inverse on M");
  int d = V.dim();
  RatMat m(d, d);
  for (int i = 0; i < d; ++i) {
    Elem srr = st.rinv(st.rinv(V.grade(i)));
    for (const auto& [k, c] : V.act(st.tau(st.linv(srr), srr))[i]) m.at(k, i) += c;
  }
  return m;
}

} // namespace cosetcat
