#include "cosetcat/inner_product.hpp"

namespace cosetcat {

CObject dual_a_object(const AlgebraA& A) {
  const CosetStructure& st = A.structure();
  const FiniteGroup& X = st.X();
  const auto& G = st.system().G();
  int d = A.dim();
  std::vector<Elem> grades(d);
  for (int k = 0; k < d; ++k) grades[k] = st.linv(A.grade(A.basis(k)));
  // invert w -> a rtri w per grade value
  std::map<Elem, std::map<Elem, Elem>> w_of; // a -> (a rtri w -> w)
  for (int k = 0; k < d; ++k) {
    Elem a = A.grade(A.basis(k));
    if (w_of.count(a)) continue;
    auto& inv = w_of[a];
    for (Elem w : G) {
      Elem g = st.rtri(a, w);
      if (inv.count(g))
        fail(ErrCode::DualActionUndefined, "a rtri w is not injective in w at a = " + X.label(a));
      inv[g] = w;
    }
  }
  std::vector<SparseOp> act;
  for (Elem g : G) {
    SparseOp op(d);
    for (int k = 0; k < d; ++k) {
      ABasis b = A.basis(k);
      Elem a = A.grade(b);
      Elem w = w_of.at(a).at(g);
      ABasis img{st.ltri(b.s, g), X.mul(X.inv(g), X.mul(b.u, w))};
      op[k] = {{A.index(img), Rat(1)}};
    }
    act.push_back(std::move(op));
  }
  return CObject(st, "A*(" + X.name() + ")", std::move(grades), std::move(act));
}

RatMat phi_flip(const AlgebraA& A) { return RatMat::identity(A.dim()); }

Rat eval_dual(const AlgebraA& A, const RatVec& dual_vec, const AElem& xi) {
  if (static_cast<int>(dual_vec.size()) != A.dim())
    fail(ErrCode::DimensionMismatch, "eval_dual: dual vector has wrong length");
  Rat r(0);
  for (const auto& [b, c] : xi.terms) r += dual_vec[A.index(b)] * c;
  return r;
}

Rat pairing(const AlgebraA& A, const AElem& eta, const AElem& xi) {
  RatVec phi_eta(A.dim(), Rat(0));
  RatMat phi = phi_flip(A);
  for (const auto& [b, c] : eta.terms) {
    int j = A.index(b);
    for (int i = 0; i < A.dim(); ++i) phi_eta[i] += phi.at(i, j) * c;
  }
  return eval_dual(A, phi_eta, xi);
}

Report verify_invariance(const AlgebraA& A) {
  const CosetStructure& st = A.structure();
  CObject dual = dual_a_object(A);
  int d = A.dim();
  Report rep;
  CheckBuilder c("eval((t (x) d_v) act (a rtri w), (d_s (x) u) act-bar w) = [s=t][u=v]");
  for (int i = 0; i < d; ++i) {
    ABasis dual_b = A.basis(i); // t (x) delta_v
    for (int j = 0; j < d; ++j) {
      ABasis b = A.basis(j);
      Elem a = A.grade(b);
      for (Elem w : st.system().G()) {
        RatVec lhs_dual(d, Rat(0));
        for (const auto& [r, cf] : dual.act(st.rtri(a, w))[i]) lhs_dual[r] = cf;
        AElem xi;
        xi.add(b, 1);
        Rat got = eval_dual(A, lhs_dual, A.act(xi, w));
        Rat want(i == j ? 1 : 0);
        c.expect(got == want, [&] {
          return Json{{"t", st.X().label(dual_b.s)}, {"v", st.X().label(dual_b.u)},
                      {"s", st.X().label(b.s)},      {"u", st.X().label(b.u)},
                      {"w", st.X().label(w)},        {"got", rat_str(got)}};
        });
      }
    }
  }
  rep.checks.push_back(c.done());
  return rep;
}

Report verify_inner_product(const AlgebraA& A) {
  Report rep;
  CObject V = a_object(A);
  CObject dual = dual_a_object(A);
  RatMat phi = phi_flip(A);
  {
    MapClass cls = classify(V, dual, phi);
    CheckBuilder c("phi(delta_s (x) u) = s (x) delta_u is a type B morphism A -> A*");
    c.expect(cls.type_b, [&] { return Json{{"witnesses", Json(cls.b_witnesses)}}; });
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("Gram matrix <basis_i, basis_j> is the identity");
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) {
        AElem ei, ej;
        ei.add(A.basis(i), 1);
        ej.add(A.basis(j), 1);
        Rat want(i == j ? 1 : 0);
        c.expect(pairing(A, ei, ej) == want, [&] {
          return Json{{"i", i}, {"j", j}};
        });
      }
    rep.checks.push_back(c.done());
  }
  rep.append(verify_invariance(A));
  return rep;
}

} // namespace cosetcat
