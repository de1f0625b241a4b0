#include "cosetcat/hopf.hpp"

#include <fstream>
#include <map>

namespace cosetcat {

namespace {

Rat json_rat(const Json& j, const char* what) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  fail(ErrCode::InvalidInput, std::string(what) + ": expected a rational as \"p/q\" or integer");
}

void check_index(int i, int dim, const char* what) {
  if (i < 0 || i >= dim)
    fail(ErrCode::InvalidInput, std::string(what) + ": basis index " + std::to_string(i) +
                                    " out of range for dimension " + std::to_string(dim));
}

// pair index in H (x) H
inline int pid(int i, int j, int dim) { return i * dim + j; }

RatVec pair_vec(const std::vector<CopTerm>& row, int dim) {
  RatVec v(static_cast<size_t>(dim) * dim, Rat(0));
  for (const auto& [i, j, c] : row) v[pid(i, j, dim)] += c;
  return v;
}

} // namespace

HopfData HopfData::parse(const Json& j, BasedAlgebra alg) {
  if (!j.is_object()) fail(ErrCode::InvalidInput, "hopf data: expected a JSON object");
  for (const char* key : {"basis", "coproduct", "counit", "antipode"})
    if (!j.contains(key)) fail(ErrCode::InvalidInput, std::string("hopf data: missing ") + key);
  int n = alg.dim;
  if (!j["basis"].is_number_integer() || j["basis"].get<int>() != n)
    fail(ErrCode::DimensionMismatch,
         "hopf data: basis count does not match the algebra dimension " + std::to_string(n));
  HopfData hd;
  hd.alg = std::move(alg);
  const Json& cop = j["coproduct"];
  if (!cop.is_array() || static_cast<int>(cop.size()) != n)
    fail(ErrCode::DimensionMismatch, "hopf data: coproduct needs one row per basis element");
  hd.coproduct.resize(n);
  for (int k = 0; k < n; ++k) {
    if (!cop[k].is_array()) fail(ErrCode::InvalidInput, "hopf data: coproduct row is not a list");
    for (const Json& term : cop[k]) {
      if (!term.is_array() || term.size() != 3)
        fail(ErrCode::InvalidInput, "hopf data: coproduct term must be [i, j, coeff]");
      if (!term[0].is_number_integer() || !term[1].is_number_integer())
        fail(ErrCode::InvalidInput, "hopf data: coproduct term indices must be integers");
      int i = term[0].get<int>(), jj = term[1].get<int>();
      check_index(i, n, "coproduct");
      check_index(jj, n, "coproduct");
      hd.coproduct[k].push_back({i, jj, json_rat(term[2], "coproduct")});
    }
  }
  const Json& eps = j["counit"];
  if (!eps.is_array() || static_cast<int>(eps.size()) != n)
    fail(ErrCode::DimensionMismatch, "hopf data: counit needs one entry per basis element");
  for (const Json& e : eps) hd.counit.push_back(json_rat(e, "counit"));
  const Json& s = j["antipode"];
  if (!s.is_array() || static_cast<int>(s.size()) != n)
    fail(ErrCode::DimensionMismatch, "hopf data: antipode needs " + std::to_string(n) + " rows");
  hd.antipode = RatMat(n, n);
  for (int i = 0; i < n; ++i) {
    if (!s[i].is_array() || static_cast<int>(s[i].size()) != n)
      fail(ErrCode::DimensionMismatch, "hopf data: antipode row has wrong length");
    for (int k = 0; k < n; ++k) hd.antipode.at(i, k) = json_rat(s[i][k], "antipode");
  }
  Report ax = hd.axioms();
  if (!ax.all_passed()) {
    for (const CheckResult& c : ax.checks)
      if (!c.passed)
        fail(ErrCode::AxiomViolation,
             "hopf data rejected: " + c.identity + " fails, first witness " +
                 (c.witnesses.empty() ? "(none)" : c.witnesses.front().dump()));
  }
  return hd;
}

HopfData HopfData::load(const std::string& path, BasedAlgebra alg) {
  std::ifstream in(path);
  if (!in) fail(ErrCode::InvalidInput, "cannot open hopf data file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrCode::InvalidInput, "bad JSON in " + path + ": " + e.what());
  }
  return parse(j, std::move(alg));
}

RatVec HopfData::coproduct_vec(const RatVec& h) const {
  int n = alg.dim;
  RatVec out(static_cast<size_t>(n) * n, Rat(0));
  for (int k = 0; k < n; ++k) {
    if (h[k] == 0) continue;
    for (const auto& [i, j, c] : coproduct[k]) out[pid(i, j, n)] += h[k] * c;
  }
  return out;
}

Rat HopfData::counit_of(const RatVec& h) const {
  Rat r(0);
  for (int k = 0; k < alg.dim; ++k) r += counit[k] * h[k];
  return r;
}

RatVec HopfData::antipode_vec(const RatVec& h) const { return apply(antipode, h); }

Report HopfData::axioms() const {
  int n = alg.dim;
  Report rep;
  {
    // (Delta (x) id) Delta = (id (x) Delta) Delta on basis elements, compared
    // as coefficient vectors on the triple tensor (index (i*n + j)*n + k)
    CheckBuilder c("coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta");
    for (int b = 0; b < n; ++b) {
      std::map<long, Rat> lhs, rhs;
      for (const auto& [i, j, cf] : coproduct[b]) {
        for (const auto& [i1, i2, cf1] : coproduct[i])
          lhs[(static_cast<long>(i1) * n + i2) * n + j] += cf * cf1;
        for (const auto& [j1, j2, cf2] : coproduct[j])
          rhs[(static_cast<long>(i) * n + j1) * n + j2] += cf * cf2;
      }
      auto strip = [](std::map<long, Rat>& m) {
        for (auto it = m.begin(); it != m.end();)
          it = (it->second == 0) ? m.erase(it) : std::next(it);
      };
      strip(lhs);
      strip(rhs);
      c.expect(lhs == rhs, [&] { return Json{{"basis", alg.labels[b]}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("counit: (eps (x) id) Delta = id = (id (x) eps) Delta");
    for (int b = 0; b < n; ++b) {
      RatVec left(n, Rat(0)), right(n, Rat(0));
      for (const auto& [i, j, cf] : coproduct[b]) {
        left[j] += cf * counit[i];
        right[i] += cf * counit[j];
      }
      c.expect(left == alg.basis_vec(b) && right == alg.basis_vec(b),
               [&] { return Json{{"basis", alg.labels[b]}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("antipode: mu (S (x) id) Delta = eta eps = mu (id (x) S) Delta");
    RatVec unit = alg.unit_vec();
    for (int b = 0; b < n; ++b) {
      RatVec left(n, Rat(0)), right(n, Rat(0));
      for (const auto& [i, j, cf] : coproduct[b]) {
        RatVec l = alg.mul_vec(antipode_vec(alg.basis_vec(i)), alg.basis_vec(j));
        RatVec r = alg.mul_vec(alg.basis_vec(i), antipode_vec(alg.basis_vec(j)));
        for (int k = 0; k < n; ++k) {
          left[k] += cf * l[k];
          right[k] += cf * r[k];
        }
      }
      RatVec want(n, Rat(0));
      for (int k = 0; k < n; ++k) want[k] = counit[b] * unit[k];
      c.expect(left == want && right == want, [&] { return Json{{"basis", alg.labels[b]}}; });
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

Rat operator_integral(const HopfData& hd, const RatVec& h) {
  if (static_cast<int>(h.size()) != hd.alg.dim)
    fail(ErrCode::DimensionMismatch, "operator_integral: vector has wrong length");
  return (hd.alg.left_mult(h) * hd.antipode * hd.antipode).trace();
}

RatVec operator_integral_covector(const HopfData& hd) {
  RatVec v(hd.alg.dim, Rat(0));
  for (int k = 0; k < hd.alg.dim; ++k) v[k] = operator_integral(hd, hd.alg.basis_vec(k));
  return v;
}

namespace {

Report integral_side(const HopfData& hd, const RatVec& integral, bool left) {
  if (static_cast<int>(integral.size()) != hd.alg.dim)
    fail(ErrCode::DimensionMismatch, "integral covector has wrong length");
  if (is_zero(integral))
    fail(ErrCode::InvalidInput, "integral covector is identically zero");
  int n = hd.alg.dim;
  RatVec unit = hd.alg.unit_vec();
  Report rep;
  CheckBuilder c(left ? "(id (x) int) o Delta = eta o int"
                      : "(int (x) id) o Delta = eta o int");
  for (int b = 0; b < n; ++b) {
    RatVec got(n, Rat(0));
    for (const auto& [i, j, cf] : hd.coproduct[b])
      got[left ? i : j] += cf * integral[left ? j : i];
    RatVec want(n, Rat(0));
    for (int k = 0; k < n; ++k) want[k] = integral[b] * unit[k];
    c.expect(got == want, [&] { return Json{{"basis", hd.alg.labels[b]}}; });
  }
  rep.checks.push_back(c.done());
  return rep;
}

} // namespace

Report check_left_integral(const HopfData& hd, const RatVec& integral) {
  return integral_side(hd, integral, true);
}

Report check_right_integral(const HopfData& hd, const RatVec& integral) {
  return integral_side(hd, integral, false);
}

Report check_integral_element(const BasedAlgebra& alg, const RatVec& counit,
                              const RatVec& lambda, bool require_normalized) {
  if (static_cast<int>(lambda.size()) != alg.dim ||
      static_cast<int>(counit.size()) != alg.dim)
    fail(ErrCode::DimensionMismatch, "integral element check: wrong vector length");
  if (is_zero(lambda)) fail(ErrCode::InvalidInput, "integral element is zero");
  Report rep;
  Rat eps_lambda(0);
  for (int k = 0; k < alg.dim; ++k) eps_lambda += counit[k] * lambda[k];
  {
    CheckBuilder c("left integral: h Lambda = eps(h) Lambda for all basis h");
    for (int b = 0; b < alg.dim; ++b) {
      RatVec got = alg.mul_vec(alg.basis_vec(b), lambda);
      RatVec want(alg.dim, Rat(0));
      for (int k = 0; k < alg.dim; ++k) want[k] = counit[b] * lambda[k];
      c.expect(got == want, [&] { return Json{{"h", alg.labels[b]}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("right integral: Lambda h = eps(h) Lambda for all basis h");
    for (int b = 0; b < alg.dim; ++b) {
      RatVec got = alg.mul_vec(lambda, alg.basis_vec(b));
      RatVec want(alg.dim, Rat(0));
      for (int k = 0; k < alg.dim; ++k) want[k] = counit[b] * lambda[k];
      c.expect(got == want, [&] { return Json{{"h", alg.labels[b]}}; });
    }
    rep.checks.push_back(c.done());
  }
  if (require_normalized) {
    CheckBuilder c("normalized: eps(Lambda) = 1");
    c.expect(eps_lambda == 1, [&] { return Json{{"eps", rat_str(eps_lambda)}}; });
    rep.checks.push_back(c.done());
  }
  return rep;
}

Representation Representation::make(const BasedAlgebra& alg, std::string name,
                                    std::vector<RatMat> act) {
  if (static_cast<int>(act.size()) != alg.dim)
    fail(ErrCode::DimensionMismatch, name + ": need one matrix per algebra basis element");
  Representation r;
  r.name = std::move(name);
  r.dim = act.empty() ? 0 : act[0].rows;
  r.act = std::move(act);
  for (const RatMat& m : r.act)
    if (m.rows != r.dim || m.cols != r.dim)
      fail(ErrCode::DimensionMismatch, r.name + ": action matrices must be square, same size");
  RatMat unit_act(r.dim, r.dim);
  for (const auto& [k, c] : alg.unit) unit_act = unit_act + c * r.act[k];
  if (!unit_act.is_identity())
    fail(ErrCode::AxiomViolation, r.name + ": the unit does not act as the identity");
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) {
      RatMat want(r.dim, r.dim);
      for (const auto& [k, c] : alg.mu[i][j]) want = want + c * r.act[k];
      if (!(r.act[j] * r.act[i] == want))
        fail(ErrCode::AxiomViolation, r.name + ": module law fails at (" + alg.labels[i] +
                                          ", " + alg.labels[j] + ")");
    }
  return r;
}

RatMat Representation::act_by(const RatVec& h) const {
  if (static_cast<int>(h.size()) != static_cast<int>(act.size()))
    fail(ErrCode::DimensionMismatch, name + ": act_by vector has wrong length");
  RatMat m(dim, dim);
  for (size_t k = 0; k < act.size(); ++k)
    if (h[k] != 0) m = m + h[k] * act[k];
  return m;
}

RatMat group_average(const RatMat& p, const std::vector<RatMat>& rep) {
  if (rep.empty()) fail(ErrCode::InvalidInput, "group_average: empty representation");
  RatMat sum(p.rows, p.cols);
  for (const RatMat& r : rep) sum = sum + r * p * inverse(r);
  return Rat(1, static_cast<long>(rep.size())) * sum;
}

RatMat t_average(const HopfData& hd, const RatVec& lambda, const Representation& V,
                 const Representation& U, const RatMat& t) {
  if (t.rows != U.dim || t.cols != V.dim)
    fail(ErrCode::DimensionMismatch, "t_average: map has wrong shape");
  Report right = check_integral_element(hd.alg, hd.counit, lambda);
  const CheckResult* rc = right.find("right integral: Lambda h = eps(h) Lambda for all basis h");
  if (rc == nullptr || !rc->passed)
    fail(ErrCode::IntegralNotVerified, "t_average: Lambda is not a right integral");
  int n = hd.alg.dim;
  RatMat out(U.dim, V.dim);
  for (int k = 0; k < n; ++k) {
    if (lambda[k] == 0) continue;
    for (const auto& [i, j, cf] : hd.coproduct[k]) {
      RatMat s_leg = V.act_by(hd.antipode_vec(hd.alg.basis_vec(i)));
      out = out + (lambda[k] * cf) * (U.act[j] * t * s_leg);
    }
  }
  return out;
}

int commutant_dimension(const Representation& V) {
  // X act_k = act_k X as linear constraints on the dim^2 entries of X
  int d = V.dim;
  SparseRowReducer red(d * d);
  for (const RatMat& a : V.act)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<std::pair<int, Rat>> row;
        for (int k = 0; k < d; ++k) {
          if (a.at(k, j) != 0) row.push_back({i * d + k, a.at(k, j)});
          if (a.at(i, k) != 0) row.push_back({k * d + j, -a.at(i, k)});
        }
        if (!row.empty()) red.add_row(row);
      }
  return d * d - red.rank();
}

Rat schur_scalar(const HopfData& hd, const RatVec& lambda, const Representation& V,
                 const RatMat& t) {
  if (commutant_dimension(V) != 1)
    fail(ErrCode::NotIrreducible, V.name + ": commutant dimension is not 1");
  Rat eps(0);
  for (int k = 0; k < hd.alg.dim; ++k) eps += hd.counit[k] * lambda[k];
  if (eps != 1)
    fail(ErrCode::IntegralNotVerified, "schur_scalar: Lambda is not normalized");
  RatMat t0 = t_average(hd, lambda, V, V, t);
  Rat c = t.trace() / Rat(V.dim);
  if (!(t0 == c * RatMat::identity(V.dim)))
    fail(ErrCode::AxiomViolation, "schur_scalar: t0 is not trace(t)/dim times the identity");
  return c;
}

Report delta_op_checks(const HopfData& hd, const SparseOp& braiding,
                       const SparseOp& braiding_inv) {
  int n = hd.alg.dim;
  size_t nn = static_cast<size_t>(n) * n;
  if (braiding.size() != nn || braiding_inv.size() != nn)
    fail(ErrCode::DimensionMismatch, "delta_op_checks: braiding has wrong pair dimension");
  Report rep;

  // candidate coproducts as sparse pair-index maps per basis element
  auto braided_rows = [&](const SparseOp& op) {
    std::vector<std::map<int, Rat>> cand(n);
    for (int b = 0; b < n; ++b) {
      for (const auto& [i, j, cf] : hd.coproduct[b])
        for (const auto& [out, c] : op[pid(i, j, n)]) {
          Rat& slot = cand[b][out];
          slot += cf * c;
          if (slot == 0) cand[b].erase(out);
        }
    }
    return cand;
  };
  for (const auto& [tag, op] : {std::pair<const char*, const SparseOp*>{"Psi o Delta", &braiding},
                                {"Psi^{-1} o Delta", &braiding_inv}}) {
    std::vector<std::map<int, Rat>> cand = braided_rows(*op);
    auto strip = [](std::map<long, Rat>& m) {
      for (auto it = m.begin(); it != m.end();)
        it = (it->second == 0) ? m.erase(it) : std::next(it);
    };
    {
      CheckBuilder c(std::string("Delta-op = ") + tag + " is coassociative");
      for (int b = 0; b < n; ++b) {
        std::map<long, Rat> lhs, rhs;
        for (const auto& [pq, cf] : cand[b]) {
          int i = pq / n, j = pq % n;
          for (const auto& [rs, cf1] : cand[i])
            lhs[static_cast<long>(rs) * n + j] += cf * cf1;
          for (const auto& [rs, cf2] : cand[j])
            rhs[(static_cast<long>(i) * n + rs / n) * n + rs % n] += cf * cf2;
        }
        strip(lhs);
        strip(rhs);
        c.expect(lhs == rhs, [&] { return Json{{"basis", hd.alg.labels[b]}}; });
      }
      rep.checks.push_back(c.done());
    }
    {
      CheckBuilder c(std::string("Delta-op = ") + tag + " is cocommutative (Delta-op = Delta)");
      for (int b = 0; b < n; ++b) {
        RatVec dense(nn, Rat(0));
        for (const auto& [pq, cf] : cand[b]) dense[pq] = cf;
        c.expect(dense == pair_vec(hd.coproduct[b], n),
                 [&] { return Json{{"basis", hd.alg.labels[b]}}; });
      }
      rep.checks.push_back(c.done());
    }
  }
  {
    CheckBuilder c("mu o Psi = mu on all basis pairs");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RatVec plain = hd.alg.mul_vec(hd.alg.basis_vec(i), hd.alg.basis_vec(j));
        RatVec braided(n, Rat(0));
        for (const auto& [pq, cf] : braiding[pid(i, j, n)]) {
          RatVec part = hd.alg.mul_vec(hd.alg.basis_vec(pq / n), hd.alg.basis_vec(pq % n));
          for (int k = 0; k < n; ++k) braided[k] += cf * part[k];
        }
        c.expect(braided == plain, [&] {
          return Json{{"i", hd.alg.labels[i]}, {"j", hd.alg.labels[j]}};
        });
      }
    rep.checks.push_back(c.done());
  }
  return rep;
}

SparseOp flip_braiding(int dim) {
  SparseOp op(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) op[pid(i, j, dim)] = {{pid(j, i, dim), Rat(1)}};
  return op;
}

BasedAlgebra group_algebra(const FiniteGroup& g) {
  BasedAlgebra a;
  a.name = "k[" + g.name() + "]";
  a.dim = g.order();
  a.labels = g.labels();
  a.mu.assign(a.dim, std::vector<std::vector<std::pair<int, Rat>>>(a.dim));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) a.mu[x][y] = {{g.mul(x, y), Rat(1)}};
  a.unit = {{g.identity(), Rat(1)}};
  return a;
}

HopfData group_hopf(const FiniteGroup& g) {
  HopfData hd;
  hd.alg = group_algebra(g);
  int n = g.order();
  hd.coproduct.resize(n);
  for (Elem x = 0; x < n; ++x) hd.coproduct[x] = {{x, x, Rat(1)}};
  hd.counit.assign(n, Rat(1));
  hd.antipode = RatMat(n, n);
  for (Elem x = 0; x < n; ++x) hd.antipode.at(g.inv(x), x) = 1;
  return hd;
}

HopfData function_hopf(const FiniteGroup& g) {
  HopfData hd;
  int n = g.order();
  BasedAlgebra a;
  a.name = "k(" + g.name() + ")";
  a.dim = n;
  for (Elem x = 0; x < n; ++x) a.labels.push_back("d_" + g.label(x));
  a.mu.assign(n, std::vector<std::vector<std::pair<int, Rat>>>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (x == y) a.mu[x][y] = {{x, Rat(1)}};
  for (Elem x = 0; x < n; ++x) a.unit.push_back({x, Rat(1)});
  hd.alg = std::move(a);
  hd.coproduct.resize(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v)
        if (g.mul(u, v) == x) hd.coproduct[x].push_back({u, v, Rat(1)});
  hd.counit.assign(n, Rat(0));
  hd.counit[g.identity()] = 1;
  hd.antipode = RatMat(n, n);
  for (Elem x = 0; x < n; ++x) hd.antipode.at(g.inv(x), x) = 1;
  return hd;
}

Representation s3_standard_rep(const FiniteGroup& s3, const BasedAlgebra& alg) {
  if (alg.dim != 6 || s3.order() != 6)
    fail(ErrCode::InvalidInput, "s3_standard_rep needs the order-6 S3 group algebra");
  // permutation of {0,1,2} per fixture label
  std::map<std::string, std::array<int, 3>> perms = {
      {"e", {0, 1, 2}},     {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}},
      {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},  {"(23)", {0, 2, 1}},
  };
  // left matrices on the hyperplane basis f1 = e0 - e1, f2 = e1 - e2:
  // pi . f = e_{pi(a)} - e_{pi(b)}, re-expressed through f1, f2 with
  // e_a - e_b = (coordinates summing the chain)
  auto coords = [](int a, int b) {
    // e_a - e_b as x1 f1 + x2 f2; f1 + f2 = e0 - e2
    RatVec v(2, Rat(0));
    auto add = [&](int from, int to, int sign) {
      // e_from - e_to for consecutive indices
      if (from == 0 && to == 1) v[0] += sign;
      else if (from == 1 && to == 2) v[1] += sign;
      else if (from == 0 && to == 2) {
        v[0] += sign;
        v[1] += sign;
      }
    };
    if (a == b) return v;
    if (a < b) add(a, b, 1);
    else add(b, a, -1);
    return v;
  };
  std::vector<RatMat> act(6);
  for (Elem x = 0; x < 6; ++x) {
    auto it = perms.find(s3.label(x));
    if (it == perms.end())
      fail(ErrCode::InvalidInput, "s3_standard_rep: unexpected label " + s3.label(x));
    const auto& p = it->second;
    RatMat left(2, 2);
    RatVec c1 = coords(p[0], p[1]); // image of f1
    RatVec c2 = coords(p[1], p[2]); // image of f2
    left.at(0, 0) = c1[0];
    left.at(1, 0) = c1[1];
    left.at(0, 1) = c2[0];
    left.at(1, 1) = c2[1];
    act[x] = left.transpose(); // transpose turns the left action into a right one
  }
  return Representation::make(alg, "S3 standard", std::move(act));
}

Representation regular_rep(const BasedAlgebra& alg) {
  std::vector<RatMat> act(alg.dim);
  for (int k = 0; k < alg.dim; ++k) act[k] = alg.right_mult(alg.basis_vec(k));
  return Representation::make(alg, alg.name + " regular", std::move(act));
}

} // namespace cosetcat
