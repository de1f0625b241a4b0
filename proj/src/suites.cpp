#include "cosetcat/suites.hpp"

#include "cosetcat/algebra_a.hpp"
#include "cosetcat/category.hpp"
#include "cosetcat/double_d.hpp"
#include "cosetcat/fixtures.hpp"
#include "cosetcat/hopf.hpp"
#include "cosetcat/inner_product.hpp"
#include "cosetcat/matched_pair.hpp"

#include <random>
#include <sstream>

namespace cosetcat {

const char* expectation_name(Expectation e) {
  switch (e) {
    case Expectation::MustPass: return "pass";
    case Expectation::MustFail: return "fail";
    case Expectation::Observed: return "observed";
  }
  return "?";
}

bool RunConfig::builtin(const char* id) const {
  return group_file.empty() && fixture == id;
}

CosetSystem resolve_system(const RunConfig& cfg) {
  GroupSpec spec;
  if (!cfg.group_file.empty()) {
    spec = GroupSpec::load(cfg.group_file);
  } else if (cfg.fixture == "d6") {
    spec = d6_group_spec();
  } else if (cfg.fixture == "s3") {
    spec = s3_group_spec();
  } else {
    fail(ErrCode::InvalidInput,
         "unknown fixture '" + cfg.fixture + "'; builtins are d6 and s3");
  }
  if (!cfg.subgroup.empty()) spec.subgroup = cfg.subgroup;
  if (!cfg.transversal.empty()) spec.transversal = cfg.transversal;
  return CosetSystem::from_spec(spec);
}

Json CheckVerdict::to_json() const {
  Json j;
  j["identity"] = identity;
  j["expected"] = expectation_name(expected);
  j["passed"] = passed;
  j["ok"] = ok;
  j["checked"] = checked;
  j["failures"] = failures;
  j["witnesses"] = witnesses;
  return j;
}

bool SuiteResult::ok() const {
  if (skipped) return true;
  for (const CheckVerdict& v : verdicts)
    if (!v.ok) return false;
  return true;
}

Json SuiteResult::to_json() const {
  Json j;
  j["id"] = id;
  j["statement"] = statement;
  if (skipped) {
    j["skipped"] = true;
    j["skip_reason"] = skip_reason;
    return j;
  }
  j["ok"] = ok();
  Json checks = Json::array();
  for (const CheckVerdict& v : verdicts) checks.push_back(v.to_json());
  j["checks"] = checks;
  return j;
}

namespace {

CheckVerdict verdict_of(const CheckResult& c, Expectation e) {
  CheckVerdict v;
  v.identity = c.identity;
  v.expected = e;
  v.passed = c.passed;
  v.ok = e == Expectation::Observed ? true
         : e == Expectation::MustPass ? c.passed
                                      : !c.passed;
  v.checked = c.checked;
  v.failures = c.failures;
  v.witnesses = c.witnesses;
  return v;
}

void add_report(SuiteResult& out, const Report& r,
                Expectation e = Expectation::MustPass) {
  for (const CheckResult& c : r.checks) out.verdicts.push_back(verdict_of(c, e));
}

void add_check(SuiteResult& out, CheckBuilder& c,
               Expectation e = Expectation::MustPass) {
  Report r;
  r.checks.push_back(c.done());
  add_report(out, r, e);
}

SuiteResult suite_matched_pair(const RunConfig& cfg) {
  SuiteResult out;
  out.id = "matched-pair";
  out.statement =
      "The coset factorization x = u s induces actions ltri/rtri, a product "
      "dot and a cocycle tau satisfying every defining matched-pair identity.";
  CosetStructure st{resolve_system(cfg)};
  add_report(out, verify_matched_pair(st));

  // optional assumptions: fixture-dependent facts, reported but not gating
  // (the absorption law fails on d6 while every identity above still holds)
  AssumptionReport ar = check_assumptions(st);
  CheckBuilder sll("optional assumption: s^{LL} = s");
  sll.expect(ar.s_ll_identity, [&] { return Json{{"witnesses", ar.s_ll_witnesses}}; });
  add_check(out, sll, Expectation::Observed);
  CheckBuilder absorb("optional assumption: s^L rtri (s rtri u) = u");
  absorb.expect(ar.l_absorb, [&] { return Json{{"witnesses", ar.l_absorb_witnesses}}; });
  add_check(out, absorb, Expectation::Observed);
  CheckBuilder rtot("optional assumption: right inverses s^R exist for every s");
  rtot.expect(ar.rinv_total, [&] { return Json{{"missing", ar.rinv_witnesses}}; });
  add_check(out, rtot, Expectation::Observed);
  return out;
}

SuiteResult suite_algebra_a(const RunConfig& cfg) {
  SuiteResult out;
  out.id = "algebra-a";
  out.statement =
      "A = span(delta_s (x) u) is an associative unital algebra, "
      "rho = sum_u delta_e (x) u is a normalized two-sided integral, and the "
      "structure maps M and P obey their grade, involution and module laws.";
  AlgebraA A{CosetStructure(resolve_system(cfg))};
  add_report(out, A.based().verify_associative_unital());
  add_report(out, A.verify_integral(A.rho_normalized(), true));
  add_report(out, A.verify_p());
  return out;
}

SuiteResult suite_double_d(const RunConfig& cfg) {
  SuiteResult out;
  out.id = "double-d";
  out.statement =
      "Grades on D obey the product identity, and mu o Psi agrees with mu "
      "exactly on the closed-form locus  -- on the D6 fixture the two differ, "
      "so D is not braided-commutative.";
  CosetSystem sys = resolve_system(cfg);
  TauTilde tt = cfg.tau_tilde.empty() ? TauTilde::trivial(sys)
                                      : TauTilde::load(cfg.tau_tilde, sys);
  DoubleD D{CosetStructure(sys), tt};
  {
    // basis products have at most one term, so the sparse element form keeps
    // the full triple sweep cheap even at dim |X|^2
    CheckBuilder c("D is associative with two-sided unit sum_y delta_y (x) e");
    auto be = [&](int k) {
      DElem x;
      x.add(D.basis(k), 1);
      return x;
    };
    DElem one = D.unit();
    for (int i = 0; i < D.dim(); ++i) {
      c.expect(D.mul(one, be(i)) == be(i));
      c.expect(D.mul(be(i), one) == be(i));
    }
    for (int i = 0; i < D.dim(); ++i)
      for (int j = 0; j < D.dim(); ++j) {
        DElem ij = D.mul(be(i), be(j));
        for (int k = 0; k < D.dim(); ++k)
          c.expect(D.mul(ij, be(k)) == D.mul(be(i), D.mul(be(j), be(k))), [&] {
            return Json{{"i", D.to_string(be(i))},
                        {"j", D.to_string(be(j))},
                        {"k", D.to_string(be(k))}};
          });
      }
    add_check(out, c);
  }

  // the commutativity comparison itself: expected to fail on the builtin
  // fixtures, observed elsewhere
  bool known = cfg.builtin("d6") || cfg.builtin("s3");
  Report comm = D.commutativity_report();
  for (const CheckResult& c : comm.checks) {
    bool comparison = c.identity.rfind("grade identity", 0) != 0;
    Expectation e = !comparison ? Expectation::MustPass
                    : known     ? Expectation::MustFail
                                : Expectation::Observed;
    out.verdicts.push_back(verdict_of(c, e));
  }
  if (cfg.builtin("d6")) add_report(out, d6_delta_condition(D));
  return out;
}

SuiteResult suite_category(const RunConfig& cfg) {
  SuiteResult out;
  out.id = "category";
  out.statement =
      "Composites of two type-B morphisms are type A, phi boxtimes psi is "
      "type B, the braiding Psi is invertible, and "
      "Psi o (psi boxtimes phi) = (phi boxtimes psi) o Psi^{-1} holds on "
      "every basis pair.";
  CosetStructure st{resolve_system(cfg)};
  AlgebraA A{st};
  CObject V = a_object(A);
  DObject XC = x_conj_object(st);
  std::mt19937_64 rng(cfg.seed);

  {
    SparseOp p = psi_op(XC, XC), q = psi_inv_op(XC, XC);
    int nn = XC.dim() * XC.dim();
    RatMat qp = sparse_to_dense(sparse_compose(q, p), nn);
    RatMat pq = sparse_to_dense(sparse_compose(p, q), nn);
    CheckBuilder c("Psi^{-1} o Psi = id = Psi o Psi^{-1} on X-conj (x) X-conj");
    c.expect(qp.is_identity());
    c.expect(pq.is_identity());
    add_check(out, c);
  }
  {
    std::vector<RatMat> bb = morphism_space_d(XC, XC, true);
    RatMat phi = sample_map(bb, rng), psi = sample_map(bb, rng);
    add_report(out, verify_main_identity(XC, XC, XC, XC, phi, psi));
  }
  std::vector<RatMat> vb = morphism_space(V, V, true);
  {
    CheckBuilder c("composites of two type-B endomorphisms of A are type A");
    for (int k = 0; k < 12; ++k) {
      RatMat phi = sample_map(vb, rng), psi = sample_map(vb, rng);
      MapClass cls = classify(V, V, phi * psi);
      c.expect(cls.type_a, [&] { return Json{{"a_witnesses", cls.a_witnesses}}; });
    }
    add_check(out, c);
  }
  {
    CheckBuilder c("phi boxtimes psi is a type-B morphism A (x) A -> A (x) A");
    CObject VV = tensor_c(V, V);
    for (int k = 0; k < 4; ++k) {
      RatMat phi = sample_map(vb, rng), psi = sample_map(vb, rng);
      RatMat m = sparse_to_dense(boxtimes_c(V, V, V, V, phi, psi), VV.dim());
      MapClass cls = classify(VV, VV, m);
      c.expect(cls.type_b, [&] { return Json{{"b_witnesses", cls.b_witnesses}}; });
    }
    add_check(out, c);
  }
  if (st.rinv_total()) {
    CObject BV = bar_object(V);
    CObject BBV = bar_object(BV);
    RatMat om = omega_matrix(V);
    CheckBuilder c("Bar recasts type-B maps as type-A maps and Omega: Bar^2 -> id is type A");
    c.expect(classify(BBV, V, om).type_a);
    std::vector<RatMat> va = morphism_space(V, V, false);
    for (int k = 0; k < 6; ++k) {
      RatMat phi = sample_map(vb, rng);
      c.expect(classify(V, BV, phi).type_a);
      c.expect(om * phi == phi * om);
      RatMat a = sample_map(va, rng);
      c.expect(om * a == a * om);
    }
    add_check(out, c);
  }
  return out;
}

SuiteResult suite_inner_product(const RunConfig& cfg) {
  SuiteResult out;
  out.id = "inner-product";
  out.statement =
      "phi(delta_s (x) u) = s (x) delta_u is a type-B morphism A -> A*, its "
      "Gram matrix is the identity, and the evaluation pairing is invariant "
      "under the paired actions.";
  AlgebraA A{CosetStructure(resolve_system(cfg))};
  add_report(out, verify_inner_product(A));
  return out;
}

SuiteResult suite_hopf_classical(const RunConfig& cfg) {
  SuiteResult out;
  out.id = "hopf-classical";
  out.statement =
      "Over k[S3] the braided average t0 of a linear map reproduces the "
      "classical group average, projects onto module morphisms, and equals "
      "(trace t / dim) id on the irreducible standard module.";
  CosetSystem sys = build_s3();
  const FiniteGroup& X = sys.X();
  HopfData kg = group_hopf(X);
  HopfData fn = function_hopf(X);
  {
    CheckBuilder c("k[S3] and k(S3) pass the Hopf axiom battery");
    c.expect(kg.axioms().all_passed());
    c.expect(fn.axioms().all_passed());
    add_check(out, c);
  }
  RatVec cov = operator_integral_covector(kg);
  {
    CheckBuilder c("trace(L_h o S^2) on k[S3] is 6 [h = e]");
    for (Elem x = 0; x < X.order(); ++x)
      c.expect(cov[x] == (x == X.identity() ? Rat(6) : Rat(0)),
               [&] { return Json{{"h", X.label(x)}, {"got", rat_str(cov[x])}}; });
    add_check(out, c);
  }
  add_report(out, check_left_integral(kg, cov));
  add_report(out, check_right_integral(kg, cov));

  RatVec lam(6, rat(1, 6));
  add_report(out, check_integral_element(kg.alg, kg.counit, lam, true));

  Representation V = s3_standard_rep(X, kg.alg);
  Representation reg = regular_rep(kg.alg);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  auto rnd = [&](int r, int cdim) {
    RatMat m(r, cdim);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cdim; ++j) m.at(i, j) = dist(rng);
    return m;
  };
  {
    CheckBuilder c("t0 equals the classical group average on k[S3]-modules");
    for (int k = 0; k < 20; ++k) {
      RatMat t = rnd(2, 2);
      c.expect(t_average(kg, lam, V, V, t) == group_average(t, V.act));
      RatMat s = rnd(6, 6);
      c.expect(t_average(kg, lam, reg, reg, s) == group_average(s, reg.act));
    }
    add_check(out, c);
  }
  {
    CheckBuilder c("averaging projects onto module morphisms");
    for (int k = 0; k < 10; ++k) {
      RatMat s0 = t_average(kg, lam, reg, reg, rnd(6, 6));
      c.expect(t_average(kg, lam, reg, reg, s0) == s0);
      bool equivariant = true;
      for (Elem g = 0; g < 6; ++g)
        if (!(s0 * reg.act[g] == reg.act[g] * s0)) equivariant = false;
      c.expect(equivariant);
    }
    add_check(out, c);
  }
  {
    CheckBuilder c("on the standard module t0 = (trace t / 2) id");
    c.expect(commutant_dimension(V) == 1);
    for (int k = 0; k < 20; ++k) {
      RatMat t = rnd(2, 2);
      c.expect(schur_scalar(kg, lam, V, t) == t.trace() / Rat(2));
    }
    add_check(out, c);
  }
  // cocommutative coproduct, noncommutative product: the mu o Psi detector
  // must flag k[S3]
  SparseOp flip = flip_braiding(6);
  Report dop = delta_op_checks(kg, flip, flip);
  for (const CheckResult& c : dop.checks) {
    bool mu_check = c.identity.rfind("mu o Psi", 0) == 0;
    out.verdicts.push_back(
        verdict_of(c, mu_check ? Expectation::MustFail : Expectation::MustPass));
  }
  return out;
}

SuiteResult suite_hopf_double(const RunConfig& cfg) {
  SuiteResult out;
  out.id = "hopf-double";
  out.statement =
      "The supplied coproduct on D is a Hopf structure whose operator "
      "integral trace(L_h o S^2) is a left integral; at least one "
      "braided-opposite coproduct candidate is cocommutative, while on the "
      "D6 fixture mu o Psi differs from mu.";
  if (cfg.hopf_data.empty()) {
    out.skipped = true;
    out.skip_reason = "no --hopf-data file supplied";
    return out;
  }
  CosetSystem sys = resolve_system(cfg);
  TauTilde tt = cfg.tau_tilde.empty() ? TauTilde::trivial(sys)
                                      : TauTilde::load(cfg.tau_tilde, sys);
  DoubleD D{CosetStructure(sys), tt};
  BasedAlgebra alg = D.based();

  HopfData hd;
  bool axioms_ok = true;
  std::string axioms_msg;
  try {
    hd = HopfData::load(cfg.hopf_data, alg);
  } catch (const Error& e) {
    if (e.code != ErrCode::AxiomViolation && e.code != ErrCode::DimensionMismatch) throw;
    axioms_ok = false;
    axioms_msg = e.what();
  }
  {
    CheckBuilder c("supplied coproduct, counit and antipode are Hopf data for D");
    c.expect(axioms_ok, [&] { return Json{{"error", axioms_msg}}; });
    add_check(out, c);
  }
  if (!axioms_ok) return out;
  {
    CheckBuilder c("supplied counit agrees with eps(delta_y (x) x) = [y = e]");
    c.expect(hd.counit == D.candidate_counit_vec());
    add_check(out, c, Expectation::Observed);
  }
  try {
    add_report(out, check_left_integral(hd, operator_integral_covector(hd)));
  } catch (const Error& e) {
    CheckBuilder c("(id (x) int) o Delta = eta o int");
    c.expect(false, [&] { return Json{{"error", e.what()}}; });
    add_check(out, c);
  }

  DObject Dd = d_object(D);
  Report dop = delta_op_checks(hd, psi_op(Dd, Dd), psi_inv_op(Dd, Dd));
  bool any_cocomm = false;
  for (const CheckResult& c : dop.checks) {
    bool mu_check = c.identity.rfind("mu o Psi", 0) == 0;
    bool cocomm = c.identity.find("cocommutative") != std::string::npos;
    if (cocomm && c.passed) any_cocomm = true;
    Expectation e = mu_check
                        ? (cfg.builtin("d6") ? Expectation::MustFail : Expectation::Observed)
                        : Expectation::Observed;
    out.verdicts.push_back(verdict_of(c, e));
  }
  {
    CheckBuilder c("at least one candidate Delta-op is cocommutative");
    c.expect(any_cocomm);
    add_check(out, c);
  }
  return out;
}

} // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "matched-pair", "algebra-a",      "double-d",   "category",
      "inner-product", "hopf-classical", "hopf-double"};
  return ids;
}

SuiteResult run_suite(const std::string& id, const RunConfig& cfg) {
  if (id == "matched-pair") return suite_matched_pair(cfg);
  if (id == "algebra-a") return suite_algebra_a(cfg);
  if (id == "double-d") return suite_double_d(cfg);
  if (id == "category") return suite_category(cfg);
  if (id == "inner-product") return suite_inner_product(cfg);
  if (id == "hopf-classical") return suite_hopf_classical(cfg);
  if (id == "hopf-double") return suite_hopf_double(cfg);
  std::ostringstream known;
  for (const std::string& s : suite_ids()) known << " " << s;
  fail(ErrCode::InvalidInput, "unknown suite '" + id + "'; known:" + known.str());
}

namespace {

Json config_json(const RunConfig& cfg) {
  Json j;
  if (cfg.group_file.empty()) {
    j["fixture"] = cfg.fixture;
  } else {
    j["group"] = cfg.group_file;
    if (!cfg.subgroup.empty()) j["subgroup"] = cfg.subgroup;
    if (!cfg.transversal.empty()) j["transversal"] = cfg.transversal;
  }
  j["seed"] = cfg.seed;
  if (!cfg.hopf_data.empty()) j["hopf_data"] = cfg.hopf_data;
  if (!cfg.tau_tilde.empty()) j["tau_tilde"] = cfg.tau_tilde;
  return j;
}

} // namespace

Json run_report_json(const std::vector<SuiteResult>& results, const RunConfig& cfg) {
  Json j;
  j["tool"] = "cosetcat";
  j["config"] = config_json(cfg);
  Json suites = Json::array();
  bool ok = true;
  for (const SuiteResult& r : results) {
    suites.push_back(r.to_json());
    ok = ok && r.ok();
  }
  j["suites"] = suites;
  j["ok"] = ok;
  return j;
}

std::string run_report_markdown(const std::vector<SuiteResult>& results,
                                const RunConfig& cfg) {
  std::ostringstream md;
  md << "# cosetcat report\n\n";
  md << "- source: "
     << (cfg.group_file.empty() ? "fixture " + cfg.fixture : "file " + cfg.group_file)
     << "\n- seed: " << cfg.seed << "\n";
  if (!cfg.hopf_data.empty()) md << "- hopf data: " << cfg.hopf_data << "\n";
  if (!cfg.tau_tilde.empty()) md << "- tau~ table: " << cfg.tau_tilde << "\n";
  for (const SuiteResult& r : results) {
    md << "\n## " << r.id << " -- "
       << (r.skipped ? "SKIPPED" : r.ok() ? "ok" : "MISMATCH") << "\n\n";
    md << r.statement << "\n";
    if (r.skipped) {
      md << "\n" << r.skip_reason << "\n";
      continue;
    }
    md << "\n";
    for (const CheckVerdict& v : r.verdicts) {
      md << "- [" << (v.ok ? "ok" : "MISMATCH") << "] " << v.identity
         << " (expected " << expectation_name(v.expected) << ", "
         << (v.passed ? "passed" : "failed") << ", " << v.checked << " checked";
      if (v.failures > 0) md << ", " << v.failures << " failures";
      md << ")\n";
    }
  }
  bool ok = true;
  for (const SuiteResult& r : results) ok = ok && r.ok();
  md << "\nverdict: " << (ok ? "ok" : "MISMATCH") << "\n";
  return md.str();
}

int verdict_exit_code(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results)
    if (!r.ok()) return 1;
  return 0;
}

Json reproduce_d6_json() {
  DoubleD D{CosetStructure(build_d6())};
  const FiniteGroup& X = D.X();
  std::vector<DeltaConditionRow> rows = d6_delta_rows(D);
  Report cond = d6_delta_condition(D);

  Json j;
  j["example"] = "d6";
  j["claim"] =
      "for xi = delta_{ba^n} (x) ba^m, eta = delta_{ba^p} (x) ba^q the "
      "delta-supports of mu and mu o Psi agree exactly when 2q - 4p + 2m = 0 "
      "(mod 6); the disagreements witness mu o Psi != mu on D(D6)";
  Json table = Json::array();
  long counterexamples = 0, matches = 0;
  for (const DeltaConditionRow& r : rows) {
    Json row;
    row["n"] = r.n;
    row["m"] = r.m;
    row["p"] = r.p;
    row["q"] = r.q;
    row["lhs"] = X.label(r.lhs);
    row["rhs"] = X.label(r.rhs);
    row["equal"] = r.equal;
    row["mod_condition"] = r.mod_condition;
    table.push_back(row);
    if (!r.equal) ++counterexamples;
    if (r.equal == r.mod_condition) ++matches;
  }
  j["rows"] = table;
  j["row_count"] = static_cast<long>(rows.size());
  j["closed_form_matches"] = matches;
  j["counterexamples"] = counterexamples;
  j["closed_form"] = cond.to_json();
  j["ok"] = cond.all_passed() && counterexamples > 0 &&
            matches == static_cast<long>(rows.size());
  return j;
}

bool reproduce_d6_ok(const Json& j) { return j.at("ok").get<bool>(); }

std::string reproduce_d6_markdown() {
  Json j = reproduce_d6_json();
  std::ostringstream md;
  md << "# d6 delta-condition table\n\n" << j["claim"].get<std::string>() << "\n\n";
  md << "| n | m | p | q | lhs | rhs | equal | mod condition |\n";
  md << "|---|---|---|---|-----|-----|-------|---------------|\n";
  for (const Json& r : j["rows"])
    md << "| " << r["n"] << " | " << r["m"] << " | " << r["p"] << " | " << r["q"]
       << " | " << r["lhs"].get<std::string>() << " | " << r["rhs"].get<std::string>()
       << " | " << (r["equal"].get<bool>() ? "yes" : "no") << " | "
       << (r["mod_condition"].get<bool>() ? "yes" : "no") << " |\n";
  md << "\nrows: " << j["row_count"] << ", closed-form matches: "
     << j["closed_form_matches"] << ", counterexamples: " << j["counterexamples"]
     << "\n\nverdict: " << (j["ok"].get<bool>() ? "ok" : "MISMATCH") << "\n";
  return md.str();
}

} // namespace cosetcat
