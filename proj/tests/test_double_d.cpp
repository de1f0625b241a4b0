#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cosetcat/double_d.hpp"
#include "cosetcat/fixtures.hpp"

using namespace cosetcat;

namespace {

DElem basis_elem(DBasis b) {
  DElem x;
  x.add(b, 1);
  return x;
}

DoubleD strict_d(const GroupSpec& spec) {
  return DoubleD{CosetStructure(CosetSystem::from_spec(spec))};
}

DoubleD trivial_d(const GroupSpec& spec) {
  CosetSystem cs = CosetSystem::from_spec(spec);
  TauTilde tt = TauTilde::trivial(cs);
  return DoubleD{CosetStructure(cs), tt};
}

} // namespace

TEST_CASE("norm grade satisfies its defining relation on every basis element") {
  for (auto spec : {d6_group_spec(), s3_group_spec(), s3_flip_subgroup_spec()}) {
    DoubleD D = strict_d(spec);
    const FiniteGroup& X = D.X();
    const CosetSystem& cs = D.structure().system();
    INFO(spec.name);
    for (int k = 0; k < D.dim(); ++k) {
      DBasis b = D.basis(k);
      XGrade g = D.norm_grade(b.y, b.x);
      CHECK(g.full == X.mul(X.conj(b.y, b.x), X.inv(b.y)));
      CHECK(cs.in_G(X.inv(g.gabs)));
      CHECK(cs.in_M(g.mpart));
      CHECK(X.mul(X.inv(g.gabs), g.mpart) == g.full);
      XGrade h = D.norm_grade_of(g.full);
      CHECK(h.full == g.full);
      CHECK(h.gabs == g.gabs);
      CHECK(h.mpart == g.mpart);
      CHECK(D.index(b) == k);
    }
  }
}

TEST_CASE("d6 grading table in closed form") {
  DoubleD D = strict_d(d6_group_spec());
  const FiniteGroup& X = D.X();
  auto rot = [&](int k) {
    k = (k % 6 + 6) % 6;
    return X.elem(k == 0 ? "e" : (k == 1 ? "a" : "a" + std::to_string(k)));
  };
  auto ref = [&](int k) {
    k = (k % 6 + 6) % 6;
    return X.elem(k == 0 ? "b" : (k == 1 ? "ba" : "ba" + std::to_string(k)));
  };
  for (int n = 0; n < 6; ++n)
    for (int m = 0; m < 6; ++m) {
      // the 36-entry reflection table plus the three remaining sectors
      CHECK(D.norm_grade(ref(n), ref(m)).full == rot(2 * n - 2 * m));
      CHECK(D.norm_grade(ref(n), rot(m)).full == rot(-2 * m));
      CHECK(D.norm_grade(rot(n), ref(m)).full == rot(-2 * n));
      CHECK(D.norm_grade(rot(n), rot(m)).full == X.identity());
    }
  // every full grade is an even rotation, hence lies in G with trivial M-part
  for (int k = 0; k < D.dim(); ++k) {
    DBasis b = D.basis(k);
    XGrade g = D.norm_grade(b.y, b.x);
    CHECK(D.structure().system().in_G(g.full));
    CHECK(g.mpart == X.identity());
  }
}

TEST_CASE("rtri~ unit law, dual form, and full-grade cocycle") {
  for (auto spec : {d6_group_spec(), s3_group_spec(), s3_flip_subgroup_spec()}) {
    DoubleD D = strict_d(spec);
    const FiniteGroup& X = D.X();
    const CosetSystem& cs = D.structure().system();
    INFO(spec.name);
    for (Elem z = 0; z < X.order(); ++z) {
      CHECK(D.tilde_rtri(z, X.identity()) == X.identity());
      for (Elem c = 0; c < X.order(); ++c) {
        // dual form: v^{-1} c v' = t c t'^{-1}
        Elem t = cs.factor(z).s;
        Elem tp = cs.factor(X.conj(z, c)).s;
        CHECK(D.tilde_rtri(z, c) == X.mul(X.mul(t, c), X.inv(tp)));
        for (Elem p = 0; p < X.order(); ++p) {
          Elem lhs = D.tilde_rtri(z, X.mul(c, p));
          Elem rhs = X.mul(D.tilde_rtri(z, c), D.tilde_rtri(X.conj(z, c), p));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("hat action: identity, conjugation oracle, composition, grade covariance") {
  // Full grades are commutators, so they lie in the derived subgroup X'. On
  // d6/s3 X' sits inside G; on the flip fixture X' = M = A3 is normal. Either
  // way the twist b rtri~ chi collapses to chi, so plain conjugation in both
  // slots is an independent oracle for hat_act on these fixtures.
  for (auto spec : {d6_group_spec(), s3_group_spec(), s3_flip_subgroup_spec()}) {
    DoubleD D = strict_d(spec);
    const FiniteGroup& X = D.X();
    INFO(spec.name);
    for (int k = 0; k < D.dim(); ++k) {
      DBasis b = D.basis(k);
      CHECK(D.hat_act(basis_elem(b), X.identity()) == basis_elem(b));
      for (Elem c = 0; c < X.order(); ++c) {
        DElem got = D.hat_act(basis_elem(b), c);
        CHECK(got == basis_elem(DBasis{X.conj(b.y, c), X.conj(b.x, c)}));
        REQUIRE(got.terms.size() == 1);
        DBasis nb = got.terms.begin()->first;
        CHECK(D.norm_grade(nb.y, nb.x).full == X.conj(D.norm_grade(b.y, b.x).full, c));
        for (Elem p = 0; p < X.order(); ++p)
          CHECK(D.hat_act(got, p) == D.hat_act(basis_elem(b), X.mul(c, p)));
      }
    }
  }
}

TEST_CASE("hat action is linear and additive") {
  DoubleD D = strict_d(d6_group_spec());
  const FiniteGroup& X = D.X();
  DElem x = basis_elem(D.basis(3)) + rat(2, 3) * basis_elem(D.basis(77));
  Elem c = X.elem("ba3");
  DElem lhs = D.hat_act(x, c);
  DElem rhs = D.hat_act(basis_elem(D.basis(3)), c) +
              rat(2, 3) * D.hat_act(basis_elem(D.basis(77)), c);
  CHECK(lhs == rhs);
}

TEST_CASE("strict mode: products need a tau~ table") {
  DoubleD D = strict_d(d6_group_spec());
  CHECK(!D.has_tau_tilde());
  CHECK_THROWS_AS(D.mul(D.unit(), D.unit()), Error);
  try {
    D.mul(basis_elem(D.basis(0)), basis_elem(D.basis(0)));
    FAIL("expected TauTildeMissing");
  } catch (const Error& e) {
    CHECK(e.code == ErrCode::TauTildeMissing);
  }
  try {
    D.based();
    FAIL("expected TauTildeMissing");
  } catch (const Error& e) {
    CHECK(e.code == ErrCode::TauTildeMissing);
  }
  // grades and the hat action still work
  CHECK(D.hat_act(D.unit(), D.X().elem("a")) == D.unit());
  CHECK(D.commutativity_report().checks.size() == 2);
}

TEST_CASE("trivial table: product support rule, unit, associativity") {
  DoubleD D = trivial_d(d6_group_spec());
  const FiniteGroup& X = D.X();
  CHECK(D.has_tau_tilde());
  DElem one = D.unit();
  for (int i = 0; i < D.dim(); ++i) {
    DBasis bi = D.basis(i);
    CHECK(D.mul(one, basis_elem(bi)) == basis_elem(bi));
    CHECK(D.mul(basis_elem(bi), one) == basis_elem(bi));
    for (int j = 0; j < D.dim(); ++j) {
      DBasis bj = D.basis(j);
      DElem got = D.mul(basis_elem(bi), basis_elem(bj));
      // oracle: with tau~ = e the product is [w = y conj x] delta_y (x) xz
      DElem want;
      if (bj.y == X.conj(bi.y, bi.x)) want.add(DBasis{bi.y, X.mul(bi.x, bj.x)}, 1);
      CHECK(got == want);
    }
  }
  // associativity on all basis triples (products have at most one term)
  for (int i = 0; i < D.dim(); ++i)
    for (int j = 0; j < D.dim(); ++j) {
      DElem ij = D.mul(basis_elem(D.basis(i)), basis_elem(D.basis(j)));
      for (int k = 0; k < D.dim(); ++k) {
        DElem lhs = D.mul(ij, basis_elem(D.basis(k)));
        DElem rhs = D.mul(basis_elem(D.basis(i)),
                          D.mul(basis_elem(D.basis(j)), basis_elem(D.basis(k))));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("trivial table on s3 gives an associative unital based algebra") {
  DoubleD D = trivial_d(s3_group_spec());
  BasedAlgebra alg = D.based();
  CHECK(alg.dim == 36);
  CHECK(alg.verify_associative_unital().all_passed());
}

TEST_CASE("tau~ table validation") {
  CosetSystem cs = CosetSystem::from_spec(d6_group_spec());
  const FiniteGroup& X = cs.X();
  auto full_trivial = [&] {
    std::map<std::pair<Elem, Elem>, Elem> t;
    for (Elem a = 0; a < X.order(); ++a)
      for (Elem b = 0; b < X.order(); ++b) t[{a, b}] = X.identity();
    return t;
  };

  SUBCASE("value outside G") {
    auto t = full_trivial();
    t[{X.elem("a"), X.elem("ba")}] = X.elem("a"); // a is not in G
    try {
      TauTilde::from_table(cs, t);
      FAIL("expected AxiomViolation");
    } catch (const Error& e) {
      CHECK(e.code == ErrCode::AxiomViolation);
    }
  }
  SUBCASE("unit row violated") {
    auto t = full_trivial();
    t[{X.identity(), X.elem("ba")}] = X.elem("a2");
    try {
      TauTilde::from_table(cs, t);
      FAIL("expected AxiomViolation");
    } catch (const Error& e) {
      CHECK(e.code == ErrCode::AxiomViolation);
    }
  }
  SUBCASE("partial table") {
    auto t = full_trivial();
    t.erase({X.elem("a3"), X.elem("b")});
    try {
      TauTilde::from_table(cs, t);
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.code == ErrCode::InvalidInput);
    }
  }
  SUBCASE("label out of range") {
    auto t = full_trivial();
    t[{99, 0}] = 0;
    CHECK_THROWS_AS(TauTilde::from_table(cs, t), Error);
  }
  SUBCASE("nontrivial G-valued table with unit rows is accepted") {
    // tau~(x1, x2) = a^{2 j1 j2} where j is the rotation exponent
    auto expo = [&](Elem x) {
      std::string l = X.label(x);
      size_t i = l.find_first_of("0123456789");
      if (l == "e" || l == "b") return 0;
      if (l == "a" || l == "ba") return 1;
      return std::stoi(l.substr(i));
    };
    std::map<std::pair<Elem, Elem>, Elem> t;
    for (Elem a = 0; a < X.order(); ++a)
      for (Elem b = 0; b < X.order(); ++b) {
        int k = (2 * expo(a) * expo(b)) % 6;
        t[{a, b}] = X.elem(k == 0 ? "e" : "a" + std::to_string(k));
      }
    TauTilde tt = TauTilde::from_table(cs, t);
    CHECK(tt(X.elem("a"), X.elem("a")) == X.elem("a2"));
    CHECK(tt(X.identity(), X.elem("ba5")) == X.identity());
    // a two-sided unit follows from the unit rows alone, so table-mode
    // construction succeeds even for this ad-hoc table
    DoubleD D{CosetStructure(cs), tt};
    CHECK(D.mul(D.unit(), basis_elem(D.basis(17))) == basis_elem(D.basis(17)));
  }
}

TEST_CASE("tau~ JSON parsing") {
  CosetSystem cs = CosetSystem::from_spec(s3_group_spec());
  const FiniteGroup& X = cs.X();

  SUBCASE("round trip through a file") {
    Json j;
    j["entries"] = Json::array();
    for (Elem a = 0; a < X.order(); ++a)
      for (Elem b = 0; b < X.order(); ++b)
        j["entries"].push_back(
            Json{{"a", X.label(a)}, {"b", X.label(b)}, {"value", "e"}});
    std::string path = "tau_tilde_test_tmp.json";
    std::ofstream(path) << j.dump();
    TauTilde tt = TauTilde::load(path, cs);
    CHECK(tt(X.elem("(123)"), X.elem("(12)")) == X.identity());
    std::remove(path.c_str());
  }
  SUBCASE("missing entries key") {
    CHECK_THROWS_AS(TauTilde::parse(Json{{"rows", 1}}, cs), Error);
    try {
      TauTilde::parse(Json::array(), cs);
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.code == ErrCode::InvalidInput);
    }
  }
  SUBCASE("entry missing a field") {
    Json j{{"entries", Json::array({Json{{"a", "e"}, {"b", "e"}}})}};
    try {
      TauTilde::parse(j, cs);
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.code == ErrCode::InvalidInput);
    }
  }
  SUBCASE("conflicting duplicate entry") {
    Json j;
    j["entries"] = Json::array();
    for (Elem a = 0; a < X.order(); ++a)
      for (Elem b = 0; b < X.order(); ++b)
        j["entries"].push_back(
            Json{{"a", X.label(a)}, {"b", X.label(b)}, {"value", "e"}});
    j["entries"].push_back(Json{{"a", "(123)"}, {"b", "(12)"}, {"value", "(123)"}});
    try {
      TauTilde::parse(j, cs);
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.code == ErrCode::InvalidInput);
    }
  }
  SUBCASE("unknown label") {
    Json j{{"entries", Json::array({Json{{"a", "zz"}, {"b", "e"}, {"value", "e"}}})}};
    CHECK_THROWS_AS(TauTilde::parse(j, cs), Error);
  }
  SUBCASE("missing file") {
    try {
      TauTilde::load("does_not_exist_tau.json", cs);
      FAIL("expected InvalidInput");
    } catch (const Error& e) {
      CHECK(e.code == ErrCode::InvalidInput);
    }
  }
}

TEST_CASE("commutativity report: abelian double is braided-commutative") {
  DoubleD D = trivial_d(cyclic_group_spec(4));
  Report rep = D.commutativity_report();
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.all_passed());
}

TEST_CASE("commutativity report on d6: grade identity holds, delta supports do not") {
  DoubleD D = trivial_d(d6_group_spec());
  Report rep = D.commutativity_report();
  REQUIRE(rep.checks.size() == 3);

  const CheckResult* grade = rep.find(
      "grade identity: (a rtri~ |eta|)(<xi> ltri |eta|) = <xi> |eta|");
  REQUIRE(grade != nullptr);
  CHECK(grade->passed);
  CHECK(grade->checked == 144 * 144);

  const CheckResult* supp = rep.find("delta supports of mu and mu o Psi agree");
  REQUIRE(supp != nullptr);
  CHECK(!supp->passed);
  // 288 of these lie in the all-reflections sector: with both basis pairs of
  // the form (delta_{ba^n} (x) ba^m, delta_{ba^p} (x) ba^q) the left support
  // condition is n = 2m - p and the right one is n = 3p - 2q (mod 6); each
  // holds alone on 144 quadruples. The remaining sectors are machine counts.
  CHECK(supp->failures == 1728);
  CHECK(supp->witnesses.size() == CheckBuilder::kMaxWitnesses);

  const CheckResult* full = rep.find("full product: mu(xi, eta) = mu(Psi(xi (x) eta))");
  REQUIRE(full != nullptr);
  CHECK(!full->passed);
}

TEST_CASE("commutativity report on s3 also fails (observed, not part of the d6 claim)") {
  DoubleD D = trivial_d(s3_group_spec());
  Report rep = D.commutativity_report();
  const CheckResult* supp = rep.find("delta supports of mu and mu o Psi agree");
  REQUIRE(supp != nullptr);
  CHECK(!supp->passed);
  CHECK(supp->failures == 216);
}

TEST_CASE("d6 delta rows: closed forms and the mod-6 condition") {
  DoubleD D = strict_d(d6_group_spec());
  const FiniteGroup& X = D.X();
  auto ref = [&](int k) {
    k = (k % 6 + 6) % 6;
    return X.elem(k == 0 ? "b" : (k == 1 ? "ba" : "ba" + std::to_string(k)));
  };
  auto rows = d6_delta_rows(D);
  REQUIRE(rows.size() == 1296);
  long equal = 0;
  for (const auto& r : rows) {
    CHECK(r.lhs == ref(r.q - r.p + r.m));
    CHECK(r.rhs == ref(3 * r.p - r.q - r.m));
    CHECK(r.equal == r.mod_condition);
    if (r.equal) ++equal;
  }
  CHECK(equal == 432);

  // hand-checked rows
  auto row = [&](int n, int m, int p, int q) -> const DeltaConditionRow& {
    return rows[((n * 6 + m) * 6 + p) * 6 + q];
  };
  CHECK(row(0, 0, 0, 0).equal);
  CHECK(!row(0, 0, 0, 1).equal);
  CHECK(row(0, 0, 0, 1).lhs == ref(1));
  CHECK(row(0, 0, 0, 1).rhs == ref(5));
  CHECK(!row(0, 0, 1, 0).equal);
  CHECK(row(0, 0, 1, 0).lhs == ref(5));
  CHECK(row(0, 0, 1, 0).rhs == ref(3));

  Report rep = d6_delta_condition(D);
  CHECK(rep.all_passed());
  const CheckResult* wit =
      rep.find("the condition fails somewhere (noncommutativity witness exists)");
  REQUIRE(wit != nullptr);
  REQUIRE(wit->witnesses.size() == 1);
  CHECK(wit->witnesses[0]["n"] == 0);
  CHECK(wit->witnesses[0]["m"] == 0);
  CHECK(wit->witnesses[0]["p"] == 0);
  CHECK(wit->witnesses[0]["q"] == 1);
}

TEST_CASE("d6 delta analysis rejects other fixtures") {
  DoubleD D = strict_d(s3_group_spec());
  try {
    d6_delta_rows(D);
    FAIL("expected InvalidInput");
  } catch (const Error& e) {
    CHECK(e.code == ErrCode::InvalidInput);
  }
}

TEST_CASE("candidate counit vector and printing") {
  DoubleD D = strict_d(s3_group_spec());
  const FiniteGroup& X = D.X();
  RatVec eps = D.candidate_counit_vec();
  Rat total(0);
  for (int k = 0; k < D.dim(); ++k) {
    total += eps[k];
    CHECK(eps[k] == (D.basis(k).y == X.identity() ? 1 : 0));
  }
  CHECK(total == 6);

  DElem x = basis_elem(DBasis{X.elem("(12)"), X.elem("(123)")});
  CHECK(D.to_string(x) == "1 * d[(12)]⊗(123)");
  CHECK(D.to_string(DElem{}) == "0");
  CHECK(D.to_string(rat(-1, 2) * x) == "-1/2 * d[(12)]⊗(123)");
}
