#include "cosetcat/algebra_a.hpp"

#include <sstream>

namespace cosetcat {

AElem& AElem::add(ABasis b, const Rat& c) {
  if (c == 0) return *this;
  auto [it, fresh] = terms.emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

AElem operator+(const AElem& x, const AElem& y) {
  AElem r = x;
  for (const auto& [b, c] : y.terms) r.add(b, c);
  return r;
}

AElem operator-(const AElem& x, const AElem& y) {
  AElem r = x;
  for (const auto& [b, c] : y.terms) r.add(b, -c);
  return r;
}

AElem operator*(const Rat& c, const AElem& x) {
  AElem r;
  for (const auto& [b, v] : x.terms) r.add(b, c * v);
  return r;
}

AlgebraA::AlgebraA(CosetStructure st) : st_(std::move(st)) {
  const auto& M = st_.system().M();
  const auto& G = st_.system().G();
  dim_ = static_cast<int>(M.size() * G.size());
  for (Elem s : M)
    for (Elem u : G) {
      ABasis b{s, u};
      index_[b] = static_cast<int>(basis_.size());
      basis_.push_back(b);
      // the unique a in M with dot(s, a) = s ltri u
      Elem target = st_.ltri(s, u);
      Elem found = -1;
      int count = 0;
      for (Elem cand : M)
        if (st_.dot(s, cand) == target) {
          found = cand;
          ++count;
        }
      if (count != 1)
        fail(ErrCode::AmbiguousGrade,
             "grade of d[" + X().label(s) + "](x)" + X().label(u) + " has " +
                 std::to_string(count) + " solutions a in M of dot(s,a) = s ltri u");
      grade_[b] = found;
    }
}

void AlgebraA::check_key(ABasis b, const char* who) const {
  if (index_.find(b) == index_.end())
    fail(ErrCode::InvalidInput, std::string(who) + ": (" + X().label(b.s) + ", " +
                                    X().label(b.u) + ") is not an A-basis label");
}

ABasis AlgebraA::basis(int k) const {
  if (k < 0 || k >= dim_) fail(ErrCode::InvalidInput, "A-basis index out of range");
  return basis_[k];
}

int AlgebraA::index(ABasis b) const {
  check_key(b, "index");
  return index_.at(b);
}

Elem AlgebraA::grade(ABasis b) const {
  check_key(b, "grade");
  return grade_.at(b);
}

Elem AlgebraA::grade_of(const AElem& x) const {
  if (x.is_zero()) fail(ErrCode::InvalidInput, "grade of the zero element");
  Elem g = -1;
  for (const auto& [b, c] : x.terms) {
    Elem gb = grade(b);
    if (g >= 0 && gb != g)
      fail(ErrCode::InvalidInput, "element is not homogeneous");
    g = gb;
  }
  return g;
}

AElem AlgebraA::mul(const AElem& x, const AElem& y) const {
  const FiniteGroup& Xg = X();
  AElem r;
  for (const auto& [h1, c1] : x.terms) {
    check_key(h1, "mul");
    Elem a = grade_.at(h1);
    Elem target = st_.ltri(h1.s, h1.u);
    for (const auto& [h2, c2] : y.terms) {
      check_key(h2, "mul");
      if (h2.s != target) continue;
      Elem b = grade_.at(h2);
      Elem t = st_.tau(a, b);
      ABasis out{st_.ltri(h1.s, t), Xg.mul(Xg.inv(t), Xg.mul(h1.u, h2.u))};
      r.add(out, c1 * c2);
    }
  }
  return r;
}

Rat AlgebraA::counit(const AElem& x) const {
  Rat r = 0;
  for (const auto& [b, c] : x.terms) {
    check_key(b, "counit");
    if (b.s == X().identity()) r += c;
  }
  return r;
}

AElem AlgebraA::act(const AElem& x, Elem v) const {
  if (!st_.system().in_G(v))
    fail(ErrCode::InvalidInput, "act: " + X().label(v) + " is not in G");
  const FiniteGroup& Xg = X();
  AElem r;
  for (const auto& [b, c] : x.terms) {
    check_key(b, "act");
    Elem w = st_.rtri(grade_.at(b), v); // a rtri v
    r.add(ABasis{st_.ltri(b.s, w), Xg.mul(Xg.inv(w), Xg.mul(b.u, v))}, c);
  }
  return r;
}

AElem AlgebraA::act_module(const AElem& xi, const AElem& alpha) const {
  AElem r;
  for (const auto& [b, c] : xi.terms) {
    check_key(b, "act_module");
    Elem g = grade_.at(b);
    for (const auto& [h, d] : alpha.terms) {
      check_key(h, "act_module");
      if (h.s != g) continue;
      AElem part;
      part.add(b, c * d);
      r = r + act(part, h.u);
    }
  }
  return r;
}

AElem AlgebraA::rho() const {
  AElem r;
  for (Elem u : st_.system().G()) r.add(ABasis{X().identity(), u}, 1);
  return r;
}

AElem AlgebraA::rho_normalized() const {
  return Rat(1, static_cast<int>(st_.system().G().size())) * rho();
}

Report AlgebraA::verify_integral(const AElem& lambda, bool require_normalized) const {
  if (lambda.is_zero()) fail(ErrCode::InvalidInput, "integral candidate is zero");
  Report rep;
  {
    CheckBuilder c("left integral: h L = eps(h) L for every basis h");
    for (int k = 0; k < dim_; ++k) {
      AElem h;
      h.add(basis_[k], 1);
      c.expect(mul(h, lambda) == counit(h) * lambda,
               [&] { return Json{{"h", to_string(h)}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("right integral: L h = eps(h) L for every basis h");
    for (int k = 0; k < dim_; ++k) {
      AElem h;
      h.add(basis_[k], 1);
      c.expect(mul(lambda, h) == counit(h) * lambda,
               [&] { return Json{{"h", to_string(h)}}; });
    }
    rep.checks.push_back(c.done());
  }
  if (require_normalized) {
    CheckBuilder c("normalized: eps(L) = 1");
    c.expect(counit(lambda) == 1, [&] { return Json{{"eps", rat_str(counit(lambda))}}; });
    rep.checks.push_back(c.done());
  }
  return rep;
}

AElem AlgebraA::map_m(const AElem& x) const {
  AElem r;
  for (const auto& [b, c] : x.terms) {
    check_key(b, "map_m");
    r.add(ABasis{st_.linv(b.s), st_.rtri(b.s, b.u)}, c);
  }
  return r;
}

AElem AlgebraA::map_p(const AElem& x) const {
  const FiniteGroup& Xg = X();
  AElem r;
  for (const auto& [b, c] : x.terms) {
    check_key(b, "map_p");
    Elem a = grade_.at(b);
    Elem t = st_.tau(st_.linv(a), a);
    r.add(ABasis{st_.ltri(b.s, Xg.mul(b.u, Xg.inv(t))), Xg.mul(t, Xg.inv(b.u))}, c);
  }
  return r;
}

Report AlgebraA::verify_p() const {
  Report rep;
  {
    CheckBuilder c("grade law: <P(xi)> = <xi>^L on every basis xi");
    for (int k = 0; k < dim_; ++k) {
      AElem xi;
      xi.add(basis_[k], 1);
      AElem img = map_p(xi);
      c.expect(!img.is_zero() && grade_of(img) == st_.linv(grade_.at(basis_[k])),
               [&] { return Json{{"xi", to_string(xi)}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("twisted involution: P(P(xi) act tau(a, a^L)) = xi");
    for (int k = 0; k < dim_; ++k) {
      AElem xi;
      xi.add(basis_[k], 1);
      Elem a = grade_.at(basis_[k]);
      AElem back = map_p(act(map_p(xi), st_.tau(a, st_.linv(a))));
      c.expect(back == xi, [&] { return Json{{"xi", to_string(xi)}}; });
    }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("module compatibility: P(xi act alpha) = P(xi) act M(alpha)");
    for (int k = 0; k < dim_; ++k)
      for (int l = 0; l < dim_; ++l) {
        AElem xi, alpha;
        xi.add(basis_[k], 1);
        alpha.add(basis_[l], 1);
        c.expect(map_p(act_module(xi, alpha)) == act_module(map_p(xi), map_m(alpha)), [&] {
          return Json{{"xi", to_string(xi)}, {"alpha", to_string(alpha)}};
        });
      }
    rep.checks.push_back(c.done());
  }
  return rep;
}

std::string AlgebraA::to_string(const AElem& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& b : basis_) {
    auto it = x.terms.find(b);
    if (it == x.terms.end()) continue;
    if (!first) os << " + ";
    first = false;
    os << rat_str(it->second) << " * d[" << X().label(b.s) << "]⊗" << X().label(b.u);
  }
  return os.str();
}

BasedAlgebra AlgebraA::based() const {
  BasedAlgebra alg;
  alg.name = "A(" + X().name() + ")";
  alg.dim = dim_;
  for (const auto& b : basis_)
    alg.labels.push_back("d[" + X().label(b.s) + "]⊗" + X().label(b.u));
  alg.mu.assign(dim_, std::vector<std::vector<std::pair<int, Rat>>>(dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      AElem x, y;
      x.add(basis_[i], 1);
      y.add(basis_[j], 1);
      for (const auto& [b, c] : mul(x, y).terms) alg.mu[i][j].push_back({index_.at(b), c});
    }
  for (Elem s : st_.system().M())
    alg.unit.push_back({index_.at(ABasis{s, X().identity()}), Rat(1)});
  return alg;
}

RatVec AlgebraA::counit_vec() const {
  RatVec v(dim_, Rat(0));
  for (int k = 0; k < dim_; ++k)
    if (basis_[k].s == X().identity()) v[k] = 1;
  return v;
}

RatVec AlgebraA::to_vec(const AElem& x) const {
  RatVec v(dim_, Rat(0));
  for (const auto& [b, c] : x.terms) {
    check_key(b, "to_vec");
    v[index_.at(b)] = c;
  }
  return v;
}

AElem AlgebraA::from_vec(const RatVec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    fail(ErrCode::DimensionMismatch, "from_vec length mismatch");
  AElem r;
  for (int k = 0; k < dim_; ++k) r.add(basis_[k], v[k]);
  return r;
}

} // namespace cosetcat
