#include "cosetcat/based_algebra.hpp"
#include "cosetcat/error.hpp"

namespace cosetcat {

RatVec BasedAlgebra::unit_vec() const {
  RatVec v(dim, Rat(0));
  for (const auto& [i, c] : unit) v[i] += c;
  return v;
}

RatVec BasedAlgebra::basis_vec(int i) const {
  RatVec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

RatVec BasedAlgebra::mul_vec(const RatVec& x, const RatVec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    fail(ErrCode::DimensionMismatch, "mul_vec on wrong-length vectors");
  RatVec r(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Rat c = x[i] * y[j];
      for (const auto& [k, v] : mu[i][j]) r[k] += c * v;
    }
  }
  return r;
}

RatMat BasedAlgebra::left_mult(const RatVec& h) const {
  RatMat m(dim, dim);
  for (int k = 0; k < dim; ++k) {
    RatVec col = mul_vec(h, basis_vec(k));
    for (int i = 0; i < dim; ++i) m.at(i, k) = col[i];
  }
  return m;
}

RatMat BasedAlgebra::right_mult(const RatVec& h) const {
  RatMat m(dim, dim);
  for (int k = 0; k < dim; ++k) {
    RatVec col = mul_vec(basis_vec(k), h);
    for (int i = 0; i < dim; ++i) m.at(i, k) = col[i];
  }
  return m;
}

Report BasedAlgebra::verify_associative_unital() const {
  Report rep;
  {
    CheckBuilder c("associativity: (e_i e_j) e_k = e_i (e_j e_k)");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        RatVec ij = mul_vec(basis_vec(i), basis_vec(j));
        for (int k = 0; k < dim; ++k) {
          RatVec lhs = mul_vec(ij, basis_vec(k));
          RatVec rhs = mul_vec(basis_vec(i), mul_vec(basis_vec(j), basis_vec(k)));
          c.expect(lhs == rhs, [&] { return Json{{"i", labels[i]}, {"j", labels[j]}, {"k", labels[k]}}; });
        }
      }
    rep.checks.push_back(c.done());
  }
  {
    CheckBuilder c("two-sided unit");
    RatVec one = unit_vec();
    for (int i = 0; i < dim; ++i) {
      c.expect(mul_vec(one, basis_vec(i)) == basis_vec(i), [&] { return Json{{"i", labels[i]}}; });
      c.expect(mul_vec(basis_vec(i), one) == basis_vec(i), [&] { return Json{{"i", labels[i]}}; });
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

} // namespace cosetcat
