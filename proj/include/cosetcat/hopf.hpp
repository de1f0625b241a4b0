#pragma once
#include "cosetcat/based_algebra.hpp"
#include "cosetcat/category.hpp"
#include "cosetcat/group.hpp"

#include <tuple>

namespace cosetcat {

// One term of a coproduct row: c * e_i (x) e_j.
using CopTerm = std::tuple<int, int, Rat>;

// Structure constants of a (braided) Hopf algebra over a fixed based algebra:
// coproduct rows, counit covector, antipode matrix. The multiplication comes
// from alg. axioms() checks coassociativity, the counit laws and both
// antipode identities exhaustively; parse/load run it and throw
// Error{AxiomViolation} on the first failing family.
//
// JSON: {"basis": n, "coproduct": [[[i, j, "p/q"], ...] per basis row],
//        "counit": ["p/q" per basis], "antipode": [["p/q" ...] n rows]}
// with rationals as "p/q" (or "p") strings; plain JSON integers are accepted.
struct HopfData {
  BasedAlgebra alg;
  std::vector<std::vector<CopTerm>> coproduct;
  RatVec counit;
  RatMat antipode;

  static HopfData parse(const Json& j, BasedAlgebra alg);
  static HopfData load(const std::string& path, BasedAlgebra alg);

  Report axioms() const;

  // Delta applied to a vector, as a dim^2 coefficient vector (pair index
  // i * dim + j).
  RatVec coproduct_vec(const RatVec& h) const;
  Rat counit_of(const RatVec& h) const;
  RatVec antipode_vec(const RatVec& h) const;
};

// trace(L_h o S^2).
Rat operator_integral(const HopfData& hd, const RatVec& h);
// The same integral as a covector over the basis.
RatVec operator_integral_covector(const HopfData& hd);

// (id (x) int) o Delta = eta o int, checked on every basis element; the
// covector must not be identically zero (Error{InvalidInput}).
Report check_left_integral(const HopfData& hd, const RatVec& integral);
// (int (x) id) o Delta = eta o int.
Report check_right_integral(const HopfData& hd, const RatVec& integral);

// h Lambda = eps(h) Lambda and Lambda h = eps(h) Lambda over all basis h,
// for a nonzero Lambda (Error{InvalidInput} otherwise). Needs no coproduct.
// With require_normalized also checks eps(Lambda) = 1.
Report check_integral_element(const BasedAlgebra& alg, const RatVec& counit,
                              const RatVec& lambda, bool require_normalized = false);

// Right module over a based algebra: act[k] is the matrix of . e_k acting on
// column vectors, so v . (e_i e_j) has matrix act(e_j) act(e_i).
// Construction verifies the unit and module law (Error{AxiomViolation}).
struct Representation {
  std::string name;
  int dim = 0;
  std::vector<RatMat> act;

  static Representation make(const BasedAlgebra& alg, std::string name,
                             std::vector<RatMat> act);
  RatMat act_by(const RatVec& h) const; // sum h_k act[k]
};

// Classical averaging: p0 = (1/n) sum_t rho_t p rho_t^{-1}.
RatMat group_average(const RatMat& p, const std::vector<RatMat>& rep);

// t0(v) = sum t(v . S(Lambda^(1))) . Lambda^(2), the braided-module average
// of a linear map t : V -> U. Lambda must be a right integral element
// (Error{IntegralNotVerified}).
RatMat t_average(const HopfData& hd, const RatVec& lambda, const Representation& V,
                 const Representation& U, const RatMat& t);

// Dimension of the commutant { X : X act_k = act_k X for all k }.
int commutant_dimension(const Representation& V);

// For irreducible V (commutant dimension 1; Error{NotIrreducible} otherwise)
// and a normalized right integral Lambda, t0 = c id with c = trace(t)/dim V;
// computes t0, asserts the equality (Error{AxiomViolation}) and returns c.
Rat schur_scalar(const HopfData& hd, const RatVec& lambda, const Representation& V,
                 const RatMat& t);

// Both readings of the diagram-only opposite coproduct, Delta-op = Psi o Delta
// and Delta-op = Psi^{-1} o Delta: coassociativity and cocommutativity
// (Delta-op = Delta) for each, plus the separate commutativity probe
// mu o Psi = mu. The braiding and its inverse act on pair indices i*dim+j.
Report delta_op_checks(const HopfData& hd, const SparseOp& braiding,
                       const SparseOp& braiding_inv);

// The flip e_i (x) e_j -> e_j (x) e_i as a braiding on a dim-dimensional
// algebra (its own inverse).
SparseOp flip_braiding(int dim);

// Builders. group_hopf: Delta g = g (x) g, eps = 1, S g = g^{-1} on the group
// algebra. function_hopf: pointwise product on delta_g, Delta delta_g =
// sum_{ab=g} delta_a (x) delta_b, eps delta_g = [g=e], S delta_g = delta_{g^{-1}}.
BasedAlgebra group_algebra(const FiniteGroup& g);
HopfData group_hopf(const FiniteGroup& g);
HopfData function_hopf(const FiniteGroup& g);

// The 2-dimensional standard representation of S3 as a right module over its
// group algebra (from the S3 fixture's label set).
Representation s3_standard_rep(const FiniteGroup& s3, const BasedAlgebra& alg);
// Right multiplication of a based algebra on itself.
Representation regular_rep(const BasedAlgebra& alg);

} // namespace cosetcat
