#pragma once
#include "cosetcat/category.hpp"

namespace cosetcat {

// The dual object A* on the basis s (x) delta_u, indexed exactly like the A
// basis. Grade: <s (x) delta_u> = <delta_s (x) u>^L. Action, for a the grade
// of delta_s (x) u:
//   (s (x) delta_u) act (a rtri w) = s ltri (a rtri w) (x) delta_{(a rtri w)^{-1} u w}
// The action of an arbitrary g in G needs the unique w with a rtri w = g; if
// w -> a rtri w fails to be a bijection of G the action is not defined and
// construction throws Error{DualActionUndefined}.
CObject dual_a_object(const AlgebraA& A);

// phi(delta_s (x) u) = s (x) delta_u as a matrix A -> A*. With the shared
// indexing this is the identity matrix; the content is its classification
// against the dual object's grades and action.
RatMat phi_flip(const AlgebraA& A);

// eval of a dual vector against an A vector: eval(t (x) delta_v, delta_s (x) u)
// = [s = t][u = v], extended bilinearly. Inputs are coefficient vectors in the
// shared basis order.
Rat eval_dual(const AlgebraA& A, const RatVec& dual_vec, const AElem& xi);

// <eta, xi> = eval(phi(eta), xi).
Rat pairing(const AlgebraA& A, const AElem& eta, const AElem& xi);

// Exhaustive evaluation invariance:
//   eval((t (x) delta_v) act (a rtri w), (delta_s (x) u) act-bar w) = [s=t][u=v]
// over every dual basis element, every A basis element and every w in G,
// with a the grade of delta_s (x) u.
Report verify_invariance(const AlgebraA& A);

// Bundle: phi is type B, the Gram matrix of the pairing is the identity, and
// the invariance sweep passes.
Report verify_inner_product(const AlgebraA& A);

} // namespace cosetcat
