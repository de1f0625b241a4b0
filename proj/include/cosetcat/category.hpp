#pragma once
#include "cosetcat/algebra_a.hpp"
#include "cosetcat/double_d.hpp"
#include "cosetcat/matrix.hpp"

#include <random>
#include <string>
#include <vector>

namespace cosetcat {

// Column-sparse linear map: op[j] lists the (row, coeff) entries of column j.
// Used for maps on tensor-square spaces, which are far too large for RatMat.
using SparseVec = std::vector<std::pair<int, Rat>>;
using SparseOp = std::vector<SparseVec>;

SparseVec sparse_normalize(const SparseVec& v); // combine + drop zeros, sorted
SparseOp sparse_identity(int n);
SparseOp sparse_from_dense(const RatMat& m);
RatMat sparse_to_dense(const SparseOp& op, int rows);
SparseOp sparse_compose(const SparseOp& a, const SparseOp& b); // a after b
bool sparse_equal(const SparseOp& a, const SparseOp& b);

// Object of the category C: an M-graded vector space with a right G-action
// such that <xi act u> = <xi> ltri u on homogeneous xi. Construction verifies
// the unit, the composition law act(uv) = act(v) act(u) (columns are
// coordinate vectors) and grade compatibility; violations throw
// Error{AxiomViolation} naming the object.
class CObject {
public:
  CObject(CosetStructure st, std::string name, std::vector<Elem> grades,
          std::vector<SparseOp> act_by_gpos);

  const CosetStructure& structure() const { return st_; }
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  Elem grade(int i) const;
  const SparseOp& act(Elem u) const; // u must lie in G

private:
  CosetStructure st_;
  std::string name_;
  int dim_;
  std::vector<Elem> grades_;
  std::vector<SparseOp> act_; // indexed by g_pos
  void validate() const;
};

// Object of the category D: an X-graded vector space with a right X-action
// such that ||xi act chi|| = ||xi|| conj chi. Same validation as CObject.
class DObject {
public:
  DObject(CosetStructure st, std::string name, std::vector<Elem> grades,
          std::vector<SparseOp> act_by_elem);

  const CosetStructure& structure() const { return st_; }
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  Elem grade(int i) const;        // full X-grade
  Elem grade_mpart(int i) const;  // <xi>, the M-part of the grade
  Elem grade_gabs(int i) const;   // |xi|, the inverse of the G-part
  const SparseOp& act(Elem chi) const;

private:
  CosetStructure st_;
  std::string name_;
  int dim_;
  std::vector<Elem> grades_, mpart_, gabs_;
  std::vector<SparseOp> act_; // indexed by X element
  void validate() const;
};

// Standard objects.
CObject a_object(const AlgebraA& A);           // A with xi act u
CObject x_object(const CosetStructure& st);    // basis X, grade = M-part, right mult
CObject tensor_c(const CObject& V, const CObject& W); // pair index i*dim(W)+j
DObject d_object(const DoubleD& D);            // D with the hat action
DObject x_conj_object(const CosetStructure& st); // basis X, grade x, conjugation

// Morphism classification. Type A: grade-preserving G-equivariant (resp.
// X-equivariant). Type B: <phi xi> = <xi>^L with the twisted equivariance
// phi(xi act u) = phi(xi) act (<xi> rtri u); at the D level the grade law is
// ||phi xi|| = ||xi||^L = |xi| <xi>^{-1} and the twist is ||xi|| rtri~ chi.
enum class MapKind { TypeA, TypeB, Both, Neither };
const char* map_kind_name(MapKind k);

struct MapClass {
  bool type_a = false;
  bool type_b = false;
  std::vector<Json> a_witnesses, b_witnesses; // first few failing instances

  MapKind kind() const {
    if (type_a && type_b) return MapKind::Both;
    if (type_a) return MapKind::TypeA;
    if (type_b) return MapKind::TypeB;
    return MapKind::Neither;
  }
};

MapClass classify(const CObject& V, const CObject& W, const RatMat& phi);
MapClass classify_d(const DObject& V, const DObject& W, const RatMat& phi);

// Basis of the space of type A (type_b = false) or type B (type_b = true)
// morphisms V -> W, by exact nullspace computation over the grade-allowed
// matrix entries. Every returned basis element is re-classified as a final
// consistency check.
std::vector<RatMat> morphism_space(const CObject& V, const CObject& W, bool type_b);
std::vector<RatMat> morphism_space_d(const DObject& V, const DObject& W, bool type_b);

// Random integer-coefficient combination of a basis, never zero for a
// nonempty basis.
RatMat sample_map(const std::vector<RatMat>& basis, std::mt19937_64& rng);

// Tensor-square action helpers, defined basis-wise:
//   C: (e_p (x) e_q) act u   = e_p act (<e_q> rtri u)  (x) e_q act u
//   D: (e_p (x) e_q) hat chi = e_p hat (<e_q> rtri~ chi) (x) e_q hat chi
// The D-level pair rule is used here only for chi in G (where the twist
// reduces to <e_q> rtri chi); it is a basis-wise operation, not a validated
// group action.
SparseVec pair_act_c(const CObject& P, const CObject& Q, const SparseVec& v, Elem u);
SparseVec pair_act_d(const DObject& P, const DObject& Q, const SparseVec& v, Elem chi);

// The order-reversing tensor product of type B morphisms phi: V -> Vt and
// psi: W -> Wt:
//   (phi boxtimes psi)(xi (x) eta) =
//       (psi(eta) act tau(a^L, a)^{-1} (x) phi(xi)) act tau(a, b)
// with a = <xi>, b = <eta> (M-parts at the D level). Maps V (x) W -> Wt (x) Vt.
SparseOp boxtimes_c(const CObject& V, const CObject& W, const CObject& Vt,
                    const CObject& Wt, const RatMat& phi, const RatMat& psi);
SparseOp boxtimes_d(const DObject& V, const DObject& W, const DObject& Vt,
                    const DObject& Wt, const RatMat& phi, const RatMat& psi);

// Braiding on V (x) W -> W (x) V and its inverse (also written V (x) W ->
// W (x) V as a formal flip):
//   Psi(xi (x) eta)      = eta hat (<xi> ltri |eta|)^{-1} (x) xi hat |eta|
//   Psi^{-1}(xi (x) eta) = eta hat |xi hat <eta>|^{-1}    (x) xi hat <eta>
SparseOp psi_op(const DObject& V, const DObject& W);
SparseOp psi_inv_op(const DObject& V, const DObject& W);

// The compatibility of boxtimes with the braiding, verified exhaustively on
// the pair basis of W (x) V:
//   Psi((psi boxtimes phi)(eta (x) xi)) = (phi boxtimes psi)(Psi^{-1}(eta (x) xi))
Report verify_main_identity(const DObject& V, const DObject& W, const DObject& Vt,
                            const DObject& Wt, const RatMat& phi, const RatMat& psi);

// Bar functor: same space, grade s^R, action xi act (s^R rtri u). Needs a
// total right inverse (Error{AssumptionViolated} otherwise).
CObject bar_object(const CObject& V);

// Natural transformation Omega_V : Bar^2 V -> V,
// Omega(e_i) = e_i act tau((s_i^{RR})^L, s_i^{RR}).
RatMat omega_matrix(const CObject& V);

} // namespace cosetcat
