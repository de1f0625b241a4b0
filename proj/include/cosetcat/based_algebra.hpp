#pragma once
#include "cosetcat/matrix.hpp"
#include "cosetcat/report.hpp"

#include <string>
#include <vector>

namespace cosetcat {

// Finite-dimensional unital algebra by structure constants over a fixed basis.
// mu[i][j] lists the expansion of e_i * e_j; unit is the expansion of 1.
struct BasedAlgebra {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> mu;
  std::vector<std::pair<int, Rat>> unit;

  RatVec unit_vec() const;
  RatVec mul_vec(const RatVec& x, const RatVec& y) const;
  RatMat left_mult(const RatVec& h) const;  // L_h
  RatMat right_mult(const RatVec& h) const; // R_h
  RatVec basis_vec(int i) const;

  // Exhaustive associativity + two-sided unit check.
  Report verify_associative_unital() const;
};

} // namespace cosetcat
