#pragma once
#include "cosetcat/group.hpp"

namespace cosetcat {

// D6 = <a, b | a^6 = b^2 = e, ab = ba^5> with G = {e,a2,a4,b,ba2,ba4} and
// M = {e,a}. Element labels: e,a,a2,...,a5,b,ba,...,ba5.
GroupSpec d6_group_spec();
CosetSystem build_d6();

// S3 on {0,1,2} with G = A3 and M = {e,(12)}.
// Labels: e,(123),(132),(12),(13),(23).
GroupSpec s3_group_spec();
CosetSystem build_s3();

// Cyclic group of order n with G = X, M = {e}; labels e,g,g2,...
GroupSpec cyclic_group_spec(int n);

// S3 with the order-2 subgroup G = {e,(12)} and the subgroup transversal
// M = A3 (nontrivial ltri action, trivial tau). Used by tests.
GroupSpec s3_flip_subgroup_spec();

// Same subgroup, non-subgroup transversal M = {e,(123),(13)}: valid coset
// system whose derived dot-rows are non-injective (grade construction fails)
// and whose right-inverse map is partial. Used by tests.
GroupSpec s3_flip_skew_spec();

} // namespace cosetcat
