#include "cosetcat/fixtures.hpp"

#include <array>

namespace cosetcat {
namespace {

// index = i*6 + j for b^i a^j
int d6_index(int i, int j) { return ((i % 2 + 2) % 2) * 6 + ((j % 6 + 6) % 6); }

std::string d6_label(int i, int j) {
  i = (i % 2 + 2) % 2;
  j = (j % 6 + 6) % 6;
  std::string s;
  if (i) s += "b";
  if (j == 1) s += "a";
  else if (j > 1) s += "a" + std::to_string(j);
  if (s.empty()) s = "e";
  return s;
}

using Perm = std::array<int, 3>;

Perm compose(const Perm& p, const Perm& q) { // apply q first, then p
  return {p[q[0]], p[q[1]], p[q[2]]};
}

const std::vector<Perm>& s3_perms() {
  static const std::vector<Perm> perms = {
      {0, 1, 2}, // e
      {1, 2, 0}, // (123)
      {2, 0, 1}, // (132)
      {1, 0, 2}, // (12)
      {2, 1, 0}, // (13)
      {0, 2, 1}, // (23)
  };
  return perms;
}

const std::vector<std::string>& s3_labels() {
  static const std::vector<std::string> labels = {"e", "(123)", "(132)", "(12)", "(13)", "(23)"};
  return labels;
}

GroupSpec s3_base_spec(const std::string& name) {
  GroupSpec s;
  s.name = name;
  s.elements = s3_labels();
  const auto& perms = s3_perms();
  s.table.assign(6, std::vector<int>(6, -1));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Perm r = compose(perms[i], perms[j]);
      for (int k = 0; k < 6; ++k)
        if (perms[k] == r) { s.table[i][j] = k; break; }
    }
  return s;
}

} // namespace

GroupSpec d6_group_spec() {
  GroupSpec s;
  s.name = "D6";
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 6; ++j) s.elements.push_back(d6_label(i, j));
  s.table.assign(12, std::vector<int>(12, -1));
  // (b^i a^j)(b^k a^l) = b^{i+k} a^{(-1)^k j + l}
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 6; ++l)
          s.table[d6_index(i, j)][d6_index(k, l)] = d6_index(i + k, (k ? -j : j) + l);
  s.subgroup = {"e", "a2", "a4", "b", "ba2", "ba4"};
  s.transversal = {"e", "a"};
  return s;
}

CosetSystem build_d6() { return CosetSystem::from_spec(d6_group_spec()); }

GroupSpec s3_group_spec() {
  GroupSpec s = s3_base_spec("S3");
  s.subgroup = {"e", "(123)", "(132)"};
  s.transversal = {"e", "(12)"};
  return s;
}

CosetSystem build_s3() { return CosetSystem::from_spec(s3_group_spec()); }

GroupSpec cyclic_group_spec(int n) {
  GroupSpec s;
  s.name = "C" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    s.elements.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  s.table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.table[i][j] = (i + j) % n;
  s.subgroup = s.elements;
  s.transversal = {"e"};
  return s;
}

GroupSpec s3_flip_subgroup_spec() {
  GroupSpec s = s3_base_spec("S3-flip");
  s.subgroup = {"e", "(12)"};
  s.transversal = {"e", "(123)", "(132)"};
  return s;
}

GroupSpec s3_flip_skew_spec() {
  GroupSpec s = s3_base_spec("S3-flip-skew");
  s.subgroup = {"e", "(12)"};
  s.transversal = {"e", "(123)", "(13)"};
  return s;
}

} // namespace cosetcat
