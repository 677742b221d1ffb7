#include "nt/classify.hpp"

#include "json.hpp"

#include "nt/bk.hpp"

namespace nt {

const Pattern& pattern_3412() {
  static const Pattern p({3, 4, 1, 2});
  return p;
}
const Pattern& pattern_4231() {
  static const Pattern p({4, 2, 3, 1});
  return p;
}
const Pattern& pattern_25314() {
  static const Pattern p({2, 5, 3, 1, 4});
  return p;
}

bool is_smooth(const Permutation& w) {
  return !contains_pattern(w, pattern_3412()) && !contains_pattern(w, pattern_4231());
}

ComplexityOne complexity_one_kind(const Permutation& w) {
  auto c321 = count_321(w);
  if (c321 > 1) return ComplexityOne::No;
  auto c3412 = count_pattern(w, pattern_3412(), 2);
  if (c321 == 1 && c3412 == 0) return ComplexityOne::Smooth;
  if (c321 == 0 && c3412 == 1) return ComplexityOne::Singular;
  return ComplexityOne::No;
}

bool is_spherical_patterns(const Permutation& w) {
  return avoids_all(w, spherical_patterns());
}

bool is_spherical_coxeter(const Permutation& w, CoxeterOrder order) {
  const int n = w.size();
  Permutation v;
  if (order == CoxeterOrder::DescentTimesW)
    v = multiply(longest_element(left_descent_set(w), n), w);
  else
    v = multiply(w, longest_element(right_descent_set(w), n));
  return is_coxeter_of_support(v);
}

bool is_nearly_toric(const Permutation& w) {
  switch (complexity_one_kind(w)) {
    case ComplexityOne::Singular: return true;
    case ComplexityOne::Smooth: return !contains_pattern(w, pattern_25314());
    case ComplexityOne::No: return false;
  }
  return false;
}

Membership class_membership(const Permutation& w) {
  auto k = complexity_one_kind(w);
  Membership m;
  m.in_A = k == ComplexityOne::Smooth;
  m.in_B = k == ComplexityOne::Singular;
  m.in_M = m.in_A && contains_pattern(w, pattern_25314());
  return m;
}

bool in_NT312(const Permutation& w) {
  return !contains_pattern(w, pattern_312()) &&
         complexity_one_kind(w) != ComplexityOne::No;
}

bool unique_321_peak_criterion(const DyckPath& p) {
  int on3 = 0;
  for (auto q : peaks(p)) {
    int d = q.y - q.x;
    if (d >= 4) return false;
    on3 += d == 3;
  }
  return on3 == 1;
}

ClassificationRecord classify(const Permutation& w) {
  ClassificationRecord r;
  r.smooth = is_smooth(w);
  r.complexity_one = complexity_one_kind(w);
  r.spherical_by_patterns = is_spherical_patterns(w);
  r.spherical_by_coxeter = is_spherical_coxeter(w);
  r.nearly_toric = is_nearly_toric(w);
  auto m = class_membership(w);
  r.in_A = m.in_A;
  r.in_B = m.in_B;
  r.in_M = m.in_M;
  r.avoids_312 = !contains_pattern(w, pattern_312());
  r.in_NT312 = r.avoids_312 && r.complexity_one != ComplexityOne::No;
  return r;
}

const char* complexity_name(ComplexityOne k) {
  switch (k) {
    case ComplexityOne::No: return "no";
    case ComplexityOne::Smooth: return "smooth";
    case ComplexityOne::Singular: return "singular";
  }
  return "no";
}

std::string to_json(const ClassificationRecord& r) {
  nlohmann::ordered_json j;
  j["smooth"] = r.smooth;
  j["complexity_one"] = complexity_name(r.complexity_one);
  j["spherical_by_patterns"] = r.spherical_by_patterns;
  j["spherical_by_coxeter"] = r.spherical_by_coxeter;
  j["nearly_toric"] = r.nearly_toric;
  j["in_A"] = r.in_A;
  j["in_B"] = r.in_B;
  j["in_M"] = r.in_M;
  j["avoids_312"] = r.avoids_312;
  j["in_NT312"] = r.in_NT312;
  return j.dump();
}

}  // namespace nt
