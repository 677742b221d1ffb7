#pragma once

#include <string>

#include "nt/dyck.hpp"
#include "nt/perm_core.hpp"

namespace nt {

enum class ComplexityOne { No, Smooth, Singular };

// Candidate products for the Coxeter sphericity test, BK product throughout.
//   DescentTimesW: J = left descents (positions),  v = w0(J) * w
//   WTimesDescent: J = right descents (values),    v = w * w0(J)
// Only WTimesDescent agrees with the pattern list; it is the default.
enum class CoxeterOrder { DescentTimesW, WTimesDescent };

struct ClassificationRecord {
  bool smooth = false;
  ComplexityOne complexity_one = ComplexityOne::No;
  bool spherical_by_patterns = false;
  bool spherical_by_coxeter = false;
  bool nearly_toric = false;
  bool in_A = false;
  bool in_B = false;
  bool in_M = false;
  bool avoids_312 = false;
  bool in_NT312 = false;

  bool operator==(const ClassificationRecord&) const = default;
};

struct Membership {
  bool in_A = false;
  bool in_B = false;
  bool in_M = false;
};

bool is_smooth(const Permutation& w);
ComplexityOne complexity_one_kind(const Permutation& w);
bool is_spherical_patterns(const Permutation& w);
bool is_spherical_coxeter(const Permutation& w,
                          CoxeterOrder order = CoxeterOrder::WTimesDescent);
bool is_nearly_toric(const Permutation& w);
Membership class_membership(const Permutation& w);
bool in_NT312(const Permutation& w);
bool unique_321_peak_criterion(const DyckPath& p);

ClassificationRecord classify(const Permutation& w);

const char* complexity_name(ComplexityOne k);
std::string to_json(const ClassificationRecord& r);

const Pattern& pattern_3412();
const Pattern& pattern_4231();
const Pattern& pattern_25314();

}  // namespace nt
