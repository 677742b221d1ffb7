#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nt/perm_core.hpp"

namespace nt {

// Steps 'N' / 'E' from (0,0) to (n,n), weakly above y = x.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::string steps);

  static DyckPath staircase(int n);
  static DyckPath elbow(int n);  // N^n E^n
  static std::vector<DyckPath> all(int n);

  int size() const { return static_cast<int>(steps_.size() / 2); }
  const std::string& steps() const { return steps_; }

  bool operator==(const DyckPath&) const = default;
  auto operator<=>(const DyckPath&) const = default;

 private:
  std::string steps_;
};

struct LatticePoint {
  int x = 0;
  int y = 0;
  bool operator==(const LatticePoint&) const = default;
};

enum class ComponentKind { Elbow, Ledge, InitialLedge, IsolatedPoint, Other };

struct Component {
  std::string steps;
  LatticePoint start;
  LatticePoint end;
  int diagonal_r = 0;
  ComponentKind kind = ComponentKind::Other;
};

std::vector<LatticePoint> lattice_points(const DyckPath& p);

int area(const DyckPath& p);
std::vector<LatticePoint> peaks(const DyckPath& p);
LatticePoint primary_dip(const DyckPath& p);
std::optional<LatticePoint> secondary_dip(const DyckPath& p);
std::vector<Component> subpath_system(const DyckPath& p, int r);
ComponentKind classify_component(const Component& c, const DyckPath& context);
int max_peak_diagonal(const DyckPath& p);
bool is_spherical_dyck(const DyckPath& p);
std::vector<int> east_heights(const DyckPath& p);
bool path_leq(const DyckPath& p, const DyckPath& q);

bool is_elbow_word(std::string_view w);
bool is_ledge_word(std::string_view w);

// "NNEE..." or "1,1,0,0,..." (1 = N, 0 = E)
DyckPath parse_dyck(std::string_view text);
std::string render(const DyckPath& p, bool ascii = false);
const char* kind_name(ComponentKind k);

}  // namespace nt
