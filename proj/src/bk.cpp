#include "nt/bk.hpp"

namespace nt {

const Pattern& pattern_312() {
  static const Pattern p({3, 1, 2});
  return p;
}

ReducedWord SegmentDecomposition::word(int n) const {
  ReducedWord rw{{}, n};
  for (const auto& s : segments) rw.letters.insert(rw.letters.end(), s.begin(), s.end());
  return rw;
}

SegmentDecomposition segments(const DyckPath& p) {
  const int n = p.size();
  // x[i] = number of E steps before the i-th N
  std::vector<int> x;
  int e = 0;
  for (char s : p.steps()) {
    if (s == 'N')
      x.push_back(e);
    else
      ++e;
  }
  SegmentDecomposition d;
  for (int i = n; i >= 1; --i) {
    std::vector<int> seg;
    for (int a = x[i - 1] + 1; a <= i - 1; ++a) seg.push_back(a);
    d.segments.push_back(std::move(seg));
  }
  return d;
}

Permutation path_to_perm(const DyckPath& p) {
  return evaluate(segments(p).word(p.size()), WordConvention::LeftToRight);
}

DyckPath perm_to_path(const Permutation& w) {
  if (contains_pattern(w, pattern_312())) throw DomainError("permutation contains 312");
  const int n = w.size();
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i) pos[w[i]] = i;
  std::string steps;
  int e = 0;
  for (int i = 1; i <= n; ++i) {
    int len = 0;
    for (int j = 1; j < i; ++j) len += pos[j] > pos[i];
    int xi = i - 1 - len;
    while (e < xi) {
      steps += 'E';
      ++e;
    }
    steps += 'N';
  }
  steps.append(n - e, 'E');
  DyckPath p(steps);
  if (path_to_perm(p) != w) throw DomainError("no Dyck path maps to this permutation");
  return p;
}

DyckPath perm_to_path_search(const Permutation& w) {
  const int target = length(w);
  for (const auto& p : DyckPath::all(w.size()))
    if (area(p) == target && path_to_perm(p) == w) return p;
  throw DomainError("no Dyck path maps to this permutation");
}

}  // namespace nt
