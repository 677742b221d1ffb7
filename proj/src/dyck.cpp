#include "nt/dyck.hpp"

#include <algorithm>
#include <cctype>

namespace nt {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  if (steps_.size() % 2) throw DomainError("odd number of steps");
  int h = 0;
  for (char c : steps_) {
    if (c == 'N')
      ++h;
    else if (c == 'E')
      --h;
    else
      throw DomainError(std::string("bad step '") + c + "'");
    if (h < 0) throw DomainError("path goes below the diagonal");
  }
  if (h != 0) throw DomainError("path does not end at (n,n)");
}

DyckPath DyckPath::staircase(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += "NE";
  return DyckPath(s);
}

DyckPath DyckPath::elbow(int n) {
  return DyckPath(std::string(n, 'N') + std::string(n, 'E'));
}

static void gen(std::string& cur, int open, int close, int n,
                std::vector<DyckPath>& out) {
  if (open == n && close == n) {
    out.emplace_back(cur);
    return;
  }
  if (open < n) {
    cur.push_back('N');
    gen(cur, open + 1, close, n, out);
    cur.pop_back();
  }
  if (close < open) {
    cur.push_back('E');
    gen(cur, open, close + 1, n, out);
    cur.pop_back();
  }
}

std::vector<DyckPath> DyckPath::all(int n) {
  std::vector<DyckPath> out;
  std::string cur;
  gen(cur, 0, 0, n, out);
  return out;
}

std::vector<LatticePoint> lattice_points(const DyckPath& p) {
  std::vector<LatticePoint> pts{{0, 0}};
  LatticePoint c;
  for (char s : p.steps()) {
    if (s == 'N')
      ++c.y;
    else
      ++c.x;
    pts.push_back(c);
  }
  return pts;
}

int area(const DyckPath& p) {
  int x = 0, row = 0, a = 0;
  for (char s : p.steps()) {
    if (s == 'N') {
      a += row - x;
      ++row;
    } else {
      ++x;
    }
  }
  return a;
}

std::vector<LatticePoint> peaks(const DyckPath& p) {
  auto pts = lattice_points(p);
  const auto& s = p.steps();
  std::vector<LatticePoint> out;
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    if (s[k] == 'N' && s[k + 1] == 'E') out.push_back(pts[k + 1]);
  return out;
}

LatticePoint primary_dip(const DyckPath& p) {
  LatticePoint best{0, 0};
  for (auto q : lattice_points(p))
    if (q.x == q.y && q.x < p.size()) best = q;
  return best;
}

std::optional<LatticePoint> secondary_dip(const DyckPath& p) {
  std::optional<LatticePoint> best;
  for (auto q : lattice_points(p))
    if (q.y == q.x + 1 && q.y > 0 && q.y < p.size()) best = q;
  return best;
}

std::vector<Component> subpath_system(const DyckPath& p, int r) {
  const int n = p.size();
  if (r < 0 || r > n) throw DomainError("diagonal index out of range");
  auto pts = lattice_points(p);
  const auto& s = p.steps();
  auto diag = [&](std::size_t k) { return pts[k].y - pts[k].x; };
  std::vector<Component> out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (diag(k) != r) continue;
    bool starts = k + 1 < pts.size() && diag(k + 1) > r;
    bool ends = k > 0 && diag(k - 1) > r;
    if (starts) {
      std::size_t j = k + 1;
      while (diag(j) != r) ++j;
      out.push_back(Component{s.substr(k, j - k), pts[k], pts[j], r});
    } else if (!ends) {
      out.push_back(Component{"", pts[k], pts[k], r});
    }
  }
  for (auto& c : out) c.kind = classify_component(c, p);
  return out;
}

bool is_elbow_word(std::string_view w) {
  const std::size_t k = w.size() / 2;
  if (w.empty() || w.size() % 2) return false;
  return w.find_first_not_of('N') == k && w.find_first_not_of('E', k) == std::string_view::npos;
}

bool is_ledge_word(std::string_view w) {
  if (w.size() % 2) return false;
  const int k = static_cast<int>(w.size() / 2);
  if (k < 2) return false;
  for (int j = 1; j <= k - 2; ++j) {
    std::string t = std::string(k - 1, 'N') + std::string(j, 'E') + "N" +
                    std::string(k - j, 'E');
    if (w == t) return true;
  }
  return false;
}

ComponentKind classify_component(const Component& c, const DyckPath& context) {
  if (c.steps.empty()) return ComponentKind::IsolatedPoint;
  if (is_elbow_word(c.steps)) return ComponentKind::Elbow;
  if (is_ledge_word(c.steps)) {
    // first diagonal-1 piece right after its main-diagonal component leaves
    // the diagonal
    if (c.diagonal_r == 1) {
      auto pts = lattice_points(context);
      for (std::size_t k = 1; k < pts.size(); ++k)
        if (pts[k] == c.start)
          return pts[k - 1].x == pts[k - 1].y ? ComponentKind::InitialLedge
                                              : ComponentKind::Ledge;
    }
    return ComponentKind::Ledge;
  }
  return ComponentKind::Other;
}

int max_peak_diagonal(const DyckPath& p) {
  int t = 0;
  for (auto q : peaks(p)) t = std::max(t, q.y - q.x);
  return t;
}

bool is_spherical_dyck(const DyckPath& p) {
  if (p.size() == 0) return true;
  auto top = subpath_system(p, 0);
  auto inner = subpath_system(p, 1);
  for (const auto& tau : top) {
    if (tau.steps.empty()) continue;
    if (tau.kind == ComponentKind::Elbow || tau.kind == ComponentKind::Ledge)
      continue;
    for (const auto& m : inner) {
      if (m.start.x < tau.start.x || m.end.x >= tau.end.x) continue;
      if (m.kind == ComponentKind::Elbow || m.kind == ComponentKind::IsolatedPoint ||
          m.kind == ComponentKind::InitialLedge)
        continue;
      return false;
    }
  }
  return true;
}

std::vector<int> east_heights(const DyckPath& p) {
  std::vector<int> out;
  int y = 0;
  for (char s : p.steps()) {
    if (s == 'N')
      ++y;
    else
      out.push_back(y);
  }
  return out;
}

bool path_leq(const DyckPath& p, const DyckPath& q) {
  if (p.size() != q.size()) throw DomainError("size mismatch");
  int a = 0, b = 0;
  for (std::size_t k = 0; k < p.steps().size(); ++k) {
    a += p.steps()[k] == 'N';
    b += q.steps()[k] == 'N';
    if (a > b) return false;
  }
  return true;
}

DyckPath parse_dyck(std::string_view text) {
  std::string s;
  bool numeric = text.find_first_of("01") != std::string_view::npos;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') continue;
    if (numeric) {
      if (c == '1')
        s += 'N';
      else if (c == '0')
        s += 'E';
      else
        throw DomainError(std::string("bad step '") + c + "'");
    } else {
      char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (u != 'N' && u != 'E') throw DomainError(std::string("bad step '") + c + "'");
      s += u;
    }
  }
  return DyckPath(s);
}

std::string render(const DyckPath& p, bool ascii) {
  const int n = p.size();
  const int H = 2 * n + 1, W = 2 * n + 1;
  std::vector<std::vector<std::string>> g(H, std::vector<std::string>(W, " "));
  auto cell = [&](int x2, int y2) -> std::string& { return g[H - 1 - y2][x2]; };

  for (int y = 0; y <= n; ++y)
    for (int x = 0; x <= y; ++x) cell(2 * x, 2 * y) = ascii ? "." : "·";
  for (int x = 0; x < n; ++x) cell(2 * x + 1, 2 * x + 1) = "/";

  auto pts = lattice_points(p);
  const auto& s = p.steps();
  for (std::size_t k = 0; k < s.size(); ++k) {
    auto a = pts[k];
    if (s[k] == 'N')
      cell(2 * a.x, 2 * a.y + 1) = ascii ? "|" : "│";
    else
      cell(2 * a.x + 1, 2 * a.y) = ascii ? "-" : "─";
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    char in = k ? s[k - 1] : 0;
    char out = k < s.size() ? s[k] : 0;
    std::string glyph;
    if (in == 'N' && out == 'E')
      glyph = ascii ? "+" : "┌";
    else if (in == 'E' && out == 'N')
      glyph = ascii ? "+" : "┘";
    else if (in == 'E' || out == 'E')
      glyph = ascii ? "-" : "─";
    else
      glyph = ascii ? "|" : "│";
    cell(2 * pts[k].x, 2 * pts[k].y) = glyph;
  }

  std::string outs;
  for (const auto& row : g) {
    std::string line;
    for (const auto& c : row) line += c;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    outs += line;
    outs += '\n';
  }
  return outs;
}

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Elbow: return "elbow";
    case ComponentKind::Ledge: return "ledge";
    case ComponentKind::InitialLedge: return "initial-ledge";
    case ComponentKind::IsolatedPoint: return "point";
    case ComponentKind::Other: return "other";
  }
  return "other";
}

}  // namespace nt
