#include "doctest.h"
#include "nt/bk.hpp"
#include "nt/classify.hpp"
#include "nt/dyck.hpp"
#include "oracles.hpp"

using namespace nt;

namespace {

const DyckPath kBK("NNEENNNNEEENNEEE");
const DyckPath kFig0("NENENNENNNEENNEENEEE");

std::vector<LatticePoint> pts(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<LatticePoint> out;
  for (auto [x, y] : xs) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("DyckPath validation") {
  CHECK_NOTHROW(DyckPath("NE"));
  CHECK_NOTHROW(DyckPath(""));
  CHECK_THROWS_AS(DyckPath("EN"), DomainError);
  CHECK_THROWS_AS(DyckPath("NNE"), DomainError);
  CHECK_THROWS_AS(DyckPath("NXEE"), DomainError);
  CHECK(DyckPath::staircase(3).steps() == "NENENE");
  CHECK(DyckPath::elbow(3).steps() == "NNNEEE");
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) CHECK(DyckPath::all(n).size() == catalan[n]);
}

TEST_CASE("parse_dyck accepts letters and bits") {
  CHECK(parse_dyck("NNEE") == DyckPath("NNEE"));
  CHECK(parse_dyck("1,1,0,0") == DyckPath("NNEE"));
  CHECK(parse_dyck("1 0 1 0") == DyckPath("NENE"));
  CHECK(parse_dyck("1100") == DyckPath("NNEE"));
  CHECK_THROWS_AS(parse_dyck("1,2"), DomainError);
}

TEST_CASE("area") {
  CHECK(area(kBK) == 10);
  CHECK(area(DyckPath::staircase(6)) == 0);
  for (int n = 1; n <= 7; ++n) CHECK(area(DyckPath::elbow(n)) == n * (n - 1) / 2);
  for (int n = 0; n <= 7; ++n)
    for (auto& p : DyckPath::all(n)) CHECK(area(p) == oracle::area_by_cells(p.steps()));
}

TEST_CASE("lattice_points walks the path") {
  auto v = lattice_points(DyckPath("NNEE"));
  CHECK(v == pts({{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}}));
}

TEST_CASE("peaks") {
  CHECK(peaks(DyckPath::elbow(4)) == pts({{0, 4}}));
  CHECK(peaks(DyckPath::staircase(3)) == pts({{0, 1}, {1, 2}, {2, 3}}));
  CHECK(peaks(kFig0) == pts({{0, 1}, {1, 2}, {2, 4}, {3, 7}, {5, 9}, {7, 10}}));
}

TEST_CASE("primary and secondary dips") {
  CHECK(primary_dip(DyckPath::elbow(5)) == LatticePoint{0, 0});
  CHECK(primary_dip(DyckPath::staircase(5)) == LatticePoint{4, 4});
  CHECK(primary_dip(kFig0) == LatticePoint{2, 2});
  CHECK(secondary_dip(kFig0) == LatticePoint{3, 4});
  CHECK(secondary_dip(DyckPath("NNEE")) == LatticePoint{0, 1});
  CHECK(secondary_dip(DyckPath::elbow(4)) == LatticePoint{0, 1});
  CHECK_FALSE(secondary_dip(DyckPath("NE")).has_value());
}

TEST_CASE("max_peak_diagonal") {
  CHECK(max_peak_diagonal(DyckPath::staircase(5)) == 1);
  CHECK(max_peak_diagonal(DyckPath::elbow(5)) == 5);
  CHECK(max_peak_diagonal(kFig0) == 4);
}

TEST_CASE("east_heights") {
  CHECK(east_heights(DyckPath::elbow(3)) == std::vector<int>{3, 3, 3});
  CHECK(east_heights(DyckPath::staircase(3)) == std::vector<int>{1, 2, 3});
  CHECK(east_heights(kBK) == std::vector<int>{2, 2, 6, 6, 6, 8, 8, 8});
}

TEST_CASE("path_leq") {
  for (int n = 1; n <= 5; ++n)
    for (auto& p : DyckPath::all(n)) {
      CHECK(path_leq(DyckPath::staircase(n), p));
      CHECK(path_leq(p, DyckPath::elbow(n)));
      CHECK(path_leq(p, p));
    }
  CHECK_FALSE(path_leq(DyckPath("NNENEE"), DyckPath("NENNEE")));
  CHECK(path_leq(DyckPath("NENNEE"), DyckPath("NNENEE")));
  CHECK_FALSE(path_leq(DyckPath("NNEENE"), DyckPath("NENNEE")));
  CHECK_FALSE(path_leq(DyckPath("NENNEE"), DyckPath("NNEENE")));
  CHECK_THROWS_AS(path_leq(DyckPath("NE"), DyckPath("NNEE")), DomainError);
}

TEST_CASE("covers raise area by one, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (auto& p : DyckPath::all(n)) {
      const auto& s = p.steps();
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] != 'E' || s[i + 1] != 'N') continue;
        auto t = s;
        std::swap(t[i], t[i + 1]);
        DyckPath q(t);
        CHECK(path_leq(p, q));
        CHECK(area(q) == area(p) + 1);
      }
      for (auto& q : DyckPath::all(n))
        if (path_leq(p, q) && !(p == q)) CHECK(area(p) < area(q));
    }
}

TEST_CASE("elbow and ledge words") {
  CHECK(is_elbow_word("NNNEEE"));
  CHECK(is_elbow_word("NE"));
  CHECK_FALSE(is_elbow_word(""));
  CHECK_FALSE(is_elbow_word("NENE"));
  CHECK(is_ledge_word("NNNEENEE"));
  CHECK(is_ledge_word("NNENEE"));
  CHECK_FALSE(is_ledge_word("NNEENE"));
  CHECK_FALSE(is_ledge_word("NNNEEE"));
  CHECK_FALSE(is_ledge_word("NENE"));
}

TEST_CASE("subpath systems of NNEENNNNEEENNEEE") {
  DyckPath p("NNEENNNNEEENNEEE");
  auto c0 = subpath_system(p, 0);
  REQUIRE(c0.size() == 2);
  CHECK(c0[0].steps == "NNEE");
  CHECK(c0[1].steps == "NNNNEEENNEEE");

  auto c1 = subpath_system(p, 1);
  std::vector<std::string> w1;
  for (auto& c : c1) w1.push_back(c.steps);
  CHECK(w1 == std::vector<std::string>{"NE", "NNNEEE", "NNEE"});
  CHECK(c1[1].end == c1[2].start);

  auto c2 = subpath_system(p, 2);
  REQUIRE(c2.size() == 3);
  CHECK(c2[0].kind == ComponentKind::IsolatedPoint);
  CHECK(c2[0].start == LatticePoint{0, 2});
  CHECK(c2[1].steps == "NNEE");
  CHECK(c2[2].steps == "NE");
}

TEST_CASE("subpath_system edge cases") {
  for (int n = 1; n <= 6; ++n) {
    auto st = subpath_system(DyckPath::staircase(n), 1);
    CHECK(st.size() == static_cast<std::size_t>(n));
    for (auto& c : st) CHECK(c.kind == ComponentKind::IsolatedPoint);
    auto top = subpath_system(DyckPath::elbow(n), n);
    REQUIRE(top.size() == 1);
    CHECK(top[0].kind == ComponentKind::IsolatedPoint);
    CHECK(subpath_system(DyckPath::staircase(n), n).size() == (n == 1 ? 1u : 0u));
  }
  CHECK_THROWS_AS(subpath_system(DyckPath("NE"), 2), DomainError);
  CHECK_THROWS_AS(subpath_system(DyckPath("NE"), -1), DomainError);
}

TEST_CASE("components touch their diagonal only at the ends, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (auto& p : DyckPath::all(n))
      for (int r = 0; r <= n; ++r)
        for (auto& c : subpath_system(p, r)) {
          CHECK(c.diagonal_r == r);
          CHECK(c.start.y - c.start.x == r);
          CHECK(c.end.y - c.end.x == r);
          int x = c.start.x, y = c.start.y;
          for (std::size_t k = 0; k < c.steps.size(); ++k) {
            (c.steps[k] == 'N' ? y : x) += 1;
            if (k + 1 < c.steps.size()) CHECK(y - x > r);
          }
          CHECK(LatticePoint{x, y} == c.end);
          if (c.steps.empty()) CHECK(c.kind == ComponentKind::IsolatedPoint);
        }
}

TEST_CASE("component classification") {
  DyckPath p("NNNEEE");
  auto c = subpath_system(p, 0);
  REQUIRE(c.size() == 1);
  CHECK(c[0].kind == ComponentKind::Elbow);
  auto l = subpath_system(DyckPath("NNNEENEE"), 0);
  REQUIRE(l.size() == 1);
  CHECK(l[0].kind == ComponentKind::Ledge);
  auto o = subpath_system(DyckPath("NNEENE"), 0);
  CHECK(o[0].kind == ComponentKind::Elbow);
  CHECK(o[1].kind == ComponentKind::Elbow);
  auto x = subpath_system(DyckPath("NNENEE"), 0);
  CHECK(x[0].kind == ComponentKind::Ledge);
  auto other = subpath_system(DyckPath("NNENENEE"), 0);
  CHECK(other[0].kind == ComponentKind::Other);
  int initial = 0;
  for (int n = 1; n <= 6; ++n)
    for (auto& q : DyckPath::all(n)) {
      auto v = lattice_points(q);
      for (auto& k : subpath_system(q, 1)) {
        if (k.kind != ComponentKind::InitialLedge) continue;
        ++initial;
        CHECK(is_ledge_word(k.steps));
        LatticePoint below{k.start.x, k.start.y - 1};
        CHECK(below.x == below.y);
        CHECK(std::find(v.begin(), v.end(), below) != v.end());
      }
    }
  CHECK(initial > 0);
  CHECK(std::string(kind_name(ComponentKind::InitialLedge)) == "initial-ledge");
}

TEST_CASE("spherical Dyck paths from the introduction") {
  CHECK(is_spherical_dyck(DyckPath("NNNEEENNNEENEENE")));
  CHECK(is_spherical_dyck(DyckPath("NNENNNEEENNNEEEE")));
  for (int n = 1; n <= 6; ++n) {
    CHECK(is_spherical_dyck(DyckPath::elbow(n)));
    CHECK(is_spherical_dyck(DyckPath::staircase(n)));
  }
}

TEST_CASE("the three exceptional paths of size five") {
  struct Case {
    const char* path;
    const char* perm;
  };
  const Case cases[] = {
      {"NNNENNEEEE", "35421"}, {"NNENNENEEE", "24531"}, {"NNNENENEEE", "34521"}};
  std::vector<std::string> bad;
  for (auto& c : cases) {
    DyckPath p(c.path);
    CHECK(path_to_perm(p) == parse_permutation(c.perm));
    CHECK_FALSE(is_spherical_dyck(p));
    CHECK_FALSE(avoids_all(path_to_perm(p), spherical_patterns()));
  }
  for (auto& p : DyckPath::all(5))
    if (!is_spherical_dyck(p)) bad.push_back(p.steps());
  std::sort(bad.begin(), bad.end());
  std::vector<std::string> expect{cases[0].path, cases[1].path, cases[2].path};
  std::sort(expect.begin(), expect.end());
  CHECK(bad == expect);
}

TEST_CASE("spherical paths match the pattern criterion, n <= 8") {
  for (int n = 0; n <= 8; ++n)
    for (auto& p : DyckPath::all(n))
      CHECK(is_spherical_dyck(p) == avoids_all(path_to_perm(p), spherical_patterns()));
}

TEST_CASE("render") {
  auto s = render(DyckPath("NNEE"), true);
  CHECK(s.find('/') != std::string::npos);
  CHECK(s.find('.') != std::string::npos);
  auto u = render(DyckPath("NNEE"));
  CHECK(u.find("┌") != std::string::npos);
  int lines = 0;
  for (char ch : render(DyckPath::elbow(3), true)) lines += ch == '\n';
  CHECK(lines == 7);
}
