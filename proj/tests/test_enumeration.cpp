#include "doctest.h"
#include "json.hpp"
#include "nt/enumeration.hpp"
#include "oracles.hpp"

using namespace nt;

namespace {

struct Tally {
  std::uint64_t a = 0, b = 0, d = 0, nt312 = 0;
};

Tally tally(int n) {
  Tally t;
  for (auto& w : oracle::all_perms(n)) {
    auto c321 = oracle::count_pattern(w, {3, 2, 1});
    auto c3412 = oracle::count_pattern(w, {3, 4, 1, 2});
    bool a = c321 == 1 && c3412 == 0;
    t.a += a;
    t.b += c321 == 0 && c3412 == 1;
    t.d += a && oracle::count_pattern(w, {2, 5, 3, 1, 4}) > 0;
    t.nt312 += a && oracle::count_pattern(w, {3, 1, 2}) == 0;
  }
  return t;
}

BigInt I(long v) { return BigInt(v); }

}  // namespace

TEST_CASE("fibonacci") {
  const long f[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (int k = 0; k <= 10; ++k) CHECK(fibonacci(k) == f[k]);
  CHECK(fibonacci(0, FibConvention::Shifted) == 1);
  CHECK(fibonacci(1, FibConvention::Shifted) == 1);
  CHECK(fibonacci(5, FibConvention::Shifted) == 8);
  CHECK(fibonacci(100) == BigInt("354224848179261915075"));
}

TEST_CASE("class names") {
  for (auto c : kAllClasses) CHECK(parse_class(class_name(c)) == c);
  CHECK_THROWS_AS(parse_class("zz"), DomainError);
}

TEST_CASE("brute census matches direct pattern counting, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    auto t = tally(n);
    auto c = brute_census(n, 2);
    CHECK(c.a == t.a);
    CHECK(c.b == t.b);
    CHECK(c.d == t.d);
    CHECK(c.nt312 == t.nt312);
    CHECK(c.get(CountClass::r) == t.a - t.d);
    CHECK(c.get(CountClass::t) == t.a - t.d + t.b);
    CHECK(c.get(CountClass::complexity_one_total) == t.a + t.b);
  }
}

TEST_CASE("anchor values") {
  CHECK(brute_count(3, CountClass::a) == 1);
  CHECK(brute_count(4, CountClass::a) == 6);
  CHECK(brute_count(4, CountClass::b) == 1);
  CHECK(brute_count(3, CountClass::t) == 1);
  CHECK(brute_count(4, CountClass::t) == 7);
  CHECK(brute_count(5, CountClass::r) == 24);
  CHECK(brute_count(6, CountClass::b) == 25);
  CHECK(brute_count(5, CountClass::t) == 30);
  CHECK(brute_count(5, CountClass::nt312) == 12);
  CHECK(brute_count(5, CountClass::b) == 6);
  for (int n = 0; n <= 2; ++n) CHECK(brute_count(n, CountClass::t) == 0);
}

TEST_CASE("closed forms") {
  CHECK(closed_form(3, CountClass::a) == I(1));
  CHECK(closed_form(4, CountClass::a) == I(6));
  CHECK(closed_form(5, CountClass::r) == I(24));
  CHECK(closed_form(6, CountClass::b) == I(25));
  CHECK(closed_form(6, CountClass::nt312) == I(32));
  CHECK(closed_form(4, CountClass::t) == I(7));
  CHECK_FALSE(closed_form(2, CountClass::a).has_value());
  CHECK_FALSE(closed_form(3, CountClass::b).has_value());
}

TEST_CASE("shifted Fibonacci breaks exact division") {
  CHECK_THROWS_AS(closed_form(3, CountClass::a, FibConvention::Shifted), ConventionFault);
  VerifyOptions opt;
  opt.n_max = 5;
  opt.fib = FibConvention::Shifted;
  CHECK_FALSE(verify(opt).all_agree());
}

TEST_CASE("series expansion") {
  auto t = series_coeffs(series_for(CountClass::t), 5);
  CHECK(t[3] == 1);
  CHECK(t[4] == 7);
  CHECK(t[5] == 30);
  auto a = series_coeffs(series_for(CountClass::a), 4);
  CHECK(a[3] == 1);
  CHECK(a[4] == 6);
  // 1 / (1 - x): all ones
  auto ones = series_coeffs(RationalSeries{{I(1)}, {I(1), I(-1)}}, 6);
  for (auto& v : ones) CHECK(v == 1);
  auto nt = series_coeffs(series_for(CountClass::nt312), 7);
  CHECK(nt[6] == 32);
}

TEST_CASE("closed forms agree with series coefficients, n <= 30") {
  for (auto c : kAllClasses)
    for (int n = 3; n <= 30; ++n) {
      auto f = closed_form(n, c);
      auto s = series_value(n, c);
      if (f && s) CHECK(*f == *s);
      if (n >= series_valid_from(c)) CHECK(s.has_value());
    }
  for (int n = 3; n <= 30; ++n) {
    CHECK(*closed_form(n, CountClass::a) == *closed_form(n + 1, CountClass::b));
    CHECK(*series_value(n, CountClass::a) ==
          series_coeffs(series_for(CountClass::a), 30)[n]);
  }
}

TEST_CASE("parallel and serial counts agree") {
  for (int n = 6; n <= 8; ++n) {
    auto s = brute_census(n, 1);
    for (int th : {2, 3, 8}) {
      auto p = brute_census(n, th);
      CHECK(p.a == s.a);
      CHECK(p.b == s.b);
      CHECK(p.d == s.d);
      CHECK(p.nt312 == s.nt312);
    }
  }
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(brute_census(11), ResourceError);
  CHECK_THROWS_AS(brute_census(12, 0, 12), ResourceError);
  CHECK_THROWS_AS(brute_census(-1), DomainError);
}

TEST_CASE("verify") {
  VerifyOptions opt;
  opt.n_max = 7;
  auto r = verify(opt);
  CHECK(r.all_agree());
  CHECK_FALSE(r.identities.empty());
  for (auto& id : r.identities) CHECK(id.agree);
  bool saw_t4 = false;
  for (auto& rep : r.reports)
    if (rep.n == 4 && rep.class_name == CountClass::t) {
      saw_t4 = true;
      CHECK(rep.brute == 7u);
    }
  CHECK(saw_t4);

  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j.is_object());
  auto csv = to_csv(r);
  CHECK(csv.rfind("n,class,brute,formula,series,agree", 0) == 0);
  CHECK(to_text(r).find("t") != std::string::npos);
}
