#include "nt/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "nt/bk.hpp"
#include "nt/classify.hpp"

namespace nt {

std::uint64_t Census::get(CountClass c) const {
  switch (c) {
    case CountClass::a: return a;
    case CountClass::b: return b;
    case CountClass::d: return d;
    case CountClass::r: return a - d;
    case CountClass::t: return a - d + b;
    case CountClass::nt312: return nt312;
    case CountClass::complexity_one_total: return a + b;
  }
  return 0;
}

bool VerifyResult::all_agree() const {
  return std::all_of(reports.begin(), reports.end(), [](auto& r) { return r.agree; }) &&
         std::all_of(identities.begin(), identities.end(), [](auto& r) { return r.agree; });
}

const char* class_name(CountClass c) {
  switch (c) {
    case CountClass::a: return "a";
    case CountClass::b: return "b";
    case CountClass::d: return "d";
    case CountClass::r: return "r";
    case CountClass::t: return "t";
    case CountClass::nt312: return "nt312";
    case CountClass::complexity_one_total: return "complexity_one_total";
  }
  return "?";
}

CountClass parse_class(const std::string& s) {
  for (auto c : kAllClasses)
    if (s == class_name(c)) return c;
  throw DomainError("unknown class '" + s + "'");
}

int default_threads() {
  if (const char* e = std::getenv("NT_THREADS")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BigInt fibonacci(int k, FibConvention conv) {
  if (k < 0) throw DomainError("negative Fibonacci index");
  BigInt f0 = conv == FibConvention::Standard ? 0 : 1, f1 = 1;
  for (int i = 0; i < k; ++i) {
    BigInt t = f0 + f1;
    f0 = f1;
    f1 = t;
  }
  return f0;
}

namespace {

void tally(const Permutation& w, Census& c) {
  auto c321 = count_321(w);
  if (c321 > 1) return;
  auto c3412 = count_pattern(w, pattern_3412(), 2);
  bool in_a = c321 == 1 && c3412 == 0;
  bool in_b = c321 == 0 && c3412 == 1;
  if (!in_a && !in_b) return;
  if (in_a) {
    ++c.a;
    if (contains_pattern(w, pattern_25314())) ++c.d;
  } else {
    ++c.b;
  }
  if (!contains_pattern(w, pattern_312())) ++c.nt312;
}

}  // namespace

Census brute_census(int n, int threads, int max_n) {
  if (n < 0) throw DomainError("negative size");
  if (max_n > kHardMaxN) throw ResourceError("size cap above " + std::to_string(kHardMaxN));
  if (n > max_n)
    throw ResourceError("n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(max_n));
  Census total;
  if (n <= 1) return total;
  if (threads <= 0) threads = default_threads();
  threads = std::min(threads, n);

  std::atomic<int> next{1};
  std::vector<Census> parts(threads);
  auto worker = [&](int t) {
    for (int first; (first = next++) <= n;) {
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
      std::vector<int> w(n);
      w[0] = first;
      do {
        std::copy(rest.begin(), rest.end(), w.begin() + 1);
        tally(Permutation(w), parts[t]);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& p : parts) {
    total.a += p.a;
    total.b += p.b;
    total.d += p.d;
    total.nt312 += p.nt312;
  }
  return total;
}

std::uint64_t brute_count(int n, CountClass c, int threads, int max_n) {
  return brute_census(n, threads, max_n).get(c);
}

namespace {

BigInt div5(const BigInt& x) {
  if (x % 5 != 0) throw ConventionFault("inexact division by 5: " + x.str());
  return x / 5;
}

}  // namespace

std::optional<BigInt> closed_form(int n, CountClass c, FibConvention conv) {
  auto F = [&](int k) { return fibonacci(k, conv); };
  switch (c) {
    case CountClass::a:
      if (n < 3) return std::nullopt;
      return div5(2 * (2 * n - 5) * F(2 * n - 6) + (7 * n - 16) * F(2 * n - 5));
    case CountClass::b:
      if (n < 4) return std::nullopt;
      return div5(2 * (2 * n - 7) * F(2 * n - 8) + (7 * n - 23) * F(2 * n - 7));
    case CountClass::d:
      if (n < 5) return std::nullopt;
      return closed_form(n - 2, CountClass::a, conv);
    case CountClass::r:
      if (n < 3) return std::nullopt;
      return BigInt(n - 2) * F(2 * n - 4);
    case CountClass::t:
      if (n < 4) return std::nullopt;
      return *closed_form(n, CountClass::r, conv) + *closed_form(n, CountClass::b, conv);
    case CountClass::nt312:
      if (n < 3) return std::nullopt;
      return BigInt(n - 2) << (n - 3);
    case CountClass::complexity_one_total:
      if (n < 4) return std::nullopt;
      return *closed_form(n, CountClass::a, conv) + *closed_form(n, CountClass::b, conv);
  }
  return std::nullopt;
}

std::vector<BigInt> series_coeffs(const RationalSeries& s, int upto) {
  if (s.denominator.empty() || s.denominator[0] != 1)
    throw DomainError("denominator must have constant term 1");
  std::vector<BigInt> c(upto + 1);
  for (int k = 0; k <= upto; ++k) {
    BigInt v = k < static_cast<int>(s.numerator.size()) ? s.numerator[k] : BigInt(0);
    for (int j = 1; j < static_cast<int>(s.denominator.size()) && j <= k; ++j)
      v -= s.denominator[j] * c[k - j];
    c[k] = v;
  }
  return c;
}

namespace {

using Poly = std::vector<BigInt>;

Poly mul(const Poly& p, const Poly& q) {
  Poly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

Poly add(Poly p, const Poly& q) {
  if (p.size() < q.size()) p.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) p[i] += q[i];
  return p;
}

Poly mono(std::initializer_list<std::pair<int, int>> terms) {
  Poly p;
  for (auto [deg, coef] : terms) {
    if (static_cast<int>(p.size()) <= deg) p.resize(deg + 1);
    p[deg] += coef;
  }
  return p;
}

}  // namespace

RationalSeries series_for(CountClass c) {
  const Poly base{1, -3, 1};
  const Poly D = mul(base, base);  // 1 - 6x + 11x^2 - 6x^3 + x^4
  switch (c) {
    case CountClass::a: return {mono({{3, 1}}), D};
    case CountClass::b: return {mono({{4, 1}}), D};
    case CountClass::d: return {mono({{5, 1}}), D};
    case CountClass::t: return {mono({{3, 1}, {4, 1}, {5, -1}}), D};
    case CountClass::r:
      return {add(mul(mono({{3, -1}, {4, -6}}), D), mono({{3, 1}, {5, -1}})), D};
    case CountClass::complexity_one_total:
      return {add(mul(mono({{3, -1}}), D), mono({{3, 1}, {4, 1}})), D};
    case CountClass::nt312: return {mono({{3, 1}}), Poly{1, -4, 4}};
  }
  return {};
}

int series_valid_from(CountClass c) {
  switch (c) {
    case CountClass::r: return 5;
    case CountClass::complexity_one_total: return 4;
    default: return 0;
  }
}

std::optional<BigInt> series_value(int n, CountClass c) {
  if (n < series_valid_from(c)) return std::nullopt;
  return series_coeffs(series_for(c), n)[n];
}

VerifyResult verify(const VerifyOptions& opt) {
  if (opt.n_max < 0) throw DomainError("negative n");
  if (opt.n_max > opt.max_n)
    throw ResourceError("n_max " + std::to_string(opt.n_max) + " exceeds the cap " +
                        std::to_string(opt.max_n));
  VerifyResult res;
  std::vector<Census> census;
  for (int n = 0; n <= opt.n_max; ++n) census.push_back(brute_census(n, opt.threads, opt.max_n));

  for (int n = 0; n <= opt.n_max; ++n) {
    for (auto c : kAllClasses) {
      CountReport r;
      r.n = n;
      r.class_name = c;
      r.brute = census[n].get(c);
      try {
        r.formula = closed_form(n, c, opt.fib);
      } catch (const ConventionFault& e) {
        r.agree = false;
        r.note = e.what();
      }
      r.series = series_value(n, c);
      BigInt b = *r.brute;
      if (r.formula && *r.formula != b) r.agree = false;
      if (r.series && *r.series != b) r.agree = false;
      res.reports.push_back(std::move(r));
    }
  }

  auto brute = [&](int n, CountClass c) { return BigInt(census[n].get(c)); };
  auto check = [&](std::string name, int n, BigInt l, BigInt r) {
    bool ok = l == r;
    res.identities.push_back({std::move(name), n, std::move(l), std::move(r), ok});
  };
  for (int n = 0; n <= opt.n_max; ++n) {
    if (n + 1 <= opt.n_max)
      check("a_n=b_{n+1}", n, brute(n, CountClass::a), brute(n + 1, CountClass::b));
    if (n + 2 <= opt.n_max)
      check("d_{n+2}=a_n", n, brute(n + 2, CountClass::d), brute(n, CountClass::a));
    if (n >= 2)
      check("r_n=a_n-a_{n-2}", n, brute(n, CountClass::r),
            brute(n, CountClass::a) - brute(n - 2, CountClass::a));
    check("t_n=r_n+b_n", n, brute(n, CountClass::t),
          brute(n, CountClass::r) + brute(n, CountClass::b));
  }
  return res;
}

namespace {

std::string opt_str(const std::optional<BigInt>& v) { return v ? v->str() : ""; }

}  // namespace

std::string to_csv(const VerifyResult& r) {
  std::ostringstream os;
  os << "n,class,brute,formula,series,agree\n";
  for (const auto& x : r.reports)
    os << x.n << ',' << class_name(x.class_name) << ',' << (x.brute ? std::to_string(*x.brute) : "")
       << ',' << opt_str(x.formula) << ',' << opt_str(x.series) << ','
       << (x.agree ? "true" : "false") << '\n';
  for (const auto& x : r.identities)
    os << x.n << ",identity:" << x.name << ',' << x.lhs << ',' << x.rhs << ",,"
       << (x.agree ? "true" : "false") << '\n';
  return os.str();
}

std::string to_json(const VerifyResult& r) {
  using nlohmann::ordered_json;
  auto num = [](const std::optional<BigInt>& v) -> ordered_json {
    if (!v) return nullptr;
    // exact decimal string once past 64 bits
    if (*v >= 0 && *v <= BigInt(UINT64_MAX)) return v->convert_to<std::uint64_t>();
    return v->str();
  };
  ordered_json reports = ordered_json::array();
  for (const auto& x : r.reports) {
    ordered_json j;
    j["n"] = x.n;
    j["class"] = class_name(x.class_name);
    j["brute"] = x.brute ? ordered_json(*x.brute) : ordered_json(nullptr);
    j["formula"] = num(x.formula);
    j["series"] = num(x.series);
    j["agree"] = x.agree;
    if (!x.note.empty()) j["note"] = x.note;
    reports.push_back(std::move(j));
  }
  ordered_json ids = ordered_json::array();
  for (const auto& x : r.identities)
    ids.push_back({{"name", x.name}, {"n", x.n}, {"lhs", num(x.lhs)}, {"rhs", num(x.rhs)},
                   {"agree", x.agree}});
  ordered_json out;
  out["reports"] = std::move(reports);
  out["identities"] = std::move(ids);
  out["all_agree"] = r.all_agree();
  return out.dump(2);
}

std::string to_text(const VerifyResult& r) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(22) << "class" << std::setw(10) << "brute"
     << std::setw(10) << "formula" << std::setw(10) << "series" << "agree\n";
  for (const auto& x : r.reports) {
    os << std::setw(4) << x.n << std::setw(22) << class_name(x.class_name) << std::setw(10)
       << (x.brute ? std::to_string(*x.brute) : "-") << std::setw(10)
       << (x.formula ? x.formula->str() : "-") << std::setw(10)
       << (x.series ? x.series->str() : "-") << (x.agree ? "yes" : "NO");
    if (!x.note.empty()) os << "  (" << x.note << ')';
    os << '\n';
  }
  for (const auto& x : r.identities)
    if (!x.agree)
      os << "identity " << x.name << " fails at n=" << x.n << ": " << x.lhs << " != " << x.rhs
         << '\n';
  os << (r.all_agree() ? "all agree\n" : "DISAGREEMENT\n");
  return os.str();
}

}  // namespace nt
