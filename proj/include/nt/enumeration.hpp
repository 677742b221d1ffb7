#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nt {

using BigInt = boost::multiprecision::cpp_int;

struct ConventionFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a: one 321, no 3412        b: one 3412, no 321
// d: a plus 25314            r: a without 25314 (smooth nearly toric)
// t: nearly toric (r + b)    nt312: 312-avoiding complexity one
// complexity_one_total: a + b
enum class CountClass { a, b, d, r, t, nt312, complexity_one_total };
inline constexpr std::array<CountClass, 7> kAllClasses = {
    CountClass::a, CountClass::b, CountClass::d, CountClass::r,
    CountClass::t, CountClass::nt312, CountClass::complexity_one_total};

enum class FibConvention { Standard, Shifted };  // F0=0,F1=1 / F0=F1=1

struct Census {
  std::uint64_t a = 0, b = 0, d = 0, nt312 = 0;
  std::uint64_t get(CountClass c) const;
};

struct RationalSeries {
  std::vector<BigInt> numerator;
  std::vector<BigInt> denominator;  // constant term 1
};

struct CountReport {
  int n = 0;
  CountClass class_name = CountClass::a;
  std::optional<std::uint64_t> brute;
  std::optional<BigInt> formula;
  std::optional<BigInt> series;
  bool agree = true;
  std::string note;
};

struct IdentityCheck {
  std::string name;
  int n = 0;
  BigInt lhs, rhs;
  bool agree = true;
};

struct VerifyOptions {
  int n_max = 5;
  int threads = 0;  // 0: default_threads()
  int max_n = 10;
  FibConvention fib = FibConvention::Standard;
};

struct VerifyResult {
  std::vector<CountReport> reports;
  std::vector<IdentityCheck> identities;
  bool all_agree() const;
};

inline constexpr int kDefaultMaxN = 10;
inline constexpr int kHardMaxN = 11;

const char* class_name(CountClass c);
CountClass parse_class(const std::string& s);

// NT_THREADS env var, else hardware concurrency
int default_threads();

BigInt fibonacci(int k, FibConvention conv = FibConvention::Standard);

Census brute_census(int n, int threads = 0, int max_n = kDefaultMaxN);
std::uint64_t brute_count(int n, CountClass c, int threads = 0, int max_n = kDefaultMaxN);

std::optional<BigInt> closed_form(int n, CountClass c,
                                  FibConvention conv = FibConvention::Standard);

std::vector<BigInt> series_coeffs(const RationalSeries& s, int upto);
RationalSeries series_for(CountClass c);
// first n with series_for(c) matching the class counts
int series_valid_from(CountClass c);
std::optional<BigInt> series_value(int n, CountClass c);

VerifyResult verify(const VerifyOptions& opt);

std::string to_csv(const VerifyResult& r);
std::string to_json(const VerifyResult& r);
std::string to_text(const VerifyResult& r);

}  // namespace nt
