#include "nt/perm_core.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace nt {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[x])
      throw DomainError("not a permutation of 1..n");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

static void check_letters(const ReducedWord& rw) {
  for (int a : rw.letters)
    if (a < 1 || a >= rw.ambient_n)
      throw InvalidWord("letter s" + std::to_string(a) + " out of range for n=" +
                        std::to_string(rw.ambient_n));
}

int evaluate_word(const ReducedWord& rw, int point) {
  check_letters(rw);
  if (point < 1 || point > rw.ambient_n) throw InvalidWord("point out of range");
  int y = point;
  for (int a : rw.letters) {
    if (y == a)
      y = a + 1;
    else if (y == a + 1)
      y = a;
  }
  return y;
}

Permutation evaluate(const ReducedWord& rw, WordConvention conv) {
  check_letters(rw);
  std::vector<int> w(rw.ambient_n);
  std::iota(w.begin(), w.end(), 1);
  for (int a : rw.letters) std::swap(w[a - 1], w[a]);
  // swapping positions in order builds the composition product; the
  // left-to-right point evaluation is its inverse
  Permutation p(std::move(w));
  return conv == WordConvention::Composition ? p : inverse(p);
}

bool is_reduced(const ReducedWord& rw, WordConvention conv) {
  return length(evaluate(rw, conv)) == static_cast<int>(rw.letters.size());
}

int length(const Permutation& w) {
  const auto& v = w.word();
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

Permutation inverse(const Permutation& w) {
  std::vector<int> r(w.size());
  for (int i = 1; i <= w.size(); ++i) r[w[i] - 1] = i;
  return Permutation(std::move(r));
}

Permutation multiply(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw DomainError("size mismatch");
  std::vector<int> r(u.size());
  for (int j = 1; j <= u.size(); ++j) r[j - 1] = v[u[j]];
  return Permutation(std::move(r));
}

Permutation simple(int i, int n) {
  if (i < 1 || i >= n) throw InvalidWord("simple transposition out of range");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

ReducedWord reduced_word(const Permutation& w, WordConvention conv) {
  std::vector<int> v = w.word();
  ReducedWord rw{{}, w.size()};
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < v.size() && v[i] < v[i + 1]) ++i;
    if (i + 1 >= v.size()) break;
    rw.letters.push_back(static_cast<int>(i) + 1);
    std::swap(v[i], v[i + 1]);
  }
  if (conv == WordConvention::Composition)
    std::reverse(rw.letters.begin(), rw.letters.end());
  return rw;
}

namespace {

struct PatternCounter {
  const std::vector<int>& w;
  const std::vector<int>& p;
  std::uint64_t limit;
  std::uint64_t count = 0;
  int chosen[16] = {};

  void run(int depth, int start) {
    const int k = static_cast<int>(p.size());
    const int n = static_cast<int>(w.size());
    if (depth == k) {
      ++count;
      return;
    }
    for (int i = start; i <= n - (k - depth) && count < limit; ++i) {
      bool ok = true;
      for (int s = 0; s < depth && ok; ++s)
        ok = (w[chosen[s]] < w[i]) == (p[s] < p[depth]);
      if (!ok) continue;
      chosen[depth] = i;
      run(depth + 1, i + 1);
    }
  }
};

}  // namespace

std::uint64_t count_pattern(const Permutation& w, const Pattern& p,
                            std::uint64_t limit) {
  if (p.size() > 16) throw DomainError("pattern too long");
  if (p.size() > w.size()) return 0;
  if (p.size() == 0) return 1;
  PatternCounter c{w.word(), p.word(), limit};
  c.run(0, 0);
  return c.count;
}

std::uint64_t count_pattern(const Permutation& w, const Pattern& p) {
  return count_pattern(w, p, UINT64_MAX);
}

std::uint64_t count_321(const Permutation& w) {
  const auto& v = w.word();
  const int n = w.size();
  std::uint64_t total = 0;
  for (int j = 1; j + 1 < n; ++j) {
    std::uint64_t above = 0, below = 0;
    for (int i = 0; i < j; ++i) above += v[i] > v[j];
    for (int k = j + 1; k < n; ++k) below += v[k] < v[j];
    total += above * below;
  }
  return total;
}

bool contains_pattern(const Permutation& w, const Pattern& p) {
  return count_pattern(w, p, 1) > 0;
}

bool avoids_all(const Permutation& w, const std::vector<Pattern>& ps) {
  return std::none_of(ps.begin(), ps.end(),
                      [&](const Pattern& p) { return contains_pattern(w, p); });
}

DescentSet left_descent_set(const Permutation& w) {
  DescentSet d;
  for (int i = 1; i < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(i);
  return d;
}

DescentSet right_descent_set(const Permutation& w) {
  return left_descent_set(inverse(w));
}

Permutation longest_element(const DescentSet& indices, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<char> in(n + 1, 0);
  for (int i : indices) {
    if (i < 1 || i >= n) throw DomainError("descent index out of range");
    in[i] = 1;
  }
  for (int i = 1; i < n;) {
    if (!in[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j < n && in[j]) ++j;
    // run i..j-1 covers positions i..j
    std::reverse(w.begin() + (i - 1), w.begin() + j);
    i = j;
  }
  return Permutation(std::move(w));
}

std::vector<int> support(const Permutation& w) {
  std::vector<int> s;
  int mx = 0;
  for (int i = 1; i < w.size(); ++i) {
    mx = std::max(mx, w[i]);
    if (mx > i) s.push_back(i);
  }
  return s;
}

bool is_coxeter_of_support(const Permutation& w) {
  return length(w) == static_cast<int>(support(w).size());
}

namespace {

std::string key_of(const std::vector<int>& v) {
  return std::string(v.begin(), v.end());
}

template <class Visit>
std::size_t bfs_words(const ReducedWord& rw, std::size_t cap, bool& exhausted,
                      Visit&& visit) {
  check_letters(rw);
  if (!is_reduced(rw)) throw InvalidWord("word is not reduced");
  exhausted = false;
  std::unordered_set<std::string> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(key_of(rw.letters));
  queue.push_back(rw.letters);
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    if (visit(cur)) return seen.size();
    const std::size_t L = cur.size();
    auto push = [&](std::vector<int>&& nxt) {
      auto key = key_of(nxt);
      if (seen.count(key)) return;
      if (seen.size() >= cap) {
        exhausted = true;
        return;
      }
      seen.insert(std::move(key));
      queue.push_back(std::move(nxt));
    };
    for (std::size_t k = 0; k + 1 < L; ++k) {
      int a = cur[k], b = cur[k + 1];
      if (std::abs(a - b) >= 2) {
        auto nxt = cur;
        std::swap(nxt[k], nxt[k + 1]);
        push(std::move(nxt));
      }
      if (k + 2 < L && std::abs(a - b) == 1 && cur[k + 2] == a) {
        auto nxt = cur;
        nxt[k] = b;
        nxt[k + 1] = a;
        nxt[k + 2] = b;
        push(std::move(nxt));
      }
    }
  }
  return seen.size();
}

}  // namespace

SearchResult reduced_words_reachable(const ReducedWord& rw,
                                     const WordPredicate& pred,
                                     std::size_t cap) {
  SearchResult res;
  bool exhausted = false;
  res.visited = bfs_words(rw, cap, exhausted, [&](const std::vector<int>& w) {
    if (!pred(w)) return false;
    res.status = SearchStatus::Found;
    res.word = ReducedWord{w, rw.ambient_n};
    return true;
  });
  if (res.status != SearchStatus::Found)
    res.status = exhausted ? SearchStatus::Exhausted : SearchStatus::NotFound;
  return res;
}

std::vector<std::vector<int>> all_reduced_words(const ReducedWord& rw,
                                                std::size_t cap) {
  std::vector<std::vector<int>> out;
  bool exhausted = false;
  bfs_words(rw, cap, exhausted, [&](const std::vector<int>& w) {
    out.push_back(w);
    return false;
  });
  if (exhausted) throw ResourceError("reduced-word class exceeds the cap");
  return out;
}

bool word_contains_factor(const std::vector<int>& word,
                          const std::vector<int>& factor) {
  if (factor.empty()) return false;
  return std::search(word.begin(), word.end(), factor.begin(), factor.end()) !=
         word.end();
}

static bool factor_only_repetition(const std::vector<int>& word,
                                   const std::vector<int>& factor) {
  if (factor.empty() || factor.size() > word.size()) return false;
  for (std::size_t m = 0; m + factor.size() <= word.size(); ++m) {
    if (!std::equal(factor.begin(), factor.end(), word.begin() + m)) continue;
    std::vector<int> rest(word.begin(), word.begin() + m);
    rest.insert(rest.end(), word.begin() + m + factor.size(), word.end());
    std::sort(rest.begin(), rest.end());
    if (std::adjacent_find(rest.begin(), rest.end()) != rest.end()) continue;
    bool clash = std::any_of(rest.begin(), rest.end(), [&](int a) {
      return std::find(factor.begin(), factor.end(), a) != factor.end();
    });
    if (!clash) return true;
  }
  return false;
}

bool has_factor_no_other_repetition(const Permutation& w,
                                    const std::vector<int>& factor) {
  if (factor.empty()) return false;
  auto rw = reduced_word(w);
  auto res = reduced_words_reachable(rw, [&](const std::vector<int>& x) {
    return factor_only_repetition(x, factor);
  });
  if (res.status == SearchStatus::Exhausted)
    throw ResourceError("reduced-word search cap reached");
  return res.status == SearchStatus::Found;
}

bool has_factor_no_other_repetition(
    const Permutation& w, const std::function<std::vector<int>(int)>& factor,
    int lo, int hi) {
  for (int i = lo; i <= hi; ++i)
    if (has_factor_no_other_repetition(w, factor(i))) return true;
  return false;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw DomainError("size mismatch");
  const int n = u.size();
  std::vector<int> a, b;
  for (int i = 1; i < n; ++i) {
    a.insert(std::upper_bound(a.begin(), a.end(), u[i]), u[i]);
    b.insert(std::upper_bound(b.begin(), b.end(), w[i]), w[i]);
    for (int k = 0; k < i; ++k)
      if (a[k] > b[k]) return false;
  }
  return true;
}

std::vector<Permutation> commuting_factorization(const Permutation& w) {
  const int n = w.size();
  std::vector<int> s = support(w);
  std::vector<Permutation> out;
  for (std::size_t k = 0; k < s.size();) {
    std::size_t e = k;
    while (e + 1 < s.size() && s[e + 1] == s[e] + 1) ++e;
    // block of positions s[k] .. s[e]+1 is stable under w
    std::vector<int> f(n);
    std::iota(f.begin(), f.end(), 1);
    for (int pos = s[k]; pos <= s[e] + 1; ++pos) f[pos - 1] = w[pos];
    out.emplace_back(std::move(f));
    k = e + 1;
  }
  if (out.empty()) out.push_back(w);
  return out;
}

static std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i)
      throw DomainError("cannot parse '" + std::string(text) + "'");
    out.push_back(v);
    i = ptr - text.data();
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto v = parse_ints(text);
  // compact form "25314" for n <= 9
  if (v.size() == 1 && text.find_first_of(", ") == std::string_view::npos &&
      text.size() > 1) {
    v.clear();
    for (char c : text) v.push_back(c - '0');
  }
  if (v.empty()) throw DomainError("empty permutation");
  return Permutation(std::move(v));
}

ReducedWord parse_reduced_word(std::string_view text, int ambient_n) {
  ReducedWord rw{parse_ints(text), ambient_n};
  check_letters(rw);
  return rw;
}

std::string format(const Permutation& w, char sep) {
  std::string s;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) s += sep;
    s += std::to_string(w[i]);
  }
  return s;
}

std::string format(const ReducedWord& rw) {
  std::string s;
  for (std::size_t k = 0; k < rw.letters.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(rw.letters[k]);
  }
  return s;
}

static std::vector<Pattern> from_digits(std::initializer_list<const char*> xs) {
  std::vector<Pattern> out;
  for (const char* s : xs) out.push_back(parse_permutation(s));
  return out;
}

const std::vector<Pattern>& spherical_patterns() {
  static const std::vector<Pattern> ps = from_digits(
      {"24531", "25314", "25341", "34512", "34521", "35412", "35421",
       "42531", "45123", "45213", "45231", "45312", "52314", "52341",
       "53124", "53142", "53412", "53421", "54123", "54213", "54231"});
  return ps;
}

const std::vector<Pattern>& smooth_spherical_patterns() {
  static const std::vector<Pattern> ps =
      from_digits({"24531", "25314", "34521", "35421", "53124", "54123",
                   "54213", "3412", "4231"});
  return ps;
}

}  // namespace nt
