#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nt {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidWord : DomainError {
  using DomainError::DomainError;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One-line notation, values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(w_.size()); }
  int operator[](int i) const { return w_[i - 1]; }  // 1-based
  const std::vector<int>& word() const { return w_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

// LeftToRight: letters act on points leftmost first (one-line w_i = w(i)).
// Composition: start from the identity and swap positions a, a+1 for each
// letter in order; the composition word of w is the reverse of its
// LeftToRight word.
enum class WordConvention { LeftToRight, Composition };

struct ReducedWord {
  std::vector<int> letters;
  int ambient_n = 0;

  std::size_t size() const { return letters.size(); }
  bool operator==(const ReducedWord&) const = default;
};

using Pattern = Permutation;

// indices i in {1..n-1}, sorted
using DescentSet = std::vector<int>;

int evaluate_word(const ReducedWord& rw, int point);
Permutation evaluate(const ReducedWord& rw,
                     WordConvention conv = WordConvention::LeftToRight);
bool is_reduced(const ReducedWord& rw,
                WordConvention conv = WordConvention::LeftToRight);

int length(const Permutation& w);
Permutation inverse(const Permutation& w);

// (u*v)[j] = v[u[j]]: u's word followed by v's word under LeftToRight.
Permutation multiply(const Permutation& u, const Permutation& v);

Permutation simple(int i, int n);

ReducedWord reduced_word(const Permutation& w,
                         WordConvention conv = WordConvention::LeftToRight);

std::uint64_t count_pattern(const Permutation& w, const Pattern& p);
// stops counting once `limit` occurrences are seen
std::uint64_t count_pattern(const Permutation& w, const Pattern& p,
                            std::uint64_t limit);
std::uint64_t count_321(const Permutation& w);
bool contains_pattern(const Permutation& w, const Pattern& p);
bool avoids_all(const Permutation& w, const std::vector<Pattern>& ps);

DescentSet left_descent_set(const Permutation& w);
DescentSet right_descent_set(const Permutation& w);
Permutation longest_element(const DescentSet& indices, int n);

// {i : max(w_1..w_i) > i}; the letters of every reduced word
std::vector<int> support(const Permutation& w);
bool is_coxeter_of_support(const Permutation& w);

enum class SearchStatus { Found, NotFound, Exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  ReducedWord word;
  std::size_t visited = 0;
};

using WordPredicate = std::function<bool(const std::vector<int>&)>;

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

// BFS over braid and commutation moves starting at rw. Moves do not depend on
// the evaluation convention; reducedness is checked under LeftToRight (the
// reverse word is reduced iff the word is).
SearchResult reduced_words_reachable(const ReducedWord& rw,
                                     const WordPredicate& pred,
                                     std::size_t cap = kDefaultWordCap);

// every word in the commutation/braid class of rw, BFS order
std::vector<std::vector<int>> all_reduced_words(
    const ReducedWord& rw, std::size_t cap = kDefaultWordCap);

bool word_contains_factor(const std::vector<int>& word,
                          const std::vector<int>& factor);

bool has_factor_no_other_repetition(const Permutation& w,
                                    const std::vector<int>& factor);
// family form: factor(i) for each i in [lo, hi]
bool has_factor_no_other_repetition(
    const Permutation& w, const std::function<std::vector<int>(int)>& factor,
    int lo, int hi);

bool bruhat_leq(const Permutation& u, const Permutation& w);

std::vector<Permutation> commuting_factorization(const Permutation& w);

Permutation parse_permutation(std::string_view text);
ReducedWord parse_reduced_word(std::string_view text, int ambient_n);
std::string format(const Permutation& w, char sep = ' ');
std::string format(const ReducedWord& rw);

const std::vector<Pattern>& spherical_patterns();
const std::vector<Pattern>& smooth_spherical_patterns();

}  // namespace nt
