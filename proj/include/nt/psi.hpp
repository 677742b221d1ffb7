#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nt/perm_core.hpp"

namespace nt {

enum class PsiCase { Case1, Case2, Case3 };

// Words here are in the Composition convention.
struct PsiWitness {
  ReducedWord word;
  int factor_position = 0;  // 1-based start of (i+2, i+1, i-1, i, i+1)
  int pivot_i = 0;
  PsiCase case_tag = PsiCase::Case3;
  std::optional<int> d;  // 1-based position of letter n outside the factor
};

struct PsiPair {
  Permutation m_elem;  // in M_{n+1}
  PsiWitness m_witness;
  Permutation b_elem;  // in B_n
  ReducedWord b_word;  // contains (i, i+1, i-1, i) with no other repetition
  int b_factor_position = 0;
};

// A witness word up to commutations: the pivot, the letters outside the
// factor, and for each adjacent pair (a, a+1) not internal to the factor
// whether a+1 occurs before a.
struct HeapConfig {
  int pivot_i = 0;
  std::vector<int> others;
  std::map<int, bool> up;
  bool operator==(const HeapConfig&) const = default;
};

// m (1-based) and i when `word` is an M-witness in S_N
std::optional<std::pair<int, int>> match_m_witness(const std::vector<int>& word, int N);
// m (1-based) and i when `word` is a B-witness in S_n
std::optional<std::pair<int, int>> match_b_witness(const std::vector<int>& word, int n);

PsiWitness find_witness(const Permutation& v, std::size_t cap = kDefaultWordCap);
std::vector<int> witness_pivots(const Permutation& v, std::size_t cap = kDefaultWordCap);
std::vector<PsiWitness> all_witnesses(const Permutation& v,
                                      std::size_t cap = kDefaultWordCap);

HeapConfig m_heap(const std::vector<int>& word, int i);
HeapConfig b_heap(const std::vector<int>& word, int i);
HeapConfig shift_m_to_b(const HeapConfig& h);
HeapConfig shift_b_to_m(const HeapConfig& h);
// canonical reading: factor kept contiguous and scheduled as late as possible
std::vector<int> build_m_word(const HeapConfig& h);
std::vector<int> build_b_word(const HeapConfig& h);

PsiPair psi(const Permutation& v, std::size_t cap = kDefaultWordCap);
PsiPair psi_inverse(const Permutation& w, std::size_t cap = kDefaultWordCap);

// Plain textual substitution on one witness word. Depends on the word chosen
// and is not injective; kept for comparison.
Permutation psi_literal(const PsiWitness& w);

const char* case_name(PsiCase c);

}  // namespace nt
