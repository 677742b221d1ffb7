#include "nt/psi.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "nt/classify.hpp"

namespace nt {

namespace {

// factor at 0-based m, all other letters distinct and absent from the factor
bool rest_distinct(const std::vector<int>& word, std::size_t m, std::size_t len) {
  std::set<int> inside(word.begin() + m, word.begin() + m + len);
  std::set<int> seen;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k >= m && k < m + len) continue;
    if (inside.count(word[k]) || !seen.insert(word[k]).second) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> match_factor(
    const std::vector<int>& word, int lo, int hi,
    std::vector<int> (*factor)(int)) {
  for (std::size_t m = 0; m < word.size(); ++m) {
    for (int i = lo; i <= hi; ++i) {
      auto f = factor(i);
      if (m + f.size() > word.size()) continue;
      if (!std::equal(f.begin(), f.end(), word.begin() + m)) continue;
      if (rest_distinct(word, m, f.size()))
        return std::make_pair(static_cast<int>(m) + 1, i);
    }
  }
  return std::nullopt;
}

std::vector<int> m_factor(int i) { return {i + 2, i + 1, i - 1, i, i + 1}; }
std::vector<int> b_factor(int i) { return {i, i + 1, i - 1, i}; }

HeapConfig heap_of(const std::vector<int>& word, int i, std::set<int> factor_letters,
                   std::set<int> skip) {
  HeapConfig h;
  h.pivot_i = i;
  std::map<int, int> first;
  for (std::size_t k = 0; k < word.size(); ++k) first.emplace(word[k], static_cast<int>(k));
  for (auto [a, pos] : first) {
    if (!factor_letters.count(a)) h.others.push_back(a);
    auto it = first.find(a + 1);
    if (it != first.end() && !skip.count(a)) h.up[a] = it->second < pos;
  }
  return h;
}

// Kahn reading with the factor as one block
std::vector<int> build(const HeapConfig& h, const std::vector<int>& factor) {
  std::set<int> in_factor(factor.begin(), factor.end());
  constexpr int F = 0;  // node id for the block; letters are >= 1
  auto node = [&](int a) { return in_factor.count(a) ? F : a; };

  std::map<int, std::vector<int>> out;
  std::map<int, int> indeg;
  indeg[F] = 0;
  for (int a : h.others) indeg[a] = 0;
  for (auto [a, up] : h.up) {
    int x = node(a), y = node(a + 1);
    if (x == y) continue;
    if (up) std::swap(x, y);
    out[x].push_back(y);
    ++indeg[y];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  bool block_ready = false;
  for (auto [u, d] : indeg)
    if (d == 0) {
      if (u == F)
        block_ready = true;
      else
        ready.push(u);
    }
  std::vector<int> word;
  auto release = [&](int u) {
    for (int v : out[u])
      if (--indeg[v] == 0) {
        if (v == F)
          block_ready = true;
        else
          ready.push(v);
      }
  };
  while (!ready.empty() || block_ready) {
    if (!ready.empty()) {
      int u = ready.top();
      ready.pop();
      word.push_back(u);
      release(u);
    } else {
      block_ready = false;
      word.insert(word.end(), factor.begin(), factor.end());
      release(F);
    }
  }
  if (word.size() != h.others.size() + factor.size())
    throw std::logic_error("heap has a cycle");
  return word;
}

PsiWitness witness_from_word(std::vector<int> word, int N) {
  auto mi = match_m_witness(word, N);
  if (!mi) throw std::logic_error("not a witness word");
  PsiWitness w;
  w.factor_position = mi->first;
  w.pivot_i = mi->second;
  const int n = N - 1;
  if (w.pivot_i + 2 == n) {
    w.case_tag = PsiCase::Case1;
  } else {
    auto it = std::find(word.begin(), word.end(), n);
    if (it != word.end()) {
      w.case_tag = PsiCase::Case2;
      w.d = static_cast<int>(it - word.begin()) + 1;
    } else {
      w.case_tag = PsiCase::Case3;
    }
  }
  w.word = ReducedWord{std::move(word), N};
  return w;
}

SearchResult search(const Permutation& p, std::size_t cap, const WordPredicate& pred) {
  auto res = reduced_words_reachable(reduced_word(p, WordConvention::Composition), pred, cap);
  if (res.status == SearchStatus::Exhausted)
    throw ResourceError("reduced-word search cap reached");
  if (res.status == SearchStatus::NotFound)
    throw DomainError("no witness word found");
  return res;
}

}  // namespace

std::optional<std::pair<int, int>> match_m_witness(const std::vector<int>& word, int N) {
  return match_factor(word, 2, N - 3, m_factor);
}

std::optional<std::pair<int, int>> match_b_witness(const std::vector<int>& word, int n) {
  return match_factor(word, 2, n - 2, b_factor);
}

HeapConfig m_heap(const std::vector<int>& word, int i) {
  return heap_of(word, i, {i - 1, i, i + 1, i + 2}, {i - 1, i, i + 1});
}

HeapConfig b_heap(const std::vector<int>& word, int i) {
  return heap_of(word, i, {i - 1, i, i + 1}, {i - 1, i});
}

HeapConfig shift_m_to_b(const HeapConfig& h) {
  const int i = h.pivot_i;
  std::set<int> S(h.others.begin(), h.others.end());
  int k = i + 2;
  while (S.count(k + 1)) ++k;
  std::vector<bool> o;
  for (int a = i + 2; a < k; ++a) o.push_back(h.up.at(a));

  HeapConfig g;
  g.pivot_i = i;
  for (int a : h.others) g.others.push_back(a <= i - 2 ? a : a - 1);
  for (auto [a, bit] : h.up) {
    if (a <= i - 2)
      g.up[a] = bit;
    else if (a >= k + 2)
      g.up[a - 1] = bit;
  }
  const int L = static_cast<int>(o.size());
  for (int j = 0; j < L; ++j) g.up[i + 1 + j] = !o[L - 1 - j];
  return g;
}

HeapConfig shift_b_to_m(const HeapConfig& g) {
  const int i = g.pivot_i;
  std::set<int> S(g.others.begin(), g.others.end());
  int k = i + 1;
  while (S.count(k + 1)) ++k;
  std::vector<bool> o;
  for (int a = i + 1; a < k; ++a) o.push_back(g.up.at(a));

  HeapConfig h;
  h.pivot_i = i;
  for (int a : g.others) h.others.push_back(a <= i - 2 ? a : a + 1);
  for (auto [a, bit] : g.up) {
    if (a <= i - 2)
      h.up[a] = bit;
    else if (a >= k + 2)
      h.up[a + 1] = bit;
  }
  const int L = static_cast<int>(o.size());
  for (int j = 0; j < L; ++j) h.up[i + 2 + j] = !o[L - 1 - j];
  return h;
}

std::vector<int> build_m_word(const HeapConfig& h) { return build(h, m_factor(h.pivot_i)); }
std::vector<int> build_b_word(const HeapConfig& h) { return build(h, b_factor(h.pivot_i)); }

PsiWitness find_witness(const Permutation& v, std::size_t cap) {
  if (!class_membership(v).in_M) throw DomainError("not in M: " + format(v));
  const int N = v.size();
  auto res = search(v, cap, [&](const std::vector<int>& x) {
    return match_m_witness(x, N).has_value();
  });
  int i = match_m_witness(res.word.letters, N)->second;
  auto canon = build_m_word(m_heap(res.word.letters, i));
  auto w = witness_from_word(std::move(canon), N);
  if (evaluate(w.word, WordConvention::Composition) != v)
    throw std::logic_error("canonical witness does not evaluate to v");
  return w;
}

std::vector<PsiWitness> all_witnesses(const Permutation& v, std::size_t cap) {
  if (!class_membership(v).in_M) throw DomainError("not in M: " + format(v));
  std::vector<PsiWitness> out;
  for (auto& x : all_reduced_words(reduced_word(v, WordConvention::Composition), cap))
    if (match_m_witness(x, v.size())) out.push_back(witness_from_word(x, v.size()));
  return out;
}

std::vector<int> witness_pivots(const Permutation& v, std::size_t cap) {
  std::set<int> s;
  for (const auto& w : all_witnesses(v, cap)) s.insert(w.pivot_i);
  return {s.begin(), s.end()};
}

PsiPair psi(const Permutation& v, std::size_t cap) {
  PsiPair r;
  r.m_elem = v;
  r.m_witness = find_witness(v, cap);
  const int n = v.size() - 1;
  auto g = shift_m_to_b(m_heap(r.m_witness.word.letters, r.m_witness.pivot_i));
  r.b_word = ReducedWord{build_b_word(g), n};
  r.b_factor_position = match_b_witness(r.b_word.letters, n)->first;
  r.b_elem = evaluate(r.b_word, WordConvention::Composition);
  return r;
}

PsiPair psi_inverse(const Permutation& w, std::size_t cap) {
  if (!class_membership(w).in_B) throw DomainError("not in B: " + format(w));
  const int n = w.size();
  auto res = search(w, cap, [&](const std::vector<int>& x) {
    return match_b_witness(x, n).has_value();
  });
  int i = match_b_witness(res.word.letters, n)->second;
  auto g = b_heap(res.word.letters, i);

  PsiPair r;
  r.b_elem = w;
  r.b_word = ReducedWord{build_b_word(g), n};
  r.b_factor_position = match_b_witness(r.b_word.letters, n)->first;
  r.m_witness = witness_from_word(build_m_word(shift_b_to_m(g)), n + 1);
  r.m_elem = evaluate(r.m_witness.word, WordConvention::Composition);
  return r;
}

Permutation psi_literal(const PsiWitness& w) {
  const int N = w.word.ambient_n, n = N - 1, i = w.pivot_i;
  const auto& x = w.word.letters;
  const std::size_t m = w.factor_position - 1;
  std::vector<int> out(x.begin(), x.begin() + m);
  for (int a : b_factor(i)) out.push_back(a);
  for (std::size_t k = m + 5; k < x.size(); ++k) out.push_back(x[k]);
  if (w.case_tag == PsiCase::Case2)
    for (int& a : out)
      if (a == n) a = i + 2;
  return evaluate(ReducedWord{out, n}, WordConvention::Composition);
}

const char* case_name(PsiCase c) {
  switch (c) {
    case PsiCase::Case1: return "1";
    case PsiCase::Case2: return "2";
    case PsiCase::Case3: return "3";
  }
  return "?";
}

}  // namespace nt
