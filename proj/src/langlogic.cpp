#include "diamond/langlogic.hpp"

#include <stdexcept>

namespace diamond {

Word mark(const Word& w, int i) {
  if (i < 1 || i > static_cast<int>(w.size()))
    throw std::out_of_range("mark: position out of range");
  Word out(w.size());
  for (size_t j = 0; j < w.size(); ++j)
    out[j] = marked_index(w[j], static_cast<int>(j) == i - 1 ? 1 : 0);
  return out;
}

Word lift0(const Word& w) {
  Word out(w.size());
  for (size_t j = 0; j < w.size(); ++j) out[j] = marked_index(w[j], 0);
  return out;
}

int witness_count(const LanguageOracle& l, const Word& w) {
  int count = 0;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i)
    if (l.member(mark(w, i))) ++count;
  return count;
}

bool q_k_direct(const LanguageOracle& l, const Semiring& s, int k,
                const Word& w) {
  return s.sum_of_ones(witness_count(l, w)) == k;
}

std::vector<Word> words_up_to(int alphabet_size, int max_len) {
  std::vector<Word> out{{}};
  size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (int a = 0; a < alphabet_size; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

}  // namespace diamond
