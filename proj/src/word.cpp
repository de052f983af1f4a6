#include "strat/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace strat {

void Word::reduce() {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int letter : letters_) {
    if (letter == 0) continue;
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  letters_ = std::move(out);
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& letter : out) letter = -letter;
  Word w;
  w.letters_ = std::move(out);  // inverse of a reduced word is reduced
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::pow(int exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  int n = exponent < 0 ? -exponent : exponent;
  Word acc;
  for (int i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

Word Word::cyclically_reduced() const {
  std::vector<int> out = letters_;
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == -out[hi - 1]) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(out.begin() + static_cast<long>(lo),
                    out.begin() + static_cast<long>(hi));
  return w;
}

int Word::max_index() const {
  int best = -1;
  for (int letter : letters_) best = std::max(best, letter_index(letter));
  return best;
}

}  // namespace strat
