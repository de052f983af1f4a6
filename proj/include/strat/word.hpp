#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace strat {

// A letter is a signed generator reference: +(i+1) is generator i, -(i+1) its
// inverse. Words are freely reduced at all times; the empty word is identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
    reduce();
  }

  static Word generator(int index, bool inverted = false) {
    return Word({inverted ? -(index + 1) : index + 1});
  }

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(int exponent) const;

  // Conjugates stripped off both ends: u w u^-1 -> w.
  Word cyclically_reduced() const;

  // Largest generator index occurring, or -1 for the empty word.
  int max_index() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  void reduce();
  std::vector<int> letters_;
};

inline int letter_index(int letter) { return (letter > 0 ? letter : -letter) - 1; }
inline int letter_inverse(int letter) { return -letter; }

}  // namespace strat
