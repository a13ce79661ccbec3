#include "kal/alphabet.hpp"

#include <algorithm>

#include "kal/errors.hpp"

namespace kal {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw InputError("alphabet must be nonempty");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    for (std::size_t j = i + 1; j < letters_.size(); ++j) {
      if (letters_[i] == letters_[j]) {
        throw InputError(std::string("duplicate letter '") + letters_[i] +
                         "' in alphabet");
      }
    }
  }
}

bool Alphabet::contains(char c) const {
  return letters_.find(c) != std::string::npos;
}

std::size_t Alphabet::index(char c) const {
  auto pos = letters_.find(c);
  if (pos == std::string::npos) {
    throw InputError(std::string("letter '") + c + "' not in alphabet " +
                     letters_);
  }
  return pos;
}

void Alphabet::check_word(Word const& w) const {
  for (char c : w) {
    index(c);
  }
}

}  // namespace kal
