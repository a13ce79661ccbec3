#ifndef KAL_ALPHABET_HPP_
#define KAL_ALPHABET_HPP_

#include <cstddef>
#include <string>

namespace kal {

// Words are plain strings over an Alphabet; the empty string is the empty
// word.
using Word = std::string;

// An ordered list of distinct printable letters. The order is fixed and is
// the exploration order for every canonical numbering in the library.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string letters);

  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t i) const { return letters_[i]; }
  std::string const& letters() const { return letters_; }

  bool contains(char c) const;

  // Position of c; throws InputError if c is not a letter.
  std::size_t index(char c) const;

  // Throws InputError if some symbol of w is not a letter.
  void check_word(Word const& w) const;

  bool operator==(Alphabet const&) const = default;

 private:
  std::string letters_;
};

}  // namespace kal

#endif  // KAL_ALPHABET_HPP_
