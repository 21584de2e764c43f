#pragma once

// Free-group words over a presentation's generators, presentations with
// involution flags, and a small text format for describing them:
//
//   group VB3          # header
//   gen s1             # generator
//   gen v1 inv         # involution generator (adds the relator v1 v1)
//   rel s1 s2 s1 = s2 s1 s2
//   rel v1 s2^-1 v1    # single-sided relator
//
// Word tokens are `name`, `name^-1` or `name^k`; exponents are expanded
// at parse time.  Free reduction cancels adjacent x x^-1 pairs only and
// never applies involution relations.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vbg {

struct Letter {
  int gen;   // generator index within the presentation
  int sign;  // +1 or -1

  bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
};

class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word gen(int index, int sign = 1) { return Word({Letter{index, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& o) const;  // concatenation, no reduction
  bool operator==(const Word& o) const { return letters_ == o.letters_; }

private:
  std::vector<Letter> letters_;
};

// Cancel adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

// Replace every letter by the (signed) image word and freely reduce.
// images[i] is the image of generator i; a missing image is an error.
Word substitute(const Word& w, const std::vector<std::optional<Word>>& images);
Word substitute(const Word& w, const std::vector<Word>& images);

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                           ": " + what_),
        line(line_),
        column(col_) {}
};

class Presentation {
public:
  Presentation() = default;
  explicit Presentation(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // Returns the new generator's index.  Flagging a generator as an
  // involution also appends the relator g g.
  int add_generator(const std::string& gen_name, bool involution = false);
  void add_relator(Word w);
  // left = right stored as left * right^-1, freely reduced.
  void add_relation(const Word& left, const Word& right);

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::string& generator_name(int i) const { return names_.at(i); }
  bool is_involution(int i) const { return involution_.at(i); }
  int generator_index(const std::string& gen_name) const;  // -1 if absent
  const std::vector<Word>& relators() const { return relators_; }

  bool operator==(const Presentation& o) const;

  // Word in this presentation's generator names, e.g. "s1 v2^-1"; the
  // empty word renders as "1".
  std::string word_string(const Word& w) const;
  Word parse_word(const std::string& text) const;  // throws ParseError

private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<bool> involution_;
  std::map<std::string, int> index_;
  std::vector<Word> relators_;
};

Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& p);

}  // namespace vbg
