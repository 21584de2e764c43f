#include "vbg/words.hpp"

#include <cctype>
#include <sstream>

namespace vbg {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(Letter{it->gen, -it->sign});
  return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word substitute(const Word& w, const std::vector<std::optional<Word>>& images) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= static_cast<int>(images.size()) || !images[l.gen])
      throw std::invalid_argument("substitute: no image for generator index " +
                                  std::to_string(l.gen));
    const Word& img = *images[l.gen];
    if (l.sign > 0) {
      for (const Letter& m : img.letters()) out.push_back(m);
    } else {
      Word inv = img.inverse();
      for (const Letter& m : inv.letters()) out.push_back(m);
    }
  }
  return free_reduce(Word(std::move(out)));
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  std::vector<std::optional<Word>> opt(images.begin(), images.end());
  return substitute(w, opt);
}

int Presentation::add_generator(const std::string& gen_name, bool involution) {
  if (index_.count(gen_name))
    throw std::invalid_argument("duplicate generator '" + gen_name + "'");
  int idx = static_cast<int>(names_.size());
  names_.push_back(gen_name);
  involution_.push_back(involution);
  index_[gen_name] = idx;
  if (involution) relators_.push_back(Word::gen(idx) * Word::gen(idx));
  return idx;
}

void Presentation::add_relator(Word w) { relators_.push_back(free_reduce(w)); }

void Presentation::add_relation(const Word& left, const Word& right) {
  relators_.push_back(free_reduce(left * right.inverse()));
}

int Presentation::generator_index(const std::string& gen_name) const {
  auto it = index_.find(gen_name);
  return it == index_.end() ? -1 : it->second;
}

bool Presentation::operator==(const Presentation& o) const {
  return name_ == o.name_ && names_ == o.names_ && involution_ == o.involution_ &&
         relators_ == o.relators_;
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << names_.at(l.gen);
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int line, column;
};

std::vector<Token> tokenize_line(const std::string& line, int lineno) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t start = i;
    if (line[i] == '=') {
      ++i;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '#' && line[i] != '=')
        ++i;
    }
    out.push_back(Token{line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// name | name^-1 | name^k  ->  letters appended to out
void parse_word_token(const Presentation& p, const Token& tok, std::vector<Letter>& out) {
  const std::string& t = tok.text;
  size_t caret = t.find('^');
  std::string base = caret == std::string::npos ? t : t.substr(0, caret);
  long long exp = 1;
  if (caret != std::string::npos) {
    std::string es = t.substr(caret + 1);
    if (es.empty() || (es.size() == 1 && (es[0] == '-' || es[0] == '+')))
      throw ParseError(tok.line, tok.column, "malformed exponent in '" + t + "'");
    size_t pos = 0;
    try {
      exp = std::stoll(es, &pos);
    } catch (const std::exception&) {
      throw ParseError(tok.line, tok.column, "malformed exponent in '" + t + "'");
    }
    if (pos != es.size()) throw ParseError(tok.line, tok.column, "malformed exponent in '" + t + "'");
  }
  if (!valid_name(base)) throw ParseError(tok.line, tok.column, "bad generator name '" + base + "'");
  int idx = p.generator_index(base);
  if (idx < 0) throw ParseError(tok.line, tok.column, "unknown generator '" + base + "'");
  int sign = exp < 0 ? -1 : 1;
  for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k) out.push_back(Letter{idx, sign});
}

}  // namespace

Word Presentation::parse_word(const std::string& text) const {
  std::vector<Letter> letters;
  for (const Token& tok : tokenize_line(text, 1)) {
    if (tok.text == "=") throw ParseError(tok.line, tok.column, "unexpected '='");
    if (tok.text == "1") continue;  // identity
    parse_word_token(*this, tok, letters);
  }
  return Word(std::move(letters));
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_group = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<Token> toks = tokenize_line(line, lineno);
    if (toks.empty()) continue;
    const Token& head = toks[0];
    if (head.text == "group") {
      if (have_group) throw ParseError(head.line, head.column, "duplicate group header");
      if (toks.size() != 2 || !valid_name(toks[1].text))
        throw ParseError(head.line, head.column, "expected: group <name>");
      p.set_name(toks[1].text);
      have_group = true;
    } else if (head.text == "gen") {
      if (!have_group) throw ParseError(head.line, head.column, "gen before group header");
      if (toks.size() < 2 || toks.size() > 3 || !valid_name(toks[1].text))
        throw ParseError(head.line, head.column, "expected: gen <name> [inv]");
      bool inv = false;
      if (toks.size() == 3) {
        if (toks[2].text != "inv")
          throw ParseError(toks[2].line, toks[2].column, "expected 'inv', got '" + toks[2].text + "'");
        inv = true;
      }
      if (p.generator_index(toks[1].text) >= 0)
        throw ParseError(toks[1].line, toks[1].column, "duplicate generator '" + toks[1].text + "'");
      p.add_generator(toks[1].text, inv);
    } else if (head.text == "rel") {
      if (!have_group) throw ParseError(head.line, head.column, "rel before group header");
      if (toks.size() < 2) throw ParseError(head.line, head.column, "empty relator");
      std::vector<Letter> left, right;
      bool after_eq = false;
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].text == "=") {
          if (after_eq) throw ParseError(toks[i].line, toks[i].column, "second '=' in relation");
          after_eq = true;
          continue;
        }
        if (toks[i].text == "1") continue;  // identity on either side
        parse_word_token(p, toks[i], after_eq ? right : left);
      }
      if (after_eq)
        p.add_relation(Word(std::move(left)), Word(std::move(right)));
      else
        p.add_relator(Word(std::move(left)));
    } else {
      throw ParseError(head.line, head.column, "unknown directive '" + head.text + "'");
    }
  }
  if (!have_group) throw ParseError(1, 1, "missing group header");
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "group " << p.name() << "\n";
  for (int i = 0; i < p.generator_count(); ++i) {
    os << "gen " << p.generator_name(i);
    if (p.is_involution(i)) os << " inv";
    os << "\n";
  }
  // Involution squares were added by add_generator; skip the first
  // occurrence of each so that parsing the output rebuilds the same list.
  std::vector<bool> skipped(p.generator_count(), false);
  for (const Word& r : p.relators()) {
    bool is_square = r.length() == 2 && r.letters()[0] == r.letters()[1] &&
                     r.letters()[0].sign == 1 && p.is_involution(r.letters()[0].gen) &&
                     !skipped[r.letters()[0].gen];
    if (is_square) {
      skipped[r.letters()[0].gen] = true;
      continue;
    }
    os << "rel " << p.word_string(r) << "\n";
  }
  return os.str();
}

}  // namespace vbg
