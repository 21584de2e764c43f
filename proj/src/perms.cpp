#include "vbg/perms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace vbg {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("degree " + std::to_string(n) + " out of range 1.." +
                                std::to_string(kMaxDegree));
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_degree(n);
  Permutation p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  check_degree(n);
  std::vector<bool> seen(n, false);
  Permutation p;
  p.img_.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = images[i];
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("not a permutation in one-line form");
    seen[v - 1] = true;
    p.img_[i] = v - 1;
  }
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::order() const {
  int ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<int>(c.size()));
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j + 1);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = img_[j];
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i) img[i - 1] = p.apply(q.apply(i));
  return Permutation::from_one_line(img);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int i = 1; i <= p.degree(); ++i) img[p.apply(i) - 1] = i;
  return Permutation::from_one_line(img);
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return compose(compose(g, x), inverse(g));
}

Permutation transposition(int n, int i) {
  check_degree(n);
  if (i < 1 || i >= n) throw std::invalid_argument("transposition index out of range");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[i - 1], img[i]);
  return Permutation::from_one_line(img);
}

Permutation parse_cycles(int n, const std::string& text) {
  check_degree(n);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle string");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("expected point in cycle string");
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1 || pt > n) throw std::invalid_argument("cycle point out of range");
      cyc.push_back(pt);
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
      skip_ws();
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    for (size_t k = 0; k + 1 < cyc.size(); ++k) img[cyc[k] - 1] = cyc[k + 1];
    if (cyc.size() > 1) img[cyc.back() - 1] = cyc[0];
    any = true;
    skip_ws();
  }
  if (!any && text.find('(') == std::string::npos)
    throw std::invalid_argument("empty cycle string; use '()' for the identity");
  return Permutation::from_one_line(img);
}

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& images) {
  if (images.empty()) throw std::invalid_argument("evaluate_word: no images");
  int n = images[0].degree();
  for (const Permutation& p : images)
    if (p.degree() != n) throw std::invalid_argument("evaluate_word: mixed degrees");
  Permutation acc = Permutation::identity(n);
  for (const Letter& l : w.letters()) {
    if (l.gen < 0 || l.gen >= static_cast<int>(images.size()))
      throw std::invalid_argument("evaluate_word: letter outside image table");
    const Permutation& g = images[l.gen];
    acc = compose(acc, l.sign > 0 ? g : inverse(g));
  }
  return acc;
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Closure closure(const std::vector<Permutation>& gens, int n) {
  check_degree(n);
  std::set<Permutation> seen;
  std::vector<Permutation> queue;
  Permutation id = Permutation::identity(n);
  seen.insert(id);
  queue.push_back(id);
  for (const Permutation& g : gens)
    if (g.degree() != n) throw std::invalid_argument("closure: degree mismatch");
  size_t head = 0;
  while (head < queue.size()) {
    Permutation x = queue[head++];
    for (const Permutation& g : gens) {
      Permutation y = compose(x, g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  Closure out;
  out.elements.assign(seen.begin(), seen.end());
  long long fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  out.full = static_cast<long long>(out.elements.size()) == fact;
  out.abelian = true;
  for (const Permutation& a : out.elements) {
    for (const Permutation& b : out.elements)
      if (compose(a, b) != compose(b, a)) {
        out.abelian = false;
        break;
      }
    if (!out.abelian) break;
  }
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  check_degree(n);
  std::map<std::vector<int>, long long> sizes;
  for (const Permutation& p : all_permutations(n)) ++sizes[p.cycle_type()];

  std::vector<std::vector<int>> order;
  if (n == 4) {
    order = {{1, 1, 1, 1}, {2, 2}, {2, 1, 1}, {4}, {3, 1}};
  } else {
    for (const auto& [type, sz] : sizes) order.push_back(type);
    std::sort(order.begin(), order.end());
  }

  std::vector<ConjugacyClass> out;
  for (const auto& type : order) {
    ConjugacyClass c;
    c.cycle_type = type;
    c.size = sizes.at(type);
    // Canonical representative: consecutive points per cycle.
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    int next = 1;
    for (int len : type) {
      if (len > 1) {
        for (int k = 0; k + 1 < len; ++k) img[next - 1 + k] = next + k + 1;
        img[next - 1 + len - 1] = next;
      }
      next += len;
    }
    c.representative = Permutation::from_one_line(img);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace vbg
