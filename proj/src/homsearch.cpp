#include "vbg/homsearch.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

namespace vbg {

namespace {

struct SearchPlan {
  // Generator indices in assignment order: involutions first.
  std::vector<int> order;
  // candidates[k]: allowed images for the k-th assigned generator.
  std::vector<const std::vector<Permutation>*> candidates;
  // relators_ready[k]: relators whose generators are all assigned once
  // the k-th assignment is made.
  std::vector<std::vector<const Word*>> relators_ready;
};

SearchPlan make_plan(const Presentation& p, const std::vector<Permutation>& all,
                     const std::vector<Permutation>& involutions) {
  SearchPlan plan;
  int g = p.generator_count();
  for (int i = 0; i < g; ++i)
    if (p.is_involution(i)) plan.order.push_back(i);
  for (int i = 0; i < g; ++i)
    if (!p.is_involution(i)) plan.order.push_back(i);
  std::vector<int> position(g);  // generator -> assignment step
  for (int k = 0; k < g; ++k) position[plan.order[k]] = k;
  for (int k = 0; k < g; ++k)
    plan.candidates.push_back(p.is_involution(plan.order[k]) ? &involutions : &all);
  plan.relators_ready.resize(g);
  for (const Word& r : p.relators()) {
    int last = -1;
    for (const Letter& l : r.letters()) last = std::max(last, position[l.gen]);
    if (last >= 0) plan.relators_ready[last].push_back(&r);
    // A relator with no letters is identically satisfied.
  }
  return plan;
}

struct Searcher {
  const Presentation& p;
  const SearchPlan& plan;
  int n;
  std::vector<std::optional<Permutation>> images;
  std::vector<std::vector<Permutation>>* out;

  Searcher(const Presentation& p_, const SearchPlan& plan_, int n_,
           std::vector<std::vector<Permutation>>* out_)
      : p(p_), plan(plan_), n(n_), images(p_.generator_count()), out(out_) {}

  bool relators_hold(int step) const {
    for (const Word* r : plan.relators_ready[step]) {
      Permutation acc = Permutation::identity(n);
      for (const Letter& l : r->letters()) {
        const Permutation& img = *images[l.gen];
        acc = compose(acc, l.sign > 0 ? img : inverse(img));
      }
      if (!acc.is_identity()) return false;
    }
    return true;
  }

  void search(int step) {
    int g = p.generator_count();
    if (step == g) {
      std::vector<Permutation> tuple;
      tuple.reserve(g);
      for (const auto& img : images) tuple.push_back(*img);
      out->push_back(std::move(tuple));
      return;
    }
    for (const Permutation& cand : *plan.candidates[step]) {
      images[plan.order[step]] = cand;
      if (relators_hold(step)) search(step + 1);
    }
    images[plan.order[step]].reset();
  }
};

}  // namespace

std::vector<std::vector<Permutation>> enumerate_homs(const Presentation& p, int n, int threads) {
  if (n < 1 || n > kMaxEnumerationDegree)
    throw std::invalid_argument("enumeration degree " + std::to_string(n) +
                                " exceeds the cap of " +
                                std::to_string(kMaxEnumerationDegree));
  int g = p.generator_count();
  std::vector<Permutation> all = all_permutations(n);
  std::vector<Permutation> involutions;
  for (const Permutation& q : all)
    if (q.order() <= 2) involutions.push_back(q);
  SearchPlan plan = make_plan(p, all, involutions);

  std::vector<std::vector<Permutation>> result;
  if (g == 0) {
    result.push_back({});
  } else if (threads <= 1) {
    Searcher s(p, plan, n, &result);
    s.search(0);
  } else {
    // Partition on the first assigned generator's image.
    const std::vector<Permutation>& first = *plan.candidates[0];
    std::vector<std::vector<std::vector<Permutation>>> parts(first.size());
    std::vector<std::thread> pool;
    int workers = std::min<int>(threads, static_cast<int>(first.size()));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t c = w; c < first.size(); c += workers) {
          Searcher s(p, plan, n, &parts[c]);
          s.images[plan.order[0]] = first[c];
          if (s.relators_hold(0)) s.search(1);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts)
      for (auto& tuple : part) result.push_back(std::move(tuple));
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

std::vector<Permutation> conjugate_tuple(const Permutation& c,
                                         const std::vector<Permutation>& images) {
  std::vector<Permutation> out;
  out.reserve(images.size());
  for (const Permutation& q : images) out.push_back(conjugate(c, q));
  return out;
}

}  // namespace

std::vector<Permutation> canonical_tuple(const std::vector<Permutation>& images, int n) {
  std::vector<Permutation> best = images;
  for (const Permutation& c : all_permutations(n)) {
    std::vector<Permutation> cand = conjugate_tuple(c, images);
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<HomClass> classify(const std::vector<std::vector<Permutation>>& homs, int n,
                               const std::vector<NamedHom>& named) {
  std::vector<Permutation> all = all_permutations(n);
  std::map<std::vector<Permutation>, HomClass> classes;
  std::set<std::vector<Permutation>> seen;
  for (const auto& h : homs) {
    if (seen.count(h)) continue;
    std::set<std::vector<Permutation>> orbit;
    for (const Permutation& c : all) orbit.insert(conjugate_tuple(c, h));
    HomClass cls;
    cls.representative = *orbit.begin();
    cls.orbit_size = static_cast<long long>(orbit.size());
    Closure img = closure(h, n);
    cls.surjective = img.full;
    cls.abelian_image = img.abelian;
    classes[cls.representative] = cls;
    seen.insert(orbit.begin(), orbit.end());
  }
  for (const NamedHom& nh : named) {
    if (nh.degree != n) continue;
    auto it = classes.find(canonical_tuple(nh.images, n));
    if (it != classes.end() && it->second.matched_name.empty())
      it->second.matched_name = nh.name;
  }
  std::vector<HomClass> out;
  for (auto& [rep, cls] : classes) out.push_back(std::move(cls));
  return out;
}

bool descends(const std::vector<Permutation>& images, const std::vector<Word>& extra_relators) {
  for (const Word& r : extra_relators)
    if (!evaluate_word(r, images).is_identity()) return false;
  return true;
}

namespace {

using PermPair = std::pair<Permutation, Permutation>;

}  // namespace

bool kernel_equal(const std::vector<Permutation>& h1, int n1, const std::vector<Permutation>& h2,
                  int n2) {
  if (h1.size() != h2.size())
    throw std::invalid_argument("kernel_equal: generator counts differ");
  size_t im1 = closure(h1, n1).elements.size();
  size_t im2 = closure(h2, n2).elements.size();
  // Pair subgroup generated by (h1(g), h2(g)): its projections are onto
  // the two images, so it is a graph in both directions exactly when
  // the three orders agree.
  std::set<PermPair> seen;
  std::vector<PermPair> queue;
  PermPair id{Permutation::identity(n1), Permutation::identity(n2)};
  seen.insert(id);
  queue.push_back(id);
  size_t head = 0;
  while (head < queue.size()) {
    PermPair x = queue[head++];
    for (size_t g = 0; g < h1.size(); ++g) {
      PermPair y{compose(x.first, h1[g]), compose(x.second, h2[g])};
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen.size() == im1 && seen.size() == im2;
}

CertificateResult characteristic_certificate(const std::vector<HomClass>& classes,
                                             int target_index,
                                             const std::vector<AbelianInvariants>& invariants,
                                             int n) {
  if (invariants.size() != classes.size())
    throw std::invalid_argument("characteristic_certificate: invariants incomplete");
  if (target_index < 0 || target_index >= static_cast<int>(classes.size()))
    throw std::invalid_argument("characteristic_certificate: bad target index");
  CertificateResult res;
  const HomClass& target = classes[target_index];
  for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
    if (i == target_index) continue;
    if (invariants[i] != invariants[target_index]) continue;  // kernels not isomorphic
    if (kernel_equal(classes[i].representative, n, target.representative, n)) continue;
    res.offenders.push_back(i);
  }
  res.certified = res.offenders.empty();
  if (!res.certified) {
    res.detail = "classes with matching abelian invariants but provably different kernels";
  }
  return res;
}

}  // namespace vbg
