#include "vrc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace vrc {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : img_) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Perm: image sequence is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(Unchecked{}, std::move(img));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[static_cast<std::size_t>(x)] != x) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.img_.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    img[x] = p.img_[static_cast<std::size_t>(q.img_[x])];
  return Perm(Perm::Unchecked{}, std::move(img));
}

Perm inverse(const Perm& p) {
  std::vector<int> img(p.img_.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    img[static_cast<std::size_t>(p.img_[x])] = static_cast<int>(x);
  return Perm(Perm::Unchecked{}, std::move(img));
}

std::vector<int> cycle_type(const Perm& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> lengths;
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    int len = 0;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
      seen[static_cast<std::size_t>(y)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool is_even(const Perm& p) {
  int transpositions = 0;
  for (int len : cycle_type(p)) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string to_cycle_string(const Perm& p) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::ostringstream out;
  bool any = false;
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)] || p(x) == x) {
      seen[static_cast<std::size_t>(x)] = true;
      continue;
    }
    out << '(';
    bool first = true;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
      seen[static_cast<std::size_t>(y)] = true;
      if (!first) out << ' ';
      out << y;
      first = false;
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_cycles: expected point or ')'");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (value >= degree)
        throw std::invalid_argument("parse_cycles: point out of range");
      if (used[static_cast<std::size_t>(value)])
        throw std::invalid_argument("parse_cycles: repeated point");
      used[static_cast<std::size_t>(value)] = true;
      cycle.push_back(value);
      skip_ws();
    }
    if (i >= text.size()) throw std::invalid_argument("parse_cycles: unclosed cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

FiniteGroup FiniteGroup::closure(std::vector<Perm> generators, std::size_t cap) {
  if (generators.empty())
    throw std::invalid_argument("closure: need at least one generator");
  const int degree = generators.front().degree();
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("closure: generator degree mismatch");

  std::unordered_set<std::vector<int>, ImageHash> seen;
  std::queue<Perm> frontier;
  Perm id = Perm::identity(degree);
  seen.insert(id.images());
  frontier.push(id);
  std::vector<Perm> elems;
  elems.push_back(id);
  while (!frontier.empty()) {
    Perm u = std::move(frontier.front());
    frontier.pop();
    for (const Perm& g : generators) {
      Perm v = compose(u, g);
      if (seen.insert(v.images()).second) {
        if (elems.size() >= cap)
          throw SizeCapError("closure: group size exceeds cap");
        elems.push_back(v);
        frontier.push(v);
      }
    }
  }
  std::sort(elems.begin(), elems.end());

  std::vector<Perm> gens;
  for (Perm& g : generators)
    if (std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(std::move(g));
  return FiniteGroup(std::move(elems), std::move(gens));
}

FiniteGroup FiniteGroup::from_elements(std::vector<Perm> elements, std::size_t cap) {
  if (elements.empty())
    throw std::invalid_argument("from_elements: empty element list");
  if (elements.size() > cap)
    throw SizeCapError("from_elements: group size exceeds cap");
  const int degree = elements.front().degree();
  for (const Perm& p : elements)
    if (p.degree() != degree)
      throw std::invalid_argument("from_elements: degree mismatch");

  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("from_elements: duplicate elements");

  auto index_of = [&elements](const Perm& p) -> std::optional<std::size_t> {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  };

  if (!index_of(Perm::identity(degree)))
    throw std::invalid_argument("from_elements: identity missing");
  for (const Perm& p : elements)
    if (!index_of(inverse(p)))
      throw std::invalid_argument("from_elements: inverse missing");

  // Greedy generator extraction doubles as the closure proof: the spanned
  // set never leaves the element list and must end up covering all of it.
  std::vector<Perm> gens;
  std::vector<bool> in_span(elements.size(), false);
  std::size_t span_size = 0;
  auto respan = [&] {
    std::fill(in_span.begin(), in_span.end(), false);
    span_size = 0;
    std::queue<std::size_t> frontier;
    std::size_t id_idx = *index_of(Perm::identity(degree));
    in_span[id_idx] = true;
    ++span_size;
    frontier.push(id_idx);
    while (!frontier.empty()) {
      std::size_t u = frontier.front();
      frontier.pop();
      for (const Perm& g : gens) {
        Perm v = compose(elements[u], g);
        auto idx = index_of(v);
        if (!idx)
          throw std::invalid_argument("from_elements: not closed under composition");
        if (!in_span[*idx]) {
          in_span[*idx] = true;
          ++span_size;
          frontier.push(*idx);
        }
      }
    }
  };
  respan();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (in_span[i]) continue;
    gens.push_back(elements[i]);
    respan();
  }
  if (span_size != elements.size())
    throw std::invalid_argument("from_elements: generators do not span the list");
  return FiniteGroup(std::move(elements), std::move(gens));
}

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

const Perm& FiniteGroup::identity_element() const {
  auto idx = index_of(Perm::identity(degree()));
  return elems_[*idx];
}

std::vector<std::vector<Perm>> conjugacy_classes(const FiniteGroup& g) {
  const auto& elems = g.elements();
  std::vector<Perm> conj_gens = g.generators();
  std::vector<Perm> conj_inv;
  conj_inv.reserve(conj_gens.size());
  for (const Perm& h : conj_gens) conj_inv.push_back(inverse(h));

  std::vector<bool> visited(elems.size(), false);
  std::vector<std::vector<Perm>> classes;
  for (std::size_t start = 0; start < elems.size(); ++start) {
    if (visited[start]) continue;
    // Elements are scanned in ascending order, so `start` is the minimal
    // member of its class and classes come out ordered by minimal element.
    std::vector<std::size_t> orbit{start};
    visited[start] = true;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      std::size_t u = frontier.front();
      frontier.pop();
      for (std::size_t k = 0; k < conj_gens.size(); ++k) {
        Perm v = compose(conj_gens[k], compose(elems[u], conj_inv[k]));
        std::size_t idx = *g.index_of(v);
        if (!visited[idx]) {
          visited[idx] = true;
          orbit.push_back(idx);
          frontier.push(idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<Perm> members;
    members.reserve(orbit.size());
    for (std::size_t idx : orbit) members.push_back(elems[idx]);
    classes.push_back(std::move(members));
  }
  return classes;
}

namespace {

std::size_t centralizer_order_in(const FiniteGroup& g, const Perm& rep) {
  std::size_t count = 0;
  for (const Perm& h : g.elements())
    if (compose(h, rep) == compose(rep, h)) ++count;
  return count;
}

}  // namespace

std::size_t class_number(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  const std::size_t order = g.order();
  const std::size_t k = classes.size();

  std::size_t total = 0;
  std::uint64_t centralizer_sum = 0;
  for (const auto& cls : classes) {
    total += cls.size();
    std::size_t cent = centralizer_order_in(g, cls.front());
    if (cent * cls.size() != order)
      throw std::logic_error("class_number: orbit-stabilizer mismatch");
    centralizer_sum += static_cast<std::uint64_t>(cent) * cls.size();
  }
  if (total != order)
    throw std::logic_error("class_number: classes do not partition the group");

  // Burnside average k = (1/|G|) sum_g |C_G(g)|. For small groups, take the
  // sum over every element directly; above that, per-class representatives
  // scaled by class size (centralizer order is a class function).
  if (order <= 2048) {
    centralizer_sum = 0;
    for (const Perm& x : g.elements())
      centralizer_sum += centralizer_order_in(g, x);
  }
  if (centralizer_sum != static_cast<std::uint64_t>(k) * order)
    throw std::logic_error("class_number: Burnside identity violated");
  return k;
}

FiniteGroup centralizer_in_sym(const Perm& sigma, std::size_t cap) {
  const int n = sigma.degree();
  if (n == 0) return FiniteGroup::from_elements({Perm::identity(0)}, cap);

  // Cycles of sigma, keyed by start point; a commuting map sends each cycle
  // onto an equal-length cycle with a rotation offset, and every such choice
  // commutes. Enumerate all assignments directly.
  std::vector<std::vector<int>> cycles;
  {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      std::vector<int> cyc;
      for (int y = x; !seen[static_cast<std::size_t>(y)]; y = sigma(y)) {
        seen[static_cast<std::size_t>(y)] = true;
        cyc.push_back(y);
      }
      cycles.push_back(std::move(cyc));
    }
  }

  std::vector<Perm> elems;
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> cycle_used(cycles.size(), false);

  auto emit = [&] {
    if (elems.size() >= cap)
      throw SizeCapError("centralizer_in_sym: size exceeds cap");
    elems.push_back(Perm(img));
  };

  auto assign = [&](std::size_t ci, std::size_t cj, std::size_t offset, bool on) {
    const auto& from = cycles[ci];
    const auto& to = cycles[cj];
    for (std::size_t k = 0; k < from.size(); ++k) {
      int point = from[k];
      img[static_cast<std::size_t>(point)] =
          on ? to[(k + offset) % to.size()] : -1;
    }
    cycle_used[cj] = on;
  };

  auto walk = [&](auto&& self, std::size_t ci) -> void {
    if (ci == cycles.size()) {
      emit();
      return;
    }
    for (std::size_t cj = 0; cj < cycles.size(); ++cj) {
      if (cycle_used[cj] || cycles[cj].size() != cycles[ci].size()) continue;
      for (std::size_t offset = 0; offset < cycles[cj].size(); ++offset) {
        assign(ci, cj, offset, true);
        self(self, ci + 1);
        assign(ci, cj, offset, false);
      }
    }
  };
  walk(walk, 0);
  return FiniteGroup::from_elements(std::move(elems), cap);
}

FiniteGroup center(const FiniteGroup& g) {
  std::vector<Perm> central;
  for (const Perm& z : g.elements()) {
    bool commutes = true;
    for (const Perm& h : g.generators()) {
      if (!(compose(z, h) == compose(h, z))) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(z);
  }
  return FiniteGroup::from_elements(std::move(central));
}

FiniteGroup symmetric_group(int degree, std::size_t cap) {
  if (degree <= 1)
    return FiniteGroup::from_elements({Perm::identity(std::max(degree, 0))}, cap);
  std::vector<int> swap_img(static_cast<std::size_t>(degree));
  std::iota(swap_img.begin(), swap_img.end(), 0);
  std::swap(swap_img[0], swap_img[1]);
  std::vector<int> cycle_img(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x)
    cycle_img[static_cast<std::size_t>(x)] = (x + 1) % degree;
  return FiniteGroup::closure({Perm(swap_img), Perm(cycle_img)}, cap);
}

FiniteGroup alternating_group(int degree, std::size_t cap) {
  FiniteGroup sym = symmetric_group(degree, cap);
  std::vector<Perm> even;
  for (const Perm& p : sym.elements())
    if (is_even(p)) even.push_back(p);
  return FiniteGroup::from_elements(std::move(even), cap);
}

FiniteGroup cyclic_group(int degree) {
  if (degree <= 1)
    return FiniteGroup::from_elements({Perm::identity(std::max(degree, 0))});
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x)
    img[static_cast<std::size_t>(x)] = (x + 1) % degree;
  return FiniteGroup::closure({Perm(img)});
}

}  // namespace vrc
