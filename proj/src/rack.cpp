#include "vrc/rack.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vrc {

namespace {

bool rows_self_distribute(const std::vector<std::vector<int>>& rows, int x, int y) {
  const int n = static_cast<int>(rows.size());
  const auto& sx = rows[static_cast<std::size_t>(x)];
  const auto& sy = rows[static_cast<std::size_t>(y)];
  const auto& sz = rows[static_cast<std::size_t>(sx[static_cast<std::size_t>(y)])];
  for (int t = 0; t < n; ++t) {
    int lhs = sx[static_cast<std::size_t>(sy[static_cast<std::size_t>(t)])];
    int rhs = sz[static_cast<std::size_t>(sx[static_cast<std::size_t>(t)])];
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

std::variant<RackTable, std::vector<RackViolation>> validate_rack(
    int n, const std::vector<std::vector<int>>& rows) {
  if (n < 1) throw std::invalid_argument("validate_rack: order must be positive");
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("validate_rack: row count differs from order");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("validate_rack: row length differs from order");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("validate_rack: entry out of range");
  }

  std::vector<RackViolation> violations;
  for (int x = 0; x < n; ++x) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    bool bijective = true;
    for (int v : rows[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(v)]) bijective = false;
      seen[static_cast<std::size_t>(v)] = true;
    }
    if (!bijective)
      violations.push_back({x, -1, RackViolationKind::NotBijective});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!rows_self_distribute(rows, x, y))
        violations.push_back({x, y, RackViolationKind::SelfDistributivity});

  if (!violations.empty()) return violations;

  RackTable r;
  r.n = n;
  r.rows.reserve(static_cast<std::size_t>(n));
  for (const auto& row : rows) r.rows.push_back(Perm(row));
  return r;
}

RackTable make_rack(int n, const std::vector<std::vector<int>>& rows) {
  auto checked = validate_rack(n, rows);
  if (auto* table = std::get_if<RackTable>(&checked)) return std::move(*table);
  const auto& violations = std::get<std::vector<RackViolation>>(checked);
  std::string what = "make_rack: " + std::to_string(violations.size()) +
                     " axiom violation(s), first at row " +
                     std::to_string(violations.front().x);
  throw std::invalid_argument(what);
}

bool is_quandle(const RackTable& r) {
  for (int x = 0; x < r.n; ++x)
    if (r.rows[static_cast<std::size_t>(x)](x) != x) return false;
  return true;
}

RackTable permutation_rack(int n, const Perm& sigma) {
  if (sigma.degree() != n)
    throw std::invalid_argument("permutation_rack: degree mismatch");
  RackTable r;
  r.n = n;
  r.rows.assign(static_cast<std::size_t>(n), sigma);
  return r;
}

RackTable trivial_quandle(int n) {
  return permutation_rack(n, Perm::identity(n));
}

namespace {

void validate_group_table_light(const GroupTable& g) {
  const int n = g.n;
  if (n < 1) throw std::invalid_argument("GroupTable: order must be positive");
  if (static_cast<int>(g.product.size()) != n)
    throw std::invalid_argument("GroupTable: bad product table shape");
  for (const auto& row : g.product) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("GroupTable: bad product table shape");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("GroupTable: product entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
      throw std::invalid_argument("GroupTable: identity law fails");
    int b = g.inv(a);
    if (b < 0 || b >= n || g.mul(a, b) != g.identity || g.mul(b, a) != g.identity)
      throw std::invalid_argument("GroupTable: inverse law fails");
  }
}

}  // namespace

GroupTable GroupTable::from_product_table(std::vector<std::vector<int>> product) {
  GroupTable g;
  g.n = static_cast<int>(product.size());
  g.product = std::move(product);
  if (g.n > 512)
    throw SizeCapError("GroupTable: associativity check capped at order 512");

  // Locate the identity, derive inverses, then check associativity in full.
  g.identity = -1;
  for (int e = 0; e < g.n; ++e) {
    bool ok = true;
    for (int a = 0; a < g.n && ok; ++a)
      ok = g.product[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] == a &&
           g.product[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] == a;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw std::invalid_argument("GroupTable: no identity element");
  g.inverse.assign(static_cast<std::size_t>(g.n), -1);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity)
        g.inverse[static_cast<std::size_t>(a)] = b;
  validate_group_table_light(g);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw std::invalid_argument("GroupTable: associativity fails");
  return g;
}

GroupTable GroupTable::from_permutation_group(const FiniteGroup& group) {
  const auto& elems = group.elements();
  const int n = static_cast<int>(elems.size());
  GroupTable g;
  g.n = n;
  g.product.assign(static_cast<std::size_t>(n),
                   std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto idx = group.index_of(compose(elems[static_cast<std::size_t>(a)],
                                        elems[static_cast<std::size_t>(b)]));
      g.product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          static_cast<int>(*idx);
    }
  g.identity = static_cast<int>(*group.index_of(Perm::identity(group.degree())));
  g.inverse.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    g.inverse[static_cast<std::size_t>(a)] =
        static_cast<int>(*group.index_of(inverse(elems[static_cast<std::size_t>(a)])));
  validate_group_table_light(g);
  return g;
}

GroupTable GroupTable::cyclic(int n) {
  std::vector<std::vector<int>> product(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return from_product_table(std::move(product));
}

bool GroupTable::is_central(int g) const {
  for (int h = 0; h < n; ++h)
    if (mul(g, h) != mul(h, g)) return false;
  return true;
}

RackTable conjugation_quandle(const GroupTable& g) {
  RackTable r;
  r.n = g.n;
  r.rows.reserve(static_cast<std::size_t>(g.n));
  for (int x = 0; x < g.n; ++x) {
    std::vector<int> img(static_cast<std::size_t>(g.n));
    for (int y = 0; y < g.n; ++y)
      img[static_cast<std::size_t>(y)] = g.mul(g.mul(x, y), g.inv(x));
    r.rows.push_back(Perm(std::move(img)));
  }
  return r;
}

RackTable takasaki_kei(const std::vector<int>& cyclic_factors) {
  if (cyclic_factors.empty())
    throw std::invalid_argument("takasaki_kei: factor list is empty");
  long long order = 1;
  for (int f : cyclic_factors) {
    if (f < 1) throw std::invalid_argument("takasaki_kei: factors must be positive");
    order *= f;
    if (order > 1'000'000)
      throw SizeCapError("takasaki_kei: order exceeds cap");
  }
  const int n = static_cast<int>(order);
  const int m = static_cast<int>(cyclic_factors.size());

  // Mixed-radix with the last factor varying fastest.
  auto decode = [&](int index) {
    std::vector<int> tuple(static_cast<std::size_t>(m));
    for (int j = m - 1; j >= 0; --j) {
      tuple[static_cast<std::size_t>(j)] = index % cyclic_factors[static_cast<std::size_t>(j)];
      index /= cyclic_factors[static_cast<std::size_t>(j)];
    }
    return tuple;
  };
  auto encode = [&](const std::vector<int>& tuple) {
    int index = 0;
    for (int j = 0; j < m; ++j)
      index = index * cyclic_factors[static_cast<std::size_t>(j)] +
              tuple[static_cast<std::size_t>(j)];
    return index;
  };

  RackTable r;
  r.n = n;
  r.rows.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    auto gt = decode(g);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h) {
      auto ht = decode(h);
      std::vector<int> out(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) {
        int f = cyclic_factors[static_cast<std::size_t>(j)];
        // Point reflection through g.
        out[static_cast<std::size_t>(j)] =
            ((2 * gt[static_cast<std::size_t>(j)] - ht[static_cast<std::size_t>(j)]) % f + f) % f;
      }
      img[static_cast<std::size_t>(h)] = encode(out);
    }
    r.rows.push_back(Perm(std::move(img)));
  }
  return r;
}

RackTable dihedral_quandle(int n) {
  return takasaki_kei({n});
}

bool is_rack_homomorphism(const RackTable& r1, const RackTable& r2,
                          const std::vector<int>& psi) {
  if (static_cast<int>(psi.size()) != r1.n)
    throw std::invalid_argument("is_rack_homomorphism: map length mismatch");
  for (int v : psi)
    if (v < 0 || v >= r2.n)
      throw std::invalid_argument("is_rack_homomorphism: image out of range");
  for (int x = 0; x < r1.n; ++x)
    for (int y = 0; y < r1.n; ++y) {
      int lhs = psi[static_cast<std::size_t>(r1.rows[static_cast<std::size_t>(x)](y))];
      int rhs = r2.rows[static_cast<std::size_t>(psi[static_cast<std::size_t>(x)])](
          psi[static_cast<std::size_t>(y)]);
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

struct RowProfile {
  std::vector<int> ctype;
  bool diag_fixed = false;

  friend bool operator==(const RowProfile&, const RowProfile&) = default;
  friend auto operator<=>(const RowProfile&, const RowProfile&) = default;
};

RowProfile profile_of(const RackTable& r, int x) {
  return {cycle_type(r.rows[static_cast<std::size_t>(x)]),
          r.rows[static_cast<std::size_t>(x)](x) == x};
}

// Backtracking state for psi: r1 -> r2 with psi s_x psi^-1 = t_psi(x).
// Forced images: once psi(x) and psi(y) are known, psi(s_x(y)) is pinned to
// t_psi(x)(psi(y)); the trail-and-worklist loop below applies every such
// constraint as soon as both endpoints are assigned, so a completed map is
// fully verified by construction.
class IsoSearch {
public:
  IsoSearch(const RackTable& r1, const RackTable& r2,
            const std::function<bool(const Perm&)>& sink)
      : r1_(r1), r2_(r2), sink_(sink), n_(r1.n) {
    fwd_.assign(static_cast<std::size_t>(n_), -1);
    bwd_.assign(static_cast<std::size_t>(n_), -1);
  }

  void run() {
    if (r1_.n != r2_.n) return;
    std::vector<RowProfile> prof1, prof2;
    for (int x = 0; x < n_; ++x) {
      prof1.push_back(profile_of(r1_, x));
      prof2.push_back(profile_of(r2_, x));
    }
    {
      auto m1 = prof1;
      auto m2 = prof2;
      std::sort(m1.begin(), m1.end());
      std::sort(m2.begin(), m2.end());
      if (m1 != m2) return;
    }
    prof1_ = std::move(prof1);
    prof2_ = std::move(prof2);

    candidates_.assign(static_cast<std::size_t>(n_), {});
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (prof1_[static_cast<std::size_t>(x)] == prof2_[static_cast<std::size_t>(y)])
          candidates_[static_cast<std::size_t>(x)].push_back(y);

    // Rarest profile first collapses the branching factor early.
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return candidates_[static_cast<std::size_t>(a)].size() <
             candidates_[static_cast<std::size_t>(b)].size();
    });

    dfs();
  }

private:
  bool set_image(int a, int b) {
    int& f = fwd_[static_cast<std::size_t>(a)];
    if (f != -1) return f == b;
    if (bwd_[static_cast<std::size_t>(b)] != -1) return false;
    if (!(prof1_[static_cast<std::size_t>(a)] == prof2_[static_cast<std::size_t>(b)]))
      return false;
    f = b;
    bwd_[static_cast<std::size_t>(b)] = a;
    trail_.push_back(a);
    return true;
  }

  // Assign psi(a) = b and run constraint propagation to a fixed point.
  bool assign(int a, int b) {
    std::size_t head = trail_.size();
    if (!set_image(a, b)) return false;
    while (head < trail_.size()) {
      int p = trail_[head++];
      int pi = fwd_[static_cast<std::size_t>(p)];
      for (std::size_t k = 0; k < trail_.size(); ++k) {
        int x = trail_[k];
        int xi = fwd_[static_cast<std::size_t>(x)];
        int z1 = r1_.rows[static_cast<std::size_t>(p)](x);
        int w1 = r2_.rows[static_cast<std::size_t>(pi)](xi);
        if (!set_image(z1, w1)) return false;
        int z2 = r1_.rows[static_cast<std::size_t>(x)](p);
        int w2 = r2_.rows[static_cast<std::size_t>(xi)](pi);
        if (!set_image(z2, w2)) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int a = trail_.back();
      trail_.pop_back();
      int b = fwd_[static_cast<std::size_t>(a)];
      fwd_[static_cast<std::size_t>(a)] = -1;
      bwd_[static_cast<std::size_t>(b)] = -1;
    }
  }

  bool dfs() {
    int next = -1;
    for (int x : order_)
      if (fwd_[static_cast<std::size_t>(x)] == -1) {
        next = x;
        break;
      }
    if (next == -1) return sink_(Perm(fwd_));
    for (int b : candidates_[static_cast<std::size_t>(next)]) {
      if (bwd_[static_cast<std::size_t>(b)] != -1) continue;
      std::size_t mark = trail_.size();
      bool ok = assign(next, b);
      if (ok && !dfs()) return false;
      undo_to(mark);
    }
    return true;
  }

  const RackTable& r1_;
  const RackTable& r2_;
  const std::function<bool(const Perm&)>& sink_;
  int n_;
  std::vector<RowProfile> prof1_, prof2_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<int> fwd_, bwd_;
  std::vector<int> trail_;
};

}  // namespace

void for_each_rack_isomorphism(const RackTable& r1, const RackTable& r2,
                               const std::function<bool(const Perm&)>& sink) {
  IsoSearch search(r1, r2, sink);
  search.run();
}

std::optional<Perm> are_isomorphic(const RackTable& r1, const RackTable& r2) {
  std::optional<Perm> witness;
  for_each_rack_isomorphism(r1, r2, [&](const Perm& psi) {
    witness = psi;
    return false;  // first witness suffices
  });
  return witness;
}

RackTable relabel(const RackTable& r, const Perm& pi) {
  if (pi.degree() != r.n) throw std::invalid_argument("relabel: degree mismatch");
  Perm pi_inv = inverse(pi);
  RackTable out;
  out.n = r.n;
  out.rows.reserve(static_cast<std::size_t>(r.n));
  for (int x = 0; x < r.n; ++x)
    out.rows.push_back(
        compose(pi, compose(r.rows[static_cast<std::size_t>(pi_inv(x))], pi_inv)));
  return out;
}

std::vector<int> flatten(const RackTable& r) {
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(r.n) * static_cast<std::size_t>(r.n));
  for (const Perm& row : r.rows)
    flat.insert(flat.end(), row.images().begin(), row.images().end());
  return flat;
}

namespace {

// Branch-and-bound over relabelings. New labels are assigned one old point
// at a time; the row-major prefix of the relabeled table is compared against
// the incumbent as far as entries are computable. A strictly greater prefix
// prunes the subtree; a strictly smaller decided prefix means every
// completion beats the incumbent.
class CanonicalSearch {
public:
  explicit CanonicalSearch(const RackTable& r)
      : r_(r), n_(r.n), best_(flatten(r)) {
    chosen_.assign(static_cast<std::size_t>(n_), -1);
    new_label_.assign(static_cast<std::size_t>(n_), -1);
  }

  // Full minimization; returns the canonical flattened table.
  std::vector<int> minimize() {
    stop_on_less_ = false;
    dfs(0);
    return best_;
  }

  // Decision variant: true iff no relabeling is strictly smaller than r.
  bool is_minimal() {
    stop_on_less_ = true;
    found_less_ = false;
    dfs(0);
    return !found_less_;
  }

private:
  enum class Prefix { Equal, Less, Greater };

  Prefix scan(int k) const {
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (y >= k) break;
        int z = r_.rows[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(x)])](
            chosen_[static_cast<std::size_t>(y)]);
        int v = new_label_[static_cast<std::size_t>(z)];
        if (v == -1) return Prefix::Equal;  // undecided from here on
        int b = best_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(y)];
        if (v < b) return Prefix::Less;
        if (v > b) return Prefix::Greater;
      }
      if (k < n_) break;  // row x is cut short; later rows are undecided
    }
    return Prefix::Equal;
  }

  std::vector<int> rebuild() const {
    std::vector<int> flat(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int z = r_.rows[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(x)])](
            chosen_[static_cast<std::size_t>(y)]);
        flat[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(y)] = new_label_[static_cast<std::size_t>(z)];
      }
    return flat;
  }

  void dfs(int k) {
    if (stop_on_less_ && found_less_) return;
    Prefix status = scan(k);
    if (status == Prefix::Greater) return;
    if (status == Prefix::Less && stop_on_less_) {
      // The decided prefix already beats the original table, whatever the
      // completion looks like.
      found_less_ = true;
      return;
    }
    if (k == n_) {
      std::vector<int> flat = rebuild();
      if (flat < best_) best_ = std::move(flat);
      return;
    }
    for (int old = 0; old < n_; ++old) {
      if (new_label_[static_cast<std::size_t>(old)] != -1) continue;
      chosen_[static_cast<std::size_t>(k)] = old;
      new_label_[static_cast<std::size_t>(old)] = k;
      dfs(k + 1);
      new_label_[static_cast<std::size_t>(old)] = -1;
      chosen_[static_cast<std::size_t>(k)] = -1;
      if (stop_on_less_ && found_less_) return;
    }
  }

  const RackTable& r_;
  int n_;
  std::vector<int> best_;
  std::vector<int> chosen_;     // old point carrying each new label
  std::vector<int> new_label_;  // inverse of chosen_
  bool stop_on_less_ = false;
  bool found_less_ = false;
};

RackTable from_flat(int n, const std::vector<int>& flat) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    rows[static_cast<std::size_t>(x)] =
        std::vector<int>(flat.begin() + static_cast<std::ptrdiff_t>(x) * n,
                         flat.begin() + static_cast<std::ptrdiff_t>(x + 1) * n);
  RackTable r;
  r.n = n;
  r.rows.reserve(static_cast<std::size_t>(n));
  for (auto& row : rows) r.rows.push_back(Perm(std::move(row)));
  return r;
}

}  // namespace

RackTable canonical_form(const RackTable& r) {
  CanonicalSearch search(r);
  return from_flat(r.n, search.minimize());
}

bool is_canonical_form(const RackTable& r) {
  CanonicalSearch search(r);
  return search.is_minimal();
}

}  // namespace vrc
