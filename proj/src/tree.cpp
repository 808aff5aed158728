#include "fdds/tree.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <mutex>
#include <set>
#include <unordered_map>
#include <utility>

#include "fdds/errors.hpp"

namespace fdds {

namespace {

struct Node {
  std::vector<TreeId> children;  // canonical (ascending) order
  std::int32_t depth;
  std::int64_t size;
};

std::uint64_t hash_children(const std::vector<TreeId>& ch) {
  std::uint64_t h = 1469598103934665603ull;
  for (TreeId c : ch) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::uint64_t pack(TreeId a, std::uint32_t b) {
  return (std::uint64_t(a) << 32) | b;
}

// Process-wide intern pool. All mutation happens under one mutex; the
// private *_impl helpers assume the lock is held.
class Arena {
 public:
  static Arena& get() {
    static Arena* a = new Arena;  // leaked on purpose: outlives all statics
    return *a;
  }

  Arena() { reset_impl(); }

  TreeId leaf() const { return 0; }

  TreeId intern(std::vector<TreeId> ch) {
    std::lock_guard<std::mutex> l(mu_);
    return intern_impl(std::move(ch));
  }

  int cmp(TreeId a, TreeId b) {
    std::lock_guard<std::mutex> l(mu_);
    return cmp_impl(a, b);
  }

  TreeId product(TreeId a, TreeId b) {
    std::lock_guard<std::mutex> l(mu_);
    return product_impl(a, b);
  }

  TreeId cut(TreeId t, int k) {
    std::lock_guard<std::mutex> l(mu_);
    return cut_impl(t, k);
  }

  TreeId path(int d) {
    std::lock_guard<std::mutex> l(mu_);
    return path_impl(d);
  }

  int depth(TreeId t) {
    std::lock_guard<std::mutex> l(mu_);
    return nodes_[t].depth;
  }

  std::int64_t size(TreeId t) {
    std::lock_guard<std::mutex> l(mu_);
    return nodes_[t].size;
  }

  bool is_path(TreeId t) {
    std::lock_guard<std::mutex> l(mu_);
    const Node& n = nodes_[t];
    return n.size == n.depth + 1;
  }

  std::vector<TreeId> children(TreeId t) {
    std::lock_guard<std::mutex> l(mu_);
    return nodes_[t].children;
  }

  std::size_t child_count(TreeId t) {
    std::lock_guard<std::mutex> l(mu_);
    return nodes_[t].children.size();
  }

  std::size_t node_count() {
    std::lock_guard<std::mutex> l(mu_);
    return nodes_.size();
  }

  void reset() {
    std::lock_guard<std::mutex> l(mu_);
    reset_impl();
  }

  // divide results are cached here as well so reset() invalidates everything
  // in one place
  bool divide_lookup(std::uint64_t key, std::vector<TreeId>* out) {
    std::lock_guard<std::mutex> l(mu_);
    auto it = divide_memo_.find(key);
    if (it == divide_memo_.end()) return false;
    *out = it->second;
    return true;
  }

  void divide_store(std::uint64_t key, std::vector<TreeId> val) {
    std::lock_guard<std::mutex> l(mu_);
    divide_memo_.emplace(key, std::move(val));
  }

 private:
  void reset_impl() {
    nodes_.clear();
    buckets_.clear();
    cmp_memo_.clear();
    product_memo_.clear();
    cut_memo_.clear();
    divide_memo_.clear();
    paths_.clear();
    nodes_.push_back(Node{{}, 0, 1});  // id 0: the single node
    buckets_[hash_children({})].push_back(0);
    paths_.push_back(0);
  }

  TreeId intern_impl(std::vector<TreeId> ch) {
    std::sort(ch.begin(), ch.end(),
              [this](TreeId x, TreeId y) { return cmp_impl(x, y) < 0; });
    std::uint64_t h = hash_children(ch);
    auto& bucket = buckets_[h];
    for (TreeId id : bucket)
      if (nodes_[id].children == ch) return id;
    std::int32_t d = 0;
    std::int64_t s = 1;
    for (TreeId c : ch) {
      d = std::max(d, nodes_[c].depth + 1);
      s += nodes_[c].size;
    }
    if (nodes_.size() >= std::numeric_limits<TreeId>::max())
      throw LimitExceeded("tree pool exhausted");
    TreeId id = static_cast<TreeId>(nodes_.size());
    nodes_.push_back(Node{std::move(ch), d, s});
    bucket.push_back(id);
    return id;
  }

  TreeId path_impl(int d) {
    if (d < 0) throw MalformedInput("negative path depth");
    while (static_cast<int>(paths_.size()) <= d)
      paths_.push_back(intern_impl({paths_.back()}));
    return paths_[d];
  }

  TreeId cut_impl(TreeId t, int k) {
    if (k <= 0) return 0;
    if (nodes_[t].depth <= k) return t;
    if (auto it = cut_memo_.find(pack(t, k)); it != cut_memo_.end())
      return it->second;
    struct Frame {
      TreeId t;
      int k;
      std::size_t i;
      std::vector<TreeId> out;
    };
    std::vector<Frame> st;
    st.push_back({t, k, 0, {}});
    TreeId result = 0;
    while (!st.empty()) {
      Frame& f = st.back();
      const std::vector<TreeId>& ch = nodes_[f.t].children;
      if (f.i < ch.size()) {
        TreeId c = ch[f.i];
        int kk = f.k - 1;
        if (kk <= 0) {
          f.out.push_back(0);
          ++f.i;
          continue;
        }
        if (nodes_[c].depth <= kk) {
          f.out.push_back(c);
          ++f.i;
          continue;
        }
        if (auto it = cut_memo_.find(pack(c, kk)); it != cut_memo_.end()) {
          f.out.push_back(it->second);
          ++f.i;
          continue;
        }
        st.push_back({c, kk, 0, {}});
        continue;
      }
      TreeId done = intern_impl(std::move(f.out));
      cut_memo_.emplace(pack(f.t, f.k), done);
      st.pop_back();
      if (st.empty()) {
        result = done;
        break;
      }
      st.back().out.push_back(done);
      ++st.back().i;
    }
    return result;
  }

  bool is_path_impl(TreeId t) const {
    const Node& n = nodes_[t];
    return n.size == n.depth + 1;
  }

  TreeId product_impl(TreeId a, TreeId b) {
    if (a == 0 || b == 0) return 0;
    if (is_path_impl(a)) return cut_impl(b, nodes_[a].depth);
    if (is_path_impl(b)) return cut_impl(a, nodes_[b].depth);
    TreeId lo = std::min(a, b), hi = std::max(a, b);
    if (auto it = product_memo_.find(pack(lo, hi)); it != product_memo_.end())
      return it->second;
    struct Frame {
      TreeId a, b;
      std::size_t i;
      std::vector<TreeId> out;
    };
    std::vector<Frame> st;
    st.push_back({lo, hi, 0, {}});
    TreeId result = 0;
    while (!st.empty()) {
      Frame& f = st.back();
      const std::vector<TreeId>& ca = nodes_[f.a].children;
      const std::vector<TreeId>& cb = nodes_[f.b].children;
      std::size_t m = ca.size() * cb.size();
      if (f.i < m) {
        TreeId x = ca[f.i / cb.size()];
        TreeId y = cb[f.i % cb.size()];
        if (x == 0 || y == 0) {
          f.out.push_back(0);
          ++f.i;
          continue;
        }
        if (is_path_impl(x)) {
          f.out.push_back(cut_impl(y, nodes_[x].depth));
          ++f.i;
          continue;
        }
        if (is_path_impl(y)) {
          f.out.push_back(cut_impl(x, nodes_[y].depth));
          ++f.i;
          continue;
        }
        TreeId xl = std::min(x, y), xh = std::max(x, y);
        if (auto it = product_memo_.find(pack(xl, xh));
            it != product_memo_.end()) {
          f.out.push_back(it->second);
          ++f.i;
          continue;
        }
        st.push_back({xl, xh, 0, {}});
        continue;
      }
      TreeId done = intern_impl(std::move(f.out));
      product_memo_.emplace(pack(f.a, f.b), done);
      st.pop_back();
      if (st.empty()) {
        result = done;
        break;
      }
      st.back().out.push_back(done);
      ++st.back().i;
    }
    return result;
  }

  // Total order: compare at the shallowest cut depth where the trees differ.
  // At that depth, child lists (already in canonical order) are compared
  // elementwise; a strict prefix sorts first. If every cut up to the shorter
  // depth agrees, the deeper tree sorts first.
  int cmp_impl(TreeId a, TreeId b) {
    if (a == b) return 0;
    if (auto it = cmp_memo_.find(pack(a, b)); it != cmp_memo_.end())
      return it->second;
    int da = nodes_[a].depth, db = nodes_[b].depth;
    int K = std::min(da, db);
    int r;
    int lo = 1, hi = 1;
    bool found = false;
    while (K >= 1) {
      if (cut_impl(a, hi) != cut_impl(b, hi)) {
        found = true;
        break;
      }
      if (hi >= K) break;
      lo = hi + 1;
      hi = std::min(K, hi * 2);
    }
    if (!found) {
      r = da > db ? -1 : 1;  // cuts agree on the common range: deeper first
    } else {
      while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (cut_impl(a, mid) != cut_impl(b, mid))
          hi = mid;
        else
          lo = mid + 1;
      }
      r = st_cmp(cut_impl(a, hi), cut_impl(b, hi));
    }
    cmp_memo_.emplace(pack(a, b), static_cast<std::int8_t>(r));
    cmp_memo_.emplace(pack(b, a), static_cast<std::int8_t>(-r));
    return r;
  }

  int st_cmp(TreeId a, TreeId b) {
    if (a == b) return 0;
    const std::vector<TreeId>& ca = nodes_[a].children;
    const std::vector<TreeId>& cb = nodes_[b].children;
    std::size_t n = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < n; ++i)
      if (int c = cmp_impl(ca[i], cb[i]); c != 0) return c;
    if (ca.size() == cb.size()) return 0;
    return ca.size() < cb.size() ? -1 : 1;
  }

  std::deque<Node> nodes_;
  std::unordered_map<std::uint64_t, std::vector<TreeId>> buckets_;
  std::unordered_map<std::uint64_t, std::int8_t> cmp_memo_;
  std::unordered_map<std::uint64_t, TreeId> product_memo_;
  std::unordered_map<std::uint64_t, TreeId> cut_memo_;
  std::unordered_map<std::uint64_t, std::vector<TreeId>> divide_memo_;
  std::vector<TreeId> paths_;
  std::mutex mu_;
};

}  // namespace

Tree::Tree() : id_(Arena::get().leaf()) {}

Tree Tree::leaf() { return Tree(Arena::get().leaf()); }

Tree Tree::node(const std::vector<Tree>& children) {
  std::vector<TreeId> ids;
  ids.reserve(children.size());
  for (Tree c : children) ids.push_back(c.id());
  return Tree(Arena::get().intern(std::move(ids)));
}

Tree Tree::path(int depth) { return Tree(Arena::get().path(depth)); }

Tree Tree::from_id(TreeId id) { return Tree(id); }

int Tree::depth() const { return Arena::get().depth(id_); }

std::int64_t Tree::size() const { return Arena::get().size(id_); }

std::vector<Tree> Tree::children() const {
  std::vector<TreeId> ids = Arena::get().children(id_);
  std::vector<Tree> out;
  out.reserve(ids.size());
  for (TreeId c : ids) out.push_back(Tree(c));
  return out;
}

std::size_t Tree::child_count() const {
  return Arena::get().child_count(id_);
}

bool Tree::is_path() const { return Arena::get().is_path(id_); }

std::strong_ordering operator<=>(Tree a, Tree b) {
  int c = Arena::get().cmp(a.id_, b.id_);
  return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

std::strong_ordering tree_compare(Tree a, Tree b) { return a <=> b; }

Tree tree_product(Tree a, Tree b) {
  return Tree::from_id(Arena::get().product(a.id(), b.id()));
}

Tree tree_power(Tree t, unsigned k) {
  if (k == 0) throw MalformedInput("tree_power requires k >= 1");
  Tree r = t;
  for (unsigned i = 1; i < k; ++i) r = tree_product(r, t);
  return r;
}

Tree cut(Tree t, int k) {
  if (k < 0) throw MalformedInput("cut depth must be non-negative");
  return Tree::from_id(Arena::get().cut(t.id(), k));
}

std::string canonical_code(Tree t) {
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(t.size()));
  struct Frame {
    std::vector<Tree> ch;
    std::size_t i;
  };
  std::vector<Frame> st;
  out.push_back('(');
  st.push_back({t.children(), 0});
  while (!st.empty()) {
    Frame& f = st.back();
    if (f.i < f.ch.size()) {
      Tree c = f.ch[f.i];
      ++f.i;
      out.push_back('(');
      st.push_back({c.children(), 0});
    } else {
      out.push_back(')');
      st.pop_back();
    }
  }
  return out;
}

Tree parse_tree(std::string_view word) {
  std::vector<std::vector<Tree>> st;
  bool done = false;
  Tree root;
  for (char c : word) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (done) throw MalformedInput("trailing input after tree word");
    if (c == '(') {
      st.emplace_back();
    } else if (c == ')') {
      if (st.empty()) throw MalformedInput("unbalanced ')' in tree word");
      Tree n = Tree::node(st.back());
      st.pop_back();
      if (st.empty()) {
        root = n;
        done = true;
      } else {
        st.back().push_back(n);
      }
    } else {
      throw MalformedInput(std::string("unexpected character '") + c +
                           "' in tree word");
    }
  }
  if (!done || !st.empty()) throw MalformedInput("unbalanced tree word");
  return root;
}

namespace {

// Counted multiset of trees, ascending; helper for tree_divide.
using Counted = std::vector<std::pair<Tree, std::int64_t>>;

Counted to_counted(const std::vector<Tree>& ts) {
  std::vector<Tree> s = ts;
  std::sort(s.begin(), s.end());
  Counted out;
  for (Tree t : s) {
    if (!out.empty() && out.back().first == t)
      ++out.back().second;
    else
      out.emplace_back(t, 1);
  }
  return out;
}

bool counted_contains(const Counted& r, const Counted& sub) {
  std::size_t i = 0;
  for (const auto& [t, c] : sub) {
    while (i < r.size() && r[i].first < t) ++i;
    if (i >= r.size() || !(r[i].first == t) || r[i].second < c) return false;
  }
  return true;
}

Counted counted_minus(const Counted& r, const Counted& sub) {
  Counted out;
  std::size_t j = 0;
  for (const auto& [t, c] : r) {
    std::int64_t cc = c;
    if (j < sub.size() && sub[j].first == t) {
      cc -= sub[j].second;
      ++j;
    }
    if (cc > 0) out.emplace_back(t, cc);
  }
  return out;
}

bool counted_has(const Counted& r, Tree t) {
  for (const auto& [u, c] : r)
    if (u == t) return true;
  return false;
}

void divide_search(Tree t, Tree a, const std::vector<Tree>& pool,
                   const std::vector<Counted>& bundles, const Counted& remaining,
                   std::vector<Tree>& chosen, std::set<TreeId>& out) {
  if (remaining.empty()) {
    Tree x = Tree::node(chosen);
    if (tree_product(a, x) == t) out.insert(x.id());
    return;
  }
  Tree need = remaining.front().first;
  for (std::size_t qi = 0; qi < pool.size(); ++qi) {
    if (!counted_has(bundles[qi], need)) continue;
    if (!counted_contains(remaining, bundles[qi])) continue;
    Counted rest = counted_minus(remaining, bundles[qi]);
    chosen.push_back(pool[qi]);
    divide_search(t, a, pool, bundles, rest, chosen, out);
    chosen.pop_back();
  }
}

std::vector<Tree> divide_uncached(Tree t, Tree a) {
  if (a.depth() < t.depth()) return {};
  if (t.is_leaf()) return {Tree::leaf()};
  if (a.is_path()) return {t};
  std::vector<Tree> tch = t.children();
  std::vector<Tree> ach = a.children();
  if (ach.empty() || tch.size() % ach.size() != 0) return {};
  // Anchor on a deepest child of a: depth(anchor) >= depth(a)-1 >= depth(t)-1,
  // so each quotient child appears at its own depth in its anchor product.
  Tree anchor = ach[0];
  for (Tree c : ach)
    if (c.depth() > anchor.depth()) anchor = c;
  std::vector<Tree> pool;
  {
    std::set<TreeId> seen_tc, seen_q;
    for (Tree tc : tch) {
      if (!seen_tc.insert(tc.id()).second) continue;
      for (Tree q : tree_divide(tc, anchor))
        if (seen_q.insert(q.id()).second) pool.push_back(q);
    }
    std::sort(pool.begin(), pool.end());
  }
  std::vector<Counted> bundles;
  bundles.reserve(pool.size());
  for (Tree q : pool) {
    std::vector<Tree> b;
    b.reserve(ach.size());
    for (Tree ac : ach) b.push_back(tree_product(ac, q));
    bundles.push_back(to_counted(b));
  }
  std::set<TreeId> found;
  std::vector<Tree> chosen;
  divide_search(t, a, pool, bundles, to_counted(tch), chosen, found);
  std::vector<Tree> out;
  for (TreeId id : found) out.push_back(Tree::from_id(id));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Tree> tree_divide(Tree t, Tree a) {
  std::uint64_t key = (std::uint64_t(t.id()) << 32) | a.id();
  std::vector<TreeId> cached;
  if (Arena::get().divide_lookup(key, &cached)) {
    std::vector<Tree> out;
    out.reserve(cached.size());
    for (TreeId id : cached) out.push_back(Tree::from_id(id));
    return out;
  }
  std::vector<Tree> out = divide_uncached(t, a);
  std::vector<TreeId> ids;
  ids.reserve(out.size());
  for (Tree x : out) ids.push_back(x.id());
  Arena::get().divide_store(key, std::move(ids));
  return out;
}

void reset_intern_pool() { Arena::get().reset(); }

}  // namespace fdds
