#include "fdds/fdds.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "fdds/errors.hpp"

namespace fdds {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw LimitExceeded("component multiplicity overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw LimitExceeded("component multiplicity overflow");
  return r;
}

// Booth's least-rotation scan over the spine sequence, letters ordered by
// the tree order.
std::size_t least_rotation(const std::vector<Tree>& s) {
  std::size_t n = s.size();
  if (n <= 1) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Tree sj = s[j % n];
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && !(sj == s[(k + i + 1) % n])) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = fail[i];
    }
    if (!(sj == s[(k + i + 1) % n])) {
      if (sj < s[(k + i + 1) % n]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

Tree build_tree(int root, const std::vector<std::vector<int>>& pre) {
  struct Frame {
    int v;
    std::size_t i;
    std::vector<Tree> kids;
  };
  std::vector<Frame> st;
  st.push_back({root, 0, {}});
  Tree result;
  while (!st.empty()) {
    Frame& f = st.back();
    const std::vector<int>& ps = pre[f.v];
    if (f.i < ps.size()) {
      int c = ps[f.i];
      ++f.i;
      st.push_back({c, 0, {}});
      continue;
    }
    Tree t = Tree::node(f.kids);
    st.pop_back();
    if (st.empty()) {
      result = t;
      break;
    }
    st.back().kids.push_back(t);
  }
  return result;
}

}  // namespace

Component::Component(std::uint32_t cycle_len, std::vector<Tree> spine)
    : cycle_len_(cycle_len), spine_(std::move(spine)) {
  if (cycle_len_ == 0 || spine_.size() != cycle_len_)
    throw MalformedInput("component needs one spine tree per cyclic state");
  std::size_t r = least_rotation(spine_);
  std::rotate(spine_.begin(), spine_.begin() + r, spine_.end());
}

Component Component::cycle(std::uint32_t p) {
  return Component(p, std::vector<Tree>(p, Tree::leaf()));
}

int Component::depth() const {
  int d = 0;
  for (Tree t : spine_) d = std::max(d, t.depth());
  return d;
}

std::int64_t Component::node_count() const {
  std::int64_t n = 0;
  for (Tree t : spine_) n += t.size();
  return n;
}

std::strong_ordering operator<=>(const Component& a, const Component& b) {
  if (a.cycle_len_ != b.cycle_len_) return a.cycle_len_ <=> b.cycle_len_;
  for (std::size_t i = 0; i < a.spine_.size(); ++i)
    if (auto c = a.spine_[i] <=> b.spine_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Fdds::Fdds(const std::vector<Component>& comps) {
  for (const Component& c : comps) add(c);
}

Fdds Fdds::cycle(std::uint32_t p, std::uint64_t count) {
  Fdds x;
  x.add(Component::cycle(p), count);
  return x;
}

void Fdds::add(const Component& c, std::uint64_t count) {
  if (count == 0) return;
  auto it = std::lower_bound(
      comps_.begin(), comps_.end(), c,
      [](const Item& a, const Component& b) { return a.first < b; });
  if (it != comps_.end() && it->first == c)
    it->second = checked_add(it->second, count);
  else
    comps_.insert(it, {c, count});
}

std::uint64_t Fdds::component_count() const {
  std::uint64_t n = 0;
  for (const auto& [c, k] : comps_) n = checked_add(n, k);
  return n;
}

std::int64_t Fdds::node_count() const {
  std::int64_t n = 0;
  for (const auto& [c, k] : comps_)
    n += c.node_count() * static_cast<std::int64_t>(k);
  return n;
}

std::uint64_t Fdds::periodic_count() const {
  std::uint64_t n = 0;
  for (const auto& [c, k] : comps_)
    n = checked_add(n, checked_mul(c.cycle_len(), k));
  return n;
}

int Fdds::depth() const {
  int d = 0;
  for (const auto& [c, k] : comps_) d = std::max(d, c.depth());
  return d;
}

Fdds operator+(const Fdds& a, const Fdds& b) {
  Fdds out = a;
  for (const auto& [c, k] : b.comps_) out.add(c, k);
  return out;
}

Fdds operator*(const Fdds& a, const Fdds& b) {
  Fdds out;
  for (const auto& [ca, na] : a.comps_) {
    std::vector<int> fa = detail::expand(ca);
    for (const auto& [cb, nb] : b.comps_) {
      std::vector<int> fb = detail::expand(cb);
      int n2 = static_cast<int>(fb.size());
      std::vector<int> pf(fa.size() * fb.size());
      for (std::size_t u = 0; u < fa.size(); ++u)
        for (std::size_t v = 0; v < fb.size(); ++v)
          pf[u * n2 + v] = fa[u] * n2 + fb[v];
      Fdds part = detail::decompose(pf);
      std::uint64_t cnt = checked_mul(na, nb);
      for (const auto& [c, k] : part.components())
        out.add(c, checked_mul(k, cnt));
    }
  }
  return out;
}

Fdds fdds_sum(const Fdds& a, const Fdds& b) { return a + b; }
Fdds fdds_product(const Fdds& a, const Fdds& b) { return a * b; }

Fdds fdds_power(const Fdds& x, unsigned k) {
  if (k == 0) throw MalformedInput("fdds_power requires k >= 1");
  Fdds r = x;
  for (unsigned i = 1; i < k; ++i) r = r * x;
  return r;
}

std::optional<Fdds> fdds_subtract(const Fdds& b, const Fdds& a) {
  Fdds out;
  std::size_t i = 0;
  const auto& bc = b.components();
  for (const auto& [c, k] : a.components()) {
    while (i < bc.size() && bc[i].first < c) out.add(bc[i].first, bc[i].second), ++i;
    if (i >= bc.size() || !(bc[i].first == c) || bc[i].second < k)
      return std::nullopt;
    if (bc[i].second > k) out.add(c, bc[i].second - k);
    ++i;
  }
  for (; i < bc.size(); ++i) out.add(bc[i].first, bc[i].second);
  return out;
}

Fdds set_dive(const Fdds& x, std::uint32_t p) {
  if (p == 0) throw MalformedInput("set_dive requires p >= 1");
  Fdds out;
  for (const auto& [c, k] : x.components())
    if (p % c.cycle_len() == 0) out.add(c, k);
  return out;
}

Fdds set_size(const Fdds& x, std::uint32_t p) {
  if (p == 0) throw MalformedInput("set_size requires p >= 1");
  Fdds out;
  for (const auto& [c, k] : x.components())
    if (c.cycle_len() == p) out.add(c, k);
  return out;
}

bool is_dendron(const Component& c) { return c.is_dendron(); }

bool is_cancelable(const Fdds& a) {
  for (const auto& [c, k] : a.components())
    if (c.is_dendron()) return true;
  return false;
}

namespace detail {

Fdds decompose(const std::vector<int>& f) {
  int n = static_cast<int>(f.size());
  std::vector<int> color(n, 0);
  std::vector<char> cyclic(n, 0);
  for (int v0 = 0; v0 < n; ++v0) {
    if (color[v0]) continue;
    std::vector<int> path;
    int v = v0;
    while (color[v] == 0) {
      color[v] = 1;
      path.push_back(v);
      v = f[v];
    }
    if (color[v] == 1) {
      int u = v;
      do {
        cyclic[u] = 1;
        u = f[u];
      } while (u != v);
    }
    for (int u : path) color[u] = 2;
  }
  std::vector<std::vector<int>> pre(n);
  for (int v = 0; v < n; ++v)
    if (!cyclic[v]) pre[f[v]].push_back(v);
  std::vector<char> used(n, 0);
  Fdds out;
  for (int v = 0; v < n; ++v) {
    if (!cyclic[v] || used[v]) continue;
    std::vector<int> cyc;
    int u = v;
    do {
      cyc.push_back(u);
      used[u] = 1;
      u = f[u];
    } while (u != v);
    std::vector<Tree> spine;
    spine.reserve(cyc.size());
    for (int s : cyc) spine.push_back(build_tree(s, pre));
    out.add(Component(static_cast<std::uint32_t>(cyc.size()), spine));
  }
  return out;
}

std::vector<int> expand(const Component& c) {
  unsigned p = c.cycle_len();
  std::vector<int> f(p);
  for (unsigned i = 0; i < p; ++i) f[i] = static_cast<int>((i + 1) % p);
  for (unsigned i = 0; i < p; ++i) {
    std::vector<std::pair<Tree, int>> st;
    for (Tree ch : c.spine()[i].children()) st.push_back({ch, static_cast<int>(i)});
    while (!st.empty()) {
      auto [t, parent] = st.back();
      st.pop_back();
      int v = static_cast<int>(f.size());
      f.push_back(parent);
      for (Tree ch : t.children()) st.push_back({ch, v});
    }
  }
  return f;
}

}  // namespace detail

namespace {

void strip_comment(std::string& line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
}

Fdds parse_edge_list(std::string_view text) {
  std::map<std::string, int> ids;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto id_of = [&](const std::string& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(names.size()));
    if (fresh) names.push_back(s);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    strip_comment(line);
    std::istringstream ls(line);
    std::string u, v, extra;
    if (!(ls >> u)) continue;
    if (!(ls >> v) || (ls >> extra))
      throw MalformedInput("edge list line " + std::to_string(lineno) +
                           ": expected exactly two vertex names");
    edges.emplace_back(id_of(u), id_of(v));
  }
  std::vector<int> f(names.size(), -1);
  for (auto [u, v] : edges) {
    if (f[u] != -1)
      throw MalformedInput("vertex '" + names[u] + "' has out-degree > 1");
    f[u] = v;
  }
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v] == -1)
      throw MalformedInput("vertex '" + names[v] + "' has out-degree 0");
  return detail::decompose(f);
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw MalformedInput(std::string("bad ") + what + ": '" + std::string(s) +
                         "'");
  return value;
}

std::string_view trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Fdds parse_literal(std::string_view text) {
  Fdds out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string_view term = trim(text.substr(
        pos, plus == std::string_view::npos ? std::string_view::npos
                                            : plus - pos));
    if (!term.empty() && term != "0") {
      std::uint64_t count = 1;
      if (auto star = term.find('*'); star != std::string_view::npos) {
        count = parse_u64(trim(term.substr(0, star)), "multiplicity");
        if (count == 0) throw MalformedInput("zero multiplicity");
        term = trim(term.substr(star + 1));
      }
      auto colon = term.find(':');
      if (colon == std::string_view::npos)
        throw MalformedInput("component literal missing ':'");
      std::uint64_t p = parse_u64(trim(term.substr(0, colon)), "cycle length");
      if (p == 0) throw MalformedInput("cycle length must be >= 1");
      std::string_view rest = trim(term.substr(colon + 1));
      if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
        throw MalformedInput("component literal missing [codes]");
      std::string_view codes = rest.substr(1, rest.size() - 2);
      std::vector<Tree> spine;
      std::size_t cpos = 0;
      while (cpos <= codes.size()) {
        std::size_t comma = codes.find(',', cpos);
        std::string_view code = trim(codes.substr(
            cpos, comma == std::string_view::npos ? std::string_view::npos
                                                  : comma - cpos));
        if (!code.empty()) spine.push_back(parse_tree(code));
        if (comma == std::string_view::npos) break;
        cpos = comma + 1;
      }
      if (spine.size() != p)
        throw MalformedInput("component literal: expected " +
                             std::to_string(p) + " spine trees, got " +
                             std::to_string(spine.size()));
      out.add(Component(static_cast<std::uint32_t>(p), std::move(spine)),
              count);
    }
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return out;
}

}  // namespace

Fdds parse_fdds(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty() || t == "0") return Fdds();
  if (t.find('[') != std::string_view::npos) return parse_literal(t);
  return parse_edge_list(text);
}

Fdds canonicalize(const Fdds& x) {
  Fdds out;
  for (const auto& [c, k] : x.components())
    out.add(Component(c.cycle_len(), c.spine()), k);
  return out;
}

std::string to_literal(const Fdds& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [c, k] : x.components()) {
    if (!out.empty()) out += '+';
    if (k > 1) {
      out += std::to_string(k);
      out += '*';
    }
    out += std::to_string(c.cycle_len());
    out += ":[";
    for (std::size_t i = 0; i < c.spine().size(); ++i) {
      if (i) out += ',';
      out += canonical_code(c.spine()[i]);
    }
    out += ']';
  }
  return out;
}

std::string to_dot(const Fdds& x) {
  if (x.component_count() > 100000)
    throw LimitExceeded("too many components for DOT emission");
  std::ostringstream os;
  os << "digraph fdds {\n";
  int ci = 0;
  for (const auto& [comp, count] : x.components()) {
    for (std::uint64_t inst = 0; inst < count; ++inst, ++ci) {
      unsigned p = comp.cycle_len();
      std::string cn = "c" + std::to_string(ci);
      for (unsigned i = 0; i < p; ++i)
        os << "  " << cn << "_p" << i << " [shape=doublecircle];\n";
      for (unsigned i = 0; i < p; ++i)
        os << "  " << cn << "_p" << i << " -> " << cn << "_p" << (i + 1) % p
           << " [style=bold];\n";
      int tj = 0;
      for (unsigned i = 0; i < p; ++i) {
        // transient in-trees, edges toward the cycle
        std::vector<std::pair<Tree, std::string>> st;
        for (Tree ch : comp.spine()[i].children())
          st.push_back({ch, cn + "_p" + std::to_string(i)});
        while (!st.empty()) {
          auto [t, parent] = st.back();
          st.pop_back();
          std::string name = cn + "_t" + std::to_string(tj++);
          os << "  " << name << " -> " << parent << ";\n";
          for (Tree ch : t.children()) st.push_back({ch, name});
        }
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace fdds
