#include "fdds/forest.hpp"

#include <algorithm>
#include <sstream>

#include "fdds/errors.hpp"

namespace fdds {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw LimitExceeded("forest multiplicity overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw LimitExceeded("forest multiplicity overflow");
  return r;
}

}  // namespace

Forest::Forest(const std::vector<Tree>& trees) {
  for (Tree t : trees) add(t);
}

Forest Forest::single(Tree t, std::uint64_t count) {
  Forest f;
  if (count > 0) f.items_.emplace_back(t, count);
  return f;
}

std::uint64_t Forest::tree_count() const {
  std::uint64_t n = 0;
  for (const auto& [t, c] : items_) n = checked_add(n, c);
  return n;
}

std::int64_t Forest::node_count() const {
  std::int64_t n = 0;
  for (const auto& [t, c] : items_) n += t.size() * static_cast<std::int64_t>(c);
  return n;
}

int Forest::depth() const {
  int d = -1;
  for (const auto& [t, c] : items_) d = std::max(d, t.depth());
  return d;
}

Tree Forest::min_tree() const {
  if (items_.empty()) throw Error("min_tree on empty forest");
  return items_.front().first;
}

std::uint64_t Forest::count_of(Tree t) const {
  auto it = std::lower_bound(
      items_.begin(), items_.end(), t,
      [](const Item& a, Tree b) { return a.first < b; });
  if (it != items_.end() && it->first == t) return it->second;
  return 0;
}

void Forest::add(Tree t, std::uint64_t count) {
  if (count == 0) return;
  auto it = std::lower_bound(
      items_.begin(), items_.end(), t,
      [](const Item& a, Tree b) { return a.first < b; });
  if (it != items_.end() && it->first == t)
    it->second = checked_add(it->second, count);
  else
    items_.insert(it, {t, count});
}

std::vector<Tree> Forest::expand() const {
  std::vector<Tree> out;
  for (const auto& [t, c] : items_) {
    if (c > 1u << 24) throw LimitExceeded("forest too large to expand");
    for (std::uint64_t i = 0; i < c; ++i) out.push_back(t);
  }
  return out;
}

Forest operator+(const Forest& a, const Forest& b) {
  Forest out;
  std::size_t i = 0, j = 0;
  while (i < a.items_.size() || j < b.items_.size()) {
    if (j >= b.items_.size() ||
        (i < a.items_.size() && a.items_[i].first < b.items_[j].first)) {
      out.items_.push_back(a.items_[i++]);
    } else if (i >= a.items_.size() || b.items_[j].first < a.items_[i].first) {
      out.items_.push_back(b.items_[j++]);
    } else {
      out.items_.emplace_back(a.items_[i].first,
                              checked_add(a.items_[i].second,
                                          b.items_[j].second));
      ++i;
      ++j;
    }
  }
  return out;
}

Forest operator*(const Forest& a, const Forest& b) {
  Forest out;
  for (const auto& [ta, ca] : a.items_)
    for (const auto& [tb, cb] : b.items_)
      out.add(tree_product(ta, tb), checked_mul(ca, cb));
  return out;
}

Forest forest_sum(const Forest& a, const Forest& b) { return a + b; }
Forest forest_product(const Forest& a, const Forest& b) { return a * b; }

Forest forest_power(const Forest& f, unsigned k) {
  if (k == 0) {
    if (f.empty()) throw MalformedInput("0-th power of the empty forest");
    return Forest::single(Tree::path(f.depth()));
  }
  Forest r = f;
  for (unsigned i = 1; i < k; ++i) r = r * f;
  return r;
}

std::optional<Forest> forest_subtract(const Forest& b, const Forest& a) {
  Forest out;
  std::size_t i = 0;
  for (const auto& [t, c] : a.items()) {
    while (i < b.items().size() && b.items()[i].first < t)
      out.add(b.items()[i].first, b.items()[i].second), ++i;
    if (i >= b.items().size() || !(b.items()[i].first == t) ||
        b.items()[i].second < c)
      return std::nullopt;
    if (b.items()[i].second > c) out.add(t, b.items()[i].second - c);
    ++i;
  }
  for (; i < b.items().size(); ++i)
    out.add(b.items()[i].first, b.items()[i].second);
  return out;
}

Forest gamma(const Forest& f, int d) {
  if (d < 0) throw MalformedInput("gamma depth must be non-negative");
  Forest out;
  for (const auto& [t, c] : f.items())
    if (t.depth() >= d) out.add(t, c);
  return out;
}

Forest cut(const Forest& f, int k) {
  Forest out;
  for (const auto& [t, c] : f.items()) out.add(cut(t, k), c);
  return out;
}

Forest parse_forest(std::string_view text) {
  Forest out;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    out.add(parse_tree(std::string_view(line).substr(a, b - a + 1)));
  }
  return out;
}

Forest parse_forest_inline(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) return parse_forest(text);
  Forest out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string_view part = text.substr(
        pos, plus == std::string_view::npos ? std::string_view::npos
                                            : plus - pos);
    std::size_t a = part.find_first_not_of(" \t\r");
    if (a != std::string_view::npos) {
      std::size_t b = part.find_last_not_of(" \t\r");
      out.add(parse_tree(part.substr(a, b - a + 1)));
    }
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return out;
}

std::string forest_to_lines(const Forest& f) {
  std::string out;
  for (const auto& [t, c] : f.items()) {
    std::string code = canonical_code(t);
    for (std::uint64_t i = 0; i < c; ++i) {
      out += code;
      out += '\n';
    }
  }
  return out;
}

std::string forest_to_inline(const Forest& f) {
  std::string out;
  for (const auto& [t, c] : f.items()) {
    std::string code = canonical_code(t);
    for (std::uint64_t i = 0; i < c; ++i) {
      if (!out.empty()) out += '+';
      out += code;
    }
  }
  return out;
}

}  // namespace fdds
