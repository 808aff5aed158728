#include "fdds/solver.hpp"

#include <algorithm>
#include <set>

#include "fdds/errors.hpp"
#include "fdds/unroll.hpp"

namespace fdds {

// x^k = t reduces to the power equation Y^k = children(t) over forests of
// depth <= depth(t) - 1 (with the path identity as coefficient), which the
// layered forest solver handles; the root is verified before returning.
std::optional<Tree> kth_root(Tree t, unsigned k) {
  if (k == 0) throw MalformedInput("kth_root requires k >= 1");
  if (k == 1) return t;
  if (t.is_path()) return t;
  int d = t.depth();
  ForestPolynomial p;
  p.terms.push_back({k, Forest::single(Tree::path(d - 1))});
  SolveOutcome<Forest> out = solve_forest(p, Forest(t.children()));
  if (out.status != SolveStatus::solution) return std::nullopt;
  Tree x = Tree::node(out.value->expand());
  if (tree_power(x, k) == t) return x;
  return std::nullopt;
}

std::optional<std::pair<Tree, Tree>> find_min_divisible(const Forest& b,
                                                        Tree a1, unsigned k) {
  for (const auto& [t, cnt] : b.items()) {
    for (Tree q : tree_divide(t, a1)) {
      if (auto r = kth_root(q, k)) return std::make_pair(t, *r);
    }
  }
  return std::nullopt;
}

namespace {

struct LayerCoeff {
  std::uint32_t exponent;
  Forest g;  // gamma(coefficient, d), nonempty
  Tree min;
};

std::vector<LayerCoeff> layer_coeffs(const ForestPolynomial& p, int d) {
  std::vector<LayerCoeff> out;
  for (const auto& t : p.terms) {
    if (t.exponent == 0) continue;
    Forest g = gamma(t.coefficient, d);
    if (!g.empty()) out.push_back({t.exponent, std::move(g), Tree()});
  }
  for (auto& c : out) c.min = c.g.min_tree();
  return out;
}

// sum over the layer's coefficients of gamma(A_i, d) * Y^{k_i}
Forest layer_demand(const std::vector<LayerCoeff>& cs, const Forest& y) {
  Forest acc;
  if (y.empty()) return acc;
  Forest pow;
  unsigned cur = 0;
  for (const auto& c : cs) {
    if (cur == 0) {
      pow = y;
      cur = 1;
    }
    while (cur < c.exponent) {
      pow = pow * y;
      ++cur;
    }
    acc = acc + c.g * pow;
  }
  return acc;
}

// Peels the layer-d part of the solution for one candidate coefficient:
// successive trees are quotients of the minimal unaccounted tree by
// a_min * x1^{k-1}. Returns the full gamma(X, d) on success.
std::optional<Forest> peel_layer(const Forest& b_layer,
                                 const std::vector<LayerCoeff>& cs,
                                 const Forest& y_known,
                                 std::optional<Tree> created, Tree a_min,
                                 std::uint32_t k, Tree x1) {
  Forest y = y_known;
  if (created) y.add(*created);
  Tree divisor = k == 1 ? a_min : tree_product(a_min, tree_power(x1, k - 1));
  std::uint64_t safety = b_layer.tree_count() + 2;
  while (safety--) {
    auto r = forest_subtract(b_layer, layer_demand(cs, y));
    if (!r) return std::nullopt;
    if (r->empty()) return y;
    std::vector<Tree> q = tree_divide(r->min_tree(), divisor);
    if (q.empty()) return std::nullopt;
    y.add(q.front());
  }
  return std::nullopt;
}

}  // namespace

SolveOutcome<Forest> solve_forest(const ForestPolynomial& p, const Forest& b) {
  SolveOutcome<Forest> out;
  if (!p.has_nonconstant())
    throw MalformedPolynomial("polynomial has no non-constant term");
  Forest bw = b;
  if (const Forest* a0 = p.constant()) {
    auto sub = forest_subtract(bw, *a0);
    if (!sub) return out;
    bw = *sub;
  }
  int d_max = 0;
  for (const auto& t : p.terms)
    if (t.exponent > 0) d_max = std::max(d_max, t.coefficient.depth());
  if (bw.depth() > d_max) return out;
  std::vector<int> depths;
  for (const auto& [t, c] : bw.items()) depths.push_back(t.depth());
  std::sort(depths.begin(), depths.end(), std::greater<int>());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  Forest y_known;
  for (int d : depths) {
    std::vector<LayerCoeff> cs = layer_coeffs(p, d);
    Forest b_layer = gamma(bw, d);
    bool committed = false;
    for (const auto& cand : cs) {
      std::optional<Tree> created;
      Tree x1;
      bool viable = true;
      if (d == d_max) {
        auto fm = find_min_divisible(b_layer, cand.min, cand.exponent);
        if (!fm) {
          out.trace.push_back({d, cand.exponent, false});
          continue;
        }
        created = fm->second;
        x1 = fm->second;
      } else {
        Tree bmin = b_layer.min_tree();
        bool present = bmin.depth() > d;
        if (!present && cand.min.depth() == d && !y_known.empty()) {
          Tree guess = tree_product(
              cand.min, tree_power(y_known.min_tree(), cand.exponent));
          if (guess <= bmin) present = true;
        }
        if (present) {
          if (y_known.empty())
            viable = false;
          else
            x1 = y_known.min_tree();
        } else if (bmin.depth() != d) {
          viable = false;
        } else {
          viable = false;
          for (Tree q : tree_divide(bmin, cand.min)) {
            if (auto r = kth_root(q, cand.exponent)) {
              created = *r;
              x1 = *r;
              viable = true;
              break;
            }
          }
        }
        if (!viable) {
          out.trace.push_back({d, cand.exponent, false});
          continue;
        }
      }
      auto result =
          peel_layer(b_layer, cs, y_known, created, cand.min, cand.exponent, x1);
      if (result) {
        y_known = *result;
        out.trace.push_back({d, cand.exponent, true});
        committed = true;
        break;
      }
      out.trace.push_back({d, cand.exponent, false});
    }
    if (!committed) return out;
  }
  if (verify(p, y_known, b)) {
    out.status = SolveStatus::solution;
    out.value = std::move(y_known);
  }
  return out;
}

namespace {

std::optional<Fdds> peel_unroll(const Forest& rem,
                                const std::vector<std::uint32_t>& periods,
                                int d_bound, int n) {
  if (rem.empty()) return Fdds();
  Tree t = rem.min_tree();
  for (std::uint32_t p : periods) {
    if (n < d_bound + 2 * static_cast<int>(p)) continue;
    auto c = reroll(t, p, d_bound);
    if (!c) continue;
    auto rest = forest_subtract(rem, unroll_cut(*c, n));
    if (!rest) continue;
    auto sub = peel_unroll(*rest, periods, d_bound, n);
    if (sub) {
      sub->add(*c);
      return sub;
    }
  }
  return std::nullopt;
}

}  // namespace

SolveOutcome<Fdds> solve_unroll(const FddsPolynomial& p, const Fdds& b) {
  SolveOutcome<Fdds> out;
  int n = default_cut_depth(p, b);
  Forest bf = unroll_cut(b, n);
  if (!p.has_nonconstant()) {
    // constant equation: unroll(A0) = unroll(B), any X (the empty one) works
    Fdds a0 = p.constant() ? *p.constant() : Fdds();
    int m = std::max(n, default_cut_depth(p, a0));
    if (unroll_cut(a0, m) == unroll_cut(b, m)) {
      out.status = SolveStatus::solution;
      out.value = Fdds();
    }
    return out;
  }
  ForestPolynomial pf;
  for (const auto& t : p.terms)
    pf.terms.push_back({t.exponent, unroll_cut(t.coefficient, n)});
  SolveOutcome<Forest> fo = solve_forest(pf, bf);
  out.trace = fo.trace;
  if (fo.status != SolveStatus::solution) return out;
  std::set<std::uint32_t> ps;
  for (const auto& [c, k] : b.components())
    for (std::uint32_t q = 1; q <= c.cycle_len(); ++q)
      if (c.cycle_len() % q == 0) ps.insert(q);
  std::vector<std::uint32_t> periods(ps.begin(), ps.end());
  auto x = peel_unroll(*fo.value, periods, b.depth(), n);
  if (!x) return out;
  if (unroll_cut(evaluate(p, *x), n) == bf) {
    out.status = SolveStatus::solution;
    out.value = *x;
  }
  return out;
}

SolveOutcome<Fdds> solve_fdds(const FddsPolynomial& p, const Fdds& b) {
  bool cancelable = false;
  for (const auto& t : p.terms)
    if (t.exponent > 0 && is_cancelable(t.coefficient)) cancelable = true;
  if (!cancelable)
    throw NotSupportedNonInjective(
        "solve_fdds requires a cancelable non-constant coefficient");
  SolveOutcome<Fdds> out;
  Fdds bw = b;
  if (const Fdds* a0 = p.constant()) {
    auto sub = fdds_subtract(bw, *a0);
    if (!sub) return out;
    bw = *sub;
  }
  FddsPolynomial pn;
  for (const auto& t : p.terms)
    if (t.exponent > 0) pn.terms.push_back(t);
  Fdds x;
  std::uint64_t guard = bw.component_count() + 2;
  while (guard--) {
    auto rem = fdds_subtract(bw, evaluate(pn, x));
    if (!rem) return out;
    if (rem->empty()) {
      if (verify(p, x, b)) {
        out.status = SolveStatus::solution;
        out.value = std::move(x);
      }
      return out;
    }
    const Component* mc = nullptr;
    for (const auto& [c, k] : rem->components())
      if (!mc || compare_cyclefirst(c, *mc) < 0) mc = &c;
    std::uint32_t period = mc->cycle_len();
    Fdds sub_b = set_dive(bw, period);
    FddsPolynomial subp;
    for (const auto& t : pn.terms) {
      Fdds g = set_dive(t.coefficient, period);
      if (!g.empty()) subp.terms.push_back({t.exponent, std::move(g)});
    }
    if (subp.terms.empty()) return out;
    int n = default_cut_depth(subp, sub_b);
    Forest bf = unroll_cut(sub_b, n);
    ForestPolynomial pf;
    for (const auto& t : subp.terms)
      pf.terms.push_back({t.exponent, unroll_cut(t.coefficient, n)});
    SolveOutcome<Forest> fo = solve_forest(pf, bf);
    out.trace.insert(out.trace.end(), fo.trace.begin(), fo.trace.end());
    if (fo.status != SolveStatus::solution) return out;
    auto yrem =
        forest_subtract(*fo.value, unroll_cut(set_dive(x, period), n));
    if (!yrem || yrem->empty()) return out;
    int d_bound = sub_b.depth();
    if (n < d_bound + 2 * static_cast<int>(period)) return out;
    auto c = reroll(yrem->min_tree(), period, d_bound);
    if (!c) return out;
    x.add(*c);
  }
  return out;
}

bool verify(const ForestPolynomial& p, const Forest& x, const Forest& b) {
  return evaluate(p, x) == b;
}

bool verify(const FddsPolynomial& p, const Fdds& x, const Fdds& b) {
  return evaluate(p, x) == b;
}

}  // namespace fdds
