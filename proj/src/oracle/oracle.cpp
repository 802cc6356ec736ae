#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nesthilb::oracle {

namespace {

using Dense = std::map<std::pair<int, int>, long>;

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  for (const auto& [w, c] : p.terms()) d[{w.a, w.b}] = c.to_long();
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly p;
  for (const auto& [k, c] : d)
    if (c != 0) p.add_term({k.first, k.second}, Rational(c));
  return p;
}

// q with q (1 - t) = p along coordinate `axis`: running sums in that direction.
Dense divide_one_minus(const Dense& p, int axis) {
  std::map<int, std::map<int, long>> lines;
  for (const auto& [k, c] : p) {
    const int along = axis == 0 ? k.first : k.second;
    const int across = axis == 0 ? k.second : k.first;
    lines[across][along] += c;
  }
  Dense q;
  for (const auto& [across, line] : lines) {
    if (line.empty()) continue;
    long running = 0;
    const int lo = line.begin()->first;
    const int hi = line.rbegin()->first;
    for (int e = lo; e <= hi; ++e) {
      const auto it = line.find(e);
      if (it != line.end()) running += it->second;
      if (e == hi) {
        if (running != 0) throw std::domain_error("inexact division by (1 - t)");
        break;
      }
      if (running != 0) q[axis == 0 ? std::pair{e, across} : std::pair{across, e}] = running;
    }
  }
  return q;
}

}  // namespace

std::vector<std::pair<int, int>> minimal_generators(const Partition& mu) {
  std::vector<std::pair<int, int>> gens;
  // a generator is a cell outside mu whose left and upper neighbours are in mu
  // (or off the edge)
  const int rows = mu.length();
  for (int a = 0; a <= rows; ++a) {
    const int b = mu.part(a);
    const bool up_ok = a == 0 || mu.contains({a - 1, b});
    const bool left_ok = b == 0 || mu.contains({a, b - 1});
    if (up_ok && left_ok) gens.emplace_back(a, b);
  }
  return gens;
}

LaurentPoly taylor_numerator(const Partition& mu) {
  const auto gens = minimal_generators(mu);
  const std::size_t k = gens.size();
  LaurentPoly p;
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    int a = 0, b = 0, count = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) {
        a = std::max(a, gens[i].first);
        b = std::max(b, gens[i].second);
        ++count;
      }
    p.add_term({a, b}, Rational(count % 2 == 1 ? 1 : -1));
  }
  return p;
}

LaurentPoly divide_by_delta(const LaurentPoly& p) {
  return from_dense(divide_one_minus(divide_one_minus(to_dense(p), 0), 1));
}

LaurentPoly ext_block(const Partition& a, const Partition& b) {
  const LaurentPoly pa = taylor_numerator(a);
  const LaurentPoly pb = taylor_numerator(b);
  return divide_by_delta(LaurentPoly(Rational(1)) - laurent_bar(pa) * pb);
}

LaurentPoly tangent(const Partition& outer, const Partition& inner) {
  const LaurentPoly p1 = taylor_numerator(outer);
  const LaurentPoly p2 = taylor_numerator(inner);
  const LaurentPoly num = LaurentPoly(Rational(1)) - laurent_bar(p1) * p1 -
                          laurent_bar(p2) * p2 + laurent_bar(p1) * p2;
  return divide_by_delta(num);
}

namespace {

void count(int charts, int n1, int n2, int chart, int used1, int used2, long& total,
           const std::vector<std::vector<Partition>>& by_size) {
  if (chart == charts) {
    if (used1 == n1 && used2 == n2) ++total;
    return;
  }
  for (int s1 = 0; used1 + s1 <= n1; ++s1)
    for (const Partition& outer : by_size[s1])
      for (int s2 = 0; used2 + s2 <= n2; ++s2)
        for (const Partition& inner : by_size[s2]) {
          bool inside = true;
          for (int r = 0; r < inner.length(); ++r) inside = inside && inner.part(r) <= outer.part(r);
          if (inside) count(charts, n1, n2, chart + 1, used1 + s1, used2 + s2, total, by_size);
        }
}

}  // namespace

long count_nested_fixed_points(int charts, int n1, int n2) {
  std::vector<std::vector<Partition>> by_size;
  for (int s = 0; s <= n1; ++s) by_size.push_back(enumerate_partitions(s));
  long total = 0;
  count(charts, n1, n2, 0, 0, 0, total, by_size);
  return total;
}

}  // namespace nesthilb::oracle
