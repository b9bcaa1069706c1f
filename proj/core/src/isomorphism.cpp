#include "ssarr/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ssarr {

namespace {

// Lines are vertices [0, d), points are [d, d + P).
struct IncidenceGraph {
  std::size_t lines = 0;
  std::vector<std::vector<int>> adj;

  explicit IncidenceGraph(const Lattice& lat) : lines(lat.line_count) {
    adj.resize(lat.line_count + lat.size());
    for (std::size_t p = 0; p < lat.size(); ++p) {
      const int pv = static_cast<int>(lat.line_count + p);
      for (int l : lat.incidence[p]) {
        adj[static_cast<std::size_t>(l)].push_back(pv);
        adj[static_cast<std::size_t>(pv)].push_back(l);
      }
    }
  }

  std::size_t size() const { return adj.size(); }
};

using Colors = std::vector<int>;

int count_colors(const Colors& a, const Colors& b) {
  std::set<int> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return static_cast<int>(s.size());
}

// Refines both colourings jointly so that equal colours mean equal
// refined signatures across the two graphs. Returns false when the colour
// histograms of the two sides diverge.
bool refine(const IncidenceGraph& ga, const IncidenceGraph& gb, Colors& ca, Colors& cb) {
  int before = count_colors(ca, cb);
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    std::map<Signature, int> ids;
    auto signature = [](const IncidenceGraph& g, const Colors& c, std::size_t v) {
      std::vector<int> nb;
      nb.reserve(g.adj[v].size());
      for (int u : g.adj[v]) nb.push_back(c[static_cast<std::size_t>(u)]);
      std::sort(nb.begin(), nb.end());
      return Signature{c[v], std::move(nb)};
    };
    std::vector<Signature> sa, sb;
    sa.reserve(ga.size());
    sb.reserve(gb.size());
    for (std::size_t v = 0; v < ga.size(); ++v) sa.push_back(signature(ga, ca, v));
    for (std::size_t v = 0; v < gb.size(); ++v) sb.push_back(signature(gb, cb, v));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < ga.size(); ++v) ca[v] = ids[sa[v]];
    for (std::size_t v = 0; v < gb.size(); ++v) cb[v] = ids[sb[v]];

    std::map<int, int> ha, hb;
    for (int c : ca) ++ha[c];
    for (int c : cb) ++hb[c];
    if (ha != hb) return false;
    const int after = static_cast<int>(ids.size());
    if (after == before) return true;
    before = after;
  }
}

class Search {
 public:
  Search(const Lattice& a, const Lattice& b) : a_(a), b_(b), ga_(a), gb_(b) {
    for (const auto& inc : b.incidence) points_b_.insert(inc);
  }

  std::optional<std::vector<int>> run() {
    Colors ca(ga_.size()), cb(gb_.size());
    for (std::size_t v = 0; v < ga_.size(); ++v) ca[v] = v < a_.line_count ? 0 : 1 + a_.mult[v - a_.line_count];
    for (std::size_t v = 0; v < gb_.size(); ++v) cb[v] = v < b_.line_count ? 0 : 1 + b_.mult[v - b_.line_count];
    if (descend(ca, cb)) return result_;
    return std::nullopt;
  }

 private:
  bool descend(Colors ca, Colors cb) {
    if (!refine(ga_, gb_, ca, cb)) return false;
    const std::size_t d = a_.line_count;
    std::map<int, std::vector<int>> class_a, class_b;
    for (std::size_t l = 0; l < d; ++l) class_a[ca[l]].push_back(static_cast<int>(l));
    for (std::size_t l = 0; l < d; ++l) class_b[cb[l]].push_back(static_cast<int>(l));

    int target = -1;
    std::size_t best = 0;
    for (const auto& [color, members] : class_a) {
      if (members.size() > 1 && (target == -1 || members.size() < best)) {
        target = color;
        best = members.size();
      }
    }
    if (target == -1) {
      std::vector<int> map(d, -1);
      for (const auto& [color, members] : class_a) map[static_cast<std::size_t>(members[0])] = class_b[color][0];
      if (!consistent(map)) return false;
      result_ = std::move(map);
      return true;
    }

    const int fresh = 1 + std::max(*std::max_element(ca.begin(), ca.end()),
                                   *std::max_element(cb.begin(), cb.end()));
    const int pick = class_a[target][0];
    for (int candidate : class_b[target]) {
      Colors na = ca, nb = cb;
      na[static_cast<std::size_t>(pick)] = fresh;
      nb[static_cast<std::size_t>(candidate)] = fresh;
      if (descend(std::move(na), std::move(nb))) return true;
    }
    return false;
  }

  bool consistent(const std::vector<int>& map) const {
    for (const auto& inc : a_.incidence) {
      std::vector<int> image;
      image.reserve(inc.size());
      for (int l : inc) image.push_back(map[static_cast<std::size_t>(l)]);
      std::sort(image.begin(), image.end());
      if (points_b_.count(image) == 0) return false;
    }
    return true;
  }

  const Lattice& a_;
  const Lattice& b_;
  IncidenceGraph ga_;
  IncidenceGraph gb_;
  std::set<std::vector<int>> points_b_;
  std::vector<int> result_;
};

}  // namespace

bool is_lattice_isomorphism(const Lattice& a, const Lattice& b, const std::vector<int>& map) {
  if (a.line_count != b.line_count || a.size() != b.size() || map.size() != a.line_count) return false;
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) return false;
  }
  std::set<std::vector<int>> points_b(b.incidence.begin(), b.incidence.end());
  for (const auto& inc : a.incidence) {
    std::vector<int> image;
    for (int l : inc) image.push_back(map[static_cast<std::size_t>(l)]);
    std::sort(image.begin(), image.end());
    if (points_b.count(image) == 0) return false;
  }
  return true;
}

std::optional<std::vector<int>> lattice_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.line_count != b.line_count || a.size() != b.size()) return std::nullopt;
  std::vector<int> ma = a.mult, mb = b.mult;
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  if (ma != mb) return std::nullopt;
  return Search(a, b).run();
}

}  // namespace ssarr
