#include "ssarr/wclass.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ssarr/classify.hpp"
#include "ssarr/errors.hpp"

namespace ssarr {

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

void WTuple::validate() const {
  if (n < 1) throw InputError("W(n,k) requires n >= 1");
  if (exponents.size() > static_cast<std::size_t>(n)) throw InputError("W(n,k) requires k <= n");
  std::set<int> seen;
  for (int e : exponents) {
    if (e < 0 || e >= n) throw InputError("exponent " + std::to_string(e) + " outside [0, n)");
    if (!seen.insert(e).second) throw InputError("repeated exponent " + std::to_string(e));
  }
}

std::string WClass::to_string() const {
  std::string out = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " {";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exponents[i]);
  }
  return out + "}";
}

WClass canonicalize(const WTuple& w) {
  w.validate();
  const int n = w.n;
  std::vector<int> best;
  bool first = true;
  for (int s : {1, -1}) {
    for (int a = 0; a < n; ++a) {
      std::vector<int> image;
      image.reserve(w.exponents.size());
      for (int e : w.exponents) image.push_back(mod(static_cast<long long>(s) * e + a, n));
      std::sort(image.begin(), image.end());
      if (first || image < best) {
        best = std::move(image);
        first = false;
      }
    }
  }
  return WClass{n, static_cast<int>(w.exponents.size()), std::move(best)};
}

WTuple translate(const WTuple& w, int a) {
  WTuple out{w.n, {}};
  for (int e : w.exponents) out.exponents.push_back(mod(static_cast<long long>(e) + a, w.n));
  return out;
}

WTuple invert(const WTuple& w) {
  WTuple out{w.n, {}};
  for (int e : w.exponents) out.exponents.push_back(mod(-static_cast<long long>(e), w.n));
  return out;
}

WTuple transpose(const WTuple& w, std::size_t i, std::size_t j) {
  if (i >= w.exponents.size() || j >= w.exponents.size()) throw InputError("transpose index out of range");
  WTuple out = w;
  std::swap(out.exponents[i], out.exponents[j]);
  return out;
}

std::vector<WClass> enumerate_classes(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw InputError("enumerate_classes requires n >= 1 and 0 <= k <= n");
  std::set<WClass> classes;
  // Walk k-subsets of {0..n-1} through a selection mask.
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  do {
    WTuple w{n, {}};
    for (int i = 0; i < n; ++i) {
      if (mask[static_cast<std::size_t>(i)]) w.exponents.push_back(i);
    }
    classes.insert(canonicalize(w));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return {classes.begin(), classes.end()};
}

int predicted_modular_count(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw InputError("predicted_modular_count requires n >= 1 and 0 <= k <= n");
  if (k < n) return 2;
  return n == 1 ? 4 : 3;
}

namespace {

// A primitive n-th root of unity in the arrangement's field, matched to the
// zeta_n used by a_of_w when n divides the field order.
CycNumber primitive_root(const CycField& field, int n) {
  const int order = field.order();
  if (order % n == 0) return zeta_pow(field, order / n);
  for (int j = 0; j < order; ++j) {
    for (int s : {1, -1}) {
      CycNumber g = zeta_pow(field, j);
      if (s < 0) g = -g;
      if (root_order(g) == n) return g;
    }
  }
  throw InputError("Q(zeta_" + std::to_string(order) + ") contains no primitive " + std::to_string(n) +
                   "-th root of unity");
}

}  // namespace

RecoveredClass recover_class(const Arrangement& arrangement) {
  return recover_class(arrangement, build_lattice(arrangement));
}

RecoveredClass recover_class(const Arrangement& arrangement, const Lattice& lattice) {
  const auto modular = modular_points(arrangement, lattice);
  if (modular.size() < 2) {
    throw InputError("recover_class needs at least two modular points, found " + std::to_string(modular.size()));
  }
  const auto m = homogeneity(modular);
  if (!m) throw InputError("recover_class needs an m-homogeneous arrangement");
  if (*m < 3) throw InputError("recover_class needs m >= 3");

  const int d = static_cast<int>(arrangement.size());
  const int n = *m - 2;
  const int k = d - (2 * *m - 1);
  if (k < 0 || k > n) {
    throw InternalError("line count " + std::to_string(d) + " incompatible with two modular points of multiplicity " +
                        std::to_string(*m));
  }
  RecoveredClass out{n, k, {}, false};

  if (modular.size() >= 3) {
    if (k != n) throw InternalError("three modular points but d != 3m - 3");
    WTuple all{n, {}};
    for (int e = 0; e < n; ++e) all.exponents.push_back(e);
    out.cls = canonicalize(all);
    out.full_monomial = true;
    return out;
  }
  if (k <= 1) {
    out.cls = canonicalize(WTuple{n, std::vector<int>(static_cast<std::size_t>(k), 0)});
    return out;
  }

  const ProjPoint& p = modular[0].point;
  const ProjPoint& pp = modular[1].point;
  std::vector<const ProjLine*> extra;
  for (const auto& l : arrangement.lines()) {
    if (!l.contains(p) && !l.contains(pp)) extra.push_back(&l);
  }
  if (static_cast<int>(extra.size()) != k) throw InternalError("extra line count differs from d - (2m - 1)");
  const ProjPoint q = line_intersect(*extra[0], *extra[1]);
  for (const auto* l : extra) {
    if (!l->contains(q)) throw InternalError("lines missing both modular pencils are not concurrent");
  }

  // In the frame with columns (q, p', p) each extra line reads 0*x + a*y + b*z,
  // i.e. z = mu*y with mu = -a/b.
  const CycField& field = arrangement.field();
  std::vector<CycNumber> mu;
  for (const auto* l : extra) {
    const CycNumber a = l->evaluate(pp.coords);
    const CycNumber b = l->evaluate(p.coords);
    if (b.is_zero()) throw InternalError("extra line passes through a modular point");
    mu.push_back(-a / b);
  }
  const CycNumber g = primitive_root(field, n);
  std::vector<CycNumber> powers;
  for (int e = 0; e < n; ++e) powers.push_back(g.pow(e));

  WTuple w{n, {}};
  const CycNumber base_inv = mu[0].inverse();
  for (const auto& value : mu) {
    const CycNumber lambda = value * base_inv;
    auto it = std::find(powers.begin(), powers.end(), lambda);
    if (it == powers.end()) throw InternalError("ratio " + lambda.to_string() + " is not an n-th root of unity");
    w.exponents.push_back(static_cast<int>(it - powers.begin()));
  }
  out.cls = canonicalize(w);
  return out;
}

}  // namespace ssarr
