#include "ssarr/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "ssarr/classify.hpp"
#include "ssarr/errors.hpp"
#include "ssarr/families.hpp"
#include "ssarr/linalg.hpp"
#include "ssarr/modular.hpp"

namespace ssarr {

MultivarPoly MultivarPoly::constant(const CycField& field, const CycNumber& c) {
  MultivarPoly out(field);
  out.add_term({0, 0, 0}, c);
  return out;
}

MultivarPoly MultivarPoly::linear(const ProjLine& line) {
  MultivarPoly out(line.field());
  out.add_term({1, 0, 0}, line.coeffs[0]);
  out.add_term({0, 1, 0}, line.coeffs[1]);
  out.add_term({0, 0, 1}, line.coeffs[2]);
  return out;
}

int MultivarPoly::degree() const {
  int best = -1;
  for (const auto& [mono, c] : terms_) best = std::max(best, mono[0] + mono[1] + mono[2]);
  return best;
}

bool MultivarPoly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first[0] + t.first[1] + t.first[2] == d; });
}

CycNumber MultivarPoly::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? CycNumber(field_) : it->second;
}

void MultivarPoly::add_term(const Monomial& mono, const CycNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultivarPoly MultivarPoly::derivative(int var) const {
  if (var < 0 || var > 2) throw InputError("derivative variable must be 0, 1 or 2");
  const auto v = static_cast<std::size_t>(var);
  MultivarPoly out(field_);
  for (const auto& [mono, c] : terms_) {
    if (mono[v] == 0) continue;
    Monomial lowered = mono;
    --lowered[v];
    out.add_term(lowered, c * CycNumber(field_, mono[v]));
  }
  return out;
}

CycNumber MultivarPoly::evaluate(const Triple& point) const {
  CycNumber acc(field_);
  for (const auto& [mono, c] : terms_) {
    CycNumber term = c;
    for (std::size_t i = 0; i < 3; ++i) {
      if (mono[i] > 0) term *= point[i].pow(mono[i]);
    }
    acc += term;
  }
  return acc;
}

MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b) {
  if (!(a.field_ == b.field_)) throw ArithmeticError("polynomials over different fields");
  MultivarPoly out(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    }
  }
  return out;
}

MultivarPoly operator+(const MultivarPoly& a, const MultivarPoly& b) {
  if (!(a.field_ == b.field_)) throw ArithmeticError("polynomials over different fields");
  MultivarPoly out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono, c);
  return out;
}

std::string MultivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  static constexpr char names[] = {'x', 'y', 'z'};
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << '(' << it->second.to_string() << ')';
    for (std::size_t i = 0; i < 3; ++i) {
      if (it->first[i] == 0) continue;
      out << '*' << names[i];
      if (it->first[i] > 1) out << '^' << it->first[i];
    }
  }
  return out.str();
}

std::vector<Monomial> monomials(int r) {
  std::vector<Monomial> out;
  if (r < 0) return out;
  for (int i = r; i >= 0; --i) {
    for (int j = r - i; j >= 0; --j) out.push_back({i, j, r - i - j});
  }
  return out;
}

namespace {

// Position of a degree-r monomial in monomials(r).
std::size_t mono_index(const Monomial& m, int r) {
  const int i = m[0], j = m[1];
  const int before = (r - i) * (r - i + 1) / 2;  // monomials with larger x exponent
  return static_cast<std::size_t>(before + (r - i - j));
}

}  // namespace

MultivarPoly defining_polynomial(const Arrangement& arrangement) {
  MultivarPoly f = MultivarPoly::constant(arrangement.field(), CycNumber(arrangement.field(), 1));
  for (const auto& l : arrangement.lines()) f = f * MultivarPoly::linear(l);
  return f;
}

int default_mdr_bound(const Arrangement& arrangement) {
  return (static_cast<int>(arrangement.size()) - 1) / 2;
}

namespace {

class Jacobian {
 public:
  explicit Jacobian(const Arrangement& arrangement)
      : field_(arrangement.field()), d_(static_cast<int>(arrangement.size())) {
    const MultivarPoly f = defining_polynomial(arrangement);
    for (int v = 0; v < 3; ++v) partials_[static_cast<std::size_t>(v)] = f.derivative(v);
  }

  int degree() const { return d_; }

  FieldMatrix exact_matrix(int r, const std::vector<std::size_t>* rows = nullptr) const {
    const auto out_monos = monomials(r + d_ - 1);
    const auto in_monos = monomials(r);
    std::vector<std::size_t> row_list;
    if (rows) {
      row_list = *rows;
    } else {
      for (std::size_t i = 0; i < out_monos.size(); ++i) row_list.push_back(i);
    }
    FieldMatrix m(field_, row_list.size(), 3 * in_monos.size());
    for (std::size_t ri = 0; ri < row_list.size(); ++ri) {
      const Monomial& target = out_monos[row_list[ri]];
      for (std::size_t v = 0; v < 3; ++v) {
        for (std::size_t c = 0; c < in_monos.size(); ++c) {
          const Monomial& mu = in_monos[c];
          const Monomial diff{target[0] - mu[0], target[1] - mu[1], target[2] - mu[2]};
          if (diff[0] < 0 || diff[1] < 0 || diff[2] < 0) continue;
          m(ri, v * in_monos.size() + c) = partials_[v].coeff(diff);
        }
      }
    }
    return m;
  }

  std::optional<ModMatrix> modular_matrix(int r, const PrimeImage& image) const {
    const auto out_monos = monomials(r + d_ - 1);
    const auto in_monos = monomials(r);
    const int dm1 = d_ - 1;
    std::array<std::vector<std::uint64_t>, 3> reduced;
    for (std::size_t v = 0; v < 3; ++v) {
      reduced[v].assign(monomials(dm1).size(), 0);
      for (const auto& [mono, c] : partials_[v].terms()) {
        const auto value = reduce(c, image);
        if (!value) return std::nullopt;
        reduced[v][mono_index(mono, dm1)] = *value;
      }
    }
    ModMatrix m(out_monos.size(), 3 * in_monos.size());
    for (std::size_t v = 0; v < 3; ++v) {
      for (std::size_t c = 0; c < in_monos.size(); ++c) {
        const Monomial& mu = in_monos[c];
        for (const auto& [mono, unused] : partials_[v].terms()) {
          const Monomial target{mono[0] + mu[0], mono[1] + mu[1], mono[2] + mu[2]};
          m.at(mono_index(target, r + dm1), v * in_monos.size() + c) = reduced[v][mono_index(mono, dm1)];
        }
      }
    }
    return m;
  }

  // a f_x + b f_y + c f_z for the coefficient vector of (a, b, c).
  bool is_syzygy(int r, const std::vector<CycNumber>& vec) const {
    const auto in_monos = monomials(r);
    MultivarPoly total(field_);
    for (std::size_t v = 0; v < 3; ++v) {
      MultivarPoly coeff(field_);
      for (std::size_t c = 0; c < in_monos.size(); ++c) coeff.add_term(in_monos[c], vec[v * in_monos.size() + c]);
      total = total + coeff * partials_[v];
    }
    return total.is_zero();
  }

 private:
  CycField field_;
  int d_;
  std::array<MultivarPoly, 3> partials_{MultivarPoly(field_), MultivarPoly(field_), MultivarPoly(field_)};
};

int kernel_dim_exact(const Jacobian& jac, int r) {
  return static_cast<int>(nullspace(jac.exact_matrix(r)).size());
}

int kernel_dim_certified(const Jacobian& jac, const CycField& field, int r) {
  constexpr int kPrimes = 4;
  for (int index = 0; index < kPrimes; ++index) {
    const PrimeImage image = prime_image(field.order(), index);
    auto mat = jac.modular_matrix(r, image);
    if (!mat) continue;
    const std::size_t cols = mat->cols;
    const RankProfile profile = rank_profile(std::move(*mat), image.p);
    // The rank mod p never exceeds the exact rank.
    if (profile.rank() == cols) return 0;
    // The pivot rows have full exact rank too, so their kernel has the
    // mod-p dimension. Each basis vector is then checked against the whole
    // map; if all pass the exact kernel has exactly this dimension.
    const auto basis = nullspace(jac.exact_matrix(r, &profile.rows));
    const bool all = std::all_of(basis.begin(), basis.end(), [&](const auto& v) { return jac.is_syzygy(r, v); });
    if (all) return static_cast<int>(basis.size());
  }
  return kernel_dim_exact(jac, r);
}

int checked_bound(const Arrangement& arrangement, std::optional<int> bound) {
  const int d = static_cast<int>(arrangement.size());
  const int b = bound.value_or(default_mdr_bound(arrangement));
  if (b < 0) throw InputError("mdr bound must be nonnegative");
  if (b >= d - 1) {
    throw InputError("mdr bound " + std::to_string(b) + " >= d - 1 = " + std::to_string(d - 1) +
                     " would admit Koszul relations");
  }
  return b;
}

template <typename KernelDim>
MdrResult mdr_search(const Arrangement& arrangement, std::optional<int> bound, KernelDim kernel_dim) {
  MdrResult out;
  out.bound = checked_bound(arrangement, bound);
  const Jacobian jac(arrangement);
  for (int r = 0; r <= out.bound; ++r) {
    const int dim = kernel_dim(jac, r);
    out.degree_dims.push_back(dim);
    if (dim > 0) {
      out.value = r;
      break;
    }
  }
  return out;
}

}  // namespace

MdrResult mdr(const Arrangement& arrangement, std::optional<int> bound) {
  const CycField field = arrangement.field();
  return mdr_search(arrangement, bound,
                    [&](const Jacobian& jac, int r) { return kernel_dim_certified(jac, field, r); });
}

MdrResult mdr_exact(const Arrangement& arrangement, std::optional<int> bound) {
  return mdr_search(arrangement, bound, kernel_dim_exact);
}

ExponentTriple supersolvable_exponents(const Arrangement& arrangement, bool check_mdr) {
  const Lattice lat = build_lattice(arrangement);
  const auto modular = modular_points(arrangement, lat);
  if (modular.empty()) throw InputError("arrangement is not supersolvable");
  int m = 0;
  for (const auto& mp : modular) m = std::max(m, mp.multiplicity);
  const int d = static_cast<int>(arrangement.size());
  const ExponentTriple exps{1, m - 1, d - m};
  if (tjurina_census(lat) != tjurina_free(d, exps.d2, exps.d3)) {
    throw InternalError("Tjurina census disagrees with (d-1)^2 - (m-1)(d-m)");
  }
  if (check_mdr && d >= 2) {
    const auto r = mdr(arrangement);
    if (r.value != std::min(exps.d2, exps.d3)) throw InternalError("mdr disagrees with min(m-1, d-m)");
  }
  return exps;
}

MultiRestriction ziegler_restriction(const Arrangement& arrangement, std::size_t line) {
  return ziegler_restriction(arrangement, build_lattice(arrangement), line);
}

MultiRestriction ziegler_restriction(const Arrangement& arrangement, const Lattice& lattice, std::size_t line) {
  if (line >= arrangement.size()) throw InputError("line index " + std::to_string(line) + " out of range");
  const int pivot = arrangement[line].pivot();
  MultiRestriction out;
  int k = 0;
  for (int v = 0; v < 3; ++v) {
    if (v != pivot) out.coords[static_cast<std::size_t>(k++)] = v;
  }
  const auto s = static_cast<std::size_t>(out.coords[0]);
  const auto t = static_cast<std::size_t>(out.coords[1]);
  for (int idx : lattice.points_on_line[line]) {
    const auto& x = lattice.points[static_cast<std::size_t>(idx)].coords;
    // The form on H vanishing at X: X_t * s - X_s * t.
    std::array<CycNumber, 2> form{x[t], -x[s]};
    const CycNumber lead = form[0].is_zero() ? form[1] : form[0];
    const CycNumber inv = lead.inverse();
    form[0] *= inv;
    form[1] *= inv;
    out.forms.push_back(form);
    out.mult.push_back(lattice.mult[static_cast<std::size_t>(idx)] - 1);
    out.total += out.mult.back();
  }
  return out;
}

int derivation_dimension(const MultiRestriction& r, int p) {
  if (r.forms.empty()) throw InputError("multiarrangement without forms");
  if (p < 0) return 0;
  const CycField field = r.forms[0][0].field();
  const auto unknowns = static_cast<std::size_t>(2 * (p + 1));
  std::vector<std::vector<CycNumber>> rows;
  // Coefficient i of P, Q is that of s^i t^(p-i); theta(alpha) = a P + b Q.
  for (std::size_t f = 0; f < r.forms.size(); ++f) {
    const CycNumber& a = r.forms[f][0];
    const CycNumber& b = r.forms[f][1];
    const int m = r.mult[f];
    if (b.is_zero()) {
      // alpha = s: the coefficients of s^i, i < m, vanish.
      for (int i = 0; i < std::min(m, p + 1); ++i) {
        std::vector<CycNumber> row(unknowns, CycNumber(field));
        row[static_cast<std::size_t>(i)] = a;
        rows.push_back(std::move(row));
      }
      continue;
    }
    // Dehomogenize at s = 1: t0 = -a/b must be a root of order >= m of
    // sum_i h_i t^(p-i); impose the Taylor coefficients j < m.
    const CycNumber t0 = -a / b;
    for (int j = 0; j < std::min(m, p + 1); ++j) {
      std::vector<CycNumber> row(unknowns, CycNumber(field));
      for (int i = 0; i <= p; ++i) {
        const int e = p - i;
        if (e < j) continue;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(j));
        const CycNumber w = CycNumber(field, Rational(binom)) * t0.pow(e - j);
        row[static_cast<std::size_t>(i)] = a * w;
        row[static_cast<std::size_t>(p + 1 + i)] = b * w;
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return static_cast<int>(unknowns);
  FieldMatrix m(field, rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < unknowns; ++c) m(i, c) = rows[i][c];
  return static_cast<int>(unknowns - rank(std::move(m)));
}

bool easy_applies(const MultiRestriction& r) {
  const int a = static_cast<int>(r.forms.size());
  return r.total - a + 1 <= a - 1;
}

ExponentPair easy_exponents(const MultiRestriction& r) {
  const int a = static_cast<int>(r.forms.size());
  return {r.total - a + 1, a - 1};
}

namespace {

// dim D_p of a free module with exponents (d1, d2).
int expected_dim(const ExponentPair& e, int p) {
  return std::max(0, p - e.d1 + 1) + std::max(0, p - e.d2 + 1);
}

}  // namespace

MultiExponents multi_exponents_by_kernel(const MultiRestriction& r) {
  MultiExponents out;
  for (int p = 0; p <= r.total; ++p) {
    const int dim = derivation_dimension(r, p);
    out.degree_dims.emplace_back(p, dim);
    if (dim == 0) continue;
    if (dim > 2) throw InternalError("derivation module jumps to dimension " + std::to_string(dim));
    out.exponents = dim == 2 ? ExponentPair{p, p} : ExponentPair{p, r.total - p};
    if (out.exponents.d2 < out.exponents.d1) throw InternalError("smaller exponent exceeds half the total");
    if (out.exponents.d2 > out.exponents.d1 &&
        derivation_dimension(r, out.exponents.d2) != expected_dim(out.exponents, out.exponents.d2)) {
      throw InternalError("second generator not found in the expected degree");
    }
    return out;
  }
  throw InternalError("no derivation found up to the total multiplicity");
}

MultiExponents multi_exponents(const MultiRestriction& r) {
  if (!easy_applies(r)) return multi_exponents_by_kernel(r);
  MultiExponents out;
  out.easy = true;
  out.exponents = easy_exponents(r);
  const int p = out.exponents.d1;
  if (p > 0) out.degree_dims.emplace_back(p - 1, derivation_dimension(r, p - 1));
  out.degree_dims.emplace_back(p, derivation_dimension(r, p));
  if ((p > 0 && out.degree_dims.front().second != 0) ||
      out.degree_dims.back().second != expected_dim(out.exponents, p)) {
    throw InternalError("closed-form exponents contradicted by the kernel");
  }
  return out;
}

bool is_balanced(const MultiRestriction& r) {
  return std::all_of(r.mult.begin(), r.mult.end(), [&](int m) { return 2 * m < r.total; });
}

NodalResult nodal_vanishing_dimension(const Arrangement& arrangement) {
  const Lattice lat = build_lattice(arrangement);
  if (!is_generic_arrangement(lat)) throw InputError("nodal_vanishing_dimension needs an arrangement with only nodes");
  const CycField& field = arrangement.field();
  const int dprime = static_cast<int>(arrangement.size());
  const int deg = dprime - 1;
  const auto monos = monomials(deg);

  FieldMatrix eval(field, lat.size(), monos.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& pt = lat.points[i].coords;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      CycNumber v(field, 1);
      for (std::size_t k = 0; k < 3; ++k) {
        if (monos[c][k] > 0) v *= pt[k].pow(monos[c][k]);
      }
      eval(i, c) = v;
    }
  }
  NodalResult out;
  out.dimension = static_cast<int>(monos.size() - rank(std::move(eval)));

  FieldMatrix products(field, static_cast<std::size_t>(dprime), monos.size());
  out.products_vanish = true;
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    MultivarPoly g = MultivarPoly::constant(field, CycNumber(field, 1));
    for (std::size_t j = 0; j < arrangement.size(); ++j) {
      if (j != i) g = g * MultivarPoly::linear(arrangement[j]);
    }
    for (const auto& [mono, c] : g.terms()) products(i, mono_index(mono, deg)) = c;
    for (const auto& p : lat.points) {
      if (!g.evaluate(p.coords).is_zero()) out.products_vanish = false;
    }
  }
  out.products_rank = static_cast<int>(rank(std::move(products)));
  return out;
}

}  // namespace ssarr
