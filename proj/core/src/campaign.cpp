#include "ssarr/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "ssarr/errors.hpp"
#include "ssarr/families.hpp"
#include "ssarr/isomorphism.hpp"

namespace ssarr {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "fail";
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{
      "thm1-bound",         "thm1b-roundtrip",     "thm1b-modular-counts", "conj1-two-modular",
      "conj1-cones",        "zmain-exponents",     "tjurina-consistency",  "hirzebruch-sanity",
      "m3-classification",  "thm2b-bound",         "thm2c-saturation"};
  return names;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = splitmix(seed);
  for (auto p : parts) h = splitmix(h ^ p);
  return h;
}

std::string pad(int v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d", v);
  return buf;
}

std::string exps_key(const std::vector<int>& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + "}";
}

// A member of one of the paper's families together with what it was built from.
struct Sample {
  std::string key;
  Json params;
  Arrangement arrangement;
  int n = 0;
  int k = 0;
  bool full = false;  // projectively the full monomial arrangement
};

std::vector<Sample> aw_samples(const CampaignOptions& o) {
  std::vector<Sample> out;
  for (int n = 1; n <= o.max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto& cls : enumerate_classes(n, k)) {
        out.push_back({"aw/n" + pad(n) + "/k" + pad(k) + "/" + exps_key(cls.exponents),
                       Json{{"family", "aw"}, {"n", n}, {"exponents", cls.exponents}}, a_of_w(n, cls.exponents), n,
                       k, k == n});
      }
    }
    out.push_back({"fm/n" + pad(n), Json{{"family", "full-monomial"}, {"n", n}}, full_monomial(n), n, n, true});
  }
  return out;
}

struct ConeSample {
  Sample sample;
  int dprime = 0;
  int e = 0;
  bool generic_vertex = true;
  int cone_lines = 0;
};

std::vector<ConeSample> cone_samples(const CampaignOptions& o, int max_seeds) {
  std::vector<ConeSample> out;
  for (int dp = 3; dp <= o.max_dprime; ++dp) {
    for (int s = 1; s <= max_seeds; ++s) {
      const auto base_seed = mix(o.seed, {11, static_cast<std::uint64_t>(dp), static_cast<std::uint64_t>(s)});
      const Arrangement base = generic_arrangement(dp, base_seed);
      for (bool generic : {true, false}) {
        std::optional<ProjPoint> vertex =
            generic ? std::optional<ProjPoint>(generic_vertex(base, base_seed)) : adversarial_vertex(base, base_seed);
        if (!vertex) continue;
        for (int e = 0; e <= o.max_e; ++e) {
          const Cone c = cone({base, *vertex, e, mix(base_seed, {static_cast<std::uint64_t>(e)})});
          const std::string key = "cone/d" + pad(dp) + "/s" + pad(s) + "/" + (generic ? "generic" : "adversarial") +
                                  "/e" + pad(e);
          Json params{{"family", "cone"},     {"dprime", dp}, {"seed", s}, {"vertex", generic ? "generic" : "adversarial"},
                      {"e", e}};
          out.push_back({{key, params, c.arrangement, 0, 0, false}, dp, e, generic, c.cone_lines});
        }
      }
    }
  }
  return out;
}

// Cones with a vertex kind that cannot be built still appear as cases.
std::vector<std::string> missing_adversarial(const CampaignOptions& o) {
  std::vector<std::string> out;
  for (int dp = 3; dp <= o.max_dprime; ++dp) {
    for (int s = 1; s <= o.seeds; ++s) {
      const auto base_seed = mix(o.seed, {11, static_cast<std::uint64_t>(dp), static_cast<std::uint64_t>(s)});
      if (!adversarial_vertex(generic_arrangement(dp, base_seed), base_seed)) {
        for (int e = 0; e <= o.max_e; ++e) {
          out.push_back("cone/d" + pad(dp) + "/s" + pad(s) + "/adversarial/e" + pad(e));
        }
      }
    }
  }
  return out;
}

Json grid_json(const CampaignOptions& o) {
  return Json{{"seed", o.seed},         {"max_n", o.max_n},       {"max_dprime", o.max_dprime},
              {"max_e", o.max_e},       {"seeds", o.seeds},       {"transforms", o.transforms}};
}

Matrix3 random_transform(const CycField& field, std::mt19937_64& rng) {
  const CycNumber zeta = zeta_pow(field, 1);
  auto entry = [&] {
    const long a = static_cast<long>(rng() % 7) - 3;
    const long b = static_cast<long>(rng() % 5) - 2;
    return CycNumber(field, a) + CycNumber(field, b) * zeta;
  };
  while (true) {
    Matrix3 m;
    for (auto& row : m.m)
      for (auto& x : row) x = entry();
    if (!m.determinant().is_zero()) return m;
  }
}

Json census_json(const ClassifyReport& r) { return to_json(r.census); }

void add_case(CampaignResult& res, std::string key, Verdict v, Json witness) {
  res.cases.push_back({std::move(key), v, std::move(witness)});
}

using Runner = std::function<void(const CampaignOptions&, CampaignResult&)>;

void run_thm1_bound(const CampaignOptions& o, CampaignResult& res) {
  for (const auto& s : aw_samples(o)) {
    const ClassifyReport r = check_identities(s.arrangement);
    const int d = r.d;
    const int m = r.m_homogeneous.value_or(0);
    const bool equality = d == 3 * m - 3;
    const bool pass = r.m_homogeneous.has_value() && d <= 3 * m - 3 && equality == s.full;
    add_case(res, s.key, pass ? Verdict::pass : Verdict::fail,
             Json{{"params", s.params}, {"d", d}, {"m", m}, {"M", r.modular_count}, {"bound", 3 * m - 3},
                  {"equality", equality}, {"full_monomial", s.full}});
  }
}

void run_modular_counts(const CampaignOptions& o, CampaignResult& res) {
  for (const auto& s : aw_samples(o)) {
    const Lattice lat = build_lattice(s.arrangement);
    const int M = static_cast<int>(modular_points(s.arrangement, lat).size());
    const int predicted = predicted_modular_count(s.n, s.k);
    const bool pass = M == predicted && M <= 4 && ((M == 4) == (s.n == 1 && s.k == 1));
    add_case(res, s.key, pass ? Verdict::pass : Verdict::fail,
             Json{{"params", s.params}, {"M", M}, {"predicted", predicted}});
  }
}

// A unit u mod n carrying one exponent set into the G-orbit of the other.
std::optional<int> galois_unit(const WClass& a, const WClass& b) {
  for (int u = 2; u < a.n; ++u) {
    if (std::gcd(u, a.n) != 1) continue;
    WTuple t{a.n, {}};
    for (int e : a.exponents) t.exponents.push_back(e * u % a.n);
    if (canonicalize(t) == b) return u;
  }
  return std::nullopt;
}

void run_roundtrip(const CampaignOptions& o, CampaignResult& res) {
  for (int n = 1; n <= o.max_n; ++n) {
    const CycField field(n);
    for (int k = 0; k <= n; ++k) {
      const auto classes = enumerate_classes(n, k);
      for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const WClass& cls = classes[ci];
        const Arrangement a = a_of_w(n, cls.exponents);
        for (int t = 0; t < o.transforms; ++t) {
          std::mt19937_64 rng(mix(o.seed, {21, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
                                           static_cast<std::uint64_t>(ci),
                                           static_cast<std::uint64_t>(t)}));
          const Arrangement moved = apply_transform(a, random_transform(field, rng));
          const RecoveredClass rec = recover_class(moved);
          const bool pass = rec.cls == cls && rec.k == k && rec.n == n;
          add_case(res, "roundtrip/n" + pad(n) + "/k" + pad(k) + "/" + exps_key(cls.exponents) + "/t" + pad(t),
                   pass ? Verdict::pass : Verdict::fail,
                   Json{{"class", to_json(cls)}, {"recovered", to_json(rec)}, {"transform", t}});
        }
      }
      if (k < 2 || k > n - 1) continue;
      std::vector<Lattice> lats;
      for (const auto& cls : classes) lats.push_back(build_lattice(a_of_w(n, cls.exponents)));
      for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
          const bool iso = lattice_isomorphic(lats[i], lats[j]).has_value();
          Json w{{"a", to_json(classes[i])}, {"b", to_json(classes[j])}, {"isomorphic", iso}};
          if (iso) {
            const auto u = galois_unit(classes[i], classes[j]);
            w["galois_unit"] = u ? Json(*u) : Json(nullptr);
          }
          add_case(res,
                   "separation/n" + pad(n) + "/k" + pad(k) + "/" + exps_key(classes[i].exponents) + "|" +
                       exps_key(classes[j].exponents),
                   iso ? Verdict::fail : Verdict::pass, std::move(w));
        }
      }
    }
  }
}

void run_conj1_two_modular(const CampaignOptions& o, CampaignResult& res) {
  for (const auto& s : aw_samples(o)) {
    const ClassifyReport r = check_identities(s.arrangement);
    const int n2 = r.n(2);
    add_case(res, s.key, 2 * n2 >= r.d ? Verdict::pass : Verdict::fail,
             Json{{"params", s.params}, {"d", r.d}, {"n2", n2}, {"equality", 2 * n2 == r.d}, {"M", r.modular_count}});
  }
}

void run_conj1_cones(const CampaignOptions& o, CampaignResult& res) {
  for (const auto& c : cone_samples(o, o.seeds)) {
    const Lattice lat = build_lattice(c.sample.arrangement);
    const ClassifyReport r = check_identities(c.sample.arrangement, lat);
    const int d = r.d, n2 = r.n(2), dp = c.dprime, e = c.e;
    const int N = dp * (dp - 1) / 2;
    const int m = r.max_modular_multiplicity;
    bool pass = r.supersolvable() && 2 * n2 >= d;
    // Nodes sit on base lines only: each base line meets the N' - d' + 1 cone
    // lines not through one of its own base points, and the e extra lines.
    const int predicted_n2 = dp * (c.cone_lines - dp + 1) + e * dp;
    pass = pass && n2 == predicted_n2 && m == c.cone_lines + e;
    const Check& ss = r.check("eqSS");
    const bool eqss_equality = ss.applicable && ss.lhs == ss.rhs;
    Json w{{"params", c.sample.params}, {"d", d},   {"m", m},          {"N_prime", c.cone_lines},
           {"n2", n2},                  {"census", census_json(r)},  {"eqSS_equality", eqss_equality}};
    if (c.generic_vertex) {
      pass = pass && eqss_equality && c.cone_lines == N;
      if (e == 0) {
        Census want;
        want[2] += N * (dp - 2);
        want[3] += N;
        want[N] += 1;  // the vertex; for d' = 3 this is one more triple point
        pass = pass && r.census == want;
      }
    }
    add_case(res, c.sample.key, pass ? Verdict::pass : Verdict::fail, std::move(w));
  }
  for (const auto& key : missing_adversarial(o)) {
    add_case(res, key, Verdict::not_applicable, Json{{"reason", "no two base points off a common base line"}});
  }
}

std::vector<Sample> supersolvable_samples(const CampaignOptions& o, int cone_seeds) {
  std::vector<Sample> out = aw_samples(o);
  for (auto& c : cone_samples(o, cone_seeds)) out.push_back(std::move(c.sample));
  return out;
}

void run_zmain(const CampaignOptions& o, CampaignResult& res) {
  for (const auto& s : supersolvable_samples(o, o.seeds)) {
    const Lattice lat = build_lattice(s.arrangement);
    const ClassifyReport r = check_identities(s.arrangement, lat);
    if (!r.supersolvable() || r.is_pencil) {
      add_case(res, s.key, Verdict::not_applicable, Json{{"params", s.params}});
      continue;
    }
    const int d = r.d, m = r.max_modular_multiplicity;
    const ExponentPair expected{std::min(m - 1, d - m), std::max(m - 1, d - m)};
    std::vector<int> through_max;
    for (const auto& mp : r.modular) {
      if (mp.multiplicity == m) {
        for (int l : lat.incidence[static_cast<std::size_t>(mp.index)]) through_max.push_back(l);
      }
    }
    std::sort(through_max.begin(), through_max.end());
    through_max.erase(std::unique(through_max.begin(), through_max.end()), through_max.end());

    bool pass = true;
    int easy = 0, balanced = 0;
    Json bad = Json::array();
    for (std::size_t h = 0; h < s.arrangement.size(); ++h) {
      const MultiRestriction z = ziegler_restriction(s.arrangement, lat, h);
      const MultiExponents k = multi_exponents_by_kernel(z);
      const int nforms = static_cast<int>(z.forms.size());
      bool ok = k.exponents.d1 + k.exponents.d2 == d - 1 && z.total == d - 1;
      if (std::binary_search(through_max.begin(), through_max.end(), static_cast<int>(h))) {
        ok = ok && k.exponents == expected;
      }
      if (easy_applies(z)) {
        ++easy;
        ok = ok && k.exponents == easy_exponents(z) && multi_exponents(z).exponents == k.exponents;
      }
      if (is_balanced(z)) {
        ++balanced;
        ok = ok && k.exponents.d2 - k.exponents.d1 <= nforms - 2;
      }
      if (!ok) {
        bad.push_back(Json{{"line", h}, {"exponents", {k.exponents.d1, k.exponents.d2}}, {"forms", nforms}});
        pass = false;
      }
    }
    add_case(res, s.key, pass ? Verdict::pass : Verdict::fail,
             Json{{"params", s.params},
                  {"d", d},
                  {"m", m},
                  {"expected", {expected.d1, expected.d2}},
                  {"lines_through_max_modular", through_max.size()},
                  {"easy_restrictions", easy},
                  {"balanced_restrictions", balanced},
                  {"failures", std::move(bad)}});
  }
}

std::vector<Sample> with_pencils(std::vector<Sample> samples) {
  for (int d = 3; d <= 7; ++d) {
    samples.push_back({"pencil/d" + pad(d), Json{{"family", "pencil"}, {"d", d}}, pencil(d), 0, 0, false});
    samples.push_back(
        {"near-pencil/d" + pad(d), Json{{"family", "near-pencil"}, {"d", d}}, near_pencil(d), 0, 0, false});
  }
  return samples;
}

void run_tjurina(const CampaignOptions& o, CampaignResult& res) {
  for (const auto& s : with_pencils(supersolvable_samples(o, o.seeds))) {
    const Lattice lat = build_lattice(s.arrangement);
    const ClassifyReport r = check_identities(s.arrangement, lat);
    if (!r.supersolvable()) {
      add_case(res, s.key, Verdict::not_applicable, Json{{"params", s.params}});
      continue;
    }
    const long long d = r.d, m = r.max_modular_multiplicity;
    const long long tau = tjurina_census(lat);
    const long long formula = tjurina_free(d, m - 1, d - m);
    const MdrResult md = mdr(s.arrangement);
    const long long want = std::min(m - 1, d - m);
    const bool pass = tau == formula && md.value && *md.value == want && 2 * *md.value <= d - 1;
    add_case(res, s.key, pass ? Verdict::pass : Verdict::fail,
             Json{{"params", s.params},
                  {"d", d},
                  {"m", m},
                  {"tau_census", tau},
                  {"tau_free", formula},
                  {"mdr", to_json(md)},
                  {"mdr_expected", want}});
  }
}

void run_hirzebruch(const CampaignOptions& o, CampaignResult& res) {
  auto samples = with_pencils(supersolvable_samples(o, o.seeds));
  for (int dp = 3; dp <= o.max_dprime; ++dp) {
    for (int s = 1; s <= o.seeds; ++s) {
      samples.push_back({"generic/d" + pad(dp) + "/s" + pad(s), Json{{"family", "generic"}, {"dprime", dp}, {"seed", s}},
                         generic_arrangement(dp, mix(o.seed, {11, static_cast<std::uint64_t>(dp),
                                                              static_cast<std::uint64_t>(s)})),
                         0, 0, false});
    }
  }
  for (const auto& s : samples) {
    const ClassifyReport r = check_identities(s.arrangement);
    const Check& h = r.check("hirzebruch");
    const Check& sum = r.check("eqSum");
    Json w{{"params", s.params}, {"census", census_json(r)}, {"lhs", h.lhs}, {"rhs", h.rhs}};
    if (!h.applicable) {
      add_case(res, s.key, sum.pass ? Verdict::not_applicable : Verdict::fail, std::move(w));
    } else {
      add_case(res, s.key, h.pass && sum.pass ? Verdict::pass : Verdict::fail, std::move(w));
    }
  }
}

Arrangement arrangement_b() {
  const CycField q(1);
  return Arrangement(q, {ProjLine::make(q, 1, 0, 0), ProjLine::make(q, 0, 1, 0), ProjLine::make(q, 0, 0, 1),
                         ProjLine::make(q, 1, -1, 0), ProjLine::make(q, 1, 0, -1)});
}

void run_m3(const CampaignOptions& o, CampaignResult& res) {
  const Lattice a113 = build_lattice(full_monomial(1));
  const Lattice b = build_lattice(arrangement_b());
  std::vector<Sample> samples = aw_samples(CampaignOptions{o.seed, 1, 0, 0, 0, 0});
  for (auto& c : cone_samples(CampaignOptions{o.seed, 1, 3, 0, o.seeds, 0}, o.seeds)) samples.push_back(c.sample);
  // Every subarrangement of the full monomial arrangements with n <= 3.
  for (int n = 1; n <= std::min(3, o.max_n); ++n) {
    const Arrangement fm = full_monomial(n);
    const auto d = static_cast<unsigned>(fm.size());
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (__builtin_popcount(mask) < 3) continue;
      std::vector<ProjLine> lines;
      std::vector<int> idx;
      for (unsigned i = 0; i < d; ++i) {
        if (mask & (1u << i)) {
          lines.push_back(fm[i]);
          idx.push_back(static_cast<int>(i));
        }
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%04x", mask);
      samples.push_back({"sub/fm" + pad(n) + "/" + buf, Json{{"family", "full-monomial-subset"}, {"n", n}, {"lines", idx}},
                         Arrangement(fm.field(), std::move(lines)), 0, 0, false});
    }
  }
  int examined = 0;
  for (const auto& s : samples) {
    ++examined;
    const Lattice lat = build_lattice(s.arrangement);
    const auto modular = modular_points(s.arrangement, lat);
    const auto m = homogeneity(modular);
    if (!m || *m != 3 || is_pencil(lat)) continue;
    const bool is_a113 = lattice_isomorphic(lat, a113).has_value();
    const bool is_b = !is_a113 && lattice_isomorphic(lat, b).has_value();
    const Census c = census(lat);
    add_case(res, s.key, is_a113 || is_b ? Verdict::pass : Verdict::fail,
             Json{{"params", s.params},
                  {"d", s.arrangement.size()},
                  {"census", to_json(c)},
                  {"type", is_a113 ? "A(1,1,3)" : is_b ? "B" : "other"}});
  }
  res.grid["examined"] = examined;
}

void run_thm2b(const CampaignOptions& o, CampaignResult& res) {
  for (const auto& s : supersolvable_samples(o, o.seeds)) {
    const ClassifyReport r = check_identities(s.arrangement);
    const Check& c = r.check("thm2B_bound");
    Json w{{"params", s.params}, {"d", r.d}, {"m", r.max_multiplicity}, {"n2", c.lhs}, {"bound", c.rhs}};
    add_case(res, s.key, !c.applicable ? Verdict::not_applicable : c.pass ? Verdict::pass : Verdict::fail,
             std::move(w));
  }
}

void run_saturation(const CampaignOptions& o, CampaignResult& res) {
  for (int dp = 3; dp <= o.max_dprime; ++dp) {
    for (int s = 1; s <= o.seeds; ++s) {
      const Arrangement a =
          generic_arrangement(dp, mix(o.seed, {11, static_cast<std::uint64_t>(dp), static_cast<std::uint64_t>(s)}));
      const NodalResult r = nodal_vanishing_dimension(a);
      const bool pass = r.dimension == dp && r.products_rank == dp && r.products_vanish;
      add_case(res, "generic/d" + pad(dp) + "/s" + pad(s), pass ? Verdict::pass : Verdict::fail,
               Json{{"dprime", dp}, {"seed", s}, {"result", to_json(r)}});
    }
  }
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"thm1-bound", run_thm1_bound},
      {"thm1b-roundtrip", run_roundtrip},
      {"thm1b-modular-counts", run_modular_counts},
      {"conj1-two-modular", run_conj1_two_modular},
      {"conj1-cones", run_conj1_cones},
      {"zmain-exponents", run_zmain},
      {"tjurina-consistency", run_tjurina},
      {"hirzebruch-sanity", run_hirzebruch},
      {"m3-classification", run_m3},
      {"thm2b-bound", run_thm2b},
      {"thm2c-saturation", run_saturation},
  };
  return table;
}

}  // namespace

CampaignResult run_campaign(const std::string& name, const CampaignOptions& options) {
  const auto& table = runners();
  auto it = table.find(name);
  if (it == table.end()) throw InputError("unknown campaign '" + name + "'");
  if (options.max_n < 1 || options.max_dprime < 3 || options.max_e < 0 || options.seeds < 1 ||
      options.transforms < 0) {
    throw InputError("campaign bounds need max_n >= 1, max_dprime >= 3, max_e >= 0, seeds >= 1");
  }
  CampaignResult res;
  res.name = name;
  res.grid = grid_json(options);
  const auto start = std::chrono::steady_clock::now();
  it->second(options, res);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::sort(res.cases.begin(), res.cases.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  for (const auto& c : res.cases) {
    switch (c.verdict) {
      case Verdict::pass:
        ++res.passed;
        break;
      case Verdict::fail:
        ++res.failed;
        break;
      case Verdict::not_applicable:
        ++res.not_applicable;
        break;
    }
  }
  return res;
}

Json to_json(const CampaignResult& result, bool include_time) {
  Json cases = Json::array();
  for (const auto& c : result.cases) {
    cases.push_back(Json{{"key", c.key}, {"verdict", verdict_name(c.verdict)}, {"witness", c.witness}});
  }
  Json out{{"schema", 1},
           {"campaign", result.name},
           {"grid", result.grid},
           {"summary",
            {{"pass", result.passed}, {"fail", result.failed}, {"not_applicable", result.not_applicable},
             {"ok", result.ok()}}},
           {"cases", std::move(cases)}};
  if (include_time) out["wall_time_seconds"] = result.seconds;
  return out;
}

}  // namespace ssarr
