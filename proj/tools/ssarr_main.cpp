// ssarr: build, analyze and classify supersolvable line arrangements.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssarr/algebra.hpp"
#include "ssarr/campaign.hpp"
#include "ssarr/classify.hpp"
#include "ssarr/errors.hpp"
#include "ssarr/families.hpp"
#include "ssarr/serialize.hpp"
#include "ssarr/wclass.hpp"

namespace {

using namespace ssarr;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
  bool json = false;
  std::string out;
  bool table = false;
};

void emit(const Output& o, const Json& j) {
  if (!o.out.empty()) save_json(j, o.out);
  if (o.out.empty() || o.json) std::cout << j.dump(2) << '\n';
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad exponent '" + item + "'");
    }
  }
  return out;
}

Arrangement resolve_base(const std::string& spec, std::uint64_t seed) {
  if (spec.rfind("generic:", 0) == 0) {
    const auto rest = spec.substr(8);
    int dprime = 0;
    try {
      dprime = std::stoi(rest);
    } catch (const std::exception&) {
      throw InputError("bad base '" + spec + "'");
    }
    return generic_arrangement(dprime, seed);
  }
  return load_arrangement(spec);
}

ProjPoint resolve_vertex(const std::string& spec, const Arrangement& base, std::uint64_t seed) {
  if (spec == "generic") return generic_vertex(base, seed);
  if (spec == "adversarial") {
    auto p = adversarial_vertex(base, seed);
    if (!p) throw InputError("base has no two intersection points off a common line; no adversarial vertex");
    return *p;
  }
  const auto parts = split(spec, ',');
  if (parts.size() != 3) throw InputError("vertex must be generic, adversarial or x,y,z");
  const CycField& field = base.field();
  return ProjPoint::make(Triple{CycNumber(field, parse_rational(parts[0])), CycNumber(field, parse_rational(parts[1])),
                                CycNumber(field, parse_rational(parts[2]))});
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string census_string(const Census& c) {
  std::string out;
  for (const auto& [k, n] : c) out += (out.empty() ? "" : " ") + std::string("n") + std::to_string(k) + "=" + std::to_string(n);
  return out;
}

void print_report(const ClassifyReport& r, const Json& algebra) {
  std::cout << "lines            " << r.d << '\n'
            << "census           " << census_string(r.census) << '\n'
            << "pencil           " << yes_no(r.is_pencil) << '\n'
            << "near pencil      " << yes_no(r.is_near_pencil) << '\n'
            << "modular points   " << r.modular_count << '\n';
  for (const auto& mp : r.modular) std::cout << "  " << mp.point.to_string() << "  m=" << mp.multiplicity << '\n';
  std::cout << "homogeneous      " << (r.m_homogeneous ? "m=" + std::to_string(*r.m_homogeneous) : "no") << '\n';
  if (algebra.contains("mdr")) std::cout << "mdr              " << algebra["mdr"]["value"].dump() << '\n';
  if (algebra.contains("exponents")) std::cout << "exponents        " << algebra["exponents"].dump() << '\n';
  std::cout << "\ncheck          applicable  pass   lhs          rhs\n";
  for (const auto& c : r.checks) {
    std::cout << std::left << std::setw(15) << c.name << std::setw(12) << yes_no(c.applicable) << std::setw(7)
              << (c.applicable ? yes_no(c.pass) : "-") << std::setw(13) << c.lhs << c.rhs << '\n';
  }
}

int cmd_analyze(const std::string& path, bool with_algebra, const Output& o) {
  const Arrangement a = load_arrangement(path);
  const Lattice lat = build_lattice(a);
  const ClassifyReport r = check_identities(a, lat);
  Json algebra = Json::object();
  bool ok = r.all_pass();
  if (with_algebra) {
    const MdrResult md = mdr(a);
    algebra["mdr"] = to_json(md);
    if (r.supersolvable()) {
      const int m = r.max_modular_multiplicity, d = r.d;
      algebra["exponents"] = Json::array({1, m - 1, d - m});
      const bool mdr_ok = md.value && *md.value == std::min(m - 1, d - m);
      algebra["mdr_matches_exponents"] = mdr_ok;
      ok = ok && mdr_ok;
    }
  }
  Json j{{"report", to_json(r)}, {"algebra", algebra}};
  if (o.json || !o.out.empty()) {
    emit(o, j);
  } else {
    print_report(r, algebra);
  }
  return ok ? 0 : kExitFailure;
}

int cmd_verify(const std::vector<std::string>& names, const CampaignOptions& opts, bool time, const Output& o) {
  Json all = Json::array();
  bool ok = true;
  for (const auto& name : names) {
    const CampaignResult res = run_campaign(name, opts);
    ok = ok && res.ok();
    all.push_back(to_json(res, time));
    if (!o.json) {
      std::cerr << std::left << std::setw(22) << name << (res.ok() ? "PASS" : "FAIL") << "  pass=" << res.passed
                << " fail=" << res.failed << " n/a=" << res.not_applicable;
      if (time) std::cerr << "  " << std::fixed << std::setprecision(2) << res.seconds << "s";
      std::cerr << '\n';
      for (const auto& c : res.cases) {
        if (c.verdict == Verdict::fail) std::cerr << "  fail " << c.key << '\n';
      }
    }
  }
  const Json j = names.size() == 1 ? all[0] : Json{{"schema", 1}, {"campaigns", all}};
  if (o.json || !o.out.empty()) emit(o, j);
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and classification of supersolvable line arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t seed = 1;
  app.add_flag("--json", out.json, "Print JSON to stdout");
  app.add_option("--out", out.out, "Write JSON to this file");
  app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();

  // make
  auto* make = app.add_subcommand("make", "Write an arrangement file");
  make->require_subcommand(1);
  make->fallthrough();
  int n = 1, d = 3, extra = 0;
  std::string exps, base = "generic:4", vertex = "generic";
  auto* mk_fm = make->add_subcommand("full-monomial", "xyz(x^n-y^n)(y^n-z^n)(x^n-z^n)");
  mk_fm->add_option("n", n)->required();
  auto* mk_aw = make->add_subcommand("aw", "A(w) with w_j = zeta_n^e_j");
  mk_aw->add_option("n", n)->required();
  mk_aw->add_option("exponents", exps, "Comma separated exponents, empty for k = 0");
  auto* mk_pencil = make->add_subcommand("pencil", "d concurrent lines");
  mk_pencil->add_option("d", d)->required();
  auto* mk_near = make->add_subcommand("near-pencil", "d - 1 concurrent lines and a transversal");
  mk_near->add_option("d", d)->required();
  auto* mk_generic = make->add_subcommand("generic", "d lines with only double points");
  mk_generic->add_option("d", d)->required();
  auto* mk_cone = make->add_subcommand("cone", "Cone C(A',p)_e");
  mk_cone->add_option("--base", base, "generic:D or an arrangement file")->capture_default_str();
  mk_cone->add_option("--vertex", vertex, "generic, adversarial or x,y,z")->capture_default_str();
  mk_cone->add_option("-e,--extra", extra, "Extra lines through the vertex")->capture_default_str();

  // analyze, lattice, recover
  std::string path;
  bool no_algebra = false;
  auto* analyze = app.add_subcommand("analyze", "Full report with identity checks");
  analyze->add_option("file", path)->required();
  analyze->add_flag("--no-algebra", no_algebra, "Skip the mdr computation");
  auto* lattice = app.add_subcommand("lattice", "Intersection lattice");
  lattice->add_option("file", path)->required();
  auto* recover = app.add_subcommand("recover", "Read off the class [w]");
  recover->add_option("file", path)->required();

  int k = 0;
  auto* enumerate = app.add_subcommand("enumerate-wclasses", "Canonical classes of W(n,k)/G");
  enumerate->add_option("n", n)->required();
  enumerate->add_option("k", k)->required();

  // algebra
  auto* algebra = app.add_subcommand("algebra", "Syzygies, Ziegler restrictions, nodal forms");
  algebra->require_subcommand(1);
  algebra->fallthrough();
  int bound = -1;
  std::size_t line = 0;
  auto* al_mdr = algebra->add_subcommand("mdr", "Minimal degree of a Jacobian relation");
  al_mdr->add_option("file", path)->required();
  al_mdr->add_option("--bound", bound, "Largest degree searched (default floor((d-1)/2))");
  auto* al_z = algebra->add_subcommand("ziegler", "Ziegler restriction onto a line and its exponents");
  al_z->add_option("file", path)->required();
  al_z->add_option("--line", line, "Index of the line H")->required();
  auto* al_nodal = algebra->add_subcommand("nodal-dim", "Degree d'-1 forms through all nodes");
  al_nodal->add_option("file", path)->required();

  // verify
  CampaignOptions copts;
  std::string campaign;
  bool time = false;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  std::string names_help = "Campaign name or 'all':";
  for (const auto& c : campaign_names()) names_help += " " + c;
  verify->add_option("campaign", campaign, names_help)->required();
  verify->add_option("--max-n", copts.max_n)->capture_default_str();
  verify->add_option("--max-dprime", copts.max_dprime)->capture_default_str();
  verify->add_option("--max-e", copts.max_e)->capture_default_str();
  verify->add_option("--seeds", copts.seeds, "Seeds 1..N for generic bases")->capture_default_str();
  verify->add_option("--transforms", copts.transforms)->capture_default_str();
  verify->add_flag("--time", time, "Report wall time (breaks byte-identical output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (make->parsed()) {
      std::optional<Arrangement> a;
      Json extra_info;
      if (mk_fm->parsed()) a = full_monomial(n);
      if (mk_aw->parsed()) a = a_of_w(n, parse_exponents(exps));
      if (mk_pencil->parsed()) a = pencil(d);
      if (mk_near->parsed()) a = near_pencil(d);
      if (mk_generic->parsed()) a = generic_arrangement(d, seed);
      if (mk_cone->parsed()) {
        const Arrangement b = resolve_base(base, seed);
        const ProjPoint p = resolve_vertex(vertex, b, seed);
        a = cone({b, p, extra, seed}).arrangement;
      }
      Output o = out;
      if (o.out.empty()) o.json = true;
      emit(o, to_json(*a));
      return 0;
    }
    if (analyze->parsed()) return cmd_analyze(path, !no_algebra, out);
    if (lattice->parsed()) {
      Output o = out;
      o.json = o.json || o.out.empty();
      emit(o, to_json(build_lattice(load_arrangement(path))));
      return 0;
    }
    if (recover->parsed()) {
      const RecoveredClass rec = recover_class(load_arrangement(path));
      if (out.json || !out.out.empty()) {
        emit(out, to_json(rec));
      } else {
        std::cout << rec.cls.to_string() << (rec.full_monomial ? "  (full monomial)" : "") << '\n';
      }
      return 0;
    }
    if (enumerate->parsed()) {
      Json list = Json::array();
      for (const auto& c : enumerate_classes(n, k)) list.push_back(to_json(c));
      if (out.json || !out.out.empty()) {
        emit(out, list);
      } else {
        for (const auto& c : enumerate_classes(n, k)) std::cout << c.to_string() << '\n';
      }
      return 0;
    }
    if (algebra->parsed()) {
      const Arrangement a = load_arrangement(path);
      Json j;
      if (al_mdr->parsed()) j = to_json(mdr(a, bound >= 0 ? std::optional<int>(bound) : std::nullopt));
      if (al_z->parsed()) {
        const MultiRestriction r = ziegler_restriction(a, line);
        j = to_json(multi_exponents(r));
        j["restriction"] = to_json(r);
      }
      if (al_nodal->parsed()) j = to_json(nodal_vanishing_dimension(a));
      Output o = out;
      o.json = o.json || o.out.empty();
      emit(o, j);
      return 0;
    }
    if (verify->parsed()) {
      copts.seed = seed;
      std::vector<std::string> names;
      if (campaign == "all") {
        names = campaign_names();
      } else {
        names.push_back(campaign);
      }
      return cmd_verify(names, copts, time, out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
