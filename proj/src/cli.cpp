#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "classify.hpp"
#include "dessin.hpp"
#include "errors.hpp"
#include "finite_field.hpp"
#include "ops.hpp"
#include "paley.hpp"

namespace gpd::cli {

namespace {

const char* kUsage =
    "usage: gpdessin <verb> [arguments] [--max-q N]\n"
    "verbs:\n"
    "  enumerate n p [--c c]          list canonical GP(n,p[,c]) dessins\n"
    "  info n p c [--j j]             type, genus, chirality, predicates\n"
    "  orbit n p c [--j j]            Omega/Omega* orbit of the dessin\n"
    "  invariance n p c               twelve-operation invariance table\n"
    "  chirality n p                  real or chiral (Prop. 2)\n"
    "  minus-one n p                  exponent i with p^i = -1 mod n\n"
    "  quotient-genus n c             genus of D/T\n"
    "  galois n p c                   Galois orbit and field degree\n"
    "  curve-model n p [--j j] [--variant c0|cm1]\n"
    "  cover n p c k c_tilde          cyclic cover with central kernel C_k\n"
    "  classify <file>                recognize a dessin from its permutations\n"
    "  match n p --relators <file>    census-presentation matching\n"
    "  export n p c [--j j] [--format perm|graph]\n";

struct Args {
  std::vector<uint64_t> pos;
  std::map<std::string, std::string> opts;
  std::vector<std::string> raw_pos;
};

bool parse_u64(const std::string& s, uint64_t& v) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

std::optional<Args> collect(const std::vector<std::string>& args, size_t first,
                            std::ostream& err) {
  Args a;
  for (size_t i = first; i < args.size(); ++i) {
    const std::string& s = args[i];
    if (s.rfind("--", 0) == 0) {
      if (i + 1 >= args.size()) {
        err << "error: option " << s << " needs a value\n";
        return std::nullopt;
      }
      a.opts[s.substr(2)] = args[++i];
    } else {
      a.raw_pos.push_back(s);
      uint64_t v = 0;
      a.pos.push_back(parse_u64(s, v) ? v : UINT64_MAX);
    }
  }
  return a;
}

bool want_positions(const Args& a, size_t count, std::ostream& err) {
  if (a.raw_pos.size() != count) {
    err << "error: expected " << count << " positional argument(s), got "
        << a.raw_pos.size() << "\n";
    return false;
  }
  for (uint64_t v : a.pos) {
    if (v == UINT64_MAX) {
      err << "error: positional arguments must be nonnegative integers\n";
      return false;
    }
  }
  return true;
}

std::string type_str(const std::array<uint64_t, 3>& t) {
  std::ostringstream os;
  os << "type=(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

const char* bstr(bool b) { return b ? "true" : "false"; }

uint64_t default_j(uint64_t n, uint64_t p, uint64_t c) {
  return enumerate(n, p, c).front().j;
}

void print_params_line(std::ostream& out, const PaleyParams& P) {
  TypeGenus tg = type_genus(P.n, P.p, P.c);
  out << to_string(P) << ' ' << type_str(tg.type) << " genus=" << tg.genus
      << " chi=" << tg.chi << " real=" << bstr(is_real(P.n, P.p)) << '\n';
}

int cmd_enumerate(const Args& a, uint64_t max_q, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 2, err)) return 2;
  uint64_t n = a.pos[0], p = a.pos[1];
  std::vector<PaleyParams> list;
  if (auto it = a.opts.find("c"); it != a.opts.end()) {
    uint64_t c;
    if (!parse_u64(it->second, c)) {
      err << "error: --c must be an integer\n";
      return 2;
    }
    list = enumerate(n, p, c);
  } else {
    list = enumerate(n, p);
  }
  (void)max_q;
  for (const PaleyParams& P : list) print_params_line(out, P);
  return 0;
}

int cmd_info(const Args& a, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 3, err)) return 2;
  uint64_t n = a.pos[0], p = a.pos[1], c = a.pos[2];
  uint64_t j = default_j(n, p, c);
  if (auto it = a.opts.find("j"); it != a.opts.end())
    if (!parse_u64(it->second, j)) {
      err << "error: --j must be an integer\n";
      return 2;
    }
  PaleyParams P = make_params(n, p, c, j);
  TypeGenus tg = type_genus(n, p, c);
  SubstructureReport sub = substructure_predicates(n, p, c);
  GaloisData gal = galois_data(n, p, c);
  out << "params=" << to_string(P) << '\n';
  out << type_str(tg.type) << '\n';
  out << "chi=" << tg.chi << '\n' << "genus=" << tg.genus << '\n';
  out << "real=" << bstr(is_real(n, p)) << '\n';
  out << "mirror=" << to_string(mirror(P)) << '\n';
  out << "white_primitive=" << bstr(sub.white_primitive) << '\n';
  out << "face_primitive=" << bstr(sub.face_primitive) << '\n';
  out << "is_map=" << bstr(sub.is_map) << '\n';
  out << "defined_over_Q=" << bstr(sub.defined_over_q) << '\n';
  out << "galois_degree=" << gal.field_degree << '\n';
  return 0;
}

int cmd_orbit(const Args& a, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 3, err)) return 2;
  uint64_t n = a.pos[0], p = a.pos[1], c = a.pos[2];
  uint64_t j = default_j(n, p, c);
  if (auto it = a.opts.find("j"); it != a.opts.end())
    if (!parse_u64(it->second, j)) {
      err << "error: --j must be an integer\n";
      return 2;
    }
  PaleyParams P = make_params(n, p, c, j);
  OmegaOrbits orb = omega_orbits(P);
  out << "k=" << orb.k << '\n' << "k_star=" << orb.k_star << '\n';
  out << "omega_length=" << orb.omega_length << '\n';
  out << "omega_star_length=" << orb.omega_star_length << '\n';
  for (const OrbitMember& m : orb.members) {
    out << "member op=" << omega_op_names()[m.op_index] << " gp=" << bstr(m.gp);
    if (m.params) out << " params=" << to_string(*m.params);
    out << ' ' << type_str(m.type) << '\n';
  }
  return 0;
}

int cmd_invariance(const Args& a, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 3, err)) return 2;
  InvarianceTable t = invariance_table(a.pos[0], a.pos[1], a.pos[2]);
  for (uint32_t i = 0; i < 12; ++i)
    out << omega_op_names()[i] << '=' << bstr(t.op_invariant[i]) << '\n';
  out << "hole_invariant=" << bstr(t.hole_invariant) << '\n';
  out << "kaleidoscopic=" << bstr(t.kaleidoscopic) << '\n';
  return 0;
}

int cmd_chirality(const Args& a, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 2, err)) return 2;
  out << "real=" << bstr(is_real(a.pos[0], a.pos[1])) << '\n';
  return 0;
}

int cmd_minus_one(const Args& a, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 2, err)) return 2;
  auto i = minus_one_exponent(a.pos[0], a.pos[1]);
  if (i)
    out << "i=" << *i << '\n';
  else
    out << "i=none\n";
  return 0;
}

int cmd_quotient_genus(const Args& a, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 2, err)) return 2;
  out << "genus=" << quotient_genus(a.pos[0], a.pos[1]) << '\n';
  return 0;
}

int cmd_galois(const Args& a, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 3, err)) return 2;
  GaloisData g = galois_data(a.pos[0], a.pos[1], a.pos[2]);
  out << "degree=" << g.field_degree << '\n';
  for (const PaleyParams& P : g.orbit) out << "orbit " << to_string(P) << '\n';
  return 0;
}

int cmd_curve_model(const Args& a, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 2, err)) return 2;
  uint64_t n = a.pos[0], p = a.pos[1];
  uint64_t j = n == 1 ? 0 : 1;
  if (auto it = a.opts.find("j"); it != a.opts.end())
    if (!parse_u64(it->second, j)) {
      err << "error: --j must be an integer\n";
      return 2;
    }
  CurveVariant variant = CurveVariant::c0;
  if (auto it = a.opts.find("variant"); it != a.opts.end()) {
    if (it->second == "c0")
      variant = CurveVariant::c0;
    else if (it->second == "cm1")
      variant = CurveVariant::cMinus1;
    else {
      err << "error: --variant must be c0 or cm1\n";
      return 2;
    }
  }
  CurveModel m = curve_model(n, p, j, variant);
  out << "u=" << m.u << '\n';
  out << "variant=" << (m.variant == CurveVariant::c0 ? "c0" : "cm1") << '\n';
  out << "exponents=";
  for (size_t i = 0; i < m.exponents.size(); ++i)
    out << (i ? "," : "") << m.exponents[i];
  out << '\n';
  return 0;
}

int cmd_cover(const Args& a, uint64_t max_q, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 5, err)) return 2;
  uint64_t n = a.pos[0], p = a.pos[1], c = a.pos[2], k = a.pos[3], ct = a.pos[4];
  PaleyParams P = make_params(n, p, c, default_j(n, p, c));
  CoverResult cov = cyclic_cover(P, k, ct, max_q);
  out << "cover_edges=" << cov.dessin.edges << '\n';
  out << type_str(cov.dessin.type) << '\n';
  out << "genus=" << cov.dessin.genus << '\n';
  out << "kernel_order=" << cov.k << '\n';
  RegularDessin base = construct(P, max_q);
  RegularDessin qd = quotient(cov.dessin, cov.kernel_edges);
  out << "quotient_is_base=" << bstr(is_isomorphic(qd, base)) << '\n';
  out << "split_complement=" << (cov.complement_edges ? "exists" : "none") << '\n';
  return 0;
}

void print_report(std::ostream& out, const BlackActionReport& r) {
  out << "black=" << r.black_count << '\n';
  out << "transitive=" << bstr(r.transitive) << '\n';
  out << "faithful=" << bstr(r.faithful) << '\n';
  out << "primitive=" << bstr(r.primitive) << '\n';
  out << "regular_on_black=" << bstr(r.regular_on_black) << '\n';
  out << "kernel_order=" << r.kernel_order << '\n';
  out << "kernel_cyclic=" << bstr(r.kernel_cyclic) << '\n';
  out << "kernel_central=" << bstr(r.kernel_central) << '\n';
  out << "quotient_kind=" << to_string(r.quotient_kind) << '\n';
}

int cmd_classify(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.raw_pos.size() != 1) {
    err << "error: classify expects one file argument\n";
    return 2;
  }
  std::ifstream in(a.raw_pos[0]);
  if (!in) throw domain_error("cannot open dessin file " + a.raw_pos[0]);
  PermDessin pd = read_dessin(in);
  RecognitionResult res = recognize_paley(pd);
  print_report(out, res.report);
  out << "primitive=" << bstr(res.report.primitive)
      << " faithful=" << bstr(res.report.faithful) << ' ';
  if (res.params)
    out << to_string(*res.params) << '\n';
  else
    out << "diagnosis=" << res.diagnosis << '\n';
  return 0;
}

int cmd_match(const Args& a, uint64_t max_q, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 2, err)) return 2;
  auto it = a.opts.find("relators");
  if (it == a.opts.end()) {
    err << "error: match requires --relators <file>\n";
    return 2;
  }
  std::ifstream in(it->second);
  if (!in) throw domain_error("cannot open relator file " + it->second);
  Presentation pres = parse_relators(in);
  MatchResult res = match_presentation(a.pos[0], a.pos[1], pres, max_q);
  out << "abelian_c=";
  if (res.abelian_c.empty()) out << "none";
  for (size_t i = 0; i < res.abelian_c.size(); ++i)
    out << (i ? "," : "") << res.abelian_c[i];
  out << '\n';
  out << "matches=" << res.matches.size() << '\n';
  for (const PresentationMatch& m : res.matches) {
    out << "match " << to_string(m.params);
    if (m.params.d == 1)
      out << " r=" << m.multiplier_code << '\n';
    else {
      FieldCtx ctx(m.params.p, m.params.d, max_q);
      out << " a=" << ctx.to_string(ctx.from_code(m.multiplier_code)) << '\n';
    }
  }
  return 0;
}

int cmd_export(const Args& a, uint64_t max_q, std::ostream& out, std::ostream& err) {
  if (!want_positions(a, 3, err)) return 2;
  uint64_t n = a.pos[0], p = a.pos[1], c = a.pos[2];
  uint64_t j = default_j(n, p, c);
  if (auto it = a.opts.find("j"); it != a.opts.end())
    if (!parse_u64(it->second, j)) {
      err << "error: --j must be an integer\n";
      return 2;
    }
  std::string format = "perm";
  if (auto it = a.opts.find("format"); it != a.opts.end()) format = it->second;
  if (format != "perm" && format != "graph") {
    err << "error: --format must be perm or graph\n";
    return 2;
  }
  RegularDessin d = construct(make_params(n, p, c, j), max_q);
  if (format == "perm") {
    write_dessin(out, d.edges, d.s0, d.s1);
  } else {
    CycleData black = cycle_data(d.s0), white = cycle_data(d.s1);
    for (uint32_t e = 0; e < d.edges; ++e)
      out << black.id[e] << ' ' << white.id[e] << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return 2;
  }
  const std::string& verb = args[0];
  auto parsed = collect(args, 1, err);
  if (!parsed) return 2;
  uint64_t max_q = FieldCtx::kDefaultMaxQ;
  if (auto it = parsed->opts.find("max-q"); it != parsed->opts.end()) {
    if (!parse_u64(it->second, max_q)) {
      err << "error: --max-q must be an integer\n";
      return 2;
    }
    parsed->opts.erase("max-q");
  }

  try {
    if (verb == "enumerate") return cmd_enumerate(*parsed, max_q, out, err);
    if (verb == "info") return cmd_info(*parsed, out, err);
    if (verb == "orbit") return cmd_orbit(*parsed, out, err);
    if (verb == "invariance") return cmd_invariance(*parsed, out, err);
    if (verb == "chirality") return cmd_chirality(*parsed, out, err);
    if (verb == "minus-one") return cmd_minus_one(*parsed, out, err);
    if (verb == "quotient-genus") return cmd_quotient_genus(*parsed, out, err);
    if (verb == "galois") return cmd_galois(*parsed, out, err);
    if (verb == "curve-model") return cmd_curve_model(*parsed, out, err);
    if (verb == "cover") return cmd_cover(*parsed, max_q, out, err);
    if (verb == "classify") return cmd_classify(*parsed, out, err);
    if (verb == "match") return cmd_match(*parsed, max_q, out, err);
    if (verb == "export") return cmd_export(*parsed, max_q, out, err);
  } catch (const size_limit_error& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << "error: unknown verb '" << verb << "'\n" << kUsage;
  return 2;
}

}  // namespace gpd::cli
