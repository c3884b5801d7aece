#pragma once

// Command-line front end. run() is side-effect free: it returns the text that
// the binary writes to stdout/stderr together with the exit code.

#include "sdual/duality.hpp"
#include "sdual/kring.hpp"
#include "sdual/rep3.hpp"
#include "sdual/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdual::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, error };

enum ExitCode : int { kOk = 0, kComputationError = 1, kUsageError = 2 };

struct CommandResult {
  Status status = Status::ok;
  Json payload;
  int exit_code = kOk;
  std::string out;  // stdout
  std::string err;  // stderr
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

inline Int parse_int(const std::string& token, const std::string& context) {
  std::string t = token;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
          t.end());
  const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (t.size() == start || !std::all_of(t.begin() + static_cast<long>(start), t.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError("malformed integer '" + token + "' in " + context);
  return Int(t[0] == '+' ? t.substr(1) : t);
}

inline long parse_long(const std::string& token, const std::string& context) {
  const Int v = parse_int(token, context);
  if (v > Int(1'000'000'000) || v < Int(-1'000'000'000))
    throw UsageError("value '" + token + "' out of range in " + context);
  return static_cast<long>(v);
}

inline std::vector<Int> parse_triple(const std::string& token, const std::string& flag) {
  const auto parts = split(token, ',');
  if (parts.size() != 3)
    throw UsageError("malformed class triple '" + token + "' for " + flag +
                     ": expected three comma-separated integers");
  std::vector<Int> v;
  for (const auto& p : parts) v.push_back(parse_int(p, flag + " '" + token + "'"));
  return v;
}

inline kring::KClass parse_class(const std::string& token, const std::string& flag, bool chern) {
  const auto v = parse_triple(token, flag);
  if (chern) return kring::chern_to_chi({v[0], v[1], v[2]});
  return {v[0], v[1], v[2]};
}

inline rep3::Partition parse_partition(const std::string& token) {
  const auto parts = split(token, ',');
  if (parts.empty() || parts.size() > 3)
    throw UsageError("malformed partition '" + token + "': expected one to three integers");
  std::array<long, 3> p{0, 0, 0};
  for (std::size_t i = 0; i < parts.size(); ++i) p[i] = parse_long(parts[i], "partition '" + token + "'");
  return rep3::Partition(p[0], p[1], p[2]);
}

inline std::string str(const Int& x) { return x.str(); }
inline std::string str(long x) { return std::to_string(x); }

inline Json class_json(const kring::KClass& c) {
  return Json{{"rank", str(c.rank)}, {"c1", str(c.c1)}, {"chi", str(c.chi)}};
}

inline Json partition_json(const rep3::Partition& p) {
  return Json::array({str(p[0]), str(p[1]), str(p[2])});
}

inline Json decomposition_json(const rep3::SchurDecomposition& d) {
  Json parts = Json::array();
  for (auto it = d.parts().rbegin(); it != d.parts().rend(); ++it)
    parts.push_back(Json{{"partition", partition_json(it->first)}, {"coefficient", str(it->second)}});
  return parts;
}

inline Json polynomial_json(const series::IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(str(c));
  return a;
}

inline std::string decomposition_text(const rep3::SchurDecomposition& d) {
  std::ostringstream os;
  if (d.empty()) os << "  (zero)\n";
  for (auto it = d.parts().rbegin(); it != d.parts().rend(); ++it) {
    const auto [a, b] = it->first.sl3();
    os << "  " << it->second << " x S" << it->first << "E   [SL3 (" << a << ',' << b
       << "), dim " << rep3::weyl_dim(it->first) << "]\n";
  }
  return os.str();
}

inline std::string class_text(const kring::KClass& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

/// Accumulates a command's output in both renderings.
struct Output {
  Json json = Json::object();
  std::ostringstream text;
  bool failed = false;
};

}  // namespace detail

/// Parses and executes one command line (without the program name).
inline CommandResult run(const std::vector<std::string>& args) {
  using namespace detail;
  CommandResult result;
  std::ostringstream out, err;

  CLI::App app{"Exact K(P2), SL(3) character and Poincare series computations", "sdual"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json = false;
  bool chern = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  // kring
  auto* kr = app.add_subcommand("kring", "Arithmetic in K(P2) on (rank, c1, chi) triples");
  kr->require_subcommand(1);
  std::string c_arg, u_arg;
  auto add_class_opts = [&](CLI::App* sub, bool with_u) {
    sub->add_option("--c", c_arg, "Class r,c1,chi")->required();
    if (with_u) sub->add_option("--u", u_arg, "Class r,c1,chi")->required();
    sub->add_flag("--chern", chern, "Read triples as r,c1,c2");
  };
  auto* kr_mul = kr->add_subcommand("mul", "Product c.u");
  auto* kr_pair = kr->add_subcommand("pair", "Euler pairing chi(c.u)");
  auto* kr_dual = kr->add_subcommand("dual", "Dual class c*");
  auto* kr_dim = kr->add_subcommand("dim", "Moduli dimension 1 - <c*, c>");
  auto* kr_orth = kr->add_subcommand("orth", "Orthogonal generator and delta = gcd(r, c1)");
  auto* kr_basis = kr->add_subcommand("basis", "Coordinates in the basis [O], eta, eta^2");
  auto* kr_chern = kr->add_subcommand("chern", "Convert to (rank, c1, c2)");
  add_class_opts(kr_mul, true);
  add_class_opts(kr_pair, true);
  for (auto* s : {kr_dual, kr_dim, kr_orth, kr_basis, kr_chern}) add_class_opts(s, false);

  // rep
  auto* rep = app.add_subcommand("rep", "Polynomial SL(3) representations");
  rep->require_subcommand(1);
  std::vector<std::string> partitions, terms;
  long power = 0;
  auto* rep_dim = rep->add_subcommand("dim", "Weyl dimension of S^lambda E");
  rep_dim->add_option("--partition", partitions, "Partition a,b,c")->required()->expected(1);
  auto* rep_sym = rep->add_subcommand("sym", "Decompose S^n(S^lambda E)");
  auto* rep_ext = rep->add_subcommand("ext", "Decompose Lambda^n(S^lambda E)");
  for (auto* s : {rep_sym, rep_ext}) {
    s->add_option("--partition", partitions, "Partition a,b,c")->required()->expected(1);
    s->add_option("--n", power, "Exponent")->required();
  }
  auto* rep_tensor = rep->add_subcommand("tensor", "Decompose a tensor product of Schur modules");
  rep_tensor->add_option("--partition", partitions, "Partition a,b,c (repeatable)")->required();
  auto* rep_dec = rep->add_subcommand("decompose", "Decompose a character given by weights");
  rep_dec->add_option("--term", terms, "Weight e1,e2,e3=multiplicity (repeatable)")->required();

  // series
  auto* ser = app.add_subcommand("series", "Poincare series Q(t)/(1-t)^(D+1)");
  ser->require_subcommand(1);
  long dim = 0, delta = 1, k = 0;
  std::string q1_arg, numerator_arg;
  std::vector<std::string> samples;
  auto* ser_rec = ser->add_subcommand("reconstruct", "Solve for the palindromic numerator");
  ser_rec->add_option("--dim", dim, "Dimension D")->required();
  ser_rec->add_option("--delta", delta, "delta")->required();
  ser_rec->add_option("--q1", q1_arg, "Q(1)")->required();
  ser_rec->add_option("--sample", samples, "k=h0 (repeatable)");
  auto* ser_coeff = ser->add_subcommand("coeff", "Coefficient of t^k");
  ser_coeff->add_option("--numerator", numerator_arg, "Q coefficients q0,q1,...")->required();
  ser_coeff->add_option("--dim", dim, "Dimension D")->required();
  ser_coeff->add_option("--k", k, "Degree k")->required();
  auto* ser_hilb = ser->add_subcommand("hilbert", "Hilbert polynomial in k");
  ser_hilb->add_option("--numerator", numerator_arg, "Q coefficients q0,q1,...")->required();
  ser_hilb->add_option("--dim", dim, "Dimension D")->required();

  // duality
  auto* dua = app.add_subcommand("duality", "Strange duality for c = (2,0,2-n), u = d(0,1,0)");
  dua->require_subcommand(1);
  long n = 0, d = 0, nmax = 0, a = 0, m = 0;
  auto* dua_check = dua->add_subcommand("check", "Compare both sides");
  dua_check->add_option("--n", n, "c2 of c")->required();
  dua_check->add_option("--d", d, "degree of u")->required();
  auto* dua_alpha = dua->add_subcommand("audit-alpha", "Audit the d = 3 kernel bookkeeping");
  dua_alpha->add_option("--n", n, "c2 of c")->required();
  auto* dua_table = dua->add_subcommand("table", "Grid of both sides for 0 <= n <= nmax, d = 1..3");
  dua_table->add_option("--nmax", nmax, "Largest n")->required();
  auto* dua_ker = dua->add_subcommand("ker-sym2", "Kernel of S^2(S^a E) -> S^2a E");
  dua_ker->add_option("--a", a, "a")->required();
  auto* dua_sec = dua->add_subcommand("sections", "Section dimensions on Hilb^m for (m, k, d)");
  dua_sec->add_option("--m", m, "m")->required();
  dua_sec->add_option("--k", k, "k")->required();
  dua_sec->add_option("--d", d, "d")->required();

  auto finish_error = [&](int code, const std::string& kind, const std::string& msg) {
    result.status = Status::error;
    result.exit_code = code;
    if (json)
      err << Json{{"status", "error"}, {"kind", kind}, {"message", msg}}.dump() << '\n';
    else
      err << "error: " << msg << '\n';
  };

  try {
    // Name the offending token when a command word is not recognised.
    const CLI::App* level = &app;
    for (const auto& tok : args) {
      if (tok.rfind("-", 0) == 0) continue;
      if (level->get_subcommands({}).empty()) break;
      const CLI::App* next = nullptr;
      for (const auto* sub : level->get_subcommands({}))
        if (sub->get_name() == tok) next = sub;
      if (next == nullptr) {
        json = std::find(args.begin(), args.end(), "--json") != args.end();
        finish_error(kUsageError, "usage", "unknown subcommand '" + tok + "'");
        result.err = err.str();
        return result;
      }
      level = next;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.exit_code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
  } catch (const CLI::ParseError& e) {
    json = std::find(args.begin(), args.end(), "--json") != args.end();
    finish_error(kUsageError, "usage", e.what());
    result.err = err.str();
    return result;
  }

  Output o;
  try {
    if (kr->parsed()) {
      const kring::KClass c = parse_class(c_arg, "--c", chern);
      if (kr_mul->parsed() || kr_pair->parsed()) {
        const kring::KClass u = parse_class(u_arg, "--u", chern);
        if (kr_mul->parsed()) {
          const auto p = kring::mul(c, u);
          o.json = class_json(p);
          o.text << class_text(p) << '\n';
        } else {
          const Int v = kring::euler_pair(c, u);
          o.json = Json{{"pair", str(v)}};
          o.text << v << '\n';
        }
      } else if (kr_dual->parsed()) {
        const auto p = kring::dual(c);
        o.json = class_json(p);
        o.text << class_text(p) << '\n';
      } else if (kr_dim->parsed()) {
        const Int v = kring::moduli_dim(c);
        o.json = Json{{"dim", str(v)}};
        o.text << v << '\n';
      } else if (kr_orth->parsed()) {
        const auto g = kring::orth_generator(c);
        o.json = Json{{"u", class_json(g.u)}, {"delta", str(g.delta)}};
        o.text << "u = " << g.u << "\ndelta = " << g.delta << '\n';
      } else if (kr_basis->parsed()) {
        const auto b = kring::to_basis(c);
        o.json = Json{{"a", str(b.a)}, {"b", str(b.b)}, {"c", str(b.c)}};
        o.text << b.a << " + " << b.b << " eta + " << b.c << " eta^2\n";
      } else {
        const auto cd = kring::chi_to_chern(c);
        o.json = Json{{"rank", str(cd.rank)}, {"c1", str(cd.c1)}, {"c2", str(cd.c2)}};
        o.text << "(r,c1,c2) = (" << cd.rank << ',' << cd.c1 << ',' << cd.c2 << ")\n";
      }
    } else if (rep->parsed()) {
      std::vector<rep3::Partition> ps;
      for (const auto& p : partitions) ps.push_back(parse_partition(p));
      auto emit_decomposition = [&](const rep3::Character& ch) {
        const auto dec = rep3::decompose(ch);
        o.json = Json{{"dim", str(rep3::char_dim(ch))},
                      {"decomposition", decomposition_json(dec)},
                      {"virtual", dec.is_virtual()}};
        o.text << "dim " << rep3::char_dim(ch) << '\n' << decomposition_text(dec);
      };
      if (rep_dim->parsed()) {
        const auto& p = ps.front();
        const auto [x, y] = p.sl3();
        o.json = Json{{"partition", partition_json(p)},
                      {"sl3", Json::array({str(x), str(y)})},
                      {"dim", str(rep3::weyl_dim(p))}};
        o.text << "S" << p << "E: dim " << rep3::weyl_dim(p) << '\n';
      } else if (rep_sym->parsed() || rep_ext->parsed()) {
        if (power < 0) throw UsageError("--n must be nonnegative, got " + std::to_string(power));
        const auto base = rep3::schur_char(ps.front());
        emit_decomposition(rep_sym->parsed() ? rep3::sym_power(base, power)
                                             : rep3::ext_power(base, power));
      } else if (rep_tensor->parsed()) {
        rep3::Character ch = rep3::Character::trivial();
        for (const auto& p : ps) ch = rep3::tensor(ch, rep3::schur_char(p));
        emit_decomposition(ch);
      } else {
        rep3::Character ch;
        for (const auto& t : terms) {
          const auto lr = split(t, '=');
          if (lr.size() != 2) throw UsageError("malformed term '" + t + "': expected e1,e2,e3=m");
          const auto w = split(lr[0], ',');
          if (w.size() != 3) throw UsageError("malformed weight in term '" + t + "'");
          rep3::Weight wt;
          for (std::size_t i = 0; i < 3; ++i) {
            wt.e[i] = parse_long(w[i], "term '" + t + "'");
            if (wt.e[i] < 0) throw UsageError("negative exponent in term '" + t + "'");
          }
          ch.add(wt, parse_int(lr[1], "term '" + t + "'"));
        }
        emit_decomposition(ch);
      }
    } else if (ser->parsed()) {
      auto parse_numerator = [&] {
        std::vector<Int> coeffs;
        for (const auto& s : split(numerator_arg, ',')) coeffs.push_back(parse_int(s, "--numerator"));
        return series::IntPolynomial(std::move(coeffs));
      };
      if (dim < 0) throw UsageError("--dim must be nonnegative, got " + std::to_string(dim));
      if (ser_rec->parsed()) {
        std::vector<series::Sample> ss;
        for (const auto& s : samples) {
          const auto lr = split(s, '=');
          if (lr.size() != 2) throw UsageError("malformed sample '" + s + "': expected k=h0");
          ss.push_back({parse_long(lr[0], "sample '" + s + "'"), parse_int(lr[1], "sample '" + s + "'")});
        }
        const auto r = series::reconstruct(dim, delta, parse_int(q1_arg, "--q1"), ss);
        o.json = Json{{"numerator", polynomial_json(r.series.numerator)},
                      {"dim", str(r.series.dim)},
                      {"delta", str(r.series.delta)},
                      {"equations", str(static_cast<long>(r.equations))},
                      {"rank", str(static_cast<long>(r.rank))}};
        o.text << "Q(t) = " << r.series.numerator << "\nP(t) = Q(t) / (1 - t)^" << dim + 1
               << "\ncoefficients:";
        for (const auto& c : r.series.numerator.coefficients()) o.text << ' ' << c;
        o.text << "\nequations " << r.equations << ", rank " << r.rank << ", unknowns "
               << r.unknowns << '\n';
      } else if (ser_coeff->parsed()) {
        if (k < 0) throw UsageError("--k must be nonnegative, got " + std::to_string(k));
        const series::PoincareSeries s{parse_numerator(), dim, 1};
        const Int v = series::coefficient(s, k);
        o.json = Json{{"k", str(k)}, {"coefficient", str(v)}};
        o.text << v << '\n';
      } else {
        const series::PoincareSeries s{parse_numerator(), dim, 1};
        const auto h = series::hilbert_polynomial(s);
        Json cs = Json::array();
        for (const auto& c : h.coefficients()) cs.push_back(to_string(c));
        o.json = Json{{"coefficients", cs}, {"leading", to_string(h.leading())}};
        o.text << "h(k) =";
        for (long e = h.degree(); e >= 0; --e)
          if (h[e] != 0) o.text << " + (" << to_string(h[e]) << ") k^" << e;
        o.text << "\nleading coefficient " << to_string(h.leading()) << '\n';
      }
    } else if (dua->parsed()) {
      if (dua_check->parsed()) {
        const auto r = duality::check(n, d);
        o.json = Json{{"lhs", str(r.lhs_dim)},
                      {"rhs", str(r.rhs_dim)},
                      {"orthogonal", r.orthogonal},
                      {"asserted", r.asserted_by_paper}};
        o.text << "c = " << r.c << ", u = " << r.u << ", delta = " << r.delta << '\n'
               << "<c, u> = 0: " << (r.orthogonal ? "yes" : "NO") << '\n'
               << "h0(M_u, D_c) = " << r.lhs_dim << '\n'
               << "h0(M_c, D_u) = " << r.rhs_dim << '\n'
               << (r.agree() ? "equal" : "DIFFERENT") << ", "
               << (r.asserted_by_paper ? "asserted" : "conjectural") << '\n';
        o.failed = !r.consistent();
      } else if (dua_alpha->parsed()) {
        const auto au = duality::alpha_audit(n);
        Json sd = Json::array(), td = Json::array();
        for (const auto& x : au.source_dims) sd.push_back(str(x));
        for (const auto& x : au.target_dims) td.push_back(str(x));
        o.json = Json{{"n", str(n)},
                      {"source_dims", sd},
                      {"target_dims", td},
                      {"euler", str(au.euler)},
                      {"ker_dim", str(au.ker_dim)},
                      {"coker_dim", str(au.coker_dim)},
                      {"nu_kernel", decomposition_json(au.nu_kernel)},
                      {"nu_cokernel", decomposition_json(au.nu_cokernel)},
                      {"passed", au.passed()},
                      {"failures", au.failures}};
        o.text << "n = " << n << " (k = -1, d = 3, m = " << n + 1 << ")\nsource dims:";
        for (const auto& x : au.source_dims) o.text << ' ' << x;
        o.text << "\ntarget dims:";
        for (const auto& x : au.target_dims) o.text << ' ' << x;
        o.text << "\nsource - target = " << au.euler << "\nker dim " << au.ker_dim
               << ", coker dim " << au.coker_dim << "\nker nu:\n"
               << decomposition_text(au.nu_kernel) << "coker nu:\n"
               << decomposition_text(au.nu_cokernel) << (au.passed() ? "pass" : "FAIL") << '\n';
        for (const auto& f : au.failures) o.text << "  " << f << '\n';
        o.failed = !au.passed();
      } else if (dua_table->parsed()) {
        if (nmax < 0) throw UsageError("--nmax must be nonnegative, got " + std::to_string(nmax));
        Json rows = Json::array();
        bool all = true;
        o.text << "   n  d          lhs          rhs  status\n";
        for (long nn = 0; nn <= nmax; ++nn)
          for (long dd = 1; dd <= 3; ++dd) {
            const auto r = duality::check(nn, dd);
            all = all && r.consistent();
            rows.push_back(Json{{"n", str(nn)},
                                {"d", str(dd)},
                                {"lhs", str(r.lhs_dim)},
                                {"rhs", str(r.rhs_dim)},
                                {"orthogonal", r.orthogonal},
                                {"asserted", r.asserted_by_paper},
                                {"agree", r.agree()}});
            std::ostringstream line;
            line.width(4);
            line << nn;
            line.width(3);
            line << dd;
            line.width(13);
            line << r.lhs_dim.str();
            line.width(13);
            line << r.rhs_dim.str();
            line << "  " << (r.agree() ? "equal" : "DIFFERENT") << ' '
                 << (r.asserted_by_paper ? "asserted" : "conjectural");
            o.text << line.str() << '\n';
          }
        o.json = Json{{"rows", rows}, {"all_asserted_agree", all}};
        o.text << (all ? "all asserted rows agree" : "MISMATCH in an asserted row") << '\n';
        o.failed = !all;
      } else if (dua_ker->parsed()) {
        const auto dec = duality::ker_sym2_mult(a);
        o.json = Json{{"a", str(a)}, {"dim", str(dec.dim())}, {"decomposition", decomposition_json(dec)}};
        o.text << "dim " << dec.dim() << '\n' << decomposition_text(dec);
      } else {
        const auto dims = duality::section_dims(m, k, d);
        o.json = Json{{"i", str(dims[0])}, {"ii", str(dims[1])}, {"iii", str(dims[2])}};
        o.text << "i " << dims[0] << "\nii " << dims[1] << "\niii " << dims[2] << '\n';
      }
    }
  } catch (const UsageError& e) {
    finish_error(kUsageError, "usage", e.what());
    result.err = err.str();
    return result;
  } catch (const series::InsufficientData& e) {
    finish_error(kComputationError, "insufficient_data", e.what());
    result.err = err.str();
    return result;
  } catch (const series::InconsistentConstraints& e) {
    finish_error(kComputationError, "inconsistent_constraints", e.what());
    result.err = err.str();
    return result;
  } catch (const DomainError& e) {
    finish_error(kComputationError, "domain", e.what());
    result.err = err.str();
    return result;
  } catch (const Unsupported& e) {
    finish_error(kComputationError, "unsupported", e.what());
    result.err = err.str();
    return result;
  } catch (const InvariantViolation& e) {
    finish_error(kComputationError, "invariant_violation", e.what());
    result.err = err.str();
    return result;
  }

  result.payload = o.json;
  if (json) out << o.json.dump() << '\n';
  else out << o.text.str();
  if (o.failed) {
    result.status = Status::error;
    result.exit_code = kComputationError;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace sdual::cli
