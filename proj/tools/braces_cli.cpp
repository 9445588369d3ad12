// braces: construct, verify, classify, count and export finite left braces.
//
// Exit codes: 0 ok, 1 semantic failure, 2 usage or parse error, 3 guard exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "braces/arith.hpp"
#include "braces/brace.hpp"
#include "braces/constructions.hpp"
#include "braces/enumeration.hpp"
#include "braces/io.hpp"
#include "braces/morphisms.hpp"
#include "braces/ybe.hpp"

namespace {

using braces::Index;
using nlohmann::json;

enum Exit { kOk = 0, kSemantic = 1, kUsage = 2, kGuard = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const auto& values, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : sep) << v;
    first = false;
  }
  return out.str();
}

json check_json(const braces::AxiomCheck& c) {
  return {{"pass", c.pass}, {"exhaustive", c.exhaustive}, {"counterexample", c.counterexample}};
}

json invariants_json(const braces::BraceInvariants& inv) {
  json orders = json::array();
  for (auto [o, c] : inv.adjoint.order_statistics) orders.push_back({o, c});
  return {{"additive", inv.additive},
          {"socle_order", inv.socle_order},
          {"adjoint_exponent", inv.adjoint.exponent},
          {"adjoint_abelian", inv.adjoint.abelian},
          {"adjoint_derived_order", inv.adjoint.derived_order},
          {"adjoint_abelianization_order", inv.adjoint.abelianization_order},
          {"adjoint_element_orders", orders}};
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-')
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& path, bool as_json, const braces::Limits& limits) {
  const auto b = braces::read_brace_file(path);
  const auto r = braces::check_axioms(b, limits);
  const std::pair<const char*, const braces::AxiomCheck*> rows[] = {
      {"B1", &r.b1}, {"B2", &r.b2}, {"B3", &r.b3}, {"zero", &r.zero_laws}};
  if (as_json) {
    json out = {{"order", b.order()}, {"pass", r.all_pass()}};
    for (auto [name, c] : rows) out["axioms"][name] = check_json(*c);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "order " << b.order() << '\n';
    for (auto [name, c] : rows) {
      std::cout << name << ' ' << (c->pass ? "pass" : "FAIL");
      if (!c->pass) std::cout << " counterexample " << join(c->counterexample, " ");
      std::cout << '\n';
    }
    std::cout << (r.all_pass() ? "brace" : "not a brace") << '\n';
  }
  return r.all_pass() ? kOk : kSemantic;
}

int cmd_classify(std::uint64_t p, std::uint64_t q, bool relaxed, const std::string& emit_dir,
                 bool as_json) {
  const auto entries = braces::classify(p, q, relaxed);
  const auto total = braces::count_formula(p, q, relaxed);
  if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);

  json list = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const auto inv = braces::brace_invariants(e.brace);
    const auto family = braces::family_name(e.family);
    if (!emit_dir.empty()) {
      std::ostringstream name;
      name << std::setw(2) << std::setfill('0') << i + 1 << '_' << family << '_' << join(e.params, "_")
           << ".brace";
      braces::write_brace_file(std::filesystem::path(emit_dir) / name.str(), e.brace);
    }
    if (as_json) {
      list.push_back({{"label", e.label},
                      {"family", family},
                      {"params", e.params},
                      {"invariants", invariants_json(inv)}});
    } else {
      std::cout << e.label << "  family=" << family << " params=" << join(e.params)
                << " additive=" << join(inv.additive) << " adjoint=exp:" << inv.adjoint.exponent
                << ",ab:" << inv.adjoint.abelianization_order
                << (inv.adjoint.abelian ? ",abelian" : ",nonabelian") << " socle=" << inv.socle_order
                << '\n';
    }
  }
  if (as_json)
    std::cout << json{{"p", p}, {"q", q}, {"entries", list}, {"count", total}}.dump(2) << '\n';
  else
    std::cout << "total " << total << '\n';
  return entries.size() == total ? kOk : kSemantic;
}

std::uint64_t formula_for_order(std::uint64_t n) {
  const auto f = braces::factorize(n);
  if (f.size() == 2) {
    for (int i = 0; i < 2; ++i) {
      const auto [p, ep] = f[i];
      const auto [q, eq] = f[1 - i];
      if (ep == 2 && eq == 1) {
        braces::require_order_condition(p, q);
        return braces::count_formula(p, q);
      }
    }
  }
  throw UsageError("the formula covers n = p^2 q with q > p + 1 only");
}

int cmd_count(std::uint64_t n, const std::string& method, bool as_json, const braces::Limits& limits) {
  if (n == 0 || n > 0xffffffffULL) throw UsageError("order out of range");
  std::optional<std::uint64_t> formula, enumerated;
  if (method != "enumerate") formula = formula_for_order(n);
  if (method != "formula") enumerated = braces::brace_count(static_cast<std::uint32_t>(n), limits);
  if (as_json) {
    json out = {{"n", n}, {"method", method}};
    if (enumerated) out["enumerate"] = *enumerated;
    if (formula) out["formula"] = *formula;
    out["count"] = enumerated ? *enumerated : *formula;
    std::cout << out.dump(2) << '\n';
  } else if (method == "both") {
    std::cout << *enumerated << ' ' << *formula << '\n';
  } else {
    std::cout << (enumerated ? *enumerated : *formula) << '\n';
  }
  return (enumerated && formula && *enumerated != *formula) ? kSemantic : kOk;
}

int cmd_iso(const std::string& pa, const std::string& pb, bool as_json, const braces::Limits& limits) {
  const auto a = braces::read_brace_file(pa);
  const auto b = braces::read_brace_file(pb);
  if (a.order() != b.order())
    throw UsageError("orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  const auto ia = braces::brace_invariants(a);
  const auto ib = braces::brace_invariants(b);
  const auto why = braces::distinguishing_invariant(ia, ib);
  std::optional<braces::GroupMap> witness;
  if (!why) witness = braces::find_isomorphism(a, ia, b, ib, limits);
  const std::string reason = why ? *why : "exhaustive-search";

  if (as_json) {
    json out = {{"isomorphic", witness.has_value()}};
    if (witness) out["generator_images"] = witness->images();
    else out["invariant"] = reason;
    std::cout << out.dump(2) << '\n';
  } else if (witness) {
    std::cout << "isomorphic\n";
    for (std::size_t i = 0; i < a.group().rank(); ++i) {
      const Index img = witness->images()[i];
      std::cout << "e" << i << " -> " << img << " (" << join(b.group().coords(img)) << ")\n";
    }
  } else {
    std::cout << "not-isomorphic " << reason << '\n';
  }
  return kOk;
}

int cmd_ybe(const std::string& path, const std::string& out_path, bool as_json,
            const braces::Limits& limits) {
  const auto b = braces::read_brace_file(path);
  braces::require_guard(b.order() <= limits.max_ybe_order,
                        "ybe: order " + std::to_string(b.order()) + " exceeds guard " +
                            std::to_string(limits.max_ybe_order));
  const auto axioms = braces::check_axioms(b, limits);
  if (!axioms.all_pass()) {
    std::cerr << "error: input is not a brace\n";
    return kSemantic;
  }
  const auto m = b.materialize();
  const auto s = braces::ybe_solution_from_brace(m);
  const bool yb = braces::verify_yang_baxter(s, limits).pass;
  const bool inv = braces::check_involutive(s).pass;
  const bool nd = braces::check_nondegenerate(s).pass;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    braces::write_ybe(out, s);
  }
  auto word = [](bool ok) { return ok ? "pass" : "fail"; };
  if (as_json)
    std::cout << json{{"n", s.n}, {"yb", yb}, {"involutive", inv}, {"nondegenerate", nd}}.dump(2) << '\n';
  else
    std::cout << "YB=" << word(yb) << " involutive=" << word(inv) << " nondegenerate=" << word(nd)
              << '\n';
  return yb && inv && nd ? kOk : kSemantic;
}

int cmd_construct(const std::vector<std::string>& spec, const std::vector<std::string>& twist_images,
                  bool force_table, const std::string& out_path) {
  if (spec.empty()) throw UsageError("construct: missing brace name");
  const std::string& kind = spec[0];
  std::vector<std::uint64_t> args;
  for (std::size_t i = 1; i < spec.size(); ++i) args.push_back(parse_u64(spec[i], "argument"));
  auto need = [&](std::size_t k) {
    if (args.size() < k) throw UsageError("construct " + kind + ": too few arguments");
  };

  braces::Brace b = [&]() -> braces::Brace {
    if (kind == "trivial") {
      std::vector<std::uint32_t> inv(args.begin(), args.end());
      return braces::trivial_brace(braces::AbelianGroup(inv));
    }
    const std::pair<const char*, braces::SmallKind> small[] = {{"Tpp", braces::SmallKind::Tpp},
                                                                {"Tp2", braces::SmallKind::Tp2},
                                                                {"Bpp", braces::SmallKind::Bpp},
                                                                {"Bp2", braces::SmallKind::Bp2}};
    for (auto [name, k] : small)
      if (kind == name) {
        need(1);
        return braces::bachiller_p2(args[0], k);
      }
    need(3);
    return braces::coarse_family(args[0], args[1], braces::family_from_name(kind),
                                 {args.begin() + 2, args.end()})
        .brace;
  }();

  if (!twist_images.empty()) {
    std::vector<Index> images;
    for (const auto& s : twist_images) images.push_back(static_cast<Index>(parse_u64(s, "image")));
    if (images.size() != b.group().rank()) throw UsageError("--twist needs one image per generator");
    b = braces::twist(b.materialize(), braces::GroupMap(b.group(), b.group(), images));
  }
  const auto text = braces::serialize_brace(b, force_table);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite left braces: verification, classification of order p^2 q, enumeration"};
  app.require_subcommand(1);
  std::string format = "text";

  std::string path, path_b, out_path, emit_dir, method = "both";
  std::string sp, sq, sn;
  bool relaxed = false, force_table = false;
  std::vector<std::string> spec, twist_images;

  auto* verify = app.add_subcommand("verify", "Check the brace axioms of a brace file");
  verify->add_option("file", path)->required();

  auto* classify = app.add_subcommand("classify", "List the braces of order p^2 q");
  classify->add_option("p", sp)->required();
  classify->add_option("q", sq)->required();
  classify->add_flag("--relaxed", relaxed, "Only require that q divides none of p-1, p, p+1");
  classify->add_option("--emit-dir", emit_dir, "Write one brace file per class");

  auto* count = app.add_subcommand("count", "Number of braces of order n up to isomorphism");
  count->add_option("n", sn)->required();
  count->add_option("--method", method)->check(CLI::IsMember({"enumerate", "formula", "both"}));

  auto* iso = app.add_subcommand("iso", "Decide whether two braces are isomorphic");
  iso->add_option("a", path)->required();
  iso->add_option("b", path_b)->required();

  auto* ybe = app.add_subcommand("ybe", "Export and verify the Yang-Baxter solution of a brace");
  ybe->add_option("file", path)->required();
  ybe->add_option("--out", out_path, "Write the solution here");

  auto* construct = app.add_subcommand(
      "construct",
      "Write a brace file: trivial n1..nk | Tpp|Tp2|Bpp|Bp2 p | Tppq|Tp2q|Bppq|Bp2q p q w [mu]");
  construct->add_option("spec", spec)->required();
  construct->add_option("--twist", twist_images, "Twist by the automorphism with these generator images");
  construct->add_flag("--table", force_table, "Always write a multiplication table");
  construct->add_option("--out", out_path, "Output file");

  for (auto* sub : {verify, classify, count, iso, ybe, construct})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const bool as_json = format == "json";
  try {
    const auto limits = braces::Limits::from_env();
    if (verify->parsed()) return cmd_verify(path, as_json, limits);
    if (classify->parsed())
      return cmd_classify(parse_u64(sp, "p"), parse_u64(sq, "q"), relaxed, emit_dir, as_json);
    if (count->parsed()) return cmd_count(parse_u64(sn, "n"), method, as_json, limits);
    if (iso->parsed()) return cmd_iso(path, path_b, as_json, limits);
    if (ybe->parsed()) return cmd_ybe(path, out_path, as_json, limits);
    if (construct->parsed()) return cmd_construct(spec, twist_images, force_table, out_path);
  } catch (const braces::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const braces::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSemantic;
  }
  return kUsage;
}
