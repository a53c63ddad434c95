#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "kschur/bases.hpp"
#include "kschur/demazure.hpp"
#include "kschur/error.hpp"
#include "kschur/io.hpp"
#include "kschur/macdonald.hpp"
#include "kschur/verdict.hpp"
#include "kschur/verify.hpp"
#include "kschur/version.hpp"
#include "result_cache.hpp"

using namespace kschur;

namespace {

struct Globals {
  std::string cache_dir;
  bool no_cache = false;
  bool verify_cache = false;
};

// Output of one command: the bytes to print and the exit code.
struct Output {
  std::string text;
  int code = 0;
};

Output cached(const Globals& g, const std::string& op, const Json& inputs, const std::function<Output()>& compute) {
  if (g.no_cache) return compute();
  cli::ResultCache cache(cli::ResultCache::resolve_dir(g.cache_dir));
  const std::string key = cli::cache_key(op, inputs.dump(), kEngineVersion);
  if (auto hit = cache.get(key)) {
    if (g.verify_cache) {
      const Output fresh = compute();
      if (fresh.text != *hit) throw InconsistencyError("cache entry " + key + " differs from recomputation");
    }
    return {*hit, 0};
  }
  Output out = compute();
  if (out.code == 0) cache.put(key, out.text);
  return out;
}

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string render(const SchurExpansion& e, const std::string& format) {
  if (format == "json") return to_json(e).dump(2) + "\n";
  if (format == "latex") return e.to_latex() + "\n";
  if (format == "csv") return to_csv(e);
  return e.to_text() + "\n";
}

std::string render(const KSchurExpansion& e, const std::string& format) {
  if (format == "json") return to_json(e).dump(2) + "\n";
  const SchurExpansion table = e.as_table(0);
  std::string out;
  if (format == "csv") return to_csv(table);
  if (format == "latex") {
    out = table.to_latex();
    const std::string from = "\\widetilde{s}_{", to = "\\widetilde{s}^{(" + std::to_string(e.k) + ")}_{";
    for (std::size_t pos = 0; (pos = out.find(from, pos)) != std::string::npos; pos += to.size()) out.replace(pos, from.size(), to);
    return out + "\n";
  }
  out = table.to_text();
  const std::string from = "s[", to = "s" + std::to_string(e.k) + "[";
  for (std::size_t pos = 0; (pos = out.find(from, pos)) != std::string::npos; pos += to.size()) out.replace(pos, from.size(), to);
  out += "\n";
  if (!e.residual.is_zero()) out += "residual: " + e.residual.to_text() + "\n";
  return out;
}

std::string render(const Verdict& v, const std::string& format) {
  if (format == "json") return v.to_json().dump(2) + "\n";
  std::ostringstream os;
  os << v.claim << ' ' << v.inputs.dump() << ": " << (v.nonnegative ? "nonnegative" : "NOT nonnegative") << '\n';
  if (!v.witness.is_null()) os << "witness: " << v.witness.dump() << '\n';
  return os.str();
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw DomainError("unsupported format '" + f + "' for this command");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-Schur characters via affine Demazure operators"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cache-dir", g.cache_dir, "Result cache directory (KSCHUR_CACHE_DIR takes precedence)");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the result cache");
  app.add_flag("--verify-cache", g.verify_cache, "Recompute cache hits and compare");
  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json, latex or csv")->check(CLI::IsMember({"text", "json", "latex", "csv"}));
  };

  std::string lambda_s, mu_s, psi_s;
  int k = -1, l = -1, n = 0, psi_of = -1, m_max = 0, jobs = 1, split = -1;
  bool render_ideal = false;

  auto* kconj = app.add_subcommand("kconj", "k-conjugate, d_k and (k+1)-core of a k-bounded partition");
  kconj->add_option("partition", lambda_s)->required();
  kconj->add_option("--k", k)->required();
  add_format(kconj);

  auto* ks = app.add_subcommand("kschur", "k-Schur character in the Schur basis");
  ks->add_option("partition", lambda_s)->required();
  ks->add_option("--k", k)->required();
  ks->add_option("--n", n, "number of variables (default |lambda|+1)");
  add_format(ks);

  auto* cat = app.add_subcommand("catalan", "graded character of a root ideal and a partition");
  cat->add_option("partition", lambda_s)->required();
  auto* psi_opt = cat->add_option("--psi", psi_s, "\"i,j;i,j;...\", \"full\" or \"\"");
  auto* psi_of_opt = cat->add_option("--psi-of", psi_of, "use the k-Schur ideal of the partition for this k");
  psi_opt->excludes(psi_of_opt);
  cat->add_option("--n", n, "number of variables (default |lambda|+1)");
  cat->add_flag("--render", render_ideal, "print the root ideal staircase before the character");
  add_format(cat);

  auto* kost = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,mu}(q)");
  kost->add_option("lambda", lambda_s)->required();
  kost->add_option("mu", mu_s)->required();
  add_format(kost);

  auto* br = app.add_subcommand("branch", "k-Schur character in the (k+1)-Schur basis");
  br->add_option("partition", lambda_s)->required();
  br->add_option("--k", k)->required();
  add_format(br);

  auto* hl = app.add_subcommand("hl", "Hall-Littlewood character in the k-Schur basis");
  hl->add_option("partition", lambda_s)->required();
  hl->add_option("--k", k)->required();
  add_format(hl);

  auto* prod = app.add_subcommand("product", "s^(k)_lambda s^(l)_mu in the (k+l)-Schur basis");
  prod->add_option("lambda", lambda_s)->required();
  prod->add_option("mu", mu_s)->required();
  prod->add_option("--k", k)->required();
  prod->add_option("--l", l)->required();
  add_format(prod);

  auto* cop = app.add_subcommand("coproduct", "s^(k)_lambda(X+Y) in the basis s^(k)(X) s^(k)(Y)");
  cop->add_option("partition", lambda_s)->required();
  cop->add_option("--k", k)->required();
  cop->add_option("--split", split, "size of the X part")->required();
  add_format(cop);

  auto* mac = app.add_subcommand("macdonald", "bigraded Garsia-Haiman character");
  mac->add_option("partition", lambda_s)->required();
  mac->add_option("--k", k, "also expand in the k-Schur basis");
  mac->add_option("--jobs", jobs, "threads for the filling enumeration");
  add_format(mac);

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a named invariant suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--m-max", m_max, "largest size to sweep (suite default when omitted)");
  ver->add_option("--jobs", jobs, "worker threads");
  add_format(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    if (*kconj) {
      check_format(format, {"text", "json"});
      const Partition lambda = Partition::parse(lambda_s);
      const CorePair cp = kbounded_to_core(lambda, k);
      const Partition w = omega_k(lambda, k);
      if (format == "json") {
        out.text = Json{{"lambda", to_json(lambda)}, {"k", k}, {"omega", to_json(w)}, {"d", cp.inner.size()},
                        {"core", to_json(cp.core)}, {"inner", to_json(cp.inner)}}
                       .dump(2) +
                   "\n";
      } else {
        out.text = "omega=" + paren(w) + "\nd=" + std::to_string(cp.inner.size()) + "\ncore=" + paren(cp.core) +
                   "\ninner=" + paren(cp.inner) + "\n";
      }
    } else if (*ks) {
      const Partition lambda = Partition::parse(lambda_s);
      const int rank = n > 0 ? n : default_rank(lambda.size());
      out = cached(g, "kschur", {{"lambda", to_json(lambda)}, {"k", k}, {"n", rank}, {"format", format}},
                   [&] { return Output{render(kschur_character(lambda, k, rank), format)}; });
    } else if (*cat) {
      const Partition lambda = Partition::parse(lambda_s);
      const int rank = n > 0 ? n : default_rank(lambda.size());
      if (!*psi_opt && !*psi_of_opt) throw DomainError("catalan needs --psi or --psi-of");
      const RootIdeal psi = *psi_of_opt ? kschur_ideal(lambda, psi_of, rank) : parse_root_ideal(psi_s, rank);
      out = cached(g, "catalan",
                   {{"lambda", to_json(lambda)}, {"psi", to_json(psi)}, {"n", rank}, {"format", format}, {"render", render_ideal}},
                   [&] {
                     std::string text = render_ideal ? psi.render() + "\n" : "";
                     return Output{text + render(catalan_char(psi, lambda, rank), format)};
                   });
    } else if (*kost) {
      const Partition lambda = Partition::parse(lambda_s), mu = Partition::parse(mu_s);
      const QTPolynomial c = kostka(lambda, mu);
      if (format == "json") out.text = to_json(c).dump(2) + "\n";
      else if (format == "latex") out.text = c.to_latex() + "\n";
      else out.text = (c.is_zero() ? std::string("0") : c.to_string()) + "\n";
    } else if (*br || *hl) {
      const Partition lambda = Partition::parse(lambda_s);
      const std::string op = *br ? "branch" : "hl";
      out = cached(g, op, {{"lambda", to_json(lambda)}, {"k", k}, {"format", format}}, [&] {
        const Verdict v = *br ? branch_verdict(lambda, k) : hl_filtration_verdict(lambda, k);
        if (format == "json") return Output{render(v, format)};
        const KSchurExpansion e = *br ? branch_k(lambda, k) : kschur_expand(hall_littlewood(lambda, default_rank(lambda.size())), k);
        return Output{render(e, format)};
      });
    } else if (*prod) {
      const Partition lambda = Partition::parse(lambda_s), mu = Partition::parse(mu_s);
      out = cached(g, "product", {{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"k", k}, {"l", l}, {"format", format}}, [&] {
        if (format == "json") return Output{render(product_verdict(lambda, k, mu, l), format)};
        return Output{render(product_expand(lambda, k, mu, l), format)};
      });
    } else if (*cop) {
      check_format(format, {"text", "json"});
      const Partition lambda = Partition::parse(lambda_s);
      const Verdict v = coproduct_verdict(lambda, k, split, lambda.size() - split);
      if (format == "json") {
        out.text = render(v, format);
      } else {
        const CoproductExpansion e = coproduct_expand(lambda, k, split, lambda.size() - split);
        std::ostringstream os;
        for (const auto& [key, c] : e.coeffs)
          os << "s" << k << "[" << key.first.to_string() << "](X) s" << k << "[" << key.second.to_string() << "](Y): " << c.to_string() << '\n';
        os << (v.nonnegative ? "nonnegative" : "NOT nonnegative") << '\n';
        out.text = os.str();
      }
    } else if (*mac) {
      check_format(format, {"text", "json", "latex"});
      const Partition lambda = Partition::parse(lambda_s);
      out = cached(g, "macdonald", {{"lambda", to_json(lambda)}, {"k", k}, {"format", format}}, [&] {
        const GHCharacter ch = gh_character(lambda, jobs);
        std::optional<KSchurExpansion> kexp;
        if (k >= 0) kexp = refined_expansion(lambda, k);
        if (format == "json") {
          Json j = to_json(ch);
          j["lambda"] = to_json(lambda);
          j["convention"] = kGHConvention.describe();
          if (kexp) j["kschur"] = to_json(*kexp);
          return Output{j.dump(2) + "\n"};
        }
        if (format == "latex") return Output{gh_latex(lambda, ch, kexp ? &*kexp : nullptr)};
        std::string text = ch.as_expansion(lambda.size() + 1).to_text() + "\n";
        if (kexp) text += render(*kexp, "text");
        return Output{text};
      });
    } else if (*ver) {
      check_format(format, {"text", "json"});
      const SuiteReport r = run_suite(suite, m_max > 0 ? m_max : default_m_max(suite), jobs);
      out.text = format == "json" ? r.to_json().dump(2) + "\n" : r.to_text() + "\n";
      out.code = r.passed ? 0 : 1;
    }
    std::cout << out.text;
    return out.code;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
