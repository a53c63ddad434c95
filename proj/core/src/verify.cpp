#include "kschur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "kschur/bases.hpp"
#include "kschur/demazure.hpp"
#include "kschur/error.hpp"
#include "kschur/macdonald.hpp"
#include "kschur/oracles.hpp"
#include "kschur/verdict.hpp"

namespace kschur {

Json SuiteReport::to_json() const {
  Json out = {{"suite", suite}, {"m_max", m_max}, {"cases", cases}, {"passed", passed}, {"table", table}};
  if (counterexample)
    out["counterexample"] = {{"case", counterexample->label}, {"detail", counterexample->detail}};
  else
    out["counterexample"] = nullptr;
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& line : table) os << line << '\n';
  os << (passed ? "PASS" : "FAIL") << ' ' << suite << " (m <= " << m_max << ", " << cases << " cases)";
  if (counterexample) os << "\n  counterexample: " << counterexample->label << ": " << counterexample->detail;
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"involution", "triangularity", "socle",
                                                 "branch",     "hl-filtration", "pieri",
                                                 "muco",       "refined-macdonald", "oracle-equivalence"};
  return names;
}

int default_m_max(const std::string& suite) {
  if (suite == "involution") return 8;
  if (suite == "triangularity" || suite == "socle") return 7;
  if (suite == "branch" || suite == "hl-filtration" || suite == "oracle-equivalence") return 6;
  return 5;
}

std::vector<CaseResult> run_cases(const std::vector<std::function<CaseResult()>>& tasks, int jobs) {
  std::vector<CaseResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {"case " + std::to_string(i), false, std::string("error: ") + e.what()};
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return results;
}

namespace {

using Tasks = std::vector<std::function<CaseResult()>>;

std::string label(const Partition& lambda, int k) { return "lambda=(" + lambda.to_string() + ") k=" + std::to_string(k); }

CaseResult check(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

// (lambda, k) with lambda k-bounded, 1 <= k <= |lambda|, 1 <= |lambda| <= m_max.
std::vector<std::pair<Partition, int>> kbounded_pairs(int m_max, bool strict_k = false) {
  std::vector<std::pair<Partition, int>> out;
  for (int m = 1; m <= m_max; ++m)
    for (int k = 1; k <= (strict_k ? m - 1 : m); ++k)
      for (const auto& lambda : enumerate_kbounded(m, k)) out.emplace_back(lambda, k);
  return out;
}

Tasks involution_tasks(int m_max) {
  Tasks tasks;
  for (const auto& [lambda, k] : kbounded_pairs(m_max))
    tasks.push_back([lambda, k] {
      const Partition w = omega_k(lambda, k);
      if (omega_k(w, k) != lambda) return check(label(lambda, k), false, "omega_k is not an involution");
      const CorePair cp = kbounded_to_core(lambda, k);
      if (core_to_kbounded(cp.core, k) != lambda) return check(label(lambda, k), false, "core round trip failed");
      if (kbounded_to_core(w, k).core != conjugate(cp.core))
        return check(label(lambda, k), false, "core of omega_k is not the conjugate core");
      if (d_k(w, k) != d_k(lambda, k)) return check(label(lambda, k), false, "d_k changes under omega_k");
      if (!is_r_core(cp.core, k + 1)) return check(label(lambda, k), false, "core is not a (k+1)-core");
      return check(label(lambda, k), true);
    });
  return tasks;
}

Tasks triangularity_tasks(int m_max) {
  Tasks tasks;
  for (const auto& [lambda, k] : kbounded_pairs(m_max))
    tasks.push_back([lambda, k] {
      const SchurExpansion e = kschur_character(lambda, k);
      const Partition top = conjugate(omega_k(lambda, k));
      const int d = d_k(lambda, k);
      if (!(e.coeff(lambda) == QTPolynomial(1))) return check(label(lambda, k), false, "coefficient of s_lambda is not 1");
      for (const auto& [mu, c] : e.coeffs)
        if (!dominance_leq(lambda, mu) || !dominance_leq(mu, top))
          return check(label(lambda, k), false, "s[" + mu.to_string() + "] lies outside the dominance window");
      if (!(e.coeff(top) == QTPolynomial::q_power(d)))
        return check(label(lambda, k), false, "coefficient of s[" + top.to_string() + "] is " + e.coeff(top).to_string());
      int deg = 0;
      for (const auto& [mu, c] : e.coeffs) deg = std::max(deg, c.max_q_degree());
      if (deg != d) return check(label(lambda, k), false, "top degree " + std::to_string(deg) + " != d_k " + std::to_string(d));
      if (!e.is_nonnegative()) return check(label(lambda, k), false, "negative coefficient");
      return check(label(lambda, k), true);
    });
  return tasks;
}

Tasks socle_tasks(int m_max) {
  Tasks tasks;
  for (const auto& [lambda, k] : kbounded_pairs(m_max))
    tasks.push_back([lambda, k] {
      const int n = default_rank(lambda.size());
      const SocleTerm s = socle_partition(lambda, k, n);
      const Partition w = omega_k(lambda, k);
      if (s.partition != conjugate(w) || s.degree != d_k(lambda, k))
        return check(label(lambda, k), false, "socle (" + s.partition.to_string() + ") in degree " + std::to_string(s.degree));
      const RootIdeal psi = kschur_ideal(lambda, k, n);
      if (!psi.is_shallow()) return check(label(lambda, k), true, "ideal not shallow");
      const auto chain = chain_weights(psi, lambda);
      for (int i = 1; i <= n; ++i)
        if (!chain_stage_is_monotone(psi, lambda, chain, i))
          return check(label(lambda, k), false, "stage " + std::to_string(i) + " breaks the monotone pattern");
      std::vector<int> fin = chain.back().v;
      if (std::any_of(fin.begin(), fin.end(), [](int x) { return x < 0; }))
        return check(label(lambda, k), false, "terminal weight has a negative entry");
      std::sort(fin.begin(), fin.end(), std::greater<>());
      if (conjugate(Partition(fin)) != w) return check(label(lambda, k), false, "terminal weight does not give omega_k");
      return check(label(lambda, k), true);
    });
  return tasks;
}

std::string verdict_detail(const Verdict& v) { return v.nonnegative ? std::string() : v.witness.dump(); }

Tasks branch_tasks(int m_max) {
  Tasks tasks;
  for (const auto& [lambda, k] : kbounded_pairs(m_max, true))
    tasks.push_back([lambda, k] {
      const Verdict v = branch_verdict(lambda, k);
      if (!v.nonnegative) return check(label(lambda, k), false, verdict_detail(v));
      if (k + 2 <= lambda.size()) {
        // Two single steps against one double step.
        const KSchurExpansion once = branch_k(lambda, k);
        SchurExpansion twice{0, {}};
        for (const auto& [mu, c] : once.coeffs) twice += branch_k(mu, k + 1).as_table(0).scaled(c);
        const KSchurExpansion direct = kschur_expand(kschur_character(lambda, k), k + 2);
        if (!(direct.as_table(0) == twice) || !direct.residual.is_zero())
          return check(label(lambda, k), false, "branching twice differs from branching by two");
      }
      return check(label(lambda, k), true);
    });
  return tasks;
}

Partition maximal_kbounded(int m, int k) {
  std::vector<int> parts(static_cast<std::size_t>(m / k), k);
  if (m % k) parts.push_back(m % k);
  return Partition(parts);
}

Tasks hl_tasks(int m_max, std::vector<std::string>& table) {
  Tasks tasks;
  for (const auto& [lambda, k] : kbounded_pairs(m_max))
    tasks.push_back([lambda, k] {
      const Verdict v = hl_filtration_verdict(lambda, k);
      return check(label(lambda, k), v.nonnegative, verdict_detail(v));
    });
  for (int m = 1; m <= m_max; ++m)
    for (int k = 1; k <= m; ++k)
      tasks.push_back([m, k] {
        const Partition top = maximal_kbounded(m, k);
        const KSchurExpansion e = kschur_expand(hall_littlewood(top, default_rank(m)), k);
        const bool ok = e.residual.is_zero() && e.coeffs.size() == 1 && e.coeff(top) == QTPolynomial(1);
        return check("maximal " + label(top, k), ok, ok ? "" : "expansion is not a single basis element");
      });
  // Which k in {0, 1} turns the k-Schur ideal into the Hall-Littlewood one.
  int match0 = 0, match1 = 0, total = 0;
  for (int m = 1; m <= std::min(m_max, 5); ++m)
    for (const auto& lambda : enumerate_partitions(m)) {
      const int n = default_rank(m);
      const SchurExpansion hl = hall_littlewood(lambda, n);
      ++total;
      if (catalan_char(kschur_ideal(lambda, 0, n), lambda, n) == hl) ++match0;
      if (catalan_char(kschur_ideal(lambda, 1, n), lambda, n) == hl) ++match1;
    }
  table.push_back("k=0 ideal gives the Hall-Littlewood character for " + std::to_string(match0) + "/" +
                  std::to_string(total) + " partitions of size <= 5");
  table.push_back("k=1 ideal gives the Hall-Littlewood character for " + std::to_string(match1) + "/" +
                  std::to_string(total) + " partitions of size <= 5");
  tasks.push_back([match0, total] { return check("k=0 ideal equals all positive roots", match0 == total); });
  return tasks;
}

Tasks pieri_tasks(int m_max) {
  Tasks tasks;
  for (const auto& [lambda, k] : kbounded_pairs(m_max))
    tasks.push_back([lambda, k] {
      const int n = default_rank(lambda.size());
      const KSchurExpansion e = kschur_expand(e1_skew(kschur_character(lambda, k, n)), k);
      if (!e.residual.is_zero()) return check(label(lambda, k), false, "residual " + e.residual.to_text());
      std::map<Partition, QTPolynomial> expected;
      for (const auto& term : pieri_pairs(lambda, k))
        for (int s : term.ribbons.spins) expected[term.mu] += QTPolynomial::q_power(s);
      for (const auto& [mu, c] : e.coeffs)
        if (c.has_t() || !c.is_nonnegative()) return check(label(lambda, k), false, "coefficient " + c.to_string());
      if (e.coeffs != expected) {
        std::string got, want;
        for (const auto& [mu, c] : e.coeffs) got += " (" + mu.to_string() + "):" + c.to_string();
        for (const auto& [mu, c] : expected) want += " (" + mu.to_string() + "):" + c.to_string();
        return check(label(lambda, k), false, "skew gives" + got + "; spins give" + want);
      }
      return check(label(lambda, k), true);
    });
  return tasks;
}

std::vector<int> k_range(const Partition& lambda) {
  std::vector<int> out;
  for (int k = std::max(1, lambda.largest()); k <= std::max(1, lambda.size()); ++k) out.push_back(k);
  return out;
}

Tasks muco_tasks(int m_max) {
  Tasks tasks;
  std::vector<Partition> all{Partition()};
  for (int m = 1; m <= m_max; ++m)
    for (const auto& p : enumerate_partitions(m)) all.push_back(p);
  for (const auto& lambda : all)
    for (const auto& mu : all) {
      if (lambda.size() + mu.size() > m_max || lambda.size() + mu.size() == 0) continue;
      for (int k : k_range(lambda))
        for (int l : k_range(mu))
          tasks.push_back([lambda, k, mu, l] {
            const Verdict v = product_verdict(lambda, k, mu, l);
            return check("product " + label(lambda, k) + " mu=(" + mu.to_string() + ") l=" + std::to_string(l),
                         v.nonnegative, verdict_detail(v));
          });
    }
  for (const auto& lambda : all) {
    if (lambda.empty()) continue;
    for (int k : k_range(lambda))
      for (int m1 = 0; m1 <= lambda.size(); ++m1)
        tasks.push_back([lambda, k, m1] {
          const Verdict v = coproduct_verdict(lambda, k, m1, lambda.size() - m1);
          return check("coproduct " + label(lambda, k) + " split " + std::to_string(m1), v.nonnegative, verdict_detail(v));
        });
  }
  return tasks;
}

Tasks refined_tasks(int m_max) {
  Tasks tasks;
  for (int m = 1; m <= m_max; ++m)
    for (const auto& lambda : enumerate_partitions(m))
      for (int k = lambda.largest(); k <= m; ++k)
        tasks.push_back([lambda, k, m] {
          const KSchurExpansion e = refined_expansion(lambda, k);
          const Verdict v = make_verdict("refined-macdonald", {}, e);
          std::string line = e.as_table(0).to_text();
          if (!v.nonnegative) return check(label(lambda, k), false, verdict_detail(v));
          if (k < m) {
            SchurExpansion rebranched{0, {}};
            for (const auto& [mu, c] : e.coeffs) rebranched += branch_k(mu, k).as_table(0).scaled(c);
            if (!(rebranched == refined_expansion(lambda, k + 1).as_table(0)))
              return check(label(lambda, k), false, "re-expansion at k+1 differs from the direct expansion");
          }
          return check(label(lambda, k), true, line);
        });
  return tasks;
}

RootIdeal random_ideal(std::mt19937& rng, int n) {
  std::vector<RootIdeal::Root> gens;
  std::bernoulli_distribution coin(0.3);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) gens.emplace_back(i, j);
  std::vector<RootIdeal::Root> closed;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return i <= g.first && j >= g.second; }))
        closed.emplace_back(i, j);
  return validate_root_ideal(closed, n);
}

Tasks oracle_tasks(int m_max) {
  Tasks tasks;
  for (int m = 1; m <= m_max; ++m)
    tasks.push_back([m] {
      for (const auto& lambda : enumerate_partitions(m))
        for (const auto& mu : enumerate_partitions(m))
          if (!(kostka(lambda, mu) == oracle::kostka_charge(lambda, mu)))
            return check("kostka m=" + std::to_string(m), false, "K(" + lambda.to_string() + "; " + mu.to_string() + ")");
      return check("kostka m=" + std::to_string(m), true);
    });
  std::mt19937 rng(20240607);
  const int size_cap = std::min(5, m_max);
  for (int c = 0; c < 50; ++c) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const RootIdeal psi = random_ideal(rng, n);
    std::vector<Partition> choices;
    for (int m = 1; m <= size_cap; ++m)
      for (const auto& p : enumerate_partitions(m))
        if (p.length() <= n) choices.push_back(p);
    const Partition lambda = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    tasks.push_back([psi, lambda, n] {
      const std::string name = "psi={" + psi.to_string() + "} lambda=(" + lambda.to_string() + ") n=" + std::to_string(n);
      const SchurExpansion engine = catalan_char(psi, lambda, n);
      int top = 0;
      for (const auto& [mu, c] : engine.coeffs) top = std::max(top, c.max_q_degree());
      const SchurExpansion series = oracle::raising_series_catalan(psi, lambda, n, top + 2);
      if (!(engine == series)) return check(name, false, "engine " + engine.to_text() + " vs series " + series.to_text());
      return check(name, true);
    });
  }
  for (int m = 1; m <= std::min(4, m_max); ++m)
    tasks.push_back([m] {
      const auto table = oracle::gram_schmidt_macdonald(m, m);
      for (const auto& [mu, f] : table)
        if (!(modified_macdonald(mu, m) == f))
          return check("macdonald m=" + std::to_string(m), false, "fillings disagree for (" + mu.to_string() + ")");
      return check("macdonald m=" + std::to_string(m), true);
    });
  return tasks;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, int m_max, int jobs) {
  SuiteReport report;
  report.suite = suite;
  report.m_max = m_max;
  Tasks tasks;
  bool keep_table = false;
  if (suite == "involution") tasks = involution_tasks(m_max);
  else if (suite == "triangularity") tasks = triangularity_tasks(m_max);
  else if (suite == "socle") tasks = socle_tasks(m_max);
  else if (suite == "branch") tasks = branch_tasks(m_max);
  else if (suite == "hl-filtration") tasks = hl_tasks(m_max, report.table);
  else if (suite == "pieri") tasks = pieri_tasks(m_max);
  else if (suite == "muco") tasks = muco_tasks(m_max);
  else if (suite == "refined-macdonald") {
    tasks = refined_tasks(m_max);
    keep_table = true;
  } else if (suite == "oracle-equivalence") tasks = oracle_tasks(m_max);
  else throw DomainError("unknown suite '" + suite + "'");
  const auto results = run_cases(tasks, jobs);
  report.cases = static_cast<long>(results.size());
  for (const auto& r : results) {
    if (keep_table) report.table.push_back(r.label + ": " + r.detail);
    if (!r.ok && !report.counterexample) {
      report.passed = false;
      report.counterexample = r;
    }
  }
  return report;
}

}  // namespace kschur
