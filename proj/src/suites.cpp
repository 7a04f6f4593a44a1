#include "dyntwist/suites.hpp"

#include "dyntwist/qhyper.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

namespace dyntwist {

namespace {

using Task = std::function<IdentityReport()>;

std::vector<IdentityReport> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<IdentityReport> out(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      out[i] = tasks[i]();
    } catch (const std::exception& e) {
      out[i] = IdentityReport{"", "internal_error", {}, std::nullopt, "fail",
                              std::nullopt, Witness{0, 0, e.what(), ""}, 0};
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) run_one(i);
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

QScalar qpow(int k) { return QScalar::q_power(k); }

Operator prefactor_pochh(const RepSpace& s) {
  return h_diagonal(s, [](int mu) {
    return qpochhammer(qpow(2) * QScalar::x_power(2), qpow(2), mu);
  });
}

std::pair<Operator, Operator> q2_pair(const GeneratorSet& g) {
  const RepSpace& s = g.space();
  Operator qh_plus = h_diagonal(s, [](int mu) { return QScalar::t_power(2 * mu); });
  Operator qh_minus = h_diagonal(s, [](int mu) { return QScalar::t_power(-2 * mu); });
  return {tensor(g.e, qh_plus), tensor(qh_minus, g.e)};
}

void relation_tasks(std::vector<Task>& tasks, const std::string& prefix,
                    std::vector<int> legs,
                    const std::function<GeneratorSet()>& make) {
  tasks.push_back([=] {
    GeneratorSet g = make();
    Operator lhs = g.h * g.Eplus - g.Eplus * g.h;
    auto r = compare("algebra", prefix + "_h_eplus", lhs, QScalar(2L) * g.Eplus);
    r.legs = legs;
    return r;
  });
  tasks.push_back([=] {
    GeneratorSet g = make();
    Operator lhs = g.h * g.Eminus - g.Eminus * g.h;
    auto r = compare("algebra", prefix + "_h_eminus", lhs, QScalar(-2L) * g.Eminus);
    r.legs = legs;
    return r;
  });
  tasks.push_back([=] {
    GeneratorSet g = make();
    Operator lhs = g.Eplus * g.Eminus - g.Eminus * g.Eplus;
    Operator rhs = h_diagonal(g.space(), [](int mu) { return qnum(mu); });
    auto r = compare("algebra", prefix + "_eplus_eminus", lhs, rhs);
    r.legs = legs;
    return r;
  });
}

std::vector<Task> algebra_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int p = 0; p <= cfg.max_dim; ++p)
    relation_tasks(tasks, "relations", {p}, [p] { return build_irrep(p); });
  for (int p1 = 0; p1 <= cfg.pair_dim; ++p1)
    for (int p2 = 0; p2 <= cfg.pair_dim; ++p2)
      relation_tasks(tasks, "coproduct_relations", {p1, p2}, [p1, p2] {
        return coproduct_generators(build_irrep(p1), build_irrep(p2));
      });
  for (int p = 1; p <= std::min(3, cfg.max_dim); ++p) {
    tasks.push_back([p] {
      auto [x, y] = q2_pair(build_irrep(p));
      Operator id = Operator::identity(x.space);
      auto r = compare("algebra", "qexp_inverse",
                       qexp_nilpotent(x, QBase::Q) * qexp_nilpotent(-x, QBase::QInverse),
                       id);
      r.legs = {p, p};
      return r;
    });
    tasks.push_back([p] {
      auto [x, y] = q2_pair(build_irrep(p));
      auto r = compare("algebra", "qexp_sum", qexp_nilpotent(x + y, QBase::Q),
                       qexp_nilpotent(y, QBase::Q) * qexp_nilpotent(x, QBase::Q));
      r.legs = {p, p};
      return r;
    });
    tasks.push_back([p] {
      auto [x, y] = q2_pair(build_irrep(p));
      Operator mid = (QScalar::one() - qpow(-2)) * (x * y);
      auto r = compare("algebra", "qexp_product",
                       qexp_nilpotent(x, QBase::Q) * qexp_nilpotent(y, QBase::Q),
                       qexp_nilpotent(y, QBase::Q) * qexp_nilpotent(mid, QBase::Q) *
                           qexp_nilpotent(x, QBase::Q));
      r.legs = {p, p};
      return r;
    });
  }
  return tasks;
}

std::vector<Task> ybe_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int p1 = 0; p1 <= cfg.triple_dim; ++p1)
    for (int p2 = 0; p2 <= cfg.triple_dim; ++p2)
      for (int p3 = 0; p3 <= cfg.triple_dim; ++p3)
        tasks.push_back([p1, p2, p3] {
          GeneratorSet g1 = build_irrep(p1), g2 = build_irrep(p2), g3 = build_irrep(p3);
          Operator i1 = Operator::identity(g1.space());
          Operator i2 = Operator::identity(g2.space());
          Operator i3 = Operator::identity(g3.space());
          Recipe r = rmat();
          Operator r12 = tensor(r(g1, g2), i3);
          Operator r23 = tensor(i1, r(g2, g3));
          Operator r13 = permute_legs(tensor(r(g1, g3), i2), {0, 2, 1});
          auto rep = compare("ybe", "yang_baxter", r12 * r13 * r23, r23 * r13 * r12);
          rep.legs = {p1, p2, p3};
          return rep;
        });
  return tasks;
}

std::vector<Task> twist_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int p1 = 0; p1 <= cfg.pair_dim; ++p1)
    for (int p2 = 0; p2 <= cfg.pair_dim; ++p2)
      tasks.push_back([p1, p2] {
        GeneratorSet g1 = build_irrep(p1), g2 = build_irrep(p2);
        GeneratorSet gg = coproduct_generators(g1, g2);
        Operator f = F_series()(g1, g2);
        auto r = compare("twist", "zero_weight", f * gg.h, gg.h * f);
        r.legs = {p1, p2};
        return r;
      });
  for (int p1 = 0; p1 <= cfg.triple_dim; ++p1)
    for (int p2 = 0; p2 <= cfg.triple_dim; ++p2)
      for (int p3 = 0; p3 <= cfg.triple_dim; ++p3) {
        tasks.push_back([p1, p2, p3, cfg] {
          return check_cocycle(F_series(), build_irrep(p1), build_irrep(p2),
                               build_irrep(p3), Anchor::YInfinity, cfg.expand_order);
        });
        tasks.push_back([p1, p2, p3, cfg] {
          return check_dybe(F_series(), build_irrep(p1), build_irrep(p2),
                            build_irrep(p3), Anchor::YInfinity, cfg.expand_order);
        });
      }
  for (int p1 = 0; p1 <= cfg.pair_dim; ++p1)
    for (int p2 = 0; p2 <= cfg.pair_dim; ++p2)
      tasks.push_back([p1, p2, cfg] {
        return check_abrr(F_series(), build_irrep(p1), build_irrep(p2),
                          Anchor::YInfinity, cfg.expand_order);
      });
  for (int p : {1, 2})
    for (int K : {1, 2, 4, 8}) {
      if (K > cfg.trunc) continue;
      tasks.push_back([p, K, cfg] {
        GeneratorSet g = build_irrep(p);
        auto r = compare("twist", "prod_large", F_product_large(K)(g, g),
                         F_series()(g, g), K, Anchor::YInfinity, cfg.expand_order);
        r.legs = {p, p};
        return r;
      });
      tasks.push_back([p, K, cfg] {
        GeneratorSet g = build_irrep(p);
        auto r = compare("twist", "prod_small", F_product_small(K)(g, g),
                         F_series()(g, g), K, Anchor::YZero, cfg.expand_order);
        r.legs = {p, p};
        return r;
      });
    }
  return tasks;
}

std::vector<Task> coboundary_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int p1 = 0; p1 <= cfg.pair_dim; ++p1)
    for (int p2 = 0; p2 <= cfg.pair_dim; ++p2) {
      tasks.push_back([p1, p2, cfg] {
        return check_coboundary(M_babelon(), F_series(), build_irrep(p1),
                                build_irrep(p2), Anchor::YInfinity, cfg.expand_order);
      });
      tasks.push_back([p1, p2] {
        GeneratorSet g1 = build_irrep(p1), g2 = build_irrep(p2);
        auto r = compare("coboundary", "delta_M_derived", F_series()(g1, g2),
                         delta(M_babelon(), g1, g2));
        r.legs = {p1, p2};
        return r;
      });
    }
  for (int p : {1, 2})
    for (int K : {2, 4, 8}) {
      if (K > cfg.trunc) continue;
      tasks.push_back([p, K, cfg] {
        GeneratorSet g = build_irrep(p);
        auto r = compare("coboundary", "delta_N_full", delta(N_full(K), g, g),
                         F_series()(g, g), K, Anchor::YInfinity, cfg.expand_order);
        r.legs = {p, p};
        return r;
      });
    }
  return tasks;
}

std::vector<Task> vertex_irf_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  int cap = std::min(3, cfg.pair_dim);
  for (int p1 = 0; p1 <= cap; ++p1)
    for (int p2 = 0; p2 <= cap; ++p2)
      tasks.push_back([p1, p2] {
        return check_vertex_irf(M_babelon(), build_irrep(p1), build_irrep(p2));
      });
  return tasks;
}

std::vector<Task> prop2_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (int p = 0; p <= cfg.max_dim; ++p) {
    tasks.push_back([p] {
      GeneratorSet g = build_irrep(p);
      auto r = compare("prop2", "reordering", tildeN_minus()(g) * N_plus()(g),
                       M_babelon()(g));
      r.legs = {p};
      return r;
    });
    tasks.push_back([p] {
      // reading resolution for the reordered form's prefactor: the statement
      // prints tildeN_minus N_plus = (q^2 x^2; q^2)_h M; test as printed, and
      // on failure re-test with the prefactor moved to the limit of the
      // truncated product (lim N_minus(K) = (q^2 x^2; q^2)_h tildeN_minus),
      // recording which reading validates
      GeneratorSet g = build_irrep(p);
      Operator lhs = tildeN_minus()(g) * N_plus()(g);
      Operator m = M_babelon()(g);
      Operator pre = prefactor_pochh(g.space());
      IdentityReport r{"prop2", "", {p}, std::nullopt, "", std::nullopt,
                       std::nullopt, 0};
      if (lhs == pre * m) {
        r.identity = "prefactor_reading[printed]";
        r.verdict = "exact";
      } else if (lhs == m) {
        r.identity = "prefactor_reading[limit-form]";
        r.verdict = "exact";
      } else {
        r.identity = "prefactor_reading";
        r.verdict = "fail";
        r.witness = Witness{0, 0, lhs.mat(0, 0).canonical_string(),
                            m.mat(0, 0).canonical_string()};
      }
      return r;
    });
  }
  for (int p = 0; p <= std::min(3, cfg.max_dim); ++p)
    for (int r = -p; r <= p; ++r)
      tasks.push_back([r, p] { return weight_component_identity(r, p); });
  for (int p : {1, 2})
    for (int K : {1, 2, 4, 8}) {
      if (K > cfg.trunc) continue;
      tasks.push_back([p, K, cfg] {
        GeneratorSet g = build_irrep(p);
        Operator target = prefactor_pochh(g.space()) * tildeN_minus()(g);
        auto rep = compare("prop2", "tilde_limit", N_minus(K)(g), target, K,
                           Anchor::YInfinity, cfg.expand_order);
        rep.legs = {p};
        return rep;
      });
    }
  return tasks;
}

std::vector<Task> hyper_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  BigReal tol25 = BigReal::pow10(-25), tol20 = BigReal::pow10(-20);
  tasks.push_back([tol25] {
    BigReal q(Rational(1, 3));
    auto r = check_transform(q.pow_int(2), q.pow_int(3), q.pow_int(5), q.pow_int(7), q,
                             tol25);
    r.identity = "transform[documented]";
    return r;
  });
  {
    // 25 fixed-seed admissible parameter points, regenerated identically on
    // every run
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-90, 90), den(91, 140), qden(3, 9);
    int tested = 0;
    while (tested < 25) {
      // sequence the draws explicitly so the point list is compiler-independent
      long an = num(rng), ad = den(rng), bn = num(rng), bd = den(rng);
      long cn = num(rng), cd = den(rng), dn = num(rng), dd = den(rng);
      Rational a(an, ad), b(bn, bd), c(cn, cd), d(dn, dd);
      Rational q(1, qden(rng));
      if (a == 0 || b == 0) continue;
      int idx = tested++;
      tasks.push_back([a, b, c, d, q, idx, tol25] {
        auto r = check_transform(BigReal(a), BigReal(b), BigReal(c), BigReal(d),
                                 BigReal(q), tol25);
        r.identity = "transform[seed" + std::to_string(idx) + "]";
        return r;
      });
    }
  }
  for (int p = 1; p <= std::min(3, cfg.max_dim); ++p)
    for (int k = 0; k <= p; ++k)
      for (int r = 0; r <= k; ++r)
        tasks.push_back([p, k, r, tol25] {
          BigReal q2 = BigReal(Rational(1, 9)), x2 = BigReal(Rational(1, 25));
          auto rep = check_transform(q2.pow_int(k + 1), q2.pow_int(k - p),
                                     q2.pow_int(r + 1), x2 * q2.pow_int(r + 1), q2,
                                     tol25);
          rep.identity = "transform[spec]";
          rep.legs = {p, k, r};
          return rep;
        });
  for (int p = 0; p <= std::min(3, cfg.max_dim); ++p)
    for (int k = 0; k <= p; ++k)
      for (int r = 0; r <= k; ++r)
        tasks.push_back([p, k, r, tol20] {
          auto rep = cross_check_action(p, k, r, Rational(1, 5), Rational(1, 3), tol20);
          rep.legs = {p, k, r};
          return rep;
        });
  return tasks;
}

std::vector<Task> grouplike_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  int cap = std::min(3, cfg.pair_dim);
  for (int p1 = 0; p1 <= cap; ++p1)
    for (int p2 = 0; p2 <= cap; ++p2) {
      tasks.push_back([p1, p2] {
        GeneratorSet g1 = build_irrep(p1), g2 = build_irrep(p2);
        Operator id = Operator::identity(delta(bigB(), g1, g2).space);
        auto r = compare("grouplike", "delta_B", delta(bigB(), g1, g2), id);
        r.legs = {p1, p2};
        return r;
      });
      tasks.push_back([p1, p2] {
        GeneratorSet g1 = build_irrep(p1), g2 = build_irrep(p2);
        Operator d = delta(grouplike_pochh(), g1, g2);
        auto r = compare("grouplike", "delta_pochh", d, Operator::identity(d.space));
        r.legs = {p1, p2};
        return r;
      });
      for (const char* gname : {"B", "pochh_h"}) {
        tasks.push_back([p1, p2, gname] {
          GeneratorSet g1 = build_irrep(p1), g2 = build_irrep(p2);
          GeneratorSet gg = coproduct_generators(g1, g2);
          Recipe g = std::string(gname) == "B" ? bigB() : grouplike_pochh();
          Recipe gq = recipe_product("gQ", g, M_babelon());
          Operator dg = g(gg);
          auto r = compare("grouplike", std::string("conjugation[") + gname + "]",
                           delta(gq, g1, g2),
                           dg * delta(M_babelon(), g1, g2) * invert(dg));
          r.legs = {p1, p2};
          return r;
        });
      }
    }
  return tasks;
}

std::vector<Task> selftest_fail_tasks(const SuiteConfig&) {
  std::vector<Task> tasks;
  tasks.push_back([] {
    GeneratorSet g = build_irrep(1);
    auto r = compare("selftest-fail", "injected_failure", g.e, Operator::zero(g.space()));
    r.legs = {1};
    return r;
  });
  return tasks;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"algebra", "ybe",   "twist", "coboundary", "vertex-irf",
          "lemma",   "weyl",  "prop2", "hyper",      "grouplike"};
}

bool is_suite_name(const std::string& name) {
  if (name == "selftest-fail") return true;
  for (const auto& s : suite_names())
    if (s == name) return true;
  return false;
}

std::vector<IdentityReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "lemma") {
    // these emit ordered batches of reports, so they bypass the task pool
    int p_max = std::max(1, std::min(6, cfg.trunc));
    std::vector<IdentityReport> out =
        lemma_recursion(p_max, build_irrep(1), build_irrep(1), cfg.expand_order);
    std::vector<IdentityReport> cross =
        lemma_recursion(1, build_irrep(1), build_irrep(2), cfg.expand_order);
    out.insert(out.end(), cross.begin(), cross.end());
    return out;
  }
  if (name == "weyl") {
    std::vector<IdentityReport> out;
    for (int p = 0; p <= cfg.max_dim; ++p) {
      auto batch = check_weyl_single(build_irrep(p));
      out.insert(out.end(), batch.begin(), batch.end());
    }
    int cap = std::min(3, cfg.pair_dim);
    for (int p1 = 0; p1 <= cap; ++p1)
      for (int p2 = 0; p2 <= cap; ++p2) {
        auto batch = check_weyl_pair(build_irrep(p1), build_irrep(p2));
        out.insert(out.end(), batch.begin(), batch.end());
      }
    return out;
  }
  std::vector<Task> tasks;
  if (name == "algebra")
    tasks = algebra_tasks(cfg);
  else if (name == "ybe")
    tasks = ybe_tasks(cfg);
  else if (name == "twist")
    tasks = twist_tasks(cfg);
  else if (name == "coboundary")
    tasks = coboundary_tasks(cfg);
  else if (name == "vertex-irf")
    tasks = vertex_irf_tasks(cfg);
  else if (name == "prop2")
    tasks = prop2_tasks(cfg);
  else if (name == "hyper")
    tasks = hyper_tasks(cfg);
  else if (name == "grouplike")
    tasks = grouplike_tasks(cfg);
  else if (name == "selftest-fail")
    tasks = selftest_fail_tasks(cfg);
  else
    throw std::invalid_argument("unknown suite: " + name);
  return run_tasks(tasks, cfg.jobs);
}

bool all_ok(const std::vector<IdentityReport>& results) {
  for (const auto& r : results)
    if (!r.ok()) return false;
  return true;
}

nlohmann::json report_json(const SuiteConfig& cfg,
                           const std::vector<std::string>& suites,
                           const std::vector<IdentityReport>& results) {
  nlohmann::json out;
  out["config"] = {{"suites", suites},
                   {"max_dim", cfg.max_dim},
                   {"pair_dim", cfg.pair_dim},
                   {"triple_dim", cfg.triple_dim},
                   {"trunc", cfg.trunc},
                   {"expand_order", cfg.expand_order}};
  int pass = 0, fail = 0;
  out["results"] = nlohmann::json::array();
  for (IdentityReport r : results) {
    r.runtime_ms = 0;
    out["results"].push_back(r.to_json());
    (r.ok() ? pass : fail)++;
  }
  out["summary"] = {{"pass", pass}, {"fail", fail}};
  return out;
}

std::string report_text(const std::vector<IdentityReport>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.ok() ? "PASS " : "FAIL ";
    out += r.suite + "/" + r.identity + " legs=[";
    for (std::size_t i = 0; i < r.legs.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(r.legs[i]);
    }
    out += "]";
    if (r.truncation) out += " K=" + std::to_string(*r.truncation);
    out += " verdict=" + r.verdict;
    if (r.order) out += " order=" + std::to_string(*r.order);
    if (r.witness)
      out += " witness[" + std::to_string(r.witness->row) + "," +
             std::to_string(r.witness->col) + "]: " + r.witness->lhs +
             " != " + r.witness->rhs;
    out += "\n";
  }
  return out;
}

}  // namespace dyntwist
