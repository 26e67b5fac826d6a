// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "eulerclass/catalog.hpp"
#include "eulerclass/euler.hpp"
#include "oracles.hpp"

using namespace eulerclass;

namespace {

const std::uint64_t kChars[] = {0, 2, 3, 5};

struct Outcome {
  bool pass;
  std::string detail;
};

CrystGroup planar(const CatalogEntry& e) { return make_cryst(2, e.generators); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome catalog_regression() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t agree = 0, total = 0;
  std::string mismatches;
  for (const auto& e : catalog_entries())
    for (auto p : kChars) {
      ++total;
      const OrderResult r = exact_order(planar(e), Characteristic(p));
      if (e.expected(p).matches(r))
        ++agree;
      else
        mismatches += " " + e.name + "/p=" + std::to_string(p) + ":" + r.verdict_string();
    }

  // the headline values, stated independently of the catalog table
  struct Spot {
    const char* name;
    std::uint64_t p;
    Verdict verdict;
    std::uint64_t order;
  };
  const Spot spots[] = {{"p4m", 2, Verdict::Known, 4}, {"p3m1", 3, Verdict::Known, 3}, {"p31m", 3, Verdict::Known, 3},
                        {"pmm", 2, Verdict::Known, 2}, {"p4", 2, Verdict::Known, 4},   {"p2", 2, Verdict::Known, 2}};
  bool spots_ok = true;
  for (const auto& s : spots) {
    const auto r = exact_order(planar(catalog_lookup(s.name)), Characteristic(s.p));
    spots_ok &= r.verdict() == s.verdict && r.order() == s.order;
  }
  for (auto p : kChars) {
    for (const char* name : {"pm", "cm"})
      spots_ok &= exact_order(planar(catalog_lookup(name)), Characteristic(p)).verdict() == Verdict::Trivial;
    for (const char* name : {"p6", "p6m"})
      spots_ok &= exact_order(planar(catalog_lookup(name)), Characteristic(p)).verdict() == Verdict::Infinite;
  }
  const double secs = seconds_since(t0);
  const bool pass = agree == total && total == 52 && spots_ok && secs < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu verdicts match, headline values %s, %.3f s", agree, total,
                spots_ok ? "ok" : "WRONG", secs);
  return {pass, buf + mismatches};
}

Outcome criterion_equivalence() {
  std::size_t agree = 0, total = 0;
  for (const auto& e : catalog_entries())
    for (auto p : kChars) {
      ++total;
      const CrystGroup g = planar(e);
      agree += has_finite_order(g, Characteristic(p)) == has_finite_order_by_exterior_traces(g, Characteristic(p));
    }
  return {agree == 52 && total == 52, std::to_string(agree) + "/" + std::to_string(total) + " agree"};
}

Outcome charpoly_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  const int samples = 250;
  int hold = 0;
  for (int s = 0; s < samples; ++s) {
    const std::size_t n = dim(rng);
    const IntMatrix m = oracle::random_matrix(rng, n, -3, 3);
    const IntPoly cp = charpoly(m);
    bool ok = cp.coefficients.size() == n + 1;
    for (std::size_t i = 0; ok && i <= n; ++i) {
      Integer expected = oracle::principal_minor_sum(m, i);
      Integer via_exterior = trace(exterior_power(m, i));
      if (i % 2) {
        expected = -expected;
        via_exterior = -via_exterior;
      }
      ok = cp.coefficients[n - i] == expected && cp.coefficients[n - i] == via_exterior;
    }
    IntMatrix one_minus = IntMatrix::identity(n) - m;
    ok = ok && det_one_minus(m) == cp.evaluate(1) && oracle::cofactor_det(one_minus) == cp.evaluate(1);
    hold += ok;
  }
  const double secs = seconds_since(t0);
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d/%d identities hold, %.3f s", hold, samples, secs);
  return {hold == samples && secs < 5.0, buf};
}

Outcome divisibility_bounds() {
  std::size_t known = 0, ok = 0;
  for (const auto& e : catalog_entries()) {
    const CrystGroup g = planar(e);
    for (std::uint64_t p : {2, 3, 5}) {
      const auto r = exact_order(g, Characteristic(p));
      if (r.verdict() != Verdict::Known) continue;
      ++known;
      const auto lo = order_lower_bound(g, p), hi = order_upper_bound_p_part(g, p);
      ok += r.order() % lo == 0 && r.order() <= hi;
    }
  }

  struct Fpf {
    CrystGroup gamma;
    std::uint64_t p;
  };
  const std::vector<Fpf> fpf{{planar(catalog_lookup("p2")), 2},
                             {planar(catalog_lookup("p3")), 3},
                             {planar(catalog_lookup("p4")), 2},
                             {make_cryst(4, std::vector<IntMatrix>{oracle::companion({1, 1, 1, 1})}), 5}};
  std::size_t fpf_ok = 0;
  for (const auto& c : fpf) {
    const std::uint64_t n = c.gamma.point_group().order();
    const auto r = exact_order(c.gamma, Characteristic(c.p));
    fpf_ok += r.verdict() == Verdict::Known && r.order() == n && order_lower_bound(c.gamma, c.p) == n &&
              order_upper_bound_p_part(c.gamma, c.p) == n;
  }
  return {known > 0 && ok == known && fpf_ok == fpf.size(),
          std::to_string(ok) + "/" + std::to_string(known) + " Known cases bounded, " + std::to_string(fpf_ok) + "/" +
              std::to_string(fpf.size()) + " fixed-point-free cases tight"};
}

Outcome p_part_decomposition() {
  std::size_t checked = 0, ok = 0;
  for (const auto& e : catalog_entries()) {
    const PointGroup g = PointGroup::closure(2, e.generators);
    for (const auto& x : g.elements())
      for (std::uint64_t p : {2, 3, 5}) {
        ++checked;
        const auto d = p_decompose(x, p);
        const auto op = element_order(d.p_part), oq = element_order(d.p_prime_part);
        ok += oracle::naive_mul(d.p_part, d.p_prime_part) == x && oracle::naive_mul(d.p_prime_part, d.p_part) == x &&
              is_p_power(op, p) && std::gcd(oq, std::size_t{p}) == 1 && op * oq == element_order(x);
      }
  }
  return {ok == checked, std::to_string(ok) + "/" + std::to_string(checked) + " decompositions valid"};
}

Outcome fixed_sublattice_rule() {
  std::size_t checked = 0, trivial = 0;
  auto run = [&](const CrystGroup& gamma) {
    if (!maps_onto_z(gamma)) return;
    for (auto p : kChars) {
      ++checked;
      trivial += exact_order(gamma, Characteristic(p)).verdict() == Verdict::Trivial;
    }
  };
  std::size_t groups = 0;
  for (const char* name : {"p1", "pm", "cm"}) {
    run(planar(catalog_lookup(name)));
    ++groups;
  }
  std::mt19937_64 rng(6);
  for (int s = 0; s < 65; ++s) {
    const auto& e = catalog_entries()[static_cast<std::size_t>(s) % catalog_entries().size()];
    const auto [u, u_inv] = oracle::random_unimodular(rng, 3, 6);
    std::vector<IntMatrix> gens;
    for (const auto& g : e.generators)
      gens.push_back(oracle::naive_mul(oracle::naive_mul(u, oracle::block_diag(g, IntMatrix::identity(1))), u_inv));
    const CrystGroup gamma = make_cryst(3, gens);
    // the block form fixes the last basis vector, so this must hold
    if (!maps_onto_z(gamma)) return {false, "rank-3 block example without fixed vector"};
    run(gamma);
    ++groups;
  }
  return {checked == trivial && checked == groups * 4,
          std::to_string(trivial) + "/" + std::to_string(checked) + " Trivial over " + std::to_string(groups) +
              " groups"};
}

Outcome crystallographic_restriction() {
  const std::set<std::size_t> allowed{1, 2, 3, 4, 6};
  std::size_t elements = 0, bad = 0;
  for (const auto& e : catalog_entries()) {
    try {
      const PointGroup g = PointGroup::closure(2, e.generators, kDefaultClosureCap);
      for (auto ord : g.element_orders()) {
        ++elements;
        bad += allowed.count(ord) == 0;
      }
      // the cap is never approached
      if (g.order() > kDefaultClosureCap) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(elements) + " elements, " + std::to_string(bad) + " violations"};
}

Outcome order_divisor_formula() {
  std::size_t grid = 0, ok = 0;
  for (long delta : {2, 3, 4, 8, 9, 16})
    for (long d : {1, 2, 3, 4}) {
      ++grid;
      ok += order_divisor(delta, d) == delta / std::gcd(delta, d);
    }
  std::size_t cases_ok = 0, cases = 0;
  for (const auto& [name, p] : std::vector<std::pair<const char*, std::uint64_t>>{{"p2", 2}, {"p3", 3}, {"p4", 2}}) {
    ++cases;
    const CrystGroup g = planar(catalog_lookup(name));
    const Integer n(static_cast<unsigned long>(g.point_group().order()));
    cases_ok += order_divisor(n, 1) == static_cast<unsigned long>(order_lower_bound(g, p));
  }
  return {ok == grid && cases_ok == cases, std::to_string(ok) + "/" + std::to_string(grid) + " grid points, " +
                                             std::to_string(cases_ok) + "/" + std::to_string(cases) +
                                             " group-algebra cases equal lower bound"};
}

Outcome subgroup_oracle() {
  std::size_t groups = 0, ok = 0, d4 = 0;
  for (const auto& e : catalog_entries()) {
    const PointGroup g = PointGroup::closure(2, e.generators);
    if (g.order() > 8) continue;
    ++groups;
    const auto count = all_subgroups(g).size();
    ok += count == oracle::brute_force_subgroup_count(g);
    if (e.name == "p4m") d4 = count;
  }
  return {ok == groups && d4 == 10, std::to_string(ok) + "/" + std::to_string(groups) +
                                        " point groups match brute force, D4 has " + std::to_string(d4)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"catalog regression", catalog_regression},
      {"finiteness criterion equivalence", criterion_equivalence},
      {"charpoly identity", charpoly_identity},
      {"divisibility bounds consistency", divisibility_bounds},
      {"p-part decomposition", p_part_decomposition},
      {"fixed sublattice forces Trivial", fixed_sublattice_rule},
      {"crystallographic restriction", crystallographic_restriction},
      {"order divisor formula", order_divisor_formula},
      {"subgroup enumeration vs brute force", subgroup_oracle},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
