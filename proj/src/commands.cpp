#include "eulerclass/commands.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <random>
#include <sstream>

#include "eulerclass/errors.hpp"

namespace eulerclass::cli {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Characteristic parse_characteristic(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidCharacteristic("characteristic must be 0 or a prime, got '" + text + "'");
  std::uint64_t p = 0;
  try {
    p = std::stoull(text);
  } catch (const std::out_of_range&) {
    throw InvalidCharacteristic("characteristic '" + text + "' is out of range");
  }
  return Characteristic(p);
}

AnalysisReport analyze(const GroupFile& group, Characteristic chr, std::size_t cap) {
  const CrystGroup gamma = make_cryst(group.rank, group.generators, cap);
  const PointGroup& g = gamma.point_group();
  const std::uint64_t p = chr.value();

  std::vector<ElementRow> rows;
  std::optional<std::size_t> sl_order;
  if (gamma.rank() == 2) sl_order = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& x = g.elements()[i];
    const std::size_t ord = g.element_orders()[i];
    Integer d = det(x);
    if (sl_order && d == 1) ++*sl_order;
    rows.push_back({x, ord, std::move(d), det_one_minus(x), p == 0 || ord % p != 0});
  }
  std::sort(rows.begin(), rows.end(), [](const ElementRow& a, const ElementRow& b) {
    return a.order != b.order ? a.order < b.order : a.element.key() < b.element.key();
  });

  std::optional<std::uint64_t> lower, upper;
  if (p > 0) {
    lower = order_lower_bound(gamma, p);
    upper = order_upper_bound_p_part(gamma, p);
  }
  Lattice fixed = fixed_sublattice(gamma);
  const bool onto_z = !fixed.is_zero();

  return AnalysisReport{
      .group = group,
      .characteristic = p,
      .point_group_order = g.order(),
      .sl_order = sl_order,
      .action_kernel_order = gamma.action_kernel().order(),
      .fixed = std::move(fixed),
      .maps_onto_z = onto_z,
      .elements = std::move(rows),
      .finite = has_finite_order(gamma, chr),
      .lower_bound = lower,
      .upper_bound_p_part = upper,
      .result = exact_order(gamma, chr),
  };
}

void render_text(const AnalysisReport& r, std::ostream& out) {
  if (r.group.name) out << "group: " << *r.group.name << '\n';
  out << "rank: " << r.group.rank << '\n';
  out << "generators:";
  if (r.group.generators.empty()) out << " (none)";
  for (const auto& g : r.group.generators) out << ' ' << g.key();
  out << '\n';
  out << "characteristic: " << r.characteristic << '\n';
  out << "|G|: " << r.point_group_order << '\n';
  if (r.sl_order) out << "|G_1| (det 1 part): " << *r.sl_order << '\n';
  out << "action kernel order: " << r.action_kernel_order
      << " (C_Gamma(A) = A for a faithful split group, so Gamma-bar = G)\n";
  out << "fixed sublattice rank: " << r.fixed.rank() << '\n';
  if (!r.fixed.is_zero()) {
    out << "fixed sublattice basis:";
    for (const auto& v : r.fixed.basis) out << ' ' << to_string(v);
    out << '\n';
  }
  out << "maps onto Z: " << yes_no(r.maps_onto_z) << '\n';

  out << "elements:\n";
  out << "  " << std::left << std::setw(6) << "order" << std::setw(5) << "det" << std::setw(10) << "det(1-x)"
      << std::setw(11) << "p-regular" << "matrix\n";
  for (const auto& row : r.elements)
    out << "  " << std::setw(6) << row.order << std::setw(5) << row.determinant.get_str() << std::setw(10)
        << row.det_one_minus.get_str() << std::setw(11) << yes_no(row.p_regular) << row.element.key() << '\n';
  out << std::right;

  out << "finite order: " << yes_no(r.finite) << '\n';
  if (r.lower_bound) out << "lower bound: " << *r.lower_bound << '\n';
  if (r.upper_bound_p_part) out << "upper bound on p-part: " << *r.upper_bound_p_part << '\n';
  out << "verdict: " << r.result.verdict_string() << '\n';
  out << "provenance: " << join(r.result.provenance(), " -> ") << '\n';
}

nlohmann::json render_json(const AnalysisReport& r) {
  nlohmann::json doc = to_json(r.group);
  doc["characteristic"] = r.characteristic;
  doc["point_group_order"] = r.point_group_order;
  doc["sl_order"] = r.sl_order ? nlohmann::json(*r.sl_order) : nlohmann::json(nullptr);
  doc["action_kernel_order"] = r.action_kernel_order;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : r.fixed.basis) {
    nlohmann::json jv = nlohmann::json::array();
    for (const auto& x : v) jv.push_back(to_json(x));
    basis.push_back(std::move(jv));
  }
  doc["fixed_sublattice"] = {{"rank", r.fixed.rank()}, {"basis", std::move(basis)}};
  doc["maps_onto_z"] = r.maps_onto_z;
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& row : r.elements)
    elements.push_back({{"matrix", to_json(row.element)},
                        {"order", row.order},
                        {"det", to_json(row.determinant)},
                        {"det_one_minus", to_json(row.det_one_minus)},
                        {"p_regular", row.p_regular}});
  doc["elements"] = std::move(elements);
  doc["finite_order"] = r.finite;
  doc["lower_bound"] = r.lower_bound ? nlohmann::json(*r.lower_bound) : nlohmann::json(nullptr);
  doc["upper_bound_p_part"] = r.upper_bound_p_part ? nlohmann::json(*r.upper_bound_p_part) : nlohmann::json(nullptr);
  nlohmann::json verdict = {{"kind", std::string(to_string(r.result.verdict()))},
                            {"text", r.result.verdict_string()}};
  if (r.result.verdict() == Verdict::Known) verdict["order"] = r.result.order();
  if (r.result.verdict() == Verdict::Bounded) {
    verdict["lower"] = r.result.lower();
    verdict["upper_p_part"] = r.result.upper_p_part();
  }
  doc["verdict"] = std::move(verdict);
  doc["provenance"] = r.result.provenance();
  return doc;
}

int cmd_analyze(const std::string& path, const std::string& characteristic, bool json, std::size_t cap,
                std::ostream& out, std::ostream& err) {
  std::optional<Characteristic> chr;
  try {
    chr = parse_characteristic(characteristic);
  } catch (const InvalidCharacteristic& e) {
    err << "error: " << e.what() << '\n';
    return kBadCharacteristic;
  }
  GroupFile group;
  try {
    group = read_group_file(path);
  } catch (const Error& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kInputError;
  }
  std::optional<AnalysisReport> report;
  try {
    report = analyze(group, *chr, cap);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kGroupError;
  }
  if (json)
    out << render_json(*report).dump(2) << '\n';
  else
    render_text(*report, out);
  return kOk;
}

namespace {

constexpr std::array<std::uint64_t, 4> kCatalogCharacteristics{0, 2, 3, 5};

GroupFile group_file_of(const CatalogEntry& e) { return GroupFile{e.name, e.rank, e.generators}; }

nlohmann::json entry_json(const CatalogEntry& e) {
  nlohmann::json j = to_json(group_file_of(e));
  j["point_group_order"] = e.point_group_order;
  j["expected"] = {{"0", e.at_zero.to_string()},
                   {"2", e.at_two.to_string()},
                   {"3", e.at_three.to_string()},
                   {"other", e.at_other_prime.to_string()}};
  j["source"] = e.source;
  return j;
}

}  // namespace

int cmd_catalog(const std::optional<std::string>& name, const std::optional<std::string>& characteristic, bool json,
                std::ostream& out, std::ostream& err) {
  std::optional<Characteristic> chr;
  if (characteristic) {
    try {
      chr = parse_characteristic(*characteristic);
    } catch (const InvalidCharacteristic& e) {
      err << "error: " << e.what() << '\n';
      return kBadCharacteristic;
    }
  }

  if (name) {
    const CatalogEntry* entry = nullptr;
    try {
      entry = &catalog_lookup(*name);
    } catch (const UnknownName& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
    if (!chr) {
      if (json) {
        out << entry_json(*entry).dump(2) << '\n';
      } else {
        out << "group: " << entry->name << "\n|G|: " << entry->point_group_order << "\ngenerators:";
        for (const auto& g : entry->generators) out << ' ' << g.key();
        out << "\nexpected: p=0 " << entry->at_zero.to_string() << ", p=2 " << entry->at_two.to_string() << ", p=3 "
            << entry->at_three.to_string() << ", other p " << entry->at_other_prime.to_string()
            << "\nsource: " << entry->source << '\n';
      }
      return kOk;
    }
    const AnalysisReport report = analyze(group_file_of(*entry), *chr);
    const ExpectedVerdict& expected = entry->expected(chr->value());
    const bool agree = expected.matches(report.result);
    if (json) {
      out << nlohmann::json{{"analysis", render_json(report)},
                            {"expected", expected.to_string()},
                            {"computed", report.result.verdict_string()},
                            {"agree", agree}}
                 .dump(2)
          << '\n';
    } else {
      render_text(report, out);
      out << "expected: " << expected.to_string() << '\n';
      out << "computed: " << report.result.verdict_string() << '\n';
      out << (agree ? "AGREE" : "DISAGREE") << '\n';
    }
    return kOk;
  }

  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : catalog_entries()) {
      nlohmann::json j = entry_json(e);
      if (chr) {
        const auto r = analyze(group_file_of(e), *chr).result;
        j["computed"] = {{"characteristic", chr->value()},
                         {"verdict", r.verdict_string()},
                         {"agree", e.expected(chr->value()).matches(r)}};
      }
      rows.push_back(std::move(j));
    }
    out << rows.dump(2) << '\n';
    return kOk;
  }

  out << std::left << std::setw(6) << "name" << std::setw(5) << "|G|" << std::setw(10) << "p=0" << std::setw(10)
      << "p=2" << std::setw(10) << "p=3" << std::setw(10) << "other p";
  if (chr) out << std::setw(18) << ("computed p=" + std::to_string(chr->value())) << std::setw(10) << "agree";
  out << "generators\n";
  for (const auto& e : catalog_entries()) {
    out << std::setw(6) << e.name << std::setw(5) << e.point_group_order << std::setw(10) << e.at_zero.to_string()
        << std::setw(10) << e.at_two.to_string() << std::setw(10) << e.at_three.to_string() << std::setw(10)
        << e.at_other_prime.to_string();
    if (chr) {
      const auto r = analyze(group_file_of(e), *chr).result;
      out << std::setw(18) << r.verdict_string() << std::setw(10)
          << (e.expected(chr->value()).matches(r) ? "AGREE" : "DISAGREE");
    }
    std::vector<std::string> gens;
    for (const auto& g : e.generators) gens.push_back(g.key());
    out << (gens.empty() ? "(none)" : join(gens, " ")) << '\n';
  }
  out << std::right;
  return kOk;
}

int cmd_selftest(std::span<const CatalogEntry> entries, std::ostream& out, std::ostream& err) {
  std::size_t checked = 0, agree = 0;
  for (const auto& e : entries) {
    for (auto p : kCatalogCharacteristics) {
      ++checked;
      try {
        const OrderResult r = exact_order(make_cryst(e.rank, e.generators), Characteristic(p));
        if (e.expected(p).matches(r)) {
          ++agree;
        } else {
          err << "FAIL " << e.name << " p=" << p << ": expected " << e.expected(p).to_string() << ", computed "
              << r.verdict_string() << '\n';
        }
      } catch (const Error& ex) {
        err << "FAIL " << e.name << " p=" << p << ": " << ex.what() << '\n';
      }
    }
  }
  out << checked << " verdicts checked, " << agree << " agree\n";

  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 5);
  constexpr std::size_t kSamples = 200;
  std::size_t hold = 0;
  for (std::size_t s = 0; s < kSamples; ++s) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    const IntPoly cp = charpoly(m);
    bool ok = cp.coefficients.size() == n + 1 && cp.evaluate(1) == det_one_minus(m);
    for (std::size_t i = 0; ok && i <= n; ++i) {
      Integer t = trace(exterior_power(m, i));
      if (i % 2) t = -t;
      ok = cp.coefficients[n - i] == t;
    }
    if (ok)
      ++hold;
    else
      err << "FAIL charpoly identity for " << m.key() << '\n';
  }
  out << kSamples << " charpoly identities checked, " << hold << " hold\n";

  const bool pass = agree == checked && hold == kSamples;
  out << (pass ? "selftest passed" : "selftest FAILED") << '\n';
  return pass ? kOk : kSelftestFailed;
}

int cmd_selftest(std::ostream& out, std::ostream& err) { return cmd_selftest(catalog_entries(), out, err); }

}  // namespace eulerclass::cli
