#pragma once

// Command implementations behind the `eulerclass` executable. Each command
// writes its report to `out`, diagnostics to `err`, and returns the process
// exit code.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "eulerclass/catalog.hpp"
#include "eulerclass/crystal.hpp"
#include "eulerclass/euler.hpp"
#include "eulerclass/groupfile.hpp"

namespace eulerclass::cli {

enum ExitCode : int {
  kOk = 0,
  kSelftestFailed = 1,
  kInputError = 2,
  kGroupError = 3,
  kBadCharacteristic = 4,
};

/// One row of the per-element table.
struct ElementRow {
  IntMatrix element;
  std::size_t order;
  Integer determinant;
  Integer det_one_minus;
  bool p_regular;
};

struct AnalysisReport {
  GroupFile group;
  std::uint64_t characteristic = 0;
  std::size_t point_group_order = 0;
  std::optional<std::size_t> sl_order;  // rank 2 only
  std::size_t action_kernel_order = 1;
  Lattice fixed;
  bool maps_onto_z = false;
  std::vector<ElementRow> elements;  // sorted by (order, entries)
  bool finite = false;
  std::optional<std::uint64_t> lower_bound;  // p > 0
  std::optional<std::uint64_t> upper_bound_p_part;
  OrderResult result;
};

AnalysisReport analyze(const GroupFile& group, Characteristic p, std::size_t cap = kDefaultClosureCap);

void render_text(const AnalysisReport& r, std::ostream& out);
nlohmann::json render_json(const AnalysisReport& r);

/// Accepts decimal text; throws InvalidCharacteristic unless it is 0 or a
/// prime.
Characteristic parse_characteristic(const std::string& text);

int cmd_analyze(const std::string& path, const std::string& characteristic, bool json, std::size_t cap,
                std::ostream& out, std::ostream& err);

int cmd_catalog(const std::optional<std::string>& name, const std::optional<std::string>& characteristic, bool json,
                std::ostream& out, std::ostream& err);

/// Runs the catalog regression over characteristics {0, 2, 3, 5} plus a
/// sample of the charpoly/exterior-trace identity.
int cmd_selftest(std::span<const CatalogEntry> entries, std::ostream& out, std::ostream& err);
int cmd_selftest(std::ostream& out, std::ostream& err);

}  // namespace eulerclass::cli
