// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "esdp/abstract/transaction.hpp"
#include "esdp/abstract/type_resolver.hpp"
#include "esdp/common/source_unit.hpp"

namespace esdp {

struct UnitReport {
  std::string unit_path;
  bool degraded = false;
  std::vector<std::string> warnings;
  std::size_t method_bodies = 0;
  std::size_t transactions = 0;
};

struct AbstractionResult {
  /// Units in input order; within a unit, build_transactions order.
  std::vector<Transaction> transactions;
  std::vector<UnitReport> units;
  /// Methods and constructors that were parsed with a body.
  std::size_t method_bodies = 0;
  std::size_t item_count = 0;
};

/// Tokenize, parse, index declarations corpus-wide, extract items, and group
/// them into transactions. `workers` > 1 parses and extracts files on that
/// many threads; the result is identical to the serial run.
AbstractionResult abstract_units(const std::vector<SourceUnit>& units, const DefaultTypeTable& defaults,
                                 std::size_t workers = 1);

}  // namespace esdp
