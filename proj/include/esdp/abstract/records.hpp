// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <istream>
#include <string>
#include <vector>

#include "esdp/abstract/transaction.hpp"

namespace esdp {

struct RecordImport {
  std::vector<Transaction> transactions;
  /// Distinct unit paths in first-seen order.
  std::vector<std::string> unit_paths;
};

/// Reads pre-abstracted items, one JSON object per line:
///   {"kind":"MI","name":"f(arity=0):?","entity":"p.C.m()","line":7,
///    "unit":"p/C.java","block":"method","span":[5,9]}
/// Items sharing (unit, entity, block, span) form one transaction. Unit
/// paths are prefixed with "<unit_prefix>/" when the prefix is non-empty.
/// Unknown fields, missing fields, and lines outside the span are rejected
/// with RecordFormatError.
RecordImport import_records(std::istream& in, const std::string& unit_prefix);

}  // namespace esdp
