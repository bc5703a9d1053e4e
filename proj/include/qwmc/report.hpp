#pragma once

#include <json.hpp>
#include <string>

#include "qwmc/classical.hpp"
#include "qwmc/driver.hpp"

namespace qwmc {

using Document = nlohmann::ordered_json;

/// Field names are fixed; key order is insertion order.
Document to_document(const QwmcResult& result, bool include_distribution);
Document to_document(const CountResult& result, bool include_distribution);
Document to_document(const McResult& result);

/// Copies the top-level fields of `source` into `target`.
void merge_into(Document& target, const Document& source);

/// One "key = value" line per top-level field; reals at 12 significant digits.
std::string to_text(const Document& doc);

}  // namespace qwmc
