#pragma once

#include <iosfwd>
#include <span>
#include <json.hpp>

#include "crossunion/circle.hpp"
#include "crossunion/compression.hpp"
#include "crossunion/family.hpp"
#include "crossunion/search.hpp"
#include "crossunion/shadow.hpp"
#include "crossunion/verify.hpp"

namespace crossunion {

/// Key order is insertion order, so equal inputs serialize to equal bytes.
using Json = nlohmann::ordered_json;

// Exact numbers are written as decimal strings ("p/q" for rationals).
Json to_json(const Family& f);  // {n, k, size, text} with text in the family file format
Json to_json(const FamilyTuple& t);
Json to_json(const InequalityRecord& r);
Json to_json(const SlicesCheck& c);
Json to_json(const Example13Report& r);
Json to_json(const GridSummary& g);
Json to_json(const SearchResult& r);
Json to_json(const MainTheoremReport& r);
Json to_json(const Question41Report& r);
Json to_json(const CircleReport& r);
Json to_json(const ShadowReport& r);
Json to_json(const ShiftTrace& t);
Json sets_to_json(std::span<const SetMask> sets);

/// name,parameters,lhs,rhs,holds,strict with parameters as "key=value;...".
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const InequalityRecord& r);

}  // namespace crossunion
