#ifndef F2SQ_REPORT_JSON_HPP
#define F2SQ_REPORT_JSON_HPP

#include <optional>
#include <vector>

#include "json.hpp"

#include "f2sq/cover.hpp"
#include "f2sq/laurent.hpp"
#include "f2sq/obstructions.hpp"
#include "f2sq/oracle.hpp"

namespace f2sq {

/// Insertion-ordered so that dump() output has a stable key order.
using Json = nlohmann::ordered_json;

/// Integer when it fits in 64 bits, decimal string otherwise.
Json coeff_json(const Coeff& c);

/// [[i, j, c], ...] sorted by (i, j).
Json laurent_json(const Laurent2& p);
/// [[n, c], ...] sorted by n.
Json laurent_json(const Laurent1& f);

/// {"P": ..., "Q": ...} plus "trace": [[i, j], ...] when given.
Json chain_json(const ChainPair& c, const std::vector<LatticePoint>* trace = nullptr);

Json ladder_json(const std::vector<LadderEntry>& entries);
Json hits_json(const std::vector<ObstructionHit>& hits);
Json factor_json(const FactorOutcome& outcome);
Json search_json(const SearchResult& s);
Json report_json(const ObstructionReport& r);

}  // namespace f2sq

#endif  // F2SQ_REPORT_JSON_HPP
