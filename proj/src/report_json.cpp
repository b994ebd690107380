#include "f2sq/report_json.hpp"

namespace f2sq {

Json coeff_json(const Coeff& c) {
  if (mpz_fits_slong_p(c.get_mpz_t())) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

Json laurent_json(const Laurent2& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.i, e.j, coeff_json(c)}));
  return out;
}

Json laurent_json(const Laurent1& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({e, coeff_json(c)}));
  return out;
}

Json chain_json(const ChainPair& c, const std::vector<LatticePoint>* trace) {
  Json out = Json::object();
  out["P"] = laurent_json(c.p);
  out["Q"] = laurent_json(c.q);
  if (trace != nullptr) {
    Json pts = Json::array();
    for (const auto& pt : *trace) pts.push_back(Json::array({pt.i, pt.j}));
    out["trace"] = std::move(pts);
  }
  return out;
}

Json ladder_json(const std::vector<LadderEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    Json row = Json::object();
    row["k"] = e.k;
    row["phi"] = coeff_json(e.phi);
    row["psi"] = coeff_json(e.psi);
    row["phi_defined"] = e.phi_defined;
    row["psi_defined"] = e.psi_defined;
    out.push_back(std::move(row));
  }
  return out;
}

Json hits_json(const std::vector<ObstructionHit>& hits) {
  Json out = Json::array();
  for (const auto& h : hits) {
    Json row = Json::object();
    row["k"] = h.k;
    row["value"] = coeff_json(h.value);
    row["side"] = to_string(h.side);
    out.push_back(std::move(row));
  }
  return out;
}

Json factor_json(const FactorOutcome& outcome) {
  Json out = Json::object();
  out["side"] = to_string(outcome.side);
  out["paper_stated"] = outcome.side == ChainSide::P;
  out["applicable"] = outcome.report.has_value();
  if (outcome.report) {
    out["k"] = outcome.report->k;
    out["l"] = outcome.report->l;
    out["h"] = laurent_json(outcome.report->h);
    out["h11"] = coeff_json(outcome.report->h11);
  }
  return out;
}

Json search_json(const SearchResult& s) {
  Json out = Json::object();
  out["found"] = s.witness.has_value();
  out["a"] = s.witness ? Json(s.witness->a.str()) : Json(nullptr);
  out["b"] = s.witness ? Json(s.witness->b.str()) : Json(nullptr);
  out["checked"] = s.checked;
  out["bound"] = s.bound;
  return out;
}

Json report_json(const ObstructionReport& r) {
  Json out = Json::object();
  out["word"] = r.word.str();
  out["expsums"] = Json::array({r.expsums.x, r.expsums.y});
  out["P"] = laurent_json(r.chain.p);
  out["Q"] = laurent_json(r.chain.q);
  out["f"] = laurent_json(r.f);
  out["g"] = laurent_json(r.g);
  out["depth"] = r.depth;
  out["ladder"] = ladder_json(r.ladder);
  out["first_obstruction"] = hits_json(r.first_obstruction);
  Json factors = Json::array();
  for (const auto& f : r.factors) factors.push_back(factor_json(f));
  out["factor"] = std::move(factors);
  out["search"] = r.search ? search_json(*r.search) : Json(nullptr);
  Json verdict = Json::object();
  verdict["kind"] = to_string(r.verdict.kind);
  if (r.verdict.witness) {
    Json w = Json::object();
    w["a"] = r.verdict.witness->a.str();
    w["b"] = r.verdict.witness->b.str();
    verdict["witness"] = std::move(w);
  } else {
    verdict["reason"] = r.verdict.reason;
  }
  out["verdict"] = std::move(verdict);
  return out;
}

}  // namespace f2sq
