#include "f2sq/obstructions.hpp"

#include <sstream>

namespace f2sq {

const char* to_string(LadderSide s) { return s == LadderSide::phi ? "phi" : "psi"; }
const char* to_string(ChainSide s) { return s == ChainSide::P ? "P" : "Q"; }

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::not_two_squares: return "NotTwoSquares";
    case VerdictKind::two_squares: return "TwoSquares";
    case VerdictKind::unknown: break;
  }
  return "Unknown";
}

Coeff phi(const Word& w) { return taylor_coeff(substitute_x1(homology_image(w).p), 1); }

Coeff psi(const Word& w) { return taylor_coeff(substitute_y1(homology_image(w).q), 1); }

namespace {

std::vector<LadderEntry> ladder_of(const Laurent1& f, const Laurent1& g, unsigned depth) {
  std::vector<LadderEntry> entries;
  entries.reserve(depth);
  bool phi_open = true;
  bool psi_open = true;
  for (unsigned k = 1; k <= depth; ++k) {
    LadderEntry e{k, taylor_coeff(f, k), taylor_coeff(g, k), phi_open, psi_open};
    phi_open = phi_open && e.phi == 0;
    psi_open = psi_open && e.psi == 0;
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

std::vector<LadderEntry> ladder(const Word& w, unsigned depth) {
  const ChainPair c = homology_image(w);
  return ladder_of(substitute_x1(c.p), substitute_y1(c.q), depth);
}

std::string ObstructionHit::str() const {
  std::ostringstream os;
  os << to_string(side) << '_' << k << " = " << value;
  return os.str();
}

std::vector<ObstructionHit> first_obstruction(const std::vector<LadderEntry>& entries) {
  std::vector<ObstructionHit> hits;
  for (const auto& e : entries) {
    if (e.phi_defined && e.phi != 0) {
      hits.push_back({e.k, e.phi, LadderSide::phi});
      break;
    }
  }
  for (const auto& e : entries) {
    if (e.psi_defined && e.psi != 0) {
      hits.push_back({e.k, e.psi, LadderSide::psi});
      break;
    }
  }
  return hits;
}

std::vector<ObstructionHit> first_obstruction(const Word& w, unsigned depth) {
  return first_obstruction(ladder(w, depth));
}

std::optional<ObstructionHit> parity_obstruction(const Word& w, unsigned depth) {
  for (auto& hit : first_obstruction(w, depth)) {
    if (hit.odd()) return hit;
  }
  return std::nullopt;
}

FactorReport factor_criterion(const Word& w, ChainSide side) {
  const ChainPair c = homology_image(w);
  const Laurent2& source = side == ChainSide::P ? c.p : c.q;
  if (source.is_zero()) {
    throw CriterionInapplicable(std::string("factor criterion: ") + to_string(side) +
                                " is identically zero");
  }
  UnitStrip s = strip_units(source);
  Coeff h11 = eval11(s.h);
  return {s.k, s.l, std::move(s.h), std::move(h11), side};
}

namespace {

std::string factor_reason(const FactorReport& r) {
  std::ostringstream os;
  os << "factor criterion on " << to_string(r.source) << ": h(1,1) = " << r.h11
     << " is odd (k=" << r.k << ", l=" << r.l << ")";
  if (r.derived_extension()) os << " [derived extension]";
  return os.str();
}

}  // namespace

ObstructionReport analyze(const Word& w, const AnalysisOptions& options) {
  ObstructionReport r;
  r.word = w;
  r.expsums = abelianize(w);
  r.loop = r.expsums == ExponentSums{};
  r.chain = lift_chain(w);
  r.f = substitute_x1(r.chain.p);
  r.g = substitute_y1(r.chain.q);
  r.depth = options.depth;

  std::optional<std::string> obstruction;
  if (r.loop) {
    r.ladder = ladder_of(r.f, r.g, options.depth);
    r.first_obstruction = first_obstruction(r.ladder);
    for (const auto& hit : r.first_obstruction) {
      if (hit.odd()) {
        obstruction = hit.str() + " is odd";
        break;
      }
    }
    std::vector<ChainSide> sides;
    if (options.sides != SideSelection::Q) sides.push_back(ChainSide::P);
    if (options.sides != SideSelection::P) sides.push_back(ChainSide::Q);
    for (ChainSide side : sides) {
      FactorOutcome out{side, std::nullopt};
      const Laurent2& source = side == ChainSide::P ? r.chain.p : r.chain.q;
      if (!source.is_zero()) {
        out.report = factor_criterion(w, side);
        if (!obstruction && out.report->obstructs()) obstruction = factor_reason(*out.report);
      }
      r.factors.push_back(std::move(out));
    }
  }

  if (obstruction) {
    r.verdict = {VerdictKind::not_two_squares, *obstruction, std::nullopt};
    return r;
  }

  const unsigned bound = options.bound.value_or(static_cast<unsigned>(w.length()));
  r.search = search_two_squares(w, bound);
  if (r.search->witness) {
    r.verdict = {VerdictKind::two_squares, "witness a^2 b^2 found", r.search->witness};
    return r;
  }

  std::ostringstream why;
  if (!r.loop) {
    why << "exponent sums (" << r.expsums.x << ", " << r.expsums.y
        << ") are nonzero, so no obstruction applies";
  } else if (r.f.is_zero() && r.g.is_zero()) {
    why << "f and g vanish identically, so every ladder level is 0";
  } else {
    why << "no odd obstruction up to depth " << r.depth;
  }
  why << "; inconclusive at bound " << bound << " (no witness with |a| <= " << bound << ")";
  r.verdict = {VerdictKind::unknown, why.str(), std::nullopt};
  return r;
}

}  // namespace f2sq
