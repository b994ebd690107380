#include "f2sq/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "f2sq/obstructions.hpp"
#include "f2sq/report_json.hpp"

namespace f2sq::cli {

namespace {

enum class Format { text, json };

struct Config {
  std::string word_expr;
  unsigned depth = kDefaultDepth;
  std::optional<unsigned> bound;
  Format format = Format::text;
  SideSelection side = SideSelection::both;
  bool trace = false;
};

void print_ladder(std::ostream& out, const std::vector<LadderEntry>& entries) {
  out << "ladder (* marks levels defined on the kernel chain):\n";
  out << "  " << std::setw(3) << "k" << "  " << std::setw(14) << "phi_k" << "  "
      << std::setw(14) << "psi_k" << '\n';
  for (const auto& e : entries) {
    auto cell = [](const Coeff& v, bool defined) { return v.get_str() + (defined ? "*" : " "); };
    out << "  " << std::setw(3) << e.k << "  " << std::setw(14) << cell(e.phi, e.phi_defined)
        << "  " << std::setw(14) << cell(e.psi, e.psi_defined) << '\n';
  }
}

void print_hits(std::ostream& out, const std::vector<ObstructionHit>& hits, unsigned depth) {
  out << "first nonzero level: ";
  if (hits.empty()) {
    out << "none up to depth " << depth << '\n';
    return;
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (i > 0) out << ", ";
    out << hits[i].str() << (hits[i].odd() ? " (odd)" : " (even)");
  }
  out << '\n';
}

void print_report(std::ostream& out, const ObstructionReport& r) {
  out << "word: " << r.word.str() << '\n';
  out << "exponent sums: (" << r.expsums.x << ", " << r.expsums.y << ")\n";
  out << "P: " << to_string(r.chain.p) << '\n';
  out << "Q: " << to_string(r.chain.q) << '\n';
  if (!r.loop) {
    out << "not in the commutator subgroup; obstructions skipped\n";
  } else {
    out << "f(y) = P(1,y): " << to_string(r.f, 'y') << '\n';
    out << "g(x) = Q(x,1): " << to_string(r.g, 'x') << '\n';
    print_ladder(out, r.ladder);
    print_hits(out, r.first_obstruction, r.depth);
    if (r.f.is_zero() && r.g.is_zero()) out << "f and g are identically zero\n";
    for (const auto& fo : r.factors) {
      out << "factor criterion (" << to_string(fo.side)
          << (fo.side == ChainSide::Q ? ", derived extension" : "") << "): ";
      if (!fo.report) {
        out << "inapplicable, " << to_string(fo.side) << " = 0\n";
        continue;
      }
      out << "k=" << fo.report->k << " l=" << fo.report->l << " h=" << to_string(fo.report->h)
          << " h(1,1)=" << fo.report->h11 << (fo.report->obstructs() ? " (odd)" : " (even)")
          << '\n';
    }
  }
  if (r.search) {
    out << "search: checked " << r.search->checked << " candidates a with |a| <= "
        << r.search->bound << '\n';
  }
  out << "verdict: " << to_string(r.verdict.kind);
  if (r.verdict.witness) {
    out << " (a = " << r.verdict.witness->a.str() << ", b = " << r.verdict.witness->b.str()
        << ")\n";
  } else {
    out << " (" << r.verdict.reason << ")\n";
  }
}

int cmd_check(const Config& cfg, const Word& w, std::ostream& out) {
  AnalysisOptions opts;
  opts.depth = cfg.depth;
  opts.bound = cfg.bound;
  opts.sides = cfg.side;
  const ObstructionReport r = analyze(w, opts);
  if (cfg.format == Format::json) {
    out << report_json(r).dump(2) << '\n';
  } else {
    print_report(out, r);
  }
  return r.verdict.kind == VerdictKind::unknown ? kExitUnknown : kExitOk;
}

int cmd_ladder(const Config& cfg, const Word& w, std::ostream& out) {
  const auto entries = ladder(w, cfg.depth);
  const auto hits = first_obstruction(entries);
  if (cfg.format == Format::json) {
    Json j = Json::object();
    j["word"] = w.str();
    j["depth"] = cfg.depth;
    j["ladder"] = ladder_json(entries);
    j["first_obstruction"] = hits_json(hits);
    out << j.dump(2) << '\n';
  } else {
    out << "word: " << w.str() << '\n';
    print_ladder(out, entries);
    print_hits(out, hits, cfg.depth);
  }
  return kExitOk;
}

int cmd_chain(const Config& cfg, const Word& w, std::ostream& out) {
  const ChainPair c = lift_chain(w);
  const auto trace = lift_trace(w);
  if (cfg.format == Format::json) {
    out << chain_json(c, cfg.trace ? &trace : nullptr).dump(2) << '\n';
    return kExitOk;
  }
  out << "P = " << to_string(c.p) << '\n';
  out << "Q = " << to_string(c.q) << '\n';
  if (cfg.trace) {
    out << "trace:\n";
    for (const auto& pt : trace) out << '(' << pt.i << ',' << pt.j << ")\n";
  }
  return kExitOk;
}

int cmd_search(const Config& cfg, const Word& w, std::ostream& out) {
  const unsigned bound = cfg.bound.value_or(static_cast<unsigned>(w.length()));
  const SearchResult s = search_two_squares(w, bound);
  if (cfg.format == Format::json) {
    out << search_json(s).dump(2) << '\n';
  } else if (s.witness) {
    out << "found: a = " << s.witness->a.str() << ", b = " << s.witness->b.str() << " (checked "
        << s.checked << " candidates)\n";
  } else {
    out << "inconclusive at bound " << bound << ": no witness with |a| <= " << bound
        << " (checked " << s.checked << " candidates)\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Obstructions to products of two squares in the free group F2 = <x, y>", "f2sq"};
  app.require_subcommand(1);

  Config cfg;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  const std::map<std::string, SideSelection> sides{
      {"P", SideSelection::P}, {"Q", SideSelection::Q}, {"both", SideSelection::both}};

  auto add_word = [&](CLI::App* sub) {
    sub->add_option("word", cfg.word_expr, "word expression, e.g. \"[x^2,y]\"")->required();
    sub->add_option("--format", cfg.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_depth = [&](CLI::App* sub) {
    sub->add_option("--depth", cfg.depth, "ladder depth")->check(CLI::PositiveNumber);
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", cfg.bound, "max |a| for the witness search (default |word|)")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* check = app.add_subcommand("check", "run every criterion and the witness search");
  add_word(check);
  add_depth(check);
  add_bound(check);
  check->add_option("--side", cfg.side, "factor criterion coefficient: P, Q or both")
      ->transform(CLI::CheckedTransformer(sides));

  CLI::App* ladder_cmd = app.add_subcommand("ladder", "print the phi_k / psi_k ladder");
  add_word(ladder_cmd);
  add_depth(ladder_cmd);

  CLI::App* chain = app.add_subcommand("chain", "print the lift chain (P, Q)");
  add_word(chain);
  chain->add_flag("--trace", cfg.trace, "list visited lattice points");

  CLI::App* search = app.add_subcommand("search", "brute-force search for g = a^2 b^2");
  add_word(search);
  add_bound(search);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Word w;
  try {
    w = parse(cfg.word_expr);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n'
        << "  " << cfg.word_expr << '\n'
        << "  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(cfg, w, out);
    if (ladder_cmd->parsed()) return cmd_ladder(cfg, w, out);
    if (chain->parsed()) return cmd_chain(cfg, w, out);
    return cmd_search(cfg, w, out);
  } catch (const NotALoop& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace f2sq::cli
