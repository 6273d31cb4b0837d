#include "specmon/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "specmon/decision.hpp"
#include "specmon/errors.hpp"

namespace specmon::cli {

  using nlohmann::json;

  namespace {

    struct Report {
      Verdict     verdict = Verdict::yes;
      bool        plain   = false;  // success rather than a yes/no answer
      json        details = json::object();
      std::string text;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot read '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    json words_json(WordList const& ws) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(w.text());
      }
      return out;
    }

    json group_json(GroupPresentation const& g) {
      json rels = json::array();
      for (auto const& r : g.relations) {
        std::vector<int> letters;
        for (std::size_t i = 0; i < r.size(); ++i) {
          letters.push_back(r[i]);
        }
        rels.push_back(letters);
      }
      return {{"rank", g.rank}, {"relations", rels}, {"text", g.to_string()}};
    }

    json simplified_json(SimplifiedGroup const& s) {
      json rels = json::array();
      for (auto const& r : s.relators) {
        rels.push_back(r.text());
      }
      return {{"rank", s.rank}, {"relators", rels}};
    }

    // Generator names g1, g2, ... for a word over the group's letters.
    std::string index_text(Word const& w) {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i > 0 ? " g" : "g") + std::to_string(w[i]);
      }
      return out;
    }

    json index_json(TupleIndex const& i) {
      return {{"alpha", i.alpha}, {"beta", i.beta}};
    }

    json families_json(CWordSets const& cs) {
      json out = json::array();
      for (auto const& f : cs.families) {
        out.push_back(words_json(f));
      }
      return out;
    }

    json flags_json(PropertyFlags const& f) {
      return {{"I", f.lengths_preserved},
              {"II", f.families_disjoint},
              {"III", f.no_overlaps}};
    }

    std::string flag_text(bool b) {
      return b ? "yes" : "no";
    }

    void need_words(CliConfig const& c, std::size_t n) {
      if (c.words.size() != n) {
        throw std::invalid_argument(c.command + " expects "
                                    + std::to_string(n) + " word argument(s)");
      }
    }

    Report analyze(CliConfig const& c) {
      auto p = parse_presentation(read_file(c.input));
      auto t = make_tuple(p, c.budget);
      std::ostringstream text;
      Report r;
      r.plain = true;
      r.details["presentation"] = p.to_string();
      r.details["b_words"]      = words_json(t.cwords);
      r.details["gamma"]        = group_json(t.gamma);
      r.details["backend"]      = std::string(to_string(t.oracle->backend()));
      text << "presentation: " << p.to_string() << "\n";
      text << "B-words:";
      for (auto const& w : t.cwords) {
        text << " " << w.text();
      }
      text << "\ngamma: " << t.gamma.to_string() << " (oracle "
           << to_string(t.oracle->backend()) << ")\n";

      auto cs    = generate_c_words(t);
      auto flags = check_properties(t, cs);
      auto index = tuple_index(t);
      r.details["families"]   = families_json(cs);
      r.details["index"]      = index_json(index);
      r.details["properties"] = flags_json(flags);
      for (std::size_t i = 0; i < cs.families.size(); ++i) {
        text << "c-words of " << t.cwords[i].text() << ":";
        for (auto const& w : cs.families[i]) {
          text << " " << w.text();
        }
        text << "\n";
      }
      text << "index: (" << index.alpha << ", " << index.beta << ")\n";
      text << "properties: I=" << flag_text(flags.lengths_preserved)
           << " II=" << flag_text(flags.families_disjoint)
           << " III=" << flag_text(flags.no_overlaps) << "\n";

      auto d     = distinguish(std::move(t), c.budget);
      json moves = json::array();
      for (auto const& m : d.moves) {
        moves.push_back({{"kind", std::string(to_string(m.kind))},
                         {"generator", m.family + 1},
                         {"replacement", m.replacement.text()},
                         {"before", index_json(m.before)},
                         {"after", index_json(m.after)}});
        text << "move " << to_string(m.kind) << ": generator " << m.family + 1
             << " -> " << m.replacement.text() << ", index (" << m.before.alpha
             << ", " << m.before.beta << ") -> (" << m.after.alpha << ", "
             << m.after.beta << ")\n";
      }
      auto const& dt = d.tuple;
      r.details["moves"]         = moves;
      r.details["distinguished"] = {
          {"presentation", dt.presentation.to_string()},
          {"c_words", words_json(dt.cwords)},
          {"gamma", group_json(dt.gamma)},
          {"families", families_json(d.cwords)},
          {"index", index_json(tuple_index(dt))}};
      text << "distinguished: " << dt.presentation.to_string() << "\n";
      text << "C-words:";
      for (auto const& w : dt.cwords) {
        text << " " << w.text();
      }
      text << "\ngamma: " << dt.gamma.to_string() << "\n";
      r.text = text.str();
      return r;
    }

    Report monoid_query(CliConfig const& c) {
      auto p = parse_presentation(read_file(c.input));
      bool unary = c.command == "inv";
      need_words(c, unary ? 1 : 2);
      auto x = parse_word(c.words[0], p.alphabet());
      auto y = unary ? Word() : parse_word(c.words[1], p.alphabet());
      auto decider = decide_presentation(p, c.budget);
      Report r;
      bool   answer = false;
      if (c.command == "wp") {
        answer = decider.words_equal(x, y);
        r.text = answer ? "equal" : "not equal";
      } else if (c.command == "divl") {
        answer = decider.divides_left(x, y);
        r.text = answer ? y.text() + " left-divides " + x.text()
                        : y.text() + " does not left-divide " + x.text();
      } else if (c.command == "divr") {
        answer = decider.divides_right(x, y);
        r.text = answer ? y.text() + " right-divides " + x.text()
                        : y.text() + " does not right-divide " + x.text();
      } else {
        answer = decider.is_invertible(x);
        r.text = answer ? "invertible" : "not invertible";
        if (answer) {
          auto m          = index_text(decider.mu(x));
          r.details["mu"] = m;
          r.text         += ", mu = " + m;
        }
      }
      r.verdict = answer ? Verdict::yes : Verdict::no;
      r.details["x"] = x.text();
      if (!unary) {
        r.details["y"] = y.text();
      }
      r.details["answer"] = answer;
      return r;
    }

    Report maxgroup(CliConfig const& c) {
      auto   p       = parse_presentation(read_file(c.input));
      auto   decider = decide_presentation(p, c.budget);
      auto&  g       = decider.maximal_subgroup();
      auto&  s       = decider.tuple().oracle->simplified();
      Report r;
      r.plain                 = true;
      r.details["group"]      = group_json(g);
      r.details["simplified"] = simplified_json(s);
      r.details["backend"] = std::string(to_string(decider.tuple().oracle->backend()));
      std::ostringstream text;
      text << "maximal subgroup: " << g.to_string() << "\n";
      text << "simplified: rank " << s.rank << ", relators:";
      for (auto const& rel : s.relators) {
        text << " " << rel.text();
      }
      if (s.relators.empty()) {
        text << " none";
      }
      r.text = text.str();
      return r;
    }

    SymmetrizedSet read_relators(CliConfig const& c, Alphabet* alphabet) {
      auto file = parse_group_relators(read_file(c.input));
      if (alphabet != nullptr) {
        *alphabet = file.alphabet;
      }
      return symmetrize(file.relators);
    }

    Report kcheck(CliConfig const& c) {
      auto   m      = read_relators(c, nullptr);
      auto   report = k_alpha_check(m, c.alpha);
      Report r;
      r.verdict                  = report.passed ? Verdict::yes : Verdict::no;
      r.details["alpha"]         = c.alpha.to_string();
      r.details["passed"]        = report.passed;
      r.details["relator_count"] = m.size();
      std::ostringstream text;
      text << (report.passed ? "passed" : "failed") << " at alpha "
           << c.alpha.to_string() << " (" << m.size() << " relators)";
      if (report.worst) {
        r.details["worst"] = {{"first", report.worst->first.text()},
                              {"second", report.worst->second.text()},
                              {"cancelled", report.worst->cancelled}};
        text << "; worst pair " << report.worst->first.text() << " * "
             << report.worst->second.text() << " cancels "
             << report.worst->cancelled;
      }
      r.text = text.str();
      return r;
    }

    Report dehn(CliConfig const& c) {
      need_words(c, 1);
      Alphabet alphabet;
      auto     m     = read_relators(c, &alphabet);
      auto     w     = parse_group_word(c.words[0], alphabet);
      auto     state = dehn_reduce(w, m);
      Report   r;
      r.plain = true;
      json log = json::array();
      std::ostringstream text;
      text << "fixpoint: " << state.word.text() << "\n";
      for (auto const& s : state.log) {
        log.push_back({{"rule", std::string(to_string(s.rule))},
                       {"position", s.position},
                       {"removed", s.removed.text()},
                       {"inserted", s.inserted.text()}});
        text << to_string(s.rule) << " at " << s.position << ": "
             << s.removed.text() << " -> " << s.inserted.text() << "\n";
      }
      r.details["fixpoint"] = state.word.text();
      r.details["log"]      = log;
      r.text                = text.str();
      return r;
    }

    Report gwp(CliConfig const& c) {
      need_words(c, 1);
      Alphabet alphabet;
      auto     m = read_relators(c, &alphabet);
      auto     w = parse_group_word(c.words[0], alphabet);
      IdentityOptions options{c.budget.budget, c.budget.max_states,
                              c.greendlinger};
      Report r;
      r.verdict = decide_identity(w, m, options);
      auto fix  = dehn_reduce(w, m).word;
      r.details["word"]         = w.text();
      r.details["fixpoint"]     = fix.text();
      r.details["greendlinger"] = c.greendlinger;
      if (!fix.empty()) {
        r.details["bound"] =
            certificate_bound(fix.size(), m.max_length()).str();
      }
      switch (r.verdict) {
        case Verdict::yes: r.text = "trivial"; break;
        case Verdict::no: r.text = "nontrivial"; break;
        default: r.text = "unknown (Dehn fixpoint " + fix.text() + ")";
      }
      return r;
    }

    int exit_for(Verdict v) {
      switch (v) {
        case Verdict::yes: return exit_yes;
        case Verdict::no: return exit_no;
        default: return exit_unknown;
      }
    }

    CliResult render(CliConfig const& c, Report const& r) {
      CliResult out;
      out.exit_code = exit_for(r.verdict);
      if (c.json) {
        json j{{"command", c.command},
               {"verdict", r.plain ? "success" : std::string(to_string(r.verdict))},
               {"details", r.details}};
        out.output = j.dump(2) + "\n";
      } else {
        out.output = r.text;
        if (!out.output.empty() && out.output.back() != '\n') {
          out.output += "\n";
        }
      }
      return out;
    }

    CliResult failure(CliConfig const& c, int code, std::string const& msg) {
      CliResult out;
      out.exit_code = code;
      if (c.json) {
        json j{{"command", c.command},
               {"verdict", "error"},
               {"details", {{"message", msg}, {"exit_code", code}}}};
        out.output = j.dump(2) + "\n";
      } else {
        out.output = "error: " + msg + "\n";
      }
      return out;
    }

  }  // namespace

  CliResult run(CliConfig const& c) {
    try {
      if (c.command == "analyze") {
        return render(c, analyze(c));
      }
      if (c.command == "wp" || c.command == "divl" || c.command == "divr"
          || c.command == "inv") {
        return render(c, monoid_query(c));
      }
      if (c.command == "maxgroup") {
        return render(c, maxgroup(c));
      }
      if (c.command == "kcheck") {
        return render(c, kcheck(c));
      }
      if (c.command == "dehn") {
        return render(c, dehn(c));
      }
      if (c.command == "gwp") {
        return render(c, gwp(c));
      }
      return failure(c, exit_usage, "unknown command '" + c.command + "'");
    } catch (std::invalid_argument const& e) {
      return failure(c, exit_usage, e.what());
    } catch (OracleInconclusive const& e) {
      return failure(c, exit_inconclusive, e.what());
    } catch (Error const& e) {
      return failure(c, exit_input, e.what());
    } catch (std::exception const& e) {
      return failure(c, exit_internal, e.what());
    }
  }

  int main(int argc, char const* const* argv, std::ostream& out,
           std::ostream& err) {
    CLI::App app{"Word problems for special monoids and small-cancellation "
                 "groups"};
    app.require_subcommand(1);
    CliConfig   config;
    std::string budget_text = "1000000";
    std::string alpha_text  = "2/11";

    auto add_common = [&](CLI::App* sub) {
      sub->add_option("file", config.input, "presentation file")->required();
      sub->add_option("--max-len", config.budget.max_length,
                      "word length cap for the search oracle");
      sub->add_option("--max-states", config.budget.max_states,
                      "state cap for the search oracle and coset enumeration");
      sub->add_option("--budget", budget_text,
                      "largest certificate bound worth searching");
      sub->add_flag("--json", config.json, "machine-readable report");
    };
    struct Spec {
      char const* name;
      char const* help;
      int         words;
    };
    Spec const specs[] = {
        {"analyze", "B-words, group, c-words, index and distinguished tuple", 0},
        {"wp", "decide X = Y", 2},
        {"divl", "decide whether Y left-divides X (X = Y Z)", 2},
        {"divr", "decide whether Y right-divides X (X = Z Y)", 2},
        {"inv", "decide whether X is invertible", 1},
        {"maxgroup", "maximal subgroup presentation", 0},
        {"kcheck", "small-cancellation class check", 0},
        {"dehn", "Dehn rewriting of W", 1},
        {"gwp", "decide W = 1 in a K(2/11) group", 1},
    };
    for (auto const& s : specs) {
      auto* sub = app.add_subcommand(s.name, s.help);
      add_common(sub);
      if (s.words > 0) {
        sub->add_option("words", config.words, "words ('-' is empty)")
            ->expected(s.words);
      }
      if (std::string(s.name) == "kcheck") {
        sub->add_option("--alpha", alpha_text, "threshold P/Q");
      }
      if (std::string(s.name) == "gwp") {
        sub->add_flag("--greendlinger", config.greendlinger,
                      "answer No at a nonempty Dehn fixpoint under C'(1/6)");
      }
    }
    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      std::ostringstream o, e2;
      int code = app.exit(e, o, e2);
      out << o.str();
      err << e2.str();
      return code == 0 ? 0 : exit_usage;
    }
    config.command = app.get_subcommands().front()->get_name();
    try {
      config.alpha         = Rational::parse(alpha_text);
      config.budget.budget = BigInt(budget_text);
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
    auto result = run(config);
    (result.exit_code >= exit_usage && !config.json ? err : out)
        << result.output;
    return result.exit_code;
  }

}  // namespace specmon::cli
