#include "smooth/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "smooth/alphabet.hpp"
#include "smooth/bispecial.hpp"
#include "smooth/derivation.hpp"
#include "smooth/errors.hpp"
#include "smooth/generators.hpp"
#include "smooth/smoothness.hpp"
#include "smooth/spectral.hpp"
#include "smooth/verify.hpp"

namespace smooth {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Globals {
  std::string alphabet = "1,2";
  std::string format = "text";
  std::size_t max_length = 64;
  std::size_t max_generation = 20;
  std::size_t max_stream = 10'000'000;
  unsigned threads = 0;
  std::uint64_t seed = 20240611;
};

// Doubles rounded so that dumping, parsing and dumping again is stable.
double round12(double x) { return std::round(x * 1e12) / 1e12; }

std::string show(const Word& w) { return w.empty() ? "ε" : w.str(); }

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Letter parse_letter(const Alphabet& alph, const std::string& text) {
  if (text == "a") return alph.a();
  if (text == "b") return alph.b();
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used == text.size() && alph.contains(static_cast<Letter>(v))) {
      return static_cast<Letter>(v);
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("'" + text + "' is not a letter of " +
                              alph.str());
}

void check_stream_cap(std::size_t n, const Globals& g) {
  if (n > g.max_stream) {
    throw ResourceCapExceeded("stream length", n, g.max_stream);
  }
}

// ---------------------------------------------------------------- derive

struct DeriveArgs {
  std::string op = "f";
  std::string word;
  bool chain = false;
};

int cmd_derive(const DeriveArgs& args, const Alphabet& alph, Format fmt,
               std::ostream& out) {
  DerivationOp op = args.op == "r"       ? DerivationOp::R
                    : args.op == "huang" ? DerivationOp::Huang
                                         : DerivationOp::F;
  Word cur = Word::parse(alph, args.word);
  std::vector<Word> steps{cur};
  std::optional<NotDerivable> failure;
  std::size_t step = 0;
  while (!cur.empty() && (args.chain || step == 0)) {
    ++step;
    try {
      cur = derive(op, cur);
    } catch (const NotDerivable& e) {
      failure = e;
      break;
    }
    steps.push_back(cur);
  }

  if (fmt == Format::Json) {
    Json j;
    j["alphabet"] = alph.str();
    j["op"] = to_string(op);
    j["input"] = args.word;
    Json chain = Json::array();
    for (const auto& w : steps) chain.push_back(w.str());
    j["chain"] = chain;
    j["derivable"] = !failure.has_value();
    if (failure) {
      Json f;
      f["step"] = step;
      f["word"] = failure->word();
      if (failure->report().offending_run_index) {
        f["run"] = *failure->report().offending_run_index + 1;
      }
      if (failure->report().offending_exponent) {
        f["exponent"] = *failure->report().offending_exponent;
      }
      j["failure"] = f;
    }
    emit_json(out, j);
  } else {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (fmt == Format::Csv) {
        if (i == 0) out << "step,word\n";
        out << i << ',' << steps[i].str() << '\n';
      } else {
        out << i << ": " << show(steps[i]) << '\n';
      }
    }
    if (failure) {
      out << "step " << step << ": " << failure->what() << '\n';
    }
  }
  return failure ? kExitFailure : kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string kind = "f";
  std::string word;
};

int cmd_check(const CheckArgs& args, const Alphabet& alph, Format fmt,
              std::ostream& out) {
  Word u = Word::parse(alph, args.word);
  std::optional<std::vector<Word>> chain;
  if (args.kind == "r") {
    chain = r_chain(u);
  } else if (auto cert = certify_f_smooth(u)) {
    chain = cert->chain;
  }
  const bool member = chain.has_value();
  const std::string label = args.kind + "-smooth";

  if (fmt == Format::Json) {
    Json j;
    j["alphabet"] = alph.str();
    j["kind"] = args.kind;
    j["word"] = u.str();
    j["member"] = member;
    if (member) {
      j["height"] = chain->size() - 1;
      Json c = Json::array();
      for (const auto& w : *chain) c.push_back(w.str());
      j["chain"] = c;
    }
    emit_json(out, j);
  } else if (fmt == Format::Csv) {
    out << "word,kind,member,height\n"
        << u.str() << ',' << args.kind << ',' << (member ? "true" : "false")
        << ',' << (member ? std::to_string(chain->size() - 1) : "") << '\n';
  } else {
    out << show(u) << (member ? " is " : " is not ") << label;
    if (member) {
      out << ", height " << chain->size() - 1 << '\n';
      for (std::size_t i = 0; i < chain->size(); ++i) {
        out << "  " << i << ": " << show((*chain)[i]) << '\n';
      }
    } else {
      out << '\n';
    }
  }
  return member ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- streams

struct KappaArgs {
  std::string start;
  std::size_t length = 60;
  bool runs = false;
};

void emit_word(std::ostream& out, Format fmt, const Word& w, bool runs,
               Json meta) {
  if (fmt == Format::Json) {
    meta["length"] = w.size();
    meta["word"] = w.str();
    if (runs) {
      Json r = Json::array();
      for (const auto& run : run_factorize(w)) r.push_back(run.exponent);
      meta["runs"] = r;
    }
    emit_json(out, meta);
  } else if (fmt == Format::Csv) {
    out << "index,letter\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out << i << ',' << w[i] << '\n';
    }
  } else {
    out << (runs ? render_runs(run_factorize(w)) : w.str()) << '\n';
  }
}

int cmd_kappa(const KappaArgs& args, const Alphabet& alph, Format fmt,
              const Globals& g, std::ostream& out) {
  check_stream_cap(args.length, g);
  const Letter start =
      args.start.empty() ? alph.b() : parse_letter(alph, args.start);
  Word w = kappa_prefix(alph, start, args.length);
  Json meta;
  meta["alphabet"] = alph.str();
  meta["start"] = start;
  emit_word(out, fmt, w, args.runs, std::move(meta));
  return kExitOk;
}

struct PairArgs {
  std::size_t length = 67;
  bool runs = false;
};

int cmd_pair(const PairArgs& args, const Alphabet& alph, Format fmt,
             const Globals& g, std::ostream& out) {
  check_stream_cap(args.length, g);
  auto [x, y] = coupled_pair_prefix(alph, args.length);
  if (fmt == Format::Json) {
    Json j;
    j["alphabet"] = alph.str();
    j["length"] = args.length;
    j["first"] = x.str();
    j["second"] = y.str();
    emit_json(out, j);
  } else if (fmt == Format::Csv) {
    out << "member,word\n0," << x.str() << "\n1," << y.str() << '\n';
  } else if (args.runs) {
    out << render_runs(run_factorize(x)) << '\n'
        << render_runs(run_factorize(y)) << '\n';
  } else {
    out << x.str() << '\n' << y.str() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(std::size_t length, const Alphabet& alph, Format fmt,
                  const Globals& g, std::ostream& out) {
  EnumerationOptions opts;
  opts.max_length = g.max_length;
  opts.threads = g.threads;
  auto words = enumerate_f_smooth(alph, length, opts);
  if (fmt == Format::Json) {
    Json j;
    j["alphabet"] = alph.str();
    j["length"] = length;
    j["count"] = words.size();
    Json list = Json::array();
    for (const auto& w : words) list.push_back(w.str());
    j["words"] = list;
    emit_json(out, j);
  } else {
    if (fmt == Format::Csv) out << "word\n";
    for (const auto& w : words) out << show(w) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- complexity

struct ComplexityArgs {
  std::size_t max = 20;
  bool tree_only = false;
};

int cmd_complexity(const ComplexityArgs& args, const Alphabet& alph,
                   Format fmt, const Globals& g, std::ostream& out) {
  ComplexityOptions opts;
  opts.max_length = g.max_length;
  opts.threads = g.threads;
  ComplexityTable t = args.tree_only
                          ? tree_derived_complexity(alph, args.max, opts)
                          : exact_complexity(alph, args.max, opts);
  if (fmt == Format::Json) {
    Json j;
    j["alphabet"] = alph.str();
    j["provenance"] = to_string(t.provenance);
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json row;
      row["n"] = r.n;
      row["p"] = r.p;
      row["s"] = r.s;
      row["b"] = r.b;
      row["lower_bound"] = r.lower_bound;
      row["upper_bound"] = r.upper_bound;
      if (r.bispecial_sum) row["bispecial_sum"] = *r.bispecial_sum;
      rows.push_back(row);
    }
    j["rows"] = rows;
    emit_json(out, j);
  } else if (fmt == Format::Csv) {
    out << "n,p,s,b,lower_bound,upper_bound\n";
    for (const auto& r : t.rows) {
      out << r.n << ',' << r.p << ',' << r.s << ',' << r.b << ','
          << r.lower_bound << ',' << r.upper_bound << '\n';
    }
  } else {
    out << "# " << alph.str() << ' ' << to_string(t.provenance) << '\n';
    out << std::setw(4) << "n" << std::setw(10) << "p" << std::setw(8) << "s"
        << std::setw(6) << "b" << std::setw(12) << "1+n+p" << std::setw(12)
        << "1+n+3p" << '\n';
    for (const auto& r : t.rows) {
      out << std::setw(4) << r.n << std::setw(10) << r.p << std::setw(8) << r.s
          << std::setw(6) << r.b << std::setw(12) << r.lower_bound
          << std::setw(12) << r.upper_bound << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- tree

struct TreeArgs {
  std::string family = "T";
  std::size_t generation = 2;
  bool stats = false;
  bool verify = false;
};

int cmd_tree(const TreeArgs& args, const Alphabet& alph, Format fmt,
             const Globals& g, std::ostream& out) {
  auto family = parse_family(args.family);
  if (!family) {
    throw std::invalid_argument("unknown family '" + args.family +
                                "' (expected T, T1, T2, T3 or T4)");
  }
  TreeOptions opts;
  opts.max_generation = g.max_generation;
  opts.threads = g.threads;
  opts.verify_bispecial = args.verify;

  if (args.stats) {
    auto stats = generation_stats_upto(alph, *family, args.generation, opts);
    if (fmt == Format::Json) {
      Json j;
      j["alphabet"] = alph.str();
      j["family"] = to_string(*family);
      Json gens = Json::array();
      for (const auto& s : stats) {
        Json x;
        x["generation"] = s.generation;
        x["count"] = s.count;
        x["min_len"] = s.min_len;
        x["max_len"] = s.max_len;
        x["total_len"] = s.total_len;
        Json hist = Json::object();
        for (const auto& [len, n] : s.length_histogram) {
          hist[std::to_string(len)] = n;
        }
        x["length_histogram"] = hist;
        gens.push_back(x);
      }
      j["generations"] = gens;
      emit_json(out, j);
      return kExitOk;
    }
    // The last column compares L_(i-1) with l_i, reported without claim.
    if (fmt == Format::Csv) {
      out << "generation,count,min_len,max_len,total_len,prev_max_le_min\n";
    } else {
      out << std::setw(4) << "i" << std::setw(10) << "count" << std::setw(12)
          << "l_i" << std::setw(12) << "L_i" << std::setw(16) << "f(i)"
          << "  L_(i-1) <= l_i\n";
    }
    for (std::size_t i = 0; i < stats.size(); ++i) {
      const auto& s = stats[i];
      const std::string cmp =
          i == 0 ? "" : (stats[i - 1].max_len <= s.min_len ? "yes" : "no");
      if (fmt == Format::Csv) {
        out << s.generation << ',' << s.count << ',' << s.min_len << ','
            << s.max_len << ',' << s.total_len << ',' << cmp << '\n';
      } else {
        out << std::setw(4) << s.generation << std::setw(10) << s.count
            << std::setw(12) << s.min_len << std::setw(12) << s.max_len
            << std::setw(16) << s.total_len << "  " << cmp << '\n';
      }
    }
    return kExitOk;
  }

  auto nodes = tree_generation(alph, *family, args.generation, opts);
  if (fmt == Format::Json) {
    Json j;
    j["alphabet"] = alph.str();
    j["family"] = to_string(*family);
    j["generation"] = args.generation;
    j["multiplicity"] = family_multiplicity(*family);
    Json list = Json::array();
    for (const auto& n : nodes) list.push_back(n.word.str());
    j["words"] = list;
    emit_json(out, j);
  } else {
    if (fmt == Format::Csv) out << "word,length\n";
    for (const auto& n : nodes) {
      if (fmt == Format::Csv) {
        out << n.word.str() << ',' << n.word.size() << '\n';
      } else {
        out << show(n.word) << '\n';
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- exponents

struct ExponentArgs {
  bool reference_table = false;
  bool full_precision = false;
  int precision = 6;
};

Json exponent_json(const Exponent& e) {
  Json j;
  j["value"] = round12(e.value);
  j["formula"] = e.formula;
  return j;
}

int cmd_exponents(const ExponentArgs& args, const Alphabet& alph, Format fmt,
                  std::ostream& out) {
  if (args.reference_table) {
    auto table = comparison_table();
    if (fmt == Format::Json) {
      Json cols = Json::array();
      for (const auto& c : table) {
        Json x;
        x["alphabet"] = c.alphabet.str();
        x["rho"] = round12(c.rho.value);
        x["zeta"] = round12(c.zeta.value);
        x["beta"] = round12(c.beta.value);
        cols.push_back(x);
      }
      emit_json(out, cols);
    } else if (fmt == Format::Csv) {
      auto cell = [&](const TableCell& t) {
        return format_fixed(t.value, args.full_precision ? 10 : t.decimals);
      };
      out << "alphabet,rho,zeta,beta\n";
      for (const auto& c : table) {
        out << '"' << c.alphabet.str() << "\"," << cell(c.rho) << ','
            << cell(c.zeta) << ',' << cell(c.beta) << '\n';
      }
    } else {
      out << render_comparison_table(table, args.full_precision);
    }
    return kExitOk;
  }

  ExponentReport r = exponent_report(alph);
  std::vector<std::pair<std::string, const Exponent*>> fields = {
      {"rho", &r.rho}, {"alpha", &r.alpha}, {"beta", &r.beta}};
  if (r.zeta) fields.emplace_back("zeta", &*r.zeta);
  if (r.lambda) fields.emplace_back("lambda", &*r.lambda);
  fields.emplace_back("rho_prime", &r.rho_prime);
  fields.emplace_back("c", &r.c_constant);

  if (fmt == Format::Json) {
    Json j;
    j["alphabet"] = alph.str();
    j["parity"] = to_string(alph.parity());
    for (const auto& [name, e] : fields) j[name] = exponent_json(*e);
    emit_json(out, j);
  } else if (fmt == Format::Csv) {
    out << "name,value,formula\n";
    for (const auto& [name, e] : fields) {
      out << name << ',' << format_fixed(e->value, args.precision) << ",\""
          << e->formula << "\"\n";
    }
  } else {
    out << alph.str() << " (" << to_string(alph.parity()) << ")\n";
    for (const auto& [name, e] : fields) {
      out << "  " << std::left << std::setw(10) << name << std::right
          << format_fixed(e->value, args.precision) << "   " << e->formula
          << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  bool verbose = false;
};

int cmd_verify(const VerifyArgs& args, std::optional<Alphabet> alph,
               Format fmt, const Globals& g, std::ostream& out) {
  const std::vector<int> ids = suite_criteria(args.suite);
  VerifyOptions opts;
  opts.alphabet = alph;
  opts.threads = g.threads;
  opts.seed = g.seed;

  bool ok = true;
  Json results = Json::array();
  if (fmt == Format::Csv) out << "criterion,outcome,seconds,title\n";
  for (int id : ids) {
    CriterionResult r = run_criterion(id, opts);
    ok = ok && r.outcome != Outcome::Fail;
    if (fmt == Format::Json) {
      Json x;
      x["criterion"] = r.id;
      x["title"] = r.title;
      x["outcome"] = to_string(r.outcome);
      x["seconds"] = std::round(r.seconds * 1000) / 1000;
      x["budget_seconds"] = r.budget_seconds;
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["detail"] = c.detail;
        checks.push_back(cj);
      }
      x["checks"] = checks;
      results.push_back(x);
    } else if (fmt == Format::Csv) {
      out << r.id << ',' << to_string(r.outcome) << ','
          << format_fixed(r.seconds, 3) << ",\"" << r.title << "\"\n";
    } else {
      out << format_result(r, args.verbose) << std::flush;
    }
  }
  if (fmt == Format::Json) emit_json(out, results);
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Smooth words over binary integer alphabets: derivation, "
               "generators, bispecial trees, complexity and exponents."};
  app.name("smoothctl");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--alphabet,-A", g.alphabet, "alphabet as a,b")
      ->capture_default_str();
  app.add_option("--format,-f", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--max-length", g.max_length,
                 "cap on enumerated word length")
      ->capture_default_str();
  app.add_option("--max-generation", g.max_generation,
                 "cap on tree generations")
      ->capture_default_str();
  app.add_option("--max-stream", g.max_stream, "cap on stream prefix length")
      ->capture_default_str();
  app.add_option("--threads,-j", g.threads, "worker threads (0: all cores)")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized checks")
      ->capture_default_str();

  DeriveArgs derive_args;
  auto* derive_cmd = app.add_subcommand("derive", "derive a word");
  derive_cmd->add_option("--op", derive_args.op, "operator")
      ->check(CLI::IsMember({"f", "r", "huang"}))
      ->capture_default_str();
  derive_cmd->add_option("word", derive_args.word, "word to derive")
      ->required();
  derive_cmd->add_flag("--chain", derive_args.chain,
                       "derive repeatedly down to ε");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "membership test");
  check_cmd->add_option("--kind", check_args.kind, "f or r")
      ->check(CLI::IsMember({"f", "r"}))
      ->capture_default_str();
  check_cmd->add_option("word", check_args.word, "word to test")->required();

  KappaArgs kappa_args;
  auto* kappa_cmd = app.add_subcommand("kappa", "prefix of a kappa word");
  kappa_cmd->add_option("--start", kappa_args.start,
                        "first letter: a, b or its value (default: larger)");
  kappa_cmd->add_option("--length,-n", kappa_args.length, "prefix length")
      ->capture_default_str();
  kappa_cmd->add_flag("--runs", kappa_args.runs, "print the run factorization");

  PairArgs pair_args;
  auto* pair_cmd =
      app.add_subcommand("pair", "coupled pair over {1,b}, b odd");
  pair_cmd->add_option("--length,-n", pair_args.length, "prefix length")
      ->capture_default_str();
  pair_cmd->add_flag("--runs", pair_args.runs, "print the run factorizations");

  std::size_t enum_length = 6;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "all f-smooth words of a length");
  enum_cmd->add_option("--length,-n", enum_length, "word length")
      ->capture_default_str();

  ComplexityArgs complexity_args;
  auto* complexity_cmd =
      app.add_subcommand("complexity", "factor complexity table");
  complexity_cmd->add_option("--max", complexity_args.max, "largest n")
      ->capture_default_str();
  complexity_cmd->add_flag("--tree-only", complexity_args.tree_only,
                           "derive p(n) from the bispecial trees only");

  TreeArgs tree_args;
  auto* tree_cmd = app.add_subcommand("tree", "bispecial tree generations");
  tree_cmd->add_option("--family", tree_args.family, "T, T1, T2, T3 or T4")
      ->capture_default_str();
  tree_cmd->add_option("--generation,-i", tree_args.generation, "generation")
      ->capture_default_str();
  tree_cmd->add_flag("--stats", tree_args.stats,
                     "length statistics of generations 0..i");
  tree_cmd->add_flag("--verify", tree_args.verify,
                     "probe every listed word for bispeciality");

  ExponentArgs exp_args;
  auto* exp_cmd = app.add_subcommand("exponents", "growth exponents");
  exp_cmd->add_flag("--paper-table", exp_args.reference_table,
                    "nine-alphabet rho/zeta/beta comparison table");
  exp_cmd->add_flag("--full-precision", exp_args.full_precision,
                    "table cells with 10 decimals");
  exp_cmd->add_option("--precision", exp_args.precision, "decimals")
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run acceptance checks");
  verify_cmd->add_option("--suite", verify_args.suite, "suite or criterion id")
      ->capture_default_str();
  verify_cmd->add_flag("--verbose,-v", verify_args.verbose,
                       "list passing sub-checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Format fmt = g.format == "json"  ? Format::Json
                     : g.format == "csv" ? Format::Csv
                                         : Format::Text;
  try {
    const Alphabet alph = Alphabet::parse(g.alphabet);
    if (*derive_cmd) return cmd_derive(derive_args, alph, fmt, out);
    if (*check_cmd) return cmd_check(check_args, alph, fmt, out);
    if (*kappa_cmd) return cmd_kappa(kappa_args, alph, fmt, g, out);
    if (*pair_cmd) return cmd_pair(pair_args, alph, fmt, g, out);
    if (*enum_cmd) return cmd_enumerate(enum_length, alph, fmt, g, out);
    if (*complexity_cmd) {
      return cmd_complexity(complexity_args, alph, fmt, g, out);
    }
    if (*tree_cmd) return cmd_tree(tree_args, alph, fmt, g, out);
    if (*exp_cmd) return cmd_exponents(exp_args, alph, fmt, out);
    if (*verify_cmd) {
      // The alphabet narrows verify only when given explicitly.
      std::optional<Alphabet> scope;
      if (app.count("--alphabet") > 0) scope = alph;
      return cmd_verify(verify_args, scope, fmt, g, out);
    }
  } catch (const ResourceCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const InvalidFamily& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace smooth
