// Command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 malformed word, 3 length mismatch,
// 4 unknown variant, 5 table length out of range, 6 other invalid argument,
// 70 internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include "penney/penney.hpp"

namespace {

using namespace penney;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_word: return 2;
    case ErrorKind::length_mismatch: return 3;
    case ErrorKind::unknown_variant: return 4;
    case ErrorKind::oversize: return 5;
    case ErrorKind::invalid_argument: return 6;
    case ErrorKind::internal: return 70;
  }
  return 70;
}

struct Options {
  std::string a, b;
  std::string variant = "classic";
  std::string format = "text";
  std::string graph = "best";
  int n = 3;
  std::size_t terms = 20;
  std::size_t max_length = 8;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  bool all = false;
  bool approx = false;
};

std::size_t table_length(int n) {
  if (n < static_cast<int>(min_table_length) || n > static_cast<int>(max_table_length))
    require_table_length(n < 0 ? 0 : static_cast<std::size_t>(n));
  return static_cast<std::size_t>(n);
}

unsigned worker_count(unsigned requested) {
  return requested ? requested : std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact win/loss/tie probabilities for Penney's game and its variants"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };
  auto add_variant = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--variant", o.variant,
                                "classic, head_start, post_a_bobalyptic, second_occurrence, "
                                "kth_occurrence:K, two_coin, no_flippancy, blended");
    if (required) opt->required();
  };

  auto* odds = app.add_subcommand("odds", "outcome distribution and odds for one pair");
  odds->add_option("alice", o.a, "Alice's word")->required();
  odds->add_option("bob", o.b, "Bob's word")->required();
  add_variant(odds, false);
  add_format(odds);

  auto* table = app.add_subcommand("table", "all pairs of words of length n");
  add_variant(table, true);
  table->add_option("--n", o.n, "word length")->required();
  table->add_flag("--all", o.all, "show every Alice word, not only those starting with H");
  table->add_flag("--approx", o.approx,
                  "two-coin only: add the class table rounded to two significant digits");
  table->add_option("--workers", o.workers, "threads (default: all cores)");
  add_format(table);

  auto* best = app.add_subcommand("best", "Bob's best choice against each Alice word");
  add_variant(best, true);
  best->add_option("--n", o.n, "word length")->required();
  best->add_flag("--all", o.all, "every Alice word, not only those starting with H");
  add_format(best);

  auto* wait = app.add_subcommand("waittime", "expected wait time and leading number");
  wait->add_option("word", o.a)->required();
  add_format(wait);

  auto* seq = app.add_subcommand("sequence", "first-timer sequence of a word");
  seq->add_option("word", o.a)->required();
  seq->add_option("--terms", o.terms, "number of terms (default 20)");
  add_format(seq);

  auto* cyc = app.add_subcommand("cycles", "non-transitive cycles");
  add_variant(cyc, true);
  cyc->add_option("--n", o.n, "word length")->required();
  cyc->add_option("--graph", o.graph, "best (best-response arcs) or beats (win > 1/2 arcs)")
      ->check(CLI::IsMember({"best", "beats"}));
  cyc->add_option("--max-length", o.max_length, "longest cycle to enumerate (default 8)");
  add_format(cyc);

  auto* anom = app.add_subcommand("anomalies", "longer expected wait yet more likely to win");
  add_variant(anom, true);
  anom->add_option("--n", o.n, "word length")->required();
  anom->add_flag("--all", o.all, "every Alice word, not only those starting with H");
  add_format(anom);

  auto* play = app.add_subcommand("play", "trace a No-Flippancy game");
  play->add_option("alice", o.a)->required();
  play->add_option("bob", o.b)->required();
  add_format(play);

  auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo estimate");
  sim->add_option("alice", o.a)->required();
  sim->add_option("bob", o.b)->required();
  add_variant(sim, true);
  sim->add_option("--trials", o.trials, "number of games")->required();
  sim->add_option("--seed", o.seed, "64-bit seed")->required();
  sim->add_option("--workers", o.workers, "threads (default: all cores)");
  add_format(sim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const OutputFormat fmt = parse_format(o.format);
    std::ostream& out = std::cout;

    if (odds->parsed()) {
      const auto v = parse_variant(o.variant);
      const auto a = BinaryWord::parse(o.a), b = BinaryWord::parse(o.b);
      out << render::odds(v, a, b, evaluate(v, a, b), fmt);
    } else if (table->parsed()) {
      const auto v = parse_variant(o.variant);
      const auto t = full_table(v, table_length(o.n), worker_count(o.workers));
      if (fmt == OutputFormat::json) {
        out << render::table_json(t);
      } else if (fmt == OutputFormat::csv) {
        out << render::table_csv(t);
      } else {
        out << render::table_text(t, o.all);
        if (v.tag == VariantTag::two_coin) {
          const auto grouped = group_by_correlation(t);
          out << "\nby autocorrelation class (cells: Bob win, Alice win, tie)\n"
              << render::class_table_text(grouped);
          if (o.approx)
            out << "\napproximate\n" << render::class_table_text(grouped, 2);
        }
      }
    } else if (best->parsed()) {
      const auto v = parse_variant(o.variant);
      out << render::best_choices(v, best_choice_table(v, table_length(o.n), o.all), fmt);
    } else if (wait->parsed()) {
      out << render::wait_time(BinaryWord::parse(o.a), fmt);
    } else if (seq->parsed()) {
      const auto w = BinaryWord::parse(o.a);
      if (o.terms > 4096)
        throw Error(ErrorKind::oversize, "at most 4096 terms");
      const auto s = first_timer_sequence(w, std::max(o.terms, w.size()));
      const bool matches = generating_function_coefficients(w, s.size()) == s.terms;
      out << render::sequence(s, matches, fmt);
    } else if (cyc->parsed()) {
      const auto v = parse_variant(o.variant);
      const auto t = full_table(v, table_length(o.n));
      const auto g = o.graph == "beats" ? beats_graph(t) : best_response_graph(t);
      out << render::cycles(find_cycles(g, o.max_length), fmt);
    } else if (anom->parsed()) {
      const auto v = parse_variant(o.variant);
      out << render::anomalies(wait_time_anomalies(v, table_length(o.n), o.all), fmt);
    } else if (play->parsed()) {
      const auto a = BinaryWord::parse(o.a), b = BinaryWord::parse(o.b);
      out << render::play(a, b, no_flippancy_play(a, b), fmt);
    } else if (sim->parsed()) {
      const auto v = parse_variant(o.variant);
      const auto a = BinaryWord::parse(o.a), b = BinaryWord::parse(o.b);
      out << render::simulation(simulate(v, a, b, o.trials, o.seed, worker_count(o.workers)),
                                fmt);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "penney: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "penney: internal error: " << e.what() << "\n";
    return 70;
  }
}
