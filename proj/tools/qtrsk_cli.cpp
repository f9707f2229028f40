#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <map>

#include "qtrsk/insertion.hpp"
#include "qtrsk/sampler.hpp"
#include "qtrsk/verify.hpp"

using namespace qtrsk;
using nlohmann::json;

namespace {

std::vector<int> parse_values(const std::string& text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw Error(Errc::ParseError, "expected a positive integer at position " + std::to_string(start));
    out.push_back(std::stoi(text.substr(start, i - start)));
    if (i < text.size()) {
      if (text[i] != ',') throw Error(Errc::ParseError, "expected ',' at position " + std::to_string(i));
      ++i;
      if (i == text.size()) throw Error(Errc::ParseError, "trailing ',' at position " + std::to_string(i - 1));
    }
  }
  return out;
}

struct ModeFlags {
  bool jack = false;
  std::vector<std::string> eval;

  void add(CLI::App* app) {
    app->add_flag("--jack", jack, "Jack limit, values in Q(a)");
    app->add_option("--eval", eval, "evaluate at q0 t0")->expected(2);
  }
  Mode mode() const {
    if (jack && !eval.empty()) throw Error(Errc::InvalidArgument, "--jack and --eval are exclusive");
    if (jack) return Mode::alpha();
    if (!eval.empty()) return Mode::numeric(parse_rational(eval[0]), parse_rational(eval[1]));
    return Mode::qt();
  }
};

template <class O, class F>
void print_distribution(const Distribution<O>& d, F&& render, bool as_json) {
  if (as_json) {
    json out = json::array();
    for (auto& [o, v] : d.support()) out.push_back({{"outcome", render(o)}, {"value", to_string(v)}});
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (auto& [o, v] : d.support()) {
    std::string line;
    const json fields = render(o);
    for (auto& [k, x] : fields.items()) line += (line.empty() ? "" : "  ") + k + "=" + x.template get<std::string>();
    std::cout << line << "  :  " << to_string(v) << "\n";
  }
}

json render_pair(const TableauPair& pq) { return {{"P", to_string(pq.first)}, {"Q", to_string(pq.second)}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtrsk: exact (q,t) dual RSK growths"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  VerifyOptions vopts;
  int max_cells = 0, rows = 0, cols = 0;
  std::vector<std::string> veval;
  bool serial = false, list = false;
  verify->add_option("suite", suite, "suite name");
  verify->add_flag("--list", list, "list suite names");
  verify->add_option("--max-cells", max_cells, "size bound on frames and shapes");
  verify->add_option("--rows", rows, "maximum matrix rows");
  verify->add_option("--cols", cols, "maximum matrix columns");
  verify->add_option("--seed", vopts.seed, "seed for random parameters");
  verify->add_option("--eval", veval, "evaluation point q0 t0")->expected(2);
  verify->add_flag("--serial", serial, "run without threads");
  verify->add_flag("--json", as_json, "machine-readable output");

  auto* forward = app.add_subcommand("forward", "distribution of (P,Q) for a matrix");
  std::string matrix_text;
  ModeFlags fmode;
  forward->add_option("--matrix", matrix_text, "0/1 matrix, rows separated by ';'")->required();
  fmode.add(forward);
  forward->add_flag("--json", as_json);

  auto* backward = app.add_subcommand("backward", "distribution of A for a pair (P,Q)");
  std::string p_text, q_text;
  int brows = 0, bcols = 0;
  ModeFlags bmode;
  backward->add_option("--p", p_text, "semistandard tableau P")->required();
  backward->add_option("--q", q_text, "dual semistandard tableau Q")->required();
  backward->add_option("--rows", brows, "matrix rows (default: largest entry of P)");
  backward->add_option("--cols", bcols, "matrix columns (default: largest entry of Q)");
  bmode.add(backward);
  backward->add_flag("--json", as_json);

  auto* insert = app.add_subcommand("insert", "insert increasing values into a tableau");
  std::string t_text, values_text, rule_text = "qt";
  ModeFlags imode;
  insert->add_option("--tableau", t_text, "semistandard tableau")->required();
  insert->add_option("--values", values_text, "strictly increasing values, comma separated")->required();
  insert->add_option("--rule", rule_text, "qt, f_row or f_col")->check(CLI::IsMember({"qt", "f_row", "f_col"}));
  imode.add(insert);
  insert->add_flag("--json", as_json);

  auto* sample = app.add_subcommand("sample", "draw (P,Q) at numeric q, t");
  std::string sq = "1/2", st = "1/2";
  std::uint64_t sseed = 1;
  int count = 1;
  sample->add_option("--matrix", matrix_text, "0/1 matrix")->required();
  sample->add_option("--q", sq, "q0");
  sample->add_option("--t", st, "t0");
  sample->add_option("--seed", sseed, "seed");
  sample->add_option("--n", count, "number of samples")->check(CLI::PositiveNumber);
  sample->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (list) {
        for (auto& n : suite_names()) std::cout << n << "\n";
        return 0;
      }
      if (suite.empty()) throw Error(Errc::UnknownSuite, "no suite given; use --list");
      if (max_cells) vopts.max_cells = max_cells;
      if (rows) vopts.rows = rows;
      if (cols) vopts.cols = cols;
      if (!veval.empty()) vopts.eval = std::pair{parse_rational(veval[0]), parse_rational(veval[1])};
      vopts.execution = serial ? Execution::Serial : Execution::Parallel;
      VerificationReport r = run_suite(suite, vopts);
      if (as_json)
        std::cout << to_json(r).dump(2) << "\n";
      else
        std::cout << to_text(r);
      return r.ok() ? 0 : 1;
    }
    if (*forward) {
      Matrix01 a = parse_matrix(matrix_text);
      print_distribution(forward_distribution(a, fmode.mode()), render_pair, as_json);
      return 0;
    }
    if (*backward) {
      Tableau p = parse_tableau(p_text, Flavor::Ssyt), q = parse_tableau(q_text, Flavor::DualSsyt);
      int m = brows ? brows : std::max(1, p.max_entry()), n = bcols ? bcols : std::max(1, q.max_entry());
      print_distribution(backward_distribution(p, q, m, n, bmode.mode()),
                         [](const Matrix01& a) { return json{{"A", to_string(a)}}; }, as_json);
      return 0;
    }
    if (*insert) {
      Tableau t = parse_tableau(t_text, Flavor::Ssyt);
      GrowthRule rule = rule_text == "qt" ? GrowthRule::Qt : rule_text == "f_row" ? GrowthRule::FRow : GrowthRule::FCol;
      print_distribution(growth_insert(t, parse_values(values_text), rule, imode.mode()),
                         [](const Tableau& x) { return json{{"T", to_string(x)}}; }, as_json);
      return 0;
    }
    if (*sample) {
      Matrix01 a = parse_matrix(matrix_text);
      BigRational q0 = parse_rational(sq), t0 = parse_rational(st);
      check_sampling_parameters(q0, t0);
      SplitMix64 seeds(sseed);
      std::map<TableauPair, int> freq;
      for (int i = 0; i < count; ++i) ++freq[sample_forward(a, q0, t0, seeds.next())];
      auto exact = forward_distribution(a, Mode::numeric(q0, t0));
      json out = json::array();
      for (auto& [pq, v] : exact.support()) {
        int c = freq.count(pq) ? freq[pq] : 0;
        double p = v.numeric().get_d();
        json e = render_pair(pq);
        e["count"] = c;
        e["frequency"] = static_cast<double>(c) / count;
        e["exact"] = v.numeric().get_str();
        e["z"] = p > 0 && p < 1 ? (c - count * p) / std::sqrt(count * p * (1 - p)) : 0.0;
        out.push_back(e);
      }
      if (as_json) {
        std::cout << json{{"matrix", to_string(a)}, {"n", count}, {"seed", sseed}, {"outcomes", out}}.dump(2) << "\n";
      } else {
        std::printf("%-24s %-24s %8s %10s %-16s %7s\n", "P", "Q", "count", "freq", "exact", "z");
        for (auto& e : out)
          std::printf("%-24s %-24s %8d %10.5f %-16s %7.2f\n", e["P"].get<std::string>().c_str(),
                      e["Q"].get<std::string>().c_str(), e["count"].get<int>(), e["frequency"].get<double>(),
                      e["exact"].get<std::string>().c_str(), e["z"].get<double>());
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
