#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lndt/checker.hpp"
#include "lndt/corpus.hpp"
#include "lndt/fit.hpp"
#include "lndt/generators.hpp"
#include "lndt/nbp.hpp"
#include "lndt/parse.hpp"
#include "lndt/php.hpp"
#include "lndt/proof_text.hpp"
#include "lndt/search.hpp"
#include "lndt/sim.hpp"

using namespace lndt;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

json proof_report(const Proof& p, double wall_ms) {
  json j;
  j["schema"] = kSchema;
  j["lines"] = p.lines.size();
  j["tokens"] = proof_size(p);
  j["wall_ms"] = wall_ms;
  j["rule_histogram"] = rule_histogram(p);
  return j;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Assignment parse_assignment(const std::string& text) {
  Assignment a;
  for (const std::string& part : split_top_level(text, ',')) {
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("assignment entry '" + part + "' needs var=0|1");
    std::string v = trim(part.substr(eq + 1));
    if (v != "0" && v != "1") throw InputError("assignment value must be 0 or 1 in '" + part + "'");
    a.set(parse_var(trim(part.substr(0, eq))), v == "1");
  }
  return a;
}

Word iota(int n) {
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(static_cast<Var>(i));
  return w;
}

Proof scaling_instance(const std::string& gen, int n) {
  if (gen == "php") return gen_php(n);
  if (gen == "identity") return gen_identity(thr(iota(n), (n + 1) / 2));
  if (gen == "symmetry") {
    Word w = iota(n), r(w.rbegin(), w.rend());
    return gen_symmetry(w, r, (n + 1) / 2)[0];
  }
  if (gen == "merge") {
    Word w = iota(n);
    return gen_merge(Word(w.begin(), w.begin() + n / 2), Word(w.begin() + n / 2, w.end()), 1, 1);
  }
  if (gen == "two-in-hole") return gen_two_in_hole(iota(n));
  throw InputError("unknown generator '" + gen + "' (php, identity, symmetry, merge, two-in-hole)");
}

int cmd_check(const std::vector<std::string>& files, const std::string& axioms, const std::string& dialect,
              unsigned jobs, bool sound, int cap) {
  auto one = [&](const std::string& f) -> std::pair<int, std::string> {
    Proof p;
    try {
      p = parse_proof(read_file(f));
      if (!axioms.empty()) p.axioms.merge(parse_axiom_file(read_file(axioms)));
      if (!dialect.empty()) p.dialect = Dialect::parse(dialect);
    } catch (const std::exception& e) {
      return {2, f + ": " + e.what()};
    }
    CheckResult r = check_proof(p);
    if (!r) return {1, f + ": " + r.message()};
    if (sound) {
      SoundnessReport s = check_soundness(p, cap);
      if (!s.ok) return {1, f + ": line L" + std::to_string(s.line + 1) + " is not valid"};
      if (s.skipped)
        return {0, f + ": ok, " + std::to_string(s.skipped) + " lines above the oracle cap not re-validated"};
    }
    return {0, f + ": ok (" + std::to_string(p.lines.size()) + " lines, " + std::to_string(proof_size(p)) + " tokens)"};
  };
  std::vector<std::pair<int, std::string>> res(files.size());
  unsigned lanes = std::max(1u, jobs);
  for (std::size_t base = 0; base < files.size(); base += lanes) {
    std::vector<std::future<std::pair<int, std::string>>> fs;
    for (std::size_t i = base; i < files.size() && i < base + lanes; ++i) fs.push_back(std::async(std::launch::async, one, files[i]));
    for (std::size_t i = 0; i < fs.size(); ++i) res[base + i] = fs[i].get();
  }
  int code = 0;
  for (auto& [c, msg] : res) {
    (c == 0 ? std::cout : std::cerr) << msg << "\n";
    code = std::max(code, c);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive decision-tree sequent calculi: checker, generators and simulation"};
  app.require_subcommand(1);
  int cap = kDefaultOracleCap;
  app.add_option("--cap", cap, "Oracle variable cap")->check(CLI::Range(1, kMaxOracleCap));

  // check
  auto* check = app.add_subcommand("check", "Check proof files");
  std::vector<std::string> check_files;
  std::string check_axioms, check_dialect;
  unsigned check_jobs = 1;
  bool check_sound = false;
  check->add_option("proofs", check_files, "Proof files")->required();
  check->add_option("--axioms", check_axioms, "Extra axiom file merged into each proof");
  check->add_option("--dialect", check_dialect, "Override the dialect header");
  check->add_option("--jobs", check_jobs, "Files checked in parallel");
  check->add_flag("--sound", check_sound, "Also run the brute-force oracle on every line");

  // php
  auto* php = app.add_subcommand("php", "Generate the pigeonhole proof for n holes");
  int php_n = 1;
  std::string php_out, php_report;
  php->add_option("--n", php_n, "Number of holes")->required()->check(CLI::Range(1, 12));
  php->add_option("--out", php_out, "Proof output file (default stdout)");
  php->add_option("--report", php_report, "JSON size report");

  // simulate
  auto* sim = app.add_subcommand("simulate", "Simulate an eLNDT proof of a positive sequent in eLNDT+");
  std::string sim_in, sim_out, sim_report;
  unsigned sim_jobs = 1;
  sim->add_option("--in", sim_in, "eLNDT proof")->required();
  sim->add_option("--out", sim_out, "eLNDT+ proof output (default stdout)");
  sim->add_option("--report", sim_report, "JSON size report");
  sim->add_option("--jobs", sim_jobs, "Parallel per-k translations");

  // eval
  auto* ev = app.add_subcommand("eval", "Evaluate a formula under an assignment");
  std::string ev_formula, ev_axioms, ev_assign;
  ev->add_option("formula", ev_formula, "Formula")->required();
  ev->add_option("--axioms", ev_axioms, "Axiom file for plain extension variables");
  ev->add_option("--assign", ev_assign, "Assignment p0=1,p1=0,... (unset variables are 0)");

  // bp
  auto* bp = app.add_subcommand("bp", "Branching programs");
  bp->require_subcommand(1);
  auto* bp_closure = bp->add_subcommand("closure", "Positive closure of a program");
  auto* bp_exact = bp->add_subcommand("exact", "Exact-count OBDD");
  auto* bp_eval = bp->add_subcommand("eval", "Evaluate a program");
  auto* bp_table = bp->add_subcommand("table", "Truth table of a program");
  std::string bp_in, bp_out, bp_dot, bp_assign;
  int bp_n = 0, bp_k = 0;
  for (auto* c : {bp_closure, bp_eval, bp_table}) c->add_option("--in", bp_in, "Program file")->required();
  for (auto* c : {bp_closure, bp_exact}) {
    c->add_option("--out", bp_out, "Program output (default stdout)");
    c->add_option("--dot", bp_dot, "DOT output");
  }
  bp_exact->add_option("--n", bp_n, "Variables")->required()->check(CLI::Range(0, 24));
  bp_exact->add_option("--k", bp_k, "Count")->required();
  bp_eval->add_option("--assign", bp_assign, "Assignment");

  // scaling
  auto* sc = app.add_subcommand("scaling", "Proof sizes of a generator over a range and the log-log slope");
  std::string sc_gen = "php", sc_csv;
  int sc_from = 1, sc_to = 4;
  sc->add_option("--gen", sc_gen, "php, identity, symmetry, merge, two-in-hole");
  sc->add_option("--from", sc_from, "First n");
  sc->add_option("--to", sc_to, "Last n");
  sc->add_option("--csv", sc_csv, "CSV output file");

  // corpus
  auto* co = app.add_subcommand("corpus", "Random eLNDT proofs of positive sequents");
  CorpusOptions co_opt;
  std::string co_dir;
  co->add_option("--count", co_opt.count, "Number of proofs");
  co->add_option("--seed", co_opt.seed, "Random seed");
  co->add_option("--max-vars", co_opt.max_vars, "Variables per sequent")->check(CLI::Range(1, 12));
  co->add_option("--max-tokens", co_opt.max_tokens, "Size bound per proof");
  co->add_option("--out-dir", co_dir, "Directory for proof files")->required();

  // search
  auto* se = app.add_subcommand("search", "Cut-free proof search with oracle countermodels");
  std::string se_seq, se_out;
  bool se_general = false;
  se->add_option("sequent", se_seq, "Sequent 'G |- D'")->required();
  se->add_flag("--general", se_general, "eLNDT mode (general decision rules)");
  se->add_option("--out", se_out, "Proof output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(check_files, check_axioms, check_dialect, check_jobs, check_sound, cap);

    if (*php) {
      auto t0 = std::chrono::steady_clock::now();
      Proof p = gen_php(php_n);
      double ms = ms_since(t0);
      write_file(php_out, write_proof(p));
      if (!php_report.empty()) {
        json j = proof_report(p, ms);
        j["n"] = php_n;
        write_file(php_report, j.dump(2) + "\n");
      }
      return 0;
    }

    if (*sim) {
      Proof src = parse_proof(read_file(sim_in));
      auto t0 = std::chrono::steady_clock::now();
      SimStats st;
      Proof out = simulate(src, &st, sim_jobs);
      double ms = ms_since(t0);
      write_file(sim_out, write_proof(out));
      if (!sim_report.empty()) {
        json j = proof_report(out, ms);
        j["n"] = st.vars;
        j["source_tokens"] = st.source;
        j["minus_tokens"] = st.minus;
        j["stripped_tokens"] = st.stripped;
        j["tk_tokens"] = st.tk;
        j["bracketed_tokens"] = st.bracketed;
        write_file(sim_report, j.dump(2) + "\n");
      }
      return 0;
    }

    if (*ev) {
      ExtAxiomSet ax;
      if (!ev_axioms.empty()) ax = parse_axiom_file(read_file(ev_axioms));
      Formula f = parse_formula(ev_formula);
      ax.ensure_in(f);
      std::cout << (eval(f, ax, parse_assignment(ev_assign)) ? 1 : 0) << "\n";
      return 0;
    }

    if (*bp) {
      auto emit = [&](const Nbp& g) {
        write_file(bp_out, nbp_to_text(g));
        if (!bp_dot.empty()) write_file(bp_dot, nbp_to_dot(g));
      };
      if (*bp_exact) {
        emit(build_exact_obdd(bp_n, bp_k));
        return 0;
      }
      Nbp g = parse_nbp(read_file(bp_in));
      if (*bp_closure) {
        emit(positive_closure(g));
      } else if (*bp_eval) {
        std::cout << (eval_nbp(g, parse_assignment(bp_assign)) ? 1 : 0) << "\n";
      } else {
        TruthTable t = nbp_truth_table(g, g.variables());
        json j;
        j["schema"] = kSchema;
        std::vector<std::string> vs;
        for (Var v : t.vars()) vs.push_back(var_name(v));
        j["vars"] = vs;
        j["table"] = t.to_bitstring();
        j["positive"] = is_positive_nbp(g);
        j["read_once"] = is_read_once(g);
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }

    if (*sc) {
      if (sc_from < 1 || sc_to < sc_from) throw InputError("scaling: empty or invalid range");
      std::vector<double> xs, ys;
      json rows = json::array();
      std::string csv = "n,lines,tokens,wall_ms\n";
      for (int n = sc_from; n <= sc_to; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        Proof p = scaling_instance(sc_gen, n);
        double ms = ms_since(t0);
        json r = proof_report(p, ms);
        r["n"] = n;
        r.erase("rule_histogram");
        rows.push_back(r);
        csv += std::to_string(n) + "," + std::to_string(p.lines.size()) + "," + std::to_string(proof_size(p)) + "," +
               std::to_string(ms) + "\n";
        xs.push_back(n);
        ys.push_back(static_cast<double>(proof_size(p)));
      }
      json j;
      j["schema"] = kSchema;
      j["generator"] = sc_gen;
      j["rows"] = rows;
      if (xs.size() >= 2) j["loglog_slope"] = loglog_slope(xs, ys);
      if (!sc_csv.empty()) write_file(sc_csv, csv);
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*co) {
      std::filesystem::create_directories(co_dir);
      auto corpus = make_corpus(co_opt);
      json idx = json::array();
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        std::string name = "proof" + std::to_string(i) + ".lndt";
        write_file((std::filesystem::path(co_dir) / name).string(), write_proof(corpus[i].proof));
        idx.push_back({{"file", name}, {"vars", corpus[i].vars}, {"tokens", proof_size(corpus[i].proof)},
                       {"sequent", to_string(corpus[i].sequent)}});
      }
      json j;
      j["schema"] = kSchema;
      j["seed"] = co_opt.seed;
      j["proofs"] = idx;
      write_file((std::filesystem::path(co_dir) / "index.json").string(), j.dump(2) + "\n");
      return 0;
    }

    if (*se) {
      Sequent s = parse_sequent(se_seq);
      SearchOptions opt;
      opt.general = se_general;
      opt.cap = cap;
      SearchResult r = prove_by_search(s, {}, opt);
      if (r.proof) {
        write_file(se_out, write_proof(*r.proof));
        return 0;
      }
      std::cout << "invalid; countermodel " << (r.countermodel ? r.countermodel->to_string() : "?") << "\n";
      return 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
