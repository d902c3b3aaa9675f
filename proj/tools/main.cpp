// File-driven front end for batch experiments. Subcommand outputs use the
// canonical dump / structure / formula text formats, so runs on identical
// inputs are byte-identical. Exit codes: 0 success, 1 domain error (bad
// input, violated precondition), 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperset/constructions.hpp"
#include "hyperset/dump.hpp"
#include "hyperset/error.hpp"
#include "hyperset/eval.hpp"
#include "hyperset/flat_system.hpp"
#include "hyperset/formula.hpp"
#include "hyperset/logic.hpp"
#include "hyperset/slice.hpp"
#include "hyperset/store.hpp"
#include "hyperset/structure.hpp"

using namespace hyperset;

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string solution_dump(Store& store, const std::map<std::string, Hyperset>& sol) {
  std::vector<std::pair<std::string, NodeId>> roots;
  for (const auto& [name, h] : sol) roots.emplace_back(name, h.id());
  return write_dump(store, roots);
}

// Roots of a dump file, D-closed.
Slice closed_slice_of_dump(Store& store, const std::string& path) {
  auto roots = parse_dump(store, read_file(path));
  std::vector<Hyperset> members;
  for (const auto& [name, h] : roots) members.push_back(h);
  return d_close(make_slice(store, members));
}

std::map<std::string, int> parse_assignments(const std::vector<std::string>& raw) {
  std::map<std::string, int> asg;
  for (const std::string& s : raw) {
    std::size_t eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw error("bad assignment '" + s + "' (expected var=index)");
    asg[s.substr(0, eq)] = std::stoi(s.substr(eq + 1));
  }
  return asg;
}

std::vector<int> parse_tuple(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  int v;
  while (in >> v) out.push_back(v);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"hereditarily finite hypersets: flat systems, reducts, constructions, logic"};
  app.require_subcommand(1);
  int seed = 0;
  app.add_option("--seed", seed, "seed for randomized corpus generation (reserved)");

  // --- solve ---------------------------------------------------------------
  std::string solve_file;
  bool solve_allow_nwf = false;
  auto* c_solve = app.add_subcommand("solve", "solve a flat system, print a canonical dump");
  c_solve->add_option("file", solve_file, "flat system file ('-' for stdin)")->required();
  c_solve->add_flag("--allow-non-well-founded-atoms", solve_allow_nwf,
                    "permit non-well-founded atom bindings");

  // --- canon-eq ------------------------------------------------------------
  std::string ce_file1, ce_file2, ce_name1, ce_name2;
  auto* c_ce = app.add_subcommand("canon-eq",
                                  "solve two flat systems in one store and compare solutions");
  c_ce->add_option("file1", ce_file1)->required();
  c_ce->add_option("file2", ce_file2)->required();
  c_ce->add_option("--name1", ce_name1, "indeterminate in file1 (default: first)");
  c_ce->add_option("--name2", ce_name2, "indeterminate in file2 (default: first)");

  // --- dgraph / sdgraph ----------------------------------------------------
  std::string dg_file;
  bool dg_dot = false;
  auto* c_dg = app.add_subcommand("dgraph", "D-reduct of the D-closure of a dump's roots");
  c_dg->add_option("file", dg_file, "canonical dump file ('-' for stdin)")->required();
  c_dg->add_flag("--dot", dg_dot, "emit DOT instead of structure text");
  std::string sg_file;
  bool sg_dot = false;
  auto* c_sg = app.add_subcommand("sdgraph", "SD-reduct of the D-closure of a dump's roots");
  c_sg->add_option("file", sg_file, "canonical dump file ('-' for stdin)")->required();
  c_sg->add_flag("--dot", sg_dot, "emit DOT instead of structure text");

  // --- components ----------------------------------------------------------
  std::string comp_file;
  auto* c_comp = app.add_subcommand("components", "D-connectivity classes of an L1 structure");
  c_comp->add_option("file", comp_file, "structure file ('-' for stdin)")->required();

  // --- embed ---------------------------------------------------------------
  std::string embed_file;
  auto* c_embed = app.add_subcommand("embed", "embed an L1 graph as mutually-membered sets");
  c_embed->add_option("file", embed_file, "structure file ('-' for stdin)")->required();

  // --- flower / bouquet ----------------------------------------------------
  int flower_n = 0;
  auto* c_flower = app.add_subcommand("flower", "the n-flower a = {{a,i} : i<n}");
  c_flower->add_option("n", flower_n, "number of petals")->required();
  std::vector<int> bouquet_ns;
  auto* c_bouquet = app.add_subcommand("bouquet", "loop-free point with one n-flower per n");
  c_bouquet->add_option("n", bouquet_ns, "flower sizes");

  // --- rieger --------------------------------------------------------------
  std::string rieger_file;
  auto* c_rieger = app.add_subcommand("rieger",
                                      "plant a graph as the D-graph of a permutation model");
  c_rieger->add_option("file", rieger_file, "structure file ('-' for stdin)")->required();

  // --- graft ---------------------------------------------------------------
  std::string graft_file;
  auto* c_graft = app.add_subcommand("graft", "graft a ball next to a target slice");
  c_graft->add_option("file", graft_file,
                      "graft spec: 'ball <path>', 'center <i>', 'radius <r>', "
                      "'target <path>', 'starget <vertex> <root>' lines")
      ->required();

  // --- eval ----------------------------------------------------------------
  std::string eval_struct, eval_formula;
  std::vector<std::string> eval_asg;
  auto* c_eval = app.add_subcommand("eval", "evaluate a formula on a structure");
  c_eval->add_option("structure", eval_struct, "structure file ('-' for stdin)")->required();
  c_eval->add_option("formula", eval_formula, "formula text")->required();
  c_eval->add_option("--assign", eval_asg, "free-variable assignment var=index");

  // --- mu ------------------------------------------------------------------
  std::string mu_formula;
  int mu_bound = 0;
  auto* c_mu = app.add_subcommand("mu", "relativized consistency sentence of an L1 sentence");
  c_mu->add_option("formula", mu_formula, "formula text")->required();
  c_mu->add_option("--checked-bound", mu_bound,
                   "verify the symmetry implication up to this domain size instead of "
                   "conjoining the symmetry axiom");

  // --- phi-n ---------------------------------------------------------------
  int phi_arg = 0;
  auto* c_phi = app.add_subcommand("phi-n", "the n-flower formula");
  c_phi->add_option("n", phi_arg, "flower size")->required();

  // --- interpret -----------------------------------------------------------
  std::string interp_file, interp_sentence;
  bool interp_dot = false;
  auto* c_interp = app.add_subcommand("interpret", "digraph-in-graph interpretation");
  c_interp->add_option("file", interp_file, "LNBG structure file ('-' for stdin)");
  c_interp->add_option("--sentence", interp_sentence, "LNBG sentence to translate");
  c_interp->add_flag("--dot", interp_dot, "emit DOT instead of structure text");

  // --- ef ------------------------------------------------------------------
  std::string ef_file1, ef_file2, ef_t1, ef_t2;
  int ef_k = 0;
  auto* c_ef = app.add_subcommand("ef", "k-round game equivalence of two structures");
  c_ef->add_option("file1", ef_file1)->required();
  c_ef->add_option("file2", ef_file2)->required();
  c_ef->add_option("--k", ef_k, "number of rounds")->required();
  c_ef->add_option("--tuple1", ef_t1, "space-separated indices in structure 1");
  c_ef->add_option("--tuple2", ef_t2, "space-separated indices in structure 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  (void)seed;  // reserved for randomized corpus subcommands

  Store store;

  if (*c_solve) {
    FlatSystem sys = parse_flat_system(store, read_file(solve_file));
    sys.allow_non_well_founded_atoms = solve_allow_nwf;
    std::cout << solution_dump(store, solve(store, sys));
  } else if (*c_ce) {
    auto sol1 = solve(store, parse_flat_system(store, read_file(ce_file1)));
    auto sol2 = solve(store, parse_flat_system(store, read_file(ce_file2)));
    if (sol1.empty() || sol2.empty()) throw error("canon-eq: empty system");
    const Hyperset& a = ce_name1.empty() ? sol1.begin()->second : sol1.at(ce_name1);
    const Hyperset& b = ce_name2.empty() ? sol2.begin()->second : sol2.at(ce_name2);
    std::cout << "equal: " << (a == b ? "true" : "false") << "\n";
  } else if (*c_dg || *c_sg) {
    bool d_only = static_cast<bool>(*c_dg);
    Slice slice = closed_slice_of_dump(store, d_only ? dg_file : sg_file);
    FiniteStructure g = d_only ? d_graph(slice) : sd_graph(slice);
    bool dot = d_only ? dg_dot : sg_dot;
    std::cout << (dot ? to_dot(g) : print_structure(g));
  } else if (*c_comp) {
    FiniteStructure g = parse_structure(read_file(comp_file));
    if (g.lang() != Lang::L1) throw error("components: expected an L1 structure");
    for (const auto& cls : components(g)) {
      for (std::size_t i = 0; i < cls.size(); ++i) std::cout << (i ? " " : "") << cls[i];
      std::cout << "\n";
    }
  } else if (*c_embed) {
    auto image = embed_graph(store, parse_structure(read_file(embed_file)));
    std::vector<std::pair<std::string, NodeId>> roots;
    for (std::size_t i = 0; i < image.size(); ++i)
      roots.emplace_back("v" + std::to_string(i), image[i].id());
    std::cout << write_dump(store, roots);
  } else if (*c_flower) {
    std::cout << write_dump(store, {{"a", flower(store, flower_n).id()}});
  } else if (*c_bouquet) {
    std::set<int> a(bouquet_ns.begin(), bouquet_ns.end());
    std::cout << write_dump(store, {{"b", bouquet(store, a).id()}});
  } else if (*c_rieger) {
    RiegerModel m = rieger(store, parse_structure(read_file(rieger_file)));
    std::vector<std::pair<std::string, NodeId>> roots;
    for (std::size_t i = 0; i < m.a.size(); ++i) roots.emplace_back("a" + std::to_string(i), m.a[i]);
    for (std::size_t i = 0; i < m.b.size(); ++i) roots.emplace_back("b" + std::to_string(i), m.b[i]);
    std::cout << write_dump(store, roots);
    std::cout << "% planted D_N-graph over a0..a" << m.a.size() - 1 << "\n";
    std::cout << print_structure(permuted_d_graph(m.membership, m.a));
  } else if (*c_graft) {
    std::istringstream spec(read_file(graft_file));
    std::string line;
    BallSpec ball;
    bool have_ball = false;
    Slice target;
    target.store = &store;
    std::map<std::string, Hyperset> target_roots;
    std::vector<std::pair<int, std::string>> stargets;
    int lineno = 0;
    while (std::getline(spec, line)) {
      ++lineno;
      std::size_t h = line.find('%');
      if (h != std::string::npos) line.erase(h);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(line);
      std::string head;
      ls >> head;
      auto fail = [&](const std::string& msg) -> void {
        throw error("graft spec (line " + std::to_string(lineno) + "): " + msg);
      };
      if (head == "ball") {
        std::string path;
        if (!(ls >> path)) fail("missing path");
        ball.structure = parse_structure(read_file(path));
        have_ball = true;
      } else if (head == "center") {
        if (!(ls >> ball.center)) fail("missing vertex");
      } else if (head == "radius") {
        if (!(ls >> ball.radius)) fail("missing radius");
      } else if (head == "target") {
        std::string path;
        if (!(ls >> path)) fail("missing path");
        target_roots = parse_dump(store, read_file(path));
        std::vector<Hyperset> members;
        for (const auto& [name, hs] : target_roots) members.push_back(hs);
        target = make_slice(store, members);
      } else if (head == "starget") {
        int v;
        std::string name;
        if (!(ls >> v >> name)) fail("expected vertex and target root name");
        stargets.emplace_back(v, name);
      } else {
        fail("unknown directive '" + head + "'");
      }
    }
    if (!have_ball) throw error("graft spec: missing 'ball' directive");
    std::map<int, std::vector<Hyperset>> s_targets;
    for (const auto& [v, name] : stargets) {
      auto it = target_roots.find(name);
      if (it == target_roots.end())
        throw error("graft spec: starget root '" + name + "' not in the target dump");
      s_targets[v].push_back(it->second);
    }
    auto tags = fresh_tags(store, ball.structure.size());
    auto image = graft_ball(store, ball, tags, s_targets, target);
    std::vector<std::pair<std::string, NodeId>> roots;
    for (std::size_t i = 0; i < image.size(); ++i)
      roots.emplace_back("g" + std::to_string(i), image[i].id());
    std::cout << write_dump(store, roots);
  } else if (*c_eval) {
    FiniteStructure g = parse_structure(read_file(eval_struct));
    bool v = eval(g, parse_formula(eval_formula), parse_assignments(eval_asg));
    std::cout << (v ? "true" : "false") << "\n";
  } else if (*c_mu) {
    FormulaPtr f = parse_formula(mu_formula);
    PhiClass pc = mu_bound > 0 ? phi_checked(f, mu_bound) : phi_syntactic(f);
    std::cout << print_formula(mu(pc)) << "\n";
  } else if (*c_phi) {
    std::cout << print_formula(phi_n(phi_arg)) << "\n";
  } else if (*c_interp) {
    DigraphInterpreter interp;
    if (interp_file.empty() && interp_sentence.empty())
      throw error("interpret: need a structure file, a --sentence, or both");
    if (interp_file.empty()) {
      std::cout << print_formula(interp.translate(parse_formula(interp_sentence))) << "\n";
    } else {
      FiniteStructure d = parse_structure(read_file(interp_file));
      FiniteStructure g = interp.interpret(d);
      if (interp_sentence.empty()) {
        std::cout << (interp_dot ? to_dot(g) : print_structure(g));
      } else {
        FormulaPtr theta = parse_formula(interp_sentence);
        std::cout << "direct: " << (eval(d, theta) ? "true" : "false") << "\n";
        std::cout << "interpreted: " << (eval(g, interp.translate(theta)) ? "true" : "false")
                  << "\n";
      }
    }
  } else if (*c_ef) {
    FiniteStructure a = parse_structure(read_file(ef_file1));
    FiniteStructure b = parse_structure(read_file(ef_file2));
    bool v = ef_equiv(a, parse_tuple(ef_t1), b, parse_tuple(ef_t2), ef_k);
    std::cout << "equivalent: " << (v ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
