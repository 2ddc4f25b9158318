// rcn: command-line front end for the rectilinear crossing number toolkit.
// Machine-first output: every subcommand prints plain numbers or CSV.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcn/closed_forms.hpp"
#include "rcn/crossing.hpp"
#include "rcn/drawing.hpp"
#include "rcn/embed.hpp"
#include "rcn/hill.hpp"
#include "rcn/optimizer.hpp"
#include "rcn/planter.hpp"

namespace {

using namespace rcn;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

// Graph specs on the command line: complete:N, kmn:M,N, knr:N,R,
// multipartite:N1,N2,..., layered:N,R.
GraphSpec parse_graph(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw ParseError("graph spec must look like family:params");
  const std::string family = s.substr(0, colon);
  const auto params = parse_int_list(s.substr(colon + 1));
  if (family == "complete" && params.size() == 1)
    return GraphSpec::complete(params[0]);
  if (family == "kmn" && params.size() == 2)
    return GraphSpec::complete_bipartite(params[0], params[1]);
  if (family == "knr" && params.size() == 2)
    return GraphSpec::balanced_multipartite(params[0], params[1]);
  if (family == "multipartite" && !params.empty())
    return GraphSpec::multipartite(params);
  if (family == "layered" && params.size() == 2)
    return GraphSpec::layered(params[0], params[1]);
  throw ParseError("bad graph spec: " + s);
}

Drawing load_seed(const std::string& ref) {
  const auto lib = seed_library();
  if (auto it = lib.find(ref); it != lib.end()) return it->second;
  return load_drawing(ref);
}

int run(int argc, char** argv) {
  CLI::App app{"rectilinear crossing number toolkit"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "human commentary on stderr");

  // count
  auto* cmd_count = app.add_subcommand("count", "crossing count of a drawing");
  std::string count_file;
  cmd_count->add_option("--drawing", count_file)->required();

  // kedges
  auto* cmd_kedges = app.add_subcommand("kedges", "j-edge vector of a drawing");
  std::string kedges_file;
  cmd_kedges->add_option("--drawing", kedges_file)->required();

  // lowerbound
  auto* cmd_lb = app.add_subcommand("lowerbound", "k-edge lower bound on cr(K_n)");
  int lb_n = 0;
  cmd_lb->add_option("--n", lb_n)->required();

  // table1
  auto* cmd_table = app.add_subcommand("table1", "H(n) and lower bound rows");
  int t_from = 10, t_to = 161;
  bool t_csv = false;
  cmd_table->add_option("--from", t_from);
  cmd_table->add_option("--to", t_to);
  cmd_table->add_flag("--csv", t_csv);

  // verify-prop1
  auto* cmd_prop1 =
      app.add_subcommand("verify-prop1", "check lower bound exceeds H(n)");

  // hill
  auto* cmd_hill = app.add_subcommand("hill", "Hill cylindrical drawing total");
  int hill_n = 0;
  cmd_hill->add_option("--n", hill_n)->required();

  // formulas
  auto* cmd_formulas = app.add_subcommand("formulas", "closed-form evaluators");
  std::string f_name;
  int f_n = 0, f_r = 0, f_m = 0, f_t = 1;
  long long f_cr = 0;
  std::string f_qbar = "high";
  cmd_formulas->add_option("--name", f_name)->required();
  cmd_formulas->add_option("--n", f_n);
  cmd_formulas->add_option("--m", f_m);
  cmd_formulas->add_option("--r", f_r);
  cmd_formulas->add_option("--t", f_t);
  cmd_formulas->add_option("--cr", f_cr);
  cmd_formulas->add_option("--qbar", f_qbar)->check(CLI::IsMember({"low", "high"}));

  // embed
  auto* cmd_embed = app.add_subcommand("embed", "random embedding into a host");
  std::string e_guest, e_host;
  long long e_samples = 10000;
  std::uint64_t e_seed = 1;
  bool e_exhaustive = false;
  cmd_embed->add_option("--guest", e_guest)->required();
  cmd_embed->add_option("--host", e_host)->required();
  cmd_embed->add_option("--samples", e_samples);
  cmd_embed->add_option("--seed", e_seed);
  cmd_embed->add_flag("--exhaustive", e_exhaustive);

  // plant
  auto* cmd_plant = app.add_subcommand("plant", "planted drawing from a seed");
  std::string p_seed, p_out;
  int p_s = 2;
  bool p_verify = false;
  cmd_plant->add_option("--seed", p_seed)->required();
  cmd_plant->add_option("--s", p_s)->required();
  cmd_plant->add_option("--out", p_out);
  cmd_plant->add_flag("--verify", p_verify);

  // generate
  auto* cmd_gen = app.add_subcommand("generate", "deterministic constructions");
  int g_layered = 0;
  std::string g_zar, g_seed, g_out;
  cmd_gen->add_option("--layered", g_layered, "layered drawing D_r");
  cmd_gen->add_option("--zarankiewicz", g_zar, "M,N axis drawing of K_{M,N}");
  cmd_gen->add_option("--seed", g_seed, "named library seed");
  cmd_gen->add_option("--out", g_out)->required();

  // optimize
  auto* cmd_opt = app.add_subcommand("optimize", "vertex-move local search");
  std::string o_graph, o_store;
  SearchConfig cfg;
  cmd_opt->add_option("--graph", o_graph)->required();
  cmd_opt->add_option("--restarts", cfg.restarts);
  cmd_opt->add_option("--budget-secs", cfg.time_budget_secs);
  cmd_opt->add_option("--seed", cfg.rng_seed);
  cmd_opt->add_option("--target", cfg.target);
  cmd_opt->add_option("--store", o_store);
  cmd_opt->add_flag("--serial", cfg.serial);

  // verify-dataset
  auto* cmd_vds =
      app.add_subcommand("verify-dataset", "recount the embedded K_24^4 dataset");

  CLI11_PARSE(app, argc, argv);

  if (cmd_count->parsed()) {
    std::cout << count_crossings(load_drawing(count_file)) << "\n";
  } else if (cmd_kedges->parsed()) {
    const auto kv = k_edge_vector(load_drawing(kedges_file).points);
    for (std::size_t j = 0; j < kv.e.size(); ++j)
      std::cout << (j ? "," : "") << kv.e[j];
    std::cout << "\n";
  } else if (cmd_lb->parsed()) {
    std::cout << lower_bound_crn(lb_n) << "\n";
  } else if (cmd_table->parsed()) {
    (void)t_csv;  // CSV is the only format
    std::cout << table1_csv(t_from, t_to);
  } else if (cmd_prop1->parsed()) {
    const auto rep = verify_proposition1();
    std::cout << "violations=" << rep.violations.size() << "\n";
    for (int n : rep.violations) std::cout << "violated_n=" << n << "\n";
    std::cout << "constant=" << rep.constant.get_str() << "\n";
    std::cout << "constant_decimal=" << rat_to_decimal(rep.constant) << "\n";
    std::cout << "exceeds_1_64=" << (rep.constant_exceeds_1_64 ? "yes" : "no")
              << "\n";
    return rep.ok ? 0 : 2;
  } else if (cmd_hill->parsed()) {
    const HillModel model(hill_n);  // construction self-checks against H(n)
    std::cout << "H=" << model.total() << " verified\n";
  } else if (cmd_formulas->parsed()) {
    const Rat qbar = f_qbar == "low" ? kQBarLow : kQBarHigh;
    if (f_name == "hill") {
      std::cout << hill_number(f_n) << "\n";
    } else if (f_name == "zarankiewicz") {
      std::cout << zarankiewicz_number(f_m ? f_m : f_n, f_n) << "\n";
    } else if (f_name == "harborth_upper") {
      const Rat v = harborth_upper(f_n, f_r);
      std::cout << v.get_str() << " " << rat_to_decimal(v) << "\n";
    } else if (f_name == "planted_coefficient") {
      const auto v = planted_coefficient(f_cr, f_r, f_t);
      std::cout << v.exact.get_str() << " " << v.as_float() << "\n";
    } else if (f_name == "bounds") {
      for (const auto& [name, v] :
           bound_evaluators(f_n, f_r, qbar, Rat(static_cast<long>(f_cr))))
        std::cout << name << "," << v.exact.get_str() << "," << v.as_float()
                  << "\n";
    } else {
      throw ParseError("unknown formula: " + f_name);
    }
  } else if (cmd_embed->parsed()) {
    const GraphSpec guest = parse_graph(e_guest);
    HostOracle host =
        e_host.rfind("hill:", 0) == 0
            ? HostOracle::from_hill(HillModel(std::stoi(e_host.substr(5))))
            : HostOracle::from_drawing(load_drawing(e_host));
    if (e_exhaustive) {
      const Rat mean = embed_exhaustive_mean(guest, host);
      std::cout << "mean=" << mean.get_str() << " " << rat_to_decimal(mean)
                << "\n";
    } else {
      const auto st = embed_mc(guest, host, e_samples, e_seed);
      std::cout << "mean=" << st.mean << " variance=" << st.variance
                << " min=" << st.min << " max=" << st.max << "\n";
    }
  } else if (cmd_plant->parsed()) {
    const Drawing seed = load_seed(p_seed);
    const Drawing planted = plant(seed, p_s);
    if (!p_out.empty()) save_drawing(p_out, planted);
    std::cout << count_crossings(planted) << "\n";
    if (p_verify) {
      const auto rep = verify_planted(planted, seed, p_s);
      std::cout << "four=" << rep.four_cluster << " three=" << rep.three_cluster
                << " two=" << rep.two_cluster << " ok=" << (rep.ok ? "yes" : "no")
                << "\n";
      if (!rep.ok) return 2;
    }
  } else if (cmd_gen->parsed()) {
    Drawing d;
    if (g_layered > 0) {
      d = generate_layered(g_layered);
    } else if (!g_zar.empty()) {
      const auto mn = parse_int_list(g_zar);
      if (mn.size() != 2) throw ParseError("--zarankiewicz needs M,N");
      d = generate_zarankiewicz(mn[0], mn[1]);
    } else if (!g_seed.empty()) {
      d = load_seed(g_seed);
    } else {
      throw ParseError("generate: pick one of --layered/--zarankiewicz/--seed");
    }
    save_drawing(g_out, d);
    std::cout << count_crossings(d) << "\n";
  } else if (cmd_opt->parsed()) {
    const GraphSpec g = parse_graph(o_graph);
    const auto result = optimize(g, cfg, [&](const RestartStats& st) {
      std::cout << "restart " << st.restart_index << ": count "
                << st.final_count << " after " << st.moves << " moves\n";
    });
    std::cout << "best=" << result.best_count << "\n";
    std::string store = o_store;
    if (store.empty())
      if (const char* env = std::getenv("RCN_STORE")) store = env;
    if (!store.empty()) {
      const bool updated = record_best(result, cfg, store);
      std::cout << (updated ? "stored" : "kept existing") << "\n";
    }
  } else if (cmd_vds->parsed()) {
    const Drawing d = dataset_k24();
    const long long c = count_crossings(d);
    std::cout << c << "\n";
    if (c != 2033) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rcn::IdentityViolation& e) {
    std::cerr << "self-check failure: " << e.what() << "\n";
    return 2;
  } catch (const rcn::ModelInconsistent& e) {
    std::cerr << "self-check failure: " << e.what() << "\n";
    return 2;
  } catch (const rcn::ClassificationMismatch& e) {
    std::cerr << "self-check failure: " << e.what() << "\n";
    return 2;
  } catch (const rcn::PlantingFailed& e) {
    std::cerr << "self-check failure: " << e.what() << "\n";
    return 2;
  } catch (const rcn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
