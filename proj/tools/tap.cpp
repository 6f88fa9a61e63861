#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tap/oracle.hpp"
#include "tap/pipeline.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw tap::Error("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw tap::Error("cannot write '" + path + "'");
    }
    out << content;
}

tap::TopologicalAutomaton load_automaton(const std::string& path) {
    tap::TopologicalAutomaton aut = tap::parse(read_file(path));
    tap::ValidationReport report = tap::validate(aut);
    if (!report.ok()) {
        throw tap::Error(path + ": invalid automaton\n" + report.to_string());
    }
    return aut;
}

json invariants_json(const tap::Invariants& inv) {
    json j;
    j["orientability"] = inv.orientable ? "orientable" : "nonorientable";
    if (inv.infinite) {
        j["genus_or_crosscaps"] = "infinity";
    } else {
        j["genus_or_crosscaps"] = inv.genus_or_crosscaps;
    }
    j["reduced_code"] = inv.reduced_code;
    j["planar"] = inv.planar;
    j["compact"] = inv.compact;
    return j;
}

void print_invariants(const tap::Invariants& inv) {
    std::cout << "orientability:     " << (inv.orientable ? "orientable" : "nonorientable")
              << "\n";
    std::cout << (inv.orientable ? "genus:             " : "crosscaps:         ");
    if (inv.infinite) {
        std::cout << "infinity\n";
    } else {
        std::cout << inv.genus_or_crosscaps << "\n";
    }
    std::cout << "reduced code:      " << inv.reduced_code << "\n";
    std::cout << "planar:            " << (inv.planar ? "yes" : "no") << "\n";
    std::cout << "compact:           " << (inv.compact ? "yes" : "no") << "\n";
}

std::string zero_pad(std::size_t n, int width) {
    std::string s = std::to_string(n);
    while (static_cast<int>(s.size()) < width) {
        s.insert(s.begin(), '0');
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides homeomorphism of the open surfaces generated by topological 2-automata"};
    app.require_subcommand(1);

    std::uint64_t max_unfold = tap::kDefaultUnfoldCap;
    app.add_option("--max-unfold", max_unfold, "Vertex cap for the tree unfolding")
        ->capture_default_str();

    // check
    std::string check_a, check_b;
    bool check_json = false;
    CLI::App* check = app.add_subcommand("check", "Decide whether two automata generate "
                                                  "homeomorphic surfaces");
    check->add_option("first", check_a, "First .tap document")->required();
    check->add_option("second", check_b, "Second .tap document")->required();
    check->add_flag("--json", check_json, "Emit JSON");

    // invariants
    std::string inv_path;
    bool inv_json = false;
    CLI::App* inv_cmd = app.add_subcommand("invariants", "Report the classification invariants "
                                                         "of one automaton");
    inv_cmd->add_option("input", inv_path, ".tap document")->required();
    inv_cmd->add_flag("--json", inv_json, "Emit JSON");

    // reduce
    std::string reduce_path, reduce_dot_dir;
    bool reduce_trace = false;
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "Run the reduction and export the "
                                                        "pipeline stages as DOT");
    reduce_cmd->add_option("input", reduce_path, ".tap document")->required();
    reduce_cmd->add_option("--dot", reduce_dot_dir, "Directory for DOT files")->required();
    reduce_cmd->add_flag("--trace", reduce_trace, "Also write one DOT per applied move");

    // develop
    std::string develop_path;
    std::uint64_t develop_stage = 0;
    std::uint64_t develop_cap = tap::kDefaultStageCap;
    bool develop_json = false;
    CLI::App* develop_cmd = app.add_subcommand("develop", "Invariants of the compact stage-s "
                                                          "approximation");
    develop_cmd->add_option("input", develop_path, ".tap document")->required();
    develop_cmd->add_option("-s,--stage", develop_stage, "Stage to develop to")->required();
    develop_cmd->add_option("--max-stage", develop_cap, "Stage cap")->capture_default_str();
    develop_cmd->add_flag("--json", develop_json, "Emit JSON");

    // gen appendix
    std::string gen_bits, gen_out;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate example automata");
    CLI::App* gen_appendix_cmd =
        gen_cmd->add_subcommand("appendix", "Bit-vector family with pairwise distinct surfaces");
    gen_appendix_cmd->add_option("--bits", gen_bits, "Bit string such as 010110")->required();
    gen_appendix_cmd->add_option("-o,--output", gen_out, "Output .tap path")->required();
    gen_cmd->require_subcommand(1);

    // oracle cb / confluence
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Independent verification instruments");
    oracle_cmd->require_subcommand(1);
    std::string cb_path;
    CLI::App* cb_cmd = oracle_cmd->add_subcommand("cb", "Cantor-Bendixson invariant of a "
                                                        "loop-only planar automaton");
    cb_cmd->add_option("input", cb_path, ".tap document")->required();
    std::string conf_path;
    std::uint32_t conf_trials = 100;
    std::uint64_t conf_seed = 0;
    CLI::App* conf_cmd = oracle_cmd->add_subcommand("confluence", "Random maximal move sequences "
                                                                  "against the deterministic "
                                                                  "reduction");
    conf_cmd->add_option("input", conf_path, ".tap document")->required();
    conf_cmd->add_option("--trials", conf_trials, "Number of random sequences")
        ->capture_default_str();
    conf_cmd->add_option("--seed", conf_seed, "Random seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        tap::PipelineOptions opts;
        opts.unfold_cap = max_unfold;

        if (*check) {
            tap::Verdict verdict =
                tap::equivalent(load_automaton(check_a), load_automaton(check_b), opts);
            if (check_json) {
                json j;
                j["schema"] = 1;
                j["homeomorphic"] = verdict.homeomorphic;
                j["first"] = invariants_json(verdict.first);
                j["second"] = invariants_json(verdict.second);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << (verdict.homeomorphic ? "homeomorphic" : "not homeomorphic") << "\n";
                std::cout << "first:  " << verdict.first.reduced_code << "\n";
                std::cout << "second: " << verdict.second.reduced_code << "\n";
            }
            return verdict.homeomorphic ? 0 : 1;
        }

        if (*inv_cmd) {
            tap::Invariants inv = tap::invariants(load_automaton(inv_path), opts);
            if (inv_json) {
                json j = invariants_json(inv);
                j["schema"] = 1;
                std::cout << j.dump(2) << "\n";
            } else {
                print_invariants(inv);
            }
            return 0;
        }

        if (*reduce_cmd) {
            tap::TopologicalAutomaton aut = load_automaton(reduce_path);
            std::filesystem::create_directories(reduce_dot_dir);
            auto dot_path = [&](const std::string& name) {
                return (std::filesystem::path(reduce_dot_dir) / name).string();
            };

            tap::DecoratedGraph decorated = tap::propagate(tap::build_decorated_graph(aut));
            tap::DecoratedTree unfolded = tap::unfold(decorated, opts.unfold_cap);
            tap::DecoratedTree admissible = tap::admissibilize(unfolded);
            write_file(dot_path("1_decorated.dot"), tap::to_dot(decorated));
            write_file(dot_path("2_unfolded.dot"), tap::to_dot(unfolded));
            write_file(dot_path("3_admissible.dot"), tap::to_dot(admissible));

            std::size_t step = 0;
            tap::DecoratedTree reduced =
                reduce_trace
                    ? tap::reduce_traced(admissible,
                                         [&](const tap::Move&, const tap::DecoratedTree& t) {
                                             ++step;
                                             write_file(dot_path("step_" + zero_pad(step, 4) +
                                                                 ".dot"),
                                                        tap::to_dot(t));
                                         })
                    : tap::reduce(admissible);
            write_file(dot_path("4_reduced.dot"), tap::to_dot(reduced));

            std::cout << "reduced code: " << tap::canonical_code(reduced) << "\n";
            std::cout << "moves applied: "
                      << (reduce_trace ? std::to_string(step) : std::string("(run with --trace)"))
                      << "\n";
            return 0;
        }

        if (*develop_cmd) {
            tap::Development dev =
                tap::develop(load_automaton(develop_path), develop_stage, develop_cap);
            if (develop_json) {
                json j;
                j["schema"] = 1;
                j["stage"] = dev.stage;
                json counts = json::object();
                for (const auto& [block, count] : dev.copy_counts) {
                    counts[std::to_string(block)] = count.str();
                }
                j["copy_counts"] = counts;
                j["euler_characteristic"] = dev.euler_characteristic.str();
                j["boundary_count"] = dev.boundary_count.str();
                j["orientable"] = dev.orientable;
                j["genus_or_crosscaps"] = dev.genus_or_crosscaps.str();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "stage:                " << dev.stage << "\n";
                std::cout << "euler characteristic: " << dev.euler_characteristic << "\n";
                std::cout << "boundary circles:     " << dev.boundary_count << "\n";
                std::cout << "orientable:           " << (dev.orientable ? "yes" : "no") << "\n";
                std::cout << (dev.orientable ? "genus:                " : "crosscaps:            ")
                          << dev.genus_or_crosscaps << "\n";
                for (const auto& [block, count] : dev.copy_counts) {
                    std::cout << "copies of block " << block << ": " << count << "\n";
                }
            }
            return 0;
        }

        if (*gen_appendix_cmd) {
            tap::BitVector bits;
            for (char c : gen_bits) {
                if (c != '0' && c != '1') {
                    throw tap::Error("--bits takes a string over {0,1}");
                }
                bits.push_back(c == '1');
            }
            if (bits.empty()) {
                throw tap::Error("--bits needs at least one bit");
            }
            write_file(gen_out, tap::serialize(tap::gen_appendix(bits)));
            return 0;
        }

        if (*cb_cmd) {
            tap::PipelineTrace trace = tap::run_pipeline(load_automaton(cb_path), opts);
            tap::CBInvariant inv = tap::cb_invariant(trace.admissible);
            std::cout << "rank " << inv.rank << " multiplicity " << inv.multiplicity << "\n";
            return 0;
        }

        if (*conf_cmd) {
            tap::PipelineTrace trace = tap::run_pipeline(load_automaton(conf_path), opts);
            bool ok = tap::confluence_check(trace.admissible, conf_trials, conf_seed);
            std::cout << (ok ? "confluent" : "MISMATCH") << " (trials=" << conf_trials
                      << ", seed=" << conf_seed << ")\n";
            return ok ? 0 : 1;
        }
    } catch (const tap::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
