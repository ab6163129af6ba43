/*
 * Copyright 2026 The mwgames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mwg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mwg/io.hpp"
#include "mwg/reductions.hpp"
#include "mwg/solvers.hpp"

namespace mwg {

namespace {

// Unreadable input files map to the same exit status as malformed ones.
class FileError : public Error
{
public:
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GameStructure load_game(const std::string& path)
{
    GameStructure g = parse_game(read_file(path));
    require_valid(g);
    return g;
}

std::string lasso_text(const GameStructure& g, const Lasso& l)
{
    return "stem=" + write_edge_list(g, l.stem) + " cycle=" + write_edge_list(g, l.cycle);
}

void print_verdict(std::ostream& out, const GameStructure& g, const Verdict& v)
{
    if (v.answer == Answer::Yes) {
        out << "YES\n" << write_credit(v.credit);
        for (const auto& w : v.witnesses) out << write_witness(g, w);
    } else {
        out << "NO\n" << write_strategy(g, *v.spoiler);
    }
}

void print_memoryless(std::ostream& out, const GameStructure& g, const MemorylessVerdict& v)
{
    if (v.answer == Answer::Yes) {
        out << "YES\n" << write_strategy(g, *v.strategy) << write_credit(v.credit);
    } else {
        out << "NO\n";
    }
}

std::string circuit_text(const GameStructure& g, const MultiGraph& mg, const Circuit& c)
{
    std::vector<std::size_t> edges;
    for (std::size_t e : c.edges) edges.push_back(mg.edge(e).label);
    return "circuit " + write_edge_list(g, edges) + "\n";
}

// A certificate without strategy lines stands for the empty strategy, which
// is the correct one when the player owns no states.
MemorylessStrategy empty_strategy(const GameStructure& g, Player p)
{
    return {p, std::vector<std::optional<std::size_t>>(g.states().size())};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multi-dimensional energy and mean-payoff game solver", "mwg"};
    app.require_subcommand(1);

    std::string game_path, cert_path, input_path, threshold, credit;
    unsigned cap = 0;

    auto* solve = app.add_subcommand("solve", "Decide a game")->require_subcommand(1);
    auto* solve_energy = solve->add_subcommand("energy", "Unknown initial credit problem");
    auto* solve_mp = solve->add_subcommand("mp", "Finite-memory mean-payoff threshold problem");
    auto* solve_ml_energy = solve->add_subcommand("memoryless-energy", "Memoryless Player-1 strategies, energy");
    auto* solve_ml_mp = solve->add_subcommand("memoryless-mp", "Memoryless Player-1 strategies, mean payoff");
    for (auto* c : {solve_energy, solve_mp, solve_ml_energy, solve_ml_mp}) {
        c->add_option("game", game_path, "Game file")->required();
    }
    for (auto* c : {solve_mp, solve_ml_mp}) {
        c->add_option("--threshold", threshold, "Threshold, comma-separated a/b rationals")->required();
    }

    auto* check = app.add_subcommand("check", "Verify a certificate")->require_subcommand(1);
    auto* check_p1 = check->add_subcommand("p1", "Player-1 winning strategy (memoryless or Moore)");
    auto* check_p2 = check->add_subcommand("p2", "Memoryless Player-2 spoiling strategy");
    for (auto* c : {check_p1, check_p2}) {
        c->add_option("game", game_path, "Game file")->required();
        c->add_option("certificate", cert_path, "Certificate file")->required();
    }

    auto* encode = app.add_subcommand("encode", "Build a game from a hard instance")->require_subcommand(1);
    auto* encode_3sat = encode->add_subcommand("3sat", "3-CNF to a two-player game");
    auto* encode_3sat_ml = encode->add_subcommand("3sat-memoryless", "3-CNF to a one-player game");
    auto* encode_knap = encode->add_subcommand("knapsack", "Knapsack to a one-player game");
    for (auto* c : {encode_3sat, encode_3sat_ml}) c->add_option("dimacs", input_path, "DIMACS CNF file")->required();
    encode_knap->add_option("instance", input_path, "Knapsack file")->required();

    auto* circuit = app.add_subcommand("circuit", "Search the arena for a circuit")->require_subcommand(1);
    auto* circuit_zero = circuit->add_subcommand("zero", "Circuit of weight exactly zero");
    auto* circuit_nonneg = circuit->add_subcommand("nonneg", "Nonnegative circuit reachable from init");
    for (auto* c : {circuit_zero, circuit_nonneg}) c->add_option("game", game_path, "Game file")->required();

    auto* oracle = app.add_subcommand("oracle", "Reference oracles")->require_subcommand(1);
    auto* oracle_fixed = oracle->add_subcommand("fixed-credit", "Clamped safety game from a fixed credit");
    oracle_fixed->add_option("game", game_path, "Game file")->required();
    oracle_fixed->add_option("--credit", credit, "Initial credit, comma-separated integers")->required();
    oracle_fixed->add_option("--cap", cap, "Energy cap")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
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

    try {
        if (solve_energy->parsed()) {
            const auto g = load_game(game_path);
            print_verdict(out, g, solve_unknown_credit(g));
        } else if (solve_mp->parsed()) {
            const auto g = load_game(game_path);
            print_verdict(out, g, solve_meanpayoff_threshold(g, parse_rational_vector(threshold)));
        } else if (solve_ml_energy->parsed()) {
            const auto g = load_game(game_path);
            print_memoryless(out, g, solve_memoryless_p1_energy(g));
        } else if (solve_ml_mp->parsed()) {
            const auto g = load_game(game_path);
            print_memoryless(out, g, solve_memoryless_p1_meanpayoff(g, parse_rational_vector(threshold)));
        } else if (check_p1->parsed()) {
            const auto g = load_game(game_path);
            const Certificate cert = parse_certificate(read_file(cert_path), g, Player::One);
            const P1Check r = cert.moore ? verify_p1_certificate(g, *cert.moore)
                                         : verify_p1_certificate(g, cert.memoryless.value_or(empty_strategy(g, Player::One)));
            if (r.accepted) {
                out << "YES\n" << write_credit(r.credit);
            } else {
                out << "NO\n# negative cycle in component " << *r.bad_dimension + 1 << ": "
                    << lasso_text(g, *r.bad_cycle) << '\n';
            }
        } else if (check_p2->parsed()) {
            const auto g = load_game(game_path);
            const Certificate cert = parse_certificate(read_file(cert_path), g, Player::Two);
            if (cert.moore) throw ParseError(1, 1, "spoiler certificates must be memoryless");
            const P2Check r = verify_p2_spoiler(g, cert.memoryless.value_or(empty_strategy(g, Player::Two)));
            if (r.accepted) out << "YES\n";
            else out << "NO\n# nonnegative lasso: " << lasso_text(g, *r.counter_example) << '\n';
        } else if (encode_3sat->parsed()) {
            out << write_game(encode_3sat_two_player(parse_dimacs(read_file(input_path))));
        } else if (encode_3sat_ml->parsed()) {
            out << write_game(encode_3sat_memoryless(parse_dimacs(read_file(input_path))));
        } else if (encode_knap->parsed()) {
            out << write_game(encode_knapsack(parse_knapsack(read_file(input_path))));
        } else if (circuit_zero->parsed() || circuit_nonneg->parsed()) {
            const auto g = load_game(game_path);
            const MultiGraph mg = to_multigraph(g);
            const auto c = circuit_zero->parsed() ? zero_circuit(mg) : nonnegative_circuit(mg, g.init());
            if (c) out << "YES\n" << circuit_text(g, mg, *c);
            else out << "NO\n";
        } else if (oracle_fixed->parsed()) {
            const auto g = load_game(game_path);
            const auto r = clamped_fixed_credit_oracle(g, parse_weight_vector(credit), cap);
            out << (r == ClampedResult::P1WinsClamped ? "YES\n" : "NO\n");
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ValidationError& e) {
        err << e.what() << '\n';
        return kExitInput;
    } catch (const FileError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace mwg
