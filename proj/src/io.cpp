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

#include "mwg/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace mwg {

namespace {

struct Token
{
    std::string_view text;
    std::size_t column = 0;
};

struct Line
{
    std::size_t number = 0;
    std::vector<Token> tokens;
};

// Splits into whitespace-separated tokens, dropping comments that start
// with `comment` and lines left empty.
std::vector<Line> lex(std::string_view text, char comment = '#')
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (auto hash = raw.find(comment); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            const std::size_t b = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            if (i > b) line.tokens.push_back({raw.substr(b, i - b), b + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::size_t last_line(std::string_view text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

bool is_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer integer_at(std::string_view s, std::size_t line, std::size_t column)
{
    if (!is_integer(s)) throw ParseError(line, column, "expected an integer, got '" + std::string(s) + "'");
    return Integer(std::string(s));
}

std::size_t count_at(std::string_view s, std::size_t line, std::size_t column, const char* what)
{
    const Integer v = integer_at(s, line, column);
    if (sgn(v) < 0 || !v.fits_ulong_p()) throw ParseError(line, column, std::string(what) + " out of range");
    return v.get_ui();
}

bool is_identifier(std::string_view s)
{
    auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (s.empty() || !word(s.front())) return false;
    return std::all_of(s.begin(), s.end(), [&](char c) { return word(c) || c == '.' || c == '-'; });
}

std::string identifier_at(const Token& t, std::size_t line)
{
    if (!is_identifier(t.text)) throw ParseError(line, t.column, "invalid identifier '" + std::string(t.text) + "'");
    return std::string(t.text);
}

void expect_arity(const Line& l, std::size_t n, const char* form)
{
    if (l.tokens.size() != n) {
        const std::size_t col = l.tokens.size() > n ? l.tokens[n].column : l.tokens.back().column;
        throw ParseError(l.number, col, std::string("expected '") + form + "'");
    }
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) return out;
        start = p + 1;
    }
}

// Components of "(c1,...,ck)" or "c1,...,ck".
std::vector<Integer> integer_list(std::string_view s, std::size_t line, std::size_t column)
{
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw ParseError(line, column, "unbalanced parenthesis");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<Integer> out;
    if (s.empty()) return out;
    std::size_t offset = 0;
    for (auto part : split(s, ',')) {
        out.push_back(integer_at(part, line, column + offset));
        offset += part.size() + 1;
    }
    return out;
}

std::string join_from(const Line& l, std::size_t first)
{
    std::string out;
    for (std::size_t i = first; i < l.tokens.size(); ++i) out += l.tokens[i].text;
    return out;
}

std::size_t state_at(const GameStructure& g, const Token& t, std::size_t line)
{
    auto s = g.find_state(t.text);
    if (!s) throw ParseError(line, t.column, "unknown state '" + std::string(t.text) + "'");
    return *s;
}

std::size_t edge_at(const GameStructure& g, std::string_view id, std::size_t line, std::size_t column)
{
    auto e = g.find_edge(id);
    if (!e) throw ParseError(line, column, "unknown edge '" + std::string(id) + "'");
    return *e;
}

template <typename Key>
std::vector<std::size_t> sorted_by_id(std::size_t n, Key&& key)
{
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    return order;
}

} // namespace

GameStructure parse_game(std::string_view text)
{
    const auto lines = lex(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    const Line& header = lines[0];
    if (header.tokens.size() != 2 || header.tokens[0].text != "mwg" || header.tokens[1].text != "1") {
        throw ParseError(header.number, header.tokens[0].column, "expected header 'mwg 1'");
    }
    if (lines.size() < 2 || lines[1].tokens[0].text != "dimension") {
        const std::size_t at = lines.size() < 2 ? last_line(text) : lines[1].number;
        throw ParseError(at, 1, "expected 'dimension <k>'");
    }
    expect_arity(lines[1], 2, "dimension <k>");
    GameStructure g(count_at(lines[1].tokens[1].text, lines[1].number, lines[1].tokens[1].column, "dimension"));

    bool seen_edge = false;
    std::optional<std::size_t> init;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const Token& kw = l.tokens[0];
        if (kw.text == "state") {
            if (seen_edge) throw ParseError(l.number, kw.column, "state declared after the first edge");
            if (l.tokens.size() < 3 || l.tokens.size() > 4) {
                expect_arity(l, 3, "state <id> owner=<1|2> [init]");
            }
            const std::string id = identifier_at(l.tokens[1], l.number);
            if (g.find_state(id)) throw ParseError(l.number, l.tokens[1].column, "duplicate state '" + id + "'");
            const Token& owner = l.tokens[2];
            Player p;
            if (owner.text == "owner=1") p = Player::One;
            else if (owner.text == "owner=2") p = Player::Two;
            else throw ParseError(l.number, owner.column, "expected 'owner=1' or 'owner=2'");
            const std::size_t s = g.add_state(id, p);
            if (l.tokens.size() == 4) {
                if (l.tokens[3].text != "init") throw ParseError(l.number, l.tokens[3].column, "expected 'init'");
                if (init) throw ParseError(l.number, l.tokens[3].column, "second initial state");
                init = s;
                g.set_init(s);
            }
        } else if (kw.text == "edge") {
            seen_edge = true;
            if (l.tokens.size() < 5) expect_arity(l, 5, "edge <id> <src> <dst> w=(...)");
            const std::string id = identifier_at(l.tokens[1], l.number);
            const std::size_t src = state_at(g, l.tokens[2], l.number);
            const std::size_t dst = state_at(g, l.tokens[3], l.number);
            const std::string w = join_from(l, 4);
            const std::size_t col = l.tokens[4].column;
            if (w.rfind("w=(", 0) != 0 || w.back() != ')') throw ParseError(l.number, col, "expected 'w=(c1,...,ck)'");
            g.add_edge(id, src, dst, WeightVector(integer_list(std::string_view(w).substr(2), l.number, col + 2)));
        } else {
            throw ParseError(l.number, kw.column, "unknown directive '" + std::string(kw.text) + "'");
        }
    }
    if (!init) throw ParseError(last_line(text), 1, "no initial state");
    return g;
}

std::string write_game(const GameStructure& g)
{
    std::ostringstream out;
    out << "mwg 1\ndimension " << g.dimension() << '\n';
    for (std::size_t s : sorted_by_id(g.states().size(), [&](std::size_t i) -> const std::string& { return g.state(i).id; })) {
        out << "state " << g.state(s).id << " owner=" << (g.state(s).owner == Player::One ? 1 : 2);
        if (s == g.init()) out << " init";
        out << '\n';
    }
    for (std::size_t e : sorted_by_id(g.edges().size(), [&](std::size_t i) -> const std::string& { return g.edge(i).id; })) {
        const Edge& edge = g.edge(e);
        out << "edge " << edge.id << ' ' << g.state(edge.src).id << ' ' << g.state(edge.dst).id << " w="
            << to_string(edge.weight) << '\n';
    }
    return out.str();
}

CnfFormula parse_dimacs(std::string_view text)
{
    CnfFormula f;
    std::optional<std::size_t> declared;
    std::vector<int> pending;
    std::size_t line_no = 0, start = 0;
    std::size_t end_line = 1, end_col = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const std::string_view raw = text.substr(start, end - start);
        const auto lines = lex(raw, '\0');
        const bool last = end == text.size();
        start = end + 1;
        if (lines.empty()) {
            if (last) break;
            continue;
        }
        const auto& tokens = lines[0].tokens;
        if (tokens[0].text == "c" || tokens[0].text.front() == 'c') {
            if (last) break;
            continue;
        }
        if (tokens[0].text == "%") break;
        if (tokens[0].text == "p") {
            if (declared) throw ParseError(line_no, tokens[0].column, "second problem line");
            if (tokens.size() != 4 || tokens[1].text != "cnf") throw ParseError(line_no, tokens[0].column, "expected 'p cnf <n> <m>'");
            f.variable_count = count_at(tokens[2].text, line_no, tokens[2].column, "variable count");
            declared = count_at(tokens[3].text, line_no, tokens[3].column, "clause count");
            if (last) break;
            continue;
        }
        if (!declared) throw ParseError(line_no, tokens[0].column, "clause before the problem line");
        for (const auto& t : tokens) {
            const Integer v = integer_at(t.text, line_no, t.column);
            if (v == 0) {
                if (pending.size() != 3) {
                    throw ParseError(line_no, t.column, "clause has " + std::to_string(pending.size()) +
                                                            " literals; exactly 3 are required");
                }
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            if (abs(v) > f.variable_count) throw ParseError(line_no, t.column, "variable index out of range");
            pending.push_back(static_cast<int>(v.get_si()));
        }
        end_line = line_no;
        end_col = tokens.back().column;
        if (last) break;
    }
    if (!declared) throw ParseError(line_no, 1, "missing problem line 'p cnf <n> <m>'");
    if (!pending.empty()) throw ParseError(end_line, end_col, "last clause is not terminated by 0");
    if (f.clauses.size() != *declared) {
        throw ParseError(end_line, end_col, "expected " + std::to_string(*declared) + " clauses, found " +
                                                std::to_string(f.clauses.size()));
    }
    return f;
}

std::string write_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return out.str();
}

KnapsackInstance parse_knapsack(std::string_view text)
{
    KnapsackInstance inst;
    bool bound = false, target = false;
    for (const auto& l : lex(text)) {
        const Token& kw = l.tokens[0];
        auto value = [&](std::size_t i) {
            const Integer v = integer_at(l.tokens[i].text, l.number, l.tokens[i].column);
            if (sgn(v) < 0) throw ParseError(l.number, l.tokens[i].column, "value must be nonnegative");
            return v;
        };
        if (kw.text == "item") {
            expect_arity(l, 3, "item <p> <w>");
            inst.items.push_back({value(1), value(2)});
        } else if (kw.text == "bound") {
            expect_arity(l, 2, "bound <B>");
            if (bound) throw ParseError(l.number, kw.column, "second bound line");
            inst.bound = value(1);
            bound = true;
        } else if (kw.text == "target") {
            expect_arity(l, 2, "target <P>");
            if (target) throw ParseError(l.number, kw.column, "second target line");
            inst.target = value(1);
            target = true;
        } else {
            throw ParseError(l.number, kw.column, "unknown directive '" + std::string(kw.text) + "'");
        }
    }
    if (inst.items.empty()) throw ParseError(last_line(text), 1, "no items");
    if (!bound) throw ParseError(last_line(text), 1, "missing 'bound <B>'");
    if (!target) throw ParseError(last_line(text), 1, "missing 'target <P>'");
    return inst;
}

std::string write_knapsack(const KnapsackInstance& inst)
{
    std::ostringstream out;
    for (const auto& item : inst.items) out << "item " << item.profit << ' ' << item.weight << '\n';
    out << "bound " << inst.bound << "\ntarget " << inst.target << '\n';
    return out.str();
}

std::vector<Rational> parse_rational_vector(std::string_view text)
{
    std::vector<Rational> out;
    for (auto part : split(text, ',')) {
        const auto slash = part.find('/');
        const std::string_view num = part.substr(0, slash);
        const std::string_view den = slash == std::string_view::npos ? "1" : part.substr(slash + 1);
        if (!is_integer(num) || !is_integer(den) || den.front() == '-') {
            throw InvalidArgument("invalid rational '" + std::string(part) + "'");
        }
        const Integer d{std::string(den)};
        if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(part) + "'");
        Rational q{Integer{std::string(num)}, d};
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

WeightVector parse_weight_vector(std::string_view text)
{
    try {
        return WeightVector(integer_list(text, 1, 1));
    } catch (const ParseError& e) {
        throw InvalidArgument("invalid integer vector '" + std::string(text) + "'");
    }
}

Certificate parse_certificate(std::string_view text, const GameStructure& g, Player player)
{
    auto lines = lex(text);
    if (!lines.empty() && lines[0].tokens.size() == 1 &&
        (lines[0].tokens[0].text == "YES" || lines[0].tokens[0].text == "NO")) {
        lines.erase(lines.begin());
    }
    const std::size_t n = g.states().size();
    Certificate cert;
    MemorylessStrategy choose{player, std::vector<std::optional<std::size_t>>(n)};
    bool has_choose = false;
    std::vector<std::string> memory;
    std::optional<std::size_t> initial;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> update, next;

    auto memory_at = [&](const Token& t, std::size_t line) {
        auto it = std::find(memory.begin(), memory.end(), t.text);
        if (it == memory.end()) throw ParseError(line, t.column, "unknown memory state '" + std::string(t.text) + "'");
        return static_cast<std::size_t>(it - memory.begin());
    };
    auto edge_list = [&](std::string_view s, std::size_t line, std::size_t column) {
        std::vector<std::size_t> out;
        if (s == "-") return out;
        for (auto id : split(s, ',')) out.push_back(edge_at(g, id, line, column));
        return out;
    };

    for (const auto& l : lines) {
        const Token& kw = l.tokens[0];
        if (kw.text == "choose") {
            expect_arity(l, 3, "choose <state> <edge>");
            const std::size_t s = state_at(g, l.tokens[1], l.number);
            if (choose.choice[s]) throw ParseError(l.number, l.tokens[1].column, "second choice for a state");
            choose.choice[s] = edge_at(g, l.tokens[2].text, l.number, l.tokens[2].column);
            has_choose = true;
        } else if (kw.text == "memory") {
            expect_arity(l, 2, "memory <id>");
            const std::string id = identifier_at(l.tokens[1], l.number);
            if (std::find(memory.begin(), memory.end(), id) != memory.end()) {
                throw ParseError(l.number, l.tokens[1].column, "duplicate memory state '" + id + "'");
            }
            memory.push_back(id);
        } else if (kw.text == "initial") {
            expect_arity(l, 2, "initial <id>");
            if (initial) throw ParseError(l.number, kw.column, "second initial memory state");
            initial = memory_at(l.tokens[1], l.number);
        } else if (kw.text == "update" || kw.text == "next") {
            const bool is_update = kw.text == "update";
            expect_arity(l, 5, is_update ? "update <m> <state> -> <m'>" : "next <m> <state> -> <edge>");
            if (l.tokens[3].text != "->") throw ParseError(l.number, l.tokens[3].column, "expected '->'");
            const std::size_t m = memory_at(l.tokens[1], l.number);
            const std::size_t s = state_at(g, l.tokens[2], l.number);
            auto& table = is_update ? update : next;
            const std::size_t target = is_update ? memory_at(l.tokens[4], l.number)
                                                 : edge_at(g, l.tokens[4].text, l.number, l.tokens[4].column);
            if (!table.emplace(std::make_pair(m, s), target).second) {
                throw ParseError(l.number, kw.column, "second entry for the same memory and state");
            }
        } else if (kw.text == "credit") {
            if (cert.credit) throw ParseError(l.number, kw.column, "second credit line");
            if (l.tokens.size() < 2) expect_arity(l, 2, "credit (c1,...,ck)");
            cert.credit = WeightVector(integer_list(join_from(l, 1), l.number, l.tokens[1].column));
        } else if (kw.text == "witness") {
            expect_arity(l, 4, "witness choose=<s>:<e>,... stem=<e>,... cycle=<e>,...");
            const char* keys[] = {"choose=", "stem=", "cycle="};
            for (std::size_t i = 0; i < 3; ++i) {
                if (l.tokens[i + 1].text.rfind(keys[i], 0) != 0) {
                    throw ParseError(l.number, l.tokens[i + 1].column, std::string("expected '") + keys[i] + "'");
                }
            }
            SpoilerWitness w;
            w.opponent = {Player::Two, std::vector<std::optional<std::size_t>>(n)};
            const Token& c = l.tokens[1];
            const std::string_view pairs = c.text.substr(7);
            if (pairs != "-") {
                for (auto pair : split(pairs, ',')) {
                    const auto colon = pair.find(':');
                    if (colon == std::string_view::npos) throw ParseError(l.number, c.column, "expected '<state>:<edge>'");
                    const Token st{pair.substr(0, colon), c.column};
                    w.opponent.choice[state_at(g, st, l.number)] = edge_at(g, pair.substr(colon + 1), l.number, c.column);
                }
            }
            w.lasso.stem = edge_list(l.tokens[2].text.substr(5), l.number, l.tokens[2].column);
            w.lasso.cycle = edge_list(l.tokens[3].text.substr(6), l.number, l.tokens[3].column);
            cert.witnesses.push_back(std::move(w));
        } else {
            throw ParseError(l.number, kw.column, "unknown directive '" + std::string(kw.text) + "'");
        }
    }

    const bool moore = !memory.empty() || initial || !update.empty() || !next.empty();
    if (moore && has_choose) throw ParseError(1, 1, "certificate mixes 'choose' with Moore machine lines");
    if (has_choose) cert.memoryless = std::move(choose);
    if (moore) {
        if (memory.empty()) throw ParseError(1, 1, "Moore machine without 'memory' lines");
        MooreStrategy s;
        s.player = player;
        s.memory = memory;
        s.initial = initial.value_or(0);
        s.state_count = n;
        s.update_table.resize(memory.size() * n);
        s.next_table.assign(memory.size() * n, std::nullopt);
        for (std::size_t m = 0; m < memory.size(); ++m) {
            for (std::size_t st = 0; st < n; ++st) s.update_table[m * n + st] = m;
        }
        for (const auto& [key, m2] : update) s.update_table[key.first * n + key.second] = m2;
        for (const auto& [key, e] : next) s.next_table[key.first * n + key.second] = e;
        cert.moore = std::move(s);
    }
    return cert;
}

std::string write_edge_list(const GameStructure& g, const std::vector<std::size_t>& edges)
{
    if (edges.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ',';
        out += g.edge(edges[i]).id;
    }
    return out;
}

std::string write_strategy(const GameStructure& g, const MemorylessStrategy& s)
{
    std::ostringstream out;
    for (std::size_t st : sorted_by_id(g.states().size(), [&](std::size_t i) -> const std::string& { return g.state(i).id; })) {
        if (st < s.choice.size() && s.choice[st]) out << "choose " << g.state(st).id << ' ' << g.edge(*s.choice[st]).id << '\n';
    }
    return out.str();
}

std::string write_strategy(const GameStructure& g, const MooreStrategy& s)
{
    std::ostringstream out;
    for (const auto& m : s.memory) out << "memory " << m << '\n';
    out << "initial " << s.memory.at(s.initial) << '\n';
    const auto order = sorted_by_id(g.states().size(), [&](std::size_t i) -> const std::string& { return g.state(i).id; });
    for (std::size_t m = 0; m < s.memory_size(); ++m) {
        for (std::size_t st : order) {
            out << "update " << s.memory[m] << ' ' << g.state(st).id << " -> " << s.memory.at(s.update(m, st)) << '\n';
        }
    }
    for (std::size_t m = 0; m < s.memory_size(); ++m) {
        for (std::size_t st : order) {
            if (s.next(m, st)) out << "next " << s.memory[m] << ' ' << g.state(st).id << " -> " << g.edge(*s.next(m, st)).id << '\n';
        }
    }
    return out.str();
}

std::string write_credit(const WeightVector& credit)
{
    return "credit " + to_string(credit) + "\n";
}

std::string write_witness(const GameStructure& g, const SpoilerWitness& w)
{
    std::string choose;
    for (std::size_t st : sorted_by_id(g.states().size(), [&](std::size_t i) -> const std::string& { return g.state(i).id; })) {
        if (st >= w.opponent.choice.size() || !w.opponent.choice[st]) continue;
        if (!choose.empty()) choose += ',';
        choose += g.state(st).id + ":" + g.edge(*w.opponent.choice[st]).id;
    }
    if (choose.empty()) choose = "-";
    return "witness choose=" + choose + " stem=" + write_edge_list(g, w.lasso.stem) +
           " cycle=" + write_edge_list(g, w.lasso.cycle) + "\n";
}

} // namespace mwg
