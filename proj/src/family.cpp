#include "evictlab/family.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace evictlab {

namespace {

void require_positive(const std::vector<long>& params, size_t count, const char* what) {
    if (params.size() != count) throw ContractError(std::string(what) + ": wrong parameter count");
    for (long p : params)
        if (p < 1) throw ContractError(std::string(what) + ": parameters must be positive");
}

void check_order(long n, const char* what) {
    if (n > max_vertices)
        throw CapacityError(std::string(what) + ": order " + std::to_string(n) + " exceeds 64 vertices");
}

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw ParseError(ParseError::Kind::bad_format,
                             "family spec: expected '" + std::string(1, c) + "' at offset " + std::to_string(pos));
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw ParseError(ParseError::Kind::bad_format, "family spec: expected a number");
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    std::string word() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError(ParseError::Kind::bad_format, "family spec: expected a family name");
        return std::string(text.substr(start, pos - start));
    }

    FamilySpec spec() {
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            long k = integer();
            expect('*');
            FamilySpec inner = spec();
            return FamilySpec{FamilySpec::Kind::copies, {k}, {std::move(inner)}};
        }
        std::string name = word();
        if (name == "join" || name == "union") {
            expect('(');
            FamilySpec a = spec();
            expect(',');
            FamilySpec b = spec();
            expect(')');
            auto kind = name == "join" ? FamilySpec::Kind::join : FamilySpec::Kind::disjoint_union;
            return FamilySpec{kind, {}, {std::move(a), std::move(b)}};
        }
        static const std::map<std::string, FamilySpec::Kind> names = {
            {"path", FamilySpec::Kind::path},
            {"cycle", FamilySpec::Kind::cycle},
            {"complete", FamilySpec::Kind::complete},
            {"empty", FamilySpec::Kind::empty},
            {"kbip", FamilySpec::Kind::complete_bipartite},
            {"complete_bipartite", FamilySpec::Kind::complete_bipartite},
            {"star", FamilySpec::Kind::star},
            {"spider", FamilySpec::Kind::spider},
            {"gk", FamilySpec::Kind::gk},
            {"g2", FamilySpec::Kind::g2},
            {"g2prime", FamilySpec::Kind::g2prime},
        };
        auto it = names.find(name);
        if (it == names.end())
            throw ParseError(ParseError::Kind::bad_format, "family spec: unknown family '" + name + "'");
        FamilySpec out{it->second, {}, {}};
        if (eat(':')) {
            out.params.push_back(integer());
            // a comma continues the parameter list only when a digit follows;
            // otherwise it belongs to an enclosing join/union
            while (true) {
                size_t save = pos;
                if (!eat(',')) break;
                skip_ws();
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    pos = save;
                    break;
                }
                long value = integer();
                skip_ws();
                if (pos < text.size() && text[pos] == '*') {  // heads a copies spec instead
                    pos = save;
                    break;
                }
                out.params.push_back(value);
            }
        }
        return out;
    }
};

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    Parser p{text};
    FamilySpec s = p.spec();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError(ParseError::Kind::bad_format, "family spec: trailing input after spec");
    return s;
}

std::string FamilySpec::describe() const {
    std::ostringstream out;
    auto args = [&](size_t n) {
        for (size_t i = 0; i < n; ++i) out << (i ? "," : ":") << params[i];
    };
    switch (kind) {
        case Kind::path: out << "path"; args(1); break;
        case Kind::cycle: out << "cycle"; args(1); break;
        case Kind::complete: out << "complete"; args(1); break;
        case Kind::empty: out << "empty"; args(1); break;
        case Kind::complete_bipartite: out << "kbip"; args(2); break;
        case Kind::star: out << "star"; args(1); break;
        case Kind::spider: out << "spider"; args(1); break;
        case Kind::gk: out << "gk"; args(1); break;
        case Kind::g2: out << "g2"; break;
        case Kind::g2prime: out << "g2prime"; break;
        case Kind::join: out << "join(" << children[0].describe() << "," << children[1].describe() << ")"; break;
        case Kind::disjoint_union:
            out << "union(" << children[0].describe() << "," << children[1].describe() << ")";
            break;
        case Kind::copies: out << params[0] << "*" << children[0].describe(); break;
    }
    return out.str();
}

Graph make_path(int n) {
    check_order(n, "path");
    Graph g(n, "P" + std::to_string(n));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw ContractError("cycle: needs at least 3 vertices");
    check_order(n, "cycle");
    Graph g(n, "C" + std::to_string(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_complete(int n) {
    check_order(n, "complete");
    Graph g(n, "K" + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_empty(int n) {
    check_order(n, "empty");
    return Graph(n, "E" + std::to_string(n));
}

Graph make_complete_bipartite(int m, int n) {
    check_order(static_cast<long>(m) + n, "kbip");
    Graph g(m + n, "K" + std::to_string(m) + "," + std::to_string(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph make_star(int k) {
    check_order(static_cast<long>(k) + 1, "star");
    Graph g(k + 1, "K1," + std::to_string(k));
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

Graph make_spider(int k) {
    check_order(2L * k + 1, "spider");
    Graph g(2 * k + 1, "Sp(2;" + std::to_string(k) + ")");
    for (int i = 1; i <= k; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, k + i);
    }
    return g;
}

Graph make_gk(int k) {
    check_order(7L * k + 2, "gk");
    Graph g(7 * k + 2, "G" + std::to_string(k));
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < 7; ++i) g.add_edge(7 * c + i, 7 * c + (i + 1) % 7);
    int v = 7 * k, w = 7 * k + 1;
    for (int u = 0; u < 7 * k; ++u) g.add_edge(v, u);
    g.add_edge(v, w);
    return g;
}

Graph make_join(const Graph& a, const Graph& b) {
    check_order(static_cast<long>(a.size()) + b.size(), "join");
    Graph g(a.size() + b.size());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.size() + u, a.size() + v);
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < b.size(); ++v) g.add_edge(u, a.size() + v);
    return g;
}

Graph make_disjoint_union(const Graph& a, const Graph& b) {
    check_order(static_cast<long>(a.size()) + b.size(), "union");
    Graph g(a.size() + b.size());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.size() + u, a.size() + v);
    return g;
}

Graph figure_g2() {
    Graph g(9, "G2");
    // v2 side: v2-v2', v2-v2'', v2-v2''', v2'-v2'', v2'-v2''', pendant v0
    g.add_edge(0, 2);
    g.add_edge(2, 4);
    g.add_edge(2, 6);
    g.add_edge(2, 8);
    g.add_edge(4, 6);
    g.add_edge(4, 8);
    // v1 side: v1-v1', v1-v1'', v1-v1''', v1'-v1'', v1'-v1'''
    g.add_edge(1, 3);
    g.add_edge(1, 5);
    g.add_edge(1, 7);
    g.add_edge(3, 5);
    g.add_edge(3, 7);
    // bridge between the sides
    g.add_edge(4, 3);
    return g;
}

Graph figure_g2_prime() {
    Graph g = add_edge(figure_g2(), 0, 1);
    g.set_name("G2'");
    return g;
}

Graph generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::path:
            require_positive(spec.params, 1, "path");
            return make_path(static_cast<int>(spec.params[0]));
        case Kind::cycle:
            require_positive(spec.params, 1, "cycle");
            return make_cycle(static_cast<int>(spec.params[0]));
        case Kind::complete:
            require_positive(spec.params, 1, "complete");
            return make_complete(static_cast<int>(spec.params[0]));
        case Kind::empty:
            require_positive(spec.params, 1, "empty");
            return make_empty(static_cast<int>(spec.params[0]));
        case Kind::complete_bipartite:
            require_positive(spec.params, 2, "kbip");
            return make_complete_bipartite(static_cast<int>(spec.params[0]), static_cast<int>(spec.params[1]));
        case Kind::star:
            require_positive(spec.params, 1, "star");
            return make_star(static_cast<int>(spec.params[0]));
        case Kind::spider:
            require_positive(spec.params, 1, "spider");
            return make_spider(static_cast<int>(spec.params[0]));
        case Kind::gk:
            require_positive(spec.params, 1, "gk");
            return make_gk(static_cast<int>(spec.params[0]));
        case Kind::g2:
            return figure_g2();
        case Kind::g2prime:
            return figure_g2_prime();
        case Kind::join: {
            Graph g = make_join(generate(spec.children[0]), generate(spec.children[1]));
            g.set_name(spec.describe());
            return g;
        }
        case Kind::disjoint_union: {
            Graph g = make_disjoint_union(generate(spec.children[0]), generate(spec.children[1]));
            g.set_name(spec.describe());
            return g;
        }
        case Kind::copies: {
            require_positive(spec.params, 1, "copies");
            Graph part = generate(spec.children[0]);
            check_order(spec.params[0] * part.size(), "copies");
            Graph g = part;
            for (long i = 1; i < spec.params[0]; ++i) g = make_disjoint_union(g, part);
            g.set_name(spec.describe());
            return g;
        }
    }
    throw ContractError("family spec: unreachable kind");
}

}  // namespace evictlab
