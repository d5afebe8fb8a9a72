#include "permpat/folog.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace permpat::fo {

Structure::Structure(const Permutation& t) : text_(t.values().begin(), t.values().end()) {}

std::vector<std::pair<Index, Index>> Structure::text_less_pairs() const
{
    std::vector<std::pair<Index, Index>> out;
    const Index n = domain_size();
    for (Index x = 1; x <= n; ++x)
        for (Index y = 1; y <= n; ++y)
            if (text_less(x, y))
                out.emplace_back(x, y);
    return out;
}

std::vector<std::pair<Index, Index>> Structure::succ_pairs() const
{
    std::vector<std::pair<Index, Index>> out;
    for (Index x = 1; x < domain_size(); ++x)
        out.emplace_back(x, x + 1);
    return out;
}

Structure encode_structure(const Permutation& t) { return Structure(t); }

Formula encode_formula(const GeneralizedPattern& p)
{
    Formula f;
    f.var_count = p.size();
    for (Index i = 1; i <= p.size(); ++i)
        for (Index j = i + 1; j <= p.size(); ++j) {
            if (p.at(i) < p.at(j))
                f.pos_literals.emplace_back(i, j);
            else
                f.neg_literals.emplace_back(i, j);
        }
    for (Index i = 1; i < p.size(); ++i)
        if (p.adjacent_to_right(i))
            f.adj_literals.push_back(i);
    return f;
}

namespace {

struct Literal {
    Index earlier;  // variable index < the one being assigned
    enum { Pos, Neg, Adj } kind;
};

class Checker {
public:
    Checker(const Structure& s, const Formula& f)
        : s_(s), k_(f.var_count), by_var_(f.var_count + 1), x_(f.var_count + 1, 0)
    {
        for (auto [i, j] : f.pos_literals)
            add(i, j, Literal::Pos);
        for (auto [i, j] : f.neg_literals)
            add(i, j, Literal::Neg);
        for (Index i : f.adj_literals)
            add(i, i + 1, Literal::Adj);
    }

    bool search(Index var)
    {
        if (var > k_)
            return true;
        const Index n = s_.domain_size();
        if (n < k_)
            return false;
        for (Index x = x_[var - 1] + 1; x + (k_ - var) <= n; ++x) {
            x_[var] = x;
            if (holds(var) && search(var + 1))
                return true;
        }
        return false;
    }

    std::vector<Index> witness() const { return {x_.begin() + 1, x_.end()}; }

private:
    void add(Index i, Index j, decltype(Literal::kind) kind)
    {
        // Attached to the later variable; formulas always have i < j.
        by_var_.at(j).push_back(Literal{i, kind});
    }

    bool holds(Index var) const
    {
        for (const Literal& lit : by_var_[var]) {
            const Index xe = x_[lit.earlier];
            const Index xv = x_[var];
            switch (lit.kind) {
            case Literal::Pos:
                if (!s_.text_less(xe, xv))
                    return false;
                break;
            case Literal::Neg:
                if (s_.text_less(xe, xv))
                    return false;
                break;
            case Literal::Adj:
                if (!s_.succ(xe, xv))
                    return false;
                break;
            }
        }
        return true;
    }

    const Structure& s_;
    Index k_;
    std::vector<std::vector<Literal>> by_var_;
    std::vector<Index> x_;  // x_[0] = 0 anchors the chain
};

}  // namespace

CheckResult model_check(const Structure& s, const Formula& f)
{
    if (f.var_count < 1)
        throw DomainError("model_check needs at least one variable");
    Checker checker(s, f);
    CheckResult r;
    r.satisfied = checker.search(1);
    if (r.satisfied)
        r.witness = checker.witness();
    return r;
}

std::string export_instance(const Structure& s, const Formula& f)
{
    std::string out = "fo " + std::to_string(s.domain_size()) + " " + std::to_string(f.var_count);
    auto line = [&out](const char* tag, Index a, std::optional<Index> b = std::nullopt) {
        out += '\n';
        out += tag;
        out += ' ' + std::to_string(a);
        if (b)
            out += ' ' + std::to_string(*b);
    };
    for (auto [x, y] : s.text_less_pairs())
        line("tl", x, y);
    for (auto [x, y] : s.succ_pairs())
        line("s", x, y);
    for (auto [i, j] : f.pos_literals)
        line("pos", i, j);
    for (auto [i, j] : f.neg_literals)
        line("neg", i, j);
    for (Index i : f.adj_literals)
        line("adj", i);
    return out;
}

Instance parse_instance(std::string_view text)
{
    std::optional<std::pair<Index, Index>> header;
    std::vector<std::pair<Index, Index>> tl, succ, pos, neg;
    std::vector<Index> adj;

    std::size_t line_start = 0;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos)
            line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        std::vector<std::string_view> words;
        for (std::size_t i = 0; i < line.size();) {
            if (line[i] == ' ') {
                ++i;
                continue;
            }
            const std::size_t j = std::min(line.find(' ', i), line.size());
            words.push_back(line.substr(i, j - i));
            i = j;
        }
        auto number = [&](std::size_t w) -> Index {
            const std::string_view word = words[w];
            if (word.empty() || word.size() > 18 ||
                !std::all_of(word.begin(), word.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw ParseError(line_start, "expected a non-negative integer");
            Index v = 0;
            for (char c : word)
                v = v * 10 + static_cast<Index>(c - '0');
            return v;
        };
        auto expect_words = [&](std::size_t count) {
            if (words.size() != count)
                throw ParseError(line_start, "malformed '" + std::string(words[0]) + "' line");
        };

        if (words.empty()) {
            if (line_end < text.size() || !header)
                throw ParseError(line_start, "empty line");
        } else if (!header) {
            if (words[0] != "fo")
                throw ParseError(line_start, "expected header 'fo <n> <k>'");
            expect_words(3);
            header = std::pair{number(1), number(2)};
        } else if (words[0] == "tl") {
            expect_words(3);
            tl.emplace_back(number(1), number(2));
        } else if (words[0] == "s") {
            expect_words(3);
            succ.emplace_back(number(1), number(2));
        } else if (words[0] == "pos") {
            expect_words(3);
            pos.emplace_back(number(1), number(2));
        } else if (words[0] == "neg") {
            expect_words(3);
            neg.emplace_back(number(1), number(2));
        } else if (words[0] == "adj") {
            expect_words(2);
            adj.push_back(number(1));
        } else {
            throw ParseError(line_start, "unknown line tag '" + std::string(words[0]) + "'");
        }
        line_start = line_end + 1;
    }
    if (!header)
        throw ParseError(0, "missing header 'fo <n> <k>'");
    const auto [n, k] = *header;
    if (n < 1 || n > static_cast<Index>(std::numeric_limits<Value>::max()))
        throw ParseError(0, "domain size out of range");

    // Recover T from text_less: T(x) = 1 + #{y : T(y) < T(x)}.
    std::vector<Value> values(n, 1);
    for (auto [x, y] : tl) {
        if (x < 1 || y < 1 || x > n || y > n)
            throw ParseError(0, "tl tuple outside the domain");
        ++values[y - 1];
    }
    std::optional<Permutation> t;
    try {
        t = validate_permutation(values);
    } catch (const ValidationError&) {
        throw ParseError(0, "tl relation is not the strict order of a permutation");
    }
    Structure s(*t);
    std::sort(tl.begin(), tl.end());
    std::sort(succ.begin(), succ.end());
    if (tl != s.text_less_pairs())
        throw ParseError(0, "tl relation is not the strict order of a permutation");
    if (succ != s.succ_pairs())
        throw ParseError(0, "s relation is not the successor relation on 1..n");

    Formula f;
    f.var_count = k;
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    std::sort(adj.begin(), adj.end());
    std::set<std::pair<Index, Index>> covered;
    for (const auto* lits : {&pos, &neg})
        for (auto [i, j] : *lits) {
            if (i < 1 || j > k || i >= j)
                throw ParseError(0, "literal pair outside 1 <= i < j <= k");
            if (!covered.insert({i, j}).second)
                throw ParseError(0, "pair constrained twice");
        }
    if (covered.size() != k * (k - (k > 0 ? 1 : 0)) / 2)
        throw ParseError(0, "every pair i < j needs exactly one pos or neg literal");
    for (Index i : adj)
        if (i < 1 || i >= k)
            throw ParseError(0, "adj index outside 1..k-1");
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
        throw ParseError(0, "duplicate adj literal");
    f.pos_literals = std::move(pos);
    f.neg_literals = std::move(neg);
    f.adj_literals = std::move(adj);
    return Instance{std::move(s), std::move(f)};
}

}  // namespace permpat::fo
