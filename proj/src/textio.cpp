#include "permpat/textio.hpp"

#include <limits>

namespace permpat {

namespace {

constexpr std::string_view kOpenAngle = "\xE2\x9F\xA8";   // U+27E8
constexpr std::string_view kCloseAngle = "\xE2\x9F\xA9";  // U+27E9

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads a run of digits starting at pos; advances pos past it.
std::uint64_t read_number(std::string_view text, std::size_t& pos, std::uint64_t limit)
{
    const std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && is_digit(text[pos])) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > limit)
            throw ParseError(start, "number too large");
        ++pos;
    }
    return value;
}

Value read_value(std::string_view text, std::size_t& pos)
{
    return static_cast<Value>(
        read_number(text, pos, static_cast<std::uint64_t>(std::numeric_limits<Value>::max())));
}

// Whitespace/comma separated integers, or a single compact digit string.
std::vector<Value> read_value_list(std::string_view text)
{
    std::vector<Value> values;
    std::size_t pos = 0;
    std::size_t token_count = 0;
    std::size_t first_token_at = 0;
    std::size_t first_token_len = 0;
    bool have_separator = false;
    bool comma_pending = false;
    bool expect_value_after_comma = false;

    while (pos < text.size()) {
        const char c = text[pos];
        if (is_space(c)) {
            have_separator = true;
            ++pos;
        } else if (c == ',') {
            if (token_count == 0 || comma_pending)
                throw ParseError(pos, "unexpected ','");
            comma_pending = true;
            expect_value_after_comma = true;
            have_separator = true;
            ++pos;
        } else if (is_digit(c)) {
            if (token_count == 0) {
                first_token_at = pos;
            }
            const std::size_t start = pos;
            values.push_back(read_value(text, pos));
            if (token_count == 0)
                first_token_len = pos - start;
            ++token_count;
            comma_pending = false;
            expect_value_after_comma = false;
        } else {
            throw ParseError(pos, std::string("unexpected character '") + c + "'");
        }
    }
    if (expect_value_after_comma)
        throw ParseError(text.size(), "trailing ','");

    if (token_count == 1 && first_token_len >= 2 && !have_separator) {
        // Compact one-line form: one value per digit.
        if (first_token_len > 9)
            throw ParseError(first_token_at, "compact form is limited to 9 single-digit values");
        values.clear();
        for (std::size_t i = 0; i < first_token_len; ++i)
            values.push_back(text[first_token_at + i] - '0');
    }
    return values;
}

bool starts_with_at(std::string_view text, std::size_t pos, std::string_view what)
{
    return text.substr(pos, what.size()) == what;
}

struct SyntaxMarks {
    std::optional<std::size_t> bracket;
    std::optional<std::size_t> dash;
};

SyntaxMarks scan_marks(std::string_view text)
{
    SyntaxMarks m;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const bool bracket = text[i] == '[' || text[i] == ']' ||
                             starts_with_at(text, i, kOpenAngle) ||
                             starts_with_at(text, i, kCloseAngle);
        if (bracket && !m.bracket)
            m.bracket = i;
        if (text[i] == '-' && !m.dash)
            m.dash = i;
    }
    return m;
}

GeneralizedPattern parse_bracket(std::string_view text)
{
    std::vector<Value> values;
    std::vector<Block> blocks;
    std::size_t open_at = std::string_view::npos;
    Index block_start = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (is_space(c)) {
            ++pos;
        } else if (is_digit(c)) {
            values.push_back(read_value(text, pos));
        } else if (c == '[' || starts_with_at(text, pos, kOpenAngle)) {
            if (open_at != std::string_view::npos)
                throw ParseError(pos, "nested brackets");
            open_at = pos;
            block_start = values.size() + 1;
            pos += c == '[' ? 1 : kOpenAngle.size();
        } else if (c == ']' || starts_with_at(text, pos, kCloseAngle)) {
            if (open_at == std::string_view::npos)
                throw ParseError(pos, "unbalanced ']'");
            if (values.size() + 1 == block_start)
                throw ParseError(open_at, "empty block");
            blocks.push_back(Block{block_start, values.size()});
            open_at = std::string_view::npos;
            pos += c == ']' ? 1 : kCloseAngle.size();
        } else {
            throw ParseError(pos, std::string("unexpected character '") + c + "'");
        }
    }
    if (open_at != std::string_view::npos)
        throw ParseError(open_at, "unbalanced '['");
    return validate_pattern(std::move(values), std::move(blocks));
}

GeneralizedPattern parse_dash(std::string_view text)
{
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && is_space(text[begin]))
        ++begin;
    while (end > begin && is_space(text[end - 1]))
        --end;

    std::vector<Value> values;
    std::vector<Block> blocks;
    Index group_start = 1;
    auto close_group = [&](std::size_t at) {
        if (values.size() + 1 == group_start)
            throw ParseError(at, "empty group in dash notation");
        if (values.size() >= group_start + 1)
            blocks.push_back(Block{group_start, values.size()});
        group_start = values.size() + 1;
    };
    for (std::size_t pos = begin; pos < end; ++pos) {
        const char c = text[pos];
        if (is_digit(c))
            values.push_back(c - '0');
        else if (c == '-')
            close_group(pos);
        else
            throw ParseError(pos, std::string("unexpected character '") + c +
                                      "' in dash notation (single digits and '-' only)");
    }
    close_group(end);
    return validate_pattern(std::move(values), std::move(blocks));
}

}  // namespace

Permutation parse_permutation(std::string_view text)
{
    return validate_permutation(read_value_list(text));
}

GeneralizedPattern parse_pattern(std::string_view text, PatternSyntax syntax)
{
    const SyntaxMarks marks = scan_marks(text);
    if (marks.bracket && marks.dash)
        throw ParseError(std::max(*marks.bracket, *marks.dash),
                         "mixed bracket and dash syntax");
    switch (syntax) {
    case PatternSyntax::Bracket:
        if (marks.dash)
            throw ParseError(*marks.dash, "'-' is not valid in bracket syntax");
        return parse_bracket(text);
    case PatternSyntax::Dash:
        if (marks.bracket)
            throw ParseError(*marks.bracket, "brackets are not valid in dash syntax");
        return parse_dash(text);
    case PatternSyntax::Auto:
        break;
    }
    if (marks.bracket)
        return parse_bracket(text);
    if (marks.dash)
        return parse_dash(text);
    return validate_pattern(read_value_list(text), {});
}

std::string serialize_permutation(const Permutation& p)
{
    std::string out;
    for (Value v : p.values()) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(v);
    }
    return out;
}

std::string serialize_pattern(const GeneralizedPattern& p)
{
    std::string out;
    const auto values = p.values();
    auto block = p.blocks().begin();
    for (Index i = 1; i <= values.size(); ++i) {
        if (i > 1)
            out += ' ';
        const bool opens = block != p.blocks().end() && block->first == i;
        if (opens)
            out += '[';
        out += std::to_string(values[i - 1]);
        if (block != p.blocks().end() && block->last == i) {
            out += ']';
            ++block;
        }
    }
    return out;
}

std::string serialize_pattern_dash(const GeneralizedPattern& p)
{
    if (p.size() > 9)
        throw DomainError("dash notation requires single-digit values (k <= 9)");
    std::string out;
    for (Index i = 1; i <= p.size(); ++i) {
        if (i > 1 && !p.adjacent_to_right(i - 1))
            out += '-';
        out += static_cast<char>('0' + p.at(i));
    }
    return out;
}

GraphInput parse_graph(std::string_view text)
{
    std::optional<Index> vertex_count;
    Index declared_edges = 0;
    std::optional<Index> k;
    std::vector<Edge> edges;

    const std::uint64_t index_limit = std::numeric_limits<Value>::max();
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos)
            line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        // Tokenize the line into words with their offsets.
        std::vector<std::pair<std::size_t, std::string_view>> words;
        for (std::size_t i = 0; i < line.size();) {
            if (is_space(line[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j]))
                ++j;
            words.emplace_back(line_start + i, line.substr(i, j - i));
            i = j;
        }

        auto number = [&](std::size_t w) -> std::uint64_t {
            const auto [offset, word] = words[w];
            std::size_t pos = 0;
            const auto v = read_number(word, pos, index_limit);
            if (pos != word.size() || word.empty())
                throw ParseError(offset + pos, "expected a non-negative integer");
            return v;
        };

        if (!words.empty()) {
            const auto [offset, head] = words.front();
            if (!vertex_count) {
                if (head != "p" || words.size() != 3)
                    throw ParseError(offset, "expected header 'p <vertices> <edges>'");
                vertex_count = number(1);
                declared_edges = number(2);
                if (*vertex_count < 1)
                    throw ParseError(words[1].first, "graph needs at least one vertex");
            } else if (head == "p") {
                throw ParseError(offset, "duplicate header line");
            } else if (head == "k") {
                if (k)
                    throw ParseError(offset, "duplicate 'k' line");
                if (words.size() != 2)
                    throw ParseError(offset, "expected 'k <k>'");
                k = number(1);
                if (*k < 1)
                    throw ParseError(words[1].first, "k must be positive");
            } else {
                if (words.size() != 2)
                    throw ParseError(offset, "expected edge line '<u> <v>'");
                edges.push_back(Edge{number(0), number(1)});
            }
        }
        line_start = line_end + 1;
    }
    if (!vertex_count)
        throw ParseError(text.size(), "missing header 'p <vertices> <edges>'");

    Graph g = validate_graph(*vertex_count, std::move(edges));
    if (g.edges().size() != declared_edges)
        throw ValidationError(ValidationError::Kind::EdgeCount, 0,
                              "header declares " + std::to_string(declared_edges) +
                                  " edges but " + std::to_string(g.edges().size()) +
                                  " were listed");
    return GraphInput{std::move(g), k};
}

std::string serialize_graph(const Graph& g, std::optional<Index> k)
{
    std::string out = "p " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edges().size()) + "\n";
    if (k)
        out += "k " + std::to_string(*k) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace permpat
