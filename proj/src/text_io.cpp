#include "colqsym/text_io.hpp"

#include "colqsym/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace colqsym {

namespace {

struct Item {
    int value;
    int color;
};

int parse_int(std::string_view digits, std::string_view token)
{
    int out = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
        throw ParseError("expected a nonnegative integer", std::string(token));
    return out;
}

std::vector<Item> parse_items(std::string_view text)
{
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            compact.push_back(ch);
    if (compact.empty())
        throw ParseError("empty input", "");
    std::vector<Item> items;
    std::string_view rest = compact;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        const auto caret = token.find('^');
        Item item{};
        if (caret == std::string_view::npos) {
            item = {parse_int(token, token), 0};
        } else {
            item.value = parse_int(token.substr(0, caret), token);
            item.color = parse_int(token.substr(caret + 1), token);
        }
        items.push_back(item);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return items;
}

int resolve_r(const std::vector<Item>& items, std::optional<int> r)
{
    int top = 0;
    for (const auto& it : items)
        top = std::max(top, it.color);
    if (!r)
        return top + 1;
    if (*r < 1)
        throw ParseError("number of colors must be positive", std::to_string(*r));
    for (const auto& it : items)
        if (it.color >= *r)
            throw ParseError("color out of range", std::to_string(it.value) + "^" + std::to_string(it.color));
    return *r;
}

template <class Seq>
std::string join(const Seq& xs, const char* sep)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        if (!first)
            os << sep;
        first = false;
        os << x;
    }
    return os.str();
}

template <class Tag>
std::string partition_expansion_table(const Expansion<Tag>& e)
{
    std::ostringstream os;
    os << Tag::name << " expansion (n=" << e.n << ", r=" << e.r << ")\n";
    for (const auto& [index, c] : e.coefficients)
        os << "  " << (c < 0 ? "-" : "+") << " " << (c < 0 ? Integer(-c) : c) << " * " << Tag::name << "_"
           << format(index) << "\n";
    return os.str();
}

} // namespace

ColoredComposition parse_colored_composition(std::string_view text, std::optional<int> r)
{
    const auto items = parse_items(text);
    const int colors = resolve_r(items, r);
    std::vector<int> parts, cols;
    for (const auto& it : items) {
        if (it.value < 1)
            throw ParseError("composition parts must be positive",
                             std::to_string(it.value) + "^" + std::to_string(it.color));
        parts.push_back(it.value);
        cols.push_back(it.color);
    }
    return ColoredComposition(std::move(parts), std::move(cols), colors);
}

ColoredPermutation parse_colored_permutation(std::string_view text, std::optional<int> r)
{
    const auto items = parse_items(text);
    const int colors = resolve_r(items, r);
    const int n = static_cast<int>(items.size());
    std::vector<bool> seen(n + 1, false);
    std::vector<int> word, cols;
    for (const auto& it : items) {
        const std::string token = std::to_string(it.value) + "^" + std::to_string(it.color);
        if (it.value < 1 || it.value > n)
            throw ParseError("letter outside 1..n", token);
        if (seen[it.value])
            throw ParseError("repeated letter", token);
        seen[it.value] = true;
        word.push_back(it.value);
        cols.push_back(it.color);
    }
    return ColoredPermutation(Permutation(std::move(word)), ColorVector(std::move(cols), colors));
}

std::string format(const ColoredComposition& ce)
{
    std::vector<std::string> items;
    for (int i = 0; i < ce.length(); ++i)
        items.push_back(std::to_string(ce.parts()[i]) + "^" + std::to_string(ce.colors()[i]));
    return join(items, ",");
}

std::string format(const ColoredSet& cs)
{
    std::vector<std::string> items;
    for (const auto& p : cs.pairs())
        items.push_back(std::to_string(p.value) + "^" + std::to_string(p.color));
    return "{" + join(items, ",") + "}";
}

std::string format(const ColoredPermutation& a)
{
    std::vector<std::string> items;
    for (int i = 1; i <= a.size(); ++i)
        items.push_back(std::to_string(a.perm()(i)) + "^" + std::to_string(a.colors()[i]));
    return join(items, ",");
}

std::string format(const Partition& l) { return "(" + join(l.parts(), ",") + ")"; }

std::string format(const RPartitePartition& bll)
{
    std::vector<std::string> items;
    for (const auto& l : bll.components())
        items.push_back(format(l));
    return "(" + join(items, ",") + ")";
}

std::string format_table(const RPartiteTableau& bq)
{
    std::ostringstream os;
    for (int j = 0; j < bq.colors_count(); ++j) {
        const auto& t = bq.components()[j];
        os << "component " << j << ":\n";
        if (t.cells() == 0)
            os << "  (empty)\n";
        for (int i = 0; i < t.shape().rows(); ++i) {
            os << "  " << std::string(3 * t.shape().row_start(i), ' ');
            for (int v : t.rows()[i]) {
                std::string cell = std::to_string(v);
                os << std::string(3 - std::min<std::size_t>(3, cell.size()), ' ') << cell;
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string format_table(const SchurExpansion& e) { return partition_expansion_table(e); }

std::string format_table(const HExpansion& e) { return partition_expansion_table(e); }

std::string format_table(const FExpansion& e)
{
    std::ostringstream os;
    os << "f expansion (n=" << e.n << ", r=" << e.r << ")\n";
    for (const auto& [ce, c] : e.coefficients)
        os << "  " << (c < 0 ? "-" : "+") << " " << (c < 0 ? Integer(-c) : c) << " * F_(" << format(ce) << ")\n";
    return os.str();
}

} // namespace colqsym
