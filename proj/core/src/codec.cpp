#include "gausslink/codec.hpp"

#include <cctype>
#include <map>

#include "json.hpp"

namespace gausslink {

namespace {

struct Token {
    bool over;      // O = over passage (tail), U = under (head)
    long label;
    int sign;
    size_t offset;  // of the O/U letter
};

}  // namespace

GaussDiagram parse_gauss_code(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    std::vector<std::vector<Token>> components(1);
    bool any_content = false;
    skip_ws();
    while (i < text.size()) {
        char c = text[i];
        if (c == '/') {
            components.emplace_back();
            any_content = true;
            ++i;
            skip_ws();
            continue;
        }
        if (c != 'O' && c != 'U')
            throw ParseError(std::string("expected 'O', 'U' or '/', got '") + c + "'", i);
        Token tok;
        tok.over = (c == 'O');
        tok.offset = i;
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected crossing label", i);
        tok.label = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            tok.label = tok.label * 10 + (text[i] - '0');
            ++i;
        }
        if (tok.label == 0) throw ParseError("crossing label must be positive", tok.offset + 1);
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw ParseError("expected sign '+' or '-'", i);
        tok.sign = text[i] == '+' ? 1 : -1;
        ++i;
        components.back().push_back(tok);
        any_content = true;
        skip_ws();
    }
    if (!any_content) throw ParseError("empty input", 0);

    GaussDiagram d;
    for (const auto& comp : components)
        d.component_lengths.push_back(static_cast<int>(comp.size()));

    struct Half {
        Endpoint at;
        int sign;
        size_t offset;
    };
    std::map<long, std::pair<std::vector<Half>, std::vector<Half>>> by_label;  // (O list, U list)
    for (size_t c = 0; c < components.size(); ++c)
        for (size_t p = 0; p < components[c].size(); ++p) {
            const Token& t = components[c][p];
            Half h{{static_cast<int>(c), static_cast<int>(p)}, t.sign, t.offset};
            if (t.over)
                by_label[t.label].first.push_back(h);
            else
                by_label[t.label].second.push_back(h);
        }

    for (const auto& [label, halves] : by_label) {
        const auto& [overs, unders] = halves;
        if (overs.size() + unders.size() != 2)
            throw ParseError("label " + std::to_string(label) + " appears " +
                                 std::to_string(overs.size() + unders.size()) + " times, need 2",
                             overs.empty() ? unders.front().offset : overs.front().offset);
        if (overs.size() != 1)
            throw ParseError("label " + std::to_string(label) + " needs one O and one U token",
                             overs.empty() ? unders.front().offset : overs.front().offset);
        if (overs[0].sign != unders[0].sign)
            throw ParseError("sign mismatch for label " + std::to_string(label),
                             unders[0].offset);
        d.arrows.push_back({overs[0].at, unders[0].at, overs[0].sign});
    }
    return d;
}

std::string serialize_gauss_code(const GaussDiagram& d) {
    auto table = slot_table(d);
    // labels 1..m in order of first appearance along slot order
    std::vector<int> label(d.arrows.size(), 0);
    int next = 1;
    for (size_t c = 0; c < table.size(); ++c)
        for (const SlotRef& ref : table[c]) {
            if (ref.arrow >= 0 && label[ref.arrow] == 0) label[ref.arrow] = next++;
        }
    std::string out;
    for (size_t c = 0; c < table.size(); ++c) {
        if (c > 0) out += '/';
        for (const SlotRef& ref : table[c]) {
            out += ref.is_head ? 'U' : 'O';
            out += std::to_string(label[ref.arrow]);
            out += d.arrows[ref.arrow].sign == 1 ? '+' : '-';
        }
    }
    return out;
}

std::string report_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["lk12"] = r.lk01;
    j["lk21"] = r.lk10;
    j["S"] = r.s;
    j["T"] = r.t;
    j["crossings"] = r.crossings;
    j["components"] = r.components;
    j["rii_lower_bound"] = r.rii_lower_bound_to_unlink;
    return j.dump();
}

}  // namespace gausslink
