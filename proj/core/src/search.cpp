#include "gausslink/search.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "gausslink/invariants.hpp"
#include "json.hpp"

namespace gausslink {

namespace {

bool negative_inter_omega2(const MoveSite& s) {
    return s.polarity == Polarity::Negative && family_of(s.variant) == MoveFamily::Omega2 &&
           s.windows[0].first.component != s.windows[1].first.component;
}

int crossing_delta(const MoveSite& s) {
    switch (s.polarity) {
        case Polarity::Positive:
            return family_of(s.variant) == MoveFamily::Omega1 ? 1 : 2;
        case Polarity::Negative:
            return family_of(s.variant) == MoveFamily::Omega1 ? -1 : -2;
        default:
            return 0;
    }
}

}  // namespace

SearchResult min_negative_omega2(const GaussDiagram& source, const GaussDiagram& target,
                                 int max_crossings, long long max_states) {
    if (source.crossing_count() > max_crossings || target.crossing_count() > max_crossings)
        throw std::invalid_argument("min_negative_omega2: endpoints exceed max_crossings");

    const bool two_comp = source.component_count() == 2 && target.component_count() == 2;
    const long long t_target = two_comp ? multiple_linking_t(target) : 0;
    auto heuristic = [&](const GaussDiagram& d) -> long long {
        if (!two_comp) return 0;
        long long gap = t_target - multiple_linking_t(d);
        return gap > 0 ? gap : 0;  // only negative moves raise T
    };

    struct Node {
        long long cost;
        GaussDiagram rep;          // first-reached representative
        std::string parent_key;
        MoveSite via;
        bool has_parent = false;
    };
    std::unordered_map<std::string, Node> visited;
    // order by (f, -g): on equal f prefer the deeper node, so zero-cost
    // plateaus are not exhausted before the goal pops
    using QueueItem = std::tuple<long long, long long, std::string>;  // f, -g, key
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> frontier;

    GaussDiagram start = source;
    std::string start_key = encode(canonical_form(start, Equivalence::RotateAndPermute));
    std::string target_key = encode(canonical_form(target, Equivalence::RotateAndPermute));
    visited[start_key] = {0, start, "", {}, false};
    frontier.push({heuristic(start), 0, start_key});

    SearchResult result;
    std::unordered_map<std::string, bool> expanded;

    while (!frontier.empty()) {
        auto [f, neg_g, key] = frontier.top();
        long long cost = -neg_g;
        frontier.pop();
        auto it = visited.find(key);
        if (it == visited.end() || it->second.cost != cost || expanded.count(key)) continue;
        expanded[key] = true;
        ++result.states_explored;

        if (key == target_key) {
            result.status = SearchStatus::Found;
            result.min_negative_omega2 = cost;
            std::vector<MoveSite> path;
            const Node* node = &it->second;
            std::string cur = key;
            while (node->has_parent) {
                path.push_back(node->via);
                cur = node->parent_key;
                node = &visited.at(cur);
            }
            std::reverse(path.begin(), path.end());
            result.witness = path;
            return result;
        }
        if (result.states_explored >= max_states) {
            result.status = SearchStatus::Inconclusive;
            return result;
        }

        GaussDiagram rep = it->second.rep;  // copy: visited may rehash below
        for (const MoveSite& s : enumerate_sites(rep)) {
            if (rep.crossing_count() + crossing_delta(s) > max_crossings) continue;
            GaussDiagram next = apply_move(rep, s);
            long long step = negative_inter_omega2(s) ? 1 : 0;
            long long ncost = cost + step;
            std::string nkey = encode(canonical_form(next, Equivalence::RotateAndPermute));
            auto found = visited.find(nkey);
            if (found != visited.end() && found->second.cost <= ncost) continue;
            visited[nkey] = {ncost, next, key, s, true};
            frontier.push({ncost + heuristic(next), -ncost, nkey});
        }
    }
    result.status = SearchStatus::Unreachable;
    return result;
}

std::string search_result_to_json(const SearchResult& r) {
    nlohmann::ordered_json j;
    j["status"] = r.status == SearchStatus::Found          ? "found"
                  : r.status == SearchStatus::Unreachable ? "unreachable"
                                                          : "inconclusive";
    if (r.status == SearchStatus::Found)
        j["min_negative_omega2"] = r.min_negative_omega2;
    else
        j["min_negative_omega2"] = nullptr;
    j["states_explored"] = r.states_explored;
    auto w = nlohmann::json::array();
    for (const MoveSite& s : r.witness) w.push_back(nlohmann::json::parse(site_to_json(s)));
    j["witness"] = w;
    return j.dump();
}

}  // namespace gausslink
