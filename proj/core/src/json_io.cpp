#include "pebbling/json_io.hpp"

#include <sstream>

namespace pebbling {

std::string count_to_string(const Count& c) {
    return c.str();
}

Count count_from_string(const std::string& s) {
    return Count(s);
}

Json pebbling_fn_to_json(const Tree& tree, const PebblingFn& f) {
    Json j = Json::object();
    for (const auto& [v, c] : f.entries()) j[tree.display_name(v)] = count_to_string(c);
    return j;
}

PebblingFn pebbling_fn_from_json(const Tree& tree, const Json& j) {
    PebblingFn f;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto v = tree.find_vertex(it.key());
        if (!v) throw ParseError("unknown vertex '" + it.key() + "'");
        Count c = it->is_string() ? count_from_string(it->get<std::string>())
                                  : Count(it->get<std::int64_t>());
        if (c < 0) throw ParseError("negative count for vertex '" + it.key() + "'");
        f.add(*v, c);
    }
    return f;
}

PebblingFn parse_target_spec(const Tree& tree, const std::string& spec) {
    std::string trimmed = spec;
    auto first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty pebbling spec");
    if (trimmed[first] == '{') return pebbling_fn_from_json(tree, Json::parse(trimmed));

    PebblingFn f;
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto start = item.find_first_not_of(" \t");
        auto stop = item.find_last_not_of(" \t");
        if (start == std::string::npos) throw ParseError("empty item in pebbling spec");
        item = item.substr(start, stop - start + 1);
        std::string name = item;
        Count c = 1;
        auto colon = item.find(':');
        if (colon != std::string::npos) {
            name = item.substr(0, colon);
            try {
                c = count_from_string(item.substr(colon + 1));
            } catch (const std::exception&) {
                throw ParseError("bad count in '" + item + "'");
            }
            if (c < 0) throw ParseError("negative count in '" + item + "'");
        }
        auto v = tree.find_vertex(name);
        if (!v) throw ParseError("unknown vertex '" + name + "'");
        f.add(*v, c);
    }
    return f;
}

Json solution_to_json(const Tree& tree, const Solution& s) {
    Json moves = Json::array();
    for (const Move& m : s.moves)
        moves.push_back({{"from", tree.display_name(m.from)}, {"to", tree.display_name(m.to)}});
    return moves;
}

Solution solution_from_json(const Tree& tree, const Json& j) {
    Solution s;
    for (const auto& item : j) {
        auto from = tree.find_vertex(item.at("from").get<std::string>());
        auto to = tree.find_vertex(item.at("to").get<std::string>());
        if (!from || !to) throw ParseError("unknown vertex in move list");
        s.moves.push_back({*from, *to});
    }
    return s;
}

Json candidates_to_json(const Tree& tree, const std::vector<CandidateRecord>& candidates) {
    Json arr = Json::array();
    for (const CandidateRecord& c : candidates) {
        Json row;
        row["site"] = tree.display_name(c.site);
        row["superstack_leaf"] = tree.display_name(c.superstack_leaf);
        row["stack_depth"] = c.stack_depth;
        row["alpha_at_site"] = count_to_string(c.alpha_at_site);
        row["size"] = count_to_string(c.size);
        arr.push_back(std::move(row));
    }
    return arr;
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["n"] = inst.tree.n();
    Json edges = Json::array();
    for (auto [u, v] : inst.tree.edges())
        edges.push_back({inst.tree.display_name(u), inst.tree.display_name(v)});
    j["edges"] = std::move(edges);
    j["target"] = pebbling_fn_to_json(inst.tree, inst.target);
    if (inst.configuration)
        j["configuration"] = pebbling_fn_to_json(inst.tree, *inst.configuration);
    j["seed"] = inst.seed;
    j["generator"] = inst.generator;
    return j;
}

Instance instance_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::ostringstream edge_list;
    edge_list << "n " << n << "\n";
    for (const auto& e : j.at("edges"))
        edge_list << e.at(0).get<std::string>() << " " << e.at(1).get<std::string>() << "\n";
    Instance inst{Tree::parse_edge_list_string(edge_list.str()), {}, {}, 0, ""};
    inst.target = pebbling_fn_from_json(inst.tree, j.at("target"));
    if (j.contains("configuration"))
        inst.configuration = pebbling_fn_from_json(inst.tree, j.at("configuration"));
    if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("generator")) inst.generator = j.at("generator").get<std::string>();
    return inst;
}

}  // namespace pebbling
