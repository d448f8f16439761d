#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "graphconf/graphconf.hpp"

namespace testing_support {

using namespace graphconf;

inline std::shared_ptr<const ColoredGraph> share(ColoredGraph g) {
    return std::make_shared<const ColoredGraph>(std::move(g));
}

// 6-cycle colored A B C A B C: a 2-fold colored cover of the triangle.
inline ColoredGraph colored_hexagon() {
    return ColoredGraph({Color{"A"}, Color{"B"}, Color{"C"}, Color{"A"}, Color{"B"}, Color{"C"}},
                        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

inline GraphMorphism hexagon_to_triangle() {
    auto k3 = share(ColoredGraph({Color{"A"}, Color{"B"}, Color{"C"}}, {{0, 1}, {0, 2}, {1, 2}}));
    // hexagon edge i joins i and i+1, i.e. colors i%3 and (i+1)%3
    std::vector<EdgeImage> em;
    for (int i = 0; i < 6; ++i) {
        const int a = i % 3, b = (i + 1) % 3;
        const EdgeId img = (a == 0 || b == 0) ? (a + b == 1 ? 0 : 1) : 2;
        em.push_back({img, a > b});
    }
    return GraphMorphism(share(colored_hexagon()), k3, {0, 1, 2, 0, 1, 2}, em);
}

struct Named {
    std::string name;
    std::shared_ptr<const ColoredGraph> graph;
};

// The fixed battery shared by several suites.
inline std::vector<Named> battery() {
    return {{"K3", share(complete_graph(3))},           {"K4", share(complete_graph(4))},
            {"K5", share(complete_graph(5))},           {"K33", share(complete_bipartite_graph(3, 3))},
            {"K13", share(star_graph(3))},              {"hexagon", share(colored_hexagon())},
            {"K23", share(complete_bipartite_graph(2, 3))}, {"C6", share(cycle_graph(6))}};
}

inline std::string data_path(const std::string& file) { return std::string(GRAPHCONF_DATA_DIR) + "/" + file; }

} // namespace testing_support
