#include <falg/corpus.hpp>

namespace falg {

std::vector<std::pair<std::string, Multigraph>> builtin_corpus() {
  using E = Multigraph::Edge;
  return {
      {"empty", Multigraph(0, {})},
      {"loop", Multigraph(1, {E{0, 0}})},
      {"edge", Multigraph(2, {E{0, 1}})},
      {"parallel2", Multigraph(2, {E{0, 1}, E{0, 1}})},
      {"path3", Multigraph(3, {E{0, 1}, E{1, 2}})},
      {"triangle", Multigraph(3, {E{0, 1}, E{1, 2}, E{0, 2}})},
      {"triangle_loop",
       Multigraph(3, {E{0, 1}, E{1, 2}, E{0, 2}, E{1, 1}})},
      {"two_edges", Multigraph(4, {E{0, 1}, E{2, 3}})},
      {"k4", Multigraph(4, {E{0, 1}, E{0, 2}, E{0, 3}, E{1, 2}, E{1, 3},
                            E{2, 3}})},
      {"cycle4", Multigraph(4, {E{0, 1}, E{1, 2}, E{2, 3}, E{0, 3}})},
      {"triple_edge", Multigraph(2, {E{0, 1}, E{0, 1}, E{0, 1}})},
  };
}

}  // namespace falg
