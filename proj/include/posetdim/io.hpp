#ifndef POSETDIM_IO_HPP
#define POSETDIM_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "posetdim/decomposition.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/realizer.hpp"

namespace posetdim {

// Realizer file: header `r <n> <d>`, then d lines, each a permutation of
// 0..n-1 listed from bottom to top.
Realizer read_realizer(std::istream& in);
void write_realizer(std::ostream& out, const Realizer& realizer, std::size_t n);

nlohmann::ordered_json report_to_json(const ConstructionReport& report);
void write_report_text(std::ostream& out, const ConstructionReport& report);

Poset load_poset(const std::string& path);
Graph load_graph_gr(const std::string& path);
TreeDecomposition load_td(const std::string& path);

}  // namespace posetdim

#endif
