#pragma once

#include <string>

#include "frp/frp2.hpp"
#include "frp/gadget.hpp"
#include "frp/graph.hpp"
#include "frp/tables.hpp"

namespace frp {

// Stable serializers: fields in documented order, INF rendered as null, one
// trailing newline. Identical inputs produce byte-identical text.
std::string path_to_json(const PathSeq& p);
std::string f_table_to_json(const FTable& f);
std::string two_fault_table_to_json(const TwoFaultTable& t, const Graph& g);
std::string fault_tuple_table_to_json(const FaultTupleTable& t, const Graph& g);
std::string gadget_layout_to_json(const GadgetLayout& lay);

}  // namespace frp
