#pragma once

// Text format for node contents. A header line
//   node <id> alpha <count>            (layered code)
//   node <id> alpha <count> precoded=1 kappa=<K>
// is followed by one line per stored symbol: the 1-based block index and the
// symbol in hex. Extension symbols print their K coordinates as fixed-width
// hex digits, lowest coordinate first.

#include "regen/layered_code.hpp"
#include "regen/precoded_code.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace regen {

struct NodeHeader {
    int node = 0;
    std::size_t alpha = 0;
    std::optional<std::size_t> kappa;  // set for precoded contents
};

std::string node_file_name(int node);

void write_node(std::ostream& out, const NodeContents& c, unsigned width);
void write_node(std::ostream& out, const PrecodedNodeContents& c, std::size_t kappa, unsigned width);

/// Reads just the header; throws ParameterError on malformed input.
NodeHeader read_node_header(std::istream& in);

NodeContents read_node(std::istream& in, unsigned width);
PrecodedNodeContents read_precoded_node(std::istream& in, unsigned width);

}  // namespace regen
