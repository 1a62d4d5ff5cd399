#include "regen/node_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace regen {

namespace {

unsigned hex_digits(unsigned width) { return (width + 3) / 4; }

std::string hex(Symbol v, unsigned digits) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%0*x", static_cast<int>(digits), static_cast<unsigned>(v));
    return buf;
}

Symbol parse_hex(const std::string& s, unsigned width) {
    if (s.empty() || s.size() > hex_digits(width)) {
        throw ParameterError("bad hex symbol '" + s + "'");
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used, 16);
    } catch (const std::exception&) {
        throw ParameterError("bad hex symbol '" + s + "'");
    }
    if (used != s.size() || v >= (1ul << width)) {
        throw ParameterError("bad hex symbol '" + s + "'");
    }
    return static_cast<Symbol>(v);
}

bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            return true;
        }
    }
    return false;
}

std::pair<std::size_t, std::string> read_symbol_line(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) {
        throw ParameterError("node file ends before all symbols");
    }
    std::istringstream ls(line);
    long block = 0;
    std::string value;
    std::string extra;
    if (!(ls >> block >> value) || (ls >> extra) || block < 1) {
        throw ParameterError("malformed symbol line '" + line + "'");
    }
    return {static_cast<std::size_t>(block - 1), value};
}

}  // namespace

std::string node_file_name(int node) { return "node_" + std::to_string(node) + ".txt"; }

void write_node(std::ostream& out, const NodeContents& c, unsigned width) {
    out << "node " << c.node << " alpha " << c.symbols.size() << '\n';
    for (const auto& s : c.symbols) {
        out << (s.block + 1) << ' ' << hex(s.value, hex_digits(width)) << '\n';
    }
}

void write_node(std::ostream& out, const PrecodedNodeContents& c, std::size_t kappa, unsigned width) {
    out << "node " << c.node << " alpha " << c.symbols.size() << " precoded=1 kappa=" << kappa << '\n';
    for (const auto& s : c.symbols) {
        out << (s.block + 1) << ' ';
        for (Symbol v : s.value) {
            out << hex(v, hex_digits(width));
        }
        out << '\n';
    }
}

NodeHeader read_node_header(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) {
        throw ParameterError("empty node file");
    }
    std::istringstream ls(line);
    std::string tag_node;
    std::string tag_alpha;
    long node = 0;
    long alpha = -1;
    if (!(ls >> tag_node >> node >> tag_alpha >> alpha) || tag_node != "node" || tag_alpha != "alpha" || node < 1 ||
        alpha < 0) {
        throw ParameterError("malformed node header '" + line + "'");
    }
    NodeHeader h;
    h.node = static_cast<int>(node);
    h.alpha = static_cast<std::size_t>(alpha);
    std::string flag;
    std::string kappa;
    if (ls >> flag) {
        if (flag != "precoded=1" || !(ls >> kappa) || kappa.rfind("kappa=", 0) != 0) {
            throw ParameterError("malformed node header '" + line + "'");
        }
        try {
            std::size_t used = 0;
            const unsigned long kv = std::stoul(kappa.substr(6), &used);
            if (used != kappa.size() - 6 || kv == 0) {
                throw ParameterError("bad kappa");
            }
            h.kappa = kv;
        } catch (const std::exception&) {
            throw ParameterError("malformed node header '" + line + "'");
        }
    }
    return h;
}

NodeContents read_node(std::istream& in, unsigned width) {
    const NodeHeader h = read_node_header(in);
    if (h.kappa) {
        throw ParameterError("node file holds precoded contents");
    }
    NodeContents c;
    c.node = h.node;
    for (std::size_t i = 0; i < h.alpha; ++i) {
        auto [block, value] = read_symbol_line(in);
        c.symbols.push_back({block, parse_hex(value, width)});
    }
    std::string rest;
    if (next_line(in, rest)) {
        throw ParameterError("node file has trailing content");
    }
    return c;
}

PrecodedNodeContents read_precoded_node(std::istream& in, unsigned width) {
    const NodeHeader h = read_node_header(in);
    if (!h.kappa) {
        throw ParameterError("node file does not hold precoded contents");
    }
    const unsigned digits = hex_digits(width);
    PrecodedNodeContents c;
    c.node = h.node;
    for (std::size_t i = 0; i < h.alpha; ++i) {
        auto [block, value] = read_symbol_line(in);
        if (value.size() != *h.kappa * digits) {
            throw ParameterError("extension symbol has the wrong length");
        }
        ExtElement v;
        v.reserve(*h.kappa);
        for (std::size_t j = 0; j < *h.kappa; ++j) {
            v.push_back(parse_hex(value.substr(j * digits, digits), width));
        }
        c.symbols.push_back({block, std::move(v)});
    }
    std::string rest;
    if (next_line(in, rest)) {
        throw ParameterError("node file has trailing content");
    }
    return c;
}

}  // namespace regen
