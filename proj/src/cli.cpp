#include "regen/cli.hpp"
#include "regen/combinatorics.hpp"
#include "regen/layered_code.hpp"
#include "regen/node_io.hpp"
#include "regen/precoded_code.hpp"
#include "regen/tradeoff.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace regen {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

constexpr unsigned kFieldWidth = 8;
constexpr std::uint64_t kDefaultSeed = 1;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- formatting

json big_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

json rational_json(const Rational& x) {
    return {{"num", big_json(numerator_of(x))}, {"den", big_json(denominator_of(x))}, {"float", to_double(x)}};
}

std::string float_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- files

fs::path output_path(const std::string& p) {
    const char* root = std::getenv("REGEN_OUTPUT_DIR");
    if (root != nullptr && *root != '\0' && fs::path(p).is_relative()) {
        return fs::path(root) / p;
    }
    return p;
}

void write_atomic(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        o << content;
        if (!o) {
            throw UsageError("cannot write " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Symbol> bytes_to_symbols(const std::string& bytes) {
    std::vector<Symbol> out;
    out.reserve(bytes.size());
    for (unsigned char c : bytes) {
        out.push_back(c);
    }
    return out;
}

std::string symbols_to_bytes(std::span<const Symbol> s) {
    std::string out;
    out.reserve(s.size());
    for (Symbol v : s) {
        out.push_back(static_cast<char>(v));
    }
    return out;
}

std::vector<Symbol> random_symbols(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Symbol> pick(0, (1u << kFieldWidth) - 1);
    std::vector<Symbol> out(count);
    for (auto& v : out) {
        v = pick(rng);
    }
    return out;
}

// ---------------------------------------------------------------- stored codes

json params_json(const SystemParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"e", p.e}, {"m", p.m}, {"r", p.r}, {"t", p.t}};
}

// A node directory holds manifest.json, design.txt and node_<i>.txt files.
struct StoredCode {
    json manifest;
    SystemParams params;
    bool precoded = false;
    std::unique_ptr<LayeredCode> layered;
    std::unique_ptr<PrecodedCode> pre;
};

SystemParams params_from(const json& p) {
    try {
        return {p.at("n").get<int>(), p.at("k").get<int>(), p.at("d").get<int>(), p.at("e").get<int>(),
                p.at("m").get<int>(), p.at("r").get<int>(), p.at("t").get<int>()};
    } catch (const json::exception& ex) {
        throw UsageError(std::string("malformed manifest parameters: ") + ex.what());
    }
}

StoredCode load_stored(const fs::path& dir) {
    StoredCode s;
    try {
        s.manifest = json::parse(read_file(dir / "manifest.json"));
    } catch (const json::parse_error& ex) {
        throw UsageError(std::string("malformed manifest: ") + ex.what());
    }
    if (!s.manifest.contains("code")) {
        throw UsageError("manifest has no code section");
    }
    const json& code = s.manifest["code"];
    s.params = params_from(code);
    s.precoded = code.value("precoded", false);
    if (s.precoded) {
        const PrecodedParams pp{s.params.n, s.params.k, s.params.d, s.params.e, s.params.m, s.params.r};
        s.pre = std::make_unique<PrecodedCode>(pp, std::make_shared<GaloisField>(kFieldWidth));
        if (code.contains("modulus") && code["modulus"].get<Poly>() != s.pre->ext().modulus()) {
            throw std::logic_error("extension field modulus differs from the one used at encoding");
        }
    } else {
        const BlockDesign design = load_design_file((dir / "design.txt").string());
        s.layered = std::make_unique<LayeredCode>(s.params, design, std::make_shared<GaloisField>(kFieldWidth));
    }
    return s;
}

NodeContents read_layered_node(const fs::path& dir, int node) {
    std::ifstream in(dir / node_file_name(node));
    if (!in) {
        throw UsageError("missing node file " + (dir / node_file_name(node)).string());
    }
    NodeContents c = read_node(in, kFieldWidth);
    if (c.node != node) {
        throw UsageError(node_file_name(node) + " holds node " + std::to_string(c.node));
    }
    return c;
}

PrecodedNodeContents read_pre_node(const fs::path& dir, int node) {
    std::ifstream in(dir / node_file_name(node));
    if (!in) {
        throw UsageError("missing node file " + (dir / node_file_name(node)).string());
    }
    PrecodedNodeContents c = read_precoded_node(in, kFieldWidth);
    if (c.node != node) {
        throw UsageError(node_file_name(node) + " holds node " + std::to_string(c.node));
    }
    return c;
}

void write_layered_node(const fs::path& dir, const NodeContents& c) {
    std::ostringstream o;
    write_node(o, c, kFieldWidth);
    write_atomic(dir / node_file_name(c.node), o.str());
}

void write_pre_node(const fs::path& dir, const PrecodedNodeContents& c, std::size_t kappa) {
    std::ostringstream o;
    write_node(o, c, kappa, kFieldWidth);
    write_atomic(dir / node_file_name(c.node), o.str());
}

json code_json(const SystemParams& p, bool precoded, const PrecodedCode* pre) {
    json j = params_json(p);
    j["precoded"] = precoded;
    j["field_width"] = kFieldWidth;
    if (pre) {
        j["kappa"] = pre->kappa();
        j["modulus"] = pre->ext().modulus();
    }
    return j;
}

json manifest(const std::string& command, json parameters, json code, std::uint64_t seed, json inputs,
              json outputs) {
    return {{"artifact_version", kArtifactVersion},
            {"command", command},
            {"parameters", std::move(parameters)},
            {"seed", seed},
            {"inputs", std::move(inputs)},
            {"outputs", std::move(outputs)},
            {"code", std::move(code)}};
}

json report_json(const BandwidthReport& r) {
    json per = json::object();
    for (const auto& [h, v] : r.per_helper) {
        per[std::to_string(h)] = rational_json(v);
    }
    json j = {{"accounting", to_string(r.accounting)}, {"total", rational_json(r.total)}, {"per_helper", per}};
    j["symmetric"] = r.symmetric();
    j["per_helper_common"] = r.symmetric() && !r.per_helper.empty() ? rational_json(r.max_per_helper()) : json();
    return j;
}

Accounting parse_accounting(const std::string& s) {
    if (s == "msmr") {
        return Accounting::msmr;
    }
    if (s == "naive") {
        return Accounting::naive;
    }
    if (s == "layered-naive") {
        return Accounting::layered_naive;
    }
    throw UsageError("unknown accounting '" + s + "'");
}

// ---------------------------------------------------------------- CSV

struct CsvRow {
    std::string label;
    std::optional<int> r;
    std::optional<int> m;
    Rational alpha_bar;
    Rational beta_bar;
    bool is_corner = false;
};

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

std::string points_csv(const std::vector<CsvRow>& rows) {
    std::ostringstream o;
    o << "label,r,m,alpha_bar_num,alpha_bar_den,beta_bar_num,beta_bar_den,alpha_bar_float,beta_bar_float,"
         "is_corner\n";
    for (const auto& row : rows) {
        o << '"' << row.label << "\"," << opt_text(row.r) << ',' << opt_text(row.m) << ','
          << numerator_of(row.alpha_bar) << ',' << denominator_of(row.alpha_bar) << ','
          << numerator_of(row.beta_bar) << ',' << denominator_of(row.beta_bar) << ','
          << float_text(to_double(row.alpha_bar)) << ',' << float_text(to_double(row.beta_bar)) << ','
          << (row.is_corner ? 1 : 0) << '\n';
    }
    return o.str();
}

json points_json(const std::vector<CsvRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        arr.push_back({{"label", row.label},
                       {"r", row.r ? json(*row.r) : json()},
                       {"m", row.m ? json(*row.m) : json()},
                       {"alpha_bar", rational_json(row.alpha_bar)},
                       {"beta_bar", rational_json(row.beta_bar)},
                       {"is_corner", row.is_corner}});
    }
    return arr;
}

void mark_corners(std::vector<CsvRow>& rows) {
    std::vector<TradeoffPoint> pts;
    for (const auto& row : rows) {
        pts.push_back({row.alpha_bar, row.beta_bar, {}});
    }
    const auto hull = hull_oracle(pts);
    for (auto& row : rows) {
        row.is_corner = false;
        for (const auto& h : hull) {
            if (h.alpha_bar == row.alpha_bar && h.beta_bar == row.beta_bar) {
                row.is_corner = true;
            }
        }
    }
}

void emit(const std::string& text, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << text;
    } else {
        write_atomic(output_path(out_file), text);
    }
}

// ---------------------------------------------------------------- commands

struct DesignArgs {
    int n = 0;
    int r = 0;
    std::optional<int> t;
    std::string load;
    std::string save;
    bool blocks = false;
};

int cmd_design(const DesignArgs& a, std::ostream& out) {
    std::optional<BlockDesign> design;
    if (!a.load.empty()) {
        design = load_design_file(a.load);
        if (design->n() != a.n || design->r() != a.r || (a.t && design->t() != *a.t)) {
            throw UsageError("loaded design does not match --n/--r/--t");
        }
    } else {
        const int t = a.t.value_or(a.r);
        if (t != a.r) {
            throw UsageError("only the complete t = r design is generated; pass --load for t < r");
        }
        if (a.n < 1 || a.r < 1 || a.r > a.n) {
            throw UsageError("design requires 1 <= r <= n");
        }
        design = complete_design(a.n, a.r);
    }
    const bool steiner = verify_steiner(*design);
    json j = {{"n", design->n()}, {"r", design->r()}, {"t", design->t()}, {"steiner", steiner}};
    if (steiner) {
        const DesignStats s = design_stats(*design);
        j["N"] = big_json(s.num_blocks);
        j["alpha"] = big_json(s.alpha_sym);
        j["lambda2"] = big_json(s.lambda2);
        j["lambda3"] = big_json(s.lambda3);
    } else {
        j["N"] = design->size();
    }
    if (a.blocks) {
        j["blocks"] = design->blocks();
    }
    if (!a.save.empty()) {
        write_atomic(output_path(a.save), serialize_design(*design));
    }
    out << dump(j);
    return steiner ? kExitOk : kExitInvalid;
}

struct EncodeArgs {
    int n = 0;
    int k = 0;
    int d = 0;
    int e = 0;
    std::optional<int> m;
    int r = 0;
    std::optional<int> t;
    std::string design;
    std::string data;
    std::string out_dir;
    bool precoded = false;
    std::uint64_t seed = kDefaultSeed;
};

int cmd_encode(const EncodeArgs& a, std::ostream& out) {
    const int m = a.m.value_or(a.n - a.k);
    std::optional<BlockDesign> loaded;
    if (!a.design.empty()) {
        loaded = load_design_file(a.design);
    }
    const int t = a.t.value_or(loaded ? loaded->t() : a.r);
    const fs::path dir = output_path(a.out_dir);
    const SystemParams params{a.n, a.k, a.d, a.e, m, a.r, t};
    json parameters = {{"n", a.n}, {"k", a.k}, {"d", a.d}, {"e", a.e}, {"m", m},
                       {"r", a.r}, {"t", t},   {"precoded", a.precoded}};
    json inputs = {{"design", a.design}, {"data", a.data}};
    json outputs = {{"dir", a.out_dir}};

    std::string data_bytes;
    if (a.precoded) {
        if (t != a.r || !a.design.empty()) {
            throw UsageError("the precoded code always uses the complete t = r design");
        }
        const PrecodedCode code({a.n, a.k, a.d, a.e, m, a.r}, std::make_shared<GaloisField>(kFieldWidth));
        const std::size_t count = code.info_size() * code.kappa();
        const std::vector<Symbol> raw = a.data.empty() ? random_symbols(count, a.seed) : bytes_to_symbols(read_file(a.data));
        if (raw.size() != count) {
            throw UsageError("data must hold F * kappa = " + std::to_string(count) + " bytes, got " +
                             std::to_string(raw.size()));
        }
        std::vector<ExtElement> data(code.info_size());
        for (std::size_t i = 0; i < data.size(); ++i) {
            data[i].assign(raw.begin() + static_cast<std::ptrdiff_t>(i * code.kappa()),
                           raw.begin() + static_cast<std::ptrdiff_t>((i + 1) * code.kappa()));
        }
        for (const auto& c : encode2(code, data)) {
            write_pre_node(dir, c, code.kappa());
        }
        write_atomic(dir / "design.txt", serialize_design(code.layered().design()));
        data_bytes = symbols_to_bytes(raw);
        outputs["F"] = code.info_size();
        outputs["alpha"] = code.alpha();
        outputs["kappa"] = code.kappa();
        if (a.data.empty()) {
            write_atomic(dir / "data.bin", data_bytes);
        }
        write_atomic(dir / "manifest.json",
                     dump(manifest("encode", parameters, code_json(params, true, &code), a.seed, inputs, outputs)));
    } else {
        if (m != a.n - a.k) {
            throw UsageError("layered code needs m = n - k; use --precoded for m < n - k");
        }
        params.validate();
        if (!loaded && t != a.r) {
            throw UsageError("t < r needs --design");
        }
        const BlockDesign design = loaded ? *loaded : complete_design(a.n, a.r);
        if (!verify_steiner(design)) {
            throw UsageError("design is not a Steiner system");
        }
        const LayeredCode code(params, design, std::make_shared<GaloisField>(kFieldWidth));
        const std::vector<Symbol> data =
            a.data.empty() ? random_symbols(code.info_size(), a.seed) : bytes_to_symbols(read_file(a.data));
        if (data.size() != code.info_size()) {
            throw UsageError("data must hold F = " + std::to_string(code.info_size()) + " bytes, got " +
                             std::to_string(data.size()));
        }
        for (const auto& c : encode(code, data)) {
            write_layered_node(dir, c);
        }
        write_atomic(dir / "design.txt", serialize_design(design));
        outputs["F"] = code.info_size();
        outputs["alpha"] = code.alpha();
        if (a.data.empty()) {
            write_atomic(dir / "data.bin", symbols_to_bytes(data));
        }
        write_atomic(dir / "manifest.json",
                     dump(manifest("encode", parameters, code_json(params, false, nullptr), a.seed, inputs, outputs)));
    }
    json summary = {{"dir", dir.string()}, {"nodes", a.n}};
    summary.update(outputs);
    out << dump(summary);
    return kExitOk;
}

struct RepairArgs {
    std::string dir;
    std::string out_dir;
    std::vector<int> failed;
    std::vector<int> helpers;
    std::string accounting = "msmr";
};

int cmd_repair(const RepairArgs& a, std::ostream& out) {
    const Accounting acc = parse_accounting(a.accounting);
    const fs::path dir = output_path(a.dir);
    const fs::path out_dir = a.out_dir.empty() ? dir : output_path(a.out_dir);
    const StoredCode s = load_stored(dir);
    for (int x : a.helpers) {
        if (std::find(a.failed.begin(), a.failed.end(), x) != a.failed.end()) {
            throw UsageError("node " + std::to_string(x) + " is both failed and helper");
        }
    }
    BandwidthAccounting bw;
    std::vector<int> repaired_ids;
    if (s.precoded) {
        std::vector<PrecodedNodeContents> state;
        for (int h : a.helpers) {
            state.push_back(read_pre_node(dir, h));
        }
        const auto r = repair2(*s.pre, state, a.failed, a.helpers);
        for (const auto& c : r.repaired) {
            write_pre_node(out_dir, c, s.pre->kappa());
            repaired_ids.push_back(c.node);
        }
        bw = r.bandwidth;
    } else {
        std::vector<NodeContents> state;
        for (int h : a.helpers) {
            state.push_back(read_layered_node(dir, h));
        }
        const auto r = repair(*s.layered, state, a.failed, a.helpers);
        for (const auto& c : r.repaired) {
            write_layered_node(out_dir, c);
            repaired_ids.push_back(c.node);
        }
        bw = r.bandwidth;
    }
    if (out_dir != dir && !fs::exists(out_dir / "manifest.json")) {
        write_atomic(out_dir / "manifest.json", read_file(dir / "manifest.json"));
        write_atomic(out_dir / "design.txt", read_file(dir / "design.txt"));
    }
    json j = {{"failed", a.failed}, {"helpers", a.helpers}, {"repaired", repaired_ids}};
    json main = report_json(bw.get(acc));
    for (auto& [key, value] : main.items()) {
        j[key] = value;
    }
    j["reports"] = {{"naive", report_json(bw.naive)},
                    {"msmr", report_json(bw.msmr)},
                    {"layered-naive", report_json(bw.layered_naive)}};
    out << dump(j);
    return kExitOk;
}

struct ReconstructArgs {
    std::string dir;
    std::vector<int> nodes;
    std::string out_file;
};

int cmd_reconstruct(const ReconstructArgs& a, std::ostream& out) {
    const fs::path dir = output_path(a.dir);
    const StoredCode s = load_stored(dir);
    std::string bytes;
    if (s.precoded) {
        std::vector<PrecodedNodeContents> nodes;
        for (int x : a.nodes) {
            nodes.push_back(read_pre_node(dir, x));
        }
        for (const auto& v : reconstruct2(*s.pre, nodes)) {
            bytes += symbols_to_bytes(v);
        }
    } else {
        std::vector<NodeContents> nodes;
        for (int x : a.nodes) {
            nodes.push_back(read_layered_node(dir, x));
        }
        bytes = symbols_to_bytes(reconstruct(*s.layered, nodes));
    }
    json j = {{"nodes", a.nodes}, {"bytes", bytes.size()}};
    if (!a.out_file.empty()) {
        write_atomic(output_path(a.out_file), bytes);
        j["output"] = output_path(a.out_file).string();
    }
    if (fs::exists(dir / "data.bin")) {
        j["matches_data"] = read_file(dir / "data.bin") == bytes;
    }
    out << dump(j);
    return kExitOk;
}

struct ExtendArgs {
    std::string dir;
    std::string out_dir;
    std::string data;
    std::uint64_t seed = kDefaultSeed;
};

json shape_json(const LayeredCode& c) {
    const SystemParams& p = c.params();
    return {{"n", p.n},
            {"k", p.k},
            {"d", p.d},
            {"e", p.e},
            {"F", c.info_size()},
            {"alpha", c.alpha()},
            {"beta", big_json(beta_closed_form_d_eq_k(p.k, p.e, p.r))}};
}

int cmd_extend(const ExtendArgs& a, std::ostream& out) {
    const fs::path dir = output_path(a.dir);
    const fs::path out_dir = output_path(a.out_dir);
    const StoredCode s = load_stored(dir);
    if (s.precoded) {
        throw UsageError("extend applies to layered codes only");
    }
    const LayeredCode bigger = extend(*s.layered);
    std::vector<NodeContents> old_nodes;
    for (int x = 1; x <= s.params.n; ++x) {
        old_nodes.push_back(read_layered_node(dir, x));
    }
    const std::size_t fresh = bigger.group_dimension();
    const std::vector<Symbol> block_data =
        a.data.empty() ? random_symbols(fresh, a.seed) : bytes_to_symbols(read_file(a.data));
    if (block_data.size() != fresh) {
        throw UsageError("new block needs " + std::to_string(fresh) + " data bytes");
    }
    const auto nodes = extend_contents(*s.layered, bigger, old_nodes, block_data);
    for (const auto& c : nodes) {
        write_layered_node(out_dir, c);
    }
    write_atomic(out_dir / "design.txt", serialize_design(bigger.design()));
    write_atomic(out_dir / "manifest.json",
                 dump(manifest("extend", {{"from", a.dir}}, code_json(bigger.params(), false, nullptr), a.seed,
                               {{"dir", a.dir}, {"data", a.data}}, {{"dir", a.out_dir}})));
    const json before = shape_json(*s.layered);
    const json after = shape_json(bigger);
    json j = {{"old", before}, {"new", after}, {"new_block", bigger.design().blocks().back()}, {"dir", out_dir.string()}};
    j["delta"] = {{"F", after["F"].get<std::int64_t>() - before["F"].get<std::int64_t>()},
                  {"alpha", after["alpha"].get<std::int64_t>() - before["alpha"].get<std::int64_t>()},
                  {"beta", after["beta"].get<std::int64_t>() - before["beta"].get<std::int64_t>()}};
    out << dump(j);
    return kExitOk;
}

struct SweepArgs {
    int n = 0;
    int k = 0;
    int d = 0;
    int e = 1;
    std::optional<int> m;
    std::string format = "csv";
    std::string out_file;
};

void check_format(const std::string& f) {
    if (f != "csv" && f != "json") {
        throw UsageError("--format must be csv or json");
    }
}

int cmd_region(const SweepArgs& a, std::ostream& out) {
    check_format(a.format);
    const Region region = corner_points(a.k, a.e);
    std::vector<CsvRow> rows;
    std::vector<TradeoffPoint> all;
    const TradeoffPoint mbcr = extreme_points(a.k, a.k, a.e).mbcr;
    rows.push_back({to_string(mbcr.label), {}, {}, mbcr.alpha_bar, mbcr.beta_bar, false});
    all.push_back(mbcr);
    for (const auto& c : achievable_points_c1(a.k, a.e)) {
        rows.push_back({to_string(c.point.label), c.r, a.e, c.point.alpha_bar, c.point.beta_bar, false});
        all.push_back(c.point);
    }
    const auto hull = hull_oracle(all);
    if (hull.size() != region.corner_points.size()) {
        throw std::logic_error("closed-form corners disagree with the hull");
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (!hull[i].same_coordinates(region.corner_points[i])) {
            throw std::logic_error("closed-form corners disagree with the hull");
        }
    }
    for (auto& row : rows) {
        for (const auto& c : region.corner_points) {
            if (c.alpha_bar == row.alpha_bar && c.beta_bar == row.beta_bar &&
                (c.label == PointLabel::mbcr_point()) == (row.label == "MBCR")) {
                row.is_corner = true;
            }
        }
    }
    if (a.format == "csv") {
        emit(points_csv(rows), a.out_file, out);
    } else {
        json j = {{"k", a.k}, {"e", a.e}, {"p_star", region.p_star}, {"n_corners", region.n_corners},
                  {"points", points_json(rows)}};
        emit(dump(j), a.out_file, out);
    }
    return kExitOk;
}

int cmd_points(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    check_format(a.format);
    const auto general = achievable_points_general(a.n, a.k, a.d, a.e, a.m);
    std::vector<CsvRow> rows;
    std::set<int> warned;
    for (const auto& g : general) {
        if (!g.group_local_repair && warned.insert(g.m).second) {
            err << "warning: m=" << g.m << " has d < n - m; bandwidth is the formula value without group-local repair\n";
        }
        rows.push_back({to_string(g.point.label), g.r, g.m, g.point.alpha_bar, g.point.beta_bar, false});
    }
    mark_corners(rows);
    // Layered-code reference points at m = n - k.
    const int mc = a.n - a.k;
    for (int r = mc + 1; r <= a.n; ++r) {
        const BigInt f = binomial(a.n, r) * (r - mc);
        const Rational beta = beta_formula(a.n, a.e, mc, r, a.d);
        rows.push_back({to_string(PointLabel::construction1(r)), r, mc, Rational(binomial(a.n - 1, r - 1), f),
                        beta / Rational(f), false});
    }
    if (a.format == "csv") {
        emit(points_csv(rows), a.out_file, out);
    } else {
        json j = {{"n", a.n}, {"k", a.k}, {"d", a.d}, {"e", a.e}, {"points", points_json(rows)}};
        emit(dump(j), a.out_file, out);
    }
    return kExitOk;
}

int cmd_compare(const SweepArgs& a, std::ostream& out) {
    check_format(a.format);
    const int m = a.m.value_or(a.n - a.k);
    if (!(1 <= a.e && a.e <= m && m < a.n && a.n - m <= a.d && a.d <= a.n - a.e && a.k <= a.d)) {
        throw UsageError("compare requires 1 <= e <= m < n, k <= d and n - m <= d <= n - e");
    }
    std::set<int> failed;
    std::set<int> helpers;
    for (int x = 1; x <= a.e; ++x) {
        failed.insert(x);
    }
    for (int x = a.e + 1; x <= a.e + a.d; ++x) {
        helpers.insert(x);
    }
    struct Row {
        std::string accounting;
        int r;
        Rational alpha_bar;
        Rational beta_bar;
    };
    std::vector<Row> rows;
    for (int r = m + 1; r <= a.n; ++r) {
        if (binomial(a.n, r) > 200000) {
            throw UsageError("design too large to enumerate");
        }
        const BlockDesign design = complete_design(a.n, r);
        const auto bw = beta_oracle(design, m, a.e, a.d, failed, helpers);
        const BigInt f = binomial(a.n, r) * (r - m);
        if (!bw.msmr.symmetric() || bw.msmr.max_per_helper() != beta_formula(a.n, a.e, m, r, a.d)) {
            throw std::logic_error("enumerated bandwidth disagrees with the closed form");
        }
        const Rational alpha_bar(binomial(a.n - 1, r - 1), f);
        const Rational norm = Rational(f) * a.d;
        rows.push_back({"layered-naive", r, alpha_bar, bw.layered_naive.total / norm});
        rows.push_back({"msmr", r, alpha_bar, bw.msmr.total / norm});
    }
    if (a.format == "csv") {
        std::ostringstream o;
        o << "accounting,r,m,d,alpha_bar_num,alpha_bar_den,beta_bar_num,beta_bar_den,alpha_bar_float,"
             "beta_bar_float\n";
        for (const auto& row : rows) {
            o << row.accounting << ',' << row.r << ',' << m << ',' << a.d << ',' << numerator_of(row.alpha_bar)
              << ',' << denominator_of(row.alpha_bar) << ',' << numerator_of(row.beta_bar) << ','
              << denominator_of(row.beta_bar) << ',' << float_text(to_double(row.alpha_bar)) << ','
              << float_text(to_double(row.beta_bar)) << '\n';
        }
        emit(o.str(), a.out_file, out);
    } else {
        json arr = json::array();
        for (const auto& row : rows) {
            arr.push_back({{"accounting", row.accounting},
                           {"r", row.r},
                           {"alpha_bar", rational_json(row.alpha_bar)},
                           {"beta_bar", rational_json(row.beta_bar)}});
        }
        emit(dump({{"n", a.n}, {"k", a.k}, {"d", a.d}, {"e", a.e}, {"m", m}, {"rows", arr}}), a.out_file, out);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct Suite {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;

    void check(bool ok) {
        ++checks;
        failures += ok ? 0 : 1;
    }
};

Suite verify_formula_oracle(std::uint64_t seed, int n_max) {
    Suite s{"formula_oracle"};
    std::mt19937_64 rng(seed);
    for (int n = 3; n <= n_max; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (int e = 1; e <= m; ++e) {
                for (int r = m + 1; r <= n; ++r) {
                    const BlockDesign design = complete_design(n, r);
                    for (int d = std::max(n - m, 1); d <= n - e; ++d) {
                        const Rational expected = beta_formula(n, e, m, r, d);
                        for (int trial = 0; trial < 3; ++trial) {
                            std::vector<int> ids(static_cast<std::size_t>(n));
                            std::iota(ids.begin(), ids.end(), 1);
                            std::shuffle(ids.begin(), ids.end(), rng);
                            const std::set<int> failed(ids.begin(), ids.begin() + e);
                            const std::set<int> helpers(ids.begin() + e, ids.begin() + e + d);
                            const auto bw = beta_oracle(design, m, e, d, failed, helpers);
                            s.check(bw.msmr.symmetric() && bw.msmr.max_per_helper() == expected);
                        }
                    }
                }
            }
        }
    }
    return s;
}

Suite verify_rank(int n_max) {
    Suite s{"rank_formula"};
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 1; k < n; ++k) {
            for (int m = 1; m <= n - k; ++m) {
                for (int r = m + 1; r <= n; ++r) {
                    const BigInt expected = rho(n, k, m, r);
                    for_each_combination(n, k, 1, [&](const std::vector<int>& subset) {
                        s.check(BigInt(rank_oracle(n, k, m, r, subset)) == expected);
                    });
                }
            }
        }
    }
    return s;
}

Suite verify_region(int k_max) {
    Suite s{"region"};
    for (int k = 2; k <= k_max; ++k) {
        for (int e = 1; e < k; ++e) {
            std::vector<TradeoffPoint> pts;
            for (const auto& c : achievable_points_c1(k, e)) {
                pts.push_back(c.point);
            }
            pts.push_back(extreme_points(k, k, e).mbcr);
            const auto hull = hull_oracle(pts);
            const auto corners = corner_points(k, e).corner_points;
            bool same = hull.size() == corners.size();
            for (std::size_t i = 0; same && i < hull.size(); ++i) {
                same = hull[i].same_coordinates(corners[i]);
            }
            s.check(same);
            if (e >= 2) {
                s.check(p_star(k, e) == p_star_thresholds(k, e));
            }
        }
    }
    return s;
}

Suite verify_round_trip(std::uint64_t seed) {
    Suite s{"round_trip"};
    const LayeredCode code({6, 4, 4, 2, 2, 4, 4}, complete_design(6, 4), std::make_shared<GaloisField>(kFieldWidth));
    const auto data = random_symbols(code.info_size(), seed);
    const auto nodes = encode(code, data);
    for (const auto& subset : combinations(6, 4)) {
        std::vector<NodeContents> pick;
        for (int x : subset) {
            pick.push_back(nodes[static_cast<std::size_t>(x - 1)]);
        }
        s.check(reconstruct(code, pick) == data);
    }
    for (const auto& failed : combinations(6, 2)) {
        std::vector<int> helpers;
        for (int x = 1; x <= 6; ++x) {
            if (std::find(failed.begin(), failed.end(), x) == failed.end()) {
                helpers.push_back(x);
            }
        }
        const auto r = repair(code, nodes, failed, helpers);
        s.check(r.repaired[0] == nodes[static_cast<std::size_t>(failed[0] - 1)] &&
                r.repaired[1] == nodes[static_cast<std::size_t>(failed[1] - 1)]);
    }
    return s;
}

int cmd_verify(std::uint64_t seed, bool quick, std::ostream& out) {
    std::vector<Suite> suites;
    suites.push_back(verify_formula_oracle(seed, quick ? 6 : 8));
    suites.push_back(verify_rank(quick ? 5 : 6));
    suites.push_back(verify_region(quick ? 12 : 24));
    suites.push_back(verify_round_trip(seed));
    bool ok = true;
    json arr = json::array();
    for (const auto& s : suites) {
        arr.push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}});
        ok = ok && s.failures == 0;
    }
    out << dump({{"seed", seed}, {"quick", quick}, {"suites", arr}, {"passed", ok}});
    return ok ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Layered regenerating codes: construction, repair and tradeoff analysis", "regen"};
    app.require_subcommand(1);

    DesignArgs da;
    auto* design = app.add_subcommand("design", "Generate or load a block design and report its statistics");
    design->add_option("--n", da.n, "Number of nodes")->required();
    design->add_option("--r", da.r, "Block size")->required();
    design->add_option("--t", da.t, "Design strength (default r)");
    design->add_option("--load", da.load, "Design file to load");
    design->add_option("--save", da.save, "Write the design to this file");
    design->add_flag("--blocks", da.blocks, "Include the block list");

    EncodeArgs ea;
    auto* enc = app.add_subcommand("encode", "Encode data into a directory of node files");
    enc->add_option("--n", ea.n)->required();
    enc->add_option("--k", ea.k)->required();
    enc->add_option("--d", ea.d)->required();
    enc->add_option("--e", ea.e)->required();
    enc->add_option("--m", ea.m, "Failures per group (default n - k)");
    enc->add_option("--r", ea.r)->required();
    enc->add_option("--t", ea.t, "Design strength (default r)");
    enc->add_option("--design", ea.design, "Steiner design file (required when t < r)");
    enc->add_option("--data", ea.data, "Raw data bytes; random when omitted");
    enc->add_option("--out", ea.out_dir, "Node directory")->required();
    enc->add_flag("--precoded", ea.precoded, "Use the precoded construction (m <= n - k)");
    enc->add_option("--seed", ea.seed, "Seed for generated data");

    RepairArgs ra;
    auto* rep = app.add_subcommand("repair", "Regenerate failed nodes from helper node files");
    rep->add_option("--dir", ra.dir)->required();
    rep->add_option("--failed", ra.failed)->required()->delimiter(',');
    rep->add_option("--helpers", ra.helpers)->required()->delimiter(',');
    rep->add_option("--accounting", ra.accounting, "msmr, naive or layered-naive");
    rep->add_option("--out", ra.out_dir, "Directory for repaired nodes (default --dir)");

    ReconstructArgs ca;
    auto* rec = app.add_subcommand("reconstruct", "Recover the data from k node files");
    rec->add_option("--dir", ca.dir)->required();
    rec->add_option("--nodes", ca.nodes)->required()->delimiter(',');
    rec->add_option("--out", ca.out_file, "Output data file");

    ExtendArgs xa;
    auto* ext = app.add_subcommand("extend", "Add a node to a (k+e, k, k, e) code");
    ext->add_option("--dir", xa.dir)->required();
    ext->add_option("--out", xa.out_dir)->required();
    ext->add_option("--data", xa.data, "Raw bytes for the new block; random when omitted");
    ext->add_option("--seed", xa.seed);

    SweepArgs ga;
    auto* reg = app.add_subcommand("region", "Corner points of the layered-code tradeoff region");
    reg->add_option("--k", ga.k)->required();
    reg->add_option("--e", ga.e)->required();

    SweepArgs pa;
    auto* pts = app.add_subcommand("points", "Achievable points of the precoded construction");
    pts->add_option("--n", pa.n)->required();
    pts->add_option("--k", pa.k)->required();
    pts->add_option("--d", pa.d)->required();
    pts->add_option("--e", pa.e)->required();
    pts->add_option("--m", pa.m, "Sweep only this m");

    SweepArgs cpa;
    auto* cmp = app.add_subcommand("compare", "Repair bandwidth with and without MSMR groups");
    cmp->add_option("--n", cpa.n)->required();
    cmp->add_option("--k", cpa.k)->required();
    cmp->add_option("--d", cpa.d)->required();
    cmp->add_option("--e", cpa.e, "Failures (default 1)");
    cmp->add_option("--m", cpa.m, "Failures per group (default n - k)");

    for (auto [sub, sa] : {std::pair{reg, &ga}, std::pair{pts, &pa}, std::pair{cmp, &cpa}}) {
        sub->add_option("--format", sa->format, "csv or json");
        sub->add_option("--out", sa->out_file, "Write to this file instead of stdout");
    }

    std::uint64_t verify_seed = kDefaultSeed;
    bool quick = false;
    auto* ver = app.add_subcommand("verify", "Run the built-in oracle checks");
    ver->add_option("--seed", verify_seed);
    ver->add_flag("--quick", quick);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*design) {
            return cmd_design(da, out);
        }
        if (*enc) {
            return cmd_encode(ea, out);
        }
        if (*rep) {
            return cmd_repair(ra, out);
        }
        if (*rec) {
            return cmd_reconstruct(ca, out);
        }
        if (*ext) {
            return cmd_extend(xa, out);
        }
        if (*reg) {
            return cmd_region(ga, out);
        }
        if (*pts) {
            return cmd_points(pa, out, err);
        }
        if (*cmp) {
            return cmd_compare(cpa, out);
        }
        if (*ver) {
            return cmd_verify(verify_seed, quick, out);
        }
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const DesignError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const CodingError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInvalid;
}

}  // namespace regen
