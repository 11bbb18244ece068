// czlab command line front end. Talks to the engine exclusively through the
// C API in czlab/czlab.h; file handling, argument parsing and report
// composition live here.
//
// Exit codes: 0 success / all checks pass, 1 property violation (the
// violating instance is serialized in the report), 2 input or usage error.

#include <czlab/czlab.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using Json = nlohmann::json;

struct CString {
    char* ptr = nullptr;
    ~CString() { czl_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

template <typename T>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    Handle(Handle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    Handle& operator=(Handle&& other) noexcept {
        std::swap(ptr, other.ptr);
        return *this;
    }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle();
    T** out() { return &ptr; }
};

template <>
Handle<czl_descriptor>::~Handle() {
    czl_descriptor_free(ptr);
}
template <>
Handle<czl_rotation>::~Handle() {
    czl_rotation_free(ptr);
}
template <>
Handle<czl_table>::~Handle() {
    czl_table_free(ptr);
}

[[noreturn]] void exit_input_error(const std::string& code, const std::string& message) {
    Json err;
    err["error"] = {{"code", code}, {"message", message}};
    std::cerr << err.dump() << "\n";
    std::exit(2);
}

void check(czl_status status) {
    if (status != CZL_OK) exit_input_error(czl_status_name(status), czl_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) exit_input_error("ParseError", "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) exit_input_error("ParseError", "cannot write '" + out_path + "'");
    out << text;
}

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("CZLAB_SEED")) {
        char* end = nullptr;
        std::uint64_t parsed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            exit_input_error("ParseError", "CZLAB_SEED is not an unsigned integer");
        return parsed;
    }
    return cli_seed;
}

Handle<czl_descriptor> load_descriptor(const std::string& path) {
    Handle<czl_descriptor> d;
    check(czl_descriptor_parse(read_file(path).c_str(), d.out()));
    return d;
}

// --- subcommands ---------------------------------------------------------------

int cmd_index_seq(const std::string& descriptor_path, std::int64_t k_max,
                  const std::string& format, const std::string& out_path) {
    auto d = load_descriptor(descriptor_path);
    if (format == "csv") {
        CString csv;
        check(czl_sequences_csv(d.ptr, k_max, &csv.ptr));
        emit(csv.str(), out_path);
        return 0;
    }
    std::vector<std::int64_t> mu(static_cast<std::size_t>(k_max));
    std::vector<std::int64_t> jump(static_cast<std::size_t>(k_max));
    check(czl_index_sequence(d.ptr, k_max, mu.data()));
    check(czl_jump_sequence(d.ptr, k_max, jump.data()));
    Json rows = Json::array();
    for (std::int64_t k = 1; k <= k_max; ++k)
        rows.push_back({k, mu[static_cast<std::size_t>(k - 1)],
                        jump[static_cast<std::size_t>(k - 1)]});
    Json out;
    out["k_max"] = k_max;
    out["rows"] = rows;
    emit(out.dump(), out_path);
    return 0;
}

int cmd_divisibility(const std::string& descriptor_path, std::int64_t l, std::int64_t k_max,
                     const std::string& out_path) {
    auto d = load_descriptor(descriptor_path);
    int b_holds = 0;
    CString b_report;
    check(czl_check_condition_b(d.ptr, l, &b_holds, &b_report.ptr));
    int a_holds = 0;
    std::int64_t witness = 0;
    check(czl_check_condition_a(d.ptr, l, k_max, &a_holds, &witness));

    // (b) => (a) is the theorem; report an inconsistency as a violation.
    bool consistent = !(b_holds == 1 && a_holds == 0);
    Json out;
    out["l"] = l;
    out["k_max"] = k_max;
    out["condition_b"] = Json::parse(b_report.str());
    out["condition_a"] = {{"holds_up_to_k", a_holds == 1},
                          {"witness", a_holds == 1 ? Json(nullptr) : Json(witness)}};
    out["consistent"] = consistent;
    if (!consistent) {
        CString instance;
        check(czl_descriptor_to_json(d.ptr, &instance.ptr));
        out["instance"] = Json::parse(instance.str());
    }
    emit(out.dump(), out_path);
    return consistent ? 0 : 1;
}

std::vector<std::int64_t> parse_jump_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) exit_input_error("ParseError", "empty jump CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header;
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
    std::size_t jump_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == "jump") jump_col = i;
    if (jump_col == header.size())
        exit_input_error("SchemaError", "jump CSV header must contain a 'jump' column");
    std::vector<std::int64_t> jumps;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() <= jump_col)
            exit_input_error("SchemaError", "jump CSV row is missing the jump column");
        try {
            jumps.push_back(std::stoll(cells[jump_col]));
        } catch (const std::exception&) {
            exit_input_error("ParseError", "non-integer jump value '" + cells[jump_col] + "'");
        }
    }
    if (jumps.empty()) exit_input_error("SchemaError", "jump CSV has no data rows");
    return jumps;
}

int cmd_reconstruct(const std::string& jumps_path, const std::string& pool_path,
                    const std::string& out_path) {
    auto jumps = parse_jump_csv(read_file(jumps_path));
    Json pool_json = Json::parse(read_file(pool_path), nullptr, false);
    if (pool_json.is_discarded() || !pool_json.is_array())
        exit_input_error("SchemaError", "pool must be a JSON array of descriptors");

    std::vector<Handle<czl_descriptor>> pool(pool_json.size());
    std::vector<const czl_descriptor*> raw;
    for (std::size_t i = 0; i < pool_json.size(); ++i) {
        check(czl_descriptor_parse(pool_json[i].dump().c_str(), pool[i].out()));
        raw.push_back(pool[i].ptr);
    }
    int outcome = 0;
    std::size_t index = 0;
    check(czl_reconstruct(jumps.data(), static_cast<std::int64_t>(jumps.size()), raw.data(),
                          raw.size(), &outcome, &index));
    Json out;
    out["horizon"] = jumps.size();
    switch (outcome) {
        case CZL_RECONSTRUCT_MATCH: {
            CString match;
            check(czl_descriptor_to_json(pool[index].ptr, &match.ptr));
            out["outcome"] = "match";
            out["index"] = index;
            out["descriptor"] = Json::parse(match.str());
            break;
        }
        case CZL_RECONSTRUCT_NO_MATCH:
            out["outcome"] = "no_match";
            out["index"] = nullptr;
            out["descriptor"] = nullptr;
            break;
        default:
            out["outcome"] = "ambiguous";
            out["index"] = nullptr;
            out["descriptor"] = nullptr;
            break;
    }
    emit(out.dump(), out_path);
    return 0;
}

int cmd_torus_verify(const std::string& descriptor_path, const std::string& path_path,
                     std::int64_t l, std::int64_t k_max, const std::string& out_path) {
    auto d = load_descriptor(descriptor_path);

    if (!path_path.empty()) {
        // Intersection of a user-provided lifted path with the descriptor's
        // index cycle (weights = elliptic signatures, in canonical order).
        CString canonical;
        check(czl_descriptor_to_json(d.ptr, &canonical.ptr));
        Json canonical_json = Json::parse(canonical.str());
        std::vector<std::int64_t> weights;
        for (const auto& entry : canonical_json["elliptic"])
            weights.push_back(entry["signature"].get<std::int64_t>());
        std::string path_text = read_file(path_path);
        std::int64_t value = 0;
        check(czl_path_intersection(path_text.c_str(), weights.data(), weights.size(), &value));
        Json out;
        out["intersection"] = value;
        emit(out.dump(), out_path);
        return 0;
    }

    int passed = 0;
    CString report;
    check(czl_verify_intersect_divisibility(d.ptr, l, k_max, &passed, &report.ptr));

    // Cross-check 2<arc,T> = mu'_k over the same range.
    std::vector<std::int64_t> jumps(static_cast<std::size_t>(k_max));
    check(czl_jump_sequence(d.ptr, k_max, jumps.data()));
    Json identity;
    identity["holds"] = true;
    identity["first_mismatch"] = nullptr;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        std::int64_t crossing = 0;
        check(czl_arc_intersection(d.ptr, k, &crossing));
        if (2 * crossing != jumps[static_cast<std::size_t>(k - 1)]) {
            identity["holds"] = false;
            identity["first_mismatch"] = k;
            break;
        }
    }

    bool ok = passed == 1 && identity["holds"].get<bool>();
    Json out;
    out["divisibility"] = Json::parse(report.str());
    out["mu_intersect_identity"] = identity;
    out["passed"] = ok;
    if (!ok) {
        CString instance;
        check(czl_descriptor_to_json(d.ptr, &instance.ptr));
        out["instance"] = Json::parse(instance.str());
    }
    emit(out.dump(), out_path);
    return ok ? 0 : 1;
}

int cmd_rotation(const std::string& input_path, const std::vector<std::string>& window,
                 const std::string& format, const std::string& out_path) {
    Handle<czl_rotation> r;
    check(czl_rotation_parse(read_file(input_path).c_str(), r.out()));

    CString spectrum_csv;
    if (!window.empty())
        check(czl_action_spectrum_csv(r.ptr, window[0].c_str(), window[1].c_str(),
                                      &spectrum_csv.ptr));
    if (format == "csv") {
        if (window.empty())
            exit_input_error("InvalidArgument", "csv output requires --window");
        emit(spectrum_csv.str(), out_path);
        return 0;
    }

    CString rotation_json, trivial_json;
    Handle<czl_table> table;
    CString table_json;
    check(czl_rotation_to_json(r.ptr, &rotation_json.ptr));
    check(czl_trivial_mean_indices(r.ptr, &trivial_json.ptr));
    check(czl_recapped_fixed_points(r.ptr, table.out()));
    check(czl_table_to_json(table.ptr, &table_json.ptr));

    Json out;
    out["rotation"] = Json::parse(rotation_json.str());
    out["trivial_mean_indices"] = Json::parse(trivial_json.str());
    out["recapped"] = Json::parse(table_json.str());
    if (!window.empty()) {
        Json rows = Json::array();
        std::istringstream lines(spectrum_csv.str());
        std::string line;
        std::getline(lines, line);  // header
        while (std::getline(lines, line)) {
            if (line.empty()) continue;
            std::stringstream ls(line);
            std::string label, index, value;
            std::getline(ls, label, ',');
            std::getline(ls, index, ',');
            std::getline(ls, value, ',');
            rows.push_back({std::stoll(label), std::stoll(index), value});
        }
        out["spectrum"] = rows;
    }
    emit(out.dump(), out_path);
    return 0;
}

int cmd_match(const std::string& table_path, std::int64_t k_max, const std::string& out_path) {
    Handle<czl_table> t;
    check(czl_table_parse(read_file(table_path).c_str(), t.out()));
    Handle<czl_rotation> r;
    check(czl_matching_rotation(t.ptr, k_max, r.out()));
    int holds = 0;
    CString hypotheses;
    check(czl_check_matching_hypotheses(t.ptr, k_max, &holds, &hypotheses.ptr));
    CString rotation_json;
    check(czl_rotation_to_json(r.ptr, &rotation_json.ptr));

    Json out;
    out["rotation"] = Json::parse(rotation_json.str());
    out["matching_hypotheses"] = Json::parse(hypotheses.str());
    emit(out.dump(), out_path);
    return 0;
}

int cmd_verify_suite(const std::string& suite, std::uint64_t seed, std::int64_t trials,
                     const std::string& out_path) {
    int all_passed = 0;
    CString report;
    check(czl_run_suite(suite.c_str(), seed, trials, &all_passed, &report.ptr));
    emit(report.str(), out_path);
    return all_passed == 1 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Conley-Zehnder index calculus for symplectic path data"};
    app.require_subcommand(1);

    std::string descriptor_path, pool_path, jumps_path, input_path, table_path, path_path;
    std::string out_path;
    std::string seq_format = "csv", rot_format = "json";
    std::int64_t k_max = 100, match_k_max = 16, l = 1, trials = 100;
    std::uint64_t seed = 0;
    std::string suite = "theorem";
    std::vector<std::string> window;

    auto* index_seq = app.add_subcommand("index-seq", "Index and jump sequences of a descriptor");
    index_seq->add_option("--descriptor", descriptor_path, "descriptor JSON file")->required();
    index_seq->add_option("--kmax", k_max, "iteration horizon K")->required();
    index_seq->add_option("--format", seq_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    index_seq->add_option("--out", out_path, "output file (default stdout)");

    auto* divisibility =
        app.add_subcommand("divisibility", "Index divisibility conditions (a) and (b)");
    divisibility->add_option("--descriptor", descriptor_path)->required();
    divisibility->add_option("--l", l, "divisor")->required();
    divisibility->add_option("--kmax", k_max, "scan range for condition (a)")->required();
    divisibility->add_option("--out", out_path);

    auto* reconstruct =
        app.add_subcommand("reconstruct", "Identify a descriptor from its jump sequence");
    reconstruct->add_option("--jumps", jumps_path, "CSV with a jump column")->required();
    reconstruct->add_option("--pool", pool_path, "JSON array of candidate descriptors")
        ->required();
    reconstruct->add_option("--out", out_path);

    auto* torus = app.add_subcommand("torus-verify",
                                     "Intersection-cycle checks for an elliptic descriptor");
    torus->add_option("--descriptor", descriptor_path)->required();
    torus->add_option("--l", l, "divisor for the iterated-arc check");
    torus->add_option("--kmax", k_max, "arc range");
    torus->add_option("--path", path_path, "lifted path JSON: intersect it with the index cycle");
    torus->add_option("--out", out_path);

    auto* rotation = app.add_subcommand("rotation", "Normalize a rotation and tabulate spectra");
    rotation->add_option("--input", input_path, "rotation JSON file")->required();
    rotation->add_option("--window", window, "spectrum window bounds (two rationals)")
        ->expected(2);
    rotation->add_option("--format", rot_format, "csv (spectrum) or json")
        ->check(CLI::IsMember({"csv", "json"}));
    rotation->add_option("--out", out_path);

    auto* match = app.add_subcommand("match", "Matching rotation of a balanced table");
    match->add_option("--table", table_path, "fixed point table JSON")->required();
    match->add_option("--kmax", match_k_max, "non-degeneracy horizon for the result");
    match->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify-suite", "Seeded property suites");
    verify->add_option("--suite", suite,
                       "oracle | theorem-forward | theorem-converse | theorem | reconstruct | "
                       "intersect | rotation | mean-bound | antisymmetry")
        ->required();
    verify->add_option("--seed", seed, "generator seed (CZLAB_SEED overrides)");
    verify->add_option("--trials", trials, "number of generated instances")->required();
    verify->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    // "--out csv" / "--out json" select the format and keep stdout, matching
    // the documented invocation style; any other value is a file path.
    if (out_path == "csv" || out_path == "json") {
        seq_format = out_path;
        rot_format = out_path;
        out_path.clear();
    }

    if (index_seq->parsed()) return cmd_index_seq(descriptor_path, k_max, seq_format, out_path);
    if (divisibility->parsed()) return cmd_divisibility(descriptor_path, l, k_max, out_path);
    if (reconstruct->parsed()) return cmd_reconstruct(jumps_path, pool_path, out_path);
    if (torus->parsed()) return cmd_torus_verify(descriptor_path, path_path, l, k_max, out_path);
    if (rotation->parsed()) return cmd_rotation(input_path, window, rot_format, out_path);
    if (match->parsed()) return cmd_match(table_path, match_k_max, out_path);
    if (verify->parsed()) return cmd_verify_suite(suite, resolve_seed(seed), trials, out_path);
    return 2;
}
