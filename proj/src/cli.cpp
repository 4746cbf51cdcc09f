#include "icg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "icg/closed_forms.hpp"
#include "icg/distance_spectra.hpp"
#include "icg/icg_core.hpp"
#include "icg/numtheory.hpp"
#include "icg/oracle.hpp"

namespace icg::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
    std::int64_t n = 0;
    std::string divisors;
    std::string format = "plain";
    std::string out_path;
};

// Writes each payload line to the main stream and, with --out, to a file.
class Sink {
public:
    Sink(std::ostream& out, const std::string& path) : out_(out) {
        if (!path.empty()) {
            file_.emplace(path);
            if (!*file_) fail(ErrorKind::InvalidArgument, "cannot open " + path + " for writing");
        }
    }

    void line(const std::string& text) {
        out_ << text << '\n';
        if (file_) *file_ << text << '\n';
    }

private:
    std::ostream& out_;
    std::optional<std::ofstream> file_;
};

std::int64_t parse_int(std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        fail(ErrorKind::InvalidArgument, "not an integer: '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::int64_t> parse_list(const std::string& text, char sep = ',') {
    std::vector<std::int64_t> out;
    std::string_view rest = text;
    while (true) {
        const auto pos = rest.find(sep);
        out.push_back(parse_int(rest.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) fail(ErrorKind::InvalidArgument, "expected p:q, got '" + item + "'");
        out.emplace_back(parse_int(std::string_view(item).substr(0, colon)),
                         parse_int(std::string_view(item).substr(colon + 1)));
    }
    if (out.empty()) fail(ErrorKind::InvalidArgument, "no p:q pairs given");
    return out;
}

template <typename Range>
std::string join(const Range& values, const char* sep) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += sep;
        out += std::to_string(v);
    }
    return out;
}

std::string label(const IcgSpec& spec) {
    return "ICG_" + std::to_string(spec.n()) + "(" + join(spec.divisor_set(), ",") + ")";
}

json spec_echo(const IcgSpec& spec, const std::string& quantity) {
    return json{{"n", spec.n()},
                {"divisors", std::vector<std::int64_t>(spec.divisor_set().begin(), spec.divisor_set().end())},
                {"quantity", quantity}};
}

json multiset_json(const Multiset& table) {
    json out = json::array();
    for (const auto& [value, mult] : table) out.push_back({value, mult});
    return out;
}

std::string multiset_plain(const Multiset& table) {
    std::string out;
    for (const auto& [value, mult] : table) {
        if (!out.empty()) out += ' ';
        out += std::to_string(value) + "^" + std::to_string(mult);
    }
    return out;
}

json report_json(const oracle::VerificationReport& report) {
    json out{{"matched", report.matched}, {"checked_moments", report.checked_moments}, {"first_mismatch", nullptr}};
    if (report.first_mismatch) {
        out["first_mismatch"] = {{"order", report.first_mismatch->order},
                                 {"trace", report.first_mismatch->trace},
                                 {"predicted", report.first_mismatch->predicted}};
    }
    return out;
}

std::string report_plain(const oracle::VerificationReport& report) {
    if (report.matched) return "matched (" + std::to_string(report.checked_moments) + " moments)";
    const auto& mm = *report.first_mismatch;
    return "MISMATCH at order " + std::to_string(mm.order) + ": trace " + mm.trace + ", predicted " + mm.predicted;
}

IcgSpec spec_from(const CommonOptions& opts) { return IcgSpec(opts.n, parse_list(opts.divisors)); }

void add_spec_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--n", opts.n, "modulus n > 1")->required();
    cmd->add_option("--divisors", opts.divisors, "comma-separated divisor set, e.g. 1,5")->required();
}

void add_output_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd->add_option("--out", opts.out_path, "also write the payload to this file");
}

// spectrum ------------------------------------------------------------------

int cmd_spectrum(const CommonOptions& opts, bool adjacency, std::ostream& out) {
    const IcgSpec spec = spec_from(opts);
    const IndexedSpectrum spectrum = adjacency ? adjacency_spectrum(spec) : distance_spectrum(spec);
    const std::string quantity = adjacency ? "adjacency_spectrum" : "distance_spectrum";
    Sink sink(out, opts.out_path);
    if (opts.format == "json") {
        json record = spec_echo(spec, quantity);
        record["indexed"] = std::vector<std::int64_t>(spectrum.values().begin(), spectrum.values().end());
        record["multiset"] = multiset_json(spectrum.multiset());
        sink.line(record.dump());
    } else if (opts.format == "csv") {
        sink.line("r,value");
        for (std::size_t r = 0; r < spectrum.size(); ++r) sink.line(std::to_string(r) + "," + std::to_string(spectrum[r]));
    } else {
        sink.line(label(spec) + " " + quantity);
        sink.line("indexed: " + join(spectrum.values(), " "));
        sink.line("multiset: " + multiset_plain(spectrum.multiset()));
    }
    return kSuccess;
}

// energy / wiener / diameter ------------------------------------------------

int cmd_scalar(const CommonOptions& opts, const std::string& quantity,
               const std::function<std::int64_t(const IcgSpec&)>& compute, std::ostream& out) {
    const IcgSpec spec = spec_from(opts);
    const std::int64_t value = compute(spec);
    Sink sink(out, opts.out_path);
    if (opts.format == "json") {
        json record = spec_echo(spec, quantity);
        record["value"] = value;
        sink.line(record.dump());
    } else if (opts.format == "csv") {
        sink.line("quantity,value");
        sink.line(quantity + "," + std::to_string(value));
    } else {
        sink.line(std::to_string(value));
    }
    return kSuccess;
}

// matrix --------------------------------------------------------------------

int cmd_matrix(const CommonOptions& opts, bool full, std::int64_t cap, std::ostream& out) {
    const IcgSpec spec = spec_from(opts);
    std::vector<std::vector<std::int64_t>> rows;
    if (full) {
        const DenseIntMatrix m = oracle::full_distance_matrix(spec, cap);
        for (std::size_t i = 0; i < m.order(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
    } else {
        rows.push_back(distance_first_row(spec).entries);
    }
    Sink sink(out, opts.out_path);
    if (opts.format == "json") {
        json record = spec_echo(spec, full ? "distance_matrix" : "distance_first_row");
        record["rows"] = rows;
        sink.line(record.dump());
    } else {
        const char* sep = opts.format == "csv" ? "," : " ";
        for (const auto& row : rows) sink.line(join(row, sep));
    }
    return kSuccess;
}

// verify --------------------------------------------------------------------

int cmd_verify(const CommonOptions& opts, std::int64_t cap, std::ostream& out) {
    const IcgSpec spec = spec_from(opts);
    const DistanceDecomposition decomposition = distance_classes(spec);
    const DenseIntMatrix distances = oracle::full_distance_matrix(spec, cap);

    const bool circulant = oracle::verify_circulant(distances);
    const auto first_row = distance_first_row(decomposition).entries;
    const bool row_matches = std::equal(first_row.begin(), first_row.end(), distances.row(0).begin());
    const IndexedSpectrum mu = distance_spectrum(decomposition);
    const auto distance_report = oracle::verify_spectrum_by_moments(distances, mu.multiset(), cap);
    const auto adjacency_report =
        oracle::verify_spectrum_by_moments(adjacency_matrix(spec, cap), adjacency_spectrum(spec).multiset(), cap);
    const std::int64_t wiener_brute = oracle::pairwise_distance_sum(distances);
    const std::int64_t wiener_formula = checked_mul(spec.n(), mu[0]) / 2;

    const bool all = circulant && row_matches && distance_report.matched && adjacency_report.matched &&
                     wiener_brute == wiener_formula;

    Sink sink(out, opts.out_path);
    if (opts.format == "json") {
        json record = spec_echo(spec, "verify");
        record["verification"] = {{"matched", all},
                                  {"circulant", circulant},
                                  {"first_row", row_matches},
                                  {"distance_moments", report_json(distance_report)},
                                  {"adjacency_moments", report_json(adjacency_report)},
                                  {"wiener", {{"brute", wiener_brute}, {"formula", wiener_formula}}}};
        sink.line(record.dump());
    } else {
        const auto ok = [](bool b) { return std::string(b ? "ok" : "FAILED"); };
        sink.line(label(spec) + " verification");
        sink.line("circulant: " + ok(circulant));
        sink.line("first_row: " + ok(row_matches));
        sink.line("distance_moments: " + report_plain(distance_report));
        sink.line("adjacency_moments: " + report_plain(adjacency_report));
        sink.line("wiener: brute " + std::to_string(wiener_brute) + ", n*mu0/2 " + std::to_string(wiener_formula) +
                  " " + ok(wiener_brute == wiener_formula));
        sink.line(std::string("result: ") + (all ? "matched" : "mismatch"));
    }
    return all ? kSuccess : kVerificationMismatch;
}

// families ------------------------------------------------------------------

bool symbol_subset(const IcgSpec& inner, const IcgSpec& outer) {
    const auto a = symbol_set(inner);
    const auto b = symbol_set(outer);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int cmd_families(const CommonOptions& opts, const std::string& kind, const std::string& primes,
                 const std::string& pairs, std::ostream& out) {
    std::vector<FamilyPair> families;
    if (kind == "3p") {
        if (primes.empty()) fail(ErrorKind::InvalidArgument, "--kind 3p needs --p");
        for (const std::int64_t p : parse_list(primes)) families.push_back(family_3p(p));
    } else {
        if (pairs.empty()) fail(ErrorKind::InvalidArgument, "--kind 2pq needs --pairs");
        for (const auto& [p, q] : parse_pairs(pairs)) families.push_back(family_2pq(p, q));
    }

    Sink sink(out, opts.out_path);
    if (opts.format == "csv") {
        sink.line("left,right,left_energy,right_energy,predicted_energy,equienergetic,cospectral,left_diameter,"
                  "right_diameter,predicted_spectra_match,subgraph");
    }
    for (const auto& family : families) {
        const auto left = distance_classes(family.left);
        const auto right = distance_classes(family.right);
        const auto mu_left = distance_spectrum(left);
        const auto mu_right = distance_spectrum(right);
        const std::int64_t e_left = mu_left.energy();
        const std::int64_t e_right = mu_right.energy();
        const bool equal = e_left == e_right;
        const bool cospectral = mu_left.cospectral_with(mu_right);
        const bool predicted = mu_left == family.predicted_left && mu_right == family.predicted_right;
        const bool subgraph = symbol_subset(family.left, family.right);

        if (opts.format == "json") {
            json record{{"kind", kind},
                        {"n", family.left.n()},
                        {"left", spec_echo(family.left, "distance_spectrum")},
                        {"right", spec_echo(family.right, "distance_spectrum")},
                        {"left_energy", e_left},
                        {"right_energy", e_right},
                        {"predicted_energy", family.predicted_energy},
                        {"equienergetic", equal},
                        {"cospectral", cospectral},
                        {"left_diameter", left.diameter()},
                        {"right_diameter", right.diameter()},
                        {"predicted_spectra_match", predicted},
                        {"subgraph", subgraph}};
            record["left"]["multiset"] = multiset_json(mu_left.multiset());
            record["right"]["multiset"] = multiset_json(mu_right.multiset());
            sink.line(record.dump());
        } else if (opts.format == "csv") {
            sink.line(label(family.left) + "," + label(family.right) + "," + std::to_string(e_left) + "," +
                      std::to_string(e_right) + "," + std::to_string(family.predicted_energy) + "," +
                      (equal ? "1" : "0") + "," + (cospectral ? "1" : "0") + "," + std::to_string(left.diameter()) +
                      "," + std::to_string(right.diameter()) + "," + (predicted ? "1" : "0") + "," +
                      (subgraph ? "1" : "0"));
        } else {
            sink.line(label(family.left) + " vs " + label(family.right) + ": energies " + std::to_string(e_left) +
                      (equal ? " = " : " != ") + std::to_string(e_right) + " (predicted " +
                      std::to_string(family.predicted_energy) + "), " + (cospectral ? "cospectral" : "non-cospectral") +
                      ", diameters " + std::to_string(left.diameter()) + "," + std::to_string(right.diameter()) +
                      ", predicted spectra " + (predicted ? "match" : "DIFFER") +
                      (subgraph ? ", left is a subgraph of right" : ""));
        }
    }
    return kSuccess;
}

// scan ----------------------------------------------------------------------

struct ScanEntry {
    std::vector<std::int64_t> divisors;
    IndexedSpectrum spectrum;
};

int cmd_scan(const CommonOptions& opts, std::int64_t min_n, std::int64_t max_n, std::ostream& out) {
    if (min_n < 2) min_n = 2;
    Sink sink(out, opts.out_path);
    if (opts.format == "csv") sink.line("n,energy,divisors,spectrum_class");
    for (std::int64_t n = min_n; n <= max_n; ++n) {
        std::map<std::int64_t, std::vector<ScanEntry>> by_energy;
        for (const IcgSpec& spec : enumerate_specs(n)) {
            IndexedSpectrum mu = distance_spectrum(spec);
            by_energy[mu.energy()].push_back(
                {std::vector<std::int64_t>(spec.divisor_set().begin(), spec.divisor_set().end()), std::move(mu)});
        }

        for (auto& [energy, group] : by_energy) {
            if (group.size() < 2) continue;
            std::sort(group.begin(), group.end(),
                      [](const ScanEntry& a, const ScanEntry& b) { return a.divisors < b.divisors; });
            // Label members by spectrum; a group is reported only if it holds two distinct spectra.
            std::vector<std::size_t> classes;
            std::vector<const Multiset*> seen;
            for (const auto& entry : group) {
                const auto it = std::find_if(seen.begin(), seen.end(),
                                             [&](const Multiset* m) { return *m == entry.spectrum.multiset(); });
                classes.push_back(static_cast<std::size_t>(it - seen.begin()));
                if (it == seen.end()) seen.push_back(&entry.spectrum.multiset());
            }
            if (seen.size() < 2) continue;

            if (opts.format == "json") {
                json members = json::array();
                for (std::size_t i = 0; i < group.size(); ++i) {
                    members.push_back({{"divisors", group[i].divisors}, {"spectrum_class", classes[i]}});
                }
                sink.line(json{{"n", n}, {"energy", energy}, {"members", members}}.dump());
            } else if (opts.format == "csv") {
                for (std::size_t i = 0; i < group.size(); ++i) {
                    sink.line(std::to_string(n) + "," + std::to_string(energy) + "," + join(group[i].divisors, ";") +
                              "," + std::to_string(classes[i]));
                }
            } else {
                std::string line = "n=" + std::to_string(n) + " energy=" + std::to_string(energy) + ":";
                for (std::size_t i = 0; i < group.size(); ++i) {
                    line += " ICG_" + std::to_string(n) + "(" + join(group[i].divisors, ",") + ")[" +
                            std::to_string(classes[i]) + "]";
                }
                sink.line(line);
            }
        }
    }
    return kSuccess;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Disconnected: return kDisconnected;
        case ErrorKind::CapExceeded: return kCapExceeded;
        default: return kValidationError;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integral circulant graphs: distance spectra, energies and verification", "icg"};
    app.require_subcommand(1);

    CommonOptions opts;
    bool adjacency = false;
    bool full = false;
    std::int64_t cap = kDefaultOracleCap;
    std::string kind = "3p";
    std::string primes;
    std::string pairs;
    std::int64_t min_n = 2;
    std::int64_t max_n = 0;
    bool connected_only = false;

    auto* spectrum = app.add_subcommand("spectrum", "indexed spectrum and eigenvalue multiset");
    add_spec_options(spectrum, opts);
    add_output_options(spectrum, opts);
    spectrum->add_flag("--adjacency", adjacency, "adjacency instead of distance spectrum");

    auto* energy = app.add_subcommand("energy", "distance energy");
    auto* wiener = app.add_subcommand("wiener", "Wiener index");
    auto* diam = app.add_subcommand("diameter", "diameter");
    for (auto* cmd : {energy, wiener, diam}) {
        add_spec_options(cmd, opts);
        add_output_options(cmd, opts);
    }

    auto* matrix = app.add_subcommand("matrix", "distance matrix first row, or the full matrix");
    add_spec_options(matrix, opts);
    add_output_options(matrix, opts);
    matrix->add_flag("--full", full, "print the full n x n matrix (brute force)");
    matrix->add_option("--cap", cap, "largest order for the full matrix");

    auto* verify = app.add_subcommand("verify", "cross-check formulas against brute force");
    add_spec_options(verify, opts);
    add_output_options(verify, opts);
    verify->add_option("--cap", cap, "largest order verified");

    auto* families = app.add_subcommand("families", "equienergetic family pairs");
    families->add_option("--kind", kind, "family kind")->check(CLI::IsMember({"3p", "2pq"}));
    families->add_option("--p", primes, "primes p > 3 for the 3p family, comma-separated");
    families->add_option("--pairs", pairs, "p:q pairs with p > q > 3 for the 2pq family");
    add_output_options(families, opts);

    auto* scan = app.add_subcommand("scan", "search for distance-equienergetic, non-cospectral ICG groups");
    scan->add_option("--max-n", max_n, "largest modulus")->required();
    scan->add_option("--min-n", min_n, "smallest modulus");
    scan->add_flag("--connected-only", connected_only, "accepted for compatibility; only connected graphs are scanned");
    add_output_options(scan, opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationError;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(opts, adjacency, out);
        if (energy->parsed()) return cmd_scalar(opts, "distance_energy", distance_energy, out);
        if (wiener->parsed()) return cmd_scalar(opts, "wiener_index", wiener_index, out);
        if (diam->parsed()) {
            return cmd_scalar(opts, "diameter", [](const IcgSpec& s) -> std::int64_t { return diameter(s); }, out);
        }
        if (matrix->parsed()) return cmd_matrix(opts, full, cap, out);
        if (verify->parsed()) return cmd_verify(opts, cap, out);
        if (families->parsed()) return cmd_families(opts, kind, primes, pairs, out);
        if (scan->parsed()) return cmd_scan(opts, min_n, max_n, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kValidationError;
}

}  // namespace icg::cli
