#include "enumcount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "enumcount/errors.hpp"
#include "enumcount/genus.hpp"
#include "enumcount/kontsevich.hpp"
#include "enumcount/picard.hpp"
#include "enumcount/verify.hpp"

namespace enumcount::cli {

namespace {

const char* command_name(Command c) {
    switch (c) {
        case Command::nd: return "nd";
        case Command::triple: return "triple";
        case Command::genus2: return "genus2";
        case Command::breakdown: return "breakdown";
        case Command::gterm: return "gterm";
        case Command::verify: return "verify";
    }
    return "?";
}

class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A cell is either a small native integer, a big value (always a string in
// JSON), or null.
struct Cell {
    enum class Kind { small, big, null } kind;
    long small = 0;
    std::string text;

    static Cell of(long v) { return {Kind::small, v, std::to_string(v)}; }
    static Cell of(const ExactInteger& v) { return {Kind::big, 0, v.to_string()}; }
    static Cell of(const ExactRational& v) { return {Kind::big, 0, v.to_string()}; }
    static Cell of(std::string s) { return {Kind::big, 0, std::move(s)}; }
    static Cell none() { return {Kind::null, 0, ""}; }
};

struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void emit(const Report& report, const RunConfig& config, std::ostream& out) {
    std::string header_line;
    if (config.header) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
        header_line = std::string("enumcount ") + command_name(config.command) + " " + stamp;
    }
    switch (config.format) {
        case OutputFormat::json: {
            if (config.header) out << nlohmann::json{{"header", header_line}}.dump() << '\n';
            for (const auto& row : report.rows) {
                nlohmann::ordered_json obj;
                for (std::size_t i = 0; i < row.size(); ++i) {
                    const auto& c = row[i];
                    if (c.kind == Cell::Kind::small)
                        obj[report.columns[i]] = c.small;
                    else if (c.kind == Cell::Kind::big)
                        obj[report.columns[i]] = c.text;
                    else
                        obj[report.columns[i]] = nullptr;
                }
                out << obj.dump() << '\n';
            }
            break;
        }
        case OutputFormat::csv:
        case OutputFormat::text: {
            const char* sep = config.format == OutputFormat::csv ? "," : "  ";
            if (config.header) out << "# " << header_line << '\n';
            for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? sep : "") << report.columns[i];
            out << '\n';
            for (const auto& row : report.rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? sep : "") << (row[i].kind == Cell::Kind::null ? "-" : row[i].text);
                out << '\n';
            }
            break;
        }
    }
}

CurveCountTable obtain_counts(long needed, const RunConfig& config) {
    if (!config.cache_path) return rational_counts(needed);
    const auto& path = *config.cache_path;
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
        CurveCountTable cached = [&] {
            try {
                return load_table(path);
            } catch (const std::exception& e) {
                throw CacheError("cache " + path.string() + ": " + e.what());
            }
        }();
        if (cached.d_max() >= needed) return cached.truncated(needed);
    }
    auto table = rational_counts(needed);
    try {
        save_table(table, path);
    } catch (const std::exception& e) {
        throw CacheError(std::string("cache: ") + e.what());
    }
    return table;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig config;
    CLI::App app{"Exact enumerative counts of plane curves", "enumcount"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string cache;
    bool no_header = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--cache", cache, "Count-table cache file (read if present, written if extended)");
    app.add_flag("--no-header", no_header, "Omit the timestamp header line");

    long degree = 0;
    long genus = 0;
    struct Sub {
        Command command;
        CLI::App* app;
    };
    std::vector<Sub> subs = {
        {Command::nd, app.add_subcommand("nd", "Rational curve counts N_d for 1 <= d <= D")},
        {Command::triple, app.add_subcommand("triple", "Triple-point rational counts for 3 <= d <= D")},
        {Command::genus2, app.add_subcommand("genus2", "Genus-2 fixed-modulus counts for 4 <= d <= D")},
        {Command::breakdown, app.add_subcommand("breakdown", "Case decomposition of the genus-2 counts, 4 <= d <= D")},
        {Command::gterm, app.add_subcommand("gterm", "All-positive-degree term for genus G, degree D")},
        {Command::verify, app.add_subcommand("verify", "Check every consistency identity up to degree D")},
    };
    for (auto& s : subs) {
        if (s.command == Command::gterm) s.app->add_option("G", genus, "Genus")->required();
        s.app->add_option("D", degree, "Degree")->required();
    }

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (const auto& s : subs)
        if (s.app->parsed()) config.command = s.command;
    config.d_max = degree;
    config.g = genus;
    config.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::text;
    if (!cache.empty()) config.cache_path = cache;
    config.header = !no_header;

    switch (config.command) {
        case Command::nd:
        case Command::verify:
            if (config.d_max < 1) throw UsageError("D must be at least 1");
            break;
        case Command::triple:
            if (config.d_max < 3) throw UsageError("triple requires D >= 3");
            break;
        case Command::genus2:
        case Command::breakdown:
            if (config.d_max < 4) throw UsageError(std::string(command_name(config.command)) + " requires D >= 4");
            break;
        case Command::gterm:
            if (config.g < 2) throw UsageError("gterm requires G >= 2");
            if (config.d_max < 2 * (config.g - 1)) throw UsageError("gterm requires D >= 2(G-1)");
            break;
    }
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto counts = obtain_counts(config.d_max, config);
    const long top = config.d_max;
    Report report;
    int status = kExitOk;

    switch (config.command) {
        case Command::nd:
            report.columns = {"d", "N"};
            for (long d = 1; d <= top; ++d) report.rows.push_back({Cell::of(d), Cell::of(counts[d])});
            break;
        case Command::triple:
            report.columns = {"d", "Ntilde"};
            for (long d = 3; d <= top; ++d)
                report.rows.push_back({Cell::of(d), Cell::of(triple_point_curve_count(d, counts))});
            break;
        case Command::genus2:
            report.columns = {"d", "N2"};
            for (long d = 4; d <= top; ++d) report.rows.push_back({Cell::of(d), Cell::of(genus2_count(d, counts))});
            break;
        case Command::breakdown:
            report.columns = {"d", "case_i", "case_ii", "moduli_intersection", "aut_c0", "aut_generic", "total"};
            for (long d = 4; d <= top; ++d) {
                const auto b = genus2_breakdown(d, counts);
                report.rows.push_back({Cell::of(d), Cell::of(b.case_i), Cell::of(b.case_ii),
                                       Cell::of(b.moduli_intersection), Cell::of(b.aut_c0), Cell::of(b.aut_generic),
                                       Cell::of(b.total)});
            }
            break;
        case Command::gterm:
            report.columns = {"g", "d", "term"};
            report.rows.push_back(
                {Cell::of(config.g), Cell::of(top), Cell::of(leading_genus_term(config.g, top, counts))});
            break;
        case Command::verify:
            report.columns = {"identity", "status", "range", "first_failing_d"};
            for (const auto& r : verify_identities(top, counts)) {
                const std::string range =
                    r.first_d <= r.last_d ? std::to_string(r.first_d) + ".." + std::to_string(r.last_d) : "empty";
                report.rows.push_back({Cell::of(r.name), Cell::of(std::string(r.passed() ? "PASS" : "FAIL")),
                                       Cell::of(range),
                                       r.first_failing_d ? Cell::of(*r.first_failing_d) : Cell::none()});
                if (!r.passed()) {
                    status = kExitVerificationFailed;
                    err << "FAIL " << r.name << " at d = " << *r.first_failing_d << ": " << r.detail << '\n';
                }
            }
            break;
    }
    emit(report, config, out);
    return status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    try {
        return run(config, out, err);
    } catch (const CacheError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
}

}  // namespace enumcount::cli
