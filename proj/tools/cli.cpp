#include "cli.hpp"

#include "fsm/hurwitz.hpp"
#include "fsm/map_oracle.hpp"
#include "fsm/reference.hpp"
#include "fsm/verify.hpp"
#include "fsm/workspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fsm::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for invalid selector combinations; maps to exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        size_t pos = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ConfigError("not an integer: '" + tok + "'");
        }
        if (pos != tok.size())
            throw ConfigError("not an integer: '" + tok + "'");
        v.push_back(x);
    }
    return v;
}

std::string csv_quote(const std::string& s)
{
    return "\"" + s + "\"";
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Reference rows double as the default row selection when --lengths is omitted.
const RefTable* default_rows(const std::string& family, const std::string& mode, int genus)
{
    for (const auto& t : reference_tables()) {
        bool mode_ok = t.mode == mode || (t.family != "cylinders" && mode == "simple" && t.mode == "fully-simple");
        if (t.family == family && mode_ok && t.genus == genus)
            return &t;
    }
    return nullptr;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.family.empty())
        throw ConfigError("tables needs --family");
    int n = family_boundaries(cfg.family);
    int genus = cfg.genus >= 0 ? cfg.genus : family_default_genus(cfg.family);
    std::vector<std::vector<int>> rows;
    if (cfg.lengths_given) {
        if (cfg.lengths.empty() || cfg.lengths.size() % n != 0)
            throw ConfigError("--lengths must list " + std::to_string(n) + " lengths per row");
        for (size_t i = 0; i < cfg.lengths.size(); i += n)
            rows.emplace_back(cfg.lengths.begin() + i, cfg.lengths.begin() + i + n);
    } else {
        const RefTable* t = default_rows(cfg.family, cfg.mode, genus);
        if (!t)
            throw ConfigError("no default rows for this family and mode; pass --lengths");
        for (const auto& r : t->rows)
            rows.push_back(r.lengths);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    Workspace ws(cfg.q_max, cfg.u_order);
    std::vector<std::vector<Rat>> values;
    for (const auto& r : rows)
        values.push_back(ws.row(cfg.family, cfg.mode, genus, r));

    if (cfg.format == "json") {
        json doc;
        doc["family"] = cfg.family;
        doc["mode"] = cfg.mode;
        doc["genus"] = genus;
        doc["qmax"] = cfg.q_max;
        doc["rows"] = json::array();
        for (size_t i = 0; i < rows.size(); ++i) {
            json coeffs = json::array();
            for (const Rat& v : values[i])
                coeffs.push_back(to_string(v));
            doc["rows"].push_back({{"lengths", rows[i]}, {"coeffs", coeffs}});
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "lengths";
        for (int q = 0; q <= cfg.q_max; ++q)
            out << ",Q=" << q;
        out << "\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            out << csv_quote(join(rows[i]));
            for (const Rat& v : values[i])
                out << "," << csv_quote(to_string(v));
            out << "\n";
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    std::vector<int> ids;
    try {
        ids = suite_criteria(cfg.suite);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (cfg.cap < 1 || cfg.l_max < 1)
        throw ConfigError("--cap and --lmax must be positive");
    if (cfg.l_max > 6)
        throw ConfigError("--lmax is capped at 6 (transposition paths are enumerated)");
    VerifyOptions opts;
    opts.q_max = cfg.q_max;
    opts.cap = cfg.cap;
    opts.l_max = cfg.l_max;
    Workspace ws(cfg.q_max, cfg.u_order);
    json doc;
    doc["suite"] = cfg.suite;
    doc["qmax"] = cfg.q_max;
    doc["criteria"] = json::array();
    bool all = true;
    for (int id : ids) {
        CriterionResult r = run_criterion(id, ws, opts);
        json c;
        c["id"] = r.id;
        c["title"] = r.title;
        c["pass"] = r.pass;
        c["seconds"] = r.seconds;
        c["checks"] = json::array();
        for (const auto& ch : r.checks)
            c["checks"].push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        c["notes"] = r.notes;
        doc["criteria"].push_back(c);
        all = all && r.pass;
    }
    doc["pass"] = all;
    out << doc.dump(2) << "\n";
    return all ? 0 : 1;
}

json laurent_json(const NLaurent& v)
{
    json o = json::object();
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it)
        o["N^" + std::to_string(it->first)] = to_string(it->second);
    return o;
}

struct HurwitzArgs {
    std::string kind = "strict";
    int k = 0;
    std::string mu, lambda;
    bool transition = false;
    std::string direction = "fs-from-ordinary";
    int size = 2;
    int depth = 6;
    bool weingarten = false;
    std::string n_value;
};

int cmd_hurwitz(const HurwitzArgs& a, std::ostream& out)
{
    json doc;
    if (a.transition) {
        if (a.size < 1 || a.depth < 0)
            throw ConfigError("--size must be positive and --depth nonnegative");
        bool fs = a.direction == "fs-from-ordinary";
        if (!fs && a.direction != "ordinary-from-fs")
            throw ConfigError("--direction is fs-from-ordinary or ordinary-from-fs");
        int L = a.size;
        const auto& parts = char_table(L).parts;
        // Column mu of the matrix is the image of the unit moment vector at mu.
        int in_cut = fs ? -a.depth + L : -a.depth - L;
        std::vector<MomentVector> images;
        for (const auto& mu : parts) {
            MomentVector mv;
            for (const auto& p : parts)
                mv.emplace(p, p == mu ? NLaurent::monomial(1, 0, in_cut) : NLaurent(in_cut));
            images.push_back(transition(fs ? Direction::fs_from_ordinary : Direction::ordinary_from_fs, mv, -a.depth));
        }
        doc["direction"] = a.direction;
        doc["L"] = L;
        doc["depth"] = a.depth;
        json labels = json::array();
        for (const auto& p : parts)
            labels.push_back(p.str());
        doc["partitions"] = labels;
        json m = json::array();
        for (const auto& lam : parts) {
            json row = json::array();
            for (const auto& img : images)
                row.push_back(laurent_json(img.at(lam)));
            m.push_back(row);
        }
        doc["matrix"] = m;
    } else if (a.weingarten) {
        Partition beta = parse_partition(a.mu);
        Rat N = parse_rat(a.n_value);
        doc["beta"] = beta.str();
        doc["N"] = to_string(N);
        doc["value"] = to_string(weingarten(beta.size(), beta, N));
    } else {
        if (a.mu.empty() || a.lambda.empty())
            throw ConfigError("hurwitz needs --mu and --lambda");
        if (a.k < 0)
            throw ConfigError("--k must be nonnegative");
        HurwitzKind kind = parse_hurwitz_kind(a.kind);
        Partition mu = parse_partition(a.mu), lam = parse_partition(a.lambda);
        doc["kind"] = a.kind;
        doc["k"] = a.k;
        doc["mu"] = mu.str();
        doc["lambda"] = lam.str();
        doc["value"] = to_string(hurwitz_number(kind, a.k, mu, lam));
    }
    out << doc.dump(2) << "\n";
    return 0;
}

struct OracleArgs {
    std::string boundaries;
    int quads = 0;
    bool classify = false;
    int cap = 16;
    int threads = 0;
    std::string format = "csv";
};

int cmd_oracle(const OracleArgs& a, std::ostream& out)
{
    std::vector<int> ls = parse_int_list(a.boundaries);
    if (ls.empty())
        throw ConfigError("oracle needs --boundaries");
    for (int l : ls)
        if (l < 1)
            throw ConfigError("boundary lengths must be positive");
    if (a.quads < 0)
        throw ConfigError("--quads must be nonnegative");
    Census c = enumerate(ls, std::vector<int>(a.quads, 4), a.cap, a.threads);
    std::vector<std::pair<CensusKey, Rat>> cells;
    for (const auto& [key, w] : c.cells)
        if (a.classify || std::get<1>(key) == "ordinary")
            cells.emplace_back(key, w);
    if (a.format == "json") {
        json doc;
        doc["boundaries"] = ls;
        doc["quads"] = a.quads;
        doc["cells"] = json::array();
        for (const auto& [key, w] : cells)
            doc["cells"].push_back({{"genus", std::get<0>(key)},
                                    {"class", std::get<1>(key)},
                                    {"connectivity", std::get<2>(key)},
                                    {"weight", to_string(w)}});
        out << doc.dump(2) << "\n";
    } else {
        out << "genus,class,connectivity,weight\n";
        for (const auto& [key, w] : cells)
            out << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key) << ","
                << csv_quote(to_string(w)) << "\n";
    }
    return 0;
}

} // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact enumeration of ordinary and fully simple maps"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string lengths;

    auto* tables = app.add_subcommand("tables", "Emit counts [t^Q] for a family of boundary conditions");
    tables->add_option("--family", cfg.family, "disks, cylinders, tori or pants")->required();
    tables->add_option("--mode", cfg.mode, "ordinary, simple, mixed or fully-simple");
    tables->add_option("--lengths", lengths, "comma list, one group of n lengths per row");
    tables->add_option("--qmax", cfg.q_max, "largest number of quadrangles");
    tables->add_option("--genus", cfg.genus, "genus (default 1 for tori, 0 otherwise)");
    tables->add_option("--u-order", cfg.u_order, "override the series order in u = sqrt(t)");
    tables->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    tables->add_option("--out", cfg.out, "output file (default standard output)");

    auto* verify = app.add_subcommand("verify", "Run verification suites and print a JSON report");
    verify->add_option("--suite", cfg.suite, "tables, bijections, closed-forms, oracle, hurwitz, properties, all");
    verify->add_option("--qmax", cfg.q_max, "largest number of quadrangles");
    verify->add_option("--cap", cfg.cap, "largest half-edge count for the map oracle");
    verify->add_option("--lmax", cfg.l_max, "largest degree for the transposition-path oracle");
    verify->add_option("--out", cfg.out, "output file (default standard output)");

    HurwitzArgs ha;
    auto* hurwitz = app.add_subcommand("hurwitz", "Monotone Hurwitz numbers, transition matrices, Weingarten values");
    hurwitz->add_option("--kind", ha.kind, "strict, weak or simple");
    hurwitz->add_option("--k", ha.k, "number of transpositions");
    hurwitz->add_option("--mu", ha.mu, "partition, comma separated (the class beta for --weingarten)");
    hurwitz->add_option("--lambda", ha.lambda, "partition, comma separated");
    hurwitz->add_flag("--transition", ha.transition, "emit the moment transition matrix for --size");
    hurwitz->add_option("--direction", ha.direction, "fs-from-ordinary or ordinary-from-fs");
    hurwitz->add_option("--size", ha.size, "L = |lambda| for --transition");
    hurwitz->add_option("--depth", ha.depth, "keep powers N^-depth and above");
    hurwitz->add_flag("--weingarten", ha.weingarten, "evaluate the Weingarten function at --N");
    hurwitz->add_option("--N", ha.n_value, "matrix size for --weingarten");
    hurwitz->add_option("--out", cfg.out, "output file (default standard output)");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Census of glued quadrangulations by genus and boundary class");
    oracle->add_option("--boundaries", oa.boundaries, "boundary lengths, comma separated")->required();
    oracle->add_option("--quads", oa.quads, "number of inner quadrangles");
    oracle->add_flag("--classify", oa.classify, "report simple and fully simple classes too");
    oracle->add_option("--cap", oa.cap, "largest half-edge count");
    oracle->add_option("--threads", oa.threads, "worker threads (0 = hardware)");
    oracle->add_option("--format", oa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    oracle->add_option("--out", cfg.out, "output file (default standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int rc = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return rc == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream* dest = &out;
    try {
        if (!lengths.empty()) {
            cfg.lengths = parse_int_list(lengths);
            cfg.lengths_given = true;
        }
        if (cfg.q_max < 0)
            throw ConfigError("--qmax must be nonnegative");
        if (cfg.u_order != 0 && cfg.u_order < 2 * cfg.q_max + 2)
            throw ConfigError("--u-order must be at least 2 * qmax + 2");
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file)
                throw ConfigError("cannot open " + cfg.out);
            dest = &file;
        }
        if (*tables) {
            cfg.subcommand = "tables";
            return cmd_tables(cfg, *dest);
        }
        if (*verify) {
            cfg.subcommand = "verify";
            return cmd_verify(cfg, *dest);
        }
        if (*hurwitz) {
            cfg.subcommand = "hurwitz";
            return cmd_hurwitz(ha, *dest);
        }
        cfg.subcommand = "oracle";
        return cmd_oracle(oa, *dest);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fsm::cli
