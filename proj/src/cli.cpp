#include "verlinde/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "verlinde/abelian.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/graph.hpp"
#include "verlinde/polytope.hpp"

namespace verlinde::cli {

namespace {

struct NamedGraph {
    std::string name;
    TrinionGraph graph;
};

Json big_to_json(const BigInt& n)
{
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max()) {
        return n.convert_to<std::int64_t>();
    }
    return n.str();
}

std::string format_double(double x, int digits = 12)
{
    std::ostringstream s;
    s << std::setprecision(digits) << x;
    return s.str();
}

std::vector<NamedGraph> load_graphs(const GraphSource& source)
{
    if (source.genus.has_value() == source.graph_file.has_value()) {
        throw std::invalid_argument("give exactly one of --genus or --graph");
    }
    std::vector<NamedGraph> out;
    if (source.graph_file) {
        TrinionGraph g = graph_from_json(read_json_file(*source.graph_file));
        out.push_back({graph_name(g), std::move(g)});
    } else {
        const auto graphs = generate_genus_graphs(*source.genus);
        for (const auto& g : graphs) {
            out.push_back({graph_name(g), g});
        }
    }
    return out;
}

Json source_json(const GraphSource& source)
{
    Json j = Json::object();
    if (source.genus) {
        j["genus"] = *source.genus;
    }
    if (source.graph_file) {
        j["graph"] = *source.graph_file;
    }
    return j;
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << contents;
}

void require_method(const std::string& method)
{
    if (method != "brute" && method != "contract") {
        throw std::invalid_argument("--method must be 'brute' or 'contract', got '" + method +
                                    "'");
    }
}

bool brute_feasible(const TrinionGraph& g, int level, const EnumerationLimits& limits)
{
    return saturating_pow(static_cast<std::uint64_t>(level) + 1,
                          static_cast<std::uint64_t>(g.edge_count())) <= limits.max_states;
}

}  // namespace

bool RunReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::optional<std::string> RunReport::first_failure() const
{
    for (const Check& c : checks) {
        if (!c.pass) {
            return c.name + ": " + c.detail;
        }
    }
    return std::nullopt;
}

Json RunReport::to_json() const
{
    Json checks_json = Json::array();
    for (const Check& c : checks) {
        Json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        item["detail"] = c.detail;
        if (c.residual) {
            item["residual"] = *c.residual;
        }
        checks_json.push_back(std::move(item));
    }
    Json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["outputs"] = outputs;
    out["checks"] = std::move(checks_json);
    out["pass"] = passed();
    if (elapsed_ms) {
        out["elapsed_ms"] = *elapsed_ms;
    }
    return out;
}

std::string RunReport::to_csv() const
{
    std::ostringstream s;
    auto line = [&s](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s << (i ? "," : "") << cells[i];
        }
        s << '\n';
    };
    line(csv_header);
    for (const auto& row : csv_rows) {
        line(row);
    }
    return s.str();
}

RunReport cmd_graphs(const GraphsOptions& opts)
{
    RunReport report;
    report.command = "graphs";
    report.inputs["genus"] = opts.genus;
    const auto graphs = generate_genus_graphs(opts.genus);

    Json index = Json::object();
    index["genus"] = opts.genus;
    Json list = Json::array();
    bool shape_ok = true;
    report.csv_header = {"name", "vertices", "edges", "loops", "key"};
    for (const auto& g : graphs) {
        const std::string name = graph_name(g);
        const std::string file = name + ".trinion.json";
        Json item;
        item["name"] = name;
        item["file"] = file;
        item["key"] = canonical_form(g).key;
        item["graph"] = graph_to_json(g);
        list.push_back(item);

        shape_ok = shape_ok && g.vertex_count() == 2 * opts.genus - 2 &&
                   g.edge_count() == 3 * opts.genus - 3 && g.genus() == opts.genus;
        int loops = 0;
        std::string key;
        for (const auto& e : g.edges()) {
            loops += e.is_loop() ? 1 : 0;
        }
        for (const int x : canonical_form(g).key) {
            key += (key.empty() ? "" : " ") + std::to_string(x);
        }
        report.csv_rows.push_back({name, std::to_string(g.vertex_count()),
                                   std::to_string(g.edge_count()), std::to_string(loops), key});
        if (opts.out_dir) {
            std::filesystem::create_directories(*opts.out_dir);
            write_file((std::filesystem::path(*opts.out_dir) / file).string(),
                       dump(graph_to_json(g)));
        }
    }
    index["graphs"] = list;
    if (opts.out_dir) {
        Json file_index = index;
        for (auto& item : file_index["graphs"]) {
            item.erase("graph");
        }
        write_file((std::filesystem::path(*opts.out_dir) / "index.json").string(),
                   dump(file_index));
        report.inputs["out"] = *opts.out_dir;
    }
    report.outputs["count"] = graphs.size();
    report.outputs["graphs"] = list;
    report.checks.push_back({"graph-shape", shape_ok,
                             "every graph has 2g-2 vertices, 3g-3 edges and genus g", {}});
    return report;
}

RunReport cmd_count(const CountOptions& opts)
{
    require_method(opts.method);
    if (opts.level < 0) {
        throw std::invalid_argument("--level must be non-negative");
    }
    RunReport report;
    report.command = "count";
    report.inputs = source_json(opts.source);
    report.inputs["level"] = opts.level;
    report.inputs["method"] = opts.method;

    const auto graphs = load_graphs(opts.source);
    if (opts.labels_out && graphs.size() != 1) {
        throw std::invalid_argument("--labels-out needs a single graph (--graph)");
    }

    report.csv_header = {"graph", "count"};
    Json table = Json::array();
    std::optional<BigInt> first;
    bool independent = true;
    for (const auto& [name, g] : graphs) {
        const BigInt count = opts.method == "brute"
                                 ? count_admissible_bruteforce(g, opts.level, opts.limits)
                                 : count_via_contraction(g, opts.level, opts.limits);
        Json row;
        row["graph"] = name;
        row["count"] = big_to_json(count);
        table.push_back(row);
        report.csv_rows.push_back({name, count.str()});

        if (!first) {
            first = count;
        } else if (*first != count) {
            independent = false;
        }

        const std::string other = opts.method == "brute" ? "contract" : "brute";
        if (brute_feasible(g, opts.level, opts.limits)) {
            const BigInt check = opts.method == "brute"
                                     ? count_via_contraction(g, opts.level, opts.limits)
                                     : count_admissible_bruteforce(g, opts.level, opts.limits);
            report.checks.push_back({"dual-method:" + name, check == count,
                                     opts.method + "=" + count.str() + ", " + other + "=" +
                                         check.str(),
                                     {}});
        }

        if (opts.labels_out) {
            const auto labels = enumerate_admissible(g, opts.level, opts.limits);
            write_file(*opts.labels_out,
                       dump(weight_set_to_json(make_weight_set(g, opts.level, labels))));
        }
    }
    report.outputs["count"] = big_to_json(*first);
    report.outputs["graphs"] = table;
    if (opts.source.genus) {
        report.checks.push_back({"graph-independence", independent,
                                 independent ? "all " + std::to_string(graphs.size()) +
                                                   " graphs agree"
                                             : "counts differ across graphs",
                                 {}});
    }
    return report;
}

RunReport cmd_verlinde(const VerlindeOptions& opts)
{
    RunReport report;
    report.command = "verlinde";
    report.inputs["genus"] = opts.genus;
    report.inputs["level"] = opts.level;

    const VerlindeValue value = verlinde_evaluate(opts.genus, opts.level);
    const double residual = value.residual.convert_to<double>();
    report.outputs["dimension"] = big_to_json(value.dimension);
    report.outputs["rounding_residual"] = residual;
    report.checks.push_back({"rounding", residual < 1e-6, "|value - round(value)| < 1e-6",
                             residual});
    report.csv_header = {"genus", "level", "dimension", "residual"};
    report.csv_rows.push_back({std::to_string(opts.genus), std::to_string(opts.level),
                               value.dimension.str(), format_double(residual, 3)});

    if (opts.genus <= 4) {
        Json table = Json::array();
        for (const auto& g : generate_genus_graphs(opts.genus)) {
            const std::string name = graph_name(g);
            const BigInt count = count_via_contraction(g, opts.level, opts.limits);
            Json row;
            row["graph"] = name;
            row["count"] = big_to_json(count);
            table.push_back(row);
            report.checks.push_back({"weights:" + name, count == value.dimension,
                                     "admissible weights " + count.str() + " vs Verlinde " +
                                         value.dimension.str(),
                                     {}});
        }
        report.outputs["weight_counts"] = table;
    }
    return report;
}

RunReport cmd_check(const CheckOptions& opts)
{
    if (opts.max_level < 0) {
        throw std::invalid_argument("--max-level must be non-negative");
    }
    RunReport report;
    report.command = "check";
    report.inputs["genus"] = opts.genus;
    report.inputs["max_level"] = opts.max_level;

    const auto graphs = generate_genus_graphs(opts.genus);
    std::vector<std::pair<std::string, ClebschGordanPolytope>> polytopes;
    for (const auto& g : graphs) {
        polytopes.emplace_back(graph_name(g), build_polytope(g));
    }

    report.csv_header = {"level", "graph", "verlinde", "contract", "brute", "lattice"};
    Json rows = Json::array();
    for (int k = 0; k <= opts.max_level; ++k) {
        const VerlindeValue v = verlinde_evaluate(opts.genus, k);
        const double residual = v.residual.convert_to<double>();
        report.checks.push_back({"verlinde-rounding:k=" + std::to_string(k), residual < 1e-6,
                                 "residual " + format_double(residual, 3), residual});
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const auto& g = graphs[i];
            const std::string& name = polytopes[i].first;
            const std::string tag = name + ":k=" + std::to_string(k);

            const BigInt contract = count_via_contraction(g, k, opts.limits);
            report.checks.push_back({"contract=verlinde:" + tag, contract == v.dimension,
                                     contract.str() + " vs " + v.dimension.str(), {}});

            std::optional<BigInt> brute;
            if (brute_feasible(g, k, opts.limits)) {
                brute = count_admissible_bruteforce(g, k, opts.limits);
                report.checks.push_back({"brute=contract:" + tag, *brute == contract,
                                         brute->str() + " vs " + contract.str(), {}});
            }
            std::optional<BigInt> lattice;
            if (k >= 1 && brute_feasible(g, k, opts.limits)) {
                lattice = lattice_count(polytopes[i].second, g, k);
                report.checks.push_back({"lattice=contract:" + tag, *lattice == contract,
                                         lattice->str() + " vs " + contract.str(), {}});
            }

            Json row;
            row["level"] = k;
            row["graph"] = name;
            row["verlinde"] = big_to_json(v.dimension);
            row["contract"] = big_to_json(contract);
            row["brute"] = brute ? big_to_json(*brute) : Json(nullptr);
            row["lattice"] = lattice ? big_to_json(*lattice) : Json(nullptr);
            rows.push_back(row);
            report.csv_rows.push_back({std::to_string(k), name, v.dimension.str(),
                                       contract.str(), brute ? brute->str() : "",
                                       lattice ? lattice->str() : ""});
        }
    }
    report.outputs["rows"] = rows;
    const auto failure = report.first_failure();
    report.outputs["first_discrepancy"] = failure ? Json(*failure) : Json(nullptr);
    return report;
}

RunReport cmd_polytope(const PolytopeOptions& opts)
{
    if (opts.mode != "volume-exact" && opts.mode != "volume-mc" && opts.mode != "asymptotics") {
        throw std::invalid_argument("--mode must be volume-exact, volume-mc or asymptotics");
    }
    RunReport report;
    report.command = "polytope";
    report.inputs = source_json(opts.source);
    report.inputs["mode"] = opts.mode;

    const auto graphs = load_graphs(opts.source);
    if (opts.polytope_out) {
        if (graphs.size() != 1) {
            throw std::invalid_argument("--polytope-out needs a single graph (--graph)");
        }
        write_file(*opts.polytope_out, dump(polytope_to_json(build_polytope(graphs[0].graph))));
    }
    Json table = Json::array();

    if (opts.mode == "volume-exact") {
        report.csv_header = {"graph", "volume"};
        std::optional<Rational> first;
        bool equal = true;
        for (const auto& [name, g] : graphs) {
            const Rational vol = exact_volume(build_polytope(g));
            Json row;
            row["graph"] = name;
            row["volume"] = to_string(vol);
            row["volume_decimal"] = to_double(vol);
            table.push_back(row);
            report.csv_rows.push_back({name, to_string(vol)});
            if (!first) {
                first = vol;
            } else {
                equal = equal && *first == vol;
            }
        }
        report.outputs["volumes"] = table;
        if (graphs.size() > 1) {
            report.checks.push_back({"volume-graph-independence", equal,
                                     equal ? "all graphs share volume " + to_string(*first)
                                           : "volumes differ across graphs",
                                     {}});
        }
    } else if (opts.mode == "volume-mc") {
        report.inputs["samples"] = opts.samples;
        report.inputs["seed"] = opts.seed;
        report.csv_header = {"graph", "estimate", "standard_error", "exact"};
        for (const auto& [name, g] : graphs) {
            const ClebschGordanPolytope p = build_polytope(g);
            const MonteCarloVolume mc = mc_volume(p, opts.samples, opts.seed);
            Json row;
            row["graph"] = name;
            row["estimate"] = mc.estimate;
            row["standard_error"] = mc.standard_error;
            row["hits"] = mc.hits;
            std::string exact_text;
            if (p.dim <= kMaxExactVolumeDim) {
                const Rational exact = exact_volume(p);
                exact_text = to_string(exact);
                row["exact"] = exact_text;
                const double dev = std::abs(mc.estimate - to_double(exact));
                const double sigmas = mc.standard_error > 0 ? dev / mc.standard_error
                                                            : (dev == 0 ? 0.0 : INFINITY);
                report.checks.push_back({"mc-within-4-sigma:" + name, sigmas <= 4.0,
                                         format_double(sigmas, 4) + " sigma from exact " +
                                             exact_text,
                                         sigmas});
            }
            table.push_back(row);
            report.csv_rows.push_back({name, format_double(mc.estimate),
                                       format_double(mc.standard_error), exact_text});
        }
        report.outputs["estimates"] = table;
    } else {
        if (opts.k_max < 1) {
            throw std::invalid_argument("--k-max must be >= 1");
        }
        report.inputs["k_max"] = opts.k_max;
        const bool many = graphs.size() > 1;
        report.csv_header = many ? std::vector<std::string>{"graph", "k", "count", "ratio"}
                                 : std::vector<std::string>{"k", "count", "ratio"};
        for (const auto& [name, g] : graphs) {
            const AsymptoticReport a = asymptotic_table(g, opts.k_max);
            Json rows = Json::array();
            for (const auto& r : a.rows) {
                Json row;
                row["k"] = r.level;
                row["count"] = big_to_json(r.count);
                row["ratio"] = to_string(r.ratio);
                row["ratio_decimal"] = to_double(r.ratio);
                rows.push_back(row);
                std::vector<std::string> cells{std::to_string(r.level), r.count.str(),
                                               format_double(to_double(r.ratio))};
                if (many) {
                    cells.insert(cells.begin(), name);
                }
                report.csv_rows.push_back(std::move(cells));
            }
            Json item;
            item["graph"] = name;
            item["table"] = rows;
            item["stated_limit_volume"] = to_string(a.volume);
            item["parity_rank"] = a.parity_rank;
            item["volume_over_2_pow_rank"] = to_string(a.volume_over_parity);
            if (a.extrapolated) {
                const double measured = to_double(*a.extrapolated);
                const double predicted = to_double(a.volume_over_parity);
                const double rel = std::abs(measured - predicted) / predicted;
                item["measured_limit"] = measured;
                item["measured_limit_exact"] = to_string(*a.extrapolated);
                item["relative_gap_to_volume_over_2_pow_rank"] = rel;
                item["relative_gap_to_volume"] =
                    std::abs(measured - to_double(a.volume)) / to_double(a.volume);
                report.checks.push_back({"limit=volume/2^r:" + name, rel < 1e-2,
                                         "measured " + format_double(measured, 8) +
                                             ", volume/2^r = " + to_string(a.volume_over_parity) +
                                             ", volume = " + to_string(a.volume),
                                         rel});
            } else {
                item["measured_limit"] = nullptr;
            }
            table.push_back(item);
        }
        report.outputs["asymptotics"] = table;
    }
    return report;
}

RunReport cmd_abelian(const AbelianOptions& opts)
{
    RunReport report;
    report.command = "abelian";
    const bool lattice_mode = opts.genus.has_value() || opts.level.has_value();
    if (lattice_mode == opts.multisection_file.has_value()) {
        throw std::invalid_argument("give either --genus and --level, or --multisection");
    }

    if (lattice_mode) {
        if (!opts.genus || !opts.level) {
            throw std::invalid_argument("--genus and --level must be given together");
        }
        report.inputs["genus"] = *opts.genus;
        report.inputs["level"] = *opts.level;
        const TorusFibration f{*opts.genus, *opts.level};
        const BigInt expected = boost::multiprecision::pow(BigInt(f.level), static_cast<unsigned>(std::max(f.genus, 0)));
        report.csv_header = {"characteristic"};
        if (opts.list) {
            const auto points = bs_points(f);
            Json list = Json::array();
            for (const auto& p : points) {
                list.push_back(p.residues);
                std::string cell;
                for (const int r : p.residues) {
                    cell += (cell.empty() ? "" : " ") + std::to_string(r);
                }
                report.csv_rows.push_back({cell});
            }
            report.outputs["points"] = list;
            report.checks.push_back({"count=k^g", BigInt(points.size()) == expected,
                                     std::to_string(points.size()) + " points", {}});
            report.outputs["count"] = points.size();
        } else {
            if (f.genus < 1 || f.level < 1) {
                throw std::invalid_argument("torus fibration needs g >= 1 and k >= 1");
            }
            report.outputs["count"] = big_to_json(expected);
            report.csv_header = {"genus", "level", "count"};
            report.csv_rows.push_back({std::to_string(f.genus), std::to_string(f.level),
                                       expected.str()});
        }
        return report;
    }

    report.inputs["multisection"] = *opts.multisection_file;
    const AffineMultisection m = multisection_from_json(read_json_file(*opts.multisection_file));
    const BigInt count = gft_intersection_count(m);
    const auto fibres = e_bs_fibres(m);
    report.outputs["count"] = big_to_json(count);
    Json list = Json::array();
    report.csv_header = {"component", "point"};
    for (const auto& f : fibres) {
        Json item;
        std::vector<std::string> coords;
        std::string cell;
        for (const auto& x : f.point) {
            coords.push_back(to_string(x));
            cell += (cell.empty() ? "" : " ") + to_string(x);
        }
        item["point"] = coords;
        item["component"] = f.component;
        list.push_back(item);
        report.csv_rows.push_back({std::to_string(f.component), cell});
    }
    report.outputs["fibres"] = list;
    report.checks.push_back({"fibres=count", BigInt(fibres.size()) == count,
                             std::to_string(fibres.size()) + " fibres vs count " + count.str(),
                             {}});
    return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"verlinde_lab: conformal block ranks for SU(2) by three independent routes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    bool timing = false;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("--timing", timing, "Include elapsed_ms in the JSON report");

    EnumerationLimits limits;
    auto add_limits = [&limits](CLI::App* sub) {
        sub->add_option("--max-states", limits.max_states,
                        "Cap on (k+1)^E for brute-force enumeration")
            ->capture_default_str();
        sub->add_option("--max-frontier", limits.max_frontier,
                        "Cap on intermediate tensor entries during contraction")
            ->capture_default_str();
    };

    GraphsOptions graphs_opts;
    auto* graphs = app.add_subcommand("graphs", "Enumerate trinion dual graphs of a genus");
    graphs->add_option("--genus", graphs_opts.genus, "Genus (2..4)")->required();
    graphs->add_option("--out", graphs_opts.out_dir, "Directory for .trinion.json files");

    CountOptions count_opts;
    std::optional<int> count_genus;
    std::optional<std::string> count_graph;
    auto* count = app.add_subcommand("count", "Count admissible weights of level k");
    auto* cg = count->add_option("--genus", count_genus, "Genus (all graph classes)");
    auto* cf = count->add_option("--graph", count_graph, "Graph file (.trinion.json)")
                   ->check(CLI::ExistingFile);
    cg->excludes(cf);
    count->add_option("--level", count_opts.level, "Level k")->required();
    count->add_option("--method", count_opts.method, "brute or contract")
        ->check(CLI::IsMember({"brute", "contract"}))
        ->capture_default_str();
    count->add_option("--labels-out", count_opts.labels_out, "Write the weight-set JSON");
    add_limits(count);

    VerlindeOptions verlinde_opts;
    auto* verlinde = app.add_subcommand("verlinde", "Evaluate the Verlinde formula");
    verlinde->add_option("--genus", verlinde_opts.genus, "Genus >= 2")->required();
    verlinde->add_option("--level", verlinde_opts.level, "Level k >= 0")->required();
    add_limits(verlinde);

    CheckOptions check_opts;
    auto* check = app.add_subcommand("check", "Reconcile Verlinde, weights and lattice counts");
    check->add_option("--genus", check_opts.genus, "Genus (2..4)")->required();
    check->add_option("--max-level", check_opts.max_level, "Check levels 0..K")->required();
    add_limits(check);

    PolytopeOptions polytope_opts;
    std::optional<int> poly_genus;
    std::optional<std::string> poly_graph;
    auto* polytope = app.add_subcommand("polytope", "Moment polytope volume and asymptotics");
    auto* pg = polytope->add_option("--genus", poly_genus, "Genus (all graph classes)");
    auto* pf = polytope->add_option("--graph", poly_graph, "Graph file (.trinion.json)")
                   ->check(CLI::ExistingFile);
    pg->excludes(pf);
    polytope->add_option("--mode", polytope_opts.mode, "volume-exact | volume-mc | asymptotics")
        ->check(CLI::IsMember({"volume-exact", "volume-mc", "asymptotics"}))
        ->capture_default_str();
    polytope->add_option("--samples", polytope_opts.samples, "Monte Carlo samples")
        ->capture_default_str();
    polytope->add_option("--seed", polytope_opts.seed, "Monte Carlo seed")->capture_default_str();
    polytope->add_option("--k-max", polytope_opts.k_max, "Largest level for asymptotics")
        ->capture_default_str();
    polytope->add_option("--polytope-out", polytope_opts.polytope_out,
                         "Write the polytope JSON");

    AbelianOptions abelian_opts;
    auto* abelian = app.add_subcommand("abelian", "Abelian Bohr-Sommerfeld and GFT counts");
    abelian->add_option("--genus", abelian_opts.genus, "Torus rank g");
    abelian->add_option("--level", abelian_opts.level, "Level k");
    abelian->add_option("--multisection", abelian_opts.multisection_file, "Multisection JSON")
        ->check(CLI::ExistingFile);
    abelian->add_flag("--list", abelian_opts.list, "List every characteristic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    try {
        if (*graphs) {
            report = cmd_graphs(graphs_opts);
        } else if (*count) {
            count_opts.source = {count_genus, count_graph};
            count_opts.limits = limits;
            report = cmd_count(count_opts);
        } else if (*verlinde) {
            verlinde_opts.limits = limits;
            report = cmd_verlinde(verlinde_opts);
        } else if (*check) {
            check_opts.limits = limits;
            report = cmd_check(check_opts);
        } else if (*polytope) {
            polytope_opts.source = {poly_genus, poly_graph};
            report = cmd_polytope(polytope_opts);
        } else {
            report = cmd_abelian(abelian_opts);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (timing) {
        report.elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    }

    out << (format == "csv" ? report.to_csv() : dump(report.to_json()));
    if (const auto failure = report.first_failure()) {
        err << "check failed: " << *failure << "\n";
        return 1;
    }
    return 0;
}

}  // namespace verlinde::cli
