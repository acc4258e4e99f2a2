// Command-line front end: analyze | sweep | report | walk | gen-corpus.
// Exit codes: 0 success, 1 input error, 2 proved-bound violation,
// 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "hubres/analysis.hpp"
#include "hubres/enumeration.hpp"
#include "hubres/graph6.hpp"
#include "hubres/sweep.hpp"
#include "hubres/util.hpp"

namespace fs = std::filesystem;
using namespace hubres;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBoundViolation = 2;
constexpr int kExitNumerical = 3;

std::string read_stream_or_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& token, const std::string& input, const std::string& format) {
    if (!token.empty() && !input.empty())
        throw std::invalid_argument("give either --graph6 or --input, not both");
    if (!token.empty()) return parse_graph6(token);
    if (input.empty()) throw std::invalid_argument("no input graph; use --graph6 or --input");
    const std::string text = read_stream_or_file(input);
    if (format == "graph6") {
        std::istringstream in(text);
        auto tokens = read_graph6_lines(in);
        if (tokens.empty()) throw std::invalid_argument("no graph6 token in input");
        if (tokens.size() > 1)
            throw std::invalid_argument("input holds " + std::to_string(tokens.size()) +
                                        " graphs; this command takes exactly one");
        return parse_graph6(tokens[0]);
    }
    if (format == "edges") return parse_edge_list(text);
    throw std::invalid_argument("unknown format: " + format + " (use graph6 or edges)");
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

std::vector<Bias> parse_biases(std::vector<int> values) {
    if (values.empty()) return {Bias::repelling, Bias::standard, Bias::attracting};
    std::vector<Bias> biases;
    for (int v : values) biases.push_back(bias_from_int(v));
    return biases;
}

int cmd_analyze(const std::string& token, const std::string& input, const std::string& format,
                std::vector<int> alphas, const std::string& kind, const std::string& out) {
    const Graph g = load_graph(token, input, format);
    const std::string source = !token.empty() ? "inline" : input;
    const AnalysisReport report =
        analyze_graph(g, source, parse_biases(std::move(alphas)), kind_from_name(kind));
    write_output(out, analysis_to_json(report));
    return report.bound_violations > 0 ? kExitBoundViolation : kExitOk;
}

int cmd_gen_corpus(int n, const std::string& out) {
    const auto tokens = generate_connected_corpus(n);
    std::ostringstream body;
    for (const auto& t : tokens) body << t << '\n';
    write_output(out, body.str());
    std::cerr << "generated " << tokens.size() << " connected graphs on " << n << " vertices\n";
    return kExitOk;
}

int cmd_sweep(int n, const std::string& corpus, const std::string& out_dir, int jobs,
              long expected) {
    std::vector<std::string> tokens;
    if (n > 0 && !corpus.empty())
        throw std::invalid_argument("give either --n or --corpus, not both");
    if (n > 0) {
        for (const Graph& g : enumerate_connected(n)) tokens.push_back(write_graph6(g));
    } else if (!corpus.empty()) {
        std::istringstream in(read_stream_or_file(corpus));
        tokens = read_graph6_lines(in);
        if (tokens.empty()) throw std::invalid_argument("corpus is empty");
        const int order = parse_graph6(tokens.front()).order();
        const CorpusValidation v = validate_corpus(tokens, order);
        if (!v.all_connected) throw std::invalid_argument("corpus contains disconnected graphs");
        if (!v.all_distinct)
            throw std::invalid_argument("corpus contains isomorphic duplicates");
        if (expected > 0 && v.count != expected)
            std::cerr << "warning: corpus has " << v.count << " graphs, expected " << expected
                      << "\n";
    } else {
        throw std::invalid_argument("nothing to sweep; use --n or --corpus");
    }

    const auto records = run_sweep(tokens, jobs);
    const SweepSummary summary = classify_sweep(records);

    fs::create_directories(out_dir);
    write_output((fs::path(out_dir) / "records.csv").string(), sweep_to_csv(records));
    write_output((fs::path(out_dir) / "scatter.csv").string(), efficiency_scatter_csv(records));
    write_output((fs::path(out_dir) / "summary.json").string(), summary_to_json(summary));

    nlohmann::ordered_json extremes;
    const std::map<std::string, SweepMetric> metrics = {
        {"max_kirchhoff_repelling", SweepMetric::kirchhoff_repelling},
        {"max_kirchhoff_attracting", SweepMetric::kirchhoff_attracting},
        {"max_efficiency_repelling", SweepMetric::efficiency_repelling},
        {"min_efficiency_repelling", SweepMetric::efficiency_repelling},
        {"max_efficiency_attracting", SweepMetric::efficiency_attracting},
        {"min_efficiency_attracting", SweepMetric::efficiency_attracting}};
    for (const auto& [name, metric] : metrics) {
        const bool maximum = name.rfind("max_", 0) == 0;
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& rec : extremal_graphs(records, metric, 4, maximum))
            list.push_back(rec.graph6);
        extremes[name] = list;
    }
    write_output((fs::path(out_dir) / "extremes.json").string(), extremes.dump(2) + "\n");

    std::cout << summary_to_json(summary);
    return kExitOk;
}

// Largest connected component as a fresh graph with compacted labels.
Graph largest_component(const Graph& g, bool& reduced) {
    const Components comp = connected_components(g);
    reduced = comp.count > 1;
    if (!reduced) return g;
    std::vector<int> size(comp.count, 0);
    for (int v = 0; v < g.order(); ++v) ++size[comp.label[v]];
    const int keep =
        static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
    std::vector<int> remap(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (comp.label[v] == keep) remap[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [v, w] : g.edges())
        if (remap[v] != -1 && remap[w] != -1) edges.emplace_back(remap[v], remap[w]);
    return Graph(next, std::move(edges));
}

int cmd_report(const std::string& dir, const std::string& classmap, const std::string& out_dir) {
    // classmap: "filename,class" lines, '#' comments.
    std::vector<std::pair<std::string, std::string>> files;
    {
        std::istringstream in(read_stream_or_file(classmap));
        std::string line;
        while (std::getline(in, line)) {
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("classmap line without comma: " + line);
            files.emplace_back(line.substr(0, comma), line.substr(comma + 1));
        }
    }
    if (files.empty()) throw std::invalid_argument("classmap lists no networks");

    struct Row {
        std::string file, cls, error;
        int n = 0, m = 0;
        bool reduced = false;
        double e_rep = 0, e_att = 0;
    };
    std::vector<Row> rows;
    for (const auto& [file, cls] : files) {
        Row row;
        row.file = file;
        row.cls = cls;
        try {
            const Graph raw = read_edge_list_file((fs::path(dir) / file).string());
            const Graph g = largest_component(raw, row.reduced);
            row.n = g.order();
            row.m = g.size();
            row.e_rep = relative_efficiency(g, Bias::repelling);
            row.e_att = relative_efficiency(g, Bias::attracting);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }

    std::ostringstream networks;
    networks << "file,class,n,m,reduced_to_largest_component,E_repelling,E_attracting,error\n";
    for (const auto& r : rows) {
        networks << r.file << ',' << r.cls << ',' << r.n << ',' << r.m << ','
                 << (r.reduced ? 1 : 0) << ',';
        if (r.error.empty())
            networks << fmt12(r.e_rep) << ',' << fmt12(r.e_att) << ",\n";
        else
            networks << ",,\"" << r.error << "\"\n";
    }

    // Per-class mean and sample standard deviation over clean rows.
    std::map<std::string, std::vector<const Row*>> by_class;
    for (const auto& r : rows)
        if (r.error.empty()) by_class[r.cls].push_back(&r);
    auto mean_std = [](const std::vector<const Row*>& v, auto get) {
        double mean = 0;
        for (auto* r : v) mean += get(*r);
        mean /= static_cast<double>(v.size());
        double var = 0;
        for (auto* r : v) var += (get(*r) - mean) * (get(*r) - mean);
        const double sd = v.size() > 1 ? std::sqrt(var / static_cast<double>(v.size() - 1)) : 0.0;
        return std::pair<double, double>(mean, sd);
    };
    std::ostringstream classes;
    classes << "class,count,mean_E_repelling,std_E_repelling,mean_E_attracting,std_E_attracting\n";
    for (const auto& [cls, members] : by_class) {
        const auto [mr, sr] = mean_std(members, [](const Row& r) { return r.e_rep; });
        const auto [ma, sa] = mean_std(members, [](const Row& r) { return r.e_att; });
        classes << cls << ',' << members.size() << ',' << fmt12(mr) << ',' << fmt12(sr) << ','
                << fmt12(ma) << ',' << fmt12(sa) << '\n';
    }

    fs::create_directories(out_dir);
    write_output((fs::path(out_dir) / "networks.csv").string(), networks.str());
    write_output((fs::path(out_dir) / "classes.csv").string(), classes.str());
    std::cout << classes.str();
    return kExitOk;
}

int cmd_walk(const std::string& token, const std::string& input, const std::string& format,
             int alpha, int v, int w, std::int64_t trials, std::uint64_t seed,
             std::int64_t step_cap, const std::string& out) {
    const Graph g = load_graph(token, input, format);
    if (!is_connected(g)) throw std::invalid_argument("walk commands need a connected graph");
    if (v < 0 || v >= g.order() || w < 0 || w >= g.order() || v == w)
        throw std::invalid_argument("need distinct vertices v, w inside the graph");
    const Bias a = bias_from_int(alpha);

    const CommuteReport report = commute_identity_report(g, a);
    const Vector to_w = exact_hitting_times(g, a, w);
    const Vector to_v = exact_hitting_times(g, a, v);
    const McEstimate fwd = mc_hitting_time(g, a, v, w, trials, seed, step_cap);
    const McEstimate bwd = mc_hitting_time(g, a, w, v, trials, seed + 1, step_cap);

    nlohmann::ordered_json j = nlohmann::ordered_json::parse(commute_report_to_json(report));
    nlohmann::ordered_json mc;
    mc["v"] = v;
    mc["w"] = w;
    mc["trials"] = trials;
    mc["seed"] = seed;
    mc["step_cap"] = step_cap;
    mc["exact_forward"] = round12(to_w(v));
    mc["exact_backward"] = round12(to_v(w));
    mc["mc_forward"] = {{"mean", round12(fwd.mean)},
                        {"std_error", round12(fwd.std_error)},
                        {"censored", fwd.censored}};
    mc["mc_backward"] = {{"mean", round12(bwd.mean)},
                         {"std_error", round12(bwd.std_error)},
                         {"censored", bwd.censored}};
    j["walk"] = mc;
    write_output(out, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-biased graph Laplacians: spectra, resistances, walks"};
    app.require_subcommand(1);
    app.set_config("--config");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full report for one graph");
    std::string an_token, an_input, an_format = "graph6", an_kind = "group", an_out = "-";
    std::vector<int> an_alphas;
    analyze->add_option("--graph6", an_token, "graph6 token");
    analyze->add_option("--input", an_input, "input file, '-' for stdin");
    analyze->add_option("--format", an_format, "graph6 | edges")->capture_default_str();
    analyze->add_option("--alpha", an_alphas, "bias values, repeatable (-1, 0, 1)");
    analyze->add_option("--kind", an_kind, "pseudoinverse kind: group | mp | spectral")
        ->capture_default_str();
    analyze->add_option("--out", an_out, "output file, '-' for stdout")->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "bulk run over an enumeration or corpus");
    int sw_n = 0, sw_jobs = 1;
    long sw_expected = 0;
    std::string sw_corpus, sw_out;
    sweep->add_option("--n", sw_n, "enumerate all connected graphs on n vertices (2..7)");
    sweep->add_option("--corpus", sw_corpus, "graph6 corpus file, one token per line");
    sweep->add_option("--out", sw_out, "output directory")->required();
    sweep->add_option("--jobs", sw_jobs, "worker threads")->capture_default_str();
    sweep->add_option("--expected-count", sw_expected, "warn if the corpus size differs");

    // report
    auto* report = app.add_subcommand("report", "efficiency tables for edge-list networks");
    std::string rp_dir, rp_classmap, rp_out;
    report->add_option("--dir", rp_dir, "directory with edge-list files")->required();
    report->add_option("--classmap", rp_classmap, "CSV mapping filename,class")->required();
    report->add_option("--out", rp_out, "output directory")->required();

    // walk
    auto* walk = app.add_subcommand("walk", "exact and Monte Carlo hitting times");
    std::string wk_token, wk_input, wk_format = "graph6", wk_out = "-";
    int wk_alpha = 0, wk_v = 0, wk_w = 0;
    std::int64_t wk_trials = 100000, wk_cap = 1000000;
    std::uint64_t wk_seed = 12345;
    walk->add_option("--graph6", wk_token, "graph6 token");
    walk->add_option("--input", wk_input, "input file, '-' for stdin");
    walk->add_option("--format", wk_format, "graph6 | edges")->capture_default_str();
    walk->add_option("--alpha", wk_alpha, "bias value (-1, 0, 1)")->required();
    walk->add_option("--v", wk_v, "start vertex")->required();
    walk->add_option("--w", wk_w, "target vertex")->required();
    walk->add_option("--trials", wk_trials, "Monte Carlo trials")->capture_default_str();
    walk->add_option("--seed", wk_seed, "random seed")->capture_default_str();
    walk->add_option("--step-cap", wk_cap, "censor walks longer than this")
        ->capture_default_str();
    walk->add_option("--out", wk_out, "output file, '-' for stdout")->capture_default_str();

    // gen-corpus
    auto* gen = app.add_subcommand("gen-corpus", "write all connected graphs on n vertices");
    int gc_n = 8;
    std::string gc_out;
    gen->add_option("--n", gc_n, "order (2..8)")->capture_default_str();
    gen->add_option("--out", gc_out, "output file, '-' for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*analyze)
            return cmd_analyze(an_token, an_input, an_format, an_alphas, an_kind, an_out);
        if (*sweep) return cmd_sweep(sw_n, sw_corpus, sw_out, sw_jobs, sw_expected);
        if (*report) return cmd_report(rp_dir, rp_classmap, rp_out);
        if (*walk)
            return cmd_walk(wk_token, wk_input, wk_format, wk_alpha, wk_v, wk_w, wk_trials,
                            wk_seed, wk_cap, wk_out);
        if (*gen) return cmd_gen_corpus(gc_n, gc_out);
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
