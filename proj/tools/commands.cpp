#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gplus/families.hpp"
#include "gplus/io.hpp"
#include "gplus/spectra.hpp"

namespace gplus::cli {

namespace {

unsigned parse_positive(std::string_view s, std::string_view what)
{
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value == 0)
        throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "' in family spec");
    return value;
}

std::string str(const BigInt& v)
{
    return v.str();
}

std::string str(std::size_t v)
{
    return std::to_string(v);
}

}  // namespace

std::string FamilySpec::to_string() const
{
    std::string s = (family == Family::G ? "g:" : "gplus:") + std::to_string(d) + "," +
                    std::to_string(c);
    if (construction == Construction::Iterative)
        s += ":iterative";
    else if (construction == Construction::Indexed)
        s += ":indexed";
    return s;
}

FamilySpec parse_family(std::string_view text)
{
    FamilySpec spec;
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw UsageError("family spec needs the form g:d,c or gplus:d,c[:construction]");
    auto kind = text.substr(0, colon);
    if (kind == "g")
        spec.family = Family::G;
    else if (kind == "gplus")
        spec.family = Family::Gplus;
    else
        throw UsageError("unknown family '" + std::string(kind) + "'");

    auto rest = text.substr(colon + 1);
    auto second = rest.find(':');
    auto params = rest.substr(0, second);
    auto comma = params.find(',');
    if (comma == std::string_view::npos)
        throw UsageError("family spec needs d,c");
    spec.d = parse_positive(params.substr(0, comma), "d");
    spec.c = parse_positive(params.substr(comma + 1), "c");

    if (second != std::string_view::npos) {
        auto cons = rest.substr(second + 1);
        if (cons == "direct")
            spec.construction = Construction::Direct;
        else if (cons == "iterative")
            spec.construction = Construction::Iterative;
        else if (cons == "indexed")
            spec.construction = Construction::Indexed;
        else
            throw UsageError("unknown construction '" + std::string(cons) + "'");
    }
    if (spec.construction != Construction::Direct &&
        (spec.family != Family::Gplus || spec.d != 2))
        throw UsageError("iterative and indexed constructions exist only for gplus:2,c");
    return spec;
}

std::optional<FamilySpec> try_parse_family(std::string_view text)
{
    if (!text.starts_with("g:") && !text.starts_with("gplus:"))
        return std::nullopt;
    return parse_family(text);
}

LabeledGraph materialize(const FamilySpec& spec)
{
    if (spec.family == Family::G)
        return build_G(spec.d, spec.c);
    switch (spec.construction) {
    case Construction::Iterative:
        return align(build_Gplus2_iterative(spec.c));
    case Construction::Indexed:
        return build_Gplus2_indexed(spec.c);
    case Construction::Direct:
        break;
    }
    return build_Gplus(spec.d, spec.c);
}

LabeledGraph load_input(const std::string& input)
{
    if (auto spec = try_parse_family(input))
        return materialize(*spec);
    if (!std::filesystem::exists(input))
        throw UsageError("'" + input + "' is neither a family spec nor an existing file");
    return read_graph_file(input);
}

GraphFormat parse_format(std::string_view text)
{
    if (text == "graph6" || text == "g6")
        return GraphFormat::Graph6;
    if (text == "dot")
        return GraphFormat::Dot;
    if (text == "edgelist" || text == "csv")
        return GraphFormat::EdgeList;
    if (text == "json")
        return GraphFormat::Json;
    throw UsageError("unknown format '" + std::string(text) + "'");
}

nlohmann::json graph_to_json(const LabeledGraph& g)
{
    nlohmann::json j;
    j["n"] = str(g.order());
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        j["edges"].push_back({str(u + 1), str(v + 1)});
    if (g.fully_labeled()) {
        j["labels"] = nlohmann::json::array();
        for (Vertex v = 0; v < g.order(); ++v)
            j["labels"].push_back(g.label(v)->to_string());
    }
    return j;
}

void write_graph(const LabeledGraph& g, GraphFormat format, std::ostream& out)
{
    switch (format) {
    case GraphFormat::Graph6:
        out << to_graph6(g) << '\n';
        break;
    case GraphFormat::Dot:
        write_dot(g, out);
        break;
    case GraphFormat::EdgeList:
        write_edgelist(g, out);
        break;
    case GraphFormat::Json:
        out << graph_to_json(g).dump(2) << '\n';
        break;
    }
}

nlohmann::json spectrum_report(const LabeledGraph& g)
{
    auto result = integral_spectrum(laplacian(g));
    nlohmann::json j;
    j["n"] = str(g.order());
    j["edges"] = str(g.size());

    auto eigen_json = [](const std::vector<Eigenvalue>& values) {
        auto arr = nlohmann::json::array();
        for (const auto& e : values)
            arr.push_back({{"value", str(e.value)}, {"multiplicity", str(e.multiplicity)}});
        return arr;
    };
    auto poly_json = [](const std::vector<BigInt>& coeffs) {
        auto arr = nlohmann::json::array();
        for (const auto& c : coeffs)
            arr.push_back(str(c));
        return arr;
    };

    if (const auto* s = std::get_if<Spectrum>(&result)) {
        j["charpoly"] = poly_json(s->charpoly);
        j["eigenvalues"] = eigen_json(s->eigenvalues);
        j["integral"] = true;
        j["distinct"] = s->distinct();
        j["residual_degree"] = "0";
    } else {
        const auto& r = std::get<NonIntegralResidue>(result);
        j["charpoly"] = poly_json(r.charpoly);
        j["eigenvalues"] = eigen_json(r.integral_part);
        j["integral"] = false;
        j["distinct"] = false;
        j["residual_degree"] = str(r.residual_degree);
    }
    auto realized = realized_S(g);
    j["realizes_S"] = realized ? nlohmann::json(str(*realized)) : nlohmann::json(nullptr);
    return j;
}

std::string spectrum_text(const nlohmann::json& report)
{
    std::ostringstream out;
    out << "n = " << report["n"].get<std::string>() << ", edges = "
        << report["edges"].get<std::string>() << '\n';
    out << "eigenvalues:";
    for (const auto& e : report["eigenvalues"]) {
        out << ' ' << e["value"].get<std::string>();
        if (e["multiplicity"].get<std::string>() != "1")
            out << "^" << e["multiplicity"].get<std::string>();
    }
    out << '\n';
    out << "integral: " << (report["integral"].get<bool>() ? "yes" : "no");
    if (!report["integral"].get<bool>())
        out << " (non-integral factor of degree " << report["residual_degree"].get<std::string>()
            << ")";
    out << ", distinct: " << (report["distinct"].get<bool>() ? "yes" : "no") << '\n';
    if (report["realizes_S"].is_null())
        out << "realizes no S_{i,n}\n";
    else
        out << "realizes S_{" << report["realizes_S"].get<std::string>() << ","
            << report["n"].get<std::string>() << "}\n";
    out << "charpoly (ascending):";
    for (const auto& c : report["charpoly"])
        out << ' ' << c.get<std::string>();
    out << '\n';
    return out.str();
}

nlohmann::json dimension_report(const LabeledGraph& g, ResolvingKind kind,
                                const DimensionOptions& options)
{
    auto start = std::chrono::steady_clock::now();
    auto result = resolving_dimension(g, kind, options);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    nlohmann::json j;
    j["kind"] = std::string(to_string(kind));
    j["n"] = str(g.order());
    j["max_size"] = str(std::min(options.max_size, g.order()));
    j["elapsed"] = elapsed.count();
    if (!result) {
        j["exhausted"] = true;
        j["dimension"] = nullptr;
        j["witness"] = nlohmann::json::array();
        return j;
    }
    j["exhausted"] = false;
    j["dimension"] = str(result->size);
    j["witness"] = nlohmann::json::array();
    for (Vertex v : result->witness)
        j["witness"].push_back(str(v + 1));
    if (g.fully_labeled()) {
        j["witness_labels"] = nlohmann::json::array();
        for (Vertex v : result->witness)
            j["witness_labels"].push_back(g.label(v)->to_string());
    }
    return j;
}

std::string dimension_text(const nlohmann::json& report)
{
    std::ostringstream out;
    out << report["kind"].get<std::string>() << " dimension: ";
    if (report["exhausted"].get<bool>()) {
        out << "exhausted (no resolving set with at most " << report["max_size"].get<std::string>()
            << " vertices)\n";
        return out.str();
    }
    out << report["dimension"].get<std::string>() << "\nwitness:";
    const bool labeled = report.contains("witness_labels");
    for (std::size_t i = 0; i < report["witness"].size(); ++i) {
        out << ' ' << report["witness"][i].get<std::string>();
        if (labeled)
            out << '(' << report["witness_labels"][i].get<std::string>() << ')';
    }
    out << "\nelapsed: " << report["elapsed"].get<double>() << " s\n";
    return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Construct G(d,c) and G+(d,c) and check their metric and Laplacian properties"};
    app.require_subcommand(1);

    std::string family_text;
    std::string format_text = "edgelist";
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Write a family member as graph6, DOT, edge list or JSON");
    gen->add_option("family", family_text, "g:d,c or gplus:d,c[:direct|iterative|indexed]")
        ->required();
    gen->add_option("--format", format_text, "graph6 | dot | edgelist | json");
    gen->add_option("--out", out_path, "Output file (default: stdout)");

    std::string input;
    bool json = false;
    auto* spectrum = app.add_subcommand("spectrum", "Exact Laplacian spectrum report");
    spectrum->add_option("input", input, "Family spec or graph file")->required();
    spectrum->add_flag("--json", json, "Machine-readable output");

    std::size_t max_size = 0;
    bool max_size_given = false;
    std::string kind_text = "outer";
    bool ignore_cap = false;
    auto* dimension = app.add_subcommand("dimension", "Brute-force resolving-set dimension");
    dimension->add_option("input", input, "Family spec or graph file")->required();
    dimension->add_option("--max-size", max_size, "Largest subset size to try (default: n)");
    dimension->add_option("--kind", kind_text, "outer | multiset | vector");
    dimension->add_flag("--ignore-cap", ignore_cap, "Allow graphs with more than 24 vertices");
    dimension->add_flag("--json", json, "Machine-readable output");

    VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "Run the full invariant battery");
    verify->add_option("--cmax", verify_options.cmax, "Largest c")->check(CLI::PositiveNumber);
    verify->add_option("--dmax", verify_options.dmax, "Largest d")->check(CLI::PositiveNumber);
    verify->add_flag("--json", json, "Machine-readable output");

    std::optional<unsigned> seed;
    for (auto* sub : {gen, spectrum, dimension, verify})
        sub->add_option("--seed", seed, "Reserved");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }
    max_size_given = dimension->count("--max-size") > 0;

    try {
        if (*gen) {
            auto g = materialize(parse_family(family_text));
            auto format = parse_format(format_text);
            if (out_path.empty()) {
                write_graph(g, format, out);
            } else {
                std::ofstream file(out_path);
                if (!file)
                    throw std::runtime_error("cannot write " + out_path);
                write_graph(g, format, file);
            }
            return 0;
        }
        if (*spectrum) {
            auto report = spectrum_report(load_input(input));
            out << (json ? report.dump(2) + "\n" : spectrum_text(report));
            return 0;
        }
        if (*dimension) {
            ResolvingKind kind;
            if (kind_text == "outer")
                kind = ResolvingKind::OuterMultiset;
            else if (kind_text == "multiset")
                kind = ResolvingKind::Multiset;
            else if (kind_text == "vector")
                kind = ResolvingKind::Vector;
            else
                throw UsageError("unknown kind '" + kind_text + "'");
            auto g = load_input(input);
            DimensionOptions options;
            options.max_size = max_size_given ? max_size : g.order();
            options.ignore_cap = ignore_cap;
            auto report = dimension_report(g, kind, options);
            out << (json ? report.dump(2) + "\n" : dimension_text(report));
            return 0;
        }
        if (*verify) {
            auto report = run_verify(verify_options);
            out << (json ? report.to_json().dump(2) + "\n" : report.to_text());
            return report.passed() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const OrderCapExceeded& e) {
        err << e.what() << " (pass --ignore-cap to override)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace gplus::cli
