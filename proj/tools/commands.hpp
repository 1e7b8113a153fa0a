#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gplus/graph.hpp"
#include "gplus/metric.hpp"

namespace gplus::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Family { G, Gplus };
enum class Construction { Direct, Iterative, Indexed };

// `g:d,c` or `gplus:d,c[:direct|iterative|indexed]`.
struct FamilySpec {
    Family family = Family::G;
    unsigned d = 1;
    unsigned c = 1;
    Construction construction = Construction::Direct;

    std::string to_string() const;
};

FamilySpec parse_family(std::string_view text);
std::optional<FamilySpec> try_parse_family(std::string_view text);

// Graph in output order: G lexicographic; G+ combinations then w_1..w_c.
LabeledGraph materialize(const FamilySpec& spec);

// A family spec, or a path to a graph6 / edge-list file.
LabeledGraph load_input(const std::string& input);

enum class GraphFormat { Graph6, Dot, EdgeList, Json };

GraphFormat parse_format(std::string_view text);

nlohmann::json graph_to_json(const LabeledGraph& g);
void write_graph(const LabeledGraph& g, GraphFormat format, std::ostream& out);

nlohmann::json spectrum_report(const LabeledGraph& g);
std::string spectrum_text(const nlohmann::json& report);

nlohmann::json dimension_report(const LabeledGraph& g, ResolvingKind kind,
                                const DimensionOptions& options);
std::string dimension_text(const nlohmann::json& report);

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string details;
    double elapsed_seconds = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(std::string_view name) const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    unsigned cmax = 8;
    unsigned dmax = 4;
};

VerifyReport run_verify(const VerifyOptions& options);

// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gplus::cli
