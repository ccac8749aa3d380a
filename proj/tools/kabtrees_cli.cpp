// kabtrees: spanning-tree census of complete bipartite graphs.
//
// Exit codes: 0 success, 1 verification or invariant failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kabtrees/census.hpp"
#include "kabtrees/codec.hpp"
#include "kabtrees/construct.hpp"
#include "kabtrees/partitions.hpp"
#include "kabtrees/verify.hpp"

namespace {

using namespace kabtrees;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + text + "'");
        }
        if (used != item.size()) throw UsageError("not an integer list: '" + text + "'");
        out.push_back(value);
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

std::string render(const BipartiteTree& tree, const std::string& format) {
    return format == "json" ? to_json(tree) + "\n" : to_dot(tree);
}

int cmd_partitions(int m, int k, bool list) {
    std::cout << count_partitions(m, k) << '\n';
    if (list) for_each_partition(m, k, [](const DegreePartition& p) { std::cout << p.to_string() << '\n'; });
    return kOk;
}

int cmd_construct(const std::string& s, const std::string& t, const std::string& format) {
    std::cout << render(construct_tree(parse_parts(s), parse_parts(t)), format);
    return kOk;
}

int cmd_census(int max_n, std::uint64_t budget, const std::string& format, int jobs, const std::string& output) {
    const auto rows = census_table(max_n, budget, jobs);
    const std::string text = format == "json" ? census_json(rows) : census_csv(rows);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw UsageError("cannot write " + output);
        file << text;
    }
    for (const auto& row : rows) {
        if (!row.sandwich_holds()) {
            std::cerr << "bound sandwich violated: " << census_csv_row(row) << '\n';
            return kFailed;
        }
    }
    return kOk;
}

int cmd_verify(int max_n) {
    bool all = true;
    run_verification(max_n, [&](const FamilyResult& r) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.family << ": " << r.detail << std::endl;
        all = all && r.passed;
    });
    return all ? kOk : kFailed;
}

int cmd_sample(int a, int b, std::uint64_t seed, int count, const std::string& format) {
    TreeSampler sampler(a, b, seed);
    for (int i = 0; i < count; ++i) std::cout << render(sampler.next(), format);
    return kOk;
}

int cmd_decode(int a, int b, const std::string& code, const std::string& format) {
    std::cout << render(decode(BipartiteCode::parse(a, b, code)), format);
    return kOk;
}

int cmd_classes(int a, int b, std::uint64_t budget, int jobs) {
    const auto result = exact_classes(a, b, budget, jobs);
    std::cout << result.count << '\n';
    for (const auto& tree : result.representatives) {
        const auto [s, t] = degrees(tree);
        std::cout << canonical_form(tree).to_hex() << ' ' << s.to_string(',') << ' ' << t.to_string(',');
        if (tree.vertex_count() >= 3) std::cout << ' ' << encode(tree).to_string();
        std::cout << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact census of spanning-tree isomorphism classes of K_{a,b}"};
    app.require_subcommand(1);
    const auto formats_tree = CLI::IsMember({"dot", "json"});

    int m = 0, k = 0;
    bool list = false;
    auto* partitions = app.add_subcommand("partitions", "Count (and list) partitions of m into k parts");
    partitions->add_option("m", m)->required()->check(CLI::PositiveNumber);
    partitions->add_option("k", k)->required()->check(CLI::PositiveNumber);
    partitions->add_flag("--list", list, "Print each partition, largest first");

    std::string s_text, t_text, format = "dot";
    auto* construct = app.add_subcommand("construct", "Realize degree partitions s (A side) and t (B side)");
    construct->add_option("s", s_text, "A-side degrees, e.g. 2,1")->required();
    construct->add_option("t", t_text, "B-side degrees, e.g. 2,1")->required();
    construct->add_option("--format", format)->check(formats_tree);

    int max_n = 0, jobs = 1;
    std::uint64_t budget = kDefaultCodeBudget;
    std::string table_format = "csv", output;
    auto* census = app.add_subcommand("census", "Bounds and exact class counts for all a+b <= N");
    census->add_option("--max-n", max_n)->required()->check(CLI::Range(4, 1000));
    census->add_option("--budget", budget, "Largest code space enumerated exactly");
    census->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    census->add_option("--jobs", jobs, "Worker threads per cell")->check(CLI::Range(1, 1024));
    census->add_option("--output", output, "Write the table here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run every property family up to a+b <= N");
    verify->add_option("--max-n", max_n)->required()->check(CLI::Range(4, 1000));

    int a = 0, b = 0, count = 1;
    std::uint64_t seed = 0;
    auto* sample = app.add_subcommand("sample", "Uniformly sample labeled spanning trees of K_{a,b}");
    sample->add_option("a", a)->required()->check(CLI::PositiveNumber);
    sample->add_option("b", b)->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed);
    sample->add_option("--count", count)->check(CLI::NonNegativeNumber);
    sample->add_option("--format", format)->check(formats_tree);

    std::string code;
    auto* decode_cmd = app.add_subcommand("decode", "Decode a code a_seq|b_seq into its tree");
    decode_cmd->add_option("a", a)->required()->check(CLI::PositiveNumber);
    decode_cmd->add_option("b", b)->required()->check(CLI::PositiveNumber);
    decode_cmd->add_option("code", code, "e.g. 0,1|2")->required();
    decode_cmd->add_option("--format", format)->check(formats_tree);

    auto* classes = app.add_subcommand("classes", "I_{a,b} with one representative per class");
    classes->add_option("a", a)->required()->check(CLI::PositiveNumber);
    classes->add_option("b", b)->required()->check(CLI::PositiveNumber);
    classes->add_option("--budget", budget);
    classes->add_option("--jobs", jobs)->check(CLI::Range(1, 1024));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*partitions) return cmd_partitions(m, k, list);
        if (*construct) return cmd_construct(s_text, t_text, format);
        if (*census) return cmd_census(max_n, budget, table_format, jobs, output);
        if (*verify) return cmd_verify(max_n);
        if (*sample) return cmd_sample(a, b, seed, count, format);
        if (*decode_cmd) return cmd_decode(a, b, code, format);
        if (*classes) return cmd_classes(a, b, budget, jobs);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
