#include <cstddef>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subshift/complexity.hpp"
#include "subshift/factors.hpp"
#include "subshift/presentation.hpp"
#include "subshift/rauzy.hpp"
#include "subshift/substitution.hpp"
#include "subshift/word.hpp"

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitIo = 4;

int write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    out << text;
    out.flush();
    if (!out.good()) {
        std::cerr << "error: failed while writing '" << path << "'\n";
        return kExitIo;
    }
    return 0;
}

struct EtaOptions {
    std::size_t length = 0;
    std::string out_path;
};

int run_eta(const EtaOptions& opt) {
    const subshift::Word prefix = subshift::eta_prefix(opt.length);
    if (opt.out_path.empty()) {
        std::cout << prefix << '\n';
        return 0;
    }
    return write_text_file(opt.out_path, prefix + '\n');
}

struct ComplexityOptions {
    std::size_t max_length = 0;
    bool check = false;
    std::string format = "table";
    std::string out_path;
};

subshift::TableFormat parse_format(const std::string& name) {
    if (name == "csv") return subshift::TableFormat::Csv;
    if (name == "tsv") return subshift::TableFormat::Tsv;
    return subshift::TableFormat::Table;
}

int run_complexity(const ComplexityOptions& opt) {
    const subshift::TableFormat format = parse_format(opt.format);
    std::ostringstream buffer;
    int code = 0;
    if (opt.check) {
        const subshift::ProfileVerification both = subshift::profile_and_verify(opt.max_length);
        subshift::write_profile(both.profile, buffer, format);
        if (!both.verification.pass) buffer << both.verification.failure_detail() << '\n';
        buffer << both.verification.summary_line() << '\n';
        code = both.verification.pass ? 0 : kExitVerifyFail;
    } else {
        subshift::write_profile(subshift::profile_range(opt.max_length), buffer, format);
    }
    if (opt.out_path.empty()) {
        std::cout << buffer.str();
        return code;
    }
    const int io = write_text_file(opt.out_path, buffer.str());
    return io != 0 ? io : code;
}

struct SpecialOptions {
    std::size_t length = 0;
    std::string side = "right";
};

int run_special(const SpecialOptions& opt) {
    std::string text;
    if (opt.side == "left") {
        for (const subshift::ExtensionRecord& rec : subshift::left_special_oracle(opt.length)) {
            text += rec.word + '\t' + rec.left + '\n';
        }
    } else if (opt.side == "bi") {
        for (const subshift::ExtensionRecord& rec : subshift::right_special_oracle(opt.length)) {
            if (rec.left.size() >= 2) text += rec.word + '\t' + rec.right + '\t' + rec.left + '\n';
        }
    } else {
        for (const subshift::ExtensionRecord& rec : subshift::right_special_oracle(opt.length)) {
            text += rec.word + '\t' + rec.right + '\n';
        }
    }
    std::cout << text;
    return 0;
}

struct RauzyOptions {
    std::size_t order = 0;
    std::string dot_path;
    bool stats = false;
};

int run_rauzy(const RauzyOptions& opt) {
    const subshift::RauzyGraph graph = subshift::build_rauzy(opt.order);
    if (!opt.dot_path.empty()) {
        const int io = write_text_file(opt.dot_path, subshift::to_dot(graph));
        if (io != 0) return io;
    }
    std::cout << subshift::rauzy_stats(graph) << '\n';
    if (opt.stats) std::cout << subshift::loop_summary(graph);
    return 0;
}

struct RelatorOptions {
    std::string family = "all";
    int max_k = 0;
    bool annotate = false;
};

int run_relators(const RelatorOptions& opt) {
    std::string text;
    const auto emit = [&](const std::string& origin, const subshift::Word& relator) {
        if (opt.annotate) text += origin;
        text += relator;
        text += '\n';
    };
    if (opt.family == "all") {
        for (const subshift::Word& r : subshift::static_relators()) emit("static:", r);
        for (int k = 0; k <= opt.max_k; ++k) {
            emit("ad4:" + std::to_string(k) + ':', subshift::relator(subshift::RelatorFamily::Ad4, k));
            emit("adacac4:" + std::to_string(k) + ':',
                 subshift::relator(subshift::RelatorFamily::Adacac4, k));
        }
    } else {
        const subshift::RelatorFamily family = opt.family == "ad4"
                                                   ? subshift::RelatorFamily::Ad4
                                                   : subshift::RelatorFamily::Adacac4;
        for (int k = 0; k <= opt.max_k; ++k) {
            emit(opt.family + ':' + std::to_string(k) + ':', subshift::relator(family, k));
        }
    }
    std::cout << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analysis toolkit for a substitution subshift over {a,x,y,z}"};
    app.require_subcommand(1);

    std::size_t capacity_cap = subshift::capacity_limit();
    app.add_option("--capacity-cap", capacity_cap,
                   "Global cap on generated word length, in letters (min 1024)")
        ->check(CLI::Range(std::size_t{1024}, std::numeric_limits<std::size_t>::max()));

    const auto positive_length =
        CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max());

    EtaOptions eta;
    CLI::App* eta_cmd = app.add_subcommand("eta", "Print a prefix of the fixed point");
    eta_cmd->add_option("--length", eta.length, "Prefix length")
        ->required()
        ->check(positive_length);
    eta_cmd->add_option("--out", eta.out_path, "Write to this file instead of stdout");

    ComplexityOptions complexity;
    CLI::App* complexity_cmd =
        app.add_subcommand("complexity", "Tabulate the complexity function C(L)");
    complexity_cmd->add_option("--max-length", complexity.max_length, "Largest length L")
        ->required()
        ->check(positive_length);
    complexity_cmd->add_flag("--check", complexity.check,
                             "Cross-check the closed forms against the brute-force oracle");
    complexity_cmd->add_option("--format", complexity.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "tsv"}));
    complexity_cmd->add_option("--out", complexity.out_path,
                               "Write the table to this file instead of stdout");

    SpecialOptions special;
    CLI::App* special_cmd = app.add_subcommand("special", "List special words of one length");
    special_cmd->add_option("--length", special.length, "Word length")
        ->required()
        ->check(positive_length);
    special_cmd->add_option("--side", special.side, "Which special words to list")
        ->check(CLI::IsMember({"right", "left", "bi"}));

    RauzyOptions rauzy;
    CLI::App* rauzy_cmd = app.add_subcommand("rauzy", "Build the order-n Rauzy graph");
    rauzy_cmd->add_option("--order", rauzy.order, "Graph order n")
        ->required()
        ->check(positive_length);
    rauzy_cmd->add_option("--dot", rauzy.dot_path, "Write the graph in DOT format to this file");
    rauzy_cmd->add_flag("--stats", rauzy.stats, "Also print the loop-structure summary");

    RelatorOptions relators;
    CLI::App* relators_cmd = app.add_subcommand("relators", "Emit presentation relators");
    relators_cmd->add_option("--family", relators.family, "Relator family")
        ->check(CLI::IsMember({"ad4", "adacac4", "all"}));
    relators_cmd->add_option("--max-k", relators.max_k, "Largest iteration level k")
        ->check(CLI::Range(0, std::numeric_limits<int>::max()));
    relators_cmd->add_flag("--annotate", relators.annotate,
                           "Prefix each line with its origin (static: or family:k:)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    subshift::set_capacity_limit(capacity_cap);

    try {
        if (eta_cmd->parsed()) return run_eta(eta);
        if (complexity_cmd->parsed()) return run_complexity(complexity);
        if (special_cmd->parsed()) return run_special(special);
        if (rauzy_cmd->parsed()) return run_rauzy(rauzy);
        if (relators_cmd->parsed()) return run_relators(relators);
    } catch (const subshift::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
