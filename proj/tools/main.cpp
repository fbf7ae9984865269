#include "poim/poim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitIoError = 2;
constexpr int kExitUnboundColumn = 3;
constexpr int kExitMatchCount = 4;

struct IoError {
    std::string message;
};

struct ParseFailure {
    std::string message;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError{"cannot open '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError{"cannot read '" + path + "'"};
    return buffer.str();
}

poim::FreshNames makeGenerator() {
    const char* prefix = std::getenv("POIM_BLANK_PREFIX");
    return prefix != nullptr && *prefix != '\0' ? poim::FreshNames(prefix) : poim::FreshNames();
}

poim::DataGraph parseDataFile(const std::string& path) {
    std::string text = readFile(path);
    try {
        return poim::parseData(text).graph;
    } catch (const poim::SyntaxError& e) {
        throw ParseFailure{path + ":" + e.what()};
    }
}

// Each file is its own blank scope; multiple files are merged as a coproduct
// fixing identifiers, so equal blank labels in different files stay distinct.
poim::DataGraph loadData(const std::vector<std::string>& paths, poim::FreshNames& gen) {
    std::vector<poim::Graph> parts;
    parts.reserve(paths.size());
    for (const std::string& path : paths) parts.push_back(parseDataFile(path));
    if (parts.size() == 1) return parts.front();
    return poim::coproduct(parts, poim::FixedSet::identifiers(), gen).object;
}

poim::QueryDocument loadQuery(const std::string& path, poim::FreshNames& gen) {
    std::string text = readFile(path);
    try {
        return poim::parseQuery(text, gen);
    } catch (const poim::SyntaxError& e) {
        throw ParseFailure{path + ":" + e.what()};
    }
}

std::string renderAssignment(const poim::Morphism& m) {
    nlohmann::ordered_json record;
    for (const auto& [attr, value] : m.map) {
        if (attr.isIdentifier()) continue;
        record[poim::renderTerm(attr)] = poim::renderTerm(value);
    }
    return record.dump();
}

void writeSection(std::ostream& out, const std::string& name, const poim::Graph& g) {
    out << name << ":\n";
    if (g.empty()) {
        out << "  (empty)\n";
        return;
    }
    std::istringstream lines(poim::writeTriples(g));
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
}

void writeMorphismTable(std::ostream& out, const std::string& name, const poim::Morphism& m) {
    out << name << ":\n";
    bool any = false;
    for (const auto& [attr, value] : m.map) {
        if (attr.isIdentifier()) continue;
        out << "  " << poim::renderTerm(attr) << " -> " << poim::renderTerm(value) << "\n";
        any = true;
    }
    if (!any) out << "  (identity on identifiers)\n";
}

struct Options {
    std::vector<std::string> dataPaths;
    std::string queryPath;
    std::string mode = "direct";
    std::string fix = "I";
    bool strictRdf = false;
    std::string isoLeft;
    std::string isoRight;
};

int runConstruct(const Options& opt) {
    poim::FreshNames gen = makeGenerator();
    poim::DataGraph data = loadData(opt.dataPaths, gen);
    poim::QueryDocument query = loadQuery(opt.queryPath, gen);
    if (!query.isConstruct()) throw ParseFailure{opt.queryPath + ": expected a CONSTRUCT query"};

    poim::DataGraph result;
    if (opt.mode == "direct")
        result = poim::evalConstructDirect(query.construct(), data, gen);
    else if (opt.mode == "high")
        result = poim::evalConstructHigh(query.construct(), data, gen);
    else
        result = poim::evalConstructLow(query.construct(), data, gen);
    if (opt.strictRdf) result = poim::filterWellFormed(result);

    std::cout << poim::serializeGraph(result);
    return kExitOk;
}

int runSelect(const Options& opt) {
    poim::FreshNames gen = makeGenerator();
    poim::DataGraph data = loadData(opt.dataPaths, gen);
    poim::QueryDocument query = loadQuery(opt.queryPath, gen);
    if (!query.isSelect()) throw ParseFailure{opt.queryPath + ": expected a SELECT query"};

    poim::Multirelation result = poim::evalSelect(query.select(), data, gen);
    std::cout << poim::serializeMultirelation(result);
    return kExitOk;
}

int runMatches(const Options& opt) {
    poim::FreshNames gen = makeGenerator();
    poim::DataGraph data = loadData(opt.dataPaths, gen);
    poim::QueryDocument query = loadQuery(opt.queryPath, gen);

    std::string out;
    for (const poim::Morphism& match : poim::enumerateMatches(query.pattern(), data))
        out += renderAssignment(match) + "\n";
    std::cout << out;
    return kExitOk;
}

int runIso(const Options& opt) {
    poim::DataGraph left = parseDataFile(opt.isoLeft);
    poim::DataGraph right = parseDataFile(opt.isoRight);
    poim::FixedSet fixed = opt.fix == "IB" ? poim::FixedSet::identifiersAndBlanks()
                                           : poim::FixedSet::identifiers();

    std::optional<poim::Morphism> witness = poim::isoCheck(left, right, fixed);
    if (!witness) {
        std::cerr << "not isomorphic\n";
        return 1;
    }
    std::string out;
    for (const auto& [attr, value] : witness->map) {
        if (poim::FixedSet::identifiersAndBlanks().contains(attr) && opt.fix == "IB") continue;
        if (attr.isIdentifier()) continue;
        out += poim::renderTerm(attr) + " -> " + poim::renderTerm(value) + "\n";
    }
    std::cout << out;
    return kExitOk;
}

int runPoimTrace(const Options& opt) {
    poim::FreshNames gen = makeGenerator();
    poim::DataGraph data = loadData(opt.dataPaths, gen);
    poim::QueryDocument query = loadQuery(opt.queryPath, gen);
    if (!query.isConstruct()) throw ParseFailure{opt.queryPath + ": expected a CONSTRUCT query"};
    const poim::ConstructQuery& cq = query.construct();

    std::vector<poim::Morphism> matches = poim::enumerateMatches(cq.lhs, data);
    if (matches.size() != 1) {
        std::cerr << "expected exactly one match, found " << matches.size() << "\n";
        return kExitMatchCount;
    }

    poim::PoimTrace trace = poim::poim(cq.rule, matches.front(), gen);
    std::ostringstream out;
    writeSection(out, "L", cq.rule.left);
    writeSection(out, "K", cq.rule.middle);
    writeSection(out, "R", cq.rule.right);
    writeSection(out, "G", data);
    writeSection(out, "D", trace.pushoutGraph);
    writeSection(out, "H", trace.resultGraph);
    writeMorphismTable(out, "m : L -> G", trace.inputMatch);
    writeMorphismTable(out, "n : K -> D", trace.pushoutMatch);
    writeMorphismTable(out, "p : R -> H", trace.resultMatch);
    out << "g : G -> D: inclusion\n";
    out << "h : H -> D: inclusion\n";
    std::cout << out.str();
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-transformation evaluator for basic CONSTRUCT and SELECT queries"};
    app.require_subcommand(1);

    Options opt;

    auto addDataQuery = [&opt](CLI::App* cmd) {
        cmd->add_option("--data", opt.dataPaths, "Data graph file(s) (.ttl)")->required();
        cmd->add_option("--query", opt.queryPath, "Query file (.rq)")->required();
    };

    CLI::App* construct = app.add_subcommand("construct", "Evaluate a CONSTRUCT query");
    addDataQuery(construct);
    construct->add_option("--mode", opt.mode, "Evaluation procedure")
        ->check(CLI::IsMember({"direct", "high", "low"}));
    construct->add_flag("--strict-rdf", opt.strictRdf, "Keep only well-formed RDF triples");

    CLI::App* select = app.add_subcommand("select", "Evaluate a SELECT query");
    addDataQuery(select);

    CLI::App* matches = app.add_subcommand("matches", "List the matches of a query pattern");
    addDataQuery(matches);

    CLI::App* iso = app.add_subcommand("iso", "Check two data graphs for isomorphism");
    iso->add_option("left", opt.isoLeft, "First data file")->required();
    iso->add_option("right", opt.isoRight, "Second data file")->required();
    iso->add_option("--fix", opt.fix, "Fixed set: I (rename blanks) or IB (blanks rigid)")
        ->check(CLI::IsMember({"I", "IB"}));

    CLI::App* trace = app.add_subcommand("poim-trace", "Print the full transformation trace");
    addDataQuery(trace);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return runConstruct(opt);
        if (select->parsed()) return runSelect(opt);
        if (matches->parsed()) return runMatches(opt);
        if (iso->parsed()) return runIso(opt);
        if (trace->parsed()) return runPoimTrace(opt);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitIoError;
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitParseError;
    } catch (const poim::UnboundColumnError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnboundColumn;
    } catch (const poim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return kExitOk;
}
