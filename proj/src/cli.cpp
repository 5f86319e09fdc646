#include "ccshell/cli.hpp"

#include "ccshell/error.hpp"
#include "ccshell/fixtures.hpp"
#include "ccshell/oracle.hpp"
#include "ccshell/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace ccs {

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct Outcome {
    int code = kHolds;
    Json json = Json::object();
    std::vector<std::string> lines;
};

struct Settings {
    std::string ring;
    std::uint64_t budget = 0;
    std::string format = "text";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string order;
    std::string cert;
    std::string file;
    unsigned degree = 0;
    std::string facets;
    std::size_t count = 200;

    SearchOptions search() const
    {
        SearchOptions o;
        if (budget > 0)
            o.budget = budget;
        o.threads = std::max(1u, threads);
        return o;
    }
};

ChainComplex load(const Settings& s)
{
    auto doc = parse_document(read_source(s.file));
    return to_complex(doc, s.ring.empty() ? std::nullopt : std::optional<std::string>(s.ring));
}

Json read_json(const std::string& path)
{
    std::string text = read_source(path);
    try {
        Json j = Json::parse(text);
        if (j.is_object() && j.contains("certificate"))
            return j.at("certificate");
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "'" + path + "': " + e.what());
    }
}

std::string names(const ChainComplex& c, const std::vector<Cell>& cells)
{
    std::string out;
    for (Cell e : cells)
        out += (out.empty() ? "" : ", ") + c.name(e);
    return out;
}

// "natural" or a comma-separated list of labels, matched from the top degree
// down.
std::vector<Cell> parse_order(const ChainComplex& c, const std::string& text)
{
    if (text == "natural")
        return maximal_elements(c);
    std::vector<Cell> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        std::optional<Cell> found;
        for (unsigned v = c.order() + 1; v-- > 0 && !found;) {
            found = c.find(v, item);
            if (!found)
                for (Cell e : c.cells(v))
                    if (c.name(e) == item)
                        found = e;
        }
        if (!found)
            throw Error(ErrorKind::InvalidInput, "unknown element '" + item + "' in --order");
        out.push_back(*found);
    }
    return out;
}

Outcome budget_exceeded(const std::string& what)
{
    Outcome o;
    o.code = kError;
    o.json["status"] = "budget-exceeded";
    o.lines.push_back(what + ": search budget exhausted, no conclusion");
    return o;
}

Outcome cmd_validate(const Settings& s)
{
    ChainComplex c = load(s);
    Outcome o;
    o.json["status"] = "valid";
    o.json["ring"] = c.ring().name();
    o.json["order"] = c.order();
    Json ranks = Json::array();
    std::string text;
    for (unsigned v = 0; v <= c.order(); ++v) {
        ranks.push_back(c.rank(v));
        text += (v ? ", " : "") + std::string("k_") + std::to_string(v) + " = " + std::to_string(c.rank(v));
    }
    o.json["ranks"] = ranks;
    o.json["pure"] = is_pure(c);
    o.lines.push_back("valid complex of order " + std::to_string(c.order()) + " over " + c.ring().name());
    o.lines.push_back(text);
    o.lines.push_back(std::string("pure: ") + (is_pure(c) ? "yes" : "no"));
    return o;
}

Outcome cmd_homology(const Settings& s)
{
    ChainComplex c = load(s);
    auto h = homology(c);
    Outcome o;
    o.json["homology"] = homology_to_json(c, h);
    o.json["acyclic"] = is_acyclic(h);
    for (std::size_t v = h.size(); v-- > 0;)
        o.lines.push_back("H_" + std::to_string(v) + " = " + to_string(h[v], c.ring()));
    o.lines.push_back(std::string("acyclic: ") + (is_acyclic(h) ? "yes" : "no"));
    return o;
}

Outcome cmd_classify(const Settings& s)
{
    ChainComplex c = load(s);
    Outcome o;
    Json degrees = Json::array();
    for (unsigned v = 0; v <= c.order(); ++v) {
        DegreeOrdering ordering = conventional_ordering(c, v);
        Json items = Json::array();
        std::string text;
        for (const auto& cls : classify_degree(c, ordering)) {
            Json x = Json::object();
            x["element"] = cell_to_json(c, cls.element);
            x["tag"] = to_string(cls.tag);
            items.push_back(x);
            text += (text.empty() ? "" : ", ") + c.name(cls.element) + " " + to_string(cls.tag);
        }
        Json d = Json::object();
        d["degree"] = v;
        d["ordering"] = cells_to_json(c, ordering.permutation);
        d["maximal"] = items;
        degrees.push_back(d);
        o.lines.push_back("degree " + std::to_string(v) + ": " + (text.empty() ? "no maximal elements" : text));
    }
    o.json["classification"] = degrees;
    return o;
}

Outcome shelling_violation(const ChainComplex& c, const ShellingViolation& v)
{
    Outcome o;
    o.code = kFails;
    o.json["status"] = "fails";
    o.json["violation"] = shelling_violation_to_json(c, v);
    o.lines.push_back(std::string("not a shelling: ") + to_string(v.kind) + " at position " +
                      std::to_string(v.position + 1) + " of node " + std::to_string(v.node) +
                      (v.detail.empty() ? "" : " (" + v.detail + ")"));
    return o;
}

Outcome shelling_holds(const ChainComplex& c, const ShellingCertificate& cert)
{
    Outcome o;
    o.json["status"] = "holds";
    o.json["certificate"] = shelling_to_json(c, cert);
    o.lines.push_back("shellable; order of Gamma: " + names(c, cert.gamma_order()));
    return o;
}

Outcome cmd_shelling_verify(const Settings& s)
{
    ChainComplex c = load(s);
    if (!s.cert.empty()) {
        ShellingCertificate cert = shelling_from_json(c, read_json(s.cert));
        if (auto v = verify_shelling(c, cert))
            return shelling_violation(c, *v);
        return shelling_holds(c, cert);
    }
    auto r = certify_shelling_order(c, parse_order(c, s.order.empty() ? "natural" : s.order), s.search());
    if (r.violation)
        return shelling_violation(c, *r.violation);
    return shelling_holds(c, *r.certificate);
}

Outcome cmd_shelling_search(const Settings& s)
{
    ChainComplex c = load(s);
    auto cert = search_shelling(c, s.search());
    if (cert)
        return shelling_holds(c, *cert);
    Outcome o;
    o.code = kFails;
    o.json["status"] = "fails";
    o.lines.push_back("not shellable: no shelling exists");
    return o;
}

Outcome cmd_shelling_monotonize(const Settings& s)
{
    ChainComplex c = load(s);
    std::optional<ShellingCertificate> start;
    if (!s.cert.empty()) {
        start = shelling_from_json(c, read_json(s.cert));
    } else {
        auto r = certify_shelling_order(c, parse_order(c, s.order.empty() ? "natural" : s.order), s.search());
        if (r.violation)
            return shelling_violation(c, *r.violation);
        start = r.certificate;
    }
    if (auto v = verify_shelling(c, *start))
        return shelling_violation(c, *v);
    auto steps = monotonize_steps(c, *start, s.search());
    Outcome o;
    o.json["status"] = "holds";
    Json counts = Json::array();
    for (std::size_t k = 0; k < steps.size(); ++k) {
        counts.push_back(failures(steps[k]).size());
        o.lines.push_back("step " + std::to_string(k) + ": " + names(c, steps[k].gamma_order()) + " (" +
                          std::to_string(failures(steps[k]).size()) + " failures)");
    }
    o.json["failures"] = counts;
    o.json["certificate"] = shelling_to_json(c, steps.back());
    return o;
}

Outcome regular_violation(const ChainComplex& c, const RegularViolation& v)
{
    Outcome o;
    o.code = kFails;
    o.json["status"] = "fails";
    o.json["violation"] = regular_violation_to_json(c, v);
    o.lines.push_back(std::string("not regular: ") + to_string(v.condition) + " violation" +
                      (v.element ? " at " + c.name(*v.element) : "") + (v.detail.empty() ? "" : " (" + v.detail + ")"));
    return o;
}

Outcome regular_holds(const ChainComplex& c, const RegularCertificate& cert)
{
    Outcome o;
    o.json["status"] = "holds";
    o.json["certificate"] = regular_to_json(c, cert);
    o.lines.push_back("regular; order of Gamma: " + names(c, cert.shelling.gamma_order()));
    return o;
}

Outcome cmd_regular_verify(const Settings& s)
{
    ChainComplex c = load(s);
    if (!s.cert.empty()) {
        RegularCertificate cert = regular_from_json(c, read_json(s.cert));
        if (auto v = verify_regular(c, cert))
            return regular_violation(c, *v);
        return regular_holds(c, cert);
    }
    auto r = certify_regular_order(c, parse_order(c, s.order.empty() ? "natural" : s.order), s.search());
    if (r.violation)
        return regular_violation(c, *r.violation);
    return regular_holds(c, *r.certificate);
}

Outcome cmd_regular_search(const Settings& s)
{
    ChainComplex c = load(s);
    if (auto cert = search_regular(c, s.search()))
        return regular_holds(c, *cert);
    Outcome o;
    o.code = kFails;
    o.json["status"] = "fails";
    o.lines.push_back("not regular: no regular order of Gamma exists");
    return o;
}

Outcome cmd_totally_regular(const Settings& s)
{
    ChainComplex c = load(s);
    Outcome o;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Cell e = c.cell(i);
        if (!is_acyclic(subcomplex(c, generated_subcomplex(c, e)))) {
            o.code = kFails;
            o.json["status"] = "fails";
            o.json["element"] = cell_to_json(c, e);
            o.lines.push_back("not totally regular: C_" + c.name(e) + " is not acyclic");
            return o;
        }
    }
    std::optional<RegularCertificate> cert;
    if (!s.cert.empty()) {
        cert = regular_from_json(c, read_json(s.cert));
        if (auto v = verify_regular(c, *cert))
            return regular_violation(c, *v);
    } else {
        cert = search_regular(c, s.search());
    }
    if (!cert) {
        o.code = kFails;
        o.json["status"] = "fails";
        o.lines.push_back("not totally regular: no regular order of Gamma exists");
        return o;
    }
    o = regular_holds(c, *cert);
    Json counts = Json::array();
    std::string text;
    for (auto n : precritical_counts(c, *cert)) {
        counts.push_back(n);
        text += (text.empty() ? "" : ", ") + std::to_string(n);
    }
    o.json["precritical_counts"] = counts;
    o.lines = {"totally regular; order of Gamma: " + names(c, cert->shelling.gamma_order()),
               "precritical counts by degree: " + text};
    return o;
}

Outcome cone_holds(const ChainComplex& c, const ConeAssignment& a)
{
    Outcome o;
    o.json["status"] = "holds";
    o.json["certificate"] = cone_to_json(c, a);
    o.lines.push_back("cone");
    for (std::size_t v = a.sets.size(); v-- > 0;)
        o.lines.push_back("S_" + std::to_string(v) + " = {" + names(c, a.sets[v]) + "}");
    return o;
}

Outcome cmd_cone_verify(const Settings& s)
{
    ChainComplex c = load(s);
    if (s.cert.empty())
        throw Error(ErrorKind::InvalidInput, "cone verify needs --cert");
    ConeAssignment a = cone_from_json(c, read_json(s.cert));
    if (auto v = verify_cone(c, a)) {
        Outcome o;
        o.code = kFails;
        o.json["status"] = "fails";
        o.json["violation"] = cone_violation_to_json(c, *v);
        o.lines.push_back("not a cone assignment: condition " + v->condition + " (" + v->detail + ")");
        return o;
    }
    return cone_holds(c, a);
}

Outcome cmd_cone_search(const Settings& s)
{
    ChainComplex c = load(s);
    if (auto a = search_cone(c, s.search()))
        return cone_holds(c, *a);
    Outcome o;
    o.code = kFails;
    o.json["status"] = "fails";
    o.lines.push_back("no cone assignment exists");
    return o;
}

Outcome cmd_skeleton(const Settings& s)
{
    ChainComplex c = load(s);
    ChainComplex k = skeleton(c, s.degree);
    Outcome o;
    o.json["complex"] = Json::parse(serialize_document(to_document(k)));
    std::string text = serialize_document(to_document(k));
    text.pop_back();
    o.lines.push_back(text);
    return o;
}

std::vector<std::vector<long>> parse_facets(const std::string& text)
{
    std::vector<std::vector<long>> out;
    std::stringstream in(text);
    std::string facet;
    while (std::getline(in, facet, ';')) {
        std::replace(facet.begin(), facet.end(), ',', ' ');
        std::stringstream fs(facet);
        std::vector<long> f;
        std::string tok;
        while (fs >> tok) {
            try {
                std::size_t used = 0;
                long x = std::stol(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                f.push_back(x);
            } catch (const std::exception&) {
                throw Error(ErrorKind::InvalidInput, "bad vertex '" + tok + "'");
            }
        }
        if (!f.empty())
            out.push_back(std::move(f));
    }
    return out;
}

Outcome cmd_from_simplicial(const Settings& s)
{
    std::string text = s.facets;
    if (text.empty()) {
        text = read_source(s.file);
        std::replace(text.begin(), text.end(), '\n', ';');
    }
    ChainComplex c = from_simplicial(parse_facets(text));
    Outcome o;
    std::string doc = serialize_document(to_document(c));
    o.json["complex"] = Json::parse(doc);
    doc.pop_back();
    o.lines.push_back(doc);
    return o;
}

Outcome cmd_examples(const Settings& s)
{
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    auto results = run_examples(s.search());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json items = Json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        Json x = Json::object();
        x["name"] = r.name;
        x["passed"] = r.passed();
        x["checked"] = r.checked;
        x["mismatches"] = r.mismatches;
        items.push_back(x);
        passed += r.passed();
        std::string keys;
        for (const auto& k : r.checked)
            keys += (keys.empty() ? "" : " ") + k;
        o.lines.push_back(std::string(r.passed() ? "ok   " : "FAIL ") + r.name + "  [" + keys + "]");
        for (const auto& m : r.mismatches)
            o.lines.push_back("       " + m);
    }
    o.json["examples"] = items;
    o.json["seconds"] = secs;
    o.lines.push_back(std::to_string(passed) + "/" + std::to_string(results.size()) + " fixtures match");
    o.code = passed == results.size() ? kHolds : kFails;
    return o;
}

Outcome cmd_analyze(const Settings& s)
{
    ChainComplex c = load(s);
    Outcome o;
    o.json = analyze(c, s.search());
    for (const char* key : {"shelling", "regular", "totally_regular", "cone"})
        o.lines.push_back(std::string(key) + ": " + o.json.at(key).at("status").get<std::string>());
    std::string h;
    for (const auto& x : o.json.at("homology"))
        h += (h.empty() ? "" : ", ") + std::string("H_") + std::to_string(x.at("degree").get<int>()) + " = " +
             x.at("text").get<std::string>();
    o.lines.insert(o.lines.begin(), h);
    return o;
}

Outcome cmd_check_certificate(const Settings& s)
{
    Json report = Json::parse(read_source(s.file));
    auto r = check_certificate(report, s.search());
    Outcome o;
    o.code = r.agrees ? kHolds : kFails;
    o.json["agrees"] = r.agrees;
    o.json["notes"] = r.notes;
    o.lines = r.notes;
    o.lines.push_back(r.agrees ? "all claims re-verified" : "some claims do not re-verify");
    return o;
}

Outcome cmd_dev_fuzz(const Settings& s)
{
    using Source = GeneratorConfig::Source;
    Outcome o;
    std::size_t checked = 0, brute = 0, bad = 0;
    for (std::size_t i = 0; i < s.count; ++i) {
        GeneratorConfig cfg;
        cfg.seed = s.seed + i;
        cfg.source = std::array{Source::RandomSimplicial, Source::RandomBoundary, Source::ShiftedComplex}[i % 3];
        cfg.max_cells = 5;
        ChainComplex c = generate(cfg);
        ++checked;
        if (homology(c) != dense_homology_oracle(c)) {
            ++bad;
            o.lines.push_back("seed " + std::to_string(cfg.seed) + ": homology disagrees with the dense oracle");
        }
        try {
            auto all = brute_shellings(c);
            auto found = search_shelling(c, s.search());
            ++brute;
            if (found.has_value() != !all.empty() || (found && verify_shelling(c, *found))) {
                ++bad;
                o.lines.push_back("seed " + std::to_string(cfg.seed) + ": shelling search disagrees with brute force");
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TooLarge)
                throw;
        }
    }
    o.json["instances"] = checked;
    o.json["brute_force_compared"] = brute;
    o.json["disagreements"] = bad;
    o.lines.push_back(std::to_string(checked) + " instances, " + std::to_string(brute) + " compared with brute force, " +
                      std::to_string(bad) + " disagreements");
    o.code = bad ? kFails : kHolds;
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Shellability, regularity and cone checks for chain complexes with a fixed basis", "ccshell"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--ring", s.ring, "Coefficient ring override: Z, Q or Fp:<p>");
    app.add_option("--budget", s.budget, "Search node budget (default CCSHELL_BUDGET or 10^6)");
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", s.seed, "Seed for generated instances");
    app.add_option("--threads", s.threads, "Worker threads for searches");

    std::function<Outcome(const Settings&)> handler;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    Outcome (*fn)(const Settings&), bool file = true) {
        CLI::App* sub = parent->add_subcommand(name, help);
        if (file)
            sub->add_option("file", s.file, "Complex document (.ccx) or bundled fixture name")->required();
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };
    auto with_cert = [&](CLI::App* sub) {
        sub->add_option("--cert", s.cert, "Certificate JSON (raw or command output)");
        return sub;
    };
    auto with_order = [&](CLI::App* sub) {
        sub->add_option("--order", s.order, "Order of Gamma: 'natural' or comma-separated labels");
        return sub;
    };

    leaf(&app, "validate", "Parse and check a complex", cmd_validate);
    leaf(&app, "homology", "Homology modules by degree", cmd_homology);
    leaf(&app, "classify", "Critical / precritical / noncritical tags", cmd_classify);
    leaf(&app, "analyze", "Full report with certificates", cmd_analyze);

    CLI::App* shelling = app.add_subcommand("shelling", "Shellings of Gamma");
    shelling->require_subcommand(1);
    with_order(with_cert(leaf(shelling, "verify", "Check a certificate or an order", cmd_shelling_verify)));
    leaf(shelling, "search", "Search a shelling", cmd_shelling_search);
    with_order(with_cert(leaf(shelling, "monotonize", "Remove failures step by step", cmd_shelling_monotonize)));

    CLI::App* regular = app.add_subcommand("regular", "Regular orders");
    regular->require_subcommand(1);
    with_order(with_cert(leaf(regular, "verify", "Check a certificate or an order", cmd_regular_verify)));
    leaf(regular, "search", "Search a regular order", cmd_regular_search);

    with_cert(leaf(&app, "totally-regular", "Regular with acyclic generated subcomplexes", cmd_totally_regular));

    CLI::App* cone = app.add_subcommand("cone", "Cone assignments");
    cone->require_subcommand(1);
    with_cert(leaf(cone, "verify", "Check an assignment", cmd_cone_verify));
    leaf(cone, "search", "Search an assignment", cmd_cone_search);

    leaf(&app, "skeleton", "The i-skeleton as a document", cmd_skeleton)
        ->add_option("--degree", s.degree, "Skeleton degree")
        ->required();
    CLI::App* simp = leaf(&app, "from-simplicial", "Chain complex of a simplicial complex", cmd_from_simplicial, false);
    simp->add_option("file", s.file, "File with one facet per line");
    simp->add_option("--facets", s.facets, "Facets as '1 2 3; 2 3 4'");
    leaf(&app, "examples", "Recompute all bundled fixtures", cmd_examples, false);
    leaf(&app, "check-certificate", "Re-verify a JSON report", cmd_check_certificate);

    CLI::App* dev = app.add_subcommand("dev", "Developer tools");
    dev->require_subcommand(1);
    leaf(dev, "fuzz", "Compare against the oracles on generated complexes", cmd_dev_fuzz, false)
        ->add_option("--count", s.count, "Number of instances");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    if (!handler) {
        err << "error: no command\n";
        return kError;
    }

    Outcome result;
    try {
        result = handler(s);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SearchBudgetExceeded) {
            result = budget_exceeded("search");
        } else {
            if (s.format == "json") {
                Json j = Json::object();
                j["status"] = "error";
                j["error"] = to_string(e.kind());
                j["message"] = e.what();
                if (e.line)
                    j["line"] = *e.line;
                if (e.column)
                    j["column"] = *e.column;
                out << j.dump(2) << "\n";
            }
            err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
            return kError;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    if (s.format == "json") {
        result.json["exit_code"] = result.code;
        out << result.json.dump(2) << "\n";
    } else {
        for (const auto& line : result.lines)
            out << line << "\n";
    }
    return result.code;
}

}  // namespace ccs
