#include "ccshell/fixtures.hpp"

#include "ccshell/error.hpp"
#include "ccshell/homology.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ccs {

std::optional<std::string> fixture_text(const std::string& name)
{
    const std::string file = name.ends_with(".ccx") ? name : name + ".ccx";
    for (const auto& f : embedded_fixture_files())
        if (f.name == file)
            return f.text;
    return std::nullopt;
}

ChainComplex load_fixture(const std::string& name)
{
    auto text = fixture_text(name);
    if (!text)
        throw Error(ErrorKind::InvalidInput, "no bundled fixture named '" + name + "'");
    return to_complex(parse_document(*text));
}

std::string read_source(const std::string& path)
{
    if (std::filesystem::is_regular_file(path)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        if (!in && !in.eof())
            throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
        return out.str();
    }
    if (path.find('/') == std::string::npos)
        if (auto text = fixture_text(path))
            return *text;
    throw Error(ErrorKind::InvalidInput, "no such file or bundled fixture: '" + path + "'");
}

namespace {

class Checker {
public:
    Checker(const ChainComplex& c, const SearchOptions& options, ExampleOutcome& out)
        : c_(c), options_(options), out_(out)
    {
    }

    void expect(const std::string& key, const Json& want)
    {
        out_.checked.push_back(key);
        try {
            Json got = compute(key, want);
            if (got != want)
                out_.mismatches.push_back(key + ": expected " + want.dump() + ", got " + got.dump());
        } catch (const Error& e) {
            out_.mismatches.push_back(key + ": " + e.what());
        }
    }

private:
    const std::vector<FGModule>& h()
    {
        if (!h_)
            h_ = homology(c_);
        return *h_;
    }

    bool shellable()
    {
        auto cert = search_shelling(c_, options_);
        if (cert && verify_shelling(c_, *cert))
            throw Error(ErrorKind::InvalidCertificate, "search returned an invalid shelling");
        return cert.has_value();
    }

    bool regular()
    {
        if (!regular_known_) {
            auto cert = search_regular(c_, options_);
            if (cert && verify_regular(c_, *cert))
                throw Error(ErrorKind::InvalidCertificate, "search returned an invalid regular certificate");
            regular_ = std::move(cert);
            regular_known_ = true;
        }
        return regular_.has_value();
    }

    Json order_checks(const Json& want)
    {
        Json got = Json::array();
        for (const auto& item : want) {
            std::vector<Cell> gamma = cells_from_json(c_, item.at("order"));
            RegularResult r = certify_regular_order(c_, gamma, options_);
            if (r.certificate && verify_regular(c_, *r.certificate))
                throw Error(ErrorKind::InvalidCertificate, "order certificate does not verify");
            Json x = Json::object();
            x["order"] = item.at("order");
            x["regular"] = r.certificate.has_value();
            if (item.contains("violation")) {
                Json v = Json::object();
                if (r.violation) {
                    v["condition"] = to_string(r.violation->condition);
                    v["element"] = r.violation->element ? cell_to_json(c_, *r.violation->element) : Json(nullptr);
                }
                x["violation"] = v;
            }
            got.push_back(x);
        }
        return got;
    }

    Json compute(const std::string& key, const Json& want)
    {
        if (key == "homology") {
            Json out = Json::array();
            for (const auto& m : h())
                out.push_back(to_string(m, c_.ring()));
            return out;
        }
        if (key == "h0_torsion")
            return h()[0].torsion.empty() ? "empty" : "nonempty";
        if (key == "h1")
            return h().size() > 1 ? to_string(h()[1], c_.ring()) : "0";
        if (key == "acyclic")
            return is_acyclic(h());
        if (key == "shelling")
            return shellable();
        if (key == "regular")
            return regular();
        if (key == "totally_regular")
            return regular() && is_totally_regular(c_, *regular_);
        if (key == "generated_acyclic")
            return all_generated_acyclic(c_);
        if (key == "cone") {
            auto a = search_cone(c_, options_);
            if (a && verify_cone(c_, *a))
                throw Error(ErrorKind::InvalidCertificate, "search returned an invalid cone assignment");
            return a.has_value();
        }
        if (key == "augmentation") {
            auto eps = build_augmentation(c_);
            if (eps)
                check_augmentation(c_, *eps);
            return eps.has_value();
        }
        if (key == "order_checks")
            return order_checks(want);
        throw Error(ErrorKind::InvalidInput, "unknown expectation '" + key + "'");
    }

    const ChainComplex& c_;
    const SearchOptions& options_;
    ExampleOutcome& out_;
    std::optional<std::vector<FGModule>> h_;
    std::optional<RegularCertificate> regular_;
    bool regular_known_ = false;
};

}  // namespace

std::vector<ExampleOutcome> run_examples(const SearchOptions& options)
{
    const Json manifest = Json::parse(embedded_manifest());
    std::vector<ExampleOutcome> out;
    for (const auto& entry : manifest.at("fixtures")) {
        ExampleOutcome o;
        o.name = entry.at("name").get<std::string>();
        try {
            const ChainComplex c = load_fixture(o.name);
            Checker check(c, options, o);
            for (const auto& [key, want] : entry.at("expect").items())
                check.expect(key, want);
        } catch (const Error& e) {
            o.mismatches.push_back(e.what());
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace ccs
