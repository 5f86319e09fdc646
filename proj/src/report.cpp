#include "ccshell/report.hpp"

#include "ccshell/error.hpp"
#include "ccshell/homology.hpp"

namespace ccs {

namespace {

const char* const kHolds = "holds";
const char* const kFails = "fails";
const char* const kBudget = "budget-exceeded";

template <class Search, class Encode>
Json search_section(Search search, Encode encode)
{
    Json out = Json::object();
    try {
        auto found = search();
        out["status"] = found ? kHolds : kFails;
        out["certificate"] = found ? encode(*found) : Json(nullptr);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchBudgetExceeded)
            throw;
        out["status"] = kBudget;
        out["certificate"] = nullptr;
    }
    return out;
}

// First element whose generated subcomplex is not acyclic.
std::optional<Cell> first_nonacyclic(const ChainComplex& c)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        Cell e = c.cell(i);
        if (!is_acyclic(subcomplex(c, generated_subcomplex(c, e))))
            return e;
    }
    return std::nullopt;
}

Json classification_section(const ChainComplex& c)
{
    Json out = Json::array();
    for (unsigned v = 0; v <= c.order(); ++v) {
        DegreeOrdering ordering = conventional_ordering(c, v);
        Json elements = Json::array();
        for (const auto& cls : classify_degree(c, ordering)) {
            Json x = Json::object();
            x["element"] = cell_to_json(c, cls.element);
            x["tag"] = to_string(cls.tag);
            x["by_convention"] = cls.by_convention;
            elements.push_back(x);
        }
        Json d = Json::object();
        d["degree"] = v;
        d["ordering"] = cells_to_json(c, ordering.permutation);
        d["maximal"] = elements;
        out.push_back(d);
    }
    return out;
}

}  // namespace

Json homology_to_json(const ChainComplex& c, const std::vector<FGModule>& h)
{
    Json out = Json::array();
    for (std::size_t v = 0; v < h.size(); ++v) {
        Json torsion = Json::array();
        for (const auto& t : h[v].torsion)
            torsion.push_back(t.get_str());
        Json x = Json::object();
        x["degree"] = v;
        x["free_rank"] = h[v].free_rank;
        x["torsion"] = torsion;
        x["text"] = to_string(h[v], c.ring());
        out.push_back(x);
    }
    return out;
}

Json analyze(const ChainComplex& c, const SearchOptions& options)
{
    Json report = Json::object();
    report["ring"] = c.ring().name();
    report["order"] = c.order();
    report["pure"] = is_pure(c);
    report["gamma"] = cells_to_json(c, maximal_elements(c));
    report["classification"] = classification_section(c);
    const auto h = homology(c);
    report["homology"] = homology_to_json(c, h);
    report["acyclic"] = is_acyclic(h);

    report["shelling"] = search_section([&] { return search_shelling(c, options); },
                                        [&](const ShellingCertificate& x) { return shelling_to_json(c, x); });

    std::optional<RegularCertificate> regular;
    bool regular_budget = false;
    Json reg = Json::object();
    try {
        regular = search_regular(c, options);
        reg["status"] = regular ? kHolds : kFails;
        reg["certificate"] = regular ? regular_to_json(c, *regular) : Json(nullptr);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchBudgetExceeded)
            throw;
        regular_budget = true;
        reg["status"] = kBudget;
        reg["certificate"] = nullptr;
    }
    report["regular"] = reg;

    Json total = Json::object();
    const auto bad = first_nonacyclic(c);
    if (bad) {
        total["status"] = kFails;
        total["reason"] = "generated subcomplex not acyclic";
        total["element"] = cell_to_json(c, *bad);
    } else if (regular) {
        total["status"] = kHolds;
        Json counts = Json::array();
        for (auto n : precritical_counts(c, *regular))
            counts.push_back(n);
        total["precritical_counts"] = counts;
    } else if (regular_budget) {
        total["status"] = kBudget;
    } else {
        total["status"] = kFails;
        total["reason"] = "no regular order";
    }
    report["totally_regular"] = total;

    report["cone"] = search_section([&] { return search_cone(c, options); },
                                    [&](const ConeAssignment& a) { return cone_to_json(c, a); });

    report["complex"] = Json::parse(serialize_document(to_document(c)));
    return report;
}

CertificateCheck check_certificate(const Json& report, const SearchOptions& options)
{
    CertificateCheck out;
    auto note = [&](bool ok, const std::string& line) {
        out.notes.push_back(std::string(ok ? "agree" : "DISAGREE") + "  " + line);
        if (!ok)
            out.agrees = false;
    };
    if (!report.is_object() || !report.contains("complex"))
        throw Error(ErrorKind::MalformedCertificate, "report has no embedded complex");
    const ChainComplex c = to_complex(parse_document(report.at("complex").dump()));

    auto status_of = [&](const char* key) -> std::string {
        if (!report.contains(key) || !report.at(key).contains("status") || !report.at(key).at("status").is_string())
            throw Error(ErrorKind::MalformedCertificate, std::string("report has no status for ") + key);
        return report.at(key).at("status").get<std::string>();
    };
    auto certificate_of = [&](const char* key) -> const Json& {
        const Json& sec = report.at(key);
        if (!sec.contains("certificate") || sec.at("certificate").is_null())
            throw Error(ErrorKind::MalformedCertificate, std::string("claim without certificate for ") + key);
        return sec.at("certificate");
    };
    // Re-runs a search for a "fails" claim.
    auto recheck_absent = [&](const char* key, auto search) {
        try {
            bool found = search();
            note(!found, std::string(key) + ": absence re-confirmed by exhaustive search");
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SearchBudgetExceeded)
                throw;
            out.notes.push_back(std::string("unconfirmed  ") + key + ": budget exhausted while re-searching");
        }
    };
    auto guarded = [&](const char* key, auto body) {
        try {
            body();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::MalformedCertificate && e.kind() != ErrorKind::InvalidCertificate)
                throw;
            note(false, std::string(key) + ": " + e.what());
        }
    };

    if (report.contains("homology"))
        note(report.at("homology") == homology_to_json(c, homology(c)), "homology recomputed");

    std::optional<RegularCertificate> regular;
    guarded("shelling", [&] {
        std::string s = status_of("shelling");
        if (s == kHolds) {
            auto v = verify_shelling(c, shelling_from_json(c, certificate_of("shelling")));
            note(!v, "shelling: certificate verified" + (v ? " (" + v->detail + ")" : std::string()));
        } else if (s == kFails) {
            recheck_absent("shelling", [&] { return search_shelling(c, options).has_value(); });
        }
    });
    guarded("regular", [&] {
        std::string s = status_of("regular");
        if (s == kHolds) {
            regular = regular_from_json(c, certificate_of("regular"));
            auto v = verify_regular(c, *regular);
            note(!v, "regular: certificate verified" + (v ? " (" + v->detail + ")" : std::string()));
            if (v)
                regular.reset();
        } else if (s == kFails) {
            recheck_absent("regular", [&] { return search_regular(c, options).has_value(); });
        }
    });
    guarded("totally_regular", [&] {
        std::string s = status_of("totally_regular");
        const Json& sec = report.at("totally_regular");
        if (s == kHolds) {
            note(regular && is_totally_regular(c, *regular), "totally_regular: regular certificate and acyclic C_e");
        } else if (s == kFails) {
            if (sec.contains("element")) {
                Cell e = cell_from_json(c, sec.at("element"));
                note(!is_acyclic(subcomplex(c, generated_subcomplex(c, e))),
                     "totally_regular: C_" + c.name(e) + " is not acyclic");
            } else {
                recheck_absent("totally_regular", [&] { return search_regular(c, options).has_value(); });
            }
        }
    });
    guarded("cone", [&] {
        std::string s = status_of("cone");
        if (s == kHolds) {
            auto v = verify_cone(c, cone_from_json(c, certificate_of("cone")));
            note(!v, "cone: assignment verified" + (v ? " (" + v->detail + ")" : std::string()));
        } else if (s == kFails) {
            recheck_absent("cone", [&] { return search_cone(c, options).has_value(); });
        }
    });
    return out;
}

}  // namespace ccs
