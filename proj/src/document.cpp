#include "ccshell/document.hpp"

#include "ccshell/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <set>
#include <sstream>

namespace ccs {

namespace {

// Maps JSON pointers to byte offsets so schema errors can be located.
class PositionIndex {
public:
    explicit PositionIndex(const std::string& text) : text_(text)
    {
        try {
            skip();
            value("");
        } catch (...) {
            // The text already parsed, so this only guards against surprises.
        }
    }

    std::size_t offset(std::string pointer) const
    {
        for (;;) {
            auto it = offsets_.find(pointer);
            if (it != offsets_.end())
                return it->second;
            if (pointer.empty())
                return 0;
            pointer.erase(pointer.rfind('/'));
        }
    }

private:
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string string()
    {
        std::string out;
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\')
                ++pos_;
            out += text_[pos_++];
        }
        ++pos_;
        return out;
    }

    static std::string escape(const std::string& key)
    {
        std::string out;
        for (char ch : key) {
            if (ch == '~')
                out += "~0";
            else if (ch == '/')
                out += "~1";
            else
                out += ch;
        }
        return out;
    }

    void value(const std::string& pointer)
    {
        offsets_[pointer] = pos_;
        if (pos_ >= text_.size())
            return;
        char ch = text_[pos_];
        if (ch == '{') {
            ++pos_;
            skip();
            while (pos_ < text_.size() && text_[pos_] != '}') {
                std::string key = string();
                skip();
                ++pos_;  // ':'
                skip();
                value(pointer + "/" + escape(key));
                skip();
                if (text_[pos_] == ',') {
                    ++pos_;
                    skip();
                }
            }
            ++pos_;
        } else if (ch == '[') {
            ++pos_;
            skip();
            std::size_t i = 0;
            while (pos_ < text_.size() && text_[pos_] != ']') {
                value(pointer + "/" + std::to_string(i++));
                skip();
                if (text_[pos_] == ',') {
                    ++pos_;
                    skip();
                }
            }
            ++pos_;
        } else if (ch == '"') {
            string();
        } else {
            while (pos_ < text_.size() && !std::strchr(",]} \t\r\n", text_[pos_]))
                ++pos_;
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> offsets_;
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Error located(const std::string& text, std::size_t offset, const std::string& reason, const std::string& pointer = "")
{
    auto [line, col] = line_column(text, offset);
    Error e(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + reason);
    e.line = line;
    e.column = col;
    e.pointer = pointer;
    return e;
}

class Reader {
public:
    explicit Reader(const std::string& text) : text_(text), index_(text) {}

    [[noreturn]] void fail(const std::string& pointer, const std::string& reason) const
    {
        throw located(text_, index_.offset(pointer), reason, pointer);
    }

    const Json& field(const Json& obj, const std::string& pointer, const char* key) const
    {
        if (!obj.contains(key))
            fail(pointer, std::string("missing field '") + key + "'");
        return obj.at(key);
    }

    std::string string_of(const Json& j, const std::string& pointer) const
    {
        if (!j.is_string())
            fail(pointer, "expected a string");
        return j.get<std::string>();
    }

    unsigned degree_of(const Json& j, const std::string& pointer) const
    {
        if (!j.is_number_unsigned())
            fail(pointer, "expected a non-negative integer degree");
        auto v = j.get<std::uint64_t>();
        if (v > 1000000)
            fail(pointer, "degree out of range");
        return static_cast<unsigned>(v);
    }

    Scalar scalar_of(const Json& j, const std::string& pointer) const
    {
        try {
            if (j.is_number_integer())
                return parse_scalar(j.dump());
            if (j.is_string())
                return parse_scalar(j.get<std::string>());
        } catch (const Error& e) {
            fail(pointer, e.what());
        }
        fail(pointer, "coefficient must be an integer or a string \"a/b\"");
    }

private:
    const std::string& text_;
    PositionIndex index_;
};

std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

std::map<std::string, std::size_t> label_index(const std::vector<std::string>& basis)
{
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.emplace(basis[i], i);
    return out;
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedCertificate, what); }

std::size_t index_of(const Json& j, const char* what)
{
    if (!j.is_number_unsigned())
        malformed(std::string("expected a non-negative integer for ") + what);
    return j.get<std::size_t>();
}

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

const Json& array_member(const Json& j, const char* key)
{
    const Json& a = member(j, key);
    if (!a.is_array())
        malformed(std::string("field '") + key + "' must be an array");
    return a;
}

}  // namespace

ComplexDocument parse_document(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string reason = e.what();
        auto colon = reason.rfind(": ");
        if (colon != std::string::npos)
            reason = reason.substr(colon + 2);
        throw located(text, e.byte == 0 ? 0 : e.byte - 1, reason);
    }
    Reader r(text);
    if (!j.is_object())
        r.fail("", "document must be a JSON object");

    ComplexDocument doc;
    doc.format_version = r.string_of(r.field(j, "", "format_version"), "/format_version");
    if (doc.format_version != "1.0")
        r.fail("/format_version", "unsupported format version '" + doc.format_version + "'");
    doc.ring = r.string_of(r.field(j, "", "ring"), "/ring");
    std::optional<Ring> ring;
    try {
        ring = Ring::parse(doc.ring);
    } catch (const Error& e) {
        r.fail("/ring", e.what());
    }

    const Json& degrees = r.field(j, "", "degrees");
    if (!degrees.is_array() || degrees.empty())
        r.fail("/degrees", "'degrees' must be a nonempty array");
    std::map<unsigned, std::vector<std::string>> bases;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::string p = ptr("/degrees", i);
        const Json& entry = degrees[i];
        if (!entry.is_object())
            r.fail(p, "expected an object");
        unsigned v = r.degree_of(r.field(entry, p, "degree"), p + "/degree");
        if (bases.count(v))
            r.fail(p + "/degree", "degree " + std::to_string(v) + " listed twice");
        const Json& basis = r.field(entry, p, "basis");
        if (!basis.is_array())
            r.fail(p + "/basis", "'basis' must be an array");
        std::set<std::string> seen;
        auto& out = bases[v];
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::string label = r.string_of(basis[k], ptr(p + "/basis", k));
            if (label.empty())
                r.fail(ptr(p + "/basis", k), "empty label");
            if (!seen.insert(label).second)
                r.fail(ptr(p + "/basis", k), "duplicate label '" + label + "' in degree " + std::to_string(v));
            out.push_back(label);
        }
    }
    doc.bases.resize(bases.rbegin()->first + 1);
    for (auto& [v, b] : bases)
        doc.bases[v] = std::move(b);

    std::vector<std::map<std::string, std::size_t>> lookup;
    for (const auto& b : doc.bases)
        lookup.push_back(label_index(b));

    if (j.contains("boundary")) {
        const Json& boundary = j.at("boundary");
        if (!boundary.is_array())
            r.fail("/boundary", "'boundary' must be an array");
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            const std::string p = ptr("/boundary", i);
            const Json& entry = boundary[i];
            if (!entry.is_object())
                r.fail(p, "expected an object");
            ComplexDocument::Column col;
            col.degree = r.degree_of(r.field(entry, p, "degree"), p + "/degree");
            if (col.degree == 0 || col.degree >= doc.bases.size())
                r.fail(p + "/degree", "no boundary map on degree " + std::to_string(col.degree));
            col.from = r.string_of(r.field(entry, p, "from"), p + "/from");
            if (!lookup[col.degree].count(col.from))
                r.fail(p + "/from", "unknown label '" + col.from + "' in degree " + std::to_string(col.degree));
            const Json& entries = r.field(entry, p, "entries");
            if (!entries.is_array())
                r.fail(p + "/entries", "'entries' must be an array");
            for (std::size_t k = 0; k < entries.size(); ++k) {
                const std::string q = ptr(p + "/entries", k);
                const Json& e = entries[k];
                if (!e.is_array() || e.size() != 2)
                    r.fail(q, "entry must be a [label, coefficient] pair");
                std::string to = r.string_of(e[0], q + "/0");
                if (!lookup[col.degree - 1].count(to))
                    r.fail(q + "/0", "unknown label '" + to + "' in degree " + std::to_string(col.degree - 1));
                Scalar x = r.scalar_of(e[1], q + "/1");
                try {
                    ring->reduce(x);
                } catch (const Error& err) {
                    r.fail(q + "/1", err.what());
                }
                col.entries.emplace_back(std::move(to), std::move(x));
            }
            doc.boundary.push_back(std::move(col));
        }
    }

    if (j.contains("metadata")) {
        if (!j.at("metadata").is_object())
            r.fail("/metadata", "'metadata' must be an object");
        doc.metadata = j.at("metadata");
    }
    return doc;
}

namespace {

// Columns merged per (degree, from), entries summed and kept in row order.
std::vector<ComplexDocument::Column> normalized_columns(const ComplexDocument& doc)
{
    std::vector<std::map<std::string, std::size_t>> lookup;
    for (const auto& b : doc.bases)
        lookup.push_back(label_index(b));
    std::vector<std::map<std::size_t, std::map<std::size_t, Scalar>>> sums(doc.bases.size());
    for (const auto& col : doc.boundary) {
        if (col.degree == 0 || col.degree >= doc.bases.size())
            throw Error(ErrorKind::InvalidInput, "no boundary map on degree " + std::to_string(col.degree));
        auto from = lookup[col.degree].find(col.from);
        if (from == lookup[col.degree].end())
            throw Error(ErrorKind::InvalidInput, "unknown label '" + col.from + "'");
        auto& target = sums[col.degree][from->second];
        for (const auto& [to, x] : col.entries) {
            auto row = lookup[col.degree - 1].find(to);
            if (row == lookup[col.degree - 1].end())
                throw Error(ErrorKind::InvalidInput, "unknown label '" + to + "'");
            target[row->second] += x;
        }
    }
    std::vector<ComplexDocument::Column> out;
    for (unsigned v = 1; v < doc.bases.size(); ++v)
        for (const auto& [j, rows] : sums[v]) {
            ComplexDocument::Column col{v, doc.bases[v][j], {}};
            for (const auto& [i, x] : rows)
                if (x != 0)
                    col.entries.emplace_back(doc.bases[v - 1][i], x);
            if (!col.entries.empty())
                out.push_back(std::move(col));
        }
    return out;
}

}  // namespace

std::string serialize_document(const ComplexDocument& doc)
{
    std::ostringstream out;
    out << "{\n";
    out << "  \"format_version\": " << Json(doc.format_version).dump() << ",\n";
    out << "  \"ring\": " << Json(doc.ring).dump() << ",\n";
    out << "  \"degrees\": [\n";
    for (std::size_t v = 0; v < doc.bases.size(); ++v) {
        Json d = Json::object();
        d["degree"] = v;
        d["basis"] = doc.bases[v];
        out << "    " << d.dump() << (v + 1 < doc.bases.size() ? ",\n" : "\n");
    }
    out << "  ],\n";
    auto cols = normalized_columns(doc);
    out << "  \"boundary\": [" << (cols.empty() ? "" : "\n");
    for (std::size_t k = 0; k < cols.size(); ++k) {
        Json entries = Json::array();
        for (const auto& [to, x] : cols[k].entries)
            entries.push_back(Json::array({to, scalar_to_json(x)}));
        Json c = Json::object();
        c["degree"] = cols[k].degree;
        c["from"] = cols[k].from;
        c["entries"] = entries;
        out << "    " << c.dump() << (k + 1 < cols.size() ? ",\n" : "\n");
    }
    out << (cols.empty() ? "" : "  ") << "],\n";
    out << "  \"metadata\": " << doc.metadata.dump() << "\n";
    out << "}\n";
    return out.str();
}

ChainComplex to_complex(const ComplexDocument& doc, const std::optional<std::string>& ring_override)
{
    Ring ring = Ring::parse(ring_override ? *ring_override : doc.ring);
    std::vector<std::map<std::string, std::size_t>> lookup;
    for (const auto& b : doc.bases)
        lookup.push_back(label_index(b));
    std::vector<BoundaryEntry> entries;
    for (const auto& col : normalized_columns(doc))
        for (const auto& [to, x] : col.entries) {
            Scalar r;
            try {
                r = ring.reduce(x);
            } catch (const Error& e) {
                throw Error(ErrorKind::ValidationError, std::string(e.what()) + " (column " + col.from + ")");
            }
            entries.push_back({col.degree, lookup[col.degree].at(col.from), lookup[col.degree - 1].at(to), r});
        }
    try {
        return build_complex(ring, doc.bases, entries);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BoundaryConditionViolated && e.kind() != ErrorKind::EmptyTopDegree &&
            e.kind() != ErrorKind::DanglingReference)
            throw;
        std::string message = e.what();
        Error out(ErrorKind::ValidationError, message);
        if (e.kind() == ErrorKind::BoundaryConditionViolated && e.degree && e.index) {
            const std::string& label = doc.bases[*e.degree + 1][*e.index];
            out = Error(ErrorKind::ValidationError, "boundary of boundary is nonzero on column '" + label +
                                                         "' of degree " + std::to_string(*e.degree + 1));
            out.degree = *e.degree + 1;
            out.index = *e.index;
        }
        throw out;
    }
}

ComplexDocument to_document(const ChainComplex& c, const Json& metadata)
{
    ComplexDocument doc;
    doc.ring = c.ring().name();
    for (unsigned v = 0; v <= c.order(); ++v) {
        std::vector<std::string> basis;
        for (Cell e : c.cells(v))
            basis.push_back(c.label(e).empty() ? c.name(e) : c.label(e));
        doc.bases.push_back(std::move(basis));
    }
    for (unsigned v = 1; v <= c.order(); ++v)
        for (std::size_t j = 0; j < c.rank(v); ++j) {
            ComplexDocument::Column col{v, doc.bases[v][j], {}};
            for (const auto& [i, x] : c.boundary(v).column(j))
                col.entries.emplace_back(doc.bases[v - 1][i], x);
            if (!col.entries.empty())
                doc.boundary.push_back(std::move(col));
        }
    doc.metadata = metadata.is_object() ? metadata : Json::object();
    return doc;
}

Json scalar_to_json(const Scalar& s)
{
    if (s.get_den() == 1 && s.get_num().fits_slong_p())
        return s.get_num().get_si();
    return to_string(s);
}

Scalar scalar_from_json(const Json& j)
{
    try {
        if (j.is_number_integer())
            return parse_scalar(j.dump());
        if (j.is_string())
            return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
        malformed(e.what());
    }
    malformed("expected a scalar");
}

Json cell_to_json(const ChainComplex& c, Cell e)
{
    const std::string& l = c.label(e);
    return Json::array({e.degree, l.empty() ? c.name(e) : l});
}

Cell cell_from_json(const ChainComplex& c, const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_string())
        malformed("a cell must be written as [degree, \"label\"], got " + j.dump());
    auto degree = j[0].get<std::uint64_t>();
    if (degree > c.order())
        malformed("cell degree " + std::to_string(degree) + " exceeds the order");
    const auto v = static_cast<unsigned>(degree);
    const auto label = j[1].get<std::string>();
    if (auto e = c.find(v, label))
        return *e;
    for (Cell e : c.cells(v))
        if (c.name(e) == label)
            return e;
    malformed("no basis element '" + label + "' in degree " + std::to_string(v));
}

Json cells_to_json(const ChainComplex& c, const std::vector<Cell>& cells)
{
    Json out = Json::array();
    for (Cell e : cells)
        out.push_back(cell_to_json(c, e));
    return out;
}

std::vector<Cell> cells_from_json(const ChainComplex& c, const Json& j)
{
    if (!j.is_array())
        malformed("expected a list of cells");
    std::vector<Cell> out;
    for (const auto& x : j)
        out.push_back(cell_from_json(c, x));
    return out;
}

Json chain_to_json(const ChainComplex& c, const Chain& x)
{
    Json terms = Json::array();
    for (const auto& [i, a] : x.coeffs)
        terms.push_back(Json::array({cell_to_json(c, Cell{x.degree, i}), scalar_to_json(a)}));
    Json out = Json::object();
    out["degree"] = x.degree;
    out["terms"] = terms;
    return out;
}

Chain chain_from_json(const ChainComplex& c, const Json& j)
{
    std::size_t degree = index_of(member(j, "degree"), "chain degree");
    if (degree > c.order())
        malformed("chain degree exceeds the order");
    std::map<std::uint32_t, Scalar> coeffs;
    for (const auto& t : array_member(j, "terms")) {
        if (!t.is_array() || t.size() != 2)
            malformed("chain term must be [cell, coefficient]");
        Cell e = cell_from_json(c, t[0]);
        if (e.degree != degree)
            malformed("chain term of the wrong degree");
        coeffs[e.index] += scalar_from_json(t[1]);
    }
    try {
        return make_chain(c, static_cast<unsigned>(degree), coeffs);
    } catch (const Error& e) {
        malformed(e.what());
    }
}

Json relation_to_json(const ChainComplex& c, const Relation& r)
{
    Json terms = Json::array();
    for (const auto& [e, a] : r.terms)
        terms.push_back(Json::array({cell_to_json(c, e), scalar_to_json(a)}));
    Json out = Json::object();
    out["target"] = cell_to_json(c, r.target);
    out["lead"] = scalar_to_json(r.lead);
    out["terms"] = terms;
    return out;
}

Relation relation_from_json(const ChainComplex& c, const Json& j)
{
    Relation r;
    r.target = cell_from_json(c, member(j, "target"));
    r.lead = scalar_from_json(member(j, "lead"));
    for (const auto& t : array_member(j, "terms")) {
        if (!t.is_array() || t.size() != 2)
            malformed("relation term must be [cell, coefficient]");
        r.terms.emplace_back(cell_from_json(c, t[0]), scalar_from_json(t[1]));
    }
    return r;
}

Json shelling_to_json(const ChainComplex& c, const ShellingCertificate& cert)
{
    Json nodes = Json::array();
    for (const auto& n : cert.nodes) {
        Json node = Json::object();
        node["cell"] = n.cell ? cell_to_json(c, *n.cell) : Json(nullptr);
        node["prefix"] = cells_to_json(c, n.prefix);
        node["order"] = cells_to_json(c, n.order);
        Json children = Json::array();
        for (const auto& ch : n.children)
            children.push_back(ch ? Json(*ch) : Json(nullptr));
        node["children"] = children;
        nodes.push_back(node);
    }
    Json out = Json::object();
    out["root"] = cert.root;
    out["nodes"] = nodes;
    return out;
}

ShellingCertificate shelling_from_json(const ChainComplex& c, const Json& j)
{
    ShellingCertificate cert;
    cert.root = index_of(member(j, "root"), "root");
    for (const auto& n : array_member(j, "nodes")) {
        ShellingNode node;
        const Json& cell = member(n, "cell");
        if (!cell.is_null())
            node.cell = cell_from_json(c, cell);
        node.prefix = cells_from_json(c, member(n, "prefix"));
        std::sort(node.prefix.begin(), node.prefix.end());
        node.order = cells_from_json(c, member(n, "order"));
        for (const auto& ch : array_member(n, "children"))
            node.children.push_back(ch.is_null() ? std::nullopt
                                                 : std::optional<std::size_t>(index_of(ch, "child node")));
        cert.nodes.push_back(std::move(node));
    }
    if (cert.root >= cert.nodes.size())
        malformed("root node out of range");
    return cert;
}

Json regular_to_json(const ChainComplex& c, const RegularCertificate& cert)
{
    Json out = Json::object();
    out["shelling"] = shelling_to_json(c, cert.shelling);
    Json orderings = Json::array();
    for (const auto& o : cert.degree_orderings)
        orderings.push_back(cells_to_json(c, o));
    out["degree_orderings"] = orderings;
    Json nodes = Json::array();
    for (const auto& [e, n] : cert.boundary_nodes) {
        Json x = Json::object();
        x["cell"] = cell_to_json(c, e);
        x["node"] = n;
        nodes.push_back(x);
    }
    out["boundary_nodes"] = nodes;
    Json c1 = Json::array();
    for (const auto& [e, r] : cert.condition1)
        c1.push_back(relation_to_json(c, r));
    out["condition1"] = c1;
    Json c2 = Json::array();
    for (const auto& [key, r] : cert.condition2) {
        Json x = Json::object();
        x["cell"] = cell_to_json(c, key.first);
        x["position"] = key.second;
        x["relation"] = relation_to_json(c, r);
        c2.push_back(x);
    }
    out["condition2"] = c2;
    return out;
}

RegularCertificate regular_from_json(const ChainComplex& c, const Json& j)
{
    RegularCertificate cert;
    cert.shelling = shelling_from_json(c, member(j, "shelling"));
    for (const auto& o : array_member(j, "degree_orderings"))
        cert.degree_orderings.push_back(cells_from_json(c, o));
    for (const auto& x : array_member(j, "boundary_nodes"))
        cert.boundary_nodes[cell_from_json(c, member(x, "cell"))] = index_of(member(x, "node"), "node");
    for (const auto& x : array_member(j, "condition1")) {
        Relation r = relation_from_json(c, x);
        cert.condition1[r.target] = std::move(r);
    }
    for (const auto& x : array_member(j, "condition2"))
        cert.condition2[{cell_from_json(c, member(x, "cell")), index_of(member(x, "position"), "position")}] =
            relation_from_json(c, member(x, "relation"));
    return cert;
}

Json cone_to_json(const ChainComplex& c, const ConeAssignment& a)
{
    Json sets = Json::array();
    for (const auto& s : a.sets)
        sets.push_back(cells_to_json(c, s));
    Json witnesses = Json::array();
    for (const auto& w : a.witnesses) {
        Json x = Json::object();
        x["target"] = cell_to_json(c, w.target);
        x["c"] = scalar_to_json(w.c);
        x["tau"] = chain_to_json(c, w.tau);
        witnesses.push_back(x);
    }
    Json out = Json::object();
    out["sets"] = sets;
    out["witnesses"] = witnesses;
    return out;
}

ConeAssignment cone_from_json(const ChainComplex& c, const Json& j)
{
    ConeAssignment a;
    for (const auto& s : array_member(j, "sets"))
        a.sets.push_back(cells_from_json(c, s));
    for (const auto& x : array_member(j, "witnesses"))
        a.witnesses.push_back(ConeWitness{cell_from_json(c, member(x, "target")), chain_from_json(c, member(x, "tau")),
                                          scalar_from_json(member(x, "c"))});
    return a;
}

Json shelling_violation_to_json(const ChainComplex& c, const ShellingViolation& v)
{
    Json out = Json::object();
    out["kind"] = to_string(v.kind);
    out["node"] = v.node;
    out["position"] = v.position;
    out["degree"] = v.degree;
    out["cells"] = cells_to_json(c, v.cells);
    out["detail"] = v.detail;
    return out;
}

Json regular_violation_to_json(const ChainComplex& c, const RegularViolation& v)
{
    Json out = Json::object();
    out["condition"] = to_string(v.condition);
    out["element"] = v.element ? cell_to_json(c, *v.element) : Json(nullptr);
    out["position"] = v.position;
    out["detail"] = v.detail;
    return out;
}

Json cone_violation_to_json(const ChainComplex& c, const ConeViolation& v)
{
    Json out = Json::object();
    out["condition"] = v.condition;
    out["element"] = v.element ? cell_to_json(c, *v.element) : Json(nullptr);
    out["detail"] = v.detail;
    return out;
}

}  // namespace ccs
