#include "cgknot/report.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "cgknot/version.hpp"
#include "json.hpp"

namespace cgknot {

namespace {

using nlohmann::ordered_json;

ordered_json envelope(const char* verb, const std::string& input)
{
    ordered_json j;
    j["schema"] = std::string("cgknot.") + verb + "/1";
    j["version"] = kVersion;
    j["input"] = input;
    return j;
}

void dump(std::ostream& out, const ordered_json& j)
{
    out << j.dump(2) << "\n";
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

const char* boolstr(bool b)
{
    return b ? "true" : "false";
}

ordered_json disc_json(const CanonicalDisc& d)
{
    ordered_json roots = ordered_json::array();
    for (const UnitAngle& w : d.roots())
        roots.push_back(w.str());
    return roots;
}

ordered_json deficiency_json(const DeficiencyResult& r)
{
    ordered_json j;
    j["word"] = r.word.str();
    j["p"] = r.p;
    j["certified"] = r.certified;
    j["fast_path"] = r.fast_path;
    j["cross_checked"] = r.cross_checked;
    ordered_json cols = ordered_json::array();
    for (const UnitAngle& w : r.collisions)
        cols.push_back(w.str());
    j["collisions"] = cols;
    j["detail"] = r.detail;
    return j;
}

ordered_json independence_json(const IndependenceResult& r)
{
    ordered_json j;
    j["word"] = r.word.str();
    j["p"] = r.p;
    j["certified"] = r.certified;
    j["disjoint"] = r.disjoint;
    j["jumps_nonzero"] = r.jumps_nonzero;
    j["support_size"] = r.support_size;
    ordered_json sup = ordered_json::array();
    for (const UnitAngle& w : r.support)
        sup.push_back(w.str());
    j["support"] = sup;
    j["detail"] = r.detail;
    return j;
}

void text_deficiency(std::ostream& out, const DeficiencyResult& r)
{
    out << "word = " << r.word.str() << "\n";
    out << "p = " << r.p << "\n";
    out << (r.certified ? "deficiency: certified" : "deficiency: refuted") << "\n";
    out << "fast_path = " << boolstr(r.fast_path)
        << ", cross_checked = " << boolstr(r.cross_checked) << "\n";
    if (!r.collisions.empty()) {
        out << "collisions =";
        for (const UnitAngle& w : r.collisions)
            out << " " << w.str();
        out << "\n";
    }
    out << "detail: " << r.detail << "\n";
}

void text_independence(std::ostream& out, const IndependenceResult& r)
{
    out << "word = " << r.word.str() << "\n";
    out << "p = " << r.p << "\n";
    out << (r.certified ? "independence: certified" : "independence: refuted") << "\n";
    out << "disjoint = " << boolstr(r.disjoint)
        << ", jumps_nonzero = " << boolstr(r.jumps_nonzero) << "\n";
    out << "support (" << r.support_size << "):";
    for (const UnitAngle& w : r.support)
        out << " " << w.str();
    out << "\n";
    out << "detail: " << r.detail << "\n";
}

} // namespace

Format parse_format(const std::string& name)
{
    if (name == "text")
        return Format::Text;
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    throw std::invalid_argument("unknown format \"" + name + "\" (expected text, json or csv)");
}

Format default_format()
{
    const char* env = std::getenv("CGKNOT_FORMAT");
    if (!env || !*env)
        return Format::Text;
    return parse_format(env);
}

void emit_alex(std::ostream& out, Format f, const std::string& input, const KnotExpr& e,
               const CycLaurent& delta)
{
    switch (f) {
    case Format::Text:
        out << delta.str() << "\n";
        break;
    case Format::Json: {
        ordered_json j = envelope("alex", input);
        j["expression"] = e.str();
        j["alexander"] = delta.str();
        dump(out, j);
        break;
    }
    case Format::Csv: {
        out << "exponent,coefficient\n";
        for (const auto& [k, c] : delta.terms())
            out << k << "," << csv_quote(c.str()) << "\n";
        break;
    }
    }
}

void emit_jumps(std::ostream& out, Format f, const std::string& input, const JumpFunction& j)
{
    switch (f) {
    case Format::Text:
        if (j.support().empty())
            out << "(no jumps)\n";
        for (const auto& [w, v] : j.support())
            out << w.str() << " -> " << v.str() << "\n";
        break;
    case Format::Json: {
        ordered_json obj = envelope("jumps", input);
        ordered_json rows = ordered_json::array();
        for (const auto& [w, v] : j.support()) {
            ordered_json row;
            row["angle"] = w.str();
            row["jump"] = v.str();
            rows.push_back(row);
        }
        obj["jumps"] = rows;
        dump(out, obj);
        break;
    }
    case Format::Csv:
        out << "angle,jump\n";
        for (const auto& [w, v] : j.support())
            out << w.str() << "," << v.str() << "\n";
        break;
    }
}

void emit_sig_at(std::ostream& out, Format f, const std::string& input, const UnitAngle& w,
                 const mpq_class& sig)
{
    switch (f) {
    case Format::Text:
        out << "sigma(" << w.str() << ") = " << sig.get_str() << "\n";
        break;
    case Format::Json: {
        ordered_json j = envelope("signature", input);
        j["angle"] = w.str();
        j["signature"] = sig.get_str();
        dump(out, j);
        break;
    }
    case Format::Csv:
        out << "angle,signature\n" << w.str() << "," << sig.get_str() << "\n";
        break;
    }
}

void emit_disc_expr(std::ostream& out, Format f, const std::string& input,
                    const CanonicalDisc& d)
{
    switch (f) {
    case Format::Text:
        out << d.str() << "\n";
        break;
    case Format::Json: {
        ordered_json j = envelope("disc", input);
        j["kind"] = "expression";
        j["disc"] = disc_json(d);
        j["trivial"] = d.is_trivial();
        dump(out, j);
        break;
    }
    case Format::Csv:
        out << "root\n";
        for (const UnitAngle& w : d.roots())
            out << w.str() << "\n";
        break;
    }
}

void emit_disc_char(std::ostream& out, Format f, const std::string& input, long p, long a,
                    const std::string& mode, const CanonicalDisc& d)
{
    switch (f) {
    case Format::Text:
        out << d.str() << "\n";
        break;
    case Format::Json: {
        ordered_json j = envelope("disc", input);
        j["kind"] = "character";
        j["p"] = p;
        j["a"] = a;
        j["mode"] = mode;
        j["disc"] = disc_json(d);
        j["trivial"] = d.is_trivial();
        dump(out, j);
        break;
    }
    case Format::Csv:
        out << "root\n";
        for (const UnitAngle& w : d.roots())
            out << w.str() << "\n";
        break;
    }
}

void emit_twisted(std::ostream& out, Format f, const std::string& input, long p, long d,
                  const TwistedAlex& ta)
{
    switch (f) {
    case Format::Text:
        out << "poly = " << ta.poly.str() << "\n";
        out << "(t-1) exponent = " << ta.t1_exp << "\n";
        out << "disc prefactor exponent e = " << ta.e << "\n";
        break;
    case Format::Json: {
        ordered_json j = envelope("twisted", input);
        j["p"] = p;
        j["d"] = d;
        j["poly"] = ta.poly.str();
        j["t1_exp"] = ta.t1_exp;
        j["e"] = ta.e;
        dump(out, j);
        break;
    }
    case Format::Csv:
        out << "key,value\n";
        out << "p," << p << "\n";
        out << "d," << d << "\n";
        out << "poly," << csv_quote(ta.poly.str()) << "\n";
        out << "t1_exp," << ta.t1_exp << "\n";
        out << "e," << ta.e << "\n";
        break;
    }
}

void emit_deficiency(std::ostream& out, Format f, const std::string& input,
                     const DeficiencyResult& r)
{
    switch (f) {
    case Format::Text:
        text_deficiency(out, r);
        break;
    case Format::Json: {
        ordered_json j = envelope("deficiency", input);
        j.update(deficiency_json(r));
        dump(out, j);
        break;
    }
    case Format::Csv:
        out << "key,value\n";
        out << "word," << csv_quote(r.word.str()) << "\n";
        out << "p," << r.p << "\n";
        out << "certified," << boolstr(r.certified) << "\n";
        out << "fast_path," << boolstr(r.fast_path) << "\n";
        out << "cross_checked," << boolstr(r.cross_checked) << "\n";
        break;
    }
}

void emit_independence(std::ostream& out, Format f, const std::string& input,
                       const IndependenceResult& r)
{
    switch (f) {
    case Format::Text:
        text_independence(out, r);
        break;
    case Format::Json: {
        ordered_json j = envelope("independence", input);
        j.update(independence_json(r));
        dump(out, j);
        break;
    }
    case Format::Csv:
        out << "key,value\n";
        out << "word," << csv_quote(r.word.str()) << "\n";
        out << "p," << r.p << "\n";
        out << "certified," << boolstr(r.certified) << "\n";
        out << "disjoint," << boolstr(r.disjoint) << "\n";
        out << "jumps_nonzero," << boolstr(r.jumps_nonzero) << "\n";
        break;
    }
}

namespace {

std::string tuple_str(const std::vector<long>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

ordered_json case_json(const CaseWitness& w)
{
    ordered_json j;
    j["a"] = w.a;
    j["b"] = w.b;
    j["kind"] = w.kind;
    if (w.kind == "disc-parity") {
        j["val2"] = w.val2;
        j["component"] = w.component;
    } else {
        j["angle"] = w.angle.str();
        j["jump"] = w.jump.get_str();
    }
    return j;
}

} // namespace

void emit_obstruction(std::ostream& out, Format f, const std::string& input,
                      const FamilySpec& fam, const ObstructionCertificate& c)
{
    KnotExpr expr = family_expression(fam);
    switch (f) {
    case Format::Text: {
        out << "verdict = " << c.verdict << "\n";
        out << "expression = " << expr.str() << "\n";
        out << "mode = " << to_string(c.mode_run) << " (requested "
            << to_string(c.mode_requested) << ")\n";
        if (c.budget_exceeded)
            out << "budget exceeded: fell back to the structural argument\n";
        out << "hypotheses:\n";
        for (const auto& h : c.hypotheses)
            out << "  [" << (h.pass ? "pass" : "fail") << "] " << h.name << ": " << h.detail
                << "\n";
        if (c.chosen >= 0)
            out << "chosen member = " << c.chosen << "\n";
        if (c.deficiency)
            out << "deficiency: " << (c.deficiency->certified ? "certified" : "refuted")
                << " (" << c.deficiency->detail << ")\n";
        if (c.independence)
            out << "independence: " << (c.independence->certified ? "certified" : "refuted")
                << " (" << c.independence->detail << ")\n";
        if (c.mode_run == ObstructionMode::Exhaustive) {
            out << "enumerated cases = " << c.enumerated << "\n";
            for (const auto& w : c.cases) {
                out << "  a=" << tuple_str(w.a) << " b=" << tuple_str(w.b) << ": " << w.kind;
                if (w.kind == "disc-parity")
                    out << " val2=" << w.val2 << " component=" << tuple_str(w.component);
                else
                    out << " angle=" << w.angle.str() << " jump=" << w.jump.get_str();
                out << "\n";
            }
        }
        break;
    }
    case Format::Json: {
        ordered_json j = envelope("obstruction", input);
        j["expression"] = expr.str();
        ordered_json members = ordered_json::array();
        for (const auto& mem : fam) {
            ordered_json m;
            m["K"] = mem.base.str();
            m["q_odd"] = mem.q_odd;
            m["q_even"] = mem.q_even;
            m["n"] = mem.n;
            members.push_back(m);
        }
        j["family"] = members;
        j["verdict"] = c.verdict;
        j["mode_requested"] = to_string(c.mode_requested);
        j["mode_run"] = to_string(c.mode_run);
        j["budget_exceeded"] = c.budget_exceeded;
        j["chosen"] = c.chosen;
        ordered_json hyps = ordered_json::array();
        for (const auto& h : c.hypotheses) {
            ordered_json hj;
            hj["name"] = h.name;
            hj["pass"] = h.pass;
            hj["detail"] = h.detail;
            hyps.push_back(hj);
        }
        j["hypotheses"] = hyps;
        j["deficiency"] = c.deficiency ? deficiency_json(*c.deficiency) : ordered_json();
        j["independence"] =
            c.independence ? independence_json(*c.independence) : ordered_json();
        j["enumerated"] = c.enumerated;
        ordered_json cases = ordered_json::array();
        for (const auto& w : c.cases)
            cases.push_back(case_json(w));
        j["cases"] = cases;
        dump(out, j);
        break;
    }
    case Format::Csv: {
        out << "a,b,kind,val2,component,angle,jump\n";
        for (const auto& w : c.cases) {
            out << csv_quote(tuple_str(w.a)) << "," << csv_quote(tuple_str(w.b)) << ","
                << w.kind << ",";
            if (w.kind == "disc-parity")
                out << w.val2 << "," << csv_quote(tuple_str(w.component)) << ",,";
            else
                out << ",," << w.angle.str() << "," << w.jump.get_str();
            out << "\n";
        }
        break;
    }
    }
}

} // namespace cgknot
