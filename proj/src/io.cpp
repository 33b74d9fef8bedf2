#include "nsdiv/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nsdiv/errors.hpp"

namespace nsdiv {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

void check_fields(const json& obj, const std::string& where, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) fail(where, "unknown field \"" + key + "\"");
    for (const auto& key : required)
        if (!obj.contains(key)) fail(where, "missing field \"" + key + "\"");
}

int get_dimension(const json& doc) {
    const auto& n = doc.at("n");
    if (!n.is_number_integer()) fail("n", "expected an integer");
    const auto v = n.get<long long>();
    if (v < 1 || v > kMaxDimension) throw DomainError("n: dimension must lie in [1, 32], got " + std::to_string(v));
    return static_cast<int>(v);
}

Integer get_integer(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Integer(v.dump());
    if (v.is_string()) {
        const Rational q = [&] {
            try {
                return parse_rational(v.get<std::string>());
            } catch (const ParseError& e) {
                fail(where, e.what());
            }
        }();
        if (q.get_den() != 1) fail(where, "expected an integer");
        return q.get_num();
    }
    fail(where, "expected an integer");
}

IntMatrix get_int_rows(const json& rows, const std::string& where, std::size_t width) {
    if (!rows.is_array()) fail(where, "expected an array of rows");
    IntMatrix out(0, width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!rows[i].is_array()) fail(w, "expected an array");
        if (rows[i].size() != width)
            throw DomainError(w + ": expected " + std::to_string(width) + " entries, got " +
                              std::to_string(rows[i].size()));
        std::vector<Integer> r;
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            r.push_back(get_integer(rows[i][j], w + "[" + std::to_string(j) + "]"));
        out.append_row(r);
    }
    return out;
}

json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json rational_json(const Rational& q) {
    if (q.get_den() == 1) return integer_json(q.get_num());
    return to_string(q);
}

json int_vector_json(std::span<const Integer> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(integer_json(x));
    return out;
}

json int_rows_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(int_vector_json(m.row(i)));
    return out;
}

std::string vector_text(std::span<const Integer> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string theta_projected_labels(int n) {
    // b_k numbers the ambient pairs in order with (n, 2n) removed.
    const AmbientIndexing idx(n);
    std::string s;
    int k = 0;
    for (const auto& [i, j] : idx.pairs()) {
        if (i == n && j == 2 * n) continue;
        if (k) s += " ";
        s += "b" + std::to_string(++k) + "=a" + std::to_string(i) + (2 * n > 9 ? "_" : "") + std::to_string(j);
        if (j == i + n && i < n) s += "-a" + std::to_string(n) + (2 * n > 9 ? "_" : "") + std::to_string(2 * n);
    }
    return s;
}

std::string basis_header(const PolarizedNS& pns) {
    std::ostringstream os;
    const int n = pns.n();
    os << "# NS(A) rank " << pns.rank() << ", NS(A,Theta) rank " << pns.quotient_rank() << "\n";
    os << "# coordinates are taken in the quotient basis below (theta-projected: " << theta_projected_labels(n)
       << ")\n";
    for (std::size_t i = 0; i < pns.quotient_rank(); ++i)
        os << "#   e" << i + 1 << " = " << vector_text(theta_project(n, pns.quotient_basis().row(i))) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

Problem load_period_document(const json& doc) {
    check_fields(doc, "document", {"n", "symbols", "tau", "quotient_basis", "sample"}, {"n", "tau"});
    const int n = get_dimension(doc);

    std::vector<SymbolTable::Symbol> symbols;
    if (doc.contains("symbols")) {
        const auto& arr = doc["symbols"];
        if (!arr.is_array()) fail("symbols", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string w = "symbols[" + std::to_string(i) + "]";
            check_fields(arr[i], w, {"name", "square"}, {"name"});
            if (!arr[i]["name"].is_string()) fail(w + ".name", "expected a string");
            SymbolTable::Symbol s{arr[i]["name"].get<std::string>(), std::nullopt};
            if (arr[i].contains("square") && !arr[i]["square"].is_null()) {
                const auto& sq = arr[i]["square"];
                if (sq.is_string()) {
                    try {
                        s.square = parse_rational(sq.get<std::string>());
                    } catch (const ParseError& e) {
                        fail(w + ".square", e.what());
                    }
                } else if (sq.is_number_integer()) {
                    s.square = Rational(get_integer(sq, w + ".square"));
                } else {
                    fail(w + ".square", "expected a rational string or null");
                }
            }
            symbols.push_back(std::move(s));
        }
    }
    SymbolTablePtr table;
    try {
        table = std::make_shared<const SymbolTable>(std::move(symbols));
    } catch (const ParseError& e) {
        fail("symbols", e.what());
    } catch (const std::invalid_argument& e) {
        fail("symbols", e.what());
    }

    const auto& t = doc["tau"];
    if (!t.is_array()) fail("tau", "expected an array of rows");
    std::vector<std::vector<PolyScalar>> entries;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string wi = "tau[" + std::to_string(i) + "]";
        if (!t[i].is_array()) fail(wi, "expected an array");
        std::vector<PolyScalar> row;
        for (std::size_t j = 0; j < t[i].size(); ++j) {
            const std::string w = wi + "[" + std::to_string(j) + "]";
            const auto& e = t[i][j];
            if (e.is_number_integer()) {
                row.push_back(PolyScalar::constant(table, Rational(get_integer(e, w))));
            } else if (e.is_string()) {
                try {
                    row.push_back(parse_poly(e.get<std::string>(), table));
                } catch (const ParseError& err) {
                    fail(w, err.what());
                }
            } else {
                fail(w, "expected a polynomial string");
            }
        }
        entries.push_back(std::move(row));
    }
    PeriodMatrix tau(n, table, std::move(entries));
    PolarizedNS pns = ns_basis(tau);
    std::vector<std::string> warnings;

    if (doc.contains("quotient_basis")) {
        const auto& qb = doc["quotient_basis"];
        check_fields(qb, "quotient_basis", {"convention", "rows"}, {"convention", "rows"});
        if (!qb["convention"].is_string()) fail("quotient_basis.convention", "expected a string");
        const auto conv = qb["convention"].get<std::string>();
        const std::size_t width = ambient_rank(n);
        IntMatrix rows(0, width);
        if (conv == "ambient") {
            rows = get_int_rows(qb["rows"], "quotient_basis.rows", width);
        } else if (conv == "theta-projected") {
            const IntMatrix projected = get_int_rows(qb["rows"], "quotient_basis.rows", width - 1);
            for (std::size_t i = 0; i < projected.rows(); ++i) rows.append_row(theta_embed(n, projected.row(i)));
        } else {
            fail("quotient_basis.convention", "expected \"ambient\" or \"theta-projected\"");
        }
        pns = pns.with_quotient_basis(std::move(rows));
    }

    if (doc.contains("sample")) {
        const auto& s = doc["sample"];
        if (!s.is_array()) fail("sample", "expected an array of [re, im] pairs");
        std::vector<std::complex<double>> point;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::string w = "sample[" + std::to_string(i) + "]";
            if (!s[i].is_array() || s[i].size() != 2 || !s[i][0].is_number() || !s[i][1].is_number())
                fail(w, "expected [re, im]");
            point.emplace_back(s[i][0].get<double>(), s[i][1].get<double>());
        }
        if (point.size() != table->size())
            throw DomainError("sample: expected one value per symbol (" + std::to_string(table->size()) + ")");
        if (!siegel_sample_check(tau, point))
            warnings.emplace_back("Im(tau) is not positive definite at the sample point");
    }
    return Problem{n, std::move(tau), std::move(pns), std::move(warnings)};
}

Problem load_ns_document(const json& doc) {
    check_fields(doc, "document",
                 {"format", "n", "ambient_coordinates", "ns_basis", "theta", "theta_coords", "quotient_basis",
                  "quotient_basis_theta_projected"},
                 {"format", "n", "ns_basis", "quotient_basis"});
    const int n = get_dimension(doc);
    const std::size_t width = ambient_rank(n);
    IntMatrix basis = get_int_rows(doc["ns_basis"], "ns_basis", width);
    IntMatrix quotient = get_int_rows(doc["quotient_basis"], "quotient_basis", width);
    if (doc.contains("theta")) {
        const json t = doc["theta"];
        if (!t.is_array() || t.size() != width) fail("theta", "expected " + std::to_string(width) + " entries");
        for (std::size_t j = 0; j < width; ++j)
            if (get_integer(t[j], "theta[" + std::to_string(j) + "]") != TwoForm::theta(n).coeffs()[j])
                throw DomainError("theta: does not match the standard principal polarization");
    }
    PolarizedNS pns = PolarizedNS::from_basis(n, std::move(basis)).with_quotient_basis(std::move(quotient));
    return Problem{n, std::nullopt, std::move(pns), {}};
}

}  // namespace

Problem load_problem(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");
    if (doc.contains("format")) {
        if (doc["format"] != "polarized-ns") fail("format", "expected \"polarized-ns\"");
        return load_ns_document(doc);
    }
    return load_period_document(doc);
}

Problem load_problem_file(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot read " + path);
        buf << in.rdbuf();
    }
    return load_problem(buf.str());
}

Format parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw ParseError("unknown format \"" + std::string(s) + "\" (expected text, json or csv)");
}

// ---------------------------------------------------------------------------

std::string format_qform(int n, int r, const PolyScalar& q, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::text: os << q.to_string() << "\n"; break;
        case Format::json: {
            json terms = json::array();
            for (const auto& [m, c] : q.terms()) {
                json mono = json::object();
                for (std::size_t i = 0; i < m.length(); ++i)
                    if (m.exponent(i)) mono[(*q.table())[i].name] = m.exponent(i);
                terms.push_back({{"coefficient", rational_json(c)}, {"monomial", mono}});
            }
            json doc = {{"n", n}, {"r", r}, {"variables", ambient_symbol_names(n)}, {"terms", terms},
                        {"polynomial", q.to_string()}};
            os << doc.dump() << "\n";
            break;
        }
        case Format::csv: {
            os << "coefficient,monomial\n";
            for (const auto& [m, c] : q.terms()) {
                std::string mono;
                for (std::size_t i = 0; i < m.length(); ++i) {
                    if (!m.exponent(i)) continue;
                    if (!mono.empty()) mono += "*";
                    mono += (*q.table())[i].name;
                    if (m.exponent(i) > 1) mono += "^" + std::to_string(m.exponent(i));
                }
                os << to_string(c) << "," << (mono.empty() ? "1" : mono) << "\n";
            }
            break;
        }
    }
    return os.str();
}

std::string format_ns(const PolarizedNS& pns, Format f) {
    const int n = pns.n();
    std::ostringstream os;
    switch (f) {
        case Format::text: {
            os << "n = " << n << "\n";
            os << "NS(A) rank " << pns.rank() << " in Z^" << pns.ambient_rank() << "\n";
            os << "ambient coordinates:";
            for (const auto& s : ambient_symbol_names(n)) os << " " << s;
            os << "\nbasis:\n";
            for (std::size_t i = 0; i < pns.rank(); ++i) os << "  " << vector_text(pns.ns_basis().row(i)) << "\n";
            os << "theta = " << vector_text(TwoForm::theta(n).coeffs()) << " = " << vector_text(pns.theta_coords())
               << " in this basis\n";
            os << "NS(A,Theta) rank " << pns.quotient_rank() << ", basis (ambient | theta-projected):\n";
            for (std::size_t i = 0; i < pns.quotient_rank(); ++i)
                os << "  e" << i + 1 << " = " << vector_text(pns.quotient_basis().row(i)) << " | "
                   << vector_text(theta_project(n, pns.quotient_basis().row(i))) << "\n";
            break;
        }
        case Format::json: {
            json projected = json::array();
            for (std::size_t i = 0; i < pns.quotient_rank(); ++i)
                projected.push_back(int_vector_json(theta_project(n, pns.quotient_basis().row(i))));
            json doc = {{"format", "polarized-ns"},
                        {"n", n},
                        {"ambient_coordinates", ambient_symbol_names(n)},
                        {"ns_basis", int_rows_json(pns.ns_basis())},
                        {"theta", int_vector_json(TwoForm::theta(n).coeffs())},
                        {"theta_coords", int_vector_json(pns.theta_coords())},
                        {"quotient_basis", int_rows_json(pns.quotient_basis())},
                        {"quotient_basis_theta_projected", projected}};
            os << doc.dump(2) << "\n";
            break;
        }
        case Format::csv: {
            os << "kind,index";
            for (const auto& s : ambient_symbol_names(n)) os << "," << s;
            os << "\n";
            auto row = [&](const std::string& kind, std::size_t i, std::span<const Integer> v) {
                os << kind << "," << i;
                for (const auto& x : v) os << "," << x.get_str();
                os << "\n";
            };
            for (std::size_t i = 0; i < pns.rank(); ++i) row("ns", i + 1, pns.ns_basis().row(i));
            row("theta", 0, TwoForm::theta(n).coeffs());
            for (std::size_t i = 0; i < pns.quotient_rank(); ++i) row("quotient", i + 1, pns.quotient_basis().row(i));
            break;
        }
    }
    return os.str();
}

namespace {

std::string complement_text(const DivisorRecord& r) {
    return r.complement_degree ? r.complement_degree->get_str() : "-";
}

}  // namespace

std::string format_records(const PolarizedNS& pns, const std::vector<DivisorRecord>& records, Format f) {
    const int n = pns.n();
    std::ostringstream os;
    switch (f) {
        case Format::text: {
            os << basis_header(pns);
            if (n == 2) os << "# n = 2: alpha and -alpha both meet the target and are both listed\n";
            os << "# " << records.size() << " classes\n";
            for (const auto& r : records) {
                os << vector_text(r.quotient_coords) << "  d=" << r.divisor_degree.get_str()
                   << "  e=" << complement_text(r);
                for (std::size_t i = 0; i < r.q_values.size(); ++i)
                    os << "  q" << i + 2 << "=" << to_string(r.q_values[i]);
                os << "  beta=" << vector_text(r.ns_representative.coeffs()) << "\n";
            }
            break;
        }
        case Format::json: {
            for (const auto& r : records) {
                json q = json::object();
                for (std::size_t i = 0; i < r.q_values.size(); ++i)
                    q["q_" + std::to_string(i + 2)] = rational_json(r.q_values[i]);
                json rec = {{"coords", int_vector_json(r.quotient_coords)},
                            {"divisor_degree", integer_json(r.divisor_degree)},
                            {"complement_degree", r.complement_degree ? integer_json(*r.complement_degree) : json()},
                            {"q", q},
                            {"ns_representative", int_vector_json(r.ns_representative.coeffs())},
                            {"sign_pair", r.sign_pair}};
                os << rec.dump() << "\n";
            }
            break;
        }
        case Format::csv: {
            os << "coords,divisor_degree,complement_degree";
            for (int r = 2; r <= n; ++r) os << ",q_" << r;
            os << "\n";
            for (const auto& r : records) {
                os << csv_quote(vector_text(r.quotient_coords)) << "," << r.divisor_degree.get_str() << ","
                   << (r.complement_degree ? r.complement_degree->get_str() : "");
                for (const auto& q : r.q_values) os << "," << to_string(q);
                os << "\n";
            }
            break;
        }
    }
    return os.str();
}

std::string format_table(const PolarizedNS& pns, const std::vector<DivisorRecord>& records, Format f) {
    if (f != Format::text) return format_records(pns, records, f);
    const int n = pns.n();
    const std::string deg_head = n == 2 ? "(Z.Theta)" : "(Z.Theta^" + std::to_string(n - 1) + ")";
    std::vector<std::string> first{"Divisor class of Z"};
    for (const auto& r : records) first.push_back(vector_text(r.quotient_coords));
    std::size_t w0 = 0;
    for (const auto& s : first) w0 = std::max(w0, s.size());
    const std::size_t w1 = deg_head.size();
    std::ostringstream os;
    os << basis_header(pns);
    auto line = [&](const std::string& a, const std::string& b, const std::string& c) {
        os << a << std::string(w0 - a.size(), ' ') << " | " << b << std::string(w1 - std::min(w1, b.size()), ' ')
           << " | " << c << "\n";
    };
    line(first[0], deg_head, "(E.Theta)");
    for (std::size_t i = 0; i < records.size(); ++i)
        line(first[i + 1], records[i].divisor_degree.get_str(), complement_text(records[i]));
    return os.str();
}

std::string format_report(const ClassificationReport& report, const std::vector<EllipticCover>* covers, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::text:
        case Format::csv: {
            if (f == Format::csv) os << "criterion,verdict,bound,witnesses,note\n";
            for (const auto& v : report.verdicts) {
                const std::size_t count = v.witnesses.size() + (v.representation ? 1 : 0);
                if (f == Format::csv) {
                    os << v.criterion << "," << to_string(v.verdict) << "," << v.bound << "," << count << ","
                       << csv_quote(v.note) << "\n";
                    continue;
                }
                os << v.criterion << ": " << to_string(v.verdict) << " (B=" << v.bound << ")";
                if (!v.note.empty()) os << "  " << v.note;
                os << "\n";
                if (v.representation)
                    os << "  witness " << vector_text(v.representation->quotient_coords) << "  lift "
                       << vector_text(v.representation->lift.coeffs()) << "\n";
                for (const auto& w : v.witnesses)
                    os << "  witness " << vector_text(w.quotient_coords) << "  d=" << w.divisor_degree.get_str()
                       << "\n";
            }
            if (covers) {
                if (f == Format::csv) {
                    os << "\ncover_degree,coords,divisor_degree\n";
                    for (const auto& c : *covers)
                        os << c.degree.get_str() << "," << csv_quote(vector_text(c.witness.quotient_coords)) << ","
                           << c.witness.divisor_degree.get_str() << "\n";
                } else {
                    os << "elliptic covers: " << covers->size() << "\n";
                    for (const auto& c : *covers)
                        os << "  k=" << c.degree.get_str() << "  " << vector_text(c.witness.quotient_coords)
                           << "  d=" << c.witness.divisor_degree.get_str() << "\n";
                }
            }
            break;
        }
        case Format::json: {
            json verdicts = json::array();
            for (const auto& v : report.verdicts) {
                json witnesses = json::array();
                for (const auto& w : v.witnesses)
                    witnesses.push_back({{"coords", int_vector_json(w.quotient_coords)},
                                         {"divisor_degree", integer_json(w.divisor_degree)}});
                json rep;
                if (v.representation) {
                    json q = json::array();
                    for (const auto& x : v.representation->q_values) q.push_back(rational_json(x));
                    rep = {{"coords", int_vector_json(v.representation->quotient_coords)},
                           {"q", q},
                           {"lift", int_vector_json(v.representation->lift.coeffs())}};
                }
                verdicts.push_back({{"criterion", v.criterion},
                                    {"verdict", to_string(v.verdict)},
                                    {"bound", v.bound},
                                    {"note", v.note},
                                    {"representation", rep},
                                    {"witnesses", witnesses}});
            }
            json doc = {{"n", report.n}, {"verdicts", verdicts}};
            if (covers) {
                json cs = json::array();
                for (const auto& c : *covers)
                    cs.push_back({{"cover_degree", integer_json(c.degree)},
                                  {"coords", int_vector_json(c.witness.quotient_coords)},
                                  {"divisor_degree", integer_json(c.witness.divisor_degree)}});
                doc["elliptic_covers"] = cs;
            }
            os << doc.dump(2) << "\n";
            break;
        }
    }
    return os.str();
}

}  // namespace nsdiv
