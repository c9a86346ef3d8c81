#include "report.hpp"

#include <sstream>

namespace dio::cli {

namespace {

// Certified intervals out of a deep sweep can carry rationals with
// thousands of digits; reports outward-round them to this many bits —
// still valid enclosures, just readable and compact. (Verdicts are
// computed upstream on the exact forms; this is presentation only.)
constexpr long kRenderBits = 96;

RatInterval coarse(const RatInterval& x) { return x.round_outward(kRenderBits); }

XReal coarse(const XReal& x) {
    return x.is_infinite() ? x : XReal(x.enclosure().round_outward(kRenderBits));
}

const char* method_name(EstimateMethod m) {
    return m == EstimateMethod::slope ? "slope" : "pointwise";
}

std::string frac(const Rational& r) { return to_fraction_string(r); }

std::string vec_str(const std::vector<Int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].get_str();
    }
    return s + "]";
}

// One CSV row in the fixed 11-column layout.
struct Row {
    std::string section, id, instance, status;
    std::string a_lo, a_hi, b_lo, b_hi, c_lo, c_hi;
    std::string note;
};

void emit(std::string& out, const Row& r) {
    const std::string* cells[] = {&r.section, &r.id,   &r.instance, &r.status, &r.a_lo, &r.a_hi,
                                  &r.b_lo,    &r.b_hi, &r.c_lo,     &r.c_hi,   &r.note};
    for (std::size_t i = 0; i < 11; ++i) {
        if (i) out += ',';
        out += csv_escape(*cells[i]);
    }
    out += "\r\n";
}

void interval_cells(const RatInterval& x, std::string& lo, std::string& hi) {
    lo = frac(x.lo);
    hi = frac(x.hi);
}

void xreal_cells(const XReal& x, std::string& lo, std::string& hi) {
    if (x.is_infinite()) {
        lo = hi = "inf";
        return;
    }
    interval_cells(x.enclosure(), lo, hi);
}

}  // namespace

std::string csv_escape(const std::string& field) {
    const bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ordered_json rational_json(const Rational& r) {
    ordered_json j;
    j["num"] = r.get_num().get_str();
    j["den"] = r.get_den().get_str();
    j["approx"] = to_decimal_string(r, 15);
    return j;
}

ordered_json interval_json(const RatInterval& x) {
    ordered_json j;
    j["lo"] = rational_json(x.lo);
    j["hi"] = rational_json(x.hi);
    return j;
}

ordered_json xreal_json(const XReal& x) {
    if (x.is_infinite()) return ordered_json("inf");
    return interval_json(x.enclosure());
}

int exit_code_for(const std::vector<CheckResult>& checks) {
    bool any_fails = false, any_holds = false, any_inconclusive = false;
    for (const auto& c : checks) {
        any_fails |= c.status == CheckStatus::fails;
        any_holds |= c.status == CheckStatus::holds;
        any_inconclusive |= c.status == CheckStatus::inconclusive;
    }
    if (any_fails) return 2;
    if (!any_holds && any_inconclusive) return 3;
    return 0;
}

ordered_json Report::to_json() const {
    ordered_json j;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input"] = input;
    {
        ordered_json c;
        c["precision_bits"] = config.precision_bits;
        c["ceiling_bits"] = config.ceiling_bits;
        c["burn_in"] = config.burn_in;
        j["config"] = c;
    }
    j["rational_target"] = rational_target;
    j["notes"] = notes;

    if (!values.empty()) {
        ordered_json v;
        for (const auto& [name, r] : values) v[name] = rational_json(r);
        j["values"] = v;
    }
    if (value) j["value"] = interval_json(coarse(*value));
    if (!quotients.empty()) {
        ordered_json q = ordered_json::array();
        for (const auto& a : quotients) q.push_back(a.get_str());
        j["quotients"] = q;
    }
    if (!convergents.empty()) {
        ordered_json cs = ordered_json::array();
        for (const auto& [p, q] : convergents) {
            ordered_json c;
            c["p"] = p.get_str();
            c["q"] = q.get_str();
            cs.push_back(c);
        }
        j["convergents"] = cs;
    }
    if (!triples.empty()) {
        ordered_json qn = ordered_json::array();
        ordered_json ts = ordered_json::array();
        for (const auto& t : triples) {
            qn.push_back(t.x0.get_str());
            ordered_json e;
            e["n"] = t.n;
            e["x0"] = t.x0.get_str();
            e["x1"] = t.x1.get_str();
            e["x2"] = t.x2.get_str();
            e["hankel"] = t.hankel().get_str();
            ts.push_back(e);
        }
        j["Q"] = qn;
        j["triples"] = ts;
    }
    if (growth) {
        ordered_json g;
        ordered_json rows = ordered_json::array();
        for (const auto& row : growth->rows) {
            ordered_json e;
            e["n"] = row.n;
            e["ratio"] = interval_json(coarse(row.ratio_19));
            e["log_ratio"] = interval_json(coarse(row.exponent_20));
            rows.push_back(e);
        }
        g["rows"] = rows;
        g["ratio_limit"] = interval_json(coarse(growth->ratio_limit));
        j["growth"] = g;
    }
    if (!estimates.empty()) {
        ordered_json es;
        for (const auto& [label, e] : estimates) {
            ordered_json o;
            o["ordinary"] = xreal_json(coarse(e.ordinary));
            o["uniform"] = xreal_json(coarse(e.uniform));
            o["method"] = method_name(e.method);
            o["burn_in"] = e.burn_in;
            o["sample_count"] = e.sample_count;
            o["height_first"] = e.height_range.first.get_str();
            o["height_last"] = e.height_range.second.get_str();
            es[label] = o;
        }
        j["estimates"] = es;
    }
    if (!checks.empty()) {
        ordered_json cs = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json e;
            e["id"] = c.id;
            e["instance"] = c.instance;
            e["status"] = to_string(c.status);
            e["lhs"] = interval_json(coarse(c.lhs));
            e["rhs"] = interval_json(coarse(c.rhs));
            e["slack"] = interval_json(coarse(c.slack));
            e["note"] = c.note;
            cs.push_back(e);
        }
        j["checks"] = cs;
    }
    if (!sequences.empty()) {
        ordered_json ss;
        for (const auto& [label, seq] : sequences) {
            ordered_json recs = ordered_json::array();
            for (const auto& rec : seq.records) {
                ordered_json e;
                e["height"] = rec.height.get_str();
                ordered_json x = ordered_json::array();
                for (const auto& xi : rec.x) x.push_back(xi.get_str());
                e["x"] = x;
                ordered_json nn = ordered_json::array();
                for (const auto& ni : rec.nearest) nn.push_back(ni.get_str());
                e["nearest"] = nn;
                e["error"] = rec.exact_zero ? ordered_json("0") : interval_json(coarse(rec.error));
                recs.push_back(e);
            }
            ss[label] = recs;
        }
        j["minimal_points"] = ss;
    }

    {
        std::size_t nrecords = 0;
        for (const auto& [label, seq] : sequences) nrecords += seq.records.size();
        ordered_json w;
        w["records"] = nrecords;
        w["estimates"] = estimates.size();
        w["checks"] = checks.size();
        j["work"] = w;
    }
    if (config.wall_clock) j["wall_ms"] = wall_ms;
    return j;
}

std::string Report::render_json() const { return to_json().dump(2) + "\n"; }

std::string Report::render_csv() const {
    std::string out = "section,id,instance,status,a_lo,a_hi,b_lo,b_hi,c_lo,c_hi,note\r\n";
    for (const auto& n : notes) emit(out, Row{.section = "note", .note = n});
    for (const auto& [name, r] : values)
        emit(out, Row{.section = "value", .id = name, .a_lo = frac(r), .a_hi = frac(r)});
    if (value) {
        Row row{.section = "value", .id = "target"};
        interval_cells(coarse(*value), row.a_lo, row.a_hi);
        emit(out, row);
    }
    for (std::size_t i = 0; i < quotients.size(); ++i)
        emit(out, Row{.section = "quotient",
                      .id = std::to_string(i),
                      .a_lo = quotients[i].get_str(),
                      .a_hi = quotients[i].get_str()});
    for (const auto& [p, q] : convergents)
        emit(out, Row{.section = "convergent", .a_lo = p.get_str(), .b_lo = q.get_str()});
    for (const auto& t : triples)
        emit(out, Row{.section = "triple",
                      .id = std::to_string(t.n),
                      .a_lo = t.x0.get_str(),
                      .b_lo = t.x1.get_str(),
                      .c_lo = t.x2.get_str(),
                      .note = "hankel=" + t.hankel().get_str()});
    if (growth) {
        for (const auto& row : growth->rows) {
            Row r{.section = "growth", .id = std::to_string(row.n)};
            interval_cells(coarse(row.ratio_19), r.a_lo, r.a_hi);
            interval_cells(coarse(row.exponent_20), r.b_lo, r.b_hi);
            emit(out, r);
        }
        Row lim{.section = "growth", .id = "limit"};
        interval_cells(coarse(growth->ratio_limit), lim.a_lo, lim.a_hi);
        emit(out, lim);
    }
    for (const auto& [label, e] : estimates) {
        Row r{.section = "estimate", .id = label, .instance = method_name(e.method)};
        xreal_cells(coarse(e.ordinary), r.a_lo, r.a_hi);
        xreal_cells(coarse(e.uniform), r.b_lo, r.b_hi);
        r.c_lo = e.height_range.first.get_str();
        r.c_hi = e.height_range.second.get_str();
        r.note = "burn_in=" + std::to_string(e.burn_in) +
                 " samples=" + std::to_string(e.sample_count);
        emit(out, r);
    }
    for (const auto& c : checks) {
        Row r{.section = "check", .id = c.id, .instance = c.instance,
              .status = to_string(c.status), .note = c.note};
        interval_cells(coarse(c.lhs), r.a_lo, r.a_hi);
        interval_cells(coarse(c.rhs), r.b_lo, r.b_hi);
        interval_cells(coarse(c.slack), r.c_lo, r.c_hi);
        emit(out, r);
    }
    for (const auto& [label, seq] : sequences)
        for (const auto& rec : seq.records) {
            Row r{.section = "record", .id = label, .instance = rec.height.get_str()};
            if (rec.exact_zero) {
                r.a_lo = r.a_hi = "0";
            } else {
                interval_cells(coarse(rec.error), r.a_lo, r.a_hi);
            }
            r.note = "x=" + vec_str(rec.x) + " nearest=" + vec_str(rec.nearest);
            emit(out, r);
        }
    return out;
}

std::string Report::render_text() const {
    std::ostringstream os;
    os << command << " " << input << "\n";
    if (rational_target) os << "rational target\n";
    for (const auto& n : notes) os << "note: " << n << "\n";
    for (const auto& [name, r] : values)
        os << name << " = " << frac(r) << " ~ " << to_decimal_string(r) << "\n";
    if (value)
        os << "value ~ " << to_decimal_string(value->midpoint()) << "  (width "
           << to_decimal_string(value->width(), 3) << ")\n";
    if (!quotients.empty()) {
        os << "quotients:";
        for (const auto& a : quotients) os << ' ' << a.get_str();
        os << "\n";
    }
    for (const auto& [p, q] : convergents)
        os << "convergent " << p.get_str() << "/" << q.get_str() << "\n";
    for (const auto& t : triples)
        os << "triple n=" << t.n << "  (" << t.x0.get_str() << ", " << t.x1.get_str() << ", "
           << t.x2.get_str() << ")  hankel " << t.hankel().get_str() << "\n";
    if (growth) {
        for (const auto& row : growth->rows)
            os << "growth n=" << row.n << "  ratio ~ "
               << to_decimal_string(row.ratio_19.midpoint(), 12) << "  log-ratio ~ "
               << to_decimal_string(row.exponent_20.midpoint(), 12) << "\n";
        os << "growth limit ~ " << to_decimal_string(growth->ratio_limit.midpoint(), 12) << "\n";
    }
    for (const auto& [label, e] : estimates)
        os << "estimate " << label << " [" << method_name(e.method) << "]  ordinary ~ "
           << e.ordinary.to_string(8) << "  uniform ~ " << e.uniform.to_string(8) << "  ("
           << e.sample_count << " samples, heights " << e.height_range.first.get_str() << ".."
           << e.height_range.second.get_str() << ", burn-in " << e.burn_in << ")\n";
    for (const auto& c : checks) {
        os << "check " << c.id;
        if (!c.instance.empty()) os << " [" << c.instance << "]";
        os << ": " << to_string(c.status) << "  slack ~ "
           << to_decimal_string(c.slack.midpoint(), 6);
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    for (const auto& [label, seq] : sequences) {
        os << "minimal points " << label << ": " << seq.records.size() << " records";
        if (!seq.records.empty())
            os << ", heights " << seq.records.front().height.get_str() << ".."
               << seq.records.back().height.get_str();
        os << "\n";
        for (const auto& rec : seq.records) {
            os << "  H=" << rec.height.get_str() << "  x=" << vec_str(rec.x) << "  err ~ ";
            if (rec.exact_zero)
                os << "0 (exact)";
            else
                os << to_decimal_string(rec.error.midpoint(), 6);
            os << "\n";
        }
    }
    if (config.wall_clock) os << "wall_ms " << wall_ms << "\n";
    return os.str();
}

}  // namespace dio::cli
