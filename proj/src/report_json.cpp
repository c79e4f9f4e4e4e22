#include "serrin/report_json.hpp"

#include <cmath>
#include <cstdio>

namespace serrin {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void JsonWriter::separate() {
    if (!need_comma_.empty() && !pending_key_) {
        if (need_comma_.back()) out_ += ',';
        need_comma_.back() = true;
    }
    pending_key_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    separate();
    out_ += '{';
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    need_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separate();
    out_ += '[';
    need_comma_.push_back(false);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    separate();
    out_ += '"';
    out_ += json_escape(k);
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    separate();
    if (std::isfinite(v)) out_ += format_double(v);
    else out_ += "null";
    return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(long long v) {
    separate();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    separate();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
    separate();
    out_ += '"';
    out_ += json_escape(v);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }

JsonWriter& JsonWriter::null() {
    separate();
    out_ += "null";
    return *this;
}

void write_report(JsonWriter& w, const IdentityReport& rep) {
    w.begin_object();
    w.key("name").value(rep.name);
    w.key("lhs").value(rep.lhs);
    w.key("rhs").value(rep.rhs);
    w.key("abs_err").value(rep.abs_err);
    w.key("rel_err").value(rep.rel_err);
    w.key("tol").value(rep.tol);
    w.key("pass").value(rep.pass);
    if (rep.equality) w.key("equality").value(*rep.equality);
    if (!rep.detail.empty()) w.key("detail").value(rep.detail);
    w.end_object();
}

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepCell>& cells) {
    std::string out = "alpha,gamma,n,quantity,value,flag\n";
    const std::string qname = sweep_quantity_name(spec.quantity);
    for (const SweepCell& c : cells) {
        out += csv_field(format_double(c.alpha));
        out += ',';
        out += csv_field(format_double(c.gamma));
        out += ',';
        out += std::to_string(spec.n);
        out += ',';
        out += csv_field(qname);
        out += ',';
        out += csv_field(format_double(c.value));
        out += ',';
        out += c.flag ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace serrin
