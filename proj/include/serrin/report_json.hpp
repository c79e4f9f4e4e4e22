#pragma once

#include <string>
#include <vector>

#include "serrin/kernels.hpp"
#include "serrin/verify.hpp"

namespace serrin {

/// Minimal deterministic JSON emitter.  Numbers are written with %.17g
/// (round-trip exact for 64-bit floats), keys in insertion order, no
/// whitespace variation, so identical inputs yield byte-identical output.
/// NaN and infinities, which JSON cannot carry, are emitted as null.
class JsonWriter {
  public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& v);
    JsonWriter& value(const char* v);
    JsonWriter& null();

    const std::string& str() const { return out_; }

  private:
    void separate();

    std::string out_;
    std::vector<bool> need_comma_;
    bool pending_key_ = false;
};

/// %.17g formatting used for every number the CLI emits (JSON and CSV).
std::string format_double(double v);

std::string json_escape(const std::string& s);

/// RFC-4180 field quoting: fields containing comma, quote or newline are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(const std::string& s);

void write_report(JsonWriter& w, const IdentityReport& rep);

/// The sweep CSV document: header alpha,gamma,n,quantity,value,flag and one
/// row per grid cell, row-major (alpha outer), LF line endings.
std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepCell>& cells);

}  // namespace serrin
