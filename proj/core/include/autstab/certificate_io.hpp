#pragma once

#include <string>

#include "autstab/closure.hpp"

namespace autstab {

// Certificate wire format, schema_version 1: a single JSON object
//   { schema_version, signature, field, seed, cap, steps, coverage }
// with elements and scalars as canonical strings, automorphisms stored by
// family tag plus parameters (never by raw images), and coverage keyed by
// monomial strings. Serialization is deterministic (sorted keys, two-space
// indent, trailing newline), so equal certificates produce identical bytes.
std::string certificate_to_json(const ClosureCertificate& cert);

// Strict parse: unknown kinds or families, missing fields, malformed
// elements, or a bad schema_version throw BadCertificate. Parsing does not
// replay anything; verify_certificate does.
ClosureCertificate certificate_from_json(const std::string& text);

// File helpers; IoError on unreadable or unwritable paths.
void write_certificate_file(const std::string& path, const ClosureCertificate& cert);
ClosureCertificate read_certificate_file(const std::string& path);

}  // namespace autstab
