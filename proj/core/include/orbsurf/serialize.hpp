#pragma once

#include "orbsurf/btsearch.hpp"
#include "orbsurf/contact.hpp"

#include <nlohmann/json.hpp>

namespace orbsurf {

// Insertion-ordered JSON keeps every emitted document byte-stable across
// runs; nothing below may iterate an unordered container into it.
using Json = nlohmann::ordered_json;

// Integers become JSON numbers while they fit in int64 and decimal strings
// beyond that; rationals are always canonical "p/q" strings (integer-valued
// ones as "p") so a field never changes JSON type with magnitude.
Json json_int(const Int& v);
Json json_rat(const Rat& v);
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);

Json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

Json to_json(const SurfaceModel& s);
// Requires basis/gram/canonical/c2; name optional; if c1_sq is present it
// must agree with the lattice arithmetic.
SurfaceModel surface_from_json(const Json& j);

Json to_json(const CoverResult& r);
Json to_json(const P1P2Record& r);
Json to_json(const BTCertificate& c);
Json to_json(const P2Disagreement& d);
Json to_json(const SearchOutcome& o);
Json to_json(const LogChernNumbers& n);
Json to_json(const BoundPolynomial& p);
Json to_json(const ContactRecord& r);

Json to_json(const TwoVarPoly& f);
TwoVarPoly poly_from_json(const Json& j);
Json to_json(const CurveGerm& g);
// {"x": [coeffs], "y": [coeffs], "T": truncation}
CurveGerm germ_from_json(const Json& j);

// Section-bound certificate {alpha, leading_coeff, threshold, assumptions}
// plus the underlying polynomials; threshold is null when no q in
// [1, q_max] works.
Json certificate_json(const SectionBound& sb, std::optional<long long> threshold_q,
                      long long q_max);

} // namespace orbsurf
