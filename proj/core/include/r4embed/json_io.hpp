#ifndef R4EMBED_JSON_IO_HPP
#define R4EMBED_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "r4embed/complex.hpp"
#include "r4embed/embed.hpp"
#include "r4embed/homology.hpp"
#include "r4embed/matrix.hpp"
#include "r4embed/presentation.hpp"
#include "r4embed/verify.hpp"

namespace r4embed {

// Schema: {"generators": [...], "relators": [[["a", 3], ["b", -1]], ...]}.
// Exponents outside the int64 range are emitted and accepted as decimal
// strings.
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

// {"vertices": N, "edges": [[u,v],...], "triangles": [[u,v,w],...],
//  "labels": {"e:u-v": "annulus:0", ...}}
nlohmann::json complex_to_json(const SimplicialComplex2& k);
SimplicialComplex2 complex_from_json(const nlohmann::json& j);

// Complex plus exact coordinates "p/q" per axis, gadget intervals and
// parameters, frame constants and the certified delta lower bound.
nlohmann::json realized_to_json(const RealizedComplex& rc);
RealizedComplex realized_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const nlohmann::json& j);

// Plain text matrix: one row per line, space-separated integers.
std::string matrix_to_text(const IntegerMatrix& m);
IntegerMatrix matrix_from_text(const std::string& text);

nlohmann::json report_to_json(const IntersectionReport& r);
nlohmann::json sigma_to_json(const SigmaCertificate& c);
nlohmann::json decomposition_to_json(const AbelianDecomposition& d);

// Float projection onto (x1, x2, x3) in OFF format, triangles as faces.
std::string realized_to_off(const RealizedComplex& rc);

Rational rational_from_string(const std::string& s);

}  // namespace r4embed

#endif
