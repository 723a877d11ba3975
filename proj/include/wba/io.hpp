#pragma once

// JSON reading and writing for every serialisable object. Parse failures
// throw Error(ParseError) with the offending path in the message.
//
// Scalars over Q are strings "p/q" (plain integers are accepted on input);
// over Q(zeta_N) they are arrays of rational coefficients of 1, zeta, ...,
// zeta^(deg-1). Fields are {"kind":"Q"} or {"kind":"Qzeta","N":n}.

#include <string>

#include "json.hpp"
#include "wba/bimre.hpp"
#include "wba/category.hpp"
#include "wba/frobenius.hpp"
#include "wba/span.hpp"
#include "wba/weak_bialgebra.hpp"

namespace wba {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
const Field& field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s, const Field& f);
Scalar scalar_from_json(const Json& j, const Field& f);
Json vector_to_json(const Vector& v, const Field& f);
Vector vector_from_json(const Json& j, const Field& f, std::size_t n);
// Row-major list of rows.
Json matrix_to_json(const Matrix& m, const Field& f);
Matrix matrix_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols);

// {"field","dim","basis","mult":[[[...]]],"unit"}
Json algebra_to_json(const FinAlgebra& a);
FinAlgebra algebra_from_json(const Json& j);
// Algebra fields plus "psi" and "frob".
Json frobenius_to_json(const FrobeniusAlgebra& r);
FrobeniusAlgebra frobenius_from_json(const Json& j);

// Algebra fields plus "comult": [[[j, l, c], ...] per basis element],
// "counit" and optionally "antipode" (matrix, column i = S(b_i)).
// The result is not validated.
Json wba_to_json(const WeakBialgebra& h);
WeakBialgebra wba_from_json(const Json& j);

// {"objects","morphisms":[{"name","src","tgt"}],"compose":{"g∘h":k},"identities":{x:id},"inverse"?}
Json category_to_json(const FiniteCategory& c);
FiniteCategory category_from_json(const Json& j);

// {"base","carrier","s":{a:x},"t":{a:x}}; a bimonoid adds "mult":{"g∘h":k} and "unit":{x:a}.
Json span_to_json(const Span& a);
Span span_from_json(const Json& j);
Json span_bimonoid_to_json(const SpanBimonoid& m);
SpanBimonoid span_bimonoid_from_json(const Json& j);

// {"R": builtin Frobenius name or inline Frobenius algebra, "dim", "left", "right"}
// with left/right lists of d^2 matrices indexed by p*d + q.
Json re_bimodule_to_json(const ReBimodule& m, const Json& r_ref);
ReBimodule re_bimodule_from_json(const Json& j, const std::shared_ptr<const ReBase>& base);
std::shared_ptr<const ReBase> re_base_from_json(const Json& r_ref);

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace wba
