#pragma once

// Text and JSON forms of field elements, series and certificates.
//
// Series grammar:
//   series := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)* | 'O(x^' int ')'
//   factor := atom ['^' int] | 'x' ['^' int]
//   atom   := integer | 'g' | 't' | '(' field-expression ')'
// A field factor written to the right of x^e is moved left through x^e,
// so "x*g" reads as sigma(g)*x.

#include "skewcomm/decompose.hpp"
#include "skewcomm/trace.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace skewcomm {

/// Field element in the grammar accepted by parse_series coefficients.
Elem parse_element(std::string_view text, const Field& k);

/// Without an O(x^N) term the precision is val + default_prec (val = 0 for
/// an empty sum). Throws SyntaxError (with position) or ExponentBeyondPrecision.
SkewSeries parse_series(std::string_view text, const FieldCtx& field, int default_prec);

/// Ascending "c*x^e + ... + O(x^P)"; coefficients parenthesized unless they
/// are a bare integer or a power of the generator.
std::string format_series(const SkewSeries& f);
std::string format_kseries(const KSeries& f);

nlohmann::ordered_json series_to_json(const SkewSeries& f);
SkewSeries series_from_json(const nlohmann::ordered_json& j, const FieldCtx& field);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);
/// Throws SyntaxError on schema violations and InvalidField on bad field text.
Certificate certificate_from_json(const nlohmann::ordered_json& j);

}  // namespace skewcomm
