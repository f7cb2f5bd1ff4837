#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "vnw/gram_opt.hpp"

namespace vnw {

using Json = nlohmann::json;

// Complex numbers serialize as [re, im]; matrices as row-major arrays.

Json toJson(const Complex& z);
Complex complexFromJson(const Json& j);

Json toJson(const CVector& v);
CVector cvectorFromJson(const Json& j);

Json toJson(const CMatrix& m);
CMatrix cmatrixFromJson(const Json& j);

/// {"n": int, "a0": [re,im], "linear": [[re,im],...], "quad": [[[re,im],...],...]}
Json toJson(const PolySpec& p);
PolySpec polyFromJson(const Json& j);

Json toJson(const SupResult& r);
Json toJson(const SignWitness& w);
Json toJson(const GramWitness& w);
Json toJson(const VaropoulosPair& p);
Json toJson(const std::vector<VaropoulosPair>& tuple);
std::vector<VaropoulosPair> tupleFromJson(const Json& j);
Json toJson(const RatioReport& r);
Json toJson(const FJFamily& f);
Json toJson(const InfToOneResult& r);

/// Real matrix as CSV, 12 significant digits, '.' decimal, no locale.
std::string matrixToCsv(const RMatrix& m);
RMatrix matrixFromCsv(const std::string& text);

/// Formats one number the way all report emitters do (12 significant digits).
std::string formatNumber(double x);

}  // namespace vnw
