#pragma once

#include <json.hpp>

#include "wfilt/descent.hpp"
#include "wfilt/filtered.hpp"

namespace wfilt {

using Json = nlohmann::ordered_json;

// A parsed input document. Which payloads are present depends on `kind`:
//   filtered_complex -> filtered
//   cubical          -> cubical_filtered (+ augmented base when given)
//   resolution       -> resolution (+ optional alternate for comparisons)
//   gysin            -> gysin (+ optional expected_h, optional square payload)
//   general_weight   -> general_weight
//   square           -> square
struct InputDocument {
    int schema = 1;
    std::string kind;
    Ring ring;

    std::optional<FilteredComplex> filtered;
    std::optional<FilteredDiagram> cubical;
    std::optional<CochainComplex> base;
    std::optional<std::map<int, ChainMap>> augmentation;
    std::optional<ResolutionDatum> resolution;
    std::optional<ResolutionDatum> alternate;
    std::optional<GysinDatum> gysin;
    std::optional<GradedModule> expected_h;
    std::optional<GysinSquare> gysin_square;       // acyclic square, center off the divisor
    std::optional<GysinMorphismDatum> blowdown;    // center inside the divisor
    std::optional<GeneralWeightDatum> general_weight;
    std::optional<SquareCohomologyDatum> square;
};

// Scalar/matrix level encoders, exposed for the report writer.
Json scalar_to_json(const Ring& ring, const Scalar& x);
Scalar scalar_from_json(const Ring& ring, const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& ring, const Json& j);
Json presentation_to_json(const ModulePresentation& p);
Json graded_to_json(const GradedModule& g);
GradedModule graded_from_json(const Ring& ring, const Json& j);

InputDocument parse_document(const Json& j);
InputDocument load_document(const std::string& path);
Json serialize_document(const InputDocument& doc);
std::string dump_document(const InputDocument& doc);  // canonical text form

}  // namespace wfilt
