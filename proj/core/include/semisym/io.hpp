// JSON and CSV plumbing shared by the command-line tool and the tests:
// indices, chi-vectors, tensors, matrices, stage configuration files, and
// the diagnostic reports. Uses ordered JSON throughout so identical inputs
// serialize byte for byte.
#pragma once

#include "semisym/algebra.hpp"
#include "semisym/coalgebra.hpp"
#include "semisym/context.hpp"
#include "semisym/diag.hpp"
#include "semisym/schur.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace semisym {

using Json = nlohmann::ordered_json;

Json index_json(const MultiIndex& i);
MultiIndex index_from_json(const Json& j, int n);

// {"degree": d, "terms": [{"index": [...], "coeff": "..."}]}
template <Side S>
Json chivec_json(const ChiVec<S>& x);
template <Side S>
ChiVec<S> chivec_from_json(ContextPtr ctx, const Json& j);

// {"slots": k, "terms": [{"indices": [[...], ...], "coeff": "..."}]}
template <Side S>
Json tensor_json(const TensorVec<S>& t);

// Array of rows; entries are canonical coefficient strings.
Json matrix_json(const ExactMatrix& a);
ExactMatrix matrix_from_json(const Json& j, const RingDescriptor& ring);
// One row per line, entries comma-separated.
ExactMatrix matrix_from_csv(const std::string& text, const RingDescriptor& ring);
// Dispatches on the extension: .json, otherwise CSV.
ExactMatrix load_matrix(const std::string& path, const RingDescriptor& ring);

// {"stages": [{"degree": 1, "generators": ["(1 2)", ...], "values":
// ["-1", ...]}, ...]}; stages must cover 1..max contiguously. A stage
// with no generators gets the trivial group and character.
CharacterSequence sequence_from_json(const Json& config, const RingDescriptor& ring,
                                     std::size_t max_group = PermutationGroup::default_max_order);

Json validation_json(const ValidationReport& r);
Json basis_json(const Context& ctx, int d);
Json z15_json(const Z15Report& r);
Json eisenstein_json(const EisensteinReport& r);

extern template Json chivec_json<Side::primal>(const ChiVec<Side::primal>&);
extern template Json chivec_json<Side::dual>(const ChiVec<Side::dual>&);
extern template ChiVec<Side::primal> chivec_from_json<Side::primal>(ContextPtr, const Json&);
extern template ChiVec<Side::dual> chivec_from_json<Side::dual>(ContextPtr, const Json&);
extern template Json tensor_json<Side::primal>(const TensorVec<Side::primal>&);
extern template Json tensor_json<Side::dual>(const TensorVec<Side::dual>&);

}  // namespace semisym
