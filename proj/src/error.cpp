#include "seir/error.hpp"

#include <utility>

namespace seir {

ExtractionError::ExtractionError(std::string origin, const std::string& what)
    : DataError(origin + ": " + what), m_origin(std::move(origin))
{}

}  // namespace seir
