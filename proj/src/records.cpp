#include "trident/records.hpp"

#include <string_view>

namespace trident {

namespace detail {
extern const std::string_view kRecordsJson;
}

const json& records() {
  static const json data = json::parse(detail::kRecordsJson);
  return data;
}

}  // namespace trident
