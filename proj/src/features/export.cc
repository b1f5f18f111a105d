#include "tweetcraft/features/export.h"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace tweetcraft::features {

void write_decoration_csv(std::ostream& out, const std::vector<std::string>& ids,
                          const std::vector<DecorationVector>& rows) {
  if (ids.size() != rows.size()) throw std::invalid_argument("ids and rows differ in length");
  const auto& schema = FeatureSchema::decoration();
  out << "id";
  for (const auto& spec : schema.specs()) out << ',' << spec.name;
  out << '\n';
  char buf[32];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << ids[r];
    for (double v : rows[r]) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out << ',' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
    }
    out << '\n';
  }
}

}  // namespace tweetcraft::features
