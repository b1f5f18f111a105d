#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tweetcraft/features/decoration.h"

namespace tweetcraft::features {

// CSV with header `id,<schema column names...>`.
void write_decoration_csv(std::ostream& out, const std::vector<std::string>& ids,
                          const std::vector<DecorationVector>& rows);

}  // namespace tweetcraft::features
