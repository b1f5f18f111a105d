#include <doctest.h>

#include <cmath>
#include <limits>

#include "support/fixtures.h"
#include "tweetcraft/common/codec.h"
#include "tweetcraft/common/error.h"
#include "tweetcraft/common/matrix.h"
#include "tweetcraft/common/rng.h"
#include "tweetcraft/common/time.h"
#include "tweetcraft/common/utf8.h"

using namespace tweetcraft;
using tweetcraft::testing::at;

TEST_CASE("rfc3339 parsing handles offsets and fractions") {
  CHECK(parse_rfc3339("2016-03-01T12:00:00Z") == at(2016, 3, 1, 12));
  CHECK(parse_rfc3339("2016-03-01T14:30:00+02:30") == at(2016, 3, 1, 12));
  CHECK(parse_rfc3339("2016-03-01T07:00:00.999-05:00") == at(2016, 3, 1, 12));
  CHECK(format_rfc3339(at(2016, 3, 1, 12, 5)) == "2016-03-01T12:05:00Z");
  CHECK_THROWS_AS(parse_rfc3339("2016-03-01 12:00:00"), ValidationError);
  CHECK_THROWS_AS(parse_rfc3339("2016-13-01T12:00:00Z"), ValidationError);
  CHECK_THROWS_AS(parse_rfc3339(""), ValidationError);
}

TEST_CASE("days_between floors partial days") {
  auto t = at(2016, 3, 1, 12);
  CHECK(days_between(t, t + std::chrono::hours{24 * 21 - 1}) == 20);
  CHECK(days_between(t, t + std::chrono::hours{24 * 21}) == 21);
  CHECK(days_between(t, t - std::chrono::hours{1}) == -1);
}

TEST_CASE("float64 arrays survive base64 exactly") {
  std::vector<double> v{0.0, -0.0, 1.0 / 3.0, 1e-310, std::numeric_limits<double>::max(), -2.5};
  auto back = decode_doubles(encode_doubles(v));
  REQUIRE(back.size() == v.size());
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::signbit(back[i]) == std::signbit(v[i]));
  CHECK(std::memcmp(back.data(), v.data(), v.size() * sizeof(double)) == 0);
  CHECK(encode_doubles(std::vector<double>{1.0}) == "AAAAAAAA8D8=");
  CHECK(decode_doubles("").empty());
}

TEST_CASE("sha256 known vector") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("derived seeds are stable and stage specific") {
  CHECK(derive_seed(7, "nlp") == derive_seed(7, "nlp"));
  CHECK(derive_seed(7, "nlp") != derive_seed(7, "grouping"));
  CHECK(derive_seed(7, "nlp") != derive_seed(8, "nlp"));
}

TEST_CASE("matrix row selection and distances") {
  auto m = Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
  std::vector<std::size_t> rows{2, 0};
  auto s = m.select_rows(rows);
  CHECK(s.rows() == 2);
  CHECK(s(0, 0) == 5);
  CHECK(s(1, 1) == 2);
  CHECK(squared_distance(m.row(0), m.row(1)) == 8.0);
  CHECK(dot(m.row(0), m.row(1)) == 11.0);
}

TEST_CASE("utf8 helpers") {
  std::string s = "caf\xC3\xA9 \xF0\x9F\x98\x80";
  CHECK(utf8::count_code_points(s) == 6);
  CHECK(utf8::prefix(s, 4) == "caf\xC3\xA9");
  CHECK(utf8::suffix(s, 1) == "\xF0\x9F\x98\x80");
  std::size_t len = 0;
  CHECK(utf8::decode(s, 3, len) == U'é');
  CHECK(len == 2);
  CHECK(utf8::decode("\xFF", 0, len) == utf8::kInvalid);
  CHECK(utf8::to_lower_ascii("ABC\xC3\x89") == "abc\xC3\x89");
  CHECK(utf8::is_emoji(U'\U0001F600'));
  CHECK(utf8::is_letter(U'é'));
}
