#include <gtest/gtest.h>

#include <filesystem>

#include "netgalois/error.hpp"
#include "netgalois/glnr.hpp"
#include "netgalois/io.hpp"

using namespace netgalois;
using nlohmann::json;

TEST(Io, InstanceRoundTrip) {
  const InstanceSpec s = instance_from_json(json::parse(R"({"ring":{"kind":"chain","p":7,"k":2},"n":2})"));
  EXPECT_EQ(s.ring, Ring::chain(7, 2));
  EXPECT_EQ(s.n, 2u);
  const json back = instance_to_json(s);
  EXPECT_EQ(back.at("version"), kFormatVersion);
  EXPECT_EQ(instance_from_json(back).ring, s.ring);
}

TEST(Io, Shorthand) {
  EXPECT_EQ(parse_instance_shorthand("F7:2").ring, Ring::prime_field(7));
  EXPECT_EQ(parse_instance_shorthand("Z49:2").ring, Ring::chain(7, 2));
  EXPECT_EQ(parse_instance_shorthand("Z7^2:3").n, 3u);
  EXPECT_EQ(parse_instance_shorthand("Z4:2").ring, Ring::chain(2, 2));
  EXPECT_THROW(parse_instance_shorthand("Z12:2"), InputError);
  EXPECT_THROW(parse_instance_shorthand("F7"), InputError);
}

TEST(Io, RejectsUnknownVersionAndBadInstance) {
  EXPECT_THROW(instance_from_json(json::parse(R"({"version":2,"ring":{"kind":"prime_field","p":7},"n":2})")),
               InputError);
  EXPECT_THROW(instance_from_json(json::parse(R"({"ring":{"kind":"field","p":7},"n":2})")), InputError);
  EXPECT_THROW(instance_from_json(json::parse(R"({"ring":{"kind":"prime_field","p":7}})")), InputError);
}

TEST(Io, MatrixAndSubgroup) {
  const auto ctx = GaloisContext::build(Ring::prime_field(7), 2);
  const json m = json::parse("[[1, 8], [0, -1]]");
  const Matrix a = matrix_from_json(m, ctx->ring(), 2);
  EXPECT_EQ(a(0, 1), 1u);
  EXPECT_EQ(a(1, 1), 6u);
  const Subgroup b = subgroup_from_json(*ctx, json::parse(R"({"generators":[[[1,1],[0,1]]],"with_H":true})"));
  EXPECT_EQ(b.order(), 252u);
  EXPECT_THROW(subgroup_from_json(*ctx, json::parse(R"({"generators":[[[1,1],[1,1]]]})")), InputError);
}

TEST(Io, DNetFile) {
  const DNet s = dnet_from_json(json::parse(R"({"sigma":[[0,1],[2,0]]})"), 2, 2);
  EXPECT_EQ(s(0, 1), 1u);
  EXPECT_EQ(s(1, 0), 2u);
  EXPECT_EQ(dnet_from_json(dnet_to_json(s), 2, 2), s);
  EXPECT_THROW(dnet_from_json(json::parse(R"({"sigma":[[0,3],[0,0]]})"), 2, 2), InputError);
}

TEST(Io, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "netgalois-io-test" / "x.json";
  const json doc{{"version", 1}, {"a", {1, 2, 3}}};
  write_json_file(path.string(), doc);
  EXPECT_EQ(read_json_file(path.string()), doc);
  EXPECT_THROW(read_json_file((path.parent_path() / "missing.json").string()), InputError);
}
