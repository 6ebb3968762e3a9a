#include <doctest.h>

#include <sstream>

#include "dyadic/criteria.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/io.hpp"
#include "dyadic/mask.hpp"
#include "dyadic/subdivision.hpp"

#include <json.hpp>

using dyadic::Mask;
using dyadic::Mode;

TEST_CASE("frame CSV uses exact decimals and a fixed header") {
  const auto frame = dyadic::cascade(Mask({0.25, 0.75, 0.75, 0.25}), 2, Mode::dyadic);
  std::ostringstream out;
  dyadic::write_frame_csv(out, frame);
  const std::string text = out.str();
  CHECK(text.rfind("t,value\n", 0) == 0);
  CHECK(text.find("\n0.25,") != std::string::npos);
  CHECK(text.find("\n1.75,") != std::string::npos);

  std::ostringstream again;
  dyadic::write_frame_csv(again, frame);
  CHECK(again.str() == text);  // byte-identical across runs
}

TEST_CASE("matrix CSV carries the dimension header") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 3, 4;
  std::ostringstream out;
  dyadic::write_matrix_csv(out, "T0", m);
  CHECK(out.str() == "# T0 N=2\n1,2\n3,4\n");
}

TEST_CASE("jsr estimate serializes to the four stable fields") {
  const auto j = nlohmann::json::parse(dyadic::jsr_to_json({0.4, 0.5, 12, "01"}));
  CHECK(j["lower"] == 0.4);
  CHECK(j["upper"] == 0.5);
  CHECK(j["depth"] == 12);
  CHECK(j["witness"] == "01");
}

TEST_CASE("verdict JSON exposes the stable schema") {
  const auto verdict = dyadic::analyze(Mask({0.4, -0.1, 0.6, 1.1}));
  const auto j = nlohmann::json::parse(dyadic::verdict_to_json(verdict));
  CHECK(j["necessary_ok"] == true);
  CHECK(j["overall"] == "converges");
  CHECK(j["deciding_rule"] == "four_coefficient");
  CHECK(j["jsr"]["lower"] == 0.5);
  CHECK(j["jsr"]["upper"] == 0.5);
  CHECK(j["jsr"]["witness"].is_string());
  CHECK(j["holder"]["lo"] == 1.0);
  CHECK(j["holder"]["hi"] == 1.0);
  CHECK(j["probe"]["verdict"] == "converging");
  CHECK(j["probe"]["ratios"].is_array());
  REQUIRE(j["rules"].is_array());
  bool found = false;
  for (const auto& rule : j["rules"]) {
    if (rule["name"] == "four_coefficient") {
      found = true;
      CHECK(rule["applied"] == true);
      CHECK(rule["verdict"] == "converges");
    }
  }
  CHECK(found);
}

TEST_CASE("SVG output is a single polyline document") {
  const auto frame = dyadic::cascade(Mask({0.3, 0.1, 0.7, 0.9}), 4, Mode::dyadic);
  std::ostringstream out;
  dyadic::write_frame_svg(out, frame);
  const std::string text = out.str();
  CHECK(text.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
        std::string::npos);
  CHECK(text.find("<polyline") != std::string::npos);
  CHECK(text.find("</svg>") != std::string::npos);
}

TEST_CASE("mask list parsing") {
  CHECK(dyadic::parse_mask_list("0.4,-0.1,0.6,1.1") ==
        std::vector<double>{0.4, -0.1, 0.6, 1.1});
  CHECK(dyadic::parse_mask_list(" 1 , 2 ") == std::vector<double>{1.0, 2.0});
  CHECK_THROWS_AS(dyadic::parse_mask_list("1,abc"), dyadic::ParseError);
  CHECK_THROWS_AS(dyadic::parse_mask_list(""), dyadic::ParseError);
}

TEST_CASE("affine pair file parsing") {
  std::istringstream good(
      "# simple 1d pair\n"
      "1\n"
      "0.5 0\n"
      "0.5 0.5\n");
  const auto pair = dyadic::parse_affine_pair(good);
  CHECK(pair.dimension() == 1);
  CHECK(pair.a0.linear(0, 0) == 0.5);
  CHECK(pair.a1.translation(0) == 0.5);

  std::istringstream truncated("2\n1 0 0\n");
  CHECK_THROWS_AS(dyadic::parse_affine_pair(truncated), dyadic::ParseError);

  std::istringstream empty("");
  CHECK_THROWS_AS(dyadic::parse_affine_pair(empty), dyadic::ParseError);
}
