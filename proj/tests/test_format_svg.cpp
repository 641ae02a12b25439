#include <gtest/gtest.h>

#include <locale>
#include <sstream>

#include "macroq/format.hpp"
#include "macroq/random.hpp"
#include "macroq/svg.hpp"

using namespace macroq;

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(2.0435512984992004), "2.0435512985");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(1.5e-20), "1.5e-20");
  EXPECT_EQ(round_significant(1.0 / 3.0), 0.333333333333);
}

namespace {

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

}  // namespace

TEST(Format, IgnoresTheGlobalLocale) {
  const std::locale saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  std::ostringstream os;
  LinePlot plot;
  plot.width = 1200;
  plot.series.push_back({"", {0, 1500}, {1.25, 2}, false});
  write_svg(os, plot);
  std::ostringstream grouped;
  grouped << 1500;
  std::locale::global(saved);
  EXPECT_EQ(grouped.str(), "1.500");  // the facet is active
  EXPECT_EQ(format_number(1.25), "1.25");
  EXPECT_NE(os.str().find("width=\"1200\""), std::string::npos);
  EXPECT_NE(os.str().find(">1400<"), std::string::npos);
}

TEST(Random, DeriveSeedSeparatesKeys) {
  EXPECT_EQ(derive_seed(1, 8, 0), derive_seed(1, 8, 0));
  EXPECT_NE(derive_seed(1, 8, 0), derive_seed(1, 8, 1));
  EXPECT_NE(derive_seed(1, 8, 0), derive_seed(2, 8, 0));
}

TEST(Random, UniformAndBelowRanges) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(rng.below(7), 7u);
  }
}

TEST(Svg, ContainsPolylineAxesAndReference) {
  LinePlot plot;
  plot.title = "a < b";
  plot.series.push_back({"s=2", {0, 1, 2}, {2, 3, 2.5}, true});
  plot.reference_y = 2.0;
  std::ostringstream os;
  write_svg(os, plot);
  const std::string svg = os.str();
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(svg.find("a &lt; b"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Svg, EmptyPlotIsStillValid) {
  std::ostringstream os;
  write_svg(os, LinePlot{});
  EXPECT_NE(os.str().find("</svg>"), std::string::npos);
}
