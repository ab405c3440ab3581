#include <gtest/gtest.h>

#include "hgirth/certificate.hpp"
#include "hgirth/error.hpp"

using namespace hgirth;
using namespace hgirth::planner;

namespace {

const char* const kHexE2 =
    "1159204073775261776690862886176216848666302008002320664687408801984390317738692361250120559665496054018615"
    "833963971482965138459775289447861723601827622094728187504";
const char* const kHexFinal =
    "9273632590202094213526903089409734789330416064018565317499270415875122541909538890000964477323968432148926"
    "671711771863721107678202315582893788814620976757825500032";
const char* const kOctE2 =
    "2722165287077748936679233843402550270768601507722363870514049163461580274106799319498578675117838573755790"
    "41571014271214809299682768538264248145456301138667098102284834332478770964890625";

}  // namespace

TEST(Certificate, HexagonTwoLevels) {
    const auto c = certify(6, 5, 2, 2, 3);
    EXPECT_TRUE(c.valid());
    EXPECT_EQ(*c.value("Q_2"), "5^19");
    EXPECT_EQ(*c.value("E_2"), kHexE2);
    EXPECT_EQ(*c.value("E_n"), kHexE2);
    EXPECT_EQ(*c.value("edge_bound"), "5^231");
    EXPECT_EQ(*c.value("split_factor"), "8");
    EXPECT_EQ(*c.value("final_edges"), kHexFinal);
    EXPECT_EQ(c.value("b_Q_2")->size(), 147u);
    EXPECT_EQ(mpz_class(*c.value("E_2")), 4 * mpz_class(*c.value("b_Q_1")) * mpz_class(*c.value("b_Q_2")));
    for (const auto& ch : c.checks) EXPECT_TRUE(ch.pass) << ch.name;
    EXPECT_EQ(c.first_failure(), nullptr);
}

TEST(Certificate, OctagonTwoLevels) {
    const auto c = certify(8, 2, 5, 2, 3);
    EXPECT_TRUE(c.valid());
    EXPECT_EQ(*c.value("Q_2"), "2^51");
    EXPECT_EQ(*c.value("E_2"), kOctE2);
    EXPECT_EQ(*c.value("edge_bound"), "2^616");
    EXPECT_EQ(c.value("epsilon"), nullptr);
}

TEST(Certificate, AssumptionFailureIsInvalid) {
    const auto c = certify(6, 5, 1, 1, 3);
    EXPECT_FALSE(c.valid());
    ASSERT_NE(c.first_failure(), nullptr);
    EXPECT_EQ(c.first_failure()->name, "m_at_least_2");
    const auto even = certify(8, 2, 6, 1, 3);
    EXPECT_FALSE(even.valid());
    EXPECT_EQ(even.first_failure()->name, "m_odd");
    const auto not_prime = certify(6, 4, 3, 1, 3);
    EXPECT_FALSE(not_prime.valid());
    EXPECT_EQ(not_prime.first_failure()->name, "p_prime");
}

TEST(Certificate, RejectsRTooLarge) {
    // split factor floor((1+25)/r) is 0 for r = 30.
    const auto c = certify(6, 5, 2, 1, 30);
    EXPECT_FALSE(c.valid());
}

TEST(Certificate, SerializeParseRoundTrip) {
    for (const auto& c : {certify(6, 5, 2, 2, 3), certify(8, 2, 5, 2, 3), certify(6, 5, 1, 1, 3)}) {
        const auto text = serialize(c);
        const auto back = parse_certificate(text);
        EXPECT_EQ(serialize(back), text);
        EXPECT_EQ(back.valid(), c.valid());
        EXPECT_TRUE(reverify(back));
    }
}

TEST(Certificate, TamperingIsDetected) {
    auto text = serialize(certify(6, 5, 2, 1, 3));
    const auto pos = text.find("value v_Q_1 3967295312526");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 25, "value v_Q_1 3967295312527");
    EXPECT_FALSE(reverify(parse_certificate(text)));
}

TEST(Certificate, ParseErrors) {
    EXPECT_THROW(parse_certificate("cert 2\n"), ParseError);
    EXPECT_THROW(parse_certificate("cert 1\nvalue girth 6\n"), ParseError);
    try {
        parse_certificate("cert 1\nvalue girth 6\nbogus line\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Certificate, BudgetExceededIsResourceError) {
    EXPECT_THROW(certify(6, 5, 2, 3, 3, DigitBudget{100}), ResourceError);
}
