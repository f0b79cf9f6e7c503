#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "fracwave/dispersion.hpp"
#include "fracwave/media.hpp"
#include "fracwave/verify/oracles.hpp"

using namespace fracwave;

namespace {

std::vector<MediaEntry> parse(const std::string& text) {
    std::istringstream in(text);
    return parse_media(in);
}

std::size_t parse_error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST(BuiltinMedia, TableEntries) {
    const auto media = builtin_media();
    ASSERT_EQ(media.size(), 6u);
    const auto water = find_medium(media, "Water");
    ASSERT_TRUE(water);
    EXPECT_EQ(*water->attenuation.alpha0_db(), 0.0022);
    EXPECT_EQ(water->attenuation.y(), 2.0);
    const auto fat = find_medium(media, "Fat");
    ASSERT_TRUE(fat);
    EXPECT_EQ(*fat->attenuation.alpha0_db(), 0.158);
    EXPECT_EQ(fat->attenuation.y(), 1.7);
    EXPECT_EQ(*find_medium(media, "DuctCancer")->attenuation.alpha0_db(), 0.57);
    EXPECT_EQ(find_medium(media, "BodyTissue")->attenuation.y(), 1.5);
    const auto tube = find_medium(media, "RigidTubeBoundaryLayer");
    ASSERT_TRUE(tube);
    EXPECT_FALSE(tube->attenuation.has_prefactor());
    EXPECT_EQ(tube->attenuation.y(), 0.5);
    EXPECT_FALSE(find_medium(media, "SedimentsRock")->attenuation.has_prefactor());
    EXPECT_FALSE(find_medium(media, "water"));
}

TEST(BuiltinMedia, ConvertibleEntriesYieldValidLossyMedia) {
    for (const auto& e : builtin_media()) {
        if (!e.attenuation.has_prefactor()) {
            EXPECT_THROW(to_si(e.attenuation), IncompleteMediumError);
            continue;
        }
        const SiAttenuation si = to_si(e.attenuation);
        // eta = 1 is admissible for every y in [0, 2].
        EXPECT_NO_THROW(medium_from_power_law(si.alpha0, si.y, 1540.0, 1.0, e.name));
    }
}

TEST(ClinicalAttenuation, Validation) {
    EXPECT_THROW(ClinicalAttenuation(0.0, 1.0), DomainError);
    EXPECT_THROW(ClinicalAttenuation(-0.5, 1.0), DomainError);
    EXPECT_THROW(ClinicalAttenuation(0.5, -0.1), DomainError);
    EXPECT_THROW(ClinicalAttenuation(0.5, 2.1), DomainError);
    EXPECT_NO_THROW(ClinicalAttenuation(std::nullopt, 0.5));
}

TEST(ToSi, WaterMatchesHandComputation) {
    const SiAttenuation si = to_si(ClinicalAttenuation(0.0022, 2.0));
    const double hand = 0.0022 * 0.1151292546497023 * 100.0 / std::pow(2.0 * pi * 1e6, 2.0);
    EXPECT_NEAR(si.alpha0, hand, 1e-15 * hand);
    EXPECT_NEAR(si.alpha0, oracle::clinical_to_si_by_hand(0.0022, 2.0), 1e-15 * hand);
    EXPECT_NEAR(si.alpha0, 6.4158e-16, 1e-19);
    EXPECT_EQ(si.y, 2.0);
}

TEST(ToSi, ZeroExponentOnlyScalesUnits) {
    const SiAttenuation si = to_si(ClinicalAttenuation(1.0, 0.0));
    EXPECT_NEAR(si.alpha0, 11.51293, 1e-5);
}

TEST(ToSi, RoundTripsForTableExponents) {
    for (double y : {0.0, 0.5, 1.0, 1.3, 1.5, 1.7, 2.0}) {
        for (double a : {1e-3, 0.158, 0.87, 12.0}) {
            const SiAttenuation si = to_si(ClinicalAttenuation(a, y));
            const ClinicalAttenuation back = from_si(si.alpha0, si.y);
            EXPECT_NEAR(*back.alpha0_db(), a, 1e-12 * a);
            const SiAttenuation again = to_si(back);
            EXPECT_NEAR(again.alpha0, si.alpha0, 1e-12 * si.alpha0);
        }
    }
}

TEST(FromSi, RejectsNonPositive) {
    EXPECT_THROW(from_si(0.0, 1.0), DomainError);
    EXPECT_THROW(from_si(-1.0, 1.0), DomainError);
}

TEST(MediumFromPowerLaw, ThermoviscousCase) {
    const Medium m = medium_from_power_law(0.005, 2.0, 1.0, 1.0);
    EXPECT_NEAR(m.gamma(), 0.01, 1e-17);
    EXPECT_EQ(m.eta(), 1.0);
    EXPECT_EQ(m.s(), 2.0);
}

TEST(MediumFromPowerLaw, ExponentArithmetic) {
    EXPECT_EQ(medium_from_power_law(0.1, 0.0, 1.0, 1.0).s(), 0.0);
    EXPECT_NEAR(medium_from_power_law(0.1, 1.7, 1.0, 1.5).s(), 1.2, 1e-15);
}

TEST(MediumFromPowerLaw, RoundTripsThroughAsymptoticLaw) {
    for (double y : {0.0, 0.5, 1.0, 1.3, 1.7, 2.0}) {
        for (double eta : {0.3, 0.9, 1.0, 1.5, 1.9}) {
            const double s = y + 1.0 - eta;
            if (s < 0.0 || s > 2.0) {
                continue;
            }
            const Medium m = medium_from_power_law(3.7e-4, y, 1540.0, eta);
            const AsymptoticLaw law = asymptotic_attenuation(m);
            EXPECT_NEAR(law.alpha0, 3.7e-4, 1e-12 * 3.7e-4) << y << " " << eta;
            EXPECT_NEAR(law.y, y, 1e-12);
        }
    }
}

TEST(MediumFromPowerLaw, NoAdmissibleMediumListsEtaInterval) {
    try {
        medium_from_power_law(0.1, 2.0, 1.0, 0.5);
        FAIL() << "expected NoAdmissibleMediumError";
    } catch (const NoAdmissibleMediumError& e) {
        EXPECT_NE(std::string(e.what()).find("[1, 2]"), std::string::npos) << e.what();
    }
    EXPECT_THROW(medium_from_power_law(0.1, 1.0, 1.0, 2.0), DomainError);
    EXPECT_THROW(medium_from_power_law(0.0, 1.0, 1.0, 1.0), DomainError);
}

TEST(LoadMedia, TableFileMatchesBuiltins) {
    const auto loaded = load_media(std::string(FRACWAVE_DATA_DIR) + "/table1_media.csv");
    std::size_t matched = 0;
    for (const auto& e : builtin_media()) {
        if (!e.attenuation.has_prefactor()) {
            continue;
        }
        const auto hit = find_medium(loaded, e.name);
        ASSERT_TRUE(hit) << e.name;
        EXPECT_EQ(*hit->attenuation.alpha0_db(), *e.attenuation.alpha0_db());
        EXPECT_EQ(hit->attenuation.y(), e.attenuation.y());
        ++matched;
    }
    EXPECT_EQ(matched, loaded.size());
}

TEST(ParseMedia, EmptyInputGivesNoEntries) {
    EXPECT_TRUE(parse("").empty());
    EXPECT_TRUE(parse("# only a comment\n\n").empty());
}

TEST(ParseMedia, CommentsExponentOnlyRowsAndWhitespace) {
    const auto m = parse("# header follows\nname,alpha0_db_per_cm_per_MHz_y,y\n"
                         "Gel, 0.25 ,1.1\r\n# skipped\nTube,,0.5\n");
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m[0].name, "Gel");
    EXPECT_EQ(*m[0].attenuation.alpha0_db(), 0.25);
    EXPECT_FALSE(m[1].attenuation.has_prefactor());
}

TEST(ParseMedia, RejectionsNameTheLine) {
    const std::string h = "name,alpha0_db_per_cm_per_MHz_y,y\n";
    EXPECT_EQ(parse_error_line(h + "Good,0.1,1\nBad,-0.2,1\n"), 3u);
    EXPECT_EQ(parse_error_line("wrong,header\n"), 1u);
    EXPECT_EQ(parse_error_line(h + "A,0.1\n"), 2u);
    EXPECT_EQ(parse_error_line(h + "A,abc,1\n"), 2u);
    EXPECT_EQ(parse_error_line(h + "A,0.1,2.5\n"), 2u);
    EXPECT_EQ(parse_error_line(h + "A,0.1,1\nA,0.2,1\n"), 3u);
    EXPECT_EQ(parse_error_line(h + ",0.1,1\n"), 2u);
    try {
        parse(h + "Good,0.1,1\nBad,-0.2,1\n");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("Bad"), std::string::npos);
    }
}

TEST(LoadMedia, MissingFileIsParseError) {
    EXPECT_THROW(load_media("/nonexistent/media.csv"), ParseError);
}
