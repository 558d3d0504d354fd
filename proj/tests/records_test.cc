// Copyright 2026 The Plateflow Authors.
// SPDX-License-Identifier: Apache-2.0

#include "plateflow/records.h"

#include <gtest/gtest.h>

#include "plateflow/error.h"
#include "plateflow/metrics.h"
#include "test_support.h"

namespace plateflow {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

ImageReadings SampleReadings() {
  ImageReadings rec;
  rec.image = "lpr_0042";
  rec.width = 800;
  rec.height = 600;
  PlateReading r;
  r.plate = {{100.25, 200.5, 300.125, 260.0}, 0, 0.875};
  r.text = "AB1";
  for (const auto& [g, cls, x] : {std::tuple{"A", 10, 10.0}, {"B", 11, 30.0}, {"1", 1, 50.0}}) {
    CharacterObservation o;
    o.glyph = g;
    o.class_id = cls;
    o.box = {x - 5, 4, x + 5, 30};
    o.x_center = x;
    o.confidence = 0.5;
    r.characters.push_back(o);
  }
  rec.readings.push_back(r);
  return rec;
}

TEST(DetectionRecord, RoundTrip) {
  ImageDetections rec;
  rec.image = "img";
  rec.width = 640;
  rec.height = 480;
  rec.detections = {{{1.5, 2.25, 30, 40}, 0, 0.5}, {{50, 60, 70, 80}, 0, 0.25}};
  const std::string line = DetectionRecordJson(rec, ClassMap::Plate());
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j["schema"], kDetectionSchema);
  EXPECT_EQ(j["detections"][0]["class"], "plate");
  const ImageDetections back = ParseDetectionRecord(line);
  EXPECT_EQ(back.image, "img");
  EXPECT_EQ(back.role, "plate");
  EXPECT_EQ(back.width, 640);
  ASSERT_EQ(back.detections.size(), 2u);
  EXPECT_EQ(back.detections[0].box, rec.detections[0].box);
  EXPECT_EQ(back.detections[1].confidence, 0.25);
}

TEST(ReadingRecord, RoundTrip) {
  const ImageReadings rec = SampleReadings();
  const std::string line = ReadingRecordJson(rec);
  const ImageReadings back = ParseReadingRecord(line);
  EXPECT_EQ(back.image, rec.image);
  ASSERT_EQ(back.readings.size(), 1u);
  EXPECT_EQ(back.readings[0].text, "AB1");
  EXPECT_EQ(back.readings[0].plate.box, rec.readings[0].plate.box);
  ASSERT_EQ(back.readings[0].characters.size(), 3u);
  EXPECT_EQ(back.readings[0].characters[2].glyph, "1");
  EXPECT_EQ(back.readings[0].characters[2].x_center, 50.0);
  // Re-serialising is stable.
  EXPECT_EQ(ReadingRecordJson(back), line);
}

TEST(Records, SchemaIsChecked) {
  const std::string reading = ReadingRecordJson(SampleReadings());
  EXPECT_EQ(CodeOf([&] { ParseDetectionRecord(reading); }), ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { ParseReadingRecord(R"({"image": "x", "plates": []})"); }),
            ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { ParseReadingRecord(R"({"schema": "plateflow/reading/9"})"); }),
            ErrorCode::kSchema);
  EXPECT_EQ(CodeOf([] { ParseReadingRecord("{not json"); }), ErrorCode::kFormat);
  EXPECT_EQ(CodeOf([] {
              ParseDetectionRecord(
                  R"({"schema": "plateflow/detections/1", "image": "x", "detections": )"
                  R"([{"box": [3, 0, 1, 1], "class_id": 0, "confidence": 0.5}]})");
            }),
            ErrorCode::kFormat);
}

TEST(LoadPredictions, AcceptsBothRecordKindsAndReportsLines) {
  testing::TempDir dir;
  ImageDetections d;
  d.image = "a";
  d.detections = {{{0, 0, 10, 10}, 0, 0.9}};
  testing::WriteFile(dir / "p.jsonl", DetectionRecordJson(d, ClassMap::Plate()) + "\n\n" +
                                          ReadingRecordJson(SampleReadings()) + "\n");
  const auto preds = LoadPredictions(dir / "p.jsonl");
  ASSERT_EQ(preds.size(), 2u);
  EXPECT_EQ(preds.at("lpr_0042").size(), 1u);
  EXPECT_EQ(preds.at("lpr_0042")[0].confidence, 0.875);

  testing::WriteFile(dir / "bad.jsonl", DetectionRecordJson(d, ClassMap::Plate()) +
                                            "\n{\"schema\": \"other/1\"}\n");
  try {
    LoadPredictions(dir / "bad.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchema);
    EXPECT_NE(std::string(e.what()).find("bad.jsonl:2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(CodeOf([&] { LoadPredictions(dir / "absent.jsonl"); }), ErrorCode::kIo);
}

TEST(PlateTruth, ParsesLinesWithAndWithoutBoxes) {
  const auto t = ParsePlateTruth("# header\nimg1 ABC123\n\nimg2 XY9 1 2 30 40  # box\n");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].image, "img1");
  EXPECT_EQ(t[0].text, "ABC123");
  EXPECT_FALSE(t[0].box.has_value());
  ASSERT_TRUE(t[1].box.has_value());
  EXPECT_EQ(*t[1].box, (BBox{1, 2, 30, 40}));
}

TEST(PlateTruth, MalformedLinesNameTheLine) {
  for (const char* text : {"a\n", "a B 1 2 3\n", "ok X\na B 1 2 x 4\n", "a B 5 5 1 1\n"}) {
    try {
      ParsePlateTruth(text);
      FAIL() << text;
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1u);
    }
  }
  try {
    ParsePlateTruth("ok X\nbad\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.kind(), ParseError::Kind::kTokenCount);
  }
}

TEST(PairReadings, PositionalAndBoxPairing) {
  ImageReadings one;
  one.image = "a";
  PlateReading r;
  r.text = "AAA";
  r.plate.box = {0, 0, 10, 10};
  one.readings.push_back(r);

  ImageReadings two;
  two.image = "b";
  r.text = "LEFT";
  r.plate.box = {0, 0, 10, 10};
  two.readings.push_back(r);
  r.text = "RIGHT";
  r.plate.box = {100, 0, 110, 10};
  two.readings.push_back(r);
  r.text = "NOISE";
  r.plate.box = {300, 300, 310, 310};
  two.readings.push_back(r);

  // Truth lists the right plate first; boxes decide the pairing.
  const auto truth = ParsePlateTruth("a AAA\nb RIGHT 100 0 110 10\nb LEFT 0 0 10 10\nc ZZZ\n");
  const SequencePairs p = PairReadings({one, two}, truth);
  EXPECT_EQ(p.truth.at("a"), "AAA");
  EXPECT_EQ(p.truth.at("b#0"), "RIGHT");
  EXPECT_EQ(p.predicted.at("a"), "AAA");
  EXPECT_EQ(p.predicted.at("b#0"), "RIGHT");
  EXPECT_EQ(p.predicted.at("b#1"), "LEFT");
  EXPECT_EQ(p.predicted.at("b#extra0"), "NOISE");
  EXPECT_EQ(p.predicted.count("c"), 0u);
  const SequenceScore s = SequenceAccuracy(p.predicted, p.truth);
  EXPECT_EQ(s.total, 4u);
  EXPECT_EQ(s.correct, 3u);
  EXPECT_EQ(s.missing, std::vector<std::string>{"c"});
}

TEST(PairReadings, DuplicateImageIsRejected) {
  ImageReadings a;
  a.image = "x";
  EXPECT_EQ(CodeOf([&] { PairReadings({a, a}, {}); }), ErrorCode::kFormat);
}

TEST(PairReadings, FixtureTruthScoresSevenOfEight) {
  const auto truth = LoadPlateTruth(testing::FixtureDir() / "lpr" / "truth.txt");
  std::vector<ImageReadings> readings;
  const auto ref = testing::PlateReference();
  for (const auto& img : ref["images"]) {
    ImageReadings rec;
    rec.image = img["image"].get<std::string>();
    for (const auto& p : img["plates"]) {
      PlateReading r;
      r.plate.box = testing::BoxOf(p["box"]);
      r.text = p["text"].get<std::string>();
      rec.readings.push_back(r);
    }
    readings.push_back(rec);
  }
  const SequenceScore s = SequenceAccuracy(PairReadings(readings, truth).predicted,
                                           PairReadings(readings, truth).truth);
  ASSERT_TRUE(s.accuracy.has_value());
  EXPECT_DOUBLE_EQ(*s.accuracy, 7.0 / 8.0);
}

}  // namespace
}  // namespace plateflow
