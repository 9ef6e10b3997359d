// Copyright 2026 The uxrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <fstream>

#include "support/fixtures.hpp"
#include "uxrank/io/json_reader.hpp"
#include "uxrank/io/triage.hpp"
#include "uxrank/util/strings.hpp"

using namespace uxrank;
using namespace uxrank::io;

namespace {

TriageDecision decision(std::string task, std::optional<std::string> crit, TriageVerdict v,
                        std::string at) {
  return {std::move(task), std::move(crit), v, "note", std::move(at)};
}

}  // namespace

TEST_CASE("latest decision per key wins") {
  const std::vector<TriageDecision> all{
      decision("b", std::nullopt, TriageVerdict::Deferred, "1"),
      decision("a", "nielsen-01", TriageVerdict::Accepted, "2"),
      decision("b", std::nullopt, TriageVerdict::Rejected, "3"),
      decision("a", std::nullopt, TriageVerdict::Accepted, "4"),
  };
  const auto latest = latest_decisions(all);
  REQUIRE(latest.size() == 3);
  CHECK(latest[0] == all[3]);
  CHECK(latest[1] == all[1]);
  CHECK(latest[2] == all[2]);
}

TEST_CASE("journal round trip") {
  testing::TempDir dir;
  const auto path = journal_path_for(dir / "report.json");
  CHECK(path.filename() == "report.json.triage.jsonl");
  CHECK(read_journal(path).empty());
  {
    TriageJournal journal(path);
    journal.append(decision("a", std::nullopt, TriageVerdict::Deferred, "t1"));
    journal.append(decision("a", std::nullopt, TriageVerdict::Accepted, "t2"));
    CHECK(journal.entries().size() == 2);
    REQUIRE(journal.latest().size() == 1);
    CHECK(journal.latest()[0].decision == TriageVerdict::Accepted);
  }
  const auto entries = read_journal(path);
  REQUIRE(entries.size() == 2);
  CHECK(serialize_journal(entries) == uxrank::util::read_file(path.string()));
  TriageJournal reopened(path);
  reopened.append(decision("b", "cw-01", TriageVerdict::Rejected, "t3"));
  CHECK(read_journal(path).size() == 3);
}

TEST_CASE("malformed journal lines name their line") {
  testing::TempDir dir;
  const auto path = dir / "j.jsonl";
  std::ofstream(path) << R"({"task_id":"a","decision":"accepted","note":"","decided_at":"x"})" << "\n"
                      << R"({"task_id":"a","decision":"maybe","note":"","decided_at":"x"})" << "\n";
  try {
    read_journal(path);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}
